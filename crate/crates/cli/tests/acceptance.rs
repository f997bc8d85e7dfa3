//! Acceptance suite: one check per criterion, each reported as PASS or FAIL.
//! Expected values are frozen literals.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};

use plimpton_core::procedure::{
    admissible_ratios_above, build_table, derive_bounds, enumerate_ratios, gap_analysis,
    pool_statistics, shape_filter, Line4Policy, ShapeCriterion,
};
use plimpton_core::sexagesimal::{
    approximate_reciprocal, diagonal_of_square, expand, is_regular, standard_reciprocal_table,
};
use plimpton_core::tablet::{
    attested_tablet, corrected_tablet, diff_tablets, simulate_error, Category, Column, DiffMode,
    Reading,
};
use plimpton_core::triple::{pq_triple, r_method, reciprocal_triple};
use plimpton_core::{
    solve_cane, CaneProblem, ErrorModel, ExactRatio, GeneratingPair, MultiplierStrategy,
    ProcedureSpec, Sexagesimal, Sqrt2Variant, Style, TableRow, Triple, TripleMethod,
};

fn sx(s: &str) -> Sexagesimal {
    s.parse().unwrap_or_else(|e| panic!("bad literal {s}: {e}"))
}

fn val(s: &str) -> ExactRatio {
    sx(s).to_ratio().unwrap()
}

fn int(s: &str) -> u64 {
    val(s).to_integer().unwrap() as u64
}

fn ratio(n: i128, d: i128) -> ExactRatio {
    ExactRatio::new(n, d).unwrap()
}

fn table(spec: &ProcedureSpec, method: TripleMethod, line4: Line4Policy) -> Vec<TableRow> {
    build_table(&enumerate_ratios(spec).unwrap(), method, line4).unwrap()
}

// Reciprocal table: (n, 1/n), floating.
#[rustfmt::skip]
const RECIPROCALS: [(&str, &str); 30] = [
    ("2", "30"), ("3", "20"), ("4", "15"), ("5", "12"), ("6", "10"),
    ("8", "7 30"), ("9", "6 40"), ("10", "6"), ("12", "5"), ("15", "4"),
    ("16", "3 45"), ("18", "3 20"), ("20", "3"), ("24", "2 30"), ("25", "2 24"),
    ("27", "2 13 20"), ("30", "2"), ("32", "1 52 30"), ("36", "1 40"), ("40", "1 30"),
    ("45", "1 20"), ("48", "1 15"), ("50", "1 12"), ("54", "1 06 40"), ("1 00", "1"),
    ("1 04", "56 15"), ("1 12", "50"), ("1 15", "48"), ("1 20", "45"), ("1 21", "44 26 40"),
];

// Tablet lines by the generating pair: p, q, l, d²/l² (floating), w, d.
#[rustfmt::skip]
const TABLET_LINES: [[&str; 6]; 15] = [
    ["12", "5", "2 00", "1 59 00 15", "1 59", "2 49"],
    ["1 04", "27", "57 36", "1 56 56 58 14 50 06 15", "56 07", "1 20 25"],
    ["1 15", "32", "1 20 00", "1 55 07 41 15 33 45", "1 16 41", "1 50 49"],
    ["2 05", "54", "3 45 00", "1 53 10 29 32 52 16", "3 31 49", "5 09 01"],
    ["9", "4", "1 12", "1 48 54 01 40", "1 05", "1 37"],
    ["20", "9", "6 00", "1 47 06 41 40", "5 19", "8 01"],
    ["54", "25", "45 00", "1 43 11 56 28 26 40", "38 11", "59 01"],
    ["32", "15", "16 00", "1 41 33 45 14 03 45", "13 19", "20 49"],
    ["25", "12", "10 00", "1 38 33 36 36", "8 01", "12 49"],
    ["1 21", "40", "1 48 00", "1 35 10 02 28 27 24 26 40", "1 22 41", "2 16 01"],
    ["2", "1", "4", "1 33 45", "3", "5"],
    ["48", "25", "40 00", "1 29 21 54 02 15", "27 59", "48 49"],
    ["15", "8", "4 00", "1 27 00 03 45", "2 41", "4 49"],
    ["50", "27", "45 00", "1 25 48 51 35 06 40", "29 31", "53 49"],
    ["9", "5", "1 30", "1 23 13 46 40", "56", "1 46"],
];

// The line for 125/64 from the p125 procedure: p, q, l, d²/l², w, d.
#[rustfmt::skip]
const LINE_125_64: [&str; 6] = ["2 05", "1 04", "4 26 40", "1 31 09 09 25 42 02 15", "3 12 09", "5 28 41"];

// Continuation, lines 16 to 38: r, l, d²/l², w, d.
#[rustfmt::skip]
const CONTINUATION: [[&str; 5]; 23] = [
    ["1;46 40", "4 48", "1;22 09 12 36 15", "2 55", "5 37"],
    ["1;41 15", "14 24", "1;17 58 56 24 01 40", "7 53", "16 25"],
    ["1;40", "15", "1;17 04", "8", "17"],
    ["1;37 12", "2 15 00", "1;15 04 53 43 54 04 26 40", "1 07 41", "2 31 01"],
    ["1;36", "1 20", "1;14 15 33 45", "39", "1 29"],
    ["1;33 45", "13 20", "1;12 45 54 20 15", "6 09", "14 41"],
    ["1;30", "12", "1;10 25", "5", "13"],
    ["1;28 53 20", "36 00", "1;09 45 22 16 06 40", "14 31", "38 49"],
    ["1;26 24", "30 00", "1;08 20 16 04", "11 11", "32 01"],
    ["1;25 20", "1 36 00", "1;07 45 23 26 38 26 15", "34 31", "1 42 01"],
    ["1;24 22 30", "48 00", "1;07 14 53 46 33 45", "16 41", "50 49"],
    ["1;23 20", "15 00", "1;06 42 40 16", "5 01", "15 49"],
    ["1;21", "18 00", "1;05 34 04 37 46 40", "5 29", "18 49"],
    ["1;20", "24", "1;05 06 15", "7", "25"],
    ["1;16 48", "26 40", "1;03 43 52 35 03 45", "6 39", "27 29"],
    ["1;15", "40", "1;03 02 15", "9", "41"],
    ["1;12", "1 00", "1;02 01", "11", "1 01"],
    ["1;11 06 40", "28 48", "1;01 44 55 12 40 25", "4 55", "29 13"],
    ["1;07 30", "2 24", "1;00 50 10 25", "17", "2 25"],
    ["1;06 40", "3 00", "1;00 40 06 40", "19", "3 01"],
    ["1;04 48", "11 15", "1;00 21 21 53 46 40", "52", "11 17"],
    ["1;04", "8 00", "1;00 15 00 56 15", "31", "8 01"],
    ["1;02 30", "20 00", "1;00 06 00 09", "49", "20 01"],
];

// Lines with an asterisk in the continuation where pq doubles r.
const STARRED: [usize; 2] = [18, 36];

// The digit procedure's three extra lines: position in its list, r, l, d²/l², w, d.
#[rustfmt::skip]
const DIGIT_EXTRAS: [(usize, [&str; 5]); 3] = [
    (5, ["2;18 14 24", "20 00 00", "1;52 27 06 59 24 09", "18 41 59", "27 22 49"]),
    (10, ["2;06 33 45", "4 48 00", "1;40 06 47 17 32 36 15", "3 55 29", "6 12 01"]),
    (14, ["1;57 11 15", "4 26 40", "1;31 09 09 25 42 02 15", "3 12 09", "5 28 41"]),
];

// The line for 3125/1296: p, q, l, d²/l², w, d.
#[rustfmt::skip]
const BIG_RATIO_LINE: [&str; 6] = [
    "52 05", "21 36", "37 30 00 00", "1;59 47 34 27 27 58 38 07 21 36", "37 26 06 49", "52 59 14 01",
];

// The standard-table procedure's three extra lines: position, r, l, d²/l², w, d.
#[rustfmt::skip]
const STANDARD_EXTRAS: [(usize, [&str; 5]); 3] = [
    (30, ["1;15 56 15", "2 52 48", "1;03 23 29 29 33 54 01 40", "41 05", "2 57 37"]),
    (34, ["1;10 18 45", "2 40 00", "1;01 31 19 18 53 26 15", "25 29", "2 42 01"]),
    (40, ["1;00 45", "3 36 00", "1;00 00 33 20 04 37 46 40", "2 41", "3 36 01"]),
];

// Slips on the tablet: line, column, inscribed, correct.
#[rustfmt::skip]
const TYPOGRAPHICAL: [(usize, Column, &str, &str); 4] = [
    (2, Column::I, "58 14 56 15", "58 14 50 06 15"),
    (8, Column::I, "41 33 59 03 45", "41 33 45 14 03 45"),
    (9, Column::II, "9 01", "8 01"),
    (13, Column::I, "27 03 45", "27 00 03 45"),
];

#[rustfmt::skip]
const COMPUTATIONAL: [(usize, Column, &str, &str); 3] = [
    (2, Column::III, "3 12 01", "1 20 25"),
    (13, Column::II, "7 12 01", "2 41"),
    (15, Column::II, "56", "28"),
];

/// Checks r, l, Column I, w and d of a row against exact table literals.
fn assert_r_row(row: &TableRow, cells: &[&str; 5], label: &str) {
    assert_eq!(row.r, val(cells[0]), "{label}: r");
    assert_eq!(row.l, int(cells[1]), "{label}: l");
    assert_eq!(
        row.column_one.to_ratio().unwrap(),
        val(cells[2]),
        "{label}: column I"
    );
    assert_eq!(
        row.column_one.to_string(),
        cells[2],
        "{label}: column I digits"
    );
    assert_eq!(
        (row.w, row.d),
        (int(cells[3]), int(cells[4])),
        "{label}: w, d"
    );
}

/// Checks p, q, l, floating Column I, w and d.
fn assert_pq_row(row: &TableRow, cells: &[&str; 6], label: &str) {
    assert_eq!(
        (row.p, row.q),
        (int(cells[0]), int(cells[1])),
        "{label}: p, q"
    );
    assert_eq!(row.l, int(cells[2]), "{label}: l");
    let expected = sx(cells[3]);
    assert_eq!(
        row.column_one.digits(),
        expected.digits(),
        "{label}: column I"
    );
    assert_eq!(
        (row.w, row.d),
        (int(cells[4]), int(cells[5])),
        "{label}: w, d"
    );
}

fn criterion_1() {
    let out = Command::new(env!("CARGO_BIN_EXE_plimpton"))
        .args([
            "--format",
            "tsv",
            "--style",
            "tablet",
            "table",
            "reciprocals",
        ])
        .env_remove("PLIMPTON_CONFIG")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(lines.len(), RECIPROCALS.len());
    let mut expected: Vec<(u64, &str)> = RECIPROCALS.iter().map(|(n, r)| (int(n), *r)).collect();
    expected.sort();
    for (line, (n, nbar)) in lines.iter().zip(&expected) {
        let (got_n, got_r) = line.split_once('\t').unwrap();
        let floating_n = Sexagesimal::from_integer(*n as u128).format(Style::Tablet);
        assert_eq!((got_n, got_r), (floating_n.as_str(), *nbar));
    }
    let lib = standard_reciprocal_table();
    assert_eq!(lib.len(), 30);
    for (e, (n, nbar)) in lib.iter().zip(&expected) {
        assert_eq!(e.n, *n);
        assert_eq!(e.nbar.format(Style::Tablet), *nbar);
        assert_eq!(
            e.nbar.to_ratio().unwrap() * ExactRatio::from_integer(*n as i128),
            ExactRatio::one()
        );
    }
}

fn criterion_2() {
    let seventh = ratio(1, 7);
    assert!(val("0;08 34 16 59") < seventh);
    assert!(seventh < val("0;08 34 18"));
    let (lo, hi) = approximate_reciprocal(7, 3).unwrap();
    assert_eq!(hi, sx("0;08 34 18"));
    assert!(val("0;08 34 16 59") < lo.to_ratio().unwrap());
    assert!(lo.to_ratio().unwrap() < seventh && seventh < hi.to_ratio().unwrap());
    let e = expand(&seventh).unwrap();
    assert!(e.preperiod.is_empty());
    assert_eq!(e.period, [8, 34, 17]);
}

fn criterion_3() {
    let price = enumerate_ratios(&ProcedureSpec::price()).unwrap();
    assert_eq!(price.len(), 38);
    for v in Sqrt2Variant::ALL {
        let b = derive_bounds(v).unwrap();
        assert_eq!(enumerate_ratios(&b.spec()).unwrap(), price, "{}", v.name());
    }
    let rows = table(
        &ProcedureSpec::price(),
        TripleMethod::Pq,
        Line4Policy::Insert,
    );
    for (i, cells) in TABLET_LINES.iter().enumerate() {
        assert_pq_row(&rows[i], cells, &format!("line {}", i + 1));
    }
    assert_eq!(rows[9].column_one.to_string(), "1;35 10 02 28 27 24 26 40");
    let r_rows = table(
        &ProcedureSpec::price(),
        TripleMethod::R,
        Line4Policy::Insert,
    );
    for (a, b) in rows.iter().zip(&r_rows).take(15) {
        assert_eq!(a.column_one, b.column_one);
    }
}

fn criterion_4() {
    let p125 = enumerate_ratios(&ProcedureSpec::p125()).unwrap();
    assert_eq!(p125.len(), 47);
    assert_eq!(p125[11], ratio(125, 64));
    let rows = table(
        &ProcedureSpec::p125(),
        TripleMethod::Pq,
        Line4Policy::Insert,
    );
    assert_pq_row(&rows[11], &LINE_125_64, "125/64");

    let tablet: BTreeSet<_> = enumerate_ratios(&ProcedureSpec::price()).unwrap()[..15]
        .iter()
        .copied()
        .collect();
    let robson = enumerate_ratios(&ProcedureSpec::robson_digits()).unwrap();
    assert_eq!(robson.len(), 18);
    let rows = table(
        &ProcedureSpec::robson_digits(),
        TripleMethod::R,
        Line4Policy::Insert,
    );
    let extras: Vec<&TableRow> = rows.iter().filter(|r| !tablet.contains(&r.r)).collect();
    assert_eq!(extras.len(), 3);
    for (row, (pos, cells)) in extras.iter().zip(&DIGIT_EXTRAS) {
        assert_eq!(row.n, *pos);
        assert_r_row(row, cells, &format!("digit procedure line {pos}"));
    }

    let standard = enumerate_ratios(&ProcedureSpec::standard_table()).unwrap();
    assert_eq!(standard.len(), 40);
    let rows = table(
        &ProcedureSpec::standard_table(),
        TripleMethod::R,
        Line4Policy::Omit,
    );
    let wide: Vec<&TableRow> = rows.iter().filter(|r| r.q > 60).collect();
    assert_eq!(wide.len(), 3);
    for (row, (pos, cells)) in wide.iter().zip(&STANDARD_EXTRAS) {
        assert_eq!(row.n, *pos);
        assert_r_row(row, cells, &format!("standard line {pos}"));
    }

    let s = pool_statistics(&ProcedureSpec::price()).unwrap();
    assert_eq!(s.distinct, 234);
    let s = pool_statistics(&ProcedureSpec::p125()).unwrap();
    assert_eq!(s.distinct, 303);
    let s = pool_statistics(&ProcedureSpec::standard_table()).unwrap();
    assert_eq!(
        (s.total_pairs, s.distinct, s.distinct_below_three),
        (900, 237, 49)
    );
    let s = pool_statistics(&ProcedureSpec::StandardTable { include_one: true }).unwrap();
    assert_eq!((s.total_pairs, s.distinct), (961, 257));
}

fn criterion_5() {
    let rows = table(
        &ProcedureSpec::price(),
        TripleMethod::R,
        Line4Policy::Insert,
    );
    let pq = table(
        &ProcedureSpec::price(),
        TripleMethod::Pq,
        Line4Policy::Insert,
    );
    assert_eq!(rows.len(), 38);
    for (i, cells) in CONTINUATION.iter().enumerate() {
        let n = i + 16;
        let row = &rows[n - 1];
        assert_eq!(row.n, n);
        assert_r_row(row, cells, &format!("line {n}"));
        let doubled = pq[n - 1].triple() == row.triple().scaled(2);
        assert_eq!(doubled, STARRED.contains(&n), "line {n}: pq against r");
    }
    assert_eq!(
        rows[15].triple(),
        Triple {
            w: 175,
            l: 288,
            d: 337
        }
    );
}

fn criterion_6() {
    let r = ratio(3125, 1296);
    assert_eq!(admissible_ratios_above(&ratio(12, 5), 3600), [r]);
    for method in [TripleMethod::Pq, TripleMethod::R] {
        let rows = build_table(&[r], method, Line4Policy::Omit).unwrap();
        assert_pq_row(&rows[0], &BIG_RATIO_LINE, "3125/1296");
        assert_eq!(rows[0].column_one.to_string(), BIG_RATIO_LINE[3]);
    }
    assert_eq!(
        Sexagesimal::from_ratio(&r).unwrap().to_string(),
        "2;24 40 33 20"
    );
}

fn criterion_7() {
    let rows = table(
        &ProcedureSpec::standard_table(),
        TripleMethod::R,
        Line4Policy::Omit,
    );
    assert_eq!(rows.len(), 40);
    let gaps = gap_analysis(&rows).unwrap();
    let big_r = gaps.largest_r_step();
    assert_eq!(big_r.delta_r, val("0;05 37 30"));
    assert_eq!((big_r.upper, big_r.lower), (3, 4));
    let big_c = gaps.largest_column_one_step();
    assert_eq!(big_c.delta_column_one, val("0;06 13 39 35 33 45"));
    assert_eq!((big_c.upper, big_c.lower), (3, 4));
    let over: Vec<_> = gaps
        .r_steps_exceeding(&val("0;05"))
        .iter()
        .map(|s| (s.upper, s.lower, s.delta_r))
        .collect();
    assert_eq!(over, [(3, 4, val("0;05 37 30")), (15, 16, val("0;05 25"))]);
}

fn criterion_8() {
    let rows = table(
        &ProcedureSpec::price(),
        TripleMethod::R,
        Line4Policy::Insert,
    );
    let numbers = |lo: &str, hi: &str| -> Vec<usize> {
        shape_filter(
            &rows,
            &ShapeCriterion::WOverD {
                lo: val(lo),
                hi: val(hi),
            },
        )
        .unwrap()
        .iter()
        .map(|r| r.n)
        .collect()
    };
    assert_eq!(rows[30].l_over_w(), ratio(40, 9), "l/w at row 31");
    let steep = numbers("0;30", "1");
    assert_eq!(steep, (1..=15).collect::<Vec<_>>(), "w/d in (0;30, 1)");
    let shallow = numbers("0;12", "0;30");
    assert_eq!(
        shallow,
        (16..=31).collect::<Vec<_>>(),
        "w/d in (0;12, 0;30)"
    );
}

fn criterion_9() {
    let recs = diff_tablets(
        &corrected_tablet(Reading::Reciprocal),
        &attested_tablet(),
        DiffMode::Strict,
    );
    assert_eq!(recs.len(), 7);
    let expected: Vec<_> = TYPOGRAPHICAL
        .iter()
        .map(|e| (e, Category::Typographical))
        .chain(COMPUTATIONAL.iter().map(|e| (e, Category::Computational)))
        .collect();
    for ((line, column, inscribed, correct), category) in expected {
        let r = recs
            .iter()
            .find(|r| r.line == *line && r.column == *column)
            .unwrap_or_else(|| panic!("no record for line {line} column {column}"));
        assert_eq!(r.inscribed.format(Style::Tablet), *inscribed, "line {line}");
        assert_eq!(r.correct.format(Style::Tablet), *correct, "line {line}");
        assert_eq!(r.category, category, "line {line}");
    }

    let run = |m: ErrorModel| simulate_error(&m).unwrap();
    let pair = |o: &plimpton_core::tablet::SimulationOutcome| {
        let (l, r) = o.pair.as_ref().expect("elimination pair");
        (l.to_string(), r.to_string())
    };
    let cell = |o: &plimpton_core::tablet::SimulationOutcome, c: Column| {
        o.cells
            .iter()
            .find(|x| x.column == c)
            .expect("cell")
            .value
            .format(Style::Tablet)
    };

    let g = run(ErrorModel::GillingsLine2 { assumed_p: 60 });
    assert_eq!(cell(&g, Column::III), "3 12 01");
    assert!(g.matches_attested());

    let o = run(ErrorModel::RobsonOvershoot { extra_steps: 2 });
    assert_eq!(pair(&o), ("2 14 40 48".into(), "3 13 00 00".into()));
    assert_eq!(cell(&o, Column::II), "56 07");

    let m = run(ErrorModel::ModifiedMultiplier { faulty_step: 3 });
    assert_eq!(pair(&m), ("56 07".into(), "3 13".into()));

    let y1 = run(ErrorModel::WrongY {
        y: sx("3;21 02 30"),
    });
    assert_eq!(pair(&y1), ("56 07".into(), "3 13 00".into()));
    let y2 = run(ErrorModel::WrongY {
        y: sx("3;20 01 02 30"),
    });
    assert_eq!(pair(&y2), ("56 07".into(), "3 12 01".into()));
    assert!(y2.matches_attested());

    let s = run(ErrorModel::SquareCopy { line: 13 });
    assert_eq!(cell(&s, Column::II), "7 12 01");
    assert!(s.matches_attested());

    let h = run(ErrorModel::HalvingSkip { line: 15 });
    assert_eq!(cell(&h, Column::II), "56");
    assert!(h.matches_attested());
}

fn isqrt(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&s| s * s == n)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn criterion_10() {
    const LIMIT: u64 = 2000;
    let mut brute = BTreeSet::new();
    for w in 1..LIMIT {
        for l in w + 1..LIMIT {
            if let Some(d) = isqrt(w * w + l * l) {
                if d < LIMIT && gcd(gcd(w, l), d) == 1 && is_regular(l as u128) {
                    brute.insert((w, l, d));
                }
            }
        }
    }
    // r = (d + w)/l, and d ± w divide l², so p and q stay below 2·LIMIT.
    let regs: Vec<u64> = (1..2 * LIMIT).filter(|&n| is_regular(n as u128)).collect();
    let mut via_r = BTreeSet::new();
    for &p in &regs {
        for &q in regs.iter().take_while(|&&q| q < p) {
            if gcd(p, q) != 1 {
                continue;
            }
            let Ok(trace) = r_method(
                &ratio(p as i128, q as i128),
                MultiplierStrategy::MaximalFactor,
            ) else {
                continue;
            };
            let t = trace.result;
            if t.d < LIMIT {
                via_r.insert((t.w, t.l, t.d));
            }
        }
    }
    assert_eq!(brute.len(), 27);
    assert_eq!(brute, via_r);

    let regs: Vec<u64> = (1..=200).filter(|&n| is_regular(n as u128)).collect();
    for &p in &regs {
        for &q in regs.iter().take_while(|&&q| q < p) {
            let pq = pq_triple(&GeneratingPair::new(p, q).unwrap()).unwrap();
            let r = reciprocal_triple(
                &ratio(p as i128, q as i128),
                MultiplierStrategy::MaximalFactor,
            )
            .unwrap()
            .result;
            let g = gcd(p, q);
            let both_odd = (p / g) % 2 == 1 && (q / g) % 2 == 1;
            let factor = g * g * if both_odd { 2 } else { 1 };
            assert_eq!(pq, r.scaled(factor), "p={p} q={q}");
        }
    }
}

fn criterion_11() {
    let diag = diagonal_of_square(&sx("0;30")).unwrap();
    assert_eq!(diag, sx("0;42 25 35"));
    assert_eq!(val("0;30") * val("1;24 51 10"), val("0;42 25 35"));
    let s = solve_cane(&CaneProblem {
        d: ExactRatio::from_integer(3),
        b: ExactRatio::from_integer(9),
    })
    .unwrap();
    assert_eq!(
        (s.l, s.h),
        (ExactRatio::from_integer(15), ExactRatio::from_integer(12))
    );
    assert_eq!(s.h_squared, ExactRatio::from_integer(144));
    assert_eq!(s.h * s.h, s.h_squared);
}

const CRITERIA: [(&str, fn()); 11] = [
    ("standard reciprocal table", criterion_1),
    ("1/7 bracket and period", criterion_2),
    ("tablet reconstruction", criterion_3),
    ("procedure counts", criterion_4),
    ("continuation lines 16 to 38", criterion_5),
    ("big-ratio row", criterion_6),
    ("gap analysis", criterion_7),
    ("shape filters", criterion_8),
    ("error suite", criterion_9),
    ("oracle equivalence", criterion_10),
    ("square diagonal and cane", criterion_11),
];

fn main() -> ExitCode {
    panic::set_hook(Box::new(|info| {
        let msg = info
            .payload()
            .downcast_ref::<String>()
            .map(String::as_str)
            .or_else(|| info.payload().downcast_ref::<&str>().copied())
            .unwrap_or("panic");
        let at = info
            .location()
            .map(|l| format!(" ({}:{})", l.file(), l.line()))
            .unwrap_or_default();
        eprintln!("    {}{at}", msg.replace('\n', "\n    "));
    }));
    let mut failed = 0;
    for (i, (name, check)) in CRITERIA.iter().enumerate() {
        let ok = panic::catch_unwind(AssertUnwindSafe(check)).is_ok();
        println!(
            "criterion {:>2} {}: {name}",
            i + 1,
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok {
            failed += 1;
        }
    }
    println!("{} passed, {failed} failed", CRITERIA.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
