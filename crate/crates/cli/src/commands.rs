use std::path::Path;

use anyhow::{bail, Context, Result};
use plimpton_core::procedure::{
    build_table, derive_bounds, enumerate_ratios, gap_analysis, pool_statistics, Line4Policy,
};
use plimpton_core::sexagesimal::{
    approximate_reciprocal, parse_sexagesimal, reciprocal, regular_factorization, sqrt2_constant,
    standard_reciprocal_table,
};
use plimpton_core::tablet::{
    attested_tablet, corrected_tablet, diff_tablets, simulate_error, DiffMode, Reading,
    SimulationOutcome, ATTESTED_FILE, LINES,
};
use plimpton_core::{
    solve_cane, CaneProblem, ErrorModel, ExactRatio, ProcedureSpec, Sexagesimal, Sqrt2Variant,
    Style, TableRow, Tablet, TripleMethod,
};

use crate::args::{
    Line4Arg, MethodArg, ModeArg, ModelArg, ProcedureArg, ReadingArg, Sqrt2Arg, StyleKind,
    TabletArg,
};
use crate::config::Settings;
use crate::output::{Record, RecordBuilder};

pub struct Ctx<'a> {
    pub settings: &'a Settings,
}

impl Ctx<'_> {
    fn style(&self) -> Style {
        match self.settings.style {
            StyleKind::Canonical => Style::Canonical,
            StyleKind::Tablet => Style::Tablet,
        }
    }

    fn sx(&self, s: &Sexagesimal) -> String {
        s.format(self.style())
    }

    fn sx_ratio(&self, r: &ExactRatio) -> String {
        match Sexagesimal::from_ratio(r) {
            Ok(s) => self.sx(&s),
            Err(_) => r.to_string(),
        }
    }

    fn sx_int(&self, n: u64) -> String {
        self.sx(&Sexagesimal::from_integer(n as u128))
    }

    fn load(&self, file: &str, builtin: impl FnOnce() -> Tablet) -> Result<Tablet> {
        match &self.settings.data {
            Some(dir) => {
                let path = Path::new(dir).join(file);
                Tablet::load(&path).with_context(|| format!("loading {}", path.display()))
            }
            None => Ok(builtin()),
        }
    }

    fn tablet(&self, which: TabletArg, reading: Reading) -> Result<Tablet> {
        match which {
            TabletArg::Attested => self.load(ATTESTED_FILE, attested_tablet),
            TabletArg::Corrected => self.load(reading.file_name(), || corrected_tablet(reading)),
            TabletArg::Generated => {
                let ratios = enumerate_ratios(&ProcedureSpec::price())?;
                let rows = build_table(&ratios, TripleMethod::R, Line4Policy::Insert)?;
                Ok(Tablet::from_table(&rows[..LINES])?)
            }
        }
    }
}

fn spec(p: ProcedureArg) -> ProcedureSpec {
    match p {
        ProcedureArg::Price => ProcedureSpec::price(),
        ProcedureArg::P125 => ProcedureSpec::p125(),
        ProcedureArg::RobsonDigits => ProcedureSpec::robson_digits(),
        ProcedureArg::StandardTable => ProcedureSpec::standard_table(),
    }
}

fn line4(l: Line4Arg) -> Line4Policy {
    match l {
        Line4Arg::Insert => Line4Policy::Insert,
        Line4Arg::Omit => Line4Policy::Omit,
    }
}

/// `n`, `n/d`, or a sexagesimal numeral.
pub fn parse_value(text: &str) -> Result<ExactRatio> {
    if let Ok(r) = text.parse::<ExactRatio>() {
        return Ok(r);
    }
    let s = parse_sexagesimal(text)
        .with_context(|| format!("`{text}` is neither n/d nor sexagesimal"))?;
    Ok(s.to_ratio()?)
}

pub fn gen(
    ctx: &Ctx,
    procedure: ProcedureArg,
    method: MethodArg,
    rows: Option<usize>,
    l4: Line4Arg,
    ratios: &[String],
) -> Result<Vec<Record>> {
    let list = if ratios.is_empty() {
        enumerate_ratios(&spec(procedure))?
    } else {
        ratios
            .iter()
            .map(|s| parse_value(s))
            .collect::<Result<Vec<_>>>()?
    };
    let method = match method {
        MethodArg::R => TripleMethod::R,
        MethodArg::Pq => TripleMethod::Pq,
    };
    let mut table = build_table(&list, method, line4(l4))?;
    if let Some(n) = rows {
        table.truncate(n);
    }
    Ok(table.iter().map(|row| gen_record(ctx, row)).collect())
}

fn gen_record(ctx: &Ctx, row: &TableRow) -> Record {
    let col1 = if ctx.settings.leading_one {
        row.column_one.clone()
    } else {
        row.column_one_without_leading_one()
    };
    RecordBuilder::new()
        .int("n", row.n as u64)
        .int("p", row.p)
        .int("q", row.q)
        .text("r", ctx.sx_ratio(&row.r))
        .text("r_ratio", row.r)
        .int("l", row.l)
        .text("l_sx", ctx.sx_int(row.l))
        .text("col1", ctx.sx(&col1))
        .int("w", row.w)
        .text("w_sx", ctx.sx_int(row.w))
        .int("d", row.d)
        .text("d_sx", ctx.sx_int(row.d))
        .build()
}

pub fn recip(ctx: &Ctx, n: u64, digits: usize) -> Result<Vec<Record>> {
    if n == 0 {
        bail!("0 has no reciprocal");
    }
    let b = RecordBuilder::new().int("n", n).text("n_sx", ctx.sx_int(n));
    let rec = if regular_factorization(n).is_ok() {
        b.boolean("regular", true)
            .text("reciprocal", ctx.sx(&reciprocal(n)?))
    } else {
        let (lo, hi) = approximate_reciprocal(n, digits)?;
        b.boolean("regular", false)
            .text("lower", ctx.sx(&lo))
            .text("upper", ctx.sx(&hi))
    };
    Ok(vec![rec.build()])
}

pub fn reciprocal_table(ctx: &Ctx) -> Vec<Record> {
    standard_reciprocal_table()
        .iter()
        .map(|e| {
            RecordBuilder::new()
                .text("n", ctx.sx_int(e.n))
                .text("reciprocal", ctx.sx(&e.nbar))
                .build()
        })
        .collect()
}

pub fn stats(procedure: ProcedureArg, include_one: bool) -> Result<Vec<Record>> {
    let s = match procedure {
        ProcedureArg::StandardTable => ProcedureSpec::StandardTable { include_one },
        other if include_one => bail!(
            "--include-one applies to standard-table only, not {}",
            spec(other)
        ),
        other => spec(other),
    };
    let st = pool_statistics(&s)?;
    Ok(vec![RecordBuilder::new()
        .text("procedure", s.name())
        .int("total_pairs", st.total_pairs as u64)
        .int("distinct", st.distinct as u64)
        .int("distinct_below_three", st.distinct_below_three as u64)
        .int("admissible", st.admissible as u64)
        .build()])
}

pub fn gaps(
    ctx: &Ctx,
    procedure: ProcedureArg,
    l4: Line4Arg,
    exceeding: Option<&str>,
) -> Result<Vec<Record>> {
    let ratios = enumerate_ratios(&spec(procedure))?;
    let rows = build_table(&ratios, TripleMethod::R, line4(l4))?;
    let analysis = gap_analysis(&rows)?;
    let (big_r, big_c) = (
        analysis.largest_r_step(),
        analysis.largest_column_one_step(),
    );
    let threshold = exceeding.map(parse_value).transpose()?;
    Ok(analysis
        .steps
        .iter()
        .filter(|s| threshold.as_ref().is_none_or(|t| s.delta_r > *t))
        .map(|s| {
            let mut largest = Vec::new();
            if s == big_r {
                largest.push("r");
            }
            if s == big_c {
                largest.push("col1");
            }
            RecordBuilder::new()
                .int("upper", s.upper as u64)
                .int("lower", s.lower as u64)
                .text("delta_r", ctx.sx_ratio(&s.delta_r))
                .text("delta_r_ratio", s.delta_r)
                .text("delta_col1", ctx.sx_ratio(&s.delta_column_one))
                .text("largest", largest.join(","))
                .build()
        })
        .collect())
}

pub fn diff(
    ctx: &Ctx,
    from: TabletArg,
    against: TabletArg,
    reading: ReadingArg,
    mode: ModeArg,
) -> Result<Vec<Record>> {
    let reading = match reading {
        ReadingArg::R => Reading::Reciprocal,
        ReadingArg::Pq => Reading::GeneratingPair,
    };
    let mode = match mode {
        ModeArg::Strict => DiffMode::Strict,
        ModeArg::Lenient => DiffMode::Lenient,
    };
    let generated = ctx.tablet(from, reading)?;
    let attested = ctx.tablet(against, reading)?;
    Ok(diff_tablets(&generated, &attested, mode)
        .iter()
        .map(|r| {
            RecordBuilder::new()
                .int("line", r.line as u64)
                .text("column", r.column)
                .text("inscribed", ctx.sx(&r.inscribed))
                .text("correct", ctx.sx(&r.correct))
                .text("category", r.category)
                .opt_text("annotation", r.annotation.as_ref())
                .build()
        })
        .collect())
}

fn outcome_record(ctx: &Ctx, o: &SimulationOutcome) -> Record {
    let cells: Vec<String> = o
        .cells
        .iter()
        .map(|c| {
            format!(
                "{}: {} vs {}",
                c.column,
                ctx.sx(&c.value),
                ctx.sx(&c.attested)
            )
        })
        .collect();
    RecordBuilder::new()
        .text("model", o.model.name())
        .text("params", &o.model)
        .int("line", o.line as u64)
        .opt_text("left", o.pair.as_ref().map(|p| ctx.sx(&p.0)))
        .opt_text("right", o.pair.as_ref().map(|p| ctx.sx(&p.1)))
        .int("steps", o.states.len() as u64)
        .text("cells", cells.join("; "))
        .boolean("matches", o.matches_attested())
        .opt_text("note", o.note.as_ref())
        .build()
}

pub fn errors_list(ctx: &Ctx) -> Result<Vec<Record>> {
    ErrorModel::catalogue()
        .iter()
        .map(|m| Ok(outcome_record(ctx, &simulate_error(m)?)))
        .collect()
}

pub fn errors_simulate(ctx: &Ctx, model: ModelArg, param: Option<&str>) -> Result<Vec<Record>> {
    let m = ErrorModel::parse(model.name(), param)?;
    Ok(vec![outcome_record(ctx, &simulate_error(&m)?)])
}

pub fn bounds(ctx: &Ctx, variant: Sqrt2Arg) -> Result<Vec<Record>> {
    let v = match variant {
        Sqrt2Arg::Rough => Sqrt2Variant::Rough,
        Sqrt2Arg::Coarse => Sqrt2Variant::Coarse,
        Sqrt2Arg::Fine => Sqrt2Variant::Fine,
    };
    let b = derive_bounds(v)?;
    let count = enumerate_ratios(&b.spec())?.len();
    Ok(vec![RecordBuilder::new()
        .text("variant", v.name())
        .text("sqrt2", ctx.sx(&sqrt2_constant(v)))
        .text("alpha", ctx.sx_ratio(&b.alpha))
        .text("r_max", ctx.sx_ratio(&b.r_max))
        .int("p_max", b.p_max)
        .int("q_max", b.q_max)
        .int("ratios", count as u64)
        .build()])
}

pub fn cane(ctx: &Ctx, d: &str, b: &str) -> Result<Vec<Record>> {
    let problem = CaneProblem {
        d: parse_value(d)?,
        b: parse_value(b)?,
    };
    let s = solve_cane(&problem)?;
    Ok(vec![RecordBuilder::new()
        .text("l", s.l)
        .text("h", s.h)
        .text("h_squared", s.h_squared)
        .text("d", problem.d)
        .text("b", problem.b)
        .text("l_sx", ctx.sx_ratio(&s.l))
        .text("h_sx", ctx.sx_ratio(&s.h))
        .build()])
}
