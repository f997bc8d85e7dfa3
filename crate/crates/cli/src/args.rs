use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Reconstruct Plimpton 322: generating ratios, reciprocal tables, the
/// tablet's errors and the cane problem, all in exact arithmetic.
///
/// Golden tablet data is read from the directory given by --data or the
/// PLIMPTON_DATA environment variable, falling back to the built-in copy.
/// Defaults for --format, --style, --leading-one and --data may be set in a
/// key=value file given by --config or PLIMPTON_CONFIG; flags win.
#[derive(Debug, Parser)]
#[command(name = "plimpton", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatKind>,

    /// Rendering of sexagesimal values
    #[arg(long, global = true, value_enum)]
    pub style: Option<StyleKind>,

    /// Keep the leading 1 of Column I
    #[arg(long, global = true, value_name = "BOOL")]
    pub leading_one: Option<bool>,

    /// Directory holding attested.tsv, corrected.tsv and corrected_pq.tsv
    #[arg(long, global = true, env = "PLIMPTON_DATA", value_name = "DIR")]
    pub data: Option<PathBuf>,

    /// key=value file of defaults
    #[arg(long, global = true, env = "PLIMPTON_CONFIG", value_name = "FILE")]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatKind {
    Pretty,
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StyleKind {
    Canonical,
    Tablet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProcedureArg {
    Price,
    P125,
    RobsonDigits,
    StandardTable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    R,
    Pq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Line4Arg {
    Insert,
    Omit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sqrt2Arg {
    Rough,
    Coarse,
    Fine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TabletArg {
    Attested,
    Corrected,
    Generated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReadingArg {
    R,
    Pq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strict,
    Lenient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    GillingsLine2,
    RobsonOvershoot,
    ModifiedMultiplier,
    WrongY,
    SquareCopy,
    HalvingSkip,
}

impl ModelArg {
    pub fn name(&self) -> &'static str {
        match self {
            ModelArg::GillingsLine2 => "gillings_line2",
            ModelArg::RobsonOvershoot => "robson_overshoot",
            ModelArg::ModifiedMultiplier => "modified_multiplier",
            ModelArg::WrongY => "wrong_y",
            ModelArg::SquareCopy => "square_copy",
            ModelArg::HalvingSkip => "halving_skip",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the table of a selection procedure
    Gen {
        #[arg(long, value_enum, default_value = "price")]
        procedure: ProcedureArg,
        #[arg(long, value_enum, default_value = "r")]
        method: MethodArg,
        /// Keep only the first N rows
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long, value_enum, default_value = "insert")]
        line4: Line4Arg,
        /// Explicit ratios (n/d or sexagesimal) instead of a procedure, descending
        #[arg(long = "ratio", value_name = "R")]
        ratios: Vec<String>,
    },
    /// Reciprocal of n, exact or bracketed by truncations
    Recip {
        n: u64,
        /// Fractional places for a non-regular n
        #[arg(long, default_value_t = 4)]
        digits: usize,
    },
    /// Print a standard table
    Table {
        #[command(subcommand)]
        which: TableCommand,
    },
    /// Pool sizes of a procedure
    Stats {
        #[arg(long, value_enum)]
        procedure: ProcedureArg,
        /// Let p and q be 1 in the standard-table pool
        #[arg(long)]
        include_one: bool,
    },
    /// Differences between successive lines of a procedure's list
    Gaps {
        #[arg(long, value_enum)]
        procedure: ProcedureArg,
        #[arg(long, value_enum, default_value = "omit")]
        line4: Line4Arg,
        /// Only steps whose change in r exceeds this value
        #[arg(long, value_name = "R")]
        exceeding: Option<String>,
    },
    /// Compare two tablets cell by cell
    Diff {
        #[arg(long, value_enum, default_value = "corrected")]
        from: TabletArg,
        #[arg(long, value_enum, default_value = "attested")]
        against: TabletArg,
        /// Reading of lines 11 and 15 for the corrected tablet
        #[arg(long, value_enum, default_value = "r")]
        reading: ReadingArg,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
    },
    /// Error mechanisms for the inscribed slips
    Errors {
        #[command(subcommand)]
        action: ErrorsCommand,
    },
    /// p, q and ratio bounds from an approximation of the square root of two
    Bounds {
        #[arg(long, value_enum)]
        sqrt2: Sqrt2Arg,
    },
    /// Cane against a wall: length and height from drop d and distance b
    Cane {
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum TableCommand {
    /// The standard reciprocal table, 2 to 1 21
    Reciprocals,
}

#[derive(Debug, Subcommand)]
pub enum ErrorsCommand {
    /// Run every model with its default parameters
    List,
    /// Run one model
    Simulate {
        #[arg(long, value_enum)]
        model: ModelArg,
        /// Model parameter: p', extra steps, faulty step, y, or line
        #[arg(long)]
        param: Option<String>,
    },
}
