//! Exact sexagesimal arithmetic and a reconstruction of the Plimpton 322
//! tablet from reciprocal pairs.

pub mod error;
pub mod problems;
pub mod procedure;
pub mod ratio;
pub mod sexagesimal;
pub mod tablet;
pub mod triple;

pub use error::{Error, Result};
pub use problems::{solve_cane, CaneProblem, CaneSolution};
pub use procedure::{ProcedureSpec, TableRow, TripleMethod};
pub use ratio::ExactRatio;
pub use sexagesimal::{Sexagesimal, Sqrt2Variant, Style};
pub use tablet::{ErrorModel, ErrorRecord, Tablet};
pub use triple::{GeneratingPair, MultiplierStrategy, Triple};
