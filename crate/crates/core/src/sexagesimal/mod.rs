//! Base-60 numerals, regular numbers and reciprocal tables.

mod constants;
mod notation;
mod regular;

pub use constants::{diagonal_of_square, sqrt2_constant, Sqrt2Variant};
pub use notation::{expand, parse_sexagesimal, Expansion, Sexagesimal, Style};
pub use regular::{
    approximate_by_regular_neighbor, approximate_reciprocal, integer_sqrt_exact, is_regular,
    reciprocal, regular_factorization, regular_numbers_up_to, regular_part,
    standard_reciprocal_table, ReciprocalEntry, RegularFactorization,
};
