//! Rational arithmetic and the integer utilities behind every
//! commensurability decision.

mod factor;
mod rat;
mod squarefree;

pub use factor::{factorize, is_probable_prime};
pub use rat::{checked_div, fmt_decimal_exact, parse_rat, rat_arith, rat_cmp, Rat, RatOp, RatValue};
pub use squarefree::{is_perfect_square, rat_sqrt, squarefree_decompose, SquarefreeDecomp};
