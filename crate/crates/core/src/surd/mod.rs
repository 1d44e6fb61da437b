//! Surd expressions and their two canonical forms.

pub mod approx;
mod canonical;
mod expr;
mod quad;
mod simple;

pub use approx::{Decimal, Enclosure};
pub use canonical::{
    commensurable_length, commensurable_power, quad_arith, rational_in_length, rational_in_power,
    sqrt, to_float, CanonicalValue, Op,
};
pub use expr::{normalize, SurdExpr};
pub use quad::QuadElem;
pub use simple::{SimpleSurd, MAX_DEPTH};

use crate::arithmetic::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn apply(self, q: Rat) -> Rat {
        match self {
            Sign::Plus => q,
            Sign::Minus => -q,
        }
    }
}
