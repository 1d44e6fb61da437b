//! Exact arithmetic over quadratic and nested square-root irrationals.
//!
//! Every value is an exact multiple of an implicit unit. Values are kept in one
//! of two canonical forms: an element of a real multi-quadratic field
//! `Q(√f₁, …, √f_k)` or a simple surd `c · m^(1/2^n)`. On top of that sit the
//! Book X vocabulary (commensurability, rationality in length and in power,
//! medials, the six binomials and apotomes) and the rank ladder of simple
//! irrationals.
//!
//! ```
//! use bookx::{normalize, parse_expr, taxonomy::{classify, TaxonomyClass}};
//!
//! let v = normalize(&parse_expr("2 + sqrt(3)").unwrap()).unwrap();
//! assert_eq!(classify(&v).unwrap(), TaxonomyClass::Binomial(1));
//! ```

pub mod arithmetic;
pub mod cli;
mod error;
pub mod ranks;
pub mod surd;
pub mod taxonomy;

pub use arithmetic::Rat;
pub use cli::parser::{parse_expr, ParseError};
pub use cli::printer::print_expr;
pub use error::{Error, Result};
pub use surd::{normalize, CanonicalValue, QuadElem, Sign, SimpleSurd, SurdExpr};
