use super::{quad_arith, sqrt, CanonicalValue, Op};
use crate::arithmetic::Rat;
use crate::error::Result;

/// Expression tree over rationals, the four field operations and square
/// roots. `Const(1)` is one unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SurdExpr {
    Const(Rat),
    Add(Box<SurdExpr>, Box<SurdExpr>),
    Sub(Box<SurdExpr>, Box<SurdExpr>),
    Mul(Box<SurdExpr>, Box<SurdExpr>),
    Div(Box<SurdExpr>, Box<SurdExpr>),
    Sqrt(Box<SurdExpr>),
}

impl SurdExpr {
    pub fn int(n: i64) -> Self {
        SurdExpr::Const(Rat::from_integer(n.into()))
    }

    pub fn rat(q: Rat) -> Self {
        SurdExpr::Const(q)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, rhs: SurdExpr) -> Self {
        SurdExpr::Add(Box::new(self), Box::new(rhs))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, rhs: SurdExpr) -> Self {
        SurdExpr::Sub(Box::new(self), Box::new(rhs))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, rhs: SurdExpr) -> Self {
        SurdExpr::Mul(Box::new(self), Box::new(rhs))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn div(self, rhs: SurdExpr) -> Self {
        SurdExpr::Div(Box::new(self), Box::new(rhs))
    }

    pub fn sqrt(self) -> Self {
        SurdExpr::Sqrt(Box::new(self))
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            SurdExpr::Const(_) => 1,
            SurdExpr::Sqrt(e) => 1 + e.size(),
            SurdExpr::Add(a, b) | SurdExpr::Sub(a, b) | SurdExpr::Mul(a, b) | SurdExpr::Div(a, b) => {
                1 + a.size() + b.size()
            }
        }
    }
}

/// Exact value of `e` in canonical form.
pub fn normalize(e: &SurdExpr) -> Result<CanonicalValue> {
    let bin = |a: &SurdExpr, b: &SurdExpr, op| quad_arith(&normalize(a)?, &normalize(b)?, op);
    match e {
        SurdExpr::Const(q) => Ok(CanonicalValue::from_rational(q.clone())),
        SurdExpr::Add(a, b) => bin(a, b, Op::Add),
        SurdExpr::Sub(a, b) => bin(a, b, Op::Sub),
        SurdExpr::Mul(a, b) => bin(a, b, Op::Mul),
        SurdExpr::Div(a, b) => bin(a, b, Op::Div),
        SurdExpr::Sqrt(a) => sqrt(&normalize(a)?),
    }
}
