use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use super::approx::{self, Decimal};
use super::{QuadElem, Sign, SimpleSurd, SurdExpr};
use crate::arithmetic::{factorize, rat_sqrt, Rat};
use crate::error::{Error, Result};

/// An exact value in one of the two canonical forms.
///
/// A single-term value is always `Simple` (rationals included); `Quad` holds
/// zero and values with two or more terms. Each value therefore has exactly
/// one representation and `==` is value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CanonicalValue {
    Quad(QuadElem),
    Simple(SimpleSurd),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

impl CanonicalValue {
    pub fn zero() -> Self {
        CanonicalValue::Quad(QuadElem::zero())
    }

    pub fn from_rational(q: Rat) -> Self {
        match SimpleSurd::rational(q) {
            Ok(s) => CanonicalValue::Simple(s),
            Err(_) => Self::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rat::from_integer(n.into()))
    }

    /// `√q` for a rational `q ≥ 0`.
    pub fn sqrt_of(q: &Rat) -> Result<Self> {
        sqrt(&Self::from_rational(q.clone()))
    }

    pub fn from_quad(q: QuadElem) -> Self {
        if q.term_count() != 1 {
            return CanonicalValue::Quad(q);
        }
        let (radicand, coeff) = q.terms().next().expect("one term");
        let sign = if coeff.is_negative() { Sign::Minus } else { Sign::Plus };
        let exps: BTreeMap<BigUint, i128> =
            factorize(radicand).into_iter().map(|(p, e)| (p, e as i128)).collect();
        let depth = if radicand.is_one() { 0 } else { 1 };
        CanonicalValue::Simple(SimpleSurd::build(sign, coeff.abs(), exps, depth))
    }

    /// Embedding into the multi-quadratic form, available for everything
    /// except simple surds of depth ≥ 2.
    pub fn to_quad(&self) -> Option<QuadElem> {
        match self {
            CanonicalValue::Quad(q) => Some(q.clone()),
            CanonicalValue::Simple(s) if s.depth() <= 1 => {
                Some(QuadElem::term(s.sign().apply(s.coeff().clone()), s.radicand()))
            }
            CanonicalValue::Simple(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, CanonicalValue::Quad(q) if q.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rat> {
        match self {
            CanonicalValue::Quad(q) => q.as_rational(),
            CanonicalValue::Simple(s) => s.as_rational(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn as_simple(&self) -> Option<&SimpleSurd> {
        match self {
            CanonicalValue::Simple(s) => Some(s),
            CanonicalValue::Quad(_) => None,
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            CanonicalValue::Quad(q) => CanonicalValue::Quad(q.neg()),
            CanonicalValue::Simple(s) => CanonicalValue::Simple(s.neg()),
        }
    }

    pub fn scale(&self, q: &Rat) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        match self {
            CanonicalValue::Quad(e) => CanonicalValue::Quad(e.scale(q)),
            CanonicalValue::Simple(s) => CanonicalValue::Simple(s.scale(q).expect("nonzero scale")),
        }
    }

    /// `self²`; squaring never leaves the canonical forms.
    pub fn square(&self) -> Self {
        quad_arith(self, self, Op::Mul).expect("squares are always representable")
    }

    pub fn pow(&self, k: u32) -> Self {
        match self {
            CanonicalValue::Simple(s) => CanonicalValue::Simple(s.pow(k)),
            CanonicalValue::Quad(_) => {
                let mut acc = Self::from_int(1);
                for _ in 0..k {
                    acc = quad_arith(&acc, self, Op::Mul).expect("closed");
                }
                acc
            }
        }
    }

    /// Exact sign.
    pub fn signum(&self) -> Ordering {
        approx::signum(self)
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    /// Exact comparison of real values.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        approx::compare(self, other)
    }

    pub fn to_f64(&self) -> f64 {
        approx::to_f64(self)
    }

    /// An expression whose normalization is exactly `self`, in the shape
    /// used for printing: positive terms first, ascending radicands.
    pub fn to_expr(&self) -> SurdExpr {
        fn rational(q: &Rat) -> SurdExpr {
            if q.is_integer() {
                SurdExpr::rat(q.clone())
            } else {
                SurdExpr::rat(Rat::from_integer(q.numer().clone()))
                    .div(SurdExpr::rat(Rat::from_integer(q.denom().clone())))
            }
        }
        fn with_coeff(coeff: &Rat, body: SurdExpr) -> SurdExpr {
            if coeff.is_one() {
                body
            } else {
                rational(coeff).mul(body)
            }
        }
        fn chain(terms: Vec<(bool, SurdExpr)>) -> SurdExpr {
            let mut iter = terms.into_iter();
            let Some((neg, first)) = iter.next() else {
                return SurdExpr::int(0);
            };
            let mut acc = if neg { SurdExpr::int(0).sub(first) } else { first };
            for (neg, t) in iter {
                acc = if neg { acc.sub(t) } else { acc.add(t) };
            }
            acc
        }
        match self {
            CanonicalValue::Simple(s) => {
                let magnitude = if s.depth() == 0 {
                    rational(s.coeff())
                } else {
                    let mut body = SurdExpr::rat(Rat::from_integer(s.radicand().into()));
                    for _ in 0..s.depth() {
                        body = body.sqrt();
                    }
                    with_coeff(s.coeff(), body)
                };
                chain(vec![(s.sign() == Sign::Minus, magnitude)])
            }
            CanonicalValue::Quad(q) => {
                let mut terms: Vec<(bool, SurdExpr)> = q
                    .terms()
                    .map(|(r, c)| {
                        let body = if r.is_one() {
                            rational(&c.abs())
                        } else {
                            with_coeff(&c.abs(), SurdExpr::rat(Rat::from_integer(r.clone().into())).sqrt())
                        };
                        (c.is_negative(), body)
                    })
                    .collect();
                terms.sort_by_key(|(neg, _)| *neg);
                chain(terms)
            }
        }
    }
}

impl fmt::Display for CanonicalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::cli::printer::print_expr(&self.to_expr()))
    }
}

fn zero_operand() -> Error {
    Error::domain("commensurability is undefined for a zero magnitude")
}

/// Exact field arithmetic on canonical values.
///
/// Multi-quadratic values (including simple surds of depth ≤ 1) form a field.
/// Simple surds are closed under `×` and `÷` at any depth. A sum involving a
/// surd of depth ≥ 2 is representable only when it collapses to a single
/// simple surd.
pub fn quad_arith(x: &CanonicalValue, y: &CanonicalValue, op: Op) -> Result<CanonicalValue> {
    if let (Some(a), Some(b)) = (x.to_quad(), y.to_quad()) {
        let r = match op {
            Op::Add => a.add(&b),
            Op::Sub => a.sub(&b),
            Op::Mul => a.mul(&b),
            Op::Div => a.div(&b)?,
        };
        return Ok(CanonicalValue::from_quad(r));
    }
    match op {
        Op::Mul | Op::Div => {
            if op == Op::Div && y.is_zero() {
                return Err(Error::DivisionByZero);
            }
            if x.is_zero() || y.is_zero() {
                return Ok(CanonicalValue::zero());
            }
            match (x, y) {
                (CanonicalValue::Simple(a), CanonicalValue::Simple(b)) => Ok(CanonicalValue::Simple(
                    if op == Op::Mul { a.mul(b) } else { a.div(b) },
                )),
                _ => Err(Error::not_representable(
                    "product of a multi-term value and a surd of depth 2 or more",
                )),
            }
        }
        Op::Add | Op::Sub => {
            let y = if op == Op::Sub { y.neg() } else { y.clone() };
            if x.is_zero() {
                return Ok(y);
            }
            if y.is_zero() {
                return Ok(x.clone());
            }
            match (x, &y) {
                (CanonicalValue::Simple(a), CanonicalValue::Simple(b)) => {
                    match a.div(b).as_rational() {
                        Some(ratio) => {
                            let factor = ratio + Rat::one();
                            Ok(CanonicalValue::Simple(b.clone()).scale(&factor))
                        }
                        None => Err(Error::not_representable(
                            "sum of incommensurable surds outside a multi-quadratic field",
                        )),
                    }
                }
                _ => Err(Error::not_representable(
                    "sum of a multi-term value and a surd of depth 2 or more",
                )),
            }
        }
    }
}

/// Principal square root.
pub fn sqrt(x: &CanonicalValue) -> Result<CanonicalValue> {
    match x {
        CanonicalValue::Simple(s) => Ok(CanonicalValue::Simple(s.sqrt()?)),
        CanonicalValue::Quad(q) if q.is_zero() => Ok(CanonicalValue::zero()),
        CanonicalValue::Quad(q) => {
            if x.signum() == Ordering::Less {
                return Err(Error::NegativeRadicand);
            }
            if q.term_count() > 2 {
                return Err(Error::not_representable(
                    "square root of a value with more than two terms",
                ));
            }
            let Some(a) = q.coeff_of(&BigUint::one()).cloned() else {
                // the square of any multi-quadratic element has a positive
                // rational part, so no root exists in either form
                return Err(Error::not_representable(
                    "square root of a two-term value without rational part",
                ));
            };
            let (d, b) = q
                .terms()
                .find(|(r, _)| !r.is_one())
                .map(|(r, c)| (r.clone(), c.clone()))
                .expect("two terms");
            let disc = &a * &a - &b * &b * Rat::from_integer(d.into());
            let Some(c) = rat_sqrt(&disc) else {
                return Err(Error::not_representable(
                    "denesting discriminant is not a rational square",
                ));
            };
            // √(a + b√d) = √((a+c)/2) ± √((a−c)/2), sign of b
            let two = Rat::from_integer(2.into());
            let big = CanonicalValue::sqrt_of(&((&a + &c) / &two))?;
            let small = CanonicalValue::sqrt_of(&((&a - &c) / &two))?;
            let op = if b.is_negative() { Op::Sub } else { Op::Add };
            quad_arith(&big, &small, op)
        }
    }
}

/// True iff `x / y` is rational.
pub fn commensurable_length(x: &CanonicalValue, y: &CanonicalValue) -> Result<bool> {
    if x.is_zero() || y.is_zero() {
        return Err(zero_operand());
    }
    match quad_arith(x, y, Op::Div) {
        Ok(r) => Ok(r.is_rational()),
        // a multi-term value is never a rational multiple of a deep surd
        Err(Error::NotRepresentable(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// True iff `x² / y²` is rational.
pub fn commensurable_power(x: &CanonicalValue, y: &CanonicalValue) -> Result<bool> {
    if x.is_zero() || y.is_zero() {
        return Err(zero_operand());
    }
    commensurable_length(&x.square(), &y.square())
}

fn require_positive(x: &CanonicalValue) -> Result<()> {
    if !x.is_positive() {
        return Err(Error::domain("magnitude must be positive"));
    }
    Ok(())
}

/// A positive rational multiple of the unit.
pub fn rational_in_length(x: &CanonicalValue) -> Result<bool> {
    require_positive(x)?;
    Ok(x.is_rational())
}

/// Square is a rational multiple of the unit square.
pub fn rational_in_power(x: &CanonicalValue) -> Result<bool> {
    require_positive(x)?;
    Ok(x.square().is_rational())
}

/// `x` rounded to `digits` significant decimal digits.
pub fn to_float(x: &CanonicalValue, digits: u32) -> Decimal {
    approx::to_decimal(x, digits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surd::normalize;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    fn root(n: i64) -> CanonicalValue {
        CanonicalValue::sqrt_of(&r(n, 1)).unwrap()
    }

    fn e(text: &str) -> CanonicalValue {
        normalize(&crate::parse_expr(text).unwrap()).unwrap()
    }

    #[test]
    fn sqrt_two_is_simple() {
        let v = root(2);
        let s = v.as_simple().unwrap();
        assert_eq!((s.depth(), s.radicand(), s.coeff().clone()), (1, 2u32.into(), r(1, 1)));
    }

    #[test]
    fn denest_two_plus_sqrt_three() {
        let v = e("sqrt(2 + sqrt(3))");
        assert_eq!(v, e("sqrt(6)/2 + sqrt(2)/2"));
        assert_eq!(v, e("sqrt(3/2) + sqrt(1/2)"));
        assert_eq!(v.square(), e("2 + sqrt(3)"));
    }

    #[test]
    fn non_denesting_root() {
        let err = normalize(&crate::parse_expr("sqrt(1 + sqrt(2))").unwrap()).unwrap_err();
        assert_eq!(
            err,
            Error::NotRepresentable("denesting discriminant is not a rational square".into())
        );
    }

    #[test]
    fn sqrt2_squared() {
        assert_eq!(e("sqrt(2) * sqrt(2)"), CanonicalValue::from_int(2));
    }

    #[test]
    fn conjugates() {
        assert_eq!(e("(1 + sqrt(2)) * (1 - sqrt(2))"), CanonicalValue::from_int(-1));
    }

    #[test]
    fn two_root_two() {
        let u2 = e("sqrt(2 * sqrt(2))");
        assert_eq!(quad_arith(&u2, &u2, Op::Mul).unwrap(), e("2 * sqrt(2)"));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(sqrt(&CanonicalValue::from_int(4)).unwrap(), CanonicalValue::from_int(2));
        assert_eq!(sqrt(&e("2 + sqrt(3)")).unwrap(), e("sqrt(3/2) + sqrt(1/2)"));
        let fourth = sqrt(&root(2)).unwrap();
        assert_eq!(fourth.as_simple().unwrap().depth(), 2);
        assert_eq!(fourth.pow(4), CanonicalValue::from_int(2));
        assert_eq!(sqrt(&e("2 - sqrt(3)")).unwrap(), e("sqrt(3/2) - sqrt(1/2)"));
        assert_eq!(sqrt(&e("0 - 2")), Err(Error::NegativeRadicand));
        assert_eq!(sqrt(&e("1 - sqrt(2)")), Err(Error::NegativeRadicand));
        assert!(matches!(sqrt(&e("sqrt(2) + sqrt(3)")), Err(Error::NotRepresentable(_))));
        assert!(matches!(sqrt(&e("1 + sqrt(2) + sqrt(3)")), Err(Error::NotRepresentable(_))));
    }

    #[test]
    fn deep_sums() {
        let a = e("sqrt(sqrt(2))");
        assert_eq!(quad_arith(&a, &a, Op::Add).unwrap(), e("2 * sqrt(sqrt(2))"));
        assert!(quad_arith(&a, &a, Op::Sub).unwrap().is_zero());
        assert!(matches!(quad_arith(&a, &root(2), Op::Add), Err(Error::NotRepresentable(_))));
        assert!(matches!(quad_arith(&a, &e("sqrt(sqrt(3))"), Op::Add), Err(Error::NotRepresentable(_))));
        assert!(matches!(quad_arith(&a, &e("1 + sqrt(2)"), Op::Mul), Err(Error::NotRepresentable(_))));
        assert_eq!(quad_arith(&a, &CanonicalValue::zero(), Op::Add).unwrap(), a);
        assert_eq!(quad_arith(&a, &CanonicalValue::zero(), Op::Div), Err(Error::DivisionByZero));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(quad_arith(&root(2), &CanonicalValue::zero(), Op::Div), Err(Error::DivisionByZero));
    }

    #[test]
    fn commensurability() {
        assert!(commensurable_length(&root(2), &e("3 * sqrt(2)")).unwrap());
        assert!(!commensurable_length(&root(2), &root(3)).unwrap());
        assert!(!commensurable_length(&root(2), &e("sqrt(2 * sqrt(2))")).unwrap());
        assert!(!commensurable_length(&e("1 + sqrt(2)"), &e("sqrt(sqrt(2))")).unwrap());
        assert!(commensurable_power(&root(2), &root(3)).unwrap());
        assert!(!commensurable_power(&e("sqrt(sqrt(2))"), &root(2)).unwrap());
        let x = e("1 + sqrt(5)");
        assert!(commensurable_power(&x, &x).unwrap());
        assert!(commensurable_length(&CanonicalValue::zero(), &x).is_err());
    }

    #[test]
    fn rationality() {
        let five = CanonicalValue::from_int(5);
        assert_eq!((rational_in_length(&five).unwrap(), rational_in_power(&five).unwrap()), (true, true));
        let ten = root(10);
        assert_eq!((rational_in_length(&ten).unwrap(), rational_in_power(&ten).unwrap()), (false, true));
        let f = e("sqrt(sqrt(2))");
        assert_eq!((rational_in_length(&f).unwrap(), rational_in_power(&f).unwrap()), (false, false));
        assert!(rational_in_length(&CanonicalValue::zero()).is_err());
    }

    #[test]
    fn floats() {
        assert_eq!(to_float(&root(2), 10).to_string(), "1.414213562");
        assert_eq!(to_float(&e("2 + sqrt(3)"), 6).to_string(), "3.73205");
        assert_eq!(to_float(&e("(sqrt(6) + sqrt(2))/2"), 6).to_string(), "1.93185");
        assert_eq!(to_float(&e("sqrt(2 + sqrt(3))"), 6).to_string(), "1.93185");
    }

    #[test]
    fn ordering_is_exact() {
        // 3 - 2√2 ≈ 0.1716 vs 1/6
        let a = e("3 - 2 * sqrt(2)");
        assert_eq!(a.cmp_value(&CanonicalValue::from_rational(r(1, 6))), Ordering::Greater);
        assert_eq!(root(2).cmp_value(&e("sqrt(sqrt(4))")), Ordering::Equal);
        assert_eq!(e("sqrt(sqrt(2))").cmp_value(&root(2)), Ordering::Less);
    }

    #[test]
    fn printing_canonical_forms() {
        assert_eq!(e("sqrt(2) - 1").to_string(), "sqrt(2) - 1");
        assert_eq!(e("sqrt(2 + sqrt(3))").to_string(), "1 / 2 * sqrt(2) + 1 / 2 * sqrt(6)");
        assert_eq!(e("sqrt(2 * sqrt(2))").to_string(), "sqrt(sqrt(8))");
        assert_eq!(e("1 - 2").to_string(), "0 - 1");
    }
}
