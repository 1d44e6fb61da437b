//! Ranks of simple irrationals and the endless ladder of mutually
//! incommensurable lines `u_{n+1}² = b·u_n`.

use num_traits::Signed;

use crate::arithmetic::{is_perfect_square, Rat};
use crate::error::{Error, Result};
use crate::surd::{quad_arith, sqrt, CanonicalValue, Op, SimpleSurd};

pub const DEFAULT_DEPTH_CAP: u32 = 16;

/// Minimal `n` with `x^(2^n)` rational. Defined for positive single-term
/// values only.
pub fn rank(x: &CanonicalValue) -> Result<u32> {
    if !x.is_positive() {
        return Err(Error::domain("rank is defined for positive magnitudes"));
    }
    match x {
        CanonicalValue::Simple(s) => Ok(s.depth()),
        CanonicalValue::Quad(_) => Err(Error::domain("rank is defined only for simple (single-term) values")),
    }
}

/// Lines `u₁ … u_N` and rectangles `s_n = b·u_n = u_{n+1}²` built from a
/// commensurable line `b` and the unit `u₀ = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankSequence {
    pub base: Rat,
    pub terms: Vec<SimpleSurd>,
    pub areas: Vec<CanonicalValue>,
}

impl RankSequence {
    /// `u_n` for `n ≥ 0`.
    pub fn term(&self, n: usize) -> CanonicalValue {
        if n == 0 {
            CanonicalValue::from_int(1)
        } else {
            CanonicalValue::Simple(self.terms[n - 1].clone())
        }
    }
}

fn check_base(b: &Rat, count: u32, cap: u32) -> Result<()> {
    if !b.is_positive() {
        return Err(Error::domain("the base line must be positive"));
    }
    if is_perfect_square(b) {
        return Err(Error::domain(format!(
            "base {b} is a perfect square: every line of the sequence would be rational"
        )));
    }
    if count == 0 {
        return Err(Error::domain("the sequence needs at least one term"));
    }
    if count > cap {
        return Err(Error::domain(format!("{count} terms exceed the depth cap of {cap}")));
    }
    Ok(())
}

pub fn x115_sequence(b: &Rat, count: u32) -> Result<RankSequence> {
    x115_sequence_capped(b, count, DEFAULT_DEPTH_CAP)
}

pub fn x115_sequence_capped(b: &Rat, count: u32, cap: u32) -> Result<RankSequence> {
    check_base(b, count, cap)?;
    let base = CanonicalValue::from_rational(b.clone());
    let mut terms = Vec::with_capacity(count as usize);
    let mut areas = Vec::with_capacity(count as usize);
    let mut u = CanonicalValue::from_int(1);
    for _ in 0..count {
        // u_{n+1} = √(b·u_n)
        u = sqrt(&quad_arith(&base, &u, Op::Mul)?)?;
        areas.push(quad_arith(&base, &u, Op::Mul)?);
        match &u {
            CanonicalValue::Simple(s) => terms.push(s.clone()),
            CanonicalValue::Quad(_) => unreachable!("roots of simple surds are simple"),
        }
    }
    Ok(RankSequence { base: b.clone(), terms, areas })
}

fn nth_sqrt(x: &CanonicalValue, times: u32) -> Result<CanonicalValue> {
    (0..times).try_fold(x.clone(), |acc, _| sqrt(&acc))
}

/// Computes `s_n` three ways and compares them exactly: directly as `b·u_n`,
/// as `√(b²·s_{n−1})`, and as `(b^(2^n) · s_{n−1}^(2^(n−1)))^(1/2^n)`.
pub fn s_recurrence_check(b: &Rat, n: u32) -> Result<bool> {
    s_recurrence_check_capped(b, n, DEFAULT_DEPTH_CAP)
}

pub fn s_recurrence_check_capped(b: &Rat, n: u32, cap: u32) -> Result<bool> {
    check_base(b, n, cap)?;
    let seq = x115_sequence_capped(b, n, cap)?;
    let base = CanonicalValue::from_rational(b.clone());
    let direct = seq.areas[n as usize - 1].clone();
    // s₀ = b·u₀ = b
    let prev = if n == 1 { base.clone() } else { seq.areas[n as usize - 2].clone() };

    let b_sq = base.square();
    let via_root = sqrt(&quad_arith(&b_sq, &prev, Op::Mul)?)?;

    let powered = quad_arith(&base.pow(1 << n), &prev.pow(1 << (n - 1)), Op::Mul)?;
    let closed = nth_sqrt(&powered, n)?;

    Ok(direct == via_root && direct == closed)
}
