use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rat = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Result of [`rat_arith`]: field operations yield a value, comparison an
/// ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RatValue {
    Value(Rat),
    Ordering(Ordering),
}

pub fn rat_arith(x: &Rat, y: &Rat, op: RatOp) -> Result<Rat> {
    Ok(match op {
        RatOp::Add => x + y,
        RatOp::Sub => x - y,
        RatOp::Mul => x * y,
        RatOp::Div => checked_div(x, y)?,
    })
}

pub fn rat_cmp(x: &Rat, y: &Rat) -> Ordering {
    x.cmp(y)
}

pub fn checked_div(x: &Rat, y: &Rat) -> Result<Rat> {
    if y.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(x / y)
}

/// Parses `"7"`, `"-3/4"` or a decimal literal such as `"0.125"` into an exact
/// rational.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let text = text.trim();
    let bad = || Error::domain(format!("invalid rational literal {text:?}"));
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(Rat::new(num, den));
    }
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if int_part.is_empty() || !all_digits(int_part) || !all_digits(frac_part) {
        return Err(bad());
    }
    if body.ends_with('.') {
        return Err(bad());
    }
    let digits: BigInt = format!("{int_part}{frac_part}").parse().map_err(|_| bad())?;
    let scale = num_traits::pow(BigInt::from(10u32), frac_part.len());
    let value = Rat::new(digits, scale);
    Ok(if neg { -value } else { value })
}

/// Exact decimal rendering when the denominator divides a power of ten
/// (`3/8` → `"0.375"`); `None` otherwise.
pub fn fmt_decimal_exact(q: &Rat) -> Option<String> {
    let den = q.denom().magnitude().clone();
    let mut rest = den.clone();
    let (mut twos, mut fives) = (0usize, 0usize);
    let two = BigUint::from(2u32);
    let five = BigUint::from(5u32);
    while rest.is_even() {
        rest /= &two;
        twos += 1;
    }
    while (&rest % &five).is_zero() {
        rest /= &five;
        fives += 1;
    }
    if !rest.is_one() {
        return None;
    }
    let places = twos.max(fives);
    let scaled = q.numer().magnitude() * num_traits::pow(BigUint::from(10u32), places) / den;
    let mut digits = scaled.to_string();
    let sign = if q.is_negative() { "-" } else { "" };
    if places == 0 {
        return Some(format!("{sign}{digits}"));
    }
    if digits.len() <= places {
        digits = format!("{}{digits}", "0".repeat(places + 1 - digits.len()));
    }
    let (int, frac) = digits.split_at(digits.len() - places);
    Some(format!("{sign}{int}.{frac}"))
}
