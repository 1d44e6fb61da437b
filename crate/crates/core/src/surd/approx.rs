//! Certified numeric enclosures of canonical values.
//!
//! Every value is bracketed by a pair of rationals `lo ≤ v ≤ hi` computed with
//! directed rounding on binary floating numbers of a chosen working width.
//! Widening the width tightens the bracket; since canonical values are exact,
//! repeated widening always separates distinct values and settles decimal
//! rounding of irrational ones.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{CanonicalValue, QuadElem, Sign, SimpleSurd};
use crate::arithmetic::Rat;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    Down,
    Up,
}

/// Positive binary float `m · 2^e`.
#[derive(Clone, Debug)]
struct Bf {
    m: BigUint,
    e: i64,
}

impl Bf {
    fn round(m: BigUint, e: i64, width: u64, dir: Dir) -> Bf {
        let bits = m.bits();
        if bits <= width {
            return Bf { m, e };
        }
        let k = bits - width;
        let mut q = &m >> k;
        if dir == Dir::Up && (q.clone() << k) != m {
            q += 1u32;
        }
        Bf { m: q, e: e + k as i64 }
    }

    fn from_rat(q: &Rat, width: u64, dir: Dir) -> Bf {
        let num = q.numer().magnitude();
        let den = q.denom().magnitude();
        let shift = width as i64 + den.bits() as i64 - num.bits() as i64 + 2;
        let (n, d) = if shift >= 0 {
            (num << shift as u64, den.clone())
        } else {
            (num.clone(), den << (-shift) as u64)
        };
        let (mut m, rem) = n.div_rem(&d);
        if dir == Dir::Up && !rem.is_zero() {
            m += 1u32;
        }
        Bf::round(m, -shift, width, dir)
    }

    fn from_int(n: &BigUint, width: u64, dir: Dir) -> Bf {
        Bf::round(n.clone(), 0, width, dir)
    }

    fn mul(&self, other: &Bf, width: u64, dir: Dir) -> Bf {
        Bf::round(&self.m * &other.m, self.e + other.e, width, dir)
    }

    fn sqrt(&self, width: u64, dir: Dir) -> Bf {
        let mut m = self.m.clone();
        let mut e = self.e;
        let want = 2 * width + 2;
        if m.bits() < want {
            let k = want - m.bits();
            m <<= k;
            e -= k as i64;
        }
        if e.rem_euclid(2) == 1 {
            m <<= 1u32;
            e -= 1;
        }
        let mut s = m.sqrt();
        if dir == Dir::Up && &s * &s != m {
            s += 1u32;
        }
        Bf::round(s, e / 2, width, dir)
    }

    fn to_rat(&self) -> Rat {
        let m = BigInt::from(self.m.clone());
        if self.e >= 0 {
            Rat::from_integer(m << self.e as u64)
        } else {
            Rat::new(m, BigInt::one() << (-self.e) as u64)
        }
    }
}

/// Closed rational interval known to contain a value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rat,
    pub hi: Rat,
}

impl Enclosure {
    fn point(q: Rat) -> Self {
        Enclosure { lo: q.clone(), hi: q }
    }

    fn neg(self) -> Self {
        Enclosure { lo: -self.hi, hi: -self.lo }
    }

    fn add(self, other: Enclosure) -> Self {
        Enclosure { lo: self.lo + other.lo, hi: self.hi + other.hi }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// Sign of every point of the interval, when it is constant and nonzero.
    pub fn strict_sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else {
            None
        }
    }
}

/// `|c| · R^(1/2^n)` bounded in direction `dir`.
fn simple_magnitude(s: &SimpleSurd, width: u64, dir: Dir) -> Bf {
    let coeff = Bf::from_rat(s.coeff(), width, dir);
    if s.depth() == 0 {
        return coeff;
    }
    // R^(k/2^n) = sqrt(... sqrt(sqrt(P_0) · P_1) ... · P_{n-1}), where P_j is
    // the product of primes whose exponent has bit j set.
    let mut y = Bf { m: BigUint::one(), e: 0 };
    for bit in 0..s.depth() {
        let mut factor = BigUint::one();
        for (p, &e) in s.radicand_factors() {
            if (e >> bit) & 1 == 1 {
                factor *= p;
            }
        }
        if !factor.is_one() {
            y = y.mul(&Bf::from_int(&factor, width, dir), width, dir);
        }
        y = y.sqrt(width, dir);
    }
    coeff.mul(&y, width, dir)
}

fn enclose_simple(s: &SimpleSurd, width: u64) -> Enclosure {
    if let Some(q) = s.as_rational() {
        return Enclosure::point(q);
    }
    let lo = simple_magnitude(s, width, Dir::Down).to_rat();
    let hi = simple_magnitude(s, width, Dir::Up).to_rat();
    let e = Enclosure { lo, hi };
    match s.sign() {
        Sign::Plus => e,
        Sign::Minus => e.neg(),
    }
}

fn enclose_quad(q: &QuadElem, width: u64) -> Enclosure {
    let mut acc = Enclosure::point(Rat::zero());
    for (radicand, coeff) in q.terms() {
        let term = if radicand.is_one() {
            Enclosure::point(coeff.clone())
        } else {
            let root = |dir| Bf::from_int(radicand, width, dir).sqrt(width, dir);
            let c = Bf::from_rat(&coeff.abs(), width, Dir::Down);
            let lo = c.mul(&root(Dir::Down), width, Dir::Down).to_rat();
            let c = Bf::from_rat(&coeff.abs(), width, Dir::Up);
            let hi = c.mul(&root(Dir::Up), width, Dir::Up).to_rat();
            let e = Enclosure { lo, hi };
            if coeff.is_negative() {
                e.neg()
            } else {
                e
            }
        };
        acc = acc.add(term);
    }
    acc
}

/// Encloses `v` using `width`-bit working precision.
pub fn enclose(v: &CanonicalValue, width: u64) -> Enclosure {
    match v {
        CanonicalValue::Simple(s) => enclose_simple(s, width),
        CanonicalValue::Quad(q) => enclose_quad(q, width),
    }
}

const START_WIDTH: u64 = 64;

/// Exact sign of a canonical value.
pub fn signum(v: &CanonicalValue) -> Ordering {
    match v {
        CanonicalValue::Simple(s) => match s.sign() {
            Sign::Plus => Ordering::Greater,
            Sign::Minus => Ordering::Less,
        },
        CanonicalValue::Quad(q) if q.is_zero() => Ordering::Equal,
        CanonicalValue::Quad(_) => {
            let mut width = START_WIDTH;
            loop {
                if let Some(s) = enclose(v, width).strict_sign() {
                    return s;
                }
                width *= 2;
            }
        }
    }
}

/// Exact ordering of two canonical values. Equality is decided structurally;
/// distinct values are then separated by tightening enclosures.
pub fn compare(x: &CanonicalValue, y: &CanonicalValue) -> Ordering {
    if x == y {
        return Ordering::Equal;
    }
    let mut width = START_WIDTH;
    loop {
        let a = enclose(x, width);
        let b = enclose(y, width);
        if a.hi < b.lo {
            return Ordering::Less;
        }
        if b.hi < a.lo {
            return Ordering::Greater;
        }
        width *= 2;
    }
}

/// A decimal number `±0.d₁d₂…d_k × 10^(exponent+1)`, i.e. `d₁` sits at the
/// `10^exponent` place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decimal {
    pub negative: bool,
    /// Significant digits, most significant first, no trailing zeros
    /// (empty for zero).
    pub digits: String,
    pub exponent: i64,
}

impl Decimal {
    pub fn zero() -> Self {
        Decimal { negative: false, digits: String::new(), exponent: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn to_f64(&self) -> f64 {
        self.to_string().parse().unwrap_or(f64::NAN)
    }

    /// The exact rational this decimal denotes.
    pub fn to_rat(&self) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        let m: BigInt = self.digits.parse().expect("digit string");
        let shift = self.exponent + 1 - self.digits.len() as i64;
        let ten = BigInt::from(10u32);
        let v = if shift >= 0 {
            Rat::from_integer(m * num_traits::pow(ten, shift as usize))
        } else {
            Rat::new(m, num_traits::pow(ten, (-shift) as usize))
        };
        if self.negative {
            -v
        } else {
            v
        }
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if self.negative {
            f.write_str("-")?;
        }
        let d = &self.digits;
        let n = d.len() as i64;
        let e = self.exponent;
        if !(-7..21).contains(&e) {
            let (head, tail) = d.split_at(1);
            if tail.is_empty() {
                return write!(f, "{head}e{e}");
            }
            return write!(f, "{head}.{tail}e{e}");
        }
        if e < 0 {
            write!(f, "0.{}{d}", "0".repeat((-e - 1) as usize))
        } else if e + 1 >= n {
            write!(f, "{d}{}", "0".repeat((e + 1 - n) as usize))
        } else {
            let (int, frac) = d.split_at((e + 1) as usize);
            write!(f, "{int}.{frac}")
        }
    }
}

fn floor_log10(q: &Rat) -> i64 {
    // q > 0
    let ten = Rat::from_integer(BigInt::from(10u32));
    let bits = q.numer().bits() as i64 - q.denom().bits() as i64;
    let mut e = (bits as f64 * std::f64::consts::LOG10_2).floor() as i64;
    let pow = |k: i64| -> Rat {
        if k >= 0 {
            num_traits::pow(ten.clone(), k as usize)
        } else {
            num_traits::pow(ten.clone(), (-k) as usize).recip()
        }
    };
    while pow(e) > *q {
        e -= 1;
    }
    while pow(e + 1) <= *q {
        e += 1;
    }
    e
}

/// Rounds `q` to `digits` significant digits, ties away from zero.
pub fn round_rational(q: &Rat, digits: u32) -> Decimal {
    if q.is_zero() {
        return Decimal::zero();
    }
    let a = q.abs();
    let mut e = floor_log10(&a);
    let shift = digits as i64 - 1 - e;
    let ten = BigInt::from(10u32);
    let scaled = if shift >= 0 {
        &a * Rat::from_integer(num_traits::pow(ten.clone(), shift as usize))
    } else {
        &a / Rat::from_integer(num_traits::pow(ten.clone(), (-shift) as usize))
    };
    let half = Rat::new(BigInt::one(), BigInt::from(2u32));
    let mut m = (scaled + half).floor().to_integer();
    if m == num_traits::pow(ten.clone(), digits as usize) {
        m /= &ten;
        e += 1;
    }
    let mut s = m.to_string();
    while s.ends_with('0') {
        s.pop();
    }
    Decimal { negative: q.is_negative(), digits: s, exponent: e }
}

/// `v` rounded to `digits` significant decimal digits.
pub fn to_decimal(v: &CanonicalValue, digits: u32) -> Decimal {
    let digits = digits.max(1);
    if let Some(q) = v.as_rational() {
        return round_rational(&q, digits);
    }
    // irrational: no rounding boundary is ever hit exactly
    let mut width = (digits as u64 * 4).max(START_WIDTH) + 32;
    loop {
        let e = enclose(v, width);
        if e.strict_sign().is_some() {
            let lo = round_rational(&e.lo, digits);
            if lo == round_rational(&e.hi, digits) {
                return lo;
            }
        }
        width *= 2;
    }
}

/// Fast double-precision estimate.
pub fn to_f64(v: &CanonicalValue) -> f64 {
    let e = enclose(v, 80);
    let mid = (e.lo + e.hi) / Rat::from_integer(BigInt::from(2u32));
    mid.to_f64().unwrap_or(f64::NAN)
}
