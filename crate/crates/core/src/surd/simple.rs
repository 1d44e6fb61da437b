use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::Sign;
use crate::arithmetic::{factorize, Rat};
use crate::error::{Error, Result};

/// Deepest radical nesting accepted. Radicand exponents are stored below
/// `2^depth`, so this keeps them inside a `u64`.
pub const MAX_DEPTH: u32 = 48;

/// `sign · coeff · radicand^(1/2^depth)`, with the radicand kept factored.
///
/// Canonical form: `coeff > 0`; every prime exponent of the radicand lies in
/// `1 .. 2^depth`; and the depth is minimal, i.e. at depth ≥ 1 the radicand
/// is never a perfect square. A rational is a depth-0 surd with radicand 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleSurd {
    sign: Sign,
    coeff: Rat,
    radicand: BTreeMap<BigUint, u64>,
    depth: u32,
}

impl SimpleSurd {
    /// The nonzero rational `q`.
    pub fn rational(q: Rat) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::domain("a simple surd is never zero"));
        }
        let sign = if q.is_negative() { Sign::Minus } else { Sign::Plus };
        Ok(SimpleSurd { sign, coeff: q.abs(), radicand: BTreeMap::new(), depth: 0 })
    }

    /// `q^(1/2^depth)` for `q > 0`.
    pub fn root_of(q: &Rat, depth: u32) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::NegativeRadicand);
        }
        check_depth(depth)?;
        let mut exps = BTreeMap::new();
        add_rational_exponents(&mut exps, q, 1);
        Ok(Self::build(Sign::Plus, Rat::one(), exps, depth))
    }

    /// Canonicalizes `sign · coeff · Π p^(e_p / 2^depth)`; exponents may be
    /// any integers.
    pub(crate) fn build(sign: Sign, coeff: Rat, exps: BTreeMap<BigUint, i128>, depth: u32) -> Self {
        let modulus = 1i128 << depth;
        let mut coeff = coeff;
        let mut radicand = BTreeMap::new();
        for (p, e) in exps {
            let (q, r) = (e.div_euclid(modulus), e.rem_euclid(modulus));
            if q != 0 {
                let power = BigInt::from(num_traits::pow(p.clone(), q.unsigned_abs() as usize));
                if q > 0 {
                    coeff *= Rat::from_integer(power);
                } else {
                    coeff /= Rat::from_integer(power);
                }
            }
            if r != 0 {
                radicand.insert(p, r as u64);
            }
        }
        let mut depth = depth;
        while depth > 0 && radicand.values().all(|e| e % 2 == 0) {
            for e in radicand.values_mut() {
                *e /= 2;
            }
            depth -= 1;
        }
        if radicand.is_empty() {
            depth = 0;
        }
        SimpleSurd { sign, coeff, radicand, depth }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn coeff(&self) -> &Rat {
        &self.coeff
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Prime factorization of the (integer) radicand.
    pub fn radicand_factors(&self) -> &BTreeMap<BigUint, u64> {
        &self.radicand
    }

    pub fn radicand(&self) -> BigUint {
        self.radicand
            .iter()
            .map(|(p, &e)| num_traits::pow(p.clone(), e as usize))
            .product()
    }

    pub fn is_rational(&self) -> bool {
        self.depth == 0
    }

    /// Signed value when rational.
    pub fn as_rational(&self) -> Option<Rat> {
        self.is_rational().then(|| self.sign.apply(self.coeff.clone()))
    }

    pub fn neg(&self) -> Self {
        SimpleSurd { sign: self.sign.flip(), ..self.clone() }
    }

    pub fn abs(&self) -> Self {
        SimpleSurd { sign: Sign::Plus, ..self.clone() }
    }

    pub fn scale(&self, q: &Rat) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::domain("a simple surd is never zero"));
        }
        let sign = if q.is_negative() { self.sign.flip() } else { self.sign };
        Ok(SimpleSurd { sign, coeff: &self.coeff * q.abs(), ..self.clone() })
    }

    fn exponents_at(&self, depth: u32) -> BTreeMap<BigUint, i128> {
        let shift = depth - self.depth;
        self.radicand.iter().map(|(p, &e)| (p.clone(), (e as i128) << shift)).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let depth = self.depth.max(other.depth);
        let mut exps = self.exponents_at(depth);
        for (p, e) in other.exponents_at(depth) {
            *exps.entry(p).or_insert(0) += e;
        }
        let sign = if self.sign == other.sign { Sign::Plus } else { Sign::Minus };
        Self::build(sign, &self.coeff * &other.coeff, exps, depth)
    }

    pub fn recip(&self) -> Self {
        let exps = self.exponents_at(self.depth).into_iter().map(|(p, e)| (p, -e)).collect();
        Self::build(self.sign, self.coeff.recip(), exps, self.depth)
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.recip())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = SimpleSurd::rational(Rat::one()).expect("one is nonzero");
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Principal square root; the depth grows by one before re-minimizing.
    pub fn sqrt(&self) -> Result<Self> {
        if self.sign == Sign::Minus {
            return Err(Error::NegativeRadicand);
        }
        let depth = self.depth + 1;
        check_depth(depth)?;
        let mut exps: BTreeMap<BigUint, i128> =
            self.radicand.iter().map(|(p, &e)| (p.clone(), e as i128)).collect();
        // the coefficient moves under the new radical as coeff^(2^old_depth)
        add_rational_exponents(&mut exps, &self.coeff, 1i128 << self.depth);
        Ok(Self::build(Sign::Plus, Rat::one(), exps, depth))
    }
}

fn check_depth(depth: u32) -> Result<()> {
    if depth > MAX_DEPTH {
        return Err(Error::not_representable(format!(
            "radical nesting deeper than {MAX_DEPTH} levels"
        )));
    }
    Ok(())
}

fn add_rational_exponents(exps: &mut BTreeMap<BigUint, i128>, q: &Rat, weight: i128) {
    for (p, e) in factorize(q.numer().magnitude()) {
        *exps.entry(p).or_insert(0) += e as i128 * weight;
    }
    for (p, e) in factorize(q.denom().magnitude()) {
        *exps.entry(p).or_insert(0) -= e as i128 * weight;
    }
}

impl fmt::Display for SimpleSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::cli::printer::print_expr(
            &super::CanonicalValue::Simple(self.clone()).to_expr(),
        ))
    }
}

#[cfg(test)] fn depth_is_minimal(s: &SimpleSurd) -> bool {
    s.depth == 0 || s.radicand.values().fold(0u64, |g, &e| num_integer::gcd(g, e)) % 2 == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    fn root(n: i64, d: i64, depth: u32) -> SimpleSurd {
        SimpleSurd::root_of(&r(n, d), depth).unwrap()
    }

    #[test]
    fn sqrt_two() {
        let s = root(2, 1, 1);
        assert_eq!(s.depth(), 1);
        assert_eq!(s.radicand(), BigUint::from(2u32));
        assert_eq!(s.coeff(), &r(1, 1));
    }

    #[test]
    fn square_parts_move_to_the_coefficient() {
        let s = root(12, 1, 1);
        assert_eq!(s.coeff(), &r(2, 1));
        assert_eq!(s.radicand(), BigUint::from(3u32));
        let s = root(1, 2, 1);
        assert_eq!(s.coeff(), &r(1, 2));
        assert_eq!(s.radicand(), BigUint::from(2u32));
    }

    #[test]
    fn depth_is_minimized() {
        let s = root(4, 1, 2);
        assert_eq!((s.depth(), s.radicand()), (1, BigUint::from(2u32)));
        let s = root(81, 16, 2);
        assert_eq!(s.as_rational(), Some(r(3, 2)));
        assert!(depth_is_minimal(&root(12, 1, 2)));
    }

    #[test]
    fn two_to_three_quarters() {
        let s = root(2, 1, 1).scale(&r(2, 1)).unwrap().sqrt().unwrap();
        assert_eq!((s.depth(), s.radicand(), s.coeff().clone()), (2, BigUint::from(8u32), r(1, 1)));
    }

    #[test]
    fn products_close() {
        let a = root(8, 1, 2);
        assert_eq!(a.mul(&a), root(8, 1, 1));
        assert_eq!(a.mul(&a).mul(&a).mul(&a).as_rational(), Some(r(8, 1)));
        let q = root(2, 1, 1).div(&root(2, 1, 2));
        assert_eq!(q, root(2, 1, 2));
    }

    #[test]
    fn negative_sqrt_fails() {
        assert_eq!(root(2, 1, 1).neg().sqrt(), Err(Error::NegativeRadicand));
    }

    #[test]
    fn too_deep() {
        assert!(matches!(SimpleSurd::root_of(&r(2, 1), MAX_DEPTH + 1), Err(Error::NotRepresentable(_))));
    }
}
