use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arithmetic::Rat;
use crate::error::{Error, Result};

/// Element of a real multi-quadratic field: `Σ coeff_r · √r` over distinct
/// squarefree integers `r` (`r = 1` is the rational part).
///
/// The square roots of distinct squarefree integers are linearly independent
/// over Q, so this sparse map is canonical and structural equality is value
/// equality. Zero is the empty map.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadElem {
    terms: BTreeMap<BigUint, Rat>,
}

impl QuadElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(q: Rat) -> Self {
        Self::term(q, BigUint::one())
    }

    /// `coeff · √radicand`; `radicand` must be squarefree.
    pub fn term(coeff: Rat, radicand: BigUint) -> Self {
        debug_assert!(!radicand.is_zero());
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(radicand, coeff);
        }
        QuadElem { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// `(radicand, coeff)` pairs in ascending radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, radicand: &BigUint) -> Option<&Rat> {
        self.terms.get(radicand)
    }

    pub fn as_rational(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&BigUint::one()).cloned(),
            _ => None,
        }
    }

    /// The coarsest set of pairwise-coprime squarefree integers `f > 1` such
    /// that every radicand is a product of a subset of them.
    pub fn radicand_basis(&self) -> Vec<BigUint> {
        coprime_basis(self.terms.keys())
    }

    pub fn neg(&self) -> Self {
        QuadElem { terms: self.terms.iter().map(|(r, c)| (r.clone(), -c)).collect() }
    }

    pub fn scale(&self, q: &Rat) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        QuadElem { terms: self.terms.iter().map(|(r, c)| (r.clone(), c * q)).collect() }
    }

    fn accumulate(terms: &mut BTreeMap<BigUint, Rat>, radicand: BigUint, coeff: Rat) {
        let slot = terms.entry(radicand).or_insert_with(Rat::zero);
        *slot += coeff;
        if slot.is_zero() {
            terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (r, c) in &other.terms {
            Self::accumulate(&mut terms, r.clone(), c.clone());
        }
        QuadElem { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (r, a) in &self.terms {
            for (s, b) in &other.terms {
                // √r·√s = g·√(r/g · s/g) with g = gcd(r, s)
                let g = r.gcd(s);
                let radicand = (r / &g) * (s / &g);
                let coeff = a * b * Rat::from_integer(BigInt::from(g));
                Self::accumulate(&mut terms, radicand, coeff);
            }
        }
        QuadElem { terms }
    }

    /// Applies the automorphism `√f ↦ −√f` for a basis element `f`.
    fn conjugate(&self, f: &BigUint) -> Self {
        QuadElem {
            terms: self
                .terms
                .iter()
                .map(|(r, c)| {
                    if (r % f).is_zero() {
                        (r.clone(), -c)
                    } else {
                        (r.clone(), c.clone())
                    }
                })
                .collect(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Multiplying by the conjugate over each basis element removes that
        // element from the denominator; after all of them it is rational.
        let mut num = QuadElem::rational(Rat::one());
        let mut den = self.clone();
        for f in self.radicand_basis() {
            let c = den.conjugate(&f);
            num = num.mul(&c);
            den = den.mul(&c);
        }
        let den = den.as_rational().expect("conjugate product is rational");
        Ok(num.scale(&den.recip()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }
}

pub(crate) fn coprime_basis<'a>(radicands: impl Iterator<Item = &'a BigUint>) -> Vec<BigUint> {
    let mut basis: Vec<BigUint> = Vec::new();
    for r in radicands {
        let mut pending = vec![r.clone()];
        while let Some(x) = pending.pop() {
            if x.is_one() || basis.contains(&x) {
                continue;
            }
            match basis.iter().position(|b| !b.gcd(&x).is_one()) {
                Some(i) => {
                    let b = basis.swap_remove(i);
                    let g = b.gcd(&x);
                    pending.push(&b / &g);
                    pending.push(&x / &g);
                    pending.push(g);
                }
                None => basis.push(x),
            }
        }
    }
    basis.sort();
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    fn t(n: i64, d: i64, rad: u32) -> QuadElem {
        QuadElem::term(r(n, d), BigUint::from(rad))
    }

    #[test]
    fn conjugate_product() {
        let a = t(1, 1, 1).add(&t(1, 1, 2));
        let b = t(1, 1, 1).sub(&t(1, 1, 2));
        assert_eq!(a.mul(&b), QuadElem::rational(r(-1, 1)));
    }

    #[test]
    fn sqrt2_sqrt3_is_sqrt6() {
        assert_eq!(t(1, 1, 2).mul(&t(1, 1, 3)), t(1, 1, 6));
        assert_eq!(t(1, 1, 6).mul(&t(1, 1, 10)), t(2, 1, 15));
    }

    #[test]
    fn denested_square() {
        // ((√6 + √2)/2)² = 2 + √3
        let x = t(1, 2, 6).add(&t(1, 2, 2));
        assert_eq!(x.mul(&x), t(2, 1, 1).add(&t(1, 1, 3)));
    }

    #[test]
    fn inverse_in_three_generators() {
        let x = t(1, 1, 1).add(&t(1, 1, 2)).add(&t(1, 1, 3)).add(&t(2, 3, 30));
        let inv = x.recip().unwrap();
        assert_eq!(x.mul(&inv), QuadElem::rational(r(1, 1)));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(QuadElem::zero().recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn basis_is_coprime_and_minimal() {
        let x = t(1, 1, 6).add(&t(1, 1, 10)).add(&t(1, 1, 1));
        let basis = x.radicand_basis();
        assert_eq!(basis, vec![BigUint::from(2u32), BigUint::from(3u32), BigUint::from(5u32)]);
        let y = t(1, 1, 6).add(&t(1, 1, 1));
        assert_eq!(y.radicand_basis(), vec![BigUint::from(6u32)]);
    }
}
