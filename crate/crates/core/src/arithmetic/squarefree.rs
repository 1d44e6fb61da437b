use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::factor::factorize;
use super::Rat;
use crate::error::{Error, Result};

/// `q = square_part² · (num / den)` with `num`, `den` coprime and squarefree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomp {
    pub square_part: Rat,
    pub squarefree_num: BigUint,
    pub squarefree_den: BigUint,
}

impl SquarefreeDecomp {
    pub fn is_square(&self) -> bool {
        self.squarefree_num.is_one() && self.squarefree_den.is_one()
    }

    pub fn recompose(&self) -> Rat {
        let sf = Rat::new(
            BigInt::from(self.squarefree_num.clone()),
            BigInt::from(self.squarefree_den.clone()),
        );
        &self.square_part * &self.square_part * sf
    }
}

fn split_square(n: &BigUint) -> (BigUint, BigUint) {
    let mut root = BigUint::one();
    let mut free = BigUint::one();
    for (p, e) in factorize(n) {
        root *= num_traits::pow(p.clone(), (e / 2) as usize);
        if e % 2 == 1 {
            free *= p;
        }
    }
    (root, free)
}

pub fn squarefree_decompose(q: &Rat) -> Result<SquarefreeDecomp> {
    if !q.is_positive() {
        return Err(Error::domain("squarefree decomposition needs a positive rational"));
    }
    let (num_root, num_free) = split_square(q.numer().magnitude());
    let (den_root, den_free) = split_square(q.denom().magnitude());
    Ok(SquarefreeDecomp {
        square_part: Rat::new(num_root.into(), den_root.into()),
        squarefree_num: num_free,
        squarefree_den: den_free,
    })
}

fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Exact rational square root, if there is one.
pub fn rat_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Rat::zero());
    }
    let num = exact_sqrt(q.numer().magnitude())?;
    let den = exact_sqrt(q.denom().magnitude())?;
    Some(Rat::new(num.into(), den.into()))
}

pub fn is_perfect_square(q: &Rat) -> bool {
    rat_sqrt(q).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn twelve() {
        let d = squarefree_decompose(&r(12, 1)).unwrap();
        assert_eq!(d.square_part, r(2, 1));
        assert_eq!((d.squarefree_num, d.squarefree_den), (3u32.into(), 1u32.into()));
    }

    #[test]
    fn three_quarters() {
        let d = squarefree_decompose(&r(3, 4)).unwrap();
        assert_eq!(d.square_part, r(1, 2));
        assert_eq!((d.squarefree_num, d.squarefree_den), (3u32.into(), 1u32.into()));
    }

    #[test]
    fn one_is_its_own_square() {
        let d = squarefree_decompose(&r(1, 1)).unwrap();
        assert_eq!(d.square_part, r(1, 1));
        assert!(d.is_square());
    }

    #[test]
    fn nonpositive_is_domain_error() {
        assert!(matches!(squarefree_decompose(&r(0, 1)), Err(Error::Domain(_))));
        assert!(matches!(squarefree_decompose(&r(-2, 3)), Err(Error::Domain(_))));
    }

    #[test]
    fn perfect_squares() {
        assert!(is_perfect_square(&r(9, 4)));
        assert!(!is_perfect_square(&r(10, 1)));
        assert!(is_perfect_square(&r(0, 1)));
        assert!(!is_perfect_square(&r(-4, 1)));
        assert_eq!(rat_sqrt(&r(9, 4)), Some(r(3, 2)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn decomposition_recomposes(n in 1i64..1_000_000, d in 1i64..1_000_000) {
            let q = r(n, d);
            let dec = squarefree_decompose(&q).unwrap();
            prop_assert_eq!(dec.recompose(), q.clone());
            prop_assert_eq!(is_perfect_square(&q), dec.is_square());
        }

        #[test]
        fn field_axioms(a in -500i64..500, b in 1i64..50, c in -500i64..500, d in 1i64..50,
                        e in -500i64..500, f in 1i64..50) {
            let (x, y, z) = (r(a, b), r(c, d), r(e, f));
            prop_assert_eq!((&x + &y) + &z, &x + (&y + &z));
            prop_assert_eq!((&x * &y) * &z, &x * (&y * &z));
            prop_assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
            prop_assert_eq!(&x + -&x, Rat::zero());
            if !x.is_zero() {
                prop_assert_eq!(&x * x.recip(), Rat::one());
            }
        }
    }
}
