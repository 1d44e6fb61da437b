use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::sync::Lazy;

const TRIAL_LIMIT: u32 = 1_000_000;

static SMALL_PRIMES: Lazy<Vec<u32>> = Lazy::new(|| {
    let limit = TRIAL_LIMIT as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::with_capacity(80_000);
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i as u32);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
});

/// Prime factorization `n = Π p^e`. Trial division by primes below 10⁶, then
/// Pollard–Brent rho on whatever cofactor remains.
pub fn factorize(n: &BigUint) -> BTreeMap<BigUint, u64> {
    let mut out = BTreeMap::new();
    if n <= &BigUint::one() {
        return out;
    }
    let mut rest = n.clone();
    for &p in SMALL_PRIMES.iter() {
        if let Some(small) = rest.to_u64() {
            if (p as u64) * (p as u64) > small {
                break;
            }
            let mut small = small;
            let mut e = 0;
            while small % p as u64 == 0 {
                small /= p as u64;
                e += 1;
            }
            if e > 0 {
                out.insert(BigUint::from(p), e);
                rest = BigUint::from(small);
            }
        } else {
            let mut e = 0;
            loop {
                let (q, r) = rest.div_rem(&BigUint::from(p));
                if !r.is_zero() {
                    break;
                }
                rest = q;
                e += 1;
            }
            if e > 0 {
                out.insert(BigUint::from(p), e);
            }
        }
    }
    if !rest.is_one() {
        split_into(rest, &mut out);
    }
    out
}

fn split_into(n: BigUint, out: &mut BTreeMap<BigUint, u64>) {
    if n.is_one() {
        return;
    }
    let limit = BigUint::from(TRIAL_LIMIT);
    if n < &limit * &limit || is_probable_prime(&n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let d = pollard_brent(&n);
    let other = &n / &d;
    split_into(d, out);
    split_into(other, out);
}

/// Miller–Rabin with the first twelve prime bases; deterministic below
/// 3.3·10²⁴ and overwhelmingly reliable above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for b in BASES {
        let b = BigUint::from(b);
        if n == &b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'bases: for b in BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Returns a nontrivial divisor of the composite `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BLOCK: u64 = 128;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BLOCK.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                g = q.gcd(n);
                k += BLOCK;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}
