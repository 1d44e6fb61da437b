//! Test-only oracles and generators. Nothing here calls into the library's
//! own approximation or commensurability code.
#![allow(dead_code)]

use bigdecimal::BigDecimal;
use bookx::{Rat, SurdExpr};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// Evaluates an expression tree in decimal arithmetic at the crate's default
/// working precision of 100 significant digits. `None` on division by zero
/// or the root of a negative number.
pub fn eval(e: &SurdExpr) -> Option<BigDecimal> {
    Some(match e {
        SurdExpr::Const(q) => {
            BigDecimal::new(q.numer().clone(), 0) / BigDecimal::new(q.denom().clone(), 0)
        }
        SurdExpr::Add(l, r) => eval(l)? + eval(r)?,
        SurdExpr::Sub(l, r) => eval(l)? - eval(r)?,
        SurdExpr::Mul(l, r) => eval(l)? * eval(r)?,
        SurdExpr::Div(l, r) => {
            let d = eval(r)?;
            if d.is_zero() {
                return None;
            }
            eval(l)? / d
        }
        SurdExpr::Sqrt(x) => eval(x)?.sqrt()?,
    })
}

pub fn decimal_to_rat(d: &BigDecimal) -> Rat {
    let (digits, scale) = d.as_bigint_and_exponent();
    let ten = BigInt::from(10);
    if scale >= 0 {
        Rat::new(digits, num_traits::pow(ten, scale as usize))
    } else {
        Rat::from_integer(digits * num_traits::pow(ten, (-scale) as usize))
    }
}

/// Largest convergent denominator the rationality detector will accept.
pub const CF_MAX_DENOMINATOR: u64 = 100_000_000;
/// A convergent must match to this many decimal digits, relative to the value.
pub const CF_MATCH_DIGITS: usize = 40;

/// Continued-fraction rationality detector: `x` is judged rational when some
/// convergent `p/q` with `q ≤ 10^8` satisfies `|x − p/q| < 10^-40 · |x|`.
///
/// With `x` known to 50 significant digits, a true ratio with a denominator
/// below `10^8` is matched to about 50 digits, while for an irrational `x`
/// every such convergent is off by roughly `1/(a·q²) ≥ 10^-16/a`, so a
/// false positive needs a partial quotient `a` above `10^24`.
pub fn cf_is_rational(x: &Rat) -> bool {
    let x = x.abs();
    if x.is_zero() {
        return true;
    }
    let tol = &x / Rat::from_integer(num_traits::pow(BigInt::from(10), CF_MATCH_DIGITS));
    let max_q = BigInt::from(CF_MAX_DENOMINATOR);
    let (mut h1, mut h2) = (BigInt::one(), BigInt::zero());
    let (mut k1, mut k2) = (BigInt::zero(), BigInt::one());
    let mut rest = x.clone();
    loop {
        let a = rest.floor().to_integer();
        let h = &a * &h1 + &h2;
        let k = &a * &k1 + &k2;
        if k > max_q {
            return false;
        }
        if (&x - Rat::new(h.clone(), k.clone())).abs() < tol {
            return true;
        }
        let frac = &rest - Rat::from_integer(a);
        if frac.is_zero() {
            return true;
        }
        rest = frac.recip();
        (h2, h1) = (h1, h);
        (k2, k1) = (k1, k);
    }
}

/// Ratio `x / y` rounded to 50 significant digits, then run through the
/// detector.
pub fn oracle_commensurable(x: &SurdExpr, y: &SurdExpr) -> bool {
    let ratio = (eval(x).unwrap() / eval(y).unwrap()).with_prec(50);
    cf_is_rational(&decimal_to_rat(&ratio))
}

pub fn c(n: i64) -> SurdExpr {
    SurdExpr::int(n)
}

pub fn frac(n: i64, d: i64) -> SurdExpr {
    c(n).div(c(d))
}

/// A random tree in the input grammar: nonnegative integer and decimal
/// literals, the four operators and `sqrt`. Divisors are never the literal 0.
pub fn random_tree(rng: &mut impl Rng, depth: u32) -> SurdExpr {
    if depth == 0 || rng.gen_ratio(1, 4) {
        return match rng.gen_range(0..3) {
            0 => c(rng.gen_range(0..100)),
            1 => SurdExpr::rat(Rat::new(rng.gen_range(1..1000).into(), 8.into())),
            _ => SurdExpr::rat(Rat::new(rng.gen_range(1..100).into(), 10.into())),
        };
    }
    let l = random_tree(rng, depth - 1);
    match rng.gen_range(0..5) {
        0 => l.add(random_tree(rng, depth - 1)),
        1 => l.sub(random_tree(rng, depth - 1)),
        2 => l.mul(random_tree(rng, depth - 1)),
        3 => l.div(c(rng.gen_range(1..20))),
        _ => l.sqrt(),
    }
}

/// A positive quadratic-field term: a rational, a rational multiple of a
/// square root, or the square root of `x + y + 2√(xy)`.
pub fn quad_atom(rng: &mut impl Rng) -> SurdExpr {
    match rng.gen_range(0..3) {
        0 => frac(rng.gen_range(1..12), rng.gen_range(1..6)),
        1 => frac(rng.gen_range(1..12), rng.gen_range(1..6)).mul(c(rng.gen_range(2..40)).sqrt()),
        _ => {
            let x = rng.gen_range(1..15);
            let y = rng.gen_range(1..15);
            c(x + y).add(c(2).mul(c(x * y).sqrt())).sqrt()
        }
    }
}

/// A positive value that normalizes: a sum of quadratic terms, a product or
/// quotient of two such sums, or a rational multiple of a fourth or eighth
/// root.
pub fn random_value(rng: &mut impl Rng) -> SurdExpr {
    match rng.gen_range(0..5) {
        0 | 1 => {
            let mut e = quad_atom(rng);
            for _ in 0..rng.gen_range(0..3) {
                e = e.add(quad_atom(rng));
            }
            e
        }
        2 => quad_atom(rng).add(quad_atom(rng)).mul(quad_atom(rng)),
        3 => quad_atom(rng).add(quad_atom(rng)).div(quad_atom(rng).add(quad_atom(rng))),
        _ => {
            let mut e = c(rng.gen_range(2..30));
            for _ in 0..rng.gen_range(2..=3) {
                e = e.sqrt();
            }
            frac(rng.gen_range(1..10), rng.gen_range(1..10)).mul(e)
        }
    }
}

/// Two positive values, commensurable by construction about half the time.
pub fn random_pair(rng: &mut impl Rng) -> (SurdExpr, SurdExpr) {
    let x = random_value(rng);
    match rng.gen_range(0..3) {
        0 => {
            let y = frac(rng.gen_range(1..20), rng.gen_range(1..20)).mul(x.clone());
            (x, y)
        }
        1 => (x, random_value(rng)),
        _ => {
            // same radicand hidden behind different square factors
            let k = rng.gen_range(2..30);
            let (m1, m2): (i64, i64) = (rng.gen_range(1..6), rng.gen_range(1..6));
            let deep = rng.gen_bool(0.5);
            let line = |m: i64| {
                if deep {
                    c(k * m.pow(4)).sqrt().sqrt()
                } else {
                    c(k * m * m).sqrt()
                }
            };
            let (a, b) = (rng.gen_range(1..9), rng.gen_range(1..9));
            (c(a).mul(line(m1)), c(b).mul(line(m2)))
        }
    }
}

pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_cli(args: &[&str]) -> CliOutput {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_bookx"))
        .args(args)
        .output()
        .expect("binary runs");
    CliOutput {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub const SCHEMAS: [&str; 6] = ["classify", "commensurable", "sqrt", "ranks", "binomial", "verify"];

pub fn schema(name: &str) -> serde_json::Value {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("schema").join(format!("{name}.json"));
    serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

/// Validates one line of JSON output against the named schema.
pub fn check_schema(name: &str, json: &str) -> Result<serde_json::Value, String> {
    let instance: serde_json::Value = serde_json::from_str(json).map_err(|e| format!("{json}: {e}"))?;
    let validator = jsonschema::validator_for(&schema(name)).map_err(|e| e.to_string())?;
    let errors: Vec<String> = validator.iter_errors(&instance).map(|e| e.to_string()).collect();
    if errors.is_empty() {
        Ok(instance)
    } else {
        Err(format!("{json}: {}", errors.join("; ")))
    }
}
