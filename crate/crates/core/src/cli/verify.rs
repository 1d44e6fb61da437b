//! Randomized checks of the four propositions, reproducible from a seed.
//!
//! Trial `i` draws its instance from a ChaCha stream selected by `(seed, i)`
//! alone, so reports do not depend on execution order.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arithmetic::{is_perfect_square, Rat};
use crate::error::{Error, Result};
use crate::ranks::{rank, s_recurrence_check, x115_sequence};
use crate::surd::{commensurable_length, quad_arith, sqrt, CanonicalValue, Op, Sign};
use crate::taxonomy::{classify, is_medial, sqrt_first_with, x17_split, BinomialPair, RootMethod, TaxonomyClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Proposition {
    X17,
    X21,
    X54,
    X115,
}

impl Proposition {
    pub fn id(&self) -> &'static str {
        match self {
            Proposition::X17 => "x17",
            Proposition::X21 => "x21",
            Proposition::X54 => "x54",
            Proposition::X115 => "x115",
        }
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Proposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "x17" => Ok(Proposition::X17),
            "x21" => Ok(Proposition::X21),
            "x54" => Ok(Proposition::X54),
            "x115" => Ok(Proposition::X115),
            _ => Err(Error::domain(format!("unknown proposition {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub proposition: Proposition,
    pub attempted: u32,
    pub passed: u32,
    pub seed: u64,
    /// First failing instance, serialized as expressions.
    pub counterexample: Option<String>,
}

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn rat(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rat {
    Rat::new(rng.gen_range(1..=max_num).into(), rng.gen_range(1..=max_den).into())
}

/// A fraction strictly between 0 and 1.
fn proper_fraction(rng: &mut impl Rng) -> Rat {
    let den = rng.gen_range(2..=12i64);
    Rat::new(rng.gen_range(1..den).into(), den.into())
}

fn nonsquare(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rat {
    loop {
        let q = rat(rng, max_num, max_den);
        if !is_perfect_square(&q) {
            return q;
        }
    }
}

/// `(a, b², truth)` for the segment-splitting proposition; `truth` is the
/// class the instance was built to fall in.
pub fn x17_instance(rng: &mut impl Rng) -> (Rat, Rat, bool) {
    let a = rat(rng, 40, 6);
    let a2 = &a * &a;
    if rng.gen_bool(0.5) {
        // a² − b² = c² with c = a·t rational
        let c = &a * proper_fraction(rng);
        (a, &a2 - &c * &c, true)
    } else {
        loop {
            let t = proper_fraction(rng);
            if !is_perfect_square(&(Rat::one() - &t)) {
                return (a, &a2 * t, false);
            }
        }
    }
}

/// Squares of two power-only lines commensurable in square only.
pub fn x21_instance(rng: &mut impl Rng) -> (Rat, Rat) {
    loop {
        let s = nonsquare(rng, 60, 8);
        let t = nonsquare(rng, 60, 8);
        if !is_perfect_square(&(&s / &t)) {
            return (s, t);
        }
    }
}

/// A first binomial (plus) or first apotome (minus): `a ± √B` with
/// `a² − B` a rational square.
pub fn first_species_instance(rng: &mut impl Rng, sign: Sign) -> BinomialPair {
    loop {
        let a = rat(rng, 50, 6);
        let c = &a * proper_fraction(rng);
        let b = &a * &a - &c * &c;
        if !is_perfect_square(&b) {
            return BinomialPair::from_squares(&a * &a, b, sign).expect("nonsquare lesser term");
        }
    }
}

/// `(b, depth)` for the rank ladder, depth in 1..=8.
pub fn x115_instance(rng: &mut impl Rng) -> (Rat, u32) {
    (nonsquare(rng, 12, 4), rng.gen_range(1..=8))
}

type Outcome = std::result::Result<(), String>;

fn check_x17(rng: &mut ChaCha8Rng) -> Outcome {
    let (a, bsq, _) = x17_instance(rng);
    let show = || format!("a = {a}, b^2 = {bsq}");
    let split = x17_split(&a, &bsq).map_err(|e| format!("{}: {e}", show()))?;
    let product = quad_arith(&split.x, &split.remainder, Op::Mul).map_err(|e| e.to_string())?;
    let quarter = CanonicalValue::from_rational(&bsq / Rat::from_integer(4.into()));
    if product != quarter || split.commensurable_parts != split.commensurable_side {
        return Err(format!("{}: x = {}", show(), split.x));
    }
    Ok(())
}

fn check_x21(rng: &mut ChaCha8Rng) -> Outcome {
    let (s, t) = x21_instance(rng);
    let show = || format!("sqrt(sqrt({s}) * sqrt({t}))");
    let rect = quad_arith(
        &CanonicalValue::sqrt_of(&s).map_err(|e| e.to_string())?,
        &CanonicalValue::sqrt_of(&t).map_err(|e| e.to_string())?,
        Op::Mul,
    )
    .map_err(|e| format!("{}: {e}", show()))?;
    let side = sqrt(&rect).map_err(|e| format!("{}: {e}", show()))?;
    match is_medial(&side) {
        Ok(true) => Ok(()),
        _ => Err(show()),
    }
}

fn check_x54(rng: &mut ChaCha8Rng) -> Outcome {
    let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
    let p = first_species_instance(rng, sign);
    let show = || p.to_string();
    let quad = sqrt_first_with(&p, RootMethod::Quadratic).map_err(|e| format!("{}: {e}", show()))?;
    let half = sqrt_first_with(&p, RootMethod::HalfDifference).map_err(|e| format!("{}: {e}", show()))?;
    let root = quad.value();
    let class_ok = match classify(&root) {
        Ok(TaxonomyClass::Binomial(_)) => sign == Sign::Plus,
        Ok(TaxonomyClass::Apotome(_)) => sign == Sign::Minus,
        _ => false,
    };
    if quad != half || root.square() != p.value() || !class_ok {
        return Err(format!("{}: root {root}", show()));
    }
    Ok(())
}

fn check_x115(rng: &mut ChaCha8Rng) -> Outcome {
    let (b, depth) = x115_instance(rng);
    let show = || format!("b = {b}, depth = {depth}");
    let seq = x115_sequence(&b, depth).map_err(|e| format!("{}: {e}", show()))?;
    let unit = seq.term(0);
    let base = CanonicalValue::from_rational(b.clone());
    for n in 1..=depth as usize {
        let u = seq.term(n);
        let ok = rank(&u) == Ok(n as u32)
            && commensurable_length(&u, &seq.term(n - 1)) == Ok(false)
            && commensurable_length(&u, &unit) == Ok(false)
            && quad_arith(&base, &seq.term(n - 1), Op::Mul).is_ok_and(|s| s == u.square());
        if !ok {
            return Err(format!("{}: u_{n} = {u}", show()));
        }
    }
    if s_recurrence_check(&b, depth) != Ok(true) {
        return Err(format!("{}: area recurrence", show()));
    }
    Ok(())
}

/// Runs trial `trial` of `prop`; `Err` carries the counterexample.
pub fn run_trial(prop: Proposition, seed: u64, trial: u64) -> Outcome {
    let mut rng = trial_rng(seed, trial);
    match prop {
        Proposition::X17 => check_x17(&mut rng),
        Proposition::X21 => check_x21(&mut rng),
        Proposition::X54 => check_x54(&mut rng),
        Proposition::X115 => check_x115(&mut rng),
    }
}

pub fn verify_proposition(prop: Proposition, trials: u32, seed: u64) -> Result<VerifyReport> {
    if trials == 0 {
        return Err(Error::domain("at least one trial is required"));
    }
    let mut passed = 0;
    let mut counterexample = None;
    for i in 0..trials {
        match run_trial(prop, seed, i as u64) {
            Ok(()) => passed += 1,
            Err(c) => {
                counterexample.get_or_insert(c);
            }
        }
    }
    Ok(VerifyReport { proposition: prop, attempted: trials, passed, seed, counterexample })
}
