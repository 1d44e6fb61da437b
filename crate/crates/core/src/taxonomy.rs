//! Book X classification: rational and power-only lines, the rank ladder of
//! simple surds, medials, and the six binomials and apotomes.

use std::fmt;

use num_traits::Signed;

use crate::arithmetic::{is_perfect_square, rat_sqrt, Rat};
use crate::error::{Error, Result};
use crate::surd::{commensurable_length, quad_arith, CanonicalValue, Op, Sign};

/// A line rational in power: its value is `√square`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerOnlyLine {
    square: Rat,
}

impl PowerOnlyLine {
    pub fn new(square: Rat) -> Result<Self> {
        if !square.is_positive() {
            return Err(Error::domain("a line's square must be positive"));
        }
        Ok(PowerOnlyLine { square })
    }

    pub fn square(&self) -> &Rat {
        &self.square
    }

    pub fn value(&self) -> CanonicalValue {
        CanonicalValue::sqrt_of(&self.square).expect("positive square")
    }

    pub fn is_rational_in_length(&self) -> bool {
        is_perfect_square(&self.square)
    }
}

/// `greater ± lesser`: a binomial (plus) or an apotome (minus). The two lines
/// are commensurable in power only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinomialPair {
    greater: PowerOnlyLine,
    lesser: PowerOnlyLine,
    sign: Sign,
}

impl BinomialPair {
    /// Orders the two lines by size, swapping when needed.
    pub fn new(a: PowerOnlyLine, b: PowerOnlyLine, sign: Sign) -> Result<Self> {
        let (greater, lesser) = if a.square >= b.square { (a, b) } else { (b, a) };
        if greater.square == lesser.square {
            return Err(Error::InvalidPair("the two terms are equal".into()));
        }
        if is_perfect_square(&(&greater.square / &lesser.square)) {
            return Err(Error::InvalidPair("the terms are commensurable in length".into()));
        }
        Ok(BinomialPair { greater, lesser, sign })
    }

    pub fn from_squares(a: Rat, b: Rat, sign: Sign) -> Result<Self> {
        Self::new(PowerOnlyLine::new(a)?, PowerOnlyLine::new(b)?, sign)
    }

    /// Reads a positive two-term canonical value as `t₁ ± t₂`.
    pub fn from_value(x: &CanonicalValue) -> Option<Self> {
        let CanonicalValue::Quad(q) = x else { return None };
        if q.term_count() != 2 || !x.is_positive() {
            return None;
        }
        let mut terms = q.terms().map(|(r, c)| {
            let square = c * c * Rat::from_integer(r.clone().into());
            (square, c.is_negative())
        });
        let (s1, n1) = terms.next()?;
        let (s2, n2) = terms.next()?;
        let sign = match (n1, n2) {
            (false, false) => Sign::Plus,
            (true, true) => return None,
            _ => Sign::Minus,
        };
        let pair = Self::from_squares(s1, s2, sign).ok()?;
        if sign == Sign::Minus {
            // the positive term must be the greater one; guaranteed for x > 0
            debug_assert!(pair.value() == *x);
        }
        Some(pair)
    }

    pub fn greater(&self) -> &PowerOnlyLine {
        &self.greater
    }

    pub fn lesser(&self) -> &PowerOnlyLine {
        &self.lesser
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn is_apotome(&self) -> bool {
        self.sign == Sign::Minus
    }

    pub fn value(&self) -> CanonicalValue {
        let op = match self.sign {
            Sign::Plus => Op::Add,
            Sign::Minus => Op::Sub,
        };
        quad_arith(&self.greater.value(), &self.lesser.value(), op).expect("depth-1 terms")
    }

    fn with_sign(self, sign: Sign) -> Self {
        BinomialPair { sign, ..self }
    }
}

impl fmt::Display for BinomialPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.is_apotome() { '-' } else { '+' };
        write!(f, "{} {op} {}", self.greater.value(), self.lesser.value())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TaxonomyClass {
    RationalLength,
    RationalPowerOnly,
    /// Simple surd of minimal depth `rank ≥ 2`; medial exactly at rank 2.
    SimpleRank { rank: u32, medial: bool },
    Binomial(u8),
    Apotome(u8),
    Unclassified,
}

impl TaxonomyClass {
    pub fn name(&self) -> &'static str {
        match self {
            TaxonomyClass::RationalLength => "rational_length",
            TaxonomyClass::RationalPowerOnly => "rational_power_only",
            TaxonomyClass::SimpleRank { medial: true, .. } => "medial",
            TaxonomyClass::SimpleRank { .. } => "simple_rank",
            TaxonomyClass::Binomial(_) => "binomial",
            TaxonomyClass::Apotome(_) => "apotome",
            TaxonomyClass::Unclassified => "unclassified",
        }
    }

    pub fn species(&self) -> Option<u8> {
        match self {
            TaxonomyClass::Binomial(k) | TaxonomyClass::Apotome(k) => Some(*k),
            _ => None,
        }
    }

    pub fn rank(&self) -> Option<u32> {
        match self {
            TaxonomyClass::RationalLength => Some(0),
            TaxonomyClass::RationalPowerOnly => Some(1),
            TaxonomyClass::SimpleRank { rank, .. } => Some(*rank),
            _ => None,
        }
    }
}

impl fmt::Display for TaxonomyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const ORD: [&str; 7] = ["", "first", "second", "third", "fourth", "fifth", "sixth"];
        match self {
            TaxonomyClass::RationalLength => f.write_str("rational in length"),
            TaxonomyClass::RationalPowerOnly => f.write_str("rational in power only (rank 1)"),
            TaxonomyClass::SimpleRank { rank, medial: true } => write!(f, "medial (rank {rank})"),
            TaxonomyClass::SimpleRank { rank, .. } => write!(f, "simple irrational of rank {rank}"),
            TaxonomyClass::Binomial(k) => write!(f, "{} binomial", ORD[*k as usize]),
            TaxonomyClass::Apotome(k) => write!(f, "{} apotome", ORD[*k as usize]),
            TaxonomyClass::Unclassified => f.write_str("unclassified"),
        }
    }
}

/// The three facts that fix a binomial's species: with `a`, `b` the greater
/// and lesser terms and `c = √(a² − b²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpeciesConditions {
    /// `c` commensurable in length with `a`.
    pub remainder_commensurable: bool,
    pub greater_rational: bool,
    pub lesser_rational: bool,
}

impl SpeciesConditions {
    pub fn species(&self) -> u8 {
        let base = if self.remainder_commensurable { 0 } else { 3 };
        let slot = if self.greater_rational {
            1
        } else if self.lesser_rational {
            2
        } else {
            3
        };
        base + slot
    }
}

pub fn species_conditions(p: &BinomialPair) -> SpeciesConditions {
    let a2 = p.greater.square();
    let b2 = p.lesser.square();
    // c/a rational ⇔ (a² − b²)/a² is a rational square
    SpeciesConditions {
        remainder_commensurable: is_perfect_square(&((a2 - b2) / a2)),
        greater_rational: p.greater.is_rational_in_length(),
        lesser_rational: p.lesser.is_rational_in_length(),
    }
}

/// Species 1–6 of a binomial or apotome.
pub fn classify_pair(p: &BinomialPair) -> u8 {
    species_conditions(p).species()
}

pub fn classify(x: &CanonicalValue) -> Result<TaxonomyClass> {
    if !x.is_positive() {
        return Err(Error::domain("only positive magnitudes are classified"));
    }
    Ok(match x {
        CanonicalValue::Simple(s) => match s.depth() {
            0 => TaxonomyClass::RationalLength,
            1 => TaxonomyClass::RationalPowerOnly,
            n => TaxonomyClass::SimpleRank { rank: n, medial: n == 2 },
        },
        CanonicalValue::Quad(_) => match BinomialPair::from_value(x) {
            Some(p) if p.is_apotome() => TaxonomyClass::Apotome(classify_pair(&p)),
            Some(p) => TaxonomyClass::Binomial(classify_pair(&p)),
            None => TaxonomyClass::Unclassified,
        },
    })
}

fn require_nonsquare(q: &Rat, what: &str) -> Result<()> {
    if is_perfect_square(q) {
        return Err(Error::domain(format!("{what} = {q} is a perfect square")));
    }
    Ok(())
}

/// The six constructions "for any number n": squares of the greater and the
/// lesser term of the binomial of species `k`.
fn generator_squares(k: u8, n: &Rat) -> Result<(Rat, Rat)> {
    if !n.is_positive() {
        return Err(Error::domain("the generating number must be positive"));
    }
    let n2 = n * n;
    let frac = |p: i64, q: i64| Rat::new(p.into(), q.into());
    Ok(match k {
        // n and √(n² − n²/4)
        1 => (n2.clone(), &n2 - &n2 * frac(1, 4)),
        // √(n² + n²/3) and n
        2 => (&n2 + &n2 * frac(1, 3), n2),
        // √n and √(n − n/4)
        3 => {
            let rest = n - n * frac(1, 4);
            require_nonsquare(n, "n")?;
            require_nonsquare(&rest, "n - n/4")?;
            (n.clone(), rest)
        }
        // n and √(n² − n²/2)
        4 => (n2.clone(), &n2 - &n2 * frac(1, 2)),
        // √(2n²) and n
        5 => (&n2 * frac(2, 1), n2),
        // √n and √(n − n/2)
        6 => {
            let rest = n - n * frac(1, 2);
            require_nonsquare(n, "n")?;
            require_nonsquare(&rest, "n - n/2")?;
            (n.clone(), rest)
        }
        _ => return Err(Error::domain(format!("species must be 1..6, got {k}"))),
    })
}

pub fn gen_binomial(k: u8, n: &Rat) -> Result<BinomialPair> {
    let (a, b) = generator_squares(k, n)?;
    BinomialPair::from_squares(a, b, Sign::Plus)
}

/// Apotome counterpart of [`gen_binomial`]: same terms, joined by subtraction.
pub fn gen_apotome(k: u8, n: &Rat) -> Result<BinomialPair> {
    Ok(gen_binomial(k, n)?.with_sign(Sign::Minus))
}

/// How the two parts `x + y = a`, `xy = B/4` of a first binomial are found.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootMethod {
    /// Half the line and the half-difference: `(a/2)² = xy + ((x − y)/2)²`.
    HalfDifference,
    /// Take one part as the unknown `t` and solve `t² + B/4 = a·t`.
    Quadratic,
}

fn split_half_difference(a: &Rat, quarter_b: &Rat) -> Option<(Rat, Rat)> {
    let half = a / Rat::from_integer(2.into());
    let d = rat_sqrt(&(&half * &half - quarter_b))?;
    Some((&half + &d, &half - &d))
}

fn split_quadratic(a: &Rat, quarter_b: &Rat) -> Option<(Rat, Rat)> {
    // α t² + β t + γ = 0
    let (alpha, beta, gamma) = (Rat::from_integer(1.into()), -a.clone(), quarter_b.clone());
    let disc = &beta * &beta - Rat::from_integer(4.into()) * &alpha * &gamma;
    let root = rat_sqrt(&disc)?;
    let two_alpha = Rat::from_integer(2.into()) * &alpha;
    Some(((-&beta + &root) / &two_alpha, (-&beta - &root) / &two_alpha))
}

/// Square root of a first binomial (apotome) as a binomial (apotome) of two
/// power-only lines `√x ± √y`.
pub fn sqrt_first_with(p: &BinomialPair, method: RootMethod) -> Result<BinomialPair> {
    if classify_pair(p) != 1 {
        return Err(Error::domain(format!(
            "square root by parts needs a first binomial or apotome, got species {}",
            classify_pair(p)
        )));
    }
    let a = rat_sqrt(p.greater.square()).expect("first species has a rational greater term");
    let quarter_b = p.lesser.square() / Rat::from_integer(4.into());
    let (x, y) = match method {
        RootMethod::HalfDifference => split_half_difference(&a, &quarter_b),
        RootMethod::Quadratic => split_quadratic(&a, &quarter_b),
    }
    .expect("first species has a rational discriminant");
    BinomialPair::from_squares(x, y, p.sign)
}

pub fn sqrt_first(p: &BinomialPair) -> Result<BinomialPair> {
    sqrt_first_with(p, RootMethod::Quadratic)
}

/// `x⁴` rational and `x²` irrational.
pub fn is_medial(x: &CanonicalValue) -> Result<bool> {
    if !x.is_positive() {
        return Err(Error::domain("only positive magnitudes are classified"));
    }
    let sq = x.square();
    Ok(!sq.is_rational() && sq.square().is_rational())
}

/// A line `a` cut into `x` and `a − x` with `x(a − x) = b²/4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct X17Split {
    /// The smaller part.
    pub x: CanonicalValue,
    pub remainder: CanonicalValue,
    /// `√(a² − b²)`.
    pub side: CanonicalValue,
    pub commensurable_parts: bool,
    pub commensurable_side: bool,
}

/// Applies `b²/4` to `a` falling short by a square, taking `b²` as input.
pub fn x17_split(a: &Rat, bsq: &Rat) -> Result<X17Split> {
    if !a.is_positive() || !bsq.is_positive() {
        return Err(Error::domain("both lines must be positive"));
    }
    let a2 = a * a;
    if bsq >= &a2 {
        return Err(Error::domain("the lesser line must be shorter than the greater"));
    }
    let side = CanonicalValue::sqrt_of(&(&a2 - bsq))?;
    let whole = CanonicalValue::from_rational(a.clone());
    let half = Rat::new(1.into(), 2.into());
    let x = quad_arith(&whole, &side, Op::Sub)?.scale(&half);
    let remainder = quad_arith(&whole, &x, Op::Sub)?;
    debug_assert!(!x.is_zero());
    Ok(X17Split {
        commensurable_parts: commensurable_length(&x, &remainder)?,
        commensurable_side: commensurable_length(&whole, &side)?,
        x,
        remainder,
        side,
    })
}
