use std::io::Write;

use clap::{Parser, Subcommand};
use serde::Serialize;

use super::parser::{parse_expr, ParseError};
use super::verify::{verify_proposition, Proposition};
use crate::arithmetic::{parse_rat, Rat};
use crate::error::Error;
use crate::ranks::{rank, x115_sequence};
use crate::surd::{commensurable_length, commensurable_power, normalize, sqrt, to_float, CanonicalValue};
use crate::taxonomy::{
    classify, gen_apotome, gen_binomial, species_conditions, BinomialPair, SpeciesConditions,
};

/// Digits shown in `approx` fields.
pub const APPROX_DIGITS: u32 = 12;

#[derive(Debug, Parser)]
#[command(name = "bookx", version, about = "Exact surd arithmetic and Book X classification")]
pub struct ParsedCommand {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a positive magnitude
    Classify { expr: String },
    /// Decide commensurability of two magnitudes (in length, or in square with --power)
    Commensurable {
        first: String,
        second: String,
        #[arg(long)]
        power: bool,
    },
    /// Exact square root
    Sqrt { expr: String },
    /// The ladder u_{n+1}² = b·u_n and its ranks
    Ranks {
        #[arg(long)]
        base: String,
        #[arg(long)]
        count: u32,
    },
    /// Binomial and apotome constructions
    Binomial {
        #[command(subcommand)]
        action: BinomialAction,
    },
    /// Check a proposition on seeded random instances
    Verify {
        #[arg(long, value_enum)]
        prop: Proposition,
        #[arg(long, default_value_t = 100)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum BinomialAction {
    /// Build the binomial (or apotome) of a species from a number n
    Gen {
        #[arg(long = "type", value_parser = clap::value_parser!(u8).range(1..=6))]
        species: u8,
        #[arg(long)]
        n: String,
        #[arg(long)]
        apotome: bool,
    },
}

enum Failure {
    Usage(String),
    Syntax(String, ParseError),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn value_of(text: &str) -> Result<CanonicalValue, Failure> {
    let expr = parse_expr(text).map_err(|e| Failure::Syntax(text.to_string(), e))?;
    Ok(normalize(&expr)?)
}

fn rational_arg(name: &str, text: &str) -> Result<Rat, Failure> {
    parse_rat(text).map_err(|_| Failure::Usage(format!("--{name} expects a rational such as 3, 3/2 or 0.5, got {text:?}")))
}

fn approx(v: &CanonicalValue) -> String {
    to_float(v, APPROX_DIGITS).to_string()
}

#[derive(Serialize)]
pub struct ClassifyOutput {
    pub input: String,
    pub canonical: String,
    pub class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub species: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<u32>,
    pub approx: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conditions: Option<Conditions>,
}

#[derive(Serialize)]
pub struct Conditions {
    pub remainder_commensurable: bool,
    pub greater_rational: bool,
    pub lesser_rational: bool,
}

impl From<SpeciesConditions> for Conditions {
    fn from(c: SpeciesConditions) -> Self {
        Conditions {
            remainder_commensurable: c.remainder_commensurable,
            greater_rational: c.greater_rational,
            lesser_rational: c.lesser_rational,
        }
    }
}

#[derive(Serialize)]
struct CommensurableOutput {
    first: String,
    second: String,
    mode: &'static str,
    commensurable: bool,
}

#[derive(Serialize)]
struct SqrtOutput {
    input: String,
    canonical: String,
    approx: String,
}

#[derive(Serialize)]
struct RankTerm {
    n: usize,
    line: String,
    rank: u32,
    area: String,
    approx: String,
}

#[derive(Serialize)]
struct RanksOutput {
    base: String,
    count: u32,
    terms: Vec<RankTerm>,
}

#[derive(Serialize)]
struct BinomialOutput {
    kind: &'static str,
    species: u8,
    n: String,
    greater_square: String,
    lesser_square: String,
    expression: String,
    approx: String,
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string(value).expect("serializable"))
}

pub fn classify_output(input: &str, v: &CanonicalValue) -> Result<ClassifyOutput, Error> {
    let class = classify(v)?;
    let conditions = BinomialPair::from_value(v).map(|p| species_conditions(&p).into());
    Ok(ClassifyOutput {
        input: input.to_string(),
        canonical: v.to_string(),
        class: class.name().to_string(),
        species: class.species(),
        rank: class.rank(),
        approx: approx(v),
        conditions,
    })
}

fn execute(cmd: &ParsedCommand, out: &mut dyn Write) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Usage(format!("write failed: {e}"));
    match &cmd.command {
        Command::Classify { expr } => {
            let v = value_of(expr)?;
            let class = classify(&v)?;
            let o = classify_output(expr, &v)?;
            if cmd.json {
                emit_json(out, &o).map_err(io)?;
            } else {
                writeln!(out, "input:     {}", o.input).map_err(io)?;
                writeln!(out, "canonical: {}", o.canonical).map_err(io)?;
                writeln!(out, "class:     {class}").map_err(io)?;
                if let Some(r) = o.rank {
                    writeln!(out, "rank:      {r}").map_err(io)?;
                }
                writeln!(out, "approx:    {}", o.approx).map_err(io)?;
            }
        }
        Command::Commensurable { first, second, power } => {
            let (x, y) = (value_of(first)?, value_of(second)?);
            let result = if *power { commensurable_power(&x, &y)? } else { commensurable_length(&x, &y)? };
            let mode = if *power { "power" } else { "length" };
            if cmd.json {
                let o = CommensurableOutput { first: first.clone(), second: second.clone(), mode, commensurable: result };
                emit_json(out, &o).map_err(io)?;
            } else {
                let verdict = if result { "commensurable" } else { "incommensurable" };
                writeln!(out, "{verdict} in {mode}").map_err(io)?;
            }
        }
        Command::Sqrt { expr } => {
            let root = sqrt(&value_of(expr)?)?;
            if cmd.json {
                let o = SqrtOutput { input: expr.clone(), canonical: root.to_string(), approx: approx(&root) };
                emit_json(out, &o).map_err(io)?;
            } else {
                writeln!(out, "{root}").map_err(io)?;
                writeln!(out, "approx: {}", approx(&root)).map_err(io)?;
            }
        }
        Command::Ranks { base, count } => {
            let b = rational_arg("base", base)?;
            let seq = x115_sequence(&b, *count)?;
            let terms: Vec<RankTerm> = (1..=*count as usize)
                .map(|n| {
                    let u = seq.term(n);
                    RankTerm {
                        n,
                        line: u.to_string(),
                        rank: rank(&u).expect("positive simple term"),
                        area: seq.areas[n - 1].to_string(),
                        approx: approx(&u),
                    }
                })
                .collect();
            if cmd.json {
                emit_json(out, &RanksOutput { base: b.to_string(), count: *count, terms }).map_err(io)?;
            } else {
                for t in terms {
                    writeln!(out, "u_{} = {}  (rank {}, ≈ {})  s_{} = {}", t.n, t.line, t.rank, t.approx, t.n, t.area)
                        .map_err(io)?;
                }
            }
        }
        Command::Binomial { action: BinomialAction::Gen { species, n, apotome } } => {
            let n_val = rational_arg("n", n)?;
            let pair = if *apotome { gen_apotome(*species, &n_val)? } else { gen_binomial(*species, &n_val)? };
            let kind = if *apotome { "apotome" } else { "binomial" };
            let o = BinomialOutput {
                kind,
                species: *species,
                n: n_val.to_string(),
                greater_square: pair.greater().square().to_string(),
                lesser_square: pair.lesser().square().to_string(),
                expression: pair.to_string(),
                approx: approx(&pair.value()),
            };
            if cmd.json {
                emit_json(out, &o).map_err(io)?;
            } else {
                writeln!(out, "{}  (species {} {kind}, ≈ {})", o.expression, o.species, o.approx).map_err(io)?;
            }
        }
        Command::Verify { prop, trials, seed } => {
            let report = verify_proposition(*prop, *trials, *seed)?;
            if cmd.json {
                emit_json(out, &report).map_err(io)?;
            } else {
                writeln!(out, "{}: {}/{} passed (seed {})", report.proposition, report.passed, report.attempted, report.seed)
                    .map_err(io)?;
                if let Some(c) = &report.counterexample {
                    writeln!(out, "counterexample: {c}").map_err(io)?;
                }
            }
        }
    }
    Ok(())
}

/// Runs a parsed command. Returns the exit status: 0 on success, 1 on a
/// domain error, 2 on a usage or syntax error.
pub fn run_command(cmd: &ParsedCommand, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cmd, out) {
        Ok(()) => 0,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Syntax(input, e)) => {
            let _ = writeln!(err, "error: {e}");
            let _ = writeln!(err, "  {input}");
            let _ = writeln!(err, "  {}^", " ".repeat(e.position));
            2
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
