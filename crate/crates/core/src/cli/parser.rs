//! Recursive-descent parser for surd expressions.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := NUMBER | "(" expr ")" | "sqrt" "(" expr ")"
//! NUMBER := digits ("." digits)?
//! ```

use std::fmt;

use num_traits::Zero;

use crate::arithmetic::parse_rat;
use crate::surd::SurdExpr;

/// Syntax error at a 0-based character offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: expected {}", self.position, self.expected)
    }
}

impl std::error::Error for ParseError {}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn fail<T>(&mut self, expected: &str) -> Result<T, ParseError> {
        self.skip_ws();
        Err(ParseError { position: self.pos, expected: expected.to_string() })
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&format!("\"{c}\""))
        }
    }

    fn expr(&mut self) -> Result<SurdExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    lhs = lhs.add(self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    lhs = lhs.sub(self.term()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<SurdExpr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    lhs = lhs.mul(self.factor()?);
                }
                Some('/') => {
                    self.pos += 1;
                    let at = {
                        self.skip_ws();
                        self.pos
                    };
                    let rhs = self.factor()?;
                    if matches!(&rhs, SurdExpr::Const(q) if q.is_zero()) {
                        return Err(ParseError { position: at, expected: "a nonzero divisor".into() });
                    }
                    lhs = lhs.div(rhs);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<SurdExpr, ParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_alphanumeric()) {
                    self.pos += 1;
                }
                let word: String = self.chars[start..self.pos].iter().collect();
                if word != "sqrt" {
                    self.pos = start;
                    return self.fail("a number, \"(\" or \"sqrt\"");
                }
                self.expect('(')?;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e.sqrt())
            }
            _ => self.fail("a number, \"(\" or \"sqrt\""),
        }
    }

    fn number(&mut self) -> Result<SurdExpr, ParseError> {
        let start = self.pos;
        let digits = |p: &mut Self| {
            while p.chars.get(p.pos).is_some_and(|c| c.is_ascii_digit()) {
                p.pos += 1;
            }
        };
        digits(self);
        if self.chars.get(self.pos) == Some(&'.') {
            self.pos += 1;
            let frac_start = self.pos;
            digits(self);
            if self.pos == frac_start {
                return Err(ParseError { position: self.pos, expected: "a digit".into() });
            }
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let q = parse_rat(&text).map_err(|_| ParseError { position: start, expected: "a number".into() })?;
        Ok(SurdExpr::Const(q))
    }
}

/// Parses a surd expression. Whitespace is ignored; `*` and `/` bind tighter
/// than `+` and `-`; all binary operators associate to the left.
pub fn parse_expr(text: &str) -> Result<SurdExpr, ParseError> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.fail("an operator or end of input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::Rat;

    fn c(n: i64) -> SurdExpr {
        SurdExpr::int(n)
    }

    #[test]
    fn nested_sqrt() {
        assert_eq!(parse_expr("sqrt(2 + sqrt(3))").unwrap(), c(2).add(c(3).sqrt()).sqrt());
    }

    #[test]
    fn first_binomial_recipe() {
        let e = parse_expr("2 + sqrt(2*2 - 2*2/4)").unwrap();
        let want = c(2).add(c(2).mul(c(2)).sub(c(2).mul(c(2)).div(c(4))).sqrt());
        assert_eq!(e, want);
    }

    #[test]
    fn unclosed_paren() {
        assert_eq!(
            parse_expr("sqrt(2"),
            Err(ParseError { position: 6, expected: "\")\"".into() })
        );
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(parse_expr("1 - 2 - 3").unwrap(), c(1).sub(c(2)).sub(c(3)));
        assert_eq!(parse_expr("1 + 2 * 3").unwrap(), c(1).add(c(2).mul(c(3))));
        assert_eq!(parse_expr("8 / 4 / 2").unwrap(), c(8).div(c(4)).div(c(2)));
        assert_eq!(parse_expr(" ( 1+2 )*3 ").unwrap(), c(1).add(c(2)).mul(c(3)));
    }

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_expr("0.5").unwrap(), SurdExpr::Const(Rat::new(1.into(), 2.into())));
        assert!(parse_expr("1.").is_err());
    }

    #[test]
    fn errors() {
        assert_eq!(parse_expr("").unwrap_err().position, 0);
        assert_eq!(parse_expr("1 +").unwrap_err().position, 3);
        assert_eq!(parse_expr("cbrt(2)").unwrap_err().position, 0);
        assert_eq!(parse_expr("2 3").unwrap_err().position, 2);
        assert_eq!(parse_expr("-2").unwrap_err().position, 0);
        assert_eq!(parse_expr("1 / 0").unwrap_err().expected, "a nonzero divisor");
    }
}
