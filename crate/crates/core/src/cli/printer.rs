use crate::arithmetic::{fmt_decimal_exact, Rat};
use crate::surd::SurdExpr;
use num_traits::Signed;

fn precedence(e: &SurdExpr) -> u8 {
    match e {
        SurdExpr::Add(..) | SurdExpr::Sub(..) => 1,
        SurdExpr::Mul(..) | SurdExpr::Div(..) => 2,
        _ => 3,
    }
}

fn constant(q: &Rat) -> String {
    if q.is_negative() {
        return format!("(0 - {})", constant(&-q));
    }
    match fmt_decimal_exact(q) {
        Some(s) => s,
        None => format!("({}/{})", q.numer(), q.denom()),
    }
}

fn write(e: &SurdExpr, out: &mut String) {
    let (l, r, op) = match e {
        SurdExpr::Const(q) => {
            out.push_str(&constant(q));
            return;
        }
        SurdExpr::Sqrt(inner) => {
            out.push_str("sqrt(");
            write(inner, out);
            out.push(')');
            return;
        }
        SurdExpr::Add(l, r) => (l, r, " + "),
        SurdExpr::Sub(l, r) => (l, r, " - "),
        SurdExpr::Mul(l, r) => (l, r, " * "),
        SurdExpr::Div(l, r) => (l, r, " / "),
    };
    let p = precedence(e);
    let wrap = |child: &SurdExpr, paren: bool, out: &mut String| {
        if paren {
            out.push('(');
            write(child, out);
            out.push(')');
        } else {
            write(child, out);
        }
    };
    wrap(l, precedence(l) < p, out);
    out.push_str(op);
    wrap(r, precedence(r) <= p, out);
}

/// Renders an expression with the minimal parentheses that make
/// `parse_expr(print_expr(e)) == e` for trees whose constants are nonnegative
/// terminating decimals. Other constants print as parenthesized quotients
/// and differences, which parse back to the same value.
pub fn print_expr(e: &SurdExpr) -> String {
    let mut out = String::new();
    write(e, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parser::parse_expr;

    fn c(n: i64) -> SurdExpr {
        SurdExpr::int(n)
    }

    #[test]
    fn examples() {
        assert_eq!(print_expr(&c(2).sqrt()), "sqrt(2)");
        assert_eq!(print_expr(&c(2).add(c(3).sqrt())), "2 + sqrt(3)");
        assert_eq!(print_expr(&c(1).add(c(2)).mul(c(3))), "(1 + 2) * 3");
    }

    #[test]
    fn right_nested_keeps_parens() {
        let e = c(1).sub(c(2).sub(c(3)));
        assert_eq!(print_expr(&e), "1 - (2 - 3)");
        assert_eq!(parse_expr(&print_expr(&e)).unwrap(), e);
        let e = c(1).div(c(2).mul(c(3)));
        assert_eq!(print_expr(&e), "1 / (2 * 3)");
    }

    #[test]
    fn odd_constants() {
        let third = SurdExpr::Const(Rat::new(1.into(), 3.into()));
        assert_eq!(print_expr(&third), "(1/3)");
        assert_eq!(print_expr(&SurdExpr::int(-2)), "(0 - 2)");
        assert_eq!(print_expr(&SurdExpr::Const(Rat::new(1.into(), 8.into()))), "0.125");
    }
}
