//! Expression parser: integer literals, identifiers, `+ - * ^`, parentheses.
//!
//! Variables are ordered naturally by name (`x2` before `x10`), not by
//! first appearance.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use super::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyParseError {
    #[error("column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("column {column}: exponent must be a natural number literal, got {exponent}")]
    NonNaturalExponent { column: usize, exponent: String },
}

pub fn parse_polynomial(text: &str) -> Result<Polynomial, PolyParseError> {
    let tokens = tokenize(text)?;
    let mut names: Vec<String> = tokens
        .iter()
        .filter_map(|t| match &t.kind {
            Kind::Ident(name) => Some(name.clone()),
            _ => None,
        })
        .collect();
    names.sort_by(|a, b| natural_cmp(a, b));
    names.dedup();
    let index: BTreeMap<String, usize> = names.iter().cloned().enumerate().map(|(i, n)| (n, i)).collect();

    let mut p = Parser { tokens, pos: 0, vars: names, index, end: text.chars().count() + 1 };
    let poly = p.sum()?;
    if let Some(t) = p.tokens.get(p.pos) {
        return Err(PolyParseError::Syntax { column: t.column, message: "unexpected token".into() });
    }
    Ok(poly)
}

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    Int(BigInt),
    Ident(String),
    Op(char),
}

#[derive(Debug, Clone)]
struct Token {
    kind: Kind,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, PolyParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token { kind: Kind::Int(digits.parse().expect("digits")), column });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token { kind: Kind::Ident(chars[start..i].iter().collect()), column });
        } else if "+-*^()".contains(c) {
            out.push(Token { kind: Kind::Op(c), column });
            i += 1;
        } else if c == '\u{2212}' {
            // Unicode minus sign.
            out.push(Token { kind: Kind::Op('-'), column });
            i += 1;
        } else {
            return Err(PolyParseError::Syntax { column, message: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    vars: Vec<String>,
    index: BTreeMap<String, usize>,
    end: usize,
}

impl Parser {
    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos).map(|t| &t.kind) {
            Some(Kind::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.column)
    }

    fn syntax(&self, message: &str) -> PolyParseError {
        PolyParseError::Syntax { column: self.column(), message: message.into() }
    }

    fn constant(&self, c: BigInt) -> Polynomial {
        let mut p = Polynomial::zero(self.vars.clone());
        p.add_term(vec![0; self.vars.len()], c);
        p
    }

    // sum := product (('+' | '-') product)*
    fn sum(&mut self) -> Result<Polynomial, PolyParseError> {
        let mut acc = self.product()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.product()?;
            acc = if op == '+' { add(&acc, &rhs) } else { add(&acc, &rhs.neg()) };
        }
        Ok(acc)
    }

    // product := unary ('*' unary)*
    fn product(&mut self) -> Result<Polynomial, PolyParseError> {
        let mut acc = self.unary()?;
        while self.peek_op() == Some('*') {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = mul(&acc, &rhs);
        }
        Ok(acc)
    }

    // unary := ('-' | '+') unary | power
    fn unary(&mut self) -> Result<Polynomial, PolyParseError> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    // power := atom ('^' exponent)?, right associative through the exponent
    fn power(&mut self) -> Result<Polynomial, PolyParseError> {
        let base = self.atom()?;
        if self.peek_op() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let column = self.column();
        let exponent = self.unary()?;
        let value = if exponent.degree() == 0 { Some(exponent.constant_term()) } else { None };
        match value.as_ref().and_then(|v| v.to_u32()) {
            Some(e) => Ok(pow(&base, e)),
            None => Err(PolyParseError::NonNaturalExponent { column, exponent: exponent.to_string() }),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, PolyParseError> {
        let Some(token) = self.tokens.get(self.pos).cloned() else {
            return Err(self.syntax("unexpected end of expression"));
        };
        self.pos += 1;
        match token.kind {
            Kind::Int(v) => Ok(self.constant(v)),
            Kind::Ident(name) => {
                let mut exps = vec![0; self.vars.len()];
                exps[self.index[&name]] = 1;
                let mut p = Polynomial::zero(self.vars.clone());
                p.add_term(exps, BigInt::from(1));
                Ok(p)
            }
            Kind::Op('(') => {
                let inner = self.sum()?;
                if self.peek_op() != Some(')') {
                    return Err(self.syntax("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Kind::Op(c) => {
                self.pos -= 1;
                Err(self.syntax(&format!("unexpected {c:?}")))
            }
        }
    }
}

fn add(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut out = a.clone();
    for (e, c) in b.terms() {
        out.add_term(e.to_vec(), c.clone());
    }
    out
}

fn mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(a.variables().to_vec());
    for (ea, ca) in a.terms() {
        for (eb, cb) in b.terms() {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            out.add_term(e, ca * cb);
        }
    }
    out
}

fn pow(base: &Polynomial, e: u32) -> Polynomial {
    let n = base.variables().len();
    let mut out = Polynomial::zero(base.variables().to_vec());
    out.add_term(vec![0; n], BigInt::from(1));
    for _ in 0..e {
        out = mul(&out, base);
    }
    out
}

/// Compares names chunk by chunk, digit runs numerically.
fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for ((da, sa), (db, sb)) in ca.iter().zip(&cb) {
        let ord = if *da && *db {
            let (ta, tb) = (sa.trim_start_matches('0'), sb.trim_start_matches('0'));
            ta.len().cmp(&tb.len()).then_with(|| ta.cmp(tb)).then_with(|| sa.len().cmp(&sb.len()))
        } else {
            sa.cmp(sb)
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeff(p: &Polynomial, e: &[u32]) -> i64 {
        p.coefficient(e).to_i64().unwrap()
    }

    #[test]
    fn linear_example() {
        let p = parse_polynomial("2*x1 - 3*x2 - 1").unwrap();
        assert_eq!(p.variables(), ["x1", "x2"]);
        assert_eq!(coeff(&p, &[1, 0]), 2);
        assert_eq!(coeff(&p, &[0, 1]), -3);
        assert_eq!(coeff(&p, &[0, 0]), -1);
        assert_eq!(p.terms().count(), 3);
        assert_eq!(p.degree(), 1);
    }

    #[test]
    fn quadratic_example() {
        let p = parse_polynomial("x1^2 - x2^2 - 3").unwrap();
        assert_eq!(p.degree(), 2);
        assert_eq!(coeff(&p, &[2, 0]), 1);
        assert_eq!(coeff(&p, &[0, 2]), -1);
        assert_eq!(coeff(&p, &[0, 0]), -3);
    }

    #[test]
    fn zero_polynomial() {
        let p = parse_polynomial("0").unwrap();
        assert!(p.is_zero());
        assert_eq!(p.degree(), 0);
        assert!(p.variables().is_empty());
    }

    #[test]
    fn precedence_and_expansion() {
        let p = parse_polynomial("-x^2").unwrap();
        assert_eq!(coeff(&p, &[2]), -1);
        let p = parse_polynomial("2^3^2").unwrap();
        assert_eq!(coeff(&p, &[]), 512);
        let p = parse_polynomial("(a+b)*(a-b)").unwrap();
        assert_eq!(p.to_string(), "a^2 - b^2");
        let p = parse_polynomial("x^(1+1)").unwrap();
        assert_eq!(p.degree(), 2);
        let p = parse_polynomial("x^0").unwrap();
        assert_eq!(coeff(&p, &[0]), 1);
    }

    #[test]
    fn variables_sort_naturally() {
        let p = parse_polynomial("x10 + x2 + y + x1").unwrap();
        assert_eq!(p.variables(), ["x1", "x2", "x10", "y"]);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_polynomial("x^-1"), Err(PolyParseError::NonNaturalExponent { column: 3, .. })));
        assert!(matches!(parse_polynomial("x^y"), Err(PolyParseError::NonNaturalExponent { .. })));
        assert!(matches!(parse_polynomial("x +"), Err(PolyParseError::Syntax { column: 4, .. })));
        assert!(matches!(parse_polynomial("2x"), Err(PolyParseError::Syntax { column: 2, .. })));
        assert!(matches!(parse_polynomial("(x"), Err(PolyParseError::Syntax { .. })));
        assert!(matches!(parse_polynomial("x / 2"), Err(PolyParseError::Syntax { column: 3, .. })));
        assert!(matches!(parse_polynomial(""), Err(PolyParseError::Syntax { .. })));
        assert!(matches!(parse_polynomial("*x"), Err(PolyParseError::Syntax { column: 1, .. })));
    }
}
