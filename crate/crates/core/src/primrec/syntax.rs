//! Text syntax for terms:
//! `C[k,c]`, `S`, `P[k,i]`, `comp(outer; inner1, inner2, ...)`, `rec(base; step)`.

use num_bigint::BigUint;
use thiserror::Error;

use super::Expr;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct SyntaxError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

pub fn parse_expr(text: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0 };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected trailing input {:?}", p.rest())));
    }
    Ok(expr)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: String) -> SyntaxError {
        SyntaxError { column: self.pos + 1, message }
    }

    fn rest(&self) -> String {
        self.chars[self.pos..].iter().take(12).collect()
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> Result<(), SyntaxError> {
        self.skip_ws();
        if self.chars.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {c:?}")))
        }
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn natural(&mut self) -> Result<BigUint, SyntaxError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a natural number".into()));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn small(&mut self) -> Result<usize, SyntaxError> {
        let column = self.pos + 1;
        let n = self.natural()?;
        usize::try_from(n).map_err(|_| SyntaxError { column, message: "number too large".into() })
    }

    fn indices(&mut self) -> Result<(usize, BigUint), SyntaxError> {
        self.eat('[')?;
        let k = self.small()?;
        self.eat(',')?;
        let v = self.natural()?;
        self.eat(']')?;
        Ok((k, v))
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let start = self.pos;
        match self.word().as_str() {
            "C" => {
                let (arity, value) = self.indices()?;
                Ok(Expr::Const { arity, value })
            }
            "S" => Ok(Expr::Succ),
            "P" => {
                let (arity, index) = self.indices()?;
                let index = usize::try_from(index).map_err(|_| self.error("index too large".into()))?;
                Ok(Expr::Proj { arity, index })
            }
            "comp" => {
                self.eat('(')?;
                let outer = self.expr()?;
                self.eat(';')?;
                let mut inners = vec![self.expr()?];
                loop {
                    self.skip_ws();
                    if self.chars.get(self.pos) == Some(&',') {
                        self.pos += 1;
                        inners.push(self.expr()?);
                    } else {
                        break;
                    }
                }
                self.eat(')')?;
                Ok(Expr::comp(outer, inners))
            }
            "rec" => {
                self.eat('(')?;
                let base = self.expr()?;
                self.eat(';')?;
                let step = self.expr()?;
                self.eat(')')?;
                Ok(Expr::rec(base, step))
            }
            "" => Err(self.error("expected a term: C[k,c], S, P[k,i], comp(..) or rec(..)".into())),
            other => {
                self.pos = start;
                self.skip_ws();
                Err(self.error(format!("unknown term {other:?}")))
            }
        }
    }
}
