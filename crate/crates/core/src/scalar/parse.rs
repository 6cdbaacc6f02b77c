//! Recursive-descent parser for ℚ(τ) literals such as `1/2+3*tau` or `(1+tau)/(tau^2)`.

use num_bigint::BigInt;

use super::tau::TauScalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Tau,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => {}
            '+' => out.push(Token::Plus),
            '-' => out.push(Token::Minus),
            '*' => out.push(Token::Star),
            '/' => out.push(Token::Slash),
            '^' => out.push(Token::Caret),
            '(' => out.push(Token::Open),
            ')' => out.push(Token::Close),
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Token::Int(digits.parse().expect("digits")));
            }
            't' if chars[i..].starts_with(&['t', 'a', 'u']) => {
                out.push(Token::Tau);
                i += 2;
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected `{other}` in scalar `{s}`"
                )))
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    source: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn fail(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in scalar `{}`", self.source))
    }

    fn expr(&mut self) -> Result<TauScalar> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<TauScalar> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = acc * self.unary()?;
                }
                Some(Token::Slash) => {
                    self.bump();
                    let d = self.unary()?;
                    let inv = d.inv().ok_or(Error::DivisionByZero)?;
                    acc = acc * inv;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<TauScalar> {
        match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                Ok(-self.unary()?)
            }
            Some(Token::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<TauScalar> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.bump();
            let Some(Token::Int(k)) = self.bump() else {
                return Err(self.fail("expected an integer exponent"));
            };
            let k: u32 = k.try_into().map_err(|_| self.fail("exponent too large"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<TauScalar> {
        match self.bump() {
            Some(Token::Int(n)) => Ok(TauScalar::from_rational(n.into())),
            Some(Token::Tau) => Ok(TauScalar::tau()),
            Some(Token::Open) => {
                let inner = self.expr()?;
                if self.bump() != Some(Token::Close) {
                    return Err(self.fail("missing `)`"));
                }
                Ok(inner)
            }
            _ => Err(self.fail("expected a number, `tau` or `(`")),
        }
    }
}

pub fn parse_tau(s: &str) -> Result<TauScalar> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        source: s,
    };
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.fail("trailing input"));
    }
    Ok(value)
}
