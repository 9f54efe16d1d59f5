use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    Number(Rational),
    /// Blade literal; indices are as written (unvalidated).
    Blade { e: Vec<usize>, f: Vec<usize> },
    Ident(String),
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Caret,
    Pipe,
    Dagger,
}

/// A token with its byte offset into the source.
#[derive(Debug, Clone, PartialEq)]
pub struct Spanned {
    pub tok: Tok,
    pub offset: usize,
}

/// 1-based line and column of a byte offset.
pub fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

pub fn syntax_error(src: &str, offset: usize, message: impl Into<String>) -> Error {
    let (line, col) = line_col(src, offset);
    Error::Syntax {
        line,
        col,
        message: message.into(),
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn number(&mut self) -> Result<Rational> {
        let start = self.pos;
        let int_part = self.digits();
        let mut value = Rational::from_integer(int_part.parse::<BigInt>().unwrap());
        if self.peek() == Some('.') {
            self.pos += 1;
            let frac = self.digits();
            if frac.is_empty() {
                return Err(syntax_error(self.src, self.pos, "expected digits after '.'"));
            }
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let frac = frac.parse::<BigInt>().unwrap();
            value += Rational::new(frac, scale);
        }
        // a '/' directly followed by a digit continues the literal: 3/2
        if self.peek() == Some('/') {
            self.pos += 1;
            let den = self.digits();
            if den.is_empty() {
                return Err(syntax_error(self.src, self.pos, "expected denominator after '/'"));
            }
            let den = den.parse::<BigInt>().unwrap();
            if den.is_zero() {
                return Err(syntax_error(self.src, start, "zero denominator"));
            }
            value /= Rational::from_integer(den);
        }
        Ok(value)
    }

    /// Index group after `e`/`f`: single digits or bracketed multi-digit indices.
    fn index_group(&mut self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    self.pos += 1;
                    out.push(c.to_digit(10).unwrap() as usize);
                }
                Some('[') => {
                    let open = self.pos;
                    self.pos += 1;
                    let ds = self.digits();
                    if ds.is_empty() || self.peek() != Some(']') {
                        return Err(syntax_error(self.src, open, "malformed bracket index"));
                    }
                    self.pos += 1;
                    let idx = ds
                        .parse::<usize>()
                        .map_err(|_| syntax_error(self.src, open, "index too large"))?;
                    out.push(idx);
                }
                _ => break,
            }
        }
        Ok(out)
    }

    fn word(&mut self) -> Result<Tok> {
        let start = self.pos;
        let rest = &self.src[self.pos..];
        let mut chars = rest.chars();
        let first = chars.next().unwrap();
        let second = chars.next();
        let starts_index = matches!(second, Some(c) if c.is_ascii_digit() || c == '[');
        if (first == 'e' || first == 'f') && starts_index {
            self.pos += 1;
            let mut e = Vec::new();
            let mut f = Vec::new();
            if first == 'e' {
                e = self.index_group()?;
                let next_is_f = self.peek() == Some('f')
                    && self.src[self.pos + 1..]
                        .chars()
                        .next()
                        .is_some_and(|c| c.is_ascii_digit() || c == '[');
                if next_is_f {
                    self.pos += 1;
                    f = self.index_group()?;
                }
            } else {
                f = self.index_group()?;
            }
            if self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
                return Err(syntax_error(self.src, start, "malformed blade literal"));
            }
            return Ok(Tok::Blade { e, f });
        }
        while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
            self.bump();
        }
        Ok(Tok::Ident(self.src[start..self.pos].to_string()))
    }
}

pub fn tokenize(src: &str) -> Result<Vec<Spanned>> {
    let mut lx = Lexer { src, pos: 0 };
    let mut out = Vec::new();
    while let Some(c) = lx.peek() {
        let offset = lx.pos;
        let tok = match c {
            c if c.is_whitespace() => {
                lx.bump();
                continue;
            }
            '0'..='9' => Tok::Number(lx.number()?),
            c if c.is_alphabetic() => lx.word()?,
            _ => {
                lx.bump();
                match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    '+' => Tok::Plus,
                    '-' | '−' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' | '∧' => Tok::Caret,
                    '|' | '·' => Tok::Pipe,
                    '†' => Tok::Dagger,
                    other => {
                        return Err(syntax_error(src, offset, format!("unexpected character '{other}'")))
                    }
                }
            }
        };
        out.push(Spanned { tok, offset });
    }
    Ok(out)
}
