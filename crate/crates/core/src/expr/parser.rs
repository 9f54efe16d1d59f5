//! Recursive-descent parser.
//!
//! Precedence, tightest first: unary minus, calls and atoms (with postfix
//! `†`); `*`; `^`; `|`; binary `+`/`-`. All binary operators are left
//! associative.

use crate::error::{Error, Result};
use crate::expr::lexer::{line_col, syntax_error, tokenize, Spanned, Tok};
use crate::scalar::Rational;
use crate::signature::Signature;

use num_traits::{Signed, ToPrimitive};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Rev,
    Inv,
    Conj,
    Grade,
    Mag,
    Sp,
}

impl Func {
    fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "rev" => Func::Rev,
            "inv" => Func::Inv,
            "conj" => Func::Conj,
            "grade" => Func::Grade,
            "mag" => Func::Mag,
            "sp" => Func::Sp,
            _ => return None,
        })
    }

    fn arity(self) -> usize {
        match self {
            Func::Grade | Func::Sp => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Scalar(Rational),
    /// The imaginary unit `i`; only valid over complex scalars.
    Imaginary,
    BladeLit { e: Vec<usize>, f: Vec<usize> },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Wedge(Box<Expr>, Box<Expr>),
    Dot(Box<Expr>, Box<Expr>),
    /// `grade(x, k)` keeps its integer argument out of the expression tree.
    Grade(Box<Expr>, usize),
    Call(Func, Vec<Expr>),
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Spanned>,
    pos: usize,
    sig: Signature,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn offset(&self) -> usize {
        self.toks
            .get(self.pos)
            .map_or(self.src.len(), |t| t.offset)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        syntax_error(self.src, self.offset(), msg)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &Tok, what: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.dot()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.dot()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.dot()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn dot(&mut self) -> Result<Expr> {
        let mut lhs = self.wedge()?;
        while self.eat(&Tok::Pipe) {
            lhs = Expr::Dot(Box::new(lhs), Box::new(self.wedge()?));
        }
        Ok(lhs)
    }

    fn wedge(&mut self) -> Result<Expr> {
        let mut lhs = self.product()?;
        while self.eat(&Tok::Caret) {
            lhs = Expr::Wedge(Box::new(lhs), Box::new(self.product()?));
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::Star) {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let mut atom = self.atom()?;
        while self.eat(&Tok::Dagger) {
            atom = Expr::Call(Func::Rev, vec![atom]);
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Expr> {
        let offset = self.offset();
        let Some(tok) = self.peek().cloned() else {
            return Err(self.err("unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Tok::Number(r) => Ok(Expr::Scalar(r)),
            Tok::Blade { e, f } => {
                self.validate_blade(offset, &e, &f)?;
                Ok(Expr::BladeLit { e, f })
            }
            Tok::LParen => {
                let inner = self.sum()?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::Ident(name) if name == "i" => Ok(Expr::Imaginary),
            Tok::Ident(name) => {
                let func = Func::from_name(&name).ok_or_else(|| {
                    syntax_error(self.src, offset, format!("unknown name '{name}'"))
                })?;
                self.call(func, offset)
            }
            other => {
                self.pos -= 1;
                Err(self.err(format!("unexpected token {other:?}")))
            }
        }
    }

    fn call(&mut self, func: Func, offset: usize) -> Result<Expr> {
        self.expect(&Tok::LParen, "'(' after function name")?;
        let first = self.sum()?;
        if func == Func::Grade {
            self.expect(&Tok::Comma, "',' in grade(x, k)")?;
            let k_offset = self.offset();
            let k = match self.peek() {
                Some(Tok::Number(r)) if r.is_integer() && !r.is_negative() => r.to_usize(),
                _ => None,
            }
            .ok_or_else(|| syntax_error(self.src, k_offset, "grade index must be a non-negative integer"))?;
            self.pos += 1;
            self.expect(&Tok::RParen, "')'")?;
            return Ok(Expr::Grade(Box::new(first), k));
        }
        let mut args = vec![first];
        while self.eat(&Tok::Comma) {
            args.push(self.sum()?);
        }
        self.expect(&Tok::RParen, "')'")?;
        if args.len() != func.arity() {
            return Err(syntax_error(
                self.src,
                offset,
                format!("{func:?} takes {} argument(s), got {}", func.arity(), args.len()),
            ));
        }
        Ok(Expr::Call(func, args))
    }

    fn validate_blade(&self, offset: usize, e: &[usize], f: &[usize]) -> Result<()> {
        let (line, col) = line_col(self.src, offset);
        let fail = |message: String| Error::Validation { line, col, message };
        for (group, idxs, count) in [("e", e, self.sig.p()), ("f", f, self.sig.q())] {
            if idxs.windows(2).any(|w| w[0] >= w[1]) {
                return Err(fail(format!("{group}-indices must be strictly ascending")));
            }
            if let Some(bad) = idxs.iter().find(|&&i| i == 0 || i > count) {
                return Err(fail(format!("{group}{bad} is not a generator of {}", self.sig)));
            }
        }
        Ok(())
    }
}

/// Parses `text` against `sig`, validating blade literals.
pub fn parse(text: &str, sig: Signature) -> Result<Expr> {
    let toks = tokenize(text)?;
    let mut parser = Parser {
        src: text,
        toks,
        pos: 0,
        sig,
    };
    if parser.toks.is_empty() {
        return Err(parser.err("empty expression"));
    }
    let expr = parser.sum()?;
    if parser.pos < parser.toks.len() {
        return Err(parser.err("unexpected trailing input"));
    }
    Ok(expr)
}
