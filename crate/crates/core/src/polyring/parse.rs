//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr    := ["+" | "-"] term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary)*
//! unary   := "-" unary | power
//! power   := primary ["^" unary]        exponent must be a constant integer
//! primary := integer | "i" | ident | ident "(" ident ")" | "(" expr ")"
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{Polynomial, VarContext};
use crate::coeff::GaussianRational;
use crate::error::{ParseError, ParseErrorKind};

/// Maps identifiers and `conj(identifier)` to polynomials.
pub trait Resolver {
    fn context(&self) -> &VarContext;
    fn variable(&self, name: &str) -> Option<Polynomial>;
    /// `None` means the name is unknown.
    fn conjugate(&self, name: &str) -> Option<Polynomial>;
}

/// Resolves names directly against a context; `conj(v)` maps to the σ-twin
/// of `v` when the context is paired.
pub struct ContextResolver<'a>(pub &'a VarContext);

impl Resolver for ContextResolver<'_> {
    fn context(&self) -> &VarContext {
        self.0
    }

    fn variable(&self, name: &str) -> Option<Polynomial> {
        Polynomial::var(self.0, name).ok()
    }

    fn conjugate(&self, name: &str) -> Option<Polynomial> {
        let i = self.0.index_of(name)?;
        let j = self.0.partner(i).ok()?;
        Some(Polynomial::var_at(self.0, j))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexed {
    toks: Vec<(Tok, usize)>,
    end_col: usize,
}

fn lex(src: &str, line: usize, col0: usize) -> Result<Lexed, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = col0 + k;
        if c.is_whitespace() {
            k += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            toks.push((t, col));
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().collect();
            toks.push((Tok::Int(digits.parse().expect("digit run")), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            toks.push((Tok::Ident(chars[start..k].iter().collect()), col));
        } else {
            return Err(ParseError::new(
                line,
                col,
                ParseErrorKind::Syntax(format!("unexpected character `{c}`")),
            ));
        }
    }
    Ok(Lexed { toks, end_col: col0 + chars.len() })
}

struct Parser<'a, R: Resolver> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    resolver: &'a R,
}

impl<R: Resolver> Parser<'_, R> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end_col)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError::new(self.line, self.col(), kind)
    }

    fn syntax(&self, msg: &str) -> ParseError {
        self.err(ParseErrorKind::Syntax(msg.to_string()))
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(&format!("expected {what}")))
        }
    }

    fn ctx(&self) -> &VarContext {
        self.resolver.context()
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = match self.peek() {
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                -self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.try_mul(&rhs).map_err(|_| self.degree_overflow())?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let col = self.col();
                    let rhs = self.unary()?;
                    let c = rhs.as_constant().ok_or_else(|| {
                        ParseError::new(self.line, col, ParseErrorKind::NonConstantDivisor)
                    })?;
                    let inv = c.inv().ok_or_else(|| {
                        ParseError::new(self.line, col, ParseErrorKind::DivisionByZero)
                    })?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn degree_overflow(&self) -> ParseError {
        self.err(ParseErrorKind::DegreeLimit)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let col = self.col();
        let exp = self.unary()?;
        let bad = || ParseError::new(self.line, col, ParseErrorKind::NonConstantExponent);
        let c = exp.as_constant().ok_or_else(bad)?;
        if !c.is_real() || !c.re().is_integer() || c.re().is_negative() {
            return Err(bad());
        }
        let e = c
            .re()
            .to_integer()
            .to_u32()
            .filter(|&e| e < (1 << 31))
            .ok_or_else(|| self.degree_overflow())?;
        base.try_pow(e).map_err(|_| self.degree_overflow())
    }

    fn primary(&mut self) -> Result<Polynomial, ParseError> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Polynomial::constant(
                self.ctx(),
                GaussianRational::new(BigRational::from_integer(n), BigRational::zero()),
            )),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                if self.peek() == Some(&Tok::LParen) {
                    if name != "conj" {
                        return Err(ParseError::new(
                            self.line,
                            col,
                            ParseErrorKind::UnknownFunction(name),
                        ));
                    }
                    self.pos += 1;
                    let arg_col = self.col();
                    let arg = match self.bump() {
                        Some(Tok::Ident(a)) => a,
                        _ => {
                            return Err(ParseError::new(
                                self.line,
                                arg_col,
                                ParseErrorKind::Syntax("conj expects a variable name".into()),
                            ))
                        }
                    };
                    self.expect(Tok::RParen, "`)` after conj argument")?;
                    return self.resolver.conjugate(&arg).ok_or_else(|| {
                        ParseError::new(self.line, arg_col, ParseErrorKind::UnknownVariable(arg))
                    });
                }
                if name == "i" {
                    return Ok(Polynomial::constant(self.ctx(), GaussianRational::i()));
                }
                self.resolver.variable(&name).ok_or_else(|| {
                    ParseError::new(self.line, col, ParseErrorKind::UnknownVariable(name))
                })
            }
            Some(_) => {
                self.pos -= 1;
                Err(self.syntax("expected a number, variable or `(`"))
            }
            None => Err(self.syntax("unexpected end of expression")),
        }
    }
}

/// Parse `src` as one expression. `line` and `col0` (1-based column of the
/// first character) position error messages inside a larger file.
pub fn parse_expression<R: Resolver>(
    src: &str,
    resolver: &R,
    line: usize,
    col0: usize,
) -> Result<Polynomial, ParseError> {
    let Lexed { toks, end_col } = lex(src, line, col0)?;
    let mut p = Parser { toks, pos: 0, line, end_col, resolver };
    if p.peek().is_none() {
        return Err(p.syntax("empty expression"));
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(e)
}

impl Polynomial {
    /// Parse an expression over the variables of `ctx`; `conj(v)` denotes
    /// the σ-twin of `v` in paired contexts.
    pub fn parse(ctx: &VarContext, src: &str) -> Result<Polynomial, ParseError> {
        parse_expression(src, &ContextResolver(ctx), 1, 1)
    }
}
