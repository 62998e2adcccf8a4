//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' exponent)?
//! atom   := rational | identifier | '(' expr ')'
//! ```
//!
//! A rational literal is `digits` or `digits/digits` with no spaces; there
//! is no general division operator. Juxtaposition is not multiplication.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{ParseError, ParseErrorKind};
use crate::poly::{GeneratorSet, Polynomial};
use crate::rational::Rational;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 256;

/// Text to parse together with the ring it is parsed against.
#[derive(Debug, Clone, Copy)]
pub struct ExprSource<'a> {
    pub text: &'a str,
    pub gens: &'a Arc<GeneratorSet>,
    /// Extra names resolved after the generators (named classes).
    pub bindings: Option<&'a HashMap<String, Polynomial>>,
}

impl<'a> ExprSource<'a> {
    pub fn new(text: &'a str, gens: &'a Arc<GeneratorSet>) -> Self {
        ExprSource { text, gens, bindings: None }
    }

    pub fn with_bindings(mut self, bindings: &'a HashMap<String, Polynomial>) -> Self {
        self.bindings = Some(bindings);
        self
    }

    pub fn parse(&self) -> Result<Polynomial, ParseError> {
        parse_source(self)
    }
}

pub fn parse(text: &str, gens: &Arc<GeneratorSet>) -> Result<Polynomial, ParseError> {
    ExprSource::new(text, gens).parse()
}

pub fn parse_source(src: &ExprSource<'_>) -> Result<Polynomial, ParseError> {
    let tokens = tokenize(src.text)?;
    let mut parser = Parser { tokens, at: 0, src };
    let p = parser.expr()?;
    match parser.peek() {
        (Token::End, _) => Ok(p),
        (tok, pos) => Err(unexpected(tok, *pos, "end of input")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Number(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Number(n) => format!("number `{n}`"),
            Token::Ident(s) => format!("identifier `{s}`"),
            Token::Plus => "`+`".into(),
            Token::Minus => "`-`".into(),
            Token::Star => "`*`".into(),
            Token::Caret => "`^`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::End => "end of input".into(),
        }
    }
}

fn unexpected(tok: &Token, position: usize, expected: &'static str) -> ParseError {
    ParseError { kind: ParseErrorKind::Unexpected { found: tok.describe(), expected }, position }
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if !b.is_ascii() {
            return Err(ParseError { kind: ParseErrorKind::NonAsciiInput, position: i });
        }
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'/' {
                    i += 1;
                    let denom_start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == denom_start {
                        return Err(ParseError { kind: ParseErrorKind::BadLiteral(text[start..i].to_string()), position: start });
                    }
                }
                out.push((Token::Number(text[start..i].to_string()), start));
                continue;
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Token::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                return Err(ParseError {
                    kind: ParseErrorKind::Unexpected { found: format!("`{}`", b as char), expected: "an expression" },
                    position: i,
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Token::End, text.len()));
    Ok(out)
}

struct Parser<'s, 'a> {
    tokens: Vec<(Token, usize)>,
    at: usize,
    src: &'s ExprSource<'a>,
}

impl Parser<'_, '_> {
    fn peek(&self) -> (&Token, &usize) {
        let (t, p) = &self.tokens[self.at];
        (t, p)
    }

    fn bump(&mut self) -> (Token, usize) {
        let item = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        item
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().0 {
                Token::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Token::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek().0 == Token::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        if *self.peek().0 == Token::Minus {
            self.bump();
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if *self.peek().0 != Token::Caret {
            return Ok(base);
        }
        self.bump();
        let exp = self.exponent()?;
        Ok(base.pow(exp))
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let (tok, pos) = self.bump();
        match tok {
            Token::Number(n) => integer_exponent(&n, pos),
            Token::Minus => Err(ParseError { kind: ParseErrorKind::NegativeExponent, position: pos }),
            Token::LParen => {
                let (inner, inner_pos) = self.bump();
                let exp = match inner {
                    Token::Number(n) => integer_exponent(&n, inner_pos)?,
                    Token::Minus => return Err(ParseError { kind: ParseErrorKind::NegativeExponent, position: inner_pos }),
                    other => return Err(unexpected(&other, inner_pos, "a non-negative integer exponent")),
                };
                match self.bump() {
                    (Token::RParen, _) => Ok(exp),
                    (other, p) => Err(unexpected(&other, p, "`)`")),
                }
            }
            other => Err(unexpected(&other, pos, "a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let (tok, pos) = self.bump();
        let gens = self.src.gens;
        match tok {
            Token::Number(n) => {
                let value: Rational = n.parse().map_err(|_| ParseError { kind: ParseErrorKind::BadLiteral(n.clone()), position: pos })?;
                Ok(Polynomial::constant(gens, value))
            }
            Token::Ident(name) => {
                if let Some(i) = gens.index_of(&name) {
                    return Ok(Polynomial::var(gens, i));
                }
                if let Some(p) = self.src.bindings.and_then(|b| b.get(&name)) {
                    return Ok(p.clone());
                }
                Err(ParseError { kind: ParseErrorKind::UnknownIdentifier(name), position: pos })
            }
            Token::LParen => {
                let inner = self.expr()?;
                match self.bump() {
                    (Token::RParen, _) => Ok(inner),
                    (other, p) => Err(unexpected(&other, p, "`)`")),
                }
            }
            other => Err(unexpected(&other, pos, "a number, identifier or `(`")),
        }
    }
}

fn integer_exponent(text: &str, position: usize) -> Result<u32, ParseError> {
    if text.contains('/') {
        return Err(unexpected(&Token::Number(text.to_string()), position, "a non-negative integer exponent"));
    }
    match text.parse::<u32>() {
        Ok(e) if e <= MAX_EXPONENT => Ok(e),
        _ => Err(ParseError { kind: ParseErrorKind::ExponentTooLarge, position }),
    }
}
