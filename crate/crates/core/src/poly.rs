//! Dense univariate polynomials over a semiring.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::semiring::{Element, Semiring};

/// Coefficients are stored low degree first and kept canonical: the
/// sequence is either empty or ends in a coefficient that is not the
/// semiring zero.
#[derive(Clone, Debug)]
pub struct Polynomial {
    semiring: Arc<Semiring>,
    coeffs: Vec<Element>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_semiring(&self.semiring, &other.semiring) && self.coeffs == other.coeffs
    }
}

impl Eq for Polynomial {}

pub(crate) fn same_semiring(a: &Arc<Semiring>, b: &Arc<Semiring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Mul,
}

impl Polynomial {
    /// Builds a polynomial from low-degree-first coefficients, stripping
    /// trailing zeros.
    pub fn new(semiring: Arc<Semiring>, coeffs: Vec<Element>) -> Result<Self> {
        for c in &coeffs {
            semiring.check(c)?;
        }
        Ok(Self::from_checked(semiring, coeffs))
    }

    pub(crate) fn from_checked(semiring: Arc<Semiring>, mut coeffs: Vec<Element>) -> Self {
        while coeffs.last().is_some_and(|c| semiring.is_zero(c)) {
            coeffs.pop();
        }
        Polynomial { semiring, coeffs }
    }

    pub fn zero(semiring: Arc<Semiring>) -> Self {
        Polynomial {
            semiring,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(semiring: Arc<Semiring>, c: Element) -> Result<Self> {
        Self::new(semiring, vec![c])
    }

    pub fn semiring(&self) -> &Arc<Semiring> {
        &self.semiring
    }

    pub fn coefficients(&self) -> &[Element] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, the semiring zero past the degree.
    pub fn coeff(&self, k: usize) -> Element {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.semiring.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_nonconstant(&self) -> bool {
        self.degree().is_some_and(|d| d >= 1)
    }

    pub fn leading(&self) -> Option<&Element> {
        self.coeffs.last()
    }

    fn ensure_same(&self, other: &Polynomial) -> Result<()> {
        if same_semiring(&self.semiring, &other.semiring) {
            Ok(())
        } else {
            Err(Error::SemiringMismatch(format!(
                "`{}` and `{}`",
                self.semiring.name(),
                other.semiring.name()
            )))
        }
    }

    pub fn arith(&self, op: PolyOp, other: &Polynomial) -> Result<Polynomial> {
        self.ensure_same(other)?;
        Ok(match op {
            PolyOp::Add => self.add_unchecked(other),
            PolyOp::Mul => self.mul_unchecked(other),
        })
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(PolyOp::Add, other)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(PolyOp::Mul, other)
    }

    fn add_unchecked(&self, other: &Polynomial) -> Polynomial {
        let s = &self.semiring;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| s.add(&self.coeff(k), &other.coeff(k))).collect();
        Self::from_checked(s.clone(), coeffs)
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let s = &self.semiring;
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(s.clone());
        }
        let mut coeffs = vec![s.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, b) in self.coeffs.iter().enumerate() {
            for (j, c) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = s.add(&coeffs[i + j], &s.mul(b, c));
            }
        }
        Self::from_checked(s.clone(), coeffs)
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &Element) -> Result<Element> {
        let s = &self.semiring;
        s.check(x)?;
        Ok(self
            .coeffs
            .iter()
            .rev()
            .fold(s.zero(), |acc, c| s.add(&s.mul(&acc, x), c)))
    }

    /// Parses `poly := term ('+' term)*` with terms `c`, `c*x^k`, `x^k`.
    /// Repeated powers are combined with the semiring addition.
    pub fn parse(text: &str, semiring: &Arc<Semiring>) -> Result<Polynomial> {
        Parser::new(text, semiring).parse()
    }
}

impl fmt::Display for Polynomial {
    /// Highest degree first, with explicit `*` and `^`. Coefficients equal
    /// to the semiring one are omitted in front of a power of `x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.semiring;
        if self.coeffs.is_empty() {
            return f.write_str(&s.format_element(&s.zero()));
        }
        let one = s.one();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if s.is_zero(c) {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let lit = s.format_element(c);
            match (k, *c == one) {
                (0, _) => f.write_str(&lit)?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{lit}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{lit}*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token<'a> {
    Plus,
    Star,
    Caret,
    Word(&'a str),
}

struct Parser<'a> {
    tokens: Vec<(usize, Token<'a>)>,
    pos: usize,
    end: usize,
    semiring: &'a Arc<Semiring>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, semiring: &'a Arc<Semiring>) -> Self {
        let mut tokens = Vec::new();
        let mut word_start: Option<usize> = None;
        let flush = |start: &mut Option<usize>, end: usize, tokens: &mut Vec<(usize, Token<'a>)>| {
            if let Some(s) = start.take() {
                tokens.push((s, Token::Word(&text[s..end])));
            }
        };
        for (i, ch) in text.char_indices() {
            let punct = match ch {
                '+' => Some(Token::Plus),
                '*' => Some(Token::Star),
                '^' => Some(Token::Caret),
                _ => None,
            };
            if ch.is_whitespace() || punct.is_some() {
                flush(&mut word_start, i, &mut tokens);
                if let Some(p) = punct {
                    tokens.push((i, p));
                }
            } else if word_start.is_none() {
                word_start = Some(i);
            }
        }
        flush(&mut word_start, text.len(), &mut tokens);
        Parser {
            tokens,
            pos: 0,
            end: text.len(),
            semiring,
        }
    }

    fn peek(&self) -> Option<&Token<'a>> {
        self.tokens.get(self.pos).map(|t| &t.1)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::PolySyntax {
            position: self.position(),
            message: message.into(),
        }
    }

    fn parse(mut self) -> Result<Polynomial> {
        let s = self.semiring.clone();
        let mut coeffs: Vec<Element> = Vec::new();
        loop {
            let (k, c) = self.term()?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, s.zero());
            }
            coeffs[k] = s.add(&coeffs[k], &c);
            match self.peek() {
                None => break,
                Some(Token::Plus) => self.pos += 1,
                Some(_) => return Err(self.error("expected `+` or end of input")),
            }
        }
        Ok(Polynomial::from_checked(s, coeffs))
    }

    fn term(&mut self) -> Result<(usize, Element)> {
        match self.peek() {
            Some(Token::Word("x")) => Ok((self.xpow()?, self.semiring.one())),
            Some(Token::Word(w)) => {
                let w = *w;
                let c = self.semiring.parse_element(w)?;
                self.pos += 1;
                if self.peek() == Some(&Token::Star) {
                    self.pos += 1;
                    if self.peek() != Some(&Token::Word("x")) {
                        return Err(self.error("expected `x` after `*`"));
                    }
                    Ok((self.xpow()?, c))
                } else {
                    Ok((0, c))
                }
            }
            _ => Err(self.error("expected a coefficient or `x`")),
        }
    }

    fn xpow(&mut self) -> Result<usize> {
        self.pos += 1;
        if self.peek() != Some(&Token::Caret) {
            return Ok(1);
        }
        self.pos += 1;
        match self.peek() {
            Some(Token::Word(w)) if w.bytes().all(|b| b.is_ascii_digit()) => {
                let e = w.parse().map_err(|_| self.error("exponent too large"))?;
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.error("expected a natural exponent after `^`")),
        }
    }
}
