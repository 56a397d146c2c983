//! Polynomial string grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := unary (('*'|'/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' index | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. Division is only allowed by nonzero constants, so
//! `3/5*x1` and `x1/3` both work.

use std::collections::BTreeMap;
use std::fmt;

use ccq_core::poly::{BiPoly, Rational, Term, UniPoly};
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column inside the polynomial string.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Sparse polynomial in `x1, x2` keyed by `(e1, e2)`.
type Poly = BTreeMap<(u32, u32), Rational>;

fn constant(c: Rational) -> Poly {
    let mut p = Poly::new();
    if !c.is_zero() {
        p.insert((0, 0), c);
    }
    p
}

fn add_into(acc: &mut Poly, p: &Poly, sign: i32) {
    for (k, c) in p {
        let e = acc.entry(*k).or_insert_with(Rational::zero);
        if sign < 0 {
            *e -= c;
        } else {
            *e += c;
        }
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for ((a1, a2), ca) in a {
        for ((b1, b2), cb) in b {
            let key = (a1 + b1, a2 + b2);
            let e = out.entry(key).or_insert_with(Rational::zero);
            *e += ca * cb;
            if e.is_zero() {
                out.remove(&key);
            }
        }
    }
    out
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
    max_var: u32,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> ParseError {
        let column = self.chars.get(self.pos).map(|c| c.0 + 1).unwrap_or(self.src.chars().count() + 1);
        ParseError { column, message: message.into() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        s.parse().ok()
    }

    fn small_integer(&mut self, what: &str) -> Result<u32, ParseError> {
        let at = self.pos;
        let n = self.integer().ok_or_else(|| self.err(format!("expected {what}")))?;
        u32::try_from(n).map_err(|_| {
            self.pos = at;
            self.err(format!("{what} too large"))
        })
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = Poly::new();
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let t = self.term()?;
            add_into(&mut acc, &t, sign);
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let f = self.unary()?;
                acc = mul(&acc, &f);
            } else if self.peek() == Some('/') {
                self.pos += 1;
                let at = self.pos;
                let f = self.unary()?;
                let c = match f.len() {
                    1 if f.contains_key(&(0, 0)) => f[&(0, 0)].clone(),
                    _ => {
                        self.pos = at;
                        return Err(self.err("division only by nonzero constants"));
                    }
                };
                acc = mul(&acc, &constant(c.recip()));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if self.eat('-') {
            let p = self.unary()?;
            let mut out = Poly::new();
            add_into(&mut out, &p, -1);
            return Ok(out);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.small_integer("exponent")?;
            if e > 64 {
                return Err(self.err("exponent above 64"));
            }
            let mut out = constant(Rational::one());
            for _ in 0..e {
                out = mul(&out, &base);
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let p = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(p)
            }
            Some('x') => {
                self.pos += 1;
                let at = self.pos;
                let i = self.small_integer("variable index")?;
                if i == 0 || i > self.max_var {
                    self.pos = at;
                    return Err(self.err(format!("variable x{i} not allowed here (x1..x{})", self.max_var)));
                }
                let key = if i == 1 { (1, 0) } else { (0, 1) };
                Ok(BTreeMap::from([(key, Rational::one())]))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer().unwrap();
                Ok(constant(Rational::from_integer(n)))
            }
            Some(c) => Err(self.err(format!("unexpected '{c}'"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

fn parse(src: &str, max_var: u32) -> Result<Poly, ParseError> {
    let chars: Vec<(usize, char)> =
        src.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut p = Parser { chars, pos: 0, src, max_var };
    if p.peek().is_none() {
        return Err(p.err("empty polynomial"));
    }
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

pub fn parse_bivariate(src: &str) -> Result<BiPoly, ParseError> {
    let p = parse(src, 2)?;
    Ok(BiPoly::from_terms(p.into_iter().map(|((e1, e2), coeff)| Term { e1, e2, coeff })))
}

pub fn parse_univariate(src: &str) -> Result<UniPoly, ParseError> {
    let p = parse(src, 1)?;
    let deg = p.keys().map(|k| k.0).max().unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for ((e1, _), c) in p {
        coeffs[e1 as usize] = c;
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// Parses `"3"`, `"-3/5"`.
pub fn parse_rational(src: &str) -> Result<Rational, ParseError> {
    let p = parse(src, 0)?;
    match p.len() {
        0 => Ok(Rational::zero()),
        1 if p.contains_key(&(0, 0)) => Ok(p[&(0, 0)].clone()),
        _ => Err(ParseError { column: 1, message: "expected a rational constant".into() }),
    }
}
