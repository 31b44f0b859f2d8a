//! A small reader for polynomial expressions such as
//! `x1^2*x2 + q*(1-t)/(1-q*t^2)*x1*x2*x3`.
//!
//! Atoms are integers, `q`, `t`, `v` (with `t = v^2`) and `x<i>` or `x_<i>`.
//! Operators are `+ - * / ^` and parentheses; juxtaposition multiplies.
//! The LaTeX forms `\frac{a}{b}`, `\cdot`, `\left(` and `\right)` are
//! also read.
//! Exponents are integers or fractions `a/b` in parentheses or braces;
//! a fractional power is accepted only where it lands on an integer power
//! of `v`. A divisor must be a single term.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::coeff_field::RatFunc;
use crate::error::{invalid, Result};
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Q,
    T,
    V,
    X(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
    Frac,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        match c {
            ' ' | '\t' | '\n' => k += 1,
            '0'..='9' => {
                let start = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let digits: String = chars[start..k].iter().collect();
                out.push(Tok::Num(digits.parse().expect("digits")));
            }
            'q' => {
                out.push(Tok::Q);
                k += 1;
            }
            't' => {
                out.push(Tok::T);
                k += 1;
            }
            'v' => {
                out.push(Tok::V);
                k += 1;
            }
            'x' => {
                k += 1;
                if k < chars.len() && chars[k] == '_' {
                    k += 1;
                }
                let braced = k < chars.len() && chars[k] == '{';
                if braced {
                    k += 1;
                }
                let start = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                if start == k {
                    return invalid(format!("variable index missing in {s:?}"));
                }
                let idx: usize = chars[start..k].iter().collect::<String>().parse().expect("digits");
                if braced {
                    if k >= chars.len() || chars[k] != '}' {
                        return invalid(format!("unclosed brace in {s:?}"));
                    }
                    k += 1;
                }
                out.push(Tok::X(idx));
            }
            '+' => {
                out.push(Tok::Plus);
                k += 1;
            }
            '-' | '−' => {
                out.push(Tok::Minus);
                k += 1;
            }
            '*' | '·' => {
                out.push(Tok::Star);
                k += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                k += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                k += 1;
            }
            '(' | '{' | '[' => {
                out.push(Tok::Open);
                k += 1;
            }
            ')' | '}' | ']' => {
                out.push(Tok::Close);
                k += 1;
            }
            '\\' => {
                k += 1;
                let start = k;
                while k < chars.len() && chars[k].is_ascii_alphabetic() {
                    k += 1;
                }
                let cmd: String = chars[start..k].iter().collect();
                match cmd.as_str() {
                    "frac" => out.push(Tok::Frac),
                    "cdot" => out.push(Tok::Star),
                    "left" | "right" => {}
                    _ => return invalid(format!("unknown command \\{cmd} in {s:?}")),
                }
            }
            _ => return invalid(format!("unexpected character {c:?} in {s:?}")),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    n: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(ref u) if *u == t => Ok(()),
            other => invalid(format!("expected {t:?}, found {other:?}")),
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?)?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.mul(&invert_term(&d)?)?;
                }
                Some(Tok::Num(_) | Tok::Q | Tok::T | Tok::V | Tok::X(_) | Tok::Open | Tok::Frac) => {
                    acc = acc.mul(&self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<LaurentPoly> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base.value);
        }
        self.pos += 1;
        let e = self.exponent()?;
        match base.kind {
            AtomKind::T => {
                let twice = e.clone() * BigRational::from_integer(2.into());
                if !twice.is_integer() {
                    return invalid(format!("t^{e} is not an integer power of v"));
                }
                Ok(LaurentPoly::constant(self.n, RatFunc::qv(0, to_i64(twice.to_integer())?)))
            }
            _ => {
                if !e.is_integer() {
                    return invalid(format!("fractional exponent {e} on a base other than t"));
                }
                pow(&base.value, to_i64(e.to_integer())?)
            }
        }
    }

    fn exponent(&mut self) -> Result<BigRational> {
        match self.next() {
            Some(Tok::Num(k)) => Ok(BigRational::from_integer(k)),
            Some(Tok::Minus) => match self.next() {
                Some(Tok::Num(k)) => Ok(BigRational::from_integer(-k)),
                other => invalid(format!("bad exponent near {other:?}")),
            },
            Some(Tok::Open) => {
                let neg = if self.peek() == Some(&Tok::Minus) {
                    self.pos += 1;
                    true
                } else {
                    false
                };
                let num = match self.next() {
                    Some(Tok::Num(k)) => k,
                    other => return invalid(format!("bad exponent near {other:?}")),
                };
                let mut r = BigRational::from_integer(num);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.next() {
                        Some(Tok::Num(d)) if !d.is_zero() => r /= BigRational::from_integer(d),
                        other => return invalid(format!("bad exponent denominator {other:?}")),
                    }
                }
                self.expect(Tok::Close)?;
                Ok(if neg { -r } else { r })
            }
            other => invalid(format!("bad exponent near {other:?}")),
        }
    }

    fn atom(&mut self) -> Result<Atom> {
        let n = self.n;
        let c = |r: RatFunc| LaurentPoly::constant(n, r);
        let (kind, value) = match self.next() {
            Some(Tok::Num(k)) => (AtomKind::Other, c(RatFunc::from_bigint(k))),
            Some(Tok::Q) => (AtomKind::Other, c(RatFunc::q())),
            Some(Tok::T) => (AtomKind::T, c(RatFunc::t())),
            Some(Tok::V) => (AtomKind::Other, c(RatFunc::v())),
            Some(Tok::X(i)) => {
                if i == 0 || i > n {
                    return invalid(format!("x{i} out of range for n={n}"));
                }
                (AtomKind::Other, LaurentPoly::var(n, i))
            }
            Some(Tok::Open) => {
                let e = self.expr()?;
                self.expect(Tok::Close)?;
                (AtomKind::Other, e)
            }
            Some(Tok::Frac) => {
                let num = self.atom()?.value;
                let den = self.atom()?.value;
                (AtomKind::Other, num.mul(&invert_term(&den)?)?)
            }
            other => return invalid(format!("unexpected token {other:?}")),
        };
        Ok(Atom { kind, value })
    }
}

enum AtomKind {
    T,
    Other,
}

struct Atom {
    kind: AtomKind,
    value: LaurentPoly,
}

fn to_i64(k: BigInt) -> Result<i64> {
    match k.to_i64() {
        Some(v) if v.abs() < 1 << 20 => Ok(v),
        _ => invalid("exponent out of range"),
    }
}

fn invert_term(d: &LaurentPoly) -> Result<LaurentPoly> {
    let mut it = d.terms();
    match (it.next(), it.next()) {
        (Some((e, c)), None) => {
            let neg: Vec<i64> = e.iter().map(|x| -x).collect();
            Ok(LaurentPoly::monomial(neg, c.inv()?))
        }
        (None, _) => Err(crate::Error::Arithmetic("division by zero".into())),
        _ => invalid("divisor must be a single term"),
    }
}

fn pow(b: &LaurentPoly, e: i64) -> Result<LaurentPoly> {
    let base = if e < 0 { invert_term(b)? } else { b.clone() };
    let mut acc = LaurentPoly::one(b.n());
    for _ in 0..e.unsigned_abs() {
        acc = acc.mul(&base)?;
    }
    Ok(acc)
}

/// Reads a Laurent polynomial in `x_1..x_n` with coefficients in `Q(q, v)`.
pub fn parse_poly(n: usize, s: &str) -> Result<LaurentPoly> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return invalid("empty expression");
    }
    let mut p = Parser { toks, pos: 0, n };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return invalid(format!("trailing input in {s:?}"));
    }
    Ok(out)
}

/// Reads an element of `Q(q, v)`.
pub fn parse_coeff(s: &str) -> Result<RatFunc> {
    let p = parse_poly(0, s)?;
    Ok(p.coeff(&crate::laurent::Weight::zero(0)))
}
