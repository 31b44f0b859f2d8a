//! Sparse integer polynomials in the two parameters `q` and `v`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent pair `q^q v^v`. Ordered q-degree first, then v-degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    pub q: u32,
    pub v: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { q: 0, v: 0 };

    pub fn new(q: u32, v: u32) -> Self {
        Mono { q, v }
    }

    fn mul(self, o: Mono) -> Mono {
        Mono { q: self.q + o.q, v: self.v + o.v }
    }

    fn divides(self, o: Mono) -> bool {
        self.q <= o.q && self.v <= o.v
    }
}

/// A polynomial in `Z[q, v]` with terms kept sorted by [`Mono`] and no zero
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly2 {
    terms: Vec<(Mono, BigInt)>,
}

impl IntPoly2 {
    pub fn zero() -> Self {
        IntPoly2 { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(Mono::ONE, c)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    pub fn monomial(m: Mono, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            IntPoly2 { terms: vec![(m, c)] }
        }
    }

    /// `q^a v^b` with coefficient 1.
    pub fn qv(a: u32, b: u32) -> Self {
        Self::monomial(Mono::new(a, b), BigInt::one())
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, BigInt)>>(it: I) -> Self {
        let mut v: Vec<(Mono, BigInt)> = it.into_iter().collect();
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        IntPoly2 { terms: merge_sorted(v) }
    }

    /// Builds from `(q, v, c)` triples with small coefficients.
    pub fn from_small(terms: &[(u32, u32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(q, v, c)| (Mono::new(q, v), BigInt::from(c))))
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, BigInt)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::ONE && self.terms[0].1.is_one()
    }

    /// True for a nonzero integer constant.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::ONE
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading term under the q-major order.
    pub fn leading(&self) -> Option<&(Mono, BigInt)> {
        self.terms.last()
    }

    pub fn coeff(&self, m: Mono) -> BigInt {
        match self.terms.binary_search_by(|t| t.0.cmp(&m)) {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn deg_q(&self) -> u32 {
        self.terms.iter().map(|t| t.0.q).max().unwrap_or(0)
    }

    pub fn deg_v(&self) -> u32 {
        self.terms.iter().map(|t| t.0.v).max().unwrap_or(0)
    }

    /// Componentwise minimum exponent (the monomial content).
    pub fn min_mono(&self) -> Mono {
        let q = self.terms.iter().map(|t| t.0.q).min().unwrap_or(0);
        let v = self.terms.iter().map(|t| t.0.v).min().unwrap_or(0);
        Mono { q, v }
    }

    /// Nonnegative gcd of the integer coefficients.
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// True when only even powers of `v` occur.
    pub fn is_even_in_v(&self) -> bool {
        self.terms.iter().all(|t| t.0.v % 2 == 0)
    }

    pub fn neg(&self) -> Self {
        IntPoly2 { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        IntPoly2 { terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect() }
    }

    /// Divides every coefficient by `k`, which must divide them exactly.
    pub fn div_int_exact(&self, k: &BigInt) -> Self {
        if k.is_one() {
            return self.clone();
        }
        IntPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    debug_assert!((c % k).is_zero());
                    (*m, c / k)
                })
                .collect(),
        }
    }

    pub fn mul_mono(&self, m: Mono) -> Self {
        if m == Mono::ONE {
            return self.clone();
        }
        IntPoly2 { terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect() }
    }

    /// Divides by a monomial that divides every term.
    pub fn div_mono(&self, m: Mono) -> Self {
        if m == Mono::ONE {
            return self.clone();
        }
        IntPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(a, c)| {
                    debug_assert!(m.divides(*a));
                    (Mono { q: a.q - m.q, v: a.v - m.v }, c.clone())
                })
                .collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        IntPoly2 { terms: merge_two(&self.terms, &o.terms, false) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.neg();
        }
        IntPoly2 { terms: merge_two(&self.terms, &o.terms, true) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return o.mul_mono(*m).scale(c);
        }
        if o.terms.len() == 1 {
            let (m, c) = &o.terms[0];
            return self.mul_mono(*m).scale(c);
        }
        let lo = self.min_mono().mul(o.min_mono());
        let dq = (self.deg_q() + o.deg_q() - lo.q) as usize + 1;
        let dv = (self.deg_v() + o.deg_v() - lo.v) as usize + 1;
        let pairs = self.terms.len() * o.terms.len();
        if dq.saturating_mul(dv) <= 4 * pairs + 64 {
            let mut grid = vec![BigInt::zero(); dq * dv];
            for (a, x) in &self.terms {
                for (b, y) in &o.terms {
                    let m = a.mul(*b);
                    let k = (m.q - lo.q) as usize * dv + (m.v - lo.v) as usize;
                    grid[k] += x * y;
                }
            }
            let mut terms = Vec::new();
            for (k, c) in grid.into_iter().enumerate() {
                if !c.is_zero() {
                    let m = Mono { q: lo.q + (k / dv) as u32, v: lo.v + (k % dv) as u32 };
                    terms.push((m, c));
                }
            }
            IntPoly2 { terms }
        } else {
            let mut v = Vec::with_capacity(pairs);
            for (a, x) in &self.terms {
                for (b, y) in &o.terms {
                    v.push((a.mul(*b), x * y));
                }
            }
            Self::from_terms(v)
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in `Z[q, v]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_one() {
            return Some(self.clone());
        }
        if d.terms.len() == 1 {
            let (m, c) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (a, x) in &self.terms {
                if !m.divides(*a) {
                    return None;
                }
                let (qq, r) = x.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                out.push((Mono { q: a.q - m.q, v: a.v - m.v }, qq));
            }
            return Some(IntPoly2 { terms: out });
        }
        if self.deg_q() < d.deg_q() || self.deg_v() < d.deg_v() {
            return None;
        }
        let (lm, lc) = d.terms.last().cloned().unwrap();
        let mut rem = self.clone();
        let mut quo: Vec<(Mono, BigInt)> = Vec::new();
        while let Some((rm, rc)) = rem.terms.last().cloned() {
            if !lm.divides(rm) {
                return None;
            }
            let (c, r) = rc.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let m = Mono { q: rm.q - lm.q, v: rm.v - lm.v };
            rem = rem.sub(&d.mul_mono(m).scale(&c));
            quo.push((m, c));
        }
        quo.reverse();
        Some(IntPoly2 { terms: quo })
    }

    /// Replaces `q^a v^b` by `q^(a*kq) v^(b*kv)`.
    pub fn inflate(&self, kq: u32, kv: u32) -> Self {
        if kq == 1 && kv == 1 {
            return self.clone();
        }
        IntPoly2 {
            terms: self.terms.iter().map(|(m, c)| (Mono { q: m.q * kq, v: m.v * kv }, c.clone())).collect(),
        }
    }

    /// Inverse of [`inflate`](Self::inflate); exponents must be multiples.
    pub fn deflate(&self, kq: u32, kv: u32) -> Self {
        if kq == 1 && kv == 1 {
            return self.clone();
        }
        IntPoly2 {
            terms: self.terms.iter().map(|(m, c)| (Mono { q: m.q / kq, v: m.v / kv }, c.clone())).collect(),
        }
    }

    /// Exact evaluation at rational `q`, `v`.
    pub fn eval(&self, q: &BigRational, v: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            acc += BigRational::from_integer(c.clone()) * pow_rat(q, m.q) * pow_rat(v, m.v);
        }
        acc
    }

    /// Sign of the leading coefficient.
    pub fn leading_is_negative(&self) -> bool {
        self.terms.last().map(|t| t.1.is_negative()).unwrap_or(false)
    }
}

fn pow_rat(x: &BigRational, e: u32) -> BigRational {
    num_traits::pow(x.clone(), e as usize)
}

fn merge_sorted(v: Vec<(Mono, BigInt)>) -> Vec<(Mono, BigInt)> {
    let mut out: Vec<(Mono, BigInt)> = Vec::with_capacity(v.len());
    for (m, c) in v {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 += c,
            _ => {
                if let Some(last) = out.last() {
                    if last.1.is_zero() {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if let Some(last) = out.last() {
        if last.1.is_zero() {
            out.pop();
        }
    }
    out
}

fn merge_two(a: &[(Mono, BigInt)], b: &[(Mono, BigInt)], negate_b: bool) -> Vec<(Mono, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        let c = if negate_b { -&t.1 } else { t.1.clone() };
        out.push((t.0, c));
    }
    out
}

impl fmt::Display for IntPoly2 {
    /// Renders in `q`, `v`, highest term first, e.g. `-q*v^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !a.is_one() || *m == Mono::ONE {
                parts.push(a.to_string());
            }
            for (name, e) in [("q", m.q), ("v", m.v)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
