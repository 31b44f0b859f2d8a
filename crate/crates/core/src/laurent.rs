//! Laurent polynomials in `x_1..x_n` over `Q(q, v)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff_field::{gcd, IntPoly2, Mono, RatFunc};
use crate::error::{invalid, Error, Result};

/// An integer vector `(μ_1, …, μ_n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight(entries)
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// `ε_i` (1-based).
    pub fn epsilon(n: usize, i: usize) -> Self {
        let mut w = vec![0; n];
        w[i - 1] = 1;
        Weight(w)
    }

    /// `ω_r = ε_1 + ⋯ + ε_r`.
    pub fn omega(n: usize, r: usize) -> Self {
        Weight((0..n).map(|k| i64::from(k < r)).collect())
    }

    /// Parses a comma-separated list such as `2,1,0`.
    pub fn parse(s: &str) -> Result<Self> {
        let v: std::result::Result<Vec<i64>, _> = s.split(',').map(|x| x.trim().parse::<i64>()).collect();
        match v {
            Ok(v) if !v.is_empty() => Ok(Weight(v)),
            _ => invalid(format!("cannot parse weight {s:?}")),
        }
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// 1-based access.
    pub fn at(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn require_nonneg(&self) -> Result<()> {
        if self.is_nonneg() {
            Ok(())
        } else {
            invalid(format!("weight {self} has negative entries"))
        }
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Decreasing rearrangement `λ`.
    pub fn sorted_decreasing(&self) -> Weight {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Weight(v)
    }

    /// Swaps entries `i` and `i+1` (1-based), i.e. `s_i μ`.
    pub fn swapped(&self, i: usize) -> Weight {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Weight(v)
    }

    /// `π μ = (μ_n + 1, μ_1, …, μ_{n-1})`.
    pub fn pi(&self) -> Weight {
        let n = self.n();
        let mut v = Vec::with_capacity(n);
        v.push(self.0[n - 1] + 1);
        v.extend_from_slice(&self.0[..n - 1]);
        Weight(v)
    }

    /// All distinct rearrangements, in lexicographically decreasing order.
    pub fn distinct_rearrangements(&self) -> Vec<Weight> {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = vec![Weight(v.clone())];
        while prev_permutation(&mut v) {
            out.push(Weight(v.clone()));
        }
        out
    }

    /// All `μ ∈ Z_{≥0}^n` with `|μ| = size`, lexicographically decreasing.
    pub fn compositions(n: usize, size: i64) -> Vec<Weight> {
        fn go(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
            if cur.len() + 1 == n {
                cur.push(left);
                out.push(Weight(cur.clone()));
                cur.pop();
                return;
            }
            for a in (0..=left).rev() {
                cur.push(a);
                go(n, left - a, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if size == 0 {
                out.push(Weight(Vec::new()));
            }
            return out;
        }
        go(n, size, &mut Vec::with_capacity(n), &mut out);
        out
    }

    /// All weakly decreasing `λ ∈ Z_{≥0}^n` with `|λ| = size`.
    pub fn partitions(n: usize, size: i64) -> Vec<Weight> {
        Weight::compositions(n, size).into_iter().filter(|w| w.is_weakly_decreasing()).collect()
    }
}

/// Steps to the lexicographically previous arrangement; false at the last one.
fn prev_permutation(v: &mut [i64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] <= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] >= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A Laurent polynomial in `x_1..x_n` with [`RatFunc`] coefficients.
///
/// Terms are kept in a sorted map keyed by exponent vector, so iteration
/// order is lexicographic and output is reproducible.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Vec<i64>, RatFunc>,
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        LaurentPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], RatFunc::one())
    }

    pub fn constant(n: usize, c: RatFunc) -> Self {
        Self::monomial(vec![0; n], c)
    }

    pub fn monomial(exps: Vec<i64>, c: RatFunc) -> Self {
        let n = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { n, terms }
    }

    /// `x_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(Weight::epsilon(n, i).0, RatFunc::one())
    }

    /// Sums repeated exponents and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Vec<i64>, RatFunc)>>(n: usize, it: I) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in it {
            assert_eq!(e.len(), n, "exponent length must equal n");
            p.add_term(e, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<i64>, &RatFunc)> {
        self.terms.iter()
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

    fn add_term(&mut self, e: Vec<i64>, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_dim(&self, o: &Self) -> Result<()> {
        if self.n != o.n {
            return invalid(format!("dimension mismatch: {} vs {}", self.n, o.n));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_dim(o)?;
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check_dim(o)?;
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.neg());
        }
        Ok(out)
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check_dim(o)?;
        let mut out = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let e: Vec<i64> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x.mul(y));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        LaurentPoly { n: self.n, terms: self.terms.iter().map(|(e, x)| (e.clone(), x.mul(c))).collect() }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { n: self.n, terms: self.terms.iter().map(|(e, x)| (e.clone(), x.neg())).collect() }
    }

    /// Multiplies by the monomial `x^e`.
    pub fn mul_monomial(&self, e: &[i64]) -> Self {
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(a, x)| (a.iter().zip(e).map(|(p, q)| p + q).collect(), x.clone())).collect(),
        }
    }

    /// Coefficient of `x^μ`, zero if absent.
    pub fn coeff(&self, mu: &Weight) -> RatFunc {
        self.terms.get(&mu.0).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Simultaneous substitution `x_i -> x_{w(i)}` for `w` given in one-line
    /// notation with 1-based values.
    pub fn subst_perm(&self, w: &[usize]) -> Self {
        assert_eq!(w.len(), self.n);
        let mut terms = BTreeMap::new();
        for (a, c) in &self.terms {
            let mut b = vec![0; self.n];
            for (i, &ai) in a.iter().enumerate() {
                b[w[i] - 1] = ai;
            }
            terms.insert(b, c.clone());
        }
        LaurentPoly { n: self.n, terms }
    }

    /// `x_n -> q^{-1} x_n`.
    pub fn shift_qn(&self) -> Self {
        let n = self.n;
        LaurentPoly {
            n,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), c.mul(&RatFunc::qv(-a[n - 1], 0)))).collect(),
        }
    }

    /// True when every coefficient lies in `Q(q, t)`.
    pub fn is_even_in_v(&self) -> bool {
        self.terms.values().all(|c| c.is_even_in_v())
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Total degree of every term, if homogeneous.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<i64>());
        let d = it.next()?;
        if it.all(|x| x == d) {
            Some(d)
        } else {
            None
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a != 0)
                .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, a) })
                .collect();
            let mono = if mono.is_empty() { "1".to_string() } else { mono.join("*") };
            if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "[{c}]*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Ring operation selector for [`lp_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpOp {
    Add,
    Sub,
    Mul,
}

pub fn lp_arith(a: &LaurentPoly, b: &LaurentPoly, op: LpOp) -> Result<LaurentPoly> {
    match op {
        LpOp::Add => a.add(b),
        LpOp::Sub => a.sub(b),
        LpOp::Mul => a.mul(b),
    }
}

pub fn lp_coeff(a: &LaurentPoly, mu: &Weight) -> Result<RatFunc> {
    if a.n() != mu.n() {
        return invalid("dimension mismatch");
    }
    Ok(a.coeff(mu))
}

pub fn lp_subst_perm(a: &LaurentPoly, w: &[usize]) -> Result<LaurentPoly> {
    let mut seen = vec![false; a.n()];
    if w.len() != a.n() {
        return invalid("permutation length must equal n");
    }
    for &x in w {
        if x == 0 || x > a.n() || seen[x - 1] {
            return invalid(format!("{w:?} is not a permutation of 1..{}", a.n()));
        }
        seen[x - 1] = true;
    }
    Ok(a.subst_perm(w))
}

pub fn lp_shift_qn(a: &LaurentPoly) -> LaurentPoly {
    a.shift_qn()
}

/// A Laurent polynomial written as integer-polynomial numerators over one
/// shared denominator.
///
/// Operators whose coefficients are Laurent monomials in `q, v` act on the
/// numerators alone, so chains of operators run without any gcd work. Call
/// [`FracPoly::to_laurent`] to return to canonical coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FracPoly {
    pub(crate) n: usize,
    pub(crate) den: IntPoly2,
    pub(crate) terms: BTreeMap<Vec<i64>, IntPoly2>,
}

impl FracPoly {
    pub fn zero(n: usize) -> Self {
        FracPoly { n, den: IntPoly2::one(), terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; n], IntPoly2::one());
        FracPoly { n, den: IntPoly2::one(), terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn den(&self) -> &IntPoly2 {
        &self.den
    }

    pub fn numerators(&self) -> impl Iterator<Item = (&Vec<i64>, &IntPoly2)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Brings all coefficients over their least common denominator.
    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let mut l = IntPoly2::one();
        for c in p.terms.values() {
            let d = c.den();
            if d.is_one() || d == &l {
                continue;
            }
            let g = gcd(&l, d);
            l = l.mul(&d.div_exact(&g).expect("gcd divides"));
        }
        let terms = p
            .terms
            .iter()
            .map(|(e, c)| {
                let k = if c.den() == &l { IntPoly2::one() } else { l.div_exact(c.den()).expect("lcm") };
                (e.clone(), c.num().mul(&k))
            })
            .collect();
        FracPoly { n: p.n, den: l, terms }
    }

    /// Canonical coefficients.
    pub fn to_laurent(&self) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), RatFunc::new(c.clone(), self.den.clone()).expect("nonzero denominator")))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        LaurentPoly { n: self.n, terms }
    }

    pub(crate) fn from_parts(n: usize, den: IntPoly2, terms: BTreeMap<Vec<i64>, IntPoly2>) -> Self {
        FracPoly { n, den, terms }
    }

    /// Multiplies the numerators by `p`.
    pub fn mul_num(&self, p: &IntPoly2) -> Self {
        FracPoly {
            n: self.n,
            den: self.den.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.mul(p))).filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Multiplies the denominator by `p`.
    pub fn div_poly(&self, p: &IntPoly2) -> Self {
        FracPoly { n: self.n, den: self.den.mul(p), terms: self.terms.clone() }
    }

    /// Multiplies by a coefficient in `Q(q, v)`.
    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let mut out = self.mul_num(c.num());
        out.den = out.den.mul(c.den());
        out
    }

    /// Multiplies by the Laurent monomial `q^a v^b`.
    pub fn scale_qv(&self, a: i64, b: i64) -> Self {
        self.scale(&RatFunc::qv(a, b))
    }

    pub fn neg(&self) -> Self {
        FracPoly {
            n: self.n,
            den: self.den.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    /// Sum without any gcd work (denominators are multiplied if they differ).
    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let (a, b, den) = if self.den == o.den {
            (self.clone(), o.clone(), self.den.clone())
        } else {
            (self.mul_num(&o.den), o.mul_num(&self.den), self.den.mul(&o.den))
        };
        let mut terms = a.terms;
        for (e, c) in b.terms {
            let s = match terms.remove(&e) {
                Some(x) => x.add(&c),
                None => c,
            };
            if !s.is_zero() {
                terms.insert(e, s);
            }
        }
        FracPoly { n: self.n, den, terms }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Numerator of the coefficient of `x^e` (zero if absent).
    pub fn num_at(&self, e: &[i64]) -> IntPoly2 {
        self.terms.get(e).cloned().unwrap_or_else(IntPoly2::zero)
    }

    /// Exact value comparison by cross multiplication.
    pub fn eq_value(&self, o: &Self) -> bool {
        if self.n != o.n {
            return false;
        }
        if self.terms.len() != o.terms.len() {
            return false;
        }
        if self.den == o.den {
            return self.terms == o.terms;
        }
        self.terms.iter().all(|(e, a)| match o.terms.get(e) {
            Some(b) => a.mul(&o.den) == b.mul(&self.den),
            None => false,
        })
    }

    /// Divides numerators and denominator by their common gcd.
    pub fn reduce(&mut self) {
        if self.terms.is_empty() {
            self.den = IntPoly2::one();
            return;
        }
        let mut g = self.den.clone();
        for c in self.terms.values() {
            if g.is_one() {
                break;
            }
            g = gcd(&g, c);
        }
        if self.den.leading_is_negative() {
            g = g.neg();
        }
        if g.is_one() {
            return;
        }
        self.den = self.den.div_exact(&g).expect("gcd divides");
        for c in self.terms.values_mut() {
            *c = c.div_exact(&g).expect("gcd divides");
        }
    }

    /// Rescales so that the coefficient of `x^e` is 1, then reduces.
    pub fn make_monic_at(&mut self, e: &[i64]) -> Result<()> {
        let lead = self.num_at(e);
        if lead.is_zero() {
            return Err(Error::Invariant(format!("no term x^{e:?} to normalize by")));
        }
        self.den = lead;
        self.reduce();
        Ok(())
    }

    /// Removes `q^a` / `v^b` factors common to the denominator and every
    /// numerator.
    pub fn strip_monomials(&mut self) {
        let mut m = self.den.min_mono();
        for c in self.terms.values() {
            let k = c.min_mono();
            m = Mono::new(m.q.min(k.q), m.v.min(k.v));
        }
        if m == Mono::ONE {
            return;
        }
        self.den = self.den.div_mono(m);
        for c in self.terms.values_mut() {
            *c = c.div_mono(m);
        }
    }
}
