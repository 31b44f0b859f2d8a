//! The affine Weyl group of type `GL_n` as `n`-periodic permutations of `Z`.
//!
//! All products are function composition: `(a ∘ b)(k) = a(b(k))`.

use std::collections::BTreeSet;
use std::fmt;

use crate::diagrams::{boxes_in_cylindrical_order, u_stat};
use crate::error::{invalid, Result};
use crate::laurent::Weight;

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((1..=n).collect())
    }

    /// Validates a one-line list of the values `1..n`.
    pub fn from_one_line(v: Vec<usize>) -> Result<Self> {
        let n = v.len();
        let mut seen = vec![false; n];
        for &x in &v {
            if x == 0 || x > n || seen[x - 1] {
                return invalid(format!("{v:?} is not a permutation of 1..{n}"));
            }
            seen[x - 1] = true;
        }
        Ok(Perm(v))
    }

    /// Parses `1,5,6,2,3,4` or, for `n <= 9`, the compact `156234`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = if s.contains(',') { s.split(',').collect() } else { s.split("").filter(|x| !x.is_empty()).collect() };
        let v: std::result::Result<Vec<usize>, _> = parts.iter().map(|x| x.trim().parse::<usize>()).collect();
        match v {
            Ok(v) if !v.is_empty() => Self::from_one_line(v),
            _ => invalid(format!("cannot parse permutation {s:?}")),
        }
    }

    /// The simple transposition `s_i`, `1 <= i < n`.
    pub fn s(n: usize, i: usize) -> Self {
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(i - 1, i);
        Perm(v)
    }

    /// The longest element `i -> n+1-i`.
    pub fn longest(n: usize) -> Self {
        Perm((1..=n).rev().collect())
    }

    /// Product `s_{i_1} ∘ ⋯ ∘ s_{i_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut p = Self::identity(n);
        for &i in word {
            p = p.compose(&Self::s(n, i));
        }
        p
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &Self) -> Self {
        Perm(o.0.iter().map(|&k| self.0[k - 1]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut v = vec![0; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x - 1] = i + 1;
        }
        Perm(v)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        self.inversion_pairs().len()
    }

    /// Pairs `(i, j)` with `i < j` and `w(i) > w(j)`.
    pub fn inversion_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.apply(i) > self.apply(j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// True when `ℓ(s_i w) < ℓ(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.apply(i) > inv.apply(i + 1)
    }

    /// The lexicographically smallest reduced word `[i_1, …, i_ℓ]` with
    /// `w = s_{i_1} ⋯ s_{i_ℓ}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.n();
        let mut w = self.clone();
        let mut word = Vec::new();
        'outer: loop {
            for i in 1..n {
                if w.has_left_descent(i) {
                    word.push(i);
                    w = Self::s(n, i).compose(&w);
                    continue 'outer;
                }
            }
            break;
        }
        word
    }

    /// `(wμ)_{w(i)} = μ_i`.
    pub fn act_weight(&self, mu: &Weight) -> Weight {
        let mut out = vec![0; self.n()];
        for i in 0..self.n() {
            out[self.0[i] - 1] = mu.0[i];
        }
        Weight(out)
    }

    /// Every permutation of `1..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut v: Vec<usize> = (1..=n).collect();
        let mut out = vec![Perm(v.clone())];
        loop {
            let mut i = n;
            while i > 1 && v[i - 2] >= v[i - 1] {
                i -= 1;
            }
            if i <= 1 {
                break;
            }
            let mut j = n;
            while v[j - 1] <= v[i - 2] {
                j -= 1;
            }
            v.swap(i - 2, j - 1);
            v[i - 1..].reverse();
            out.push(Perm(v.clone()));
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An `n`-periodic bijection of `Z`, stored by its window `w(1..n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PeriodicPerm {
    window: Vec<i64>,
}

/// Splits `k` as `r + n m` with `r` in `1..=n`.
fn split(k: i64, n: i64) -> (i64, i64) {
    let m = (k - 1).div_euclid(n);
    (k - n * m, m)
}

impl PeriodicPerm {
    pub fn identity(n: usize) -> Self {
        PeriodicPerm { window: (1..=n as i64).collect() }
    }

    /// Validates the residue condition.
    pub fn from_window(window: Vec<i64>) -> Result<Self> {
        let n = window.len() as i64;
        if n == 0 {
            return invalid("empty window");
        }
        let mut seen = vec![false; n as usize];
        for &x in &window {
            let (r, _) = split(x, n);
            if seen[(r - 1) as usize] {
                return invalid(format!("window {window:?} repeats a residue"));
            }
            seen[(r - 1) as usize] = true;
        }
        Ok(PeriodicPerm { window })
    }

    pub fn from_perm(p: &Perm) -> Self {
        PeriodicPerm { window: p.one_line().iter().map(|&x| x as i64).collect() }
    }

    /// `π(i) = i + 1`.
    pub fn pi(n: usize) -> Self {
        PeriodicPerm { window: (2..=n as i64 + 1).collect() }
    }

    /// `s_i` for `0 <= i < n`; `s_0` exchanges `0` and `1`.
    pub fn s(n: usize, i: usize) -> Self {
        let mut w: Vec<i64> = (1..=n as i64).collect();
        if i == 0 {
            w[0] = 0;
            w[n - 1] = n as i64 + 1;
        } else {
            w.swap(i - 1, i);
        }
        PeriodicPerm { window: w }
    }

    /// `t_μ(i) = i + n μ_i`.
    pub fn translation(mu: &Weight) -> Self {
        let n = mu.n() as i64;
        PeriodicPerm { window: mu.0.iter().enumerate().map(|(i, &m)| i as i64 + 1 + n * m).collect() }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `w(k)` for any integer `k`.
    pub fn apply(&self, k: i64) -> i64 {
        let n = self.n() as i64;
        let (r, m) = split(k, n);
        self.window[(r - 1) as usize] + n * m
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &Self) -> Self {
        PeriodicPerm { window: o.window.iter().map(|&k| self.apply(k)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n() as i64;
        let mut w = vec![0; self.n()];
        for (i, &x) in self.window.iter().enumerate() {
            let (r, m) = split(x, n);
            w[(r - 1) as usize] = i as i64 + 1 - n * m;
        }
        PeriodicPerm { window: w }
    }

    /// `(w·ν)_r = ν_i + m` where `w(i) = r + n m`.
    pub fn act_weight(&self, nu: &Weight) -> Weight {
        let n = self.n() as i64;
        let mut out = vec![0; self.n()];
        for (i, &x) in self.window.iter().enumerate() {
            let (r, m) = split(x, n);
            out[(r - 1) as usize] = nu.0[i] + m;
        }
        Weight(out)
    }

    /// The inversion set as affine roots `ε_i - ε_j + ℓK`.
    pub fn inversions(&self) -> Vec<AffineRoot> {
        let n = self.n() as i64;
        let mut out = Vec::new();
        for i in 1..=n {
            let wi = self.apply(i);
            for j in 1..=n {
                let wj = self.apply(j);
                let lo = if j > i { 0 } else { 1 };
                let mut l = lo;
                while wj + n * l < wi {
                    out.push(AffineRoot { i: i as usize, j: j as usize, level: l });
                    l += 1;
                }
            }
        }
        out.sort();
        out
    }

    /// Length by the closed count `Σ_{i<j} |⌊(w(j) - w(i)) / n⌋|`.
    pub fn length(&self) -> usize {
        let n = self.n() as i64;
        let mut total = 0i64;
        for i in 0..self.window.len() {
            for j in i + 1..self.window.len() {
                total += (self.window[j] - self.window[i]).div_euclid(n).abs();
            }
        }
        total as usize
    }

    /// The finite part `v` of `w = t_μ v`.
    pub fn projection(&self) -> Perm {
        let n = self.n() as i64;
        Perm(self.window.iter().map(|&x| split(x, n).0 as usize).collect())
    }

    /// `μ` with `w = t_μ v`.
    pub fn translation_part(&self) -> Weight {
        let n = self.n() as i64;
        let mut mu = vec![0; self.n()];
        for &x in &self.window {
            let (r, m) = split(x, n);
            mu[(r - 1) as usize] = m;
        }
        Weight(mu)
    }
}

impl fmt::Display for PeriodicPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// The affine root `ε_i - ε_j + ℓK`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineRoot {
    pub i: usize,
    pub j: usize,
    pub level: i64,
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i, self.j)?;
        match self.level {
            0 => Ok(()),
            1 => write!(f, "+K"),
            -1 => write!(f, "-K"),
            l => write!(f, "{:+}K", l),
        }
    }
}

/// One letter of a word in the affine Weyl group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    S(usize),
    Pi,
    PiInv,
}

impl Letter {
    pub fn tag(&self) -> String {
        match self {
            Letter::S(i) => format!("s{i}"),
            Letter::Pi => "pi".into(),
            Letter::PiInv => "pi^-1".into(),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "pi" => Ok(Letter::Pi),
            "pi^-1" => Ok(Letter::PiInv),
            _ => match s.strip_prefix('s').and_then(|x| x.parse::<usize>().ok()) {
                Some(i) => Ok(Letter::S(i)),
                None => invalid(format!("unknown letter {s:?}")),
            },
        }
    }

    fn element(&self, n: usize) -> PeriodicPerm {
        match self {
            Letter::S(i) => PeriodicPerm::s(n, *i),
            Letter::Pi => PeriodicPerm::pi(n),
            Letter::PiInv => PeriodicPerm::pi(n).inverse(),
        }
    }
}

/// A word read left to right as a group product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Number of `s`-letters.
    pub fn s_count(&self) -> usize {
        self.0.iter().filter(|l| matches!(l, Letter::S(_))).count()
    }

    pub fn tags(&self) -> Vec<String> {
        self.0.iter().map(|l| l.tag()).collect()
    }

    /// Compact rendering such as `pi s1 pi`.
    pub fn compact(&self) -> String {
        self.tags().join(" ")
    }

    /// Parses letters separated by whitespace, commas or `·`.
    pub fn parse(s: &str) -> Result<Self> {
        let letters: Result<Vec<Letter>> = s
            .split(|c: char| c.is_whitespace() || c == ',' || c == '·')
            .filter(|x| !x.is_empty())
            .map(Letter::parse)
            .collect();
        Ok(Word(letters?))
    }
}

/// Product of a word and whether its `s`-letter count equals the length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordEval {
    pub element: PeriodicPerm,
    pub reduced: bool,
}

/// Evaluates letters left to right as a group product.
pub fn word_eval(w: &Word, n: usize) -> Result<WordEval> {
    let mut acc = PeriodicPerm::identity(n);
    for l in &w.0 {
        if let Letter::S(i) = l {
            if *i >= n {
                return invalid(format!("letter s{i} out of range for n={n}"));
            }
        }
        acc = acc.compose(&l.element(n));
    }
    let reduced = w.s_count() == acc.length();
    Ok(WordEval { element: acc, reduced })
}

/// `u_μ`, `v_μ`, `z_μ`, `t_μ` and the finite elements attached to `λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuDecomposition {
    pub mu: Weight,
    pub lambda: Weight,
    pub u_mu: PeriodicPerm,
    pub v_mu: Perm,
    pub z_mu: Perm,
    pub t_mu: PeriodicPerm,
    pub w0: Perm,
    pub w_lambda: Perm,
    pub w_upper_lambda: Perm,
}

/// Minimal `v` with `v·μ` weakly increasing.
pub fn v_of(mu: &Weight) -> Perm {
    let n = mu.n();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| (mu.0[i], i));
    let mut v = vec![0; n];
    for (pos, &i) in idx.iter().enumerate() {
        v[i] = pos + 1;
    }
    Perm(v)
}

/// Minimal `z` with `z·λ = μ`, `λ` the decreasing rearrangement.
pub fn z_of(mu: &Weight) -> Perm {
    let n = mu.n();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| (-mu.0[i], i));
    Perm(idx.iter().map(|&i| i + 1).collect())
}

/// Longest element of the stabilizer of a decreasing `λ`.
fn stabilizer_longest(lambda: &Weight) -> Perm {
    let n = lambda.n();
    let mut v: Vec<usize> = (1..=n).collect();
    let mut start = 0;
    while start < n {
        let mut end = start;
        while end + 1 < n && lambda.0[end + 1] == lambda.0[start] {
            end += 1;
        }
        v[start..=end].reverse();
        start = end + 1;
    }
    Perm(v)
}

pub fn decompose_mu(mu: &Weight) -> Result<MuDecomposition> {
    mu.require_nonneg()?;
    let n = mu.n();
    let lambda = mu.sorted_decreasing();
    let v_mu = v_of(mu);
    let z_mu = z_of(mu);
    let t_mu = PeriodicPerm::translation(mu);
    let u_mu = t_mu.compose(&PeriodicPerm::from_perm(&v_mu.inverse()));
    let w0 = Perm::longest(n);
    let w_lambda = stabilizer_longest(&lambda);
    let w_upper_lambda = w0.compose(&w_lambda.inverse());
    Ok(MuDecomposition { mu: mu.clone(), lambda, u_mu, v_mu, z_mu, t_mu, w0, w_lambda, w_upper_lambda })
}

/// Blocks `s_{u(b)} ⋯ s_1 π` over the boxes in cylindrical order.
pub fn box_greedy_word(mu: &Weight) -> Result<Word> {
    mu.require_nonneg()?;
    let mut letters = Vec::new();
    for (i, j) in boxes_in_cylindrical_order(mu) {
        let u = u_stat(mu, i, j);
        letters.extend((1..=u).rev().map(Letter::S));
        letters.push(Letter::Pi);
    }
    Ok(Word(letters))
}

/// `(∏_m s_{j_m - 1} ⋯ s_m) π^r` followed by the word of the reduced weight.
///
/// `J = (j_1 < ⋯ < j_r)` are the positions of nonzero entries; the block
/// moves them to the front, and `π^{-r}` then yields the weight
/// `(0, …, 0, μ_{j_1} - 1, …, μ_{j_r} - 1)` handled recursively.
pub fn column_greedy_word(mu: &Weight) -> Result<Word> {
    mu.require_nonneg()?;
    let n = mu.n();
    let mut letters = Vec::new();
    let mut cur = mu.0.clone();
    while cur.iter().any(|&x| x > 0) {
        let js: Vec<usize> = (1..=n).filter(|&k| cur[k - 1] > 0).collect();
        let r = js.len();
        for (m0, &j) in js.iter().enumerate() {
            let m = m0 + 1;
            letters.extend((m..j).rev().map(Letter::S));
        }
        letters.extend(std::iter::repeat(Letter::Pi).take(r));
        let mut next = vec![0; n - r];
        next.extend(js.iter().map(|&j| cur[j - 1] - 1));
        cur = next;
    }
    Ok(Word(letters))
}

/// Finite part of a periodic permutation.
pub fn projection(a: &PeriodicPerm) -> Perm {
    a.projection()
}

/// Inversion roots as a set.
pub fn inversion_set(a: &PeriodicPerm) -> BTreeSet<AffineRoot> {
    a.inversions().into_iter().collect()
}
