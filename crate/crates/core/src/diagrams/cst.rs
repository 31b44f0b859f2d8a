//! Column strict tableaux and the expansion `P_λ = Σ_T ψ_T x^T`.

use std::collections::{BTreeMap, HashMap};

use crate::coeff_field::{one_minus_qt, IntPoly2, RatFunc};
use crate::error::{invalid, Result};
use crate::laurent::{LaurentPoly, Weight};
use crate::macdonald::{MacdonaldResult, Route};

fn part(p: &[i64], i: usize) -> i64 {
    if i >= 1 && i <= p.len() {
        p[i - 1]
    } else {
        0
    }
}

fn is_partition(p: &[i64]) -> bool {
    p.iter().all(|&x| x >= 0) && p.windows(2).all(|w| w[0] >= w[1])
}

/// True when `μ ⊆ λ` and `λ/μ` has at most one box in each column, i.e.
/// `λ_{i+1} <= μ_i <= λ_i` for all `i`.
pub fn is_horizontal_strip(lambda: &[i64], mu: &[i64]) -> bool {
    let len = lambda.len().max(mu.len());
    is_partition(lambda)
        && is_partition(mu)
        && (1..=len).all(|i| part(lambda, i + 1) <= part(mu, i) && part(mu, i) <= part(lambda, i))
}

/// `(q^a t^b; q)_m = ∏_{k<m} (1 - q^{a+k} t^b)`.
fn poch(a: i64, b: i64, m: i64) -> IntPoly2 {
    let mut acc = IntPoly2::one();
    for k in 0..m {
        acc = acc.mul(&one_minus_qt(1, (a + k) as u32, b as u32));
    }
    acc
}

/// `ψ_{λ/μ}` for a horizontal strip.
///
/// With `f(u) = (tu; q)_∞ / (qu; q)_∞`, the defining product over
/// `1 <= i <= j <= ℓ(μ)` is `f(u_1) f(u_2) / (f(u_3) f(u_4))` where
/// `u_3 = q^m u_1`, `u_2 = q^m u_4` and `m = λ_i - μ_i`, so each factor is
/// `(t u_1; q)_m (q u_4; q)_m / ((q u_1; q)_m (t u_4; q)_m)` with
/// `u_1 = q^{μ_i - μ_j} t^{j-i}` and `u_4 = q^{μ_i - λ_{j+1}} t^{j-i}`.
pub fn psi_strip(lambda: &[i64], mu: &[i64]) -> Result<RatFunc> {
    if !is_horizontal_strip(lambda, mu) {
        return invalid(format!("{lambda:?}/{mu:?} is not a horizontal strip"));
    }
    let len = mu.iter().filter(|&&x| x > 0).count();
    let mut num = IntPoly2::one();
    let mut den = IntPoly2::one();
    for i in 1..=len {
        let m = part(lambda, i) - part(mu, i);
        if m == 0 {
            continue;
        }
        for j in i..=len {
            let d = (j - i) as i64;
            let a1 = part(mu, i) - part(mu, j);
            let a4 = part(mu, i) - part(lambda, j + 1);
            num = num.mul(&poch(a1, d + 1, m)).mul(&poch(a4 + 1, d, m));
            den = den.mul(&poch(a1 + 1, d, m)).mul(&poch(a4, d + 1, m));
        }
    }
    RatFunc::new(num, den)
}

/// A column strict tableau with entries in `1..=n`, stored as the chain
/// `∅ = λ^{(0)} ⊆ λ^{(1)} ⊆ ⋯ ⊆ λ^{(n)} = λ` with
/// `λ^{(k)} = {u : T(u) <= k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColumnStrictTableau {
    pub chain: Vec<Vec<i64>>,
}

impl ColumnStrictTableau {
    pub fn shape(&self) -> &[i64] {
        self.chain.last().map_or(&[], |v| v.as_slice())
    }

    /// `T(i, j)` as rows of entries.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let shape = self.shape();
        let mut rows: Vec<Vec<usize>> = shape.iter().map(|&m| vec![0; m as usize]).collect();
        for k in 1..self.chain.len() {
            for (i, row) in rows.iter_mut().enumerate() {
                for j in part(&self.chain[k - 1], i + 1)..part(&self.chain[k], i + 1) {
                    row[j as usize] = k;
                }
            }
        }
        rows
    }

    /// Exponent vector of `x^T`.
    pub fn exponent(&self) -> Vec<i64> {
        let size = |p: &Vec<i64>| p.iter().sum::<i64>();
        self.chain.windows(2).map(|w| size(&w[1]) - size(&w[0])).collect()
    }
}

/// All column strict tableaux of shape `λ` with entries in `1..=n`.
pub fn column_strict_tableaux(lambda: &Weight) -> Result<Vec<ColumnStrictTableau>> {
    if !lambda.is_nonneg() || !lambda.is_weakly_decreasing() {
        return invalid(format!("{lambda} is not a partition"));
    }
    let n = lambda.n();
    let mut out = Vec::new();
    let mut chain = vec![lambda.entries().to_vec()];
    descend(n, &mut chain, &mut out);
    Ok(out)
}

/// Extends `chain` (built from the top) by every `μ` with `λ^{(k)}/μ` a
/// horizontal strip and at most `k - 1` parts.
fn descend(k: usize, chain: &mut Vec<Vec<i64>>, out: &mut Vec<ColumnStrictTableau>) {
    let top = chain.last().expect("nonempty").clone();
    if k == 0 {
        if top.iter().all(|&x| x == 0) {
            let mut c = chain.clone();
            c.reverse();
            out.push(ColumnStrictTableau { chain: c });
        }
        return;
    }
    let len = top.len();
    let mut mu = vec![0i64; len];
    strips(&top, k - 1, 0, &mut mu, &mut |m| {
        chain.push(m.to_vec());
        descend(k - 1, chain, out);
        chain.pop();
    });
}

fn strips(lambda: &[i64], max_len: usize, i: usize, mu: &mut Vec<i64>, f: &mut dyn FnMut(&[i64])) {
    if i == lambda.len() {
        f(mu);
        return;
    }
    let lo = part(lambda, i + 2);
    let hi = if i < max_len { lambda[i] } else { lo.min(0) };
    if lo > hi {
        return;
    }
    for v in lo..=hi {
        mu[i] = v;
        strips(lambda, max_len, i + 1, mu, f);
    }
    mu[i] = 0;
}

/// `Σ_T ψ_T x^T` as a polynomial.
pub fn cst_expand_poly(lambda: &Weight) -> Result<LaurentPoly> {
    let n = lambda.n();
    let tableaux = column_strict_tableaux(lambda)?;
    let mut cache: HashMap<(Vec<i64>, Vec<i64>), RatFunc> = HashMap::new();
    let mut acc: BTreeMap<Vec<i64>, RatFunc> = BTreeMap::new();
    for t in &tableaux {
        let mut psi = RatFunc::one();
        for w in t.chain.windows(2) {
            let key = (w[1].clone(), w[0].clone());
            let p = match cache.get(&key) {
                Some(p) => p.clone(),
                None => {
                    let p = psi_strip(&w[1], &w[0])?;
                    cache.insert(key, p.clone());
                    p
                }
            };
            psi = psi.mul(&p);
        }
        let e = t.exponent();
        let entry = acc.entry(e).or_insert_with(RatFunc::zero);
        *entry = entry.add(&psi);
    }
    Ok(LaurentPoly::from_terms(n, acc))
}

/// `P_λ` through column strict tableaux.
pub fn cst_expand(lambda: &Weight) -> Result<MacdonaldResult> {
    let poly = cst_expand_poly(lambda)?;
    Ok(MacdonaldResult { mu: lambda.clone(), z: None, poly, route: Route::Cst })
}
