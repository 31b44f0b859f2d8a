//! Closed forms for `E_μ` and `P_λ` on small shapes.

use std::collections::BTreeMap;

use super::{monomial_symmetric, MacdonaldResult, Route};
use crate::affine_weyl::Perm;
use crate::coeff_field::RatFunc;
use crate::error::{invalid, Result};
use crate::laurent::{LaurentPoly, Weight};

/// `(1 - t) / (1 - q^a t^b)`.
fn ratio(a: i64, b: i64) -> RatFunc {
    let one = RatFunc::one();
    one.sub(&RatFunc::t()).div(&one.sub(&RatFunc::qt(a, b))).expect("nonzero denominator")
}

/// `(q^a t^b; q)_m` as a fraction.
fn poch(a: i64, b: i64, m: i64) -> RatFunc {
    (0..m).fold(RatFunc::one(), |acc, k| acc.mul(&RatFunc::one().sub(&RatFunc::qt(a + k, b))))
}

/// Accumulates terms into a polynomial.
struct Acc {
    n: usize,
    terms: BTreeMap<Vec<i64>, RatFunc>,
}

impl Acc {
    fn new(n: usize) -> Self {
        Acc { n, terms: BTreeMap::new() }
    }

    fn add(&mut self, vars: &[usize], c: &RatFunc) {
        let mut e = vec![0i64; self.n];
        for &v in vars {
            e[v - 1] += 1;
        }
        let entry = self.terms.entry(e).or_insert_with(RatFunc::zero);
        *entry = entry.add(c);
    }

    fn finish(self) -> LaurentPoly {
        LaurentPoly::from_terms(self.n, self.terms)
    }
}

fn closed(mu: Weight, z: Option<Perm>, poly: LaurentPoly) -> MacdonaldResult {
    MacdonaldResult { mu, z, poly, route: Route::ClosedForm }
}

/// `E_{ε_j}^z = Σ_{a <= j} c_a x_{z(a)}` where, with
/// `A = (1 - t)/(1 - q t^{n-j+1})`, `c_j = 1`, `c_a = A q t^{C(a)}` when
/// `z(j) < z(a)` and `c_a = A t^{C(a)}` when `z(j) > z(a)`; `C(a)` counts the
/// `k > j` with `z(k)` strictly between `z(j)` and `z(a)` or (when
/// `z(j) < z(a)`) below `z(j)` or above `z(a)`.
pub fn closed_single_box(j: usize, z: &Perm) -> Result<MacdonaldResult> {
    let n = z.n();
    if j == 0 || j > n {
        return invalid(format!("box row {j} outside 1..={n}"));
    }
    let big_a = ratio(1, (n - j + 1) as i64);
    let zj = z.apply(j);
    let mut acc = Acc::new(n);
    for a in 1..=j {
        let za = z.apply(a);
        let c = if za == zj {
            RatFunc::one()
        } else if zj < za {
            let count = (j + 1..=n)
                .filter(|&k| {
                    let zk = z.apply(k);
                    zk < zj || zk > za
                })
                .count();
            big_a.mul(&RatFunc::qt(1, count as i64))
        } else {
            let count = (j + 1..=n)
                .filter(|&k| {
                    let zk = z.apply(k);
                    zj > zk && zk > za
                })
                .count();
            big_a.mul(&RatFunc::qt(0, count as i64))
        };
        acc.add(&[za], &c);
    }
    Ok(closed(Weight::epsilon(n, j), Some(z.clone()), acc.finish()))
}

/// `E_{ε_j}^z` for `z = s_{j+k-1} ⋯ s_j`, so that `z(j) = j + k`:
/// `x_{j+k} + (1 - t)/(1 - q t^{n-j+1}) t^k Σ_{a<j} x_a`.
pub fn closed_single_box_shift(n: usize, j: usize, k: usize) -> Result<MacdonaldResult> {
    if j == 0 || j + k > n {
        return invalid(format!("need 1 <= j and j + k <= n, got j={j}, k={k}, n={n}"));
    }
    let word: Vec<usize> = (j..j + k).rev().collect();
    let z = Perm::from_word(n, &word);
    let c = ratio(1, (n - j + 1) as i64).mul(&RatFunc::qt(0, k as i64));
    let mut acc = Acc::new(n);
    acc.add(&[j + k], &RatFunc::one());
    for a in 1..j {
        acc.add(&[a], &c);
    }
    Ok(closed(Weight::epsilon(n, j), Some(z), acc.finish()))
}

/// `t^{ℓ(z)/2} T_z E_{ω_r} = x_{z(1)} ⋯ x_{z(r)}` for `z` minimal in its
/// coset `z (S_r × S_{n-r})`.
pub fn closed_column(r: usize, z: &Perm) -> Result<MacdonaldResult> {
    let n = z.n();
    if r == 0 || r > n {
        return invalid(format!("column height {r} outside 1..={n}"));
    }
    let w = z.one_line();
    if !w[..r].windows(2).all(|p| p[0] < p[1]) || !w[r..].windows(2).all(|p| p[0] < p[1]) {
        return invalid(format!("{z} is not minimal in its coset for r = {r}"));
    }
    let mut acc = Acc::new(n);
    acc.add(&w[..r], &RatFunc::one());
    Ok(closed(Weight::omega(n, r), Some(z.clone()), acc.finish()))
}

/// The three partitions with three boxes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThreeBoxShape {
    /// `3ε_1`.
    Row,
    /// `2ε_1 + ε_2`.
    Hook,
    /// `ε_1 + ε_2 + ε_3`.
    Column,
}

impl ThreeBoxShape {
    pub fn weight(&self, n: usize) -> Weight {
        let mut v = vec![0i64; n];
        match self {
            ThreeBoxShape::Row => v[0] = 3,
            ThreeBoxShape::Hook => {
                v[0] = 2;
                v[1] = 1;
            }
            ThreeBoxShape::Column => v[..3].iter_mut().for_each(|x| *x = 1),
        }
        Weight::new(v)
    }
}

fn m(n: usize, parts: &[i64]) -> LaurentPoly {
    let mut v = parts.to_vec();
    v.resize(n, 0);
    monomial_symmetric(&Weight::new(v))
}

/// `E_λ` (or `P_λ` when `symmetric`) for the partitions of 3, `n >= 3`.
pub fn closed_three_box(shape: ThreeBoxShape, symmetric: bool, n: usize) -> Result<MacdonaldResult> {
    if n < 3 {
        return invalid("three-box closed forms need n >= 3");
    }
    let one = RatFunc::one();
    let q = RatFunc::q();
    let t = RatFunc::t();
    let poly = match (shape, symmetric) {
        (ThreeBoxShape::Row, false) => {
            let a = ratio(2, 1);
            let b = ratio(1, 1);
            let mut acc = Acc::new(n);
            acc.add(&[1, 1, 1], &one);
            let c_kk = a.mul(&RatFunc::qt(2, 0));
            let c_k = b.mul(&one.add(&a.mul(&q))).mul(&q);
            let c_kl = b.mul(&a).mul(&one.add(&q)).mul(&RatFunc::qt(2, 0));
            for k in 2..=n {
                acc.add(&[1, k, k], &c_kk);
                acc.add(&[1, 1, k], &c_k);
                for l in k + 1..=n {
                    acc.add(&[1, k, l], &c_kl);
                }
            }
            acc.finish()
        }
        (ThreeBoxShape::Hook, false) => {
            let mut acc = Acc::new(n);
            acc.add(&[1, 1, 2], &one);
            let c = ratio(1, 2).mul(&q);
            for k in 3..=n {
                acc.add(&[1, 2, k], &c);
            }
            acc.finish()
        }
        (ThreeBoxShape::Column, _) => {
            if symmetric {
                m(n, &[1, 1, 1])
            } else {
                let mut acc = Acc::new(n);
                acc.add(&[1, 2, 3], &one);
                acc.finish()
            }
        }
        (ThreeBoxShape::Row, true) => {
            let base = one.sub(&RatFunc::qt(3, 0)).div(&one.sub(&RatFunc::qt(2, 1)))?;
            let r = one.sub(&t).div(&one.sub(&q))?;
            let c21 = base.mul(&r);
            let c111 = base.mul(&one.sub(&RatFunc::qt(2, 0)).div(&one.sub(&RatFunc::qt(1, 1)))?).mul(&r).mul(&r);
            m(n, &[3]).add(&m(n, &[2, 1]).scale(&c21))?.add(&m(n, &[1, 1, 1]).scale(&c111))?
        }
        (ThreeBoxShape::Hook, true) => {
            let first = one
                .sub(&RatFunc::qt(0, 2))
                .mul(&one.sub(&RatFunc::qt(2, 1)))
                .div(&one.sub(&RatFunc::qt(1, 1)).mul(&one.sub(&RatFunc::qt(1, 2))))?;
            let second =
                one.sub(&t).mul(&one.sub(&RatFunc::qt(2, 0))).div(&one.sub(&q).mul(&one.sub(&RatFunc::qt(1, 1))))?;
            m(n, &[2, 1]).add(&m(n, &[1, 1, 1]).scale(&first.add(&second)))?
        }
    };
    Ok(closed(shape.weight(n), None, poly))
}

/// `E_μ` for `n = 2` through the q-binomial formulas
///
/// `E_{(0,m)} = Σ_{i+j=m} c_{ij} x_1^i x_2^j` and
/// `E_{(m+1,0)} = Σ_{i+j=m} c_{ij} q^i x_1^{j+1} x_2^i` with
/// `c_{ij} = [k+i-1, i][k+j, j] / [k+m, m]` at `t = q^k`, that is
/// `c_{ij} = (t; q)_i (qt; q)_j (q; q)_m / ((q; q)_i (q; q)_j (qt; q)_m)`.
/// A general `(a, b)` is reduced by `E_{(a+c, b+c)} = (x_1 x_2)^c E_{(a, b)}`.
pub fn closed_n2(mu: &Weight) -> Result<MacdonaldResult> {
    if mu.n() != 2 {
        return invalid("closed_n2 needs n = 2");
    }
    mu.require_nonneg()?;
    let (a, b) = (mu.at(1), mu.at(2));
    let c = a.min(b);
    let coeff = |i: i64, j: i64, m: i64| -> Result<RatFunc> {
        let num = poch(0, 1, i).mul(&poch(1, 1, j)).mul(&poch(1, 0, m));
        let den = poch(1, 0, i).mul(&poch(1, 0, j)).mul(&poch(1, 1, m));
        num.div(&den)
    };
    let mut terms = BTreeMap::new();
    if a > b {
        let m = a - b - 1;
        for i in 0..=m {
            let j = m - i;
            terms.insert(vec![j + 1 + c, i + c], coeff(i, j, m)?.mul(&RatFunc::qv(i, 0)));
        }
    } else {
        let m = b - a;
        for i in 0..=m {
            let j = m - i;
            terms.insert(vec![i + c, j + c], coeff(i, j, m)?);
        }
    }
    Ok(closed(mu.clone(), None, LaurentPoly::from_terms(2, terms)))
}

/// The two displayed forms of `E_{ε_{j-1} + ε_j}` for `2 <= j <= n`.
///
/// With `A = (1 - t)/(1 - q t^{n-j+1})` and `B = (1 - t)/(1 - q t^{n-j+2})`:
/// the first form has coefficient `B (A + t)` on `x_k x_{j-1}`, the second
/// `B (1 - q t^{n-j+2}) / (1 - q t^{n-j+1})`; both have `A` on `x_k x_j` and
/// `B A (1 + t)` on `x_k x_l` for `k < l <= j - 2`.
pub fn compression_forms(n: usize, j: usize) -> Result<(LaurentPoly, LaurentPoly)> {
    if j < 2 || j > n {
        return invalid(format!("need 2 <= j <= n, got j={j}, n={n}"));
    }
    let one = RatFunc::one();
    let t = RatFunc::t();
    let a = ratio(1, (n - j + 1) as i64);
    let b = ratio(1, (n - j + 2) as i64);
    let mid_first = b.mul(&a.add(&t));
    let mid_second = b
        .mul(&one.sub(&RatFunc::qt(1, (n - j + 2) as i64)))
        .div(&one.sub(&RatFunc::qt(1, (n - j + 1) as i64)))?;
    let pair = b.mul(&a).mul(&one.add(&t));
    let build = |mid: &RatFunc| {
        let mut acc = Acc::new(n);
        acc.add(&[j - 1, j], &one);
        for k in 1..j - 1 {
            acc.add(&[k, j], &a);
            acc.add(&[k, j - 1], mid);
            for l in k + 1..j - 1 {
                acc.add(&[k, l], &pair);
            }
        }
        acc.finish()
    };
    Ok((build(&mid_first), build(&mid_second)))
}
