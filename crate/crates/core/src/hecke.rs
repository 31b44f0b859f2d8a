//! The polynomial representation of the affine Hecke algebra.
//!
//! Operators act on [`FracPoly`] values, where every operator here has
//! coefficients that are Laurent monomials or polynomials in `q, v`, so no
//! gcd is needed until the result is turned back into a [`LaurentPoly`].
//! Products of operators act rightmost first.

#![allow(non_snake_case)]

use std::collections::BTreeMap;

use crate::affine_weyl::Perm;
use crate::coeff_field::{IntPoly2, Mono, RatFunc};
use crate::error::{invalid, Result};
use crate::laurent::{FracPoly, LaurentPoly};

/// One operator of the representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    T(usize),
    TInv(usize),
    G,
    GVee,
    Y(usize),
    Symmetrizer,
}

/// A product of operators, applied rightmost first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OperatorWord(pub Vec<Op>);

impl OperatorWord {
    pub fn validate(&self, n: usize) -> Result<()> {
        for op in &self.0 {
            let ok = match op {
                Op::T(i) | Op::TInv(i) => (1..n).contains(i),
                Op::Y(i) => (1..=n).contains(i),
                _ => true,
            };
            if !ok {
                return invalid(format!("operator {op:?} out of range for n={n}"));
            }
        }
        Ok(())
    }

    /// `T_z = T_{i_1} ⋯ T_{i_ℓ}` along the lexicographically smallest
    /// reduced word of `z`.
    pub fn t_z(z: &Perm) -> Self {
        OperatorWord(z.reduced_word().into_iter().map(Op::T).collect())
    }

    pub fn apply(&self, f: &FracPoly) -> Result<FracPoly> {
        self.validate(f.n())?;
        let mut g = f.clone();
        for op in self.0.iter().rev() {
            g = match *op {
                Op::T(i) => t_op(i, &g),
                Op::TInv(i) => t_inv_op(i, &g),
                Op::G => g_op(&g),
                Op::GVee => gvee_op(&g),
                Op::Y(i) => y_op(i, &g),
                Op::Symmetrizer => symmetrizer_op(&g),
            };
        }
        Ok(g)
    }
}

fn v_pow(e: u32) -> IntPoly2 {
    IntPoly2::qv(0, e)
}

fn acc_add(acc: &mut BTreeMap<Vec<i64>, IntPoly2>, e: Vec<i64>, c: IntPoly2) {
    if c.is_zero() {
        return;
    }
    match acc.entry(e) {
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

/// `t^{1/2} T_i = t - (t x_i - x_{i+1}) ∂_i`, with `∂_i` the divided
/// difference `(f - s_i f)/(x_i - x_{i+1})` taken monomial by monomial. The
/// coefficients lie in `Z[t]`, so only numerators change.
pub fn xt_op(i: usize, f: &FracPoly) -> FracPoly {
    let t = Mono::new(0, 2);
    let mut acc = BTreeMap::new();
    for (a, c) in f.numerators() {
        acc_add(&mut acc, a.clone(), c.mul_mono(t));
        let (al, be) = (a[i - 1], a[i]);
        if al == be {
            continue;
        }
        let m = al.min(be);
        let d = (al - be).abs();
        let (plus, minus) = if al > be { (c.clone(), c.neg()) } else { (c.neg(), c.clone()) };
        let tplus = minus.mul_mono(t);
        for k in 0..d {
            let mut e1 = a.clone();
            e1[i - 1] = m + d - k;
            e1[i] = m + k;
            acc_add(&mut acc, e1, tplus.clone());
            let mut e2 = a.clone();
            e2[i - 1] = m + d - 1 - k;
            e2[i] = m + k + 1;
            acc_add(&mut acc, e2, plus.clone());
        }
    }
    FracPoly::from_parts(f.n(), f.den().clone(), acc)
}

/// `T_i = t^{-1/2} (t^{1/2} T_i)`.
pub fn t_op(i: usize, f: &FracPoly) -> FracPoly {
    xt_op(i, f).div_poly(&v_pow(1))
}

/// `T_i^{-1} = T_i - (t^{1/2} - t^{-1/2}) = t^{-1/2}(t^{1/2}T_i - t + 1)`.
pub fn t_inv_op(i: usize, f: &FracPoly) -> FracPoly {
    let shift = IntPoly2::from_small(&[(0, 2, 1), (0, 0, -1)]);
    xt_op(i, f).sub(&f.mul_num(&shift)).div_poly(&v_pow(1))
}

/// `g`: first `x_n -> q^{-1} x_n`, then `x_i -> x_{i+1}`, `x_n -> x_1`.
pub fn g_op(f: &FracPoly) -> FracPoly {
    let n = f.n();
    let k = f.numerators().map(|(a, _)| a[n - 1]).max().unwrap_or(0).max(0);
    let mut terms = BTreeMap::new();
    for (a, c) in f.numerators() {
        let mut b = Vec::with_capacity(n);
        b.push(a[n - 1]);
        b.extend_from_slice(&a[..n - 1]);
        terms.insert(b, c.mul_mono(Mono::new((k - a[n - 1]) as u32, 0)));
    }
    FracPoly::from_parts(n, f.den().mul_mono(Mono::new(k as u32, 0)), terms)
}

/// `g^∨ = x_1 T_1 T_2 ⋯ T_{n-1}`.
pub fn gvee_op(f: &FracPoly) -> FracPoly {
    let n = f.n();
    let mut g = f.clone();
    for i in (1..n).rev() {
        g = xt_op(i, &g);
    }
    let mut terms = BTreeMap::new();
    for (a, c) in g.numerators() {
        let mut b = a.clone();
        b[0] += 1;
        terms.insert(b, c.clone());
    }
    FracPoly::from_parts(n, g.den().mul(&v_pow(n as u32 - 1)), terms)
}

/// `Y_1 = g T_{n-1} ⋯ T_1` and `Y_{i+1} = T_i^{-1} Y_i T_i^{-1}`.
pub fn y_op(i: usize, f: &FracPoly) -> FracPoly {
    if i == 1 {
        let n = f.n();
        let mut g = f.clone();
        for k in 1..n {
            g = xt_op(k, &g);
        }
        return g_op(&g).div_poly(&v_pow(n as u32 - 1));
    }
    t_inv_op(i - 1, &y_op(i - 1, &t_inv_op(i - 1, f)))
}

/// `Σ_{z ∈ S_n} t^{ℓ(z)/2} T_z f`, through the coset factorization
/// `S_k = {1, s_{k-1}, s_{k-2}s_{k-1}, …} · S_{k-1}`.
pub fn hecke_sum(f: &FracPoly) -> FracPoly {
    let n = f.n();
    let mut cur = f.clone();
    for k in 2..=n {
        let mut h = cur.clone();
        let mut sum = cur.clone();
        for j in (1..k).rev() {
            h = xt_op(j, &h);
            sum = sum.add(&h);
        }
        cur = sum;
    }
    cur
}

/// `1_0 = t^{-ℓ(w_0)/2} Σ_z t^{ℓ(z)/2} T_z`.
pub fn symmetrizer_op(f: &FracPoly) -> FracPoly {
    let n = f.n() as u32;
    hecke_sum(f).div_poly(&v_pow(n * (n - 1) / 2))
}

/// Letters of the reduced words for `w_r` used by `X^{ω_r}`: `first`
/// gives `(s_{n-r} ⋯ s_1)(s_{n-r+1} ⋯ s_2) ⋯ (s_{n-1} ⋯ s_r)`, the other
/// gives `(s_{n-r} ⋯ s_{n-1})(s_{n-r-1} ⋯ s_{n-2}) ⋯ (s_1 ⋯ s_r)`.
pub fn omega_word(n: usize, r: usize, first: bool) -> Vec<usize> {
    let mut w = Vec::new();
    if r >= n {
        return w;
    }
    if first {
        for b in 0..r {
            w.extend((b + 1..=n - r + b).rev());
        }
    } else {
        for b in 0..n - r {
            let lo = n - r - b;
            w.extend(lo..lo + r);
        }
    }
    w
}

/// `X^{ω_r} = (g^∨)^r T_{i_1}^{-1} ⋯ T_{i_k}^{-1}` along a word for `w_r`.
pub fn x_omega_op(r: usize, f: &FracPoly, first_word: bool) -> FracPoly {
    let mut g = f.clone();
    for &i in omega_word(f.n(), r, first_word).iter().rev() {
        g = t_inv_op(i, &g);
    }
    for _ in 0..r {
        g = gvee_op(&g);
    }
    g
}

fn check_index(i: usize, lo: usize, hi: usize) -> Result<()> {
    if i < lo || i > hi {
        return invalid(format!("index {i} outside {lo}..={hi}"));
    }
    Ok(())
}

fn lift(f: &LaurentPoly, op: impl Fn(&FracPoly) -> FracPoly) -> LaurentPoly {
    op(&FracPoly::from_laurent(f)).to_laurent()
}

pub fn apply_T(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    check_index(i, 1, f.n() - 1)?;
    Ok(lift(f, |g| t_op(i, g)))
}

pub fn apply_T_inv(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    check_index(i, 1, f.n() - 1)?;
    Ok(lift(f, |g| t_inv_op(i, g)))
}

pub fn apply_g(f: &LaurentPoly) -> LaurentPoly {
    lift(f, g_op)
}

pub fn apply_gvee(f: &LaurentPoly) -> LaurentPoly {
    lift(f, gvee_op)
}

pub fn apply_Y(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    check_index(i, 1, f.n())?;
    Ok(lift(f, |g| y_op(i, g)))
}

pub fn apply_symmetrizer(f: &LaurentPoly) -> LaurentPoly {
    lift(f, symmetrizer_op)
}

pub fn apply_X_omega(r: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    check_index(r, 1, f.n())?;
    Ok(lift(f, |g| x_omega_op(r, g, true)))
}

/// `T_z f` along the lexicographically smallest reduced word of `z`.
pub fn apply_T_z(z: &Perm, f: &LaurentPoly) -> Result<LaurentPoly> {
    if z.n() != f.n() {
        return invalid("permutation size must equal n");
    }
    Ok(OperatorWord::t_z(z).apply(&FracPoly::from_laurent(f))?.to_laurent())
}

/// `Σ_{y ∈ S} t^{ℓ(y)}` over the stabilizer of `λ` (a Young subgroup):
/// the product of `[m]_t!` over the multiplicities `m` of the parts.
pub fn poincare(lambda: &crate::laurent::Weight) -> RatFunc {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &x in lambda.entries() {
        *counts.entry(x).or_default() += 1;
    }
    let mut acc = IntPoly2::one();
    for &m in counts.values() {
        for k in 1..=m {
            let qint = IntPoly2::from_terms((0..k).map(|e| (Mono::new(0, 2 * e as u32), 1.into())));
            acc = acc.mul(&qint);
        }
    }
    RatFunc::from_poly(acc)
}

/// `W_0(t) = Σ_{w ∈ S_n} t^{ℓ(w)}`.
pub fn poincare_full(n: usize) -> RatFunc {
    poincare(&crate::laurent::Weight::zero(n))
}
