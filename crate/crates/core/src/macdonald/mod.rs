//! Nonsymmetric and symmetric Macdonald polynomials: `E_μ`, `E_μ^z`,
//! `f_μ`, `F_μ` and `P_λ`, the closed forms for small shapes, and the
//! verification suites.

#![allow(non_snake_case)]

mod closed;
mod verify;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::affine_weyl::{box_greedy_word, v_of, z_of, Letter, Perm};
use crate::coeff_field::{IntPoly2, Mono, RatFunc};
use crate::error::{invalid, Error, Result};
use crate::hecke::{gvee_op, hecke_sum, poincare, xt_op};
use crate::laurent::{FracPoly, LaurentPoly, Weight};

pub use closed::{
    closed_column, closed_n2, closed_single_box, closed_single_box_shift, closed_three_box, compression_forms,
    ThreeBoxShape,
};
pub use verify::{verify_eigen, verify_haction, verify_kz, CheckEntry, Report};

/// How a result was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    OperatorChain,
    ClosedForm,
    Cst,
    Symmetrization,
}

impl Route {
    pub fn tag(&self) -> &'static str {
        match self {
            Route::OperatorChain => "operator-chain",
            Route::ClosedForm => "closed-form",
            Route::Cst => "cst",
            Route::Symmetrization => "symmetrization",
        }
    }
}

/// A computed polynomial together with its index and provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacdonaldResult {
    pub mu: Weight,
    pub z: Option<Perm>,
    pub poly: LaurentPoly,
    pub route: Route,
}

impl fmt::Display for MacdonaldResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// Eigenvalue ratio data of `E_μ` at the simple root `α_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenData {
    pub mu: Weight,
    pub i: usize,
    /// `a_μ = q^{μ_i - μ_{i+1}} t^{v_μ(i) - v_μ(i+1)}`, the eigenvalue of
    /// `Y_i^{-1} Y_{i+1}` on `E_μ`.
    pub a_mu: RatFunc,
    pub a_simu: RatFunc,
    /// `(1 - t a)(1 - t a^{-1}) / ((1 - a)(1 - a^{-1}))` with `a = a_μ`.
    pub d_mu: RatFunc,
}

/// `a_μ` as the exponents `(q, v)`.
fn a_exponents(mu: &Weight, i: usize) -> (i64, i64) {
    let v = v_of(mu);
    (mu.at(i) - mu.at(i + 1), 2 * (v.apply(i) as i64 - v.apply(i + 1) as i64))
}

impl EigenData {
    pub fn new(mu: &Weight, i: usize) -> Result<Self> {
        if i == 0 || i >= mu.n() {
            return invalid(format!("index {i} outside 1..{}", mu.n()));
        }
        let (a, b) = a_exponents(mu, i);
        let a_mu = RatFunc::qv(a, b);
        let a_simu = RatFunc::qv(-a, -b);
        let one = RatFunc::one();
        let t = RatFunc::t();
        let num = one.sub(&t.mul(&a_mu)).mul(&one.sub(&t.mul(&a_simu)));
        let den = one.sub(&a_mu).mul(&one.sub(&a_simu));
        let d_mu = num.div(&den)?;
        Ok(EigenData { mu: mu.clone(), i, a_mu, a_simu, d_mu })
    }
}

/// `q^{-μ_i} t^{-(v_μ(i) - 1) + (n-1)/2}`, the eigenvalue of `Y_i` on `E_μ`.
pub fn y_eigenvalue(mu: &Weight, i: usize) -> RatFunc {
    let v = v_of(mu);
    let n = mu.n() as i64;
    RatFunc::qv(-mu.at(i), -2 * (v.apply(i) as i64 - 1) + (n - 1))
}

fn cache() -> &'static Mutex<HashMap<Vec<i64>, FracPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<i64>, FracPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Splits `q^a v^b` into monomials `(A, B)` with `A / B = q^a v^b`.
fn monomial_ratio(a: i64, b: i64) -> (IntPoly2, IntPoly2) {
    let top = Mono::new(a.max(0) as u32, b.max(0) as u32);
    let bottom = Mono::new((-a).max(0) as u32, (-b).max(0) as u32);
    (IntPoly2::monomial(top, 1.into()), IntPoly2::monomial(bottom, 1.into()))
}

/// `E_μ` in shared-denominator form, normalized so that the coefficient of
/// `x^μ` is 1.
pub(crate) fn e_frac(mu: &Weight) -> Result<FracPoly> {
    mu.require_nonneg()?;
    if let Some(f) = cache().lock().expect("cache lock").get(&mu.0) {
        return Ok(f.clone());
    }
    let n = mu.n();
    let word = box_greedy_word(mu)?;
    let mut f = FracPoly::one(n);
    let mut nu = Weight::zero(n);
    let one_minus_t = IntPoly2::from_small(&[(0, 0, 1), (0, 2, -1)]);
    for letter in word.letters().iter().rev() {
        match *letter {
            Letter::Pi => {
                f = gvee_op(&f);
                nu = nu.pi();
            }
            Letter::S(i) => {
                if i == 0 || i >= n || nu.at(i) <= nu.at(i + 1) {
                    return Err(Error::Invariant(format!("letter s{i} cannot act on E_{nu}")));
                }
                let (a, b) = a_exponents(&nu, i);
                let (big_a, big_b) = monomial_ratio(a, b);
                let lhs = xt_op(i, &f).mul_num(&big_b.sub(&big_a));
                let rhs = f.mul_num(&one_minus_t.mul(&big_b));
                f = lhs.add(&rhs);
                nu = nu.swapped(i);
            }
            Letter::PiInv => return Err(Error::Invariant("unexpected π^{-1} in box-greedy word".into())),
        }
        f.make_monic_at(&nu.0)?;
    }
    if nu != *mu {
        return Err(Error::Invariant(format!("walk ended at {nu} instead of {mu}")));
    }
    cache().lock().expect("cache lock").insert(mu.0.clone(), f.clone());
    Ok(f)
}

/// `E_μ` through the intertwiner chain along the box-greedy word of `u_μ`.
pub fn compute_E(mu: &Weight) -> Result<MacdonaldResult> {
    let poly = e_frac(mu)?.to_laurent();
    Ok(MacdonaldResult { mu: mu.clone(), z: None, poly, route: Route::OperatorChain })
}

/// `t^{ℓ(z)/2} T_z` along the lexicographically smallest reduced word.
pub(crate) fn x_z(z: &Perm, f: &FracPoly) -> FracPoly {
    let mut g = f.clone();
    for &i in z.reduced_word().iter().rev() {
        g = xt_op(i, &g);
    }
    g
}

/// `E_μ^z = t^{-(ℓ(z v_μ^{-1}) - ℓ(v_μ^{-1}))/2} T_z E_μ` in
/// shared-denominator form.
pub(crate) fn e_rel_frac(mu: &Weight, z: &Perm) -> Result<FracPoly> {
    if z.n() != mu.n() {
        return invalid(format!("permutation size {} differs from n = {}", z.n(), mu.n()));
    }
    let vinv = v_of(mu).inverse();
    let shift = z.compose(&vinv).length() as i64 - vinv.length() as i64;
    let e = e_frac(mu)?;
    Ok(x_z(z, &e).scale_qv(0, -(z.length() as i64) - shift))
}

pub fn compute_E_rel(mu: &Weight, z: &Perm) -> Result<MacdonaldResult> {
    let poly = e_rel_frac(mu, z)?.to_laurent();
    Ok(MacdonaldResult { mu: mu.clone(), z: Some(z.clone()), poly, route: Route::OperatorChain })
}

/// `f_μ = t^{ℓ(z_μ)/2} T_{z_μ} E_λ` in shared-denominator form.
pub(crate) fn f_frac(mu: &Weight) -> Result<FracPoly> {
    mu.require_nonneg()?;
    let lambda = mu.sorted_decreasing();
    Ok(x_z(&z_of(mu), &e_frac(&lambda)?))
}

pub fn compute_f(mu: &Weight) -> Result<MacdonaldResult> {
    let poly = f_frac(mu)?.to_laurent();
    Ok(MacdonaldResult { mu: mu.clone(), z: Some(z_of(mu)), poly, route: Route::OperatorChain })
}

/// The two independent constructions of `P_λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PMethod {
    /// `Σ_{ν ∈ S_n λ} f_ν`.
    SumRel,
    /// `(t^{ℓ(w_0)/2} / W_λ(t)) 1_0 E_λ`.
    Symmetrize,
}

impl PMethod {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "sum-rel" => Ok(PMethod::SumRel),
            "symmetrize" => Ok(PMethod::Symmetrize),
            _ => invalid(format!("unknown method {s:?}")),
        }
    }
}

pub(crate) fn p_frac(lambda: &Weight, method: PMethod) -> Result<FracPoly> {
    lambda.require_nonneg()?;
    if !lambda.is_weakly_decreasing() {
        return invalid(format!("{lambda} is not weakly decreasing"));
    }
    match method {
        PMethod::SumRel => {
            let e = e_frac(lambda)?;
            let mut acc = FracPoly::zero(lambda.n());
            for nu in lambda.distinct_rearrangements() {
                acc = acc.add(&x_z(&z_of(&nu), &e));
            }
            Ok(acc)
        }
        PMethod::Symmetrize => {
            let w = poincare(lambda);
            Ok(hecke_sum(&e_frac(lambda)?).div_poly(w.num()))
        }
    }
}

pub fn compute_P(lambda: &Weight, method: PMethod) -> Result<MacdonaldResult> {
    let poly = p_frac(lambda, method)?.to_laurent();
    let route = match method {
        PMethod::SumRel => Route::OperatorChain,
        PMethod::Symmetrize => Route::Symmetrization,
    };
    Ok(MacdonaldResult { mu: lambda.clone(), z: None, poly, route })
}

/// `F_μ = 1_0 E_μ` in shared-denominator form.
pub(crate) fn big_f_frac(mu: &Weight) -> Result<FracPoly> {
    let n = mu.n() as i64;
    Ok(hecke_sum(&e_frac(mu)?).scale_qv(0, -n * (n - 1) / 2))
}

pub fn compute_F(mu: &Weight) -> Result<MacdonaldResult> {
    let poly = big_f_frac(mu)?.to_laurent();
    Ok(MacdonaldResult { mu: mu.clone(), z: None, poly, route: Route::Symmetrization })
}

/// `c(μ)` with `c(μ) F_μ = P_λ`: starting from `c(λ) = t^{ℓ(w_0)/2} / W_λ(t)`,
/// each step `s_i μ -> μ` with `μ_i < μ_{i+1}` divides by
/// `(1 - q^d t^{e+1}) / (1 - q^d t^e)`, where `d = μ_{i+1} - μ_i` and
/// `e = v_μ(i+1) - v_μ(i)`.
pub fn symmetrization_constant(mu: &Weight) -> Result<RatFunc> {
    mu.require_nonneg()?;
    let n = mu.n() as i64;
    let lambda = mu.sorted_decreasing();
    let mut acc = RatFunc::qv(0, n * (n - 1) / 2).div(&poincare(&lambda))?;
    let mut cur = mu.clone();
    while let Some(i) = (1..cur.n()).find(|&i| cur.at(i) < cur.at(i + 1)) {
        let v = v_of(&cur);
        let d = cur.at(i + 1) - cur.at(i);
        let e = v.apply(i + 1) as i64 - v.apply(i) as i64;
        let num = RatFunc::one().sub(&RatFunc::qt(d, e));
        let den = RatFunc::one().sub(&RatFunc::qt(d, e + 1));
        acc = acc.mul(&num.div(&den)?);
        cur = cur.swapped(i);
    }
    Ok(acc)
}

/// `t^{-ℓ(w_0)/2} Σ_z t^{(ℓ(z) + ℓ(z v_μ^{-1}) - ℓ(v_μ^{-1}))/2} E_μ^z`,
/// the expansion of `F_μ` through relative polynomials.
pub fn f_expanded(mu: &Weight) -> Result<LaurentPoly> {
    let n = mu.n();
    let vinv = v_of(mu).inverse();
    let mut acc = FracPoly::zero(n);
    for z in Perm::all(n) {
        let e = z.length() as i64 + z.compose(&vinv).length() as i64 - vinv.length() as i64;
        acc = acc.add(&e_rel_frac(mu, &z)?.scale_qv(0, e));
    }
    let w0 = (n * (n - 1) / 2) as i64;
    Ok(acc.scale_qv(0, -w0).to_laurent())
}

/// Sum of `x^γ` over the distinct rearrangements `γ` of `λ`.
pub fn monomial_symmetric(lambda: &Weight) -> LaurentPoly {
    let n = lambda.n();
    LaurentPoly::from_terms(n, lambda.distinct_rearrangements().into_iter().map(|g| (g.0, RatFunc::one())))
}
