//! Verification suites: eigenvalue equations, the action of `T_i` on the
//! `E`-basis, and the exchange and cycling relations of the `f`-basis.

use std::fmt;

use rayon::prelude::*;

use super::{e_frac, f_frac, y_eigenvalue, EigenData};
use crate::coeff_field::RatFunc;
use crate::error::{invalid, Result};
use crate::hecke::{g_op, xt_op, y_op};
use crate::laurent::{FracPoly, Weight};

/// One checked identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub name: String,
    pub pass: bool,
    /// `lhs - rhs` when the identity fails.
    pub difference: Option<String>,
}

/// The outcome of a suite, in a deterministic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub title: String,
    pub entries: Vec<CheckEntry>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), entries: Vec::new() }
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    fn check(&mut self, name: String, lhs: &FracPoly, rhs: &FracPoly) {
        let pass = lhs.eq_value(rhs);
        let difference = if pass { None } else { Some(lhs.sub(rhs).to_laurent().to_string()) };
        self.entries.push(CheckEntry { name, pass, difference });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for e in &self.entries {
            write!(f, "  [{}] {}", if e.pass { "ok" } else { "FAIL" }, e.name)?;
            if let Some(d) = &e.difference {
                write!(f, "  difference: {d}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `(1 - t)/(1 - a)`.
fn resolvent(a: &RatFunc) -> Result<RatFunc> {
    RatFunc::one().sub(&RatFunc::t()).div(&RatFunc::one().sub(a))
}

/// `Y_i E_μ = q^{-μ_i} t^{-(v_μ(i) - 1) + (n-1)/2} E_μ` for every `i`.
pub fn verify_eigen(mu: &Weight) -> Result<Report> {
    let e = e_frac(mu)?;
    let mut r = Report::new(format!("eigenvalues of E_{mu}"));
    for i in 1..=mu.n() {
        let ev = y_eigenvalue(mu, i);
        r.check(format!("Y_{i} E_{mu} = ({ev}) E_{mu}"), &y_op(i, &e), &e.scale(&ev));
    }
    Ok(r)
}

/// The action of `t^{1/2} T_i` and of the intertwiner on `E_μ` and
/// `E_{s_i μ}`.
pub fn verify_haction(mu: &Weight, i: usize) -> Result<Report> {
    let n = mu.n();
    if i == 0 || i >= n {
        return invalid(format!("index {i} outside 1..{n}"));
    }
    let mut r = Report::new(format!("T_{i} action at {mu}"));
    let t = RatFunc::t();
    if mu.at(i) == mu.at(i + 1) {
        let e = e_frac(mu)?;
        let d = EigenData::new(mu, i)?;
        let xt = xt_op(i, &e);
        r.check(format!("t^(1/2) T_{i} E_{mu} = t E_{mu}"), &xt, &e.scale(&t));
        let tau = xt.add(&e.scale(&resolvent(&d.a_mu)?));
        r.check(format!("t^(1/2) tau_{i} E_{mu} = 0"), &tau, &FracPoly::zero(n));
        return Ok(r);
    }
    let hi = if mu.at(i) > mu.at(i + 1) { mu.clone() } else { mu.swapped(i) };
    let lo = hi.swapped(i);
    let (e_hi, e_lo) = (e_frac(&hi)?, e_frac(&lo)?);
    let d = EigenData::new(&hi, i)?;
    let d_lo = EigenData::new(&lo, i)?;
    let xt_hi = xt_op(i, &e_hi);
    let tau = xt_hi.add(&e_hi.scale(&resolvent(&d.a_mu)?));
    r.check(format!("t^(1/2) tau_{i} E_{hi} = E_{lo}"), &tau, &e_lo);
    let rhs = e_lo.sub(&e_hi.scale(&resolvent(&d.a_mu)?));
    r.check(format!("t^(1/2) T_{i} E_{hi} = E_{lo} - (1-t)/(1-a) E_{hi}"), &xt_hi, &rhs);
    let rhs = e_hi.scale(&d.d_mu).sub(&e_lo.scale(&resolvent(&d.a_simu)?));
    r.check(format!("t^(1/2) T_{i} E_{lo} = D E_{hi} - (1-t)/(1-a^-1) E_{lo}"), &xt_op(i, &e_lo), &rhs);
    r.entries.push(CheckEntry {
        name: format!("a at {lo} is the inverse of a at {hi}"),
        pass: d_lo.a_mu == d.a_simu,
        difference: None,
    });
    for (w, e, dd) in [(&hi, &e_hi, &d), (&lo, &e_lo, &d_lo)] {
        let lhs = y_op(i + 1, e);
        let rhs = y_op(i, e).scale(&dd.a_mu);
        r.check(format!("Y_{} E_{w} = a Y_{i} E_{w}", i + 1), &lhs, &rhs);
    }
    Ok(r)
}

/// The exchange relations for `t^{1/2} T_i` and the cycling relation for
/// `g` on every `f_μ` with `μ ∈ S_n λ`.
pub fn verify_kz(lambda: &Weight) -> Result<Report> {
    lambda.require_nonneg()?;
    if !lambda.is_weakly_decreasing() {
        return invalid(format!("{lambda} is not weakly decreasing"));
    }
    let n = lambda.n();
    let orbit = lambda.distinct_rearrangements();
    let fs: Vec<FracPoly> = orbit.par_iter().map(f_frac).collect::<Result<_>>()?;
    let index = |w: &Weight| orbit.iter().position(|x| x == w).expect("orbit is closed");
    let t = RatFunc::t();
    let parts: Vec<Report> = orbit
        .par_iter()
        .enumerate()
        .map(|(k, mu)| {
            let mut r = Report::default();
            let f = &fs[k];
            for i in 1..n {
                let xt = xt_op(i, f);
                let other = &fs[index(&mu.swapped(i))];
                let s = mu.swapped(i);
                if mu.at(i) > mu.at(i + 1) {
                    r.check(format!("t^(1/2) T_{i} f_{mu} = f_{s}"), &xt, other);
                } else if mu.at(i) == mu.at(i + 1) {
                    r.check(format!("t^(1/2) T_{i} f_{mu} = t f_{mu}"), &xt, &f.scale(&t));
                } else {
                    let rhs = f.scale(&t.sub(&RatFunc::one())).add(&other.scale(&t));
                    r.check(format!("t^(1/2) T_{i} f_{mu} = (t-1) f_{mu} + t f_{s}"), &xt, &rhs);
                }
            }
            let mut rot = vec![mu.at(n)];
            rot.extend_from_slice(&mu.entries()[..n - 1]);
            let rot = Weight::new(rot);
            let rhs = fs[index(&rot)].scale(&RatFunc::qv(-mu.at(n), 0));
            r.check(format!("g f_{mu} = q^-{} f_{rot}", mu.at(n)), &g_op(f), &rhs);
            r
        })
        .collect();
    let mut report = Report::new(format!("KZ family of {lambda}"));
    for p in parts {
        report.extend(p);
    }
    Ok(report)
}
