//! Published expansions of small nonsymmetric and symmetric Macdonald
//! polynomials, kept as expression strings in `q`, `t` and `x_i`.

use macdonald_lab::expr::parse_poly;
use macdonald_lab::laurent::{LaurentPoly, Weight};
use macdonald_lab::macdonald::{compute_E, compute_P, compute_f, PMethod};
use macdonald_lab::Result;

/// Which family an expansion belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Nonsymmetric `E_μ`.
    E,
    /// Relative `f_μ = X^{z_μ} E_λ`.
    F,
    /// Symmetric `P_λ`.
    P,
}

/// One tabulated expansion.
///
/// A misprinted expansion keeps its printed form in `expr` and carries
/// the term `correction` with `expr + correction` the true value.
#[derive(Debug, Clone, Copy)]
pub struct Golden {
    pub label: &'static str,
    pub family: Family,
    pub mu: &'static [i64],
    pub expr: &'static str,
    pub correction: Option<&'static str>,
}

impl Golden {
    pub fn n(&self) -> usize {
        self.mu.len()
    }

    pub fn weight(&self) -> Weight {
        Weight::new(self.mu.to_vec())
    }

    /// The true expansion: the printed one plus any correction.
    pub fn expected(&self) -> Result<LaurentPoly> {
        let printed = parse_poly(self.n(), self.expr)?;
        match self.correction {
            Some(c) => printed.add(&parse_poly(self.n(), c)?),
            None => Ok(printed),
        }
    }

    /// The printed expansion when it is known to be misprinted.
    pub fn printed(&self) -> Result<Option<LaurentPoly>> {
        self.correction.map(|_| parse_poly(self.n(), self.expr)).transpose()
    }

    pub fn computed(&self) -> Result<LaurentPoly> {
        let mu = self.weight();
        Ok(match self.family {
            Family::E => compute_E(&mu)?.poly,
            Family::F => compute_f(&mu)?.poly,
            Family::P => compute_P(&mu, PMethod::SumRel)?.poly,
        })
    }

    pub fn name(&self) -> String {
        let sym = match self.family {
            Family::E => "E",
            Family::F => "f",
            Family::P => "P",
        };
        let fix = if self.correction.is_some() { ", misprint corrected" } else { "" };
        format!("{sym}_{} ({}{fix})", self.weight(), self.label)
    }
}

const fn g(label: &'static str, family: Family, mu: &'static [i64], expr: &'static str) -> Golden {
    Golden { label, family, mu, expr, correction: None }
}

const fn misprint(
    label: &'static str,
    family: Family,
    mu: &'static [i64],
    expr: &'static str,
    correction: &'static str,
) -> Golden {
    Golden { label, family, mu, expr, correction: Some(correction) }
}

use Family::{E, F, P};

/// The full table.
pub const GOLDENS: &[Golden] = &[
    // Orbit of (2,1,0).
    g("orbit 210", E, &[2, 1, 0], "x1^2*x2 + q*(1-t)/(1-q*t^2)*x1*x2*x3"),
    g(
        "orbit 210",
        E,
        &[2, 0, 1],
        "x1^2*x3 + (1-t)/(1-q*t)*x1^2*x2 + q*(1-t)/(1-q*t)*x1*x2*x3",
    ),
    g(
        "orbit 210",
        E,
        &[1, 2, 0],
        "x1*x2^2 + (1-t)/(1-q*t)*x1^2*x2 + q*(1-t)/(1-q*t)*x1*x2*x3",
    ),
    g(
        "orbit 210",
        E,
        &[0, 2, 1],
        "x2^2*x3 + (1-t)/(1-q*t)*x1*x2^2 + (1-t)/(1-q^2*t^2)*x1^2*x3 \
         + (1-t)/(1-q^2*t^2)*(1-t)/(1-q*t)*x1^2*x2 \
         + ((1-t)/(1-q*t) + q*(1-t)/(1-q^2*t^2)*(1-t)/(1-q*t))*x1*x2*x3",
    ),
    g(
        "orbit 210",
        E,
        &[1, 0, 2],
        "x1*x3^2 + (1-t)/(1-q*t)*x1^2*x3 + (1-t)/(1-q^2*t^2)*x1*x2^2 \
         + (1-t)/(1-q^2*t^2)*(1-t)/(1-q*t)*x1^2*x2 \
         + ((1-t)/(1-q*t) + q*(1-t)/(1-q^2*t^2)*(1-t)/(1-q*t))*x1*x2*x3",
    ),
    misprint(
        "orbit 210",
        E,
        &[0, 1, 2],
        "x2*x3^2 + (1-t)/(1-q*t)*x2^2*x3 + (1-t)/(1-q*t)*x1*x3^2 \
         + (1-t)/(1-q^2*t^2)*(1-t)/(1-q*t)*x1^2*x3 \
         + (1-t)/(1-q^2*t^2)*t*x1^2*x2 \
         + (1-t)/(1-q^2*t^2)*((1-t)/(1-q*t))^2*x1^2*x2 \
         + (1-t)/(1-q^2*t^2)*(1-t)/(1-q*t)*q*t*x1*x2^2 \
         + (1-t)/(1-q^2*t^2)*(1-t)/(1-q*t)*x1*x2^2 \
         + ((1-t)/(1-q*t))^2*x1*x2*x3 \
         + (1-t)/(1-q^2*t^2)*(1-t)/(1-q*t)*q*t*x1*x2*x3 \
         + (1-t)/(1-q^2*t^2)*((1-t)/(1-q*t))^2*q*x1*x2*x3 \
         + (1-t)/(1-q*t)*x1*x2*x3",
        "(1-t)/(1-q^2*t^2)*(1-t)/(1-q*t)*q*t*x1^2*x3",
    ),
    g("orbit 210", F, &[2, 1, 0], "x1^2*x2 + q*(1-t)/(1-q*t^2)*x1*x2*x3"),
    g("orbit 210", F, &[1, 2, 0], "x1*x2^2 + q*t*(1-t)/(1-q*t^2)*x1*x2*x3"),
    g("orbit 210", F, &[2, 0, 1], "x1^2*x3 + q*t*(1-t)/(1-q*t^2)*x1*x2*x3"),
    g("orbit 210", F, &[1, 0, 2], "x1*x3^2 + (1-t)/(1-q*t^2)*x1*x2*x3"),
    g("orbit 210", F, &[0, 2, 1], "x2^2*x3 + (1-t)/(1-q*t^2)*x1*x2*x3"),
    g("orbit 210", F, &[0, 1, 2], "x2*x3^2 + t*(1-t)/(1-q*t^2)*x1*x2*x3"),
    g(
        "orbit 210",
        P,
        &[2, 1, 0],
        "x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2 \
         + (q + q*t + q*t + 1 + 1 + t)*(1-t)/(1-q*t^2)*x1*x2*x3",
    ),
    misprint(
        "orbit 210, simplified",
        P,
        &[2, 1, 0],
        "x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2 \
         + ((1-t^2)*(1-q*t)/((1-q*t)*(1-q*t^2)) + (1-t)*(1-q^2)/((1-q)*(1-q*t)))*x1*x2*x3",
        "(1-t^2)*((1-q^2*t) - (1-q*t))/((1-q*t)*(1-q*t^2))*x1*x2*x3",
    ),
    // Word forms.
    g(
        "word form",
        E,
        &[2, 0, 1],
        "x1*x3*x1 + (1-t)/(1-q*t)*x1*x2*x1 + q*t*(1-t)/(1-q*t^2)*x1*x3*x2 \
         + q*(1-t)/(1-q*t)*(1-t)/(1-q*t^2)*x1*x2*x3",
    ),
    g(
        "word form",
        E,
        &[1, 2, 0],
        "x1*x2*x2 + (1-t)/(1-q*t)*x1*x2*x1 + q*(1-q*t^2)/(1-q*t)*(1-t)/(1-q*t^2)*x1*x2*x3",
    ),
    // Two variables.
    g("n = 2", E, &[0, 0], "1"),
    g("n = 2", E, &[1, 0], "x1"),
    g("n = 2", E, &[0, 1], "x2 + (1-t)/(1-q*t)*x1"),
    g("n = 2", E, &[1, 1], "x1*x2"),
    g("n = 2", E, &[2, 0], "x1^2 + q*(1-t)/(1-q*t)*x1*x2"),
    g(
        "n = 2",
        E,
        &[0, 2],
        "x2^2 + (1-t)/(1-q^2*t)*x1^2 + ((1-t)/(1-q*t) + q*(1-t)/(1-q^2*t)*(1-t)/(1-q*t))*x1*x2",
    ),
    g(
        "n = 2",
        E,
        &[3, 0],
        "x1^3 + q^2*(1-t)/(1-q^2*t)*x1*x2^2 \
         + (q*(1-t)/(1-q*t) + q^2*(1-t)/(1-q^2*t)*(1-t)/(1-q*t))*x1^2*x2",
    ),
    // Three variables.
    g("n = 3", E, &[0, 0, 0], "1"),
    g("n = 3", E, &[1, 0, 0], "x1"),
    g("n = 3", E, &[0, 1, 0], "x2 + (1-t)/(1-q*t^2)*x1"),
    g("n = 3", E, &[0, 0, 1], "x3 + (1-t)/(1-q*t)*(x2 + x1)"),
    g("n = 3", E, &[1, 1, 0], "x1*x2"),
    g("n = 3", E, &[1, 0, 1], "x1*x3 + (1-t)/(1-q*t^2)*x1*x2"),
    g("n = 3", E, &[0, 1, 1], "x2*x3 + (1-t)/(1-q*t)*(x1*x3 + x1*x2)"),
    g("n = 3", E, &[2, 0, 0], "x1^2 + q*(1-t)/(1-q*t)*(x1*x3 + x1*x2)"),
    misprint(
        "n = 3",
        E,
        &[2, 2, 0],
        "x1^2*x2^2 + q*(1-t)/(1-q*t^2)*x1^2*x2*x3 + q*(1-t)/(1-q*t^2)*x1*x2^2*x3",
        "(q*(1-t)/(1-q*t) - q*(1-t)/(1-q*t^2))*(x1^2*x2*x3 + x1*x2^2*x3)",
    ),
    g("n = 3", P, &[1, 0, 0], "x1 + x2 + x3"),
    misprint(
        "n = 3",
        P,
        &[2, 0, 0],
        "x1*x2 + x1*x3 + x2*x3 + (1-q^2)*(1-t)/((1-q)*(1-t*q))*(x1^2 + x2^2 + x3^2)",
        "(1 - (1-q^2)*(1-t)/((1-q)*(1-t*q)))*(x1^2 + x2^2 + x3^2 - x1*x2 - x1*x3 - x2*x3)",
    ),
    g("n = 3", P, &[1, 1, 0], "x1*x2 + x1*x3 + x2*x3"),
    // Partitions with three boxes.
    g(
        "three boxes",
        P,
        &[3, 0, 0],
        "x1^3 + x2^3 + x3^3 \
         + (1-q^3)/(1-t*q^2)*(1-t)/(1-q)*(x1^2*x2 + x1^2*x3 + x2^2*x1 + x2^2*x3 + x3^2*x1 + x3^2*x2) \
         + (1-q^3)/(1-t*q^2)*(1-q^2)/(1-t*q)*((1-t)/(1-q))^2*x1*x2*x3",
    ),
    g(
        "three boxes",
        P,
        &[2, 1, 0],
        "x1^2*x2 + x1^2*x3 + x2^2*x1 + x2^2*x3 + x3^2*x1 + x3^2*x2 \
         + ((1-t^2)/(1-q*t)*(1-q^2*t)/(1-q*t^2) + (1-t)/(1-q)*(1-q^2)/(1-q*t))*x1*x2*x3",
    ),
    g("three boxes", P, &[1, 1, 1], "x1*x2*x3"),
];

/// Entries with `n` variables, or all of them.
pub fn goldens_for(n: Option<usize>) -> Vec<Golden> {
    GOLDENS.iter().copied().filter(|g| n.is_none_or(|n| g.n() == n)).collect()
}
