//! Box diagrams and the attack, arm and leg statistics of their boxes.

use crate::error::Result;
use crate::laurent::Weight;

/// A box `(i, j)` of a diagram together with its cylindrical coordinate
/// `i + n j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxPos {
    pub i: usize,
    pub j: usize,
    pub cyl: i64,
}

/// The boxes `(i, j)` with `1 <= j <= μ_i`, in increasing cylindrical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub mu: Weight,
    pub boxes: Vec<BoxPos>,
}

impl Diagram {
    pub fn new(mu: &Weight) -> Result<Self> {
        mu.require_nonneg()?;
        let n = mu.n();
        let boxes = boxes_in_cylindrical_order(mu)
            .into_iter()
            .map(|(i, j)| BoxPos { i, j, cyl: (i + n * j) as i64 })
            .collect();
        Ok(Diagram { mu: mu.clone(), boxes })
    }

    /// The diagram plus the basement boxes `(i, 0)`, in cylindrical order.
    pub fn extended_boxes(&self) -> Vec<BoxPos> {
        let mut out: Vec<BoxPos> = (1..=self.mu.n()).map(|i| BoxPos { i, j: 0, cyl: i as i64 }).collect();
        out.extend(self.boxes.iter().copied());
        out
    }
}

/// Boxes of `dg(μ)` as `(row, column)` sorted by `i + n j`.
pub fn boxes_in_cylindrical_order(mu: &Weight) -> Vec<(usize, usize)> {
    let n = mu.n();
    let maxj = mu.entries().iter().copied().max().unwrap_or(0).max(0) as usize;
    let mut out = Vec::new();
    for j in 1..=maxj {
        for i in 1..=n {
            if mu.at(i) >= j as i64 {
                out.push((i, j));
            }
        }
    }
    out
}

/// The box with cylindrical coordinate `c`, whether or not it lies in the
/// extended diagram.
fn box_at(c: i64, n: usize) -> (usize, i64) {
    let n = n as i64;
    let i = (c - 1).rem_euclid(n) + 1;
    (i as usize, (c - i) / n)
}

fn in_extended(mu: &Weight, i: usize, j: i64) -> bool {
    j >= 0 && j <= mu.at(i)
}

/// `attack_μ(b) = {b - 1, …, b - n + 1} ∩ dg^(μ)`, as `(row, column)` pairs
/// where column 0 is the basement.
pub fn attack(mu: &Weight, i: usize, j: usize) -> Vec<(usize, usize)> {
    let n = mu.n();
    let b = (i + n * j) as i64;
    let mut out = Vec::new();
    for k in 1..n as i64 {
        let (ii, jj) = box_at(b - k, n);
        if in_extended(mu, ii, jj) {
            out.push((ii, jj as usize));
        }
    }
    out
}

/// `Nleg_μ(b) = (b + nZ_{>0}) ∩ dg(μ)`.
pub fn nleg_set(mu: &Weight, i: usize, j: usize) -> Vec<(usize, usize)> {
    ((j + 1) as i64..=mu.at(i)).map(|jj| (i, jj as usize)).collect()
}

/// `Narm_μ(b) = {a ∈ attack_μ(b) : #Nleg_μ(a) <= #Nleg_μ(b)}`.
pub fn narm_set(mu: &Weight, i: usize, j: usize) -> Vec<(usize, usize)> {
    let own = nleg_set(mu, i, j).len();
    attack(mu, i, j).into_iter().filter(|&(a, b)| nleg_set(mu, a, b).len() <= own).collect()
}

/// `#Nleg_μ(i, j) = μ_i - j`.
pub fn nleg_formula(mu: &Weight, i: usize, j: usize) -> usize {
    (mu.at(i) - j as i64) as usize
}

/// `#{i' < i : j <= μ_{i'} <= μ_i} + #{i' > i : j - 1 <= μ_{i'} < μ_i}`.
pub fn narm_formula(mu: &Weight, i: usize, j: usize) -> usize {
    let (mi, j) = (mu.at(i), j as i64);
    let before = (1..i).filter(|&k| mu.at(k) >= j && mu.at(k) <= mi).count();
    let after = (i + 1..=mu.n()).filter(|&k| mu.at(k) >= j - 1 && mu.at(k) < mi).count();
    before + after
}

/// `u_μ(i, j) = n - 1 - #attack_μ(i, j)`.
pub fn u_stat(mu: &Weight, i: usize, j: usize) -> usize {
    mu.n() - 1 - attack(mu, i, j).len()
}

/// Statistics of a single box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxStat {
    pub i: usize,
    pub j: usize,
    pub attack: Vec<(usize, usize)>,
    pub nleg: usize,
    pub narm: usize,
    pub nleg_formula: usize,
    pub narm_formula: usize,
    pub u: usize,
}

/// Statistics of every box of `dg(μ)`, in cylindrical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxStats {
    pub mu: Weight,
    pub boxes: Vec<BoxStat>,
}

impl BoxStats {
    /// True when the set and closed-form counts agree on every box.
    pub fn consistent(&self) -> bool {
        self.boxes.iter().all(|b| b.nleg == b.nleg_formula && b.narm == b.narm_formula)
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&BoxStat> {
        self.boxes.iter().find(|b| b.i == i && b.j == j)
    }

    /// `ℓ(u_μ) = Σ u_μ(b)`.
    pub fn total_u(&self) -> usize {
        self.boxes.iter().map(|b| b.u).sum()
    }
}

pub fn box_stats(mu: &Weight) -> Result<BoxStats> {
    mu.require_nonneg()?;
    let boxes = boxes_in_cylindrical_order(mu)
        .into_iter()
        .map(|(i, j)| BoxStat {
            i,
            j,
            attack: attack(mu, i, j),
            nleg: nleg_set(mu, i, j).len(),
            narm: narm_set(mu, i, j).len(),
            nleg_formula: nleg_formula(mu, i, j),
            narm_formula: narm_formula(mu, i, j),
            u: u_stat(mu, i, j),
        })
        .collect();
    Ok(BoxStats { mu: mu.clone(), boxes })
}

/// The conjugate partition `λ'` of the nonzero parts, with `λ'_j` for
/// `j = 1..=λ_1`.
pub fn conjugate(lambda: &[i64]) -> Vec<i64> {
    let m = lambda.iter().copied().max().unwrap_or(0).max(0);
    (1..=m).map(|j| lambda.iter().filter(|&&x| x >= j).count() as i64).collect()
}

/// `λ'_j` with `λ'_j = 0` beyond the first row.
pub fn conj_at(conj: &[i64], j: i64) -> i64 {
    if j >= 1 && (j as usize) <= conj.len() {
        conj[j as usize - 1]
    } else {
        0
    }
}
