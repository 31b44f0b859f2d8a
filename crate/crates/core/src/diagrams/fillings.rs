//! Nonattacking fillings, queue tableaux and pipe dreams.

use super::stats::{attack, boxes_in_cylindrical_order};
use crate::affine_weyl::Perm;
use crate::error::{invalid, Result};
use crate::laurent::Weight;

/// Which fillings to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FillingKind {
    Nonattacking,
    Queue,
}

impl FillingKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "nonattacking" | "naf" => Ok(FillingKind::Nonattacking),
            "queue" | "qt" => Ok(FillingKind::Queue),
            _ => invalid(format!("unknown filling kind {s:?}")),
        }
    }
}

/// A filling `T` of `dg(μ)` with basement `T(i, 0) = z(i)`.
///
/// `rows[i - 1][j - 1]` is `T(i, j)` for `1 <= j <= μ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    pub mu: Weight,
    pub z: Perm,
    pub rows: Vec<Vec<usize>>,
    pub kind: FillingKind,
}

impl Filling {
    pub fn new(mu: &Weight, z: &Perm, rows: Vec<Vec<usize>>, kind: FillingKind) -> Result<Self> {
        check_shape(mu, z)?;
        let n = mu.n();
        if rows.len() != n {
            return invalid("one row per index is required");
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() as i64 != mu.0[i] {
                return invalid(format!("row {} has length {} instead of {}", i + 1, row.len(), mu.0[i]));
            }
            if row.iter().any(|&v| v == 0 || v > n) {
                return invalid(format!("row {} has a value outside 1..={n}", i + 1));
            }
        }
        Ok(Filling { mu: mu.clone(), z: z.clone(), rows, kind })
    }

    pub fn n(&self) -> usize {
        self.mu.n()
    }

    /// `T(i, j)`, with column 0 the basement.
    pub fn get(&self, i: usize, j: usize) -> usize {
        if j == 0 {
            self.z.apply(i)
        } else {
            self.rows[i - 1][j - 1]
        }
    }

    /// The values of column `j` as `(row, value)` pairs.
    pub fn column(&self, j: usize) -> Vec<(usize, usize)> {
        (1..=self.n()).filter(|&i| j == 0 || self.mu.at(i) >= j as i64).map(|i| (i, self.get(i, j))).collect()
    }

    pub fn max_column(&self) -> usize {
        self.mu.entries().iter().copied().max().unwrap_or(0).max(0) as usize
    }

    /// The word `x_{T(u)}` over boxes `u` in increasing cylindrical order.
    pub fn word(&self) -> Vec<usize> {
        boxes_in_cylindrical_order(&self.mu).into_iter().map(|(i, j)| self.get(i, j)).collect()
    }

    /// `Σ_u ε_{T(u)}`.
    pub fn endpoint(&self) -> Weight {
        let mut e = vec![0i64; self.n()];
        for v in self.word() {
            e[v - 1] += 1;
        }
        Weight::new(e)
    }

    pub fn is_column_distinct(&self) -> bool {
        (0..=self.max_column()).all(|j| {
            let mut vals: Vec<usize> = self.column(j).into_iter().map(|x| x.1).collect();
            vals.sort_unstable();
            vals.windows(2).all(|w| w[0] != w[1])
        })
    }

    /// `T(b) ≠ T(a)` for every box `b` and every `a ∈ attack_μ(b)`.
    pub fn is_nonattacking(&self) -> bool {
        boxes_in_cylindrical_order(&self.mu)
            .into_iter()
            .all(|(i, j)| attack(&self.mu, i, j).into_iter().all(|(a, b)| self.get(a, b) != self.get(i, j)))
    }

    /// Nonattacking and satisfying the queue condition on runs of equal rows.
    pub fn is_queue(&self) -> bool {
        self.is_nonattacking()
            && boxes_in_cylindrical_order(&self.mu)
                .into_iter()
                .all(|(i, j)| queue_excluded(&self.mu, i).all(|k| self.get(k, j - 1) != self.get(i, j)))
    }
}

fn check_shape(mu: &Weight, z: &Perm) -> Result<()> {
    mu.require_nonneg()?;
    if z.n() != mu.n() {
        return invalid(format!("basement has size {} but n = {}", z.n(), mu.n()));
    }
    Ok(())
}

/// Rows `i' < i` in the maximal run `μ_{i'} = ⋯ = μ_i` directly above row `i`.
fn queue_excluded(mu: &Weight, i: usize) -> impl Iterator<Item = usize> + '_ {
    (1..i).rev().take_while(move |&k| mu.at(k) == mu.at(i))
}

/// All fillings of the given kind, in depth-first order over boxes in
/// cylindrical order with values ascending.
pub fn enumerate_fillings(mu: &Weight, z: &Perm, kind: FillingKind) -> Result<Vec<Filling>> {
    check_shape(mu, z)?;
    let n = mu.n();
    let boxes = boxes_in_cylindrical_order(mu);
    let constraints: Vec<Vec<(usize, usize)>> = boxes
        .iter()
        .map(|&(i, j)| {
            let mut c = attack(mu, i, j);
            if kind == FillingKind::Queue {
                c.extend(queue_excluded(mu, i).map(|k| (k, j - 1)));
            }
            c
        })
        .collect();
    let mut rows: Vec<Vec<usize>> = mu.entries().iter().map(|&m| vec![0; m as usize]).collect();
    let mut out = Vec::new();
    fill(0, &boxes, &constraints, z, n, &mut rows, &mut |rows| {
        out.push(Filling { mu: mu.clone(), z: z.clone(), rows: rows.to_vec(), kind });
    });
    Ok(out)
}

fn fill(
    k: usize,
    boxes: &[(usize, usize)],
    constraints: &[Vec<(usize, usize)>],
    z: &Perm,
    n: usize,
    rows: &mut Vec<Vec<usize>>,
    emit: &mut dyn FnMut(&[Vec<usize>]),
) {
    if k == boxes.len() {
        emit(rows);
        return;
    }
    let (i, j) = boxes[k];
    let value = |rows: &Vec<Vec<usize>>, a: usize, b: usize| if b == 0 { z.apply(a) } else { rows[a - 1][b - 1] };
    for v in 1..=n {
        if constraints[k].iter().any(|&(a, b)| value(rows, a, b) == v) {
            continue;
        }
        rows[i - 1][j - 1] = v;
        fill(k + 1, boxes, constraints, z, n, rows, emit);
    }
    rows[i - 1][j - 1] = 0;
}

/// The column inverse of a column distinct filling: `P(k, j) = i` exactly
/// when `T(i, j) = k`, and `0` when `k` is absent from column `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PipeDream {
    /// `entries[k - 1][j]` for `k` in `1..=n` and `j` in `0..=max μ`.
    pub entries: Vec<Vec<usize>>,
}

impl PipeDream {
    pub fn get(&self, k: usize, j: usize) -> usize {
        self.entries[k - 1][j]
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn columns(&self) -> usize {
        self.entries.first().map_or(0, |r| r.len())
    }
}

pub fn pipedream_convert(t: &Filling) -> Result<PipeDream> {
    if !t.is_column_distinct() {
        return invalid("filling is not column distinct");
    }
    let n = t.n();
    let cols = t.max_column() + 1;
    let mut entries = vec![vec![0; cols]; n];
    for j in 0..cols {
        for (i, k) in t.column(j) {
            entries[k - 1][j] = i;
        }
    }
    Ok(PipeDream { entries })
}

pub fn pipedream_invert(p: &PipeDream, mu: &Weight, z: &Perm) -> Result<Filling> {
    check_shape(mu, z)?;
    let n = mu.n();
    let cols = mu.entries().iter().copied().max().unwrap_or(0).max(0) as usize + 1;
    if p.n() != n || p.columns() != cols {
        return invalid(format!("pipe dream must be {n} by {cols}"));
    }
    let mut rows: Vec<Vec<usize>> = mu.entries().iter().map(|&m| vec![0; m as usize]).collect();
    for k in 1..=n {
        for j in 0..cols {
            let i = p.get(k, j);
            if i == 0 {
                continue;
            }
            if i > n || mu.at(i) < j as i64 {
                return invalid(format!("P({k},{j}) = {i} is not a box"));
            }
            if j == 0 {
                if z.apply(i) != k {
                    return invalid(format!("basement column disagrees with z at row {i}"));
                }
            } else if rows[i - 1][j - 1] != 0 {
                return invalid(format!("box ({i},{j}) is hit twice"));
            } else {
                rows[i - 1][j - 1] = k;
            }
        }
    }
    if rows.iter().flatten().any(|&v| v == 0) {
        return invalid("pipe dream leaves a box empty");
    }
    let t = Filling::new(mu, z, rows, FillingKind::Nonattacking)?;
    Ok(t)
}
