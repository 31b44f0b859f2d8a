//! Alcove walks along the box-greedy word and their path realizations.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::affine_weyl::{box_greedy_word, AffineRoot, Letter, PeriodicPerm, Perm, Word};
use crate::error::{invalid, Result};
use crate::laurent::Weight;

/// The choice made at an `s`-letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Cross,
    Fold,
}

/// `p_0 = z`, then `p_k = p_{k-1} π` at `π`-letters and `p_k = p_{k-1} s_i`
/// (cross) or `p_k = p_{k-1}` (fold) at `s_i`-letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlcoveWalk {
    pub z: Perm,
    pub word: Word,
    pub choices: Vec<Step>,
    pub states: Vec<PeriodicPerm>,
}

impl AlcoveWalk {
    pub fn new(z: &Perm, word: &Word, choices: Vec<Step>) -> Result<Self> {
        let n = z.n();
        if choices.len() != word.s_count() {
            return invalid("one choice per s-letter is required");
        }
        let mut states = vec![PeriodicPerm::from_perm(z)];
        let mut c = choices.iter();
        for l in word.letters() {
            let p = states.last().expect("nonempty");
            let next = match *l {
                Letter::Pi => p.compose(&PeriodicPerm::pi(n)),
                Letter::PiInv => p.compose(&PeriodicPerm::pi(n).inverse()),
                Letter::S(i) => {
                    if i >= n {
                        return invalid(format!("letter s{i} out of range for n={n}"));
                    }
                    match c.next().expect("counted") {
                        Step::Cross => p.compose(&PeriodicPerm::s(n, i)),
                        Step::Fold => p.clone(),
                    }
                }
            };
            states.push(next);
        }
        Ok(AlcoveWalk { z: z.clone(), word: word.clone(), choices, states })
    }

    pub fn folds(&self) -> usize {
        self.choices.iter().filter(|c| **c == Step::Fold).count()
    }

    /// Shorthand such as `πs₁π1π` with `1` marking a fold.
    pub fn shorthand(&self) -> String {
        let mut out = String::new();
        let mut c = self.choices.iter();
        for l in self.word.letters() {
            match l {
                Letter::Pi => out.push('π'),
                Letter::PiInv => out.push_str("π⁻¹"),
                Letter::S(i) => match c.next() {
                    Some(Step::Cross) => out.push_str(&format!("s{}", subscript(*i))),
                    _ => out.push('1'),
                },
            }
        }
        out
    }
}

fn subscript(i: usize) -> String {
    i.to_string().chars().map(|d| char::from_u32(0x2080 + d.to_digit(10).unwrap_or(0)).unwrap_or(d)).collect()
}

/// Every walk from `z` along the box-greedy word of `u_μ`.
///
/// Ordered by the binary choice vector with `Cross = 0`, the first
/// `s`-letter being the most significant digit.
pub fn enumerate_walks(mu: &Weight, z: &Perm) -> Result<Vec<AlcoveWalk>> {
    if z.n() != mu.n() {
        return invalid(format!("basement has size {} but n = {}", z.n(), mu.n()));
    }
    let word = box_greedy_word(mu)?;
    let k = word.s_count();
    if k >= 31 {
        return invalid(format!("2^{k} walks is too many to enumerate"));
    }
    (0u64..1 << k)
        .map(|b| {
            let choices =
                (0..k).map(|m| if (b >> (k - 1 - m)) & 1 == 1 { Step::Fold } else { Step::Cross }).collect();
            AlcoveWalk::new(z, &word, choices)
        })
        .collect()
}

/// The kind of a path segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegmentKind {
    Cross,
    Fold,
    Omega,
}

impl SegmentKind {
    pub fn tag(&self) -> &'static str {
        match self {
            SegmentKind::Cross => "c",
            SegmentKind::Fold => "f",
            SegmentKind::Omega => "omega",
        }
    }
}

/// One segment of a path realization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Segment {
    pub kind: SegmentKind,
    pub dir: Vec<BigRational>,
    /// The hyperplane root of a fold.
    pub root: Option<AffineRoot>,
}

/// Segments of a walk together with `ρ` and the endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathRealization {
    pub rho: Vec<BigRational>,
    pub segments: Vec<Segment>,
    /// The sum of the `c` and `ω` directions; folds return to their start.
    pub endpoint: Vec<BigRational>,
}

/// `ρ = ((n-1)/2, (n-3)/2, …, -(n-1)/2)`.
pub fn rho(n: usize) -> Vec<BigRational> {
    (0..n)
        .map(|k| BigRational::new(BigInt::from(n as i64 - 1 - 2 * k as i64), BigInt::from(2)))
        .collect()
}

fn split(k: i64, n: i64) -> (usize, i64) {
    let m = (k - 1).div_euclid(n);
    ((k - n * m) as usize, m)
}

/// The path of a walk: `π` steps move by `(1/n)(1, …, 1)`; an `s_i` step at
/// state `p` with `p(i) = r + n m`, `p(i+1) = r' + n m'` points along
/// `ε_r - ε_{r'}`, and a fold there lies on `ε_{r'} - ε_r + (m - m')K`.
pub fn walk_geometry(p: &AlcoveWalk) -> PathRealization {
    let n = p.z.n();
    let zero = BigRational::from_integer(BigInt::from(0));
    let one = BigRational::from_integer(BigInt::from(1));
    let mut segments = Vec::new();
    let mut endpoint = vec![zero.clone(); n];
    let mut c = p.choices.iter();
    for (k, l) in p.word.letters().iter().enumerate() {
        let state = &p.states[k];
        match *l {
            Letter::Pi | Letter::PiInv => {
                let sign = if *l == Letter::Pi { 1 } else { -1 };
                let d = BigRational::new(BigInt::from(sign), BigInt::from(n as i64));
                let dir = vec![d; n];
                for (e, x) in endpoint.iter_mut().zip(&dir) {
                    *e += x;
                }
                segments.push(Segment { kind: SegmentKind::Omega, dir, root: None });
            }
            Letter::S(i) => {
                let (r1, m1) = split(state.apply(i as i64), n as i64);
                let (r2, m2) = split(state.apply(i as i64 + 1), n as i64);
                let mut dir = vec![zero.clone(); n];
                dir[r1 - 1] += &one;
                dir[r2 - 1] -= &one;
                match c.next().expect("counted") {
                    Step::Cross => {
                        for (e, x) in endpoint.iter_mut().zip(&dir) {
                            *e += x;
                        }
                        segments.push(Segment { kind: SegmentKind::Cross, dir, root: None });
                    }
                    Step::Fold => {
                        let root = AffineRoot { i: r2, j: r1, level: m1 - m2 };
                        segments.push(Segment { kind: SegmentKind::Fold, dir, root: Some(root) });
                    }
                }
            }
        }
    }
    PathRealization { rho: rho(n), segments, endpoint }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_zero_walks() {
        let w = enumerate_walks(&Weight::new(vec![3, 0]), &Perm::identity(2)).unwrap();
        let s: Vec<String> = w.iter().map(|x| x.shorthand()).collect();
        assert_eq!(s, vec!["πs₁πs₁π", "πs₁π1π", "π1πs₁π", "π1π1π"]);
    }
}
