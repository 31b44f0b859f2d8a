//! Closed counting formulas for walks, fillings and tableaux.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::stats::{boxes_in_cylindrical_order, conj_at, conjugate, u_stat};
use crate::error::{invalid, Result};
use crate::laurent::Weight;

/// Which count to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountKind {
    /// `#AW_μ = ∏ 2^{u_μ(b)}`.
    Aw,
    /// `#NAF_μ = ∏ (u_μ(b) + 1)`.
    Naf,
    /// Number of column strict tableaux, `∏ (n + c(b)) / h(b)`.
    Cst,
    /// `t(λ) = n! ∏_{j > 1} (n - λ'_{j-1} + 1)`.
    T,
    /// `c(λ) = ∏_{j > 1} 2^{n - λ'_{j-1}} / (n - λ'_{j-1} + 1)`.
    C,
    /// `r(λ) = ∏_{j > 1} (n - λ'_j + 1) / (n - λ'_{j-1} + 1)`.
    R,
}

impl CountKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "aw" => Ok(CountKind::Aw),
            "naf" => Ok(CountKind::Naf),
            "cst" => Ok(CountKind::Cst),
            "t" => Ok(CountKind::T),
            "c" => Ok(CountKind::C),
            "r" => Ok(CountKind::R),
            _ => invalid(format!("unknown count {s:?}")),
        }
    }
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

pub fn count_aw(mu: &Weight) -> BigInt {
    let e: usize = boxes_in_cylindrical_order(mu).into_iter().map(|(i, j)| u_stat(mu, i, j)).sum();
    BigInt::one() << e
}

pub fn count_naf(mu: &Weight) -> BigInt {
    boxes_in_cylindrical_order(mu).into_iter().map(|(i, j)| BigInt::from(u_stat(mu, i, j) + 1)).product()
}

/// Boxes `(i, j)` of `λ` paired with `n - λ'_{j-1} + 1` and
/// `n - λ'_j + 1`, over the boxes with `j > 1`.
fn column_factors(lambda: &Weight) -> Vec<(i64, i64)> {
    let n = lambda.n() as i64;
    let conj = conjugate(lambda.entries());
    boxes_in_cylindrical_order(lambda)
        .into_iter()
        .filter(|&(_, j)| j > 1)
        .map(|(_, j)| {
            let j = j as i64;
            (n - conj_at(&conj, j - 1) + 1, n - conj_at(&conj, j) + 1)
        })
        .collect()
}

fn require_partition(lambda: &Weight) -> Result<()> {
    lambda.require_nonneg()?;
    if !lambda.is_weakly_decreasing() {
        return invalid(format!("{lambda} is not a partition"));
    }
    Ok(())
}

pub fn count_cst(lambda: &Weight) -> Result<BigInt> {
    require_partition(lambda)?;
    let n = lambda.n() as i64;
    let conj = conjugate(lambda.entries());
    let mut acc = BigRational::one();
    for (i, j) in boxes_in_cylindrical_order(lambda) {
        let (i, j) = (i as i64, j as i64);
        let hook = lambda.at(i as usize) - j + conj_at(&conj, j) - i + 1;
        acc *= int(n + j - i) / int(hook);
    }
    Ok(acc.to_integer())
}

pub fn count_t(lambda: &Weight) -> Result<BigInt> {
    require_partition(lambda)?;
    let fact: BigInt = (1..=lambda.n() as i64).map(BigInt::from).product();
    Ok(column_factors(lambda).into_iter().fold(fact, |acc, (a, _)| acc * a))
}

pub fn count_c(lambda: &Weight) -> Result<BigRational> {
    require_partition(lambda)?;
    let mut acc = BigRational::one();
    for (a, _) in column_factors(lambda) {
        acc *= BigRational::from_integer(BigInt::one() << (a - 1) as usize) / int(a);
    }
    Ok(acc)
}

pub fn count_r(lambda: &Weight) -> Result<BigRational> {
    require_partition(lambda)?;
    let mut acc = BigRational::one();
    for (a, b) in column_factors(lambda) {
        acc *= int(b) / int(a);
    }
    Ok(acc)
}

/// Evaluates any [`CountKind`] exactly.
pub fn count(mu: &Weight, what: CountKind) -> Result<BigRational> {
    mu.require_nonneg()?;
    Ok(match what {
        CountKind::Aw => BigRational::from_integer(count_aw(mu)),
        CountKind::Naf => BigRational::from_integer(count_naf(mu)),
        CountKind::Cst => BigRational::from_integer(count_cst(mu)?),
        CountKind::T => BigRational::from_integer(count_t(mu)?),
        CountKind::C => count_c(mu)?,
        CountKind::R => count_r(mu)?,
    })
}

/// The two shapes with a closed queue tableau count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QtShape {
    /// `(r, 0, …, 0)`.
    SingleRow,
    /// `(r, …, r, 0)`.
    AllButLast,
}

impl QtShape {
    pub fn weight(&self, n: usize, r: usize) -> Weight {
        let mut v = vec![0i64; n];
        match self {
            QtShape::SingleRow => v[0] = r as i64,
            QtShape::AllButLast => v[..n - 1].iter_mut().for_each(|x| *x = r as i64),
        }
        Weight::new(v)
    }
}

/// `#QT = n^{r-1}` for both special shapes.
pub fn qt_special_counts(_shape: QtShape, n: usize, r: usize) -> Result<BigInt> {
    if r == 0 || n == 0 {
        return invalid("need r >= 1 and n >= 1");
    }
    Ok(BigInt::from(n).pow(r as u32 - 1))
}

/// `#NAF` of the special shapes: `n^{r-1}` for `(r, 0, …, 0)` and
/// `(2^{n-1})^{r-1}` for `(r, …, r, 0)`.
pub fn naf_special_counts(shape: QtShape, n: usize, r: usize) -> Result<BigInt> {
    if r == 0 || n == 0 {
        return invalid("need r >= 1 and n >= 1");
    }
    Ok(match shape {
        QtShape::SingleRow => BigInt::from(n).pow(r as u32 - 1),
        QtShape::AllButLast => BigInt::one() << ((n - 1) * (r - 1)),
    })
}

/// `n! / m_λ!`, the size of the orbit `S_n λ`.
pub fn orbit_size(lambda: &Weight) -> BigInt {
    let mut counts = std::collections::BTreeMap::new();
    for &x in lambda.entries() {
        *counts.entry(x).or_insert(0u64) += 1;
    }
    let fact = |k: u64| -> BigInt { (1..=k).map(BigInt::from).product() };
    let mut denom = BigInt::one();
    for &m in counts.values() {
        denom *= fact(m);
    }
    fact(lambda.n() as u64) / denom
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let mu = Weight::new(vec![2, 2, 0]);
        assert_eq!(count_naf(&mu), BigInt::from(4));
        assert_eq!(count_aw(&Weight::zero(3)), BigInt::one());
        assert_eq!(count_cst(&Weight::new(vec![1, 0, 0])).unwrap(), BigInt::from(3));
    }
}
