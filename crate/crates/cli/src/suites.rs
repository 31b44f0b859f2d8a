//! The property suites run by `maclab verify`.

use rayon::prelude::*;

use macdonald_lab::affine_weyl::Perm;
use macdonald_lab::diagrams::{count_aw, count_naf, enumerate_fillings, enumerate_walks, FillingKind};
use macdonald_lab::laurent::Weight;
use macdonald_lab::macdonald::{verify_eigen, verify_haction, verify_kz, CheckEntry, Report};
use macdonald_lab::{Error, Result};

use crate::goldens::goldens_for;

/// A suite name accepted by `--suite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Eigen,
    Kz,
    Haction,
    Counts,
    Golden,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "eigen" => Suite::Eigen,
            "kz" => Suite::Kz,
            "haction" => Suite::Haction,
            "counts" => Suite::Counts,
            "golden" => Suite::Golden,
            "all" => Suite::All,
            _ => return Err(Error::InvalidInput(format!("unknown suite {s:?}"))),
        })
    }
}

/// Weights with `n` entries and `|μ| ≤ max_size`.
fn weights_up_to(n: usize, max_size: i64) -> Vec<Weight> {
    (0..=max_size).flat_map(|s| Weight::compositions(n, s)).collect()
}

fn merge(title: &str, parts: Vec<Report>) -> Report {
    let mut r = Report::new(title);
    for p in parts {
        r.extend(p);
    }
    r
}

fn entry(name: String, pass: bool, difference: Option<String>) -> CheckEntry {
    CheckEntry { name, pass, difference }
}

pub fn eigen(n: usize, max_size: i64) -> Result<Report> {
    let parts = weights_up_to(n, max_size).par_iter().map(verify_eigen).collect::<Result<Vec<_>>>()?;
    Ok(merge("eigen", parts))
}

pub fn haction(n: usize, max_size: i64) -> Result<Report> {
    let jobs: Vec<(Weight, usize)> =
        weights_up_to(n, max_size).into_iter().flat_map(|mu| (1..n).map(move |i| (mu.clone(), i))).collect();
    let parts = jobs.par_iter().map(|(mu, i)| verify_haction(mu, *i)).collect::<Result<Vec<_>>>()?;
    Ok(merge("haction", parts))
}

pub fn kz(n: usize, max_size: i64) -> Result<Report> {
    let lambdas: Vec<Weight> = (0..=max_size).flat_map(|s| Weight::partitions(n, s)).collect();
    let parts = lambdas.iter().map(verify_kz).collect::<Result<Vec<_>>>()?;
    Ok(merge("kz", parts))
}

/// Product formulas for `#NAF` and `#AW` against enumeration, and
/// queue tableaux inside nonattacking fillings.
pub fn counts(n: usize, max_size: i64) -> Result<Report> {
    let basements = if n <= 3 { Perm::all(n) } else { vec![Perm::identity(n), Perm::longest(n)] };
    let jobs: Vec<(Weight, Perm)> = weights_up_to(n, max_size)
        .into_iter()
        .flat_map(|mu| basements.iter().map(move |z| (mu.clone(), z.clone())))
        .collect();
    let parts = jobs
        .par_iter()
        .map(|(mu, z)| -> Result<Report> {
            let mut r = Report::default();
            let naf = enumerate_fillings(mu, z, FillingKind::Nonattacking)?;
            let qt = enumerate_fillings(mu, z, FillingKind::Queue)?;
            let walks = enumerate_walks(mu, z)?;
            let (f_naf, f_aw) = (count_naf(mu), count_aw(mu));
            let z_text = z.to_string();
            r.entries.push(entry(
                format!("#NAF of {mu} with basement {z_text} = {f_naf}"),
                f_naf == naf.len().into(),
                Some(format!("enumerated {}", naf.len())).filter(|_| f_naf != naf.len().into()),
            ));
            r.entries.push(entry(
                format!("#AW of {mu} with basement {z_text} = {f_aw}"),
                f_aw == walks.len().into(),
                Some(format!("enumerated {}", walks.len())).filter(|_| f_aw != walks.len().into()),
            ));
            let naf_rows: std::collections::HashSet<&Vec<Vec<usize>>> = naf.iter().map(|t| &t.rows).collect();
            let inside = qt.iter().all(|t| naf_rows.contains(&t.rows));
            r.entries.push(entry(format!("QT of {mu} with basement {z_text} are nonattacking"), inside, None));
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(merge("counts", parts))
}

/// Tabulated expansions with `n` variables, or all of them.
pub fn golden(n: Option<usize>) -> Result<Report> {
    let table = goldens_for(n);
    let parts = table
        .par_iter()
        .map(|g| -> Result<CheckEntry> {
            let expected = g.expected()?;
            let computed = g.computed()?;
            let mut pass = expected == computed;
            if let Some(printed) = g.printed()? {
                pass &= printed != computed;
            }
            let diff = if pass { None } else { Some(computed.sub(&expected)?.to_string()) };
            Ok(entry(g.name(), pass, diff))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut r = Report::new("golden");
    r.entries = parts;
    Ok(r)
}

/// Runs `suite`; `n` is required for everything except `golden`.
pub fn run_suite(suite: Suite, n: Option<usize>, max_size: i64) -> Result<Vec<Report>> {
    let need = || n.ok_or_else(|| Error::InvalidInput("--n is required for this suite".into()));
    Ok(match suite {
        Suite::Eigen => vec![eigen(need()?, max_size)?],
        Suite::Kz => vec![kz(need()?, max_size)?],
        Suite::Haction => vec![haction(need()?, max_size)?],
        Suite::Counts => vec![counts(need()?, max_size)?],
        Suite::Golden => vec![golden(n)?],
        Suite::All => {
            let n = need()?;
            vec![
                eigen(n, max_size)?,
                haction(n, max_size)?,
                kz(n, max_size)?,
                counts(n, max_size)?,
                golden(Some(n))?,
            ]
        }
    })
}
