//! The `maclab` command line: compute, enumerate, count and verify.
//!
//! [`run`] holds the whole command so it can be driven in-process; the
//! binary only adds the thread pool and the process exit.

pub mod goldens;
pub mod suites;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Value};

use macdonald_lab::affine_weyl::{box_greedy_word, column_greedy_word, decompose_mu, word_eval, Perm, Word};
use macdonald_lab::diagrams::{
    count, cst_expand, enumerate_fillings, enumerate_walks, pipedream_convert, walk_geometry, CountKind, FillingKind,
};
use macdonald_lab::laurent::Weight;
use macdonald_lab::macdonald::{
    compute_E, compute_E_rel, compute_F, compute_P, compute_f, symmetrization_constant, MacdonaldResult, PMethod, Report,
};
use macdonald_lab::serialize::{
    self, document, filling_json, path_json, periodic_json, perm_json, pipedream_json, poly_text, ratfunc_json,
    rational_json, report_json, result_json, result_latex, root_json, weight_json, word_json, Style,
};
use macdonald_lab::{Error, Result};

use suites::{run_suite, Suite};

#[derive(Debug, Parser)]
#[command(name = "maclab", version, about = "Exact GL_n Macdonald polynomials and their combinatorics")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Nonsymmetric E_μ, or the relative E_μ^z with --z.
    #[command(name = "E")]
    E(Opts),
    /// Symmetric P_λ (--method sum-rel | symmetrize | cst).
    #[command(name = "P")]
    P(Opts),
    /// The KZ basis element f_μ.
    #[command(name = "f")]
    SmallF(Opts),
    /// F_μ = 1_0 E_μ together with the constant c(μ) with c(μ) F_μ = P_λ.
    #[command(name = "F")]
    BigF(Opts),
    /// Closed counts (--what aw | naf | cst | t | c | r) or the queue tableau count (--what qt).
    Count(Opts),
    /// The box-greedy (default) or column-greedy (--what column) word of u_μ.
    Word(Opts),
    /// The factorization u_μ = t_μ v_μ^{-1} and the inversion set of u_μ.
    Inv(Opts),
    /// Nonattacking fillings (default) or queue tableaux (--what queue).
    Fillings(Opts),
    /// Alcove walks along the box-greedy word.
    Walks(Opts),
    /// P_λ through column strict tableaux.
    Cst(Opts),
    /// Property suites (--suite eigen | kz | haction | counts | golden | all).
    Verify(Opts),
}

#[derive(Debug, Args)]
struct Opts {
    /// Number of variables.
    #[arg(long)]
    n: Option<usize>,
    /// Weight μ as comma separated integers.
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Partition λ as comma separated integers.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Basement permutation in one-line notation.
    #[arg(long)]
    z: Option<String>,
    /// Construction route.
    #[arg(long)]
    method: Option<String>,
    /// Output format: json, latex or plain.
    #[arg(long, default_value = "json")]
    format: String,
    /// Suite for `verify`.
    #[arg(long)]
    suite: Option<String>,
    /// Variant selector for `count`, `word` and `fillings`.
    #[arg(long)]
    what: Option<String>,
    /// Largest |μ| visited by `verify`.
    #[arg(long, default_value_t = 3)]
    max_size: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Latex,
    Plain,
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }
}

fn bad<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}

impl Opts {
    fn format(&self) -> Result<Format> {
        match self.format.as_str() {
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            "plain" => Ok(Format::Plain),
            f => bad(format!("unknown format {f:?}")),
        }
    }

    fn check_n(&self, len: usize) -> Result<()> {
        match self.n {
            Some(0) => bad("--n must be at least 1"),
            Some(n) if n != len => bad(format!("--n {n} disagrees with a weight or permutation of length {len}")),
            _ => Ok(()),
        }
    }

    fn weight(&self) -> Result<Weight> {
        let raw = match (&self.mu, &self.lambda) {
            (Some(m), None) | (None, Some(m)) => m,
            (Some(_), Some(_)) => return bad("give either --mu or --lambda, not both"),
            (None, None) => return bad("a weight is required (--mu or --lambda)"),
        };
        let w = Weight::parse(raw)?;
        w.require_nonneg()?;
        self.check_n(w.n())?;
        Ok(w)
    }

    fn partition(&self) -> Result<Weight> {
        let w = self.weight()?;
        if !w.is_weakly_decreasing() {
            return bad(format!("{w} is not a partition"));
        }
        Ok(w)
    }

    fn basement(&self, n: usize) -> Result<Option<Perm>> {
        match &self.z {
            None => Ok(None),
            Some(s) => {
                let z = Perm::parse(s)?;
                if z.n() != n {
                    return bad(format!("--z has length {} but n = {n}", z.n()));
                }
                Ok(Some(z))
            }
        }
    }

    fn basement_or_identity(&self, n: usize) -> Result<Perm> {
        Ok(self.basement(n)?.unwrap_or_else(|| Perm::identity(n)))
    }

    fn no_latex(&self, verb: &str) -> Result<Format> {
        let f = self.format()?;
        if f == Format::Latex {
            return bad(format!("--format latex is not available for {verb}"));
        }
        Ok(f)
    }
}

fn emit_result(symbol: &str, r: &MacdonaldResult, format: Format, extra: Option<(&str, Value)>) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let mut doc = result_json(symbol, r);
            if let (Some((k, v)), Value::Object(m)) = (extra, &mut doc) {
                m.insert(k.into(), v);
            }
            serialize::to_string(&doc)
        }
        Format::Latex => result_latex(symbol, r)? + "\n",
        Format::Plain => poly_text(&r.poly, Style::Plain)? + "\n",
    })
}

fn rational_text(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn cmd_e(o: &Opts) -> Result<String> {
    let mu = o.weight()?;
    let r = match o.basement(mu.n())? {
        Some(z) => compute_E_rel(&mu, &z)?,
        None => compute_E(&mu)?,
    };
    emit_result("E", &r, o.format()?, None)
}

fn cmd_p(o: &Opts) -> Result<String> {
    let lambda = o.partition()?;
    let r = match o.method.as_deref().unwrap_or("sum-rel") {
        "cst" => cst_expand(&lambda)?,
        m => compute_P(&lambda, PMethod::parse(m)?)?,
    };
    emit_result("P", &r, o.format()?, None)
}

fn cmd_f(o: &Opts) -> Result<String> {
    emit_result("f", &compute_f(&o.weight()?)?, o.format()?, None)
}

fn cmd_big_f(o: &Opts) -> Result<String> {
    let mu = o.weight()?;
    let r = compute_F(&mu)?;
    let c = symmetrization_constant(&mu)?;
    emit_result("F", &r, o.format()?, Some(("c", ratfunc_json(&c))))
}

fn cmd_count(o: &Opts) -> Result<String> {
    let format = o.no_latex("count")?;
    let mu = o.weight()?;
    let what = o.what.as_deref().unwrap_or("naf");
    let value = if what == "qt" {
        let z = o.basement_or_identity(mu.n())?;
        BigRational::from_integer(enumerate_fillings(&mu, &z, FillingKind::Queue)?.len().into())
    } else {
        count(&mu, CountKind::parse(what)?)?
    };
    Ok(match format {
        Format::Json => serialize::to_string(&document(
            "count",
            json!({"mu": weight_json(&mu), "what": what, "value": rational_json(&value)}),
        )),
        _ => rational_text(&value) + "\n",
    })
}

fn cmd_word(o: &Opts) -> Result<String> {
    let format = o.no_latex("word")?;
    let mu = o.weight()?;
    let kind = o.what.as_deref().unwrap_or("box");
    let word: Word = match kind {
        "box" => box_greedy_word(&mu)?,
        "column" => column_greedy_word(&mu)?,
        k => return bad(format!("unknown word kind {k:?}")),
    };
    let ev = word_eval(&word, mu.n())?;
    Ok(match format {
        Format::Json => serialize::to_string(&document(
            "word",
            json!({
                "mu": weight_json(&mu),
                "kind": kind,
                "word": word_json(&word),
                "length": word.s_count(),
                "reduced": ev.reduced,
                "element": periodic_json(&ev.element),
            }),
        )),
        _ => word.compact() + "\n",
    })
}

fn cmd_inv(o: &Opts) -> Result<String> {
    let format = o.no_latex("inv")?;
    let mu = o.weight()?;
    let d = decompose_mu(&mu)?;
    let roots = d.u_mu.inversions();
    Ok(match format {
        Format::Json => serialize::to_string(&document(
            "inv",
            json!({
                "mu": weight_json(&mu),
                "u": periodic_json(&d.u_mu),
                "v": perm_json(&d.v_mu),
                "z": perm_json(&d.z_mu),
                "t": periodic_json(&d.t_mu),
                "lengths": {
                    "u": d.u_mu.length(),
                    "v": d.v_mu.length(),
                    "z": d.z_mu.length(),
                    "t": d.t_mu.length(),
                },
                "inversions": roots.iter().map(root_json).collect::<Vec<_>>(),
            }),
        )),
        _ => {
            let mut s = format!(
                "u = {} (length {})\nv = {} (length {})\nz = {} (length {})\nt = {} (length {})\n",
                d.u_mu,
                d.u_mu.length(),
                d.v_mu,
                d.v_mu.length(),
                d.z_mu,
                d.z_mu.length(),
                d.t_mu,
                d.t_mu.length()
            );
            for r in &roots {
                s.push_str(&format!("{r}\n"));
            }
            s
        }
    })
}

fn cmd_fillings(o: &Opts) -> Result<String> {
    let format = o.no_latex("fillings")?;
    let mu = o.weight()?;
    let z = o.basement_or_identity(mu.n())?;
    let kind = FillingKind::parse(o.what.as_deref().unwrap_or("nonattacking"))?;
    let all = enumerate_fillings(&mu, &z, kind)?;
    Ok(match format {
        Format::Json => {
            let items = all
                .iter()
                .map(|t| -> Result<Value> {
                    let mut v = filling_json(t);
                    if let Value::Object(m) = &mut v {
                        m.insert("word".into(), json!(t.word()));
                        m.insert("endpoint".into(), weight_json(&t.endpoint()));
                        m.insert("pipedream".into(), pipedream_json(&pipedream_convert(t)?));
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<_>>>()?;
            serialize::to_string(&document(
                "fillings",
                json!({"mu": weight_json(&mu), "z": perm_json(&z), "count": all.len(), "fillings": items}),
            ))
        }
        _ => {
            let mut s = format!("{} fillings\n", all.len());
            for t in &all {
                let rows: Vec<String> = t.rows.iter().map(|r| format!("{r:?}")).collect();
                s.push_str(&format!("{}  word {:?}\n", rows.join(" "), t.word()));
            }
            s
        }
    })
}

fn cmd_walks(o: &Opts) -> Result<String> {
    let format = o.no_latex("walks")?;
    let mu = o.weight()?;
    let z = o.basement_or_identity(mu.n())?;
    let walks = enumerate_walks(&mu, &z)?;
    Ok(match format {
        Format::Json => {
            let items: Vec<Value> = walks
                .iter()
                .map(|w| {
                    json!({
                        "shorthand": w.shorthand(),
                        "folds": w.folds(),
                        "end": periodic_json(w.states.last().expect("walks start somewhere")),
                        "path": path_json(&walk_geometry(w)),
                    })
                })
                .collect();
            serialize::to_string(&document(
                "walks",
                json!({"mu": weight_json(&mu), "z": perm_json(&z), "count": walks.len(), "walks": items}),
            ))
        }
        _ => {
            let mut s = format!("{} walks\n", walks.len());
            for w in &walks {
                s.push_str(&w.shorthand());
                s.push('\n');
            }
            s
        }
    })
}

fn cmd_cst(o: &Opts) -> Result<String> {
    emit_result("P", &cst_expand(&o.partition()?)?, o.format()?, None)
}

fn cmd_verify(o: &Opts) -> Result<Outcome> {
    let format = o.no_latex("verify")?;
    let suite = Suite::parse(o.suite.as_deref().unwrap_or("all"))?;
    if o.n == Some(0) {
        return bad("--n must be at least 1");
    }
    if o.max_size < 0 {
        return bad("--max-size must be nonnegative");
    }
    let reports: Vec<Report> = run_suite(suite, o.n, o.max_size)?;
    let pass = reports.iter().all(Report::all_passed);
    let mut stderr = String::new();
    for r in &reports {
        for e in r.failures() {
            stderr.push_str(&format!("FAIL [{}] {}", r.title, e.name));
            if let Some(d) = &e.difference {
                stderr.push_str(&format!("  difference: {d}"));
            }
            stderr.push('\n');
        }
    }
    let stdout = match format {
        Format::Json => serialize::to_string(&document(
            "verify",
            json!({"pass": pass, "suites": reports.iter().map(report_json).collect::<Vec<_>>()}),
        )),
        _ => {
            let mut s = String::new();
            for r in &reports {
                let total = r.entries.len();
                let good = r.entries.iter().filter(|e| e.pass).count();
                s.push_str(&format!("{}: {good}/{total} passed\n", r.title));
            }
            s
        }
    };
    Ok(Outcome { code: if pass { 0 } else { 1 }, stdout, stderr })
}

fn dispatch(verb: &Verb) -> Result<Outcome> {
    let out = match verb {
        Verb::E(o) => cmd_e(o),
        Verb::P(o) => cmd_p(o),
        Verb::SmallF(o) => cmd_f(o),
        Verb::BigF(o) => cmd_big_f(o),
        Verb::Count(o) => cmd_count(o),
        Verb::Word(o) => cmd_word(o),
        Verb::Inv(o) => cmd_inv(o),
        Verb::Fillings(o) => cmd_fillings(o),
        Verb::Walks(o) => cmd_walks(o),
        Verb::Cst(o) => cmd_cst(o),
        Verb::Verify(o) => return cmd_verify(o),
    };
    out.map(Outcome::ok)
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(&cli.verb) {
        Ok(o) => o,
        Err(e) => {
            let code = match e {
                Error::InvalidInput(_) => 2,
                _ => 1,
            };
            Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

/// Caps the global thread pool at `MACLAB_THREADS` when it is set.
pub fn configure_threads() -> std::result::Result<(), String> {
    let Ok(raw) = std::env::var("MACLAB_THREADS") else {
        return Ok(());
    };
    let k: usize = raw.trim().parse().map_err(|_| format!("MACLAB_THREADS must be a positive integer, got {raw:?}"))?;
    if k == 0 {
        return Err("MACLAB_THREADS must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(k).build_global().map_err(|e| e.to_string())
}
