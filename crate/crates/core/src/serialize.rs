//! JSON documents and text renderings of results.
//!
//! Every JSON document carries `"schema": "macdonald-lab/1"`. Objects are
//! built with sorted keys, so equal inputs serialize to identical bytes.
//! Coefficients are written as numerator and denominator arrays of
//! `{"q": a, "v": b, "c": "<decimal>"}` terms with `t = v^2`.
//!
//! The `t` renderings require every `v`-exponent to be even and fail
//! otherwise.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde_json::{json, Map, Value};

use crate::affine_weyl::{AffineRoot, PeriodicPerm, Perm, Word};
use crate::coeff_field::{IntPoly2, Mono, RatFunc};
use crate::diagrams::{Filling, PathRealization, PipeDream};
use crate::error::{invalid, Result};
use crate::laurent::{LaurentPoly, Weight};
use crate::macdonald::{MacdonaldResult, Report};

pub const SCHEMA: &str = "macdonald-lab/1";

/// Wraps `body` into a document with the schema tag and an object name.
pub fn document(object: &str, body: Value) -> Value {
    let mut m = match body {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    };
    m.insert("schema".into(), Value::String(SCHEMA.into()));
    m.insert("object".into(), Value::String(object.into()));
    Value::Object(m)
}

/// Pretty JSON with a trailing newline.
pub fn to_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn intpoly_json(p: &IntPoly2) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|(m, c)| json!({"q": m.q, "v": m.v, "c": c.to_string()}))
            .collect(),
    )
}

pub fn ratfunc_json(r: &RatFunc) -> Value {
    json!({"num": intpoly_json(r.num()), "den": intpoly_json(r.den())})
}

pub fn weight_json(w: &Weight) -> Value {
    json!(w.entries())
}

pub fn perm_json(p: &Perm) -> Value {
    json!(p.one_line())
}

pub fn rational_json(r: &BigRational) -> Value {
    Value::String(if r.is_integer() { r.numer().to_string() } else { format!("{}/{}", r.numer(), r.denom()) })
}

/// `{"n": n, "terms": [{"x": exponents, "coeff": {...}}]}`, highest term
/// first.
pub fn poly_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> =
        p.terms().rev().map(|(e, c)| json!({"x": e, "coeff": ratfunc_json(c)})).collect();
    json!({"n": p.n(), "terms": terms})
}

fn intpoly_from_json(v: &Value) -> Result<IntPoly2> {
    let arr = v.as_array().ok_or_else(|| crate::Error::InvalidInput("expected an array".into()))?;
    let mut terms = Vec::new();
    for t in arr {
        let get = |k: &str| t.get(k).and_then(Value::as_u64).map(|x| x as u32);
        let (q, vv) = match (get("q"), get("v")) {
            (Some(q), Some(vv)) => (q, vv),
            _ => return invalid("term needs integer q and v"),
        };
        let c: BigInt = match t.get("c").and_then(Value::as_str).map(str::parse) {
            Some(Ok(c)) => c,
            _ => return invalid("term needs a decimal string c"),
        };
        terms.push((Mono::new(q, vv), c));
    }
    Ok(IntPoly2::from_terms(terms))
}

pub fn ratfunc_from_json(v: &Value) -> Result<RatFunc> {
    match (v.get("num"), v.get("den")) {
        (Some(a), Some(b)) => RatFunc::new(intpoly_from_json(a)?, intpoly_from_json(b)?),
        _ => invalid("coefficient needs num and den"),
    }
}

/// Inverse of [`poly_json`]; accepts a whole result document as well.
pub fn poly_from_json(v: &Value) -> Result<LaurentPoly> {
    let v = v.get("poly").unwrap_or(v);
    let n = match v.get("n").and_then(Value::as_u64) {
        Some(n) => n as usize,
        None => return invalid("polynomial needs n"),
    };
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| crate::Error::InvalidInput("polynomial needs terms".into()))?;
    let mut out = Vec::new();
    for t in terms {
        let e: Vec<i64> = match t.get("x").and_then(Value::as_array) {
            Some(a) => a.iter().map(|x| x.as_i64().unwrap_or(i64::MIN)).collect(),
            None => return invalid("term needs x"),
        };
        if e.len() != n || e.contains(&i64::MIN) {
            return invalid("bad exponent vector");
        }
        let c = ratfunc_from_json(t.get("coeff").unwrap_or(&Value::Null))?;
        out.push((e, c));
    }
    Ok(LaurentPoly::from_terms(n, out))
}

/// A result document for `E`, `f`, `F` or `P`.
pub fn result_json(object: &str, r: &MacdonaldResult) -> Value {
    document(
        object,
        json!({
            "mu": weight_json(&r.mu),
            "z": r.z.as_ref().map(perm_json),
            "route": r.route.tag(),
            "poly": poly_json(&r.poly),
        }),
    )
}

pub fn filling_json(t: &Filling) -> Value {
    let mut boxes = Vec::new();
    for (i, row) in t.rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            boxes.push(json!({"i": i + 1, "j": j + 1, "v": v}));
        }
    }
    json!({"mu": weight_json(&t.mu), "z": perm_json(&t.z), "boxes": boxes})
}

pub fn pipedream_json(p: &PipeDream) -> Value {
    json!(p.entries)
}

pub fn root_json(r: &AffineRoot) -> Value {
    json!({"i": r.i, "j": r.j, "level": r.level})
}

pub fn path_json(p: &PathRealization) -> Value {
    let segs: Vec<Value> = p
        .segments
        .iter()
        .map(|s| {
            json!({
                "kind": s.kind.tag(),
                "dir": s.dir.iter().map(rational_json).collect::<Vec<_>>(),
                "root": s.root.as_ref().map(root_json),
            })
        })
        .collect();
    json!({
        "rho": p.rho.iter().map(rational_json).collect::<Vec<_>>(),
        "segments": segs,
        "endpoint": p.endpoint.iter().map(rational_json).collect::<Vec<_>>(),
    })
}

pub fn periodic_json(p: &PeriodicPerm) -> Value {
    json!(p.window())
}

pub fn word_json(w: &Word) -> Value {
    json!(w.tags())
}

pub fn report_json(r: &Report) -> Value {
    let entries: Vec<Value> = r
        .entries
        .iter()
        .map(|e| json!({"name": e.name, "pass": e.pass, "difference": e.difference}))
        .collect();
    json!({"title": r.title, "pass": r.all_passed(), "entries": entries})
}

/// Output dialect for the `t` renderings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Plain,
    Latex,
}

fn require_even(p: &IntPoly2) -> Result<()> {
    if p.is_even_in_v() {
        Ok(())
    } else {
        invalid(format!("{p} has an odd power of v and has no rendering in t"))
    }
}

/// Terms of a polynomial in `q, t`, lowest first, with an explicit sign
/// before each magnitude.
fn qt_terms(p: &IntPoly2, style: Style) -> Vec<(bool, String)> {
    p.terms()
        .iter()
        .map(|(m, c)| {
            let a = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !a.is_one() || *m == Mono::ONE {
                parts.push(a.to_string());
            }
            for (name, e) in [("q", m.q), ("t", m.v / 2)] {
                match (e, style) {
                    (0, _) => {}
                    (1, _) => parts.push(name.to_string()),
                    (_, Style::Plain) => parts.push(format!("{name}^{e}")),
                    (_, Style::Latex) => parts.push(format!("{name}^{{{e}}}")),
                }
            }
            let sep = if style == Style::Plain { "*" } else { " " };
            (c.is_negative(), parts.join(sep))
        })
        .collect()
}

fn join_terms(terms: &[(bool, String)]) -> String {
    let mut s = String::new();
    for (k, (neg, body)) in terms.iter().enumerate() {
        match (k, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        s.push_str(body);
    }
    s
}

/// A coefficient as `(negative, magnitude, is_atomic)`; the magnitude is
/// atomic when it can be written next to a monomial without parentheses.
fn coeff_parts(r: &RatFunc, style: Style) -> Result<(bool, String, bool)> {
    require_even(r.num())?;
    require_even(r.den())?;
    let (mut num, mut den) = (r.num().clone(), r.den().clone());
    if den.terms().first().is_some_and(|t| t.1.is_negative()) {
        num = num.neg();
        den = den.neg();
    }
    let neg = num.terms().first().is_some_and(|t| t.1.is_negative());
    if neg {
        num = num.neg();
    }
    let n = qt_terms(&num, style);
    let ns = join_terms(&n);
    if den.is_one() {
        return Ok((neg, ns, n.len() == 1));
    }
    let ds = join_terms(&qt_terms(&den, style));
    Ok(match style {
        Style::Latex => (neg, format!("\\frac{{{ns}}}{{{ds}}}"), true),
        Style::Plain => {
            let wrap = |s: String, k: usize| if k == 1 { s } else { format!("({s})") };
            let dl = den.len();
            (neg, format!("{}/{}", wrap(ns, n.len()), wrap(ds, dl)), true)
        }
    })
}

/// An element of `Q(q, t)` as text.
pub fn coeff_text(r: &RatFunc, style: Style) -> Result<String> {
    if r.is_zero() {
        return Ok("0".into());
    }
    let (neg, body, _) = coeff_parts(r, style)?;
    Ok(if neg { format!("-{body}") } else { body })
}

fn monomial_text(e: &[i64], style: Style) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &a)| a != 0)
        .map(|(i, &a)| match (style, a) {
            (Style::Plain, 1) => format!("x{}", i + 1),
            (Style::Plain, _) => format!("x{}^{}", i + 1, a),
            (Style::Latex, 1) => format!("x_{{{}}}", i + 1),
            (Style::Latex, _) => format!("x_{{{}}}^{{{}}}", i + 1, a),
        })
        .collect();
    parts.join(if style == Style::Plain { "*" } else { " " })
}

/// A polynomial with coefficients rendered in `q, t`, highest term first.
pub fn poly_text(p: &LaurentPoly, style: Style) -> Result<String> {
    if p.is_zero() {
        return Ok("0".into());
    }
    let mut s = String::new();
    for (k, (e, c)) in p.terms().rev().enumerate() {
        let (neg, body, atomic) = coeff_parts(c, style)?;
        let mono = monomial_text(e, style);
        match (k, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        let is_one = body == "1";
        let term = match (mono.is_empty(), is_one, atomic, style) {
            (true, _, _, _) => body,
            (false, true, _, _) => mono,
            (false, false, true, Style::Plain) => format!("{body}*{mono}"),
            (false, false, false, Style::Plain) => format!("({body})*{mono}"),
            (false, false, true, Style::Latex) => format!("{body} {mono}"),
            (false, false, false, Style::Latex) => format!("\\left({body}\\right) {mono}"),
        };
        s.push_str(&term);
    }
    Ok(s)
}

/// `E_{(2,1,0)} = …` as a LaTeX line.
pub fn result_latex(symbol: &str, r: &MacdonaldResult) -> Result<String> {
    let idx: Vec<String> = r.mu.entries().iter().map(|x| x.to_string()).collect();
    let sup = match &r.z {
        Some(z) => {
            let w: Vec<String> = z.one_line().iter().map(|x| x.to_string()).collect();
            format!("^{{({})}}", w.join(""))
        }
        None => String::new(),
    };
    Ok(format!("{symbol}_{{({})}}{sup} = {}", idx.join(","), poly_text(&r.poly, Style::Latex)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;

    #[test]
    fn json_round_trip() {
        let p = parse_poly(3, "x1^2*x2 + q*(1-t)/(1-q*t^2)*x1*x2*x3 - 3*t^(1/2)*x3").unwrap();
        assert_eq!(poly_from_json(&poly_json(&p)).unwrap(), p);
    }

    #[test]
    fn t_rendering() {
        let p = parse_poly(3, "x1^2*x2 + q*(1-t)/(1-q*t^2)*x1*x2*x3").unwrap();
        assert_eq!(poly_text(&p, Style::Plain).unwrap(), "x1^2*x2 + (q - q*t)/(1 - q*t^2)*x1*x2*x3");
        assert_eq!(
            poly_text(&p, Style::Latex).unwrap(),
            "x_{1}^{2} x_{2} + \\frac{q - q t}{1 - q t^{2}} x_{1} x_{2} x_{3}"
        );
        let odd = parse_poly(1, "v*x1").unwrap();
        assert!(poly_text(&odd, Style::Latex).is_err());
        let neg = parse_poly(2, "-(1-t)/(1-q)*x1 - x2").unwrap();
        assert_eq!(poly_text(&neg, Style::Plain).unwrap(), "-(1 - t)/(1 - q)*x1 - x2");
    }
}
