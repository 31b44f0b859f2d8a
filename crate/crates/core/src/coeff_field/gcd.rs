//! Greatest common divisors in `Z[q, v]`.
//!
//! The bivariate gcd strips monomial and integer content, compresses
//! exponent lattices (so polynomials in `v^2` are handled in `t = v^2`), and
//! then runs a primitive pseudo-remainder sequence in `Z[x][y]`, where `y` is
//! the variable of smaller degree. Coefficients in `Z[x]` use the same
//! scheme one level down.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::intpoly::{IntPoly2, Mono};

/// Dense univariate polynomial over `Z`, index = degree, no trailing zeros.
type UPoly = Vec<BigInt>;

fn u_trim(p: &mut UPoly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn u_content(p: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_div_int(p: &UPoly, k: &BigInt) -> UPoly {
    if k.is_one() {
        return p.clone();
    }
    p.iter().map(|c| c / k).collect()
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(&mut out);
    out
}

fn u_sub_shifted(a: &mut UPoly, b: &UPoly, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] -= y;
    }
    u_trim(a);
}

/// Exact division in `Z[x]`; `None` if not exact.
fn u_div_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    while r.len() >= b.len() {
        let (c, rem) = r.last().unwrap().div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = r.len() - b.len();
        let scaled: UPoly = b.iter().map(|y| y * &c).collect();
        q[shift] = c;
        let before = r.len();
        u_sub_shifted(&mut r, &scaled, shift);
        debug_assert!(r.len() < before);
    }
    if !r.is_empty() {
        return None;
    }
    u_trim(&mut q);
    Some(q)
}

/// Primitive part with positive leading coefficient.
fn u_primitive(p: &UPoly) -> UPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut c = u_content(p);
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    u_div_int(p, &c)
}

fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        let scaled: UPoly = b.iter().map(|y| y * &lr).collect();
        u_sub_shifted(&mut r, &scaled, shift);
    }
    r
}

/// Gcd in `Z[x]`, normalized to positive leading coefficient.
fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_primitive_keep_content(b);
    }
    if b.is_empty() {
        return u_primitive_keep_content(a);
    }
    let ca = u_content(a);
    let cb = u_content(b);
    let cg = ca.gcd(&cb);
    let (mut x, mut y) = (u_primitive(a), u_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    if y.len() == 1 {
        return vec![cg];
    }
    if let Some(_) = u_div_exact(&x, &y) {
        return y.iter().map(|c| c * &cg).collect();
    }
    loop {
        let r = u_prem(&x, &y);
        if r.is_empty() {
            return y.iter().map(|c| c * &cg).collect();
        }
        if r.len() == 1 {
            return vec![cg];
        }
        x = y;
        y = u_primitive(&r);
    }
}

fn u_primitive_keep_content(p: &UPoly) -> UPoly {
    if p.last().map_or(false, |c| c.is_negative()) {
        p.iter().map(|c| -c).collect()
    } else {
        p.clone()
    }
}

/// Polynomial in `y` with coefficients in `Z[x]`.
type BPoly = Vec<UPoly>;

fn b_trim(p: &mut BPoly) {
    while p.last().map_or(false, |c| c.is_empty()) {
        p.pop();
    }
}

/// Converts to `Z[x][y]`; `y_is_q` selects which parameter is the main variable.
fn to_bpoly(p: &IntPoly2, y_is_q: bool) -> BPoly {
    let (dy, dx) = if y_is_q { (p.deg_q(), p.deg_v()) } else { (p.deg_v(), p.deg_q()) };
    let mut out: BPoly = vec![vec![BigInt::zero(); dx as usize + 1]; dy as usize + 1];
    for (m, c) in p.terms() {
        let (y, x) = if y_is_q { (m.q, m.v) } else { (m.v, m.q) };
        out[y as usize][x as usize] = c.clone();
    }
    for row in out.iter_mut() {
        u_trim(row);
    }
    b_trim(&mut out);
    out
}

fn from_bpoly(p: &BPoly, y_is_q: bool) -> IntPoly2 {
    let mut terms = Vec::new();
    for (y, row) in p.iter().enumerate() {
        for (x, c) in row.iter().enumerate() {
            if !c.is_zero() {
                let m = if y_is_q { Mono::new(y as u32, x as u32) } else { Mono::new(x as u32, y as u32) };
                terms.push((m, c.clone()));
            }
        }
    }
    IntPoly2::from_terms(terms)
}

fn b_content(p: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        if c.is_empty() {
            continue;
        }
        g = if g.is_empty() { u_primitive_keep_content(c) } else { u_gcd(&g, c) };
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_div_coeff(p: &BPoly, c: &UPoly) -> BPoly {
    if c.len() == 1 && c[0].is_one() {
        return p.clone();
    }
    p.iter()
        .map(|row| if row.is_empty() { Vec::new() } else { u_div_exact(row, c).expect("content divides") })
        .collect()
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c = u_mul(c, &lb);
        }
        for (j, y) in b.iter().enumerate() {
            let t = u_mul(y, &lr);
            let slot = &mut r[j + shift];
            if slot.len() < t.len() {
                slot.resize(t.len(), BigInt::zero());
            }
            for (k, c) in t.into_iter().enumerate() {
                slot[k] -= c;
            }
            u_trim(slot);
        }
        b_trim(&mut r);
    }
    r
}

/// Primitive part in `y` (content in `Z[x]` removed), and the content.
fn b_primitive(p: &BPoly) -> (BPoly, UPoly) {
    let c = b_content(p);
    let mut pp = b_div_coeff(p, &c);
    let lc = pp.last().unwrap();
    if lc.last().unwrap().is_negative() {
        for row in pp.iter_mut() {
            for c in row.iter_mut() {
                *c = -&*c;
            }
        }
    }
    (pp, c)
}

fn b_scale(p: &BPoly, c: &UPoly) -> BPoly {
    p.iter().map(|row| u_mul(row, c)).collect()
}

/// Gcd of two polynomials with no monomial or integer content and at least
/// one nonconstant.
fn core_gcd(a: &IntPoly2, b: &IntPoly2) -> IntPoly2 {
    let y_is_q = a.deg_q().max(b.deg_q()) <= a.deg_v().max(b.deg_v());
    let (pa, ca) = b_primitive(&to_bpoly(a, y_is_q));
    let (pb, cb) = b_primitive(&to_bpoly(b, y_is_q));
    let cg = u_gcd(&ca, &cb);
    let (mut x, mut y) = if pa.len() >= pb.len() { (pa, pb) } else { (pb, pa) };
    let g = if y.len() == 1 {
        vec![vec![BigInt::one()]]
    } else {
        loop {
            let r = b_prem(&x, &y);
            if r.is_empty() {
                break y;
            }
            if r.len() == 1 {
                break vec![vec![BigInt::one()]];
            }
            x = y;
            y = b_primitive(&r).0;
        }
    };
    from_bpoly(&b_scale(&g, &cg), y_is_q)
}

fn exponent_step(p: &IntPoly2, base: Mono) -> (u32, u32) {
    let (mut gq, mut gv) = (0u32, 0u32);
    for (m, _) in p.terms() {
        gq = gq.gcd(&(m.q - base.q));
        gv = gv.gcd(&(m.v - base.v));
    }
    (gq, gv)
}

/// Gcd over `Z[q, v]`: primitive over `Q` times the gcd of integer contents,
/// with positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &IntPoly2, b: &IntPoly2) -> IntPoly2 {
    if a.is_zero() {
        return if b.leading_is_negative() { b.neg() } else { b.clone() };
    }
    if b.is_zero() {
        return if a.leading_is_negative() { a.neg() } else { a.clone() };
    }
    let ma = a.min_mono();
    let mb = b.min_mono();
    let mono = Mono::new(ma.q.min(mb.q), ma.v.min(mb.v));
    let ia = a.int_content();
    let ib = b.int_content();
    let ig = ia.gcd(&ib);
    let outer = IntPoly2::monomial(mono, ig);
    if a.is_monomial() || b.is_monomial() {
        return outer;
    }
    let a1 = a.div_mono(ma).div_int_exact(&ia);
    let b1 = b.div_mono(mb).div_int_exact(&ib);
    if a1 == b1 || a1 == b1.neg() {
        let g = if a1.leading_is_negative() { a1.neg() } else { a1 };
        return g.mul(&outer);
    }
    let (sa, ta) = exponent_step(&a1, Mono::ONE);
    let (sb, tb) = exponent_step(&b1, Mono::ONE);
    let kq = sa.gcd(&sb).max(1);
    let kv = ta.gcd(&tb).max(1);
    let a2 = a1.deflate(kq, kv);
    let b2 = b1.deflate(kq, kv);
    let g = trial_or_prs(&a2, &b2);
    let g = if g.leading_is_negative() { g.neg() } else { g };
    g.inflate(kq, kv).mul(&outer)
}

fn trial_or_prs(a: &IntPoly2, b: &IntPoly2) -> IntPoly2 {
    let (big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if big.div_exact(small).is_some() {
        return small.clone();
    }
    core_gcd(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: &[(u32, u32, i64)]) -> IntPoly2 {
        IntPoly2::from_small(t)
    }

    #[test]
    fn gcd_of_products() {
        let f = p(&[(0, 0, 1), (1, 2, -1)]);
        let g = p(&[(0, 0, 1), (0, 2, -1)]);
        let h = p(&[(2, 1, 3), (0, 3, 1), (0, 0, -2)]);
        let a = f.mul(&g).mul(&h);
        let b = f.mul(&h).mul(&p(&[(1, 0, 1), (0, 1, 1)]));
        let expect = f.mul(&h);
        let expect = if expect.leading_is_negative() { expect.neg() } else { expect };
        assert_eq!(gcd(&a, &b), expect);
    }

    #[test]
    fn coprime_is_one() {
        let a = p(&[(0, 0, 1), (1, 2, -1)]);
        let b = p(&[(0, 0, 1), (1, 4, -1), (1, 0, 3)]);
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn even_v_compression() {
        let f = p(&[(0, 0, 1), (0, 2, -1)]);
        let a = f.mul(&p(&[(0, 0, 1), (1, 2, 1)]));
        let b = f.mul(&p(&[(0, 0, 1), (0, 4, 1)]));
        assert_eq!(gcd(&a, &b), f.neg());
    }

    #[test]
    fn integer_content() {
        let a = p(&[(0, 0, 6), (1, 0, 6)]);
        let b = p(&[(0, 0, 4), (1, 0, 4), (0, 1, 0)]);
        assert_eq!(gcd(&a, &b), p(&[(0, 0, 2), (1, 0, 2)]));
    }
}
