//! Reduced fractions in `Q(q, v)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gcd::gcd;
use super::intpoly::{IntPoly2, Mono};
use crate::error::{Error, Result};

/// An element of `Q(q, v)` with `v^2 = t`.
///
/// Canonical form: `gcd(num, den) = 1` over `Q`, the joint integer content of
/// numerator and denominator is 1, and the leading coefficient of `den`
/// (q-degree first, then v-degree) is positive. Equal values therefore have
/// identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly2,
    den: IntPoly2,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: IntPoly2::zero(), den: IntPoly2::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: IntPoly2::one(), den: IntPoly2::one() }
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc { num: IntPoly2::from_i64(c), den: IntPoly2::one() }
    }

    pub fn from_bigint(c: BigInt) -> Self {
        RatFunc { num: IntPoly2::constant(c), den: IntPoly2::one() }
    }

    /// A polynomial viewed as a fraction with denominator 1.
    pub fn from_poly(p: IntPoly2) -> Self {
        Self::normalize_content(p, IntPoly2::one())
    }

    /// `q^a v^b` for arbitrary integer exponents.
    pub fn qv(a: i64, b: i64) -> Self {
        let num = Mono::new(a.max(0) as u32, b.max(0) as u32);
        let den = Mono::new((-a).max(0) as u32, (-b).max(0) as u32);
        RatFunc { num: IntPoly2::monomial(num, BigInt::one()), den: IntPoly2::monomial(den, BigInt::one()) }
    }

    /// `q^a t^b = q^a v^(2b)`.
    pub fn qt(a: i64, b: i64) -> Self {
        Self::qv(a, 2 * b)
    }

    pub fn q() -> Self {
        Self::qv(1, 0)
    }

    pub fn t() -> Self {
        Self::qv(0, 2)
    }

    pub fn v() -> Self {
        Self::qv(0, 1)
    }

    /// The canonical representative of `num / den`.
    pub fn new(num: IntPoly2, den: IntPoly2) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if den.is_constant() || num.is_one() {
            return Ok(Self::normalize_content(num, den));
        }
        let g = gcd(&num, &den);
        if g.is_constant() {
            return Ok(Self::normalize_content(num, den));
        }
        let n = num.div_exact(&g).expect("gcd divides numerator");
        let d = den.div_exact(&g).expect("gcd divides denominator");
        Ok(Self::normalize_content(n, d))
    }

    /// Fixes integer content and sign of already coprime parts.
    fn normalize_content(num: IntPoly2, den: IntPoly2) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let mut c = num.int_content().gcd(&den.int_content());
        if den.leading_is_negative() {
            c = -c;
        }
        if c.is_one() {
            return RatFunc { num, den };
        }
        RatFunc { num: num.div_int_exact(&c), den: den.div_int_exact(&c) }
    }

    pub fn num(&self) -> &IntPoly2 {
        &self.num
    }

    pub fn den(&self) -> &IntPoly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when both parts involve only even powers of `v`, i.e. the value
    /// lies in `Q(q, t)`.
    pub fn is_even_in_v(&self) -> bool {
        self.num.is_even_in_v() && self.den.is_even_in_v()
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let num = self.num.add(&o.num);
            return if self.den.is_one() {
                Self::normalize_content(num, self.den.clone())
            } else {
                Self::new(num, self.den.clone()).expect("nonzero denominator")
            };
        }
        if self.den.is_one() {
            let num = self.num.mul(&o.den).add(&o.num);
            return Self::normalize_content(num, o.den.clone());
        }
        if o.den.is_one() {
            let num = o.num.mul(&self.den).add(&self.num);
            return Self::normalize_content(num, self.den.clone());
        }
        let g = gcd(&self.den, &o.den);
        if g.is_constant() {
            let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            return Self::normalize_content(num, self.den.mul(&o.den));
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = o.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d1).add(&o.num.mul(&b1));
        if num.is_zero() {
            return Self::zero();
        }
        let h = gcd(&num, &g);
        if h.is_constant() {
            return Self::normalize_content(num, b1.mul(&d1).mul(&g));
        }
        let num = num.div_exact(&h).expect("gcd divides");
        let g2 = g.div_exact(&h).expect("gcd divides");
        Self::normalize_content(num, b1.mul(&d1).mul(&g2))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let (a, b1) = cancel(&self.num, &o.den);
        let (c, d1) = cancel(&o.num, &self.den);
        Self::normalize_content(a.mul(&c), d1.mul(&b1))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Arithmetic("division by zero".into()));
        }
        Ok(Self::normalize_content(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Exact evaluation at `q = q0`, `v = v0`.
    pub fn eval(&self, q0: &BigRational, v0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0, v0);
        if d.is_zero() {
            return Err(Error::Evaluation(format!("pole at q={q0}, v={v0}")));
        }
        Ok(self.num.eval(q0, v0) / d)
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }
}

/// Removes the gcd of `a` and `b` from both.
fn cancel(a: &IntPoly2, b: &IntPoly2) -> (IntPoly2, IntPoly2) {
    if b.is_one() || a.is_one() {
        return (a.clone(), b.clone());
    }
    if b.is_constant() || a.is_constant() {
        let g = a.int_content().gcd(&b.int_content());
        return (a.div_int_exact(&g), b.div_int_exact(&g));
    }
    let g = gcd(a, b);
    if g.is_one() {
        return (a.clone(), b.clone());
    }
    (a.div_exact(&g).expect("gcd divides"), b.div_exact(&g).expect("gcd divides"))
}

/// Field operation selector for [`rf_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Canonical representative of `num / den`.
pub fn rf_normalize(num: IntPoly2, den: IntPoly2) -> Result<RatFunc> {
    RatFunc::new(num, den)
}

/// Field arithmetic with a canonical result.
pub fn rf_arith(a: &RatFunc, b: &RatFunc, op: ArithOp) -> Result<RatFunc> {
    match op {
        ArithOp::Add => Ok(a.add(b)),
        ArithOp::Sub => Ok(a.sub(b)),
        ArithOp::Mul => Ok(a.mul(b)),
        ArithOp::Div => a.div(b),
    }
}

/// Exact evaluation at a rational point.
pub fn rf_eval(a: &RatFunc, q0: &BigRational, v0: &BigRational) -> Result<BigRational> {
    a.eval(q0, v0)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

/// `(1 - c q^a t^b)` for a small integer `c`, as a polynomial when `b >= 0`.
pub fn one_minus_qt(c: i64, a: u32, b: u32) -> IntPoly2 {
    IntPoly2::from_small(&[(0, 0, 1), (a, 2 * b, -c)])
}

/// Convenience: `(1 - q^a t^b)` as a [`RatFunc`] for any integer exponents.
pub fn one_minus(a: i64, b: i64) -> RatFunc {
    RatFunc::one().sub(&RatFunc::qt(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms_coincide() {
        let a = RatFunc::new(IntPoly2::from_small(&[(0, 0, 2), (0, 2, -2)]), IntPoly2::from_small(&[(0, 0, -4)]))
            .unwrap();
        let b = RatFunc::new(IntPoly2::from_small(&[(0, 2, 1), (0, 0, -1)]), IntPoly2::from_small(&[(0, 0, 2)]))
            .unwrap();
        assert_eq!(a, b);
        assert!(b.den().leading().unwrap().1.sign() == num_bigint::Sign::Plus);
    }

    #[test]
    fn add_with_shared_factor() {
        let x = RatFunc::new(IntPoly2::one(), one_minus_qt(1, 1, 1)).unwrap();
        let y = RatFunc::new(IntPoly2::qv(1, 2), one_minus_qt(1, 1, 1)).unwrap();
        assert!(x.sub(&y).is_one());
    }
}
