//! Field arithmetic in `Q(q, v)` against evaluation at rational points.

use macdonald_lab::RatFunc;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_ratfunc(rng: &mut ChaCha8Rng) -> RatFunc {
    let mut num = RatFunc::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let c = RatFunc::from_int(rng.gen_range(-4..=4));
        num = num.add(&c.mul(&RatFunc::qv(rng.gen_range(-1..=2), rng.gen_range(-2..=3))));
    }
    let den = RatFunc::one().sub(&RatFunc::qv(rng.gen_range(0..=2), rng.gen_range(1..=3)));
    num.div(&den).expect("denominator is not zero")
}

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn arithmetic_commutes_with_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let points = [(r(2, 3), r(5, 7)), (r(-3, 2), r(7, 5)), (r(11, 4), r(-2, 9))];
    for _ in 0..200 {
        let a = random_ratfunc(&mut rng);
        let b = random_ratfunc(&mut rng);
        for (q0, v0) in &points {
            let ea = a.eval(q0, v0).unwrap();
            let eb = b.eval(q0, v0).unwrap();
            assert_eq!(a.add(&b).eval(q0, v0).unwrap(), &ea + &eb);
            assert_eq!(a.mul(&b).eval(q0, v0).unwrap(), &ea * &eb);
            if !b.is_zero() && eb != r(0, 1) {
                assert_eq!(a.div(&b).unwrap().eval(q0, v0).unwrap(), &ea / &eb);
            }
        }
    }
}

#[test]
fn field_identities_hold_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let a = random_ratfunc(&mut rng);
        let b = random_ratfunc(&mut rng);
        let c = random_ratfunc(&mut rng);
        assert_eq!(a.add(&b).sub(&b), a);
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        if !b.is_zero() {
            assert_eq!(a.mul(&b).div(&b).unwrap(), a);
            assert!(b.mul(&b.inv().unwrap()).is_one());
        }
    }
}

#[test]
fn equal_values_have_equal_representations() {
    let one = RatFunc::one();
    let t = RatFunc::t();
    let geometric = one.sub(&t.pow(3).unwrap()).div(&one.sub(&t)).unwrap();
    let expanded = one.add(&t).add(&t.mul(&t));
    assert_eq!(geometric, expanded);
    assert!(geometric.is_polynomial());
    assert_eq!(RatFunc::v().mul(&RatFunc::v()), t);
    assert_eq!(RatFunc::qt(2, -1), RatFunc::qv(2, -2));
}

#[test]
fn division_by_zero_is_an_error() {
    assert!(RatFunc::one().div(&RatFunc::zero()).is_err());
    assert!(RatFunc::zero().inv().is_err());
}

#[test]
fn evaluation_at_a_pole_is_an_error() {
    let f = RatFunc::one().div(&RatFunc::one().sub(&RatFunc::q())).unwrap();
    assert!(f.eval(&r(1, 1), &r(3, 1)).is_err());
}
