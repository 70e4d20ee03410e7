use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::pair::PowerSumPair;
use crate::rational::Rational;
use crate::ring::{power_sum, Ring};

/// `1³ + 2³ + 4³ + 8³ + 9³ + 12³ = 3³ + 5³ + 6³ + 7³ + 10³ + 11³`.
pub const DEG3_SHIFT_BASE: ([i64; 6], [i64; 6]) = ([1, 2, 4, 8, 9, 12], [3, 5, 6, 7, 10, 11]);

#[derive(Debug, Clone, PartialEq)]
pub struct Deg3Shift {
    pub x: Rational,
    pub pair: PowerSumPair,
    /// The base fixes no x (equal sums and equal sums of squares); the
    /// returned pair is the trivial one at x = 0.
    pub degenerate: bool,
}

/// Scales a cubic base `ΣA³ = ΣP³` to `(A x + 1)` versus `(P x + 1)`.
///
/// Expanding, the cubic and constant terms cancel and what remains is
/// `3x²(ΣA² − ΣP²) + 3x(ΣA − ΣP)`, so the nonzero root is
/// `x = −(ΣA − ΣP)/(ΣA² − ΣP²)`.
pub fn deg3_shift_family(base_a: &[i64], base_p: &[i64]) -> Result<Deg3Shift> {
    if base_a.len() != base_p.len() {
        return Err(Error::InvalidInput("shift needs sides of equal length".into()));
    }
    let a = super::ints(base_a);
    let p = super::ints(base_p);
    let r3 = &power_sum(&a, 3) - &power_sum(&p, 3);
    if !r3.is_zero() {
        return Err(Error::BaseInvalid { k: 3, residual: r3 });
    }
    let d1 = &power_sum(&a, 1) - &power_sum(&p, 1);
    let d2 = &power_sum(&a, 2) - &power_sum(&p, 2);
    let (x, degenerate) = match (d1.is_zero(), d2.is_zero()) {
        (_, false) => (-(d1 / d2), false),
        (true, true) => (Rational::zero(), true),
        (false, true) => return Err(Error::DegenerateShift),
    };
    let shift = |xs: &[Rational]| xs.iter().map(|v| v * &x + Rational::one()).collect::<Vec<_>>();
    let pair = super::cleared_pair(shift(&a), shift(&p), [3], format!("deg3_shift_family x={}", x))?;
    // x = 0 from d1 = 0 also gives the all-ones pair.
    let degenerate = degenerate || x.is_zero();
    Ok(Deg3Shift { x, pair, degenerate })
}

/// `A² + C² + E² − (B² + D² + F²)`, the side condition of the symmetric method.
pub fn deg3_symmetric_condition<R: Ring>(c: &[R; 6]) -> R {
    c[0].square().plus(&c[2].square()).plus(&c[4].square())
        .minus(&c[1].square()).minus(&c[3].square()).minus(&c[5].square())
}

/// `(Ax+1, Bx−1, Cx+1, Dx−1, Ex+1, Fx−1)` versus the opposite signs.
pub fn deg3_symmetric_forms<R: Ring>(c: &[R; 6], x: &R) -> (Vec<R>, Vec<R>) {
    let one = R::one();
    let mut lhs = vec![];
    let mut rhs = vec![];
    for (i, ci) in c.iter().enumerate() {
        let cx = ci.times(x);
        let (l, r) = if i % 2 == 0 { (cx.plus(&one), cx.minus(&one)) } else { (cx.minus(&one), cx.plus(&one)) };
        lhs.push(l);
        rhs.push(r);
    }
    (lhs, rhs)
}

pub fn deg3_symmetric_family(coeffs: [i64; 6], x: &Rational) -> Result<PowerSumPair> {
    let c = coeffs.map(Rational::from);
    let cond = deg3_symmetric_condition(&c);
    if !cond.is_zero() {
        return Err(Error::SymmetryConditionFails(cond));
    }
    let (l, r) = deg3_symmetric_forms(&c, x);
    super::cleared_pair(l, r, [3], format!("deg3_symmetric_family {:?} x={}", coeffs, x))
}
