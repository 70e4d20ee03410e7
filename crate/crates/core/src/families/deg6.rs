use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::pair::PowerSumPair;
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::ring::{residual, Ring};

/// The twelve quadratic forms in `u = k·b2` and `v = a1`.
pub fn deg6_forms<R: Ring>(u: &R, v: &R) -> (Vec<R>, Vec<R>) {
    let (uu, uv, vv) = (u.square(), u.times(v), v.square());
    let f = |a: i64, b: i64, c: i64| uu.scaled(a).plus(&uv.scaled(b)).plus(&vv.scaled(c));
    let lhs = vec![
        f(7, 0, -4),
        f(-9, -32, -68),
        f(3, 20, 44),
        f(15, 20, -28),
        f(11, -20, -52),
        f(1, -44, -36),
    ];
    let rhs = vec![
        f(-1, -16, -36),
        f(15, 16, 28),
        f(-9, -4, -4),
        f(11, 12, -44),
        f(7, -28, -68),
        f(-3, -52, -52),
    ];
    (lhs, rhs)
}

pub fn deg6_family(a1: i64, b2: i64, k: i64) -> Result<PowerSumPair> {
    if a1 == 0 && b2 == 0 {
        return Err(Error::InvalidInput("deg6_family needs (a1, b2) != (0, 0)".into()));
    }
    let u = Rational::from(k) * Rational::from(b2);
    let v = Rational::from(a1);
    let (l, r) = deg6_forms(&u, &v);
    super::cleared_pair(l, r, [6], format!("deg6_family a1={} b2={} k={}", a1, b2, k))
}

/// The seven substitution tuples `(m, n, p, q, r, t)` and the products
/// printed for them, verbatim.
pub const DEG6_CASES: [([i64; 6], &str); 7] = [
    (
        [3, 1, -1, -2, -6, 3],
        "240*a1*a*c2*(19*c2^2 + b2^2*b^2 + 2*a1*b2*b*a + 4*a^2*a1^2)*(21*c2^2 + b2^2*b^2 + 2*a1*b2*b*a + 6*a^2*a1^2)",
    ),
    (
        [3, 1, -1, -1, -5, 3],
        "240*a1*a*c2*(14*c2^2 + 6*a1^2*a^2 + 2*b2*b*a1*a + b2^2*b^2)*(-12*c2^2 + 4*a1^2*a^2 + 2*b2*b*a1*a + b2^2*b^2)",
    ),
    (
        [3, 1, -1, 2, -2, 3],
        "240*a1*a*c2*(5*c2^2 + b2^2*b^2 + 2*a1*a*b2*b + 6*a1^2*a^2)*(-3*c2^2 + b2^2*b^2 + 2*a1*a*b2*b + 4*a1^2*a^2)",
    ),
    (
        [3, 1, -1, 3, -3, 1],
        "240*a1*a*c2*(6*c2^2 + b2^2*b^2 + 2*a1*a*b2*b + 6*a1^2*a^2)*(-4*c2^2 + b2^2*b^2 + 2*a1*a*b2*b + 4*a1^2*a^2)",
    ),
    (
        [3, 2, -4, 3, 2, 2],
        "-240*a1*a*c2*(5*c2^2 + 15*a1^2*a^2 + 2*b*a1*a*b2 + b2^2*b^2)*(3*c2^2 + 5*a1^2*a^2 - 2*b*a1*a*b2 - b2^2*b^2)",
    ),
    (
        [3, 3, -5, 3, 2, 2],
        "-240*a1*a*c2*(3*c2^2 - b2^2*b^2 + 2*a1*a*b2*b + 12*a1^2*a^2)*(5*c2^2 + b2^2*b^2 + 2*a1*a*b2*b + 22*a1^2*a^2)",
    ),
    (
        [3, 4, -6, 3, 2, 2],
        "-240*a1*a*c2*(3*c2^2 + 21*a1^2*a^2 - 2*b2*a1*b*a - b2^2*b^2)*(5*c2^2 + 31*a1^2*a^2 + 2*b2*a1*b*a + b2^2*b^2)",
    ),
];

/// Displays of cases 1 and 6 with their sign typos fixed (`−19c2²` in the
/// first factor of case 1, `−2a1ab2b` in the first factor of case 6).
pub const DEG6_CORRECTED: [([i64; 6], &str); 2] = [
    (
        [3, 1, -1, -2, -6, 3],
        "240*a1*a*c2*(-19*c2^2 + b2^2*b^2 + 2*a1*b2*b*a + 4*a^2*a1^2)*(21*c2^2 + b2^2*b^2 + 2*a1*b2*b*a + 6*a^2*a1^2)",
    ),
    (
        [3, 3, -5, 3, 2, 2],
        "-240*a1*a*c2*(3*c2^2 - b2^2*b^2 - 2*a1*a*b2*b + 12*a1^2*a^2)*(5*c2^2 + b2^2*b^2 + 2*a1*a*b2*b + 22*a1^2*a^2)",
    ),
];

/// `ΣA_i⁶ − ΣB_i⁶` for the general linear forms after `a2 = m·a1`,
/// `a3 = n·a1`, `a4 = p·a1`, `c1 = q·c2`, `c3 = r·c2`, `c4 = t·c2`, expanded
/// in `(a1, b1, b2, a, b, c2)`.
pub fn deg6_case_residual(m: i64, n: i64, p: i64, q: i64, r: i64, t: i64) -> MultiPoly {
    let [a1, b1, b2, a, b, c2] = MultiPoly::vars_of(["a1", "b1", "b2", "a", "b", "c2"]);
    let s = |k: i64, x: &MultiPoly| x.scaled(k);
    let (a2, a3, a4) = (s(m, &a1), s(n, &a1), s(p, &a1));
    let (c1, c3, c4) = (s(q, &c2), s(r, &c2), s(t, &c2));
    let a1a = &a1 * &a;
    let b1b = &b1 * &b;
    let b2b = &b2 * &b;
    let a2a = &a2 * &a;
    let a3a = &a3 * &a;
    let a4a = &a4 * &a;
    let lhs = [
        &(&a1a + &b1b) - &c1,
        &a3a + &c3,
        &a4a + &c4,
        &(&a1a - &b2b) + &c2,
        &(&a2a - &b1b) + &c2,
        &(&a2a + &b2b) + &c2,
    ];
    let rhs = [
        &(&a1a + &b1b) + &c1,
        &a3a - &c3,
        &a4a - &c4,
        &(&a1a - &b2b) - &c2,
        &(&a2a - &b1b) - &c2,
        &(&a2a + &b2b) - &c2,
    ];
    residual(&lhs, &rhs, 6)
}

/// Outcome of dividing a case residual by its printed product.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseDivision {
    pub display: MultiPoly,
    /// Division of the full residual (b1 free).
    pub quotient: MultiPoly,
    pub remainder: MultiPoly,
    /// Division after setting b1 = 0.
    pub quotient_b1_zero: MultiPoly,
    pub remainder_b1_zero: MultiPoly,
}

pub fn deg6_case_display(tuple: [i64; 6]) -> Option<MultiPoly> {
    lookup(&DEG6_CASES, tuple)
}

/// The corrected display where the printed one has a typo, else the printed one.
pub fn deg6_case_corrected_display(tuple: [i64; 6]) -> Option<MultiPoly> {
    lookup(&DEG6_CORRECTED, tuple).or_else(|| deg6_case_display(tuple))
}

fn lookup(table: &[([i64; 6], &str)], tuple: [i64; 6]) -> Option<MultiPoly> {
    table.iter().find(|(t, _)| *t == tuple).map(|(_, s)| MultiPoly::parse(s).expect("display parses"))
}

/// Divides the residual for one of the printed tuples by its printed
/// product, both with `b1` free and with `b1 = 0`. `None` for other tuples.
pub fn deg6_case_division(tuple: [i64; 6]) -> Option<CaseDivision> {
    divide_by(tuple, deg6_case_display(tuple)?)
}

/// As [`deg6_case_division`], against the corrected display.
pub fn deg6_case_division_corrected(tuple: [i64; 6]) -> Option<CaseDivision> {
    divide_by(tuple, deg6_case_corrected_display(tuple)?)
}

fn divide_by(tuple: [i64; 6], display: MultiPoly) -> Option<CaseDivision> {
    let [m, n, p, q, r, t] = tuple;
    let res = deg6_case_residual(m, n, p, q, r, t);
    let (quotient, remainder) = res.div_rem(&display).ok()?;
    let res0 = res.substitute(&[("b1", MultiPoly::zero())]);
    let (quotient_b1_zero, remainder_b1_zero) = res0.div_rem(&display).ok()?;
    Some(CaseDivision { display, quotient, remainder, quotient_b1_zero, remainder_b1_zero })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::{canonicalize, verify_pair};

    fn canon6(l: &[i64], r: &[i64]) -> PowerSumPair {
        canonicalize(&PowerSumPair::from_ints(l, r, &[6], ""))
    }

    #[test]
    fn symbolic_identity_in_u_v() {
        let [u, v] = MultiPoly::vars_of(["u", "v"]);
        let (l, r) = deg6_forms(&u, &v);
        assert!(residual(&l, &r, 6).is_zero());
    }

    #[test]
    fn worked_examples() {
        let a = deg6_family(1, 1, 1).unwrap();
        assert_eq!(canonicalize(&a), canon6(&[3, 109, 67, 7, 61, 79], &[53, 59, 17, 21, 89, 107]));
        let b = deg6_family(1, 1, 3).unwrap();
        assert_eq!(
            b,
            PowerSumPair::from_ints(&[59, -245, 131, 167, -13, -159], &[-93, 211, -97, 91, -89, -235], &[6], "")
        );
        assert_eq!(canonicalize(&b), canon6(&[59, 245, 131, 167, 13, 159], &[93, 211, 97, 91, 89, 235]));
        let c = PowerSumPair::from_ints(&[27, 85, 43, 73, 11, 49], &[29, 83, 41, 45, 17, 77], &[6], "");
        assert!(verify_pair(&c).pass);
    }

    #[test]
    fn k2_is_trivial() {
        let p = deg6_family(1, 1, 2).unwrap();
        assert!(verify_pair(&p).pass);
        assert!(p.is_trivial());
        assert_eq!(canonicalize(&p), canon6(&[24, 168, 96, 72, 48, 120], &[24, 168, 96, 72, 48, 120]));
    }

    #[test]
    fn zero_parameters_rejected() {
        assert!(deg6_family(0, 0, 3).is_err());
    }

    #[test]
    fn case_divisions() {
        let one = MultiPoly::one();
        let mut exact = 0;
        for (tuple, _) in DEG6_CASES {
            let d = deg6_case_division(tuple).unwrap();
            // With b1 free no display divides the residual.
            assert!(!d.remainder.is_zero(), "{tuple:?}");
            if d.remainder_b1_zero.is_zero() && d.quotient_b1_zero == one {
                exact += 1;
            }
            let c = deg6_case_division_corrected(tuple).unwrap();
            assert_eq!(c.quotient_b1_zero, one, "{tuple:?}");
            assert!(c.remainder_b1_zero.is_zero(), "{tuple:?}");
        }
        assert_eq!(exact, 5);
        for (tuple, _) in DEG6_CORRECTED {
            assert!(!deg6_case_division(tuple).unwrap().remainder_b1_zero.is_zero());
        }
        assert!(deg6_case_division([1, 1, 1, 1, 1, 1]).is_none());
    }

    #[test]
    fn zero_forms_give_zero_residual() {
        let r = deg6_case_residual(3, 1, -1, -2, -6, 3);
        let z = r.substitute(&[("a1", MultiPoly::zero()), ("c2", MultiPoly::zero())]);
        assert!(z.is_zero());
    }
}
