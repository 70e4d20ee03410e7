use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::pair::{canonicalize, PowerSumPair};
use crate::rational::Rational;
use crate::ring::{residual, Ring};

/// `f = (8x² + 21x − 275)a² + (−5x² − 24x + 170)ab + (3x − 3)b²`.
pub fn deg8_condition_f<R: Ring>(x: &R, a: &R, b: &R) -> R {
    let (ca, cab, cb) = f_coefficients(x);
    ca.times(&a.square()).plus(&cab.times(&a.times(b))).plus(&cb.times(&b.square()))
}

fn f_coefficients<R: Ring>(x: &R) -> (R, R, R) {
    let x2 = x.square();
    let c = R::from_int;
    (
        x2.scaled(8).plus(&x.scaled(21)).minus(&c(275)),
        x2.scaled(-5).minus(&x.scaled(24)).plus(&c(170)),
        x.scaled(3).minus(&c(3)),
    )
}

/// `25x⁴ + 144x³ − 1280x² − 4608x + 25600`; equals the discriminant of `f`
/// as a quadratic in `a/b`.
pub fn deg8_discriminant<R: Ring>(x: &R) -> R {
    let c = R::from_int;
    let x2 = x.square();
    x2.square()
        .scaled(25)
        .plus(&x2.times(x).scaled(144))
        .minus(&x2.scaled(1280))
        .minus(&x.scaled(4608))
        .plus(&c(25600))
}

/// Rational roots `a/b` of `f(x, a, b) = 0`, ascending. When the `b²`
/// coefficient vanishes, `a = 0` is one of them.
pub fn deg8_solve_ab(x: &Rational) -> Result<Vec<Rational>> {
    let (ca, cab, _) = f_coefficients(x);
    let disc = deg8_discriminant(x);
    let s = disc.sqrt().ok_or_else(|| Error::NoRationalRoot(disc.clone()))?;
    // 8x² + 21x − 275 has no rational roots, so ca ≠ 0 here.
    if ca.is_zero() {
        return Err(Error::InvalidInput("leading coefficient of f vanishes".into()));
    }
    let two_a = &ca * &Rational::from(2);
    let mut roots = vec![(&(-&cab) + &s) / &two_a, (&(-&cab) - &s) / &two_a];
    roots.sort();
    roots.dedup();
    debug_assert!(roots.iter().all(|r| deg8_condition_f(x, r, &Rational::one()).is_zero()));
    Ok(roots)
}

/// Coprime integers `(a, b)` with `a/b = r` and `b > 0`.
pub fn ratio_to_ab(r: &Rational) -> (BigInt, BigInt) {
    (r.numer().clone(), r.denom().clone())
}

/// Two triples with equal sums of squares and equal sums of fourth powers.
#[derive(Debug, Clone, PartialEq)]
pub struct Deg8Triples {
    pub a: [Rational; 3],
    pub b: [Rational; 3],
}

impl Deg8Triples {
    pub fn new(a: [Rational; 3], b: [Rational; 3]) -> Result<Self> {
        for k in [2, 4] {
            if !residual(&a, &b, k).is_zero() {
                return Err(Error::TriplesInvalid(k));
            }
        }
        Ok(Deg8Triples { a, b })
    }
}

/// `a1 = ax + s1, a2 = bx + s2, a3 = a2 − 3a1`, `b1 = ax − s2, b2 = bx − s1,
/// b3 = (b − 3a)x − s2 + 3s1` with `s1 = 5a − 3b`, `s2 = 19a − 5b`.
pub fn deg8_triple_forms<R: Ring>(x: &R, a: &R, b: &R) -> ([R; 3], [R; 3]) {
    let s1 = a.scaled(5).minus(&b.scaled(3));
    let s2 = a.scaled(19).minus(&b.scaled(5));
    let ax = a.times(x);
    let bx = b.times(x);
    let a1 = ax.plus(&s1);
    let a2 = bx.plus(&s2);
    let a3 = a2.minus(&a1.scaled(3));
    let b1 = ax.minus(&s2);
    let b2 = bx.minus(&s1);
    let b3 = b.minus(&a.scaled(3)).times(x).minus(&s2).plus(&s1.scaled(3));
    ([a1, a2, a3], [b1, b2, b3])
}

pub fn deg8_triples(x: &Rational, a: &Rational, b: &Rational) -> Result<Deg8Triples> {
    let f = deg8_condition_f(x, a, b);
    if !f.is_zero() {
        return Err(Error::QuarticConditionFails(f));
    }
    let (ta, tb) = deg8_triple_forms(x, a, b);
    Deg8Triples::new(ta, tb)
}

/// The seven-versus-seven lift of two triples.
pub fn sinha_forms<R: Ring>(a: &[R; 3], b: &[R; 3]) -> (Vec<R>, Vec<R>) {
    let [a1, a2, a3] = a;
    let [b1, b2, b3] = b;
    let lhs = vec![
        a1.scaled(2),
        a2.scaled(2),
        b1.plus(b2).plus(b3),
        a3.scaled(2),
        b1.minus(b2).plus(b3),
        b2.plus(b3).minus(b1),
        b1.plus(b2).minus(b3),
    ];
    let rhs = vec![
        a1.minus(a2).plus(a3),
        a2.plus(a3).minus(a1),
        b3.scaled(2),
        a1.plus(a2).plus(a3),
        b1.scaled(2),
        b2.scaled(2),
        a1.plus(a2).minus(a3),
    ];
    (lhs, rhs)
}

pub fn sinha_lift(tr: &Deg8Triples) -> PowerSumPair {
    let (l, r) = sinha_forms(&tr.a, &tr.b);
    PowerSumPair::new(l, r, [8], "sinha_lift").expect("degree set is valid")
}

/// The (8.6.6) pair: the lift with its first terms (`A1 = −B1`) removed,
/// canonicalized.
pub fn deg8_family(x: &Rational, a: &Rational, b: &Rational) -> Result<PowerSumPair> {
    let tr = deg8_triples(x, a, b)?;
    let lift = sinha_lift(&tr);
    if lift.lhs[0] != -&lift.rhs[0] {
        return Err(Error::InvalidInput("first lifted terms do not cancel".into()));
    }
    let p = PowerSumPair::new(
        lift.lhs[1..].to_vec(),
        lift.rhs[1..].to_vec(),
        [8],
        format!("deg8_family x={} a={} b={}", x, a, b),
    )?;
    Ok(canonicalize(&p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::verify_pair;
    use crate::MultiPoly;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn canon8(l: &[i64], r: &[i64]) -> PowerSumPair {
        canonicalize(&PowerSumPair::from_ints(l, r, &[8], ""))
    }

    type Row = ((i64, i64, i64), [i64; 6], [i64; 6]);

    const ROWS: [Row; 5] = [
        ((1, 47, 82), [565, 459, 457, 552, 23, 116], [493, 575, 529, 436, 93, 72]),
        ((-6, 21, 113), [211, 155, 59, 44, 165, 54], [31, 209, 121, 10, 111, 180]),
        ((6, 15, 139), [106, 203, 295, 91, 78, 216], [232, 13, 169, 125, 294, 126]),
        ((-14, 5, 9), [19, 27, 35, 4, 3, 34], [17, 7, 1, 30, 31, 36]),
        ((-14, 3, -37), [190, 111, 127, 13, 182, 84], [148, 195, 169, 71, 98, 42]),
    ];

    #[test]
    fn condition_examples() {
        assert!(deg8_condition_f(&q(1), &q(47), &q(82)).is_zero());
        assert!(deg8_condition_f(&q(-14), &q(5), &q(9)).is_zero());
        assert_eq!(deg8_condition_f(&q(0), &q(1), &q(0)), q(-275));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(deg8_discriminant(&q(1)), q(19881));
        assert_eq!(deg8_discriminant(&q(0)), q(25600));
        assert_eq!(deg8_discriminant(&q(-6)), q(8464));
        for x in [q(1), q(-6), q(6), q(-14), Rational::frac(-200, 67)] {
            assert!(deg8_discriminant(&x).is_square(), "x = {x}");
        }
    }

    #[test]
    fn discriminant_is_that_of_f() {
        let x = MultiPoly::var("x");
        let (ca, cab, cb) = f_coefficients(&x);
        let d = cab.square().minus(&ca.times(&cb).scaled(4));
        assert_eq!(d, deg8_discriminant(&x));
    }

    #[test]
    fn solve_ab_examples() {
        assert_eq!(deg8_solve_ab(&q(1)).unwrap(), [q(0), Rational::frac(47, 82)]);
        assert_eq!(deg8_solve_ab(&q(-14)).unwrap(), [Rational::frac(-3, 37), Rational::frac(5, 9)]);
        assert!(deg8_solve_ab(&q(6)).unwrap().contains(&Rational::frac(15, 139)));
        assert!(deg8_solve_ab(&q(-6)).unwrap().contains(&Rational::frac(21, 113)));
        assert!(matches!(deg8_solve_ab(&q(2)), Err(Error::NoRationalRoot(_))));
    }

    #[test]
    fn triples_example_and_cancellation() {
        let t = deg8_triples(&q(1), &q(47), &q(82)).unwrap();
        assert_eq!(t.a, [q(36), q(565), q(457)]);
        assert_eq!(t.b, [q(-436), q(93), q(-575)]);
        let lift = sinha_lift(&t);
        assert_eq!((lift.lhs[0].clone(), lift.rhs[0].clone()), (q(72), q(-72)));
        assert!(verify_pair(&lift).pass);
        assert!(matches!(deg8_triples(&q(1), &q(1), &q(1)), Err(Error::QuarticConditionFails(_))));
    }

    #[test]
    fn triples_are_homogeneous() {
        let t = deg8_triples(&q(-14), &q(5), &q(9)).unwrap();
        let s = deg8_triples(&q(-14), &q(15), &q(27)).unwrap();
        for i in 0..3 {
            assert_eq!(&t.a[i] * &q(3), s.a[i]);
            assert_eq!(&t.b[i] * &q(3), s.b[i]);
        }
    }

    #[test]
    fn zero_triples_lift_to_zero() {
        let z = Deg8Triples::new([q(0), q(0), q(0)], [q(0), q(0), q(0)]).unwrap();
        let p = sinha_lift(&z);
        assert!(p.lhs.iter().chain(&p.rhs).all(Rational::is_zero));
    }

    #[test]
    fn all_five_rows() {
        for ((x, a, b), l, r) in ROWS {
            let p = deg8_family(&q(x), &q(a), &q(b)).unwrap();
            assert!(verify_pair(&p).pass);
            assert_eq!(p, canon8(&l, &r), "row ({x}, {a}, {b})");
        }
    }

    #[test]
    fn symbolic_triple_identities() {
        let [x, a, b] = MultiPoly::vars_of(["x", "a", "b"]);
        let (ta, tb) = deg8_triple_forms(&x, &a, &b);
        assert!(residual(&ta, &tb, 2).is_zero());
        let r4 = residual(&ta, &tb, 4);
        let f = deg8_condition_f(&x, &a, &b);
        let quo = r4.div_exact(&f).expect("f divides the fourth-power residual");
        assert_eq!(quo, MultiPoly::parse("-32*x*(a+b)*(3*a-b)").unwrap());
    }

    #[test]
    fn symbolic_lift_identity() {
        // For arbitrary triples the degree-8 residual lies in the ideal of the
        // two power conditions; check the parameterized family instead.
        let [x, a, b] = MultiPoly::vars_of(["x", "a", "b"]);
        let (ta, tb) = deg8_triple_forms(&x, &a, &b);
        let (l, r) = sinha_forms(&ta, &tb);
        let r8 = residual(&l, &r, 8);
        let f = deg8_condition_f(&x, &a, &b);
        assert!(r8.div_exact(&f).is_some());
    }
}
