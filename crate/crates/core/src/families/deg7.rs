use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::pair::{verify_pair, DegreeClass, PowerSumPair};
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::ring::Ring;

/// Solves `15c² = (4q² − p²)b² + (4p² − q²)a²` and
/// `15d² = (4p² − q²)b² + (4q² − p²)a²` for nonnegative rationals `c, d`.
pub fn deg7_conditions(p: i64, q: i64, a: i64, b: i64) -> Result<(Rational, Rational)> {
    let r = Rational::from;
    let (p, q, a, b) = (r(p), r(q), r(a), r(b));
    let e1 = &(&(&r(4) * &q * &q) - &(&p * &p)) * &(&b * &b) + &(&(&r(4) * &p * &p) - &(&q * &q)) * &(&a * &a);
    let e2 = &(&(&r(4) * &p * &p) - &(&q * &q)) * &(&b * &b) + &(&(&r(4) * &q * &q) - &(&p * &p)) * &(&a * &a);
    let fifteen = r(15);
    let root = |which: &'static str, e: Rational| {
        (&e / &fifteen).sqrt().ok_or(Error::NotRepresentable { which, value: e })
    };
    Ok((root("15c^2", e1)?, root("15d^2", e2)?))
}

/// The four-versus-four even identity (k = 2, 4, 6) under the conditions above.
pub fn piezas_forms<R: Ring>(p: &R, q: &R, a: &R, b: &R, c: &R, d: &R) -> (Vec<R>, Vec<R>) {
    let (bp, aq, ap, bq) = (b.times(p), a.times(q), a.times(p), b.times(q));
    let lhs = vec![
        c.plus(&bp).plus(&aq),
        c.minus(&bp).minus(&aq),
        d.plus(&ap).minus(&bq),
        d.minus(&ap).plus(&bq),
    ];
    let rhs = vec![
        c.plus(&bp).minus(&aq),
        c.minus(&bp).plus(&aq),
        d.plus(&ap).plus(&bq),
        d.minus(&ap).minus(&bq),
    ];
    (lhs, rhs)
}

/// `{t + a_i} ∪ {t − a_i}` versus `{t + b_i} ∪ {t − b_i}`.
pub fn shift_forms<R: Ring>(lhs: &[R], rhs: &[R], t: &R) -> (Vec<R>, Vec<R>) {
    let side = |xs: &[R]| {
        xs.iter().map(|x| t.plus(x)).chain(xs.iter().map(|x| t.minus(x))).collect::<Vec<_>>()
    };
    (side(lhs), side(rhs))
}

/// Lifts a pair with equal power sums at `k = 2, 4, …, 2n` to one with equal
/// power sums at every `k = 1, …, 2n + 1`. `n` is half the largest even
/// degree listed on the input; every even `k ≤ 2n` is checked.
pub fn shift_extend(pair: &PowerSumPair, t: &Rational) -> Result<PowerSumPair> {
    let n = pair.degrees.iter().filter(|k| *k % 2 == 0).max().copied().unwrap_or(0) / 2;
    if n == 0 {
        return Err(Error::InvalidInput("shift_extend needs an even degree".into()));
    }
    let even = pair.with_degrees((1..=n).map(|j| 2 * j))?;
    let rep = verify_pair(&even);
    if !rep.pass {
        return Err(Error::PreconditionFails { failing: rep.failing() });
    }
    let (l, r) = shift_forms(&pair.lhs, &pair.rhs, t);
    PowerSumPair::new(l, r, 1..=2 * n + 1, format!("shift_extend t={} of {}", t, pair.source))
}

/// Cancels terms whose odd powers cancel: `{v, −v}` within a side, and any
/// value present on both sides (once per occurrence).
pub fn odd_cancel(pair: &PowerSumPair) -> Result<PowerSumPair> {
    if pair.degree_class() != DegreeClass::AllOdd {
        let k = pair.degrees.iter().find(|k| *k % 2 == 0).copied().unwrap_or(0);
        return Err(Error::EvenDegree(k));
    }
    let mut lhs = pair.lhs.clone();
    let mut rhs = pair.rhs.clone();
    for side in [&mut lhs, &mut rhs] {
        cancel_opposites(side);
    }
    let mut i = 0;
    while i < lhs.len() {
        if let Some(j) = rhs.iter().position(|y| *y == lhs[i]) {
            lhs.remove(i);
            rhs.remove(j);
        } else {
            i += 1;
        }
    }
    PowerSumPair::new(lhs, rhs, pair.degrees.iter().copied(), pair.source.clone())
}

fn cancel_opposites(side: &mut Vec<Rational>) {
    let mut i = 0;
    while i < side.len() {
        let neg = -&side[i];
        let hit = (!side[i].is_zero())
            .then(|| side.iter().enumerate().position(|(j, y)| j != i && *y == neg))
            .flatten();
        match hit {
            Some(j) => {
                let (lo, hi) = if i < j { (i, j) } else { (j, i) };
                side.remove(hi);
                side.remove(lo);
            }
            None => i += 1,
        }
    }
}

/// The degree-seven construction: the even identity is shifted by a
/// symbolic `t` and specialized at `t = −c`, where `t + A1 = −(t + A2)` and
/// `t + B1 = −(t + B2)`; those four terms are removed.
///
/// Only the four terms the specialization creates are cancelled: a full
/// [`odd_cancel`] would also strip coincidental `{v, −v}` pairs (the
/// `(3, 2, 1, 13)` instance carries `±19` on one side) and fall short of six
/// terms per side.
pub fn deg7_family(p: i64, q: i64, a: i64, b: i64) -> Result<PowerSumPair> {
    let (c, d) = deg7_conditions(p, q, a, b)?;
    let r = Rational::from;
    let (el, er) = piezas_forms(&r(p), &r(q), &r(a), &r(b), &c, &d);
    let lift = |xs: &[Rational]| xs.iter().cloned().map(MultiPoly::constant).collect::<Vec<_>>();
    let t = MultiPoly::var("t");
    let (sl, sr) = shift_forms(&lift(&el), &lift(&er), &t);
    let at = [("t", MultiPoly::constant(-&c))];
    let eval = |xs: Vec<MultiPoly>| -> Vec<Rational> {
        xs.iter().map(|x| x.substitute(&at).as_constant().expect("t is the only symbol")).collect()
    };
    let (mut lhs, mut rhs) = (eval(sl), eval(sr));
    // shift_forms lists t + x_i first, so the opposite pairs sit at 0 and 1.
    for side in [&mut lhs, &mut rhs] {
        if side[0] != -&side[1] {
            return Err(Error::InvalidInput("t = -c did not produce the expected opposite pair".into()));
        }
        side.drain(0..2);
    }
    let out = super::cleared_pair(
        lhs,
        rhs,
        [1, 3, 5, 7],
        format!("deg7_family p={} q={} a={} b={}", p, q, a, b),
    )?;
    let rep = verify_pair(&out);
    if !rep.pass {
        let (k, res) = rep.residuals.into_iter().find(|(_, r)| !r.is_zero()).unwrap();
        return Err(Error::IdentityFails { k, residual: MultiPoly::constant(res) });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::canonicalize;
    use crate::ring::residual;

    fn odd(l: &[i64], r: &[i64]) -> PowerSumPair {
        canonicalize(&PowerSumPair::from_ints(l, r, &[1, 3, 5, 7], ""))
    }

    #[test]
    fn conditions_examples() {
        assert_eq!(deg7_conditions(3, 2, 1, 13).unwrap(), (9.into(), 19.into()));
        assert_eq!(deg7_conditions(4, 1, 89, 82).unwrap(), (167.into(), 148.into()));
        assert_eq!(deg7_conditions(3, 2, 0, 0).unwrap(), (0.into(), 0.into()));
        assert!(matches!(deg7_conditions(3, 2, 1, 1), Err(Error::NotRepresentable { .. })));
    }

    #[test]
    fn piezas_identity_holds_at_even_degrees() {
        let (c, d) = deg7_conditions(3, 2, 1, 13).unwrap();
        let r = Rational::from;
        let (l, rr) = piezas_forms(&r(3), &r(2), &r(1), &r(13), &c, &d);
        for k in [2, 4, 6] {
            assert!(residual(&l, &rr, k).is_zero(), "k = {k}");
        }
    }

    #[test]
    fn shift_extend_small() {
        let p = PowerSumPair::from_ints(&[1, 7], &[5, 5], &[2], "");
        let s = shift_extend(&p, &1.into()).unwrap();
        assert_eq!(s, PowerSumPair::from_ints(&[2, 8, 0, -6], &[6, 6, -4, -4], &[1, 2, 3], ""));
        assert!(verify_pair(&s).pass);
        let bad = PowerSumPair::from_ints(&[1, 2], &[3], &[2], "");
        assert_eq!(shift_extend(&bad, &1.into()), Err(Error::PreconditionFails { failing: alloc::vec![2] }));
        let same = PowerSumPair::from_ints(&[3, 4], &[4, 3], &[2, 4], "");
        let s = shift_extend(&same, &Rational::frac(-7, 2)).unwrap();
        assert!(s.is_trivial());
        assert_eq!(s.degrees.len(), 5);
    }

    #[test]
    fn shifted_piezas_identity_symbolic_in_t() {
        let (c, d) = deg7_conditions(3, 2, 1, 13).unwrap();
        let r = |x: i64| MultiPoly::constant(x.into());
        let (l, rr) = piezas_forms(&r(3), &r(2), &r(1), &r(13), &MultiPoly::constant(c), &MultiPoly::constant(d));
        let (sl, sr) = shift_forms(&l, &rr, &MultiPoly::var("t"));
        assert_eq!(sl.len(), 8);
        for k in 1..=7 {
            assert!(residual(&sl, &sr, k).is_zero(), "k = {k}");
        }
    }

    #[test]
    fn odd_cancel_examples() {
        let p = PowerSumPair::from_ints(&[2, -2, 5], &[3, -3, 5], &[1, 3], "");
        let c = odd_cancel(&p).unwrap();
        assert!(c.lhs.is_empty() && c.rhs.is_empty());
        let keep = PowerSumPair::from_ints(&[1, 2], &[3], &[1], "");
        assert_eq!(odd_cancel(&keep).unwrap(), keep);
        assert_eq!(odd_cancel(&PowerSumPair::from_ints(&[1], &[1], &[1, 2], "")), Err(Error::EvenDegree(2)));
    }

    #[test]
    fn worked_examples() {
        assert_eq!(
            canonicalize(&deg7_family(3, 2, 1, 13).unwrap()),
            odd(&[-13, 33, -59, 23, -5, -51], &[39, -19, -55, 19, -57, 1])
        );
        assert_eq!(
            canonicalize(&deg7_family(4, 1, 82, 89).unwrap()),
            odd(&[129, 199, 285, 71, 11, 366], &[218, 110, 367, 277, 38, 51])
        );
        assert_eq!(
            canonicalize(&deg7_family(4, 1, 89, 82).unwrap()),
            odd(&[255, 457, 573, 83, 95, 753], &[419, 293, 751, 589, 41, 123])
        );
        assert_eq!(
            canonicalize(&deg7_family(3, 2, 466, 607).unwrap()),
            odd(&[329, -39, -4347, 1159, -1923, -1555], &[2757, -2467, -2483, -705, -4351, 873])
        );
        assert_eq!(
            canonicalize(&deg7_family(3, 2, 607, 466).unwrap()),
            odd(&[372, -517, -2248, 364, -1314, -425], &[1304, -1449, -1034, -850, -2246, 507])
        );
    }

    #[test]
    fn grid_over_small_heights() {
        let mut hits = 0;
        for (p, q) in [(3, 2), (4, 1)] {
            for a in 1..=200 {
                for b in 1..=200 {
                    if deg7_conditions(p, q, a, b).is_ok() {
                        let out = deg7_family(p, q, a, b).unwrap();
                        assert!(verify_pair(&out).pass);
                        hits += 1;
                    }
                }
            }
        }
        assert!(hits >= 4, "only {hits} representable (a, b)");
    }
}
