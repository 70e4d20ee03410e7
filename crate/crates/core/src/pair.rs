//! Solution pairs, their residuals, and the canonical form used for comparison.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{denominator_lcm, Rational};
use crate::ring::power_sum;

/// Two lists of rationals and the exponents at which their power sums are
/// claimed (or checked) to agree. Side lengths may differ.
#[derive(Clone)]
pub struct PowerSumPair {
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
    pub degrees: BTreeSet<u32>,
    pub source: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeClass {
    AllEven,
    AllOdd,
    Mixed,
}

impl PowerSumPair {
    pub fn new<D: IntoIterator<Item = u32>>(
        lhs: Vec<Rational>,
        rhs: Vec<Rational>,
        degrees: D,
        source: impl Into<String>,
    ) -> Result<Self> {
        let degrees: BTreeSet<u32> = degrees.into_iter().collect();
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(Error::InvalidInput("degrees must be a nonempty set of positive integers".into()));
        }
        Ok(PowerSumPair { lhs, rhs, degrees, source: source.into() })
    }

    /// Integer entries; panics only on an empty or zero-containing degree list.
    pub fn from_ints(lhs: &[i64], rhs: &[i64], degrees: &[u32], source: &str) -> Self {
        Self::new(
            lhs.iter().map(|&x| x.into()).collect(),
            rhs.iter().map(|&x| x.into()).collect(),
            degrees.iter().copied(),
            source,
        )
        .expect("valid degree list")
    }

    pub fn degree_class(&self) -> DegreeClass {
        if self.degrees.iter().all(|k| k % 2 == 0) {
            DegreeClass::AllEven
        } else if self.degrees.iter().all(|k| k % 2 == 1) {
            DegreeClass::AllOdd
        } else {
            DegreeClass::Mixed
        }
    }

    pub fn with_degrees<D: IntoIterator<Item = u32>>(&self, degrees: D) -> Result<Self> {
        Self::new(self.lhs.clone(), self.rhs.clone(), degrees, self.source.clone())
    }

    pub fn with_source(mut self, source: impl Into<String>) -> Self {
        self.source = source.into();
        self
    }

    /// Both sides as integers, if every entry is integral.
    pub fn integer_sides(&self) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
        let conv = |xs: &[Rational]| xs.iter().map(Rational::to_integer).collect::<Option<Vec<_>>>();
        Some((conv(&self.lhs)?, conv(&self.rhs)?))
    }

    /// Denominators cleared and the collective gcd removed, keeping order,
    /// signs and zero entries. The sign is chosen so the gcd is positive.
    pub fn primitive(&self) -> PowerSumPair {
        let l = denominator_lcm(self.lhs.iter().chain(&self.rhs));
        let scale = |xs: &[Rational]| -> Vec<BigInt> {
            xs.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        };
        let (mut a, mut b) = (scale(&self.lhs), scale(&self.rhs));
        let g = a.iter().chain(&b).fold(BigInt::zero(), |g, x| g.gcd(x));
        if !g.is_zero() {
            a.iter_mut().chain(b.iter_mut()).for_each(|x| *x /= &g);
        }
        let r = |v: Vec<BigInt>| v.into_iter().map(Rational::from).collect();
        PowerSumPair { lhs: r(a), rhs: r(b), degrees: self.degrees.clone(), source: self.source.clone() }
    }

    /// True when the canonical sides coincide (a valid but uninteresting pair).
    pub fn is_trivial(&self) -> bool {
        let c = canonicalize(self);
        c.lhs == c.rhs
    }

    /// Same multisets on each side, ignoring order and the source label.
    pub fn same_multisets(&self, other: &PowerSumPair) -> bool {
        let sorted = |xs: &[Rational]| {
            let mut v = xs.to_vec();
            v.sort();
            v
        };
        sorted(&self.lhs) == sorted(&other.lhs) && sorted(&self.rhs) == sorted(&other.rhs)
    }
}

impl PartialEq for PowerSumPair {
    /// Compares sides and degrees; the source label is provenance only.
    fn eq(&self, other: &Self) -> bool {
        self.lhs == other.lhs && self.rhs == other.rhs && self.degrees == other.degrees
    }
}

impl Eq for PowerSumPair {}

impl PartialOrd for PowerSumPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PowerSumPair {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.lhs, &self.rhs, &self.degrees).cmp(&(&other.lhs, &other.rhs, &other.degrees))
    }
}

impl fmt::Debug for PowerSumPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} = {:?} @ {:?}", self.lhs, self.rhs, self.degrees)
    }
}

impl fmt::Display for PowerSumPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[Rational]| {
            xs.iter().map(|x| alloc::format!("{}", x)).collect::<Vec<_>>().join(",")
        };
        let ks: Vec<String> = self.degrees.iter().map(|k| alloc::format!("{}", k)).collect();
        write!(f, "({}) = ({}) for k in {{{}}}", join(&self.lhs), join(&self.rhs), ks.join(","))
    }
}

/// `Σ lhs_i^k − Σ rhs_j^k`, exactly.
pub fn power_sum_residual(pair: &PowerSumPair, k: u32) -> Rational {
    &power_sum(&pair.lhs, k) - &power_sum(&pair.rhs, k)
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    /// One `(k, residual)` per degree, ascending in k.
    pub residuals: Vec<(u32, Rational)>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn failing(&self) -> Vec<u32> {
        self.residuals.iter().filter(|(_, r)| !r.is_zero()).map(|(k, _)| *k).collect()
    }
}

pub fn verify_pair(pair: &PowerSumPair) -> VerifyReport {
    let residuals: Vec<(u32, Rational)> =
        pair.degrees.iter().map(|&k| (k, power_sum_residual(pair, k))).collect();
    let pass = residuals.iter().all(|(_, r)| r.is_zero());
    VerifyReport { residuals, pass }
}

/// Sort key: larger magnitude first, and on equal magnitude the positive
/// entry first.
fn canonical_order(a: &BigInt, b: &BigInt) -> Ordering {
    b.abs().cmp(&a.abs()).then_with(|| b.sign().cmp(&a.sign()))
}

fn side_order(a: &[BigInt], b: &[BigInt]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        // canonical_order sorts "bigger" first, so reverse it to compare
        match canonical_order(y, x) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Deterministic normal form of a pair; see the crate README for the rules.
///
/// Denominators are cleared, zeros dropped, the collective gcd removed, signs
/// normalized according to the degree class, each side sorted, and the
/// larger side placed on the left.
pub fn canonicalize(pair: &PowerSumPair) -> PowerSumPair {
    let l = denominator_lcm(pair.lhs.iter().chain(&pair.rhs));
    let scale = |xs: &[Rational]| -> Vec<BigInt> {
        xs.iter()
            .map(|x| x.numer() * (&l / x.denom()))
            .filter(|x| !x.is_zero())
            .collect()
    };
    let (mut lhs, mut rhs) = (scale(&pair.lhs), scale(&pair.rhs));
    let g = lhs.iter().chain(&rhs).fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() {
        lhs.iter_mut().chain(rhs.iter_mut()).for_each(|x| *x /= &g);
    }

    match pair.degree_class() {
        DegreeClass::AllEven => {
            lhs.iter_mut().chain(rhs.iter_mut()).for_each(|x| *x = x.abs());
        }
        DegreeClass::AllOdd => {
            let (lp, ln): (Vec<_>, Vec<_>) = lhs.into_iter().partition(|x| x.is_positive());
            let (rp, rn): (Vec<_>, Vec<_>) = rhs.into_iter().partition(|x| x.is_positive());
            lhs = lp.into_iter().chain(rn.into_iter().map(|x| -x)).collect();
            rhs = rp.into_iter().chain(ln.into_iter().map(|x| -x)).collect();
        }
        DegreeClass::Mixed => {
            let max = lhs.iter().chain(&rhs).map(|x| x.abs()).max();
            if let Some(max) = max {
                let has_positive_max = lhs.iter().chain(&rhs).any(|x| *x == max);
                if !has_positive_max {
                    lhs.iter_mut().chain(rhs.iter_mut()).for_each(|x| *x = -&*x);
                }
            }
        }
    }

    lhs.sort_by(canonical_order);
    rhs.sort_by(canonical_order);
    if side_order(&lhs, &rhs) == Ordering::Less {
        core::mem::swap(&mut lhs, &mut rhs);
    }
    let r = |v: Vec<BigInt>| v.into_iter().map(Rational::from).collect();
    PowerSumPair { lhs: r(lhs), rhs: r(rhs), degrees: pair.degrees.clone(), source: pair.source.clone() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pair(l: &[i64], r: &[i64], ks: &[u32]) -> PowerSumPair {
        PowerSumPair::from_ints(l, r, ks, "test")
    }

    #[test]
    fn residual_examples() {
        let t3 = pair(&[11, 22, 4, 3, 21, 5], &[20, 7, 6, 23, 9, 1], &[3]);
        assert!(power_sum_residual(&t3, 3).is_zero());
        assert!(power_sum_residual(&pair(&[1], &[1], &[9]), 9).is_zero());
        assert_eq!(power_sum_residual(&pair(&[1, 2], &[3], &[2]), 2), Rational::from(-4));
    }

    #[test]
    fn verify_examples() {
        let d7 = pair(&[-13, 33, -59, 23, -5, -51], &[39, -19, -55, 19, -57, 1], &[1, 3, 5, 7]);
        let rep = verify_pair(&d7);
        assert!(rep.pass);
        assert_eq!(rep.residuals.len(), 4);

        let mut t8 = pair(&[3, 6, 8, 10, 15, 23], &[5, 9, 12, 9, 20, 22], &[8]);
        assert!(verify_pair(&t8).pass);
        t8.lhs[0] = &t8.lhs[0] + &Rational::one();
        let rep = verify_pair(&t8);
        assert!(!rep.pass);
        assert_eq!(rep.failing(), [8]);
    }

    #[test]
    fn canonical_deg4_k2() {
        let raw = pair(&[3888, -2528, 1360, 3724, 5586, 9310], &[2394, 6650, 2352, 9044, 1568, 3920], &[4]);
        let want = pair(&[4655, 2793, 1944, 1862, 1264, 680], &[4522, 3325, 1960, 1197, 1176, 784], &[4]);
        assert_eq!(canonicalize(&raw), want);
    }

    #[test]
    fn canonical_drops_zeros() {
        assert_eq!(canonicalize(&pair(&[0, 1], &[1, 0], &[3])), pair(&[1], &[1], &[3]));
    }

    #[test]
    fn canonical_deg5_moves_negatives() {
        let raw = pair(&[1113, -427, 889, -203, 567, 119], &[269, 417, 989, -303, -377, 1063], &[5]);
        let want = pair(&[1113, 889, 567, 377, 303, 119], &[1063, 989, 427, 417, 269, 203], &[5]);
        assert_eq!(canonicalize(&raw), want);
    }

    #[test]
    fn canonical_mixed_negates_when_max_is_negative() {
        let raw = pair(&[-5, 2], &[3, -4], &[1, 2]);
        assert_eq!(canonicalize(&raw), pair(&[5, -2], &[4, -3], &[1, 2]));
        // A tie between +5 and -5 keeps signs, positive sorted first.
        let tie = pair(&[-5, 5, 1], &[2], &[1, 2]);
        assert_eq!(canonicalize(&tie), pair(&[5, -5, 1], &[2], &[1, 2]));
    }

    #[test]
    fn canonical_clears_denominators() {
        let p = PowerSumPair::new(
            alloc::vec![Rational::frac(1, 2), Rational::frac(-1, 3)],
            alloc::vec![Rational::frac(1, 6)],
            [2],
            "",
        )
        .unwrap();
        assert_eq!(canonicalize(&p), pair(&[3, 2], &[1], &[2]));
    }

    #[test]
    fn degrees_must_be_positive() {
        assert!(PowerSumPair::new(alloc::vec![], alloc::vec![], [], "").is_err());
        assert!(PowerSumPair::new(alloc::vec![], alloc::vec![], [0, 2], "").is_err());
    }

    fn degree_set() -> impl Strategy<Value = Vec<u32>> {
        prop_oneof![
            Just(alloc::vec![2]),
            Just(alloc::vec![3]),
            Just(alloc::vec![1, 3, 5]),
            Just(alloc::vec![2, 4]),
            Just(alloc::vec![1, 2, 3]),
        ]
    }

    fn side() -> impl Strategy<Value = Vec<(i64, i64)>> {
        proptest::collection::vec((-30i64..30, 1i64..4), 0..6)
    }

    proptest! {
        #[test]
        fn canonicalize_is_idempotent(l in side(), r in side(), ks in degree_set()) {
            let q = |v: &Vec<(i64, i64)>| v.iter().map(|&(n, d)| Rational::frac(n, d)).collect();
            let p = PowerSumPair::new(q(&l), q(&r), ks, "").unwrap();
            let c = canonicalize(&p);
            prop_assert_eq!(canonicalize(&c), c);
        }

        #[test]
        fn canonicalize_preserves_validity(
            l in side(), r in side(), ks in degree_set(), perm in any::<u64>(),
        ) {
            // Half the time build a valid pair by permuting and, for odd
            // degree classes, moving entries across negated.
            let q = |v: &Vec<(i64, i64)>| v.iter().map(|&(n, d)| Rational::frac(n, d)).collect::<Vec<_>>();
            let (lhs, rhs) = if perm % 2 == 0 {
                let mut rr = q(&l);
                rr.reverse();
                (q(&l), rr)
            } else {
                (q(&l), q(&r))
            };
            let p = PowerSumPair::new(lhs, rhs, ks, "").unwrap();
            let c = canonicalize(&p);
            for &k in &p.degrees {
                prop_assert_eq!(power_sum_residual(&p, k).is_zero(), power_sum_residual(&c, k).is_zero());
            }
        }
    }
}
