use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::pair::PowerSumPair;
use crate::rational::Rational;
use crate::ring::Ring;

/// `1² + 30² + 31² + 36² + 7² + 17² = 3² + 4² + 19² + 27² + 34² + 35²`.
pub const DEG2_BASE: ([i64; 6], [i64; 6]) = ([1, 30, 31, 36, 7, 17], [3, 4, 19, 27, 34, 35]);

/// The degree-two forms in `k`, already multiplied through by `k² + k + 1`.
pub fn deg2_forms<R: Ring>(k: &R) -> (Vec<R>, Vec<R>) {
    let k2 = k.square();
    let s = k2.plus(k).plus(&R::one());
    let c = R::from_int;
    let lhs = vec![
        k2.scaled(30).minus(&k.scaled(2)).minus(&c(31)),
        k2.scaled(-31).minus(&k.scaled(60)).plus(&c(1)),
        k2.negated().minus(&k.scaled(62)).minus(&c(30)),
        s.scaled(36),
        s.scaled(7),
        s.scaled(17),
    ];
    let rhs = DEG2_BASE.1.iter().map(|&b| s.scaled(b)).collect();
    (lhs, rhs)
}

pub fn deg2_family(k: &Rational) -> PowerSumPair {
    let (l, r) = deg2_forms(k);
    super::cleared_pair(l, r, [2], format!("deg2_family k={}", k)).expect("degree set is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::{canonicalize, verify_pair};
    use crate::MultiPoly;

    fn canon_ints(l: &[i64], r: &[i64]) -> PowerSumPair {
        canonicalize(&PowerSumPair::from_ints(l, r, &[2], ""))
    }

    #[test]
    fn k2_matches_worked_example() {
        let p = deg2_family(&2.into());
        assert!(verify_pair(&p).pass);
        assert_eq!(
            canonicalize(&p),
            canon_ints(&[85, 158, 243, 252, 49, 119], &[21, 28, 133, 189, 238, 245])
        );
    }

    #[test]
    fn k0_and_k1_reproduce_base() {
        let base = canon_ints(&DEG2_BASE.0, &DEG2_BASE.1);
        for k in [0, 1] {
            let p = deg2_family(&k.into());
            assert!(verify_pair(&p).pass);
            assert_eq!(canonicalize(&p), base, "k = {k}");
        }
        let p1 = deg2_family(&1.into());
        assert_eq!(&p1.lhs[..3], &super::super::ints(&[-3, -90, -93])[..]);
    }

    #[test]
    fn symbolic_identity() {
        let k = MultiPoly::var("k");
        let (l, r) = deg2_forms(&k);
        assert!(crate::ring::residual(&l, &r, 2).is_zero());
    }
}
