use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::pair::PowerSumPair;
use crate::rational::Rational;
use crate::ring::Ring;

/// `16⁴ + 480⁴ + 496⁴ + 532⁴ + 798⁴ + 1330⁴ = 342⁴ + 336⁴ + 224⁴ + 560⁴ + 950⁴ + 1292⁴`.
pub const DEG4_BASE: ([i64; 6], [i64; 6]) =
    ([16, 480, 496, 532, 798, 1330], [342, 336, 224, 560, 950, 1292]);

/// The degree-four forms in `k`, multiplied through by `k² + k + 1`.
pub fn deg4_forms<R: Ring>(k: &R) -> (Vec<R>, Vec<R>) {
    let k2 = k.square();
    let s = k2.plus(k).plus(&R::one());
    let c = R::from_int;
    let lhs = vec![
        k2.scaled(496).plus(&k.scaled(960)).minus(&c(16)),
        k2.scaled(-16).minus(&k.scaled(992)).minus(&c(480)),
        k2.scaled(480).minus(&k.scaled(32)).minus(&c(496)),
        s.scaled(532),
        s.scaled(798),
        s.scaled(1330),
    ];
    let rhs = DEG4_BASE.1.iter().map(|&b| s.scaled(b)).collect();
    (lhs, rhs)
}

pub fn deg4_family(k: &Rational) -> PowerSumPair {
    let (l, r) = deg4_forms(k);
    super::cleared_pair(l, r, [4], format!("deg4_family k={}", k)).expect("degree set is valid")
}
