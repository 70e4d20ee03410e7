use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::pair::PowerSumPair;
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::ring::{residual, Ring};

/// `A⁵ + B⁵ + C⁵ + D⁵ + E⁵ + F⁵ = 2·T⁵`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Deg5Base {
    pub coeffs: [i64; 6],
    pub t: i64,
}

/// `(91, 7, −21, 119, 161, −63)`, T = 147.
pub const DEG5_BASE_1: Deg5Base = Deg5Base { coeffs: [91, 7, -21, 119, 161, -63], t: 147 };
/// `(159, −61, 127, −29, 81, 17)`, T = 147.
pub const DEG5_BASE_2: Deg5Base = Deg5Base { coeffs: [159, -61, 127, -29, 81, 17], t: 147 };

impl Deg5Base {
    pub fn new(coeffs: [i64; 6], t: i64) -> Result<Self> {
        let b = Deg5Base { coeffs, t };
        let lhs: Vec<Rational> = super::ints(&coeffs);
        let rhs = [Rational::from(t), Rational::from(t)];
        let r = residual(&lhs, &rhs, 5);
        if !r.is_zero() {
            return Err(Error::BaseInvalid { k: 5, residual: r });
        }
        Ok(b)
    }

    fn check(&self) -> Result<()> {
        Self::new(self.coeffs, self.t).map(|_| ())
    }

    pub fn uvw(&self) -> (i64, i64, i64) {
        let [_, b, _, d, _, f] = self.coeffs;
        deg5_uvw(b, d, f)
    }
}

/// `U = 2(D − F)`, `V = 2(2D − 3B + F)`, `W = 2(−D + 3B − 2F)`.
pub fn deg5_uvw(b: i64, d: i64, f: i64) -> (i64, i64, i64) {
    (2 * (d - f), 2 * (2 * d - 3 * b + f), 2 * (-d + 3 * b - 2 * f))
}

/// The six quadratics in `m` (left side) and `[T(m²+3), T(m²+3)]` (right).
pub fn deg5_half_forms<R: Ring>(base: &Deg5Base, m: &R) -> (Vec<R>, Vec<R>) {
    let [a, b, c, d, e, f] = base.coeffs;
    let (u, v, w) = base.uvw();
    let m2 = m.square();
    let q = |x: i64, lin: i64, y: i64| m2.scaled(x).plus(&m.scaled(lin)).plus(&R::from_int(3 * y));
    let lhs = vec![q(a, u, b), q(b, -u, a), q(c, v, d), q(d, -v, c), q(e, w, f), q(f, -w, e)];
    let t = m2.plus(&R::from_int(3)).scaled(base.t);
    (lhs, vec![t.clone(), t])
}

/// The 6-vs-2 identity at `m`.
///
/// Holds symbolically for both printed bases. Other bases are accepted only
/// if the identity holds for them as a polynomial in `m`, which is checked.
pub fn deg5_half_identity(base: &Deg5Base, m: &Rational) -> Result<PowerSumPair> {
    base.check()?;
    let sym = MultiPoly::var("m");
    let (l, r) = deg5_half_forms(base, &sym);
    let res = residual(&l, &r, 5);
    if !res.is_zero() {
        return Err(Error::IdentityFails { k: 5, residual: res });
    }
    let (l, r) = deg5_half_forms(base, m);
    super::cleared_pair(l, r, [5], format!("deg5_half_identity T={} m={}", base.t, m))
}

/// Equates the left sides of the two half identities (both have `T = 147`).
pub fn deg5_66_forms<R: Ring>(m: &R) -> (Vec<R>, Vec<R>) {
    (deg5_half_forms(&DEG5_BASE_1, m).0, deg5_half_forms(&DEG5_BASE_2, m).0)
}

pub fn deg5_66_family(m: &Rational) -> PowerSumPair {
    let (l, r) = deg5_66_forms(m);
    super::cleared_pair(l, r, [5], format!("deg5_66_family m={}", m)).expect("degree set is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::{canonicalize, verify_pair};

    #[test]
    fn uvw_for_both_bases() {
        assert_eq!(deg5_uvw(7, 119, -63), (364, 308, 56));
        assert_eq!(deg5_uvw(-61, -29, 17), (-92, 284, -376));
        assert_eq!(deg5_uvw(0, 0, 0), (0, 0, 0));
        for (b, d, f) in [(7, 119, -63), (-61, -29, 17), (3, -8, 11)] {
            let (u, v, w) = deg5_uvw(b, d, f);
            assert_eq!(u + v + w, 4 * (d - f));
        }
    }

    #[test]
    fn bases_are_valid_and_balanced() {
        for b in [DEG5_BASE_1, DEG5_BASE_2] {
            assert!(Deg5Base::new(b.coeffs, b.t).is_ok());
            let [a, bb, c, d, e, f] = b.coeffs;
            assert_eq!(a + bb, c + d);
            assert_eq!(c + d, e + f);
            assert_eq!(3 * (a + bb), 2 * b.t);
        }
        assert!(matches!(Deg5Base::new([1, 2, 3, 4, 5, 6], 7), Err(Error::BaseInvalid { k: 5, .. })));
    }

    #[test]
    fn symbolic_half_identities() {
        let m = MultiPoly::var("m");
        for b in [DEG5_BASE_1, DEG5_BASE_2] {
            let (l, r) = deg5_half_forms(&b, &m);
            assert!(residual(&l, &r, 5).is_zero());
        }
        let (l, r) = deg5_66_forms(&m);
        assert!(residual(&l, &r, 5).is_zero());
    }

    #[test]
    fn printed_forms_of_first_base() {
        let m = MultiPoly::var("m");
        let (l, _) = deg5_half_forms(&DEG5_BASE_1, &m);
        assert_eq!(l[0], MultiPoly::parse("91*m^2 + 364*m + 21").unwrap());
        let (l, _) = deg5_half_forms(&DEG5_BASE_2, &m);
        assert_eq!(l[0], MultiPoly::parse("159*m^2 - 92*m - 183").unwrap());
    }

    #[test]
    fn m2_worked_example() {
        let p = deg5_66_family(&2.into());
        assert_eq!(
            p,
            PowerSumPair::from_ints(&[1113, -427, 889, -203, 567, 119], &[269, 417, 989, -303, -377, 1063], &[5], "")
        );
        let printed = PowerSumPair::from_ints(&[1113, 377, 889, 303, 567, 119], &[269, 417, 989, 203, 427, 1063], &[5], "");
        assert_eq!(canonicalize(&p), canonicalize(&printed));
        assert_eq!(
            canonicalize(&p),
            PowerSumPair::from_ints(&[1113, 889, 567, 377, 303, 119], &[1063, 989, 427, 417, 269, 203], &[5], "")
        );
    }

    #[test]
    fn m0_instances() {
        let p = deg5_66_family(&0.into());
        assert_eq!(
            p,
            PowerSumPair::from_ints(&[21, 273, 357, -63, -189, 483], &[-183, 477, -87, 381, 51, 243], &[5], "")
        );
        assert!(verify_pair(&p).pass);
        let h = deg5_half_identity(&DEG5_BASE_1, &0.into()).unwrap();
        assert!(verify_pair(&h).pass);
        let base = PowerSumPair::from_ints(&DEG5_BASE_1.coeffs, &[147, 147], &[5], "");
        assert_eq!(canonicalize(&h), canonicalize(&base));
    }

    #[test]
    fn half_identity_rejects_bases_where_it_fails() {
        // 1⁵ + 1⁵ + 1⁵ + (−1)⁵ = 2·1⁵ is a valid base, but the quadratic
        // construction does not survive it.
        let b = Deg5Base::new([1, 1, 1, -1, 0, 0], 1).unwrap();
        assert!(matches!(deg5_half_identity(&b, &1.into()), Err(Error::IdentityFails { k: 5, .. })));
    }
}
