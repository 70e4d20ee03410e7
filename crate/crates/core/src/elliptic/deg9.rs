use super::curve::{CurvePoint, WeierstrassCurve};
use super::quartic::{QuarticBridge, QuarticModel, QuarticPoint};
use crate::error::Result;
use crate::families::deg9_quartic_rhs;
use crate::rational::Rational;

/// `V² + UV + V = U³ − 7166374U − 22875861928`.
pub fn deg9_curve() -> WeierstrassCurve {
    WeierstrassCurve::from_ints([1, 0, 1, -7166374, -22875861928]).expect("nonsingular")
}

/// `P = (1026337/64, −1026359837/512)`.
pub fn deg9_p() -> CurvePoint {
    CurvePoint::affine(Rational::frac(1026337, 64), Rational::frac(-1026359837, 512))
}

/// `s² = −coef_n2·coef_m2` as a quartic in `t` for fixed `(a, b)`.
pub fn deg9_model(a: &Rational, b: &Rational) -> Result<QuarticModel> {
    QuarticModel::new(deg9_quartic_rhs(a, b))
}

/// The known point `(27/41, 88960/1681)` on the `(a, b) = (3, 4)` model.
pub fn deg9_base() -> QuarticPoint {
    QuarticPoint::new(Rational::frac(27, 41), Rational::frac(88960, 1681))
}

/// The `(3, 4)` model bridged to the curve above: the general transform at
/// the known point, the isomorphism onto the curve, and a translation sending
/// the known point to `P`.
pub fn deg9_bridge() -> Result<QuarticBridge> {
    let model = deg9_model(&Rational::from(3), &Rational::from(4))?;
    let base = deg9_base();
    QuarticBridge::new(model, base.clone())?.onto(deg9_curve())?.anchored(&base, &deg9_p())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::{generate_parameters, integrality_check, quartic_double, Bridge};
    use crate::families::deg9_family;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn two_p() -> QuarticPoint {
        QuarticPoint::new(q("3181201/12876603"), q("6408411316637440/165806904819609"))
    }

    #[test]
    fn resolved_curve_contains_p() {
        assert!(deg9_curve().on_curve(&deg9_p()));
        assert!(!integrality_check(&deg9_p()));
        // The constant read as one term does not fit.
        let garbled = WeierstrassCurve::from_ints([1, 0, 1, 0, -7166374 - 22875861928]).unwrap();
        assert!(!garbled.on_curve(&deg9_p()));
    }

    #[test]
    fn transform_lands_on_the_resolved_curve() {
        let m = deg9_model(&q("3"), &q("4")).unwrap();
        let raw = QuarticBridge::new(m, deg9_base()).unwrap();
        assert_eq!(raw.raw_curve().j_invariant(), deg9_curve().j_invariant());
        let b = raw.onto(deg9_curve()).unwrap();
        // Unanchored, the printed (t, s) is the preimage of P itself.
        assert_eq!(b.to_curve(&two_p()).unwrap(), deg9_p());
    }

    #[test]
    fn doubling_gives_printed_t() {
        let b = deg9_bridge().unwrap();
        assert_eq!(b.to_curve(&deg9_base()).unwrap(), deg9_p());
        let d = quartic_double(&b, &deg9_base()).unwrap();
        assert_eq!(d, two_p());
        assert_eq!(generate_parameters(&b, &deg9_base(), 1).unwrap(), [d]);
    }

    #[test]
    fn second_parameter_feeds_the_family() {
        let b = deg9_bridge().unwrap();
        let pts = generate_parameters(&b, &deg9_base(), 2).unwrap();
        assert!(pts.iter().all(|p| b.model().on_model(p)));
        let s = deg9_family(&q("3"), &q("4"), &pts[1].u, None).unwrap();
        assert!(crate::verify_pair(&s.vectors).pass);
    }
}
