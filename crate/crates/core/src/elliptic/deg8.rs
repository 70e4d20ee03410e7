use alloc::boxed::Box;

use super::curve::{CurvePoint, WeierstrassCurve};
use super::quartic::{Bridge, QuarticModel, QuarticPoint};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// `Y² = X³ + X² − 920X + 10404`.
pub fn deg8_curve() -> WeierstrassCurve {
    WeierstrassCurve::from_ints([0, 1, 0, -920, 10404]).expect("nonsingular")
}

/// `V² = 25U⁴ + 144U³ − 1280U² − 4608U + 25600`.
pub fn deg8_model() -> QuarticModel {
    QuarticModel::from_ints([25, 144, -1280, -4608, 25600]).expect("squarefree")
}

/// `Q = (406/25, −396/125)`.
pub fn deg8_q() -> CurvePoint {
    CurvePoint::affine(Rational::frac(406, 25), Rational::frac(-396, 125))
}

/// The model point whose image under the printed map `(U, V) → (X, Y)` is
/// `Q` in the limit: `(0, −160)`.
pub fn deg8_base() -> QuarticPoint {
    QuarticPoint::new(Rational::zero(), Rational::from(-160))
}

/// `U = (200X − 3248)/D`, `V = (25344Y − 194880X² + 3550080X − 23468800 +
/// 4000X³)/D²` with `D = 5Y + 9X − 162`. Infinity goes to `(0, 160)`.
pub fn deg8_weier_to_quartic(p: &CurvePoint) -> Result<QuarticPoint> {
    if !deg8_curve().on_curve(p) {
        return Err(Error::NotOnCurve);
    }
    let Some((x, y)) = p.coords() else {
        return Ok(QuarticPoint::new(Rational::zero(), Rational::from(160)));
    };
    let r = Rational::from;
    let d = &(&(&r(5) * y) + &(&r(9) * x)) - &r(162);
    if d.is_zero() {
        return Err(Error::ExceptionalPoint { image: Box::new(p.clone()) });
    }
    let u = &(&(&r(200) * x) - &r(3248)) / &d;
    let x2 = x * x;
    let num = &(&(&(&(&r(25344) * y) - &(&r(194880) * &x2)) + &(&r(3550080) * x)) - &r(23468800))
        + &(&r(4000) * &(&x2 * x));
    let v = &num / &(&d * &d);
    Ok(QuarticPoint::new(u, v))
}

/// `X = (5V + 800 − 72U − 7U²)/U²`, `Y = (200V + 32000 − 4320U − 800U² −
/// 9VU + 45U³)/U³`. At `U = 0` the map is undefined; the error carries the
/// designated image (`(0, −160) → Q`, `(0, 160) → O`).
pub fn deg8_quartic_to_weier(p: &QuarticPoint) -> Result<CurvePoint> {
    if !deg8_model().on_model(p) {
        return Err(Error::NotOnModel);
    }
    let r = Rational::from;
    let (u, v) = (&p.u, &p.v);
    if u.is_zero() {
        let image = if v.is_negative() { deg8_q() } else { CurvePoint::Infinity };
        return Err(Error::ExceptionalPoint { image: Box::new(image) });
    }
    let u2 = u * u;
    let x = &(&(&(&(&r(5) * v) + &r(800)) - &(&r(72) * u)) - &(&r(7) * &u2)) / &u2;
    let y = &(&(&(&(&(&(&r(200) * v) + &r(32000)) - &(&r(4320) * u)) - &(&r(800) * &u2)) - &(&(&r(9) * v) * u))
        + &(&r(45) * &(&u2 * u)))
        / &(&u2 * u);
    Ok(CurvePoint::affine(x, y))
}

/// The printed maps as a bridge, with the designated images at `U = 0`.
#[derive(Debug, Clone)]
pub struct Deg8Bridge {
    model: QuarticModel,
    curve: WeierstrassCurve,
}

impl Default for Deg8Bridge {
    fn default() -> Self {
        Deg8Bridge { model: deg8_model(), curve: deg8_curve() }
    }
}

impl Bridge for Deg8Bridge {
    fn model(&self) -> &QuarticModel {
        &self.model
    }

    fn curve(&self) -> &WeierstrassCurve {
        &self.curve
    }

    fn to_curve(&self, p: &QuarticPoint) -> Result<CurvePoint> {
        match deg8_quartic_to_weier(p) {
            Err(Error::ExceptionalPoint { image }) => Ok(*image),
            other => other,
        }
    }

    fn to_quartic(&self, p: &CurvePoint) -> Result<QuarticPoint> {
        deg8_weier_to_quartic(p)
    }
}
