use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::curve::{CurvePoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// `v² = c4·u⁴ + c3·u³ + c2·u² + c1·u + c0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticModel {
    pub c4: Rational,
    pub c3: Rational,
    pub c2: Rational,
    pub c1: Rational,
    pub c0: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuarticPoint {
    pub u: Rational,
    pub v: Rational,
}

impl QuarticPoint {
    pub fn new(u: Rational, v: Rational) -> Self {
        QuarticPoint { u, v }
    }
}

impl fmt::Display for QuarticPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

impl QuarticModel {
    /// Coefficients from the leading one down. Rejects a right-hand side
    /// with a repeated root.
    pub fn new(coeffs: [Rational; 5]) -> Result<Self> {
        let [c4, c3, c2, c1, c0] = coeffs;
        let m = QuarticModel { c4, c3, c2, c1, c0 };
        if m.discriminant().is_zero() {
            return Err(Error::SingularQuartic);
        }
        Ok(m)
    }

    pub fn from_ints(coeffs: [i64; 5]) -> Result<Self> {
        Self::new(coeffs.map(Rational::from))
    }

    pub fn coeffs(&self) -> [&Rational; 5] {
        [&self.c4, &self.c3, &self.c2, &self.c1, &self.c0]
    }

    pub fn eval(&self, u: &Rational) -> Rational {
        self.coeffs().iter().fold(Rational::zero(), |acc, c| &(&acc * u) + *c)
    }

    pub fn on_model(&self, p: &QuarticPoint) -> bool {
        &p.v * &p.v == self.eval(&p.u)
    }

    /// Discriminant through the invariants `I`, `J`: `(4I³ − J²)/27`.
    pub fn discriminant(&self) -> Rational {
        let r = Rational::from;
        let (a, b, c, d, e) = (&self.c4, &self.c3, &self.c2, &self.c1, &self.c0);
        let i = &(&(&(a * e) * &r(12)) - &(&(b * d) * &r(3))) + &(c * c);
        let j = &(&(&(&(&(&(a * c) * e) * &r(72)) + &(&(&(b * c) * d) * &r(9))) - &(&(&(a * d) * d) * &r(27)))
            - &(&(&(e * b) * b) * &r(27)))
            - &(&(&(c * c) * c) * &r(2));
        &(&(&(&(&i * &i) * &i) * &r(4)) - &(&j * &j)) / &r(27)
    }

    /// Coefficients of the model at `u = u0 + z`, ascending in `z`.
    fn taylor(&self, u0: &Rational) -> [Rational; 5] {
        // Repeated synthetic division by (u − u0).
        let mut c: Vec<Rational> = self.coeffs().iter().map(|x| (*x).clone()).collect();
        let mut out: [Rational; 5] = Default::default();
        for slot in out.iter_mut() {
            for i in 1..c.len() {
                let carry = &c[i - 1] * u0;
                c[i] += &carry;
            }
            *slot = c.pop().expect("nonempty");
        }
        out
    }
}

impl fmt::Display for QuarticModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "v^2 = ({})u^4 + ({})u^3 + ({})u^2 + ({})u + ({})",
            self.c4, self.c3, self.c2, self.c1, self.c0
        )
    }
}

/// A pair of inverse rational maps between a quartic model and a
/// Weierstrass curve.
pub trait Bridge {
    fn model(&self) -> &QuarticModel;
    fn curve(&self) -> &WeierstrassCurve;
    fn to_curve(&self, p: &QuarticPoint) -> Result<CurvePoint>;
    /// Fails with [`Error::ExceptionalPoint`] (carrying the curve point) where
    /// the inverse map is undefined.
    fn to_quartic(&self, p: &CurvePoint) -> Result<QuarticPoint>;
}

/// Doubles a model point through the bridge: `ψ(2·φ(p))`.
pub fn quartic_double<B: Bridge + ?Sized>(bridge: &B, p: &QuarticPoint) -> Result<QuarticPoint> {
    if !bridge.model().on_model(p) {
        return Err(Error::NotOnModel);
    }
    let c = bridge.curve();
    let d = c.point_double(&bridge.to_curve(p)?)?;
    bridge.to_quartic(&d)
}

/// Images of `2P, 4P, 6P, …` with `P = φ(base)`, skipping multiples that hit
/// the exceptional locus, until `count` points are collected. At most
/// `2·count + 8` multiples are tried.
pub fn generate_parameters<B: Bridge + ?Sized>(
    bridge: &B,
    base: &QuarticPoint,
    count: usize,
) -> Result<Vec<QuarticPoint>> {
    if !bridge.model().on_model(base) {
        return Err(Error::NotOnModel);
    }
    let c = bridge.curve();
    let p = bridge.to_curve(base)?;
    let step = c.point_double(&p)?;
    let mut acc = CurvePoint::Infinity;
    let mut out = Vec::with_capacity(count);
    for _ in 0..2 * count + 8 {
        if out.len() == count {
            break;
        }
        acc = c.point_add(&acc, &step)?;
        match bridge.to_quartic(&acc) {
            Ok(q) => out.push(q),
            Err(Error::ExceptionalPoint { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Change of variables `x = u²X + r`, `y = u³Y + s·u²X + t` from a target
/// curve onto the source.
#[derive(Debug, Clone, PartialEq)]
struct Iso {
    u: Rational,
    r: Rational,
    s: Rational,
    t: Rational,
}

impl Iso {
    fn between(src: &WeierstrassCurve, dst: &WeierstrassCurve) -> Result<Iso> {
        let (c4, c6, d4, d6) = (src.c4(), src.c6(), dst.c4(), dst.c6());
        let unsupported = || Error::InvalidInput(String::from("curves are not isomorphic over Q"));
        let u2_candidates: Vec<Rational> = match (c4.is_zero(), c6.is_zero()) {
            (false, false) if !d4.is_zero() && !d6.is_zero() => vec![&(&c6 * &d4) / &(&d6 * &c4)],
            (false, true) if d6.is_zero() && !d4.is_zero() => {
                let r = (&c4 / &d4).sqrt().ok_or_else(unsupported)?;
                vec![r.clone(), -r]
            }
            (true, false) => {
                return Err(Error::InvalidInput(String::from("j = 0 isomorphisms are not supported")))
            }
            _ => return Err(unsupported()),
        };
        for u2 in u2_candidates {
            let Some(u) = u2.sqrt() else { continue };
            if u.is_zero() {
                continue;
            }
            let iso = Iso::solve(src, dst, u);
            if iso.image(src) == *dst {
                return Ok(iso);
            }
        }
        Err(unsupported())
    }

    fn solve(src: &WeierstrassCurve, dst: &WeierstrassCurve, u: Rational) -> Iso {
        let r3 = Rational::from(3);
        let half = Rational::frac(1, 2);
        let s = &(&(&dst.a1 * &u) - &src.a1) * &half;
        let r = &(&(&(&(&dst.a2 * &u) * &u) - &src.a2) + &(&(&s * &src.a1) + &(&s * &s))) / &r3;
        let t = &(&(&(&dst.a3 * &u.pow(3)) - &src.a3) - &(&r * &src.a1)) * &half;
        Iso { u, r, s, t }
    }

    /// Coefficients of the source curve in the new variables.
    fn image(&self, e: &WeierstrassCurve) -> WeierstrassCurve {
        let Iso { u, r, s, t } = self;
        let n = Rational::from;
        let a1 = &(&e.a1 + &(s * &n(2))) / u;
        let a2 = &(&(&(&e.a2 - &(s * &e.a1)) + &(r * &n(3))) - &(s * s)) / &u.pow(2);
        let a3 = &(&(&e.a3 + &(r * &e.a1)) + &(t * &n(2))) / &u.pow(3);
        let a4 = &(&(&(&(&(&e.a4 - &(s * &e.a3)) + &(&(r * &e.a2) * &n(2))) - &(&(t + &(r * s)) * &e.a1))
            + &(&(r * r) * &n(3)))
            - &(&(s * t) * &n(2)))
            / &u.pow(4);
        let a6 = &(&(&(&(&(&(&e.a6 + &(r * &e.a4)) + &(&(r * r) * &e.a2)) + &r.pow(3)) - &(t * &e.a3)) - &(t * t))
            - &(&(r * t) * &e.a1))
            / &u.pow(6);
        WeierstrassCurve { a1, a2, a3, a4, a6 }
    }

    /// Source point to target point.
    fn forward(&self, p: &CurvePoint) -> CurvePoint {
        let Some((x, y)) = p.coords() else { return CurvePoint::Infinity };
        let Iso { u, r, s, t } = self;
        let xr = x - r;
        let xx = &xr / &u.pow(2);
        let yy = &(&(y - &(s * &xr)) - t) / &u.pow(3);
        CurvePoint::affine(xx, yy)
    }

    fn backward(&self, p: &CurvePoint) -> CurvePoint {
        let Some((x, y)) = p.coords() else { return CurvePoint::Infinity };
        let Iso { u, r, s, t } = self;
        let u2 = u.pow(2);
        let xx = &(&u2 * x) + r;
        let yy = &(&(&u.pow(3) * y) + &(&(s * &u2) * x)) + t;
        CurvePoint::affine(xx, yy)
    }
}

/// The classical transformation of a quartic model with a rational point
/// `(u0, q)`, `q ≠ 0`, onto a cubic in long Weierstrass form. Writing the
/// model at `u = u0 + z` as `v² = a z⁴ + b z³ + c z² + d z + q²`, the curve is
/// `a1 = d/q, a2 = c − d²/4q², a3 = 2qb, a4 = −4q²a, a6 = a2·a4` and the base
/// point goes to infinity.
///
/// Optionally composed with an isomorphism onto a prescribed curve and with a
/// translation that pins the image of one model point.
#[derive(Debug, Clone, PartialEq)]
pub struct QuarticBridge {
    model: QuarticModel,
    base: QuarticPoint,
    z: [Rational; 5],
    raw: WeierstrassCurve,
    target: WeierstrassCurve,
    iso: Option<Iso>,
    offset: CurvePoint,
}

impl QuarticBridge {
    pub fn new(model: QuarticModel, base: QuarticPoint) -> Result<Self> {
        if !model.on_model(&base) {
            return Err(Error::NotOnModel);
        }
        if base.v.is_zero() {
            return Err(Error::InvalidInput(String::from("base point needs v != 0")));
        }
        let z = model.taylor(&base.u);
        let [_, d, c, b, a] = &z;
        let q = &base.v;
        let q2 = q * q;
        let a1 = d / q;
        let a2 = c - &(&(d * d) / &(&q2 * &Rational::from(4)));
        let a3 = &(q * b) * &Rational::from(2);
        let a4 = -&(&(&q2 * a) * &Rational::from(4));
        let a6 = &a2 * &a4;
        let raw = WeierstrassCurve::new(a1, a2, a3, a4, a6)?;
        Ok(QuarticBridge { model, base, z, target: raw.clone(), raw, iso: None, offset: CurvePoint::Infinity })
    }

    /// Composes with the isomorphism onto `target`. Fails if the curves are
    /// not isomorphic over the rationals.
    pub fn onto(mut self, target: WeierstrassCurve) -> Result<Self> {
        let iso = Iso::between(&self.raw, &target)?;
        self.iso = Some(iso);
        self.target = target;
        self.offset = CurvePoint::Infinity;
        Ok(self)
    }

    /// Adds a translation so that `quartic_pt` maps to `curve_pt`.
    pub fn anchored(mut self, quartic_pt: &QuarticPoint, curve_pt: &CurvePoint) -> Result<Self> {
        self.offset = CurvePoint::Infinity;
        let image = self.to_curve(quartic_pt)?;
        let neg = self.target.point_negate(&image)?;
        self.offset = self.target.point_add(curve_pt, &neg)?;
        Ok(self)
    }

    pub fn base(&self) -> &QuarticPoint {
        &self.base
    }

    /// The cubic produced by the transformation before any isomorphism.
    pub fn raw_curve(&self) -> &WeierstrassCurve {
        &self.raw
    }

    fn q(&self) -> &Rational {
        &self.base.v
    }

    fn raw_forward(&self, p: &QuarticPoint) -> CurvePoint {
        let [_, d, c, _, _] = &self.z;
        let q = self.q();
        let z = &p.u - &self.base.u;
        if z.is_zero() {
            return if p.v == *q {
                CurvePoint::Infinity
            } else {
                let (a1, a2, a3) = (&self.raw.a1, &self.raw.a2, &self.raw.a3);
                CurvePoint::affine(-a2, &(a1 * a2) - a3)
            };
        }
        let two = Rational::from(2);
        let vq = &p.v + q;
        let x = &(&(&(q * &two) * &vq) + &(d * &z)) / &(&z * &z);
        let y = &(&(&(&(&(q * q) * &Rational::from(4)) * &vq) + &(&(q * &two) * &(&(d * &z) + &(&(c * &z) * &z))))
            - &(&(&(&(d * d) * &z) * &z) / &(q * &two)))
            / &z.pow(3);
        CurvePoint::affine(x, y)
    }

    fn raw_backward(&self, p: &CurvePoint) -> Option<QuarticPoint> {
        let Some((x, y)) = p.coords() else { return Some(self.base.clone()) };
        let [_, d, c, b, a] = &self.z;
        let q = self.q();
        let two = Rational::from(2);
        let two_q = q * &two;
        let z = if !y.is_zero() {
            &(&(&two_q * &(x + c)) - &(&(d * d) / &two_q)) / y
        } else {
            let den = &(&(x * x) / &(&(q * q) * &Rational::from(4))) - a;
            if den.is_zero() {
                return None;
            }
            &(&(&(d * x) / &(&(q * q) * &two)) + b) / &den
        };
        let v = &-q + &(&(&z * &(&(&z * x) - d)) / &two_q);
        let pt = QuarticPoint::new(&self.base.u + &z, v);
        self.model.on_model(&pt).then_some(pt)
    }
}

impl Bridge for QuarticBridge {
    fn model(&self) -> &QuarticModel {
        &self.model
    }

    fn curve(&self) -> &WeierstrassCurve {
        &self.target
    }

    fn to_curve(&self, p: &QuarticPoint) -> Result<CurvePoint> {
        if !self.model.on_model(p) {
            return Err(Error::NotOnModel);
        }
        let raw = self.raw_forward(p);
        let img = match &self.iso {
            Some(iso) => iso.forward(&raw),
            None => raw,
        };
        self.target.point_add(&img, &self.offset)
    }

    fn to_quartic(&self, p: &CurvePoint) -> Result<QuarticPoint> {
        let neg = self.target.point_negate(&self.offset)?;
        let shifted = self.target.point_add(p, &neg)?;
        let raw = match &self.iso {
            Some(iso) => iso.backward(&shifted),
            None => shifted,
        };
        self.raw_backward(&raw).ok_or_else(|| Error::ExceptionalPoint { image: Box::new(p.clone()) })
    }
}
