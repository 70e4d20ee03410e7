use core::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassCurve {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
    pub a6: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl CurvePoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn coords(&self) -> Option<(&Rational, &Rational)> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, y } => Some((x, y)),
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "O"),
            CurvePoint::Affine { x, y } => write!(f, "({}, {})", x, y),
        }
    }
}

/// True iff the point is affine with integer coordinates. A non-integral
/// multiple is evidence (not proof) that a point has infinite order.
pub fn integrality_check(pt: &CurvePoint) -> bool {
    pt.coords().is_some_and(|(x, y)| x.is_integer() && y.is_integer())
}

impl WeierstrassCurve {
    pub fn new(a1: Rational, a2: Rational, a3: Rational, a4: Rational, a6: Rational) -> Result<Self> {
        let c = WeierstrassCurve { a1, a2, a3, a4, a6 };
        if c.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(c)
    }

    pub fn from_ints(a: [i64; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = a.map(Rational::from);
        Self::new(a1, a2, a3, a4, a6)
    }

    pub fn b2(&self) -> Rational {
        &(&self.a1 * &self.a1) + &(&self.a2 * &Rational::from(4))
    }

    pub fn b4(&self) -> Rational {
        &(&self.a4 * &Rational::from(2)) + &(&self.a1 * &self.a3)
    }

    pub fn b6(&self) -> Rational {
        &(&self.a3 * &self.a3) + &(&self.a6 * &Rational::from(4))
    }

    pub fn b8(&self) -> Rational {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        &(&(&(a1 * a1) * a6) + &(&(a2 * a6) * &Rational::from(4))) - &(&(a1 * a3) * a4)
            + &(&(a2 * a3) * a3)
            - &(a4 * a4)
    }

    pub fn c4(&self) -> Rational {
        let b2 = self.b2();
        &(&b2 * &b2) - &(&self.b4() * &Rational::from(24))
    }

    pub fn c6(&self) -> Rational {
        let (b2, b4, b6) = (self.b2(), self.b4(), self.b6());
        &(&-(&(&b2 * &b2) * &b2) + &(&(&b2 * &b4) * &Rational::from(36))) - &(&b6 * &Rational::from(216))
    }

    pub fn discriminant(&self) -> Rational {
        let (b2, b4, b6, b8) = (self.b2(), self.b4(), self.b6(), self.b8());
        let r = Rational::from;
        &(&(&-(&(&b2 * &b2) * &b8) - &(&(&(&b4 * &b4) * &b4) * &r(8))) - &(&(&b6 * &b6) * &r(27)))
            + &(&(&(&b2 * &b4) * &b6) * &r(9))
    }

    pub fn j_invariant(&self) -> Rational {
        let c4 = self.c4();
        &(&(&c4 * &c4) * &c4) / &self.discriminant()
    }

    pub fn on_curve(&self, pt: &CurvePoint) -> bool {
        match pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                let lhs = &(&(y * y) + &(&(&self.a1 * x) * y)) + &(&self.a3 * y);
                let rhs = &(&(&(&(x * x) * x) + &(&(&self.a2 * x) * x)) + &(&self.a4 * x)) + &self.a6;
                lhs == rhs
            }
        }
    }

    fn check(&self, pt: &CurvePoint) -> Result<()> {
        if self.on_curve(pt) {
            Ok(())
        } else {
            Err(Error::NotOnCurve)
        }
    }

    /// `(x, y) ↦ (x, −y − a1·x − a3)`.
    pub fn point_negate(&self, p: &CurvePoint) -> Result<CurvePoint> {
        self.check(p)?;
        Ok(self.negate_unchecked(p))
    }

    fn negate_unchecked(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => {
                CurvePoint::affine(x.clone(), &(&-y - &(&self.a1 * x)) - &self.a3)
            }
        }
    }

    /// Chord-and-tangent addition.
    pub fn point_add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub fn point_double(&self, p: &CurvePoint) -> Result<CurvePoint> {
        self.point_add(p, p)
    }

    fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let ((x1, y1), (x2, y2)) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => ((x1, y1), (x2, y2)),
        };
        let r = Rational::from;
        let lambda = if x1 == x2 {
            let denom = &(&(y1 + y2) + &(&self.a1 * x2)) + &self.a3;
            if denom.is_zero() {
                return CurvePoint::Infinity;
            }
            // Tangent; here y1 = y2, so denom = 2y1 + a1x1 + a3.
            let num = &(&(&(&(x1 * x1) * &r(3)) + &(&(&self.a2 * x1) * &r(2))) + &self.a4) - &(&self.a1 * y1);
            &num / &denom
        } else {
            &(y2 - y1) / &(x2 - x1)
        };
        let nu = y1 - &(&lambda * x1);
        let x3 = &(&(&(&(&lambda * &lambda) + &(&self.a1 * &lambda)) - &self.a2) - x1) - x2;
        let y3 = &(&-(&(&(&lambda + &self.a1) * &x3)) - &nu) - &self.a3;
        CurvePoint::affine(x3, y3)
    }

    /// `n·P` by double-and-add; negative `n` multiplies `−P`.
    pub fn scalar_mul(&self, p: &CurvePoint, n: i64) -> Result<CurvePoint> {
        self.check(p)?;
        let mut base = if n < 0 { self.negate_unchecked(p) } else { p.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.add_unchecked(&base, &base);
            e >>= 1;
        }
        Ok(acc)
    }
}

impl fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "y^2 + ({})xy + ({})y = x^3 + ({})x^2 + ({})x + ({})",
            self.a1, self.a2, self.a3, self.a4, self.a6
        )
    }
}
