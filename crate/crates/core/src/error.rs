use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use crate::elliptic::CurvePoint;
use crate::poly::MultiPoly;
use crate::rational::Rational;

pub type Result<T> = core::result::Result<T, Error>;

/// Every failure the library can report. Mathematical failures carry the
/// offending value so callers can print it.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    ParseRational(String),
    #[error("negative exponent {0} in polynomial power")]
    NegativeExponent(i64),
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degenerate shift: sums of squares agree but plain sums differ, no finite x")]
    DegenerateShift,
    #[error("base solution fails at k = {k}: residual {residual}")]
    BaseInvalid { k: u32, residual: Rational },
    #[error("symmetry condition fails: A^2+C^2+E^2-B^2-D^2-F^2 = {0}")]
    SymmetryConditionFails(Rational),
    #[error("not representable: {which} = {value} is not 15 times a rational square")]
    NotRepresentable { which: &'static str, value: Rational },
    #[error("precondition fails at k = {failing:?}")]
    PreconditionFails { failing: Vec<u32> },
    #[error("odd_cancel needs all-odd degrees, got even k = {0}")]
    EvenDegree(u32),
    #[error("quartic condition fails: f = {0}")]
    QuarticConditionFails(Rational),
    #[error("no rational root: discriminant {0} is not a square")]
    NoRationalRoot(Rational),
    #[error("triples violate the power conditions (k = {0})")]
    TriplesInvalid(u32),
    #[error("no rational (m:n): -coef_n2*coef_m2 = {0} is not a square")]
    NoRationalRatio(Rational),
    #[error("w = {w} not admissible; k=9 residual in w: {residual}")]
    WNotAdmissible { w: Rational, residual: MultiPoly },
    #[error("identity fails at k = {k}: residual {residual}")]
    IdentityFails { k: u32, residual: MultiPoly },

    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point is not on the quartic model")]
    NotOnModel,
    #[error("singular curve (zero discriminant)")]
    SingularCurve,
    #[error("singular quartic model (repeated root)")]
    SingularQuartic,
    #[error("exceptional point; curve-side image {image}")]
    ExceptionalPoint { image: Box<CurvePoint> },

    #[error("search too large: {estimated} units of work exceed the ceiling {ceiling}; use smaller bounds")]
    WorkCeiling { estimated: u128, ceiling: u128 },
    #[error("search bounds overflow the 128-bit key range")]
    KeyOverflow,
}
