use crate::rational::Rational;

/// A point on `x² + xy + y² = norm`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConicPoint {
    pub x: Rational,
    pub y: Rational,
    pub norm: Rational,
}

/// Second intersection of the line `(x0 + t, y0 + k t)` with the conic
/// `x² + xy + y² = x0² + x0 y0 + y0²`.
///
/// Substituting the line gives `t·((k²+k+1) t + 2x0 + y0 + k(x0 + 2y0)) = 0`;
/// the nonzero root is taken. A tangent line has only the double root `t = 0`
/// and returns the base point.
pub fn conic_line_parameterize(x0: &Rational, y0: &Rational, k: &Rational) -> ConicPoint {
    let norm = x0 * x0 + x0 * y0 + y0 * y0;
    let s = k * k + k + Rational::one();
    let two = Rational::from(2);
    let lin = &two * x0 + y0 + k * (x0 + &two * y0);
    // k² + k + 1 ≥ 3/4 for every rational k, so the division is safe.
    let t = -(lin / s);
    ConicPoint { x: x0 + &t, y: y0 + k * &t, norm }
}
