use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::pair::{canonicalize, verify_pair, PowerSumPair};
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::ring::{lin, residual, Ring};

/// Parameters of the degree-nine forms.
#[derive(Debug, Clone, PartialEq)]
pub struct Deg9Params {
    pub a: Rational,
    pub b: Rational,
    pub t: Rational,
    pub m: Rational,
    pub n: Rational,
    pub w: Rational,
}

/// The twelve linear forms in `(m, n, w)` with coefficients in `(a, b, t)`.
/// The two sides differ only in the sign of `w`.
pub fn deg9_forms<R: Ring>(a: &R, b: &R, t: &R, m: &R, n: &R, w: &R) -> (Vec<R>, Vec<R>) {
    let ab = a.plus(b);
    let c1 = a.minus(b).plus(t); // a − b + t
    let c2 = ab.plus(t); // a + b + t
    let c3 = ab.minus(t); // a + b − t
    let base = [
        (ab.times(m).scaled(2).plus(&c1.times(n)), 1),
        (a.times(m).scaled(-2).plus(&c2.times(n)), 1),
        (b.times(m).scaled(-2).minus(&c3.times(n)), 1),
        (ab.times(m).scaled(-2).plus(&c1.times(n)), -1),
        (a.times(m).scaled(2).plus(&c2.times(n)), -1),
        (b.times(m).scaled(2).minus(&c3.times(n)), -1),
    ];
    let lhs = base.iter().map(|(x, s)| lin(&[(1, x), (*s, w)])).collect();
    let rhs = base.iter().map(|(x, s)| lin(&[(1, x), (-*s, w)])).collect();
    (lhs, rhs)
}

/// Coefficients `(of n², of m²)` of the quadratic condition on `(m : n)`.
pub fn deg9_condition<R: Ring>(a: &R, b: &R, t: &R) -> (R, R) {
    let (a2, b2, t2) = (a.square(), b.square(), t.square());
    let cn2 = lin(&[
        (-14, &b.times(&t2)),
        (-7, &b.times(a).times(t)),
        (1, &a2.times(a)),
        (2, &a.times(&b2)),
        (14, &a.times(&t2)),
        (-2, &a2.times(b)),
        (-1, &b2.times(b)),
        (7, &a2.times(t)),
        (7, &b2.times(t)),
        (14, &t2.times(t)),
    ]);
    let cm2 = lin(&[
        (-4, &a.times(&b2)),
        (-5, &b2.times(b)),
        (4, &a2.times(b)),
        (5, &a2.times(a)),
        (7, &b2.times(t)),
        (7, &a2.times(t)),
        (7, &b.times(a).times(t)),
    ]);
    (cn2, cm2)
}

/// Coefficients `[t⁴, t³, t², t¹, t⁰]` of `s² = −coef_n2·coef_m2` as a
/// quartic in `t`.
pub fn deg9_quartic_rhs<R: Ring>(a: &R, b: &R) -> [R; 5] {
    let p = |e: u32, x: &R| x.powu(e);
    let ab = |i: u32, j: u32| p(i, a).times(&p(j, b));
    [
        lin(&[(-98, &ab(2, 0)), (-98, &ab(1, 1)), (-98, &ab(0, 2))]),
        lin(&[(56, &ab(1, 2)), (-56, &ab(2, 1)), (168, &ab(0, 3)), (-168, &ab(3, 0))]),
        lin(&[(63, &ab(2, 2)), (-119, &ab(4, 0)), (14, &ab(1, 3)), (-119, &ab(0, 4)), (14, &ab(3, 1))]),
        lin(&[
            (14, &ab(3, 2)),
            (-14, &ab(2, 3)),
            (-42, &ab(5, 0)),
            (42, &ab(0, 5)),
            (-14, &ab(1, 4)),
            (14, &ab(4, 1)),
        ]),
        lin(&[
            (6, &ab(1, 5)),
            (6, &ab(5, 1)),
            (-5, &ab(6, 0)),
            (2, &ab(4, 2)),
            (-5, &ab(0, 6)),
            (-6, &ab(3, 3)),
            (2, &ab(2, 4)),
        ]),
    ]
}

/// The factored form of the k = 9 residual once `w = (a − b + 3t)·n`:
/// `18432·a·b·m·n²(m−n)(m+n)(a+b)(a−b+3t)·C·Q`, with `C` the cubic
/// condition `coef_n2·n² + coef_m2·m²` and `Q` a quadratic form.
pub fn deg9_expression() -> MultiPoly {
    MultiPoly::parse(
        "18432*a*b*m*n^2*(m-n)*(m+n)*(a+b)*(a-b+3*t)\
         *(-5*m^2*b^3 - n^2*b^3 + 7*m^2*b^2*t - 4*m^2*b^2*a + 7*n^2*b^2*t + 2*n^2*b^2*a + 7*a*m^2*t*b + 4*m^2*b*a^2\
           - 14*n^2*b*t^2 - 2*n^2*b*a^2 - 7*a*n^2*b*t + 5*m^2*a^3 + 7*m^2*a^2*t + 7*n^2*a^2*t + 14*n^2*a*t^2\
           + n^2*a^3 + 14*n^2*t^3)\
         *(2*m^2*b^2 + 2*m^2*b*a + 2*m^2*a^2 + 3*n^2*a^2 + 14*n^2*t*a + 21*n^2*t^2 - 4*b*n^2*a - 14*b*n^2*t + 3*b^2*n^2)",
    )
    .expect("expression parses")
}

/// The k = 9 residual as a polynomial in the symbol `w`, with the other
/// parameters fixed.
pub fn deg9_k9_residual(a: &Rational, b: &Rational, t: &Rational, m: &Rational, n: &Rational) -> MultiPoly {
    let c = |x: &Rational| MultiPoly::constant(x.clone());
    let (l, r) = deg9_forms(&c(a), &c(b), &c(t), &c(m), &c(n), &MultiPoly::var("w"));
    residual(&l, &r, 9)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Deg9Solution {
    pub params: Deg9Params,
    /// Primitive integer vectors in form order, signs kept, degrees {1,2,3,9}.
    pub vectors: PowerSumPair,
    /// Canonical form of `vectors`.
    pub pair: PowerSumPair,
}

/// Solves the condition for `(m : n)` (taking `m/n` as the positive root in
/// lowest terms), picks `w`, and returns the verified solution.
///
/// `w` is not free: the k = 9 residual is odd in `w` with a nonvanishing
/// `w⁵` term, and `w = (a − b + 3t)·n` is the choice that turns it into the
/// factored expression carrying the condition as a factor. That is the
/// default; an explicit `w` is accepted only if the residual vanishes there.
pub fn deg9_family(a: &Rational, b: &Rational, t: &Rational, w: Option<&Rational>) -> Result<Deg9Solution> {
    let (cn2, cm2) = deg9_condition(a, b, t);
    if cm2.is_zero() {
        return Err(Error::InvalidInput("coef_m2 vanishes; m is unconstrained".into()));
    }
    let ratio = -(&cn2 / &cm2);
    let root = ratio.sqrt().ok_or_else(|| Error::NoRationalRatio(-(&cn2 * &cm2)))?;
    if root.is_zero() {
        return Err(Error::InvalidInput("condition forces m = 0".into()));
    }
    let m = Rational::from(root.numer().clone());
    let n = Rational::from(root.denom().clone());
    let w = match w {
        None => &(&(a - b) + &(t * &Rational::from(3))) * &n,
        Some(w) => {
            let res = deg9_k9_residual(a, b, t, &m, &n);
            let at = res.substitute(&[("w", MultiPoly::constant(w.clone()))]);
            if !at.is_zero() {
                return Err(Error::WNotAdmissible { w: w.clone(), residual: res });
            }
            w.clone()
        }
    };
    if w.is_zero() {
        return Err(Error::InvalidInput("w = 0 makes both sides equal".into()));
    }
    let (l, r) = deg9_forms(a, b, t, &m, &n, &w);
    let raw = PowerSumPair::new(l, r, [1, 2, 3, 9], format!("deg9_family a={} b={} t={}", a, b, t))?;
    let vectors = raw.primitive();
    let rep = verify_pair(&vectors);
    if !rep.pass {
        let (k, res) = rep.residuals.into_iter().find(|(_, r)| !r.is_zero()).unwrap();
        return Err(Error::IdentityFails { k, residual: MultiPoly::constant(res) });
    }
    let pair = canonicalize(&vectors);
    let params = Deg9Params { a: a.clone(), b: b.clone(), t: t.clone(), m, n, w };
    Ok(Deg9Solution { params, vectors, pair })
}
