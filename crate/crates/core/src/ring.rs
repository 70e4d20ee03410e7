//! The scalar interface shared by numeric and symbolic evaluation.
//!
//! Family forms are written once against [`Ring`] and evaluated either with
//! [`Rational`] (a concrete instance) or [`MultiPoly`] (the identity itself).

use crate::poly::MultiPoly;
use crate::rational::Rational;

pub trait Ring: Clone + PartialEq + core::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn is_zero(&self) -> bool;

    /// Multiplication by a small integer constant.
    fn scaled(&self, c: i64) -> Self {
        self.times(&Self::from_int(c))
    }

    fn powu(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }

    fn square(&self) -> Self {
        self.times(self)
    }
}

/// `Σ xs_i^k`.
pub fn power_sum<R: Ring>(xs: &[R], k: u32) -> R {
    xs.iter().fold(R::zero(), |acc, x| acc.plus(&x.powu(k)))
}

/// `Σ lhs_i^k − Σ rhs_j^k`, the residual of a pair of forms.
pub fn residual<R: Ring>(lhs: &[R], rhs: &[R], k: u32) -> R {
    power_sum(lhs, k).minus(&power_sum(rhs, k))
}

/// `Σ c_i · t_i` for small integer coefficients; keeps form tables readable.
pub fn lin<R: Ring>(terms: &[(i64, &R)]) -> R {
    terms
        .iter()
        .fold(R::zero(), |acc, (c, t)| acc.plus(&t.scaled(*c)))
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_int(n: i64) -> Self {
        Rational::from(n)
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn powu(&self, e: u32) -> Self {
        self.pow(e)
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }
    fn from_int(n: i64) -> Self {
        MultiPoly::constant(Rational::from(n))
    }
    fn from_rational(q: &Rational) -> Self {
        MultiPoly::constant(q.clone())
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn scaled(&self, c: i64) -> Self {
        self.scale(&Rational::from(c))
    }
}
