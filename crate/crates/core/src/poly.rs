//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration order is
//! lexicographic in the variable order and the last key is the lex-leading
//! monomial (used by [`MultiPoly::div_rem`]). Operands over different variable
//! lists are aligned on the union of their variables.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

type Monomial = Vec<u32>;

#[derive(Clone, Default)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly { vars: Vec::new(), terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::one());
        MultiPoly { vars: vec![name.to_string()], terms }
    }

    /// Several variables at once, in order.
    pub fn vars_of<const N: usize>(names: [&str; N]) -> [MultiPoly; N] {
        names.map(MultiPoly::var)
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `(exponents, coefficient)` pairs in ascending lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Re-express `self` over `vars`, which must contain all of `self.vars`.
    fn lifted(&self, vars: &[String]) -> BTreeMap<Monomial, Rational> {
        if self.vars.as_slice() == vars {
            return self.terms.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset"))
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; vars.len()];
                for (i, &x) in m.iter().enumerate() {
                    e[map[i]] = x;
                }
                (e, c.clone())
            })
            .collect()
    }

    fn union_vars(&self, other: &MultiPoly) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn from_parts(vars: Vec<String>, mut terms: BTreeMap<Monomial, Rational>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { vars, terms }
    }

    fn combine(&self, other: &MultiPoly, negate_other: bool) -> MultiPoly {
        let vars = self.union_vars(other);
        let mut terms = self.lifted(&vars);
        for (m, c) in other.lifted(&vars) {
            let slot = terms.entry(m).or_insert_with(Rational::zero);
            if negate_other {
                *slot -= &c;
            } else {
                *slot += &c;
            }
        }
        Self::from_parts(vars, terms)
    }

    fn product(&self, other: &MultiPoly) -> MultiPoly {
        let vars = self.union_vars(other);
        let a = self.lifted(&vars);
        let b = other.lifted(&vars);
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                let c = ca * cb;
                match terms.get_mut(&m) {
                    Some(slot) => *slot += &c,
                    None => {
                        terms.insert(m, c);
                    }
                }
            }
        }
        Self::from_parts(vars, terms)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Integer power; negative exponents are a domain error.
    pub fn pow(&self, e: i64) -> Result<MultiPoly> {
        if e < 0 {
            return Err(Error::NegativeExponent(e));
        }
        let e = u32::try_from(e).map_err(|_| Error::InvalidInput("exponent too large".into()))?;
        Ok(crate::ring::Ring::powu(self, e))
    }

    /// Substitutes each bound symbol by a polynomial (use
    /// [`MultiPoly::constant`] for numbers) and expands. Unbound symbols stay.
    pub fn substitute(&self, bindings: &[(&str, MultiPoly)]) -> MultiPoly {
        let bound: Vec<Option<&MultiPoly>> = self
            .vars
            .iter()
            .map(|v| bindings.iter().find(|(n, _)| n == v).map(|(_, p)| p))
            .collect();
        if bound.iter().all(Option::is_none) {
            return self.clone();
        }
        // Powers of each bound value are shared across terms.
        let mut cache: Vec<Vec<MultiPoly>> = vec![Vec::new(); self.vars.len()];
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut free = vec![0u32; self.vars.len()];
            let mut term = MultiPoly::constant(c.clone());
            for (i, &e) in m.iter().enumerate() {
                match bound[i] {
                    None => free[i] = e,
                    Some(p) if e > 0 => {
                        let powers = &mut cache[i];
                        if powers.is_empty() {
                            powers.push(MultiPoly::one());
                        }
                        while powers.len() <= e as usize {
                            let next = powers.last().unwrap() * p;
                            powers.push(next);
                        }
                        term = &term * &powers[e as usize];
                    }
                    Some(_) => {}
                }
            }
            let mut mono = BTreeMap::new();
            mono.insert(free, Rational::one());
            let mono = MultiPoly::from_parts(self.vars.clone(), mono);
            out = &out + &(&term * &mono);
        }
        out.pruned()
    }

    /// Numeric substitution for all variables; errors if a variable that
    /// actually occurs is left unbound.
    pub fn evaluate(&self, values: &[(&str, Rational)]) -> Result<Rational> {
        let vals: Vec<Option<&Rational>> = self
            .vars
            .iter()
            .map(|v| values.iter().find(|(n, _)| n == v).map(|(_, x)| x))
            .collect();
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let x = vals[i].ok_or_else(|| {
                    Error::InvalidInput(alloc::format!("unbound variable `{}`", self.vars[i]))
                })?;
                t *= &x.pow(e);
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Drops variables that no longer occur in any term.
    pub fn pruned(&self) -> MultiPoly {
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|m| m[i] > 0))
            .collect();
        if used.iter().all(|&u| u) {
            return self.clone();
        }
        let vars = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let e = m.iter().zip(&used).filter(|(_, &u)| u).map(|(&x, _)| x).collect();
                (e, c.clone())
            })
            .collect();
        MultiPoly { vars, terms }
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        match self.var_index(name) {
            Some(i) => self.terms.keys().map(|m| m[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    /// Coefficients of `self` viewed as a polynomial in `name`:
    /// entry `j` is the coefficient of `name^j`.
    pub fn coefficients_in(&self, name: &str) -> Vec<MultiPoly> {
        let Some(i) = self.var_index(name) else {
            return vec![self.clone()];
        };
        let d = self.degree_in(name) as usize;
        let mut parts: Vec<BTreeMap<Monomial, Rational>> = vec![BTreeMap::new(); d + 1];
        for (m, c) in &self.terms {
            let mut e = m.clone();
            let j = core::mem::replace(&mut e[i], 0) as usize;
            parts[j].insert(e, c.clone());
        }
        parts
            .into_iter()
            .map(|t| MultiPoly::from_parts(self.vars.clone(), t).pruned())
            .collect()
    }

    /// Division with remainder by a single divisor under lex order on the
    /// aligned variable list. The remainder is zero iff `divisor` divides `self`.
    pub fn div_rem(&self, divisor: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let vars = self.union_vars(divisor);
        let mut r = self.lifted(&vars);
        let d = divisor.lifted(&vars);
        let (lm, lc) = d.iter().next_back().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let lc_inv = lc.recip()?;
        let mut q: BTreeMap<Monomial, Rational> = BTreeMap::new();
        let mut rem: BTreeMap<Monomial, Rational> = BTreeMap::new();
        while let Some((m, c)) = r.pop_last() {
            if m.iter().zip(&lm).all(|(a, b)| a >= b) {
                let qm: Monomial = m.iter().zip(&lm).map(|(a, b)| a - b).collect();
                let qc = &c * &lc_inv;
                for (dm, dc) in d.iter().rev().skip(1) {
                    let pm: Monomial = dm.iter().zip(&qm).map(|(a, b)| a + b).collect();
                    let slot = r.entry(pm.clone()).or_insert_with(Rational::zero);
                    *slot -= &(&qc * dc);
                    if slot.is_zero() {
                        r.remove(&pm);
                    }
                }
                q.insert(qm, qc);
            } else {
                rem.insert(m, c);
            }
        }
        Ok((
            MultiPoly::from_parts(vars.clone(), q).pruned(),
            MultiPoly::from_parts(vars, rem).pruned(),
        ))
    }

    /// The exact quotient if `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Parses `+ - * / ^`, parentheses, integer literals and identifiers.
    /// `/` only accepts a nonzero constant on its right.
    pub fn parse(src: &str) -> Result<MultiPoly> {
        let mut p = Parser { s: src.as_bytes(), i: 0 };
        let v = p.expr()?;
        p.ws();
        if p.i != p.s.len() {
            return Err(p.err());
        }
        Ok(v)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn err(&self) -> Error {
        Error::InvalidInput(alloc::format!(
            "polynomial syntax error at byte {} in `{}`",
            self.i,
            core::str::from_utf8(self.s).unwrap_or("?")
        ))
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.i += 1;
            let t = self.term()?;
            acc = if c == b'+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.i += 1;
            let f = self.unary()?;
            acc = if c == b'*' {
                &acc * &f
            } else {
                let k = f.as_constant().filter(|k| !k.is_zero()).ok_or_else(|| self.err())?;
                acc.scale(&k.recip()?)
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'-') => {
                self.i += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.i += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            self.ws();
            let start = self.i;
            while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                self.i += 1;
            }
            let e: i64 = core::str::from_utf8(&self.s[start..self.i])
                .ok()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| self.err())?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err());
                }
                self.i += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                    self.i += 1;
                }
                let t = core::str::from_utf8(&self.s[start..self.i]).unwrap();
                Ok(MultiPoly::constant(t.parse()?))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.i;
                while self.i < self.s.len()
                    && (self.s[self.i].is_ascii_alphanumeric() || self.s[self.i] == b'_')
                {
                    self.i += 1;
                }
                Ok(MultiPoly::var(core::str::from_utf8(&self.s[start..self.i]).unwrap()))
            }
            _ => Err(self.err()),
        }
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        (self - other).is_zero()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].clone()
                    } else {
                        alloc::format!("{}^{}", self.vars[i], e)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                f.write_str(&mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.combine(rhs, false)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.combine(rhs, true)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.product(rhs)
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn binomial_and_difference_of_squares() {
        assert_eq!(p("x+1").pow(2).unwrap(), p("x^2 + 2*x + 1"));
        assert_eq!(&p("x+y") * &p("x-y"), p("x^2 - y^2"));
        assert_eq!(p("m^2+3").pow(2).unwrap(), p("m^4 + 6*m^2 + 9"));
    }

    #[test]
    fn negative_exponent_is_domain_error() {
        assert_eq!(p("x").pow(-1), Err(Error::NegativeExponent(-1)));
    }

    #[test]
    fn zero_checks() {
        let q = p("3*x*y - 2");
        assert!((&q - &q).is_zero());
        assert!((p("x^2 - x^2") + p("0*y")).is_zero());
        assert!(!MultiPoly::one().is_zero());
    }

    #[test]
    fn substitute_number_into_deg2_form() {
        let f = p("30*k^2 - 2*k - 31");
        let v = f.substitute(&[("k", MultiPoly::constant(2.into()))]);
        assert_eq!(v.as_constant(), Some(Rational::from(85)));
        assert_eq!(f.substitute(&[]), f);
    }

    #[test]
    fn substitute_polynomial() {
        let f = p("x^2 + y");
        let g = f.substitute(&[("x", p("a + b"))]);
        assert_eq!(g, p("a^2 + 2*a*b + b^2 + y"));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p("30*k^2 - 2*k - 31").to_string(), "30*k^2 - 2*k - 31");
        assert_eq!(p("-x*y + 1/2").to_string(), "-x*y + 1/2");
        assert_eq!(MultiPoly::zero().to_string(), "0");
    }

    #[test]
    fn coefficients_in_variable() {
        let f = p("w^3*a + 2*w - a*b + 5");
        let c = f.coefficients_in("w");
        assert_eq!(c.len(), 4);
        assert_eq!(c[0], p("5 - a*b"));
        assert_eq!(c[1], p("2"));
        assert!(c[2].is_zero());
        assert_eq!(c[3], p("a"));
    }

    #[test]
    fn exact_division() {
        let a = p("x^2 + 3*x*y - y + 2");
        let b = p("x - 7*y^2 + 1");
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!((&prod + &MultiPoly::one()).div_exact(&a), None);
        let (q, r) = p("x^2 + 1").div_rem(&p("x")).unwrap();
        assert_eq!(q, p("x"));
        assert_eq!(r, p("1"));
    }

    #[test]
    fn evaluate_requires_bindings() {
        let f = p("x*y + 1");
        assert!(f.evaluate(&[("x", 2.into())]).is_err());
        assert_eq!(f.evaluate(&[("x", 2.into()), ("y", Rational::frac(1, 2))]).unwrap(), 2);
    }

    #[test]
    fn parse_errors() {
        assert!(MultiPoly::parse("x +").is_err());
        assert!(MultiPoly::parse("(x").is_err());
        assert!(MultiPoly::parse("x / y").is_err());
    }

    fn small_poly() -> impl Strategy<Value = MultiPoly> {
        let term = (-5i64..=5, 0u32..3, 0u32..3, 0u32..2);
        proptest::collection::vec(term, 0..5).prop_map(|ts| {
            let [x, y, z] = MultiPoly::vars_of(["x", "y", "z"]);
            ts.into_iter().fold(MultiPoly::zero(), |acc, (c, a, b, d)| {
                let t = x.pow(a.into()).unwrap() * y.pow(b.into()).unwrap() * z.pow(d.into()).unwrap();
                &acc + &t.scale(&Rational::from(c))
            })
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn substitution_commutes_with_evaluation(
            f in small_poly(), x in -6i64..6, y in -6i64..6, z in 1i64..6,
        ) {
            let z = Rational::frac(1, z);
            let vals = [("x", Rational::from(x)), ("y", Rational::from(y)), ("z", z.clone())];
            let sub = f.substitute(&[
                ("x", MultiPoly::constant(x.into())),
                ("y", MultiPoly::constant(y.into())),
                ("z", MultiPoly::constant(z)),
            ]);
            prop_assert_eq!(sub.as_constant().unwrap(), f.evaluate(&vals).unwrap());
        }

        #[test]
        fn division_recovers_factor(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b), Some(a));
        }
    }
}
