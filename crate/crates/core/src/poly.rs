//! Exact integer Laurent polynomials in one and two variables.
//!
//! All coefficient arithmetic is over `i64` and exact; zero coefficients are
//! never stored. The two-variable type backs the HOMFLY polynomial in the
//! variables (v, z) and the Kauffman polynomial in (a, z).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("degree summary is undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// Two-variable integer Laurent polynomial, keyed by (exponent of x, exponent of y).
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), i64>,
}

/// Extreme exponents of a nonzero two-variable Laurent polynomial.
///
/// `v_min`/`v_max` are the minimal and maximal exponents of the first
/// variable over nonzero terms, `z_min`/`z_max` of the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeSummary {
    pub v_min: i32,
    pub v_max: i32,
    pub z_min: i32,
    pub z_max: i32,
}

impl DegreeSummary {
    /// Spread of the first variable: v_max - v_min.
    pub fn v_spread(&self) -> i32 {
        self.v_max - self.v_min
    }
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(xe: i32, ye: i32, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert((xe, ye), coeff);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = ((i32, i32), i64)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for ((xe, ye), c) in iter {
            p.add_term(xe, ye, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, xe: i32, ye: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry((xe, ye)).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&(xe, ye));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), i64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn coeff(&self, xe: i32, ye: i32) -> i64 {
        self.terms.get(&(xe, ye)).copied().unwrap_or(0)
    }

    /// Multiply by the monomial x^xe * y^ye * coeff.
    pub fn shifted(&self, xe: i32, ye: i32, coeff: i64) -> Self {
        if coeff == 0 {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), &c)| ((a + xe, b + ye), c * coeff))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn degrees(&self) -> Result<DegreeSummary, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut it = self.terms.keys();
        let &(x0, y0) = it.next().expect("nonzero");
        let (mut summary, rest) = (
            DegreeSummary { v_min: x0, v_max: x0, z_min: y0, z_max: y0 },
            it,
        );
        for &(x, y) in rest {
            summary.v_min = summary.v_min.min(x);
            summary.v_max = summary.v_max.max(x);
            summary.z_min = summary.z_min.min(y);
            summary.z_max = summary.z_max.max(y);
        }
        Ok(summary)
    }

    /// Substitute x = 1, collapsing to a polynomial in the second variable.
    pub fn eval_x_one(&self) -> LaurentPoly1 {
        let mut p = LaurentPoly1::zero();
        for (&(_, ye), &c) in &self.terms {
            p.add_term(ye, c);
        }
        p
    }

    /// Substitute x -> -x^{-1}: term coefficient picks up (-1)^e, exponent negates.
    pub fn substitute_x_neg_inv(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(xe, ye), &c)| {
                    let sign = if xe.rem_euclid(2) == 0 { 1 } else { -1 };
                    ((-xe, ye), c * sign)
                })
                .collect(),
        }
    }

    /// Substitute x -> x^{-1}.
    pub fn substitute_x_inv(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(xe, ye), &c)| ((-xe, ye), c)).collect(),
        }
    }

    /// Reduce every coefficient modulo 2, dropping terms that vanish.
    pub fn mod2(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter_map(|(&k, &c)| {
                    let r = c.rem_euclid(2);
                    (r != 0).then_some((k, r))
                })
                .collect(),
        }
    }

    /// Canonical text form: terms sorted by (x exponent, then y exponent),
    /// each rendered `coeff x^i y^j` with signed integer exponents.
    pub fn format_with(&self, x: &str, y: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(xe, ye), &c)| format!("{c} {x}^{xe} {y}^{ye}"))
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with("x", "y"))
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: Self) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&(xe, ye), &c) in &rhs.terms {
            out.add_term(xe, ye, c);
        }
        out
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: Self) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&(xe, ye), &c) in &rhs.terms {
            out.add_term(xe, ye, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(&k, &c)| (k, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: Self) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(ax, ay), &ac) in &self.terms {
            for (&(bx, by), &bc) in &rhs.terms {
                out.add_term(ax + bx, ay + by, ac * bc);
            }
        }
        out
    }
}

/// One-variable integer Laurent polynomial.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly1 {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(0, 1);
        Self { terms }
    }

    pub fn add_term(&mut self, e: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i32) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn max_degree(&self) -> Result<i32, PolyError> {
        self.terms.keys().next_back().copied().ok_or(PolyError::ZeroPolynomial)
    }

    pub fn min_degree(&self) -> Result<i32, PolyError> {
        self.terms.keys().next().copied().ok_or(PolyError::ZeroPolynomial)
    }

    pub fn format_with(&self, x: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&e, &c)| format!("{c} {x}^{e}"))
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with("z"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_terms_are_dropped() {
        let mut p = LaurentPoly2::monomial(1, 2, 3);
        p.add_term(1, 2, -3);
        assert!(p.is_zero());
        assert_eq!(p.degrees(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn degree_summary_of_constant() {
        let d = LaurentPoly2::one().degrees().unwrap();
        assert_eq!((d.v_min, d.v_max, d.z_min, d.z_max), (0, 0, 0, 0));
    }

    #[test]
    fn product_degrees_add() {
        // trefoil HOMFLY: -v^4 + 2v^2 + v^2 z^2
        let tre = LaurentPoly2::from_terms([((4, 0), -1), ((2, 0), 2), ((2, 2), 1)]);
        let d = tre.degrees().unwrap();
        assert_eq!((d.v_spread(), d.z_max), (2, 2));
        let sq = &tre * &tre;
        let d2 = sq.degrees().unwrap();
        assert_eq!((d2.v_spread(), d2.z_max), (4, 4));
    }

    #[test]
    fn neg_inv_substitution_is_involutive() {
        let p = LaurentPoly2::from_terms([((4, 0), -1), ((2, 0), 2), ((2, 2), 1), ((-1, 3), 7)]);
        assert_eq!(p.substitute_x_neg_inv().substitute_x_neg_inv(), p);
    }

    #[test]
    fn mod2_drops_even_coefficients() {
        let p = LaurentPoly2::from_terms([((0, 0), 2), ((1, 0), 3), ((0, 1), -1)]);
        let q = p.mod2();
        assert_eq!(q.coeff(0, 0), 0);
        assert_eq!(q.coeff(1, 0), 1);
        assert_eq!(q.coeff(0, 1), 1);
    }

    #[test]
    fn canonical_text_form() {
        let p = LaurentPoly2::from_terms([((2, 0), 2), ((4, 0), -1), ((2, 2), 1)]);
        assert_eq!(p.format_with("v", "z"), "2 v^2 z^0 + 1 v^2 z^2 + -1 v^4 z^0");
    }

    #[test]
    fn one_variable_collapse() {
        let p = LaurentPoly2::from_terms([((4, 0), -1), ((2, 0), 2), ((2, 2), 1)]);
        let conway = p.eval_x_one();
        assert_eq!(conway.coeff(0), 1);
        assert_eq!(conway.coeff(2), 1);
        assert_eq!(conway.max_degree().unwrap(), 2);
    }
}
