//! Univariate polynomials over the rationals, with the constructions the
//! invariant formulas consume: discriminant, homogenization, gcd, and Yun's
//! square-free decomposition.
//!
//! No irreducible factorization is performed anywhere. All per-point data is
//! recovered from square-free components refined by pairwise gcds, because
//! every geometric root of one square-free component carries identical
//! valuations, and component degrees supply geometric point counts.

use crate::error::Error;
use crate::rational::{rat_i64, Rational};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Univariate polynomial with exact rational coefficients.
///
/// Coefficients are stored in ascending degree with a nonzero leading
/// coefficient; the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        RatPoly::constant(Rational::one())
    }

    /// A constant polynomial.
    pub fn constant(value: Rational) -> Self {
        RatPoly::from_coeffs(vec![value])
    }

    /// The variable `t`.
    pub fn variable() -> Self {
        RatPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `coefficient * t^degree`.
    pub fn monomial(coefficient: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = coefficient;
        RatPoly::from_coeffs(coeffs)
    }

    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    /// Build from ascending machine-integer coefficients.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        RatPoly::from_coeffs(coeffs.iter().map(|&c| rat_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Coefficient of `t^index` (zero beyond the degree).
    pub fn coefficient(&self, index: usize) -> Rational {
        self.coeffs.get(index).cloned().unwrap_or_else(Rational::zero)
    }

    /// Ascending coefficients, trimmed.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Evaluate by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> RatPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat_i64(i as i64))
            .collect();
        RatPoly::from_coeffs(coeffs)
    }

    /// Multiply every coefficient by a scalar.
    pub fn scale(&self, factor: &Rational) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Divide by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> RatPoly {
        match self.leading_coefficient() {
            None => RatPoly::zero(),
            Some(lead) => self.scale(&lead.recip()),
        }
    }

    /// Small integer power by repeated multiplication.
    pub fn pow(&self, exponent: u32) -> RatPoly {
        let mut acc = RatPoly::one();
        for _ in 0..exponent {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient and remainder of long division.
    ///
    /// Panics if `divisor` is zero; callers guarantee nonzero divisors.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return (RatPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len() - dlen + 1];
        let lead = &divisor.coeffs[dlen - 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dlen - 1] / lead;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] = &rem[k + i] - &(dc * &c);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dlen - 1);
        (RatPoly::from_coeffs(quot), RatPoly::from_coeffs(rem))
    }

    /// Exact division; panics if the divisor does not divide `self`.
    pub fn div_exact(&self, divisor: &RatPoly) -> RatPoly {
        let (quot, rem) = self.div_rem(divisor);
        assert!(rem.is_zero(), "inexact polynomial division");
        quot
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, other: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coefficient(i) + other.coefficient(i))
            .collect();
        RatPoly::from_coeffs(coeffs)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, other: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coefficient(i) - other.coefficient(i))
            .collect();
        RatPoly::from_coeffs(coeffs)
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for RatPoly {
    type Output = RatPoly;
    fn add(self, other: RatPoly) -> RatPoly {
        &self + &other
    }
}

impl Sub for RatPoly {
    type Output = RatPoly;
    fn sub(self, other: RatPoly) -> RatPoly {
        &self - &other
    }
}

impl Mul for RatPoly {
    type Output = RatPoly;
    fn mul(self, other: RatPoly) -> RatPoly {
        &self * &other
    }
}

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

impl fmt::Display for RatPoly {
    /// Canonical rendering: descending degree, `t^2-1/2*t+3` style.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (degree, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(out, "-")?;
                }
                first = false;
            } else {
                write!(out, "{}", if c.is_negative() { "-" } else { "+" })?;
            }
            let magnitude = c.abs();
            match (degree, magnitude.is_one()) {
                (0, _) => write!(out, "{magnitude}")?,
                (1, true) => write!(out, "t")?,
                (1, false) => write!(out, "{magnitude}*t")?,
                (d, true) => write!(out, "t^{d}")?,
                (d, false) => write!(out, "{magnitude}*t^{d}")?,
            }
        }
        Ok(())
    }
}

/// Monic greatest common divisor.
///
/// `gcd(p, 0)` is `p` made monic; both inputs zero is an error.
pub fn gcd(p: &RatPoly, q: &RatPoly) -> Result<RatPoly, Error> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::BothZero);
    }
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// Square-free decomposition `unit · Π componentᵢ^multiplicityᵢ`.
///
/// Components are monic, square-free, pairwise coprime, and nonconstant;
/// each multiplicity appears at most once.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SquareFreeDecomposition {
    pub unit: Rational,
    pub parts: Vec<(RatPoly, u32)>,
}

impl SquareFreeDecomposition {
    /// Multiply the decomposition back out.
    pub fn expand(&self) -> RatPoly {
        let mut acc = RatPoly::constant(self.unit.clone());
        for (component, multiplicity) in &self.parts {
            acc = &acc * &component.pow(*multiplicity);
        }
        acc
    }
}

/// Yun's square-free decomposition (characteristic zero).
///
/// Errors on the zero polynomial. A nonzero constant decomposes into a bare
/// unit with no parts.
pub fn yun_squarefree(p: &RatPoly) -> Result<SquareFreeDecomposition, Error> {
    let Some(lead) = p.leading_coefficient() else {
        return Err(Error::ZeroPolynomial);
    };
    let unit = lead.clone();
    let f = p.monic();
    let mut parts = Vec::new();
    if f.degree() == Some(0) {
        return Ok(SquareFreeDecomposition { unit, parts });
    }
    // Yun's algorithm: peel one multiplicity level per round.
    let repeated = gcd(&f, &f.derivative())?;
    let mut b = f.div_exact(&repeated);
    let c = f.derivative().div_exact(&repeated);
    let mut d = &c - &b.derivative();
    let mut multiplicity = 1u32;
    while b.degree() != Some(0) {
        let component = gcd(&b, &d)?;
        if component.degree().is_some_and(|deg| deg >= 1) {
            parts.push((component.clone(), multiplicity));
        }
        b = b.div_exact(&component);
        let c = d.div_exact(&component);
        d = &c - &b.derivative();
        multiplicity += 1;
    }
    Ok(SquareFreeDecomposition { unit, parts })
}

/// Discriminant `Δ = f³ − 27g²` of a Weierstrass model with coefficient
/// polynomials `f`, `g`.
///
/// The normalization keeps units small; only vanishing orders of Δ enter the
/// fiber classification, and `Δ(λ⁴f, λ⁶g) = λ¹²·Δ(f, g)`.
pub fn discriminant(f: &RatPoly, g: &RatPoly) -> RatPoly {
    &f.pow(3) - &g.pow(2).scale(&rat_i64(27))
}

/// Homogeneous bivariate form `Σ coeffs[i]·t^i·s^(degree−i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivariateForm {
    /// Ascending in the power of `t`; length is `degree + 1`.
    pub coeffs: Vec<Rational>,
    pub degree: usize,
}

impl BivariateForm {
    pub fn eval(&self, t: &Rational, s: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let mut term = c.clone();
            for _ in 0..i {
                term = term * t;
            }
            for _ in i..self.degree {
                term = term * s;
            }
            acc = acc + term;
        }
        acc
    }
}

/// Homogenize `p(t)` to a form of exact degree `target_degree` in `(t, s)`.
pub fn homogenize(p: &RatPoly, target_degree: usize) -> Result<BivariateForm, Error> {
    let degree = p.degree().unwrap_or(0);
    if degree > target_degree {
        return Err(Error::TargetDegreeTooSmall { degree, target: target_degree });
    }
    let mut coeffs = vec![Rational::zero(); target_degree + 1];
    for (i, c) in p.coeffs().iter().enumerate() {
        coeffs[i] = c.clone();
    }
    Ok(BivariateForm { coeffs, degree: target_degree })
}

/// Vanishing order at `t = ∞` after homogenizing to `target_degree`:
/// the degree deficit `target_degree − degree(p)`.
///
/// Panics on the zero polynomial (its order is infinite; callers screen for
/// zero before asking).
pub fn valuation_at_infinity(p: &RatPoly, target_degree: usize) -> Result<u32, Error> {
    let degree = p.degree().expect("valuation_at_infinity on the zero polynomial");
    if degree > target_degree {
        return Err(Error::TargetDegreeTooSmall { degree, target: target_degree });
    }
    Ok((target_degree - degree) as u32)
}

/// Vanishing order of `p` along a nonconstant place polynomial: the largest
/// `k` with `place^k` dividing `p`.
///
/// Panics on zero `p` (infinite order) or a constant `place`.
pub fn valuation_of(p: &RatPoly, place: &RatPoly) -> u32 {
    assert!(!p.is_zero(), "valuation of the zero polynomial is infinite");
    assert!(
        place.degree().is_some_and(|d| d >= 1),
        "valuation along a constant is undefined"
    );
    let mut order = 0;
    let mut current = p.clone();
    loop {
        let (quot, rem) = current.div_rem(place);
        if rem.is_zero() {
            order += 1;
            current = quot;
        } else {
            return order;
        }
    }
}
