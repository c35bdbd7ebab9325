//! Dense univariate polynomials with exact rational coefficients.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::exact::{ExactInt, ExactRat};

/// Coefficients are stored constant term first with no trailing zeros, so
/// the zero polynomial is the empty vector and derived equality is exact.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<ExactRat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<ExactRat>) -> Self {
        while coeffs.last().is_some_and(ExactRat::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints<I: IntoIterator<Item = T>, T: Into<ExactInt>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(|c| ExactRat::from_int(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ExactRat::one())
    }

    pub fn constant(c: ExactRat) -> Self {
        Self::new(vec![c])
    }

    /// `x^d`.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![ExactRat::zero(); d + 1];
        coeffs[d] = ExactRat::one();
        Self { coeffs }
    }

    /// `x − r`.
    pub fn linear(r: &ExactRat) -> Self {
        Self::new(vec![-r, ExactRat::one()])
    }

    pub fn coeffs(&self) -> &[ExactRat] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> ExactRat {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial, which orders below every `Some(d)`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Result<&ExactRat> {
        self.coeffs.last().ok_or(Error::ZeroPolynomial)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &ExactRat) -> ExactRat {
        self.coeffs.iter().rev().fold(ExactRat::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &ExactRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Quotient of `self / (x − r)` by synthetic division. Fails unless `r`
    /// is a root.
    pub fn div_linear(&self, r: &ExactRat) -> Result<Self> {
        let Some(deg) = self.degree() else {
            return Ok(Self::zero());
        };
        let mut quotient = vec![ExactRat::zero(); deg];
        let mut carry = ExactRat::zero();
        for i in (0..=deg).rev() {
            let value = &self.coeffs[i] + carry * r;
            if i == 0 {
                if !value.is_zero() {
                    return Err(Error::NotARoot(format!("polynomial at {r} leaves remainder {value}")));
                }
                break;
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        Ok(Self::new(quotient))
    }
}

impl fmt::Display for RatPoly {
    /// Coefficients constant-first as canonical `num/den`, space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly[{self}]")
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: RatPoly) -> RatPoly {
        &self + &rhs
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        self + &-rhs
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![ExactRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Mul for RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: RatPoly) -> RatPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for RatPoly {
    fn sum<I: Iterator<Item = RatPoly>>(iter: I) -> Self {
        iter.fold(RatPoly::zero(), |acc, p| &acc + &p)
    }
}

impl std::iter::Product for RatPoly {
    fn product<I: Iterator<Item = RatPoly>>(iter: I) -> Self {
        iter.fold(RatPoly::one(), |acc, p| &acc * &p)
    }
}

/// Lagrange interpolation through `points`.
///
/// Each basis numerator is the node polynomial `Π (x − x_i)` with one linear
/// factor divided out exactly, weighted by `y_i / Π_{j≠i} (x_i − x_j)`.
pub fn interpolate(points: &[(ExactRat, ExactRat)]) -> Result<RatPoly> {
    if points.is_empty() {
        return Err(Error::NoPoints);
    }
    let mut seen = HashSet::with_capacity(points.len());
    for (x, _) in points {
        if !seen.insert(x) {
            return Err(Error::DuplicateAbscissa(x.to_string()));
        }
    }
    let nodes: RatPoly = points.iter().map(|(x, _)| RatPoly::linear(x)).product();
    // accumulate Σ basis_i·weight_i as an integer vector over one denominator
    let mut acc = vec![ExactInt::zero(); points.len()];
    let mut acc_den = ExactInt::one();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let basis = nodes.div_linear(xi)?;
        let denom: ExactRat = points
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, (xj, _))| xi - xj)
            .product();
        let weight = yi.checked_div(&denom)?;
        let basis_den = basis.coeffs().iter().fold(ExactInt::one(), |l, c| l.lcm(c.denom()));
        let term_den = weight.denom() * &basis_den;
        let common = acc_den.lcm(&term_den);
        let acc_scale = &common / &acc_den;
        let term_scale = (&common / &term_den) * weight.numer();
        for (a, c) in acc.iter_mut().zip(basis.coeffs()) {
            let c_int = c.numer() * (&basis_den / c.denom());
            *a = &*a * &acc_scale + c_int * &term_scale;
        }
        if !acc_scale.is_one() {
            for a in acc.iter_mut().skip(basis.coeffs().len()) {
                *a *= &acc_scale;
            }
        }
        acc_den = common;
    }
    Ok(RatPoly::new(
        acc.into_iter().map(|a| ExactRat::new(a, acc_den.clone()).expect("positive denominator")).collect(),
    ))
}

/// `x(x−1)⋯(x−n+1)`.
pub fn falling_factorial_poly(n: usize) -> RatPoly {
    (0..n).map(|i| RatPoly::linear(&ExactRat::from_int(i))).product()
}

/// `C(x,n) = x(x−1)⋯(x−n+1)/n!`.
pub fn binom_poly(n: usize) -> RatPoly {
    let inv = ExactRat::new(ExactInt::one(), factorial(n as u64)).expect("n! > 0");
    falling_factorial_poly(n).scale(&inv)
}

/// `(x−k)(x−k+1)⋯(x+k)`: monic of degree `2k+1`.
pub fn c_poly(k: usize) -> RatPoly {
    let k = k as i64;
    (-k..=k).map(|i| RatPoly::linear(&ExactRat::from_int(-i))).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> ExactRat {
        s.parse().unwrap()
    }

    fn p(cs: &[&str]) -> RatPoly {
        RatPoly::new(cs.iter().map(|s| r(s)).collect())
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&["1", "0", "0"]), p(&["1"]));
        assert!(p(&["0"]).is_zero());
        assert_eq!(RatPoly::zero().degree(), None);
        assert!(RatPoly::zero().degree() < Some(0));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&["1", "0", "1"]).eval(&r("2")), r("5"));
        assert_eq!(RatPoly::zero().eval(&r("-7/3")), r("0"));
        assert_eq!(falling_factorial_poly(2).eval(&r("-1/2")), r("3/4"));
    }

    #[test]
    fn arithmetic_examples() {
        let xm1 = p(&["-1", "1"]);
        let xp1 = p(&["1", "1"]);
        assert_eq!(&xm1 * &xp1, p(&["-1", "0", "1"]));
        assert_eq!(&xm1 * &RatPoly::zero(), RatPoly::zero());
        let x = RatPoly::monomial(1);
        let xm2 = p(&["-2", "1"]);
        assert_eq!(&(&x * &xm1) * &xm2, p(&["0", "2", "-3", "1"]));
        assert_eq!(&xm1 - &xm1, RatPoly::zero());
        assert_eq!(&xm1 + &xp1, p(&["0", "2"]));
        assert_eq!(xm1.scale(&r("1/2")), p(&["-1/2", "1/2"]));
        assert_eq!(xm1.scale(&r("0")), RatPoly::zero());
    }

    #[test]
    fn div_linear_examples() {
        assert_eq!(p(&["-1", "0", "1"]).div_linear(&r("-1")).unwrap(), p(&["-1", "1"]));
        assert_eq!(c_poly(1).div_linear(&r("0")).unwrap(), p(&["-1", "0", "1"]));
        // (x−2)(x−1)x(x+2)
        let expected: RatPoly = [2, 1, 0, -2].iter().map(|&a| RatPoly::linear(&ExactRat::from(a))).product();
        assert_eq!(c_poly(2).div_linear(&r("-1")).unwrap(), expected);
        assert!(matches!(p(&["1", "0", "1"]).div_linear(&r("1")), Err(Error::NotARoot(_))));
        assert_eq!(RatPoly::zero().div_linear(&r("3")).unwrap(), RatPoly::zero());
    }

    #[test]
    fn interpolate_examples() {
        assert_eq!(interpolate(&[(r("0"), r("7/2"))]).unwrap(), p(&["7/2"]));
        let pts = [(r("0"), r("1")), (r("1"), r("2")), (r("2"), r("5"))];
        assert_eq!(interpolate(&pts).unwrap(), p(&["1", "0", "1"]));
        let pts: Vec<_> = (2..=4).map(|n| (ExactRat::from(n), ExactRat::from(n * (n - 1) / 2))).collect();
        assert_eq!(interpolate(&pts).unwrap(), p(&["0", "-1/2", "1/2"]));
        assert!(matches!(interpolate(&[]), Err(Error::NoPoints)));
        let dup = [(r("1"), r("1")), (r("2/2"), r("3"))];
        assert!(matches!(interpolate(&dup), Err(Error::DuplicateAbscissa(_))));
    }

    #[test]
    fn leading_coeff_and_degree() {
        let b2 = p(&["0", "-1/2", "1/2"]);
        assert_eq!(b2.leading_coeff().unwrap(), &r("1/2"));
        assert_eq!(b2.degree(), Some(2));
        assert_eq!(p(&["7"]).leading_coeff().unwrap(), &r("7"));
        assert_eq!(p(&["7"]).degree(), Some(0));
        assert_eq!(c_poly(3).leading_coeff().unwrap(), &r("1"));
        assert_eq!(c_poly(3).degree(), Some(7));
        assert_eq!(RatPoly::zero().leading_coeff(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn constructors() {
        assert_eq!(falling_factorial_poly(0), RatPoly::one());
        assert_eq!(falling_factorial_poly(2), p(&["0", "-1", "1"]));
        assert_eq!(falling_factorial_poly(3), p(&["0", "2", "-3", "1"]));
        assert_eq!(binom_poly(0), RatPoly::one());
        assert_eq!(binom_poly(2), p(&["0", "-1/2", "1/2"]));
        assert_eq!(binom_poly(2).eval(&r("4")), r("6"));
        assert_eq!(c_poly(0), p(&["0", "1"]));
        assert_eq!(c_poly(1), p(&["0", "-1", "0", "1"]));
        assert_eq!(c_poly(1).eval(&r("3")), r("24"));
    }

    #[test]
    fn display_is_constant_first() {
        assert_eq!(binom_poly(2).to_string(), "0/1 -1/2 1/2");
        assert_eq!(RatPoly::zero().to_string(), "");
    }
}
