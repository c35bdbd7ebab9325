//! Arbitrary-precision integers and canonical rationals.
//!
//! [`ExactInt`] is a plain alias for [`num_bigint::BigInt`]. [`ExactRat`] keeps
//! its numerator and denominator reduced with a positive denominator at all
//! times, so derived `PartialEq`/`Hash` are exact value equality.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type ExactInt = BigInt;

/// Non-negative gcd; `gcd(a, 0) == |a|`.
pub fn gcd(a: &ExactInt, b: &ExactInt) -> ExactInt {
    a.gcd(b)
}

/// Exact quotient `a / b`, or `None` if `b` is zero or does not divide `a`.
pub fn exact_div(a: &ExactInt, b: &ExactInt) -> Option<ExactInt> {
    if b.is_zero() {
        return None;
    }
    let (q, r) = a.div_rem(b);
    r.is_zero().then_some(q)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactRat {
    num: ExactInt,
    den: ExactInt,
}

/// Canonical `num/den`: positive denominator, lowest terms, zero as `0/1`.
pub fn rat_normalize(num: ExactInt, den: ExactInt) -> Result<ExactRat> {
    ExactRat::new(num, den)
}

/// `base^e` for any integer exponent; `0^e` with `e < 0` is an error.
pub fn rat_pow_int(base: &ExactRat, e: i64) -> Result<ExactRat> {
    base.pow(e)
}

impl ExactRat {
    pub fn new(num: ExactInt, den: ExactInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(mut num: ExactInt, mut den: ExactInt) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if den.is_one() {
            return Self { num, den };
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self { num: ExactInt::zero(), den: ExactInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(ExactInt::one())
    }

    pub fn from_int(n: impl Into<ExactInt>) -> Self {
        Self { num: n.into(), den: ExactInt::one() }
    }

    pub fn numer(&self) -> &ExactInt {
        &self.num
    }

    pub fn denom(&self) -> &ExactInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// The integer value, if the denominator is 1.
    pub fn to_integer(&self) -> Option<ExactInt> {
        self.is_integer().then(|| self.num.clone())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let e = u32::try_from(e.unsigned_abs())
            .map_err(|_| Error::Domain(format!("exponent {e} too large")))?;
        // already reduced, so powers of num and den stay coprime
        Ok(Self { num: num_traits::pow(base.num, e as usize), den: num_traits::pow(base.den, e as usize) })
    }
}

impl Default for ExactRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<ExactInt> for ExactRat {
    fn from(n: ExactInt) -> Self {
        Self::from_int(n)
    }
}

impl From<&ExactInt> for ExactRat {
    fn from(n: &ExactInt) -> Self {
        Self::from_int(n.clone())
    }
}

impl From<i64> for ExactRat {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for ExactRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for ExactRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `"a/b"` (any sign, any reduction) or a bare integer `"a"`.
impl FromStr for ExactRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| t.trim().parse::<ExactInt>().map_err(|_| Error::Parse(s.to_string()));
        match s.split_once('/') {
            Some((n, d)) => Self::new(parse(n)?, parse(d)?),
            None => Ok(Self::from_int(parse(s)?)),
        }
    }
}

impl Serialize for ExactRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl PartialOrd for ExactRat {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRat {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl Neg for ExactRat {
    type Output = ExactRat;
    fn neg(self) -> ExactRat {
        ExactRat { num: -self.num, den: self.den }
    }
}

impl Neg for &ExactRat {
    type Output = ExactRat;
    fn neg(self) -> ExactRat {
        -self.clone()
    }
}

fn add_ref(a: &ExactRat, b: &ExactRat) -> ExactRat {
    if a.den.is_one() && b.den.is_one() {
        return ExactRat::from_int(&a.num + &b.num);
    }
    if a.den == b.den {
        return ExactRat::reduce(&a.num + &b.num, a.den.clone());
    }
    ExactRat::reduce(&a.num * &b.den + &b.num * &a.den, &a.den * &b.den)
}

fn sub_ref(a: &ExactRat, b: &ExactRat) -> ExactRat {
    add_ref(a, &-b)
}

fn mul_ref(a: &ExactRat, b: &ExactRat) -> ExactRat {
    if a.is_zero() || b.is_zero() {
        return ExactRat::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return ExactRat::from_int(&a.num * &b.num);
    }
    // cross-cancel first to keep intermediates small
    let g1 = a.num.gcd(&b.den);
    let g2 = b.num.gcd(&a.den);
    ExactRat {
        num: (&a.num / &g1) * (&b.num / &g2),
        den: (&a.den / &g2) * (&b.den / &g1),
    }
}

fn div_ref(a: &ExactRat, b: &ExactRat) -> ExactRat {
    a.checked_div(b).expect("ExactRat division by zero")
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $f:ident) => {
        impl $trait<&ExactRat> for &ExactRat {
            type Output = ExactRat;
            fn $method(self, rhs: &ExactRat) -> ExactRat {
                $f(self, rhs)
            }
        }
        impl $trait<ExactRat> for &ExactRat {
            type Output = ExactRat;
            fn $method(self, rhs: ExactRat) -> ExactRat {
                $f(self, &rhs)
            }
        }
        impl $trait<&ExactRat> for ExactRat {
            type Output = ExactRat;
            fn $method(self, rhs: &ExactRat) -> ExactRat {
                $f(&self, rhs)
            }
        }
        impl $trait<ExactRat> for ExactRat {
            type Output = ExactRat;
            fn $method(self, rhs: ExactRat) -> ExactRat {
                $f(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl Sum for ExactRat {
    fn sum<I: Iterator<Item = ExactRat>>(iter: I) -> Self {
        iter.fold(ExactRat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a ExactRat> for ExactRat {
    fn sum<I: Iterator<Item = &'a ExactRat>>(iter: I) -> Self {
        iter.fold(ExactRat::zero(), |acc, x| acc + x)
    }
}

impl Product for ExactRat {
    fn product<I: Iterator<Item = ExactRat>>(iter: I) -> Self {
        iter.fold(ExactRat::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> ExactRat {
        ExactRat::new(n.into(), d.into()).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let half = rat_normalize(2.into(), 4.into()).unwrap();
        assert_eq!((half.numer().clone(), half.denom().clone()), (1.into(), 2.into()));
        assert_eq!(rat_normalize(3.into(), (-6).into()).unwrap().to_string(), "-1/2");
        assert_eq!(rat_normalize(0.into(), 7.into()).unwrap().to_string(), "0/1");
        assert_eq!(rat_normalize(0.into(), (-7).into()).unwrap().to_string(), "0/1");
        assert_eq!(rat_normalize(1.into(), 0.into()), Err(Error::DivisionByZero));
        assert_eq!(Error::DivisionByZero.to_string(), "division by zero");
    }

    #[test]
    fn pow_examples() {
        assert_eq!(rat_pow_int(&r(-2, 1), 3).unwrap(), r(-8, 1));
        assert_eq!(rat_pow_int(&r(1, 2), 0).unwrap(), r(1, 1));
        assert_eq!(rat_pow_int(&r(-1, 2), 2).unwrap(), r(1, 4));
        assert_eq!(rat_pow_int(&r(-2, 3), -3).unwrap(), r(-27, 8));
        assert_eq!(rat_pow_int(&ExactRat::zero(), 0).unwrap(), ExactRat::one());
        assert_eq!(rat_pow_int(&ExactRat::zero(), -1), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_of_zero_is_abs() {
        assert_eq!(gcd(&(-12).into(), &0.into()), 12.into());
        assert_eq!(gcd(&0.into(), &0.into()), 0.into());
    }

    #[test]
    fn exact_div_rejects_remainders() {
        assert_eq!(exact_div(&12.into(), &(-4).into()), Some((-3).into()));
        assert_eq!(exact_div(&13.into(), &4.into()), None);
        assert_eq!(exact_div(&13.into(), &0.into()), None);
    }

    #[test]
    fn factorial_120_is_representable() {
        let f: ExactInt = (1..=120u32).map(ExactInt::from).product();
        let s = f.to_string();
        assert_eq!(s.len(), 199);
        assert!(s.starts_with("668950291344912705758811805409"));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("-1/2".parse::<ExactRat>().unwrap(), r(-1, 2));
        assert_eq!("4/-8".parse::<ExactRat>().unwrap(), r(-1, 2));
        assert_eq!("3".parse::<ExactRat>().unwrap().to_string(), "3/1");
        assert!("1/0".parse::<ExactRat>().is_err());
        assert!("x".parse::<ExactRat>().is_err());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(r(1, 2) + r(1, 3), r(5, 6));
        assert_eq!(r(1, 2) - r(1, 2), ExactRat::zero());
        assert_eq!(r(2, 3) * r(3, 4), r(1, 2));
        assert_eq!(r(2, 3) / r(-4, 9), r(-3, 2));
        assert_eq!(r(1, 2).checked_div(&ExactRat::zero()), Err(Error::DivisionByZero));
        assert!(r(-1, 2) < r(1, 3));
    }
}
