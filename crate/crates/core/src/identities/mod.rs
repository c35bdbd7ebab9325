//! Verifiers for the Stirling / double-factorial identities and a suite
//! runner that sweeps them over parameter ranges.
//!
//! Every verifier reads Stirling numbers from a shared [`Tables`] and returns
//! a [`Check`] carrying both sides of the comparison. Equality is exact.

mod suite;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

pub use suite::{
    rows_required, run_suite, run_suite_on, validate, Counterexample, IdentityReport, Status,
    Sweep,
};
pub use verify::*;

use crate::combinatorics::{StirlingKind, StirlingTriangle};
use crate::error::{Error, Result};
use crate::exact::{ExactInt, ExactRat};
use crate::ratpoly::RatPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// `Σ s(n,k) x^k = n!·C(x,n)` as polynomials.
    Eq1,
    /// `Σ k!·C(x,k)·S(n,k) = x^n` as polynomials.
    Eq2,
    /// `s(n,n−k)` as a signed sum of second-kind numbers.
    Gould1332,
    /// Three expressions for `(−1)^k s(n,n−k)`, checked pointwise for `n ≥ k+1`.
    Eq3Chain,
    /// The diagonal `(−1)^k s(n,n−k)` interpolated in `n` equals the
    /// `C(n,k)/(n+j)` polynomial form, degree `2k`.
    Eq3Poly,
    /// `(2k−1)!! = Σ_j (−1)^{j+k}·C(2k,k−j)·S(j+k,j)`.
    Eq4,
    /// `k! = Σ_j (−1)^{j+k}·C(2k+1,k−j)·S(j+k,j)`.
    Gould1434,
    /// `(2k−1)!! = Σ_j (−2)^{k−j}·s(k,j)`.
    Callan53,
    /// `1 = Σ_k (−2)^{n−k}·S(n,k)·(2k−1)!!`.
    UnitSum,
    /// Leading coefficient of the interpolated diagonal is `(2k−1)!!/(2k)!`.
    GesselLeading,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::Eq1,
        IdentityId::Eq2,
        IdentityId::Gould1332,
        IdentityId::Eq3Chain,
        IdentityId::Eq3Poly,
        IdentityId::Eq4,
        IdentityId::Gould1434,
        IdentityId::Callan53,
        IdentityId::UnitSum,
        IdentityId::GesselLeading,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Eq1 => "EQ1",
            IdentityId::Eq2 => "EQ2",
            IdentityId::Gould1332 => "GOULD_13_32",
            IdentityId::Eq3Chain => "EQ3_CHAIN",
            IdentityId::Eq3Poly => "EQ3_POLY",
            IdentityId::Eq4 => "EQ4",
            IdentityId::Gould1434 => "GOULD_14_34",
            IdentityId::Callan53 => "CALLAN_5_3",
            IdentityId::UnitSum => "UNIT_SUM",
            IdentityId::GesselLeading => "GESSEL_LEADING",
        }
    }

    /// Names of the swept parameters, in sort order.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            IdentityId::Eq1 | IdentityId::Eq2 | IdentityId::UnitSum => &["n"],
            IdentityId::Gould1332 | IdentityId::Eq3Chain => &["n", "k"],
            _ => &["k"],
        }
    }

    /// Highest `(first-kind, second-kind)` rows read at one parameter point.
    pub fn rows_needed(self, params: &[usize]) -> (usize, usize) {
        match (self, params) {
            (IdentityId::Eq1, &[n]) => (n, 0),
            (IdentityId::Eq2 | IdentityId::UnitSum, &[n]) => (0, n),
            (IdentityId::Gould1332 | IdentityId::Eq3Chain, &[n, k]) => (n, 2 * k),
            (IdentityId::Eq3Poly, &[k]) => (3 * k + 1, 2 * k),
            (IdentityId::GesselLeading, &[k]) => (3 * k + 1, 0),
            (IdentityId::Eq4 | IdentityId::Gould1434, &[k]) => (0, 2 * k),
            (IdentityId::Callan53, &[k]) => (k, 0),
            _ => panic!("{self} takes parameters {:?}, got {params:?}", self.params()),
        }
    }

    /// Runs this identity's verifier at one parameter point.
    pub fn check(self, t: &Tables, params: &[usize]) -> Check {
        match (self, params) {
            (IdentityId::Eq1, &[n]) => verify_eq1(t, n),
            (IdentityId::Eq2, &[n]) => verify_eq2(t, n),
            (IdentityId::Gould1332, &[n, k]) => verify_gould_13_32(t, n, k),
            (IdentityId::Eq3Chain, &[n, k]) => verify_eq3_chain(t, n, k),
            (IdentityId::Eq3Poly, &[k]) => verify_eq3_poly(t, k),
            (IdentityId::Eq4, &[k]) => verify_eq4(t, k),
            (IdentityId::Gould1434, &[k]) => verify_gould_14_34(t, k),
            (IdentityId::Callan53, &[k]) => verify_callan(t, k),
            (IdentityId::UnitSum, &[n]) => verify_unit_sum(t, n),
            (IdentityId::GesselLeading, &[k]) => verify_gessel_leading(t, k),
            _ => panic!("{self} takes parameters {:?}, got {params:?}", self.params()),
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Case-insensitive; `-` and `_` are interchangeable (`eq3-chain`, `EQ3_CHAIN`).
impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == wanted)
            .ok_or_else(|| Error::Parse(format!("unknown identity id {s:?}")))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Both Stirling triangles, shared read-only by the verifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tables {
    first: StirlingTriangle,
    second: StirlingTriangle,
}

impl Default for Tables {
    fn default() -> Self {
        Self::new()
    }
}

impl Tables {
    pub fn new() -> Self {
        Self {
            first: StirlingTriangle::new(StirlingKind::FirstSigned),
            second: StirlingTriangle::new(StirlingKind::Second),
        }
    }

    pub fn with_rows(first: usize, second: usize) -> Self {
        let mut t = Self::new();
        t.ensure_rows(first, second);
        t
    }

    pub fn ensure_rows(&mut self, first: usize, second: usize) {
        self.first.ensure_rows(first);
        self.second.ensure_rows(second);
    }

    /// Signed `s(n,k)`.
    pub fn s1(&self, n: usize, k: usize) -> ExactInt {
        self.first.get(n, k)
    }

    /// `S(n,k)`.
    pub fn s2(&self, n: usize, k: usize) -> ExactInt {
        self.second.get(n, k)
    }

    pub fn triangle(&self, kind: StirlingKind) -> &StirlingTriangle {
        match kind {
            StirlingKind::FirstSigned => &self.first,
            StirlingKind::Second => &self.second,
        }
    }

    pub fn triangle_mut(&mut self, kind: StirlingKind) -> &mut StirlingTriangle {
        match kind {
            StirlingKind::FirstSigned => &mut self.first,
            StirlingKind::Second => &mut self.second,
        }
    }
}

/// One side of a comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(ExactInt),
    Rat(ExactRat),
    Poly(RatPoly),
    /// Several routes to the same quantity.
    List(Vec<Value>),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Rat(v) => write!(f, "{v}"),
            Value::Poly(p) => write!(f, "[{p}]"),
            Value::List(vs) => {
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" | ")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
        }
    }
}

/// Outcome of one verifier at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub holds: bool,
    pub lhs: Value,
    pub rhs: Value,
}

impl Check {
    fn equal(lhs: Value, rhs: Value) -> Self {
        Self { holds: lhs == rhs, lhs, rhs }
    }
}
