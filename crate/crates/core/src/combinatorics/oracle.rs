//! Recurrence-independent reference computations for the Stirling tables.

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{binomial, factorial};
use crate::error::{Error, Result};
use crate::exact::ExactInt;

/// Largest `n` accepted by the exhaustive set-partition enumeration.
pub const PARTITION_ENUMERATION_MAX_N: usize = 12;

/// `S(n,k)` by inclusion–exclusion: `(1/k!)·Σ_i (−1)^i·C(k,i)·(k−i)^n`.
pub fn stirling2_oracle_explicit(n: usize, k: usize) -> ExactInt {
    let mut sum = ExactInt::zero();
    for i in 0..=k {
        let term = binomial(k as u64, i as i64) * num_traits::pow(ExactInt::from(k - i), n);
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let (q, r) = sum.div_rem(&factorial(k as u64));
    assert!(r.is_zero(), "inexact division in inclusion-exclusion for S({n},{k})");
    q
}

/// Counts partitions of `{1..n}` by number of blocks, enumerating every
/// restricted growth string. Entry `k` of the result is `S(n,k)`.
pub fn set_partition_block_counts(n: usize) -> Result<Vec<u64>> {
    if n > PARTITION_ENUMERATION_MAX_N {
        return Err(Error::Domain(format!(
            "set-partition enumeration is limited to n <= {PARTITION_ENUMERATION_MAX_N}, got {n}"
        )));
    }
    let mut counts = vec![0u64; n + 1];
    if n == 0 {
        counts[0] = 1;
        return Ok(counts);
    }
    // a[i] is the block of element i; maxes[i] = max(a[0..=i])
    let mut a = vec![0usize; n];
    let mut maxes = vec![0usize; n];
    loop {
        counts[maxes[n - 1] + 1] += 1;
        // advance to the next restricted growth string
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(counts);
            }
            if a[i] <= maxes[i - 1] {
                a[i] += 1;
                maxes[i] = maxes[i - 1].max(a[i]);
                for j in i + 1..n {
                    a[j] = 0;
                    maxes[j] = maxes[i];
                }
                break;
            }
            i -= 1;
        }
    }
}

/// `S(n,k)` by exhaustive enumeration; `n` is limited to
/// [`PARTITION_ENUMERATION_MAX_N`].
pub fn stirling2_oracle_partitions(n: usize, k: usize) -> Result<ExactInt> {
    let counts = set_partition_block_counts(n)?;
    Ok(counts.get(k).copied().map(ExactInt::from).unwrap_or_default())
}

/// Coefficients of `x(x−1)⋯(x−n+1)`, constant term first; entry `k` is `s(n,k)`.
pub fn stirling1_oracle_poly(n: usize) -> Vec<ExactInt> {
    let mut coeffs = vec![ExactInt::one()];
    for i in 0..n {
        // multiply by (x − i)
        let mut next = vec![ExactInt::zero(); coeffs.len() + 1];
        for (d, c) in coeffs.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= c * i;
        }
        coeffs = next;
    }
    coeffs
}
