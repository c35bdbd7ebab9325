//! Exact factorials, binomials, the product `C(n,k)`, and Stirling numbers.

mod oracle;
mod stirling;

pub use oracle::{
    set_partition_block_counts, stirling1_oracle_poly, stirling2_oracle_explicit,
    stirling2_oracle_partitions, PARTITION_ENUMERATION_MAX_N,
};
pub use stirling::{stirling1, stirling2, StirlingKind, StirlingTriangle};

use num_traits::{One, Zero};

use crate::exact::{ExactInt, ExactRat};

/// `n! = 1·2·⋯·n`, with `0! = 1`.
pub fn factorial(n: u64) -> ExactInt {
    (2..=n).map(ExactInt::from).product()
}

/// `(2k−1)!! = 1·3·5⋯(2k−1)`. The empty product gives `(−1)!! = 1` at `k = 0`.
pub fn odd_double_factorial(k: u64) -> ExactInt {
    (1..=k).map(|i| ExactInt::from(2 * i - 1)).product()
}

/// `n` choose `k`; zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> ExactInt {
    let Ok(k) = u64::try_from(k) else {
        return ExactInt::zero();
    };
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    // each prefix product i ↦ C(n−k+i, i) is an integer, so the division is exact
    let mut acc = ExactInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Generalized binomial `x(x−1)⋯(x−k+1)/k!` for rational `x`.
pub fn binomial_general(x: &ExactRat, k: u64) -> ExactRat {
    let mut acc = ExactRat::one();
    for i in 0..k {
        acc = acc * (x - ExactRat::from_int(i));
    }
    acc * ExactRat::new(ExactInt::one(), factorial(k)).expect("k! > 0")
}

/// `C(n,k) = (n−k)(n−k+1)⋯(n+k)`, the product of `2k+1` consecutive integers.
pub fn c_product(n: i64, k: u64) -> ExactInt {
    let n = ExactInt::from(n);
    let k = ExactInt::from(k);
    let mut acc = ExactInt::one();
    let mut f = &n - &k;
    let end = &n + &k;
    while f <= end {
        if f.is_zero() {
            return ExactInt::zero();
        }
        acc *= &f;
        f += 1;
    }
    acc
}
