use num_traits::One;

use super::{Check, Tables, Value};
use crate::combinatorics::{binomial, c_product, factorial, odd_double_factorial};
use crate::error::Result;
use crate::exact::{ExactInt, ExactRat};
use crate::ratpoly::{binom_poly, c_poly, interpolate, RatPoly};

fn neg_if(v: ExactInt, odd: bool) -> ExactInt {
    if odd {
        -v
    } else {
        v
    }
}

fn int(v: usize) -> i64 {
    v as i64
}

fn rat(v: ExactInt) -> ExactRat {
    ExactRat::from_int(v)
}

fn frac(num: ExactInt, den: ExactInt) -> ExactRat {
    ExactRat::new(num, den).expect("nonzero denominator")
}

/// `(−1)^k s(n, n−k)`.
fn diagonal(t: &Tables, n: usize, k: usize) -> ExactInt {
    neg_if(t.s1(n, n - k), k % 2 == 1)
}

/// `(−1)^{j+k}·C(2k, k−j)·S(j+k, j)`, the summand shared by the
/// odd-double-factorial sum and the two right-hand forms of the diagonal.
fn eq4_term(t: &Tables, k: usize, j: usize) -> ExactInt {
    neg_if(binomial(2 * k as u64, int(k - j)) * t.s2(j + k, j), (j + k) % 2 == 1)
}

/// `Σ_j (−1)^{j+k}·C(2k, k−j)·S(j+k, j)` for `j = 0..=k`.
pub fn eq4_sum(t: &Tables, k: usize) -> ExactInt {
    (0..=k).map(|j| eq4_term(t, k, j)).sum()
}

/// `Σ s(n,k) x^k = n!·C(x,n)`, compared coefficient-wise.
pub fn verify_eq1(t: &Tables, n: usize) -> Check {
    let lhs = RatPoly::from_ints((0..=n).map(|k| t.s1(n, k)));
    let rhs = binom_poly(n).scale(&rat(factorial(n as u64)));
    Check::equal(Value::Poly(lhs), Value::Poly(rhs))
}

/// `Σ_k k!·C(x,k)·S(n,k) = x^n`, compared coefficient-wise.
pub fn verify_eq2(t: &Tables, n: usize) -> Check {
    let lhs: RatPoly = (0..=n)
        .map(|k| binom_poly(k).scale(&rat(factorial(k as u64) * t.s2(n, k))))
        .sum();
    Check::equal(Value::Poly(lhs), Value::Poly(RatPoly::monomial(n)))
}

/// `s(n,n−k) = Σ_j (−1)^j·C(n+j−1, k+j)·C(n+k, k−j)·S(j+k, j)` for `n ≥ 1`, `k ≤ n`.
pub fn verify_gould_13_32(t: &Tables, n: usize, k: usize) -> Check {
    assert!(n >= 1 && k <= n, "GOULD_13_32 needs n >= 1 and k <= n, got n = {n}, k = {k}");
    Check::equal(Value::Int(t.s1(n, n - k)), Value::Int(gould_13_32_sum(t, n, k, false)))
}

/// The Gould 13.32 sum, optionally multiplied through by `(−1)^k`.
fn gould_13_32_sum(t: &Tables, n: usize, k: usize, times_sign_k: bool) -> ExactInt {
    (0..=k)
        .map(|j| {
            let v = binomial((n + j - 1) as u64, int(k + j))
                * binomial((n + k) as u64, int(k - j))
                * t.s2(j + k, j);
            let odd = if times_sign_k { (j + k) % 2 == 1 } else { j % 2 == 1 };
            neg_if(v, odd)
        })
        .sum()
}

/// `(n+k)!/((2k)!(n−k−1)!) · Σ_j (−1)^{j+k}·C(2k,k−j)·S(j+k,j)/(n+j)`.
pub fn eq3_factorial_form(t: &Tables, n: usize, k: usize) -> ExactRat {
    assert!(n > k, "factorial form needs n >= k + 1, got n = {n}, k = {k}");
    let prefactor = frac(
        factorial((n + k) as u64),
        factorial(2 * k as u64) * factorial((n - k - 1) as u64),
    );
    let sum: ExactRat = (0..=k)
        .map(|j| frac(eq4_term(t, k, j), ExactInt::from(n + j)))
        .sum();
    prefactor * sum
}

/// `(1/(2k)!) · Σ_j (−1)^{j+k}·C(2k,k−j)·[C(n,k)/(n+j)]·S(j+k,j)`.
pub fn eq3_product_form(t: &Tables, n: usize, k: usize) -> ExactRat {
    assert!(n > k, "product form needs n + j != 0, got n = {n}, k = {k}");
    let c = c_product(int(n), k as u64);
    let sum: ExactRat = (0..=k)
        .map(|j| frac(&c * eq4_term(t, k, j), ExactInt::from(n + j)))
        .sum();
    sum * frac(ExactInt::one(), factorial(2 * k as u64))
}

/// The three expressions for `(−1)^k s(n,n−k)`, each compared exactly, for
/// `n ≥ k+1`. `rhs` lists them in order.
pub fn verify_eq3_chain(t: &Tables, n: usize, k: usize) -> Check {
    assert!(n > k, "EQ3_CHAIN needs n >= k + 1, got n = {n}, k = {k}");
    let reference = rat(diagonal(t, n, k));
    let routes = [
        rat(gould_13_32_sum(t, n, k, true)),
        eq3_factorial_form(t, n, k),
        eq3_product_form(t, n, k),
    ];
    let holds = routes.iter().all(|r| *r == reference);
    Check {
        holds,
        lhs: Value::Rat(reference),
        rhs: Value::List(routes.into_iter().map(Value::Rat).collect()),
    }
}

/// The product form of the diagonal as a polynomial in `n`:
/// `(1/(2k)!) · Σ_j (−1)^{j+k}·C(2k,k−j)·S(j+k,j) · C(n,k)/(n+j)`, where each
/// `C(n,k)/(n+j)` is an exact division of `c_poly(k)` by `(n+j)`.
pub fn build_eq3_rhs_poly(t: &Tables, k: usize) -> Result<RatPoly> {
    let c = c_poly(k);
    let mut acc = RatPoly::zero();
    for j in 0..=k {
        let quotient = c.div_linear(&ExactRat::from(-int(j)))?;
        acc = &acc + &quotient.scale(&rat(eq4_term(t, k, j)));
    }
    Ok(acc.scale(&frac(ExactInt::one(), factorial(2 * k as u64))))
}

/// Interpolates `(n, (−1)^k s(n,n−k))` at `n = k+1..=3k+1`.
pub fn interpolate_stirling_diagonal(t: &Tables, k: usize) -> RatPoly {
    let points: Vec<_> = (k + 1..=3 * k + 1)
        .map(|n| (ExactRat::from(int(n)), rat(diagonal(t, n, k))))
        .collect();
    interpolate(&points).expect("distinct integer nodes")
}

/// Interpolated diagonal equals [`build_eq3_rhs_poly`] and has degree `2k`.
pub fn verify_eq3_poly(t: &Tables, k: usize) -> Check {
    let lhs = interpolate_stirling_diagonal(t, k);
    let rhs = build_eq3_rhs_poly(t, k).expect("n + j divides C(n,k) for 0 <= j <= k");
    let holds = lhs == rhs && lhs.degree() == Some(2 * k);
    Check { holds, lhs: Value::Poly(lhs), rhs: Value::Poly(rhs) }
}

/// Leading coefficient of the interpolated diagonal is `(2k−1)!!/(2k)!`,
/// with degree exactly `2k`.
pub fn verify_gessel_leading(t: &Tables, k: usize) -> Check {
    let p = interpolate_stirling_diagonal(t, k);
    let lead = p.leading_coeff().cloned().unwrap_or_default();
    let expected = frac(odd_double_factorial(k as u64), factorial(2 * k as u64));
    let holds = lead == expected && p.degree() == Some(2 * k);
    Check { holds, lhs: Value::Rat(lead), rhs: Value::Rat(expected) }
}

/// `(2k−1)!! = Σ_j (−1)^{j+k}·C(2k,k−j)·S(j+k,j)`.
pub fn verify_eq4(t: &Tables, k: usize) -> Check {
    Check::equal(Value::Int(odd_double_factorial(k as u64)), Value::Int(eq4_sum(t, k)))
}

/// `k! = Σ_j (−1)^{j+k}·C(2k+1,k−j)·S(j+k,j)`, and that sum equals the
/// factorial form of the diagonal at `n = k+1`. `rhs` is `[sum, form]`.
pub fn verify_gould_14_34(t: &Tables, k: usize) -> Check {
    let sum: ExactInt = (0..=k)
        .map(|j| neg_if(binomial((2 * k + 1) as u64, int(k - j)) * t.s2(j + k, j), (j + k) % 2 == 1))
        .sum();
    let at_k_plus_1 = eq3_factorial_form(t, k + 1, k);
    let lhs = rat(factorial(k as u64));
    let sum = rat(sum);
    let holds = sum == lhs && at_k_plus_1 == lhs;
    Check { holds, lhs: Value::Rat(lhs), rhs: Value::List(vec![Value::Rat(sum), Value::Rat(at_k_plus_1)]) }
}

/// `(2k−1)!! = Σ_j (−2)^{k−j}·s(k,j)`, plus the route through evaluating
/// `k!·C(x,k)` and `Σ_j s(k,j) x^j` at `x = −1/2` (each scaled by `(−2)^k`).
/// `rhs` is `[sum, (−2)^k·k!·C(−1/2,k), (−2)^k·Σ_j s(k,j)(−1/2)^j]`.
pub fn verify_callan(t: &Tables, k: usize) -> Check {
    let sum: ExactInt = (0..=k)
        .map(|j| num_traits::pow(ExactInt::from(-2), k - j) * t.s1(k, j))
        .sum();
    let minus_half = frac((-1).into(), 2.into());
    let scale = rat(num_traits::pow(ExactInt::from(-2), k));
    let via_binom = binom_poly(k).scale(&rat(factorial(k as u64))).eval(&minus_half) * &scale;
    let via_row = RatPoly::from_ints((0..=k).map(|j| t.s1(k, j))).eval(&minus_half) * &scale;
    let lhs = rat(odd_double_factorial(k as u64));
    let routes = [rat(sum), via_binom, via_row];
    let holds = routes.iter().all(|r| *r == lhs);
    Check { holds, lhs: Value::Rat(lhs), rhs: Value::List(routes.into_iter().map(Value::Rat).collect()) }
}

/// `1 = Σ_k (−2)^{n−k}·S(n,k)·(2k−1)!!`, using `(−1)!! = 1`.
pub fn verify_unit_sum(t: &Tables, n: usize) -> Check {
    let sum: ExactInt = (0..=n)
        .map(|k| num_traits::pow(ExactInt::from(-2), n - k) * t.s2(n, k) * odd_double_factorial(k as u64))
        .sum();
    Check::equal(Value::Int(ExactInt::one()), Value::Int(sum))
}

/// The derivation of the odd-double-factorial sum from the diagonal:
/// the leading coefficient of [`build_eq3_rhs_poly`] is the sum divided by
/// `(2k)!`, and [`verify_eq4`] holds exactly when both
/// [`verify_gessel_leading`] and [`verify_eq3_poly`] do.
pub fn derivation_coherence(t: &Tables, k: usize) -> Check {
    let rhs_poly = build_eq3_rhs_poly(t, k).expect("n + j divides C(n,k) for 0 <= j <= k");
    let lead = rhs_poly.leading_coeff().cloned().unwrap_or_default();
    let expected = frac(eq4_sum(t, k), factorial(2 * k as u64));
    let eq4 = verify_eq4(t, k).holds;
    let premises = verify_gessel_leading(t, k).holds && verify_eq3_poly(t, k).holds;
    Check { holds: lead == expected && eq4 == premises, lhs: Value::Rat(lead), rhs: Value::Rat(expected) }
}
