//! Section and diagonal-extraction operators.
//!
//! `φ_n` keeps every `n`-th coefficient of a series in `z`; `Ψ_{n1,n2}` reads
//! the coefficients of `t^{s n1} z^{s n2}` off a bivariate series. Both come in
//! a brute-force form on truncated series and, for `φ_n`, a closed form on
//! [`FactoredRational`] that never truncates.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactpoly::{BivariateTruncatedSeries, IntPolynomial, TruncatedSeries};
use crate::ratfun::FactoredRational;

/// `φ_n` on a truncated series. The result has order `a.order() / n`.
pub fn phi_series(a: &TruncatedSeries, n: usize) -> TruncatedSeries {
    assert!(n >= 1, "section modulus must be positive");
    TruncatedSeries::from_coeffs(a.coeffs().iter().step_by(n).cloned().collect())
}

/// `φ_n` in closed form.
///
/// Each factor `(1 - z^k)` is lifted to `(1 - z^L)` with `L = lcm(n, k)` by
/// multiplying the numerator by `1 + z^k + ... + z^{L-k}`; since `1 - z^L` is
/// a function of `z^n`, it passes through the section and becomes
/// `(1 - z^{L/n})`. What remains is the section of a polynomial, which is
/// exact. When `gcd(n, k) == 1` the multiplier is `Q_n(z^k)` and the
/// denominator factor keeps its exponent.
pub fn phi_rational(a: &FactoredRational, n: usize) -> FactoredRational {
    assert!(n >= 1, "section modulus must be positive");
    if n == 1 {
        return a.clone();
    }
    let mut numerator = a.numerator().clone();
    let mut denominator = Vec::with_capacity(a.denominator().len());
    for &k in a.denominator() {
        let g = n.gcd(&k);
        let lift = n / g;
        if lift > 1 {
            numerator = &IntPolynomial::repunit(lift, k) * &numerator;
        }
        denominator.push(k / g);
    }
    FactoredRational::new(numerator.section(n), denominator)
}

/// `Ψ_{n1,n2}`: coefficient `s` of the result is the `t^{s n1} z^{s n2}`
/// coefficient of `a`, for every `s` the grid can answer.
pub fn psi_diagonal(a: &BivariateTruncatedSeries, n1: usize, n2: usize) -> TruncatedSeries {
    assert!(n1 >= 1 && n2 >= 1, "diagonal slopes must be positive");
    let order = (a.order_t() / n1).min(a.order_z() / n2);
    TruncatedSeries::from_coeffs((0..=order).map(|s| a.coeff(s * n1, s * n2).clone()).collect())
}

/// `Ψ_{1,n}(R(z) / (1 - t z^k))` in closed form: `φ_{n-k}(R)` for `n > k`.
/// For `n < k` only the `t^0` term lands on the diagonal, leaving the
/// constant `R(0)`, which is zero for every residue the series sums over.
/// `k == n` is rejected since `φ_0` has no meaning.
pub fn psi_single_factor(r: &FactoredRational, k: usize, n: usize) -> Result<FactoredRational> {
    assert!(n >= 1, "diagonal slope must be positive");
    match n.cmp(&k) {
        std::cmp::Ordering::Equal => Err(Error::EqualExponent(n as u32)),
        std::cmp::Ordering::Less => Ok(FactoredRational::from_polynomial(IntPolynomial::constant(
            r.numerator().coeff(0),
        ))),
        std::cmp::Ordering::Greater => Ok(phi_rational(r, n - k)),
    }
}
