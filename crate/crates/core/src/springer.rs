//! Closed-form Poincaré series of the covariants of a binary `d`-form.
//!
//! Partial fractions in `t` split
//!
//! ```text
//! (1 + z) / prod_{k=0}^{d} (1 - t z^{2k}) = sum_{k=0}^{d} R_k(z) / (1 - t z^{2k})
//! R_k(z) = (-1)^k z^{k(k+1)} (1 + z) / ((z^2; z^2)_k (z^2; z^2)_{d-k})
//! ```
//!
//! and extracting the `(t z^d)^n` diagonal turns each term with `2k < d` into
//! the section `φ_{d-2k}(R_k)`. Terms with `2k >= d` contribute nothing.

use num_bigint::BigInt;

use crate::combinatorics::covariant_generating_grid;
use crate::error::{Error, Result};
use crate::exactpoly::{BivariateTruncatedSeries, IntPolynomial, TruncatedSeries};
use crate::ratfun::FactoredRational;
use crate::section::{phi_rational, psi_diagonal};

/// One summand of the partial-fraction split.
#[derive(Clone, Debug)]
pub struct ResidueTerm {
    pub k: usize,
    /// `R_k(z)` with the sign carried in the numerator.
    pub value: FactoredRational,
    /// `d - 2k`; only positive moduli enter the series.
    pub section_modulus: i64,
}

/// Exponents of `(z^2; z^2)_k = (1 - z^2)(1 - z^4)...(1 - z^{2k})`.
pub fn q_pochhammer_z2(k: usize) -> Vec<usize> {
    (1..=k).map(|i| 2 * i).collect()
}

pub fn residue(d: usize, k: usize) -> ResidueTerm {
    assert!(d >= 1 && k <= d, "residue index must satisfy 0 <= k <= d");
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let numerator = IntPolynomial::from_i64s(&[sign, sign]).shift(k * (k + 1));
    let mut denominator = q_pochhammer_z2(k);
    denominator.extend(q_pochhammer_z2(d - k));
    ResidueTerm {
        k,
        value: FactoredRational::new(numerator, denominator),
        section_modulus: d as i64 - 2 * k as i64,
    }
}

/// All residues `R_0..=R_d`.
pub fn residues(d: usize) -> Vec<FactoredRational> {
    (0..=d).map(|k| residue(d, k).value).collect()
}

/// Rebuilds the bivariate grid of `(1 + z) / prod (1 - t z^{2k})` from the
/// residues and compares it entry by entry with the direct expansion.
pub fn partial_fraction_check(d: usize, orders: (usize, usize)) -> bool {
    partial_fraction_check_with(d, orders, &residues(d))
}

/// [`partial_fraction_check`] with caller-supplied residues `R_0..=R_d`.
pub fn partial_fraction_check_with(
    d: usize,
    (order_t, order_z): (usize, usize),
    residues: &[FactoredRational],
) -> bool {
    if residues.len() != d + 1 {
        return false;
    }
    let direct = covariant_generating_grid(d, order_t, order_z);
    let mut rebuilt = BivariateTruncatedSeries::zero(order_t, order_z);
    for (k, r) in residues.iter().enumerate() {
        let term = BivariateTruncatedSeries::from_series_over_linear_t(&r.expand(order_z), 2 * k, order_t, order_z);
        rebuilt = rebuilt.add(&term).expect("grids share orders");
    }
    rebuilt == direct
}

/// The sectioned residues `φ_{d-2k}(R_k)` for `0 <= k < d/2`, unsummed.
pub fn sectioned_terms(d: usize) -> Vec<FactoredRational> {
    (0..)
        .take_while(|k| 2 * k < d)
        .map(|k| {
            let r = residue(d, k);
            phi_rational(&r.value, r.section_modulus as usize)
        })
        .collect()
}

/// `P_d(z)` as a normalized [`FactoredRational`].
pub fn poincare_series(d: u32) -> Result<FactoredRational> {
    if d < 1 {
        return Err(Error::DegreeOutOfRange { d, max: None });
    }
    let terms = sectioned_terms(d as usize);
    Ok(FactoredRational::sum(&terms).normalize())
}

/// First `order + 1` coefficients of `P_d(z)` by diagonal extraction from
/// the truncated bivariate generating function.
pub fn poincare_series_via_psi(d: usize, order: usize) -> TruncatedSeries {
    assert!(d >= 1, "form degree must be positive");
    let grid = covariant_generating_grid(d, order, d * order);
    psi_diagonal(&grid, 1, d)
}

/// Coefficient sign pattern check used by the properties below.
pub fn all_nonnegative(s: &TruncatedSeries) -> bool {
    s.coeffs().iter().all(|c| c >= &BigInt::ZERO)
}
