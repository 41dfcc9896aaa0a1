//! Counting oracles for `dim (C_d)_n` that never touch rational functions.
//!
//! A monomial `v_0^{a_0} ... v_d^{a_d}` of degree `n` in `S^n(V_d)` has weight
//! `dn - 2m` where `m = a_1 + 2 a_2 + ... + d a_d`. Counting monomials by `m`
//! gives the character; the zero-weight and weight-one multiplicities give the
//! dimension directly, and first differences of the character give the
//! irreducible multiplicities.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{BivariateTruncatedSeries, IntPolynomial, LaurentPolynomial};
use crate::ratfun::{big_to_number, number_to_big};
use crate::springer;

/// Number of `(a_0, ..., a_d)` with `sum a_i = n` and `sum i a_i = m`, for
/// every `m` in `0..=max_m`.
///
/// `table[j][w]` counts multisets of `j` parts from `1..=d` summing to `w`;
/// `a_0` absorbs the remaining `n - j`.
fn weight_counts(d: usize, n: usize, max_m: usize) -> Vec<BigUint> {
    let mut table = vec![vec![BigUint::zero(); max_m + 1]; n + 1];
    table[0][0] = BigUint::from(1u32);
    for part in 1..=d {
        for j in 1..=n {
            for w in part..=max_m {
                let prev = table[j - 1][w - part].clone();
                if !prev.is_zero() {
                    table[j][w] += prev;
                }
            }
        }
    }
    (0..=max_m).map(|w| table.iter().map(|row| &row[w]).sum()).collect()
}

/// Solutions of `a_1 + 2 a_2 + ... + d a_d = m` with `a_0 + ... + a_d = n`.
pub fn omega(d: usize, n: usize, m: i64) -> BigUint {
    assert!(d >= 1, "form degree must be positive");
    if m < 0 || m as u128 > (d as u128) * (n as u128) {
        return BigUint::zero();
    }
    let m = m as usize;
    weight_counts(d, n, m).swap_remove(m)
}

/// Sum of the zero-weight and weight-one multiplicities of `S^n(V_d)`.
/// A half-integral target contributes nothing.
pub fn dim_theorem1(d: usize, n: usize) -> BigUint {
    let dn = (d * n) as i64;
    let zero_weight = if dn % 2 == 0 {
        omega(d, n, dn / 2)
    } else {
        BigUint::zero()
    };
    let weight_one = if dn % 2 == 1 {
        omega(d, n, (dn - 1) / 2)
    } else {
        BigUint::zero()
    };
    zero_weight + weight_one
}

/// Grid of `(1 + z) / prod_{k=0}^{d} (1 - t z^{2k})` through `t^nt z^nz`.
pub fn covariant_generating_grid(d: usize, order_t: usize, order_z: usize) -> BivariateTruncatedSeries {
    let mut grid = BivariateTruncatedSeries::from_polynomial_in_z(&IntPolynomial::from_i64s(&[1, 1]), order_t, order_z);
    for k in 0..=d {
        grid.mul_inverse_binomial(1, 2 * k);
    }
    grid
}

/// Coefficient of `(t z^d)^n` in `(1 + z) / prod_{k=0}^{d} (1 - t z^{2k})`.
pub fn dim_theorem2(d: usize, n: usize) -> BigUint {
    assert!(d >= 1, "form degree must be positive");
    let grid = covariant_generating_grid(d, n, d * n);
    to_unsigned(grid.coeff(n, d * n))
}

fn dims_theorem2(d: usize, n_max: usize) -> Vec<BigUint> {
    let grid = covariant_generating_grid(d, n_max, d * n_max);
    (0..=n_max).map(|n| to_unsigned(grid.coeff(n, d * n))).collect()
}

fn to_unsigned(c: &BigInt) -> BigUint {
    c.to_biguint().expect("counting coefficient is nonnegative")
}

/// Character of `S^n(V_d)` as a Laurent polynomial in `q`.
pub fn character(d: usize, n: usize) -> LaurentPolynomial {
    assert!(d >= 1, "form degree must be positive");
    let dn = d * n;
    let counts = weight_counts(d, n, dn);
    LaurentPolynomial::from_terms(
        counts
            .into_iter()
            .enumerate()
            .map(|(m, c)| (dn as i64 - 2 * m as i64, BigInt::from(c))),
    )
}

fn gamma_from_character(ch: &LaurentPolynomial, j: i64) -> BigInt {
    ch.coeff(j) - ch.coeff(j + 2)
}

/// Multiplicity of `V_j` in `S^n(V_d)`, by differencing the character.
pub fn gamma(d: usize, n: usize, j: usize) -> BigInt {
    assert!(j <= d * n, "order j must lie in 0..=dn");
    gamma_from_character(&character(d, n), j as i64)
}

/// `sum_j gamma(d, n, j)`, the number of irreducible summands.
pub fn dim_lemma1(d: usize, n: usize) -> BigUint {
    let ch = character(d, n);
    let total: BigInt = (0..=(d * n) as i64).map(|j| gamma_from_character(&ch, j)).sum();
    to_unsigned(&total)
}

/// Which route produced a [`DimTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    /// Weight-multiplicity dynamic programming.
    #[serde(rename = "THEOREM1_DP")]
    Theorem1Dp,
    /// Coefficient extraction from the bivariate generating function.
    #[serde(rename = "THEOREM2_GF")]
    Theorem2Gf,
    /// Expansion of the closed-form series.
    #[serde(rename = "SPRINGER_EXPAND")]
    SpringerExpand,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Theorem1Dp => "THEOREM1_DP",
            Method::Theorem2Gf => "THEOREM2_GF",
            Method::SpringerExpand => "SPRINGER_EXPAND",
        }
    }
}

/// `dim (C_d)_n` for `n = 0..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimTable {
    d: u32,
    method: Method,
    dims: Vec<BigUint>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DimTableJson {
    d: u32,
    method: Method,
    dims: Vec<serde_json::Number>,
}

impl DimTable {
    pub fn compute(d: u32, n_max: usize, method: Method) -> Result<Self> {
        if d < 1 {
            return Err(Error::DegreeOutOfRange { d, max: None });
        }
        let du = d as usize;
        let dims = match method {
            Method::Theorem1Dp => (0..=n_max).map(|n| dim_theorem1(du, n)).collect(),
            Method::Theorem2Gf => dims_theorem2(du, n_max),
            Method::SpringerExpand => springer::poincare_series(d)?
                .expand(n_max)
                .coeffs()
                .iter()
                .map(to_unsigned)
                .collect(),
        };
        Ok(DimTable { d, method, dims })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn dims(&self) -> &[BigUint] {
        &self.dims
    }

    /// `(n, dim)` pairs, contiguous from `n = 0`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.dims.iter().enumerate()
    }

    pub fn to_json(&self) -> String {
        let record = DimTableJson {
            d: self.d,
            method: self.method,
            dims: self
                .dims
                .iter()
                .map(|c| big_to_number(&BigInt::from(c.clone())))
                .collect(),
        };
        serde_json::to_string(&record).expect("dim table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let record: DimTableJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let dims = record
            .dims
            .iter()
            .map(|n| {
                number_to_big(n)?
                    .to_biguint()
                    .ok_or_else(|| Error::Json(format!("negative dimension {n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DimTable {
            d: record.d,
            method: record.method,
            dims,
        })
    }

    /// Two right-aligned columns headed `n` and `dim`.
    pub fn to_plain(&self) -> String {
        let n_width = self.dims.len().saturating_sub(1).to_string().len().max(1);
        let dim_width = self.dims.iter().map(|c| c.to_string().len()).max().unwrap_or(0).max(3);
        let mut out = String::new();
        let _ = writeln!(out, "# d = {}, method = {}", self.d, self.method.as_str());
        let _ = writeln!(out, "{:>n_width$}  {:>dim_width$}", "n", "dim");
        for (n, c) in self.entries() {
            let _ = writeln!(out, "{n:>n_width$}  {c:>dim_width$}");
        }
        out
    }

    /// Dimensions that fit in a `u64`, for quick comparisons.
    pub fn dims_u64(&self) -> Option<Vec<u64>> {
        self.dims.iter().map(ToPrimitive::to_u64).collect()
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "THEOREM1_DP" | "dp" => Ok(Method::Theorem1Dp),
            "THEOREM2_GF" | "gf" => Ok(Method::Theorem2Gf),
            "SPRINGER_EXPAND" | "springer" => Ok(Method::SpringerExpand),
            other => Err(Error::parse(0, format!("unknown method {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive enumeration of all `(a_0..a_d)` with `sum a_i = n`.
    fn enumerate_weights(d: usize, n: usize) -> Vec<u64> {
        fn rec(i: usize, d: usize, left: usize, m: usize, out: &mut [u64]) {
            if i == d {
                out[m + d * left] += 1;
                return;
            }
            for a in 0..=left {
                rec(i + 1, d, left - a, m + i * a, out);
            }
        }
        let mut out = vec![0u64; d * n + 1];
        rec(0, d, n, 0, &mut out);
        out
    }

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(3, 2, 3), u(2));
        assert_eq!(enumerate_weights(3, 2)[3], 2);
        for d in 1..5 {
            assert_eq!(omega(d, 0, 0), u(1));
            assert_eq!(omega(d, 0, 1), u(0));
        }
        assert_eq!(omega(1, 5, 3), u(1));
        assert_eq!(omega(2, 3, -1), u(0));
        assert_eq!(omega(2, 3, 7), u(0));
    }

    #[test]
    fn omega_matches_enumeration() {
        for d in 1..=5 {
            for n in 0..=5 {
                let brute = enumerate_weights(d, n);
                for (m, &c) in brute.iter().enumerate() {
                    assert_eq!(omega(d, n, m as i64), u(c), "d={d} n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn theorem_examples() {
        for n in 0..8 {
            assert_eq!(dim_theorem1(1, n), u(1));
            assert_eq!(dim_lemma1(1, n), u(1));
        }
        assert_eq!(dim_theorem1(3, 2), u(2));
        assert_eq!(dim_theorem2(3, 2), u(2));
        assert_eq!(dim_theorem2(2, 4), u(3));
        for d in 1..6 {
            assert_eq!(dim_theorem1(d, 0), u(1));
            assert_eq!(dim_theorem2(d, 0), u(1));
            assert_eq!(dim_lemma1(d, 0), u(1));
        }
        assert_eq!(dim_lemma1(3, 2), u(2));
    }

    #[test]
    fn character_examples() {
        for d in 1..6usize {
            let ch = character(d, 1);
            let expect = LaurentPolynomial::from_terms((0..=d).map(|i| (2 * i as i64 - d as i64, BigInt::from(1))));
            assert_eq!(ch, expect);
        }
        assert_eq!(character(1, 2).to_string(), "q^-2+1+q^2");
        assert_eq!(character(4, 0), LaurentPolynomial::from_terms([(0, BigInt::from(1))]));
    }

    #[test]
    fn gamma_examples() {
        for d in 1..6 {
            assert_eq!(gamma(d, 1, d), BigInt::from(1));
            for n in 1..5 {
                assert_eq!(gamma(d, n, d * n), BigInt::from(1));
            }
        }
        // S^2(V_3) = V_6 + V_2
        let g: Vec<i64> = (0..=6).map(|j| gamma(3, 2, j).try_into().unwrap()).collect();
        assert_eq!(g, vec![0, 0, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn dim_table_json_and_plain() {
        let t = DimTable::compute(3, 6, Method::Theorem1Dp).unwrap();
        assert_eq!(t.dims_u64().unwrap(), vec![1, 1, 2, 3, 5, 6, 8]);
        let j = t.to_json();
        assert_eq!(j, r#"{"d":3,"method":"THEOREM1_DP","dims":[1,1,2,3,5,6,8]}"#);
        assert_eq!(DimTable::from_json(&j).unwrap(), t);
        let plain = t.to_plain();
        assert!(plain.lines().nth(1).unwrap().ends_with("dim"));
        assert_eq!(plain.lines().last().unwrap(), "6    8");
        assert!(DimTable::compute(0, 3, Method::Theorem2Gf).is_err());
    }
}
