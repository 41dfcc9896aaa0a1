//! Exact integer polynomials, Laurent polynomials and truncated power series.
//!
//! Every coefficient is an arbitrary-precision [`BigInt`]. Nothing in this
//! module ever rounds; a truncated series carries its order explicitly and
//! never reports coefficients past it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial in `z` over the integers.
///
/// `coeffs[i]` is the coefficient of `z^i`. The highest stored coefficient is
/// always nonzero, so the zero polynomial is the empty vector and derived
/// equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().copied().map(BigInt::from).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * z^exp`
    pub fn monomial(c: BigInt, exp: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        IntPolynomial { coeffs }
    }

    /// `1 - z^k`. For `k == 0` this is the zero polynomial.
    pub fn one_minus_z_pow(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] += 1;
        coeffs[k] -= 1;
        Self::new(coeffs)
    }

    /// `1 + z^k + z^{2k} + ... + z^{(n-1)k}`, i.e. `Q_n(z^k)`.
    pub fn repunit(n: usize, k: usize) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (n - 1) * k + 1];
        for i in 0..n {
            coeffs[i * k] += 1;
        }
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `z^e`.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// `p(z^k)` for `k >= 1`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        let Some(deg) = self.degree() else {
            return Self::zero();
        };
        let mut coeffs = vec![BigInt::zero(); deg * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        IntPolynomial { coeffs }
    }

    /// Keep the coefficients of `z^0, z^n, z^{2n}, ...` and relabel `z^{sn}` as `z^s`.
    pub fn section(&self, n: usize) -> Self {
        assert!(n >= 1, "section modulus must be positive");
        Self::new(self.coeffs.iter().step_by(n).cloned().collect())
    }

    /// Exact quotient `a / b` over the integers.
    ///
    /// Fails with [`Error::Indivisible`] when the remainder is nonzero or when a
    /// quotient coefficient would not be an integer. Panics if `b` is zero.
    pub fn exact_div(&self, b: &IntPolynomial) -> Result<IntPolynomial> {
        let db = b.degree().expect("division by the zero polynomial");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let da = self.coeffs.len() - 1;
        if da < db {
            return Err(Error::Indivisible);
        }
        let lead = &b.coeffs[db];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let top = &rem[i + db];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::Indivisible);
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                if !bc.is_zero() {
                    rem[i + j] -= &q * bc;
                }
            }
            quot[i] = q;
        }
        if rem[..db].iter().any(|c| !c.is_zero()) {
            return Err(Error::Indivisible);
        }
        Ok(Self::new(quot))
    }

    /// Exact division by `1 - z^k`, done in one linear pass.
    pub fn div_one_minus_z_pow(&self, k: usize) -> Result<IntPolynomial> {
        assert!(k >= 1);
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // q(z) (1 - z^k) = p(z)  =>  q_i = p_i + q_{i-k}
        let n = self.coeffs.len();
        if n <= k {
            return Err(Error::Indivisible);
        }
        let mut quot: Vec<BigInt> = Vec::with_capacity(n - k);
        for i in 0..n - k {
            let mut q = self.coeffs[i].clone();
            if i >= k {
                q += &quot[i - k];
            }
            quot.push(q);
        }
        // p = q - z^k q and deg q < n - k, so p_i = -q_{i-k} for the top k indices
        for i in n - k..n {
            let expect = match i.checked_sub(k) {
                Some(j) => -&quot[j],
                None => BigInt::zero(),
            };
            if self.coeffs[i] != expect {
                return Err(Error::Indivisible);
            }
        }
        Ok(Self::new(quot))
    }

    /// Number of strictly negative coefficients.
    pub fn negative_count(&self) -> usize {
        self.coeffs.iter().filter(|c| c.is_negative()).count()
    }

    /// Coefficient list reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Sum of all coefficients, i.e. the value at `z = 1`.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Plain-text rendering with ascending exponents, e.g. `1+z-2*z^3`.
    pub fn to_plain(&self) -> String {
        self.render(false)
    }

    /// LaTeX rendering with ascending exponents, e.g. `1 + z - 2z^{3}`.
    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let (plus, minus) = if latex { (" + ", " - ") } else { ("+", "-") };
        let mut out = String::new();
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match (out.is_empty(), c.is_negative()) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(minus),
                (false, false) => out.push_str(plus),
            }
            let abs = c.abs();
            if e == 0 {
                out.push_str(&abs.to_string());
                continue;
            }
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                if !latex {
                    out.push('*');
                }
            }
            out.push('z');
            if e > 1 {
                if latex {
                    out.push_str(&format!("^{{{e}}}"));
                } else {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
        out
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl From<Vec<i64>> for IntPolynomial {
    fn from(v: Vec<i64>) -> Self {
        Self::from_i64s(&v)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        // iterate over the sparser operand in the outer loop
        let (sparse, dense) = if self.term_count() <= rhs.term_count() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in sparse.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in dense.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPolynomial::new(out)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;

            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }

        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;

            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Laurent polynomial in `q` with integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^{min_exp + i}`. Both the first and the
/// last stored coefficient are nonzero; the zero polynomial has no
/// coefficients and `min_exp == 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPolynomial {
    pub fn new(min_exp: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentPolynomial {
            min_exp: min_exp + lead as i64,
            coeffs,
        }
    }

    pub fn zero() -> Self {
        LaurentPolynomial {
            min_exp: 0,
            coeffs: Vec::new(),
        }
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap_or(lo);
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::new(lo, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_exp)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_exp + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let i = exp - self.min_exp;
        if i < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// Image under `q -> q^{-1}`.
    pub fn reflect(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                Self::new(-hi, coeffs)
            }
        }
    }

    /// Invariant under `q -> q^{-1}`.
    pub fn is_palindromic(&self) -> bool {
        *self == self.reflect()
    }

    /// Sum of all coefficients.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let abs = c.abs();
            match (e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{abs}*q^{e}")?,
            }
        }
        Ok(())
    }
}

/// Power series in `z` known exactly through `z^order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// The order is `coeffs.len() - 1`; an empty vector is rejected.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series stores at least z^0");
        TruncatedSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().copied().map(BigInt::from).collect())
    }

    pub fn from_polynomial(p: &IntPolynomial, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (a, c) in s.coeffs.iter_mut().zip(p.coeffs()) {
            *a = c.clone();
        }
        s
    }

    /// Series of `1/(1 - z^k)` through `z^order`.
    pub fn geometric(k: usize, order: usize) -> Self {
        assert!(k >= 1, "geometric series needs k >= 1");
        let mut s = Self::zero(order);
        for c in s.coeffs.iter_mut().step_by(k) {
            *c = BigInt::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Panics past the truncation order.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// Truncated convolution at the shared order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiply in place by `1/(1 - z^k)`.
    pub fn mul_geometric(&mut self, k: usize) {
        assert!(k >= 1);
        for m in k..self.coeffs.len() {
            let prev = self.coeffs[m - k].clone();
            self.coeffs[m] += prev;
        }
    }
}

/// Power series in `t` and `z`, known exactly for `t^i z^j` with
/// `i <= order_t`, `j <= order_z`. Stored densely, row-major in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateTruncatedSeries {
    order_t: usize,
    order_z: usize,
    grid: Vec<BigInt>,
}

impl BivariateTruncatedSeries {
    pub fn zero(order_t: usize, order_z: usize) -> Self {
        BivariateTruncatedSeries {
            order_t,
            order_z,
            grid: vec![BigInt::zero(); (order_t + 1) * (order_z + 1)],
        }
    }

    pub fn from_fn(order_t: usize, order_z: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut s = Self::zero(order_t, order_z);
        for i in 0..=order_t {
            for j in 0..=order_z {
                s.grid[i * (order_z + 1) + j] = f(i, j);
            }
        }
        s
    }

    /// Embeds a polynomial in `z` alone (the `t^0` row).
    pub fn from_polynomial_in_z(p: &IntPolynomial, order_t: usize, order_z: usize) -> Self {
        let mut s = Self::zero(order_t, order_z);
        for (j, c) in p.coeffs().iter().enumerate().take(order_z + 1) {
            s.grid[j] = c.clone();
        }
        s
    }

    /// Expansion of `R(z) / (1 - t z^k)`: the `t^i` row is `z^{ki} R(z)`.
    pub fn from_series_over_linear_t(r: &TruncatedSeries, k: usize, order_t: usize, order_z: usize) -> Self {
        assert!(r.order() >= order_z, "series too short for the requested grid");
        Self::from_fn(order_t, order_z, |i, j| match j.checked_sub(k * i) {
            Some(m) => r.coeff(m).clone(),
            None => BigInt::zero(),
        })
    }

    pub fn order_t(&self) -> usize {
        self.order_t
    }

    pub fn order_z(&self) -> usize {
        self.order_z
    }

    /// Coefficient of `t^i z^j`. Panics outside the grid.
    pub fn coeff(&self, i: usize, j: usize) -> &BigInt {
        assert!(i <= self.order_t && j <= self.order_z, "index outside grid");
        &self.grid[i * (self.order_z + 1) + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: BigInt) {
        assert!(i <= self.order_t && j <= self.order_z, "index outside grid");
        self.grid[i * (self.order_z + 1) + j] = c;
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.order_t != other.order_t {
            return Err(Error::OrderMismatch {
                left: self.order_t,
                right: other.order_t,
            });
        }
        if self.order_z != other.order_z {
            return Err(Error::OrderMismatch {
                left: self.order_z,
                right: other.order_z,
            });
        }
        Ok(BivariateTruncatedSeries {
            order_t: self.order_t,
            order_z: self.order_z,
            grid: self.grid.iter().zip(&other.grid).map(|(a, b)| a + b).collect(),
        })
    }

    /// Multiply in place by `1/(1 - t^a z^b)`, `(a, b) != (0, 0)`.
    pub fn mul_inverse_binomial(&mut self, a: usize, b: usize) {
        assert!(a + b > 0, "1/(1 - 1) is not a power series");
        let w = self.order_z + 1;
        for i in a..=self.order_t {
            for j in b..=self.order_z {
                let prev = self.grid[(i - a) * w + (j - b)].clone();
                self.grid[i * w + j] += prev;
            }
        }
    }
}
