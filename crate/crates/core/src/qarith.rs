//! Laurent polynomials in `q` over arbitrary-precision integers, the usual
//! q-numbers, q-factorials and q-binomials, and power series in an auxiliary
//! variable `u` truncated at a fixed order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element of `Z[q, q^-1]`.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// Laurent polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QLaurent {
    coeffs: BTreeMap<i64, BigInt>,
}

impl QLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(e, c.into());
        out
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    /// The image under the bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Specialisation at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Inverse of a unit `+-q^e`, the only invertible elements of the ring.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (e, c) = self.coeffs.iter().next()?;
        if c.abs().is_one() {
            Some(Self::monomial(c.clone(), -e))
        } else {
            None
        }
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (*e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{abs}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: QLaurent) -> QLaurent {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// The q-number `[n]_q = (q^n - q^-n) / (q - q^-1)`.
pub fn q_number(n: i64) -> QLaurent {
    let m = n.abs();
    let sign = if n < 0 { -1 } else { 1 };
    QLaurent::from_terms((0..m).map(|j| (m - 1 - 2 * j, sign)))
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`.
pub fn q_factorial(n: i64) -> Result<QLaurent> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    Ok((1..=n).fold(QLaurent::one(), |acc, j| &acc * &q_number(j)))
}

/// The q-binomial coefficient `[n k]_q`, built row by row from the Pascal rule
/// `[r k] = q^-k [r-1 k] + q^(r-k) [r-1 k-1]`.
pub fn q_binomial(n: i64, k: i64) -> Result<QLaurent> {
    if k < 0 || n < k {
        return Err(Error::BinomialRange { n, k });
    }
    let width = k as usize;
    let mut row = vec![QLaurent::zero(); width + 1];
    row[0] = QLaurent::one();
    for r in 1..=n {
        let top = (r as usize).min(width);
        for j in (1..=top).rev() {
            let jj = j as i64;
            row[j] = &row[j].shift(-jj) + &row[j - 1].shift(r - jj);
        }
    }
    Ok(row.swap_remove(width))
}

/// A power series `sum_j c_j u^j` with `QLaurent` coefficients, known modulo
/// `u^(order+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<QLaurent>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![QLaurent::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, QLaurent::one())
    }

    pub fn constant(order: usize, c: QLaurent) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Builds a series from the leading coefficients; missing ones are zero and
    /// coefficients beyond the order are dropped.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = QLaurent>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// The polynomial `1 - c u`.
    pub fn one_minus(order: usize, c: QLaurent) -> Self {
        Self::from_coeffs(order, [QLaurent::one(), -&c])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &QLaurent {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[QLaurent] {
        &self.coeffs
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QLaurent) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitutes `u -> q^e u`.
    pub fn rescale_u(&self, e: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, a)| a.shift(e * j as i64))
                .collect(),
        }
    }

    /// Multiplicative inverse, refined one coefficient at a time from
    /// `c_0 b_n = -sum_{j>=1} c_j b_{n-j}`. Requires a unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| Error::NotInvertible(self.coeffs[0].to_string()))?;
        let n = self.order();
        let mut out = Self::zero(n);
        out.coeffs[0] = c0_inv.clone();
        for k in 1..=n {
            let mut acc = QLaurent::zero();
            for j in 1..=k {
                acc = &acc + &(&self.coeffs[j] * &out.coeffs[k - j]);
            }
            out.coeffs[k] = -&(&acc * &c0_inv);
        }
        Ok(out)
    }

    pub fn series_equal(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.coeffs == other.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ql(terms: &[(i64, i64)]) -> QLaurent {
        QLaurent::from_terms(terms.iter().copied())
    }

    #[test]
    fn q_numbers() {
        assert!(q_number(0).is_zero());
        assert_eq!(q_number(1), QLaurent::one());
        assert_eq!(q_number(3), ql(&[(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(q_number(-3), -&q_number(3));
    }

    #[test]
    fn q_factorials() {
        assert_eq!(q_factorial(0).unwrap(), QLaurent::one());
        assert_eq!(q_factorial(2).unwrap(), ql(&[(1, 1), (-1, 1)]));
        let expected = &ql(&[(1, 1), (-1, 1)]) * &ql(&[(2, 1), (0, 1), (-2, 1)]);
        assert_eq!(q_factorial(3).unwrap(), expected);
        assert_eq!(q_factorial(-1), Err(Error::NegativeFactorial(-1)));
    }

    #[test]
    fn q_binomials() {
        assert_eq!(q_binomial(5, 0).unwrap(), QLaurent::one());
        assert_eq!(q_binomial(2, 1).unwrap(), q_number(2));
        assert_eq!(
            q_binomial(4, 2).unwrap(),
            ql(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)])
        );
        assert!(q_binomial(2, 3).is_err());
        assert!(q_binomial(2, -1).is_err());
    }

    #[test]
    fn q_binomial_times_factorials_is_factorial() {
        // [n]! = [n k] [k]! [n-k]!, checked without any division.
        for n in 0..=9 {
            for k in 0..=n {
                let lhs = q_factorial(n).unwrap();
                let rhs = &(&q_binomial(n, k).unwrap() * &q_factorial(k).unwrap())
                    * &q_factorial(n - k).unwrap();
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(q_number(3).to_string(), "q^2 + 1 + q^-2");
        assert_eq!(ql(&[(1, -2), (0, 1), (-1, -1)]).to_string(), "-2*q^1 + 1 - q^-1");
        assert_eq!(QLaurent::zero().to_string(), "0");
    }

    #[test]
    fn series_arithmetic() {
        let one_plus = TruncatedSeries::from_coeffs(2, [QLaurent::one(), QLaurent::one()]);
        let one_minus = TruncatedSeries::one_minus(2, QLaurent::one());
        let prod = one_plus.mul(&one_minus).unwrap();
        let expected = TruncatedSeries::from_coeffs(
            2,
            [QLaurent::one(), QLaurent::zero(), QLaurent::monomial(-1, 0)],
        );
        assert!(prod.series_equal(&expected).unwrap());
        assert_eq!(TruncatedSeries::one(2).mul(&prod).unwrap(), prod);
        assert!(matches!(
            prod.mul(&TruncatedSeries::one(3)),
            Err(Error::OrderMismatch(2, 3))
        ));
    }

    #[test]
    fn geometric_series_inverse() {
        // (1 - a u)^-1 = sum a^k u^k with a = q^3 - 2.
        let a = ql(&[(3, 1), (0, -2)]);
        let inv = TruncatedSeries::one_minus(7, a.clone()).inverse().unwrap();
        for k in 0..=7 {
            assert_eq!(inv.coeff(k), &a.pow(k as u32));
        }
        let bad = TruncatedSeries::constant(3, QLaurent::monomial(2, 0));
        assert!(bad.inverse().is_err());
    }
}
