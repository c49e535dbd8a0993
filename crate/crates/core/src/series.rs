//! Truncated power series in one variable with arbitrary-precision integer
//! coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::{clique_polynomial, write_univariate, CliquePolynomial, WeightedGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },
    #[error("constant term {0} is not a unit")]
    NonUnitConstant(BigInt),
    #[error("malformed series document: {0}")]
    Malformed(String),
}

/// `a_0 + a_1 z + ... + a_N z^N + O(z^{N+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coefficients: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(truncation: usize) -> Self {
        TruncatedSeries {
            coefficients: vec![BigInt::zero(); truncation + 1],
        }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.coefficients[0] = BigInt::one();
        s
    }

    /// Panics on an empty coefficient list; a series always stores `a_0`.
    pub fn from_coefficients(coefficients: Vec<BigInt>) -> Self {
        assert!(!coefficients.is_empty(), "a truncated series needs a_0");
        TruncatedSeries { coefficients }
    }

    pub fn from_i64s(coefficients: &[i64]) -> Self {
        Self::from_coefficients(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Series with `a_k = f(k)` for `k <= truncation`.
    pub fn from_fn(truncation: usize, f: impl FnMut(usize) -> BigInt) -> Self {
        Self::from_coefficients((0..=truncation).map(f).collect())
    }

    pub fn truncation(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> &BigInt {
        &self.coefficients[k]
    }

    /// Drops coefficients above `truncation`. Asking for more precision than stored panics.
    pub fn truncate(&self, truncation: usize) -> Self {
        assert!(truncation <= self.truncation(), "cannot extend a truncated series");
        Self::from_coefficients(self.coefficients[..=truncation].to_vec())
    }

    fn check(&self, other: &Self) -> Result<(), SeriesError> {
        if self.truncation() != other.truncation() {
            return Err(SeriesError::TruncationMismatch {
                left: self.truncation(),
                right: other.truncation(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        Ok(Self::from_coefficients(
            self.coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        Ok(Self::from_coefficients(
            self.coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    /// Cauchy product, truncated.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        let n = self.truncation();
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self::from_coefficients(out))
    }

    /// Multiplicative inverse; requires `a_0 = ±1`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coefficients[0];
        if a0.abs() != BigInt::one() {
            return Err(SeriesError::NonUnitConstant(a0.clone()));
        }
        // 1/a0 = a0 for a0 = ±1
        let mut g: Vec<BigInt> = Vec::with_capacity(self.coefficients.len());
        g.push(a0.clone());
        for k in 1..=self.truncation() {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                let a = &self.coefficients[i];
                if !a.is_zero() {
                    acc += a * &g[k - i];
                }
            }
            g.push(-(a0 * acc));
        }
        Ok(Self::from_coefficients(g))
    }

    pub fn is_one(&self) -> bool {
        self.coefficients[0].is_one() && self.coefficients[1..].iter().all(Zero::is_zero)
    }

    /// First index where the two series differ, if any (truncations must match).
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coefficients
            .iter()
            .zip(&other.coefficients)
            .position(|(a, b)| a != b)
            .or_else(|| (self.truncation() != other.truncation()).then(|| {
                self.truncation().min(other.truncation()) + 1
            }))
    }

    /// `{"truncation": N, "coefficients": [a0, ..., aN]}` with exact integers.
    pub fn to_json(&self) -> Value {
        let coefficients: Vec<Value> = self.coefficients.iter().map(bigint_to_json).collect();
        json!({ "truncation": self.truncation(), "coefficients": coefficients })
    }

    pub fn from_json(value: &Value) -> Result<Self, SeriesError> {
        let malformed = |m: &str| SeriesError::Malformed(m.to_string());
        let truncation = value
            .get("truncation")
            .and_then(Value::as_u64)
            .ok_or_else(|| malformed("missing truncation"))? as usize;
        let coefficients = value
            .get("coefficients")
            .and_then(Value::as_array)
            .ok_or_else(|| malformed("missing coefficients"))?
            .iter()
            .map(|c| json_to_bigint(c).ok_or_else(|| malformed("non-integer coefficient")))
            .collect::<Result<Vec<_>, _>>()?;
        if coefficients.len() != truncation + 1 {
            return Err(malformed("coefficient count does not match truncation"));
        }
        Ok(Self::from_coefficients(coefficients))
    }
}

pub(crate) fn bigint_to_json(n: &BigInt) -> Value {
    let number: serde_json::Number = n.to_string().parse().expect("integers are valid JSON numbers");
    Value::Number(number)
}

pub(crate) fn json_to_bigint(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.to_string().parse().ok(),
        _ => None,
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.is_negative(), c.abs().to_string(), k as u32));
        write_univariate(f, terms)?;
        write!(f, " + O(z^{})", self.truncation() + 1)
    }
}

impl CliquePolynomial {
    pub fn to_series(&self, truncation: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(truncation);
        for (j, c) in self.terms() {
            if (j as usize) <= truncation {
                s.coefficients[j as usize] = BigInt::from(c);
            }
        }
        s
    }
}

/// Hilbert series of the graph algebra as the inverse of its clique polynomial.
pub fn hilbert_series(g: &WeightedGraph, truncation: usize) -> TruncatedSeries {
    clique_polynomial(g)
        .to_series(truncation)
        .invert()
        .expect("clique polynomials have constant term 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64s(c)
    }

    #[test]
    fn addition() {
        assert_eq!(s(&[1]).checked_add(&s(&[-1])).unwrap(), s(&[0]));
        assert_eq!(
            s(&[1, -5, 5]).checked_add(&s(&[0, 5, 0])).unwrap(),
            s(&[1, 0, 5])
        );
        assert!(matches!(
            s(&[1, 2]).checked_add(&s(&[1])),
            Err(SeriesError::TruncationMismatch { left: 1, right: 0 })
        ));
    }

    #[test]
    fn multiplication() {
        let geometric = s(&[1; 8]);
        assert!(s(&[1, -1, 0, 0, 0, 0, 0, 0]).checked_mul(&geometric).unwrap().is_one());
        let one_minus_z = s(&[1, -1, 0, 0, 0]);
        let cube = one_minus_z
            .checked_mul(&one_minus_z)
            .unwrap()
            .checked_mul(&one_minus_z)
            .unwrap();
        assert_eq!(cube, s(&[1, -3, 3, -1, 0]));
    }

    #[test]
    fn inversion() {
        assert_eq!(s(&[1, -1, 0, 0, 0]).invert().unwrap(), s(&[1, 1, 1, 1, 1]));
        assert_eq!(
            s(&[1, -5, 5, 0, 0, 0, 0]).invert().unwrap(),
            s(&[1, 5, 20, 75, 275, 1000, 3625])
        );
        let binomials: Vec<i64> = (0..8).map(|k| (k + 2) * (k + 1) / 2).collect();
        assert_eq!(s(&[1, -3, 3, -1, 0, 0, 0, 0]).invert().unwrap(), s(&binomials));
        assert_eq!(s(&[-1, 0, 0]).invert().unwrap(), s(&[-1, 0, 0]));
        assert!(matches!(s(&[2, 1]).invert(), Err(SeriesError::NonUnitConstant(_))));
    }

    #[test]
    fn inverse_by_linear_recurrence() {
        // a_k = 5 a_{k-1} - 5 a_{k-2}
        let mut expected = vec![BigInt::from(1), BigInt::from(5)];
        for k in 2..=40 {
            let next = BigInt::from(5) * &expected[k - 1] - BigInt::from(5) * &expected[k - 2];
            expected.push(next);
        }
        let mut c = vec![0i64; 41];
        c[..3].copy_from_slice(&[1, -5, 5]);
        assert_eq!(s(&c).invert().unwrap().coefficients(), &expected[..]);
    }

    #[test]
    fn hilbert_series_of_simple_graphs() {
        let pentagon =
            WeightedGraph::unit(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
        assert_eq!(hilbert_series(&pentagon, 4), s(&[1, 5, 20, 75, 275]));
        let edgeless = WeightedGraph::unit(3, &[]).unwrap();
        assert_eq!(hilbert_series(&edgeless, 5), s(&[1, 3, 9, 27, 81, 243]));
        let single = WeightedGraph::weighted(&[3], &[]).unwrap();
        assert_eq!(hilbert_series(&single, 7), s(&[1, 0, 0, 1, 0, 0, 1, 0]));
    }

    #[test]
    fn text_and_json_forms() {
        let h = s(&[1, 5, 20, 0, -3]);
        assert_eq!(h.to_string(), "1 + 5z + 20z^2 - 3z^4 + O(z^5)");
        let big = TruncatedSeries::from_coefficients(vec!["123456789012345678901234567890".parse().unwrap()]);
        let v = big.to_json();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"coefficients":[123456789012345678901234567890],"truncation":0}"#
        );
        assert_eq!(TruncatedSeries::from_json(&v).unwrap(), big);
        assert_eq!(TruncatedSeries::from_json(&h.to_json()).unwrap(), h);
    }
}
