//! Degree sequences and their gap coordinates.

use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Strictly increasing integer tuple `(d_0, ..., d_s)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DegreeSequence(Vec<i64>);

impl DegreeSequence {
    pub fn new(degrees: Vec<i64>) -> Result<Self> {
        let increasing = degrees.windows(2).all(|w| w[1] > w[0]);
        if degrees.is_empty() || !increasing {
            return Err(Error::InvalidSequence(degrees));
        }
        Ok(Self(degrees))
    }

    /// The Koszul sequence `(0, 1, ..., s)`.
    pub fn koszul(s: usize) -> Self {
        Self((0..=s as i64).collect())
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    /// `s`, one less than the number of entries.
    pub fn len_s(&self) -> usize {
        self.0.len() - 1
    }

    pub fn first(&self) -> i64 {
        self.0[0]
    }

    pub fn last(&self) -> i64 {
        self.0[self.0.len() - 1]
    }

    /// `(d_0, ..., d_s)` truncated at index `s`.
    pub fn truncate(&self, s: usize) -> Result<Self> {
        if s >= self.0.len() {
            return Err(Error::IndexOutOfRange {
                index: s,
                max: self.len_s(),
            });
        }
        Ok(Self(self.0[..=s].to_vec()))
    }

    /// Termwise `self <= other`.
    pub fn seq_leq(&self, other: &Self) -> Result<bool> {
        if self.0.len() != other.0.len() {
            return Err(Error::LengthMismatch(self.0.len(), other.0.len()));
        }
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    /// Termwise comparison on the common prefix.
    pub fn prefix_leq(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn shift(&self, by: i64) -> Self {
        Self(self.0.iter().map(|d| d + by).collect())
    }

    /// `e_i = d_i - d_{i-1} - 1` for `i = 1..=s`.
    pub fn gaps(&self) -> GapVector {
        GapVector(self.0.windows(2).map(|w| int(w[1] - w[0] - 1)).collect())
    }

    /// `d_j = d0 + j + e_1 + ... + e_j`; requires nonnegative integer gaps.
    pub fn from_gaps(e: &GapVector, d0: i64) -> Result<Self> {
        let mut degrees = Vec::with_capacity(e.len() + 1);
        degrees.push(d0);
        let mut cur = d0;
        for g in e.coords() {
            if g.is_negative() || !g.is_integer() {
                return Err(Error::NegativeGap(crate::rational::format(g)));
            }
            let g = g
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::NegativeGap(crate::rational::format(g)))?;
            cur += g + 1;
            degrees.push(cur);
        }
        Ok(Self(degrees))
    }

    /// Corollary-style shape condition: `d_0 <= 0` and `d_s - s <= 2 d_1 - 2`.
    ///
    /// Sequences with `s = 0` have no `d_1` and never satisfy it.
    pub fn pure_shape_check(&self) -> bool {
        if self.0.len() < 2 {
            return false;
        }
        let s = self.len_s() as i64;
        self.first() <= 0 && self.last() - s <= 2 * self.0[1] - 2
    }
}

impl TryFrom<Vec<i64>> for DegreeSequence {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<DegreeSequence> for Vec<i64> {
    fn from(d: DegreeSequence) -> Self {
        d.0
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Gap coordinates `(e_1, ..., e_s)`; rational so the pure-diagram functions
/// can be evaluated off the integer lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GapVector(Vec<Rational>);

impl GapVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(s: usize) -> Self {
        Self(vec![Rational::zero(); s])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based coordinate `e_i`.
    pub fn e(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    /// `self + h * u_k` (1-based `k`).
    pub fn bumped(&self, k: usize, h: &Rational) -> Self {
        let mut out = self.clone();
        out.0[k - 1] += h;
        out
    }
}

impl fmt::Display for GapVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(crate::rational::format).collect();
        write!(f, "({})", parts.join(","))
    }
}
