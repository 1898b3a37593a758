//! Roots and weights for the type `A_{n-1}` lattice.
//!
//! Weights are stored in the fundamental-weight basis `w_1, ..., w_{n-1}`.
//! Positive roots are the intervals `a_i + a_{i+1} + ... + a_{j-1}` of
//! consecutive simple roots, encoded by the pair `(i, j)` with
//! `1 <= i < j <= n`.  Root sums keep coordinates in the simple-root basis;
//! the two bases are deliberately kept apart and conversions go through
//! explicit Cartan-matrix arithmetic.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum RootWeightError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("root ({i},{j}) does not fit rank {rank}")]
    RootOutOfRange { i: usize, j: usize, rank: usize },
    #[error("interval ({0},{1}) is not a positive root")]
    BadInterval(usize, usize),
    #[error("cannot restrict a weight of rank {0}")]
    RankUnderflow(usize),
    #[error("empty coordinate list")]
    EmptyCoordinates,
}

/// An integral weight of `A_rank` in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Result<Self, RootWeightError> {
        if coords.is_empty() {
            return Err(RootWeightError::EmptyCoordinates);
        }
        Ok(Weight { coords })
    }

    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1);
        Weight { coords: vec![0; rank] }
    }

    /// The i-th fundamental weight (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i));
        let mut coords = vec![0; rank];
        coords[i - 1] = 1;
        Weight { coords }
    }

    /// Half the sum of the positive roots: all coordinates 1.
    pub fn rho(rank: usize) -> Self {
        assert!(rank >= 1);
        Weight { coords: vec![1; rank] }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// 1-based coordinate access.
    pub fn coord(&self, i: usize) -> i64 {
        self.coords[i - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    fn check_rank(&self, other: &Weight) -> Result<(), RootWeightError> {
        if self.rank() != other.rank() {
            return Err(RootWeightError::RankMismatch { left: self.rank(), right: other.rank() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Weight) -> Result<Weight, RootWeightError> {
        self.check_rank(other)?;
        Ok(Weight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Weight) -> Result<Weight, RootWeightError> {
        self.check_rank(other)?;
        Ok(Weight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() })
    }

    /// Adds `amount` to the 1-based coordinate `i`.
    pub fn bump(&self, i: usize, amount: i64) -> Weight {
        let mut coords = self.coords.clone();
        coords[i - 1] += amount;
        Weight { coords }
    }

    /// `<w, alpha^v>` for the positive root `alpha = a_i + ... + a_{j-1}`:
    /// the sum of the coordinates `i ..= j-1`.
    pub fn pairing(&self, root: &PositiveRoot) -> Result<i64, RootWeightError> {
        if root.j > self.rank() + 1 {
            return Err(RootWeightError::RootOutOfRange {
                i: root.i,
                j: root.j,
                rank: self.rank(),
            });
        }
        Ok((root.i..root.j).map(|l| self.coords[l - 1]).sum())
    }

    /// Subtracts a simple-root-basis vector, converting through the Cartan
    /// matrix: `a_j = 2 w_j - w_{j-1} - w_{j+1}`.
    pub fn subtract_rootsum(&self, s: &RootSum) -> Result<Weight, RootWeightError> {
        if s.rank() != self.rank() {
            return Err(RootWeightError::RankMismatch { left: self.rank(), right: s.rank() });
        }
        let mut coords = self.coords.clone();
        let r = self.rank();
        for (idx, c) in coords.iter_mut().enumerate() {
            let b = |t: isize| -> i64 {
                if t < 0 || t as usize >= r {
                    0
                } else {
                    s.coeffs[t as usize]
                }
            };
            let t = idx as isize;
            *c -= 2 * b(t) - b(t - 1) - b(t + 1);
        }
        Ok(Weight { coords })
    }

    /// Expresses `self` in the simple-root basis if it lies in the root
    /// lattice; returns `None` otherwise.  Entries may be negative.
    pub fn root_coordinates(&self) -> Option<Vec<i64>> {
        let r = self.rank();
        let n = (r + 1) as i128;
        let mut out = Vec::with_capacity(r);
        for j in 1..=r {
            // (C^{-1})_{ji} = min(i,j) * (n - max(i,j)) / n for A_r.
            let mut acc: i128 = 0;
            for i in 1..=r {
                let min = i.min(j) as i128;
                let max = i.max(j) as i128;
                acc += min * (n - max) * self.coords[i - 1] as i128;
            }
            if acc % n != 0 {
                return None;
            }
            out.push((acc / n) as i64);
        }
        Some(out)
    }

    /// Drops the first coordinate: restriction to the subgroup fixing the
    /// basis vector `e_1`, i.e. the copy of `SL_{n-1}` on indices `2..=n`.
    pub fn restrict_q1(&self) -> Result<Weight, RootWeightError> {
        if self.rank() < 2 {
            return Err(RootWeightError::RankUnderflow(self.rank()));
        }
        Ok(Weight { coords: self.coords[1..].to_vec() })
    }

    /// Reverses the coordinate list: the weight of the dual module twisted
    /// by the diagram automorphism.  An involution.
    pub fn dual_twist(&self) -> Weight {
        let mut coords = self.coords.clone();
        coords.reverse();
        Weight { coords }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = RootWeightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coords: Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse::<i64>()).collect();
        match coords {
            Ok(c) if !c.is_empty() => Weight::new(c),
            _ => Err(RootWeightError::EmptyCoordinates),
        }
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

/// The positive root `a_i + a_{i+1} + ... + a_{j-1}`, `1 <= i < j <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PositiveRoot {
    pub i: usize,
    pub j: usize,
}

impl PositiveRoot {
    pub fn new(i: usize, j: usize) -> Result<Self, RootWeightError> {
        if i < 1 || i >= j {
            return Err(RootWeightError::BadInterval(i, j));
        }
        Ok(PositiveRoot { i, j })
    }

    pub fn simple(i: usize) -> Self {
        PositiveRoot { i, j: i + 1 }
    }

    /// Number of simple-root summands.
    pub fn height(&self) -> usize {
        self.j - self.i
    }

    /// Coefficient of the simple root `a_l` (1-based): 0 or 1.
    pub fn coeff(&self, l: usize) -> i64 {
        i64::from(self.i <= l && l < self.j)
    }

    pub fn as_rootsum(&self, rank: usize) -> Result<RootSum, RootWeightError> {
        if self.j > rank + 1 {
            return Err(RootWeightError::RootOutOfRange { i: self.i, j: self.j, rank });
        }
        let coeffs = (1..=rank).map(|l| self.coeff(l)).collect();
        Ok(RootSum { coeffs })
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{})", self.i, self.j)
    }
}

/// All positive roots of `A_{n-1}`, ordered lexicographically by `(i, j)`.
pub fn positive_roots(n: usize) -> Vec<PositiveRoot> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in (i + 1)..=n {
            out.push(PositiveRoot { i, j });
        }
    }
    out
}

/// A nonnegative-or-negative integral vector in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSum {
    coeffs: Vec<i64>,
}

impl RootSum {
    pub fn new(coeffs: Vec<i64>) -> Result<Self, RootWeightError> {
        if coeffs.is_empty() {
            return Err(RootWeightError::EmptyCoordinates);
        }
        Ok(RootSum { coeffs })
    }

    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1);
        RootSum { coeffs: vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// 1-based coefficient access.
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i - 1]
    }

    pub fn is_nonneg(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &RootSum) -> Result<RootSum, RootWeightError> {
        if self.rank() != other.rank() {
            return Err(RootWeightError::RankMismatch { left: self.rank(), right: other.rank() });
        }
        Ok(RootSum {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// `self + m * root`.
    pub fn add_root(&self, root: &PositiveRoot, m: i64) -> Result<RootSum, RootWeightError> {
        let r = root.as_rootsum(self.rank())?;
        Ok(RootSum {
            coeffs: self.coeffs.iter().zip(&r.coeffs).map(|(a, b)| a + m * b).collect(),
        })
    }

    /// Prepends a leading coefficient, raising the rank by one.  Maps a
    /// root vector of the subsystem on `a_2, ..., a_{n-1}` into the full
    /// lattice together with an `a_1`-coefficient.
    pub fn prepend(&self, b1: i64) -> RootSum {
        let mut coeffs = Vec::with_capacity(self.rank() + 1);
        coeffs.push(b1);
        coeffs.extend_from_slice(&self.coeffs);
        RootSum { coeffs }
    }

    /// Drops the leading coefficient (the `a_1` component).
    pub fn tail(&self) -> Result<RootSum, RootWeightError> {
        if self.rank() < 2 {
            return Err(RootWeightError::RankUnderflow(self.rank()));
        }
        Ok(RootSum { coeffs: self.coeffs[1..].to_vec() })
    }

    pub fn reversed(&self) -> RootSum {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        RootSum { coeffs }
    }

    /// The same vector in the fundamental-weight basis via the Cartan matrix.
    pub fn to_weight(&self) -> Weight {
        let r = self.rank();
        let b = |t: isize| -> i64 {
            if t < 0 || t as usize >= r {
                0
            } else {
                self.coeffs[t as usize]
            }
        };
        let coords = (0..r as isize).map(|t| 2 * b(t) - b(t - 1) - b(t + 1)).collect();
        Weight { coords }
    }
}

impl fmt::Display for RootSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "r:{}", parts.join(","))
    }
}

impl FromStr for RootSum {
    type Err = RootWeightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.strip_prefix("r:").ok_or(RootWeightError::EmptyCoordinates)?;
        let coeffs: Result<Vec<i64>, _> = body.split(',').map(|t| t.trim().parse::<i64>()).collect();
        match coeffs {
            Ok(c) if !c.is_empty() => RootSum::new(c),
            _ => Err(RootWeightError::EmptyCoordinates),
        }
    }
}

impl Serialize for RootSum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RootSum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

/// The staircase set `E(n, k)`: all root sums `b_1 a_1 + ... + b_{n-1} a_{n-1}`
/// with `k = b_1 >= b_2 >= ... >= b_{n-1} >= 0`.  Sorted ascending.
pub fn e_set(n: usize, k: i64) -> Vec<RootSum> {
    assert!(n >= 2, "need rank at least one");
    assert!(k >= 0);
    let mut out = Vec::new();
    let mut coeffs = vec![k];
    fn rec(out: &mut Vec<RootSum>, coeffs: &mut Vec<i64>, n: usize, bound: i64) {
        if coeffs.len() == n - 1 {
            out.push(RootSum { coeffs: coeffs.clone() });
            return;
        }
        for b in 0..=bound {
            coeffs.push(b);
            rec(out, coeffs, n, b);
            coeffs.pop();
        }
    }
    rec(&mut out, &mut coeffs, n, k);
    out.sort();
    out
}
