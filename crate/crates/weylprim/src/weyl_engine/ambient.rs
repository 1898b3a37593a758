//! The ambient tensor space `(Lambda^1 V)^{a_1} x (Lambda^2 V)^{a_2} x ...`
//! for a dominant weight with coordinates `a_i`, and its weight-indexed
//! basis of tensors of wedges.
//!
//! A basis element is one subset of `{1..n}` per tensor factor, stored as
//! a bitmask (bit `i - 1` set means `e_i` occurs), wedge indices sorted
//! ascending by convention.  The highest vector takes `{1..s}` in every
//! size-`s` factor.

use super::EngineError;
use crate::root_weight::Weight;

/// One bitmask per tensor factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AmbientIndex {
    masks: Vec<u16>,
}

impl AmbientIndex {
    pub fn new(masks: Vec<u16>) -> Self {
        AmbientIndex { masks }
    }

    pub fn masks(&self) -> &[u16] {
        &self.masks
    }
}

/// The factor list of the ambient space of a dominant weight: `a_1`
/// factors of size 1, then `a_2` of size 2, and so on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorPattern {
    n: usize,
    sizes: Vec<u8>,
}

impl FactorPattern {
    pub fn for_weight(omega: &Weight) -> Result<Self, EngineError> {
        if !omega.is_dominant() {
            return Err(EngineError::NonDominant(omega.clone()));
        }
        let rank = omega.rank();
        let n = rank + 1;
        if n > 16 {
            return Err(EngineError::RankTooLarge { rank, n });
        }
        let mut sizes = Vec::new();
        for (idx, &a) in omega.coords().iter().enumerate() {
            for _ in 0..a {
                sizes.push((idx + 1) as u8);
            }
        }
        Ok(FactorPattern { n, sizes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factor_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[u8] {
        &self.sizes
    }

    /// The highest vector: each size-`s` factor holds `e_1 ^ ... ^ e_s`.
    pub fn highest(&self) -> AmbientIndex {
        AmbientIndex::new(self.sizes.iter().map(|&s| (1u16 << s) - 1).collect())
    }

    /// Whether the index has the right factor count and subset sizes.
    pub fn matches(&self, index: &AmbientIndex) -> bool {
        index.masks().len() == self.sizes.len()
            && index
                .masks()
                .iter()
                .zip(&self.sizes)
                .all(|(m, &s)| m.count_ones() == s as u32 && (*m as u32 >> self.n) == 0 && *m != 0)
    }

    /// The `T`-weight of a basis tensor, in fundamental coordinates:
    /// each factor contributes `[k in mask] - [k+1 in mask]` to
    /// coordinate `k`.
    pub fn index_weight(&self, index: &AmbientIndex) -> Weight {
        let mut coords = vec![0i64; self.n - 1];
        for &mask in index.masks() {
            for (k, c) in coords.iter_mut().enumerate() {
                let lo = (mask >> k) & 1;
                let hi = (mask >> (k + 1)) & 1;
                *c += lo as i64 - hi as i64;
            }
        }
        Weight::new(coords).expect("n >= 2 gives nonempty coordinates")
    }
}
