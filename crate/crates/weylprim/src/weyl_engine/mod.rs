//! Brute-force realization of Weyl modules over `GF(p)`.
//!
//! The module `Delta(w)` is realized as the span of divided-power
//! lowering operators applied to the highest vector of the tensor product
//! `(Lambda^1 V)^{a_1} x (Lambda^2 V)^{a_2} x ...`, reduced mod p, one
//! weight space at a time.  The contravariant form is the restriction of
//! the ambient orthonormal dot product; its radical cuts out the simple
//! quotient `L(w)`.  Expected ranks come from an independent Freudenthal
//! multiplicity oracle, so a disagreement is detectable, not absorbed.

mod act;
mod ambient;
mod freudenthal;
mod realize;
mod submodule;

pub use act::act;
pub use ambient::{AmbientIndex, FactorPattern};
pub use freudenthal::FreudenthalTable;
pub use realize::{
    dim_weyl, PrimitiveBasis, PrimitiveModule, Realization, WeightSpaceModel,
};
pub use submodule::{generated_submodule, submodule_primitive_drops, SubmoduleScan};

use crate::root_weight::{PositiveRoot, RootWeightError, Weight};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum EngineError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("weight {0} is not dominant")]
    NonDominant(Weight),
    #[error("rank {rank} needs n = {n} basis indices, more than the supported 16")]
    RankTooLarge { rank: usize, n: usize },
    #[error("vector index does not match the factor pattern of the weight")]
    PatternMismatch,
    #[error("root [{i},{j}) does not fit an ambient with n = {n}")]
    RootTooLarge { i: usize, j: usize, n: usize },
    #[error("budget of {limit} operator applications exhausted")]
    BudgetExceeded { limit: u64 },
    #[error("dimension exceeds u64")]
    DimensionOverflow,
    #[error(transparent)]
    RootWeight(#[from] RootWeightError),
}

/// A shared counter capping the number of operator applications.  Budgets
/// are cheap to clone; clones share the same counter.
#[derive(Debug, Clone)]
pub struct Budget {
    used: Arc<AtomicU64>,
    limit: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { used: Arc::new(AtomicU64::new(0)), limit }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// Records `amount` applications, failing once the limit is crossed.
    pub fn try_charge(&self, amount: u64) -> Result<(), EngineError> {
        let before = self.used.fetch_add(amount, Ordering::Relaxed);
        if before.saturating_add(amount) > self.limit {
            Err(EngineError::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    /// `X_{-alpha, m}`: lowers by `m` copies of the root.
    Lower,
    /// `X_{alpha, m}`: raises by `m` copies of the root.
    Raise,
    /// `H_{alpha_i, m}`: scales a weight vector by `binom(<mu, alpha_i>, m)`.
    Diag,
}

/// A divided-power generator of the hyperalgebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Operator {
    pub kind: OperatorKind,
    pub root: PositiveRoot,
    pub power: u32,
}

impl Operator {
    pub fn lower(root: PositiveRoot, power: u32) -> Self {
        Operator { kind: OperatorKind::Lower, root, power }
    }

    pub fn raise(root: PositiveRoot, power: u32) -> Self {
        Operator { kind: OperatorKind::Raise, root, power }
    }

    /// The toral generator for the simple root `alpha_i`.
    pub fn diag(i: usize, power: u32) -> Self {
        Operator {
            kind: OperatorKind::Diag,
            root: PositiveRoot::simple(i),
            power,
        }
    }
}
