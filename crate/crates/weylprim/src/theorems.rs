//! Hypothesis checkers for the level-raising embedding and a brute-force
//! search harness over grids of dominant weights.
//!
//! The object under study is the submodule of `L(w)` generated by
//! `X_{-a_q, k} w+` for an end node `q` of the diagram.  Theorem A style
//! checks predict when that submodule is a full Weyl module for the
//! subgroup omitting node `q`; Theorem B style checks refine this to an
//! if-and-only-if against a staircase condition on the primitive weights
//! of the target.  All of the expensive work runs through the exact-oracle
//! engine in [`crate::weyl_engine`] and respects its vector budget: a
//! budget trip surfaces as [`Outcome::Skipped`], never as a silent pass.
//!
//! Everything here works in the `q = 1` frame.  The other end node
//! `q = n - 1` is handled by the diagram flip ([`Weight::dual_twist`]),
//! with reported weights flipped back into the caller's orientation.

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::jantzen::{is_weyl_simple, JantzenError};
use crate::root_weight::{RootSum, RootWeightError, Weight};
use crate::weyl_engine::{
    dim_weyl, generated_submodule, submodule_primitive_drops, Budget, EngineError,
    PrimitiveModule, Realization,
};

#[derive(Debug, Error)]
pub enum TheoremsError {
    #[error("k = {k} must satisfy 0 <= k <= p - 1 = {}", p - 1)]
    KOutOfRange { k: i64, p: u64 },
    #[error("q = {q} must be 1 or n - 1 = {}", n - 1)]
    InvalidQ { q: usize, n: usize },
    #[error("need n >= 3 so the omitted-node subgroup is nontrivial, got n = {n}")]
    RankTooSmall { n: usize },
    #[error("weight {0} is not dominant")]
    NonDominant(Weight),
    #[error(transparent)]
    Jantzen(#[from] JantzenError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    RootWeight(#[from] RootWeightError),
}

/// Result of an oracle-backed check: either the computed value, or
/// `Skipped` when the vector budget ran out before it finished.
///
/// Serializes as the inner value, or as the string `"SKIPPED"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome<T> {
    Done(T),
    Skipped,
}

impl<T> Outcome<T> {
    pub fn as_done(&self) -> Option<&T> {
        match self {
            Outcome::Done(t) => Some(t),
            Outcome::Skipped => None,
        }
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Outcome::Skipped)
    }
}

impl<T: Serialize> Serialize for Outcome<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Outcome::Done(t) => t.serialize(serializer),
            Outcome::Skipped => serializer.serialize_str("SKIPPED"),
        }
    }
}

/// Converts an engine result into an [`Outcome`], reserving `Skipped` for
/// budget exhaustion; every other engine error is a real error.
fn budgeted<T>(res: Result<T, EngineError>) -> Result<Outcome<T>, TheoremsError> {
    match res {
        Ok(t) => Ok(Outcome::Done(t)),
        Err(EngineError::BudgetExceeded { .. }) => Ok(Outcome::Skipped),
        Err(e) => Err(e.into()),
    }
}

/// One row of the divisibility test: `<w, a_q> - l` must be a nonzero
/// residue mod `p` for every `l = 0 .. k-1`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DivisibilityCheck {
    pub l: i64,
    pub residue: u64,
    pub passes: bool,
}

/// Outcome of the Theorem A hypothesis check for `(w, p, k, q)`.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremAReport {
    pub applies: bool,
    pub n: usize,
    pub p: u64,
    pub k: i64,
    pub q: usize,
    pub omega: Weight,
    pub divisibility: Vec<DivisibilityCheck>,
    /// Smallest `m <= k` with `Delta(restriction + m w_2)` simple, if any.
    pub m_witness: Option<i64>,
    /// Highest weight of the predicted submodule, for the subgroup
    /// omitting node `q`, in the caller's orientation.
    pub target: Weight,
}

impl TheoremAReport {
    pub fn divisibility_holds(&self) -> bool {
        self.divisibility.iter().all(|c| c.passes)
    }
}

/// Validates common inputs and rotates into the `q = 1` frame.
fn into_q1_frame(
    omega: &Weight,
    p: u64,
    k: i64,
    q: usize,
) -> Result<Weight, TheoremsError> {
    let n = omega.rank() + 1;
    if n < 3 {
        return Err(TheoremsError::RankTooSmall { n });
    }
    if !omega.is_dominant() {
        return Err(TheoremsError::NonDominant(omega.clone()));
    }
    if q != 1 && q != n - 1 {
        return Err(TheoremsError::InvalidQ { q, n });
    }
    if k < 0 || k as u64 >= p {
        return Err(TheoremsError::KOutOfRange { k, p });
    }
    Ok(if q == 1 { omega.clone() } else { omega.dual_twist() })
}

/// Flips a weight back into the caller's orientation when `q = n - 1`.
fn from_q1_frame(weight: Weight, q: usize) -> Weight {
    if q == 1 {
        weight
    } else {
        weight.dual_twist()
    }
}

/// Checks the Theorem A hypotheses for the submodule of `L(w)` generated
/// by `X_{-a_q, k} w+`: the divisibility conditions on `<w, a_q>` and the
/// existence of a simple Weyl module `Delta(restriction + m w_2)` with
/// `m <= k`.  The report applies exactly when both hold (the bound
/// `k <= p - 1` is enforced on input).
pub fn theorem_a(
    omega: &Weight,
    p: u64,
    k: i64,
    q: usize,
) -> Result<TheoremAReport, TheoremsError> {
    let w = into_q1_frame(omega, p, k, q)?;
    let n = w.rank() + 1;
    let a1 = w.coord(1);
    let divisibility: Vec<DivisibilityCheck> = (0..k)
        .map(|l| {
            let residue = (a1 - l).rem_euclid(p as i64) as u64;
            DivisibilityCheck { l, residue, passes: residue != 0 }
        })
        .collect();
    let restricted = w.restrict_q1()?;
    let mut m_witness = None;
    for m in 0..=k {
        if is_weyl_simple(&restricted.bump(1, m), p)?.simple {
            m_witness = Some(m);
            break;
        }
    }
    let target = from_q1_frame(restricted.bump(1, k), q);
    let applies = divisibility.iter().all(|c| c.passes) && m_witness.is_some();
    Ok(TheoremAReport {
        applies,
        n,
        p,
        k,
        q,
        omega: omega.clone(),
        divisibility,
        m_witness,
        target,
    })
}

/// Certificate for the staircase condition on the target Weyl module.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionCertificate {
    pub holds: bool,
    /// Highest weight of the target, in the caller's orientation.
    pub target: Weight,
    /// Drops (in the target root basis, `q = 1` frame) carrying a nonzero
    /// primitive vector of `Delta(target)`, with dimensions.
    pub primitive_drops: Vec<(Vec<i64>, usize)>,
    /// Primitive weights outside the staircase, in the caller's
    /// orientation; empty exactly when the condition holds.
    pub offending: Vec<Weight>,
}

/// Is the ordered drop list a staircase dominated by `k`, meaning
/// `k >= b_1 >= b_2 >= ... >= 0`?
fn staircase_under(k: i64, drop: &[i64]) -> bool {
    let mut prev = k;
    for &b in drop {
        if b < 0 || b > prev {
            return false;
        }
        prev = b;
    }
    true
}

/// Checks the staircase condition of Theorem B: every weight of the
/// target Weyl module over `GF(p)` carrying a nonzero primitive vector
/// must lie in the staircase set `E(1, k)` below the highest weight.
/// Primitivity is tested in the Weyl module itself, not its simple head.
pub fn theorem_b_condition(
    omega: &Weight,
    p: u64,
    k: i64,
    q: usize,
    budget: &Budget,
) -> Result<Outcome<ConditionCertificate>, TheoremsError> {
    let w = into_q1_frame(omega, p, k, q)?;
    let target_q1 = w.restrict_q1()?.bump(1, k);
    let real = match budgeted(Realization::with_budget(&target_q1, p, budget.clone()))? {
        Outcome::Done(r) => r,
        Outcome::Skipped => return Ok(Outcome::Skipped),
    };
    let drops = match budgeted(real.primitive_weight_drops(&[], PrimitiveModule::Weyl))? {
        Outcome::Done(d) => d,
        Outcome::Skipped => return Ok(Outcome::Skipped),
    };
    let offending: Vec<Weight> = drops
        .iter()
        .filter(|(drop, _)| !staircase_under(k, drop))
        .map(|(drop, _)| from_q1_frame(real.weight_of_drop(drop), q))
        .collect();
    Ok(Outcome::Done(ConditionCertificate {
        holds: offending.is_empty(),
        target: from_q1_frame(target_q1, q),
        primitive_drops: drops,
        offending,
    }))
}

/// Result of brute-force verification of the predicted embedding.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct EmbeddingReport {
    /// Whether the generated submodule has the full Weyl dimension.
    pub is_weyl: bool,
    /// Whether the generator `X_{-a_q, k} w+` is nonzero in `L(w)`.
    pub x_nonzero: bool,
    /// Dimension of the submodule of `L(w)` generated by the vector.
    pub dim: u64,
    /// `dim Delta(target)` over a field of characteristic zero.
    pub expected: u64,
}

/// Shared core of [`verify_embedding`] and [`search`]: closes the
/// generator inside an already-built realization and compares dimensions.
fn embedding_scan(real: &Realization, k: i64) -> Result<EmbeddingReport, EngineError> {
    let expected = dim_weyl(&real.omega().restrict_q1().expect("rank >= 2").bump(1, k))?;
    let scan = generated_submodule(real, k as u32)?;
    Ok(EmbeddingReport {
        is_weyl: scan.total_dim == expected,
        x_nonzero: scan.x_nonzero,
        dim: scan.total_dim,
        expected,
    })
}

/// Brute-force check of the Theorem A conclusion: builds `L(w)` over
/// `GF(p)`, closes `X_{-a_q, k} w+` under the subgroup omitting node `q`,
/// and compares the dimension against `dim Delta(target)`.  A vanishing
/// generator yields `dim = 0` and `is_weyl = false`.
pub fn verify_embedding(
    omega: &Weight,
    p: u64,
    k: i64,
    q: usize,
    budget: &Budget,
) -> Result<Outcome<EmbeddingReport>, TheoremsError> {
    let w = into_q1_frame(omega, p, k, q)?;
    let real = match budgeted(Realization::with_budget(&w, p, budget.clone()))? {
        Outcome::Done(r) => r,
        Outcome::Skipped => return Ok(Outcome::Skipped),
    };
    budgeted(embedding_scan(&real, k))
}

/// Both sides of the Theorem B biconditional for one `(w, p, k, q)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConsistencyReport {
    pub divisibility: bool,
    pub condition: bool,
    pub is_weyl: bool,
    /// `is_weyl == (divisibility && condition)`.
    pub consistent: bool,
}

/// Tests the Theorem B biconditional: the generated submodule is a full
/// Weyl module exactly when the divisibility conditions and the staircase
/// condition both hold.  Skips when either oracle runs out of budget.
pub fn theorem_b_consistency(
    omega: &Weight,
    p: u64,
    k: i64,
    q: usize,
    budget: &Budget,
) -> Result<Outcome<ConsistencyReport>, TheoremsError> {
    let report = theorem_a(omega, p, k, q)?;
    let divisibility = report.divisibility_holds();
    let condition = match theorem_b_condition(omega, p, k, q, budget)? {
        Outcome::Done(cert) => cert.holds,
        Outcome::Skipped => return Ok(Outcome::Skipped),
    };
    let embedding = match verify_embedding(omega, p, k, q, budget)? {
        Outcome::Done(e) => e,
        Outcome::Skipped => return Ok(Outcome::Skipped),
    };
    Ok(Outcome::Done(ConsistencyReport {
        divisibility,
        condition,
        is_weyl: embedding.is_weyl,
        consistent: embedding.is_weyl == (divisibility && condition),
    }))
}

/// Where the generated submodule keeps its primitive vectors.
#[derive(Debug, Clone, Serialize)]
pub struct OnlyIfReport {
    pub holds: bool,
    /// Drops of `w` carrying a nonzero primitive vector for the subgroup
    /// omitting node 1, inside the generated submodule, with dimensions.
    pub primitive_drops: Vec<(Vec<i64>, usize)>,
    /// Weights of primitive vectors outside `E(1, k)`; empty iff `holds`.
    pub violations: Vec<Weight>,
}

/// Checks the "only if" direction of the staircase picture in `L(w)`
/// itself: every weight of the generated submodule (`q = 1`) carrying a
/// nonzero primitive vector for the omitted-node subgroup must differ
/// from `w` by an element of the staircase set `E(1, k)`.
pub fn only_if_weights(
    omega: &Weight,
    p: u64,
    k: i64,
    budget: &Budget,
) -> Result<Outcome<OnlyIfReport>, TheoremsError> {
    let w = into_q1_frame(omega, p, k, 1)?;
    let real = match budgeted(Realization::with_budget(&w, p, budget.clone()))? {
        Outcome::Done(r) => r,
        Outcome::Skipped => return Ok(Outcome::Skipped),
    };
    let scan = match budgeted(generated_submodule(&real, k as u32))? {
        Outcome::Done(s) => s,
        Outcome::Skipped => return Ok(Outcome::Skipped),
    };
    let drops = match budgeted(submodule_primitive_drops(&real, &scan, &[1]))? {
        Outcome::Done(d) => d,
        Outcome::Skipped => return Ok(Outcome::Skipped),
    };
    // Membership in E(1, k): first root coordinate exactly k, then a
    // staircase below it.  The closure fixes the first coordinate, so the
    // first test can only fail if the scan itself is broken.
    let violations: Vec<Weight> = drops
        .iter()
        .filter(|(drop, _)| drop[0] != k || !staircase_under(k, &drop[1..]))
        .map(|(drop, _)| real.weight_of_drop(drop))
        .collect();
    Ok(Outcome::Done(OnlyIfReport {
        holds: violations.is_empty(),
        primitive_drops: drops,
        violations,
    }))
}

/// One grid point of the brute-force search.
#[derive(Debug, Clone, Serialize)]
pub struct SearchRecord {
    pub n: usize,
    pub p: u64,
    pub omega: Weight,
    pub k: i64,
    pub q: usize,
    pub theorem_a: TheoremAReport,
    /// Whether `Delta(target)` is already simple over `GF(p)`.
    pub target_simple: bool,
    /// Dimension of the generated submodule, when verification ran.
    pub verified_dim: Outcome<u64>,
    /// Whether every claimed new primitive weight was confirmed to carry
    /// a nonzero primitive vector in `L(w)`; `SKIPPED` when verification
    /// did not run.
    pub primitives_confirmed: Outcome<bool>,
    /// Weights of `L(w)` at which the embedding implies new primitive
    /// vectors for the omitted-node subgroup, beyond the generator line.
    /// Nonempty only when the theorem applies and the target is not
    /// simple.
    pub new_primitive_weights: Vec<Weight>,
}

/// Enumerates dominant weights of `SL_n` with coordinates `0..=max_coord`
/// in lexicographic order.
fn weight_grid(n: usize, max_coord: i64) -> Vec<Weight> {
    let rank = n - 1;
    let mut out = Vec::new();
    let mut coords = vec![0i64; rank];
    loop {
        out.push(Weight::new(coords.clone()).expect("grid weights are valid"));
        let mut pos = rank;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if coords[pos] < max_coord {
                coords[pos] += 1;
                break;
            }
            coords[pos] = 0;
        }
    }
}

/// Maps a drop of the target Weyl module to the weight of `L(w)` where
/// the embedding places the corresponding primitive vector: the target
/// drop gains a leading `k` in the root basis of the large group.
fn lift_target_drop(omega: &Weight, k: i64, drop: &[i64]) -> Result<Weight, TheoremsError> {
    let lifted = RootSum::new(drop.to_vec())?.prepend(k);
    Ok(omega.subtract_rootsum(&lifted)?)
}

/// Brute-force search over the grid of dominant weights with coordinates
/// at most `max_coord` and levels `k <= min(k_max, p - 1)`.  The cheap
/// combinatorial layer (Theorem A hypotheses, Jantzen simplicity of the
/// target) runs on every row in parallel; the expensive oracle layer runs
/// sequentially in grid order against one shared vector budget, so the
/// record list is deterministic.  Rows whose verification does not run,
/// or runs out of budget, are marked `SKIPPED`, never dropped.
pub fn search(
    n: usize,
    p: u64,
    max_coord: i64,
    k_max: i64,
    verify_budget: u64,
) -> Result<Vec<SearchRecord>, TheoremsError> {
    if n < 3 {
        return Err(TheoremsError::RankTooSmall { n });
    }
    let k_hi = k_max.min(p as i64 - 1);
    let mut rows = Vec::new();
    for omega in weight_grid(n, max_coord.max(0)) {
        for k in 0..=k_hi.max(0) {
            rows.push((omega.clone(), k));
        }
    }

    use rayon::prelude::*;
    let cheap: Vec<(TheoremAReport, bool)> = rows
        .par_iter()
        .map(|(omega, k)| -> Result<(TheoremAReport, bool), TheoremsError> {
            let report = theorem_a(omega, p, *k, 1)?;
            let target_simple = is_weyl_simple(&report.target, p)?.simple;
            Ok((report, target_simple))
        })
        .collect::<Result<_, _>>()?;

    let budget = Budget::new(verify_budget);
    let mut records = Vec::with_capacity(rows.len());
    for ((omega, k), (report, target_simple)) in rows.into_iter().zip(cheap) {
        let mut verified_dim = Outcome::Skipped;
        let mut primitives_confirmed = Outcome::Skipped;
        let mut new_primitive_weights = Vec::new();
        if report.applies && !target_simple {
            let target_real =
                budgeted(Realization::with_budget(&report.target, p, budget.clone()))?;
            let harvest = match target_real {
                Outcome::Done(tr) => {
                    budgeted(tr.primitive_weight_drops(&[], PrimitiveModule::Weyl))?
                }
                Outcome::Skipped => Outcome::Skipped,
            };
            if let Outcome::Done(drops) = harvest {
                for (drop, _) in &drops {
                    if drop.iter().any(|&b| b != 0) {
                        new_primitive_weights.push(lift_target_drop(&omega, k, drop)?);
                    }
                }
                let real = budgeted(Realization::with_budget(&omega, p, budget.clone()))?;
                if let Outcome::Done(real) = real {
                    verified_dim = budgeted(embedding_scan(&real, k))?
                        .as_done()
                        .map(|e| Outcome::Done(e.dim))
                        .unwrap_or(Outcome::Skipped);
                    let mut confirmed = Outcome::Done(true);
                    for mu in &new_primitive_weights {
                        match budgeted(real.primitive_vectors(
                            mu,
                            &[1],
                            PrimitiveModule::Simple,
                        ))? {
                            Outcome::Done(basis) => {
                                if basis.dimension() == 0 {
                                    confirmed = Outcome::Done(false);
                                    break;
                                }
                            }
                            Outcome::Skipped => {
                                confirmed = Outcome::Skipped;
                                break;
                            }
                        }
                    }
                    primitives_confirmed = confirmed;
                }
            }
        }
        records.push(SearchRecord {
            n,
            p,
            omega,
            k,
            q: 1,
            theorem_a: report,
            target_simple,
            verified_dim,
            primitives_confirmed,
            new_primitive_weights,
        });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_weight::e_set;

    fn w(coords: &[i64]) -> Weight {
        Weight::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn level_four_on_the_4_3_weight_applies_with_witness_zero() {
        let report = theorem_a(&w(&[4, 3]), 5, 4, 1).unwrap();
        assert!(report.applies);
        assert_eq!(report.m_witness, Some(0));
        assert_eq!(report.target, w(&[7]));
        assert_eq!(report.divisibility.len(), 4);
        assert!(report.divisibility_holds());
    }

    #[test]
    fn dual_node_reduces_to_node_one_on_the_flipped_weight() {
        let left = theorem_a(&w(&[3, 4]), 5, 4, 2).unwrap();
        let right = theorem_a(&w(&[4, 3]), 5, 4, 1).unwrap();
        assert_eq!(left.applies, right.applies);
        assert_eq!(left.m_witness, right.m_witness);
        assert_eq!(left.target, right.target.dual_twist());
        let lres: Vec<u64> = left.divisibility.iter().map(|c| c.residue).collect();
        let rres: Vec<u64> = right.divisibility.iter().map(|c| c.residue).collect();
        assert_eq!(lres, rres);
    }

    #[test]
    fn divisibility_fails_at_l_equal_to_the_first_coordinate() {
        let report = theorem_a(&w(&[3, 3, 1, 2]), 5, 4, 1).unwrap();
        assert!(!report.applies);
        let failing: Vec<i64> = report
            .divisibility
            .iter()
            .filter(|c| !c.passes)
            .map(|c| c.l)
            .collect();
        assert_eq!(failing, vec![3]);
        for k in 1..=3 {
            assert!(theorem_a(&w(&[3, 3, 1, 2]), 5, k, 1).unwrap().applies);
        }
    }

    #[test]
    fn level_at_least_p_is_rejected() {
        assert!(matches!(
            theorem_a(&w(&[4, 3]), 5, 5, 1),
            Err(TheoremsError::KOutOfRange { .. })
        ));
        assert!(matches!(
            theorem_a(&w(&[4, 3]), 5, -1, 1),
            Err(TheoremsError::KOutOfRange { .. })
        ));
    }

    #[test]
    fn interior_nodes_and_nondominant_weights_are_rejected() {
        assert!(matches!(
            theorem_a(&w(&[1, 1, 1]), 5, 1, 2),
            Err(TheoremsError::InvalidQ { .. })
        ));
        assert!(matches!(
            theorem_a(&w(&[1, -1]), 5, 1, 1),
            Err(TheoremsError::NonDominant(_))
        ));
    }

    #[test]
    fn level_zero_applies_exactly_when_the_restriction_is_simple() {
        for coords in [[4i64, 3], [1, 1], [3, 0]] {
            let report = theorem_a(&w(&coords), 5, 0, 1).unwrap();
            let simple = is_weyl_simple(&report.target, 5).unwrap().simple;
            assert_eq!(report.applies, simple, "weight {coords:?}");
        }
    }

    #[test]
    fn staircase_condition_holds_for_the_embedded_sl2_string() {
        let budget = Budget::unlimited();
        let cert = theorem_b_condition(&w(&[4, 3]), 5, 4, 1, &budget)
            .unwrap()
            .as_done()
            .cloned()
            .unwrap();
        assert!(cert.holds);
        assert_eq!(cert.target, w(&[7]));
        assert_eq!(cert.primitive_drops, vec![(vec![0], 1), (vec![3], 1)]);
        assert!(cert.offending.is_empty());
    }

    #[test]
    fn staircase_membership_agrees_with_the_e_set() {
        for k in 0..=4i64 {
            let listed: Vec<Vec<i64>> =
                e_set(4, k).into_iter().map(|s| s.coeffs().to_vec()).collect();
            for b2 in 0..=5i64 {
                for b3 in 0..=5i64 {
                    let member = listed.iter().any(|s| s[1..] == [b2, b3]);
                    assert_eq!(member, staircase_under(k, &[b2, b3]), "k={k} b=({b2},{b3})");
                }
            }
        }
    }

    #[test]
    fn embedding_of_the_full_sl2_weyl_module_is_verified() {
        let budget = Budget::unlimited();
        let emb = verify_embedding(&w(&[4, 3]), 5, 4, 1, &budget)
            .unwrap()
            .as_done()
            .copied()
            .unwrap();
        assert!(emb.is_weyl);
        assert!(emb.x_nonzero);
        assert_eq!(emb.dim, 8);
        assert_eq!(emb.expected, 8);
    }

    #[test]
    fn vanishing_generator_reports_a_zero_submodule() {
        let budget = Budget::unlimited();
        let emb = verify_embedding(&w(&[1, 3]), 5, 2, 1, &budget)
            .unwrap()
            .as_done()
            .copied()
            .unwrap();
        assert!(!emb.x_nonzero);
        assert!(!emb.is_weyl);
        assert_eq!(emb.dim, 0);
        assert_eq!(emb.expected, 6);
    }

    #[test]
    fn biconditional_is_consistent_on_small_rank_two_points() {
        let budget = Budget::unlimited();
        for (coords, p, k) in [([4i64, 3], 5, 4), ([1, 1], 3, 1), ([2, 2], 3, 2)] {
            let rep = theorem_b_consistency(&w(&coords), p, k, 1, &budget)
                .unwrap()
                .as_done()
                .copied()
                .unwrap();
            assert!(rep.consistent, "({coords:?}, p={p}, k={k}): {rep:?}");
        }
    }

    #[test]
    fn primitive_weights_of_the_generated_submodule_stay_in_the_staircase() {
        let budget = Budget::unlimited();
        let rep = only_if_weights(&w(&[4, 3]), 5, 4, &budget)
            .unwrap()
            .as_done()
            .cloned()
            .unwrap();
        assert!(rep.holds);
        assert_eq!(rep.primitive_drops, vec![(vec![4, 0], 1), (vec![4, 3], 1)]);
    }

    #[test]
    fn budget_exhaustion_is_reported_as_skipped() {
        let budget = Budget::new(3);
        let out = verify_embedding(&w(&[4, 3]), 5, 4, 1, &budget).unwrap();
        assert!(out.is_skipped());
        let out = theorem_b_condition(&w(&[4, 3]), 5, 4, 1, &budget).unwrap();
        assert!(out.is_skipped());
    }

    #[test]
    fn search_emits_one_record_per_grid_point_in_lex_order() {
        let records = search(3, 2, 1, 3, 1_000_000).unwrap();
        let expected: Vec<(Vec<i64>, i64)> = [
            ([0, 0], 0), ([0, 0], 1), ([0, 1], 0), ([0, 1], 1),
            ([1, 0], 0), ([1, 0], 1), ([1, 1], 0), ([1, 1], 1),
        ]
        .iter()
        .map(|(c, k)| (c.to_vec(), *k))
        .collect();
        let got: Vec<(Vec<i64>, i64)> =
            records.iter().map(|r| (r.omega.coords().to_vec(), r.k)).collect();
        assert_eq!(got, expected);
        for r in &records {
            assert_eq!(r.q, 1);
            if !r.new_primitive_weights.is_empty() {
                assert!(r.theorem_a.applies && !r.target_simple);
            }
            if r.k == 0 {
                assert!(r.new_primitive_weights.is_empty());
            }
        }
    }

    #[test]
    fn search_finds_the_embedded_string_of_the_first_example() {
        let records = search(3, 5, 4, 4, 10_000_000).unwrap();
        let row = records
            .iter()
            .find(|r| r.omega == w(&[4, 3]) && r.k == 4)
            .unwrap();
        assert!(row.theorem_a.applies);
        assert!(!row.target_simple);
        assert_eq!(row.verified_dim, Outcome::Done(8));
        assert_eq!(row.primitives_confirmed, Outcome::Done(true));
        let mu = w(&[4, 3]).subtract_rootsum(&RootSum::new(vec![4, 3]).unwrap()).unwrap();
        assert_eq!(row.new_primitive_weights, vec![mu]);
    }

    #[test]
    fn exhausted_search_budget_marks_rows_skipped() {
        let records = search(3, 5, 4, 4, 10).unwrap();
        let row = records
            .iter()
            .find(|r| r.omega == w(&[4, 3]) && r.k == 4)
            .unwrap();
        assert!(row.verified_dim.is_skipped());
    }
}
