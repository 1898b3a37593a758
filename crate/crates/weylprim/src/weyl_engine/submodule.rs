//! The submodule of `L(w)` generated by `X_{-alpha_1, k} w+` under the
//! subgroup generated by the root subgroups away from the first node.
//!
//! The generator `x0 = X_{-alpha_1, k} w+` is taken in the simple quotient
//! (its class mod the radical).  The closure runs over the divided powers
//! `X_{+-alpha_i, m}` with `i >= 2` and `m` a power of `p`, which generate
//! the relevant hyperalgebra up to units; toral generators act by scalars
//! on weight vectors and add nothing.  Per weight space the scan keeps an
//! echelon seeded with the radical, so new rows count dimensions of the
//! image in `L(w)`, not in the Weyl module.

use super::realize::{PrimitiveModule, Realization};
use super::{EngineError, Operator, OperatorKind};
use crate::gfp_linalg::{GFpMatrix, GFpVector};
use crate::root_weight::PositiveRoot;
use std::collections::{BTreeMap, VecDeque};

/// Result of closing `x0` under the omitted-node subgroup inside `L(w)`.
#[derive(Debug)]
pub struct SubmoduleScan {
    pub k: u32,
    /// Whether the generator is nonzero in `L(w)`.
    pub x_nonzero: bool,
    /// Dimension of the generated submodule of `L(w)`.
    pub total_dim: u64,
    /// Per-drop dimensions, sorted by drop.
    pub weights: Vec<(Vec<i64>, usize)>,
    members: BTreeMap<Vec<i64>, Vec<GFpVector<usize>>>,
}

impl SubmoduleScan {
    /// Coset representatives spanning the submodule's weight space at
    /// `drop`, in `Delta(w)^mu` basis coordinates; independent modulo the
    /// radical.
    pub fn members(&self, drop: &[i64]) -> &[GFpVector<usize>] {
        self.members.get(drop).map(Vec::as_slice).unwrap_or(&[])
    }
}

struct DropState {
    ech: GFpMatrix<usize>,
    reps: Vec<GFpVector<usize>>,
}

fn p_power_list(p: u64, bound: i64) -> Vec<u32> {
    let mut out = Vec::new();
    let mut m = 1u64;
    while (m as i64) <= bound {
        out.push(m as u32);
        match m.checked_mul(p) {
            Some(next) => m = next,
            None => break,
        }
    }
    out
}

/// Closes `X_{-alpha_1, k} w+` in `L(w)` under the root subgroups for
/// `alpha_2, ..., alpha_{n-1}` and reports the dimensions found.
pub fn generated_submodule(real: &Realization, k: u32) -> Result<SubmoduleScan, EngineError> {
    let rank = real.omega().rank();
    let p = real.modulus();
    let x0 = real.apply(
        &Operator::lower(PositiveRoot::simple(1), k),
        &real.highest_vector(),
    )?;
    let mut drop0 = vec![0i64; rank];
    drop0[0] = k as i64;

    let mut states: BTreeMap<Vec<i64>, DropState> = BTreeMap::new();
    let mut queue: VecDeque<(Vec<i64>, GFpVector<usize>)> = VecDeque::new();
    let x_nonzero = insert_member(real, &mut states, &mut queue, &drop0, &x0)?;

    while let Some((drop, rep)) = queue.pop_front() {
        let model = real.weight_space_by_drop(&drop)?;
        let ambient = model.realize(&rep);
        for i in 2..=rank {
            let raise_bound = drop[i - 1];
            let lower_bound = real.max_drop()[i - 1] - drop[i - 1];
            for (kind, m) in p_power_list(p, raise_bound)
                .into_iter()
                .map(|m| (OperatorKind::Raise, m))
                .chain(
                    p_power_list(p, lower_bound)
                        .into_iter()
                        .map(|m| (OperatorKind::Lower, m)),
                )
            {
                let root = PositiveRoot::simple(i);
                let (op, delta) = match kind {
                    OperatorKind::Raise => (Operator::raise(root, m), -(m as i64)),
                    _ => (Operator::lower(root, m), m as i64),
                };
                let img = real.apply(&op, &ambient)?;
                if img.is_zero() {
                    continue;
                }
                let mut target = drop.clone();
                target[i - 1] += delta;
                insert_member(real, &mut states, &mut queue, &target, &img)?;
            }
        }
    }

    let mut weights = Vec::new();
    let mut members = BTreeMap::new();
    let mut total_dim = 0u64;
    for (drop, state) in states {
        if state.reps.is_empty() {
            continue;
        }
        total_dim += state.reps.len() as u64;
        weights.push((drop.clone(), state.reps.len()));
        members.insert(drop, state.reps);
    }
    Ok(SubmoduleScan { k, x_nonzero, total_dim, weights, members })
}

/// Inserts an ambient vector's class mod the radical into the per-drop
/// echelon; returns whether it added a dimension.
fn insert_member(
    real: &Realization,
    states: &mut BTreeMap<Vec<i64>, DropState>,
    queue: &mut VecDeque<(Vec<i64>, GFpVector<usize>)>,
    drop: &[i64],
    ambient: &GFpVector<crate::weyl_engine::AmbientIndex>,
) -> Result<bool, EngineError> {
    if ambient.is_zero() {
        return Ok(false);
    }
    let model = real.weight_space_by_drop(drop)?;
    let coords = model
        .coordinates(ambient)
        .expect("the submodule closure stays inside Delta(w)");
    let state = states.entry(drop.to_vec()).or_insert_with(|| DropState {
        ech: model.radical().clone(),
        reps: Vec::new(),
    });
    let mut v = coords;
    state.ech.reduce(&mut v);
    if v.is_zero() {
        return Ok(false);
    }
    state.ech.insert_echelon(v.clone());
    state.reps.push(v.clone());
    queue.push_back((drop.to_vec(), v));
    Ok(true)
}

/// Drops of the submodule carrying a nonzero primitive vector of `L(w)`
/// for the given omitted set, with dimensions.
pub fn submodule_primitive_drops(
    real: &Realization,
    scan: &SubmoduleScan,
    omitted: &[usize],
) -> Result<Vec<(Vec<i64>, usize)>, EngineError> {
    let mut out = Vec::new();
    for (drop, _) in &scan.weights {
        let model = real.weight_space_by_drop(drop)?;
        let sols = real.primitive_solutions_over(
            &model,
            drop,
            scan.members(drop),
            omitted,
            PrimitiveModule::Simple,
        )?;
        if !sols.is_empty() {
            out.push((drop.clone(), sols.len()));
        }
    }
    Ok(out)
}
