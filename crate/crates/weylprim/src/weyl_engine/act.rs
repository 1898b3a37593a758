//! Divided-power operator action on the ambient tensor-of-wedges basis.
//!
//! A root operator for the interval `[i, j)` moves one wedge index
//! (`i -> j` when lowering, `j -> i` when raising) inside a single factor,
//! with the sign of re-sorting the wedge.  The divided power `m`
//! distributes over the tensor factors by comultiplication; within one
//! wedge factor only powers 0 and 1 survive, because a single wedge cannot
//! contain the moved index twice.  So `X_{.., m}` is a signed sum over
//! `m`-subsets of factors, each chosen factor receiving the one-step move.

use super::ambient::{AmbientIndex, FactorPattern};
use super::{EngineError, Operator, OperatorKind};
use crate::gfp_linalg::{GFpVector, SparseIntVector};
use num_bigint::BigInt;

/// Bits strictly between positions `a` and `b` (1-based values, `a < b`).
fn between_mask(a: usize, b: usize) -> u16 {
    let hi = (1u32 << (b - 1)) - 1;
    let lo = (1u32 << a) - 1;
    (hi & !lo) as u16
}

/// Generalized binomial coefficient `binom(t, m)` for integer `t`.
fn binom(t: i64, m: u32) -> i64 {
    let mut acc: i128 = 1;
    for r in 1..=m as i128 {
        acc = acc * (t as i128 - r + 1) / r;
    }
    acc as i64
}

/// All terms of `op` applied to one basis tensor: pairs of a target index
/// and an integer coefficient (always +-1 for root operators).
pub(crate) fn index_terms(
    pattern: &FactorPattern,
    op: &Operator,
    index: &AmbientIndex,
) -> Result<Vec<(AmbientIndex, i64)>, EngineError> {
    let n = pattern.n();
    let (i, j) = (op.root.i, op.root.j);
    if j > n {
        return Err(EngineError::RootTooLarge { i, j, n });
    }
    if op.power == 0 {
        return Ok(vec![(index.clone(), 1)]);
    }
    match op.kind {
        OperatorKind::Diag => {
            let pairing = pattern.index_weight(index).coord(i);
            let c = binom(pairing, op.power);
            Ok(if c == 0 { Vec::new() } else { vec![(index.clone(), c)] })
        }
        OperatorKind::Lower => Ok(move_terms(index, i, j, op.power)),
        OperatorKind::Raise => Ok(move_terms(index, j, i, op.power)),
    }
}

/// Signed sum over ways to replace `from` by `to` in `m` distinct factors.
fn move_terms(index: &AmbientIndex, from: usize, to: usize, m: u32) -> Vec<(AmbientIndex, i64)> {
    let from_bit = 1u16 << (from - 1);
    let to_bit = 1u16 << (to - 1);
    let between = between_mask(from.min(to), from.max(to));
    // factors where the move is possible, with the sign it would produce
    let mut moves: Vec<(usize, u16, i64)> = Vec::new();
    for (f, &mask) in index.masks().iter().enumerate() {
        if mask & from_bit != 0 && mask & to_bit == 0 {
            let crossed = (mask & between).count_ones();
            let sign = if crossed % 2 == 0 { 1 } else { -1 };
            moves.push((f, (mask & !from_bit) | to_bit, sign));
        }
    }
    let m = m as usize;
    if moves.len() < m {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(m);
    pick_moves(index, &moves, 0, m, &mut chosen, &mut out);
    out
}

fn pick_moves(
    index: &AmbientIndex,
    moves: &[(usize, u16, i64)],
    start: usize,
    left: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<(AmbientIndex, i64)>,
) {
    if left == 0 {
        let mut masks = index.masks().to_vec();
        let mut sign = 1i64;
        for &c in chosen.iter() {
            let (f, new_mask, s) = moves[c];
            masks[f] = new_mask;
            sign *= s;
        }
        out.push((AmbientIndex::new(masks), sign));
        return;
    }
    for c in start..=moves.len() - left {
        chosen.push(c);
        pick_moves(index, moves, c + 1, left - 1, chosen, out);
        chosen.pop();
    }
}

/// Exact action of a divided-power operator on an integer vector; used by
/// the identity tests and anywhere exact lattice arithmetic is required.
pub fn act(
    omega: &crate::root_weight::Weight,
    op: &Operator,
    v: &SparseIntVector<AmbientIndex>,
) -> Result<SparseIntVector<AmbientIndex>, EngineError> {
    let pattern = FactorPattern::for_weight(omega)?;
    let mut out = SparseIntVector::zero();
    for (index, coeff) in v.iter() {
        if !pattern.matches(index) {
            return Err(EngineError::PatternMismatch);
        }
        for (target, c) in index_terms(&pattern, op, index)? {
            out.insert_add(target, coeff * BigInt::from(c));
        }
    }
    Ok(out)
}

/// The same action with coefficients already reduced mod p.
pub(crate) fn act_gfp(
    pattern: &FactorPattern,
    op: &Operator,
    v: &GFpVector<AmbientIndex>,
) -> Result<GFpVector<AmbientIndex>, EngineError> {
    let p = v.modulus();
    let mut out = GFpVector::zero(p);
    for (index, &coeff) in v.iter() {
        for (target, c) in index_terms(pattern, op, index)? {
            let c_mod = (c.rem_euclid(p as i64)) as u64;
            out.insert_add(target, (coeff as u128 * c_mod as u128 % p as u128) as u64);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_weight::{PositiveRoot, Weight};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn w(coords: &[i64]) -> Weight {
        Weight::new(coords.to_vec()).unwrap()
    }

    fn unit(masks: Vec<u16>) -> SparseIntVector<AmbientIndex> {
        SparseIntVector::unit(AmbientIndex::new(masks))
    }

    fn root(i: usize, j: usize) -> PositiveRoot {
        PositiveRoot::new(i, j).unwrap()
    }

    #[test]
    fn lowering_into_an_occupied_wedge_slot_vanishes() {
        // X_{-alpha_1} (e_1 ^ e_2) = e_2 ^ e_2 = 0
        let omega = w(&[0, 1]);
        let v = unit(vec![0b011]);
        let out = act(&omega, &Operator::lower(root(1, 2), 1), &v).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn divided_square_spreads_over_two_factors() {
        // X_{-alpha_1, 2} (e_1 (x) e_1) = e_2 (x) e_2: only the (1,1) split
        let omega = w(&[2]);
        let v = unit(vec![0b01, 0b01]);
        let out = act(&omega, &Operator::lower(root(1, 2), 2), &v).unwrap();
        assert_eq!(out.get(&AmbientIndex::new(vec![0b10, 0b10])), BigInt::from(1));
        assert_eq!(out.len(), 1);
        // and the cube is zero: only two factors can move
        let cube = act(&omega, &Operator::lower(root(1, 2), 3), &v).unwrap();
        assert!(cube.is_zero());
    }

    #[test]
    fn sl2_string_relation_on_the_highest_vector() {
        // X_{alpha_1, k} X_{-alpha_1, k} w+ = binom(a_1, k) w+
        for a1 in 1..=5i64 {
            let omega = w(&[a1, 1]);
            let pattern = FactorPattern::for_weight(&omega).unwrap();
            let top = SparseIntVector::unit(pattern.highest());
            for k in 0..=a1 as u32 + 1 {
                let down = act(&omega, &Operator::lower(root(1, 2), k), &top).unwrap();
                let back = act(&omega, &Operator::raise(root(1, 2), k), &down).unwrap();
                let mut expected = SparseIntVector::zero();
                expected.add_scaled(&top, &BigInt::from(binom(a1, k)));
                assert_eq!(back, expected, "a1 = {a1}, k = {k}");
            }
        }
    }

    #[test]
    fn toral_operator_scales_by_binomials() {
        let omega = w(&[3, 0, 2]);
        let pattern = FactorPattern::for_weight(&omega).unwrap();
        let top = SparseIntVector::unit(pattern.highest());
        for (i, a) in [(1usize, 3i64), (2, 0), (3, 2)] {
            for m in 0..4u32 {
                let out = act(&omega, &Operator::diag(i, m), &top).unwrap();
                let mut expected = SparseIntVector::zero();
                expected.add_scaled(&top, &BigInt::from(binom(a, m)));
                assert_eq!(out, expected);
            }
        }
    }

    #[test]
    fn action_respects_weights() {
        let omega = w(&[1, 1]);
        let pattern = FactorPattern::for_weight(&omega).unwrap();
        let top = SparseIntVector::unit(pattern.highest());
        let alpha = root(1, 3);
        let down = act(&omega, &Operator::lower(alpha.clone(), 1), &top).unwrap();
        let expected_weight = omega.subtract_rootsum(&alpha.as_rootsum(2).unwrap()).unwrap();
        for (idx, _) in down.iter() {
            assert_eq!(pattern.index_weight(idx), expected_weight);
        }
        assert!(!down.is_zero());
    }

    #[test]
    fn pattern_mismatch_is_reported() {
        let omega = w(&[1, 1]);
        let v = unit(vec![0b1]);
        assert!(matches!(
            act(&omega, &Operator::lower(root(1, 2), 1), &v),
            Err(EngineError::PatternMismatch)
        ));
        let v = unit(vec![0b1, 0b11]);
        assert!(matches!(
            act(&omega, &Operator::lower(root(1, 5), 1), &v),
            Err(EngineError::RootTooLarge { .. })
        ));
    }

    /// Pseudo-random small lattice vectors in the `(1,1,1)` ambient of SL_4.
    fn arb_vector() -> impl Strategy<Value = SparseIntVector<AmbientIndex>> {
        let masks1 = [0b0001u16, 0b0010, 0b0100, 0b1000];
        let masks2 = [0b0011u16, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100];
        let masks3 = [0b0111u16, 0b1011, 0b1101, 0b1110];
        prop::collection::vec((0usize..4, 0usize..6, 0usize..4, -3i64..=3), 1..5).prop_map(
            move |picks| {
                let mut v = SparseIntVector::zero();
                for (f1, f2, f3, c) in picks {
                    let idx = AmbientIndex::new(vec![masks1[f1], masks2[f2], masks3[f3]]);
                    v.insert_add(idx, BigInt::from(c));
                }
                v
            },
        )
    }

    proptest! {
        /// The contravariant property: lowering and raising by the same
        /// root are adjoint for the ambient orthonormal dot product.
        #[test]
        fn lowering_and_raising_are_adjoint(
            u in arb_vector(), v in arb_vector(),
            ij in prop::sample::select(vec![(1usize, 2usize), (2, 3), (3, 4), (1, 3), (2, 4), (1, 4)]),
            m in 1u32..=2,
        ) {
            let omega = w(&[1, 1, 1]);
            let alpha = root(ij.0, ij.1);
            let xu = act(&omega, &Operator::lower(alpha.clone(), m), &u).unwrap();
            let xv = act(&omega, &Operator::raise(alpha, m), &v).unwrap();
            prop_assert_eq!(xu.inner(&v), u.inner(&xv));
        }
    }
}
