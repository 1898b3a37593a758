//! Characteristic-zero weight multiplicities by Freudenthal's recursion.
//!
//! This is the independent oracle for the rank of every realized weight
//! space: the character of a Weyl module does not depend on the
//! characteristic, so the mod-p rank must match the recursion's value.
//! All inner products are computed exactly, scaled by `n` to stay in
//! integers; non-dominant weights are conjugated into the dominant
//! chamber, where the recursion's denominator is positive.

use crate::root_weight::{positive_roots, RootSum, Weight};
use std::collections::HashMap;

/// Memoized multiplicity table for one highest weight.
#[derive(Debug)]
pub struct FreudenthalTable {
    omega: Weight,
    n: usize,
    /// Per positive root: simple-root coefficients and the root written in
    /// fundamental coordinates.
    roots: Vec<(Vec<i64>, Weight)>,
    memo: HashMap<Vec<i64>, u64>,
}

/// Coefficients of a weight on the standard basis `e_1..e_n` before
/// centering: fundamental coordinate `t_i` contributes to `e_1..e_i`.
fn eps_coords(coords: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n];
    let mut acc = 0i64;
    for k in (0..coords.len()).rev() {
        acc += coords[k];
        out[k] = acc;
    }
    out
}

/// `n` times the Weyl-invariant inner product normalized by
/// `(alpha, alpha) = 2` for roots.
fn scaled_inner(x: &Weight, y: &Weight, n: usize) -> i128 {
    let tx = eps_coords(x.coords(), n);
    let ty = eps_coords(y.coords(), n);
    let dot: i128 = tx.iter().zip(&ty).map(|(&a, &b)| a as i128 * b as i128).sum();
    let sx: i128 = tx.iter().map(|&a| a as i128).sum();
    let sy: i128 = ty.iter().map(|&a| a as i128).sum();
    n as i128 * dot - sx * sy
}

/// The dominant Weyl-conjugate: sort the `e`-basis coefficients in
/// decreasing order and convert back.
fn dominant_conjugate(mu: &Weight, n: usize) -> Weight {
    let mut t = eps_coords(mu.coords(), n);
    t.sort_unstable_by(|a, b| b.cmp(a));
    let coords = (0..n - 1).map(|k| t[k] - t[k + 1]).collect();
    Weight::new(coords).expect("n >= 2")
}

impl FreudenthalTable {
    pub fn new(omega: &Weight) -> Self {
        let n = omega.rank() + 1;
        let roots = positive_roots(n)
            .into_iter()
            .map(|alpha| {
                let rs = alpha.as_rootsum(n - 1).expect("root fits rank");
                let as_weight = rs.to_weight();
                (rs.coeffs().to_vec(), as_weight)
            })
            .collect();
        FreudenthalTable { omega: omega.clone(), n, roots, memo: HashMap::new() }
    }

    pub fn omega(&self) -> &Weight {
        &self.omega
    }

    /// Multiplicity of `mu` in the characteristic-zero module of highest
    /// weight `omega`; zero when `omega - mu` is not a nonnegative root sum.
    pub fn multiplicity(&mut self, mu: &Weight) -> u64 {
        let Some(drop) = self.omega.sub(mu).ok().and_then(|d| d.root_coordinates()) else {
            return 0;
        };
        self.multiplicity_by_drop(&drop)
    }

    fn multiplicity_by_drop(&mut self, drop: &[i64]) -> u64 {
        if drop.iter().any(|&c| c < 0) {
            return 0;
        }
        if drop.iter().all(|&c| c == 0) {
            return 1;
        }
        if let Some(&m) = self.memo.get(drop) {
            return m;
        }
        let drop_weight = RootSum::new(drop.to_vec()).expect("rank matches").to_weight();
        let mu = self.omega.sub(&drop_weight).expect("same rank");
        let m = if mu.is_dominant() {
            self.dominant_multiplicity(&mu, drop)
        } else {
            let conj = dominant_conjugate(&mu, self.n);
            self.multiplicity(&conj)
        };
        self.memo.insert(drop.to_vec(), m);
        m
    }

    fn dominant_multiplicity(&mut self, mu: &Weight, drop: &[i64]) -> u64 {
        let n = self.n;
        let mut numerator: i128 = 0;
        let roots = self.roots.clone();
        for (coeffs, alpha_weight) in &roots {
            let mut level = mu.clone();
            for j in 1.. {
                if drop
                    .iter()
                    .zip(coeffs)
                    .any(|(&d, &c)| d - j * c < 0)
                {
                    break;
                }
                level = level.add(alpha_weight).expect("same rank");
                let shifted: Vec<i64> =
                    drop.iter().zip(coeffs).map(|(&d, &c)| d - j * c).collect();
                let mult = self.multiplicity_by_drop(&shifted);
                if mult > 0 {
                    // n * (mu + j*alpha, alpha) = n * sum_k c_k * coords_k
                    let pair: i128 = level
                        .coords()
                        .iter()
                        .zip(coeffs)
                        .map(|(&x, &c)| x as i128 * c as i128)
                        .sum();
                    numerator += mult as i128 * pair * n as i128;
                }
            }
        }
        let rho = Weight::rho(n - 1);
        let top = self.omega.add(&rho).expect("same rank");
        let here = mu.add(&rho).expect("same rank");
        let denominator = scaled_inner(&top, &top, n) - scaled_inner(&here, &here, n);
        assert!(denominator > 0, "dominant mu below omega has positive denominator");
        let twice = 2 * numerator;
        assert_eq!(twice % denominator, 0, "Freudenthal division must be exact");
        u64::try_from(twice / denominator).expect("multiplicities are nonnegative")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(coords: &[i64]) -> Weight {
        Weight::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn sl2_strings_have_multiplicity_one() {
        let mut t = FreudenthalTable::new(&w(&[4]));
        for k in 0..=4 {
            assert_eq!(t.multiplicity(&w(&[4 - 2 * k])), 1, "k = {k}");
        }
        assert_eq!(t.multiplicity(&w(&[-6])), 0);
        assert_eq!(t.multiplicity(&w(&[3])), 0);
    }

    #[test]
    fn adjoint_of_sl3_has_a_double_zero_weight() {
        let omega = w(&[1, 1]);
        let mut t = FreudenthalTable::new(&omega);
        assert_eq!(t.multiplicity(&w(&[0, 0])), 2);
        assert_eq!(t.multiplicity(&omega), 1);
        assert_eq!(t.multiplicity(&w(&[-1, 2])), 1);
        assert_eq!(t.multiplicity(&w(&[2, -1])), 1);
    }

    #[test]
    fn multiplicities_sum_to_the_weyl_dimension() {
        for coords in [vec![2i64, 1], vec![1, 0, 1], vec![2, 0, 1]] {
            let omega = w(&coords);
            let mut t = FreudenthalTable::new(&omega);
            let expected = super::super::realize::dim_weyl(&omega).unwrap();
            let max_drop = omega
                .add(&omega.dual_twist())
                .unwrap()
                .root_coordinates()
                .expect("omega + reversed omega is in the root lattice");
            let mut total = 0u64;
            let mut stack = vec![Vec::new()];
            while let Some(prefix) = stack.pop() {
                if prefix.len() == max_drop.len() {
                    total += t.multiplicity_by_drop(&prefix);
                    continue;
                }
                for c in 0..=max_drop[prefix.len()] {
                    let mut next = prefix.clone();
                    next.push(c);
                    stack.push(next);
                }
            }
            assert_eq!(total, expected, "omega = {omega}");
        }
    }

    #[test]
    fn conjugation_returns_a_dominant_weight_of_equal_multiplicity() {
        let omega = w(&[2, 1]);
        let mut t = FreudenthalTable::new(&omega);
        // (-1, 2) is the reflection of (1, 1) through the first wall
        assert_eq!(t.multiplicity(&w(&[-1, 2])), t.multiplicity(&w(&[1, 1])));
        assert!(dominant_conjugate(&w(&[-1, 2]), 3).is_dominant());
    }
}
