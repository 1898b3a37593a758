//! Weight-space-local realization of `Delta(w)` and `L(w)` over `GF(p)`.
//!
//! Each weight space is spanned recursively: the space at drop `d` is the
//! sum of the images of the spaces at drops `d - m e_i` under the divided
//! powers `X_{-alpha_i, m}`, with `m` running over powers of `p` only.
//! That is enough because every divided power factors, up to a unit, as a
//! product of `p`-power divided powers (the binomial carries vanish by
//! Lucas), and the hyperalgebra of the unipotent radical is generated by
//! simple-root divided powers.  The same argument lets primitivity be
//! tested against `p`-power raisings alone.
//!
//! Spans are echelonized into reduced row echelon form, which is unique
//! for a subspace, so every basis here is canonical no matter in which
//! order vectors were found.  The Gram matrix of the contravariant form
//! (the ambient orthonormal dot product) has the radical of `L(w)` as its
//! kernel; primitive-vector spaces are joint kernels of the raising
//! operators, taken either exactly (inside the Weyl module) or modulo the
//! radical (inside the simple quotient).

use super::act::act_gfp;
use super::ambient::{AmbientIndex, FactorPattern};
use super::freudenthal::FreudenthalTable;
use super::{Budget, EngineError, Operator};
use crate::gfp_linalg::{is_prime, GFpMatrix, GFpVector};
use crate::root_weight::{positive_roots, PositiveRoot, RootSum, Weight};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// The Weyl dimension formula: product over positive roots of
/// `<w + rho, alpha> / <rho, alpha>`, evaluated exactly.
pub fn dim_weyl(omega: &Weight) -> Result<u64, EngineError> {
    if !omega.is_dominant() {
        return Err(EngineError::NonDominant(omega.clone()));
    }
    let rank = omega.rank();
    let rho = Weight::rho(rank);
    let shifted = omega.add(&rho).expect("same rank");
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for alpha in positive_roots(rank + 1) {
        num *= BigUint::from(shifted.pairing(&alpha).expect("root fits rank") as u64);
        den *= BigUint::from(alpha.height() as u64);
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "Weyl dimension is an integer");
    u64::try_from(q).map_err(|_| EngineError::DimensionOverflow)
}

/// Powers of `p` up to `bound`: the exponents needed to span and to test
/// primitivity, by the Lucas factorization of divided powers.
fn p_powers(p: u64, bound: i64) -> Vec<u32> {
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

/// One realized weight space of `Delta(w)` mod p.
#[derive(Debug)]
pub struct WeightSpaceModel {
    mu: Weight,
    drop: Vec<i64>,
    p: u64,
    basis: GFpMatrix<AmbientIndex>,
    gram: Vec<GFpVector<usize>>,
    gram_rank: usize,
    rad: GFpMatrix<usize>,
    char0_mult: u64,
}

impl WeightSpaceModel {
    pub fn mu(&self) -> &Weight {
        &self.mu
    }

    /// Simple-root coordinates of `w - mu`.
    pub fn drop(&self) -> &[i64] {
        &self.drop
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// `dim Delta(w)^mu` over `GF(p)`.
    pub fn dim_weyl_space(&self) -> usize {
        self.basis.rows().len()
    }

    /// `dim L(w)^mu`: the rank of the Gram matrix.
    pub fn dim_simple_space(&self) -> usize {
        self.gram_rank
    }

    /// The characteristic-zero multiplicity by Freudenthal's recursion;
    /// equality with `dim_weyl_space` is asserted by the test suites, not
    /// assumed here.
    pub fn char0_multiplicity(&self) -> u64 {
        self.char0_mult
    }

    /// Canonical echelon basis of the weight space, ambient coordinates.
    pub fn basis(&self) -> &GFpMatrix<AmbientIndex> {
        &self.basis
    }

    /// Gram matrix rows of the contravariant form on the echelon basis.
    pub fn gram(&self) -> &[GFpVector<usize>] {
        &self.gram
    }

    /// Echelonized kernel of the Gram matrix, in basis coordinates: the
    /// radical of the form, i.e. the kernel of `Delta(w)^mu -> L(w)^mu`.
    pub fn radical(&self) -> &GFpMatrix<usize> {
        &self.rad
    }

    /// Coordinates of an ambient vector over the echelon basis; `None`
    /// when the vector is outside the span.
    pub fn coordinates(&self, v: &GFpVector<AmbientIndex>) -> Option<GFpVector<usize>> {
        let mut w = v.clone();
        let mut coords = GFpVector::zero(self.p);
        for (t, row) in self.basis.rows().iter().enumerate() {
            let (pivot, _) = row.leading().expect("echelon rows are nonzero");
            let c = w.get(pivot);
            if c != 0 {
                coords.insert_add(t, c);
                w.add_scaled(row, self.p - c);
            }
        }
        w.is_zero().then_some(coords)
    }

    /// The ambient vector with the given basis coordinates.
    pub fn realize(&self, coords: &GFpVector<usize>) -> GFpVector<AmbientIndex> {
        let mut out = GFpVector::zero(self.p);
        for (t, &c) in coords.iter() {
            out.add_scaled(&self.basis.rows()[*t], c);
        }
        out
    }

    /// Reduces basis coordinates modulo the radical.
    pub fn reduce_mod_radical(&self, coords: &GFpVector<usize>) -> GFpVector<usize> {
        let mut v = coords.clone();
        self.rad.reduce(&mut v);
        v
    }

    /// Canonical coset representatives of a basis of `L(w)^mu`, in basis
    /// coordinates: unit vectors reduced against the radical, kept when
    /// they add rank.
    pub fn coset_basis(&self) -> Vec<GFpVector<usize>> {
        let mut ech = self.rad.clone();
        let mut out = Vec::new();
        for t in 0..self.dim_weyl_space() {
            let mut v = GFpVector::unit(self.p, t);
            ech.reduce(&mut v);
            if !v.is_zero() {
                ech.insert_echelon(v.clone());
                out.push(v);
            }
        }
        debug_assert_eq!(out.len(), self.gram_rank);
        out
    }
}

/// Which module primitive vectors are taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimitiveModule {
    /// Exact kernels inside `Delta(w)`: the raising images must vanish
    /// as ambient vectors.
    Weyl,
    /// Kernels inside `L(w)`: the raising images must land in the radical.
    Simple,
}

/// A basis of a primitive-vector space, in `Delta(w)^mu` basis coordinates.
#[derive(Debug)]
pub struct PrimitiveBasis {
    pub mu: Weight,
    pub drop: Vec<i64>,
    pub module: PrimitiveModule,
    pub vectors: Vec<GFpVector<usize>>,
}

impl PrimitiveBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }
}

/// Summary counts for one weight space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceSummary {
    pub rank: usize,
    pub gram_rank: usize,
    pub char0_mult: u64,
}

/// A realization of `Delta(w)` mod p with memoized weight spaces.
pub struct Realization {
    omega: Weight,
    p: u64,
    pattern: FactorPattern,
    budget: Budget,
    max_drop: Vec<i64>,
    freud: Mutex<FreudenthalTable>,
    models: Mutex<HashMap<Vec<i64>, Arc<WeightSpaceModel>>>,
}

impl Realization {
    pub fn new(omega: &Weight, p: u64) -> Result<Self, EngineError> {
        Self::with_budget(omega, p, Budget::unlimited())
    }

    pub fn with_budget(omega: &Weight, p: u64, budget: Budget) -> Result<Self, EngineError> {
        if !is_prime(p) {
            return Err(EngineError::NotPrime(p));
        }
        let pattern = FactorPattern::for_weight(omega)?;
        let max_drop = omega
            .add(&omega.dual_twist())
            .expect("same rank")
            .root_coordinates()
            .expect("omega plus its reversal lies in the root lattice");
        Ok(Realization {
            freud: Mutex::new(FreudenthalTable::new(omega)),
            omega: omega.clone(),
            p,
            pattern,
            budget,
            max_drop,
            models: Mutex::new(HashMap::new()),
        })
    }

    pub fn omega(&self) -> &Weight {
        &self.omega
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn pattern(&self) -> &FactorPattern {
        &self.pattern
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    /// Drop of the lowest weight; every weight of `Delta(w)` has a drop
    /// inside the box `0..=max_drop` coordinatewise.
    pub fn max_drop(&self) -> &[i64] {
        &self.max_drop
    }

    pub fn highest_vector(&self) -> GFpVector<AmbientIndex> {
        GFpVector::unit(self.p, self.pattern.highest())
    }

    /// Budgeted operator application.
    pub fn apply(
        &self,
        op: &Operator,
        v: &GFpVector<AmbientIndex>,
    ) -> Result<GFpVector<AmbientIndex>, EngineError> {
        self.budget.try_charge(1)?;
        act_gfp(&self.pattern, op, v)
    }

    /// Characteristic-zero multiplicity of `mu` under `omega`.
    pub fn char0_multiplicity(&self, mu: &Weight) -> u64 {
        self.freud.lock().expect("no panics while locked").multiplicity(mu)
    }

    /// Simple-root coordinates of `omega - mu` when `mu` lies under
    /// `omega` in the root order.
    pub fn drop_of(&self, mu: &Weight) -> Option<Vec<i64>> {
        let drop = self.omega.sub(mu).ok()?.root_coordinates()?;
        drop.iter().all(|&c| c >= 0).then_some(drop)
    }

    pub fn weight_of_drop(&self, drop: &[i64]) -> Weight {
        let rs = RootSum::new(drop.to_vec()).expect("rank matches");
        self.omega.sub(&rs.to_weight()).expect("same rank")
    }

    /// All drops in the weight box, lexicographically.  Complete: every
    /// weight of the module lies in the box.
    pub fn drops_box(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.max_drop.len()];
        loop {
            out.push(cur.clone());
            let mut at = self.max_drop.len();
            loop {
                if at == 0 {
                    return out;
                }
                at -= 1;
                if cur[at] < self.max_drop[at] {
                    cur[at] += 1;
                    break;
                }
                cur[at] = 0;
            }
        }
    }

    /// The memoized model for the weight space of `mu`; empty when `mu`
    /// does not lie under `omega`.
    pub fn weight_space(&self, mu: &Weight) -> Result<Arc<WeightSpaceModel>, EngineError> {
        match self.drop_of(mu) {
            Some(drop) => self.model_for_drop(&drop),
            None => Ok(Arc::new(self.empty_model(mu.clone()))),
        }
    }

    pub fn weight_space_by_drop(
        &self,
        drop: &[i64],
    ) -> Result<Arc<WeightSpaceModel>, EngineError> {
        if drop.iter().any(|&c| c < 0) {
            return Ok(Arc::new(self.empty_model(self.weight_of_drop(drop))));
        }
        self.model_for_drop(drop)
    }

    fn model_for_drop(&self, drop: &[i64]) -> Result<Arc<WeightSpaceModel>, EngineError> {
        if let Some(hit) = self.models.lock().expect("no panics while locked").get(drop) {
            return Ok(hit.clone());
        }
        let built = Arc::new(self.build_model(drop)?);
        let mut cache = self.models.lock().expect("no panics while locked");
        Ok(cache.entry(drop.to_vec()).or_insert(built).clone())
    }

    pub fn summarize_drop(&self, drop: &[i64]) -> Result<SpaceSummary, EngineError> {
        let model = self.weight_space_by_drop(drop)?;
        Ok(SpaceSummary {
            rank: model.dim_weyl_space(),
            gram_rank: model.dim_simple_space(),
            char0_mult: model.char0_multiplicity(),
        })
    }

    /// `dim Delta(w)` over `GF(p)` by summing realized weight-space ranks.
    pub fn dim_weyl_total(&self) -> Result<u64, EngineError> {
        let mut total = 0u64;
        for drop in self.drops_box() {
            total += self.summarize_drop(&drop)?.rank as u64;
        }
        Ok(total)
    }

    /// `dim L(w)` by summing Gram ranks over the weight box.
    pub fn dim_simple_total(&self) -> Result<u64, EngineError> {
        let mut total = 0u64;
        for drop in self.drops_box() {
            total += self.summarize_drop(&drop)?.gram_rank as u64;
        }
        Ok(total)
    }

    fn empty_model(&self, mu: Weight) -> WeightSpaceModel {
        WeightSpaceModel {
            drop: Vec::new(),
            p: self.p,
            basis: GFpMatrix::new(self.p),
            gram: Vec::new(),
            gram_rank: 0,
            rad: GFpMatrix::new(self.p),
            char0_mult: 0,
            mu,
        }
    }

    /// Spans the weight space at `drop` by applying `p`-power lowering
    /// operators to the (recursively built) parent spaces.
    fn build_model(&self, drop: &[i64]) -> Result<WeightSpaceModel, EngineError> {
        let mu = self.weight_of_drop(drop);
        let rank = self.omega.rank();
        let mut ech = GFpMatrix::new(self.p);
        if drop.iter().all(|&c| c == 0) {
            ech.insert_echelon(self.highest_vector());
        } else if drop.iter().zip(&self.max_drop).all(|(c, m)| c <= m) {
            for i in 1..=rank {
                for m in p_powers(self.p, drop[i - 1]) {
                    let mut parent_drop = drop.to_vec();
                    parent_drop[i - 1] -= m as i64;
                    let parent = self.model_for_drop(&parent_drop)?;
                    let op = Operator::lower(PositiveRoot::simple(i), m);
                    for row in parent.basis().rows() {
                        let img = self.apply(&op, row)?;
                        if !img.is_zero() {
                            ech.insert_echelon(img);
                        }
                    }
                }
            }
        }
        let rows = ech.rows();
        let k = rows.len();
        let mut gram: Vec<GFpVector<usize>> = Vec::with_capacity(k);
        for i in 0..k {
            let mut row = GFpVector::zero(self.p);
            for j in 0..k {
                row.insert_add(j, rows[i].inner(&rows[j]));
            }
            gram.push(row);
        }
        let gram_matrix =
            GFpMatrix::from_rows(self.p, gram.clone()).expect("uniform modulus");
        let gram_rank = gram_matrix.rank();
        let rad = GFpMatrix::from_rows(
            self.p,
            gram_matrix.kernel_with_columns((0..k).collect()),
        )
        .expect("uniform modulus")
        .echelonized();
        let char0_mult = self.char0_multiplicity(&mu);
        Ok(WeightSpaceModel {
            mu,
            drop: drop.to_vec(),
            p: self.p,
            basis: ech,
            gram,
            gram_rank,
            rad,
            char0_mult,
        })
    }

    /// Basis of the space of vectors in `Delta(w)^mu` (Weyl mode) or
    /// `L(w)^mu` (Simple mode) annihilated by every raising operator
    /// `X_{alpha_i, m}` with `i` not omitted.
    pub fn primitive_vectors(
        &self,
        mu: &Weight,
        omitted: &[usize],
        module: PrimitiveModule,
    ) -> Result<PrimitiveBasis, EngineError> {
        let Some(drop) = self.drop_of(mu) else {
            return Ok(PrimitiveBasis {
                mu: mu.clone(),
                drop: Vec::new(),
                module,
                vectors: Vec::new(),
            });
        };
        let model = self.model_for_drop(&drop)?;
        let candidates: Vec<GFpVector<usize>> = match module {
            PrimitiveModule::Weyl => {
                (0..model.dim_weyl_space()).map(|t| GFpVector::unit(self.p, t)).collect()
            }
            PrimitiveModule::Simple => model.coset_basis(),
        };
        let vectors =
            self.primitive_solutions_over(&model, &drop, &candidates, omitted, module)?;
        Ok(PrimitiveBasis { mu: mu.clone(), drop, module, vectors })
    }

    /// Solves the primitivity conditions on the span of `candidates`
    /// (coordinates over the `Delta(w)^mu` basis).  Solutions come back in
    /// the same coordinates, as combinations of the candidates.  Testing
    /// `p`-power raisings suffices: if those kill a vector, every divided
    /// power does, by the Lucas factorization.
    pub(crate) fn primitive_solutions_over(
        &self,
        model: &WeightSpaceModel,
        drop: &[i64],
        candidates: &[GFpVector<usize>],
        omitted: &[usize],
        module: PrimitiveModule,
    ) -> Result<Vec<GFpVector<usize>>, EngineError> {
        let s = candidates.len();
        if s == 0 {
            return Ok(Vec::new());
        }
        let ambient: Vec<GFpVector<AmbientIndex>> =
            candidates.iter().map(|c| model.realize(c)).collect();
        let mut constraints: GFpMatrix<usize> = GFpMatrix::new(self.p);
        let rank = self.omega.rank();
        for i in 1..=rank {
            if omitted.contains(&i) {
                continue;
            }
            for m in p_powers(self.p, drop[i - 1]) {
                let op = Operator::raise(PositiveRoot::simple(i), m);
                let mut target_drop = drop.to_vec();
                target_drop[i - 1] -= m as i64;
                // constraint rows, keyed by a coordinate of the target space
                let mut rows: HashMap<usize, GFpVector<usize>> = HashMap::new();
                let mut ambient_rows: HashMap<AmbientIndex, GFpVector<usize>> = HashMap::new();
                for (t, amb) in ambient.iter().enumerate() {
                    let img = self.apply(&op, amb)?;
                    match module {
                        PrimitiveModule::Weyl => {
                            for (key, &c) in img.iter() {
                                ambient_rows
                                    .entry(key.clone())
                                    .or_insert_with(|| GFpVector::zero(self.p))
                                    .insert_add(t, c);
                            }
                        }
                        PrimitiveModule::Simple => {
                            if img.is_zero() {
                                continue;
                            }
                            let target = self.model_for_drop(&target_drop)?;
                            let coords = target
                                .coordinates(&img)
                                .expect("Delta(w) is closed under raising operators");
                            let reduced = target.reduce_mod_radical(&coords);
                            for (r, &c) in reduced.iter() {
                                rows.entry(*r)
                                    .or_insert_with(|| GFpVector::zero(self.p))
                                    .insert_add(t, c);
                            }
                        }
                    }
                }
                for (_, row) in ambient_rows {
                    constraints.insert_echelon(row);
                }
                for (_, row) in rows {
                    constraints.insert_echelon(row);
                }
            }
        }
        let kernel = constraints.kernel_with_columns((0..s).collect());
        let mut out = Vec::with_capacity(kernel.len());
        for y in kernel {
            let mut combo = GFpVector::zero(self.p);
            for (t, &c) in y.iter() {
                combo.add_scaled(&candidates[*t], c);
            }
            out.push(combo);
        }
        Ok(out)
    }

    /// Scans every drop in the weight box and reports those whose
    /// primitive space is nonzero, with its dimension.
    pub fn primitive_weight_drops(
        &self,
        omitted: &[usize],
        module: PrimitiveModule,
    ) -> Result<Vec<(Vec<i64>, usize)>, EngineError> {
        let mut out = Vec::new();
        for drop in self.drops_box() {
            let mu = self.weight_of_drop(&drop);
            let basis = self.primitive_vectors(&mu, omitted, module)?;
            if basis.dimension() > 0 {
                out.push((drop, basis.dimension()));
            }
        }
        Ok(out)
    }
}
