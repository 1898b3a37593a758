//! Exact sparse linear algebra over the integers and over `GF(p)`.
//!
//! Vectors are maps from an ordered key type to nonzero scalars; the key
//! type is generic so the same machinery serves ambient tensor indices,
//! column labels of Gram matrices, and plain `usize` coordinates.  All
//! elimination uses the deterministic first-nonzero pivot, so equal inputs
//! produce bit-identical echelon bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum LinalgError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p for prime p.
    debug_assert!(a % p != 0);
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// A sparse vector with `BigInt` entries; zero entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseIntVector<K: Ord + Clone> {
    entries: BTreeMap<K, BigInt>,
}

impl<K: Ord + Clone> Default for SparseIntVector<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone> SparseIntVector<K> {
    pub fn zero() -> Self {
        SparseIntVector { entries: BTreeMap::new() }
    }

    pub fn unit(key: K) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(key, BigInt::from(1));
        SparseIntVector { entries }
    }

    pub fn from_entries<I: IntoIterator<Item = (K, BigInt)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (k, c) in iter {
            v.insert_add(k, c);
        }
        v
    }

    pub fn insert_add(&mut self, key: K, value: BigInt) {
        if value.is_zero() {
            return;
        }
        let entry = self.entries.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += value;
        if entry.is_zero() {
            self.entries.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &K) -> BigInt {
        self.entries.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigInt)> {
        self.entries.iter()
    }

    pub fn add_scaled(&mut self, other: &Self, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.entries {
            self.insert_add(k.clone(), v * c);
        }
    }

    /// Inner product in the orthonormal coordinate basis.
    pub fn inner(&self, other: &Self) -> BigInt {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = BigInt::zero();
        for (k, v) in &small.entries {
            if let Some(w) = large.entries.get(k) {
                acc += v * w;
            }
        }
        acc
    }
}

/// Componentwise reduction mod p; a ring homomorphism on entries.
pub fn reduce_mod_p<K: Ord + Clone>(
    v: &SparseIntVector<K>,
    p: u64,
) -> Result<GFpVector<K>, LinalgError> {
    if !is_prime(p) {
        return Err(LinalgError::NotPrime(p));
    }
    let mut out = GFpVector::zero(p);
    let modulus = BigInt::from(p);
    for (k, c) in v.iter() {
        let mut r = c.mod_floor(&modulus);
        if r.is_negative() {
            r += &modulus;
        }
        let digits = r.to_u64_digits().1;
        let val = digits.first().copied().unwrap_or(0);
        out.insert_add(k.clone(), val);
    }
    Ok(out)
}

/// A sparse vector over `GF(p)` with entries in `0..p` (zeros never stored).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GFpVector<K: Ord + Clone> {
    p: u64,
    entries: BTreeMap<K, u64>,
}

impl<K: Ord + Clone> GFpVector<K> {
    pub fn zero(p: u64) -> Self {
        GFpVector { p, entries: BTreeMap::new() }
    }

    pub fn unit(p: u64, key: K) -> Self {
        let mut v = Self::zero(p);
        v.insert_add(key, 1);
        v
    }

    pub fn from_entries<I: IntoIterator<Item = (K, u64)>>(p: u64, iter: I) -> Self {
        let mut v = Self::zero(p);
        for (k, c) in iter {
            v.insert_add(k, c);
        }
        v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn insert_add(&mut self, key: K, value: u64) {
        let value = value % self.p;
        if value == 0 {
            return;
        }
        let entry = self.entries.entry(key.clone()).or_insert(0);
        *entry = (*entry + value) % self.p;
        if *entry == 0 {
            self.entries.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &K) -> u64 {
        self.entries.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &u64)> {
        self.entries.iter()
    }

    /// First (smallest-key) nonzero entry.
    pub fn leading(&self) -> Option<(&K, u64)> {
        self.entries.iter().next().map(|(k, v)| (k, *v))
    }

    pub fn scale(&mut self, c: u64) {
        let c = c % self.p;
        if c == 0 {
            self.entries.clear();
            return;
        }
        let p = self.p;
        self.entries.values_mut().for_each(|v| *v = mul_mod(*v, c, p));
    }

    pub fn add_scaled(&mut self, other: &Self, c: u64) {
        debug_assert_eq!(self.p, other.p);
        let c = c % self.p;
        if c == 0 {
            return;
        }
        for (k, v) in &other.entries {
            self.insert_add(k.clone(), mul_mod(*v, c, self.p));
        }
    }

    pub fn inner(&self, other: &Self) -> u64 {
        debug_assert_eq!(self.p, other.p);
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = 0u64;
        for (k, v) in &small.entries {
            if let Some(w) = large.entries.get(k) {
                acc = (acc + mul_mod(*v, *w, self.p)) % self.p;
            }
        }
        acc
    }
}

/// A row-sparse matrix over `GF(p)`.
#[derive(Debug, Clone)]
pub struct GFpMatrix<K: Ord + Clone> {
    p: u64,
    rows: Vec<GFpVector<K>>,
}

impl<K: Ord + Clone> GFpMatrix<K> {
    pub fn new(p: u64) -> Self {
        GFpMatrix { p, rows: Vec::new() }
    }

    pub fn from_rows(p: u64, rows: Vec<GFpVector<K>>) -> Result<Self, LinalgError> {
        for r in &rows {
            if r.modulus() != p {
                return Err(LinalgError::ModulusMismatch(p, r.modulus()));
            }
        }
        Ok(GFpMatrix { p, rows })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> &[GFpVector<K>] {
        &self.rows
    }

    /// Sorted union of the keys appearing in any row.
    pub fn column_support(&self) -> Vec<K> {
        let mut cols: Vec<K> = Vec::new();
        for r in &self.rows {
            for (k, _) in r.iter() {
                cols.push(k.clone());
            }
        }
        cols.sort();
        cols.dedup();
        cols
    }

    /// Reduced row echelon form of the row span.  Canonical: depends only on
    /// the row space, with pivots normalized to 1 and rows ordered by pivot.
    pub fn echelonized(&self) -> GFpMatrix<K> {
        let mut ech = GFpMatrix::new(self.p);
        for row in &self.rows {
            ech.insert_echelon(row.clone());
        }
        ech
    }

    /// Reduces `row` against the current echelon rows; if a nonzero
    /// remainder survives it is normalized, back-substituted and inserted.
    /// Returns true when the rank grew.  Assumes `self` is already reduced.
    pub fn insert_echelon(&mut self, mut row: GFpVector<K>) -> bool {
        debug_assert_eq!(row.modulus(), self.p);
        self.reduce(&mut row);
        let Some((pivot, lead)) = row.leading().map(|(k, v)| (k.clone(), v)) else {
            return false;
        };
        row.scale(inv_mod(lead, self.p));
        for existing in &mut self.rows {
            let c = existing.get(&pivot);
            if c != 0 {
                existing.add_scaled(&row, self.p - c);
            }
        }
        let at = self
            .rows
            .partition_point(|r| r.leading().map(|(k, _)| k < &pivot).unwrap_or(false));
        self.rows.insert(at, row);
        true
    }

    /// Eliminates `v` against the echelon rows in place.
    pub fn reduce(&self, v: &mut GFpVector<K>) {
        for row in &self.rows {
            let Some((pivot, _)) = row.leading() else { continue };
            let c = v.get(pivot);
            if c != 0 {
                v.add_scaled(row, self.p - c);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.echelonized().rows.len()
    }

    /// Basis of `{x : M x = 0}` over the columns present in the matrix.
    /// See `kernel_with_columns` to widen the column universe.
    pub fn kernel(&self) -> Vec<GFpVector<K>> {
        self.kernel_with_columns(self.column_support())
    }

    /// Basis of the null space over an explicit ordered column list.
    /// Canonical reduced basis: one vector per free column, with unit entry
    /// at its free column.
    pub fn kernel_with_columns(&self, cols: Vec<K>) -> Vec<GFpVector<K>> {
        let ech = self.echelonized();
        let pivots: Vec<K> = ech
            .rows
            .iter()
            .map(|r| r.leading().expect("echelon rows are nonzero").0.clone())
            .collect();
        let mut out = Vec::new();
        for free in &cols {
            if pivots.contains(free) {
                continue;
            }
            let mut v = GFpVector::unit(self.p, free.clone());
            for (row, pivot) in ech.rows.iter().zip(&pivots) {
                let c = row.get(free);
                if c != 0 {
                    v.insert_add(pivot.clone(), self.p - c);
                }
            }
            out.push(v);
        }
        out
    }
}

/// Membership of `v` in the row span of `basis`.
pub fn in_span<K: Ord + Clone>(v: &GFpVector<K>, basis: &GFpMatrix<K>) -> bool {
    let ech = basis.echelonized();
    let mut w = v.clone();
    ech.reduce(&mut w);
    w.is_zero()
}

/// Echelonized span of `basis` together with `candidates`.  Idempotent:
/// growing a grown span by the same candidates changes nothing.
pub fn grow_span<K: Ord + Clone>(
    basis: &GFpMatrix<K>,
    candidates: &[GFpVector<K>],
) -> GFpMatrix<K> {
    let mut ech = basis.echelonized();
    for c in candidates {
        ech.insert_echelon(c.clone());
    }
    ech
}
