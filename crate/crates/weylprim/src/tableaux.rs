//! Carter-Lusztig tableau combinatorics for Weyl modules of the subgroup
//! generated by the root subgroups away from the first node.
//!
//! Shapes are sequences `(lambda_2, ..., lambda_n)`; the top row of a
//! diagram is row 2 and entries lie in `{2, ..., n}`.  Standard tableaux
//! index a basis `F_t e+` of the Weyl module, where `F_t` is an ordered
//! product of divided-power lowering operators.  The row-removal maps
//! `rho_m` and `rho_seq` may be undefined on a given tableau; that outcome
//! is a value (`Ok(None)`), not an error.

use crate::root_weight::{PositiveRoot, RootSum, Weight};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum TableauxError {
    #[error("weight {0} is not dominant")]
    NonDominant(Weight),
    #[error("shape for n = {n} needs {expected} row lengths, got {got}")]
    ShapeLength { n: usize, expected: usize, got: usize },
    #[error("row lengths must weakly decrease, got {0:?}")]
    ShapeNotDecreasing(Vec<u32>),
    #[error("n must be at least 3, got {0}")]
    AmbientTooSmall(usize),
    #[error("row {row} must have {expected} entries, got {got}")]
    RowLength { row: usize, expected: u32, got: usize },
    #[error("entry {value} in row {row} is outside 2..={n}")]
    EntryOutOfRange { row: usize, value: u8, n: usize },
    #[error("cannot remove entries smaller than 3, got {0}")]
    RemovalEntryTooSmall(u8),
    #[error("removing {requested} entries from the top row needs lambda_2 - lambda_3 >= {requested}, but it is {d2}")]
    RowGapTooSmall { d2: u32, requested: usize },
    #[error("tableau is not regular row standard")]
    NotRegularRowStandard,
}

/// Row lengths `(lambda_2, ..., lambda_n)` of a diagram whose top row is
/// row 2; entries of a tableau on this shape lie in `{2, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    n: usize,
    lambda: Vec<u32>,
}

impl Shape {
    pub fn new(n: usize, lambda: Vec<u32>) -> Result<Self, TableauxError> {
        if n < 3 {
            return Err(TableauxError::AmbientTooSmall(n));
        }
        if lambda.len() != n - 1 {
            return Err(TableauxError::ShapeLength { n, expected: n - 1, got: lambda.len() });
        }
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauxError::ShapeNotDecreasing(lambda));
        }
        Ok(Shape { n, lambda })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The lengths `lambda_2, ..., lambda_n` in order.
    pub fn lambda(&self) -> &[u32] {
        &self.lambda
    }

    /// Length of row `i`, for `i` in `2..=n`.
    pub fn row_len(&self, i: usize) -> u32 {
        self.lambda[i - 2]
    }

    pub fn size(&self) -> u32 {
        self.lambda.iter().sum()
    }
}

/// The unique shape coherent with `kappa` that ends with `lambda_n = 0`.
/// `kappa` has coordinates `(d_2, ..., d_{n-1})`, so `n = rank + 2` and
/// `lambda_i = d_i + ... + d_{n-1}`.
pub fn coherent_shape(kappa: &Weight) -> Result<Shape, TableauxError> {
    if !kappa.is_dominant() {
        return Err(TableauxError::NonDominant(kappa.clone()));
    }
    let n = kappa.rank() + 2;
    let mut lambda = vec![0u32];
    for &d in kappa.coords().iter().rev() {
        let prev = *lambda.last().expect("nonempty");
        lambda.push(prev + d as u32);
    }
    lambda.reverse();
    Shape::new(n, lambda)
}

/// A filling of a shape with entries in `{2, ..., n}`.  `rows[0]` is row 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Shape,
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn new(shape: Shape, rows: Vec<Vec<u8>>) -> Result<Self, TableauxError> {
        if rows.len() != shape.lambda().len() {
            return Err(TableauxError::ShapeLength {
                n: shape.n(),
                expected: shape.lambda().len(),
                got: rows.len(),
            });
        }
        for (idx, row) in rows.iter().enumerate() {
            let i = idx + 2;
            let expected = shape.row_len(i);
            if row.len() != expected as usize {
                return Err(TableauxError::RowLength { row: i, expected, got: row.len() });
            }
            for &v in row {
                if v < 2 || v as usize > shape.n() {
                    return Err(TableauxError::EntryOutOfRange { row: i, value: v, n: shape.n() });
                }
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Row `i` for `i` in `2..=n`.
    pub fn row(&self, i: usize) -> &[u8] {
        &self.rows[i - 2]
    }

    /// Entries weakly increase along every row.
    pub fn is_row_standard(&self) -> bool {
        self.rows.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]))
    }

    /// Row standard, and every entry in row `i` is at least `i`.
    pub fn is_regular_row_standard(&self) -> bool {
        self.is_row_standard()
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(idx, row)| row.iter().all(|&v| v as usize >= idx + 2))
    }

    /// Row standard, and entries strictly increase down every column.
    pub fn is_standard(&self) -> bool {
        if !self.is_row_standard() {
            return false;
        }
        self.rows.windows(2).all(|pair| {
            pair[1]
                .iter()
                .zip(pair[0].iter())
                .all(|(below, above)| below > above)
        })
    }
}

/// An ordered product of divided-power lowering operators
/// `X_{-alpha_a - ... - alpha_{b-1}, N}`; the factor for `(a, b)` precedes
/// the factor for `(c, d)` when `b < d`, or `b = d` and `a < c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FMonomial {
    factors: Vec<(PositiveRoot, u32)>,
}

impl FMonomial {
    /// Factors in application order, leftmost first; the root `[a, b)`
    /// stands for `alpha_a + ... + alpha_{b-1}`.
    pub fn factors(&self) -> &[(PositiveRoot, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

/// The monomial `F_t`: one factor per pair `a < b` with `N_{a,b} > 0`,
/// where `N_{a,b}` counts entries `b` in row `a`.
pub fn f_monomial(t: &Tableau) -> FMonomial {
    let n = t.shape().n();
    let mut factors = Vec::new();
    for b in 3..=n {
        for a in 2..b {
            let count = t.row(a).iter().filter(|&&v| v as usize == b).count() as u32;
            if count > 0 {
                factors.push((PositiveRoot::new(a, b).expect("2 <= a < b <= n"), count));
            }
        }
    }
    FMonomial { factors }
}

/// The drop of `F_t e+` below the highest weight: nonnegative coefficients
/// `(b_1, ..., b_{n-1})` with `b_1 = 0`, where the factor for `[a, b)`
/// with multiplicity `N` contributes `N` to each of `b_a, ..., b_{b-1}`.
pub fn weight_of(t: &Tableau) -> RootSum {
    let n = t.shape().n();
    let mut sum = RootSum::zero(n - 1);
    for (root, count) in f_monomial(t).factors() {
        sum = sum.add_root(root, *count as i64).expect("root fits rank");
    }
    sum
}

/// Removes one entry `m >= 3` from the top row, shifting the remaining
/// entries left; `Ok(None)` when no entry `m` is present.  Requires a
/// regular row standard tableau with `lambda_2 - lambda_3 >= 1`.
pub fn rho_m(t: &Tableau, m: u8) -> Result<Option<Tableau>, TableauxError> {
    rho_seq(t, &[m])
}

/// Removes the entries of `ms` (with multiplicity) from the top row;
/// `Ok(None)` when some requested entry is missing.  Equals the
/// composition of the single removals whenever that is defined.
pub fn rho_seq(t: &Tableau, ms: &[u8]) -> Result<Option<Tableau>, TableauxError> {
    if let Some(&bad) = ms.iter().find(|&&m| m < 3) {
        return Err(TableauxError::RemovalEntryTooSmall(bad));
    }
    if !t.is_regular_row_standard() {
        return Err(TableauxError::NotRegularRowStandard);
    }
    let shape = t.shape();
    let lambda3 = if shape.lambda().len() > 1 { shape.lambda()[1] } else { 0 };
    let d2 = shape.row_len(2) - lambda3;
    if (d2 as usize) < ms.len() {
        return Err(TableauxError::RowGapTooSmall { d2, requested: ms.len() });
    }
    let mut top: Vec<u8> = t.row(2).to_vec();
    for &m in ms {
        match top.iter().position(|&v| v == m) {
            Some(at) => {
                top.remove(at);
            }
            None => return Ok(None),
        }
    }
    let mut lambda = shape.lambda().to_vec();
    lambda[0] -= ms.len() as u32;
    let new_shape = Shape::new(shape.n(), lambda)?;
    let mut rows = t.rows().to_vec();
    rows[0] = top;
    Ok(Some(Tableau::new(new_shape, rows)?))
}

/// All standard tableaux of the shape, ordered lexicographically by their
/// row-major reading.
pub fn enumerate_standard(shape: &Shape) -> Vec<Tableau> {
    let mut rows: Vec<Vec<u8>> =
        shape.lambda().iter().map(|&len| Vec::with_capacity(len as usize)).collect();
    let mut out = Vec::new();
    fill_standard(shape, &mut rows, 0, &mut out);
    out
}

fn fill_standard(shape: &Shape, rows: &mut Vec<Vec<u8>>, row_idx: usize, out: &mut Vec<Tableau>) {
    if row_idx == rows.len() {
        out.push(
            Tableau::new(shape.clone(), rows.clone()).expect("construction preserves validity"),
        );
        return;
    }
    let len = shape.lambda()[row_idx] as usize;
    if rows[row_idx].len() == len {
        fill_standard(shape, rows, row_idx + 1, out);
        return;
    }
    let col = rows[row_idx].len();
    // weakly increase along the row, strictly increase down the column
    let mut min = rows[row_idx].last().copied().unwrap_or(2);
    if row_idx > 0 {
        min = min.max(rows[row_idx - 1][col] + 1);
    }
    for v in min..=shape.n() as u8 {
        rows[row_idx].push(v);
        fill_standard(shape, rows, row_idx, out);
        rows[row_idx].pop();
    }
}
