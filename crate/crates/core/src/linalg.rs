//! Gaussian elimination over F_{p^m}: echelon bases, rank, nullspace, linear solves.

use crate::field::{FieldCtx, FieldElem};

/// Row space kept in echelon form while vectors are inserted one at a time.
///
/// Every stored row is monic at its pivot (its first nonzero entry), and pivots are distinct,
/// so reduction walks columns left to right once.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    // row index by pivot column
    by_pivot: Vec<Option<usize>>,
    rows: Vec<Vec<FieldElem>>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon { width, by_pivot: vec![None; width], rows: Vec::new() }
    }

    /// Wraps rows that are already monic with the given distinct pivots.
    pub fn from_rref(width: usize, rows: Vec<Vec<FieldElem>>, pivots: &[usize]) -> Self {
        let mut by_pivot = vec![None; width];
        for (i, &p) in pivots.iter().enumerate() {
            by_pivot[p] = Some(i);
        }
        Echelon { width, by_pivot, rows }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residue of `v` after eliminating every stored pivot.
    pub fn reduce(&self, f: &FieldCtx, v: &[FieldElem]) -> Vec<FieldElem> {
        let mut v = v.to_vec();
        for col in 0..self.width {
            if v[col].is_zero() {
                continue;
            }
            if let Some(ri) = self.by_pivot[col] {
                let c = v[col];
                for (x, &r) in v.iter_mut().zip(&self.rows[ri]).skip(col) {
                    if !r.is_zero() {
                        *x = f.sub(*x, f.mul(c, r));
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, f: &FieldCtx, v: &[FieldElem]) -> bool {
        self.reduce(f, v).iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span; returns the new monic row when `v` was independent.
    pub fn insert(&mut self, f: &FieldCtx, v: &[FieldElem]) -> Option<&[FieldElem]> {
        let mut r = self.reduce(f, v);
        let pivot = r.iter().position(|x| !x.is_zero())?;
        let inv = f.inv(r[pivot]).expect("pivot is nonzero");
        for x in r.iter_mut().skip(pivot) {
            *x = f.mul(*x, inv);
        }
        self.by_pivot[pivot] = Some(self.rows.len());
        self.rows.push(r);
        self.rows.last().map(|r| r.as_slice())
    }

    /// The reduced row echelon form: rows sorted by pivot, pivot columns cleared elsewhere.
    pub fn into_rref(self, f: &FieldCtx) -> (Vec<Vec<FieldElem>>, Vec<usize>) {
        let pivots: Vec<usize> = (0..self.width).filter(|&c| self.by_pivot[c].is_some()).collect();
        let mut rows: Vec<Vec<FieldElem>> =
            pivots.iter().map(|&c| self.rows[self.by_pivot[c].unwrap()].clone()).collect();
        // back substitution, bottom-up so that lower rows are already clean
        for i in (0..rows.len()).rev() {
            let (upper, lower) = rows.split_at_mut(i);
            let pivot_row = &lower[0];
            let col = pivots[i];
            for row in upper.iter_mut() {
                let c = row[col];
                if c.is_zero() {
                    continue;
                }
                for (x, &r) in row.iter_mut().zip(pivot_row).skip(col) {
                    if !r.is_zero() {
                        *x = f.sub(*x, f.mul(c, r));
                    }
                }
            }
        }
        (rows, pivots)
    }
}

/// Reduced row echelon form of the span of `vectors`.
pub fn rref(f: &FieldCtx, width: usize, vectors: &[Vec<FieldElem>]) -> (Vec<Vec<FieldElem>>, Vec<usize>) {
    let mut e = Echelon::new(width);
    for v in vectors {
        e.insert(f, v);
    }
    e.into_rref(f)
}

pub fn rank(f: &FieldCtx, width: usize, rows: &[Vec<FieldElem>]) -> usize {
    let mut e = Echelon::new(width);
    for v in rows {
        e.insert(f, v);
    }
    e.rank()
}

/// Basis of `{x : A x = 0}` for `A` given by its rows, each of length `width`.
pub fn nullspace(f: &FieldCtx, width: usize, rows: &[Vec<FieldElem>]) -> Vec<Vec<FieldElem>> {
    let (reduced, pivots) = rref(f, width, rows);
    let mut is_pivot = vec![false; width];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..width).filter(|&c| !is_pivot[c]) {
        let mut x = vec![FieldElem::ZERO; width];
        x[free] = FieldElem::ONE;
        for (row, &p) in reduced.iter().zip(&pivots) {
            x[p] = f.neg(row[free]);
        }
        basis.push(x);
    }
    basis
}

/// Solutions of `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<FieldElem>,
    pub kernel: Vec<Vec<FieldElem>>,
}

/// Solves `A x = b`; `None` when inconsistent.
pub fn solve(f: &FieldCtx, width: usize, rows: &[Vec<FieldElem>], b: &[FieldElem]) -> Option<Solution> {
    let augmented: Vec<Vec<FieldElem>> = rows
        .iter()
        .zip(b)
        .map(|(r, &bi)| {
            let mut v = r.clone();
            v.push(bi);
            v
        })
        .collect();
    let (reduced, pivots) = rref(f, width + 1, &augmented);
    if pivots.last() == Some(&width) {
        return None;
    }
    let mut particular = vec![FieldElem::ZERO; width];
    for (row, &p) in reduced.iter().zip(&pivots) {
        particular[p] = row[width];
    }
    Some(Solution { particular, kernel: nullspace(f, width, rows) })
}

/// `A x` for `A` given by rows.
pub fn mat_vec(f: &FieldCtx, rows: &[Vec<FieldElem>], x: &[FieldElem]) -> Vec<FieldElem> {
    rows.iter().map(|r| f.sum(r.iter().zip(x).map(|(&a, &b)| f.mul(a, b)))).collect()
}
