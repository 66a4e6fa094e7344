//! F_{p^m}-bases of ideals of S in canonical reduced form.

use serde::{Deserialize, Serialize};

use crate::field::{FieldCtx, FieldElem};
use crate::linalg::Echelon;
use crate::ring::{Ring, SElem};

/// Torsion degrees: `Tor_0 = <(x-1)^a>`, `Tor_1 = <(x-1)^b>`, `Tor_2 = <(x-1)^c>`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorsionProfile {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl TorsionProfile {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        TorsionProfile { a, b, c }
    }

    /// `log_q |C| = 3n - (a + b + c)`.
    pub fn size_exponent(&self, n: usize) -> usize {
        3 * n - (self.a + self.b + self.c)
    }

    pub fn is_chain(&self, n: usize) -> bool {
        n >= self.a && self.a >= self.b && self.b >= self.c
    }
}

/// An F-subspace of S stored as reduced row echelon rows.
///
/// Coordinates are flattened `u`-layer major, `(x-1)`-power minor: `u^l (x-1)^j` is column
/// `l·n + j`. Pivots are monic and the form is unique, so equality of bases is equality of
/// subspaces. The coordinates depend only on `p` and `n`, so bases from rings with different
/// shift constants can be compared directly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealBasis {
    n: usize,
    rows: Vec<Vec<FieldElem>>,
    pivots: Vec<usize>,
}

impl IdealBasis {
    pub fn zero(n: usize) -> Self {
        IdealBasis { n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        let rows = (0..3 * n)
            .map(|i| {
                let mut v = vec![FieldElem::ZERO; 3 * n];
                v[i] = FieldElem::ONE;
                v
            })
            .collect();
        IdealBasis { n, rows, pivots: (0..3 * n).collect() }
    }

    /// Span of flattened `(x-1)`-adic vectors (no ideal closure).
    pub fn from_vectors(f: &FieldCtx, n: usize, vectors: &[Vec<FieldElem>]) -> Self {
        let mut e = Echelon::new(3 * n);
        for v in vectors {
            e.insert(f, v);
        }
        Self::from_echelon(f, n, e)
    }

    pub fn from_echelon(f: &FieldCtx, n: usize, e: Echelon) -> Self {
        let (rows, pivots) = e.into_rref(f);
        IdealBasis { n, rows, pivots }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<FieldElem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn echelon(&self) -> Echelon {
        Echelon::from_rref(3 * self.n, self.rows.clone(), &self.pivots)
    }

    pub fn contains(&self, f: &FieldCtx, v: &[FieldElem]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c.is_zero() {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    pub fn is_subspace_of(&self, f: &FieldCtx, other: &IdealBasis) -> bool {
        self.rows.iter().all(|r| other.contains(f, r))
    }

    /// The row whose pivot is `col`.
    pub fn row_with_pivot(&self, col: usize) -> Option<&[FieldElem]> {
        self.pivots.iter().position(|&p| p == col).map(|i| self.rows[i].as_slice())
    }

    /// Minimal `(x-1)`-valuation among elements whose lower layers vanish, per layer.
    ///
    /// For an ideal this is the torsion profile: elements of `C ∩ u^l S` are exactly the
    /// combinations of rows pivoting in layer `l` or later.
    pub fn pivot_profile(&self) -> TorsionProfile {
        let n = self.n;
        let first = |l: usize| self.pivots.iter().find(|&&p| p >= l * n && p < (l + 1) * n).map_or(n, |&p| p - l * n);
        TorsionProfile { a: first(0), b: first(1), c: first(2) }
    }

    /// `(a, b, c)` read off from the number of pivots per layer: `a = n - dim Tor_0`,
    /// `b = n - dim Tor_1`, `c = n - dim Tor_2`. Valid in any layer-major coordinates, so it
    /// also measures ideals of the `(δ + αu^2)` rings where `x - 1` is not nilpotent.
    pub fn dimension_profile(&self) -> TorsionProfile {
        let n = self.n;
        let count = |l: usize| self.pivots.iter().filter(|&&p| p >= l * n && p < (l + 1) * n).count();
        TorsionProfile { a: n - count(0), b: n - count(1), c: n - count(2) }
    }

    /// Sum of two subspaces.
    pub fn sum(&self, f: &FieldCtx, other: &IdealBasis) -> IdealBasis {
        let mut e = self.echelon();
        for r in &other.rows {
            e.insert(f, r);
        }
        Self::from_echelon(f, self.n, e)
    }

    /// Rows as ring elements.
    pub fn elements(&self, ring: &Ring) -> Vec<SElem> {
        self.rows.iter().map(|r| ring.from_flat(r)).collect()
    }
}

impl Ring {
    /// The ideal generated by `gens`: F-span closed under multiplication by `x - 1` and `u`.
    pub fn span(&self, gens: &[SElem]) -> IdealBasis {
        let f = self.field();
        let mut e = Echelon::new(3 * self.n());
        let mut queue: Vec<SElem> = gens.to_vec();
        while let Some(v) = queue.pop() {
            if let Some(row) = e.insert(f, &v.flatten()) {
                let r = self.from_flat(row);
                queue.push(self.mul_y(&r));
                queue.push(self.mul_u(&r));
            }
        }
        IdealBasis::from_echelon(f, self.n(), e)
    }

    /// Whether the subspace is closed under multiplication by `x` and `u`.
    pub fn is_ideal(&self, basis: &IdealBasis) -> bool {
        let f = self.field();
        basis.elements(self).iter().all(|v| {
            basis.contains(f, &self.mul_x(v).flatten()) && basis.contains(f, &self.mul_u(v).flatten())
        })
    }

    /// `{f : f·g = 0 for all g ∈ C}` as the nullspace of the stacked multiplication maps.
    pub fn annihilator(&self, basis: &IdealBasis) -> IdealBasis {
        let f = self.field();
        let n = self.n();
        let units: Vec<SElem> = (0..3 * n)
            .map(|i| {
                let mut v = vec![FieldElem::ZERO; 3 * n];
                v[i] = FieldElem::ONE;
                self.from_flat(&v)
            })
            .collect();
        // column i of each block is e_i·g
        let mut rows: Vec<Vec<FieldElem>> = Vec::new();
        for g in basis.elements(self) {
            let cols: Vec<Vec<FieldElem>> = units.iter().map(|e| self.mul(e, &g).flatten()).collect();
            for r in 0..3 * n {
                rows.push(cols.iter().map(|c| c[r]).collect());
            }
        }
        let kernel = crate::linalg::nullspace(f, 3 * n, &rows);
        IdealBasis::from_vectors(f, n, &kernel)
    }

    /// `{f^* : f ∈ C}`, living in [`Ring::dual_ring`].
    pub fn reciprocal_image(&self, basis: &IdealBasis) -> IdealBasis {
        let images: Vec<Vec<FieldElem>> =
            basis.elements(self).iter().map(|v| self.reciprocal(v).flatten()).collect();
        IdealBasis::from_vectors(self.field(), self.n(), &images)
    }
}
