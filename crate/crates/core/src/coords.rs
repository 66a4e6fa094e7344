//! Change of basis between monomials `x^i` and powers of `y = x - 1` for length `n = p^k`.

use std::sync::Arc;

use crate::binom::binom_mod;
use crate::field::{FieldCtx, FieldElem};

/// Binomial table `C(i, j) mod p` for `j <= i < n`, shared between rings of the same length.
#[derive(Clone, Debug)]
pub struct YadicCoords {
    n: usize,
    binom: Arc<Vec<u32>>,
}

impl YadicCoords {
    pub fn new(p: u32, n: usize) -> Self {
        let mut binom = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..=i {
                binom[i * n + j] = binom_mod(i as u64, j as u64, p);
            }
        }
        YadicCoords { n, binom: Arc::new(binom) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `x^i = sum_j C(i, j) y^j`.
    pub fn to_yadic(&self, f: &FieldCtx, mono: &[FieldElem]) -> Vec<FieldElem> {
        let n = self.n;
        let mut out = vec![FieldElem::ZERO; n];
        for (i, &a) in mono.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                let b = self.binom[i * n + j];
                if b != 0 {
                    *slot = f.add(*slot, f.mul_int(a, b as u64));
                }
            }
        }
        out
    }

    /// `y^j = sum_i C(j, i) (-1)^(j-i) x^i`.
    pub fn to_monomial(&self, f: &FieldCtx, y: &[FieldElem]) -> Vec<FieldElem> {
        let n = self.n;
        let mut out = vec![FieldElem::ZERO; n];
        for (j, &c) in y.iter().enumerate().take(n) {
            if c.is_zero() {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate().take(j + 1) {
                let b = self.binom[j * n + i];
                if b != 0 {
                    let term = f.mul_int(c, b as u64);
                    *slot = if (j - i) % 2 == 1 { f.sub(*slot, term) } else { f.add(*slot, term) };
                }
            }
        }
        out
    }

    /// Converts a flattened three-layer vector (layer-major) from monomial to `y`-adic.
    pub fn flat_to_yadic(&self, f: &FieldCtx, v: &[FieldElem]) -> Vec<FieldElem> {
        v.chunks(self.n).flat_map(|l| self.to_yadic(f, l)).collect()
    }

    pub fn flat_to_monomial(&self, f: &FieldCtx, v: &[FieldElem]) -> Vec<FieldElem> {
        v.chunks(self.n).flat_map(|l| self.to_monomial(f, l)).collect()
    }
}
