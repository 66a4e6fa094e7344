//! Brute-force ground truth at tiny parameters.
//!
//! Everything here works on plain codewords (monomial coefficient vectors over R) with the
//! constacyclic shift `(c_0, ..., c_{n-1}) ↦ (λc_{n-1}, c_0, ..., c_{n-2})`, independent of the
//! `(x-1)`-adic arithmetic used by the structure theorems. Results are returned as
//! [`IdealBasis`] values so they compare directly with the theorem paths.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::Rng;

use crate::code::{validate_triple, GeneratorTriple};
use crate::coords::YadicCoords;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::ideal::{IdealBasis, TorsionProfile};
use crate::linalg::{nullspace, Echelon};
use crate::ring::{Ring, RingParams, SBarElem, SElem};
use crate::uring::UElem;

/// Default cap on the number of ring elements / candidates a sweep may visit.
pub const DEFAULT_BUDGET: u128 = 1 << 22;

/// Monomial coefficients `c_0, ..., c_{n-1}` over R.
pub type Codeword = Vec<UElem>;

/// `R[x]/<x^n - λ>` for an arbitrary unit `λ = δ + αu^2`, in monomial coordinates.
#[derive(Clone, Debug)]
pub struct ConstaRing {
    params: RingParams,
    n: usize,
    lambda: UElem,
    lambda_inv: UElem,
    coords: YadicCoords,
}

impl ConstaRing {
    pub fn new(params: &RingParams) -> Self {
        let f = &params.field;
        let lambda = params.lambda();
        let lambda_inv = f.u_inv(lambda).expect("delta is nonzero");
        let n = params.n();
        ConstaRing { params: params.clone(), n, lambda, lambda_inv, coords: YadicCoords::new(f.p(), n) }
    }

    /// The ring of `λ^{-1}`-constacyclic codes, where duals live.
    pub fn dual(&self) -> ConstaRing {
        let inv = self.lambda_inv;
        let params = RingParams { delta: inv.c[0], alpha: inv.c[2], ..self.params.clone() };
        ConstaRing::new(&params)
    }

    pub fn params(&self) -> &RingParams {
        &self.params
    }

    pub fn field(&self) -> &FieldCtx {
        &self.params.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> UElem {
        self.lambda
    }

    pub fn zero(&self) -> Codeword {
        vec![UElem::ZERO; self.n]
    }

    /// Multiplication by `x`: the constacyclic shift.
    pub fn shift(&self, w: &Codeword) -> Codeword {
        let f = self.field();
        let mut out = Vec::with_capacity(self.n);
        out.push(f.u_mul(self.lambda, w[self.n - 1]));
        out.extend_from_slice(&w[..self.n - 1]);
        out
    }

    pub fn mul_u(&self, w: &Codeword) -> Codeword {
        let f = self.field();
        w.iter().map(|&c| f.u_mul(UElem::u_pow(1), c)).collect()
    }

    /// Schoolbook product with `x^n = λ`.
    pub fn mul(&self, a: &Codeword, b: &Codeword) -> Codeword {
        let f = self.field();
        let n = self.n;
        let mut out = self.zero();
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                let mut t = f.u_mul(x, y);
                if i + j >= n {
                    t = f.u_mul(t, self.lambda);
                }
                out[(i + j) % n] = f.u_add(out[(i + j) % n], t);
            }
        }
        out
    }

    /// `sum_i a_i b_i` in R.
    pub fn inner_product(&self, a: &Codeword, b: &Codeword) -> UElem {
        let f = self.field();
        a.iter().zip(b).fold(UElem::ZERO, |acc, (&x, &y)| f.u_add(acc, f.u_mul(x, y)))
    }

    /// `a_0 x^n + sum_{i>=1} a_i x^(n-i)`, with `x^n = λ^{-1}` (the image lies in [`Self::dual`]).
    pub fn reciprocal(&self, w: &Codeword) -> Codeword {
        let f = self.field();
        let mut out = self.zero();
        out[0] = f.u_mul(w[0], self.lambda_inv);
        for i in 1..self.n {
            out[self.n - i] = w[i];
        }
        out
    }

    /// Flattened monomial coordinates, layer-major.
    pub fn flat_monomial(&self, w: &Codeword) -> Vec<FieldElem> {
        (0..3).flat_map(|l| w.iter().map(move |c| c.c[l])).collect()
    }

    /// Flattened `(x-1)`-adic coordinates, layer-major (the [`IdealBasis`] convention).
    pub fn to_flat_yadic(&self, w: &Codeword) -> Vec<FieldElem> {
        self.coords.flat_to_yadic(self.field(), &self.flat_monomial(w))
    }

    pub fn from_flat_yadic(&self, v: &[FieldElem]) -> Codeword {
        let mono = self.coords.flat_to_monomial(self.field(), v);
        let n = self.n;
        (0..n).map(|i| UElem::new(mono[i], mono[n + i], mono[2 * n + i])).collect()
    }

    pub fn from_selem(&self, a: &SElem) -> Codeword {
        self.from_flat_yadic(&a.flatten())
    }

    pub fn elements(&self, basis: &IdealBasis) -> Vec<Codeword> {
        basis.rows().iter().map(|r| self.from_flat_yadic(r)).collect()
    }

    fn basis_vectors(&self) -> Vec<Codeword> {
        let n = self.n;
        let mut out = Vec::with_capacity(3 * n);
        for l in 0..3 {
            for i in 0..n {
                let mut w = self.zero();
                w[i] = UElem::u_pow(l);
                out.push(w);
            }
        }
        out
    }

    /// Closure of `gens` under addition, scaling, shift and multiplication by `u`.
    pub fn span(&self, gens: &[Codeword]) -> IdealBasis {
        let f = self.field();
        let mut e = Echelon::new(3 * self.n);
        let mut queue: Vec<Codeword> = gens.to_vec();
        while let Some(w) = queue.pop() {
            if let Some(row) = e.insert(f, &self.to_flat_yadic(&w)) {
                let r = self.from_flat_yadic(row);
                queue.push(self.shift(&r));
                queue.push(self.mul_u(&r));
            }
        }
        IdealBasis::from_echelon(f, self.n, e)
    }

    /// Closure under the shift and `u`, re-verified element by element.
    pub fn is_ideal(&self, basis: &IdealBasis) -> bool {
        let f = self.field();
        self.elements(basis).iter().all(|w| {
            basis.contains(f, &self.to_flat_yadic(&self.shift(w)))
                && basis.contains(f, &self.to_flat_yadic(&self.mul_u(w)))
        })
    }

    /// Nullspace of `f ↦ (f·b_1, ..., f·b_d)` over a basis of `C`.
    pub fn brute_annihilator(&self, c: &IdealBasis) -> IdealBasis {
        let units = self.basis_vectors();
        let mut rows: Vec<Vec<FieldElem>> = Vec::new();
        for b in self.elements(c) {
            let cols: Vec<Vec<FieldElem>> = units.iter().map(|e| self.flat_monomial(&self.mul(e, &b))).collect();
            for r in 0..3 * self.n {
                rows.push(cols.iter().map(|col| col[r]).collect());
            }
        }
        self.kernel_ideal(&rows)
    }

    /// `{f : f·b = 0 in R for every b ∈ C}`; each R-valued condition is three F-linear ones.
    pub fn brute_dual(&self, c: &IdealBasis) -> IdealBasis {
        let units = self.basis_vectors();
        let mut rows: Vec<Vec<FieldElem>> = Vec::new();
        for b in self.elements(c) {
            let vals: Vec<UElem> = units.iter().map(|e| self.inner_product(e, &b)).collect();
            for l in 0..3 {
                rows.push(vals.iter().map(|v| v.c[l]).collect());
            }
        }
        self.kernel_ideal(&rows)
    }

    // kernel in monomial coordinates, returned in (x-1)-adic canonical form
    fn kernel_ideal(&self, rows: &[Vec<FieldElem>]) -> IdealBasis {
        let f = self.field();
        let kernel = nullspace(f, 3 * self.n, rows);
        let yadic: Vec<Vec<FieldElem>> = kernel.iter().map(|v| self.coords.flat_to_yadic(f, v)).collect();
        IdealBasis::from_vectors(f, self.n, &yadic)
    }

    /// `{w^* : w ∈ C}`.
    pub fn reciprocal_image(&self, c: &IdealBasis) -> IdealBasis {
        let images: Vec<Vec<FieldElem>> =
            self.elements(c).iter().map(|w| self.to_flat_yadic(&self.reciprocal(w))).collect();
        IdealBasis::from_vectors(self.field(), self.n, &images)
    }

    /// Number of ring elements, `q^(3n)`, saturating.
    pub fn ring_size(&self) -> u128 {
        (self.field().order() as u128).checked_pow(3 * self.n as u32).unwrap_or(u128::MAX)
    }

    /// Every ideal: all cyclic ideals, then closure under pairwise sums until nothing new
    /// appears. Sorted by canonical basis.
    pub fn enumerate_ideals(&self, budget: u128) -> Result<Vec<IdealBasis>> {
        let size = self.ring_size();
        if size > budget {
            return Err(Error::BudgetExceeded { needed: size, budget });
        }
        let f = self.field();
        let q = f.order() as u128;
        let n = self.n;
        let mut found: BTreeSet<IdealBasis> = BTreeSet::new();
        for idx in 0..size {
            let mut rest = idx;
            let mut flat = Vec::with_capacity(3 * n);
            for _ in 0..3 * n {
                flat.push(f.from_index((rest % q) as usize).expect("index below q"));
                rest /= q;
            }
            // scalar multiples generate the same ideal; keep monic vectors only
            match flat.iter().find(|c| !c.is_zero()) {
                Some(&lead) if lead != FieldElem::ONE => continue,
                _ => {}
            }
            let w: Codeword = (0..n).map(|i| UElem::new(flat[i], flat[n + i], flat[2 * n + i])).collect();
            found.insert(self.span(&[w]));
        }
        let mut frontier: Vec<IdealBasis> = found.iter().cloned().collect();
        while !frontier.is_empty() {
            let current: Vec<IdealBasis> = found.iter().cloned().collect();
            let mut next = Vec::new();
            for a in &frontier {
                for b in &current {
                    let s = a.sum(f, b);
                    if !found.contains(&s) {
                        found.insert(s.clone());
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        Ok(found.into_iter().collect())
    }

    /// Every ideal with `δ = 1`, built layer by layer along `C ⊇ C ∩ uS ⊇ C ∩ u^2 S`.
    ///
    /// `D = C ∩ uS` is `<u(x-1)^b + u^2 r, u^2 (x-1)^c>`; over it, `C = D + S f_0` with
    /// `f_0 = (x-1)^a + u w_1 + u^2 w_2` reduced modulo `D`, and `C ∩ uS = D` exactly when
    /// `u f_0` and `(x-1)^(n-a) f_0` lie in `D`. Only ideals whose profile passes `keep` are
    /// materialised. `budget` caps the number of candidate `f_0`.
    pub fn enumerate_ideals_layered(
        &self,
        budget: u128,
        keep: impl Fn(TorsionProfile) -> bool,
    ) -> Result<Vec<IdealBasis>> {
        if self.params.delta != FieldElem::ONE {
            return Err(Error::Unsupported("layered enumeration needs delta = 1".into()));
        }
        let ring = Ring::from_params(&self.params)?;
        let f = ring.field();
        let n = self.n;
        let q = f.order() as u128;
        let mut visited: u128 = 0;
        let mut out = Vec::new();
        let y_pow = |e: &SElem, k: usize| (0..k).fold(e.clone(), |acc, _| ring.mul_y(&acc));
        for c in 0..=n {
            let d2_rows: Vec<SElem> = (c..n).map(|j| ring.lift(&ring.bar_y_pow(j), 2)).collect();
            for b in c..=n {
                let r_choices: Vec<_> = if b == n {
                    vec![ring.bar_zero()]
                } else {
                    // y^(n-b) f_1 = u^2 y^(n-b) r must lie in u^2 <y^c>
                    let low = c.saturating_sub(n - b);
                    ring.bar_polys_below(c).filter(|r| r.coeffs[..low].iter().all(|x| x.is_zero())).collect()
                };
                for r in r_choices {
                    let mut d_rows = d2_rows.clone();
                    if b < n {
                        let f1 = ring.add(&ring.lift(&ring.bar_y_pow(b), 1), &ring.lift(&r, 2));
                        for i in 0..n - b {
                            d_rows.push(y_pow(&f1, i));
                        }
                    }
                    let d = IdealBasis::from_vectors(f, n, &d_rows.iter().map(|v| v.flatten()).collect::<Vec<_>>());
                    if keep(TorsionProfile::new(n, b, c)) {
                        out.push(d.clone());
                    }
                    for a in b..n {
                        if !keep(TorsionProfile::new(a, b, c)) {
                            continue;
                        }
                        // u f_0 = u y^a + u^2 w_1 ∈ D forces w_1 = y^(a-b) r mod y^c
                        let forced = ring.bar_trunc(&ring.bar_shift(&r, a - b), c);
                        let free1 = (b - c) as u32;
                        let free2 = c as u32;
                        let cost = q.saturating_pow(free1 + free2);
                        visited = visited.saturating_add(cost);
                        if visited > budget {
                            return Err(Error::BudgetExceeded { needed: visited, budget });
                        }
                        for hi in ring.bar_polys_below(b - c) {
                            let w1 = ring.bar_add(&forced, &ring.bar_shift(&hi, c));
                            let base = ring.add(&ring.lift(&ring.bar_y_pow(a), 0), &ring.lift(&w1, 1));
                            for w2 in ring.bar_polys_below(c) {
                                let f0 = ring.add(&base, &ring.lift(&w2, 2));
                                if !d.contains(f, &y_pow(&f0, n - a).flatten()) {
                                    continue;
                                }
                                let mut rows: Vec<Vec<FieldElem>> = d.rows().to_vec();
                                let mut cur = f0.clone();
                                for _ in 0..n - a {
                                    rows.push(cur.flatten());
                                    cur = ring.mul_y(&cur);
                                }
                                out.push(IdealBasis::from_vectors(f, n, &rows));
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Self-dual ideals (`C = C^⊥` as subspaces) by exhaustive enumeration.
    ///
    /// Uses the cyclic enumeration when the ring is within `budget`, else the layered one
    /// restricted to profiles of size `3n/2`.
    pub fn brute_selfdual_scan(&self, budget: u128) -> Result<Vec<IdealBasis>> {
        let n = self.n;
        if 3 * n % 2 == 1 {
            return Ok(Vec::new());
        }
        let half = 3 * n / 2;
        let candidates = if self.ring_size() <= budget {
            self.enumerate_ideals(budget)?
        } else if self.params.delta == FieldElem::ONE {
            self.enumerate_ideals_layered(budget, |p| p.a + p.b + p.c == half)?
        } else {
            return Err(Error::BudgetExceeded { needed: self.ring_size(), budget });
        };
        Ok(candidates.into_iter().filter(|c| c.dim() == half && self.brute_dual(c) == *c).collect())
    }

    /// Ideal generated by `gens` uniformly random codewords.
    pub fn random_ideal<G: Rng>(&self, rng: &mut G, gens: usize) -> IdealBasis {
        let f = self.field();
        let q = f.order();
        let words: Vec<Codeword> = (0..gens)
            .map(|_| {
                (0..self.n)
                    .map(|_| {
                        let mut c = [FieldElem::ZERO; 3];
                        for x in c.iter_mut() {
                            *x = f.from_index(rng.gen_range(0..q)).expect("index below q");
                        }
                        // bias towards non-units so that proper ideals are common
                        if rng.gen_bool(0.5) {
                            c[0] = FieldElem::ZERO;
                        }
                        UElem { c }
                    })
                    .collect()
            })
            .collect();
        self.span(&words)
    }
}

/// `sum a_i x^i ↦ sum δ0^i a_i x^i`, the isomorphism from `x^n = δ + αu^2` to
/// `x^n = 1 + αδ^{-1}u^2` induced by `x ↦ δ0 x`.
pub fn delta_substitute(params: &RingParams, w: &Codeword, delta0: FieldElem) -> Result<Codeword> {
    let f = &params.field;
    let n = params.n();
    if f.pow(delta0, n as u64) != params.delta {
        return Err(Error::InvalidRoot(format!(
            "{}^{n} differs from delta = {}",
            f.render(delta0),
            f.render(params.delta)
        )));
    }
    let mut scale = FieldElem::ONE;
    Ok(w
        .iter()
        .map(|&c| {
            let out = f.u_scale(scale, c);
            scale = f.mul(scale, delta0);
            out
        })
        .collect())
}

/// Image of an ideal of the `(δ + αu^2)` ring under [`delta_substitute`].
pub fn delta_substitute_ideal(params: &RingParams, basis: &IdealBasis, delta0: FieldElem) -> Result<IdealBasis> {
    let src = ConstaRing::new(params);
    let images = src
        .elements(basis)
        .iter()
        .map(|w| delta_substitute(params, w, delta0).map(|v| src.to_flat_yadic(&v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealBasis::from_vectors(&params.field, params.n(), &images))
}

/// Shared handle used by callers that build several oracles over one field.
pub fn consta_ring(field: &Arc<FieldCtx>, k: u32, alpha: FieldElem, delta: FieldElem) -> Result<ConstaRing> {
    Ok(ConstaRing::new(&RingParams::new(field.clone(), k, alpha, delta)?))
}

/// Every triple within the degree and unit constraints that `validate_triple` accepts,
/// found by trying all of them. `budget` caps the number of candidates.
pub fn valid_triples(ring: &Ring, budget: u128) -> Result<Vec<GeneratorTriple>> {
    let n = ring.n();
    let q = ring.field().order() as u128;
    let polys: Vec<SBarElem> = ring.bar_polys_below(n).collect();
    let below = |d: usize| polys.iter().filter(move |p| p.degree().map_or(true, |x| x < d));
    let mut visited: u128 = 0;
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=a {
            for c in 0..=b {
                let mut tgs: Vec<(usize, SBarElem)> = vec![(0, ring.bar_zero())];
                if a < n {
                    for t in 0..b {
                        tgs.extend(below(b - t).filter(|g| g.is_unit()).map(|g| (t, g.clone())));
                    }
                }
                let present = |x: usize| if x < n { q.saturating_pow(c as u32) } else { 1 };
                visited = visited.saturating_add((tgs.len() as u128).saturating_mul(present(b)).saturating_mul(present(a)));
                if visited > budget {
                    return Err(Error::BudgetExceeded { needed: visited, budget });
                }
                let zero = [ring.bar_zero()];
                let rs: Vec<&SBarElem> = if b < n { below(c).collect() } else { zero.iter().collect() };
                let hs: Vec<&SBarElem> = if a < n { below(c).collect() } else { zero.iter().collect() };
                for (t, g) in &tgs {
                    for r in &rs {
                        for h in &hs {
                            let tr = GeneratorTriple { a, t: *t, g: g.clone(), b, r: (*r).clone(), c, h: (*h).clone() };
                            if validate_triple(ring, &tr).is_valid() {
                                out.push(tr);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}
