//! The quotient rings S̄ = F_{p^m}[x]/<x^n - 1> and S = R[x]/<x^n - (1 + αu^2)>, n = p^k.
//!
//! Elements are stored in `y = x - 1` coordinates. Because the characteristic is `p` and
//! `n = p^k`, `x^n - 1 = y^n`, so S̄ is the truncated power series ring `F[y]/<y^n>` and in S
//! the relation reads `y^n = αu^2`. Monomial coordinates are only used at the boundary
//! (reciprocals, inner products, the constacyclic-shift view).

use std::sync::Arc;

use crate::coords::YadicCoords;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::poly::Poly;
use crate::uring::UElem;

/// Largest code length supported.
pub const MAX_LENGTH: usize = 512;

/// Field, length exponent and the constacyclic unit `δ + αu^2`.
#[derive(Clone, Debug)]
pub struct RingParams {
    pub field: Arc<FieldCtx>,
    pub k: u32,
    pub alpha: FieldElem,
    pub delta: FieldElem,
}

impl RingParams {
    pub fn new(field: Arc<FieldCtx>, k: u32, alpha: FieldElem, delta: FieldElem) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        let n = (field.p() as u128).checked_pow(k).unwrap_or(u128::MAX);
        if n > MAX_LENGTH as u128 {
            return Err(Error::InvalidParameter(format!("length {}^{k} exceeds {MAX_LENGTH}", field.p())));
        }
        if alpha.is_zero() {
            return Err(Error::InvalidParameter("alpha must be nonzero".into()));
        }
        if delta.is_zero() {
            return Err(Error::InvalidParameter("delta must be nonzero".into()));
        }
        Ok(RingParams { field, k, alpha, delta })
    }

    pub fn n(&self) -> usize {
        (self.field.p() as usize).pow(self.k)
    }

    /// The shift unit `δ + αu^2`.
    pub fn lambda(&self) -> UElem {
        UElem::new(self.delta, FieldElem::ZERO, self.alpha)
    }

    /// The `δ = 1` ring isomorphic to this one under `x ↦ δ0 x`, together with `δ0`.
    /// The new shift constant is `1 + αδ^{-1}u^2`.
    pub fn reduce_delta(&self) -> Result<(RingParams, FieldElem)> {
        let f = &self.field;
        let delta0 = f.pk_root(self.delta, self.k)?;
        let alpha = f.div(self.alpha, self.delta)?;
        Ok((RingParams { field: self.field.clone(), k: self.k, alpha, delta: FieldElem::ONE }, delta0))
    }
}

/// An element of S̄ in `(x - 1)`-adic coordinates; `coeffs.len() == n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SBarElem {
    pub coeffs: Vec<FieldElem>,
}

impl SBarElem {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Index of the first nonzero coefficient (the `(x-1)`-adic valuation).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Degree in `(x - 1)`; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Units of S̄ are the elements with nonzero constant `(x-1)`-adic coefficient.
    pub fn is_unit(&self) -> bool {
        self.coeffs.first().map_or(false, |c| !c.is_zero())
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    /// Coefficients with trailing zeros removed.
    pub fn trimmed(&self) -> &[FieldElem] {
        let len = self.degree().map_or(0, |d| d + 1);
        &self.coeffs[..len]
    }
}

/// An element of S as three S̄ layers, the coefficients of `u^0`, `u^1`, `u^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SElem {
    pub layers: [Vec<FieldElem>; 3],
}

impl SElem {
    pub fn is_zero(&self) -> bool {
        self.layers.iter().all(|l| l.iter().all(|c| c.is_zero()))
    }

    /// Coordinates flattened layer-major: `u^l (x-1)^j` sits at `l·n + j`.
    pub fn flatten(&self) -> Vec<FieldElem> {
        self.layers.iter().flat_map(|l| l.iter().copied()).collect()
    }

    pub fn layer(&self, l: usize) -> SBarElem {
        SBarElem { coeffs: self.layers[l].clone() }
    }
}

/// `(αg^{-1})^* = (x+1)^D q + G` as plain polynomials, `D = 2^{k-1} - t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarDivision {
    /// Quotient, monomial coefficients.
    pub q: Poly,
    /// Remainder, monomial coefficients, degree `< D`.
    pub rem: Poly,
    /// The divisor exponent `D`.
    pub window: usize,
}

/// S and S̄ for fixed `(F_{p^m}, k, α)` with `δ = 1`.
#[derive(Clone, Debug)]
pub struct Ring {
    field: Arc<FieldCtx>,
    k: u32,
    n: usize,
    alpha: FieldElem,
    coords: YadicCoords,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.k == other.k && self.alpha == other.alpha
    }
}

impl Ring {
    pub fn new(field: Arc<FieldCtx>, k: u32, alpha: FieldElem) -> Result<Self> {
        let params = RingParams::new(field, k, alpha, FieldElem::ONE)?;
        Self::from_params(&params)
    }

    pub fn from_params(params: &RingParams) -> Result<Self> {
        if params.delta != FieldElem::ONE {
            return Err(Error::Unsupported(
                "ring operations need delta = 1; apply RingParams::reduce_delta first".into(),
            ));
        }
        let n = params.n();
        let coords = YadicCoords::new(params.field.p(), n);
        Ok(Ring { field: params.field.clone(), k: params.k, n, alpha: params.alpha, coords })
    }

    pub fn params(&self) -> RingParams {
        RingParams { field: self.field.clone(), k: self.k, alpha: self.alpha, delta: FieldElem::ONE }
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn coords(&self) -> &YadicCoords {
        &self.coords
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Code length `n = p^k`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> FieldElem {
        self.alpha
    }

    /// The ring holding duals: `x^n = (1 + αu^2)^{-1} = 1 - αu^2`. Equal to `self` when `p = 2`.
    pub fn dual_ring(&self) -> Ring {
        Ring { alpha: self.field.neg(self.alpha), ..self.clone() }
    }

    // ---------------------------------------------------------------- S̄

    pub fn bar_zero(&self) -> SBarElem {
        SBarElem { coeffs: vec![FieldElem::ZERO; self.n] }
    }

    pub fn bar_one(&self) -> SBarElem {
        self.bar_constant(FieldElem::ONE)
    }

    pub fn bar_constant(&self, c: FieldElem) -> SBarElem {
        let mut f = self.bar_zero();
        f.coeffs[0] = c;
        f
    }

    /// `(x - 1)^i`, zero once `i >= n`.
    pub fn bar_y_pow(&self, i: usize) -> SBarElem {
        let mut f = self.bar_zero();
        if i < self.n {
            f.coeffs[i] = FieldElem::ONE;
        }
        f
    }

    /// Element with the given `(x-1)`-adic coefficients; at most `n` of them.
    pub fn bar_from_yadic(&self, coeffs: &[FieldElem]) -> Result<SBarElem> {
        if coeffs.len() > self.n {
            return Err(Error::InvalidParameter(format!(
                "{} coefficients exceed the length {}",
                coeffs.len(),
                self.n
            )));
        }
        let mut f = self.bar_zero();
        f.coeffs[..coeffs.len()].copy_from_slice(coeffs);
        Ok(f)
    }

    /// Element from monomial coefficients of any length, reduced with `x^n = 1`.
    pub fn bar_from_monomial(&self, coeffs: &[FieldElem]) -> SBarElem {
        let f = &self.field;
        let mut folded = vec![FieldElem::ZERO; self.n];
        for (i, &c) in coeffs.iter().enumerate() {
            folded[i % self.n] = f.add(folded[i % self.n], c);
        }
        SBarElem { coeffs: self.monomial_to_yadic(&folded) }
    }

    pub fn bar_to_monomial(&self, a: &SBarElem) -> Vec<FieldElem> {
        self.yadic_to_monomial(&a.coeffs)
    }

    /// Monomial coefficients (length `n`) to `(x-1)`-adic coefficients.
    pub fn monomial_to_yadic(&self, mono: &[FieldElem]) -> Vec<FieldElem> {
        self.coords.to_yadic(&self.field, mono)
    }

    /// `(x-1)`-adic coefficients (length `n`) to monomial coefficients.
    pub fn yadic_to_monomial(&self, y: &[FieldElem]) -> Vec<FieldElem> {
        self.coords.to_monomial(&self.field, y)
    }

    pub fn bar_add(&self, a: &SBarElem, b: &SBarElem) -> SBarElem {
        let f = &self.field;
        SBarElem { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| f.add(x, y)).collect() }
    }

    pub fn bar_sub(&self, a: &SBarElem, b: &SBarElem) -> SBarElem {
        let f = &self.field;
        SBarElem { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| f.sub(x, y)).collect() }
    }

    pub fn bar_neg(&self, a: &SBarElem) -> SBarElem {
        SBarElem { coeffs: a.coeffs.iter().map(|&x| self.field.neg(x)).collect() }
    }

    pub fn bar_scale(&self, s: FieldElem, a: &SBarElem) -> SBarElem {
        SBarElem { coeffs: a.coeffs.iter().map(|&x| self.field.mul(s, x)).collect() }
    }

    /// Product in S̄, i.e. modulo `(x-1)^n`.
    pub fn bar_mul(&self, a: &SBarElem, b: &SBarElem) -> SBarElem {
        SBarElem { coeffs: self.mul_trunc(&a.coeffs, &b.coeffs, self.n) }
    }

    // first `len` coefficients of the power-series product
    fn mul_trunc(&self, a: &[FieldElem], b: &[FieldElem], len: usize) -> Vec<FieldElem> {
        let f = &self.field;
        let mut out = vec![FieldElem::ZERO; len];
        for (i, &x) in a.iter().enumerate().take(len) {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate().take(len - i) {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        out
    }

    /// Reduction modulo `(x-1)^c`: keep the coefficients below `c`.
    pub fn bar_trunc(&self, a: &SBarElem, c: usize) -> SBarElem {
        let mut out = a.clone();
        for v in out.coeffs.iter_mut().skip(c) {
            *v = FieldElem::ZERO;
        }
        out
    }

    /// Multiplication by `(x-1)^s` in S̄.
    pub fn bar_shift(&self, a: &SBarElem, s: usize) -> SBarElem {
        let mut out = self.bar_zero();
        for (i, &c) in a.coeffs.iter().enumerate() {
            if i + s < self.n {
                out.coeffs[i + s] = c;
            }
        }
        out
    }

    /// Division by `(x-1)^s` of an element with valuation at least `s` (lower terms dropped).
    pub fn bar_unshift(&self, a: &SBarElem, s: usize) -> SBarElem {
        let mut out = self.bar_zero();
        for (i, &c) in a.coeffs.iter().enumerate().skip(s) {
            out.coeffs[i - s] = c;
        }
        out
    }

    /// `h` of `(x-1)`-degree `< c` with `g·h = 1 mod (x-1)^c`, by Newton iteration
    /// `h ← h(2 - gh)`, which doubles the correct precision each round.
    pub fn inv_mod_nilpotent(&self, g: &SBarElem, c: usize) -> Result<SBarElem> {
        if c > self.n {
            return Err(Error::InvalidParameter(format!("precision {c} exceeds the length {}", self.n)));
        }
        if !g.is_unit() {
            return Err(Error::NotAUnit("g(1) = 0, g is not invertible in S̄".into()));
        }
        let f = &self.field;
        let mut h = vec![FieldElem::ZERO; c];
        if c == 0 {
            return Ok(self.bar_zero());
        }
        h[0] = f.inv(g.coeffs[0])?;
        let mut prec = 1;
        while prec < c {
            prec = (2 * prec).min(c);
            let gh = self.mul_trunc(&g.coeffs, &h, prec);
            let mut two_minus: Vec<FieldElem> = gh.iter().map(|&v| f.neg(v)).collect();
            two_minus[0] = f.add(two_minus[0], f.from_int(2));
            h = self.mul_trunc(&h, &two_minus, prec);
        }
        h.resize(self.n, FieldElem::ZERO);
        Ok(SBarElem { coeffs: h })
    }

    /// `f^* = sum_i a_i x^(n-i)` with `x^n = 1`.
    pub fn bar_reciprocal(&self, a: &SBarElem) -> SBarElem {
        let mono = self.bar_to_monomial(a);
        let mut rev = vec![FieldElem::ZERO; self.n];
        rev[0] = mono[0];
        for i in 1..self.n {
            rev[self.n - i] = mono[i];
        }
        SBarElem { coeffs: self.monomial_to_yadic(&rev) }
    }

    pub fn bar_eval_at_one(&self, a: &SBarElem) -> FieldElem {
        a.coeffs[0]
    }

    /// Splits `(αg^{-1})^*` by `(x+1)^D`, `D = 2^{k-1} - t`.
    ///
    /// `αg^{-1}` is taken as its representative of degree `< D`, read as a plain
    /// polynomial, starred in the window `2^k` without reduction, then divided in `F[x]`.
    pub fn star_divide(&self, g: &SBarElem, t: usize) -> Result<StarDivision> {
        let f = &self.field;
        if f.p() != 2 {
            return Err(Error::UnsupportedCharacteristic(f.p()));
        }
        let half = self.n / 2;
        if t >= half {
            return Err(Error::InvalidParameter(format!("t = {t} must be below 2^(k-1) = {half}")));
        }
        let window = half - t;
        let inv = self.inv_mod_nilpotent(g, window)?;
        let rep = self.bar_scale(self.alpha, &inv);
        let plain = Poly::from_yadic(&rep.coeffs[..window], f);
        let mut star = vec![FieldElem::ZERO; self.n + 1];
        for (i, &a) in plain.coeffs().iter().enumerate() {
            star[self.n - i] = a;
        }
        let (q, rem) = Poly::new(star).div_rem(&Poly::x_minus_one_pow(window, f), f)?;
        Ok(StarDivision { q, rem, window })
    }

    // ---------------------------------------------------------------- S

    pub fn zero(&self) -> SElem {
        SElem { layers: [vec![FieldElem::ZERO; self.n], vec![FieldElem::ZERO; self.n], vec![FieldElem::ZERO; self.n]] }
    }

    pub fn one(&self) -> SElem {
        self.lift(&self.bar_one(), 0)
    }

    /// `u^l · a` for an S̄ element `a` lifted to S (zero for `l >= 3`).
    pub fn lift(&self, a: &SBarElem, l: usize) -> SElem {
        let mut out = self.zero();
        if l < 3 {
            out.layers[l] = a.coeffs.clone();
        }
        out
    }

    /// `a0 + u a1 + u^2 a2`.
    pub fn from_layers(&self, a0: &SBarElem, a1: &SBarElem, a2: &SBarElem) -> SElem {
        SElem { layers: [a0.coeffs.clone(), a1.coeffs.clone(), a2.coeffs.clone()] }
    }

    pub fn from_flat(&self, v: &[FieldElem]) -> SElem {
        let n = self.n;
        SElem { layers: [v[..n].to_vec(), v[n..2 * n].to_vec(), v[2 * n..3 * n].to_vec()] }
    }

    /// The reduction `μ`: drop the `u` layers.
    pub fn mu(&self, a: &SElem) -> SBarElem {
        a.layer(0)
    }

    pub fn add(&self, a: &SElem, b: &SElem) -> SElem {
        let f = &self.field;
        let layer = |l: usize| a.layers[l].iter().zip(&b.layers[l]).map(|(&x, &y)| f.add(x, y)).collect();
        SElem { layers: [layer(0), layer(1), layer(2)] }
    }

    pub fn sub(&self, a: &SElem, b: &SElem) -> SElem {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &SElem) -> SElem {
        let f = &self.field;
        let layer = |l: usize| a.layers[l].iter().map(|&x| f.neg(x)).collect();
        SElem { layers: [layer(0), layer(1), layer(2)] }
    }

    pub fn scale(&self, s: FieldElem, a: &SElem) -> SElem {
        let f = &self.field;
        let layer = |l: usize| a.layers[l].iter().map(|&x| f.mul(s, x)).collect();
        SElem { layers: [layer(0), layer(1), layer(2)] }
    }

    /// Multiplication by `u`.
    pub fn mul_u(&self, a: &SElem) -> SElem {
        SElem { layers: [vec![FieldElem::ZERO; self.n], a.layers[0].clone(), a.layers[1].clone()] }
    }

    /// Multiplication by `y = x - 1`; the top coefficient of the `u^0` layer wraps to
    /// `αu^2` because `y^n = αu^2`.
    pub fn mul_y(&self, a: &SElem) -> SElem {
        let f = &self.field;
        let n = self.n;
        let shift = |l: &Vec<FieldElem>| {
            let mut out = vec![FieldElem::ZERO; n];
            out[1..].copy_from_slice(&l[..n - 1]);
            out
        };
        let mut out = SElem { layers: [shift(&a.layers[0]), shift(&a.layers[1]), shift(&a.layers[2])] };
        out.layers[2][0] = f.add(out.layers[2][0], f.mul(self.alpha, a.layers[0][n - 1]));
        out
    }

    pub fn mul_x(&self, a: &SElem) -> SElem {
        self.add(&self.mul_y(a), a)
    }

    /// Product in S with `y^n = αu^2` and `u^3 = 0`.
    pub fn mul(&self, a: &SElem, b: &SElem) -> SElem {
        let f = &self.field;
        let n = self.n;
        let mut out = self.zero();
        for i in 0..3 {
            for j in 0..3 - i {
                let full = full_product(f, &a.layers[i], &b.layers[j]);
                for (d, &c) in full.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if d < n {
                        out.layers[i + j][d] = f.add(out.layers[i + j][d], c);
                    } else if i + j == 0 {
                        out.layers[2][d - n] = f.add(out.layers[2][d - n], f.mul(self.alpha, c));
                    }
                }
            }
        }
        out
    }

    /// Layers in monomial coordinates.
    pub fn to_monomial(&self, a: &SElem) -> [Vec<FieldElem>; 3] {
        [
            self.yadic_to_monomial(&a.layers[0]),
            self.yadic_to_monomial(&a.layers[1]),
            self.yadic_to_monomial(&a.layers[2]),
        ]
    }

    /// From monomial layers, each of length at most `n`.
    pub fn from_monomial(&self, layers: &[Vec<FieldElem>; 3]) -> Result<SElem> {
        let mut out = self.zero();
        for l in 0..3 {
            if layers[l].len() > self.n {
                return Err(Error::InvalidParameter(format!("layer {l} longer than the length {}", self.n)));
            }
            let mut padded = layers[l].clone();
            padded.resize(self.n, FieldElem::ZERO);
            out.layers[l] = self.monomial_to_yadic(&padded);
        }
        Ok(out)
    }

    /// `f^* = a_0 x^n + sum_{i>=1} a_i x^(n-i)`, with `x^n` replaced by
    /// `(1 + αu^2)^{-1} = 1 - αu^2`. The image lies in [`Ring::dual_ring`], and with this
    /// reduction `f^*·g` (inner product) vanishes for all `g ∈ C` whenever `f ∈ Ann(C)`.
    pub fn reciprocal(&self, a: &SElem) -> SElem {
        let f = &self.field;
        let n = self.n;
        let mono = self.to_monomial(a);
        let mut rev: [Vec<FieldElem>; 3] = [vec![FieldElem::ZERO; n], vec![FieldElem::ZERO; n], vec![FieldElem::ZERO; n]];
        for l in 0..3 {
            rev[l][0] = mono[l][0];
            for i in 1..n {
                rev[l][n - i] = mono[l][i];
            }
        }
        rev[2][0] = f.sub(rev[2][0], f.mul(self.alpha, mono[0][0]));
        self.from_monomial(&rev).expect("length n layers")
    }

    /// R-valued Euclidean inner product of monomial coefficient vectors.
    pub fn inner_product(&self, a: &SElem, b: &SElem) -> UElem {
        let f = &self.field;
        let (ma, mb) = (self.to_monomial(a), self.to_monomial(b));
        let mut acc = UElem::ZERO;
        for i in 0..self.n {
            let x = UElem::new(ma[0][i], ma[1][i], ma[2][i]);
            let y = UElem::new(mb[0][i], mb[1][i], mb[2][i]);
            acc = f.u_add(acc, f.u_mul(x, y));
        }
        acc
    }

    /// All elements of S̄ (only sensible for tiny rings).
    pub fn bar_elements(&self) -> impl Iterator<Item = SBarElem> + '_ {
        let q = self.field.order() as u128;
        let total = q.pow(self.n as u32);
        (0..total).map(move |mut idx| {
            let mut coeffs = Vec::with_capacity(self.n);
            for _ in 0..self.n {
                coeffs.push(FieldElem::raw((idx % q) as usize));
                idx /= q;
            }
            SBarElem { coeffs }
        })
    }

    /// Polynomials in `(x-1)` of degree `< d`, enumerated in index order.
    pub fn bar_polys_below(&self, d: usize) -> impl Iterator<Item = SBarElem> + '_ {
        let q = self.field.order() as u128;
        let d = d.min(self.n);
        let total = q.pow(d as u32);
        (0..total).map(move |mut idx| {
            let mut coeffs = vec![FieldElem::ZERO; self.n];
            for c in coeffs.iter_mut().take(d) {
                *c = FieldElem::raw((idx % q) as usize);
                idx /= q;
            }
            SBarElem { coeffs }
        })
    }

    /// Readable rendering in powers of `(x-1)`.
    pub fn render_bar(&self, a: &SBarElem) -> String {
        let f = &self.field;
        let var = if f.p() == 2 { "(x+1)" } else { "(x-1)" };
        let terms: Vec<String> = a
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| {
                let cs = f.render(c);
                let cs = if cs.contains('+') { format!("({cs})") } else { cs };
                match i {
                    0 => cs,
                    1 if c == FieldElem::ONE => var.to_string(),
                    1 => format!("{cs}{var}"),
                    _ if c == FieldElem::ONE => format!("{var}^{i}"),
                    _ => format!("{cs}{var}^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn full_product(f: &FieldCtx, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    let mut out = vec![FieldElem::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
    }
    out
}
