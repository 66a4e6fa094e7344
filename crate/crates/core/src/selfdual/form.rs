use serde::Serialize;

use crate::code::{GeneratorTriple, Violation};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::ring::{Ring, SBarElem};
use crate::selfdual::require_char2;

/// `Ideal(k, t, g, h)`: `a = 2^(k-1) + t`, `b = 2^(k-1)`, `c = D`, `r = αg^{-1} mod (x+1)^D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SelfDualForm {
    pub k: u32,
    pub t: usize,
    pub g: SBarElem,
    pub h: SBarElem,
}

impl SelfDualForm {
    /// Checks `p = 2`, `t < 2^(k-1)`, `g` a unit and both degrees below `D`.
    ///
    /// The extra congruence needed when `t < 2^(k-2)` is not enforced here; see
    /// [`SelfDualForm::shape_violation`].
    pub fn new(ring: &Ring, t: usize, g: SBarElem, h: SBarElem) -> Result<Self> {
        require_char2(ring)?;
        let half = ring.n() / 2;
        if t >= half {
            return Err(Error::InvalidParameter(format!("t = {t} must be below 2^(k-1) = {half}")));
        }
        let d = half - t;
        if g.coeffs.len() != ring.n() || h.coeffs.len() != ring.n() {
            return Err(Error::InvalidParameter(format!("g and h need {} coefficients", ring.n())));
        }
        if !g.is_unit() {
            return Err(Error::NotAUnit("g(1) = 0".into()));
        }
        if g.degree().unwrap_or(0) >= d || h.degree().map_or(false, |x| x >= d) {
            return Err(Error::InvalidParameter(format!("deg g and deg h must be below D = {d}")));
        }
        Ok(SelfDualForm { k: ring.k(), t, g, h })
    }

    /// `D = 2^(k-1) - t`.
    pub fn window(&self) -> usize {
        (1usize << (self.k - 1)) - self.t
    }

    pub fn r(&self, ring: &Ring) -> SBarElem {
        let inv = ring.inv_mod_nilpotent(&self.g, self.window()).expect("g is a unit");
        ring.bar_scale(ring.alpha(), &inv)
    }

    pub fn to_triple(&self, ring: &Ring) -> GeneratorTriple {
        let half = ring.n() / 2;
        GeneratorTriple {
            a: half + self.t,
            t: self.t,
            g: self.g.clone(),
            b: half,
            r: self.r(ring),
            c: self.window(),
            h: self.h.clone(),
        }
    }

    /// The congruence `r = g mod (x+1)^(c - t)` that makes the triple a valid ideal when
    /// `t < 2^(k-2)`; `None` when it holds or does not apply.
    pub fn shape_violation(&self, ring: &Ring) -> Option<Violation> {
        let n = ring.n();
        if 4 * self.t >= n {
            return None;
        }
        let m = self.window() - self.t;
        if ring.bar_trunc(&self.r(ring), m) != ring.bar_trunc(&self.g, m) {
            return Some(Violation::new(
                "r = g mod (x+1)^(c-t)",
                format!("t = {} < 2^(k-2) requires r and g to agree below degree {m}", self.t),
            ));
        }
        None
    }
}

/// Accepts exactly the canonical triples of the shape `Ideal(k, t, g, h)`.
pub fn selfdual_shape_check(ring: &Ring, tr: &GeneratorTriple) -> std::result::Result<SelfDualForm, Violation> {
    if ring.p() != 2 {
        return Err(Violation::new("p = 2", format!("p = {}", ring.p())));
    }
    if let Some(v) = tr.structural_violations(ring).into_iter().next() {
        return Err(v);
    }
    let n = ring.n();
    let half = n / 2;
    if tr.a < half || tr.a >= n {
        return Err(Violation::new("a = 2^(k-1) + t", format!("a = {} is outside [{half}, {n})", tr.a)));
    }
    let t = tr.a - half;
    if tr.t != t {
        return Err(Violation::new("t = a - 2^(k-1)", format!("t = {}, a - 2^(k-1) = {t}", tr.t)));
    }
    if tr.b != half {
        return Err(Violation::new("b = 2^(k-1)", format!("b = {}", tr.b)));
    }
    if tr.c != half - t {
        return Err(Violation::new("a + c = 2^k", format!("a + c = {}", tr.a + tr.c)));
    }
    let form = SelfDualForm::new(ring, t, tr.g.clone(), tr.h.clone())
        .map_err(|e| Violation::new("g unit, degrees below D", e.to_string()))?;
    if tr.r != form.r(ring) {
        return Err(Violation::new("r = alpha g^-1 mod (x+1)^D", "r differs"));
    }
    if let Some(v) = form.shape_violation(ring) {
        return Err(v);
    }
    Ok(form)
}

/// `(G, H)` with `C^⊥ = Ideal(k, t, G, H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualForm {
    pub g: SBarElem,
    pub h: SBarElem,
}

/// Reads the dual off `Ann(C)^*`, where `*` is `x -> x^{-1}`.
///
/// With `r = αg^{-1} mod (x+1)^D`, `g r = α + (x+1)^D l` and
/// `x^(2^(k-1)) r^* = G + (x+1)^D Q`:
/// `H = [x^(2^(k-1)+t) (h + l)^* + Q x^(2^(k-1)) g^*] mod (x+1)^D`.
pub fn dual_form(ring: &Ring, f: &SelfDualForm) -> DualForm {
    let d = f.window();
    let half = ring.n() / 2;
    let r = f.r(ring);
    let x_pow = |e: usize| {
        let mut m = vec![FieldElem::ZERO; e + 1];
        m[e] = FieldElem::ONE;
        ring.bar_from_monomial(&m)
    };
    let r_twist = ring.bar_mul(&x_pow(half), &ring.bar_reciprocal(&r));
    let g_big = ring.bar_trunc(&r_twist, d);
    let q = ring.bar_unshift(&ring.bar_sub(&r_twist, &g_big), d);
    let gr = ring.bar_mul(&f.g, &r);
    let l = ring.bar_unshift(&ring.bar_sub(&gr, &ring.bar_constant(ring.alpha())), d);
    let hl_star = ring.bar_reciprocal(&ring.bar_add(&f.h, &l));
    let mut h_big = ring.bar_mul(&x_pow(half + f.t), &hl_star);
    let qg = ring.bar_mul(&q, &ring.bar_mul(&x_pow(half), &ring.bar_reciprocal(&f.g)));
    h_big = ring.bar_add(&h_big, &qg);
    DualForm { g: g_big, h: ring.bar_trunc(&h_big, d) }
}

/// The three conditions of the self-duality criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct T4Report {
    /// `g g^* = α mod (x+1)^D`.
    pub cond1: bool,
    /// `t < 2^(k-2)` implies `g^2 = α mod (x+1)^(2^(k-1) - 2t)`.
    pub cond2: bool,
    /// `H = h`.
    pub cond3: bool,
    pub selfdual: bool,
}

pub fn is_selfdual_t4(ring: &Ring, f: &SelfDualForm) -> T4Report {
    let d = f.window();
    let alpha = ring.bar_constant(ring.alpha());
    let gg_star = ring.bar_mul(&f.g, &ring.bar_reciprocal(&f.g));
    let cond1 = ring.bar_trunc(&gg_star, d) == ring.bar_trunc(&alpha, d);
    let cond2 = if 4 * f.t < ring.n() {
        let m = ring.n() / 2 - 2 * f.t;
        ring.bar_trunc(&ring.bar_mul(&f.g, &f.g), m) == ring.bar_trunc(&alpha, m)
    } else {
        true
    };
    let cond3 = dual_form(ring, f).h == f.h;
    T4Report { cond1, cond2, cond3, selfdual: cond1 && cond2 && cond3 }
}
