use serde::Serialize;

use crate::binom::binom_mod;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::linalg::{mat_vec, nullspace, rank, solve};
use crate::ring::{Ring, SBarElem};

/// The exponent `s` of `g = √α x^s` and `w` with `2^w || s` (`w = k - 2` when `s = 0`).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialSpec {
    pub s: usize,
    pub w: i32,
}

impl MonomialSpec {
    pub fn new(k: u32, s: usize) -> Self {
        let w = if s == 0 { k as i32 - 2 } else { s.trailing_zeros() as i32 };
        MonomialSpec { s, w }
    }

    /// `4(2^(k-2) - 2^w)`, scaled so that it stays integral for `k = 1`.
    fn threshold_x4(&self, n: usize) -> i64 {
        n as i64 - (1i64 << (self.w + 2))
    }

    /// `t` lies in the range where some `h` can make `Ideal(k, t, √α x^s, h)` self-dual.
    pub fn admits(&self, n: usize, t: usize) -> bool {
        let d = n / 2 - t;
        self.s < d && 4 * t as i64 >= self.threshold_x4(n)
    }
}

/// `√α x^s` in `(x+1)`-adic coordinates.
pub fn monomial_g(ring: &Ring, s: usize) -> Result<SBarElem> {
    let f = ring.field();
    let root = f.sqrt_char2(ring.alpha())?;
    let mut mono = vec![FieldElem::ZERO; s + 1];
    mono[s] = root;
    Ok(ring.bar_from_monomial(&mono))
}

/// The monomial criterion:
/// for `2^(k-2) <= t`, `x^(2^(k-1)+t) h^* = h mod (x+1)^D`;
/// for `2^(k-2) - 2^w <= t < 2^(k-2)`, `α(x+1)^t + x^(2^(k-1)+t) h^* = h mod (x+1)^D`;
/// otherwise never.
pub fn is_selfdual_t5(ring: &Ring, t: usize, spec: MonomialSpec, h: &SBarElem) -> bool {
    let n = ring.n();
    if ring.p() != 2 || t >= n / 2 || !spec.admits(n, t) {
        return false;
    }
    let d = n / 2 - t;
    let mut x_pow = vec![FieldElem::ZERO; n / 2 + t + 1];
    x_pow[n / 2 + t] = FieldElem::ONE;
    let mut lhs = ring.bar_mul(&ring.bar_from_monomial(&x_pow), &ring.bar_reciprocal(h));
    if 4 * t < n {
        lhs = ring.bar_add(&lhs, &ring.bar_scale(ring.alpha(), &ring.bar_y_pow(t)));
    }
    ring.bar_trunc(&lhs, d) == ring.bar_trunc(h, d)
}

/// `M(2^k, t) h = d` over F_{2^m}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MSystem {
    pub k: u32,
    pub t: usize,
    pub dim: usize,
    /// Rows; entry `(i, j) = C(2^(k-1) + t - j, i - j) mod 2` for `i > j`.
    pub m: Vec<Vec<FieldElem>>,
    /// `d_t = α` when `t < dim`, all other entries zero.
    pub d: Vec<FieldElem>,
    pub rank: usize,
    pub nullity: usize,
    /// Nullity of `M(2^k, 2^(k-1) - t)`, defined for `t >= 1`.
    pub mirror_nullity: Option<usize>,
}

impl MSystem {
    pub fn rhs_vanishes(&self) -> bool {
        self.d.iter().all(|x| x.is_zero())
    }
}

/// The matrix of the condition `x^(2^(k-1)+t) h^* + h = α(x+1)^t mod (x+1)^D` acting on
/// the coefficients of `h`, with its rank over the given field.
pub fn build_m(f: &FieldCtx, alpha: FieldElem, k: u32, t: usize) -> Result<MSystem> {
    if f.p() != 2 {
        return Err(Error::UnsupportedCharacteristic(f.p()));
    }
    let half = 1usize << (k - 1);
    if t >= half {
        return Err(Error::InvalidParameter(format!("t = {t} must be below {half}")));
    }
    let dim = half - t;
    let m = m_rows(half, t);
    let mut d = vec![FieldElem::ZERO; dim];
    if t < dim {
        d[t] = alpha;
    }
    let mirror_nullity = (t >= 1).then(|| t - rank(f, t, &m_rows(half, half - t)));
    let r = rank(f, dim, &m);
    Ok(MSystem { k, t, dim, m, d, rank: r, nullity: dim - r, mirror_nullity })
}

fn m_rows(half: usize, t: usize) -> Vec<Vec<FieldElem>> {
    let dim = half - t;
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    if i > j && binom_mod((half + t - j) as u64, (i - j) as u64, 2) == 1 {
                        FieldElem::ONE
                    } else {
                        FieldElem::ZERO
                    }
                })
                .collect()
        })
        .collect()
}

/// Solutions of `M h = d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSolution {
    pub consistent: bool,
    pub particular: Option<Vec<FieldElem>>,
    pub kernel: Vec<Vec<FieldElem>>,
}

impl HSolution {
    /// `q^nullity` when consistent, else zero; saturates at `u128::MAX`.
    pub fn count(&self, q: usize) -> u128 {
        if self.consistent {
            (q as u128).saturating_pow(self.kernel.len() as u32)
        } else {
            0
        }
    }

    /// Every solution, in a fixed order (particular plus kernel combinations).
    pub fn solutions(&self, f: &FieldCtx) -> Vec<Vec<FieldElem>> {
        let Some(p) = &self.particular else { return Vec::new() };
        let q = f.order();
        let total = q.pow(self.kernel.len() as u32);
        (0..total)
            .map(|mut idx| {
                let mut v = p.clone();
                for kv in &self.kernel {
                    let c = f.from_index(idx % q).expect("index below q");
                    idx /= q;
                    for (x, &y) in v.iter_mut().zip(kv) {
                        *x = f.add(*x, f.mul(c, y));
                    }
                }
                v
            })
            .collect()
    }
}

/// Gaussian elimination on `M h = d`; consistency is computed, not assumed.
pub fn solve_h_system(f: &FieldCtx, sys: &MSystem) -> HSolution {
    match solve(f, sys.dim, &sys.m, &sys.d) {
        Some(sol) => {
            debug_assert_eq!(mat_vec(f, &sys.m, &sol.particular), sys.d);
            HSolution { consistent: true, particular: Some(sol.particular), kernel: sol.kernel }
        }
        None => HSolution { consistent: false, particular: None, kernel: nullspace(f, sys.dim, &sys.m) },
    }
}
