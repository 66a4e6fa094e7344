use crate::binom::binom_mod;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::ring::Ring;
use crate::selfdual::require_char2;

/// `σ_s = sum_{i=0}^{s} sum_{j=0}^{s-i} C(2^k - j, s - i - j) g_i g_j`, binomials mod 2.
///
/// `g` lists the `(x+1)`-adic coefficients; missing ones are zero.
pub fn sigma(f: &FieldCtx, k: u32, g: &[FieldElem], s: usize) -> FieldElem {
    let n = 1u64 << k;
    let coeff = |i: usize| g.get(i).copied().unwrap_or(FieldElem::ZERO);
    let mut acc = FieldElem::ZERO;
    for i in 0..=s {
        let gi = coeff(i);
        if gi.is_zero() {
            continue;
        }
        for j in 0..=s - i {
            if binom_mod(n - j as u64, (s - i - j) as u64, 2) == 1 {
                acc = f.add(acc, f.mul(gi, coeff(j)));
            }
        }
    }
    acc
}

/// All `g` of degree `<= max_deg` with `g_0 = √α` and `σ_s = 0` for `1 <= s < D`, i.e.
/// `g g^* = α mod (x+1)^D`. Coefficient lists have length `max_deg + 1`, in index order.
pub fn solve_g_system(ring: &Ring, t: usize, max_deg: usize, budget: u128) -> Result<Vec<Vec<FieldElem>>> {
    require_char2(ring)?;
    let f = ring.field();
    let half = ring.n() / 2;
    if t >= half {
        return Err(Error::InvalidParameter(format!("t = {t} must be below {half}")));
    }
    let d = half - t;
    if max_deg >= d {
        return Err(Error::InvalidParameter(format!("max_deg = {max_deg} must be below D = {d}")));
    }
    let q = f.order() as u128;
    let sweep = q.checked_pow(max_deg as u32).unwrap_or(u128::MAX);
    if sweep > budget {
        return Err(Error::BudgetExceeded { needed: sweep, budget });
    }
    let g0 = f.sqrt_char2(ring.alpha())?;
    let mut out = Vec::new();
    for idx in 0..sweep {
        let mut g = vec![g0];
        let mut rest = idx;
        for _ in 0..max_deg {
            g.push(f.from_index((rest % q) as usize)?);
            rest /= q;
        }
        if (1..d).all(|s| sigma(f, ring.k(), &g, s).is_zero()) {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_sigmas() {
        for m in 1..=2 {
            let f = FieldCtx::with_default_modulus(2, m).unwrap();
            for g0 in f.elements() {
                for g1 in f.elements() {
                    for g2 in f.elements() {
                        let g = [g0, g1, g2];
                        assert_eq!(sigma(&f, 4, &g, 0), f.mul(g0, g0));
                        assert!(sigma(&f, 4, &g, 1).is_zero());
                    }
                    let g = [g0, g1];
                    let expect = f.mul(g1, f.add(g0, g1));
                    assert_eq!(sigma(&f, 4, &g, 2), expect);
                    assert_eq!(sigma(&f, 4, &g, 3), expect);
                }
            }
        }
    }
}
