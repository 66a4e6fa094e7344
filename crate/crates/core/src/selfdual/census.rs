use serde::Serialize;

use crate::code::GeneratorTriple;
use crate::error::Result;
use crate::ring::Ring;
use crate::selfdual::{
    build_m, degree2_families, monomial_g, outside_c_selfdual, require_char2, solve_h_system, FamilyMember,
    MonomialSpec, SelfDualForm,
};

/// `N(2^k, t, s)` with the data of its linear system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub k: u32,
    pub t: usize,
    pub s: usize,
    pub count: u128,
    pub nullity: usize,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub k: u32,
    pub rows: Vec<CensusRow>,
    /// Sum of the row counts.
    pub total: u128,
    /// The closed form `sum_s sum_t (2^m)^ceil((D + 1)/2)` over the admissible range.
    pub formula_total: u128,
}

/// Counts of self-dual `Ideal(k, t, √α x^s, h)` for every `0 <= t < 2^(k-1)`, `0 <= s < D`.
pub fn count_selfdual(ring: &Ring) -> Result<CountTable> {
    require_char2(ring)?;
    let f = ring.field();
    let (k, n) = (ring.k(), ring.n());
    let q = f.order() as u128;
    let mut rows = Vec::new();
    let mut formula_total = 0u128;
    for t in 0..n / 2 {
        let d = n / 2 - t;
        let sol = solve_h_system(f, &build_m(f, ring.alpha(), k, t)?);
        for s in 0..d {
            let spec = MonomialSpec::new(k, s);
            let admissible = spec.admits(n, t);
            let count = if admissible { sol.count(f.order()) } else { 0 };
            rows.push(CensusRow { k, t, s, count, nullity: sol.kernel.len(), consistent: sol.consistent });
            if admissible && t >= 1 && 4 * s <= n {
                formula_total = formula_total.saturating_add(q.saturating_pow(((d + 2) / 2) as u32));
            }
        }
    }
    rows.sort_by_key(|r| (r.s, r.t));
    let total = rows.iter().fold(0u128, |acc, r| acc.saturating_add(r.count));
    Ok(CountTable { k, rows, total, formula_total })
}

/// Every self-dual `Ideal(k, t, √α x^s, h)`.
pub fn enumerate_monomial(ring: &Ring) -> Result<Vec<SelfDualForm>> {
    require_char2(ring)?;
    let f = ring.field();
    let n = ring.n();
    let mut out = Vec::new();
    for t in 0..n / 2 {
        let d = n / 2 - t;
        let sol = solve_h_system(f, &build_m(f, ring.alpha(), ring.k(), t)?);
        for s in 0..d {
            if !MonomialSpec::new(ring.k(), s).admits(n, t) {
                continue;
            }
            let g = monomial_g(ring, s)?;
            for h in sol.solutions(f) {
                out.push(SelfDualForm::new(ring, t, g.clone(), ring.bar_from_yadic(&h)?)?);
            }
        }
    }
    Ok(out)
}

/// Monomial census, degree-2 families and the code outside class C.
#[derive(Clone, Debug)]
pub struct Census {
    pub table: CountTable,
    pub monomial: Vec<SelfDualForm>,
    pub families: Vec<FamilyMember>,
    pub outside: GeneratorTriple,
}

impl Census {
    pub fn total(&self) -> usize {
        self.monomial.len() + self.families.len() + 1
    }
}

pub fn census(ring: &Ring) -> Result<Census> {
    Ok(Census {
        table: count_selfdual(ring)?,
        monomial: enumerate_monomial(ring)?,
        families: degree2_families(ring)?,
        outside: outside_c_selfdual(ring)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    use crate::field::{FieldCtx, FieldElem};

    #[test]
    fn small_counts() {
        let f = Arc::new(FieldCtx::prime(2).unwrap());
        let r2 = Ring::new(f.clone(), 2, FieldElem::ONE).unwrap();
        let t2 = count_selfdual(&r2).unwrap();
        assert_eq!((t2.total, t2.formula_total), (2, 2));
        let r3 = Ring::new(f, 3, FieldElem::ONE).unwrap();
        let t3 = count_selfdual(&r3).unwrap();
        assert_eq!((t3.total, t3.formula_total), (22, 22));
        assert_eq!(enumerate_monomial(&r3).unwrap().len(), 22);
        let c = census(&r3).unwrap();
        assert_eq!(c.families.len(), 4);
        assert_eq!(c.total(), 27);
    }
}
