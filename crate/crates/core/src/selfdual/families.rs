use serde::Serialize;

use crate::code::GeneratorTriple;
use crate::error::Result;
use crate::field::FieldElem;
use crate::ring::Ring;
use crate::selfdual::{require_char2, SelfDualForm};

/// The four degree-2 families with `D = 3`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    /// `k = 3`: `g = √α + β(x+1)^2`, `h_0 = α + √α β + β^2`, `β ∉ {0, √α}`.
    #[serde(rename = "i")]
    I,
    /// `k = 3`: `g = √α x + β(x+1)^2`, `h_0 = β^2 + α`, `β ≠ 0`.
    #[serde(rename = "ii")]
    II,
    /// `k >= 4`: `g = √α + β(x+1)^2`, `h_0 = √α β + β^2`, `β ∉ {0, √α}`.
    #[serde(rename = "iii")]
    III,
    /// `k >= 4`: `g = √α x + β(x+1)^2`, `h_0 = β^2`, `β ≠ 0`.
    #[serde(rename = "iv")]
    IV,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::I => "i",
            Family::II => "ii",
            Family::III => "iii",
            Family::IV => "iv",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub family: Family,
    pub beta: FieldElem,
    pub form: SelfDualForm,
}

/// Every member of the degree-2 families, with `h_1, h_2` running over the field.
/// Empty for `k < 3`.
pub fn degree2_families(ring: &Ring) -> Result<Vec<FamilyMember>> {
    require_char2(ring)?;
    let k = ring.k();
    if k < 3 {
        return Ok(Vec::new());
    }
    let f = ring.field();
    let alpha = ring.alpha();
    let root = f.sqrt_char2(alpha)?;
    let t = ring.n() / 2 - 3;
    let (plain, shifted) = if k == 3 { (Family::I, Family::II) } else { (Family::III, Family::IV) };
    let mut out = Vec::new();
    for beta in f.elements() {
        for family in [plain, shifted] {
            let x_term = matches!(family, Family::II | Family::IV);
            if beta.is_zero() || (!x_term && beta == root) {
                continue;
            }
            let h0 = match family {
                Family::I => f.sum([alpha, f.mul(root, beta), f.mul(beta, beta)]),
                Family::II => f.add(f.mul(beta, beta), alpha),
                Family::III => f.add(f.mul(root, beta), f.mul(beta, beta)),
                Family::IV => f.mul(beta, beta),
            };
            let g1 = if x_term { root } else { FieldElem::ZERO };
            let g = ring.bar_from_yadic(&[root, g1, beta])?;
            for h1 in f.elements() {
                for h2 in f.elements() {
                    let h = ring.bar_from_yadic(&[h0, h1, h2])?;
                    out.push(FamilyMember { family, beta, form: SelfDualForm::new(ring, t, g.clone(), h)? });
                }
            }
        }
    }
    out.sort_by(|x, y| (x.family, x.beta, &x.form).cmp(&(y.family, y.beta, &y.form)));
    Ok(out)
}

/// `<<u(x+1)^(2^(k-1)), u^2>>`, the self-dual code outside class C.
pub fn outside_c_selfdual(ring: &Ring) -> Result<GeneratorTriple> {
    require_char2(ring)?;
    let n = ring.n();
    Ok(GeneratorTriple { b: n / 2, c: 0, ..GeneratorTriple::zero(ring) })
}
