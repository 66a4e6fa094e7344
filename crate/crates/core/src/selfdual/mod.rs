//! Self-dual `(1 + αu^2)`-constacyclic codes in characteristic 2.
//!
//! A self-dual code outside `<<u(x-1)^(2^(k-1)), u^2>>` has torsion profile
//! `(2^(k-1) + t, 2^(k-1), 2^(k-1) - t)` and is written `Ideal(k, t, g, h)`.
//! Throughout, `D = 2^(k-1) - t` is the common precision window.

mod census;
mod families;
mod form;
mod monomial;
mod sigma;

pub use census::{census, count_selfdual, enumerate_monomial, Census, CensusRow, CountTable};
pub use families::{degree2_families, outside_c_selfdual, Family, FamilyMember};
pub use form::{dual_form, is_selfdual_t4, selfdual_shape_check, DualForm, SelfDualForm, T4Report};
pub use monomial::{build_m, is_selfdual_t5, monomial_g, solve_h_system, HSolution, MSystem, MonomialSpec};
pub use sigma::{sigma, solve_g_system};

use crate::error::{Error, Result};
use crate::ring::Ring;

pub(crate) fn require_char2(ring: &Ring) -> Result<()> {
    if ring.p() != 2 {
        return Err(Error::UnsupportedCharacteristic(ring.p()));
    }
    Ok(())
}
