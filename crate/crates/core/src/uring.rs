//! The chain ring R = F_{p^m}[u]/<u^3>.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};

/// `c[0] + c[1] u + c[2] u^2` in R.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UElem {
    pub c: [FieldElem; 3],
}

impl UElem {
    pub const ZERO: UElem = UElem { c: [FieldElem::ZERO; 3] };
    pub const ONE: UElem = UElem { c: [FieldElem::ONE, FieldElem::ZERO, FieldElem::ZERO] };

    pub fn new(a0: FieldElem, a1: FieldElem, a2: FieldElem) -> Self {
        UElem { c: [a0, a1, a2] }
    }

    pub fn constant(a: FieldElem) -> Self {
        UElem { c: [a, FieldElem::ZERO, FieldElem::ZERO] }
    }

    /// `u^i` for `i < 3`, zero otherwise.
    pub fn u_pow(i: usize) -> Self {
        let mut c = [FieldElem::ZERO; 3];
        if i < 3 {
            c[i] = FieldElem::ONE;
        }
        UElem { c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Units of R are exactly the elements with nonzero constant term.
    pub fn is_unit(&self) -> bool {
        !self.c[0].is_zero()
    }
}

impl FieldCtx {
    pub fn u_add(&self, a: UElem, b: UElem) -> UElem {
        UElem { c: [self.add(a.c[0], b.c[0]), self.add(a.c[1], b.c[1]), self.add(a.c[2], b.c[2])] }
    }

    pub fn u_neg(&self, a: UElem) -> UElem {
        UElem { c: [self.neg(a.c[0]), self.neg(a.c[1]), self.neg(a.c[2])] }
    }

    pub fn u_sub(&self, a: UElem, b: UElem) -> UElem {
        self.u_add(a, self.u_neg(b))
    }

    pub fn u_scale(&self, s: FieldElem, a: UElem) -> UElem {
        UElem { c: [self.mul(s, a.c[0]), self.mul(s, a.c[1]), self.mul(s, a.c[2])] }
    }

    /// Product truncated at `u^3`.
    pub fn u_mul(&self, a: UElem, b: UElem) -> UElem {
        let c0 = self.mul(a.c[0], b.c[0]);
        let c1 = self.add(self.mul(a.c[0], b.c[1]), self.mul(a.c[1], b.c[0]));
        let c2 = self.sum([self.mul(a.c[0], b.c[2]), self.mul(a.c[1], b.c[1]), self.mul(a.c[2], b.c[0])]);
        UElem { c: [c0, c1, c2] }
    }

    /// Inverse of a unit `a0 + n` with `n` nilpotent:
    /// `a0^{-1} (1 - n' + n'^2)` where `n' = n / a0`, since `n'^3 = 0`.
    pub fn u_inv(&self, a: UElem) -> Result<UElem> {
        if !a.is_unit() {
            return Err(Error::NotAUnit("element of R with zero constant term".into()));
        }
        let a0_inv = self.inv(a.c[0])?;
        let nil = UElem { c: [FieldElem::ZERO, self.mul(a0_inv, a.c[1]), self.mul(a0_inv, a.c[2])] };
        let nil2 = self.u_mul(nil, nil);
        let series = self.u_add(self.u_sub(UElem::ONE, nil), nil2);
        Ok(self.u_scale(a0_inv, series))
    }

    /// All elements of R in a fixed order.
    pub fn u_elements(&self) -> impl Iterator<Item = UElem> + '_ {
        let q = self.order();
        (0..q * q * q).map(move |i| {
            UElem::new(
                FieldElem::raw(i % q),
                FieldElem::raw((i / q) % q),
                FieldElem::raw(i / (q * q)),
            )
        })
    }
}
