//! Plain (unreduced) polynomials over F_{p^m}, little-endian dense coefficients.

use crate::binom::binom_mod;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<FieldElem>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElem) -> Self {
        Poly::new(vec![c])
    }

    /// `c x^d`.
    pub fn monomial(c: FieldElem, d: usize) -> Self {
        let mut v = vec![FieldElem::ZERO; d + 1];
        v[d] = c;
        Poly::new(v)
    }

    pub fn new(mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElem> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Poly, f: &FieldCtx) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly, f: &FieldCtx) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn scale(&self, s: FieldElem, f: &FieldCtx) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| f.mul(s, c)).collect())
    }

    pub fn mul(&self, other: &Poly, f: &FieldCtx) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Euclidean division `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly, f: &FieldCtx) -> Result<(Poly, Poly)> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[d])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![FieldElem::ZERO; rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[i - d] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i - d + j] = f.sub(rem[i - d + j], f.mul(c, b));
            }
        }
        rem.truncate(d);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn eval(&self, x: FieldElem, f: &FieldCtx) -> FieldElem {
        self.coeffs.iter().rev().fold(FieldElem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `(x - 1)^d`.
    pub fn x_minus_one_pow(d: usize, f: &FieldCtx) -> Poly {
        let p = f.p();
        Poly::new(
            (0..=d)
                .map(|i| {
                    let c = f.from_int(binom_mod(d as u64, i as u64, p) as i64);
                    if (d - i) % 2 == 1 {
                        f.neg(c)
                    } else {
                        c
                    }
                })
                .collect(),
        )
    }

    /// Rewrites a polynomial given by coefficients in powers of `y = x - 1` into monomial form.
    pub fn from_yadic(y: &[FieldElem], f: &FieldCtx) -> Poly {
        let mut out = Poly::zero();
        for (j, &c) in y.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&Poly::x_minus_one_pow(j, f).scale(c, f), f);
            }
        }
        out
    }

    /// Coefficients in powers of `y = x - 1`: `x^i = sum_j C(i, j) y^j`.
    pub fn to_yadic(&self, f: &FieldCtx) -> Vec<FieldElem> {
        let p = f.p();
        let mut out = vec![FieldElem::ZERO; self.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                let b = binom_mod(i as u64, j as u64, p);
                if b != 0 {
                    *slot = f.add(*slot, f.mul_int(a, b as u64));
                }
            }
        }
        out
    }
}
