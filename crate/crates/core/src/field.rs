//! Arithmetic in the prime field F_p and its extensions F_{p^m} = F_p[z]/(f(z)).
//!
//! Elements are stored as their packed base-`p` index `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
//! where `c_i` are the coefficients in the basis `1, z, ..., z^{m-1}`. The packing is a
//! bijection, so equality, hashing and ordering of [`FieldElem`] are canonical.

use std::fmt;

use crate::error::{Error, Result};

/// Largest field order we build tables for.
pub const MAX_FIELD_ORDER: usize = 1 << 16;
const ADD_TABLE_LIMIT: usize = 1024;

/// An element of F_{p^m}, only meaningful together with its [`FieldCtx`].
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u16);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub(crate) fn raw(idx: usize) -> FieldElem {
        FieldElem(idx as u16)
    }

    /// The packed base-`p` index of the element.
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// The field F_{p^m} with a fixed monic irreducible modulus.
///
/// Immutable after construction; share it behind an `Arc`.
pub struct FieldCtx {
    p: u32,
    m: usize,
    modulus: Vec<u32>,
    order: usize,
    // exp has length 2(q-1) so that log a + log b never needs a reduction
    exp: Vec<u16>,
    log: Vec<u32>,
    add_table: Option<Vec<u16>>,
    neg: Vec<u16>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

/// Default moduli, little-endian coefficient lists of monic irreducible polynomials.
pub fn default_modulus(p: u32, m: usize) -> Option<Vec<u32>> {
    let table: Option<&[u32]> = match (p, m) {
        (_, 1) => return Some(vec![0, 1]),
        (2, 2) => Some(&[1, 1, 1]),
        (2, 3) => Some(&[1, 1, 0, 1]),
        (2, 4) => Some(&[1, 1, 0, 0, 1]),
        (2, 5) => Some(&[1, 0, 1, 0, 0, 1]),
        (2, 6) => Some(&[1, 1, 0, 0, 0, 0, 1]),
        (2, 7) => Some(&[1, 1, 0, 0, 0, 0, 0, 1]),
        (2, 8) => Some(&[1, 0, 1, 1, 1, 0, 0, 0, 1]),
        (3, 2) => Some(&[1, 0, 1]),
        (3, 3) => Some(&[1, 2, 0, 1]),
        (3, 4) => Some(&[2, 0, 0, 2, 1]),
        (5, 2) => Some(&[2, 0, 1]),
        (5, 3) => Some(&[3, 3, 0, 1]),
        (5, 4) => Some(&[2, 4, 4, 0, 1]),
        _ => None,
    };
    table.map(|c| c.to_vec())
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// --- dense polynomials over F_p, used only while setting up a field ---

fn trim(mut f: Vec<u32>) -> Vec<u32> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn fp_inv(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

fn fp_poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = fp_inv(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let coef = r[r.len() - 1] * lead_inv % p;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - coef * bi % p) % p;
        }
        r = trim(r);
    }
    r
}

/// Irreducibility over F_p by trial division with every monic polynomial of
/// degree at most half the degree. Adequate for the small degrees supported here.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let f = trim(f.to_vec());
    if f.len() < 2 {
        return false;
    }
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut rest = idx;
            for _ in 0..d {
                cand.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            cand.push(1);
            if fp_poly_rem(&f, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically first monic irreducible polynomial of degree `m` over F_p.
pub fn search_irreducible(p: u32, m: usize) -> Vec<u32> {
    let count = (p as u64).pow(m as u32);
    for idx in 0..count {
        let mut cand = Vec::with_capacity(m + 1);
        let mut rest = idx;
        for _ in 0..m {
            cand.push((rest % p as u64) as u32);
            rest /= p as u64;
        }
        cand.push(1);
        if is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl FieldCtx {
    /// Builds F_{p^m} from an explicit monic irreducible modulus of degree `m`.
    pub fn new(p: u32, m: usize, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        let order = (p as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
        if order > MAX_FIELD_ORDER as u128 {
            return Err(Error::InvalidField(format!("field order {p}^{m} exceeds {MAX_FIELD_ORDER}")));
        }
        if modulus.len() != m + 1 || modulus[m] != 1 {
            return Err(Error::InvalidField(format!(
                "modulus must be monic of degree {m}, got coefficients {modulus:?}"
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField(format!("modulus coefficients must lie in 0..{p}")));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::InvalidField(format!("modulus {modulus:?} is reducible over F_{p}")));
        }
        let order = order as usize;
        let mut ctx = FieldCtx {
            p,
            m,
            modulus,
            order,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
            neg: Vec::new(),
        };
        ctx.neg = (0..order)
            .map(|i| {
                let c: Vec<u32> = ctx.digits(i).iter().map(|&d| (p - d) % p).collect();
                ctx.pack(&c) as u16
            })
            .collect();
        if p != 2 && order <= ADD_TABLE_LIMIT {
            let mut t = vec![0u16; order * order];
            for i in 0..order {
                for j in 0..order {
                    t[i * order + j] = ctx.add_slow(i, j) as u16;
                }
            }
            ctx.add_table = Some(t);
        }
        ctx.build_log_tables();
        Ok(ctx)
    }

    /// F_{p^m} with the default modulus: the shipped table for small `(p, m)`,
    /// otherwise the lexicographically first irreducible polynomial.
    pub fn with_default_modulus(p: u32, m: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        if (p as u128).checked_pow(m as u32).map_or(true, |q| q > MAX_FIELD_ORDER as u128) {
            return Err(Error::InvalidField(format!("field order {p}^{m} exceeds {MAX_FIELD_ORDER}")));
        }
        let modulus = default_modulus(p, m).unwrap_or_else(|| search_irreducible(p, m));
        Self::new(p, m, modulus)
    }

    /// The prime field F_p.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, vec![0, 1])
    }

    fn digits(&self, mut idx: usize) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.m);
        for _ in 0..self.m {
            out.push((idx % self.p as usize) as u32);
            idx /= self.p as usize;
        }
        out
    }

    fn pack(&self, coeffs: &[u32]) -> usize {
        coeffs.iter().rev().fold(0usize, |acc, &c| acc * self.p as usize + c as usize)
    }

    fn add_slow(&self, a: usize, b: usize) -> usize {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack(&s)
    }

    // schoolbook product of coefficient vectors reduced by the modulus
    fn mul_slow(&self, a: usize, b: usize) -> usize {
        let p = self.p;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u32; 2 * self.m];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let mut r = fp_poly_rem(&prod, &self.modulus, p);
        r.resize(self.m, 0);
        self.pack(&r)
    }

    fn build_log_tables(&mut self) {
        let q1 = self.order - 1;
        if q1 == 1 {
            // F_2
            self.exp = vec![1, 1];
            self.log = vec![0, 0];
            return;
        }
        for cand in 2..self.order {
            let mut exp = Vec::with_capacity(2 * q1);
            let mut x = 1usize;
            let mut cycle = 0;
            loop {
                exp.push(x as u16);
                x = self.mul_slow(x, cand);
                cycle += 1;
                if x == 1 {
                    break;
                }
            }
            if cycle == q1 {
                let mut log = vec![0u32; self.order];
                for (i, &e) in exp.iter().enumerate() {
                    log[e as usize] = i as u32;
                }
                let doubled: Vec<u16> = exp.iter().chain(exp.iter()).copied().collect();
                self.exp = doubled;
                self.log = log;
                return;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Number of elements `p^m`.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::ONE
    }

    /// All elements in index order, zero first.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.order).map(|i| FieldElem(i as u16))
    }

    /// Nonzero elements in index order.
    pub fn units(&self) -> impl Iterator<Item = FieldElem> {
        (1..self.order).map(|i| FieldElem(i as u16))
    }

    pub fn from_index(&self, idx: usize) -> Result<FieldElem> {
        if idx >= self.order {
            return Err(Error::InvalidParameter(format!("field index {idx} out of range")));
        }
        Ok(FieldElem(idx as u16))
    }

    /// Element with little-endian coefficients in the basis `1, z, ..., z^{m-1}`.
    /// Shorter lists are zero-padded; every coefficient must already be reduced mod `p`.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElem> {
        if coeffs.len() > self.m {
            return Err(Error::InvalidParameter(format!(
                "element has {} coefficients, field degree is {}",
                coeffs.len(),
                self.m
            )));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::InvalidParameter(format!("coefficient {c} not reduced mod {}", self.p)));
        }
        Ok(FieldElem(self.pack(coeffs) as u16))
    }

    pub fn coeffs(&self, a: FieldElem) -> Vec<u32> {
        self.digits(a.index())
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, v: i64) -> FieldElem {
        let r = v.rem_euclid(self.p as i64) as usize;
        FieldElem(r as u16)
    }

    /// The generator `z` of the extension (equal to the image of the residue class of `z`;
    /// for `m = 1` this is the root of the linear modulus).
    pub fn z(&self) -> FieldElem {
        if self.m == 1 {
            self.from_int(-(self.modulus[0] as i64))
        } else {
            FieldElem(self.p as u16)
        }
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.p == 2 {
            return FieldElem(a.0 ^ b.0);
        }
        match &self.add_table {
            Some(t) => FieldElem(t[a.index() * self.order + b.index()]),
            None => FieldElem(self.add_slow(a.index(), b.index()) as u16),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.is_zero() || b.is_zero() {
            return FieldElem::ZERO;
        }
        let l = self.log[a.index()] + self.log[b.index()];
        FieldElem(self.exp[l as usize])
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let q1 = (self.order - 1) as u32;
        let l = (q1 - self.log[a.index()]) % q1;
        Ok(FieldElem(self.exp[l as usize]))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply exponentiation; `pow(0, 0) = 1`.
    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Sum of a sequence of elements.
    pub fn sum<I: IntoIterator<Item = FieldElem>>(&self, it: I) -> FieldElem {
        it.into_iter().fold(FieldElem::ZERO, |acc, x| self.add(acc, x))
    }

    /// Integer multiple `n·a`.
    pub fn mul_int(&self, a: FieldElem, n: u64) -> FieldElem {
        self.mul(a, self.from_int((n % self.p as u64) as i64))
    }

    /// The unique square root in characteristic 2, `a^(2^(m-1))`.
    pub fn sqrt_char2(&self, a: FieldElem) -> Result<FieldElem> {
        if self.p != 2 {
            return Err(Error::UnsupportedCharacteristic(self.p));
        }
        let mut b = a;
        for _ in 0..self.m - 1 {
            b = self.mul(b, b);
        }
        Ok(b)
    }

    /// The unique `d0` with `d0^(p^k) = delta`.
    ///
    /// Raising to `p^k` permutes the multiplicative group, and its inverse is raising to
    /// `p^j` with `j = -k mod m`, since `p^m = 1` modulo `p^m - 1`.
    pub fn pk_root(&self, delta: FieldElem, k: u32) -> Result<FieldElem> {
        if delta.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let j = (self.m - (k as usize % self.m)) % self.m;
        let mut r = delta;
        for _ in 0..j {
            r = self.pow(r, self.p as u64);
        }
        Ok(r)
    }

    /// Exponent `e` with `(p^k)·e = 1 mod (p^m - 1)`, for reporting.
    pub fn pk_root_exponent(&self, k: u32) -> u64 {
        let q1 = (self.order - 1) as u64;
        if q1 == 1 {
            return 1;
        }
        let j = (self.m - (k as usize % self.m)) % self.m;
        (0..j).fold(1u64, |acc, _| acc * self.p as u64 % q1)
    }

    /// Human-readable rendering as a polynomial in `z`.
    pub fn render(&self, a: FieldElem) -> String {
        if self.m == 1 {
            return a.index().to_string();
        }
        let c = self.coeffs(a);
        let terms: Vec<String> = c
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| match (i, v) {
                (0, v) => v.to_string(),
                (1, 1) => "z".to_string(),
                (1, v) => format!("{v}z"),
                (i, 1) => format!("z^{i}"),
                (i, v) => format!("{v}z^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32, m: usize) -> FieldCtx {
        FieldCtx::with_default_modulus(p, m).unwrap()
    }

    #[test]
    fn default_table_is_irreducible() {
        for p in [2u32, 3, 5] {
            for m in 1..=4 {
                let modulus = default_modulus(p, m).unwrap();
                assert!(is_irreducible(&modulus, p), "p={p} m={m}");
            }
        }
        for m in 5..=8 {
            assert!(is_irreducible(&default_modulus(2, m).unwrap(), 2));
        }
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(matches!(FieldCtx::new(4, 1, vec![0, 1]), Err(Error::InvalidField(_))));
        // z^2 + 1 = (z+1)^2 over F_2
        assert!(matches!(FieldCtx::new(2, 2, vec![1, 0, 1]), Err(Error::InvalidField(_))));
        assert!(matches!(FieldCtx::new(3, 2, vec![1, 0, 2]), Err(Error::InvalidField(_))));
        assert!(FieldCtx::new(3, 0, vec![1]).is_err());
    }

    #[test]
    fn inverse_in_f3() {
        let k = f(3, 1);
        let two = k.from_int(2);
        assert_eq!(k.inv(two).unwrap(), two);
        assert_eq!(k.inv(k.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn f4_product() {
        let k = f(2, 2);
        let z = k.from_coeffs(&[0, 1]).unwrap();
        let z1 = k.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(k.mul(z, z1), k.one());
    }

    #[test]
    fn f9_order_divides_eight() {
        let k = FieldCtx::new(3, 2, vec![1, 0, 1]).unwrap();
        let z = k.from_coeffs(&[0, 1]).unwrap();
        // repeated squaring: z^2 = -1, z^4 = 1, z^8 = 1
        let z2 = k.mul(z, z);
        assert_eq!(z2, k.from_int(-1));
        let z4 = k.mul(z2, z2);
        let z8 = k.mul(z4, z4);
        assert_eq!(z8, k.one());
        assert_eq!(k.pow(z, 8), k.one());
    }

    #[test]
    fn mul_inv_exhaustive() {
        for (p, m) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2)] {
            let k = f(p, m);
            for a in k.units() {
                assert_eq!(k.mul(a, k.inv(a).unwrap()), k.one());
            }
        }
    }

    #[test]
    fn table_mul_matches_schoolbook() {
        for (p, m) in [(2, 3), (3, 2), (5, 2), (3, 3)] {
            let k = f(p, m);
            for a in 0..k.order() {
                for b in 0..k.order() {
                    let fast = k.mul(FieldElem(a as u16), FieldElem(b as u16));
                    assert_eq!(fast.index(), k.mul_slow(a, b));
                    let s = k.add(FieldElem(a as u16), FieldElem(b as u16));
                    assert_eq!(s.index(), k.add_slow(a, b));
                }
            }
        }
    }

    #[test]
    fn sqrt_char2_examples() {
        let k = f(2, 1);
        assert_eq!(k.sqrt_char2(k.one()).unwrap(), k.one());
        let k = f(2, 2);
        let z = k.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(k.sqrt_char2(z).unwrap(), k.from_coeffs(&[1, 1]).unwrap());
        let k = f(2, 3);
        let z = k.from_coeffs(&[0, 1]).unwrap();
        // square-all-elements oracle
        let root = k.elements().find(|&b| k.mul(b, b) == z).unwrap();
        assert_eq!(k.sqrt_char2(z).unwrap(), root);
        assert_eq!(root, k.pow(z, 4));
        assert!(matches!(f(3, 1).sqrt_char2(FieldElem::ONE), Err(Error::UnsupportedCharacteristic(3))));
    }

    #[test]
    fn squaring_is_a_bijection_inverted_by_sqrt() {
        for m in 1..=8 {
            let k = f(2, m);
            let mut seen = vec![false; k.order()];
            for b in k.elements() {
                let sq = k.mul(b, b);
                assert!(!seen[sq.index()]);
                seen[sq.index()] = true;
                assert_eq!(k.sqrt_char2(sq).unwrap(), b);
            }
        }
    }

    #[test]
    fn pk_root_examples() {
        let k = f(3, 1);
        assert_eq!(k.pk_root(k.from_int(2), 2).unwrap(), k.from_int(2));
        let k4 = f(2, 2);
        let z = k4.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(k4.pk_root(z, 1).unwrap(), k4.from_coeffs(&[1, 1]).unwrap());
        for (p, m) in [(2, 3), (3, 2), (5, 2)] {
            let k = f(p, m);
            assert_eq!(k.pk_root(k.one(), 3).unwrap(), k.one());
        }
        assert_eq!(k.pk_root(k.zero(), 1), Err(Error::DivisionByZero));
    }

    #[test]
    fn pk_root_exhaustive() {
        for (p, m) in [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2)] {
            let k = f(p, m);
            if k.order() > 81 {
                continue;
            }
            for kk in 1..=4u32 {
                let e = k.pk_root_exponent(kk);
                let q1 = (k.order() - 1) as u64;
                if q1 > 1 {
                    assert_eq!((p as u64).pow(kk) % q1 * e % q1, 1);
                }
                for d in k.units() {
                    let r = k.pk_root(d, kk).unwrap();
                    assert_eq!(k.pow(r, (p as u64).pow(kk)), d);
                    assert_eq!(k.pow(d, e), r);
                }
            }
        }
    }

    #[test]
    fn coefficient_roundtrip_and_z() {
        let k = f(3, 2);
        for a in k.elements() {
            assert_eq!(k.from_coeffs(&k.coeffs(a)).unwrap(), a);
        }
        assert_eq!(k.coeffs(k.z()), vec![0, 1]);
        assert!(k.from_coeffs(&[3]).is_err());
        assert!(k.from_coeffs(&[0, 0, 1]).is_err());
    }
}
