//! JSON shapes for fields, ring parameters, elements, triples and oracle reports.
//!
//! Field elements are written as little-endian coefficient arrays over F_p; on input a bare
//! integer is accepted as shorthand for its image in the prime field.

use serde::{Deserialize, Serialize};

use crate::code::GeneratorTriple;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::ring::{Ring, RingParams, SBarElem, SElem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDesc {
    pub p: u32,
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

impl FieldDesc {
    pub fn build(&self) -> Result<FieldCtx> {
        match &self.modulus {
            Some(modulus) => FieldCtx::new(self.p, self.m, modulus.clone()),
            None => FieldCtx::with_default_modulus(self.p, self.m),
        }
    }

    /// The description with the modulus filled in.
    pub fn of(f: &FieldCtx) -> Self {
        FieldDesc { p: f.p(), m: f.m(), modulus: Some(f.modulus().to_vec()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemRepr {
    Int(i64),
    Coeffs(Vec<u32>),
}

impl ElemRepr {
    pub fn parse(&self, f: &FieldCtx) -> Result<FieldElem> {
        match self {
            ElemRepr::Int(v) => Ok(f.from_int(*v)),
            ElemRepr::Coeffs(c) => f.from_coeffs(c),
        }
    }

    pub fn of(f: &FieldCtx, a: FieldElem) -> Self {
        let mut c = f.coeffs(a);
        while c.len() > 1 && c.last() == Some(&0) {
            c.pop();
        }
        ElemRepr::Coeffs(c)
    }
}

fn parse_poly(f: &FieldCtx, n: usize, coeffs: &[ElemRepr], what: &str) -> Result<Vec<FieldElem>> {
    if coeffs.len() > n {
        return Err(Error::InvalidParameter(format!("{what} has {} coefficients, length is {n}", coeffs.len())));
    }
    let mut out = coeffs.iter().map(|c| c.parse(f)).collect::<Result<Vec<_>>>()?;
    out.resize(n, FieldElem::ZERO);
    Ok(out)
}

fn write_poly(f: &FieldCtx, coeffs: &[FieldElem]) -> Vec<ElemRepr> {
    coeffs.iter().map(|&c| ElemRepr::of(f, c)).collect()
}

/// Ring parameters; `delta` defaults to 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsDesc {
    pub field: FieldDesc,
    pub k: u32,
    pub alpha: ElemRepr,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<ElemRepr>,
}

impl ParamsDesc {
    pub fn build(&self) -> Result<RingParams> {
        let f = std::sync::Arc::new(self.field.build()?);
        let alpha = self.alpha.parse(&f)?;
        let delta = match &self.delta {
            Some(d) => d.parse(&f)?,
            None => f.one(),
        };
        RingParams::new(f, self.k, alpha, delta)
    }

    pub fn of(params: &RingParams) -> Self {
        let f = &params.field;
        ParamsDesc {
            field: FieldDesc::of(f),
            k: params.k,
            alpha: ElemRepr::of(f, params.alpha),
            delta: Some(ElemRepr::of(f, params.delta)),
        }
    }
}

/// A generator triple with `(x-1)`-adic polynomials; trailing zeros are dropped on output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleJson {
    pub a: usize,
    pub t: usize,
    pub g: Vec<ElemRepr>,
    pub b: usize,
    pub r: Vec<ElemRepr>,
    pub c: usize,
    pub h: Vec<ElemRepr>,
}

impl TripleJson {
    pub fn of(ring: &Ring, tr: &GeneratorTriple) -> Self {
        let f = ring.field();
        TripleJson {
            a: tr.a,
            t: tr.t,
            g: write_poly(f, tr.g.trimmed()),
            b: tr.b,
            r: write_poly(f, tr.r.trimmed()),
            c: tr.c,
            h: write_poly(f, tr.h.trimmed()),
        }
    }

    /// The triple as given; no validity check beyond coefficient parsing and lengths.
    pub fn to_triple(&self, ring: &Ring) -> Result<GeneratorTriple> {
        let (f, n) = (ring.field(), ring.n());
        let bar = |c: &[ElemRepr], name: &str| parse_poly(f, n, c, name).map(|coeffs| SBarElem { coeffs });
        Ok(GeneratorTriple {
            a: self.a,
            t: self.t,
            g: bar(&self.g, "g")?,
            b: self.b,
            r: bar(&self.r, "r")?,
            c: self.c,
            h: bar(&self.h, "h")?,
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Yadic,
}

/// An element of S as up to three `u`-layers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub basis: Basis,
    pub layers: Vec<Vec<ElemRepr>>,
}

impl PolyJson {
    pub fn to_elem(&self, ring: &Ring) -> Result<SElem> {
        if self.layers.len() > 3 {
            return Err(Error::InvalidParameter(format!("{} layers given, at most 3", self.layers.len())));
        }
        let (f, n) = (ring.field(), ring.n());
        let mut layers: Vec<SBarElem> = Vec::new();
        for (i, l) in self.layers.iter().enumerate() {
            let coeffs = parse_poly(f, n, l, &format!("layer {i}"))?;
            layers.push(match self.basis {
                Basis::Yadic => SBarElem { coeffs },
                Basis::Monomial => ring.bar_from_monomial(&coeffs),
            });
        }
        layers.resize(3, ring.bar_zero());
        let [l0, l1, l2]: [SBarElem; 3] = layers.try_into().expect("three layers");
        Ok(ring.from_layers(&l0, &l1, &l2))
    }

    pub fn of(ring: &Ring, a: &SElem, basis: Basis) -> Self {
        let f = ring.field();
        let layers = (0..3)
            .map(|l| {
                let bar = &a.layer(l);
                let coeffs = match basis {
                    Basis::Yadic => bar.coeffs.clone(),
                    Basis::Monomial => ring.bar_to_monomial(bar),
                };
                let len = coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1);
                write_poly(f, &coeffs[..len])
            })
            .collect();
        PolyJson { basis, layers }
    }
}

/// Code input: a triple, or generators whose ideal is taken.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CodeInput {
    Triple(TripleJson),
    Gens(GensJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GensJson {
    pub gens: Vec<PolyJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Mismatch {
    pub check: String,
    pub detail: String,
}

/// Outcome of a brute-force suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleReport {
    pub params: ParamsDesc,
    pub ideal_count: Option<usize>,
    pub selfdual_count: Option<usize>,
    pub mismatches: Vec<Mismatch>,
}
