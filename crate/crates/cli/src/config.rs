use std::io::Read;

use serde::Serialize;
use serde_json::Value;

use chainring_codes::code::{canonicalize, validate_triple, GeneratorTriple};
use chainring_codes::wire::{Basis, CodeInput, ElemRepr, FieldDesc, GensJson, ParamsDesc, TripleJson};
use chainring_codes::{Error, FieldElem, Ring, RingParams, SElem};

use crate::{Common, Format, Mode, Scope};

/// A message with its process exit code: 2 for bad input, 3 for an exhausted budget.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    pub fn io(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::BudgetExceeded { .. }) { 3 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

/// How a `δ ≠ 1` ring was carried to the `δ = 1` ring everything is reported in.
#[derive(Clone, Debug, Serialize)]
pub struct Transform {
    pub map: &'static str,
    pub delta: ElemRepr,
    pub delta0: ElemRepr,
    pub alpha: ElemRepr,
}

/// The parsed configuration, echoed at the top of every report.
#[derive(Clone, Debug, Serialize)]
pub struct Echo {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scope: Option<Scope>,
    pub params: ParamsDesc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transform: Option<Transform>,
    pub format: Format,
    pub budget: u128,
}

pub struct Job {
    pub echo: Echo,
    /// Parameters as given, possibly with `δ ≠ 1`.
    pub params: RingParams,
    /// The `δ = 1` ring all results live in.
    pub ring: Ring,
    pub budget: u128,
    /// The input code, canonicalized in `ring`.
    pub code: Option<GeneratorTriple>,
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct JobFile {
    #[serde(default)]
    params: Option<ParamsDesc>,
    code: Value,
}

fn parse_elem_arg(s: &str) -> Result<ElemRepr, Failure> {
    let s = s.trim();
    if let Ok(v) = s.parse::<i64>() {
        return Ok(ElemRepr::Int(v));
    }
    let coeffs = s
        .trim_matches(|c| c == '[' || c == ']')
        .split(',')
        .map(|c| c.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::invalid(format!("cannot read field element {s:?}")))?;
    Ok(ElemRepr::Coeffs(coeffs))
}

fn params_from_flags(c: &Common) -> Result<Option<ParamsDesc>, Failure> {
    let given = c.p.is_some() || c.m.is_some() || c.modulus.is_some() || c.k.is_some() || c.alpha.is_some() || c.delta.is_some();
    if !given {
        return Ok(None);
    }
    Ok(Some(ParamsDesc {
        field: FieldDesc { p: c.p.unwrap_or(2), m: c.m.unwrap_or(1), modulus: c.modulus.clone() },
        k: c.k.unwrap_or(1),
        alpha: c.alpha.as_deref().map(parse_elem_arg).transpose()?.unwrap_or(ElemRepr::Int(1)),
        delta: c.delta.as_deref().map(parse_elem_arg).transpose()?,
    }))
}

fn read_input(c: &Common) -> Result<String, Failure> {
    let mut text = String::new();
    match &c.input {
        Some(path) => {
            text = std::fs::read_to_string(path).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?
        }
        None => {
            std::io::stdin().read_to_string(&mut text).map_err(|e| Failure::invalid(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn parse_code(v: Value) -> Result<CodeInput, Failure> {
    let is_gens = v.get("gens").is_some();
    let parsed = if is_gens {
        serde_json::from_value::<GensJson>(v).map(CodeInput::Gens)
    } else {
        serde_json::from_value::<TripleJson>(v).map(CodeInput::Triple)
    };
    parsed.map_err(|e| Failure::invalid(format!("code: {e}")))
}

/// Generators with `δ ≠ 1`: monomial coefficients are moved along `x ↦ δ0 x`.
fn substituted(ring: &Ring, gens: &GensJson, delta0: FieldElem) -> Result<Vec<SElem>, Failure> {
    let f = ring.field();
    let n = ring.n();
    gens.gens
        .iter()
        .map(|g| {
            if g.basis != Basis::Monomial {
                return Err(Failure::invalid("with delta != 1 generators must use the monomial basis"));
            }
            if g.layers.len() > 3 {
                return Err(Failure::invalid(format!("{} layers given, at most 3", g.layers.len())));
            }
            let mut layers: [Vec<FieldElem>; 3] = Default::default();
            for (l, out) in layers.iter_mut().enumerate() {
                let coeffs = g.layers.get(l).map(Vec::as_slice).unwrap_or(&[]);
                if coeffs.len() > n {
                    return Err(Failure::invalid(format!("layer {l} has {} coefficients, length is {n}", coeffs.len())));
                }
                let mut scale = FieldElem::ONE;
                *out = (0..n)
                    .map(|i| {
                        let c = coeffs.get(i).map(|c| c.parse(f)).transpose()?.unwrap_or(FieldElem::ZERO);
                        let v = f.mul(c, scale);
                        scale = f.mul(scale, delta0);
                        Ok(v)
                    })
                    .collect::<Result<_, Error>>()?;
            }
            Ok(ring.from_monomial(&layers)?)
        })
        .collect()
}

impl Job {
    pub fn load(c: &Common, command: &'static str, needs_code: bool) -> Result<Self, Failure> {
        let flags = params_from_flags(c)?;
        let (file_params, code) = if needs_code {
            let text = read_input(c)?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Failure::invalid(format!("input: {e}")))?;
            if v.get("code").is_some() {
                let job: JobFile = serde_json::from_value(v).map_err(|e| Failure::invalid(format!("input: {e}")))?;
                (job.params, Some(parse_code(job.code)?))
            } else {
                (None, Some(parse_code(v)?))
            }
        } else {
            (None, None)
        };
        let desc = match (flags, file_params) {
            (Some(_), Some(_)) => return Err(Failure::invalid("ring parameters given both as flags and in the input")),
            (Some(d), None) | (None, Some(d)) => d,
            (None, None) => ParamsDesc {
                field: FieldDesc { p: 2, m: 1, modulus: None },
                k: 1,
                alpha: ElemRepr::Int(1),
                delta: None,
            },
        };
        let params = desc.build()?;
        let f = params.field.clone();
        let (reduced, delta0) = params.reduce_delta()?;
        let transform = (params.delta != FieldElem::ONE).then(|| Transform {
            map: "x -> delta0 x",
            delta: ElemRepr::of(&f, params.delta),
            delta0: ElemRepr::of(&f, delta0),
            alpha: ElemRepr::of(&f, reduced.alpha),
        });
        let ring = Ring::from_params(&reduced)?;
        let code = match code {
            None => None,
            Some(CodeInput::Triple(t)) => {
                if transform.is_some() {
                    return Err(Failure::invalid(
                        "triples are (x-1)-adic and need delta = 1; give monomial generators instead",
                    ));
                }
                let tr = t.to_triple(&ring)?;
                let report = validate_triple(&ring, &tr);
                if !report.is_valid() {
                    let detail: Vec<String> =
                        report.violations.iter().map(|v| format!("{} ({})", v.constraint, v.detail)).collect();
                    return Err(Failure::invalid(format!("invalid triple: {}", detail.join("; "))));
                }
                Some(tr)
            }
            Some(CodeInput::Gens(g)) => {
                let elems = if transform.is_some() {
                    substituted(&ring, &g, delta0)?
                } else {
                    g.gens.iter().map(|p| p.to_elem(&ring)).collect::<Result<Vec<_>, _>>()?
                };
                Some(canonicalize(&ring, &elems))
            }
        };
        let echo = Echo {
            command,
            mode: None,
            scope: None,
            params: ParamsDesc::of(&params),
            transform,
            format: c.format,
            budget: c.budget,
        };
        Ok(Job { echo, params, ring, budget: c.budget, code })
    }

    pub fn code(&self) -> &GeneratorTriple {
        self.code.as_ref().expect("command reads a code")
    }
}
