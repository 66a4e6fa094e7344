use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{IdealBasis, TorsionProfile};
use crate::ring::{Ring, SBarElem, SElem};

/// The data `(a, t, g, b, r, c, h)` of the unique generators
/// `f0 = (x-1)^a + u(x-1)^t g + u^2 h`, `f1 = u(x-1)^b + u^2 r`, `f2 = u^2 (x-1)^c`.
///
/// A generator whose leading power reaches `n` is absent (it would be `0` modulo the
/// others); then its polynomials are zero and `t = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorTriple {
    pub a: usize,
    pub t: usize,
    pub g: SBarElem,
    pub b: usize,
    pub r: SBarElem,
    pub c: usize,
    pub h: SBarElem,
}

/// One failed constraint, with a stable name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub constraint: String,
    pub detail: String,
}

impl Violation {
    pub fn new(constraint: &str, detail: impl Into<String>) -> Self {
        Violation { constraint: constraint.to_string(), detail: detail.into() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn names(&self) -> Vec<&str> {
        self.violations.iter().map(|v| v.constraint.as_str()).collect()
    }
}

impl GeneratorTriple {
    /// The zero ideal.
    pub fn zero(ring: &Ring) -> Self {
        let n = ring.n();
        let z = ring.bar_zero();
        GeneratorTriple { a: n, t: 0, g: z.clone(), b: n, r: z.clone(), c: n, h: z }
    }

    /// All of S.
    pub fn unit(ring: &Ring) -> Self {
        let z = ring.bar_zero();
        GeneratorTriple { a: 0, t: 0, g: z.clone(), b: 0, r: z.clone(), c: 0, h: z }
    }

    pub fn profile(&self) -> TorsionProfile {
        TorsionProfile::new(self.a, self.b, self.c)
    }

    pub fn f0(&self, ring: &Ring) -> SElem {
        let layer1 = ring.bar_shift(&self.g, self.t);
        ring.from_layers(&ring.bar_y_pow(self.a), &layer1, &self.h)
    }

    pub fn f1(&self, ring: &Ring) -> SElem {
        ring.from_layers(&ring.bar_zero(), &ring.bar_y_pow(self.b), &self.r)
    }

    pub fn f2(&self, ring: &Ring) -> SElem {
        ring.lift(&ring.bar_y_pow(self.c), 2)
    }

    /// The present generators among `f0, f1, f2`.
    pub fn generators(&self, ring: &Ring) -> Vec<SElem> {
        let n = ring.n();
        let mut out = Vec::new();
        if self.a < n {
            out.push(self.f0(ring));
        }
        if self.b < n {
            out.push(self.f1(ring));
        }
        if self.c < n {
            out.push(self.f2(ring));
        }
        out
    }

    pub fn span(&self, ring: &Ring) -> IdealBasis {
        ring.span(&self.generators(ring))
    }

    /// Reads the triple off the reduced basis of an ideal: the rows pivoting at
    /// `(x-1)^a`, `u(x-1)^b` and `u^2 (x-1)^c` are `f0`, `f1`, `f2`.
    pub fn from_ideal(ring: &Ring, basis: &IdealBasis) -> Result<Self> {
        if basis.n() != ring.n() || !ring.is_ideal(basis) {
            return Err(Error::NotAnIdeal("the subspace is not closed under x and u".into()));
        }
        Ok(Self::from_ideal_unchecked(ring, basis))
    }

    pub(crate) fn from_ideal_unchecked(ring: &Ring, basis: &IdealBasis) -> Self {
        let n = ring.n();
        let profile = basis.pivot_profile();
        let mut tr = GeneratorTriple::zero(ring);
        tr.a = profile.a;
        tr.b = profile.b;
        tr.c = profile.c;
        let row_a = (profile.a < n).then(|| basis.row_with_pivot(profile.a)).flatten();
        if let Some(row) = row_a {
            let layer1 = SBarElem { coeffs: row[n..2 * n].to_vec() };
            tr.t = layer1.valuation().unwrap_or(0);
            tr.g = ring.bar_unshift(&layer1, tr.t);
            tr.h = SBarElem { coeffs: row[2 * n..].to_vec() };
        }
        let row_b = (profile.b < n).then(|| basis.row_with_pivot(n + profile.b)).flatten();
        if let Some(row) = row_b {
            tr.r = SBarElem { coeffs: row[2 * n..].to_vec() };
        }
        tr
    }

    /// Checks only the degree and unit constraints, not that the span has this normal form.
    pub fn structural_violations(&self, ring: &Ring) -> Vec<Violation> {
        let n = ring.n();
        let mut v = Vec::new();
        for (name, p) in [("g", &self.g), ("r", &self.r), ("h", &self.h)] {
            if p.coeffs.len() != n {
                v.push(Violation::new("length", format!("{name} has {} coefficients, expected {n}", p.coeffs.len())));
            }
        }
        if !v.is_empty() {
            return v;
        }
        if !(n >= self.a && self.a >= self.b && self.b >= self.c) {
            v.push(Violation::new(
                "torsion-chain",
                format!("need {n} >= a >= b >= c, got a={}, b={}, c={}", self.a, self.b, self.c),
            ));
        }
        if self.g.is_zero() {
            if self.t != 0 {
                v.push(Violation::new("t-without-g", format!("g = 0 but t = {}", self.t)));
            }
        } else {
            if !self.g.is_unit() {
                v.push(Violation::new("g-unit", "g is nonzero but g(1) = 0, so g is not a unit"));
            }
            let d = self.g.degree().unwrap_or(0);
            if self.t + d >= self.b {
                v.push(Violation::new("g-degree", format!("t + deg g = {} must be < b = {}", self.t + d, self.b)));
            }
        }
        if let Some(d) = self.r.degree() {
            if d >= self.c {
                v.push(Violation::new("r-degree", format!("deg r = {d} must be < c = {}", self.c)));
            }
        }
        if let Some(d) = self.h.degree() {
            if d >= self.c {
                v.push(Violation::new("h-degree", format!("deg h = {d} must be < c = {}", self.c)));
            }
        }
        if self.a == n && (!self.g.is_zero() || !self.h.is_zero() || self.t != 0) {
            v.push(Violation::new("absent-f0", "a = n leaves no f0, so t, g and h must vanish"));
        }
        if self.b == n && !self.r.is_zero() {
            v.push(Violation::new("absent-f1", "b = n leaves no f1, so r must vanish"));
        }
        v
    }
}

/// Degree, unit and chain constraints plus uniqueness: the span of the generators must have exactly this
/// canonical triple.
pub fn validate_triple(ring: &Ring, tr: &GeneratorTriple) -> ValidityReport {
    let mut violations = tr.structural_violations(ring);
    if violations.is_empty() {
        let actual = GeneratorTriple::from_ideal_unchecked(ring, &tr.span(ring));
        if actual.profile() != tr.profile() {
            let p = actual.profile();
            violations.push(Violation::new(
                "torsion-profile",
                format!("the generated ideal has (a, b, c) = ({}, {}, {})", p.a, p.b, p.c),
            ));
        } else if actual != *tr {
            let mut fields = Vec::new();
            if actual.t != tr.t || actual.g != tr.g {
                fields.push("t/g");
            }
            if actual.r != tr.r {
                fields.push("r");
            }
            if actual.h != tr.h {
                fields.push("h");
            }
            violations.push(Violation::new(
                "normal-form",
                format!("the generated ideal has different {}", fields.join(", ")),
            ));
        }
    }
    ValidityReport { violations }
}

/// The canonical triple of the ideal generated by `gens`.
pub fn canonicalize(ring: &Ring, gens: &[SElem]) -> GeneratorTriple {
    GeneratorTriple::from_ideal_unchecked(ring, &ring.span(gens))
}

/// Torsion profile of an ideal given by a basis; rejects subspaces that are not ideals.
pub fn torsion_profile(ring: &Ring, basis: &IdealBasis) -> Result<TorsionProfile> {
    if basis.n() != ring.n() || !ring.is_ideal(basis) {
        return Err(Error::NotAnIdeal("the subspace is not closed under x and u".into()));
    }
    Ok(basis.pivot_profile())
}

/// `log_q |C| = 3n - (a + b + c)`.
pub fn code_size(profile: TorsionProfile, n: usize) -> usize {
    profile.size_exponent(n)
}
