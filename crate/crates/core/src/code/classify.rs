use serde::{Deserialize, Serialize};

use crate::code::triple::{GeneratorTriple, Violation};
use crate::ideal::TorsionProfile;
use crate::ring::Ring;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CodeClass {
    A,
    #[serde(rename = "A'")]
    APrime,
    B,
    #[serde(rename = "B'")]
    BPrime,
    C,
    #[serde(rename = "C'")]
    CPrime,
}

impl CodeClass {
    pub const ALL: [CodeClass; 6] =
        [CodeClass::A, CodeClass::APrime, CodeClass::B, CodeClass::BPrime, CodeClass::C, CodeClass::CPrime];

    pub fn label(self) -> &'static str {
        match self {
            CodeClass::A => "A",
            CodeClass::APrime => "A'",
            CodeClass::B => "B",
            CodeClass::BPrime => "B'",
            CodeClass::C => "C",
            CodeClass::CPrime => "C'",
        }
    }
}

/// Membership in each class; the defining inequalities overlap on boundaries.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassSet {
    #[serde(rename = "A")]
    pub a: bool,
    #[serde(rename = "A'")]
    pub a_prime: bool,
    #[serde(rename = "B")]
    pub b: bool,
    #[serde(rename = "B'")]
    pub b_prime: bool,
    #[serde(rename = "C")]
    pub c: bool,
    #[serde(rename = "C'")]
    pub c_prime: bool,
}

impl ClassSet {
    pub fn contains(&self, class: CodeClass) -> bool {
        match class {
            CodeClass::A => self.a,
            CodeClass::APrime => self.a_prime,
            CodeClass::B => self.b,
            CodeClass::BPrime => self.b_prime,
            CodeClass::C => self.c,
            CodeClass::CPrime => self.c_prime,
        }
    }

    pub fn members(&self) -> Vec<CodeClass> {
        CodeClass::ALL.into_iter().filter(|&c| self.contains(c)).collect()
    }
}

/// Every class whose inequalities `(a, b, c)` satisfies against `n = p^k`.
pub fn classify(profile: TorsionProfile, n: usize) -> ClassSet {
    let TorsionProfile { a, b, c } = profile;
    ClassSet {
        a: c == 0 && a + b <= n,
        a_prime: c == 0 && a + b >= n,
        b: a == n && b + c <= n,
        b_prime: a == n && b + c >= n,
        c: a < n && c > 0 && a + c <= n,
        c_prime: a < n && c > 0 && a + c >= n,
    }
}

/// Result of the class-C structure checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassCReport {
    pub in_class: bool,
    /// 1 when `c <= min{t, 2a - n - t}`, 2 otherwise.
    pub case: Option<u8>,
    pub violations: Vec<Violation>,
}

impl ClassCReport {
    pub fn is_valid(&self) -> bool {
        self.in_class && self.violations.is_empty()
    }

    pub fn names(&self) -> Vec<&str> {
        self.violations.iter().map(|v| v.constraint.as_str()).collect()
    }
}

/// The necessary conditions on a class-C triple (`b = n - a + t`, `g` a unit,
/// `r = αg^{-1} mod (x-1)^c`, the bound on `c`) and the two-case refinement.
pub fn validate_class_c(ring: &Ring, tr: &GeneratorTriple) -> ClassCReport {
    let n = ring.n();
    let mut report = ClassCReport { in_class: classify(tr.profile(), n).c, ..Default::default() };
    if !report.in_class {
        report.violations.push(Violation::new("class-C", "need a < n, c > 0 and a + c <= n"));
        return report;
    }
    if tr.g.coeffs.len() != n || tr.r.coeffs.len() != n || tr.h.coeffs.len() != n {
        report.violations.push(Violation::new("length", format!("polynomials must have {n} coefficients")));
        return report;
    }
    let v = &mut report.violations;
    let (a, b, c, t) = (tr.a as i64, tr.b as i64, tr.c as i64, tr.t as i64);
    let ni = n as i64;
    let other = 2 * a - ni - t;
    if b != ni - a + t {
        v.push(Violation::new("I: b = n - a + t", format!("b = {b}, n - a + t = {}", ni - a + t)));
    }
    let inverse = ring.inv_mod_nilpotent(&tr.g, tr.c).ok();
    match &inverse {
        None => v.push(Violation::new("II: g unit", "g(1) = 0")),
        Some(inv) => {
            let expected = ring.bar_scale(ring.alpha(), inv);
            if ring.bar_trunc(&tr.r, tr.c) != expected {
                v.push(Violation::new("II: r = alpha g^-1 mod (x-1)^c", "r differs from alpha g^-1"));
            }
        }
    }
    if t != other && c > t.min(other) {
        v.push(Violation::new("III: c <= min{t, 2a - n - t}", format!("c = {c}, t = {t}, 2a - n - t = {other}")));
    }
    let deg = |p: &crate::ring::SBarElem| p.degree().map_or(-1, |d| d as i64);
    if c <= t.min(other) {
        report.case = Some(1);
        let lower = (ni + 3) / 2; // ceil((n + 2) / 2)
        if a < lower || a > ni - 1 {
            v.push(Violation::new("case 1: a range", format!("need {lower} <= a <= {}, got {a}", ni - 1)));
        }
        let upper = 2 * a - ni - 1;
        if t < 1 || t > upper {
            v.push(Violation::new("case 1: t range", format!("need 1 <= t <= {upper}, got {t}")));
        }
        if a + c > ni {
            v.push(Violation::new("case 1: a + c <= n", format!("a + c = {}", a + c)));
        }
        if deg(&tr.g) >= ni - a {
            v.push(Violation::new("case 1: deg g < n - a", format!("deg g = {}", deg(&tr.g))));
        }
    } else {
        report.case = Some(2);
        let half = ni / 2;
        if ring.p() != 2 {
            v.push(Violation::new("case 2: p = 2", format!("p = {}", ring.p())));
        }
        if 4 * t >= ni {
            v.push(Violation::new("case 2: t < 2^(k-2)", format!("t = {t}")));
        }
        if ring.p() == 2 && a != t + half {
            v.push(Violation::new("case 2: a = t + 2^(k-1)", format!("a = {a}")));
        }
        if !(t < c && c <= half - t) {
            v.push(Violation::new("case 2: t < c <= 2^(k-1) - t", format!("c = {c}, t = {t}")));
        }
        if deg(&tr.g) >= half - t {
            v.push(Violation::new("case 2: deg g < 2^(k-1) - t", format!("deg g = {}", deg(&tr.g))));
        }
        if c > t {
            let m = (c - t) as usize;
            if ring.bar_trunc(&tr.r, m) != ring.bar_trunc(&tr.g, m) {
                v.push(Violation::new("case 2: r = g mod (x-1)^(c-t)", "r and g differ"));
            }
        }
    }
    if deg(&tr.h) >= c {
        v.push(Violation::new("deg h < c", format!("deg h = {}", deg(&tr.h))));
    }
    report
}
