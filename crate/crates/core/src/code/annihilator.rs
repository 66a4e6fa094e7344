use crate::code::classify::validate_class_c;
use crate::code::triple::GeneratorTriple;
use crate::error::{Error, Result};
use crate::ideal::IdealBasis;
use crate::ring::{Ring, SBarElem};

/// `l` with `g·r = α - (x-1)^c l` in S̄.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorWitness {
    pub l: SBarElem,
}

/// Closed-form annihilator of a class-C code:
/// `a' = n - c`, `t' = a - c - t`, `g' = -r`, `b' = a - t`, `r' = -g`, `c' = n - a`,
/// `h' = -l - (x-1)^(n-a-c) h`, the last reduced below `c'` by `u^2 (x-1)^(c')`.
pub fn annihilator_class_c(ring: &Ring, tr: &GeneratorTriple) -> Result<(GeneratorTriple, AnnihilatorWitness)> {
    let report = validate_class_c(ring, tr);
    if !report.is_valid() {
        let names: Vec<&str> = report.names();
        return Err(Error::Unsupported(format!("not a valid class-C triple: {}", names.join("; "))));
    }
    let n = ring.n();
    let gr = ring.bar_mul(&tr.g, &tr.r);
    let rest = ring.bar_sub(&ring.bar_constant(ring.alpha()), &gr);
    debug_assert!(rest.valuation().map_or(true, |v| v >= tr.c));
    let l = ring.bar_unshift(&rest, tr.c);
    let c_new = n - tr.a;
    let shifted_h = ring.bar_shift(&tr.h, n - tr.a - tr.c);
    let h_new = ring.bar_trunc(&ring.bar_neg(&ring.bar_add(&l, &shifted_h)), c_new);
    let ann = GeneratorTriple {
        a: n - tr.c,
        t: tr.a - tr.c - tr.t,
        g: ring.bar_neg(&tr.r),
        b: tr.a - tr.t,
        r: ring.bar_neg(&tr.g),
        c: c_new,
        h: h_new,
    };
    Ok((ann, AnnihilatorWitness { l }))
}

/// Annihilator by linear algebra, for any ideal.
pub fn annihilator_general(ring: &Ring, basis: &IdealBasis) -> IdealBasis {
    ring.annihilator(basis)
}

/// `C^⊥ = Ann(C)^*`, an ideal of [`Ring::dual_ring`].
pub fn dual_basis(ring: &Ring, basis: &IdealBasis) -> IdealBasis {
    ring.reciprocal_image(&ring.annihilator(basis))
}

/// Canonical triple of `C^⊥` in [`Ring::dual_ring`]. The annihilator comes from the
/// closed form when the triple is a valid class-C triple and from linear algebra otherwise.
pub fn dual_triple(ring: &Ring, tr: &GeneratorTriple) -> GeneratorTriple {
    let ann = match annihilator_class_c(ring, tr) {
        Ok((ann, _)) => ann.span(ring),
        Err(_) => ring.annihilator(&tr.span(ring)),
    };
    let dual_ring = ring.dual_ring();
    GeneratorTriple::from_ideal_unchecked(&dual_ring, &ring.reciprocal_image(&ann))
}
