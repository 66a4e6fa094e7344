//! Canonical generators, torsion profiles, the class partition, annihilators and duals.

mod annihilator;
mod classify;
mod triple;

pub use annihilator::{annihilator_class_c, annihilator_general, dual_basis, dual_triple, AnnihilatorWitness};
pub use classify::{classify, validate_class_c, ClassCReport, ClassSet, CodeClass};
pub use triple::{canonicalize, code_size, torsion_profile, validate_triple, GeneratorTriple, ValidityReport, Violation};
