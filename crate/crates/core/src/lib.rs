//! Constacyclic codes of length `p^k` over the chain ring `F_{p^m}[u]/<u^3>`.
//!
//! The `(1 + αu^2)`-constacyclic codes are the ideals of `S = R[x]/<x^{p^k} - (1 + αu^2)>`.
//! This crate computes their canonical generator triples, torsion profiles, classes,
//! annihilators and duals, enumerates the self-dual ones in characteristic 2, and ships
//! brute-force oracles that check every structural claim at small sizes.

pub mod binom;
pub mod code;
pub mod coords;
pub mod error;
pub mod field;
pub mod ideal;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod ring;
pub mod selfdual;
pub mod uring;
pub mod wire;

pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElem};
pub use ideal::{IdealBasis, TorsionProfile};
pub use ring::{Ring, RingParams, SBarElem, SElem};
pub use uring::UElem;
