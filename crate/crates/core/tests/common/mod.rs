#![allow(dead_code)]

use std::sync::Arc;

use chainring_codes::{FieldCtx, FieldElem, Ring};

pub fn field(p: u32, m: usize) -> Arc<FieldCtx> {
    Arc::new(FieldCtx::with_default_modulus(p, m).unwrap())
}

pub fn ring(p: u32, m: usize, k: u32) -> Ring {
    Ring::new(field(p, m), k, FieldElem::ONE).unwrap()
}

/// `(x-1)`-adic polynomial from small integers.
pub fn ypoly(ring: &Ring, c: &[i64]) -> chainring_codes::SBarElem {
    let f = ring.field();
    ring.bar_from_yadic(&c.iter().map(|&x| f.from_int(x)).collect::<Vec<_>>()).unwrap()
}

pub fn ternary_c_code(ring: &Ring) -> chainring_codes::code::GeneratorTriple {
    chainring_codes::code::GeneratorTriple {
        a: 7,
        t: 2,
        g: ypoly(ring, &[1, 1]),
        b: 4,
        r: ypoly(ring, &[1, 2]),
        c: 2,
        h: ring.bar_zero(),
    }
}
