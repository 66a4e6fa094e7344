use std::sync::Arc;

use chainring_codes::code::{canonicalize, validate_triple};
use chainring_codes::oracle::{delta_substitute, ConstaRing};
use chainring_codes::wire::TripleJson;
use chainring_codes::{FieldCtx, FieldElem, Ring, RingParams, SElem};
use proptest::prelude::*;

const SHAPES: [(u32, usize, u32); 6] = [(2, 1, 1), (2, 1, 2), (2, 2, 1), (3, 1, 1), (3, 1, 2), (2, 2, 2)];

fn build(shape: usize, alpha: usize) -> Ring {
    let (p, m, k) = SHAPES[shape % SHAPES.len()];
    let f = Arc::new(FieldCtx::with_default_modulus(p, m).unwrap());
    let alpha = f.from_index(1 + alpha % (f.order() - 1)).unwrap();
    Ring::new(f, k, alpha).unwrap()
}

fn elem(r: &Ring, digits: &[usize]) -> SElem {
    let f = r.field();
    let v: Vec<FieldElem> = (0..3 * r.n()).map(|i| f.from_index(digits[i % digits.len()] % f.order()).unwrap()).collect();
    r.from_flat(&v)
}

fn digits() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..16, 1..40)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(shape in 0usize..6, alpha in 0usize..3, a in digits(), b in digits(), c in digits()) {
        let r = build(shape, alpha);
        let (a, b, c) = (elem(&r, &a), elem(&r, &b), elem(&r, &c));
        prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        prop_assert_eq!(r.mul(&a, &r.one()), a.clone());
        prop_assert_eq!(r.sub(&a, &a), r.zero());
    }

    #[test]
    fn reciprocal_is_multiplicative_up_to_one_star(shape in 0usize..6, alpha in 0usize..3, a in digits(), b in digits()) {
        let r = build(shape, alpha);
        let dual = r.dual_ring();
        let (a, b) = (elem(&r, &a), elem(&r, &b));
        let lhs = dual.mul(&r.reciprocal(&a), &r.reciprocal(&b));
        let rhs = dual.mul(&r.reciprocal(&r.one()), &r.reciprocal(&r.mul(&a, &b)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn annihilator_pairing(shape in 0usize..6, alpha in 0usize..3, a in digits(), b in digits(), shift in 0usize..4) {
        let r = build(shape, alpha);
        let mut g = elem(&r, &a);
        for _ in 0..shift {
            g = r.mul_y(&g);
        }
        let c = r.span(&[g, r.mul_u(&elem(&r, &b))]);
        let ann = r.annihilator(&c);
        prop_assert_eq!(c.dim() + ann.dim(), 3 * r.n());
        prop_assert_eq!(r.annihilator(&ann), c.clone());
        for x in c.elements(&r) {
            for y in ann.elements(&r) {
                prop_assert!(r.mul(&x, &y).is_zero());
            }
        }
    }

    #[test]
    fn canonical_triples_validate_and_round_trip(shape in 0usize..6, alpha in 0usize..3, a in digits(), b in digits(), shift in 0usize..4) {
        let r = build(shape, alpha);
        let mut g = elem(&r, &a);
        for _ in 0..shift {
            g = r.mul_y(&g);
        }
        let gens = [g, r.mul_u(&elem(&r, &b))];
        let tr = canonicalize(&r, &gens);
        prop_assert!(validate_triple(&r, &tr).is_valid());
        prop_assert_eq!(tr.span(&r), r.span(&gens));
        let prof = tr.profile();
        prop_assert!(prof.a >= prof.b && prof.b >= prof.c);
        let json = serde_json::to_string(&TripleJson::of(&r, &tr)).unwrap();
        let back: TripleJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.to_triple(&r).unwrap(), tr);
    }

    #[test]
    fn pk_root_inverts_frobenius_power(p in prop::sample::select(vec![2u32, 3, 5]), m in 1usize..4, k in 1u32..5, idx in 1usize..1000) {
        let f = FieldCtx::with_default_modulus(p, m).unwrap();
        let delta = f.from_index(1 + idx % (f.order() - 1)).unwrap();
        let root = f.pk_root(delta, k).unwrap();
        prop_assert_eq!(f.pow(root, (p as u64).pow(k)), delta);
    }

    #[test]
    fn delta_substitution_is_multiplicative(d in 1usize..3, a in prop::collection::vec(0usize..9, 9), b in prop::collection::vec(0usize..9, 9)) {
        let f = Arc::new(FieldCtx::prime(3).unwrap());
        let params = RingParams::new(f.clone(), 1, f.one(), f.from_index(d).unwrap()).unwrap();
        let (reduced, d0) = params.reduce_delta().unwrap();
        let (src, dst) = (ConstaRing::new(&params), ConstaRing::new(&reduced));
        let word = |v: &[usize]| {
            let flat: Vec<FieldElem> = v.iter().map(|&i| f.from_index(i % 3).unwrap()).collect();
            src.from_flat_yadic(&flat)
        };
        let (wa, wb) = (word(&a), word(&b));
        let phi = |w: &Vec<_>| delta_substitute(&params, w, d0).unwrap();
        let product = src.mul(&wa, &wb);
        prop_assert_eq!(phi(&product), dst.mul(&phi(&wa), &phi(&wb)));
    }
}
