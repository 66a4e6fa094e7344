mod common;

use std::collections::BTreeSet;

use chainring_codes::code::validate_triple;
use chainring_codes::oracle::{ConstaRing, DEFAULT_BUDGET};
use chainring_codes::selfdual::{census, is_selfdual_t4, selfdual_shape_check, Family, SelfDualForm};
use chainring_codes::{IdealBasis, Ring};
use common::{field, ring};

fn definitional(r: &Ring, oracle: &ConstaRing, form: &SelfDualForm) -> bool {
    let tr = form.to_triple(r);
    if !validate_triple(r, &tr).is_valid() {
        return false;
    }
    let span = tr.span(r);
    oracle.brute_dual(&span) == span
}

#[test]
fn criterion_matches_definition_for_every_g() {
    for m in 1..=2 {
        let f = field(2, m);
        for alpha in f.units() {
            for k in 1..=3 {
                if m == 2 && k == 3 {
                    continue;
                }
                let r = Ring::new(f.clone(), k, alpha).unwrap();
                let oracle = ConstaRing::new(&r.params());
                let half = r.n() / 2;
                for t in 0..half {
                    let d = half - t;
                    let units: Vec<_> = r.bar_polys_below(d).filter(|g| g.is_unit()).collect();
                    for g in &units {
                        for h in r.bar_polys_below(d) {
                            let form = SelfDualForm::new(&r, t, g.clone(), h).unwrap();
                            let report = is_selfdual_t4(&r, &form);
                            assert_eq!(report.selfdual, definitional(&r, &oracle, &form), "m={m} k={k} t={t}");
                            // the shape congruence is exactly validity of the triple
                            let tr = form.to_triple(&r);
                            assert_eq!(
                                form.shape_violation(&r).is_none(),
                                validate_triple(&r, &tr).is_valid(),
                                "m={m} k={k} t={t}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn census_k3_matches_exhaustive_scan() {
    let r = ring(2, 1, 3);
    let oracle = ConstaRing::new(&r.params());
    let scan: BTreeSet<IdealBasis> = oracle.brute_selfdual_scan(DEFAULT_BUDGET).unwrap().into_iter().collect();
    let c = census(&r).unwrap();
    assert_eq!((c.monomial.len(), c.families.len(), c.total()), (22, 4, 27));
    let mut predicted: BTreeSet<IdealBasis> = c.monomial.iter().map(|f| f.to_triple(&r).span(&r)).collect();
    predicted.extend(c.families.iter().map(|m| m.form.to_triple(&r).span(&r)));
    predicted.insert(c.outside.span(&r));
    assert_eq!(predicted.len(), 27);
    assert_eq!(scan, predicted);
}

#[test]
fn family_ii_relation() {
    let f = field(2, 2);
    for alpha in f.units() {
        let r = Ring::new(f.clone(), 3, alpha).unwrap();
        let root = f.sqrt_char2(alpha).unwrap();
        for m in census(&r).unwrap().families.iter().filter(|m| m.family == Family::II) {
            let expect = r.bar_add(&m.form.g, &r.bar_scale(root, &r.bar_y_pow(2)));
            assert_eq!(m.form.r(&r), expect);
        }
    }
}

#[test]
fn shape_check_reads_forms_back() {
    let r = ring(2, 1, 3);
    for form in census(&r).unwrap().monomial {
        assert_eq!(selfdual_shape_check(&r, &form.to_triple(&r)).unwrap(), form);
    }
    let outside = census(&r).unwrap().outside;
    assert!(selfdual_shape_check(&r, &outside).is_err());
}
