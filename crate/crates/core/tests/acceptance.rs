//! One line per acceptance criterion; exits non-zero when any of them fails.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use chainring_codes::code::{
    annihilator_class_c, classify, dual_basis, validate_class_c, validate_triple, CodeClass, GeneratorTriple,
};
use chainring_codes::linalg::mat_vec;
use chainring_codes::oracle::{delta_substitute_ideal, valid_triples, ConstaRing, DEFAULT_BUDGET};
use chainring_codes::selfdual::{
    build_m, count_selfdual, degree2_families, enumerate_monomial, is_selfdual_t4, is_selfdual_t5, monomial_g,
    outside_c_selfdual, solve_g_system, solve_h_system, Family, MonomialSpec, SelfDualForm,
};
use chainring_codes::{FieldElem, IdealBasis, Ring, RingParams, SBarElem};
use common::{ternary_c_code, field, ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    check(elapsed < limit, || format!("{what} took {elapsed:?}, limit {limit:?}"))
}

fn ternary_c_code_reproduction() -> Outcome {
    let start = Instant::now();
    let r = ring(3, 1, 2);
    let tr = ternary_c_code(&r);
    let report = validate_triple(&r, &tr);
    check(report.is_valid(), || format!("validity violations {:?}", report.names()))?;
    let classes = classify(tr.profile(), r.n()).members();
    check(classes == [CodeClass::C, CodeClass::CPrime], || format!("classes {classes:?}"))?;
    let c = validate_class_c(&r, &tr);
    check(c.is_valid() && c.case == Some(1), || format!("class-C report {:?} case {:?}", c.names(), c.case))?;
    let (ann, _) = annihilator_class_c(&r, &tr).map_err(|e| e.to_string())?;
    let oracle = ConstaRing::new(&r.params());
    let brute = oracle.brute_annihilator(&tr.span(&r));
    check(ann.span(&r) == brute, || "closed-form annihilator differs from brute force".into())?;
    within(start.elapsed(), Duration::from_secs(1), "ternary class-C code")?;
    Ok(format!("annihilator (a', b', c') = ({}, {}, {})", ann.a, ann.b, ann.c))
}

fn completeness() -> Outcome {
    let start = Instant::now();
    let mut summary = Vec::new();
    for (p, k) in [(2, 1), (2, 2), (3, 1)] {
        let r = ring(p, 1, k);
        let oracle = ConstaRing::new(&r.params());
        let ideals = oracle.enumerate_ideals(DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let triples = valid_triples(&r, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let spans: BTreeSet<IdealBasis> = triples.iter().map(|t| t.span(&r)).collect();
        check(spans.len() == triples.len(), || format!("p={p} k={k}: distinct triples share an ideal"))?;
        let lattice: BTreeSet<IdealBasis> = ideals.iter().cloned().collect();
        check(spans == lattice, || {
            format!("p={p} k={k}: {} ideals, {} valid triples", lattice.len(), spans.len())
        })?;
        for c in &ideals {
            let tr = GeneratorTriple::from_ideal(&r, c).map_err(|e| e.to_string())?;
            check(tr.span(&r) == *c, || format!("p={p} k={k}: canonical triple does not regenerate its ideal"))?;
        }
        summary.push(format!("p={p},k={k}: {}", ideals.len()));
    }
    within(start.elapsed(), Duration::from_secs(300), "completeness")?;
    Ok(summary.join(", "))
}

fn random_element_ideal(r: &Ring, rng: &mut ChaCha8Rng) -> IdealBasis {
    let f = r.field();
    let n = r.n();
    let gens: Vec<_> = (0..rng.gen_range(1..=2))
        .map(|_| {
            let v: Vec<FieldElem> = (0..3 * n).map(|_| f.from_index(rng.gen_range(0..f.order())).unwrap()).collect();
            let mut e = r.from_flat(&v);
            for _ in 0..rng.gen_range(0..n) {
                e = r.mul_y(&e);
            }
            for _ in 0..rng.gen_range(0..3) {
                e = r.mul_u(&e);
            }
            e
        })
        .collect();
    r.span(&gens)
}

fn dual_identity() -> Outcome {
    let r = ring(2, 1, 2);
    let oracle = ConstaRing::new(&r.params());
    let ideals = oracle.enumerate_ideals(DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    for c in &ideals {
        let definitional = oracle.brute_dual(c);
        check(definitional == oracle.reciprocal_image(&oracle.brute_annihilator(c)), || "lattice: C^perp != Ann(C)^*".into())?;
        check(definitional == dual_basis(&r, c), || "lattice: algebraic dual differs".into())?;
    }
    let r3 = ring(2, 1, 3);
    let oracle3 = ConstaRing::new(&r3.params());
    let mut rng = ChaCha8Rng::seed_from_u64(0xd0a1);
    let mut profiles = HashSet::new();
    for _ in 0..60 {
        let c = random_element_ideal(&r3, &mut rng);
        profiles.insert(c.pivot_profile());
        let definitional = oracle3.brute_dual(&c);
        check(definitional == oracle3.reciprocal_image(&oracle3.brute_annihilator(&c)), || "k=3: C^perp != Ann(C)^*".into())?;
        check(definitional == dual_basis(&r3, &c), || "k=3: algebraic dual differs".into())?;
    }
    Ok(format!("{} lattice ideals, 60 random ideals over {} profiles", ideals.len(), profiles.len()))
}

fn census_k2() -> Outcome {
    let start = Instant::now();
    let r = ring(2, 1, 2);
    let oracle = ConstaRing::new(&r.params());
    let scan = oracle.brute_selfdual_scan(DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let table = count_selfdual(&r).map_err(|e| e.to_string())?;
    check(table.total == 2 && table.formula_total == 2, || format!("N(4) = {}", table.total))?;
    let outside = outside_c_selfdual(&r).map_err(|e| e.to_string())?.span(&r);
    check(scan.contains(&outside), || "outside-C ideal missing from the scan".into())?;
    let mut predicted: BTreeSet<IdealBasis> =
        enumerate_monomial(&r).map_err(|e| e.to_string())?.iter().map(|f| f.to_triple(&r).span(&r)).collect();
    predicted.insert(outside);
    let found: BTreeSet<IdealBasis> = scan.iter().cloned().collect();
    check(found.len() == 3 && found == predicted, || format!("scan found {}, predicted {}", found.len(), predicted.len()))?;
    within(start.elapsed(), Duration::from_secs(300), "k=2 census")?;
    Ok("3 self-dual ideals = N(4) + 1".into())
}

fn counting_formula() -> Outcome {
    let f = field(2, 1);
    for k in 1..=4u32 {
        let half = 1usize << (k - 1);
        for t in 0..half {
            let sol = solve_h_system(&f, &build_m(&f, f.one(), k, t).map_err(|e| e.to_string())?);
            let expect = if t == 0 { 0 } else { 2u128.pow(((half - t + 2) / 2) as u32) };
            check(sol.count(2) == expect, || format!("N(2^{k}, {t}, s) = {}, expected {expect}", sol.count(2)))?;
        }
    }
    let r = ring(2, 1, 3);
    let table = count_selfdual(&r).map_err(|e| e.to_string())?;
    check(table.formula_total == 22 && table.total == 22, || {
        format!("N(8): formula {}, table {}", table.formula_total, table.total)
    })?;
    let listed = enumerate_monomial(&r).map_err(|e| e.to_string())?;
    // independent enumeration: every monomial g, every h, decided by the general criterion
    let mut swept = 0;
    for t in 0..4 {
        let d = 4 - t;
        for s in 0..d {
            let g = monomial_g(&r, s).map_err(|e| e.to_string())?;
            for h in r.bar_polys_below(d) {
                let form = SelfDualForm::new(&r, t, g.clone(), h).map_err(|e| e.to_string())?;
                if is_selfdual_t4(&r, &form).selfdual {
                    swept += 1;
                }
            }
        }
    }
    check(listed.len() == 22 && swept == 22, || format!("enumerated {}, swept {swept}", listed.len()))?;
    Ok("N(8) = 22".into())
}

fn nullity_law() -> Outcome {
    let fields = [field(2, 1), field(2, 2)];
    let mut cases = 0;
    for k in 2..=6u32 {
        let half = 1usize << (k - 1);
        for t in 1..half {
            let expect = (half - t + 2) / 2;
            let got: Vec<usize> = fields
                .iter()
                .map(|f| build_m(f, f.one(), k, t).map(|s| s.nullity))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            check(got.iter().all(|&x| x == expect), || format!("k={k} t={t}: nullities {got:?}, expected {expect}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (k, t) pairs"))
}

fn sigma_lists() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for m in 1..=2 {
        let f = field(2, m);
        for alpha in f.units() {
            let root = f.sqrt_char2(alpha).map_err(|e| e.to_string())?;
            for k in 2..=5u32 {
                let r = Ring::new(f.clone(), k, alpha).map_err(|e| e.to_string())?;
                let half = r.n() / 2;
                for t in 0..half {
                    let d = half - t;
                    let max_deg = 2.min(d - 1);
                    let got: BTreeSet<Vec<FieldElem>> =
                        solve_g_system(&r, t, max_deg, 1 << 20).map_err(|e| e.to_string())?.into_iter().collect();
                    let z = FieldElem::ZERO;
                    // (x+1)-adic coefficients of sqrt(a), sqrt(a) x, sqrt(a) x^2
                    let mut expect: BTreeSet<Vec<FieldElem>> =
                        [vec![root, z, z], vec![root, root, z], vec![root, z, root]].into_iter().collect();
                    match d {
                        2 => expect.extend(f.elements().map(|b| vec![root, b, z])),
                        3 | 4 => {
                            expect.extend(f.elements().map(|b| vec![root, z, b]));
                            expect.extend(f.elements().map(|b| vec![root, root, b]));
                        }
                        _ => {}
                    }
                    let expect: BTreeSet<Vec<FieldElem>> = expect
                        .into_iter()
                        .filter(|g| g[max_deg + 1..].iter().all(|c| c.is_zero()))
                        .map(|g| g[..=max_deg].to_vec())
                        .collect();
                    check(got == expect, || format!("m={m} k={k} t={t}: {} solutions, expected {}", got.len(), expect.len()))?;
                    cases += 1;
                }
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(60), "sigma sweep")?;
    Ok(format!("{cases} (alpha, k, t) systems"))
}

fn is_definitionally_selfdual(r: &Ring, oracle: &ConstaRing, form: &SelfDualForm) -> bool {
    let tr = form.to_triple(r);
    if !validate_triple(r, &tr).is_valid() {
        return false;
    }
    let span = tr.span(r);
    oracle.brute_dual(&span) == span
}

fn degree2() -> Outcome {
    let mut emitted = 0;
    let mut rejected = 0;
    for (k, m) in [(3u32, 1usize), (3, 2), (4, 1)] {
        let f = field(2, m);
        for alpha in f.units() {
            let r = Ring::new(f.clone(), k, alpha).map_err(|e| e.to_string())?;
            let oracle = ConstaRing::new(&r.params());
            let members = degree2_families(&r).map_err(|e| e.to_string())?;
            for mem in &members {
                check(is_definitionally_selfdual(&r, &oracle, &mem.form), || {
                    format!("k={k} m={m}: family {} member is not self-dual", mem.family.label())
                })?;
                if mem.family == Family::II {
                    let root = f.sqrt_char2(alpha).unwrap();
                    let expect = r.bar_add(&mem.form.g, &r.bar_scale(root, &r.bar_y_pow(2)));
                    check(mem.form.r(&r) == expect, || "family ii: r != g + sqrt(a)(x+1)^2".into())?;
                }
            }
            emitted += members.len();
            let root = f.sqrt_char2(alpha).unwrap();
            let half = r.n() / 2;
            // (I): D = 2, g = sqrt(a) + b(x+1); (III): D = 4, g = sqrt(a) + b(x+1)^2 or sqrt(a) x + b(x+1)^2
            let mut cases: Vec<(usize, Vec<FieldElem>)> = Vec::new();
            for beta in f.elements().filter(|&b| !b.is_zero()) {
                if beta != root {
                    cases.push((2, vec![root, beta]));
                    cases.push((4, vec![root, FieldElem::ZERO, beta]));
                }
                cases.push((4, vec![root, root, beta]));
            }
            for (d, g) in cases {
                let t = half - d;
                let g = r.bar_from_yadic(&g).unwrap();
                for h in r.bar_polys_below(d) {
                    let form = SelfDualForm::new(&r, t, g.clone(), h).map_err(|e| e.to_string())?;
                    check(!is_selfdual_t4(&r, &form).selfdual, || format!("k={k}: case D={d} passes the criterion"))?;
                    check(!is_definitionally_selfdual(&r, &oracle, &form), || format!("k={k}: case D={d} is self-dual"))?;
                    rejected += 1;
                }
            }
        }
    }
    Ok(format!("{emitted} family members self-dual, {rejected} case (I)/(III) codes rejected"))
}

fn three_paths_agree(r: &Ring, t: usize, s: usize, h: &SBarElem) -> Result<bool, String> {
    let f = r.field();
    let n = r.n();
    let d = n / 2 - t;
    let spec = MonomialSpec::new(r.k(), s);
    let form = SelfDualForm::new(r, t, monomial_g(r, s).map_err(|e| e.to_string())?, h.clone())
        .map_err(|e| e.to_string())?;
    let t4 = is_selfdual_t4(r, &form).selfdual;
    let t5 = is_selfdual_t5(r, t, spec, h);
    let sys = build_m(f, r.alpha(), r.k(), t).map_err(|e| e.to_string())?;
    let by_matrix = spec.admits(n, t) && mat_vec(f, &sys.m, &h.coeffs[..d]) == sys.d;
    check(t4 == t5 && t5 == by_matrix, || format!("k={} t={t} s={s}: T4 {t4}, T5 {t5}, M {by_matrix}", r.k()))?;
    Ok(t4)
}

fn equivalence() -> Outcome {
    let mut exhaustive = 0;
    for k in 1..=3u32 {
        let r = ring(2, 1, k);
        let oracle = ConstaRing::new(&r.params());
        let half = r.n() / 2;
        for t in 0..half {
            let d = half - t;
            for s in 0..d {
                for h in r.bar_polys_below(d) {
                    let verdict = three_paths_agree(&r, t, s, &h)?;
                    let form = SelfDualForm::new(&r, t, monomial_g(&r, s).unwrap(), h).unwrap();
                    check(verdict == is_definitionally_selfdual(&r, &oracle, &form), || {
                        format!("k={k} t={t} s={s}: criterion disagrees with the definition")
                    })?;
                    exhaustive += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7415);
    for i in 0..1000 {
        let f = field(2, 1 + i % 2);
        let units: Vec<FieldElem> = f.units().collect();
        let alpha = units[rng.gen_range(0..units.len())];
        let r = Ring::new(f.clone(), 4, alpha).unwrap();
        let t = rng.gen_range(0..8);
        let d = 8 - t;
        let s = rng.gen_range(0..d);
        let mut h: Vec<FieldElem> = (0..d).map(|_| f.from_index(rng.gen_range(0..f.order())).unwrap()).collect();
        h.resize(16, FieldElem::ZERO);
        three_paths_agree(&r, t, s, &SBarElem { coeffs: h })?;
    }
    Ok(format!("{exhaustive} exhaustive cases, 1000 random at k=4"))
}

fn delta_reduction() -> Outcome {
    let f = field(3, 1);
    let params = RingParams::new(f.clone(), 1, f.one(), f.from_int(2)).map_err(|e| e.to_string())?;
    let (reduced, d0) = params.reduce_delta().map_err(|e| e.to_string())?;
    let src = ConstaRing::new(&params);
    let dst = ConstaRing::new(&reduced);
    let ideals = src.enumerate_ideals(DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let target: BTreeSet<IdealBasis> = dst.enumerate_ideals(DEFAULT_BUDGET).map_err(|e| e.to_string())?.into_iter().collect();
    let dual_params = src.dual().params().clone();
    let d0_inv = f.inv(d0).unwrap();
    let mut images = BTreeSet::new();
    for c in &ideals {
        let img = delta_substitute_ideal(&params, c, d0).map_err(|e| e.to_string())?;
        check(dst.is_ideal(&img), || "image is not an ideal".into())?;
        check(img.dimension_profile() == c.dimension_profile(), || "torsion profile not preserved".into())?;
        let dual_img = delta_substitute_ideal(&dual_params, &src.brute_dual(c), d0_inv).map_err(|e| e.to_string())?;
        check(dst.brute_dual(&img) == dual_img, || "dual pair not preserved".into())?;
        images.insert(img);
    }
    check(images.len() == ideals.len() && images == target, || {
        format!("{} ideals map onto {} of {}", ideals.len(), images.len(), target.len())
    })?;
    Ok(format!("{} ideals, delta0 = {}, alpha' = {}", ideals.len(), f.render(d0), f.render(reduced.alpha)))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("ternary class-C code", ternary_c_code_reproduction),
        ("canonical-triple completeness", completeness),
        ("dual identity", dual_identity),
        ("self-dual census k=2", census_k2),
        ("counting formula", counting_formula),
        ("nullity law", nullity_law),
        ("sigma-system lists", sigma_lists),
        ("degree-2 families", degree2),
        ("general/monomial/matrix criteria agree", equivalence),
        ("delta reduction", delta_reduction),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}; {secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why}; {secs:.2}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
