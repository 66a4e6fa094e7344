use std::collections::BTreeSet;

use serde_json::{json, Value};

use chainring_codes::code::{
    annihilator_class_c, annihilator_general, classify as classes_of, code_size, dual_basis, dual_triple,
    validate_class_c, validate_triple, GeneratorTriple,
};
use chainring_codes::oracle::{delta_substitute_ideal, valid_triples, ConstaRing};
use chainring_codes::selfdual::{
    census, count_selfdual, degree2_families, enumerate_monomial, is_selfdual_t4, is_selfdual_t5, monomial_g,
    outside_c_selfdual, selfdual_shape_check, CountTable, MonomialSpec, SelfDualForm,
};
use chainring_codes::wire::{ElemRepr, Mismatch, OracleReport, ParamsDesc, TripleJson};
use chainring_codes::{Error, IdealBasis, Ring, SBarElem};

use crate::config::{Failure, Job};
use crate::output::{Doc, Table};
use crate::{Mode, Scope};

fn poly(ring: &Ring, p: &SBarElem) -> Vec<ElemRepr> {
    p.trimmed().iter().map(|&c| ElemRepr::of(ring.field(), c)).collect()
}

fn poly_cell(ring: &Ring, p: &SBarElem) -> String {
    serde_json::to_string(&poly(ring, p)).expect("plain data serializes")
}

fn triple_cells(ring: &Ring, tr: &GeneratorTriple) -> Vec<String> {
    vec![
        tr.a.to_string(),
        tr.t.to_string(),
        tr.b.to_string(),
        tr.c.to_string(),
        poly_cell(ring, &tr.g),
        poly_cell(ring, &tr.r),
        poly_cell(ring, &tr.h),
    ]
}

const TRIPLE_HEADER: [&str; 7] = ["a", "t", "b", "c", "g", "r", "h"];

fn with_triple_header(front: &[&'static str]) -> Vec<&'static str> {
    front.iter().copied().chain(TRIPLE_HEADER).collect()
}

pub fn classify(job: &Job) -> Result<Doc, Failure> {
    let ring = &job.ring;
    let tr = job.code();
    let n = ring.n();
    let profile = tr.profile();
    let classes = classes_of(profile, n);
    let labels: Vec<&str> = classes.members().iter().map(|c| c.label()).collect();
    let size = code_size(profile, n);
    let class_c = classes.c.then(|| validate_class_c(ring, tr));
    let json = json!({
        "config": job.echo,
        "triple": TripleJson::of(ring, tr),
        "profile": profile,
        "classes": classes,
        "class_list": labels,
        "size_exponent": size,
        "validity": validate_triple(ring, tr),
        "class_c": class_c,
    });
    let mut row = triple_cells(ring, tr);
    row.extend([size.to_string(), labels.join(" ")]);
    let mut header = TRIPLE_HEADER.to_vec();
    header.extend(["size_exponent", "classes"]);
    Ok(Doc { json, table: Table { header, rows: vec![row] } })
}

pub fn dual(job: &Job) -> Result<Doc, Failure> {
    let ring = &job.ring;
    let tr = job.code();
    let n = ring.n();
    let span = tr.span(ring);
    let (ann, method, witness) = match annihilator_class_c(ring, tr) {
        Ok((ann, w)) => (ann, "closed-form", Some(poly(ring, &w.l))),
        Err(_) => {
            let basis = annihilator_general(ring, &span);
            (GeneratorTriple::from_ideal(ring, &basis)?, "linear-algebra", None)
        }
    };
    let dual_ring = ring.dual_ring();
    let perp = dual_triple(ring, tr);
    let sizes = (code_size(tr.profile(), n), code_size(perp.profile(), n));
    let selfdual = dual_ring.alpha() == ring.alpha() && dual_basis(ring, &span) == span;
    let json = json!({
        "config": job.echo,
        "code": TripleJson::of(ring, tr),
        "annihilator": TripleJson::of(ring, &ann),
        "annihilator_method": method,
        "witness_l": witness,
        "dual_params": ParamsDesc::of(&dual_ring.params()),
        "dual": TripleJson::of(&dual_ring, &perp),
        "size_exponents": { "code": sizes.0, "dual": sizes.1, "sum": sizes.0 + sizes.1, "expected": 3 * n },
        "size_check": sizes.0 + sizes.1 == 3 * n,
        "selfdual": selfdual,
    });
    let rows = [("code", ring, tr), ("annihilator", ring, &ann), ("dual", &dual_ring, &perp)]
        .into_iter()
        .map(|(role, r, t)| {
            let mut row = vec![role.to_string()];
            row.extend(triple_cells(r, t));
            row
        })
        .collect();
    Ok(Doc { json, table: Table { header: with_triple_header(&["role"]), rows } })
}

fn odd_characteristic(job: &Job, mode: Mode) -> Doc {
    let note = "no self-dual codes: p is odd, so 3p^k is odd";
    let mut json = json!({ "config": job.echo, "note": note, "codes": [], "total": 0 });
    if mode == Mode::Check {
        json["selfdual"] = json!(false);
    }
    Doc { json, table: Table { header: with_triple_header(&["source"]), rows: Vec::new() } }
}

fn form_json(ring: &Ring, f: &SelfDualForm) -> Value {
    json!({ "t": f.t, "g": poly(ring, &f.g), "h": poly(ring, &f.h) })
}

/// `s` with `g = √α x^s`, if `g` is such a monomial.
fn monomial_exponent(ring: &Ring, f: &SelfDualForm) -> Option<usize> {
    (0..f.window()).find(|&s| monomial_g(ring, s).map_or(false, |g| g == f.g))
}

fn check_budget(table: &CountTable, budget: u128) -> Result<(), Failure> {
    if table.total > budget {
        return Err(Error::BudgetExceeded { needed: table.total, budget }.into());
    }
    Ok(())
}

fn count_rows(table: &CountTable) -> Table {
    let rows = table
        .rows
        .iter()
        .map(|r| {
            vec![
                r.k.to_string(),
                r.t.to_string(),
                r.s.to_string(),
                r.count.to_string(),
                r.nullity.to_string(),
                r.consistent.to_string(),
            ]
        })
        .collect();
    Table { header: vec!["k", "t", "s", "count", "nullity", "consistent"], rows }
}

pub fn selfdual(job: &Job, mode: Mode) -> Result<Doc, Failure> {
    let ring = &job.ring;
    if ring.p() != 2 {
        return Ok(odd_characteristic(job, mode));
    }
    match mode {
        Mode::Check => check(job),
        Mode::Count => {
            let table = count_selfdual(ring)?;
            let json = json!({ "config": job.echo, "table": table });
            Ok(Doc { json, table: count_rows(&table) })
        }
        Mode::Enumerate | Mode::Census => {
            let table = count_selfdual(ring)?;
            check_budget(&table, job.budget)?;
            let all = census(ring)?;
            let mut codes = Vec::new();
            let mut rows = Vec::new();
            for f in &all.monomial {
                let s = monomial_exponent(ring, f).expect("monomial enumeration uses monomial g");
                let tr = f.to_triple(ring);
                codes.push(json!({ "source": "monomial", "s": s, "form": form_json(ring, f), "triple": TripleJson::of(ring, &tr) }));
                let mut row = vec![format!("monomial s={s}")];
                row.extend(triple_cells(ring, &tr));
                rows.push(row);
            }
            for m in &all.families {
                let tr = m.form.to_triple(ring);
                codes.push(json!({
                    "source": "family",
                    "family": m.family,
                    "beta": ElemRepr::of(ring.field(), m.beta),
                    "form": form_json(ring, &m.form),
                    "triple": TripleJson::of(ring, &tr),
                }));
                let mut row = vec![format!("family {}", m.family.label())];
                row.extend(triple_cells(ring, &tr));
                rows.push(row);
            }
            let mut json = json!({
                "config": job.echo,
                "codes": codes,
                "monomial": all.monomial.len(),
                "families": all.families.len(),
            });
            if mode == Mode::Census {
                let mut row = vec!["outside class C".to_string()];
                row.extend(triple_cells(ring, &all.outside));
                rows.push(row);
                json["outside"] = json!(TripleJson::of(ring, &all.outside));
                json["table"] = json!(all.table);
                json["total"] = json!(all.total());
            } else {
                json["total"] = json!(all.monomial.len() + all.families.len());
            }
            Ok(Doc { json, table: Table { header: with_triple_header(&["source"]), rows } })
        }
    }
}

fn check(job: &Job) -> Result<Doc, Failure> {
    let ring = &job.ring;
    let tr = job.code();
    let span = tr.span(ring);
    let definitional = dual_basis(ring, &span) == span;
    let outside = span == outside_c_selfdual(ring)?.span(ring);
    let mut json = json!({
        "config": job.echo,
        "triple": TripleJson::of(ring, tr),
        "outside_class_c": outside,
        "selfdual": definitional,
    });
    let mut cells = vec![definitional.to_string(), outside.to_string()];
    match selfdual_shape_check(ring, tr) {
        Ok(form) => {
            let t4 = is_selfdual_t4(ring, &form);
            let t5 = monomial_exponent(ring, &form)
                .map(|s| is_selfdual_t5(ring, form.t, MonomialSpec::new(ring.k(), s), &form.h));
            cells.extend([t4.selfdual.to_string(), t5.map_or(String::new(), |v| v.to_string()), String::new()]);
            json["form"] = form_json(ring, &form);
            json["criterion"] = json!(t4);
            json["monomial_criterion"] = json!(t5);
        }
        Err(v) => {
            cells.extend([String::new(), String::new(), v.constraint.clone()]);
            json["shape"] = json!(v);
        }
    }
    let header = vec!["selfdual", "outside_class_c", "criterion", "monomial_criterion", "shape_violation"];
    Ok(Doc { json, table: Table { header, rows: vec![cells] } })
}

fn lattice(oracle: &ConstaRing, budget: u128) -> Result<Vec<IdealBasis>, Error> {
    if oracle.ring_size() <= budget {
        oracle.enumerate_ideals(budget)
    } else {
        oracle.enumerate_ideals_layered(budget, |_| true)
    }
}

fn describe(ring: &Ring, c: &IdealBasis) -> String {
    let tr = GeneratorTriple::from_ideal(ring, c).expect("lattice members are ideals");
    serde_json::to_string(&TripleJson::of(ring, &tr)).expect("plain data serializes")
}

struct Findings(Vec<Mismatch>);

impl Findings {
    fn expect(&mut self, ok: bool, check: &str, detail: impl FnOnce() -> String) {
        if !ok {
            self.0.push(Mismatch { check: check.to_string(), detail: detail() });
        }
    }
}

fn ideals_scope(ring: &Ring, oracle: &ConstaRing, budget: u128, found: &mut Findings) -> Result<usize, Failure> {
    let ideals = lattice(oracle, budget)?;
    let triples = valid_triples(ring, budget)?;
    let mut spans = BTreeSet::new();
    for tr in &triples {
        let span = tr.span(ring);
        found.expect(spans.insert(span), "triple-uniqueness", || {
            format!("two valid triples generate {}", serde_json::to_string(&TripleJson::of(ring, tr)).unwrap())
        });
    }
    let lattice: BTreeSet<IdealBasis> = ideals.iter().cloned().collect();
    for c in lattice.difference(&spans) {
        found.expect(false, "ideal-without-triple", || describe(ring, c));
    }
    for c in spans.difference(&lattice) {
        found.expect(false, "triple-outside-lattice", || describe(ring, c));
    }
    for c in &ideals {
        let tr = GeneratorTriple::from_ideal(ring, c)?;
        found.expect(validate_triple(ring, &tr).is_valid(), "canonical-triple-valid", || describe(ring, c));
        found.expect(tr.span(ring) == *c, "canonical-triple-span", || describe(ring, c));
    }
    Ok(ideals.len())
}

fn crosscheck_scope(ring: &Ring, oracle: &ConstaRing, budget: u128, found: &mut Findings) -> Result<usize, Failure> {
    let n = ring.n();
    let ideals = lattice(oracle, budget)?;
    for c in &ideals {
        let tr = GeneratorTriple::from_ideal(ring, c)?;
        found.expect(validate_triple(ring, &tr).is_valid() && tr.span(ring) == *c, "canonical-triple", || {
            describe(ring, c)
        });
        let ann = annihilator_general(ring, c);
        found.expect(ann == oracle.brute_annihilator(c), "annihilator", || describe(ring, c));
        found.expect(dual_basis(ring, c) == oracle.brute_dual(c), "dual", || describe(ring, c));
        let profile = tr.profile();
        found.expect(code_size(profile, n) + code_size(ann.pivot_profile(), n) == 3 * n, "size-pairing", || {
            describe(ring, c)
        });
        if classes_of(profile, n).c {
            found.expect(classes_of(ann.pivot_profile(), n).c_prime, "annihilator-class", || describe(ring, c));
            match annihilator_class_c(ring, &tr) {
                Ok((closed, _)) => found.expect(closed.span(ring) == ann, "closed-form-annihilator", || describe(ring, c)),
                Err(e) => found.expect(false, "class-c-conditions", || format!("{}: {e}", describe(ring, c))),
            }
        }
        if ring.p() == 2 {
            if let Ok(form) = selfdual_shape_check(ring, &tr) {
                let brute = oracle.brute_dual(c) == *c;
                found.expect(is_selfdual_t4(ring, &form).selfdual == brute, "selfdual-criterion", || describe(ring, c));
            }
        }
    }
    Ok(ideals.len())
}

/// The `x ↦ δ0 x` map on the lattice of the original ring.
fn delta_scope(job: &Job, oracle: &ConstaRing, found: &mut Findings) -> Result<(), Failure> {
    let params = &job.params;
    let src = ConstaRing::new(params);
    let (_, delta0) = params.reduce_delta()?;
    let f = &params.field;
    let source = src.enumerate_ideals(job.budget)?;
    let target: BTreeSet<IdealBasis> = lattice(oracle, job.budget)?.into_iter().collect();
    let dual_params = src.dual().params().clone();
    let inv = f.inv(delta0)?;
    let mut images = BTreeSet::new();
    for c in &source {
        let img = delta_substitute_ideal(params, c, delta0)?;
        let what = || format!("source ideal with dimension profile {:?}", c.dimension_profile());
        found.expect(target.contains(&img), "delta-image-is-ideal", what);
        found.expect(img.dimension_profile() == c.dimension_profile(), "delta-profile", what);
        let dual_img = delta_substitute_ideal(&dual_params, &src.brute_dual(c), inv)?;
        found.expect(oracle.brute_dual(&img) == dual_img, "delta-dual-pair", what);
        images.insert(img);
    }
    found.expect(images.len() == source.len() && images == target, "delta-bijection", || {
        format!("{} source ideals, {} images, {} target ideals", source.len(), images.len(), target.len())
    });
    Ok(())
}

pub fn oracle(job: &Job, scope: Scope) -> Result<Doc, Failure> {
    let ring = &job.ring;
    let oracle = ConstaRing::new(&ring.params());
    let mut found = Findings(Vec::new());
    let mut ideal_count = None;
    let mut selfdual_count = None;
    let mut extra = json!({});
    match scope {
        Scope::Ideals => ideal_count = Some(ideals_scope(ring, &oracle, job.budget, &mut found)?),
        Scope::Crosscheck => {
            ideal_count = Some(crosscheck_scope(ring, &oracle, job.budget, &mut found)?);
            if job.echo.transform.is_some() {
                delta_scope(job, &oracle, &mut found)?;
            }
        }
        Scope::Selfdual => {
            let scan: BTreeSet<IdealBasis> = oracle.brute_selfdual_scan(job.budget)?.into_iter().collect();
            selfdual_count = Some(scan.len());
            if ring.p() == 2 {
                let table = count_selfdual(ring)?;
                check_budget(&table, job.budget)?;
                let monomial = enumerate_monomial(ring)?;
                let families = degree2_families(ring)?;
                let outside = outside_c_selfdual(ring)?.span(ring);
                let mut predicted = BTreeSet::new();
                for f in monomial.iter().chain(families.iter().map(|m| &m.form)) {
                    predicted.insert(f.to_triple(ring).span(ring));
                }
                predicted.insert(outside.clone());
                for c in scan.difference(&predicted) {
                    found.expect(false, "selfdual-unpredicted", || describe(ring, c));
                }
                for c in predicted.difference(&scan) {
                    found.expect(false, "selfdual-not-found", || describe(ring, c));
                }
                extra = json!({
                    "reconciliation": {
                        "scan": scan.len(),
                        "monomial": monomial.len(),
                        "monomial_formula": table.formula_total,
                        "families": families.len(),
                        "outside_class_c": usize::from(scan.contains(&outside)),
                        "predicted": predicted.len(),
                    }
                });
            }
        }
    }
    let report = OracleReport { params: ParamsDesc::of(&ring.params()), ideal_count, selfdual_count, mismatches: found.0 };
    let rows = report.mismatches.iter().map(|m| vec![m.check.clone(), m.detail.clone()]).collect();
    let mut json = json!({ "config": job.echo, "report": report });
    if let (Value::Object(dst), Value::Object(src)) = (&mut json, extra) {
        dst.extend(src);
    }
    Ok(Doc { json, table: Table { header: vec!["check", "detail"], rows } })
}
