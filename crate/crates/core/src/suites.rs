//! The verification suites behind `verify`: each one draws its parameters
//! from a seeded [`Sampler`] and emits one [`CheckRecord`] per check.
//!
//! [`CheckRecord`]: crate::report::CheckRecord

use std::time::Instant;

use serde_json::{json, Value};

use crate::algebra::StructureAlgebra;
use crate::e2::{
    self, build_rn, c_over_e2, dh4, e2_arc, kernel_witness, not_subgroup_demo, prop62_instance_check, t_morphism,
    t_star, theorem61_check, theta, theta_star, with_rn, Decomposer,
};
use crate::error::{Error, Result};
use crate::hopf::{h4_double_relations, h4_dual, phi_h4, CoQtStructure, HopfAlgebra};
use crate::linalg::{vec_axpy, zero_vec, Matrix, Vector};
use crate::rational::{qi, Rational};
use crate::report::{Recorder, SuiteReport, VerificationReport};
use crate::sampling::Sampler;
use crate::sweedler::{
    aut_algebra, aut_conjugate, build_c, build_sigma, c_equivalent, c_isomorphism, c_membership, c_opposite, c_product,
    classify_bm0, coaction_induced_by, action_induced_by, descriptor_of, h4_arc, intersection_report, phi_inverse,
    phi_transport, psi_inverse, psi_transport, r_t, r_t_form, CDescriptor,
};
use crate::yd::{fg_maps, is_h_azumaya, sharp_product, ModuleAlgebra, YdAlgebra};

/// Suite ids in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "hopf",
    "triangular",
    "c-family",
    "products",
    "bm0",
    "transports",
    "aut",
    "kernel",
    "rn",
    "appendix",
];

pub const DEFAULT_SAMPLES: usize = 20;

type Params<'a> = Vec<(&'a str, String)>;

fn desc_params(d: &CDescriptor) -> Params<'static> {
    vec![("a", d.a.to_string()), ("t", d.t.to_string()), ("s", d.s.to_string())]
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).unwrap_or(Value::Null)
}

/// Records `Ok(payload)` as pass and `Err` as fail.
fn record_result(rec: &mut Recorder, id: &str, anchor: &str, params: &[(&str, String)], r: Result<Value>) {
    match r {
        Ok(payload) => rec.record(id, anchor, params, true, payload),
        Err(e) => rec.record_error(id, anchor, params, &e),
    }
}

fn expect(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Verification(what()))
    }
}

fn hopf_suite(rec: &mut Recorder, _s: &mut Sampler, _n: usize) {
    let d = dh4();
    let algebras: [(&str, HopfAlgebra); 4] = [
        ("H4", (*h4_arc()).clone()),
        ("H4dual", h4_dual()),
        ("E2", (*e2_arc()).clone()),
        ("DH4", (**d.hopf()).clone()),
    ];
    for (name, h) in &algebras {
        rec.record_report(
            &format!("hopf/{name}/axioms"),
            "hopf-axioms",
            &[("dim", h.dim().to_string())],
            &h.check_axioms(),
        );
    }
    rec.record_report("hopf/phi/isomorphism", "h4-self-dual", &[], &phi_h4().check(&h4_arc(), &h4_dual()));
    rec.record(
        "hopf/phi/bijective",
        "h4-self-dual",
        &[],
        phi_h4().matrix.rank() == 4,
        Value::Null,
    );
    for item in h4_double_relations(d).items {
        let ok = item.passed();
        let payload = if ok { Value::Null } else { to_value(&item.violations) };
        rec.record(&format!("hopf/DH4/relation/{}", item.name), "double-relations", &[], ok, payload);
    }
    rec.record_report("hopf/DH4/r-matrix", "double-quasitriangular", &[], &d.r().check(d.hopf()).axioms);
}

fn triangular_suite(rec: &mut Recorder, s: &mut Sampler, n: usize) {
    let h4 = h4_arc();
    let mut ts = vec![qi(0)];
    ts.extend(s.distinct(n.max(20)));
    for t in &ts {
        let p = [("t", t.to_string())];
        let rt = r_t(t);
        let qt = rt.check(&h4);
        rec.record_report("triangular/R_t/quasitriangular", "r-t-quasitriangular", &p, &qt.axioms);
        rec.record("triangular/R_t/triangular", "r-t-triangular", &p, qt.triangular, Value::Null);
        let form = r_t_form(t);
        let cq = form.check(&h4);
        rec.record_report("triangular/r_t/coquasitriangular", "r-t-cotriangular", &p, &cq.axioms);
        rec.record("triangular/r_t/cotriangular", "r-t-cotriangular", &p, cq.triangular, Value::Null);
        let pushed = CoQtStructure::from_dual_element(&h4, &rt.push(&phi_h4(), &h4_dual()).r);
        rec.record(
            "triangular/phi-push/table",
            "r-t-table",
            &p,
            pushed == form,
            if pushed == form { Value::Null } else { to_value(&pushed.r) },
        );
        rec.record_report("triangular/sigma/lazy-cocycle", "sigma-t-lazy-cocycle", &p, &build_sigma(t).check(&h4));
    }
}

fn c_family_suite(rec: &mut Recorder, s: &mut Sampler, n: usize) {
    for k in 0..n.max(20) {
        let mut d = s.descriptor();
        if k % 5 == 4 {
            d.a = &d.s * &d.t / qi(2);
        }
        let p = desc_params(&d);
        let c = build_c(&d);
        rec.record_report("c-family/yd", "c-family-yd", &p, &c.check());

        let defect = &d.s * &d.t - qi(2) * &d.a;
        let sq = &defect * &defect;
        let maps = fg_maps(&c);
        let dets = maps.f.det().and_then(|f| Ok((f, maps.g.det()?)));
        record_result(
            rec,
            "c-family/determinants",
            "c-family-azumaya-determinants",
            &p,
            dets.and_then(|(f, g)| {
                expect(f == -sq.clone() && g == sq, || format!("det F = {f}, det G = {g}"))?;
                Ok(json!({"det_f": f, "det_g": g}))
            }),
        );
        rec.record(
            "c-family/azumaya-criterion",
            "c-family-azumaya-criterion",
            &p,
            is_h_azumaya(&c) == d.is_azumaya(),
            json!({"azumaya": d.is_azumaya()}),
        );

        let expected = CDescriptor::new(&d.s * &d.t - &d.a, d.t.clone(), d.s.clone());
        record_result(
            rec,
            "c-family/opposite",
            "c-family-opposite",
            &p,
            c_opposite(&d).and_then(|o| {
                expect(o == expected, || format!("got {o}, expected {expected}"))?;
                Ok(json!(o.to_string()))
            }),
        );

        let alpha = s.nonzero();
        let scaled = CDescriptor::new(&alpha * &alpha * &d.a, &alpha * &d.t, &alpha * &d.s);
        let shifted = CDescriptor::new(&d.a + qi(1), d.t.clone(), d.s.clone());
        let mut pe = p.clone();
        pe.push(("alpha", alpha.to_string()));
        record_result(
            rec,
            "c-family/equivalence",
            "c-family-isomorphism-classes",
            &pe,
            (|| {
                let found = c_equivalent(&scaled, &d);
                expect(found.is_some() && c_isomorphism(&scaled, &d).is_some(), || {
                    format!("{scaled} not recognized as isomorphic to {d}")
                })?;
                expect(c_equivalent(&shifted, &d).is_none(), || format!("{shifted} ≅ {d} claimed"))?;
                Ok(to_value(&found))
            })(),
        );

        let mut ls = vec![s.nonzero()];
        if !d.t.is_zero() {
            ls.push(&d.s / &d.t);
        }
        if !d.s.is_zero() {
            ls.push(&d.t / &d.s);
        }
        for l in ls {
            let mut pl = p.clone();
            pl.push(("l", l.to_string()));
            let coaction = coaction_induced_by(&d, &l) == (d.s == &l * &d.t);
            let action = action_induced_by(&d, &l) == (d.t == &l * &d.s);
            rec.record("c-family/induced-coaction", "c-family-coaction-from-r", &pl, coaction, Value::Null);
            rec.record("c-family/induced-action", "c-family-action-from-r", &pl, action, Value::Null);
        }
        if d.is_azumaya() {
            record_result(
                rec,
                "c-family/membership",
                "c-family-image-membership",
                &p,
                c_membership(&d).map(|m| to_value(&m)),
            );
        }
    }
}

fn products_suite(rec: &mut Recorder, s: &mut Sampler, n: usize) {
    for _ in 0..n.max(20) {
        let (d1, d2) = (s.descriptor(), s.descriptor());
        let p = [("left", d1.to_string()), ("right", d2.to_string())];
        record_result(
            rec,
            "products/quaternion",
            "product-quaternion-presentation",
            &p,
            c_product(&d1, &d2).map(|q| to_value(&q)),
        );
    }
}

fn bm0_suite(rec: &mut Recorder, s: &mut Sampler, n: usize) {
    for _ in 0..n.max(20) {
        let d = CDescriptor::new(s.nonzero(), s.nonzero(), qi(0));
        let expected = &d.t * &d.t / (qi(4) * &d.a);
        record_result(
            rec,
            "bm0/beta",
            "bm0-invariant",
            &desc_params(&d),
            classify_bm0(&d).and_then(|inv| {
                expect(inv.beta == expected, || format!("β = {}, expected {expected}", inv.beta))?;
                Ok(to_value(&inv))
            }),
        );
    }
}

fn transports_suite(rec: &mut Recorder, s: &mut Sampler, n: usize) {
    for _ in 0..n.max(10) {
        let (a, shift) = (s.nonzero(), s.nonzero());
        let d = CDescriptor::new(a.clone(), qi(0), qi(1));
        let expected = CDescriptor::new(&a + &shift / qi(2), shift.clone(), qi(1));
        record_result(
            rec,
            "transports/psi",
            "psi-transport",
            &[("a", a.to_string()), ("s", shift.to_string())],
            psi_transport(&d, &shift).and_then(|out| {
                expect(out == expected, || format!("got {out}, expected {expected}"))?;
                let back = psi_inverse(&out, &shift)?;
                expect(back == d, || format!("inverse gives {back}"))?;
                Ok(json!(out.to_string()))
            }),
        );

        let (a, t) = (s.nonzero(), s.nonzero());
        let d = CDescriptor::new(a.clone(), qi(1), t.clone());
        let expected = CDescriptor::new(a.clone(), t.clone(), qi(1));
        record_result(
            rec,
            "transports/phi",
            "phi-transport",
            &[("a", a.to_string()), ("t", t.to_string())],
            phi_transport(&d).and_then(|out| {
                expect(out == expected, || format!("got {out}, expected {expected}"))?;
                let back = phi_inverse(&out)?;
                expect(back == d, || format!("inverse gives {back}"))?;
                Ok(json!(out.to_string()))
            }),
        );
    }
    for _ in 0..3 {
        let (t, sv) = (s.nonzero(), s.nonzero());
        record_result(
            rec,
            "transports/intersections",
            "image-intersections",
            &[("t", t.to_string()), ("s", sv.to_string())],
            intersection_report(&t, &sv).map(|r| to_value(&r)),
        );
    }
}

fn aut_suite(rec: &mut Recorder, s: &mut Sampler, n: usize) {
    for _ in 0..n.max(20) {
        let d = s.descriptor();
        let alpha = s.nonzero();
        let expected = CDescriptor::new(d.a.clone(), &alpha * &d.t, &d.s / &alpha);
        let mut p = desc_params(&d);
        p.push(("alpha", alpha.to_string()));
        record_result(
            rec,
            "aut/conjugate",
            "automorphism-action",
            &p,
            aut_conjugate(&d, &alpha).and_then(|out| {
                expect(out == expected, || format!("got {out}, expected {expected}"))?;
                Ok(json!(out.to_string()))
            }),
        );
    }
    for _ in 0..3 {
        let alpha = s.nonzero();
        record_result(
            rec,
            "aut/end-h-alpha",
            "automorphism-endomorphism-algebra",
            &[("alpha", alpha.to_string())],
            aut_algebra(&alpha).and_then(|a| {
                expect(is_h_azumaya(&a), || "End(H_α) is not H-Azumaya".into())?;
                Ok(Value::Null)
            }),
        );
    }
}

fn kernel_suite(rec: &mut Recorder, _s: &mut Sampler, _n: usize) {
    match kernel_witness() {
        Ok(k) => {
            for item in &k.report.items {
                let ok = item.passed();
                let payload = if ok { Value::Null } else { to_value(&item.violations) };
                rec.record(&format!("kernel/{}", item.name), "kernel-witness", &[], ok, payload);
            }
            rec.record(
                "kernel/strongly-inner-branches",
                "kernel-witness",
                &[],
                k.search.witness.is_none() && k.search.branches.iter().all(|b| b.failure.is_some()),
                to_value(&k.search),
            );
        }
        Err(e) => rec.record_error("kernel/witness", "kernel-witness", &[], &e),
    }
}

fn rn_suite(rec: &mut Recorder, s: &mut Sampler, n: usize) {
    let d = dh4();
    let e = e2_arc();
    let t = t_morphism();
    rec.record_report("rn/T/hopf-map", "t-morphism", &[], &t.check(d.hopf(), &e));
    rec.record("rn/T/surjective", "t-morphism", &[], t.matrix.rank() == 8, Value::Null);
    let pushed = d.r().push(&t, &e);
    rec.record(
        "rn/pushforward",
        "rn-pushforward",
        &[],
        pushed.r == build_rn().r,
        Value::Null,
    );
    rec.record_report("rn/quasitriangular", "rn-quasitriangular", &[], &build_rn().check(&e).axioms);
    for _ in 0..n.max(10) {
        let (l, m) = (s.nonzero(), s.nonzero());
        let p = [("lambda", l.to_string()), ("mu", m.to_string())];
        let th = theta(&l, &m);
        rec.record_report("rn/theta/hopf-map", "theta-morphism", &p, &th.check(&e, &h4_arc()));
        let lm = &l * &m;
        rec.record(
            "rn/theta/push",
            "theta-push-rn",
            &p,
            build_rn().push(&th, &h4_arc()).r == r_t(&lm).r,
            Value::Null,
        );
        let a = s.nonzero();
        let mut pa = p.to_vec();
        pa.push(("a", a.to_string()));
        record_result(
            rec,
            "rn/pullback-round-trip",
            "theta-t-pullback",
            &pa,
            (|| {
                let start = build_c(&CDescriptor::new(a.clone(), qi(1), lm.clone()));
                let back = t_star(&theta_star(&start.module(), &l, &m)?)?;
                let expected = CDescriptor::new(a.clone(), l.clone(), m.clone());
                let got = descriptor_of(&back);
                expect(got.as_ref() == Some(&expected), || format!("got {got:?}, expected {expected}"))?;
                expect(e2::bq_grad_member(&back)?, || "gradings differ".into())?;
                Ok(Value::Null)
            })(),
        );
    }
}

/// A random nonzero element of the given parity in the `c`-eigenbasis.
fn homogeneous(s: &mut Sampler, a: &YdAlgebra, parity: &[u8], want: u8) -> Vector {
    let slots: Vec<usize> = (0..parity.len()).filter(|&i| parity[i] == want).collect();
    let forced = slots[s.index(slots.len())];
    let mut v = zero_vec(a.dim());
    for &i in &slots {
        if i == forced || s.coin() {
            vec_axpy(&mut v, &s.nonzero(), &a.alg.basis(i));
        }
    }
    v
}

fn sample_e2_c(s: &mut Sampler) -> (CDescriptor, YdAlgebra) {
    let (a, l, m) = (s.nonzero(), s.nonzero(), s.nonzero());
    let d = CDescriptor::new(a.clone(), l.clone(), m.clone());
    let c = c_over_e2(&a, &l, &m).expect("sampled parameters are valid");
    (d, c)
}

fn appendix_suite(rec: &mut Recorder, s: &mut Sampler, n: usize) {
    let triples = n.max(50);
    let mut done = 0;
    while done < triples {
        let (d1, c1) = sample_e2_c(s);
        let (d2, c2) = sample_e2_c(s);
        let p = match sharp_product(&c1, &c2) {
            Ok(p) => p,
            Err(e) => {
                rec.record_error("appendix/decompositions", "rn-decompositions", &[], &e);
                return;
            }
        };
        let parity = crate::algebra::Grading::from_involution(&p.action[e2::C], "c-action")
            .expect("c acts by ±1 on the product basis")
            .parity;
        let dec = match Decomposer::new(&p) {
            Ok(x) => x,
            Err(e) => {
                rec.record_error("appendix/decompositions", "rn-decompositions", &[], &e);
                return;
            }
        };
        for _ in 0..10 {
            let ps: Vec<u8> = (0..3).map(|_| s.coin() as u8).collect();
            let x = homogeneous(s, &p, &parity, ps[0]);
            let y = homogeneous(s, &p, &parity, ps[1]);
            let z = homogeneous(s, &p, &parity, ps[2]);
            let params = [
                ("left", d1.to_string()),
                ("right", d2.to_string()),
                ("x", format!("{x:?}")),
                ("y", format!("{y:?}")),
                ("z", format!("{z:?}")),
            ];
            record_result(
                rec,
                "appendix/decompositions",
                "rn-decompositions",
                &params,
                dec.at(&x, &y, &z).and_then(|r| {
                    expect(r.braiding && r.f && r.g, || format!("{r:?}"))?;
                    Ok(Value::Null)
                }),
            );
            done += 1;
        }
    }

    let mut corpus: Vec<(String, YdAlgebra)> = Vec::new();
    while corpus.len() < 6 {
        let (d, c) = sample_e2_c(s);
        if is_h_azumaya(&c) {
            corpus.push((format!("{d} over E(2)"), c));
        }
    }
    let mut products = 0;
    while products < 4 {
        let (d1, c1) = sample_e2_c(s);
        let (d2, c2) = sample_e2_c(s);
        if let Ok(p) = sharp_product(&c1, &c2) {
            if is_h_azumaya(&p) {
                corpus.push((format!("{d1} # {d2} over E(2)"), p));
                products += 1;
            }
        }
    }
    for _ in 0..3 {
        let t = s.nonzero_avoiding(&[qi(1)]);
        let q = s.nonzero_avoiding(&[qi(2)]);
        let one = qi(1);
        if let (Ok(l), Ok(r)) = (c_over_e2(&one, &t, &qi(2)), c_over_e2(&one, &one, &q)) {
            if let Ok(p) = sharp_product(&l, &r) {
                corpus.push((format!("C(1;{t},2) # C(1;1,{q}) over E(2)"), p));
            }
        }
    }
    corpus.push((
        "M2 with trivial action".into(),
        with_rn(&ModuleAlgebra::trivial(e2_arc(), StructureAlgebra::endomorphism(2))),
    ));
    if let Ok(k) = kernel_witness() {
        corpus.push(("End(P)".into(), k.end_p));
    }
    let (mut inner, mut non_inner) = (0, 0);
    for (name, a) in &corpus {
        let r = theorem61_check(a);
        if let Ok(r) = &r {
            if r.x1_inner {
                inner += 1;
            } else {
                non_inner += 1;
            }
        }
        record_result(
            rec,
            "appendix/inner-gcs-equivalence",
            "inner-actions-vs-graded-central-simple",
            &[("algebra", name.clone())],
            r.and_then(|r| {
                expect(r.azumaya && r.equivalent, || format!("{r:?}"))?;
                expect(r.addendum_consistent != Some(false), || format!("{r:?}"))?;
                Ok(to_value(&r))
            }),
        );
    }
    rec.record(
        "appendix/corpus-mixed",
        "inner-actions-vs-graded-central-simple",
        &[("size", corpus.len().to_string())],
        corpus.len() >= 10 && inner > 0 && non_inner > 0,
        json!({"inner": inner, "non_inner": non_inner}),
    );

    for _ in 0..n.max(5).min(10) {
        let t = s.nonzero_avoiding(&[qi(1)]);
        let q = s.nonzero_avoiding(&[qi(2)]);
        let p = [("t", t.to_string()), ("q", q.to_string())];
        record_result(
            rec,
            "appendix/non-closure",
            "non-closure-under-product",
            &p,
            not_subgroup_demo(&t, &q).and_then(|r| {
                expect(r.closure_fails, || r.report.to_string())?;
                Ok(json!({"witness": "X - Y", "product": to_value(&r.product)}))
            }),
        );
    }

    let nil = nil_module(s.nonzero(), s.nonzero());
    for (name, a) in corpus.iter().take(8) {
        record_result(
            rec,
            "appendix/end-q-stability",
            "inner-actions-under-end-q",
            &[("algebra", name.clone())],
            prop62_instance_check(a, &nil).and_then(|r| {
                expect(r.consistent && r.double_centralizer, || format!("{r:?}"))?;
                Ok(to_value(&r))
            }),
        );
    }
}

/// `k²` with `c = diag(1, −1)`, `x1 = p E_21`, `x2 = q E_21`.
pub fn nil_module(p: Rational, q: Rational) -> Vec<Matrix> {
    let c = Matrix::diag(&[qi(1), qi(-1)]);
    let e21 = Matrix::from_i64(2, 2, &[0, 0, 1, 0]);
    let (x1, x2) = (e21.scale(&p), e21.scale(&q));
    (0..8)
        .map(|idx| {
            let mut m = Matrix::identity(2);
            if idx & 1 == 1 {
                m = m.dot(&c);
            }
            if idx & 2 != 0 {
                m = m.dot(&x1);
            }
            if idx & 4 != 0 {
                m = m.dot(&x2);
            }
            m
        })
        .collect()
}

/// Runs one suite.
pub fn run_suite(id: &str, seed: u64, samples: usize) -> Result<SuiteReport> {
    let body: fn(&mut Recorder, &mut Sampler, usize) = match id {
        "hopf" => hopf_suite,
        "triangular" => triangular_suite,
        "c-family" => c_family_suite,
        "products" => products_suite,
        "bm0" => bm0_suite,
        "transports" => transports_suite,
        "aut" => aut_suite,
        "kernel" => kernel_suite,
        "rn" => rn_suite,
        "appendix" => appendix_suite,
        other => {
            return Err(Error::Precondition(format!(
                "unknown suite {other:?}; expected one of {} or all",
                SUITES.join(", ")
            )))
        }
    };
    let start = Instant::now();
    let mut rec = Recorder::new(seed);
    let mut sampler = Sampler::new(seed, id);
    body(&mut rec, &mut sampler, samples);
    Ok(SuiteReport::new(id, rec.finish(), start.elapsed().as_millis()))
}

/// Runs `suite` (or every suite for `"all"`).
pub fn run(suite: &str, seed: u64, samples: usize) -> Result<VerificationReport> {
    let ids: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let reports = ids
        .iter()
        .map(|id| run_suite(id, seed, samples))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::new(suite, seed, samples, reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(matches!(run("nope", 1, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn small_suites_pass() {
        for id in ["products", "aut"] {
            let r = run_suite(id, 5, 3).unwrap();
            assert!(r.passed(), "{:?}", r.records.iter().find(|x| x.status == crate::report::Status::Fail));
            assert_eq!(r.summary.total, 20 + if id == "aut" { 3 } else { 0 });
        }
    }
}
