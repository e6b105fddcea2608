//! Inner actions and graded central simplicity for `(E(2), R_N)`-Azumaya
//! algebras: the three-way equivalence, its stability under `# End(Q)`, the
//! failure of closure under `#`, and the splitting of `ψ`, `F`, `G` into
//! their `R_0` parts plus an `x1 ⊗ x2` correction.

use serde::Serialize;

use super::{build_rn, e2_arc, is_graded_central_simple, theta_star, with_rn, C, X1, X2};
use crate::algebra::Grading;
use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::linalg::{vec_axpy, vec_kron, vec_scale, vec_sub, Matrix, Vector};
use crate::rational::{qi, Rational};
use crate::sweedler::{build_c, CDescriptor};
use crate::yd::{
    braiding_psi, end_yd, fg_maps, grouplike_inner, inner_witness, is_h_azumaya, sharp_product, strongly_inner_witness_e2,
    yd_centralizers, EndVariant, YdAlgebra, YdModule,
};

fn over_e2(a: &YdAlgebra) -> Result<()> {
    if *a.hopf != *e2_arc() {
        return Err(Error::Precondition("expected an algebra over E(2)".into()));
    }
    Ok(())
}

/// `C(a;λ,μ)` over `E(2)`: `c·x = −x`, `x1·x = λ`, `x2·x = μ`, with the
/// coaction induced by `R_N`.
pub fn c_over_e2(a: &Rational, lambda: &Rational, mu: &Rational) -> Result<YdAlgebra> {
    let c = build_c(&CDescriptor::new(a.clone(), qi(1), lambda * mu));
    Ok(with_rn(&theta_star(&c.module(), lambda, mu)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem61Report {
    pub azumaya: bool,
    pub x1_inner: bool,
    pub x2_inner: bool,
    pub graded_central_simple: bool,
    /// the three predicates agree (only asserted for Azumaya input)
    pub equivalent: bool,
    pub central_simple: bool,
    /// `c`, `x1` and `x2` each act innerly; `None` when the search for an
    /// invertible conjugator is not exhaustive
    pub e2_inner: Option<bool>,
    /// `e2_inner` agrees with `central_simple`
    pub addendum_consistent: Option<bool>,
    /// an algebra map `E(2) → A` implements the action; `None` when the
    /// branch analysis does not apply
    pub strongly_inner: Option<bool>,
}

/// Evaluates innerness of the `x1`- and `x2`-actions and graded central
/// simplicity, and whether they agree.
pub fn theorem61_check(a: &YdAlgebra) -> Result<Theorem61Report> {
    over_e2(a)?;
    let m = a.module();
    let x1_inner = inner_witness(&m, C, X1)?.is_some();
    let x2_inner = inner_witness(&m, C, X2)?.is_some();
    let gcs = is_graded_central_simple(&m)?;
    let central_simple = a.alg.is_central_simple();
    let c_inner = match grouplike_inner(&m, C) {
        Ok(u) => Some(u.is_some()),
        Err(Error::NotExhaustive(_)) => None,
        Err(e) => return Err(e),
    };
    let e2_inner = c_inner.map(|c| c && x1_inner && x2_inner);
    let strongly_inner = match strongly_inner_witness_e2(&m, C, X1, super::CX2) {
        Ok(search) => Some(search.witness.is_some()),
        Err(Error::NotExhaustive(_) | Error::NoRationalNormalization(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(Theorem61Report {
        azumaya: is_h_azumaya(a),
        x1_inner,
        x2_inner,
        graded_central_simple: gcs,
        equivalent: x1_inner == x2_inner && x2_inner == gcs,
        central_simple,
        e2_inner,
        addendum_consistent: e2_inner.map(|x| x == central_simple),
        strongly_inner,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NonClosureReport {
    pub t: Rational,
    pub q: Rational,
    pub report: CheckReport,
    pub product: Theorem61Report,
    pub closure_fails: bool,
    pub justification: String,
}

/// `C(1;t,2)` and `C(1;1,q)` are graded central simple `(E(2), R_N)`-Azumaya
/// algebras whose product is Azumaya but not graded central simple.
pub fn not_subgroup_demo(t: &Rational, q: &Rational) -> Result<NonClosureReport> {
    if t.is_zero() || t.is_one() || *q == qi(2) {
        return Err(Error::Precondition(format!("need t ∉ {{0, 1}} and q ≠ 2, got t = {t}, q = {q}")));
    }
    let one = qi(1);
    let left = c_over_e2(&one, t, &qi(2))?;
    let right = c_over_e2(&one, &one, q)?;
    let mut report = CheckReport::new();
    for (name, f) in [("C(1;t,2)", &left), ("C(1;1,q)", &right)] {
        report.item(format!("{name} is (E(2), R_N)-Azumaya"));
        report.expect(f.check().passed() && is_h_azumaya(f), || "not Azumaya".into());
        report.item(format!("{name} is graded central simple"));
        report.expect(is_graded_central_simple(&f.module())?, || "not graded central simple".into());
    }
    let p = sharp_product(&left, &right)?;
    report.item("the product is (E(2), R_N)-Azumaya");
    report.expect(p.check().passed() && is_h_azumaya(&p), || "not Azumaya".into());

    let alg = &p.alg;
    // basis 1#1, 1#y, x#1, x#y
    let (x, y) = (alg.basis(2), alg.basis(1));
    report.item("X² = 1, Y² = 1, XY + YX = 2");
    let anti = crate::linalg::vec_add(&alg.mul(&x, &y), &alg.mul(&y, &x));
    report.expect(
        alg.as_scalar(&alg.mul(&x, &x)) == Some(one.clone())
            && alg.as_scalar(&alg.mul(&y, &y)) == Some(one.clone())
            && alg.as_scalar(&anti) == Some(qi(2)),
        || "presentation differs".into(),
    );

    let z = vec_sub(&x, &y);
    report.item("X − Y is odd, super-central and not scalar");
    let grading = Grading::from_involution(&p.action[C], "c-action")?;
    let anticommutes = [&x, &y]
        .iter()
        .all(|v| crate::linalg::vec_is_zero(&crate::linalg::vec_add(&alg.mul(&z, v), &alg.mul(v, &z))));
    let center = alg.super_center(&grading)?;
    let mut span = center.clone();
    span.push(z.clone());
    let in_center = Matrix::from_columns(4, &span)?.rank() == Matrix::from_columns(4, &center)?.rank();
    report.expect(
        grading.parity_of(&z) == Some(1) && anticommutes && in_center && alg.as_scalar(&z).is_none(),
        || "X − Y is not an odd super-central element".into(),
    );

    let product = theorem61_check(&p)?;
    report.item("the product is not graded central simple");
    report.expect(!product.graded_central_simple, || "graded central simple".into());
    report.item("neither x1 nor x2 acts innerly on the product");
    report.expect(!product.x1_inner && !product.x2_inner, || format!("{product:?}"));
    report.item("the three predicates agree on the product");
    report.expect(product.equivalent, || format!("{product:?}"));

    let closure_fails = report.passed();
    Ok(NonClosureReport {
        t: t.clone(),
        q: q.clone(),
        report,
        product,
        closure_fails,
        justification: "inner x_i-actions, hence graded central simplicity, are invariant under # End(Q); \
                        the product has neither, so its class has no graded central simple representative"
            .into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop62Report {
    /// `[inner on A, inner on A # End(Q)]` for `x1`
    pub x1: [bool; 2],
    pub x2: [bool; 2],
    /// the left centralizer of `1 # End(Q)` in `A # End(Q)` is `A # 1`
    pub double_centralizer: bool,
    pub consistent: bool,
}

/// Compares innerness of the `x_i`-actions on `A` and on `A # End(Q)` for an
/// `E(2)`-module `Q`, with `End(Q)` carrying the `R_N`-induced structure.
pub fn prop62_instance_check(a: &YdAlgebra, q_action: &[Matrix]) -> Result<Prop62Report> {
    over_e2(a)?;
    let module = YdModule::with_induced_coaction(e2_arc(), q_action.to_vec(), &build_rn())?;
    let report = module.check();
    if !report.passed() {
        return Err(Error::Axioms(format!("Q:\n{report}")));
    }
    let end_q = end_yd(&module, EndVariant::Plain);
    let b = sharp_product(a, &end_q)?;
    let (na, nq) = (a.dim(), end_q.dim());
    let inner = |alg: &YdAlgebra, x: usize| -> Result<bool> { Ok(inner_witness(&alg.module(), C, x)?.is_some()) };
    let x1 = [inner(a, X1)?, inner(&b, X1)?];
    let x2 = [inner(a, X2)?, inner(&b, X2)?];

    let end_part: Vec<Vector> = (0..nq).map(|k| vec_kron(a.alg.unit(), &end_q.alg.basis(k))).collect();
    let a_part: Vec<Vector> = (0..na).map(|i| vec_kron(&a.alg.basis(i), end_q.alg.unit())).collect();
    let centralizer = yd_centralizers(&b, &end_part)?.left;
    let rank = |vs: &[Vector]| Matrix::from_columns(na * nq, vs).map(|m| m.rank()).unwrap_or(0);
    let mut both = centralizer.clone();
    both.extend(a_part.iter().cloned());
    let double_centralizer = centralizer.len() == na && rank(&both) == na;

    Ok(Prop62Report {
        consistent: x1[0] == x1[1] && x2[0] == x2[1],
        x1,
        x2,
        double_centralizer,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub braiding: bool,
    pub f: bool,
    pub g: bool,
}

/// `(−1)^k` for a parity.
fn sign(k: u8) -> Rational {
    Rational::sign_power(k as usize)
}

/// Exact comparison of `ψ`, `F`, `G` with their `R_0` parts plus the
/// `x1 ⊗ x2` corrections:
/// `ψ(v⊗w) = ψ_0(v⊗w) + (−1)^{|w|+1} ψ_0(x1·v ⊗ x2·w)`,
/// `F(a#b)(d) = F_0(a#b)(d) + (−1)^{|d|+1} F_0(a # x1·b)(x2·d)` and
/// `G(a#b)(d) = G_0(a#b)(d) + (−1)^{|a|+1} G_0(x2·a # b)(x1·d)`.
pub struct Decomposer<'a> {
    a: &'a YdAlgebra,
    grading: Grading,
    psi: Matrix,
    f: Matrix,
    g: Matrix,
}

impl<'a> Decomposer<'a> {
    pub fn new(a: &'a YdAlgebra) -> Result<Self> {
        over_e2(a)?;
        if with_rn(&a.module()).coaction != a.coaction {
            return Err(Error::Precondition("the coaction is not the one induced by R_N".into()));
        }
        let grading = Grading::from_involution(&a.action[C], "c-action")?;
        let maps = fg_maps(a);
        Ok(Decomposer {
            a,
            grading,
            psi: braiding_psi(&a.action, &a.action, &build_rn()),
            f: maps.f,
            g: maps.g,
        })
    }

    fn parity(&self, v: &[Rational]) -> Result<u8> {
        self.grading
            .parity_of(v)
            .ok_or_else(|| Error::NonHomogeneous("c-grading".into()))
    }

    /// `M(x#y)(z)` for `M` laid out as in [`fg_maps`].
    fn evaluate(&self, m: &Matrix, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        let n = self.a.dim();
        let e = m.act(&vec_kron(x, y));
        (0..n)
            .map(|d| (0..n).fold(Rational::zero(), |acc, c| acc + &z[c] * &e[c * n + d]))
            .collect()
    }

    /// The three identities at homogeneous `x`, `y`, `z`: `ψ` at `x⊗y`, and
    /// `F`, `G` at `(x#y)(z)`.
    pub fn at(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Result<DecompositionReport> {
        let (px, py, pz) = (self.parity(x)?, self.parity(y)?, self.parity(z)?);
        let alg = &self.a.alg;
        let x1 = |v: &[Rational]| self.a.action[X1].act(v);
        let x2 = |v: &[Rational]| self.a.action[X2].act(v);

        let mut psi = vec_scale(&vec_kron(y, x), &sign(px & py));
        let s = sign(1 - py) * sign((1 - px) & (1 - py));
        vec_axpy(&mut psi, &s, &vec_kron(&x2(y), &x1(x)));

        let xzy = alg.mul3(x, z, y);
        let mut f = vec_scale(&xzy, &sign(py & pz));
        let s = sign(1 - pz) * sign((1 - py) & (1 - pz));
        vec_axpy(&mut f, &s, &alg.mul3(x, &x2(z), &x1(y)));

        let mut g = vec_scale(&xzy, &sign(px & pz));
        let s = sign(1 - px) * sign((1 - px) & (1 - pz));
        vec_axpy(&mut g, &s, &alg.mul3(&x2(x), &x1(z), y));

        Ok(DecompositionReport {
            braiding: self.psi.act(&vec_kron(x, y)) == psi,
            f: self.evaluate(&self.f, x, y, z) == f,
            g: self.evaluate(&self.g, x, y, z) == g,
        })
    }
}

/// The identities of [`Decomposer`] on all basis triples.
pub fn decompositions(a: &YdAlgebra) -> Result<DecompositionReport> {
    let dec = Decomposer::new(a)?;
    let n = a.dim();
    let mut out = DecompositionReport {
        braiding: true,
        f: true,
        g: true,
    };
    for i in 0..n {
        for j in 0..n {
            for c in 0..n {
                let r = dec.at(&a.alg.basis(i), &a.alg.basis(j), &a.alg.basis(c))?;
                out.braiding &= r.braiding;
                out.f &= r.f;
                out.g &= r.g;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StructureAlgebra;
    use crate::rational::q;
    use crate::yd::ModuleAlgebra;

    fn nil_module() -> Vec<Matrix> {
        // Q = k² with c = diag(1, −1), x1 = E_21, x2 = 0
        let c = Matrix::diag(&[qi(1), qi(-1)]);
        let x1 = Matrix::from_i64(2, 2, &[0, 0, 1, 0]);
        let z = Matrix::zeros(2, 2);
        let gens = [Matrix::identity(2), c.clone(), x1.clone(), c.dot(&x1)];
        (0..8)
            .map(|i| if i < 4 { gens[i].clone() } else { z.clone() })
            .collect()
    }

    #[test]
    fn c_over_e2_is_azumaya_and_graded() {
        let c = c_over_e2(&qi(1), &qi(3), &qi(2)).unwrap();
        assert!(c.check().passed());
        assert!(is_h_azumaya(&c));
        // ρ(x) = x ⊗ c + μ 1 ⊗ x1
        assert_eq!(c.coaction.get(X1, 1), &qi(2));
    }

    #[test]
    fn three_predicates_agree_on_c11() {
        let c = c_over_e2(&qi(1), &qi(1), &qi(1)).unwrap();
        let r = theorem61_check(&c).unwrap();
        assert!(r.azumaya && r.x1_inner && r.x2_inner && r.graded_central_simple && r.equivalent);
        assert_eq!(r.addendum_consistent, Some(true));
    }

    #[test]
    fn trivial_actions_on_matrices_are_inner() {
        let m = ModuleAlgebra::trivial(e2_arc(), StructureAlgebra::endomorphism(2));
        let r = theorem61_check(&with_rn(&m)).unwrap();
        assert!(r.x1_inner && r.x2_inner && r.graded_central_simple && r.equivalent);
        assert_eq!(r.e2_inner, Some(true));
        assert_eq!(r.strongly_inner, Some(true));
        assert_eq!(r.addendum_consistent, Some(true));
    }

    #[test]
    fn end_p_is_inner_but_not_strongly_inner() {
        let k = super::super::kernel_witness().unwrap();
        let r = theorem61_check(&k.end_p).unwrap();
        assert!(r.x1_inner && r.x2_inner && r.graded_central_simple && r.central_simple);
        assert_eq!(r.e2_inner, Some(true));
        assert_eq!(r.strongly_inner, Some(false));
        assert_eq!(r.addendum_consistent, Some(true));
    }

    #[test]
    fn non_closure_examples() {
        for (t, qq) in [(qi(2), qi(3)), (qi(3), qi(0)), (q(-1, 2), q(5, 3))] {
            let r = not_subgroup_demo(&t, &qq).unwrap();
            assert!(r.closure_fails, "{}", r.report);
            assert!(!r.product.x1_inner && !r.product.graded_central_simple);
            assert_eq!(r.product.addendum_consistent, Some(true), "{:?}", r.product);
        }
        assert!(not_subgroup_demo(&qi(1), &qi(3)).is_err());
        assert!(not_subgroup_demo(&qi(2), &qi(2)).is_err());
    }

    #[test]
    fn prop62_instances() {
        let c = c_over_e2(&qi(1), &qi(1), &qi(1)).unwrap();
        let r = prop62_instance_check(&c, &nil_module()).unwrap();
        assert_eq!(r.x1, [true, true]);
        assert!(r.consistent && r.double_centralizer);

        let trivial = with_rn(&ModuleAlgebra::trivial(e2_arc(), StructureAlgebra::endomorphism(2)));
        let id: Vec<Matrix> = (0..8)
            .map(|i| if i < 2 { Matrix::identity(1) } else { Matrix::zeros(1, 1) })
            .collect();
        let r = prop62_instance_check(&trivial, &id).unwrap();
        assert!(r.consistent && r.x1[0] && r.x2[0]);

        let p = sharp_product(
            &c_over_e2(&qi(1), &qi(2), &qi(2)).unwrap(),
            &c_over_e2(&qi(1), &qi(1), &qi(3)).unwrap(),
        )
        .unwrap();
        let r = prop62_instance_check(&p, &nil_module()).unwrap();
        assert_eq!(r.x1, [false, false]);
        assert_eq!(r.x2, [false, false]);
        assert!(r.double_centralizer);
    }

    #[test]
    fn decompositions_hold() {
        let c = c_over_e2(&qi(2), &q(1, 3), &qi(-4)).unwrap();
        assert_eq!(decompositions(&c).unwrap(), DecompositionReport { braiding: true, f: true, g: true });
        let p = sharp_product(&c, &c_over_e2(&qi(1), &qi(1), &qi(3)).unwrap()).unwrap();
        assert_eq!(decompositions(&p).unwrap(), DecompositionReport { braiding: true, f: true, g: true });
    }

    #[test]
    fn decompositions_at_homogeneous_combinations() {
        let p = sharp_product(
            &c_over_e2(&qi(1), &qi(3), &qi(2)).unwrap(),
            &c_over_e2(&qi(-2), &qi(1), &q(1, 2)).unwrap(),
        )
        .unwrap();
        let dec = Decomposer::new(&p).unwrap();
        // basis 1#1, 1#y, x#1, x#y: even = {0, 3}, odd = {1, 2}
        let even = vec![qi(2), qi(0), qi(0), q(-1, 3)];
        let odd = vec![qi(0), qi(5), q(1, 2), qi(0)];
        let all = DecompositionReport { braiding: true, f: true, g: true };
        for (x, y, z) in [(&even, &odd, &odd), (&odd, &odd, &even), (&odd, &even, &odd)] {
            assert_eq!(dec.at(x, y, z).unwrap(), all);
        }
        let mixed = vec![qi(1), qi(1), qi(0), qi(0)];
        assert!(matches!(dec.at(&mixed, &odd, &odd), Err(Error::NonHomogeneous(_))));
    }
}
