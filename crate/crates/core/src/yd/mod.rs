//! Yetter–Drinfeld modules and module algebras over a finite-dimensional
//! Hopf algebra `H`.
//!
//! Actions are stored as one `dim A × dim A` matrix per basis element of
//! `H`. A coaction is a single `(dim A · dim H) × dim A` matrix whose column
//! `a` is `ρ(e_a)` in the basis `e_b ⊗ e_k` at index `b * dim H + k`.
//! Comodule algebras are right `H^op`-comodule algebras:
//! `ρ(ab) = a_0 b_0 ⊗ b_1 a_1`.

mod azumaya;
mod centralizer;
mod constructions;
mod double;
mod grading;
mod inner;

pub use azumaya::{fg_maps, is_h_azumaya, FgMaps};
pub use centralizer::{yd_centralizers, Centralizers};
pub use constructions::{
    end_yd, h_opposite, induced_action, induced_coaction, sharp_product, EndVariant,
};
pub use double::{from_double, to_double};
pub use grading::{braiding_psi, gradings, Gradings};
pub use inner::{
    grouplike_inner, inner_witness, strongly_inner_witness, strongly_inner_witness_e2, BranchOutcome, E2Search,
    E2Witness, StrongWitness,
};

use std::sync::Arc;

use crate::algebra::StructureAlgebra;
use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{vec_axpy, vec_kron, zero_vec, Matrix, Vector};
use crate::rational::Rational;
use crate::tensor::Tensor;

/// `Σ_i h_i · action[i]`.
pub fn act_matrix(action: &[Matrix], h: &[Rational]) -> Matrix {
    let n = action[0].rows();
    let mut m = Matrix::zeros(n, n);
    for (c, a) in h.iter().zip(action) {
        if !c.is_zero() {
            m = m.add(&a.scale(c)).expect("action matrices share a shape");
        }
    }
    m
}

/// `ρ(e_a)` as `(b, k, coefficient)` triples.
pub(crate) fn coact_terms(coaction: &Matrix, nh: usize, a: usize) -> Vec<(usize, usize, Rational)> {
    (0..coaction.rows())
        .filter_map(|idx| {
            let c = coaction.get(idx, a);
            (!c.is_zero()).then(|| (idx / nh, idx % nh, c.clone()))
        })
        .collect()
}

fn same_hopf(a: &Arc<HopfAlgebra>, b: &Arc<HopfAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn check_action_shape(h: &HopfAlgebra, n: usize, action: &[Matrix]) -> Result<()> {
    if action.len() != h.dim() || action.iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::Dimension(format!(
            "action needs {} matrices of size {n}x{n}",
            h.dim()
        )));
    }
    Ok(())
}

fn check_coaction_shape(h: &HopfAlgebra, n: usize, coaction: &Matrix) -> Result<()> {
    if coaction.rows() != n * h.dim() || coaction.cols() != n {
        return Err(Error::Dimension(format!(
            "coaction needs shape {}x{n}",
            n * h.dim()
        )));
    }
    Ok(())
}

/// Checks that the matrices define a left `H`-module.
pub fn check_module_action(h: &HopfAlgebra, action: &[Matrix]) -> CheckReport {
    let mut report = CheckReport::new();
    let n = action.first().map(Matrix::rows).unwrap_or(0);
    check_module(h, n, action, &mut report);
    report
}

fn check_module(h: &HopfAlgebra, n: usize, action: &[Matrix], report: &mut CheckReport) {
    let labels = h.labels();
    report.item("unit acts as identity");
    report.expect(act_matrix(action, h.unit()) == Matrix::identity(n), || "1 · m != m".into());
    report.item("module associativity");
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            let lhs = act_matrix(action, &h.alg().basis_product_vec(i, j));
            let rhs = action[i].dot(&action[j]);
            report.expect(lhs == rhs, || format!("({}, {})", labels[i], labels[j]));
        }
    }
}

fn check_comodule(h: &HopfAlgebra, n: usize, coaction: &Matrix, report: &mut CheckReport) {
    let nh = h.dim();
    report.item("comodule coassociativity");
    for a in 0..n {
        let mut lhs = Tensor::zero(3);
        let mut rhs = Tensor::zero(3);
        for (b, k, c) in coact_terms(coaction, nh, a) {
            for (b2, k2, c2) in coact_terms(coaction, nh, b) {
                lhs.add_term(vec![b2, k2, k], &c * &c2);
            }
            for (kk, c2) in h.delta(k).terms() {
                rhs.add_term(vec![b, kk[0], kk[1]], &c * c2);
            }
        }
        report.expect(lhs == rhs, || format!("e{a}"));
    }
    report.item("comodule counit");
    for a in 0..n {
        let mut v = zero_vec(n);
        for (b, k, c) in coact_terms(coaction, nh, a) {
            v[b] += &c * &h.counit()[k];
        }
        report.expect(v == crate::linalg::unit_vec(n, a), || format!("e{a}"));
    }
}

/// `ρ(l·b) = l_2·b_0 ⊗ l_3 b_1 S⁻¹(l_1)` on basis elements.
fn check_yd_condition(
    h: &HopfAlgebra,
    n: usize,
    action: &[Matrix],
    coaction: &Matrix,
    report: &mut CheckReport,
) {
    let nh = h.dim();
    report.item("Yetter-Drinfeld compatibility");
    for l in 0..nh {
        let d2 = h.delta2(l);
        for b in 0..n {
            let lb = action[l].column(b);
            let lhs = coaction.act(&lb);
            let mut rhs = zero_vec(n * nh);
            for (xyz, c) in d2.terms() {
                let s_inv = h.antipode_inv().column(xyz[0]);
                for (b0, k, d) in coact_terms(coaction, nh, b) {
                    let left = action[xyz[1]].column(b0);
                    let right = h.mul(&h.mul(&h.basis(xyz[2]), &h.basis(k)), &s_inv);
                    vec_axpy(&mut rhs, &(c * &d), &vec_kron(&left, &right));
                }
            }
            report.expect(lhs == rhs, || format!("l = {}, b = e{b}", h.labels()[l]));
        }
    }
}

fn check_module_algebra(h: &HopfAlgebra, alg: &StructureAlgebra, action: &[Matrix], report: &mut CheckReport) {
    let n = alg.dim();
    report.item("h · 1 = ε(h) 1");
    for i in 0..h.dim() {
        let lhs = action[i].act(alg.unit());
        let rhs = alg.scalar(&h.counit()[i]);
        report.expect(lhs == rhs, || h.labels()[i].clone());
    }
    report.item("h · (ab) = (h_1 · a)(h_2 · b)");
    for i in 0..h.dim() {
        for a in 0..n {
            for b in 0..n {
                let lhs = action[i].act(&alg.basis_product_vec(a, b));
                let mut rhs = zero_vec(n);
                for (xy, c) in h.delta(i).terms() {
                    let p = alg.mul(&action[xy[0]].column(a), &action[xy[1]].column(b));
                    vec_axpy(&mut rhs, c, &p);
                }
                report.expect(lhs == rhs, || {
                    format!("h = {}, a = {}, b = {}", h.labels()[i], alg.labels()[a], alg.labels()[b])
                });
            }
        }
    }
}

fn check_comodule_algebra(h: &HopfAlgebra, alg: &StructureAlgebra, coaction: &Matrix, report: &mut CheckReport) {
    let n = alg.dim();
    let nh = h.dim();
    report.item("ρ(1) = 1 ⊗ 1");
    report.expect(coaction.act(alg.unit()) == vec_kron(alg.unit(), h.unit()), || "ρ(1)".into());
    report.item("ρ(ab) = a_0 b_0 ⊗ b_1 a_1");
    for a in 0..n {
        let ra = coact_terms(coaction, nh, a);
        for b in 0..n {
            let lhs = coaction.act(&alg.basis_product_vec(a, b));
            let mut rhs = zero_vec(n * nh);
            for (a0, a1, c) in &ra {
                for (b0, b1, d) in coact_terms(coaction, nh, b) {
                    let left = alg.basis_product_vec(*a0, b0);
                    let right = h.alg().basis_product_vec(b1, *a1);
                    vec_axpy(&mut rhs, &(c * &d), &vec_kron(&left, &right));
                }
            }
            report.expect(lhs == rhs, || format!("a = {}, b = {}", alg.labels()[a], alg.labels()[b]));
        }
    }
}

/// A left `H`-module algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebra {
    pub hopf: Arc<HopfAlgebra>,
    pub alg: StructureAlgebra,
    pub action: Vec<Matrix>,
}

impl ModuleAlgebra {
    pub fn new(hopf: Arc<HopfAlgebra>, alg: StructureAlgebra, action: Vec<Matrix>) -> Result<Self> {
        check_action_shape(&hopf, alg.dim(), &action)?;
        Ok(ModuleAlgebra { hopf, alg, action })
    }

    /// `h · a = ε(h) a`.
    pub fn trivial(hopf: Arc<HopfAlgebra>, alg: StructureAlgebra) -> Self {
        let n = alg.dim();
        let action = hopf
            .counit()
            .iter()
            .map(|c| Matrix::identity(n).scale(c))
            .collect();
        ModuleAlgebra { hopf, alg, action }
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn act(&self, h: &[Rational], a: &[Rational]) -> Vector {
        act_matrix(&self.action, h).act(a)
    }

    pub fn check(&self) -> CheckReport {
        let mut report = self.alg.check_axioms();
        check_module(&self.hopf, self.dim(), &self.action, &mut report);
        check_module_algebra(&self.hopf, &self.alg, &self.action, &mut report);
        report
    }

    /// Pulls the action back along `f: K → H`: `k · a = f(k) · a`.
    pub fn restrict_along(&self, f: &Matrix, source: Arc<HopfAlgebra>) -> Result<ModuleAlgebra> {
        if f.rows() != self.hopf.dim() || f.cols() != source.dim() {
            return Err(Error::Dimension("morphism does not map into the acting Hopf algebra".into()));
        }
        let action = (0..source.dim())
            .map(|i| act_matrix(&self.action, &f.column(i)))
            .collect();
        ModuleAlgebra::new(source, self.alg.clone(), action)
    }
}

/// A right `H^op`-comodule algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra {
    pub hopf: Arc<HopfAlgebra>,
    pub alg: StructureAlgebra,
    pub coaction: Matrix,
}

impl ComoduleAlgebra {
    pub fn new(hopf: Arc<HopfAlgebra>, alg: StructureAlgebra, coaction: Matrix) -> Result<Self> {
        check_coaction_shape(&hopf, alg.dim(), &coaction)?;
        Ok(ComoduleAlgebra { hopf, alg, coaction })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn check(&self) -> CheckReport {
        let mut report = self.alg.check_axioms();
        check_comodule(&self.hopf, self.dim(), &self.coaction, &mut report);
        check_comodule_algebra(&self.hopf, &self.alg, &self.coaction, &mut report);
        report
    }
}

/// A Yetter–Drinfeld module algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdAlgebra {
    pub hopf: Arc<HopfAlgebra>,
    pub alg: StructureAlgebra,
    pub action: Vec<Matrix>,
    pub coaction: Matrix,
}

impl YdAlgebra {
    pub fn new(
        hopf: Arc<HopfAlgebra>,
        alg: StructureAlgebra,
        action: Vec<Matrix>,
        coaction: Matrix,
    ) -> Result<Self> {
        check_action_shape(&hopf, alg.dim(), &action)?;
        check_coaction_shape(&hopf, alg.dim(), &coaction)?;
        Ok(YdAlgebra {
            hopf,
            alg,
            action,
            coaction,
        })
    }

    /// Action through the counit and coaction `a ↦ a ⊗ 1`.
    pub fn trivial(hopf: Arc<HopfAlgebra>, alg: StructureAlgebra) -> Self {
        let module = ModuleAlgebra::trivial(hopf.clone(), alg);
        let coaction = trivial_coaction(&hopf, module.dim());
        YdAlgebra {
            hopf,
            alg: module.alg,
            action: module.action,
            coaction,
        }
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn act(&self, h: &[Rational], a: &[Rational]) -> Vector {
        act_matrix(&self.action, h).act(a)
    }

    /// `ρ(a)` as an arity-2 tensor over `A ⊗ H`.
    pub fn coact(&self, a: &[Rational]) -> Tensor {
        Tensor::from_dense2(&self.coaction.act(a), self.hopf.dim())
    }

    pub(crate) fn coact_basis(&self, a: usize) -> Vec<(usize, usize, Rational)> {
        coact_terms(&self.coaction, self.hopf.dim(), a)
    }

    pub fn module(&self) -> ModuleAlgebra {
        ModuleAlgebra {
            hopf: self.hopf.clone(),
            alg: self.alg.clone(),
            action: self.action.clone(),
        }
    }

    pub fn comodule(&self) -> ComoduleAlgebra {
        ComoduleAlgebra {
            hopf: self.hopf.clone(),
            alg: self.alg.clone(),
            coaction: self.coaction.clone(),
        }
    }

    /// Forgets the multiplication.
    pub fn yd_module(&self) -> YdModule {
        YdModule {
            hopf: self.hopf.clone(),
            dim: self.dim(),
            action: self.action.clone(),
            coaction: self.coaction.clone(),
        }
    }

    pub fn with_algebra(&self, alg: StructureAlgebra) -> YdAlgebra {
        YdAlgebra {
            alg,
            ..self.clone()
        }
    }

    pub fn check(&self) -> CheckReport {
        let mut report = self.alg.check_axioms();
        let n = self.dim();
        check_module(&self.hopf, n, &self.action, &mut report);
        check_module_algebra(&self.hopf, &self.alg, &self.action, &mut report);
        check_comodule(&self.hopf, n, &self.coaction, &mut report);
        check_comodule_algebra(&self.hopf, &self.alg, &self.coaction, &mut report);
        check_yd_condition(&self.hopf, n, &self.action, &self.coaction, &mut report);
        report
    }
}

/// A Yetter–Drinfeld module without multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdModule {
    pub hopf: Arc<HopfAlgebra>,
    pub dim: usize,
    pub action: Vec<Matrix>,
    pub coaction: Matrix,
}

impl YdModule {
    pub fn new(hopf: Arc<HopfAlgebra>, dim: usize, action: Vec<Matrix>, coaction: Matrix) -> Result<Self> {
        check_action_shape(&hopf, dim, &action)?;
        check_coaction_shape(&hopf, dim, &coaction)?;
        Ok(YdModule {
            hopf,
            dim,
            action,
            coaction,
        })
    }

    pub fn trivial(hopf: Arc<HopfAlgebra>, dim: usize) -> Self {
        let action = hopf
            .counit()
            .iter()
            .map(|c| Matrix::identity(dim).scale(c))
            .collect();
        let coaction = trivial_coaction(&hopf, dim);
        YdModule {
            hopf,
            dim,
            action,
            coaction,
        }
    }

    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new();
        check_module(&self.hopf, self.dim, &self.action, &mut report);
        check_comodule(&self.hopf, self.dim, &self.coaction, &mut report);
        check_yd_condition(&self.hopf, self.dim, &self.action, &self.coaction, &mut report);
        report
    }
}

pub(crate) fn trivial_coaction(hopf: &HopfAlgebra, n: usize) -> Matrix {
    let cols: Vec<Vector> = (0..n)
        .map(|a| vec_kron(&crate::linalg::unit_vec(n, a), hopf.unit()))
        .collect();
    Matrix::from_columns(n * hopf.dim(), &cols).expect("consistent shape")
}

/// Whether `f: A → B` is a bijective algebra map commuting with both the
/// actions and the coactions.
pub fn is_yd_isomorphism(a: &YdAlgebra, b: &YdAlgebra, f: &Matrix) -> bool {
    if !same_hopf(&a.hopf, &b.hopf) || f.rows() != b.dim() || f.cols() != a.dim() {
        return false;
    }
    if !f.is_square() || !f.is_invertible().unwrap_or(false) {
        return false;
    }
    if !a.alg.is_algebra_map(&b.alg, f) {
        return false;
    }
    let commutes_action = a
        .action
        .iter()
        .zip(&b.action)
        .all(|(x, y)| f.dot(x) == y.dot(f));
    let f_id = crate::linalg::kron(f, &Matrix::identity(a.hopf.dim()));
    commutes_action && f_id.dot(&a.coaction) == b.coaction.dot(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::algebra_from_table;
    use crate::hopf::h4;
    use crate::rational::{q, qi};

    /// `C(a;t,s)` written out by hand on the basis `1, x`.
    pub(crate) fn c_alg(a: Rational, t: Rational, s: Rational) -> YdAlgebra {
        let h = Arc::new(h4());
        let alg = StructureAlgebra::from_fn(vec!["1".into(), "x".into()], vec![qi(1), qi(0)], |i, j| {
            match (i, j) {
                (0, k) | (k, 0) => crate::linalg::unit_vec(2, k),
                _ => vec![a.clone(), qi(0)],
            }
        });
        let g = Matrix::diag(&[qi(1), qi(-1)]);
        let nil = Matrix::from_rows(vec![vec![qi(0), t.clone()], vec![qi(0), qi(0)]]).unwrap();
        let action = vec![Matrix::identity(2), g, nil.clone(), nil];
        let mut coaction = Matrix::zeros(8, 2);
        coaction.set(0, 0, qi(1));
        coaction.set(4 + 1, 1, qi(1));
        coaction.set(2, 1, s);
        YdAlgebra::new(h, alg, action, coaction).unwrap()
    }

    #[test]
    fn c_family_is_yd() {
        for (a, t, s) in [(qi(1), qi(2), qi(3)), (q(-1, 2), qi(0), q(5, 7)), (qi(0), qi(0), qi(0))] {
            let c = c_alg(a, t, s);
            let report = c.check();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn trivial_action_with_c_coaction_breaks_yd_condition() {
        let c = c_alg(qi(2), qi(1), qi(1));
        let trivial = ModuleAlgebra::trivial(c.hopf.clone(), c.alg.clone());
        let mixed = YdAlgebra { action: trivial.action, ..c };
        let report = mixed.check();
        assert!(!report.get("Yetter-Drinfeld compatibility").unwrap().passed());
        assert!(report.get("ρ(ab) = a_0 b_0 ⊗ b_1 a_1").unwrap().passed());
        assert!(report.get("h · (ab) = (h_1 · a)(h_2 · b)").unwrap().passed());
    }

    #[test]
    fn dropping_the_s_term_stays_in_the_family() {
        let mut c = c_alg(qi(2), qi(1), qi(1));
        c.coaction.set(2, 1, qi(0));
        assert_eq!(c, c_alg(qi(2), qi(1), qi(0)));
        assert!(c.check().passed());
    }

    #[test]
    fn trivial_structure_is_yd() {
        let alg = algebra_from_table(&["1", "x"], 0, &[&[(0, 1)], &[(1, 1)], &[(1, 1)], &[(0, 3)]]);
        let t = YdAlgebra::trivial(Arc::new(h4()), alg);
        assert!(t.check().passed());
        assert!(YdModule::trivial(Arc::new(h4()), 3).check().passed());
    }

    #[test]
    fn scaling_x_is_a_yd_isomorphism() {
        let c = c_alg(qi(2), qi(1), qi(3));
        assert!(is_yd_isomorphism(&c, &c, &Matrix::identity(2)));
        let d = c_alg(q(1, 2), q(1, 2), q(3, 2));
        let alpha = Matrix::diag(&[qi(1), qi(2)]);
        assert!(is_yd_isomorphism(&c, &d, &alpha));
        assert!(!is_yd_isomorphism(&c, &d, &Matrix::identity(2)));
    }
}
