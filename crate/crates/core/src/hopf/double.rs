//! The Drinfeld double `D(H) = H^{*cop} ⋈ H`.
//!
//! Basis `f_i ⋈ e_j` at index `i * dim H + j`. Multiplication:
//!
//! ```text
//! (f ⋈ h)(f' ⋈ h') = f (h_1 ⇀ f' ↼ S⁻¹(h_3)) ⋈ h_2 h'
//! ```
//!
//! where `(h_1 ⇀ f' ↼ S⁻¹(h_3))(x) = f'(S⁻¹(h_3) x h_1)`. Coproduct
//! `Δ(f ⋈ h) = (f_2 ⋈ h_1) ⊗ (f_1 ⋈ h_2)`, canonical quasitriangular
//! structure `ℛ = Σ_i (ε ⋈ e_i) ⊗ (e_i* ⋈ 1)`.

use std::sync::Arc;

use super::{HopfAlgebra, QtStructure};
use crate::algebra::StructureAlgebra;
use crate::error::Result;
use crate::check::CheckReport;
use crate::linalg::{vec_add, vec_kron, vec_sub, zero_vec, Matrix, Vector};
use crate::tensor::Tensor;

#[derive(Clone, Debug)]
pub struct DrinfeldDouble {
    base: Arc<HopfAlgebra>,
    dual: HopfAlgebra,
    hopf: Arc<HopfAlgebra>,
    r: QtStructure,
}

impl DrinfeldDouble {
    pub fn new(base: &HopfAlgebra) -> Result<Self> {
        Self::over(Arc::new(base.clone()))
    }

    /// The double of a shared Hopf algebra, keeping the same `Arc` as base.
    pub fn over(base_arc: Arc<HopfAlgebra>) -> Result<Self> {
        let base: &HopfAlgebra = &base_arc;
        let n = base.dim();
        let dual = base.dual();
        let dn = n * n;
        let labels: Vec<String> = dual
            .labels()
            .iter()
            .flat_map(|f| base.labels().iter().map(move |h| format!("{f}⋈{h}")))
            .collect();
        let s_inv = base.antipode_inv();

        // x ↦ S⁻¹(e_c) x e_a as a matrix, cached per (a, c)
        let mut sandwich = vec![None; n * n];
        let mut sandwich_of = |a: usize, c: usize| -> Matrix {
            sandwich[a * n + c]
                .get_or_insert_with(|| {
                    let left = base.alg().left_mult(&s_inv.column(c));
                    let right = base.alg().right_mult(&base.basis(a));
                    left.dot(&right).transpose()
                })
                .clone()
        };

        let mut mult = vec![vec![zero_vec(dn); dn]; dn];
        for j in 0..n {
            let d2 = base.delta2(j);
            for (idx, gamma) in d2.terms() {
                let (a, b, c) = (idx[0], idx[1], idx[2]);
                // row m of the transposed sandwich: coefficients of S⁻¹(e_c) e_m e_a
                let sw = sandwich_of(a, c);
                for k in 0..n {
                    // the functional x ↦ f_k(S⁻¹(e_c) x e_a)
                    let functional: Vector = (0..n).map(|m| sw.get(m, k).clone()).collect();
                    for i in 0..n {
                        let f = dual.mul(&dual.basis(i), &functional);
                        for l in 0..n {
                            let h = base.alg().basis_product_vec(b, l);
                            let prod = vec_kron(&f, &h);
                            crate::linalg::vec_axpy(&mut mult[i * n + j][k * n + l], gamma, &prod);
                        }
                    }
                }
            }
        }
        let unit = vec_kron(dual.unit(), base.unit());
        let alg = StructureAlgebra::new(labels, unit, mult)?;

        let mut coproduct = Vec::with_capacity(dn);
        for i in 0..n {
            for j in 0..n {
                let mut t = Tensor::zero(2);
                for (pq, c1) in dual.delta(i).terms() {
                    for (ab, c2) in base.delta(j).terms() {
                        // (f_q ⋈ e_a) ⊗ (f_p ⋈ e_b)
                        t.add_term(vec![pq[1] * n + ab[0], pq[0] * n + ab[1]], c1 * c2);
                    }
                }
                coproduct.push(t);
            }
        }
        let counit: Vector = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| &base.unit()[i] * &base.counit()[j])
            .collect();

        // S(f ⋈ h) = (ε ⋈ S(h)) ((S*)⁻¹(f) ⋈ 1)
        let mut cols = Vec::with_capacity(dn);
        for i in 0..n {
            for j in 0..n {
                let left = vec_kron(dual.unit(), &base.antipode().column(j));
                let right = vec_kron(&dual.antipode_inv().column(i), base.unit());
                cols.push(alg.mul(&left, &right));
            }
        }
        let antipode = Matrix::from_columns(dn, &cols)?;
        let hopf = HopfAlgebra::new(alg, coproduct, counit, antipode)?;

        let mut r = Tensor::zero(2);
        for i in 0..n {
            let left = Tensor::from_vector(&vec_kron(dual.unit(), &base.basis(i)));
            let right = Tensor::from_vector(&vec_kron(&dual.basis(i), base.unit()));
            r = r.add(&left.outer(&right));
        }
        let r = QtStructure::new(&hopf, r);
        Ok(DrinfeldDouble {
            base: base_arc.clone(),
            dual,
            hopf: Arc::new(hopf),
            r,
        })
    }

    pub fn base(&self) -> &Arc<HopfAlgebra> {
        &self.base
    }

    pub fn dual(&self) -> &HopfAlgebra {
        &self.dual
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    /// The canonical quasitriangular structure.
    pub fn r(&self) -> &QtStructure {
        &self.r
    }

    /// `f ⋈ 1` for a functional `f` in the dual basis.
    pub fn embed_dual(&self, f: &[crate::rational::Rational]) -> Vector {
        vec_kron(f, self.base.unit())
    }

    /// `ε ⋈ h`.
    pub fn embed_base(&self, h: &[crate::rational::Rational]) -> Vector {
        vec_kron(self.dual.unit(), h)
    }

    /// `f ⋈ h`.
    pub fn pure(&self, f: &[crate::rational::Rational], h: &[crate::rational::Rational]) -> Vector {
        vec_kron(f, h)
    }
}

/// The ten defining relations of `D(H_4)` in the generators `φ(h) ⋈ 1`,
/// `φ(g) ⋈ 1`, `ε ⋈ g`, `ε ⋈ h`, one report item each.
pub fn h4_double_relations(d: &DrinfeldDouble) -> CheckReport {
    let base = d.base();
    let phi = super::phi_h4();
    let dd = d.hopf();
    let ph = d.embed_dual(&phi.apply(&base.el("h")));
    let pg = d.embed_dual(&phi.apply(&base.el("g")));
    let g = d.embed_base(&base.el("g"));
    let h = d.embed_base(&base.el("h"));
    let one = dd.unit().clone();
    let zero = zero_vec(one.len());
    let m = |x: &Vector, y: &Vector| dd.mul(x, y);
    let anti = |x: &Vector, y: &Vector| vec_add(&m(x, y), &m(y, x));
    let relations: [(&str, Vector, Vector); 10] = [
        ("φ(h)² = 0", m(&ph, &ph), zero.clone()),
        ("φ(g)² = 1", m(&pg, &pg), one.clone()),
        ("φ(h)φ(g) + φ(g)φ(h) = 0", anti(&ph, &pg), zero.clone()),
        ("h² = 0", m(&h, &h), zero.clone()),
        ("hg + gh = 0", anti(&h, &g), zero.clone()),
        ("g² = 1", m(&g, &g), one),
        ("φ(h)g + gφ(h) = 0", anti(&ph, &g), zero.clone()),
        ("φ(g)h + hφ(g) = 0", anti(&pg, &h), zero),
        ("gφ(g) = φ(g)g", m(&g, &pg), m(&pg, &g)),
        ("φ(h)h - hφ(h) = φ(g) - g", vec_sub(&m(&ph, &h), &m(&h, &ph)), vec_sub(&pg, &g)),
    ];
    let mut report = CheckReport::new();
    for (name, lhs, rhs) in relations {
        report.item(name);
        report.expect(lhs == rhs, || "relation fails".into());
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{h4, phi_h4};

    #[test]
    fn double_of_h4_is_a_hopf_algebra() {
        let d = DrinfeldDouble::new(&h4()).unwrap();
        assert_eq!(d.hopf().dim(), 16);
        let report = d.hopf().check_axioms();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn canonical_r_is_quasitriangular() {
        let d = DrinfeldDouble::new(&h4()).unwrap();
        let check = d.r().check(d.hopf());
        assert!(check.axioms.passed(), "{}", check.axioms);
    }

    #[test]
    fn all_ten_relations_hold() {
        let d = DrinfeldDouble::new(&h4()).unwrap();
        let report = h4_double_relations(&d);
        assert_eq!(report.items.len(), 10);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn double_of_group_algebra_is_quasitriangular() {
        let kz2 = crate::hopf::nichols(0, vec!["1".into(), "g".into()]);
        let d = DrinfeldDouble::new(&kz2).unwrap();
        assert_eq!(d.hopf().dim(), 4);
        assert!(d.hopf().check_axioms().passed());
        assert!(d.r().check(d.hopf()).passed());
    }

    #[test]
    fn relation_phi_h_commutator() {
        let d = DrinfeldDouble::new(&h4()).unwrap();
        let h = d.base();
        let phi = phi_h4();
        let ph = d.embed_dual(&phi.apply(&h.el("h")));
        let pg = d.embed_dual(&phi.apply(&h.el("g")));
        let bh = d.embed_base(&h.el("h"));
        let bg = d.embed_base(&h.el("g"));
        let dd = d.hopf();
        let lhs = vec_sub(&dd.mul(&ph, &bh), &dd.mul(&bh, &ph));
        assert_eq!(lhs, vec_sub(&pg, &bg));
        assert_eq!(dd.mul(&bg, &bg), *dd.unit());
        assert_eq!(dd.mul(&pg, &pg), *dd.unit());
        assert!(crate::linalg::vec_is_zero(&vec_add(&dd.mul(&pg, &bh), &dd.mul(&bh, &pg))));
    }
}
