//! The triangular structures `R_t`, the cotriangular forms `r_t` and the
//! lazy cocycles `σ_t` of `H_4`, and twisting of comodule algebras.

use serde::Serialize;

use super::h4_arc;
use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::hopf::{CoQtStructure, HopfAlgebra, QtStructure};
use crate::linalg::{vec_axpy, zero_vec, Matrix, Vector};
use crate::rational::{q, qi, Rational};
use crate::tensor::Tensor;
use crate::yd::ComoduleAlgebra;

/// `R_t = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) + t/2 (h⊗h + h⊗gh + gh⊗gh − gh⊗h)`.
pub fn r_t(t: &Rational) -> QtStructure {
    let half = q(1, 2);
    let ht = &half * t;
    let mut r = Tensor::zero(2);
    for (i, j, c) in [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, -1)] {
        r.add_term(vec![i, j], &half * qi(c));
    }
    for (i, j, c) in [(2, 2, 1), (2, 3, 1), (3, 3, 1), (3, 2, -1)] {
        r.add_term(vec![i, j], &ht * qi(c));
    }
    QtStructure::new(&h4_arc(), r)
}

/// The cotriangular form `r_t`, rows indexed by the first argument.
pub fn r_t_form(t: &Rational) -> CoQtStructure {
    let z = qi(0);
    let table = Matrix::from_rows(vec![
        vec![qi(1), qi(1), z.clone(), z.clone()],
        vec![qi(1), qi(-1), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), t.clone(), -t.clone()],
        vec![z.clone(), z, t.clone(), t.clone()],
    ])
    .expect("4x4");
    CoQtStructure::new(&h4_arc(), table)
}

/// A bilinear form `σ` on `H_4` with `table[i][j] = σ(e_i ⊗ e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LazyCocycle {
    pub t: Rational,
    pub table: Matrix,
}

/// `σ_t`: `σ(1|g ⊗ 1|g) = 1`, `σ(h⊗h) = σ(gh⊗h) = t/2`,
/// `σ(h⊗gh) = σ(gh⊗gh) = −t/2`, zero elsewhere. These are the lazy
/// cocycles for `Δ(h) = 1⊗h + h⊗g`.
pub fn build_sigma(t: &Rational) -> LazyCocycle {
    let ht = t * q(1, 2);
    let z = qi(0);
    let table = Matrix::from_rows(vec![
        vec![qi(1), qi(1), z.clone(), z.clone()],
        vec![qi(1), qi(1), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), ht.clone(), -ht.clone()],
        vec![z.clone(), z, ht.clone(), -ht],
    ])
    .expect("4x4");
    LazyCocycle { t: t.clone(), table }
}

impl LazyCocycle {
    fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let sy = self.table.act(y);
        x.iter().zip(&sy).map(|(a, b)| a * b).sum()
    }

    /// The left cocycle condition and the laziness condition on all basis
    /// triples and pairs.
    pub fn check(&self, h: &HopfAlgebra) -> CheckReport {
        let n = h.dim();
        let s = &self.table;
        let mut report = CheckReport::new();
        report.item("σ(x_1⊗y_1) σ(x_2 y_2⊗z) = σ(y_1⊗z_1) σ(x⊗y_2 z_2)");
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let mut lhs = Rational::zero();
                    for (xx, cx) in h.delta(x).terms() {
                        for (yy, cy) in h.delta(y).terms() {
                            let c = cx * cy * s.get(xx[0], yy[0]);
                            if c.is_zero() {
                                continue;
                            }
                            let prod = h.alg().basis_product_vec(xx[1], yy[1]);
                            lhs += c * self.eval(&prod, &h.basis(z));
                        }
                    }
                    let mut rhs = Rational::zero();
                    for (yy, cy) in h.delta(y).terms() {
                        for (zz, cz) in h.delta(z).terms() {
                            let c = cy * cz * s.get(yy[0], zz[0]);
                            if c.is_zero() {
                                continue;
                            }
                            let prod = h.alg().basis_product_vec(yy[1], zz[1]);
                            rhs += c * self.eval(&h.basis(x), &prod);
                        }
                    }
                    report.expect(lhs == rhs, || {
                        format!("({}, {}, {})", h.labels()[x], h.labels()[y], h.labels()[z])
                    });
                }
            }
        }
        report.item("σ(x_1⊗y_1) x_2 y_2 = x_1 y_1 σ(x_2⊗y_2)");
        for x in 0..n {
            for y in 0..n {
                let mut lhs = zero_vec(n);
                let mut rhs = zero_vec(n);
                for (xx, cx) in h.delta(x).terms() {
                    for (yy, cy) in h.delta(y).terms() {
                        let c = cx * cy;
                        let l = &c * s.get(xx[0], yy[0]);
                        vec_axpy(&mut lhs, &l, &h.alg().basis_product_vec(xx[1], yy[1]));
                        let r = &c * s.get(xx[1], yy[1]);
                        vec_axpy(&mut rhs, &r, &h.alg().basis_product_vec(xx[0], yy[0]));
                    }
                }
                report.expect(lhs == rhs, || format!("({}, {})", h.labels()[x], h.labels()[y]));
            }
        }
        report
    }
}

/// `A_σ`: the same comodule with product `a • b = a_0 b_0 σ(a_1 ⊗ b_1)`.
pub fn cocycle_twist(a: &ComoduleAlgebra, sigma: &LazyCocycle) -> Result<ComoduleAlgebra> {
    let report = sigma.check(&a.hopf);
    if !report.passed() {
        return Err(Error::Precondition(format!("not a lazy cocycle:\n{report}")));
    }
    let (n, nh) = (a.dim(), a.hopf.dim());
    let terms: Vec<_> = (0..n)
        .map(|i| crate::yd::coact_terms(&a.coaction, nh, i))
        .collect();
    let alg = crate::algebra::StructureAlgebra::from_fn(a.alg.labels().to_vec(), a.alg.unit().clone(), |i, j| {
        let mut v: Vector = zero_vec(n);
        for (i0, i1, c) in &terms[i] {
            for (j0, j1, d) in &terms[j] {
                let w = c * d * sigma.table.get(*i1, *j1);
                if !w.is_zero() {
                    vec_axpy(&mut v, &w, &a.alg.basis_product_vec(*i0, *j0));
                }
            }
        }
        v
    });
    let twisted = ComoduleAlgebra::new(a.hopf.clone(), alg, a.coaction.clone())?;
    let report = twisted.check();
    if !report.passed() {
        return Err(Error::Axioms(format!("twisted algebra:\n{report}")));
    }
    Ok(twisted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{h4_dual, phi_h4};
    use crate::sweedler::{build_c, CDescriptor};

    #[test]
    fn r_t_and_r_t_form_agree_through_phi() {
        for t in [qi(0), qi(3), q(-2, 5)] {
            let rt = r_t(&t);
            let check = rt.check(&h4_arc());
            assert!(check.passed() && check.triangular);
            let pushed = rt.push(&phi_h4(), &h4_dual());
            let form = CoQtStructure::from_dual_element(&h4_arc(), &pushed.r);
            assert_eq!(form, r_t_form(&t));
            let c = form.check(&h4_arc());
            assert!(c.passed() && c.triangular);
        }
    }

    #[test]
    fn sigma_is_a_lazy_cocycle() {
        for t in [qi(0), qi(1), q(7, 3)] {
            let s = build_sigma(&t);
            assert!(s.check(&h4_arc()).passed(), "{}", s.check(&h4_arc()));
            assert_eq!(s.table.get(2, 2), &(&t / qi(2)));
            assert_eq!(s.table.get(3, 3), &(-&t / qi(2)));
        }
    }

    #[test]
    fn symmetric_h_block_is_not_a_cocycle() {
        let mut s = build_sigma(&qi(2));
        s.table.set(2, 3, qi(1));
        assert!(!s.check(&h4_arc()).passed());
    }

    #[test]
    fn broken_sigma_is_rejected() {
        let mut s = build_sigma(&qi(1));
        s.table.set(0, 2, qi(1));
        assert!(!s.check(&h4_arc()).passed());
        let c = build_c(&CDescriptor::new(qi(1), qi(0), qi(1))).comodule();
        assert!(cocycle_twist(&c, &s).is_err());
    }

    #[test]
    fn twisting_shifts_x_squared() {
        let (a, s) = (q(2, 3), qi(5));
        let c = build_c(&CDescriptor::new(a.clone(), qi(0), qi(1))).comodule();
        let tw = cocycle_twist(&c, &build_sigma(&s)).unwrap();
        assert_eq!(tw.alg.basis_product_vec(1, 1), vec![&a + &s / qi(2), qi(0)]);
        assert_eq!(cocycle_twist(&c, &build_sigma(&qi(0))).unwrap(), c);
    }
}
