//! New YD algebras from old: `H`-opposites, `#` products, endomorphism
//! algebras, and structures induced by (co)quasitriangular data.

use std::sync::Arc;

use super::{act_matrix, coact_terms, same_hopf, ComoduleAlgebra, ModuleAlgebra, YdAlgebra, YdModule};
use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::hopf::{CoQtStructure, HopfAlgebra, QtStructure};
use crate::linalg::{kron, vec_axpy, vec_kron, zero_vec, Matrix, Vector};

/// The `H`-opposite algebra: same structure maps, product `a∘c = c_0 (c_1 · a)`.
pub fn h_opposite(a: &YdAlgebra) -> YdAlgebra {
    let n = a.dim();
    let alg = StructureAlgebra::from_fn(a.alg.labels().to_vec(), a.alg.unit().clone(), |i, j| {
        let mut v = zero_vec(n);
        for (b, k, c) in a.coact_basis(j) {
            let moved = a.action[k].column(i);
            vec_axpy(&mut v, &c, &a.alg.mul(&a.alg.basis(b), &moved));
        }
        v
    });
    a.with_algebra(alg)
}

/// `A # B` on `A ⊗ B` (basis `a_i # b_j` at `i * dim B + j`) with
/// `(a#b)(c#d) = a c_0 # (c_1 · b) d`.
pub fn sharp_product(a: &YdAlgebra, b: &YdAlgebra) -> Result<YdAlgebra> {
    if !same_hopf(&a.hopf, &b.hopf) {
        return Err(Error::Precondition("factors live over different Hopf algebras".into()));
    }
    let h = &a.hopf;
    let (na, nb, nh) = (a.dim(), b.dim(), h.dim());
    let labels = a
        .alg
        .labels()
        .iter()
        .flat_map(|x| b.alg.labels().iter().map(move |y| format!("{x}#{y}")))
        .collect();
    let unit = vec_kron(a.alg.unit(), b.alg.unit());
    let alg = StructureAlgebra::from_fn(labels, unit, |p, q| {
        let (i, j) = (p / nb, p % nb);
        let (k, l) = (q / nb, q % nb);
        let mut v = zero_vec(na * nb);
        for (k0, k1, c) in a.coact_basis(k) {
            let left = a.alg.basis_product_vec(i, k0);
            let right = b.alg.mul(&b.action[k1].column(j), &b.alg.basis(l));
            vec_axpy(&mut v, &c, &vec_kron(&left, &right));
        }
        v
    });

    let action = (0..nh)
        .map(|i| {
            let mut m = Matrix::zeros(na * nb, na * nb);
            for (xy, c) in h.delta(i).terms() {
                let t = kron(&a.action[xy[0]], &b.action[xy[1]]).scale(c);
                m = m.add(&t).expect("same shape");
            }
            m
        })
        .collect();

    let mut cols = Vec::with_capacity(na * nb);
    for i in 0..na {
        let ri = a.coact_basis(i);
        for j in 0..nb {
            let mut v = zero_vec(na * nb * nh);
            for (a0, a1, c) in &ri {
                for (b0, b1, d) in b.coact_basis(j) {
                    let hv = h.alg().basis_product_vec(b1, *a1);
                    let ab = crate::linalg::unit_vec(na * nb, a0 * nb + b0);
                    vec_axpy(&mut v, &(c * &d), &vec_kron(&ab, &hv));
                }
            }
            cols.push(v);
        }
    }
    let coaction = Matrix::from_columns(na * nb * nh, &cols)?;
    YdAlgebra::new(h.clone(), alg, action, coaction)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndVariant {
    /// `End(M)` with `(h·f)(m) = h_1·f(S(h_2)·m)` and
    /// `ρ(f)(m) = f(m_0)_0 ⊗ S⁻¹(m_1) f(m_0)_1`.
    Plain,
    /// `End(M)^op` with `(h·f)(m) = h_2·f(S⁻¹(h_1)·m)` and
    /// `ρ(f)(m) = f(m_0)_0 ⊗ f(m_0)_1 S(m_1)`.
    Op,
}

/// The endomorphism algebra of a YD module; `E_pq` sits at `p * n + q`.
pub fn end_yd(m: &YdModule, variant: EndVariant) -> YdAlgebra {
    let h = &m.hopf;
    let (n, nh) = (m.dim, h.dim());
    let alg = match variant {
        EndVariant::Plain => StructureAlgebra::endomorphism(n),
        EndVariant::Op => StructureAlgebra::endomorphism(n).opposite(),
    };
    let unit_of = |p: usize, q: usize| {
        let mut e = Matrix::zeros(n, n);
        e.set(p, q, crate::rational::Rational::one());
        e
    };
    let flatten = |f: &Matrix| -> Vector { f.entries().to_vec() };

    let action = (0..nh)
        .map(|i| {
            let cols: Vec<Vector> = (0..n * n)
                .map(|pq| {
                    let e = unit_of(pq / n, pq % n);
                    let mut out = Matrix::zeros(n, n);
                    for (xy, c) in h.delta(i).terms() {
                        let (x, y) = (xy[0], xy[1]);
                        let term = match variant {
                            EndVariant::Plain => {
                                let s = act_matrix(&m.action, &h.antipode().column(y));
                                m.action[x].dot(&e).dot(&s)
                            }
                            EndVariant::Op => {
                                let s = act_matrix(&m.action, &h.antipode_inv().column(x));
                                m.action[y].dot(&e).dot(&s)
                            }
                        };
                        out = out.add(&term.scale(c)).expect("same shape");
                    }
                    flatten(&out)
                })
                .collect();
            Matrix::from_columns(n * n, &cols).expect("square action")
        })
        .collect();

    let mut cols = Vec::with_capacity(n * n);
    for pq in 0..n * n {
        let (p, q) = (pq / n, pq % n);
        let mut v = zero_vec(n * n * nh);
        // f = E_pq; evaluate ρ(f) on each e_r and read off E_{p'r} ⊗ e_k
        for r in 0..n {
            for (r0, r1, c) in coact_terms(&m.coaction, nh, r) {
                if r0 != q {
                    continue;
                }
                for (p0, p1, d) in coact_terms(&m.coaction, nh, p) {
                    let hv = match variant {
                        EndVariant::Plain => h.mul(&h.antipode_inv().column(r1), &h.basis(p1)),
                        EndVariant::Op => h.mul(&h.basis(p1), &h.antipode().column(r1)),
                    };
                    let cd = &c * &d;
                    for (k, x) in hv.iter().enumerate() {
                        if !x.is_zero() {
                            v[(p0 * n + r) * nh + k] += &cd * x;
                        }
                    }
                }
            }
        }
        cols.push(v);
    }
    let coaction = Matrix::from_columns(n * n * nh, &cols).expect("consistent shape");
    YdAlgebra::new(h.clone(), alg, action, coaction).expect("consistent shapes")
}

/// `ρ(a) = (R^(2) · a) ⊗ R^(1)` for a module with the given action.
pub(crate) fn induced_coaction_matrix(h: &HopfAlgebra, action: &[Matrix], r: &QtStructure) -> Matrix {
    let n = action[0].rows();
    let nh = h.dim();
    let mut out = Matrix::zeros(n * nh, n);
    for (ij, c) in r.r.terms() {
        let hm = Matrix::from_columns(nh, &[h.basis(ij[0])]).expect("column");
        let t = kron(&action[ij[1]], &hm).scale(c);
        out = out.add(&t).expect("same shape");
    }
    out
}

/// Completes a module algebra with the coaction induced by `R`.
pub fn induced_coaction(a: &ModuleAlgebra, r: &QtStructure) -> YdAlgebra {
    let coaction = induced_coaction_matrix(&a.hopf, &a.action, r);
    YdAlgebra::new(a.hopf.clone(), a.alg.clone(), a.action.clone(), coaction).expect("consistent shapes")
}

/// `h · a = a_0 r(h ⊗ a_1)`.
pub(crate) fn induced_action_matrices(h: &HopfAlgebra, n: usize, coaction: &Matrix, r: &CoQtStructure) -> Vec<Matrix> {
    let nh = h.dim();
    (0..nh)
        .map(|i| {
            let mut m = Matrix::zeros(n, n);
            for a in 0..n {
                for (b, k, c) in coact_terms(coaction, nh, a) {
                    let v = m.get(b, a) + &c * r.r.get(i, k);
                    m.set(b, a, v);
                }
            }
            m
        })
        .collect()
}

/// Completes a comodule algebra with the action induced by `r`.
pub fn induced_action(a: &ComoduleAlgebra, r: &CoQtStructure) -> YdAlgebra {
    let action = induced_action_matrices(&a.hopf, a.dim(), &a.coaction, r);
    YdAlgebra::new(a.hopf.clone(), a.alg.clone(), action, a.coaction.clone()).expect("consistent shapes")
}

impl YdModule {
    /// A module with the coaction induced by `R`.
    pub fn with_induced_coaction(hopf: Arc<HopfAlgebra>, action: Vec<Matrix>, r: &QtStructure) -> Result<YdModule> {
        let dim = action.first().map(Matrix::rows).unwrap_or(0);
        let coaction = induced_coaction_matrix(&hopf, &action, r);
        YdModule::new(hopf, dim, action, coaction)
    }
}
