//! YD module algebras over `H` as module algebras over `D(H)`.

use super::{coact_terms, same_hopf, ModuleAlgebra, YdAlgebra};
use crate::error::{Error, Result};
use crate::hopf::DrinfeldDouble;
use crate::linalg::{Matrix, Vector};

/// `(f ⋈ h) · a = f . (h · a)` with `f . m = m_0 f(m_1)`.
pub fn to_double(a: &YdAlgebra, d: &DrinfeldDouble) -> Result<ModuleAlgebra> {
    if !same_hopf(&a.hopf, d.base()) {
        return Err(Error::Precondition("algebra is not over the base of the double".into()));
    }
    let report = a.check();
    if !report.passed() {
        return Err(Error::Axioms(report.to_string()));
    }
    let (n, nh) = (a.dim(), a.hopf.dim());
    let pairing: Vec<Matrix> = (0..nh)
        .map(|i| {
            let mut m = Matrix::zeros(n, n);
            for col in 0..n {
                for (b, k, c) in coact_terms(&a.coaction, nh, col) {
                    if k == i {
                        let v = m.get(b, col) + &c;
                        m.set(b, col, v);
                    }
                }
            }
            m
        })
        .collect();
    let action = (0..nh * nh)
        .map(|ij| pairing[ij / nh].dot(&a.action[ij % nh]))
        .collect();
    ModuleAlgebra::new(d.hopf().clone(), a.alg.clone(), action)
}

/// Restricts to `1 ⋈ H` and sets `ρ(m) = Σ_i (e_i* ⋈ 1) . m ⊗ e_i`.
pub fn from_double(m: &ModuleAlgebra, d: &DrinfeldDouble) -> Result<YdAlgebra> {
    if !same_hopf(&m.hopf, d.hopf()) {
        return Err(Error::Precondition("algebra is not over the given double".into()));
    }
    let report = m.check();
    if !report.passed() {
        return Err(Error::Axioms(report.to_string()));
    }
    let base = d.base();
    let (n, nh) = (m.dim(), base.dim());
    let action = (0..nh).map(|j| super::act_matrix(&m.action, &d.embed_base(&base.basis(j)))).collect();
    let duals: Vec<Matrix> = (0..nh)
        .map(|i| super::act_matrix(&m.action, &d.embed_dual(&d.dual().basis(i))))
        .collect();
    let cols: Vec<Vector> = (0..n)
        .map(|a| {
            let mut v = crate::linalg::zero_vec(n * nh);
            for (i, f) in duals.iter().enumerate() {
                for b in 0..n {
                    v[b * nh + i] = f.get(b, a).clone();
                }
            }
            v
        })
        .collect();
    let coaction = Matrix::from_columns(n * nh, &cols)?;
    YdAlgebra::new(base.clone(), m.alg.clone(), action, coaction)
}

#[cfg(test)]
mod tests {
    use super::super::tests::c_alg;
    use super::*;
    use crate::hopf::{h4, phi_h4};
    use crate::rational::{q, qi};

    #[test]
    fn round_trip_through_the_double() {
        let c = c_alg(qi(2), q(1, 3), qi(-4));
        let d = DrinfeldDouble::new(&h4()).unwrap();
        let c = YdAlgebra { hopf: d.base().clone(), ..c };
        let m = to_double(&c, &d).unwrap();
        assert!(m.check().passed(), "{}", m.check());
        assert_eq!(from_double(&m, &d).unwrap(), c);
    }

    #[test]
    fn phi_g_acts_by_the_coaction_grading() {
        let d = DrinfeldDouble::new(&h4()).unwrap();
        let c = c_alg(qi(2), qi(1), qi(1));
        let c = YdAlgebra { hopf: d.base().clone(), ..c };
        let m = to_double(&c, &d).unwrap();
        let phi_g = d.embed_dual(&phi_h4().apply(&d.base().el("g")));
        assert_eq!(m.act(&phi_g, &[qi(0), qi(1)]), vec![qi(0), qi(-1)]);
        let t = YdAlgebra::trivial(d.base().clone(), c.alg.clone());
        let mt = to_double(&t, &d).unwrap();
        assert_eq!(super::super::act_matrix(&mt.action, &phi_g), Matrix::identity(2));
    }

    #[test]
    fn explicit_conversion_formula_agrees() {
        let d = DrinfeldDouble::new(&h4()).unwrap();
        let h = d.base();
        let c = YdAlgebra { hopf: h.clone(), ..c_alg(qi(3), qi(2), q(1, 2)) };
        let m = to_double(&c, &d).unwrap();
        let phi = phi_h4();
        let half = q(1, 2);
        let pairs = [("1", "g", "1", 1), ("1", "g", "g", -1), ("h", "gh", "h", 1), ("h", "gh", "gh", -1)];
        for col in 0..2 {
            let mut v = crate::linalg::zero_vec(8);
            for (x, y, target, sign) in pairs {
                let f = crate::linalg::vec_add(
                    &phi.apply(&h.el(x)),
                    &crate::linalg::vec_scale(&phi.apply(&h.el(y)), &qi(sign)),
                );
                let acted = m.act(&d.embed_dual(&f), &c.alg.basis(col));
                let k = h.index_of(target).unwrap();
                for b in 0..2 {
                    v[b * 4 + k] += &half * &acted[b];
                }
            }
            assert_eq!(v, c.coaction.column(col));
        }
    }
}
