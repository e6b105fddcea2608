//! Left and right centralizers of a YD subalgebra.

use serde::Serialize;

use super::{coact_terms, YdAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{vec_axpy, vec_sub, zero_vec, LinearSystem, Matrix, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Centralizers {
    /// `{a : b a = a_0 (a_1 · b) for all b ∈ B}`
    pub left: Vec<Vector>,
    /// `{a : a b = b_0 (b_1 · a) for all b ∈ B}`
    pub right: Vec<Vector>,
}

fn in_span(basis: &[Vector], v: &[crate::rational::Rational]) -> bool {
    if basis.is_empty() {
        return crate::linalg::vec_is_zero(v);
    }
    let m = Matrix::from_columns(v.len(), basis).expect("same length");
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    let mv = Matrix::from_columns(v.len(), &with).expect("same length");
    m.rank() == mv.rank()
}

fn kernel_of(columns: Vec<Vec<Vector>>, unknowns: usize) -> Vec<Vector> {
    let mut sys = LinearSystem::new(unknowns);
    for eq in columns {
        let target = zero_vec(eq[0].len());
        sys.push_vector_equation(&eq, &target);
    }
    sys.solve().kernel
}

/// Centralizers of the subalgebra spanned by `b_basis`.
pub fn yd_centralizers(a: &YdAlgebra, b_basis: &[Vector]) -> Result<Centralizers> {
    let n = a.dim();
    let nh = a.hopf.dim();
    for b in b_basis {
        if b.len() != n {
            return Err(Error::Dimension("subalgebra vector has the wrong length".into()));
        }
        for m in &a.action {
            if !in_span(b_basis, &m.act(b)) {
                return Err(Error::Precondition("subspace is not closed under the action".into()));
            }
        }
        let rho = a.coaction.act(b);
        for k in 0..nh {
            let slice: Vector = (0..n).map(|i| rho[i * nh + k].clone()).collect();
            if !in_span(b_basis, &slice) {
                return Err(Error::Precondition("subspace is not closed under the coaction".into()));
            }
        }
        for c in b_basis {
            if !in_span(b_basis, &a.alg.mul(b, c)) {
                return Err(Error::Precondition("subspace is not closed under multiplication".into()));
            }
        }
    }

    // unknown a = Σ x_j e_j; one vector equation per element of B
    let left_eqs = b_basis
        .iter()
        .map(|b| {
            (0..n)
                .map(|j| {
                    let mut rhs = zero_vec(n);
                    for (j0, j1, c) in coact_terms(&a.coaction, nh, j) {
                        vec_axpy(&mut rhs, &c, &a.alg.mul(&a.alg.basis(j0), &a.action[j1].act(b)));
                    }
                    vec_sub(&a.alg.mul(b, &a.alg.basis(j)), &rhs)
                })
                .collect()
        })
        .collect();
    let right_eqs = b_basis
        .iter()
        .map(|b| {
            let rho = super::YdAlgebra::coact(a, b);
            (0..n)
                .map(|j| {
                    let mut rhs = zero_vec(n);
                    for (idx, c) in rho.terms() {
                        let moved = a.action[idx[1]].column(j);
                        vec_axpy(&mut rhs, c, &a.alg.mul(&a.alg.basis(idx[0]), &moved));
                    }
                    vec_sub(&a.alg.mul(&a.alg.basis(j), b), &rhs)
                })
                .collect()
        })
        .collect();
    Ok(Centralizers {
        left: kernel_of(left_eqs, n),
        right: kernel_of(right_eqs, n),
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::c_alg;
    use super::*;
    use crate::rational::qi;

    #[test]
    fn ground_field_is_centralized_by_everything() {
        let c = c_alg(qi(1), qi(1), qi(0));
        let z = yd_centralizers(&c, &[c.alg.unit().clone()]).unwrap();
        assert_eq!(z.left.len(), 2);
        assert_eq!(z.right.len(), 2);
    }

    #[test]
    fn azumaya_c_has_trivial_self_centralizer() {
        let c = c_alg(qi(1), qi(1), qi(0));
        let basis: Vec<Vector> = (0..2).map(|i| c.alg.basis(i)).collect();
        let z = yd_centralizers(&c, &basis).unwrap();
        assert_eq!(z.left, vec![c.alg.unit().clone()]);
        assert_eq!(z.right, vec![c.alg.unit().clone()]);
    }

    #[test]
    fn non_closed_subspace_is_rejected() {
        let c = c_alg(qi(1), qi(1), qi(0));
        let err = yd_centralizers(&c, &[c.alg.basis(1)]).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }
}
