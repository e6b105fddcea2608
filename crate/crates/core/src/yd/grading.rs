//! The two `Z_2`-gradings on a YD algebra over a pointed Hopf algebra and
//! the braiding induced by a quasitriangular structure.

use serde::Serialize;

use super::{coact_terms, YdAlgebra};
use crate::algebra::Grading;
use crate::error::{Error, Result};
use crate::hopf::QtStructure;
use crate::linalg::{vec_kron, zero_vec, Matrix, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gradings {
    /// `|a| = 1` iff `g · a = -a`.
    pub action: Vec<u8>,
    /// `deg(a) = 1` iff `(id ⊗ π) ρ(a) = a ⊗ g`.
    pub coaction: Vec<u8>,
    pub equal: bool,
}

/// Reads both gradings off the basis of `A`. `g` is the basis index of the
/// grouplike; `π` keeps the components on the unit and on `g`, which is the
/// projection onto `kZ_2` for the monomial bases of `H_4` and `E(2)`.
pub fn gradings(a: &YdAlgebra, g: usize) -> Result<Gradings> {
    let h = &a.hopf;
    let (n, nh) = (a.dim(), h.dim());
    let one = (0..nh)
        .find(|&i| *h.unit() == h.basis(i))
        .ok_or_else(|| Error::Precondition("the unit of H is not a basis element".into()))?;
    let action = Grading::from_involution(&a.action[g], "grouplike action")?.parity;
    let mut coaction = Vec::with_capacity(n);
    for i in 0..n {
        let mut on_one = zero_vec(n);
        let mut on_g = zero_vec(n);
        for (b, k, c) in coact_terms(&a.coaction, nh, i) {
            if k == one {
                on_one[b] += &c;
            } else if k == g {
                on_g[b] += &c;
            }
        }
        let e = crate::linalg::unit_vec(n, i);
        let zero = zero_vec(n);
        let parity = if on_one == e && on_g == zero {
            0
        } else if on_one == zero && on_g == e {
            1
        } else {
            return Err(Error::NonHomogeneous("projected coaction".into()));
        };
        coaction.push(parity);
    }
    let equal = action == coaction;
    Ok(Gradings {
        action,
        coaction,
        equal,
    })
}

/// `ψ(v ⊗ w) = R^(2)·w ⊗ R^(1)·v` as a `(dim W · dim V) × (dim V · dim W)`
/// matrix.
pub fn braiding_psi(v_action: &[Matrix], w_action: &[Matrix], r: &QtStructure) -> Matrix {
    let (nv, nw) = (v_action[0].rows(), w_action[0].rows());
    let cols: Vec<Vector> = (0..nv * nw)
        .map(|pq| {
            let (p, q) = (pq / nw, pq % nw);
            let mut out = zero_vec(nv * nw);
            for (ij, c) in r.r.terms() {
                let w = w_action[ij[1]].column(q);
                let v = v_action[ij[0]].column(p);
                crate::linalg::vec_axpy(&mut out, c, &vec_kron(&w, &v));
            }
            out
        })
        .collect();
    Matrix::from_columns(nv * nw, &cols).expect("consistent shape")
}

#[cfg(test)]
mod tests {
    use super::super::tests::c_alg;
    use super::*;
    use crate::hopf::h4;
    use crate::rational::{q, qi};

    #[test]
    fn c_family_gradings_agree() {
        let g = gradings(&c_alg(qi(2), qi(3), q(1, 2)), 1).unwrap();
        assert_eq!(g.action, vec![0, 1]);
        assert!(g.equal);
    }

    #[test]
    fn non_homogeneous_basis_is_rejected() {
        let mut c = c_alg(qi(1), qi(0), qi(0));
        c.action[1].set(0, 1, qi(1));
        assert!(matches!(gradings(&c, 1), Err(Error::NonHomogeneous(_))));
    }

    #[test]
    fn group_part_of_r_gives_the_signed_flip() {
        let h = h4();
        let half = q(1, 2);
        let mut r = crate::tensor::Tensor::zero(2);
        for (i, j, c) in [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, -1)] {
            r.add_term(vec![i, j], &half * qi(c));
        }
        let r0 = QtStructure::new(&h, r);
        let c = c_alg(qi(1), qi(0), qi(0));
        let psi = braiding_psi(&c.action, &c.action, &r0);
        // basis 1⊗1, 1⊗x, x⊗1, x⊗x; x odd
        let flip = Matrix::from_i64(
            4,
            4,
            &[
                1, 0, 0, 0, //
                0, 0, 1, 0, //
                0, 1, 0, 0, //
                0, 0, 0, -1,
            ],
        );
        assert_eq!(psi, flip);
    }
}
