//! The maps `F: A # Ā → End(A)` and `G: Ā # A → End(A)^op`.

use serde::Serialize;

use super::YdAlgebra;
use crate::linalg::{vec_axpy, zero_vec, Matrix, Vector};

/// Matrices of `F` and `G`. Columns index `a_i # b_j` at `i * n + j`; rows
/// index `c* ⊗ d` at `c * n + d`, the coefficient of `d` in the image of `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FgMaps {
    pub f: Matrix,
    pub g: Matrix,
}

fn assemble(n: usize, image: impl Fn(usize, usize, usize) -> Vector) -> Matrix {
    let cols: Vec<Vector> = (0..n * n)
        .map(|ij| {
            let mut col = zero_vec(n * n);
            for c in 0..n {
                let v = image(ij / n, ij % n, c);
                for (d, x) in v.into_iter().enumerate() {
                    col[c * n + d] = x;
                }
            }
            col
        })
        .collect();
    Matrix::from_columns(n * n, &cols).expect("square")
}

/// `F(a#b)(c) = a c_0 (c_1 · b)` and `G(a#b)(c) = a_0 (a_1 · c) b`.
pub fn fg_maps(a: &YdAlgebra) -> FgMaps {
    let n = a.dim();
    let alg = &a.alg;
    let f = assemble(n, |i, j, c| {
        let mut v = zero_vec(n);
        for (c0, c1, k) in a.coact_basis(c) {
            let p = alg.mul3(&alg.basis(i), &alg.basis(c0), &a.action[c1].column(j));
            vec_axpy(&mut v, &k, &p);
        }
        v
    });
    let g = assemble(n, |i, j, c| {
        let mut v = zero_vec(n);
        for (a0, a1, k) in a.coact_basis(i) {
            let p = alg.mul3(&alg.basis(a0), &a.action[a1].column(c), &alg.basis(j));
            vec_axpy(&mut v, &k, &p);
        }
        v
    });
    FgMaps { f, g }
}

/// Whether both `F` and `G` are bijective.
pub fn is_h_azumaya(a: &YdAlgebra) -> bool {
    let maps = fg_maps(a);
    maps.f.is_invertible().unwrap_or(false) && maps.g.is_invertible().unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::super::tests::c_alg;
    use super::*;
    use crate::rational::{q, qi};

    #[test]
    fn f_matrix_of_c_matches_the_closed_form() {
        let (a, t, s) = (qi(3), q(1, 2), qi(5));
        let st = &s * &t;
        let m = fg_maps(&c_alg(a.clone(), t, s));
        let f = Matrix::from_rows(vec![
            vec![qi(1), qi(0), qi(0), a.clone()],
            vec![qi(0), qi(1), qi(1), qi(0)],
            vec![qi(0), &st - &a, a.clone(), qi(0)],
            vec![qi(1), qi(0), qi(0), &st - &a],
        ])
        .unwrap();
        assert_eq!(m.f, f);
        let g = Matrix::from_rows(vec![
            vec![qi(1), qi(0), qi(0), a.clone()],
            vec![qi(0), qi(1), qi(1), qi(0)],
            vec![qi(0), a.clone(), &st - &a, qi(0)],
            vec![qi(1), qi(0), qi(0), &st - &a],
        ])
        .unwrap();
        assert_eq!(m.g, g);
    }

    #[test]
    fn determinants_and_azumaya_criterion() {
        for (a, t, s) in [(qi(1), qi(2), qi(3)), (qi(1), qi(1), qi(2)), (q(-2, 3), qi(4), q(1, 7))] {
            let m = fg_maps(&c_alg(a.clone(), t.clone(), s.clone()));
            let e = &s * &t - qi(2) * &a;
            assert_eq!(m.f.det().unwrap(), -(&e * &e));
            assert_eq!(m.g.det().unwrap(), &e * &e);
            assert_eq!(is_h_azumaya(&c_alg(a, t, s)), !e.is_zero());
        }
        assert!(!is_h_azumaya(&c_alg(qi(0), qi(0), qi(0))));
        assert_eq!(fg_maps(&c_alg(qi(1), qi(1), qi(0))).f.det().unwrap(), qi(-4));
    }
}
