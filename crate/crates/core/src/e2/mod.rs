//! `E(2)` as a quotient of `D(H_4)`: the structures `R_N` and `R_0`, the
//! surjection `T: D(H_4) → E(2)`, the maps `θ_{λ,μ}: E(2) → H_4`, and the
//! pullbacks between module algebras over these Hopf algebras.

mod appendix;
mod kernel;

use std::sync::{Arc, OnceLock};

pub use appendix::{
    c_over_e2, decompositions, not_subgroup_demo, prop62_instance_check, theorem61_check, DecompositionReport,
    NonClosureReport, Prop62Report, Theorem61Report,
};
pub use appendix::Decomposer;
pub use kernel::{kernel_witness, KernelWitness};

use crate::algebra::Grading;
use crate::error::Result;
use crate::hopf::{e2, DrinfeldDouble, HopfAlgebra, HopfMorphism, QtStructure};
use crate::linalg::{vec_scale, Matrix, Vector};
use crate::rational::{q, qi, Rational};
use crate::sweedler::h4_arc;
use crate::tensor::Tensor;
use crate::yd::{gradings, induced_coaction, is_h_azumaya, ModuleAlgebra, YdAlgebra};

/// Basis indices of `E(2)`.
pub const C: usize = 1;
pub const X1: usize = 2;
pub const CX1: usize = 3;
pub const X2: usize = 4;
pub const CX2: usize = 5;

pub fn e2_arc() -> Arc<HopfAlgebra> {
    static E2: OnceLock<Arc<HopfAlgebra>> = OnceLock::new();
    E2.get_or_init(|| Arc::new(e2())).clone()
}

/// `D(H_4)` over the shared copy of `H_4`.
pub fn dh4() -> &'static DrinfeldDouble {
    static D: OnceLock<DrinfeldDouble> = OnceLock::new();
    D.get_or_init(|| DrinfeldDouble::over(h4_arc()).expect("D(H4) is a Hopf algebra"))
}

fn qt_from_terms(terms: &[(usize, usize, i64)]) -> QtStructure {
    let mut r = Tensor::zero(2);
    for &(i, j, c) in terms {
        r.add_term(vec![i, j], q(c, 2));
    }
    QtStructure::new(&e2_arc(), r)
}

/// `R_0 = ½(1⊗1 + 1⊗c + c⊗1 − c⊗c)`.
pub fn build_r0() -> QtStructure {
    qt_from_terms(&[(0, 0, 1), (0, C, 1), (C, 0, 1), (C, C, -1)])
}

/// `R_N = R_0 + ½(x1⊗cx2 + x1⊗x2 + cx1⊗cx2 − cx1⊗x2)`.
pub fn build_rn() -> QtStructure {
    qt_from_terms(&[
        (0, 0, 1),
        (0, C, 1),
        (C, 0, 1),
        (C, C, -1),
        (X1, CX2, 1),
        (X1, X2, 1),
        (CX1, CX2, 1),
        (CX1, X2, -1),
    ])
}

/// `T: D(H_4) → E(2)`: `1* ↦ (1+c)/2`, `g* ↦ (1−c)/2`, `h* ↦ (cx2+x2)/2`,
/// `(gh)* ↦ (cx2−x2)/2` on `H_4^*`, and `g ↦ c`, `h ↦ x1` on `H_4`.
pub fn t_morphism() -> HopfMorphism {
    let e = e2_arc();
    let half = q(1, 2);
    let combo = |terms: &[(usize, i64)]| -> Vector {
        let mut v = crate::linalg::zero_vec(8);
        for &(i, c) in terms {
            v[i] += &half * qi(c);
        }
        v
    };
    let on_dual = [
        combo(&[(0, 1), (C, 1)]),
        combo(&[(0, 1), (C, -1)]),
        combo(&[(CX2, 1), (X2, 1)]),
        combo(&[(CX2, 1), (X2, -1)]),
    ];
    let on_base: Vec<Vector> = [0, C, X1, CX1].iter().map(|&i| e.basis(i)).collect();
    let cols: Vec<Vector> = (0..16).map(|ij| e.mul(&on_dual[ij / 4], &on_base[ij % 4])).collect();
    HopfMorphism::new(Matrix::from_columns(8, &cols).expect("8x16"))
}

/// `θ_{λ,μ}: E(2) → H_4`, `c ↦ g`, `x1 ↦ λh`, `x2 ↦ μh`.
pub fn theta(lambda: &Rational, mu: &Rational) -> HopfMorphism {
    let h = h4_arc();
    let cols: Vec<Vector> = vec![
        h.basis(0),
        h.basis(1),
        vec_scale(&h.basis(2), lambda),
        vec_scale(&h.basis(3), lambda),
        vec_scale(&h.basis(2), mu),
        vec_scale(&h.basis(3), mu),
        crate::linalg::zero_vec(4),
        crate::linalg::zero_vec(4),
    ];
    HopfMorphism::new(Matrix::from_columns(4, &cols).expect("4x8"))
}

/// Completes an `E(2)`-module algebra with the coaction induced by `R_N`.
pub fn with_rn(a: &ModuleAlgebra) -> YdAlgebra {
    induced_coaction(a, &build_rn())
}

/// `Θ_{λ,μ}`: an `H_4`-module algebra pulled back to `E(2)`.
pub fn theta_star(a: &ModuleAlgebra, lambda: &Rational, mu: &Rational) -> Result<ModuleAlgebra> {
    a.restrict_along(&theta(lambda, mu).matrix, e2_arc())
}

/// `T^*`: an `E(2)`-module algebra as a YD algebra over `H_4`, through
/// `D(H_4)`.
pub fn t_star(a: &ModuleAlgebra) -> Result<YdAlgebra> {
    let d = dh4();
    let m = a.restrict_along(&t_morphism().matrix, d.hopf().clone())?;
    crate::yd::from_double(&m, d)
}

/// Whether the grading read off the `g`-action agrees with the one read off
/// the coaction.
pub fn bq_grad_member(a: &YdAlgebra) -> Result<bool> {
    Ok(gradings(a, 1)?.equal)
}

/// Matrices of `F_0(a#b)(d) = (−1)^{|b||d|} a d b` and
/// `G_0(a#b)(d) = (−1)^{|a||d|} a d b`, laid out as in
/// [`crate::yd::fg_maps`].
pub fn fg0_maps(a: &ModuleAlgebra) -> Result<(Matrix, Matrix)> {
    let grading = Grading::from_involution(&a.action[C], "c-action")?;
    let n = a.dim();
    let sandwich = a.alg.sandwich_matrix();
    let mut f = Matrix::zeros(n * n, n * n);
    let mut g = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            for c in 0..n {
                for d in 0..n {
                    // sandwich rows are (r, c) of the endomorphism: coefficient of e_r in e_i e_c e_j
                    let x = sandwich.get(d * n + c, i * n + j);
                    if x.is_zero() {
                        continue;
                    }
                    let pf = grading.parity[j] & grading.parity[c];
                    let pg = grading.parity[i] & grading.parity[c];
                    f.set(c * n + d, i * n + j, Rational::sign_power(pf as usize) * x);
                    g.set(c * n + d, i * n + j, Rational::sign_power(pg as usize) * x);
                }
            }
        }
    }
    Ok((f, g))
}

/// `Z_2`-graded central simplicity as bijectivity of `F_0` and `G_0`.
pub fn is_graded_central_simple(a: &ModuleAlgebra) -> Result<bool> {
    let (f, g) = fg0_maps(a)?;
    Ok(f.is_invertible()? && g.is_invertible()?)
}

/// The same test through the structure induced by `R_0`.
pub fn is_graded_central_simple_via_r0(a: &ModuleAlgebra) -> bool {
    is_h_azumaya(&induced_coaction(a, &build_r0()))
}
