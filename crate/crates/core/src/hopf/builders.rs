//! Hard-coded Hopf algebras: Nichols' `E(n)` on monomials `c^a x_S`, with
//! Sweedler's `H_4 = E(1)` and `E(2)` as named instances.

use super::{HopfAlgebra, HopfMorphism};
use crate::error::{Error, Result};
use crate::algebra::StructureAlgebra;
use crate::linalg::{unit_vec, zero_vec, Matrix};
use crate::rational::Rational;
use crate::tensor::Tensor;

/// Sign of `x_S x_T` reordered into increasing order, or `None` when the
/// product vanishes.
fn merge_sign(s: usize, t: usize) -> Option<Rational> {
    if s & t != 0 {
        return None;
    }
    let mut inversions = 0;
    for i in 0..usize::BITS as usize {
        if s >> i & 1 == 1 {
            // generators of T with smaller index must move past x_i
            inversions += (t & ((1usize << i) - 1)).count_ones() as usize;
        }
    }
    Some(Rational::sign_power(inversions))
}

/// `E(n)` with basis index `a + 2 * mask` for the monomial `c^a x_S`,
/// where bit `i` of `mask` marks `x_{i+1}`. Relations: `c^2 = 1`,
/// `x_i^2 = 0`, `x_i c = -c x_i`, `x_i x_j = -x_j x_i`; `c` grouplike,
/// `Δ(x_i) = 1 ⊗ x_i + x_i ⊗ c`, `S(x_i) = c x_i`.
pub fn nichols(n: usize, labels: Vec<String>) -> HopfAlgebra {
    let dim = 2usize << n;
    assert_eq!(labels.len(), dim);
    let alg = StructureAlgebra::from_fn(labels, unit_vec(dim, 0), |i, j| {
        let (a, s) = (i & 1, i >> 1);
        let (b, t) = (j & 1, j >> 1);
        let mut v = zero_vec(dim);
        if let Some(sign) = merge_sign(s, t) {
            let sign = sign * Rational::sign_power(b * s.count_ones() as usize);
            v[((a + b) % 2) | ((s | t) << 1)] = sign;
        }
        v
    });
    let c = 1usize;
    let x = |i: usize| 2usize << i;
    let delta_c = Tensor::basis(&[c, c]);
    let delta_x = |i: usize| Tensor::basis(&[0, x(i)]).add(&Tensor::basis(&[x(i), c]));
    let mut coproduct = Vec::with_capacity(dim);
    let mut antipode_cols = Vec::with_capacity(dim);
    let mut counit = zero_vec(dim);
    for idx in 0..dim {
        let (a, mask) = (idx & 1, idx >> 1);
        let mut d = Tensor::basis(&[0, 0]);
        // S is an anti-morphism: S(c^a x_{i1} ... x_{ik}) = S(x_ik) ... S(x_i1) S(c)^a
        let mut s_val = unit_vec(dim, 0);
        if a == 1 {
            d = d.mul_in(&delta_c, &[&alg, &alg]);
            s_val = unit_vec(dim, c);
        }
        for i in 0..n {
            if mask >> i & 1 == 1 {
                d = d.mul_in(&delta_x(i), &[&alg, &alg]);
                let s_x = alg.mul(&unit_vec(dim, c), &unit_vec(dim, x(i)));
                s_val = alg.mul(&s_x, &s_val);
            }
        }
        coproduct.push(d);
        antipode_cols.push(s_val);
        if mask == 0 {
            counit[idx] = Rational::one();
        }
    }
    let antipode = Matrix::from_columns(dim, &antipode_cols).expect("square antipode");
    HopfAlgebra::new(alg, coproduct, counit, antipode).expect("E(n) antipode is invertible")
}

/// Sweedler's Hopf algebra on the basis `1, g, h, gh`.
pub fn h4() -> HopfAlgebra {
    nichols(1, ["1", "g", "h", "gh"].map(String::from).to_vec())
}

/// `E(2)` on the basis `1, c, x1, cx1, x2, cx2, x1x2, cx1x2`.
pub fn e2() -> HopfAlgebra {
    nichols(
        2,
        ["1", "c", "x1", "cx1", "x2", "cx2", "x1x2", "cx1x2"]
            .map(String::from)
            .to_vec(),
    )
}

pub fn h4_dual() -> HopfAlgebra {
    h4().dual()
}

/// The self-duality `φ: H_4 → H_4^*`: `1 ↦ 1* + g*`, `g ↦ 1* − g*`,
/// `h ↦ h* + (gh)*`, `gh ↦ h* − (gh)*`.
pub fn phi_h4() -> HopfMorphism {
    HopfMorphism::new(Matrix::from_i64(
        4,
        4,
        &[
            1, 1, 0, 0, //
            1, -1, 0, 0, //
            0, 0, 1, 1, //
            0, 0, 1, -1,
        ],
    ))
}

/// Looks up one of the named builders `H4`, `H4dual`, `E2`, `DH4`.
pub fn named(name: &str) -> Result<HopfAlgebra> {
    match name {
        "H4" => Ok(h4()),
        "H4dual" => Ok(h4_dual()),
        "E2" => Ok(e2()),
        "DH4" => Ok((**super::DrinfeldDouble::new(&h4())?.hopf()).clone()),
        other => Err(Error::UnknownBuilder(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    #[test]
    fn h4_relations_and_axioms() {
        let h = h4();
        let (g, x) = (h.el("g"), h.el("h"));
        assert_eq!(h.mul(&g, &g), h.el("1"));
        assert!(crate::linalg::vec_is_zero(&h.mul(&x, &x)));
        assert_eq!(h.mul(&x, &g), crate::linalg::vec_scale(&h.el("gh"), &qi(-1)));
        assert_eq!(h.antipode().column(2), h.el("gh"));
        assert!(h.check_axioms().passed(), "{}", h.check_axioms());
        assert!(!h.is_cocommutative());
    }

    #[test]
    fn e2_axioms() {
        let e = e2();
        assert_eq!(e.dim(), 8);
        assert!(e.check_axioms().passed(), "{}", e.check_axioms());
        let (x1, x2) = (e.el("x1"), e.el("x2"));
        assert_eq!(e.mul(&x1, &x2), e.el("x1x2"));
        assert_eq!(e.mul(&x2, &x1), crate::linalg::vec_scale(&e.el("x1x2"), &qi(-1)));
        let d = e.delta_of(&x1);
        assert_eq!(d, Tensor::basis(&[0, 2]).add(&Tensor::basis(&[2, 1])));
    }

    #[test]
    fn corrupted_antipode_fails_antipode_law() {
        let h = h4();
        let mut s = h.antipode().clone();
        // S(h) = -gh instead of gh
        s.set(3, 2, qi(-1));
        let bad = HopfAlgebra::new(h.alg().clone(), h.coproduct().to_vec(), h.counit().clone(), s).unwrap();
        let report = bad.check_axioms();
        assert!(!report.get("antipode").unwrap().passed());
        assert!(report.get("coassociativity").unwrap().passed());
    }

    #[test]
    fn phi_is_a_hopf_isomorphism() {
        let h = h4();
        let phi = phi_h4();
        let report = phi.check(&h, &h4_dual());
        assert!(report.passed(), "{report}");
        assert!(phi.matrix.is_invertible().unwrap());
    }

    #[test]
    fn named_builders() {
        for (name, dim) in [("H4", 4), ("H4dual", 4), ("E2", 8), ("DH4", 16)] {
            assert_eq!(named(name).unwrap().dim(), dim);
        }
        assert!(matches!(named("H8"), Err(Error::UnknownBuilder(_))));
    }

    #[test]
    fn double_dual_is_canonically_h4() {
        let h = h4();
        let dd = h.dual().dual();
        assert!(HopfMorphism::identity(&h).check(&h, &dd).passed());
        assert!(h4_dual().check_axioms().passed());
    }
}
