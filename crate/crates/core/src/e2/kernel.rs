//! A two-dimensional `D(H_4)`-module `P` that is not an `E(2)`-module but
//! whose endomorphism algebra is an `(E(2), R_N)`-Azumaya algebra without a
//! strongly inner action.

use serde::Serialize;

use super::{bq_grad_member, dh4, e2_arc, t_morphism, with_rn, C, CX2, X1};
use crate::algebra::StructureAlgebra;
use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::hopf::{phi_h4, HopfAlgebra};
use crate::linalg::{kron, Matrix, Vector};
use crate::rational::qi;
use crate::yd::{
    check_module_action, from_double, is_h_azumaya, strongly_inner_witness_e2, E2Search, ModuleAlgebra, YdAlgebra,
};

#[derive(Clone, Debug, Serialize)]
pub struct KernelWitness {
    /// action of `g`
    pub u: Matrix,
    /// action of `h`
    pub w: Matrix,
    /// action of `φ(g)`
    pub big_u: Matrix,
    /// action of `φ(h)`
    pub big_w: Matrix,
    #[serde(skip)]
    pub end_p: YdAlgebra,
    pub search: E2Search,
    pub report: CheckReport,
}

fn m2(entries: [i64; 4]) -> Matrix {
    Matrix::from_i64(2, 2, &entries)
}

/// `e_k ↦ 1, a, b, ab` for an algebra map out of `H_4` given on `g`, `h`.
fn h4_rep(a: &Matrix, b: &Matrix) -> [Matrix; 4] {
    [Matrix::identity(2), a.clone(), b.clone(), a.dot(b)]
}

fn combine(rep: &[Matrix], x: &[crate::rational::Rational]) -> Matrix {
    crate::yd::act_matrix(rep, x)
}

/// Action on `End(V)` induced by a module `V` over `H`: `(x · f) = x_1 f S(x_2)`.
fn end_action(h: &HopfAlgebra, rep: &[Matrix]) -> Vec<Matrix> {
    (0..h.dim())
        .map(|i| {
            let n = rep[0].rows();
            let mut out = Matrix::zeros(n * n, n * n);
            for (xy, c) in h.delta(i).terms() {
                let s = combine(rep, &h.antipode().column(xy[1]));
                out = out.add(&kron(&rep[xy[0]], &s.transpose()).scale(c)).expect("same shape");
            }
            out
        })
        .collect()
}

/// Builds `P` and `End(P)` and runs every verification step; fails with the
/// first identity that does not hold.
pub fn kernel_witness() -> Result<KernelWitness> {
    let u = m2([1, 0, 0, -1]);
    let w = m2([0, 0, -2, 0]);
    let big_u = u.scale(&qi(-1));
    let big_w = m2([0, 1, 0, 0]);

    let d = dh4();
    let dh = d.hopf();
    let on_base = h4_rep(&u, &w);
    let on_phi = h4_rep(&big_u, &big_w);
    let phi_inv = phi_h4().matrix.inverse()?;
    let on_dual: Vec<Matrix> = (0..4).map(|i| combine(&on_phi, &phi_inv.column(i))).collect();
    let rep: Vec<Matrix> = (0..16).map(|ij| on_dual[ij / 4].dot(&on_base[ij % 4])).collect();

    let mut report = CheckReport::new();
    report.extend("P is a D(H4)-module: ", check_module_action(dh, &rep));

    let g = d.embed_base(&d.base().basis(1));
    let h = d.embed_base(&d.base().basis(2));
    let phi_g = d.embed_dual(&phi_h4().apply(&d.base().basis(1)));
    let phi_h = d.embed_dual(&phi_h4().apply(&d.base().basis(2)));
    let act = |x: &Vector| combine(&rep, x);
    report.item("φ(h)h − hφ(h) acts on P as φ(g) − g = −2u");
    let comm = act(&dh.alg().commutator(&phi_h, &h));
    report.expect(comm == act(&phi_g).sub(&act(&g))? && comm == u.scale(&qi(-2)), || format!("{comm:?}"));

    report.item("P is not an E(2)-module: g and φ(g) differ on P");
    report.expect(act(&g) != act(&phi_g), || "g and φ(g) act alike".into());

    let end_double = ModuleAlgebra::new(dh.clone(), StructureAlgebra::endomorphism(2), end_action(dh, &rep))?;
    report.extend("End(P) over D(H4): ", end_double.check());

    let gen_c = combine(&end_double.action, &g);
    let gen_x1 = combine(&end_double.action, &h);
    let gen_cx2 = combine(&end_double.action, &phi_h);
    let gen_x2 = gen_c.dot(&gen_cx2);
    let e2_action: Vec<Matrix> = (0..8)
        .map(|idx| {
            let mut m = Matrix::identity(4);
            if idx & 1 == 1 {
                m = m.dot(&gen_c);
            }
            if idx & 2 != 0 {
                m = m.dot(&gen_x1);
            }
            if idx & 4 != 0 {
                m = m.dot(&gen_x2);
            }
            m
        })
        .collect();
    let end_e2 = ModuleAlgebra::new(e2_arc(), end_double.alg.clone(), e2_action)?;
    report.extend("End(P) over E(2): ", end_e2.check());
    report.item("the D(H4)-action on End(P) factors through T");
    report.expect(end_e2.restrict_along(&t_morphism().matrix, dh.clone())? == end_double, || {
        "restriction along T differs".into()
    });

    report.item("g·f = u f u⁻¹ = U f U⁻¹, h·f = w f u⁻¹ + f u w, φ(h)·f = W f − U f U⁻¹ W");
    let (u_inv, bu_inv) = (u.inverse()?, big_u.inverse()?);
    for pq in 0..4 {
        let mut f = Matrix::zeros(2, 2);
        f.set(pq / 2, pq % 2, qi(1));
        let as_matrix = |v: Vector| Matrix::from_rows(vec![v[..2].to_vec(), v[2..].to_vec()]).expect("2x2");
        let flat = f.entries().to_vec();
        let g_f = as_matrix(gen_c.act(&flat));
        let h_f = as_matrix(gen_x1.act(&flat));
        let ph_f = as_matrix(gen_cx2.act(&flat));
        let ok = g_f == u.dot(&f).dot(&u_inv)
            && g_f == big_u.dot(&f).dot(&bu_inv)
            && h_f == w.dot(&f).dot(&u_inv).add(&f.dot(&u).dot(&w))?
            && ph_f == big_w.dot(&f).sub(&big_u.dot(&f).dot(&bu_inv).dot(&big_w))?;
        report.expect(ok, || format!("f = E{}{}", pq / 2, pq % 2));
    }

    let end_p = with_rn(&end_e2);
    report.extend("End(P) with R_N: ", end_p.check());
    report.item("End(P) is (E(2), R_N)-Azumaya");
    report.expect(is_h_azumaya(&end_p), || "F or G is singular".into());

    report.item("End(P) lies in the graded part over H4");
    let over_h4 = from_double(&end_double, d)?;
    report.expect(bq_grad_member(&over_h4)?, || "gradings differ".into());

    let search = strongly_inner_witness_e2(&end_e2, C, X1, CX2)?;
    report.item("no strongly inner E(2)-action on End(P)");
    report.expect(search.witness.is_none() && search.branches.len() == 2, || format!("{search:?}"));

    report.item("g and φ(g) act alike on P ⊗ P");
    let on_square = |x: &Vector| -> Matrix {
        let mut out = Matrix::zeros(4, 4);
        for (ab, c) in dh.delta_of(x).terms() {
            out = out.add(&kron(&rep[ab[0]], &rep[ab[1]]).scale(c)).expect("4x4");
        }
        out
    };
    report.expect(on_square(&g) == on_square(&phi_g), || "actions differ on P ⊗ P".into());

    if !report.passed() {
        return Err(Error::Verification(format!("kernel witness:\n{report}")));
    }
    Ok(KernelWitness {
        u,
        w,
        big_u,
        big_w,
        end_p,
        search,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_passes_every_step() {
        let k = kernel_witness().unwrap();
        assert!(k.report.passed());
        assert_eq!(k.search.branches.iter().filter(|b| b.failure.is_some()).count(), 2);
    }

    #[test]
    fn stored_matrices_satisfy_the_small_relations() {
        let k = kernel_witness().unwrap();
        assert_eq!(k.u.dot(&k.u), Matrix::identity(2));
        assert!(k.big_w.dot(&k.big_w).is_zero());
        assert!(k.u.dot(&k.big_w).add(&k.big_w.dot(&k.u)).unwrap().is_zero());
    }
}
