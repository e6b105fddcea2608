//! Descriptor-level transports between the Brauer groups attached to
//! `R_t` and `r_t`, the `Aut(H_4)` action, and intersections of the images
//! of `i_t` and `ι_t`. Every descriptor map is checked on built algebras.

use serde::Serialize;

use super::{
    build_c, build_sigma, c_equivalent, c_membership, cocycle_twist, descriptor_of, h4_arc, r_t_form, CDescriptor,
    ImageMembership,
};
use crate::error::{Error, Result};
use crate::hopf::phi_h4;
use crate::linalg::{kron, Matrix};
use crate::rational::{q, qi, Rational};
use crate::yd::{
    act_matrix, end_yd, induced_action, ComoduleAlgebra, EndVariant, YdAlgebra, YdModule,
};

fn matches(built: &YdAlgebra, expected: &CDescriptor, what: &str) -> Result<()> {
    let report = built.check();
    if !report.passed() {
        return Err(Error::Verification(format!("{what}: result is not a YD algebra:\n{report}")));
    }
    match descriptor_of(built) {
        Some(read) if c_equivalent(&read, expected).is_some() => Ok(()),
        read => Err(Error::Verification(format!("{what}: built {read:?}, expected {expected}"))),
    }
}

/// `Ψ_s(C(a;0,1)) = C(a + s/2; s, 1)`: twist by `σ_s`, then take the action
/// induced by `r_s`.
pub fn psi_transport(d: &CDescriptor, s: &Rational) -> Result<CDescriptor> {
    if !d.t.is_zero() || !d.s.is_one() {
        return Err(Error::Precondition(format!("Ψ is only implemented on C(a;0,1), got {d}")));
    }
    let out = CDescriptor::new(&d.a + s * q(1, 2), s.clone(), qi(1));
    let twisted = cocycle_twist(&build_c(d).comodule(), &build_sigma(s))?;
    matches(&induced_action(&twisted, &r_t_form(s)), &out, "Ψ")?;
    Ok(out)
}

/// `Ψ_s⁻¹(C(b;s,1)) = C(b − s/2; 0, 1)`.
pub fn psi_inverse(d: &CDescriptor, s: &Rational) -> Result<CDescriptor> {
    if d.t != *s || !d.s.is_one() {
        return Err(Error::Precondition(format!("Ψ_{s}⁻¹ is only implemented on C(b;{s},1), got {d}")));
    }
    let out = CDescriptor::new(&d.a - s * q(1, 2), qi(0), qi(1));
    if psi_transport(&out, s)? != *d {
        return Err(Error::Verification(format!("Ψ_{s} does not map {out} back to {d}")));
    }
    Ok(out)
}

/// `Φ_t(C(a;1,t)) = C(a;t,1)`: the opposite algebra with coaction
/// `ρ(b) = Σ e_i · b ⊗ φ⁻¹(e_i*)` and the action induced by `r_t`.
pub fn phi_transport(d: &CDescriptor) -> Result<CDescriptor> {
    if !d.t.is_one() {
        return Err(Error::Precondition(format!("Φ is only implemented on C(a;1,t), got {d}")));
    }
    let t = d.s.clone();
    let out = CDescriptor::new(d.a.clone(), t.clone(), qi(1));
    let c = build_c(d);
    let phi_inv = phi_h4().matrix.inverse()?;
    let (n, nh) = (c.dim(), 4);
    let mut coaction = Matrix::zeros(n * nh, n);
    for b in 0..n {
        for i in 0..nh {
            let moved = c.action[i].column(b);
            for (row, m) in moved.iter().enumerate() {
                for k in 0..nh {
                    let v = coaction.get(row * nh + k, b) + m * phi_inv.get(k, i);
                    coaction.set(row * nh + k, b, v);
                }
            }
        }
    }
    let comodule = ComoduleAlgebra::new(h4_arc(), c.alg.opposite(), coaction)?;
    matches(&induced_action(&comodule, &r_t_form(&t)), &out, "Φ")?;
    Ok(out)
}

/// `Φ_t⁻¹(C(a;t,1)) = C(a;1,t)`.
pub fn phi_inverse(d: &CDescriptor) -> Result<CDescriptor> {
    if !d.s.is_one() {
        return Err(Error::Precondition(format!("Φ⁻¹ is only implemented on C(a;t,1), got {d}")));
    }
    let out = CDescriptor::new(d.a.clone(), qi(1), d.t.clone());
    if phi_transport(&out)? != *d {
        return Err(Error::Verification(format!("Φ does not map {out} back to {d}")));
    }
    Ok(out)
}

/// The automorphism of `H_4` fixing `g` and scaling `h` by `α`.
fn aut_matrix(alpha: &Rational) -> Matrix {
    Matrix::diag(&[qi(1), qi(1), alpha.clone(), alpha.clone()])
}

/// `h ·_α b = α(h) · b`, `ρ_α(b) = b_0 ⊗ α⁻¹(b_1)`.
pub fn aut_twist(a: &YdAlgebra, alpha: &Rational) -> Result<YdAlgebra> {
    if alpha.is_zero() {
        return Err(Error::Precondition("α must be nonzero".into()));
    }
    if *a.hopf != *h4_arc() {
        return Err(Error::Precondition("automorphism twist is defined over H4".into()));
    }
    let m = aut_matrix(alpha);
    let action = (0..4).map(|i| act_matrix(&a.action, &m.column(i))).collect();
    let inv = aut_matrix(&alpha.recip());
    let coaction = kron(&Matrix::identity(a.dim()), &inv).dot(&a.coaction);
    YdAlgebra::new(a.hopf.clone(), a.alg.clone(), action, coaction)
}

/// `[A_α][C(a;t,s)][A_α]⁻¹ = [C(a; αt, s/α)]`.
pub fn aut_conjugate(d: &CDescriptor, alpha: &Rational) -> Result<CDescriptor> {
    if alpha.is_zero() {
        return Err(Error::Precondition("α must be nonzero".into()));
    }
    let out = CDescriptor::new(d.a.clone(), alpha * &d.t, &d.s / alpha);
    matches(&aut_twist(&build_c(d), alpha)?, &out, "Aut")?;
    Ok(out)
}

/// `H_α`: `H_4` with the regular coaction and `l · m = α(l_2) m S⁻¹(l_1)`.
/// For `α ≠ 1` this module and comodule is not itself Yetter-Drinfeld.
pub fn h_alpha(alpha: &Rational) -> Result<YdModule> {
    if alpha.is_zero() {
        return Err(Error::Precondition("α must be nonzero".into()));
    }
    let h = h4_arc();
    let aut = aut_matrix(alpha);
    let s_inv = h.antipode_inv();
    let action = (0..4)
        .map(|l| {
            let cols: Vec<_> = (0..4)
                .map(|m| {
                    let mut v = crate::linalg::zero_vec(4);
                    for (idx, c) in h.delta(l).terms() {
                        let term = h.alg().mul3(&aut.column(idx[1]), &h.basis(m), &s_inv.column(idx[0]));
                        crate::linalg::vec_axpy(&mut v, c, &term);
                    }
                    v
                })
                .collect();
            Matrix::from_columns(4, &cols).expect("4x4")
        })
        .collect();
    let cols: Vec<_> = (0..4).map(|m| h.delta(m).to_dense(&[4, 4])).collect();
    let coaction = Matrix::from_columns(16, &cols).expect("16x4");
    YdModule::new(h, 4, action, coaction)
}

/// `A_α = End(H_α)`, with the YD algebra axioms checked.
pub fn aut_algebra(alpha: &Rational) -> Result<YdAlgebra> {
    let a = end_yd(&h_alpha(alpha)?, EndVariant::Plain);
    let report = a.check();
    if !report.passed() {
        return Err(Error::Verification(format!("End(H_α) is not a YD algebra:\n{report}")));
    }
    Ok(a)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionVerdict {
    pub predicate: String,
    pub nontrivial: bool,
    /// a class lying in both images outside `i_0(BW)`
    pub witness: Option<CDescriptor>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionReport {
    pub t: Rational,
    pub s: Rational,
    /// `Im(i_t) ∩ Im(ι_s)`
    pub i_vs_iota: IntersectionVerdict,
    /// `Im(i_t) ∩ Im(i_s)`
    pub i_vs_i: IntersectionVerdict,
    /// `Im(ι_t) ∩ Im(ι_s)`
    pub iota_vs_iota: IntersectionVerdict,
}

fn contains(m: &ImageMembership, l: &Rational) -> bool {
    match m {
        ImageMembership::Unique(x) => x == l,
        ImageMembership::All => true,
        ImageMembership::Never => false,
    }
}

/// `C(a;t,s)` with the smallest positive integer `a` such that `2a ≠ st`.
fn azumaya_member(t: Rational, s: Rational) -> CDescriptor {
    let st = &s * &t;
    let a = (1..).map(qi).find(|a| a * qi(2) != st).expect("unbounded");
    CDescriptor::new(a, t, s)
}

fn verdict(
    predicate: &str,
    nontrivial: bool,
    witness: impl FnOnce() -> CDescriptor,
    member: impl Fn(&CDescriptor) -> Result<bool>,
) -> Result<IntersectionVerdict> {
    let witness = if nontrivial {
        let w = witness();
        if !member(&w)? {
            return Err(Error::Verification(format!("{w} does not lie in both images")));
        }
        Some(w)
    } else {
        None
    };
    Ok(IntersectionVerdict {
        predicate: predicate.into(),
        nontrivial,
        witness,
    })
}

/// Which pairs of images meet outside `i_0(BW)`, with a common member when
/// they do.
pub fn intersection_report(t: &Rational, s: &Rational) -> Result<IntersectionReport> {
    let i_vs_iota = verdict(
        "ts = 1",
        (t * s).is_one(),
        || azumaya_member(qi(1), t.clone()),
        |w| {
            let m = c_membership(w)?;
            Ok(contains(&m.i, t) && contains(&m.iota, s))
        },
    )?;
    let i_vs_i = verdict(
        "t = s",
        t == s,
        || azumaya_member(qi(1), t.clone()),
        |w| Ok(contains(&c_membership(w)?.i, t)),
    )?;
    let iota_vs_iota = verdict(
        "t = s",
        t == s,
        || azumaya_member(t.clone(), qi(1)),
        |w| Ok(contains(&c_membership(w)?.iota, t)),
    )?;
    Ok(IntersectionReport {
        t: t.clone(),
        s: s.clone(),
        i_vs_iota,
        i_vs_i,
        iota_vs_iota,
    })
}
