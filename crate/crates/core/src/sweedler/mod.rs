//! The Sweedler algebra `H_4` and its two-dimensional YD algebras
//! `C(a;t,s) = k⟨x | x² = a⟩` with `g·x = −x`, `h·x = t`,
//! `ρ(x) = x⊗g + s 1⊗h`.

mod cocycle;
mod transport;

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

pub use cocycle::{build_sigma, cocycle_twist, r_t, r_t_form, LazyCocycle};
pub use transport::{
    aut_algebra, aut_conjugate, aut_twist, h_alpha, intersection_report, phi_inverse, phi_transport, psi_inverse,
    psi_transport, IntersectionReport, IntersectionVerdict,
};

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::hopf::{h4, HopfAlgebra};
use crate::linalg::{unit_vec, Matrix};
use crate::rational::{qi, Rational};
use crate::yd::{h_opposite, is_yd_isomorphism, sharp_product, strongly_inner_witness, YdAlgebra};

/// A shared copy of `H_4`, so that algebras built here compare their Hopf
/// algebras by pointer.
pub fn h4_arc() -> Arc<HopfAlgebra> {
    static H4: OnceLock<Arc<HopfAlgebra>> = OnceLock::new();
    H4.get_or_init(|| Arc::new(h4())).clone()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CDescriptor {
    pub a: Rational,
    pub t: Rational,
    pub s: Rational,
}

impl CDescriptor {
    pub fn new(a: Rational, t: Rational, s: Rational) -> Self {
        CDescriptor { a, t, s }
    }

    pub fn from_i64(a: i64, t: i64, s: i64) -> Self {
        CDescriptor::new(qi(a), qi(t), qi(s))
    }

    /// `2a ≠ st`
    pub fn is_azumaya(&self) -> bool {
        &self.a * qi(2) != &self.s * &self.t
    }
}

impl std::fmt::Display for CDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "C({};{},{})", self.a, self.t, self.s)
    }
}

/// `C(a;t,s)` on the basis `1, x`.
pub fn build_c(d: &CDescriptor) -> YdAlgebra {
    let a = d.a.clone();
    let alg = StructureAlgebra::from_fn(vec!["1".into(), "x".into()], unit_vec(2, 0), |i, j| match (i, j) {
        (0, k) | (k, 0) => unit_vec(2, k),
        _ => vec![a.clone(), qi(0)],
    });
    let g = Matrix::diag(&[qi(1), qi(-1)]);
    let nil = Matrix::from_rows(vec![vec![qi(0), d.t.clone()], vec![qi(0), qi(0)]]).expect("2x2");
    let action = vec![Matrix::identity(2), g, nil.clone(), nil];
    // row b*4 + k holds the coefficient of e_b ⊗ e_k
    let mut coaction = Matrix::zeros(8, 2);
    coaction.set(0, 0, qi(1));
    coaction.set(5, 1, qi(1));
    coaction.set(2, 1, d.s.clone());
    YdAlgebra::new(h4_arc(), alg, action, coaction).expect("shapes are fixed")
}

/// Reads `(a,t,s)` off a two-dimensional YD algebra over `H_4` whose basis
/// is `1, x` with `x` as in the family; `None` if it is not of that form.
pub fn descriptor_of(alg: &YdAlgebra) -> Option<CDescriptor> {
    if alg.dim() != 2 || *alg.hopf != *h4_arc() {
        return None;
    }
    let d = CDescriptor::new(
        alg.alg.basis_product_vec(1, 1)[0].clone(),
        alg.action[2].get(0, 1).clone(),
        alg.coaction.get(2, 1).clone(),
    );
    let built = build_c(&d);
    (built.alg.mult_table() == alg.alg.mult_table()
        && built.alg.unit() == alg.alg.unit()
        && built.action == alg.action
        && built.coaction == alg.coaction)
        .then_some(d)
}

/// `α ≠ 0` with `a = α² a'`, `t = α t'`, `s = α s'`, i.e. `x ↦ α x'` is an
/// isomorphism `C(d1) → C(d2)`.
pub fn c_equivalent(d1: &CDescriptor, d2: &CDescriptor) -> Option<Rational> {
    let alpha = if !d2.t.is_zero() {
        &d1.t / &d2.t
    } else if !d2.s.is_zero() {
        &d1.s / &d2.s
    } else if !d1.t.is_zero() || !d1.s.is_zero() {
        return None;
    } else if d2.a.is_zero() {
        qi(1)
    } else {
        (&d1.a / &d2.a).sqrt_exact()?
    };
    let ok = !alpha.is_zero()
        && d1.a == &alpha * &alpha * &d2.a
        && d1.t == &alpha * &d2.t
        && d1.s == &alpha * &d2.s;
    ok.then_some(alpha)
}

/// A normal form for the isomorphism class: `t = 1` when `t ≠ 0`, else
/// `s = 1` when `s ≠ 0`, else `a` squarefree.
pub fn c_canonical(d: &CDescriptor) -> CDescriptor {
    let scale = |alpha: &Rational| {
        CDescriptor::new(&d.a / (alpha * alpha), &d.t / alpha, &d.s / alpha)
    };
    if !d.t.is_zero() {
        scale(&d.t)
    } else if !d.s.is_zero() {
        scale(&d.s)
    } else {
        match d.a.square_class() {
            Some(k) => CDescriptor::new(Rational::from_integer(k), qi(0), qi(0)),
            None => d.clone(),
        }
    }
}

/// The explicit isomorphism `diag(1, α)` behind [`c_equivalent`], checked on
/// the built algebras.
pub fn c_isomorphism(d1: &CDescriptor, d2: &CDescriptor) -> Option<Matrix> {
    let alpha = c_equivalent(d1, d2)?;
    let f = Matrix::diag(&[qi(1), alpha]);
    is_yd_isomorphism(&build_c(d1), &build_c(d2), &f).then_some(f)
}

/// `C(a;t,s)^op = C(st − a;t,s)`, checked against the `H`-opposite of the
/// built algebra.
pub fn c_opposite(d: &CDescriptor) -> Result<CDescriptor> {
    let out = CDescriptor::new(&d.s * &d.t - &d.a, d.t.clone(), d.s.clone());
    let built = h_opposite(&build_c(d));
    match descriptor_of(&built) {
        Some(read) if c_equivalent(&read, &out).is_some() => Ok(out),
        _ => Err(Error::Verification(format!("H-opposite of {d} does not match {out}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "l", rename_all = "snake_case")]
pub enum ImageMembership {
    Never,
    Unique(Rational),
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CMembership {
    /// `l` with `s = l t`
    pub i: ImageMembership,
    /// `l` with `s l = t`
    pub iota: ImageMembership,
}

fn solve_scalar(coeff: &Rational, rhs: &Rational) -> ImageMembership {
    if !coeff.is_zero() {
        ImageMembership::Unique(rhs / coeff)
    } else if rhs.is_zero() {
        ImageMembership::All
    } else {
        ImageMembership::Never
    }
}

/// For which `l` the class of `C(a;t,s)` lies in `Im(i_l)` and `Im(ι_l)`.
pub fn c_membership(d: &CDescriptor) -> Result<CMembership> {
    if !d.is_azumaya() {
        return Err(Error::Precondition(format!("{d} is not H-Azumaya (2a = st)")));
    }
    Ok(CMembership {
        i: solve_scalar(&d.t, &d.s),
        iota: solve_scalar(&d.s, &d.t),
    })
}

/// Whether the coaction of `C(d)` is the one induced by `R_l`.
pub fn coaction_induced_by(d: &CDescriptor, l: &Rational) -> bool {
    let c = build_c(d);
    crate::yd::induced_coaction(&c.module(), &r_t(l)).coaction == c.coaction
}

/// Whether the action of `C(d)` is the one induced by `r_l`.
pub fn action_induced_by(d: &CDescriptor, l: &Rational) -> bool {
    let c = build_c(d);
    crate::yd::induced_action(&c.comodule(), &r_t_form(l)).action == c.action
}

/// `C(a;t,s) # C(a';t',s')` as a quaternion algebra on `X = x#1`, `Y = 1#y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuaternionPresentation {
    pub x_squared: Rational,
    pub y_squared: Rational,
    /// `XY + YX`
    pub anticommutator: Rational,
    /// `h · X`
    pub h_on_x: Rational,
    /// `h · Y`
    pub h_on_y: Rational,
    /// coefficient of `1 ⊗ h` in `ρ(X)`
    pub rho_x: Rational,
    /// coefficient of `1 ⊗ h` in `ρ(Y)`
    pub rho_y: Rational,
}

fn read_quaternion(p: &YdAlgebra) -> Option<QuaternionPresentation> {
    // basis 1#1, 1#y, x#1, x#y
    let (x, y) = (p.alg.basis(2), p.alg.basis(1));
    let alg = &p.alg;
    let scalar_image = |m: &Matrix, v: &[Rational]| alg.as_scalar(&m.act(v));
    let rho_of = |v: &[Rational], idx: usize| -> Option<Rational> {
        let rho = p.coact(v);
        let mut expected = crate::tensor::Tensor::basis(&[idx, 1]);
        let s = rho.coefficient(&[0, 2]);
        expected.add_term(vec![0, 2], s.clone());
        (rho == expected).then_some(s)
    };
    Some(QuaternionPresentation {
        x_squared: alg.as_scalar(&alg.mul(&x, &x))?,
        y_squared: alg.as_scalar(&alg.mul(&y, &y))?,
        anticommutator: alg.as_scalar(&crate::linalg::vec_add(&alg.mul(&x, &y), &alg.mul(&y, &x)))?,
        h_on_x: scalar_image(&p.action[2], &x)?,
        h_on_y: scalar_image(&p.action[2], &y)?,
        rho_x: rho_of(&x, 2)?,
        rho_y: rho_of(&y, 1)?,
    })
}

/// The quaternion presentation of `C(d1) # C(d2)`, cross-checked against
/// the `#` product built from structure constants.
pub fn c_product(d1: &CDescriptor, d2: &CDescriptor) -> Result<QuaternionPresentation> {
    let expected = QuaternionPresentation {
        x_squared: d1.a.clone(),
        y_squared: d2.a.clone(),
        anticommutator: &d1.s * &d2.t,
        h_on_x: d1.t.clone(),
        h_on_y: d2.t.clone(),
        rho_x: d1.s.clone(),
        rho_y: d2.s.clone(),
    };
    let built = sharp_product(&build_c(d1), &build_c(d2))?;
    match read_quaternion(&built) {
        Some(read) if read == expected => Ok(expected),
        other => Err(Error::Verification(format!(
            "{d1} # {d2}: structure gives {other:?}, expected {expected:?}"
        ))),
    }
}

/// `[C(a;t,0)] = (β, [C(a)])` in `BM_0 ≅ (k,+) × BW(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bm0Invariant {
    pub beta: Rational,
    /// squarefree integer representing the square class of `a`
    pub square_class: Rational,
}

/// `β = t²/(4a)` in closed form and as `w²` for a strongly inner witness
/// on `C(a;t,0) # C(−a;0,0)`; the two must agree.
pub fn classify_bm0(d: &CDescriptor) -> Result<Bm0Invariant> {
    if !d.s.is_zero() || d.a.is_zero() {
        return Err(Error::Precondition(format!("{d}: need s = 0 and a ≠ 0")));
    }
    let beta = &d.t * &d.t / (qi(4) * &d.a);
    let partner = CDescriptor::new(-d.a.clone(), qi(0), qi(0));
    let product = sharp_product(&build_c(d), &build_c(&partner))?;
    let witness = strongly_inner_witness(&product.module(), 1, 2)?
        .ok_or_else(|| Error::Verification(format!("{d}: no strongly inner witness")))?;
    if witness.beta != beta {
        return Err(Error::Verification(format!(
            "{d}: closed form β = {beta}, witness gives {}",
            witness.beta
        )));
    }
    let square_class = Rational::from_integer(d.a.square_class().expect("a ≠ 0"));
    Ok(Bm0Invariant { beta, square_class })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::yd::is_h_azumaya;

    fn d(a: i64, t: i64, s: i64) -> CDescriptor {
        CDescriptor::from_i64(a, t, s)
    }

    #[test]
    fn canonical_forms_are_equivalent_and_stable() {
        for x in [d(3, 2, 5), d(8, 0, 2), d(12, 0, 0), d(0, 0, 0), d(-18, 0, 0)] {
            let c = c_canonical(&x);
            assert!(c_equivalent(&c, &x).is_some(), "{x} vs {c}");
            assert_eq!(c_canonical(&c), c);
        }
        assert_eq!(c_canonical(&d(12, 0, 0)), d(3, 0, 0));
        assert_eq!(c_canonical(&d(3, 2, 5)), CDescriptor::new(q(3, 4), qi(1), q(5, 2)));
    }

    #[test]
    fn built_algebras_are_yd_and_azumaya_iff_2a_ne_st() {
        for x in [d(1, 1, 0), d(0, 0, 0), d(3, 2, 3), d(2, 1, 4), d(-1, 2, 5)] {
            let c = build_c(&x);
            assert!(c.check().passed(), "{x}");
            assert_eq!(is_h_azumaya(&c), x.is_azumaya(), "{x}");
            assert_eq!(descriptor_of(&c), Some(x));
        }
        assert!(!d(0, 0, 0).is_azumaya());
        let c = build_c(&CDescriptor::new(qi(1), qi(1), q(3, 2)));
        assert_eq!(c.coaction.get(2, 1), &q(3, 2));
        assert_eq!(c.coaction.get(5, 1), &qi(1));
    }

    #[test]
    fn equivalence_examples() {
        assert_eq!(c_equivalent(&d(4, 2, 2), &d(1, 1, 1)), Some(qi(2)));
        assert_eq!(c_equivalent(&d(1, 1, 0), &d(1, -1, 0)), Some(qi(-1)));
        assert_eq!(c_equivalent(&d(2, 0, 0), &d(1, 0, 0)), None);
        assert_eq!(c_equivalent(&d(9, 0, 0), &d(1, 0, 0)), Some(qi(3)));
        assert_eq!(c_equivalent(&d(1, 1, 0), &d(1, 0, 0)), None);
        assert!(c_isomorphism(&d(4, 2, 2), &d(1, 1, 1)).is_some());
    }

    #[test]
    fn opposite_examples() {
        assert_eq!(c_opposite(&d(0, 0, 0)).unwrap(), d(0, 0, 0));
        let x = d(3, 2, 5);
        let op = c_opposite(&x).unwrap();
        assert_eq!(op, d(7, 2, 5));
        assert_eq!(c_opposite(&op).unwrap(), x);
    }

    #[test]
    fn membership_examples() {
        let m = c_membership(&CDescriptor::new(qi(1), qi(1), q(2, 3))).unwrap();
        assert_eq!(m.i, ImageMembership::Unique(q(2, 3)));
        let m = c_membership(&d(1, 0, 1)).unwrap();
        assert_eq!(m.i, ImageMembership::Never);
        assert_eq!(m.iota, ImageMembership::Unique(qi(0)));
        let m = c_membership(&d(1, 1, 1)).unwrap();
        assert_eq!(m.i, ImageMembership::Unique(qi(1)));
        assert_eq!(m.iota, ImageMembership::Unique(qi(1)));
        assert_eq!(c_membership(&d(1, 0, 0)).unwrap().i, ImageMembership::All);
        assert!(c_membership(&d(1, 2, 1)).is_err());
    }

    #[test]
    fn induced_structures_match_membership() {
        let x = d(1, 2, 6);
        assert!(coaction_induced_by(&x, &qi(3)));
        assert!(!coaction_induced_by(&x, &qi(2)));
        let y = d(1, 6, 2);
        assert!(action_induced_by(&y, &qi(3)));
        assert!(!action_induced_by(&y, &qi(1)));
    }

    #[test]
    fn product_examples() {
        let p = c_product(&d(2, 3, 5), &d(-1, 7, 1)).unwrap();
        assert_eq!(p.anticommutator, qi(35));
        let p = c_product(&CDescriptor::new(qi(1), q(4, 3), qi(2)), &CDescriptor::new(qi(1), qi(1), q(1, 2))).unwrap();
        assert_eq!((p.x_squared, p.y_squared, p.anticommutator), (qi(1), qi(1), qi(2)));
        let p = c_product(&d(2, 0, 0), &d(3, 0, 0)).unwrap();
        assert_eq!(p.anticommutator, qi(0));
    }

    #[test]
    fn bm0_examples() {
        assert_eq!(classify_bm0(&d(1, 2, 0)).unwrap().beta, qi(1));
        let z = classify_bm0(&d(12, 0, 0)).unwrap();
        assert_eq!(z, Bm0Invariant { beta: qi(0), square_class: qi(3) });
        let beta = q(-5, 7);
        let x = CDescriptor::new((qi(4) * &beta).recip(), qi(1), qi(0));
        assert_eq!(classify_bm0(&x).unwrap().beta, beta);
        assert!(classify_bm0(&d(1, 1, 1)).is_err());
        assert!(classify_bm0(&d(0, 1, 0)).is_err());
    }
}
