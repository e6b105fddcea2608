//! Witnesses for inner and strongly inner actions of `H_4` and `E(2)`.
//!
//! A skew-primitive generator `x` with `Δ(x) = 1 ⊗ x + x ⊗ c` acts innerly
//! when `x · a = v (c · a) - a v` for some odd `v`. The action is strongly
//! inner when a convolution-invertible algebra map `p: H → A` implements it;
//! for `H_4` this amounts to `u = p(g)` with `u² = 1` and `w` with
//! `h · a = w (g · a) - a w`, `wu + uw = 0`, `w² = β`.

use serde::Serialize;

use super::ModuleAlgebra;
use crate::algebra::Grading;
use crate::error::{Error, Result};
use crate::linalg::{vec_add, vec_sub, zero_vec, LinearSystem, Vector};
use crate::rational::Rational;

/// An odd `v` with `x · a = v (c · a) - a v` for all `a`, or `None`.
pub fn inner_witness(a: &ModuleAlgebra, grouplike: usize, generator: usize) -> Result<Option<Vector>> {
    let grading = Grading::from_involution(&a.action[grouplike], "grouplike action")?;
    let n = a.dim();
    let odd: Vec<usize> = (0..n).filter(|&i| grading.parity[i] == 1).collect();
    let mut sys = LinearSystem::new(odd.len());
    for e in 0..n {
        let ca = a.action[grouplike].column(e);
        let columns: Vec<Vector> = odd
            .iter()
            .map(|&j| vec_sub(&a.alg.mul(&a.alg.basis(j), &ca), &a.alg.basis_product_vec(e, j)))
            .collect();
        sys.push_vector_equation(&columns, &a.action[generator].column(e));
    }
    Ok(sys.solve().particular.map(|x| {
        let mut v = zero_vec(n);
        for (k, &j) in odd.iter().enumerate() {
            v[j] = x[k].clone();
        }
        v
    }))
}

/// Grid points examined before [`grouplike_inner`] gives up.
const GRID_LIMIT: usize = 200_000;

/// An invertible `u` with `g · a = u a u⁻¹` for all `a`, or `None`.
///
/// The solutions of `u a = (g · a) u` form a subspace; `det(L_u)` restricted
/// to it is a polynomial of degree at most `dim A` in each coordinate, so it
/// vanishes identically iff it vanishes on the grid `{0, …, dim A}^k`.
pub fn grouplike_inner(a: &ModuleAlgebra, g: usize) -> Result<Option<Vector>> {
    let n = a.dim();
    let mut sys = LinearSystem::new(n);
    for e in 0..n {
        let ga = a.action[g].column(e);
        let columns: Vec<Vector> = (0..n)
            .map(|j| vec_sub(&a.alg.basis_product_vec(j, e), &a.alg.mul(&ga, &a.alg.basis(j))))
            .collect();
        sys.push_vector_equation(&columns, &zero_vec(n));
    }
    let kernel = sys.solve().kernel;
    let k = kernel.len();
    if k == 0 {
        return Ok(None);
    }
    let side = n + 1;
    let points = side.checked_pow(k as u32).filter(|&p| p <= GRID_LIMIT).ok_or_else(|| {
        Error::NotExhaustive(format!("{k}-dimensional solution space needs {side}^{k} grid points"))
    })?;
    for idx in 0..points {
        let mut u = zero_vec(n);
        let mut rest = idx;
        for basis in &kernel {
            let c = Rational::from_integer((rest % side) as i64);
            rest /= side;
            if !c.is_zero() {
                u = vec_add(&u, &crate::linalg::vec_scale(basis, &c));
            }
        }
        if a.alg.inverse(&u).is_some() {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

/// The element `u` with `u a u⁻¹ = g · a` and `u² = 1`.
fn conjugator(a: &ModuleAlgebra, g: usize) -> Result<Option<Vector>> {
    let n = a.dim();
    let mut sys = LinearSystem::new(n);
    for e in 0..n {
        let ga = a.action[g].column(e);
        let columns: Vec<Vector> = (0..n)
            .map(|j| vec_sub(&a.alg.basis_product_vec(j, e), &a.alg.mul(&ga, &a.alg.basis(j))))
            .collect();
        sys.push_vector_equation(&columns, &zero_vec(n));
    }
    let kernel = sys.solve().kernel;
    match kernel.len() {
        0 => Ok(None),
        1 => {
            let u0 = &kernel[0];
            let Some(lambda) = a.alg.as_scalar(&a.alg.mul(u0, u0)) else {
                return Ok(None);
            };
            if lambda.is_zero() {
                return Ok(None);
            }
            let root = lambda
                .sqrt_exact()
                .ok_or_else(|| Error::NoRationalNormalization(format!("u² = {lambda}")))?;
            Ok(Some(crate::linalg::vec_scale(u0, &root.recip())))
        }
        k => Err(Error::NotExhaustive(format!(
            "the conjugating element ranges over a {k}-dimensional space"
        ))),
    }
}

/// Solves `x · f = Σ_k left_k(w) f right_k` style systems: `columns(j, f)`
/// gives the contribution of `w = e_j` for the basis element `f`, and the
/// anticommutation `wu + uw = 0` is appended.
fn solve_with_anticommutation(
    a: &ModuleAlgebra,
    u: &[Rational],
    target: impl Fn(usize) -> Vector,
    columns: impl Fn(usize, usize) -> Vector,
) -> Result<Option<Vector>> {
    let n = a.dim();
    let mut sys = LinearSystem::new(n);
    for f in 0..n {
        let cols: Vec<Vector> = (0..n).map(|j| columns(j, f)).collect();
        sys.push_vector_equation(&cols, &target(f));
    }
    let anti: Vec<Vector> = (0..n)
        .map(|j| {
            let e = a.alg.basis(j);
            vec_add(&a.alg.mul(&e, u), &a.alg.mul(u, &e))
        })
        .collect();
    sys.push_vector_equation(&anti, &zero_vec(n));
    let sol = sys.solve();
    if !sol.kernel.is_empty() {
        return Err(Error::NotExhaustive(format!(
            "witness ranges over a {}-dimensional space",
            sol.kernel.len()
        )));
    }
    Ok(sol.particular)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrongWitness {
    pub u: Vector,
    pub w: Vector,
    pub beta: Rational,
}

/// Strongly inner witness `(u, w, β)` for an `H_4`-type action, with `g`
/// and `h` the basis indices of the grouplike and the skew-primitive.
pub fn strongly_inner_witness(a: &ModuleAlgebra, g: usize, h: usize) -> Result<Option<StrongWitness>> {
    let Some(u) = conjugator(a, g)? else {
        return Ok(None);
    };
    let alg = &a.alg;
    let w = solve_with_anticommutation(
        a,
        &u,
        |f| a.action[h].column(f),
        |j, f| {
            let e = alg.basis(j);
            vec_sub(&alg.mul(&e, &a.action[g].column(f)), &alg.mul(&alg.basis(f), &e))
        },
    )?;
    let Some(w) = w else {
        return Ok(None);
    };
    let beta = alg
        .as_scalar(&alg.mul(&w, &w))
        .ok_or_else(|| Error::NotScalar("w²".into()))?;
    Ok(Some(StrongWitness { u, w, beta }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E2Witness {
    /// `p(c)`
    pub u: Vector,
    /// `p(x_1)`
    pub w: Vector,
    /// `p(c x_2)`
    pub big_w: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchOutcome {
    pub sign: i8,
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E2Search {
    pub branches: Vec<BranchOutcome>,
    pub witness: Option<E2Witness>,
}

/// Searches for `p: E(2) → A` implementing the action, branch by branch on
/// the sign of `u = p(c)`. Given `u`, `p(x_1)` and `p(c x_2)` solve
/// `x_1 · f = w f u + f u w` and `(c x_2) · f = W f - u f u W` together with
/// anticommutation with `u`; then `w² = W² = 0` and `Ww = wW` must hold.
pub fn strongly_inner_witness_e2(a: &ModuleAlgebra, c: usize, x1: usize, cx2: usize) -> Result<E2Search> {
    let alg = &a.alg;
    let mut search = E2Search {
        branches: Vec::new(),
        witness: None,
    };
    let Some(u0) = conjugator(a, c)? else {
        search.branches.push(BranchOutcome {
            sign: 0,
            failure: Some("no element implements the grouplike".into()),
        });
        return Ok(search);
    };
    for sign in [1i8, -1] {
        let u = crate::linalg::vec_scale(&u0, &Rational::from(sign as i64));
        let w = solve_with_anticommutation(
            a,
            &u,
            |f| a.action[x1].column(f),
            |j, f| {
                let e = alg.basis(j);
                let fu = alg.mul(&alg.basis(f), &u);
                vec_add(&alg.mul(&e, &fu), &alg.mul(&fu, &e))
            },
        )?;
        let big_w = solve_with_anticommutation(
            a,
            &u,
            |f| a.action[cx2].column(f),
            |j, f| {
                let e = alg.basis(j);
                let ufu = alg.mul3(&u, &alg.basis(f), &u);
                vec_sub(&alg.mul(&e, &alg.basis(f)), &alg.mul(&ufu, &e))
            },
        )?;
        let failure = match (&w, &big_w) {
            (None, _) => Some("x1 is not implemented".to_string()),
            (_, None) => Some("c x2 is not implemented".to_string()),
            (Some(w), Some(bw)) => {
                if !crate::linalg::vec_is_zero(&alg.mul(w, w)) {
                    Some("p(x1)² != 0".to_string())
                } else if !crate::linalg::vec_is_zero(&alg.mul(bw, bw)) {
                    Some("p(c x2)² != 0".to_string())
                } else if alg.commutator(bw, w).iter().any(|x| !x.is_zero()) {
                    Some("relation (c x2) x1 - x1 (c x2) = 0 is not respected".to_string())
                } else {
                    None
                }
            }
        };
        if failure.is_none() && search.witness.is_none() {
            search.witness = Some(E2Witness {
                u: u.clone(),
                w: w.clone().expect("checked"),
                big_w: big_w.clone().expect("checked"),
            });
        }
        search.branches.push(BranchOutcome { sign, failure });
    }
    Ok(search)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::super::tests::c_alg;
    use super::super::{sharp_product, ModuleAlgebra};
    use super::*;
    use crate::algebra::StructureAlgebra;
    use crate::hopf::h4;
    use crate::rational::{q, qi};

    #[test]
    fn quaternion_witness_and_beta() {
        for (a, t) in [(qi(2), qi(3)), (q(-1, 3), q(5, 2)), (qi(7), qi(0))] {
            let p = sharp_product(&c_alg(a.clone(), t.clone(), qi(0)), &c_alg(-a.clone(), qi(0), qi(0))).unwrap();
            let m = p.module();
            let v = inner_witness(&m, 1, 2).unwrap().unwrap();
            // basis 1#1, 1#y, x#1, x#y: v = λX + μY with t = -2λa, μ = 0
            assert_eq!(v[2], -&t / (qi(2) * &a));
            assert!(v[1].is_zero());
            let s = strongly_inner_witness(&m, 1, 2).unwrap().unwrap();
            assert_eq!(s.beta, &t * &t / (qi(4) * &a));
        }
    }

    #[test]
    fn trivial_action_gives_trivial_witnesses() {
        let h = Arc::new(h4());
        let m = ModuleAlgebra::trivial(h, StructureAlgebra::endomorphism(2));
        assert_eq!(inner_witness(&m, 1, 2).unwrap(), Some(zero_vec(4)));
        let s = strongly_inner_witness(&m, 1, 2).unwrap().unwrap();
        assert_eq!(s.u, m.alg.unit().clone());
        assert_eq!(s.w, zero_vec(4));
        assert_eq!(s.beta, qi(0));
    }

    #[test]
    fn negative_square_has_no_rational_normalization() {
        // u = XY with (XY)² = -a a' in C(a;0,0) # C(a';0,0)
        let p = sharp_product(&c_alg(qi(1), qi(0), qi(0)), &c_alg(qi(1), qi(0), qi(0))).unwrap();
        let err = strongly_inner_witness(&p.module(), 1, 2).unwrap_err();
        assert!(matches!(err, Error::NoRationalNormalization(_)));
    }

    #[test]
    fn commutative_odd_algebra_is_not_inner() {
        let c = c_alg(qi(1), qi(1), qi(0)).module();
        assert!(strongly_inner_witness(&c, 1, 2).unwrap().is_none());
    }
}
