use proptest::prelude::*;

use hopf_brauer::e2::{
    build_rn, c_over_e2, decompositions, not_subgroup_demo, t_star, theorem61_check, theta, theta_star, DecompositionReport,
};
use hopf_brauer::linalg::{vec_is_zero, Matrix};
use hopf_brauer::rational::{q, qi, Rational};
use hopf_brauer::sweedler::{
    aut_conjugate, build_c, build_sigma, c_equivalent, c_opposite, c_product, descriptor_of, h4_arc, phi_transport,
    psi_transport, r_t, CDescriptor,
};
use hopf_brauer::yd::{fg_maps, is_h_azumaya, sharp_product};

fn small() -> impl Strategy<Value = i64> {
    prop_oneof![-9i64..=-1, 1i64..=9]
}

fn nonzero() -> impl Strategy<Value = Rational> {
    (small(), small()).prop_map(|(n, d)| q(n, d))
}

fn rational() -> impl Strategy<Value = Rational> {
    prop_oneof![1 => Just(qi(0)), 6 => nonzero()]
}

fn descriptor() -> impl Strategy<Value = CDescriptor> {
    (rational(), rational(), rational()).prop_map(|(a, t, s)| CDescriptor::new(a, t, s))
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(rational(), n * n)
        .prop_map(move |v| Matrix::from_rows(v.chunks(n).map(|r| r.to_vec()).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rationals_form_a_field(a in rational(), b in rational(), c in nonzero()) {
        prop_assert_eq!((&a + &b) * &c, &a * &c + &b * &c);
        prop_assert_eq!(&(&a / &c) * &c, a.clone());
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(3), b in matrix(3)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
        prop_assert_eq!(a.is_invertible().unwrap(), !a.det().unwrap().is_zero());
    }

    #[test]
    fn kernel_and_inverse_are_exact(a in matrix(4)) {
        let kernel = a.kernel();
        prop_assert_eq!(a.rank() + kernel.len(), 4);
        for v in &kernel {
            prop_assert!(vec_is_zero(&a.act(v)));
        }
        if let Ok(inv) = a.inverse() {
            prop_assert_eq!(a.dot(&inv), Matrix::identity(4));
        }
    }

    #[test]
    fn c_family_azumaya_determinants(d in descriptor()) {
        let c = build_c(&d);
        prop_assert!(c.check().passed());
        let defect = &d.s * &d.t - qi(2) * &d.a;
        let maps = fg_maps(&c);
        prop_assert_eq!(maps.f.det().unwrap(), -(&defect * &defect));
        prop_assert_eq!(maps.g.det().unwrap(), &defect * &defect);
        prop_assert_eq!(is_h_azumaya(&c), d.is_azumaya());
        prop_assert_eq!(descriptor_of(&c), Some(d));
    }

    #[test]
    fn opposite_descriptor(d in descriptor()) {
        let o = c_opposite(&d).unwrap();
        prop_assert_eq!(o, CDescriptor::new(&d.s * &d.t - &d.a, d.t.clone(), d.s.clone()));
    }

    #[test]
    fn rescaled_descriptors_are_isomorphic(d in descriptor(), alpha in nonzero()) {
        let scaled = CDescriptor::new(&alpha * &alpha * &d.a, &alpha * &d.t, &alpha * &d.s);
        prop_assert!(c_equivalent(&scaled, &d).is_some());
    }

    #[test]
    fn products_follow_the_presentation(d1 in descriptor(), d2 in descriptor()) {
        let p = c_product(&d1, &d2).unwrap();
        prop_assert_eq!(p.anticommutator, &d1.s * &d2.t);
    }

    #[test]
    fn transports_land_on_the_stated_descriptors(a in nonzero(), s in nonzero(), t in nonzero()) {
        let psi = psi_transport(&CDescriptor::new(a.clone(), qi(0), qi(1)), &s).unwrap();
        prop_assert_eq!(psi, CDescriptor::new(&a + &s / qi(2), s.clone(), qi(1)));
        let phi = phi_transport(&CDescriptor::new(a.clone(), qi(1), t.clone())).unwrap();
        prop_assert_eq!(phi, CDescriptor::new(a, t, qi(1)));
    }

    #[test]
    fn automorphism_twist(d in descriptor(), alpha in nonzero()) {
        let out = aut_conjugate(&d, &alpha).unwrap();
        prop_assert_eq!(out, CDescriptor::new(d.a.clone(), &alpha * &d.t, &d.s / &alpha));
    }

    #[test]
    fn sigma_is_lazy(t in rational()) {
        prop_assert!(build_sigma(&t).check(&h4_arc()).passed());
    }

    #[test]
    fn theta_pushes_rn_to_r_lambda_mu(l in rational(), m in rational(), a in nonzero()) {
        prop_assert_eq!(build_rn().push(&theta(&l, &m), &h4_arc()).r, r_t(&(&l * &m)).r);
        let start = build_c(&CDescriptor::new(a.clone(), qi(1), &l * &m));
        let back = t_star(&theta_star(&start.module(), &l, &m).unwrap()).unwrap();
        prop_assert_eq!(descriptor_of(&back), Some(CDescriptor::new(a, l, m)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn rn_decompositions_hold_on_products(
        a in nonzero(), l in rational(), m in rational(),
        b in nonzero(), l2 in rational(), m2 in rational(),
    ) {
        let p = sharp_product(&c_over_e2(&a, &l, &m).unwrap(), &c_over_e2(&b, &l2, &m2).unwrap()).unwrap();
        prop_assert!(p.check().passed());
        prop_assert_eq!(decompositions(&p).unwrap(), DecompositionReport { braiding: true, f: true, g: true });
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn inner_actions_match_graded_central_simplicity(a in nonzero(), l in rational(), m in rational()) {
        let c = c_over_e2(&a, &l, &m).unwrap();
        prop_assume!(is_h_azumaya(&c));
        let r = theorem61_check(&c).unwrap();
        prop_assert!(r.equivalent && r.x1_inner && r.graded_central_simple, "{:?}", r);
        prop_assert_ne!(r.addendum_consistent, Some(false));
    }

    #[test]
    fn products_with_t_ne_1_and_q_ne_2_leave_the_graded_part(t in nonzero(), q in nonzero()) {
        prop_assume!(!t.is_one() && q != qi(2));
        let r = not_subgroup_demo(&t, &q).unwrap();
        prop_assert!(r.closure_fails, "{}", r.report);
        prop_assert!(r.product.equivalent && !r.product.x2_inner);
    }
}
