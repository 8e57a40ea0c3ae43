//! Randomised invariants: ring axioms, division-algorithm contracts,
//! Groebner correctness, syzygy soundness, oracle agreement, and the
//! structural shift inequalities.

use proptest::prelude::*;

use freeres::groebner::{
    buchberger, is_groebner_basis, normal_form_vector, syzygy_gb, FreeModule, VectorElement,
};
use freeres::harness::gen_monomial_ideal;
use freeres::invariants::{codim_module, depth_from_pd};
use freeres::polyring::{monomials_of_degree, Polynomial, Ring};
use freeres::resolution::{
    betti, koszul_betti_oracle, resolve_minimal, ses_shift_check, shifts, Limits,
    ModulePresentation,
};

fn ring3() -> Ring {
    Ring::with_var_names(32003, &["x", "y", "z"]).unwrap()
}

/// Random homogeneous polynomial of the given degree.
fn arb_homog(ring: Ring, degree: u32) -> impl Strategy<Value = Polynomial> {
    let monos = monomials_of_degree(ring.num_vars(), degree);
    let p = ring.characteristic();
    proptest::collection::vec(0..p, monos.len()).prop_map(move |coeffs| {
        let pairs = coeffs
            .into_iter()
            .zip(monos.iter().cloned())
            .map(|(c, m)| (c, m))
            .collect();
        Polynomial::from_terms(ring.clone(), pairs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms_hold(
        f in arb_homog(ring3(), 2),
        g in arb_homog(ring3(), 2),
        h in arb_homog(ring3(), 3),
    ) {
        // commutativity and associativity through exact term lists
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        let fg_h = f.mul(&g).unwrap().mul(&h).unwrap();
        let f_gh = f.mul(&g.mul(&h).unwrap()).unwrap();
        prop_assert_eq!(fg_h, f_gh);
        // distributivity over same-degree sums
        let sum = f.add(&g).unwrap();
        let lhs = sum.mul(&h).unwrap();
        let rhs = f.mul(&h).unwrap().add(&g.mul(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        // homogeneity closure
        if let Some(d) = f.mul(&h).unwrap().degree() {
            prop_assert_eq!(d, 5);
        }
    }

    #[test]
    fn division_is_idempotent_and_sound(
        f in arb_homog(ring3(), 3),
        d1 in arb_homog(ring3(), 2),
        d2 in arb_homog(ring3(), 2),
    ) {
        let divisors = vec![d1, d2];
        let r1 = f.normal_form(&divisors);
        prop_assert_eq!(r1.clone(), r1.normal_form(&divisors));
        // f - r reduces to zero: quotient reconstruction is exact
        let (qs, r) = f.divide(&divisors);
        let mut acc = r;
        for (q, d) in qs.iter().zip(&divisors) {
            acc = acc.add(&q.mul(d).unwrap()).unwrap();
        }
        prop_assert_eq!(acc, f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn buchberger_output_is_a_groebner_basis(seed in 0u64..5000) {
        let ring = ring3();
        let gens = gen_monomial_ideal(&ring, 3, 4, seed);
        // mix in a binomial to leave pure monomial territory
        let module = FreeModule::new(ring.clone(), vec![0]);
        let mut vecs: Vec<VectorElement> = gens
            .iter()
            .map(|g| VectorElement::from_polynomial(module.clone(), 0, g.clone()).unwrap())
            .collect();
        if seed % 2 == 0 {
            let f = ring.parse_poly("x^2 - y*z").unwrap();
            vecs.push(VectorElement::from_polynomial(module.clone(), 0, f).unwrap());
        }
        let gb = buchberger(&module, &vecs).unwrap();
        prop_assert!(is_groebner_basis(&gb).unwrap());
        // the input generators are members of the computed submodule
        for v in &vecs {
            let rem = normal_form_vector(v, &gb).unwrap();
            prop_assert!(rem.is_zero());
        }
    }

    #[test]
    fn syzygies_annihilate_and_form_a_basis(seed in 0u64..5000) {
        let ring = ring3();
        let gens = gen_monomial_ideal(&ring, 3, 4, seed);
        prop_assume!(gens.len() >= 2);
        let module = FreeModule::new(ring.clone(), vec![0]);
        let vecs: Vec<VectorElement> = gens
            .iter()
            .map(|g| VectorElement::from_polynomial(module.clone(), 0, g.clone()).unwrap())
            .collect();
        let gb = buchberger(&module, &vecs).unwrap();
        let syz = syzygy_gb(&gb, None).unwrap();
        for s in &syz.elements {
            // sum_k s_k * g_k = 0 exactly
            let mut acc = module.zero_element();
            for (q, g) in s.components().iter().zip(&gb.elements) {
                for t in q.terms() {
                    acc = acc
                        .sub_term_multiple(ring.field().neg(t.coeff), &t.mono, g)
                        .unwrap();
                }
            }
            prop_assert!(acc.is_zero());
        }
        prop_assert!(is_groebner_basis(&syz).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn resolution_agrees_with_koszul_oracle(seed in 0u64..2000) {
        let ring = Ring::with_var_names(32003, &["x", "y", "z", "w"]).unwrap();
        let gens = gen_monomial_ideal(&ring, 4, 4, seed);
        prop_assume!(!gens.is_empty());
        let pres = ModulePresentation::cyclic(ring.clone(), &gens).unwrap();
        let res = resolve_minimal(&pres, &Limits::none()).unwrap();
        let table = betti(&res).unwrap();
        // Taylor bound: degree of the lcm of all generators
        let cap = gens
            .iter()
            .map(|g| g.lead_term().unwrap().mono.clone())
            .reduce(|a, b| a.lcm(&b))
            .unwrap()
            .degree() as i64;
        let oracle = koszul_betti_oracle(&pres, cap).unwrap();
        prop_assert_eq!(table, oracle);
    }

    #[test]
    fn structural_inequalities_on_random_instances(seed in 0u64..2000) {
        let ring = ring3();
        let gens = gen_monomial_ideal(&ring, 4, 4, seed);
        prop_assume!(!gens.is_empty());
        let pres = ModulePresentation::cyclic(ring.clone(), &gens).unwrap();
        let res = resolve_minimal(&pres, &Limits::none()).unwrap();
        let profile = shifts(&betti(&res).unwrap()).unwrap();
        let codim = codim_module(&pres).unwrap();
        let n = ring.num_vars();
        // Hilbert syzygy bound, Auslander-Buchsbaum, codim comparison
        prop_assert!(profile.pd <= n);
        prop_assert_eq!(depth_from_pd(n, profile.pd) + profile.pd as i64, n as i64);
        prop_assert!(profile.pd as i64 >= codim);
        // strictly increasing shifts below the codimension
        for i in 0..codim.max(0) as usize {
            prop_assert!(profile.t_max(i).unwrap() < profile.t_max(i + 1).unwrap());
        }
        // first-syzygy sequence inequalities
        let ses = ses_shift_check(&pres, &Limits::none()).unwrap();
        prop_assert!(ses.all_hold);
    }
}
