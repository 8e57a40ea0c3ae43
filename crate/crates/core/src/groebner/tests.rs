use super::*;
use crate::polyring::Ring;

fn ring_xy() -> Ring {
    Ring::with_var_names(32003, &["x", "y"]).unwrap()
}

fn ideal_gens(ring: &Ring, polys: &[&str]) -> (FreeModule, Vec<VectorElement>) {
    let module = FreeModule::new(ring.clone(), vec![0]);
    let gens = polys
        .iter()
        .map(|s| {
            VectorElement::from_polynomial(module.clone(), 0, ring.parse_poly(s).unwrap()).unwrap()
        })
        .collect();
    (module, gens)
}

fn lead_monos(gb: &GroebnerBasis) -> Vec<String> {
    let ring = gb.module.ring().clone();
    gb.leads
        .iter()
        .map(|l| {
            crate::polyring::Polynomial::from_monomial(ring.clone(), 1, l.mono.clone()).to_string()
        })
        .collect()
}

#[test]
fn buchberger_keeps_a_basis_that_is_already_groebner() {
    let r = ring_xy();
    let (module, gens) = ideal_gens(&r, &["x", "y"]);
    let gb = buchberger(&module, &gens).unwrap();
    assert_eq!(gb.len(), 2);
    assert!(is_groebner_basis(&gb).unwrap());
    let leads = lead_monos(&gb);
    assert!(leads.contains(&"x".to_string()) && leads.contains(&"y".to_string()));
}

#[test]
fn buchberger_x2_xy_is_stable() {
    let r = ring_xy();
    let (module, gens) = ideal_gens(&r, &["x^2", "x*y"]);
    let gb = buchberger(&module, &gens).unwrap();
    // lone S-pair reduces to zero: y*x^2 - x*xy = 0
    assert_eq!(gb.len(), 2);
    assert!(is_groebner_basis(&gb).unwrap());
}

#[test]
fn buchberger_discovers_y_cubed() {
    let r = ring_xy();
    let (module, gens) = ideal_gens(&r, &["x^2 - y^2", "x*y"]);
    let gb = buchberger(&module, &gens).unwrap();
    let mut leads = lead_monos(&gb);
    leads.sort();
    assert_eq!(leads, vec!["x*y", "x^2", "y^3"]);
    assert!(is_groebner_basis(&gb).unwrap());
}

#[test]
fn empty_input_gives_empty_basis() {
    let r = ring_xy();
    let module = FreeModule::new(r, vec![0]);
    let gb = buchberger(&module, &[]).unwrap();
    assert!(gb.is_empty());
}

#[test]
fn koszul_syzygy_of_two_variables() {
    let r = ring_xy();
    let (module, gens) = ideal_gens(&r, &["x", "y"]);
    let gb = buchberger(&module, &gens).unwrap();
    let syz = syzygy_basis(&gb).unwrap();
    assert_eq!(syz.len(), 1);
    let s = &syz[0];
    assert_eq!(s.degree(), Some(2));
    // (y, -x) up to sign and basis ordering
    let mut comps: Vec<String> = s.components().iter().map(|c| c.to_string()).collect();
    comps.sort();
    assert_eq!(comps, vec!["32002*x", "y"]);
}

#[test]
fn syzygies_of_degree_two_monomials() {
    let r = ring_xy();
    let (module, gens) = ideal_gens(&r, &["x^2", "x*y", "y^2"]);
    let gb = buchberger(&module, &gens).unwrap();
    let syz = syzygy_gb(&gb, None).unwrap();
    assert_eq!(syz.len(), 2);
    for s in &syz.elements {
        assert_eq!(s.degree(), Some(3));
    }
    // lead terms sit in distinct positions
    assert_ne!(syz.leads[0].pos, syz.leads[1].pos);
    // soundness: sum_k s_k * g_k = 0
    for s in &syz.elements {
        let mut acc = gb.module.zero_element();
        for (q, g) in s.components().iter().zip(&gb.elements) {
            for t in q.terms() {
                acc = acc
                    .sub_term_multiple(gb.module.ring().field().neg(t.coeff), &t.mono, g)
                    .unwrap();
            }
        }
        assert!(acc.is_zero(), "syzygy does not annihilate the basis");
    }
}

#[test]
fn single_generator_has_no_syzygies() {
    let r = ring_xy();
    let (module, gens) = ideal_gens(&r, &["x^2 + y^2"]);
    let gb = buchberger(&module, &gens).unwrap();
    assert!(syzygy_basis(&gb).unwrap().is_empty());
}

#[test]
fn membership_examples() {
    let r = ring_xy();
    let (module, gens) = ideal_gens(&r, &["x^2", "x*y"]);
    let gb = buchberger(&module, &gens).unwrap();
    let member = |s: &str| {
        let v =
            VectorElement::from_polynomial(module.clone(), 0, r.parse_poly(s).unwrap()).unwrap();
        submodule_membership(&v, &gb).unwrap()
    };
    assert!(member("x^2*y"));
    assert!(!member("y^2"));
    assert!(submodule_membership(&module.zero_element(), &gb).unwrap());
}

#[test]
fn syzygy_soundness_composes_to_zero_on_mixed_ideal() {
    let r = ring_xy();
    let (module, gens) = ideal_gens(&r, &["x^2 - y^2", "x*y"]);
    let gb = buchberger(&module, &gens).unwrap();
    let syz = syzygy_gb(&gb, None).unwrap();
    assert!(!syz.is_empty());
    for s in &syz.elements {
        let mut acc = module.zero_element();
        for (q, g) in s.components().iter().zip(&gb.elements) {
            for t in q.terms() {
                acc = acc
                    .sub_term_multiple(module.ring().field().neg(t.coeff), &t.mono, g)
                    .unwrap();
            }
        }
        assert!(acc.is_zero());
    }
    // the syzygy output is itself a Groebner basis under its order
    assert!(is_groebner_basis(&syz).unwrap());
}

#[test]
fn direct_sum_positions_do_not_interact() {
    let r = Ring::with_var_names(32003, &["x", "y", "z"]).unwrap();
    let module = FreeModule::new(r.clone(), vec![0, 0]);
    let gens = vec![
        VectorElement::from_polynomial(module.clone(), 0, r.parse_poly("x^2").unwrap()).unwrap(),
        VectorElement::from_polynomial(module.clone(), 0, r.parse_poly("y^2").unwrap()).unwrap(),
        VectorElement::from_polynomial(module.clone(), 1, r.parse_poly("x").unwrap()).unwrap(),
        VectorElement::from_polynomial(module.clone(), 1, r.parse_poly("y").unwrap()).unwrap(),
        VectorElement::from_polynomial(module.clone(), 1, r.parse_poly("z").unwrap()).unwrap(),
    ];
    let gb = buchberger(&module, &gens).unwrap();
    assert_eq!(gb.len(), 5);
    assert!(is_groebner_basis(&gb).unwrap());
}
