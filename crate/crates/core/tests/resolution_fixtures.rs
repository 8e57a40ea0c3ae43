//! End-to-end resolution fixtures with hand-verified Betti data.

use freeres::polyring::{Polynomial, Ring};
use freeres::resolution::{
    alternating_sum_check, betti, koszul_betti_oracle, minimalize, resolve_minimal,
    resolve_schreyer, ses_shift_check, shifts, GradedResolution, Limits, ModulePresentation,
};

fn ring(names: &[&str]) -> Ring {
    Ring::with_var_names(32003, names).unwrap()
}

fn cyclic(r: &Ring, gens: &[&str]) -> ModulePresentation {
    let polys: Vec<Polynomial> = gens.iter().map(|s| r.parse_poly(s).unwrap()).collect();
    ModulePresentation::cyclic(r.clone(), &polys).unwrap()
}

fn assert_structurally_sound(res: &GradedResolution) {
    assert!(res.composition_is_zero().unwrap(), "d o d != 0");
    assert!(res.degrees_consistent(), "entry degrees disagree with twists");
    assert!(!res.has_constant_entry(), "minimal resolution has a unit entry");
    assert!(
        res.length() <= res.ring().num_vars(),
        "resolution longer than the number of variables"
    );
}

#[test]
fn koszul_resolution_of_two_variables() {
    let r = ring(&["x", "y"]);
    let pres = cyclic(&r, &["x", "y"]);
    let res = resolve_minimal(&pres, &Limits::none()).unwrap();
    assert_structurally_sound(&res);
    assert_eq!(res.f0_twists(), &[0]);
    assert_eq!(res.steps()[0].col_twists, vec![1, 1]);
    assert_eq!(res.steps()[1].col_twists, vec![2]);
    let table = betti(&res).unwrap();
    assert_eq!(table.get(0, 0), 1);
    assert_eq!(table.get(1, 1), 2);
    assert_eq!(table.get(2, 2), 1);
    let profile = shifts(&table).unwrap();
    assert_eq!(profile.max_shifts, vec![0, 1, 2]);
    assert_eq!(profile.reg, 0);
}

#[test]
fn taylor_sized_resolution_of_x2_xy() {
    let r = ring(&["x", "y"]);
    let pres = cyclic(&r, &["x^2", "x*y"]);
    let res = resolve_minimal(&pres, &Limits::none()).unwrap();
    assert_structurally_sound(&res);
    assert_eq!(res.f0_twists(), &[0]);
    assert_eq!(res.steps()[0].col_twists, vec![2, 2]);
    assert_eq!(res.steps()[1].col_twists, vec![3]);
    let profile = shifts(&betti(&res).unwrap()).unwrap();
    assert_eq!(profile.max_shifts, vec![0, 2, 3]);
    assert_eq!(profile.min_shifts, vec![0, 2, 3]);
    assert_eq!(profile.pd, 2);
    assert_eq!(profile.reg, 1);
}

#[test]
fn square_of_maximal_ideal_in_three_variables() {
    let r = ring(&["x", "y", "z"]);
    let pres = cyclic(&r, &["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]);
    let res = resolve_minimal(&pres, &Limits::none()).unwrap();
    assert_structurally_sound(&res);
    let table = betti(&res).unwrap();
    assert_eq!(table.get(0, 0), 1);
    assert_eq!(table.get(1, 2), 6);
    assert_eq!(table.get(2, 3), 8);
    assert_eq!(table.get(3, 4), 3);
    assert_eq!(table.entries().len(), 4);
    let profile = shifts(&table).unwrap();
    assert_eq!(profile.max_shifts, vec![0, 2, 3, 4]);
    assert_eq!(profile.pd, 3);
    assert_eq!(profile.reg, 1);
}

#[test]
fn direct_sum_with_shift_drop_past_codimension() {
    // S/(x^2, y^2) (+) S/(x, y, z) over three variables
    let r = ring(&["x", "y", "z"]);
    let blocks = vec![
        vec![r.parse_poly("x^2").unwrap(), r.parse_poly("y^2").unwrap()],
        vec![
            r.parse_poly("x").unwrap(),
            r.parse_poly("y").unwrap(),
            r.parse_poly("z").unwrap(),
        ],
    ];
    let pres = ModulePresentation::direct_sum(r.clone(), &blocks).unwrap();
    let res = resolve_minimal(&pres, &Limits::none()).unwrap();
    assert_structurally_sound(&res);
    let profile = shifts(&betti(&res).unwrap()).unwrap();
    assert_eq!(profile.pd, 3);
    assert_eq!(profile.t_max(2), Some(4));
    assert_eq!(profile.t_max(3), Some(3));
    // the maximal shifts drop after the second step
    assert!(profile.t_max(2) > profile.t_max(3));
}

#[test]
fn zero_module_resolves_to_nothing() {
    let r = ring(&["x", "y"]);
    let pres = cyclic(&r, &["5"]);
    let res = resolve_minimal(&pres, &Limits::none()).unwrap();
    assert!(res.is_zero_module());
    assert_eq!(res.length(), 0);
}

#[test]
fn free_module_has_length_zero() {
    let r = ring(&["x", "y"]);
    let pres = cyclic(&r, &[]);
    let res = resolve_minimal(&pres, &Limits::none()).unwrap();
    assert!(!res.is_zero_module());
    assert_eq!(res.length(), 0);
    let table = betti(&res).unwrap();
    assert_eq!(table.get(0, 0), 1);
    assert_eq!(table.entries().len(), 1);
}

#[test]
fn minimalize_is_idempotent() {
    let r = ring(&["x", "y"]);
    let pres = cyclic(&r, &["x^2", "x*y", "y^2"]);
    let non_minimal = resolve_schreyer(&pres, &Limits::none()).unwrap();
    let once = minimalize(&non_minimal).unwrap();
    let twice = minimalize(&once).unwrap();
    assert_eq!(once.f0_twists(), twice.f0_twists());
    for (a, b) in once.steps().iter().zip(twice.steps()) {
        assert_eq!(a.col_twists, b.col_twists);
        assert_eq!(a.row_twists, b.row_twists);
    }
    // minimal twists of S/(x^2, xy, y^2): (0), (2,2,2), (3,3)
    assert_eq!(once.steps()[0].col_twists, vec![2, 2, 2]);
    assert_eq!(once.steps()[1].col_twists, vec![3, 3]);
}

#[test]
fn betti_rejects_non_minimal_input() {
    let r = ring(&["x", "y", "z"]);
    let pres = cyclic(&r, &["x^2", "x*y", "y^2"]);
    let tower = resolve_schreyer(&pres, &Limits::none()).unwrap();
    assert!(tower.composition_is_zero().unwrap());
    assert!(betti(&tower).is_err());
}

#[test]
fn oracle_on_principal_ideal() {
    let r = Ring::with_var_names(32003, &["x"]).unwrap();
    let pres = cyclic(&r, &["x"]);
    let table = koszul_betti_oracle(&pres, 2).unwrap();
    assert_eq!(table.get(0, 0), 1);
    assert_eq!(table.get(1, 1), 1);
    assert_eq!(table.entries().len(), 2);
}

#[test]
fn oracle_matches_resolution_on_x2_xy() {
    let r = ring(&["x", "y"]);
    let pres = cyclic(&r, &["x^2", "x*y"]);
    let res = resolve_minimal(&pres, &Limits::none()).unwrap();
    let direct = betti(&res).unwrap();
    let oracle = koszul_betti_oracle(&pres, 4).unwrap();
    assert_eq!(direct, oracle);
}

#[test]
fn oracle_top_entry_of_squared_maximal_ideal() {
    let r = ring(&["x", "y", "z"]);
    let pres = cyclic(&r, &["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]);
    let oracle = koszul_betti_oracle(&pres, 6).unwrap();
    assert_eq!(oracle.get(3, 4), 3);
    let direct = betti(&resolve_minimal(&pres, &Limits::none()).unwrap()).unwrap();
    assert_eq!(direct, oracle);
}

#[test]
fn alternating_sums_agree_with_monomial_count() {
    let r = ring(&["x", "y", "z"]);
    for gens in [
        vec!["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"],
        vec!["x^2", "y^3"],
        vec!["x*y", "y*z"],
    ] {
        let pres = cyclic(&r, &gens);
        let table = betti(&resolve_minimal(&pres, &Limits::none()).unwrap()).unwrap();
        assert!(alternating_sum_check(&pres, &table, 10).unwrap());
    }
}

#[test]
fn ses_inequalities_hold_on_fixtures() {
    let r = ring(&["x", "y"]);
    for gens in [vec!["x", "y"], vec!["x^2", "x*y"]] {
        let pres = cyclic(&r, &gens);
        let report = ses_shift_check(&pres, &Limits::none()).unwrap();
        assert!(report.all_hold);
        assert!(!report.inequalities.is_empty());
    }
}

#[test]
fn non_monomial_ideal_resolution_is_consistent() {
    let r = ring(&["x", "y", "z"]);
    let pres = cyclic(&r, &["x^2 - y*z", "x*y + z^2", "y^2"]);
    let res = resolve_minimal(&pres, &Limits::none()).unwrap();
    assert_structurally_sound(&res);
    let direct = betti(&res).unwrap();
    let cap = direct.max_internal_degree().unwrap() + 1;
    let oracle = koszul_betti_oracle(&pres, cap).unwrap();
    assert_eq!(direct, oracle);
}
