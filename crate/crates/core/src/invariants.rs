//! Module invariants: dimension, codimension, depth, Cohen-Macaulayness,
//! annihilator containment, and regular-sequence search.
//!
//! Dimension comes from the lead-term ideal (the Krull dimension of `S/I`
//! equals that of `S/LT(I)`, a combinatorial independent-set computation).
//! Codimension of a module uses the 0th Fitting ideal of the presentation,
//! whose vanishing locus is the support; for presentations that split by
//! position the minor computation is skipped in favour of the structural
//! rule `codim(A (+) B) = min(codim A, codim B)`. Depth is read off the
//! minimal resolution through the Auslander-Buchsbaum formula.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{EngineError, Result};
use crate::groebner::{buchberger, submodule_membership, FreeModule, VectorElement};
use crate::polyring::{monomials_of_degree, Monomial, Polynomial, Ring};
use crate::resolution::ModulePresentation;

/// Sentinel codimension of the zero module (one more than the number of
/// variables, safely above every honest codimension).
pub fn zero_module_codim(ring: &Ring) -> i64 {
    ring.num_vars() as i64 + 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub dim: i64,
    pub codim: i64,
    pub depth: i64,
    pub pd: usize,
    pub is_cm: bool,
    pub char_used: u64,
}

/// Krull dimension of `S/I` from the lead-term ideal: the largest set of
/// variables that contains no lead monomial's support. Returns the ring
/// dimension for the zero ideal and `-1` for the unit ideal.
pub fn dim_lead_term(ring: &Ring, ideal: &[Polynomial]) -> Result<i64> {
    let module = FreeModule::new(ring.clone(), vec![0]);
    let gens: Vec<VectorElement> = ideal
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| VectorElement::from_polynomial(module.clone(), 0, f.clone()))
        .collect::<Result<Vec<_>>>()?;
    let gb = buchberger(&module, &gens)?;
    let leads: Vec<Monomial> = gb.leads.iter().map(|l| l.mono.clone()).collect();
    Ok(dim_from_lead_monomials(ring.num_vars(), &leads))
}

fn dim_from_lead_monomials(n: usize, leads: &[Monomial]) -> i64 {
    if leads.iter().any(|m| m.is_one()) {
        return -1;
    }
    let supports: Vec<u32> = leads
        .iter()
        .map(|m| m.support().fold(0u32, |acc, v| acc | (1 << v)))
        .collect();
    let mut best: i64 = 0;
    for subset in 0u32..(1 << n) {
        let size = subset.count_ones() as i64;
        if size <= best {
            continue;
        }
        // independent iff no lead monomial is supported inside the subset
        if supports.iter().all(|s| s & !subset != 0) {
            best = size;
        }
    }
    best
}

/// Codimension of the presented module: `n - dim(S/Fitt_0)`. The zero
/// module gets the sentinel `n + 1`.
pub fn codim_module(pres: &ModulePresentation) -> Result<i64> {
    let ring = pres.ring();
    let n = ring.num_vars() as i64;
    if pres.target_twists().is_empty() {
        return Ok(zero_module_codim(ring));
    }
    if let Some(blocks) = pres.position_blocks() {
        // direct sum of cyclic modules: the support is the union
        let mut best = zero_module_codim(ring);
        for ideal in &blocks {
            let dim = dim_lead_term(ring, ideal)?;
            let codim = if dim < 0 { zero_module_codim(ring) } else { n - dim };
            best = best.min(codim);
        }
        return Ok(best);
    }
    let minors = fitting_ideal_minors(pres)?;
    if minors.is_empty() {
        // fewer relations than generators: Fitt_0 = 0, full support
        return Ok(0);
    }
    let dim = dim_lead_term(ring, &minors)?;
    Ok(if dim < 0 { zero_module_codim(ring) } else { n - dim })
}

const MINOR_ROW_CAP: usize = 6;
const MINOR_COUNT_CAP: usize = 4000;

/// Maximal minors of the presentation matrix (rows = generators of `F_0`,
/// columns = relations).
fn fitting_ideal_minors(pres: &ModulePresentation) -> Result<Vec<Polynomial>> {
    let t = pres.target_twists().len();
    let s = pres.relations().len();
    if s < t {
        return Ok(Vec::new());
    }
    if t > MINOR_ROW_CAP || binomial(s, t) > MINOR_COUNT_CAP {
        return Err(EngineError::MinorCap { rows: t, cols: s });
    }
    let ring = pres.ring().clone();
    let mut minors = Vec::new();
    let mut choice: Vec<usize> = (0..t).collect();
    loop {
        let det = determinant(&ring, pres, &choice)?;
        if !det.is_zero() {
            minors.push(det);
        }
        // advance to the next t-combination of {0..s-1}
        let mut k = t;
        let mut advanced = false;
        while k > 0 {
            k -= 1;
            if choice[k] + (t - k) < s {
                choice[k] += 1;
                for m in (k + 1)..t {
                    choice[m] = choice[m - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Ok(minors);
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: usize = 1;
    for i in 0..k.min(n - k) {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Determinant of the square submatrix on the chosen relation columns,
/// by Laplace expansion along the first row.
fn determinant(ring: &Ring, pres: &ModulePresentation, cols: &[usize]) -> Result<Polynomial> {
    let rows: Vec<usize> = (0..cols.len()).collect();
    expand_determinant(ring, pres, &rows, cols)
}

fn expand_determinant(
    ring: &Ring,
    pres: &ModulePresentation,
    rows: &[usize],
    cols: &[usize],
) -> Result<Polynomial> {
    let entry = |r: usize, c: usize| &pres.relations()[c].components()[r];
    if rows.len() == 1 {
        return Ok(entry(rows[0], cols[0]).clone());
    }
    let mut acc = ring.zero();
    for (k, &c) in cols.iter().enumerate() {
        let pivot = entry(rows[0], c);
        if pivot.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&cc| cc != c).collect();
        let minor = expand_determinant(ring, pres, &rows[1..], &sub_cols)?;
        if minor.is_zero() {
            continue;
        }
        let mut piece = pivot.mul(&minor)?;
        if k % 2 == 1 {
            piece = piece.neg();
        }
        acc = if acc.is_zero() { piece } else { acc.add(&piece)? };
    }
    Ok(acc)
}

/// Auslander-Buchsbaum: `depth(M) = n - pd(M)`.
pub fn depth_from_pd(num_vars: usize, pd: usize) -> i64 {
    num_vars as i64 - pd as i64
}

/// Assemble the invariant report from a presentation and the projective
/// dimension of its minimal resolution.
pub fn invariant_report(pres: &ModulePresentation, pd: usize) -> Result<InvariantReport> {
    let ring = pres.ring();
    let n = ring.num_vars() as i64;
    let codim = codim_module(pres)?;
    let dim = n - codim;
    let depth = depth_from_pd(ring.num_vars(), pd);
    Ok(InvariantReport {
        dim,
        codim,
        depth,
        pd,
        is_cm: dim == depth,
        char_used: ring.characteristic(),
    })
}

/// Decide `J ⊆ Ann(M)`: every generator of `J` must multiply every
/// generator of `F_0` into the relation submodule.
pub fn ann_contains(j_gens: &[Polynomial], pres: &ModulePresentation) -> Result<bool> {
    let module = pres.free_module();
    let gb = pres.relation_gb(None)?;
    for f in j_gens {
        if f.is_zero() {
            continue;
        }
        for pos in 0..module.rank() {
            let v = VectorElement::from_polynomial(module.clone(), pos, f.clone())?;
            if !submodule_membership(&v, &gb)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub const REGULAR_SEQUENCE_RETRIES: usize = 64;

/// Search for a length-`q` regular sequence of degree-`d` forms inside the
/// ideal, via seeded random combinations of its degree-`d` piece. Each
/// prefix is certified by a codimension check; failure after the retry
/// budget does not prove nonexistence.
pub fn find_regular_sequence(
    ring: &Ring,
    ideal: &[Polynomial],
    d: u32,
    q: usize,
    seed: u64,
) -> Result<Option<Vec<Polynomial>>> {
    if q == 0 {
        return Ok(Some(Vec::new()));
    }
    if d == 0 {
        return Ok(None);
    }
    let span = degree_piece_spanning_set(ring, ideal, d)?;
    if span.is_empty() {
        return Ok(None);
    }
    let field = ring.field();
    let p = ring.characteristic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sequence: Vec<Polynomial> = Vec::with_capacity(q);
    for k in 1..=q {
        let mut found = false;
        for _ in 0..REGULAR_SEQUENCE_RETRIES {
            let mut candidate = ring.zero();
            for b in &span {
                let c = rng.gen_range(0..p);
                if c != 0 {
                    candidate = candidate.add(&b.scale(field.reduce(c)))?;
                }
            }
            if candidate.is_zero() {
                continue;
            }
            let mut prefix = sequence.clone();
            prefix.push(candidate.clone());
            let dim = dim_lead_term(ring, &prefix)?;
            if dim >= 0 && ring.num_vars() as i64 - dim == k as i64 {
                sequence.push(candidate);
                found = true;
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    Ok(Some(sequence))
}

/// Monomial multiples of the generators spanning the degree-`d` piece of
/// the ideal.
fn degree_piece_spanning_set(ring: &Ring, ideal: &[Polynomial], d: u32) -> Result<Vec<Polynomial>> {
    let n = ring.num_vars();
    let mut span = Vec::new();
    for g in ideal {
        let Some(deg) = g.degree() else { continue };
        if deg > d {
            continue;
        }
        for m in monomials_of_degree(n, d - deg) {
            span.push(g.mul_term(1, &m)?);
        }
    }
    Ok(span)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> Ring {
        Ring::with_var_names(32003, names).unwrap()
    }

    fn polys(r: &Ring, gens: &[&str]) -> Vec<Polynomial> {
        gens.iter().map(|s| r.parse_poly(s).unwrap()).collect()
    }

    #[test]
    fn dimension_examples() {
        let r2 = ring(&["x", "y"]);
        assert_eq!(dim_lead_term(&r2, &[]).unwrap(), 2);
        assert_eq!(dim_lead_term(&r2, &polys(&r2, &["x^2", "x*y"])).unwrap(), 1);
        let r3 = ring(&["x", "y", "z"]);
        let square = polys(&r3, &["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]);
        assert_eq!(dim_lead_term(&r3, &square).unwrap(), 0);
        assert_eq!(dim_lead_term(&r2, &polys(&r2, &["3"])).unwrap(), -1);
    }

    #[test]
    fn codim_examples() {
        let r2 = ring(&["x", "y"]);
        let pres = ModulePresentation::cyclic(r2.clone(), &polys(&r2, &["x^2", "x*y"])).unwrap();
        assert_eq!(codim_module(&pres).unwrap(), 1);
        let r3 = ring(&["x", "y", "z"]);
        let square = polys(&r3, &["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]);
        let pres = ModulePresentation::cyclic(r3.clone(), &square).unwrap();
        assert_eq!(codim_module(&pres).unwrap(), 3);
        // direct-sum structural rule
        let sum = ModulePresentation::direct_sum(
            r3.clone(),
            &[polys(&r3, &["x^2", "y^2"]), polys(&r3, &["x", "y", "z"])],
        )
        .unwrap();
        assert_eq!(codim_module(&sum).unwrap(), 2);
        // zero module sentinel
        let zero = ModulePresentation::cyclic(r3.clone(), &polys(&r3, &["1"])).unwrap();
        assert_eq!(codim_module(&zero).unwrap(), 4);
    }

    #[test]
    fn fitting_minors_handle_non_block_presentations() {
        // relations (x, y) and (y, x) on two generators:
        // Fitt_0 = (x^2 - y^2), codim 1
        let r = ring(&["x", "y"]);
        let module = FreeModule::new(r.clone(), vec![0, 0]);
        let mk = |a: &str, b: &str| {
            VectorElement::new(
                module.clone(),
                vec![r.parse_poly(a).unwrap(), r.parse_poly(b).unwrap()],
            )
            .unwrap()
        };
        let pres =
            ModulePresentation::new(r.clone(), vec![0, 0], vec![mk("x", "y"), mk("y", "x")])
                .unwrap();
        assert_eq!(codim_module(&pres).unwrap(), 1);
    }

    #[test]
    fn ann_containment_examples() {
        let r = ring(&["x", "y", "z"]);
        // cyclic: I annihilates S/I
        let gens = polys(&r, &["x^2", "y^2"]);
        let pres = ModulePresentation::cyclic(r.clone(), &gens).unwrap();
        assert!(ann_contains(&gens, &pres).unwrap());
        // componentwise: (xy) annihilates S/(x) (+) S/(y); (x) does not
        let sum =
            ModulePresentation::direct_sum(r.clone(), &[polys(&r, &["x"]), polys(&r, &["y"])])
                .unwrap();
        assert!(ann_contains(&polys(&r, &["x*y"]), &sum).unwrap());
        assert!(!ann_contains(&polys(&r, &["x"]), &sum).unwrap());
        // verified by reduction: x^2 and y^2 lie in (x, y, z), so
        // (x^2, y^2) annihilates the direct sum above; a bare variable
        // misses the first summand
        let remark = ModulePresentation::direct_sum(
            r.clone(),
            &[polys(&r, &["x^2", "y^2"]), polys(&r, &["x", "y", "z"])],
        )
        .unwrap();
        assert!(ann_contains(&polys(&r, &["x^2", "y^2"]), &remark).unwrap());
        assert!(!ann_contains(&polys(&r, &["z"]), &remark).unwrap());
    }

    #[test]
    fn regular_sequence_search_examples() {
        let r = ring(&["x", "y"]);
        let found = find_regular_sequence(&r, &polys(&r, &["x", "y"]), 1, 2, 7)
            .unwrap()
            .expect("linear sequence exists");
        assert_eq!(found.len(), 2);
        // any nonzero degree-2 element of (x^2, xy, y^3) has codim 1
        let found = find_regular_sequence(&r, &polys(&r, &["x^2", "x*y", "y^3"]), 2, 1, 7)
            .unwrap()
            .expect("degree-2 element exists");
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].degree(), Some(2));
        // degree too small: the degree-1 piece of (x^2) is empty
        assert!(find_regular_sequence(&r, &polys(&r, &["x^2"]), 1, 1, 7)
            .unwrap()
            .is_none());
    }

    #[test]
    fn generic_quadrics_in_squared_maximal_ideal() {
        let r = ring(&["x", "y", "z"]);
        let square = polys(&r, &["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]);
        let found = find_regular_sequence(&r, &square, 2, 3, 11)
            .unwrap()
            .expect("three generic quadrics form a regular sequence");
        assert_eq!(found.len(), 3);
        for prefix in 1..=3 {
            let dim = dim_lead_term(&r, &found[..prefix]).unwrap();
            assert_eq!(3 - dim, prefix as i64);
        }
    }

    #[test]
    fn depth_and_cm_examples() {
        assert_eq!(depth_from_pd(2, 2), 0);
        assert_eq!(depth_from_pd(2, 1), 1);
        let r3 = ring(&["x", "y", "z"]);
        let square = polys(&r3, &["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]);
        let pres = ModulePresentation::cyclic(r3.clone(), &square).unwrap();
        let report = invariant_report(&pres, 3).unwrap();
        assert_eq!(report.dim, 0);
        assert_eq!(report.depth, 0);
        assert!(report.is_cm);
        let r2 = ring(&["x", "y"]);
        let pres = ModulePresentation::cyclic(r2.clone(), &polys(&r2, &["x^2", "x*y"])).unwrap();
        let report = invariant_report(&pres, 2).unwrap();
        assert_eq!(report.dim, 1);
        assert_eq!(report.depth, 0);
        assert!(!report.is_cm);
    }

    #[test]
    fn free_module_invariants() {
        let r = ring(&["x", "y"]);
        let pres = ModulePresentation::cyclic(r.clone(), &[]).unwrap();
        let report = invariant_report(&pres, 0).unwrap();
        assert_eq!(report.codim, 0);
        assert_eq!(report.dim, 2);
        assert_eq!(report.depth, 2);
        assert!(report.is_cm);
    }
}
