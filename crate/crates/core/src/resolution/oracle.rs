//! Independent Betti oracle through Koszul homology.
//!
//! `beta_ij(M)` equals the dimension of the degree-`j` part of the `i`-th
//! homology of the Koszul complex on all ring variables tensored with `M`.
//! The graded pieces of `M` are spanned by standard monomials (those
//! outside the lead-term module of a relation Groebner basis), the
//! multiplication-by-variable maps are normal forms against the same
//! basis, and each homology dimension is a rank computation over `F_p`.
//! Nothing here touches the syzygy machinery, so agreement with
//! [`super::betti`] genuinely cross-checks the resolution path.

use std::collections::BTreeMap;
use std::collections::HashMap;

use crate::error::Result;
use crate::groebner::{GroebnerBasis, ModMono, VectorElement};
use crate::polyring::{monomials_of_degree, Monomial};

use super::linalg::rank_mod_p;
use super::{BettiTable, ModulePresentation};

/// Monomial basis of the degree-`d` piece of `F_0 / <lead terms of gb>`.
pub fn standard_monomial_basis(
    gb: &GroebnerBasis,
    target_twists: &[i64],
    d: i64,
) -> Vec<(usize, Monomial)> {
    let n = gb.module.ring().num_vars();
    let mut out = Vec::new();
    for (pos, &twist) in target_twists.iter().enumerate() {
        let local = d - twist;
        if local < 0 {
            continue;
        }
        let leads_here: Vec<&ModMono> = gb.leads.iter().filter(|l| l.pos == pos).collect();
        for m in monomials_of_degree(n, local as u32) {
            if leads_here.iter().all(|l| !l.mono.divides(&m)) {
                out.push((pos, m));
            }
        }
    }
    out
}

struct GradedPieces {
    bases: BTreeMap<i64, Vec<(usize, Monomial)>>,
    index: BTreeMap<i64, HashMap<(usize, Monomial), usize>>,
}

impl GradedPieces {
    fn build(gb: &GroebnerBasis, twists: &[i64], lo: i64, hi: i64) -> GradedPieces {
        let mut bases = BTreeMap::new();
        let mut index = BTreeMap::new();
        for d in lo..=hi {
            let basis = standard_monomial_basis(gb, twists, d);
            let mut map = HashMap::with_capacity(basis.len());
            for (k, bm) in basis.iter().enumerate() {
                map.insert(bm.clone(), k);
            }
            bases.insert(d, basis);
            index.insert(d, map);
        }
        GradedPieces { bases, index }
    }

    fn dim(&self, d: i64) -> usize {
        self.bases.get(&d).map_or(0, |b| b.len())
    }
}

/// Multiplication by `x_v` from the degree-`d` basis, expressed in the
/// degree-`d+1` basis, as sparse columns.
fn multiplication_map(
    gb: &GroebnerBasis,
    pieces: &GradedPieces,
    v: usize,
    d: i64,
) -> Result<Vec<Vec<(usize, u64)>>> {
    let ring = gb.module.ring().clone();
    let n = ring.num_vars();
    let var = Monomial::variable(n, v);
    let basis = &pieces.bases[&d];
    let target = &pieces.index[&(d + 1)];
    let mut cols = Vec::with_capacity(basis.len());
    for (pos, m) in basis {
        let shifted = m.mul(&var)?;
        let elem = VectorElement::from_polynomial(
            gb.module.clone(),
            *pos,
            crate::polyring::Polynomial::from_monomial(ring.clone(), 1, shifted),
        )?;
        let nf = crate::groebner::normal_form_vector(&elem, gb)?;
        let mut col = Vec::new();
        for (p2, comp) in nf.components().iter().enumerate() {
            for t in comp.terms() {
                let idx = target
                    .get(&(p2, t.mono.clone()))
                    .expect("normal form lands on standard monomials");
                col.push((*idx, t.coeff));
            }
        }
        cols.push(col);
    }
    Ok(cols)
}

fn subsets_of_size(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(n: usize, size: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            current.push(v);
            rec(n, size, v + 1, current, out);
            current.pop();
        }
    }
    rec(n, size, 0, &mut current, &mut out);
    out
}

fn subset_key(s: &[usize]) -> u64 {
    s.iter().fold(0u64, |acc, &v| acc | (1 << v))
}

/// Exact graded Betti numbers `beta_ij` for all `j <= degree_cap`,
/// computed as Koszul homology ranks over `F_p`.
pub fn koszul_betti_oracle(pres: &ModulePresentation, degree_cap: i64) -> Result<BettiTable> {
    let ring = pres.ring().clone();
    let field = ring.field();
    let n = ring.num_vars();
    let gb = pres.relation_gb(None)?;
    let twists = pres.target_twists();
    let lo = twists.iter().copied().min().unwrap_or(0);
    if degree_cap < lo {
        return Ok(BettiTable::default());
    }
    let pieces = GradedPieces::build(&gb, twists, lo, degree_cap);

    // mult[v] maps degree d to columns of x_v : M_d -> M_{d+1}
    let mut mult: Vec<BTreeMap<i64, Vec<Vec<(usize, u64)>>>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut per_degree = BTreeMap::new();
        for d in lo..degree_cap {
            per_degree.insert(d, multiplication_map(&gb, &pieces, v, d)?);
        }
        mult.push(per_degree);
    }

    let subsets: Vec<Vec<Vec<usize>>> = (0..=n).map(|i| subsets_of_size(n, i)).collect();
    let subset_index: Vec<HashMap<u64, usize>> = subsets
        .iter()
        .map(|list| {
            list.iter()
                .enumerate()
                .map(|(k, s)| (subset_key(s), k))
                .collect()
        })
        .collect();

    let mut entries: BTreeMap<(usize, i64), u64> = BTreeMap::new();
    for j in lo..=degree_cap {
        // rank of the differential (K_i ⊗ M)_j -> (K_{i-1} ⊗ M)_j per i
        let mut ranks = vec![0usize; n + 2];
        for i in 1..=n {
            let src_dim = pieces.dim(j - i as i64);
            let dst_dim = pieces.dim(j - i as i64 + 1);
            if src_dim == 0 || dst_dim == 0 {
                continue;
            }
            let src_sets = &subsets[i];
            let dst_sets = &subset_index[i - 1];
            let rows = dst_sets.len() * dst_dim;
            let cols = src_sets.len() * src_dim;
            let mut matrix = vec![vec![0u64; cols]; rows];
            for (e_idx, e) in src_sets.iter().enumerate() {
                for b_idx in 0..src_dim {
                    let col = e_idx * src_dim + b_idx;
                    for (t, &v) in e.iter().enumerate() {
                        let sign_negative = t % 2 == 1;
                        let reduced: Vec<usize> =
                            e.iter().copied().filter(|&w| w != v).collect();
                        let dst_e = dst_sets[&subset_key(&reduced)];
                        for &(row_b, coeff) in &mult[v][&(j - i as i64)][b_idx] {
                            let row = dst_e * dst_dim + row_b;
                            let signed = if sign_negative { field.neg(coeff) } else { coeff };
                            matrix[row][col] = field.add(matrix[row][col], signed);
                        }
                    }
                }
            }
            ranks[i] = rank_mod_p(field, matrix);
        }
        for i in 0..=n {
            let dim = subsets[i].len() * pieces.dim(j - i as i64);
            let homology = dim as i64 - ranks[i] as i64 - ranks[i + 1] as i64;
            debug_assert!(homology >= 0, "negative homology dimension");
            if homology > 0 {
                entries.insert((i, j), homology as u64);
            }
        }
    }
    Ok(BettiTable::from_entries(entries))
}
