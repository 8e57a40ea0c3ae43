//! Buchberger's algorithm with the Gebauer-Moeller pair-update criteria.
//!
//! Pairs are processed strictly by S-pair degree (the normal strategy for
//! homogeneous input), then by insertion order, so runs are deterministic.
//! The coprimality (product) criterion is only applied when both elements
//! are concentrated in a single position, where the polynomial-ring proof
//! carries over verbatim; the chain criteria are position-local statements
//! about the lcm lattice and apply to modules unchanged.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::error::{EngineError, Result};
use crate::polyring::Monomial;

use super::order::{ModMono, ModuleOrder};
use super::reduce::normal_form_with_trace;
use super::{FreeModule, GroebnerBasis, VectorElement};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    degree: i64,
    j: usize,
    i: usize,
}

struct PairData {
    lcm: Monomial,
    pos: usize,
}

struct PairSet {
    queue: BTreeSet<PairKey>,
    data: std::collections::BTreeMap<(usize, usize), (i64, Monomial, usize)>,
}

impl PairSet {
    fn new() -> PairSet {
        PairSet { queue: BTreeSet::new(), data: std::collections::BTreeMap::new() }
    }

    fn insert(&mut self, i: usize, j: usize, degree: i64, lcm: Monomial, pos: usize) {
        self.queue.insert(PairKey { degree, j, i });
        self.data.insert((i, j), (degree, lcm, pos));
    }

    fn remove(&mut self, i: usize, j: usize) {
        if let Some((degree, _, _)) = self.data.remove(&(i, j)) {
            self.queue.remove(&PairKey { degree, j, i });
        }
    }

    fn pop_min(&mut self) -> Option<(usize, usize, PairData)> {
        let key = self.queue.iter().next()?.clone();
        self.queue.remove(&key);
        let (_, lcm, pos) = self.data.remove(&(key.i, key.j)).expect("pair data present");
        Some((key.i, key.j, PairData { lcm, pos }))
    }

    fn is_empty(&self) -> bool {
        self.queue.is_empty()
    }
}

struct State {
    module: FreeModule,
    order: ModuleOrder,
    elements: Vec<VectorElement>,
    leads: Vec<ModMono>,
    concentrated: Vec<bool>,
    pairs: PairSet,
}

impl State {
    fn pair_info(&self, i: usize, j: usize) -> Option<(i64, Monomial, usize)> {
        let li = &self.leads[i];
        let lj = &self.leads[j];
        if li.pos != lj.pos {
            return None;
        }
        let lcm = li.mono.lcm(&lj.mono);
        let degree = lcm.degree() as i64 + self.module.twists()[li.pos];
        Some((degree, lcm, li.pos))
    }

    /// Gebauer-Moeller installation of element `t` against all earlier ones.
    fn update_pairs(&mut self, t: usize) {
        let lead_t = self.leads[t].clone();

        // candidate new pairs, processed in index order
        let mut kept: Vec<(usize, Monomial, i64, bool)> = Vec::new();
        let mut candidates: Vec<(usize, Monomial, i64, bool)> = Vec::new();
        for i in 0..t {
            if let Some((deg, lcm, _)) = self.pair_info(i, t) {
                let coprime = self.concentrated[i]
                    && self.concentrated[t]
                    && self.leads[i].mono.is_coprime_with(&lead_t.mono);
                candidates.push((i, lcm, deg, coprime));
            }
        }
        // criterion M/F: drop (i,t) when another new pair's lcm properly
        // divides its lcm, or equals it with a smaller index
        'cand: for (idx, (i, lcm, deg, coprime)) in candidates.iter().enumerate() {
            for (jdx, (_, lcm2, _, _)) in candidates.iter().enumerate() {
                if idx == jdx || !lcm2.divides(lcm) {
                    continue;
                }
                if lcm2 != lcm || jdx < idx {
                    continue 'cand;
                }
            }
            kept.push((*i, lcm.clone(), *deg, *coprime));
        }
        // criterion B: prune old pairs whose lcm is properly covered by t
        let old_keys: Vec<(usize, usize)> = self.pairs.data.keys().copied().collect();
        for (i, j) in old_keys {
            let (_, lcm_ij, pos) = self.pairs.data[&(i, j)].clone();
            if pos != lead_t.pos || !lead_t.mono.divides(&lcm_ij) {
                continue;
            }
            let lcm_it = self.leads[i].mono.lcm(&lead_t.mono);
            let lcm_jt = self.leads[j].mono.lcm(&lead_t.mono);
            if lcm_it != lcm_ij && lcm_jt != lcm_ij {
                self.pairs.remove(i, j);
            }
        }
        // product criterion last: coprime survivors reduce to zero
        for (i, lcm, deg, coprime) in kept {
            if !coprime {
                self.pairs.insert(i, t, deg, lcm, lead_t.pos);
            }
        }
    }

    fn push_element(&mut self, elem: VectorElement) {
        let lead = elem.lead_mono(&self.order).expect("nonzero");
        let concentrated = elem
            .components()
            .iter()
            .enumerate()
            .all(|(k, c)| k == lead.pos || c.is_zero());
        self.elements.push(elem);
        self.leads.push(lead);
        self.concentrated.push(concentrated);
        self.update_pairs(self.elements.len() - 1);
    }
}

/// Compute a reduced Groebner basis of the submodule generated by
/// homogeneous `generators`, under term-over-position. Empty input gives
/// the empty basis of the zero submodule.
pub fn buchberger(module: &FreeModule, generators: &[VectorElement]) -> Result<GroebnerBasis> {
    buchberger_with_deadline(module, generators, None)
}

pub fn buchberger_with_deadline(
    module: &FreeModule,
    generators: &[VectorElement],
    deadline: Option<Instant>,
) -> Result<GroebnerBasis> {
    for g in generators {
        if !g.module().same_module(module) {
            return Err(EngineError::Internal(
                "generator lives in a different module".into(),
            ));
        }
    }
    let order = ModuleOrder::top(module.ring().num_vars(), module.rank());
    buchberger_under_order(generators, module.clone(), order, deadline)
}

pub(crate) fn buchberger_under_order(
    generators: &[VectorElement],
    module: FreeModule,
    order: ModuleOrder,
    deadline: Option<Instant>,
) -> Result<GroebnerBasis> {
    let mut state = State {
        module: module.clone(),
        order,
        elements: Vec::new(),
        leads: Vec::new(),
        concentrated: Vec::new(),
        pairs: PairSet::new(),
    };

    let mut seed: Vec<VectorElement> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .cloned()
        .collect();
    // install generators in increasing degree for the normal strategy
    seed.sort_by_key(|g| g.degree().expect("nonzero"));
    for g in seed {
        let reduced = {
            let (rem, _) =
                normal_form_with_trace(&g, &state.elements, &state.leads, &state.order)?;
            rem
        };
        if !reduced.is_zero() {
            state.push_element(reduced.make_monic(&state.order));
        }
    }

    while !state.pairs.is_empty() {
        if let Some(d) = deadline {
            if Instant::now() > d {
                return Err(EngineError::Timeout("buchberger"));
            }
        }
        let (i, j, pair) = state.pairs.pop_min().expect("nonempty");
        let li = &state.leads[i];
        let lj = &state.leads[j];
        let ui = li.mono.divide_into(&pair.lcm).expect("lead divides lcm");
        let uj = lj.mono.divide_into(&pair.lcm).expect("lead divides lcm");
        // basis is monic: S-pair = ui * g_i - uj * g_j
        let spair = state.elements[i]
            .term_multiple(1, &ui)?
            .sub(&state.elements[j].term_multiple(1, &uj)?)?;
        if spair.is_zero() {
            continue;
        }
        let (rem, _) =
            normal_form_with_trace(&spair, &state.elements, &state.leads, &state.order)?;
        if rem.is_zero() {
            continue;
        }
        // homogeneous normal strategy: remainders appear at the pair degree
        debug_assert_eq!(rem.degree(), Some(pair.lcm.degree() as i64 + state.module.twists()[pair.pos]));
        state.push_element(rem.make_monic(&state.order));
    }

    // minimalise: drop elements whose lead is properly divisible by
    // another lead in the same position
    let n = state.elements.len();
    let mut keep = vec![true; n];
    for a in 0..n {
        for b in 0..n {
            if a == b || !keep[a] {
                continue;
            }
            let la = &state.leads[a];
            let lb = &state.leads[b];
            if la.pos == lb.pos && lb.mono.divides(&la.mono) && lb.mono != la.mono {
                keep[a] = false;
                break;
            }
        }
    }
    let kept: Vec<VectorElement> = (0..n).filter(|&k| keep[k]).map(|k| state.elements[k].clone()).collect();
    let kept_leads: Vec<ModMono> = (0..n).filter(|&k| keep[k]).map(|k| state.leads[k].clone()).collect();

    // tail-reduce each element against the others for the reduced basis
    let mut final_elements = Vec::with_capacity(kept.len());
    for k in 0..kept.len() {
        let others: Vec<VectorElement> = kept
            .iter()
            .enumerate()
            .filter(|(m, _)| *m != k)
            .map(|(_, e)| e.clone())
            .collect();
        let other_leads: Vec<ModMono> = kept_leads
            .iter()
            .enumerate()
            .filter(|(m, _)| *m != k)
            .map(|(_, l)| l.clone())
            .collect();
        let (rem, _) = normal_form_with_trace(&kept[k], &others, &other_leads, &state.order)?;
        debug_assert!(!rem.is_zero(), "minimalised basis element reduced away");
        final_elements.push(rem.make_monic(&state.order));
    }

    Ok(GroebnerBasis::from_parts(module, state.order, final_elements))
}

/// True iff `v` lies in the submodule spanned by the basis.
pub fn submodule_membership(v: &VectorElement, gb: &GroebnerBasis) -> Result<bool> {
    if v.is_zero() {
        return Ok(true);
    }
    let rem = super::reduce::normal_form_vector(v, gb)?;
    Ok(rem.is_zero())
}

/// Brute-force Buchberger criterion: every S-pair reduces to zero.
/// Test oracle only; no discard criteria.
pub fn is_groebner_basis(gb: &GroebnerBasis) -> Result<bool> {
    for i in 0..gb.len() {
        for j in (i + 1)..gb.len() {
            let li = &gb.leads[i];
            let lj = &gb.leads[j];
            if li.pos != lj.pos {
                continue;
            }
            let lcm = li.mono.lcm(&lj.mono);
            let ui = li.mono.divide_into(&lcm).expect("divides");
            let uj = lj.mono.divide_into(&lcm).expect("divides");
            let spair = gb.elements[i]
                .term_multiple(1, &ui)?
                .sub(&gb.elements[j].term_multiple(1, &uj)?)?;
            let (rem, _) = normal_form_with_trace(&spair, &gb.elements, &gb.leads, &gb.order)?;
            if !rem.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
