//! Division of module elements by a list of divisors, with quotient traces.

use crate::error::Result;
use crate::polyring::Polynomial;

use super::order::{ModMono, ModuleOrder};
use super::VectorElement;

/// Index of basis divisors by lead position, preserving list order within
/// a position.
pub(crate) struct ReducerIndex {
    by_pos: Vec<Vec<usize>>,
}

impl ReducerIndex {
    pub fn new(rank: usize, leads: &[ModMono]) -> ReducerIndex {
        let mut by_pos = vec![Vec::new(); rank];
        for (k, l) in leads.iter().enumerate() {
            by_pos[l.pos].push(k);
        }
        ReducerIndex { by_pos }
    }

    /// First divisor (in list order) whose lead divides the given term.
    fn find(&self, leads: &[ModMono], term: &ModMono) -> Option<usize> {
        self.by_pos[term.pos]
            .iter()
            .copied()
            .find(|&k| leads[k].mono.divides(&term.mono))
    }
}

/// Full normal form with quotient trace: returns `(r, q)` with
/// `v = sum q[k] * divisors[k] + r` and no term of `r` divisible by any
/// divisor lead. Deterministic: the largest reducible term is always
/// reduced by the first applicable divisor.
pub fn normal_form_with_trace(
    v: &VectorElement,
    divisors: &[VectorElement],
    leads: &[ModMono],
    order: &ModuleOrder,
) -> Result<(VectorElement, Vec<Polynomial>)> {
    let ring = v.module().ring().clone();
    let ring_order = ring.order();
    let index = ReducerIndex::new(v.module().rank(), leads);
    let mut rem = v.clone();
    let mut quotients = vec![ring.zero(); divisors.len()];

    loop {
        // locate the largest reducible term across all components
        let mut target: Option<(ModMono, u64, usize)> = None;
        for (pos, comp) in rem.components().iter().enumerate() {
            for t in comp.terms() {
                let cand = ModMono { pos, mono: t.mono.clone() };
                if let Some((best, _, _)) = &target {
                    if order.cmp(ring_order, &cand, best) != std::cmp::Ordering::Greater {
                        continue;
                    }
                }
                if let Some(k) = index.find(leads, &cand) {
                    target = Some((cand, t.coeff, k));
                }
            }
        }
        let Some((term, coeff, k)) = target else { break };
        // divisors are monic, so the quotient coefficient is the term's
        let q_mono = leads[k]
            .mono
            .divide_into(&term.mono)
            .expect("found by divisibility");
        rem = rem.sub_term_multiple(coeff, &q_mono, &divisors[k])?;
        let piece = Polynomial::from_monomial(ring.clone(), coeff, q_mono);
        quotients[k] = quotients[k].add(&piece).expect("quotients stay homogeneous");
    }
    Ok((rem, quotients))
}

/// Normal form of a vector with respect to a Groebner basis.
pub fn normal_form_vector(v: &VectorElement, gb: &super::GroebnerBasis) -> Result<VectorElement> {
    let (rem, _) = normal_form_with_trace(v, &gb.elements, &gb.leads, &gb.order)?;
    Ok(rem)
}
