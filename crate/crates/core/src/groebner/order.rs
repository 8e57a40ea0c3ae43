//! Orders on module monomials.
//!
//! A module monomial is a ring monomial sitting in one basis position.
//! Every order the engine uses is described by one tag per basis element:
//! a ring monomial `tau` (the image of the basis element under the maps of
//! a resolution tower, multiplied all the way down to the bottom free
//! module) and a tie-break `chain` of positions. Comparison multiplies
//! through by `tau` and compares in the ring order; ties fall back to the
//! chains extended by the elements' own positions, where the smaller
//! position wins.
//!
//! With trivial tags (`tau = 1`, empty chain) this is plain
//! term-over-position. Tags built from the lead terms of a Groebner basis
//! give the induced Schreyer order, under which the syzygies computed from
//! S-pairs are automatically a Groebner basis with known lead terms.

use std::cmp::Ordering;

use crate::polyring::{Monomial, MonomialOrder};

/// A monomial in one basis position of a free module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMono {
    pub pos: usize,
    pub mono: Monomial,
}

#[derive(Debug, Clone)]
pub struct BasisTag {
    pub tau: Monomial,
    pub chain: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct ModuleOrder {
    tags: Vec<BasisTag>,
}

impl ModuleOrder {
    /// Term-over-position on a free module of the given rank: ring order
    /// on the monomials, earlier positions larger on ties.
    pub fn top(num_vars: usize, rank: usize) -> ModuleOrder {
        ModuleOrder {
            tags: (0..rank)
                .map(|_| BasisTag { tau: Monomial::one(num_vars), chain: Vec::new() })
                .collect(),
        }
    }

    /// Schreyer order induced by the lead monomials of a basis of the
    /// target module: basis element `i` of the new module maps onto an
    /// element with lead `leads[i]`.
    pub fn schreyer(prev: &ModuleOrder, leads: &[ModMono]) -> ModuleOrder {
        let tags = leads
            .iter()
            .map(|l| {
                let prev_tag = &prev.tags[l.pos];
                let mut chain = prev_tag.chain.clone();
                chain.push(l.pos);
                BasisTag {
                    tau: l.mono.mul(&prev_tag.tau).expect("tower degrees stay small"),
                    chain,
                }
            })
            .collect();
        ModuleOrder { tags }
    }

    pub fn rank(&self) -> usize {
        self.tags.len()
    }

    pub fn cmp(&self, ring_order: MonomialOrder, a: &ModMono, b: &ModMono) -> Ordering {
        let ta = &self.tags[a.pos];
        let tb = &self.tags[b.pos];
        ring_order
            .cmp_products((&a.mono, &ta.tau), (&b.mono, &tb.tau))
            .then_with(|| {
                // smaller chain entry = larger module monomial
                for (x, y) in ta.chain.iter().zip(&tb.chain) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        ord => return ord.reverse(),
                    }
                }
                match ta.chain.len().cmp(&tb.chain.len()) {
                    Ordering::Equal => b.pos.cmp(&a.pos),
                    // chains of unequal length never happen inside one
                    // module; keep a total order anyway
                    ord => ord.reverse(),
                }
            })
    }
}
