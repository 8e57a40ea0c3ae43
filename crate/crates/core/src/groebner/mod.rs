//! Buchberger's algorithm for submodules of twisted graded free modules,
//! with syzygy extraction through the induced Schreyer order.
//!
//! Everything is homogeneous: elements of a twisted free module carry a
//! well-defined degree (component degree plus twist), S-pairs are processed
//! in increasing degree, and reductions never raise degrees.

mod buchberger;
mod order;
mod reduce;
mod syzygy;

#[cfg(test)]
mod tests;

pub use buchberger::{
    buchberger, buchberger_with_deadline, is_groebner_basis, submodule_membership,
};
pub use order::{BasisTag, ModMono, ModuleOrder};
pub use reduce::normal_form_vector;
pub use syzygy::{syzygy_basis, syzygy_gb};

use std::fmt;
use std::sync::Arc;

use crate::error::{EngineError, Result};
use crate::polyring::{Polynomial, Ring};

/// A twisted graded free module `⊕_k S(-twists[k])`: basis element `e_k`
/// sits in degree `twists[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModuleSpec {
    ring: Ring,
    twists: Vec<i64>,
}

/// Shared handle to a [`FreeModuleSpec`].
#[derive(Debug, Clone)]
pub struct FreeModule(Arc<FreeModuleSpec>);

impl FreeModule {
    pub fn new(ring: Ring, twists: Vec<i64>) -> FreeModule {
        FreeModule(Arc::new(FreeModuleSpec { ring, twists }))
    }

    #[inline]
    pub fn ring(&self) -> &Ring {
        &self.0.ring
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.0.twists.len()
    }

    #[inline]
    pub fn twists(&self) -> &[i64] {
        &self.0.twists
    }

    pub fn same_module(&self, other: &FreeModule) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.ring.same_ring(&other.0.ring) && self.0.twists == other.0.twists)
    }

    pub fn zero_element(&self) -> VectorElement {
        VectorElement {
            module: self.clone(),
            comps: vec![self.ring().zero(); self.rank()],
        }
    }
}

impl PartialEq for FreeModule {
    fn eq(&self, other: &Self) -> bool {
        self.same_module(other)
    }
}

impl Eq for FreeModule {}

/// A homogeneous element of a twisted free module: one polynomial per
/// basis position, all nonzero components agreeing on twisted degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorElement {
    module: FreeModule,
    comps: Vec<Polynomial>,
}

impl VectorElement {
    pub fn new(module: FreeModule, comps: Vec<Polynomial>) -> Result<VectorElement> {
        if comps.len() != module.rank() {
            return Err(EngineError::Internal(format!(
                "vector has {} components in a rank-{} module",
                comps.len(),
                module.rank()
            )));
        }
        let v = VectorElement { module, comps };
        v.degree_checked()?;
        Ok(v)
    }

    /// Embed a polynomial at one basis position.
    pub fn from_polynomial(module: FreeModule, pos: usize, poly: Polynomial) -> Result<VectorElement> {
        let mut comps = vec![module.ring().zero(); module.rank()];
        comps[pos] = poly;
        VectorElement::new(module, comps)
    }

    #[inline]
    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    #[inline]
    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// Twisted degree: `deg(comps[k]) + twists[k]`, common to all nonzero
    /// components; `None` for the zero element.
    pub fn degree(&self) -> Option<i64> {
        for (k, c) in self.comps.iter().enumerate() {
            if let Some(d) = c.degree() {
                return Some(d as i64 + self.module.twists()[k]);
            }
        }
        None
    }

    fn degree_checked(&self) -> Result<Option<i64>> {
        let mut degree = None;
        for (k, c) in self.comps.iter().enumerate() {
            if let Some(d) = c.degree() {
                let twisted = d as i64 + self.module.twists()[k];
                match degree {
                    None => degree = Some(twisted),
                    Some(existing) if existing != twisted => {
                        return Err(EngineError::InhomogeneousVector)
                    }
                    _ => {}
                }
            }
        }
        Ok(degree)
    }

    /// Largest module term with respect to `order`. Within one position the
    /// module order restricts to the ring order, so only component leads
    /// compete.
    pub fn lead_mono(&self, order: &ModuleOrder) -> Option<ModMono> {
        let ring_order = self.module.ring().order();
        let mut best: Option<ModMono> = None;
        for (pos, c) in self.comps.iter().enumerate() {
            if let Some(t) = c.lead_term() {
                let cand = ModMono { pos, mono: t.mono.clone() };
                best = match best {
                    None => Some(cand),
                    Some(b) => {
                        if order.cmp(ring_order, &cand, &b) == std::cmp::Ordering::Greater {
                            Some(cand)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
        }
        best
    }

    pub fn lead_coeff(&self, order: &ModuleOrder) -> Option<u64> {
        let lead = self.lead_mono(order)?;
        Some(self.comps[lead.pos].lead_term().expect("lead exists").coeff)
    }

    pub fn make_monic(&self, order: &ModuleOrder) -> VectorElement {
        match self.lead_coeff(order) {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.module.ring().field().inv(c)),
        }
    }

    pub fn scale(&self, c: u64) -> VectorElement {
        VectorElement {
            module: self.module.clone(),
            comps: self.comps.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// `c * mono * self`, componentwise.
    pub fn term_multiple(&self, c: u64, mono: &crate::polyring::Monomial) -> Result<VectorElement> {
        let mut comps = Vec::with_capacity(self.comps.len());
        for p in &self.comps {
            comps.push(p.mul_term(c, mono)?);
        }
        Ok(VectorElement { module: self.module.clone(), comps })
    }

    /// `self - c * mono * other`, componentwise.
    pub fn sub_term_multiple(&self, c: u64, mono: &crate::polyring::Monomial, other: &VectorElement) -> Result<VectorElement> {
        let field = self.module.ring().field();
        let neg_c = field.neg(c);
        let mut comps = Vec::with_capacity(self.comps.len());
        for (a, b) in self.comps.iter().zip(&other.comps) {
            let piece = b.mul_term(neg_c, mono)?;
            comps.push(add_unchecked(a, &piece));
        }
        Ok(VectorElement { module: self.module.clone(), comps })
    }

    pub fn sub(&self, other: &VectorElement) -> Result<VectorElement> {
        let mut comps = Vec::with_capacity(self.comps.len());
        for (a, b) in self.comps.iter().zip(&other.comps) {
            comps.push(add_unchecked(a, &b.neg()));
        }
        Ok(VectorElement { module: self.module.clone(), comps })
    }

    pub fn total_terms(&self) -> usize {
        self.comps.iter().map(|c| c.num_terms()).sum()
    }
}

// Components stay homogeneous of matching degree during reduction; skip
// the public degree check on the hot path.
fn add_unchecked(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a.add(b).expect("homogeneous by construction")
}

impl fmt::Display for VectorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A Groebner basis of a submodule of a twisted free module, together with
/// the module order it was computed under. Elements are monic and their
/// lead monomials are cached in `leads`.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub module: FreeModule,
    pub order: ModuleOrder,
    pub elements: Vec<VectorElement>,
    pub leads: Vec<ModMono>,
}

impl GroebnerBasis {
    pub(crate) fn from_parts(
        module: FreeModule,
        order: ModuleOrder,
        elements: Vec<VectorElement>,
    ) -> GroebnerBasis {
        let leads = elements
            .iter()
            .map(|e| e.lead_mono(&order).expect("basis elements are nonzero"))
            .collect();
        let mut gb = GroebnerBasis { module, order, elements, leads };
        gb.sort_for_tower();
        gb
    }

    /// Canonical element order: by lead position, then descending lex on
    /// the lead monomial. Within a position this guarantees the earlier
    /// element never has a strictly lex-smaller lead, which makes the
    /// iterated syzygy construction drop one variable per step.
    fn sort_for_tower(&mut self) {
        let mut idx: Vec<usize> = (0..self.elements.len()).collect();
        idx.sort_by(|&a, &b| {
            let la = &self.leads[a];
            let lb = &self.leads[b];
            la.pos
                .cmp(&lb.pos)
                .then_with(|| lb.mono.cmp_lex(&la.mono))
                .then_with(|| a.cmp(&b))
        });
        self.elements = idx.iter().map(|&i| self.elements[i].clone()).collect();
        self.leads = idx.iter().map(|&i| self.leads[i].clone()).collect();
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Degrees of the basis elements; these become the twists of the next
    /// free module in a resolution.
    pub fn element_degrees(&self) -> Vec<i64> {
        self.elements
            .iter()
            .map(|e| e.degree().expect("basis elements are nonzero"))
            .collect()
    }

    /// True if some element has a constant lead coefficient monomial in
    /// some position, i.e. the submodule contains a basis vector.
    pub fn contains_unit_lead(&self) -> bool {
        self.leads.iter().any(|l| l.mono.is_one())
    }
}
