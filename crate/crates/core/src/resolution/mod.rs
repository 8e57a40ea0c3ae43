//! Minimal graded free resolutions.
//!
//! Resolutions are built as a Schreyer tower: a reduced Groebner basis of
//! the relation module gives the first differential, and each further
//! differential is the syzygy basis of the previous one under the induced
//! Schreyer order, so Buchberger runs exactly once per presentation. The
//! tower is exact by construction but generally non-minimal; constant
//! entries are then cancelled out ([`minimalize`]) to reach the minimal
//! resolution, from which Betti numbers and graded shifts are read off.

mod betti;
mod hilbert;
mod linalg;
mod minimalize;
mod oracle;
mod ses;

pub use betti::{betti, shifts, BettiTable, ShiftProfile};
pub use hilbert::{alternating_sum_check, graded_dimension, hilbert_from_betti};
pub use linalg::rank_mod_p;
pub use minimalize::minimalize;
pub use oracle::{koszul_betti_oracle, standard_monomial_basis};
pub use ses::{ses_shift_check, SesReport};

use std::time::Instant;

use crate::error::{EngineError, Result};
use crate::groebner::{
    buchberger_with_deadline, syzygy_gb, FreeModule, GroebnerBasis, VectorElement,
};
use crate::polyring::{Polynomial, Ring};

/// A finitely generated graded module presented as the cokernel of a map
/// into a twisted free module: `M = F_0 / <relations>`.
#[derive(Debug, Clone)]
pub struct ModulePresentation {
    ring: Ring,
    target_twists: Vec<i64>,
    relations: Vec<VectorElement>,
}

impl ModulePresentation {
    pub fn new(ring: Ring, target_twists: Vec<i64>, relations: Vec<VectorElement>) -> Result<Self> {
        let module = FreeModule::new(ring.clone(), target_twists.clone());
        for r in &relations {
            if !r.module().same_module(&module) {
                return Err(EngineError::Internal(
                    "relation lives in a different free module".into(),
                ));
            }
        }
        Ok(ModulePresentation { ring, target_twists, relations })
    }

    /// The cyclic module `S/I`: one generator in degree zero, relations
    /// the generators of `I`.
    pub fn cyclic(ring: Ring, ideal: &[Polynomial]) -> Result<Self> {
        let module = FreeModule::new(ring.clone(), vec![0]);
        let relations = ideal
            .iter()
            .filter(|f| !f.is_zero())
            .map(|f| VectorElement::from_polynomial(module.clone(), 0, f.clone()))
            .collect::<Result<Vec<_>>>()?;
        ModulePresentation::new(ring, vec![0], relations)
    }

    /// A direct sum of cyclic modules, block-concatenated: summand `b`
    /// contributes a degree-zero generator and its ideal's relations at
    /// position `b`.
    pub fn direct_sum(ring: Ring, summands: &[Vec<Polynomial>]) -> Result<Self> {
        let twists = vec![0i64; summands.len()];
        let module = FreeModule::new(ring.clone(), twists.clone());
        let mut relations = Vec::new();
        for (b, ideal) in summands.iter().enumerate() {
            for f in ideal {
                if f.is_zero() {
                    continue;
                }
                relations.push(VectorElement::from_polynomial(module.clone(), b, f.clone())?);
            }
        }
        ModulePresentation::new(ring, twists, relations)
    }

    #[inline]
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    #[inline]
    pub fn target_twists(&self) -> &[i64] {
        &self.target_twists
    }

    #[inline]
    pub fn relations(&self) -> &[VectorElement] {
        &self.relations
    }

    pub fn free_module(&self) -> FreeModule {
        FreeModule::new(self.ring.clone(), self.target_twists.clone())
    }

    /// When every relation is concentrated in a single position the module
    /// splits as a direct sum; returns the per-position relation ideals.
    pub fn position_blocks(&self) -> Option<Vec<Vec<Polynomial>>> {
        let mut blocks = vec![Vec::new(); self.target_twists.len()];
        for r in &self.relations {
            let mut nonzero = r
                .components()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero());
            let (pos, poly) = nonzero.next()?;
            if nonzero.next().is_some() {
                return None;
            }
            blocks[pos].push(poly.clone());
        }
        Some(blocks)
    }

    /// Groebner basis of the relation submodule.
    pub fn relation_gb(&self, deadline: Option<Instant>) -> Result<GroebnerBasis> {
        buchberger_with_deadline(&self.free_module(), &self.relations, deadline)
    }
}

/// Resource limits for a resolution job.
#[derive(Debug, Clone, Copy, Default)]
pub struct Limits {
    pub deadline: Option<Instant>,
}

impl Limits {
    pub fn none() -> Limits {
        Limits { deadline: None }
    }

    pub fn with_timeout(seconds: u64) -> Limits {
        Limits {
            deadline: Some(Instant::now() + std::time::Duration::from_secs(seconds)),
        }
    }
}

/// One differential of a resolution, `F_k -> F_{k-1}`, stored densely.
/// `entries[r][c]` is homogeneous of degree `col_twists[c] - row_twists[r]`
/// or zero.
#[derive(Debug, Clone)]
pub struct ResolutionStep {
    pub row_twists: Vec<i64>,
    pub col_twists: Vec<i64>,
    pub entries: Vec<Vec<Polynomial>>,
}

impl ResolutionStep {
    pub fn rows(&self) -> usize {
        self.row_twists.len()
    }

    pub fn cols(&self) -> usize {
        self.col_twists.len()
    }
}

/// A chain of free modules `F_0 <- F_1 <- ...` with composition zero.
#[derive(Debug, Clone)]
pub struct GradedResolution {
    ring: Ring,
    f0_twists: Vec<i64>,
    steps: Vec<ResolutionStep>,
    minimal: bool,
}

impl GradedResolution {
    pub(crate) fn from_parts(
        ring: Ring,
        f0_twists: Vec<i64>,
        steps: Vec<ResolutionStep>,
        minimal: bool,
    ) -> GradedResolution {
        GradedResolution { ring, f0_twists, steps, minimal }
    }

    #[inline]
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    #[inline]
    pub fn f0_twists(&self) -> &[i64] {
        &self.f0_twists
    }

    #[inline]
    pub fn steps(&self) -> &[ResolutionStep] {
        &self.steps
    }

    #[inline]
    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Length of the resolution; equals the projective dimension once the
    /// resolution is minimal.
    pub fn length(&self) -> usize {
        self.steps.len()
    }

    /// The unit ideal / zero module leaves nothing to resolve.
    pub fn is_zero_module(&self) -> bool {
        self.f0_twists.is_empty()
    }

    /// Twists of `F_i`.
    pub fn twists_at(&self, i: usize) -> &[i64] {
        if i == 0 {
            &self.f0_twists
        } else {
            &self.steps[i - 1].col_twists
        }
    }

    /// Exactness proxy: every consecutive product of differentials is the
    /// zero matrix.
    pub fn composition_is_zero(&self) -> Result<bool> {
        for w in self.steps.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            for r in 0..a.rows() {
                for c in 0..b.cols() {
                    let mut acc = self.ring.zero();
                    for m in 0..a.cols() {
                        let prod = a.entries[r][m].mul(&b.entries[m][c])?;
                        acc = acc.add(&prod)?;
                    }
                    if !acc.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// True if some differential contains a nonzero constant entry.
    pub fn has_constant_entry(&self) -> bool {
        self.steps
            .iter()
            .any(|s| s.entries.iter().flatten().any(|e| e.is_constant()))
    }

    /// Degree bookkeeping: every entry is homogeneous of the degree its
    /// twists dictate.
    pub fn degrees_consistent(&self) -> bool {
        self.steps.iter().all(|s| {
            s.entries.iter().enumerate().all(|(r, row)| {
                row.iter().enumerate().all(|(c, e)| match e.degree() {
                    None => true,
                    Some(d) => d as i64 == s.col_twists[c] - s.row_twists[r],
                })
            })
        })
    }
}

/// The full Schreyer tower: exact, generally non-minimal.
pub fn resolve_schreyer(pres: &ModulePresentation, limits: &Limits) -> Result<GradedResolution> {
    let ring = pres.ring().clone();
    let n = ring.num_vars();
    let mut gb = pres.relation_gb(limits.deadline)?;
    let mut steps = Vec::new();
    let mut prev_twists = pres.target_twists().to_vec();

    while !gb.is_empty() {
        if steps.len() > n + 1 {
            return Err(EngineError::Internal(
                "Schreyer tower exceeded its length bound".into(),
            ));
        }
        if let Some(d) = limits.deadline {
            if Instant::now() > d {
                return Err(EngineError::Timeout("resolution tower"));
            }
        }
        let col_twists = gb.element_degrees();
        let rank = prev_twists.len();
        let mut entries = vec![Vec::with_capacity(gb.len()); rank];
        for elem in &gb.elements {
            for (r, comp) in elem.components().iter().enumerate() {
                entries[r].push(comp.clone());
            }
        }
        steps.push(ResolutionStep {
            row_twists: prev_twists.clone(),
            col_twists: col_twists.clone(),
            entries,
        });
        prev_twists = col_twists;
        gb = syzygy_gb(&gb, limits.deadline)?;
    }

    Ok(GradedResolution::from_parts(
        ring,
        pres.target_twists().to_vec(),
        steps,
        false,
    ))
}

/// The minimal graded free resolution of the presented module.
pub fn resolve_minimal(pres: &ModulePresentation, limits: &Limits) -> Result<GradedResolution> {
    minimalize(&resolve_schreyer(pres, limits)?)
}
