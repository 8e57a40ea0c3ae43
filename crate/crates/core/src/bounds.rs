//! Shift-inequality evaluators.
//!
//! Each evaluator compares a left-hand side read from computed shift
//! profiles against a bound formula and records the slack. Proved
//! statements are *asserted*: a negative slack under met hypotheses is an
//! engine bug and aborts a verification run. Open statements are evaluated
//! identically but only ever *reported*; a negative slack there is a
//! counterexample candidate to be re-verified, never an error.

use serde::Serialize;

use crate::error::{EngineError, Result};
use crate::resolution::ShiftProfile;

/// Exponent vector `a` with the weight `|a| = sum a_i * (i + 1)` over
/// 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightVector(pub Vec<u64>);

impl WeightVector {
    pub fn zero(c: usize) -> WeightVector {
        WeightVector(vec![0; c])
    }

    pub fn weight(&self) -> u64 {
        weight_norm(&self.0)
    }
}

/// `|a| = sum_{i=1..c} a_i * (i + 1)`.
pub fn weight_norm(entries: &[u64]) -> u64 {
    entries
        .iter()
        .enumerate()
        .map(|(idx, &a)| a * (idx as u64 + 2))
        .sum()
}

/// All `a` in `N^c` with `|a| <= cap`, in ascending lexicographic order.
pub fn enumerate_weights(c: usize, cap: u64) -> Vec<WeightVector> {
    let mut out = Vec::new();
    let mut current = vec![0u64; c];
    fn rec(c: usize, idx: usize, remaining: u64, current: &mut Vec<u64>, out: &mut Vec<WeightVector>) {
        if idx == c {
            out.push(WeightVector(current.clone()));
            return;
        }
        let step = idx as u64 + 2;
        for a in 0..=(remaining / step) {
            current[idx] = a;
            rec(c, idx + 1, remaining - a * step, current, out);
        }
        current[idx] = 0;
    }
    rec(c, 0, cap, &mut current, &mut out);
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundTag {
    Codim1,
    RegThm,
    Main,
    CommonDeg,
    MainCor,
    Ehu1,
    Ehu2,
    Conj,
}

impl BoundTag {
    pub fn name(&self) -> &'static str {
        match self {
            BoundTag::Codim1 => "codim1",
            BoundTag::RegThm => "regthm",
            BoundTag::Main => "main",
            BoundTag::CommonDeg => "commondeg",
            BoundTag::MainCor => "maincor",
            BoundTag::Ehu1 => "ehu1",
            BoundTag::Ehu2 => "ehu2",
            BoundTag::Conj => "conj",
        }
    }
}

/// Whether the hypotheses of a statement were established, with reasons
/// for any that failed.
#[derive(Debug, Clone, Default, Serialize)]
pub struct HypothesisStatus {
    pub met: bool,
    pub notes: Vec<String>,
}

impl HypothesisStatus {
    pub fn met() -> HypothesisStatus {
        HypothesisStatus { met: true, notes: Vec::new() }
    }

    pub fn require(mut self, condition: bool, failure_note: &str) -> HypothesisStatus {
        if !condition {
            self.met = false;
            self.notes.push(failure_note.to_string());
        }
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub index: usize,
    pub weights: Option<WeightVector>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub bound: BoundTag,
    /// Proved statement whose hypotheses were established: a violation is
    /// an engine bug.
    pub asserted: bool,
    pub hypotheses_met: bool,
    pub notes: Vec<String>,
    pub lhs: i64,
    pub rhs: i64,
    pub slack: i64,
    pub witness: Option<Witness>,
    /// Asserted and violated.
    pub violation: bool,
    /// Unasserted probe that came out violated: a counterexample
    /// candidate.
    pub candidate: bool,
}

impl BoundReport {
    fn build(
        bound: BoundTag,
        report_only: bool,
        hyp: HypothesisStatus,
        lhs: i64,
        rhs: i64,
        witness: Option<Witness>,
    ) -> BoundReport {
        let slack = rhs - lhs;
        let asserted = hyp.met && !report_only;
        BoundReport {
            bound,
            asserted,
            hypotheses_met: hyp.met,
            notes: hyp.notes,
            lhs,
            rhs,
            slack,
            witness,
            violation: asserted && slack < 0,
            candidate: !asserted && hyp.met && slack < 0,
        }
    }
}

fn t(profile: &ShiftProfile, i: usize) -> Result<i64> {
    profile
        .t_max(i)
        .ok_or_else(|| EngineError::Internal(format!("shift T_{i} requested beyond pd")))
}

/// Maximum of `T_i(M) + sum_j a_j T_j(S/J)` over `0 <= i <= p - c` and
/// `|a| <= p - c - i`, with the deterministic witness (smallest `i`, then
/// lexicographically smallest `a`).
pub(crate) fn weighted_shift_max(
    p_m: &ShiftProfile,
    p_j: &ShiftProfile,
    c: usize,
    budget: i64,
) -> Result<(i64, Witness)> {
    let mut best: Option<(i64, Witness)> = None;
    for i in 0..=(budget as usize) {
        let t_i = t(p_m, i)?;
        for a in enumerate_weights(c, (budget - i as i64) as u64) {
            let mut value = t_i;
            for (idx, &aj) in a.0.iter().enumerate() {
                if aj > 0 {
                    value += aj as i64 * t(p_j, idx + 1)?;
                }
            }
            match &best {
                Some((b, _)) if *b >= value => {}
                _ => best = Some((value, Witness { index: i, weights: Some(a) })),
            }
        }
    }
    best.ok_or_else(|| EngineError::Internal("empty weight enumeration".into()))
}

/// Regularity bound from the weighted maximal shifts of an annihilating
/// Cohen-Macaulay ideal:
/// `reg(M) <= max{ T_i(M) + sum a_j T_j(S/J) } + T_c(S/J) - p`.
pub fn bound_regthm(
    p_m: &ShiftProfile,
    p_j: &ShiftProfile,
    c: usize,
    hyp: HypothesisStatus,
) -> Result<BoundReport> {
    let p = p_m.pd;
    if c == 0 || p < c {
        return Err(EngineError::MalformedProfile { pd: p, codim: c });
    }
    if p_j.pd < c {
        return Err(EngineError::MalformedProfile { pd: p_j.pd, codim: c });
    }
    let (core, witness) = weighted_shift_max(p_m, p_j, c, (p - c) as i64)?;
    let rhs = core + t(p_j, c)? - p as i64;
    Ok(BoundReport::build(BoundTag::RegThm, false, hyp, p_m.reg, rhs, Some(witness)))
}

/// Top-shift version of the same bound:
/// `T_p(M) <= max{...} + T_c(S/J)`.
pub fn bound_main(
    p_m: &ShiftProfile,
    p_j: &ShiftProfile,
    c: usize,
    hyp: HypothesisStatus,
) -> Result<BoundReport> {
    let p = p_m.pd;
    if c == 0 || p < c {
        return Err(EngineError::MalformedProfile { pd: p, codim: c });
    }
    if p_j.pd < c {
        return Err(EngineError::MalformedProfile { pd: p_j.pd, codim: c });
    }
    let (core, witness) = weighted_shift_max(p_m, p_j, c, (p - c) as i64)?;
    let rhs = core + t(p_j, c)?;
    Ok(BoundReport::build(BoundTag::Main, false, hyp, t(p_m, p)?, rhs, Some(witness)))
}

/// Cyclic bound from a regular sequence of forms of common degree `d`:
/// `reg(S/I) <= max_{0 <= i <= p-c}{ T_i + (p - i) d } - p`.
pub fn bound_common_degree(
    p_i: &ShiftProfile,
    c: usize,
    d: i64,
    hyp: HypothesisStatus,
) -> Result<BoundReport> {
    let p = p_i.pd;
    if c == 0 || p < c {
        return Err(EngineError::MalformedProfile { pd: p, codim: c });
    }
    let mut best: Option<(i64, usize)> = None;
    for i in 0..=(p - c) {
        let value = t(p_i, i)? + (p - i) as i64 * d;
        match best {
            Some((b, _)) if b >= value => {}
            _ => best = Some((value, i)),
        }
    }
    let (core, wi) = best.expect("nonempty range");
    let rhs = core - p as i64;
    Ok(BoundReport::build(
        BoundTag::CommonDeg,
        false,
        hyp,
        p_i.reg,
        rhs,
        Some(Witness { index: wi, weights: None }),
    ))
}

/// Unconditional cyclic bound with `d = T_1(S/I)`:
/// `reg(S/I) <= max_{0 <= i <= p-c}{ T_i + (p - i) T_1 } - p`.
pub fn bound_maincor(p_i: &ShiftProfile, c: usize) -> Result<BoundReport> {
    let p = p_i.pd;
    if p == 0 {
        // free module: reg = T_0, and the empty bound degenerates to T_0
        return Ok(BoundReport::build(
            BoundTag::MainCor,
            false,
            HypothesisStatus::met(),
            p_i.reg,
            p_i.reg,
            Some(Witness { index: 0, weights: None }),
        ));
    }
    if c == 0 || p < c {
        return Err(EngineError::MalformedProfile { pd: p, codim: c });
    }
    let d = t(p_i, 1)?;
    let mut report = bound_common_degree(p_i, c, d, HypothesisStatus::met())?;
    report.bound = BoundTag::MainCor;
    Ok(report)
}

/// Principal annihilator bound: `T_p(M) <= T_{p-1}(M) + d` for any form
/// of degree `d` annihilating `M`.
pub fn check_codim1(p_m: &ShiftProfile, d: i64, hyp: HypothesisStatus) -> Result<BoundReport> {
    let p = p_m.pd;
    if p == 0 {
        return Err(EngineError::MalformedProfile { pd: 0, codim: 1 });
    }
    let lhs = t(p_m, p)?;
    let rhs = t(p_m, p - 1)? + d;
    Ok(BoundReport::build(BoundTag::Codim1, false, hyp, lhs, rhs, None))
}

/// Weak convexity of maximal shifts: `T_p <= T_i + T_{p-i}` for all `i`.
/// Asserted when `dim - depth <= 1`; otherwise a report-only probe whose
/// violations are counterexample candidates.
pub fn check_ehu_thm1(p_i: &ShiftProfile, dim_minus_depth: i64) -> Result<BoundReport> {
    let p = p_i.pd;
    let lhs = t(p_i, p)?;
    let mut worst: Option<(i64, usize)> = None;
    for i in 0..=p {
        let rhs = t(p_i, i)? + t(p_i, p - i)?;
        match worst {
            Some((w, _)) if w <= rhs => {}
            _ => worst = Some((rhs, i)),
        }
    }
    let (rhs, wi) = worst.expect("nonempty");
    let hyp = HypothesisStatus::met();
    let report_only = dim_minus_depth > 1;
    let mut report = BoundReport::build(
        BoundTag::Ehu1,
        report_only,
        hyp,
        lhs,
        rhs,
        Some(Witness { index: wi, weights: None }),
    );
    if report_only {
        report
            .notes
            .push(format!("dim - depth = {dim_minus_depth} > 1: probe only"));
    }
    Ok(report)
}

/// Splitting bound against an annihilating ideal:
/// `T_p(M) <= T_{p-q}(M) + T_q(S/J)` for `0 <= q <= codim(J)`.
/// One report per admissible `q`. Under the almost-Cohen-Macaulay
/// hypothesis this is a proved statement (tag `ehu2`); without it the same
/// inequality is evaluated as an open probe (tag `conj`) whose hypotheses
/// are only the annihilation and depth conditions.
pub fn check_ehu_thm2(
    p_m: &ShiftProfile,
    p_j: &ShiftProfile,
    codim_j: usize,
    dim_minus_depth: i64,
    depth_hyp_holds: bool,
    ann_holds: bool,
) -> Result<Vec<BoundReport>> {
    let p = p_m.pd;
    let q_max = codim_j.min(p).min(p_j.pd);
    let almost_cm = dim_minus_depth <= 1;
    let mut out = Vec::with_capacity(q_max + 1);
    for q in 0..=q_max {
        let lhs = t(p_m, p)?;
        let rhs = t(p_m, p - q)? + t(p_j, q)?;
        let (tag, report_only, hyp) = if almost_cm {
            (
                BoundTag::Ehu2,
                false,
                HypothesisStatus::met()
                    .require(ann_holds, "J is not contained in Ann(M)")
                    .require(depth_hyp_holds, "depth(S/J) < depth(M)"),
            )
        } else {
            (
                BoundTag::Conj,
                true,
                HypothesisStatus::met()
                    .require(ann_holds, "J is not contained in Ann(M)")
                    .require(depth_hyp_holds, "depth(S/J) < depth(M)"),
            )
        };
        out.push(BoundReport::build(
            tag,
            report_only,
            hyp,
            lhs,
            rhs,
            Some(Witness { index: q, weights: None }),
        ));
    }
    Ok(out)
}

/// Strictly increasing shifts below the codimension; a failure indicates
/// an engine bug, never mathematics.
pub fn check_strict_growth(profile: &ShiftProfile, codim: i64) -> bool {
    let limit = codim.max(0) as usize;
    for i in 0..limit.min(profile.pd) {
        let (Some(a), Some(b)) = (profile.t_max(i), profile.t_max(i + 1)) else {
            return false;
        };
        if a >= b {
            return false;
        }
    }
    true
}
