//! Single-instance analysis and batch verification runs.
//!
//! `analyze_input` drives the full pipeline on one module: resolve,
//! minimalise, extract Betti data and invariants, run the structural
//! self-checks, pick an annihilating ideal `J` per strategy, and evaluate
//! the requested shift bounds. `run_batch` repeats this over seeded random
//! instances and tallies a deterministic report; candidate violations of
//! the open inequalities are re-verified at additional characteristics
//! before being surfaced, since Betti tables may depend on the
//! characteristic.

use serde::Serialize;

use crate::bounds::{
    bound_common_degree, bound_main, bound_maincor, bound_regthm, check_codim1, check_ehu_thm1,
    check_ehu_thm2, check_strict_growth, BoundReport, BoundTag, HypothesisStatus,
};
use crate::error::{EngineError, Result};
use crate::invariants::{
    ann_contains, codim_module, find_regular_sequence, invariant_report, InvariantReport,
};
use crate::polyring::{MonomialOrder, Polynomial, Ring};
use crate::resolution::{
    alternating_sum_check, betti, koszul_betti_oracle, resolve_minimal, ses_shift_check, shifts,
    BettiTable, Limits, ModulePresentation, SesReport, ShiftProfile,
};

use super::gen::{gen_monomial_ideal, instance_seed};
use super::input::{parse_input, render_input, ModuleInput, ParsedInput};

/// How to choose the annihilating ideal `J` when no `ann:` block is given.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JStrategy {
    /// Cyclic input: take `J = I` itself.
    SelfIdeal,
    /// Search for a complete intersection of forms of this degree inside
    /// the ideal.
    Ci { degree: u32 },
}

impl JStrategy {
    pub fn parse(s: &str) -> Option<JStrategy> {
        if s == "self" {
            return Some(JStrategy::SelfIdeal);
        }
        let d = s.strip_prefix("ci:")?.parse::<u32>().ok()?;
        (d >= 1).then_some(JStrategy::Ci { degree: d })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckSet {
    pub codim1: bool,
    pub regthm: bool,
    pub maincor: bool,
    pub ehu1: bool,
    pub ehu2: bool,
    pub conj: bool,
}

impl CheckSet {
    pub fn all() -> CheckSet {
        CheckSet { codim1: true, regthm: true, maincor: true, ehu1: true, ehu2: true, conj: true }
    }

    pub fn none() -> CheckSet {
        CheckSet {
            codim1: false,
            regthm: false,
            maincor: false,
            ehu1: false,
            ehu2: false,
            conj: false,
        }
    }

    pub fn parse(spec: &str) -> Result<CheckSet> {
        let mut set = CheckSet::none();
        for tag in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match tag {
                "all" => set = CheckSet::all(),
                "codim1" => set.codim1 = true,
                "regthm" => set.regthm = true,
                "maincor" => set.maincor = true,
                "ehu1" => set.ehu1 = true,
                "ehu2" => set.ehu2 = true,
                "conj" => set.conj = true,
                other => {
                    return Err(EngineError::Unsupported(format!(
                        "unknown bound tag `{other}` (expected all|codim1|regthm|maincor|ehu1|ehu2|conj)"
                    )))
                }
            }
        }
        Ok(set)
    }
}

#[derive(Debug, Clone)]
pub struct JobOptions {
    pub checks: CheckSet,
    pub j_strategy: JStrategy,
    pub seed: u64,
    pub degree_cap: Option<i64>,
    pub timeout_secs: Option<u64>,
    pub oracle: bool,
}

impl Default for JobOptions {
    fn default() -> Self {
        JobOptions {
            checks: CheckSet::all(),
            j_strategy: JStrategy::SelfIdeal,
            seed: 0,
            degree_cap: None,
            timeout_secs: None,
            oracle: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: i64,
    pub beta: u64,
}

pub fn betti_entries(table: &BettiTable) -> Vec<BettiEntry> {
    table
        .entries()
        .iter()
        .map(|(&(i, j), &beta)| BettiEntry { i, j, beta })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct StructuralCheck {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct JReport {
    pub source: String,
    pub gens: Vec<String>,
    pub codim: usize,
    pub is_cm: bool,
    pub t1: i64,
    pub contained: bool,
    pub num_min_gens: u64,
    pub profile: ShiftProfile,
}

impl JReport {
    /// A complete intersection has exactly `codim` minimal generators.
    pub fn is_complete_intersection(&self) -> bool {
        self.is_cm && self.num_min_gens == self.codim as u64
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CharResult {
    pub characteristic: u64,
    pub status: String,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub slack: Option<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CandidateRecord {
    pub bound: BoundTag,
    pub index: usize,
    pub results: Vec<CharResult>,
    pub recreation: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceAnalysis {
    pub input: String,
    pub zero_module: bool,
    pub betti: Vec<BettiEntry>,
    pub profile: Option<ShiftProfile>,
    pub invariants: Option<InvariantReport>,
    pub j_used: Option<JReport>,
    pub bounds: Vec<BoundReport>,
    pub ses: Option<SesReport>,
    pub structural: Vec<StructuralCheck>,
    pub notes: Vec<String>,
    pub oracle_match: Option<bool>,
    pub candidates: Vec<CandidateRecord>,
}

impl InstanceAnalysis {
    pub fn structural_ok(&self) -> bool {
        self.structural.iter().all(|c| c.pass) && self.ses.as_ref().map_or(true, |s| s.all_hold)
    }

    pub fn asserted_violations(&self) -> usize {
        self.bounds.iter().filter(|b| b.violation).count()
    }
}

/// Full pipeline on one parsed job.
pub fn analyze_input(parsed: &ParsedInput, opts: &JobOptions) -> Result<InstanceAnalysis> {
    let ring = parsed.ring.clone();
    let limits = match opts.timeout_secs {
        Some(s) => Limits::with_timeout(s),
        None => Limits::none(),
    };
    let input_text = render_input(&ring, &parsed.module, parsed.ann.as_deref());
    let pres = parsed.module.presentation(&ring)?;
    let res = resolve_minimal(&pres, &limits)?;

    let mut analysis = InstanceAnalysis {
        input: input_text,
        zero_module: res.is_zero_module(),
        betti: Vec::new(),
        profile: None,
        invariants: None,
        j_used: None,
        bounds: Vec::new(),
        ses: None,
        structural: Vec::new(),
        notes: Vec::new(),
        oracle_match: None,
        candidates: Vec::new(),
    };
    if res.is_zero_module() {
        analysis.notes.push("unit relations: the module is zero; bound checks skipped".into());
        return Ok(analysis);
    }

    let table = betti(&res)?;
    let profile = shifts(&table)?;
    let inv = invariant_report(&pres, profile.pd)?;
    let n = ring.num_vars();

    // structural self-checks: failures here are engine bugs
    let mut structural = Vec::new();
    let mut check = |name: &str, pass: bool| structural.push(StructuralCheck { name: name.into(), pass });
    check("composition_zero", res.composition_is_zero()?);
    check("minimal_no_constant_entries", !res.has_constant_entry());
    check("degrees_consistent", res.degrees_consistent());
    check("pd_within_variable_count", profile.pd <= n);
    check("depth_plus_pd_is_n", inv.depth + profile.pd as i64 == n as i64);
    check("pd_at_least_codim", profile.pd as i64 >= inv.codim);
    check("strict_growth_below_codim", check_strict_growth(&profile, inv.codim));
    if inv.is_cm {
        let t_c = profile.t_max(inv.codim as usize);
        check("cm_regularity_at_top", t_c == Some(profile.reg + inv.codim));
    }
    let hilbert_cap = table.max_internal_degree().unwrap_or(0) + 2;
    check("hilbert_alternating_sum", alternating_sum_check(&pres, &table, hilbert_cap)?);
    analysis.structural = structural;

    analysis.ses = Some(ses_shift_check(&pres, &limits)?);

    if opts.oracle {
        let cap = oracle_cap(&parsed.module, &table, opts.degree_cap);
        let oracle = koszul_betti_oracle(&pres, cap)?;
        analysis.oracle_match = Some(oracle == table);
    }

    // annihilating ideal selection: explicit ann block, else per strategy
    let j_ideal: Option<(String, Vec<Polynomial>)> = if let Some(ann) = &parsed.ann {
        Some(("ann".into(), ann.clone()))
    } else {
        match (&parsed.module, opts.j_strategy) {
            (ModuleInput::Cyclic(ideal), JStrategy::SelfIdeal) => {
                (!ideal.is_empty()).then(|| ("self".into(), ideal.clone()))
            }
            (ModuleInput::Cyclic(ideal), JStrategy::Ci { degree }) => {
                let q = inv.codim.max(0) as usize;
                match find_regular_sequence(&ring, ideal, degree, q, opts.seed)? {
                    Some(seq) => Some((format!("ci:{degree}"), seq)),
                    None => {
                        analysis
                            .notes
                            .push(format!("no regular sequence of degree {degree} found"));
                        None
                    }
                }
            }
            (ModuleInput::DirectSum(_), _) => None,
        }
    };

    let j_report = match &j_ideal {
        None => None,
        Some((source, gens)) if gens.is_empty() => {
            analysis.notes.push(format!("annihilating ideal from `{source}` is empty"));
            None
        }
        Some((source, gens)) => {
            let pres_j = ModulePresentation::cyclic(ring.clone(), gens)?;
            let res_j = resolve_minimal(&pres_j, &limits)?;
            if res_j.is_zero_module() {
                analysis.notes.push("annihilating ideal is the unit ideal".into());
                None
            } else {
                let table_j = betti(&res_j)?;
                let num_min_gens = table_j.total_at(1);
                let profile_j = shifts(&table_j)?;
                let codim_j = codim_module(&pres_j)?.max(0) as usize;
                let contained = match source.as_str() {
                    // elements drawn from I annihilate S/I by construction
                    "self" => true,
                    s if s.starts_with("ci:") && parsed.ann.is_none() => true,
                    _ => ann_contains(gens, &pres)?,
                };
                let t1 = if profile_j.pd >= 1 {
                    profile_j.t_max(1).expect("pd >= 1")
                } else {
                    0
                };
                Some(JReport {
                    source: source.clone(),
                    gens: gens.iter().map(|g| g.to_string()).collect(),
                    codim: codim_j,
                    is_cm: profile_j.pd == codim_j,
                    t1,
                    contained,
                    num_min_gens,
                    profile: profile_j,
                })
            }
        }
    };

    let mut bounds: Vec<BoundReport> = Vec::new();

    if opts.checks.codim1 && profile.pd >= 1 {
        let (d, hyp) = codim1_degree(parsed, &profile, j_report.as_ref(), &mut analysis.notes);
        if let Some(d) = d {
            bounds.push(check_codim1(&profile, d, hyp)?);
        }
    }

    if opts.checks.regthm {
        match &j_report {
            Some(j) if j.codim >= 1 && profile.pd >= j.codim && j.profile.pd >= j.codim => {
                let hyp = HypothesisStatus::met()
                    .require(j.contained, "J is not contained in Ann(M)")
                    .require(j.is_cm, "S/J is not Cohen-Macaulay")
                    .require(j.t1 >= 2, "T_1(S/J) < 2: change rings over the linear quotient instead");
                bounds.push(bound_regthm(&profile, &j.profile, j.codim, hyp.clone())?);
                bounds.push(bound_main(&profile, &j.profile, j.codim, hyp)?);
                // the common-degree bound needs a certified regular
                // sequence: a contained complete intersection is one
                if let Some(d) = common_degree_of(j) {
                    if j.is_complete_intersection() {
                        let hyp = HypothesisStatus::met()
                            .require(j.contained, "J is not contained in Ann(M)");
                        bounds.push(bound_common_degree(&profile, j.codim, d, hyp)?);
                    }
                }
            }
            Some(_) => analysis
                .notes
                .push("regthm skipped: profile shallower than the codimension of J".into()),
            None => analysis.notes.push("regthm skipped: no annihilating ideal J".into()),
        }
    }

    if opts.checks.maincor && parsed.module.is_cyclic() {
        if profile.pd == 0 || inv.codim >= 1 {
            bounds.push(bound_maincor(&profile, inv.codim.max(0) as usize)?);
        }
    }

    if opts.checks.ehu1 && parsed.module.is_cyclic() && profile.pd >= 1 {
        bounds.push(check_ehu_thm1(&profile, inv.dim - inv.depth)?);
    }

    if (opts.checks.ehu2 || opts.checks.conj) && profile.pd >= 1 {
        match &j_report {
            Some(j) => {
                let depth_ok = j.profile.pd <= profile.pd;
                let reports = check_ehu_thm2(
                    &profile,
                    &j.profile,
                    j.codim,
                    inv.dim - inv.depth,
                    depth_ok,
                    j.contained,
                )?;
                for r in reports {
                    let keep = match r.bound {
                        BoundTag::Ehu2 => opts.checks.ehu2,
                        BoundTag::Conj => opts.checks.conj,
                        _ => true,
                    };
                    if keep {
                        bounds.push(r);
                    }
                }
            }
            None => analysis.notes.push("ehu2/conj skipped: no annihilating ideal J".into()),
        }
    }

    analysis.betti = betti_entries(&table);
    analysis.profile = Some(profile);
    analysis.invariants = Some(inv);
    analysis.j_used = j_report;
    analysis.bounds = bounds;

    // re-verify candidate violations at additional characteristics
    let candidate_indices: Vec<usize> = analysis
        .bounds
        .iter()
        .enumerate()
        .filter(|(_, b)| b.candidate)
        .map(|(k, _)| k)
        .collect();
    if !candidate_indices.is_empty() {
        analysis.candidates =
            reverify_candidates(parsed, opts, &analysis, &candidate_indices)?;
    }

    Ok(analysis)
}

/// Degree of a form annihilating the module, for the principal bound.
fn codim1_degree(
    parsed: &ParsedInput,
    profile: &ShiftProfile,
    j: Option<&JReport>,
    notes: &mut Vec<String>,
) -> (Option<i64>, HypothesisStatus) {
    if let Some(j) = j {
        if j.source == "ann" {
            // smallest generator degree of the supplied annihilator
            let d = j.profile.t_min(1).unwrap_or(0);
            if d > 0 {
                return (
                    Some(d),
                    HypothesisStatus::met().require(j.contained, "J is not contained in Ann(M)"),
                );
            }
        }
    }
    match &parsed.module {
        ModuleInput::Cyclic(_) => {
            // t_1(S/I): smallest minimal generator degree
            (profile.t_min(1), HypothesisStatus::met())
        }
        ModuleInput::DirectSum(blocks) => {
            // a product of one minimal-degree generator per summand
            // annihilates the whole sum
            let mut total = 0i64;
            for block in blocks {
                match block.iter().filter_map(|g| g.degree()).min() {
                    Some(d) => total += d as i64,
                    None => {
                        notes.push(
                            "codim1 skipped: a free summand has zero annihilator".into(),
                        );
                        return (None, HypothesisStatus::met());
                    }
                }
            }
            (Some(total), HypothesisStatus::met())
        }
    }
}

/// If all generators share one degree, that degree.
fn common_degree_of(j: &JReport) -> Option<i64> {
    if j.profile.pd == 0 {
        return None;
    }
    let lo = j.profile.t_min(1)?;
    let hi = j.profile.t_max(1)?;
    (lo == hi).then_some(lo)
}

const REVERIFY_CHARACTERISTICS: [u64; 2] = [2, 101];

fn reverify_candidates(
    parsed: &ParsedInput,
    opts: &JobOptions,
    analysis: &InstanceAnalysis,
    candidate_indices: &[usize],
) -> Result<Vec<CandidateRecord>> {
    let recreation = analysis.input.clone();
    let mut records = Vec::new();
    for &k in candidate_indices {
        let b = &analysis.bounds[k];
        let witness_index = b.witness.as_ref().map_or(0, |w| w.index);
        let mut results = vec![CharResult {
            characteristic: parsed.ring.characteristic(),
            status: "violated".into(),
            lhs: Some(b.lhs),
            rhs: Some(b.rhs),
            slack: Some(b.slack),
        }];
        for &q in REVERIFY_CHARACTERISTICS.iter() {
            if q == parsed.ring.characteristic() {
                continue;
            }
            results.push(reverify_at(&recreation, opts, b.bound, witness_index, q));
        }
        records.push(CandidateRecord {
            bound: b.bound,
            index: witness_index,
            results,
            recreation: recreation.clone(),
        });
    }
    Ok(records)
}

fn reverify_at(
    recreation: &str,
    opts: &JobOptions,
    bound: BoundTag,
    witness_index: usize,
    characteristic: u64,
) -> CharResult {
    let attempt = || -> Result<Option<(i64, i64)>> {
        let parsed = parse_input(recreation, Some(characteristic))?;
        let sub_opts = JobOptions { oracle: false, ..opts.clone() };
        let analysis = analyze_input(&parsed, &sub_opts)?;
        Ok(analysis
            .bounds
            .iter()
            .find(|b| {
                b.bound == bound && b.witness.as_ref().map_or(0, |w| w.index) == witness_index
            })
            .map(|b| (b.lhs, b.rhs)))
    };
    match attempt() {
        Ok(Some((lhs, rhs))) => CharResult {
            characteristic,
            status: if rhs - lhs < 0 { "violated".into() } else { "holds".into() },
            lhs: Some(lhs),
            rhs: Some(rhs),
            slack: Some(rhs - lhs),
        },
        Ok(None) => CharResult {
            characteristic,
            status: "bound not evaluated at this characteristic".into(),
            lhs: None,
            rhs: None,
            slack: None,
        },
        Err(e) => CharResult {
            characteristic,
            status: format!("re-verification failed: {e}"),
            lhs: None,
            rhs: None,
            slack: None,
        },
    }
}

fn oracle_cap(module: &ModuleInput, table: &BettiTable, user: Option<i64>) -> i64 {
    if let Some(c) = user {
        return c;
    }
    let computed = table.max_internal_degree().unwrap_or(0);
    // for monomial input the top twist of the Taylor complex (the degree
    // of the lcm of each block's generators) bounds every shift
    let mut all_monomial = true;
    let mut taylor = 0i64;
    for block in module.blocks() {
        let mut lcm: Option<crate::polyring::Monomial> = None;
        for g in &block {
            if g.num_terms() != 1 {
                all_monomial = false;
                break;
            }
            let m = g.lead_term().expect("nonzero").mono.clone();
            lcm = Some(match lcm {
                None => m,
                Some(l) => l.lcm(&m),
            });
        }
        if !all_monomial {
            break;
        }
        if let Some(l) = lcm {
            taylor = taylor.max(l.degree() as i64);
        }
    }
    if all_monomial {
        computed.max(taylor)
    } else {
        computed
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EnvInfo {
    pub version: String,
    pub characteristic: u64,
    pub order: String,
    pub seed: u64,
    pub vars: usize,
    pub max_deg: u32,
    pub gens: usize,
    pub count: usize,
    pub j_strategy: String,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status")]
pub enum InstanceStatus {
    #[serde(rename = "completed")]
    Completed,
    #[serde(rename = "skipped")]
    Skipped { reason: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceRecord {
    pub index: usize,
    #[serde(flatten)]
    pub status: InstanceStatus,
    pub analysis: Option<InstanceAnalysis>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub attempted: usize,
    pub completed: usize,
    pub skipped: usize,
    pub asserted_pass: usize,
    pub asserted_violations: usize,
    pub hypothesis_skipped: usize,
    pub probes: usize,
    pub candidates: usize,
    pub structural_failures: usize,
    pub oracle_mismatches: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub env: EnvInfo,
    pub instances: Vec<InstanceRecord>,
    pub summary: Summary,
}

impl RunReport {
    /// 0 = clean, 2 = an asserted statement or structural check failed,
    /// 3 = a counterexample candidate was found.
    pub fn exit_code(&self) -> i32 {
        if self.summary.asserted_violations > 0 || self.summary.structural_failures > 0 {
            2
        } else if self.summary.candidates > 0 {
            3
        } else {
            0
        }
    }
}

pub fn summarize(instances: &[InstanceRecord]) -> Summary {
    let mut s = Summary { attempted: instances.len(), ..Summary::default() };
    for rec in instances {
        match (&rec.status, &rec.analysis) {
            (InstanceStatus::Completed, Some(a)) => {
                s.completed += 1;
                for b in &a.bounds {
                    if b.violation {
                        s.asserted_violations += 1;
                    } else if b.asserted {
                        s.asserted_pass += 1;
                    } else if !b.hypotheses_met {
                        s.hypothesis_skipped += 1;
                    } else {
                        s.probes += 1;
                    }
                }
                s.candidates += a.candidates.len();
                if !a.structural_ok() {
                    s.structural_failures += 1;
                }
                if a.oracle_match == Some(false) {
                    s.oracle_mismatches += 1;
                    s.structural_failures += 1;
                }
            }
            _ => s.skipped += 1,
        }
    }
    s
}

#[derive(Debug, Clone)]
pub struct BatchParams {
    pub vars: usize,
    pub max_deg: u32,
    pub gens: usize,
    pub count: usize,
    pub seed: u64,
    pub characteristic: u64,
    pub order: MonomialOrder,
    pub options: JobOptions,
}

impl BatchParams {
    fn ring(&self) -> Result<Ring> {
        let names: Vec<String> = (0..self.vars).map(|i| format!("x{}", i + 1)).collect();
        Ring::new(self.characteristic, names, self.order)
    }
}

/// Run the verification pipeline over `count` seeded random monomial
/// ideals. Per-instance engine failures are recorded and skipped, never
/// dropped.
pub fn run_batch(params: &BatchParams) -> Result<RunReport> {
    let ring = params.ring()?;
    let mut instances = Vec::with_capacity(params.count);
    for index in 0..params.count {
        let seed = instance_seed(params.seed, index);
        let ideal = gen_monomial_ideal(&ring, params.max_deg, params.gens, seed);
        let parsed = ParsedInput {
            ring: ring.clone(),
            module: ModuleInput::Cyclic(ideal),
            ann: None,
        };
        let opts = JobOptions { seed, ..params.options.clone() };
        let record = match analyze_input(&parsed, &opts) {
            Ok(analysis) => InstanceRecord {
                index,
                status: InstanceStatus::Completed,
                analysis: Some(analysis),
            },
            Err(e) => InstanceRecord {
                index,
                status: InstanceStatus::Skipped { reason: e.to_string() },
                analysis: None,
            },
        };
        instances.push(record);
    }
    let summary = summarize(&instances);
    Ok(RunReport {
        env: EnvInfo {
            version: env!("CARGO_PKG_VERSION").to_string(),
            characteristic: params.characteristic,
            order: params.order.name().to_string(),
            seed: params.seed,
            vars: params.vars,
            max_deg: params.max_deg,
            gens: params.gens,
            count: params.count,
            j_strategy: match params.options.j_strategy {
                JStrategy::SelfIdeal => "self".to_string(),
                JStrategy::Ci { degree } => format!("ci:{degree}"),
            },
        },
        instances,
        summary,
    })
}

/// Wrap a single analysed input as a one-instance report, for the
/// file-based commands.
pub fn single_report(parsed: &ParsedInput, opts: &JobOptions) -> Result<RunReport> {
    let analysis = analyze_input(parsed, opts)?;
    let instances = vec![InstanceRecord {
        index: 0,
        status: InstanceStatus::Completed,
        analysis: Some(analysis),
    }];
    let summary = summarize(&instances);
    Ok(RunReport {
        env: EnvInfo {
            version: env!("CARGO_PKG_VERSION").to_string(),
            characteristic: parsed.ring.characteristic(),
            order: parsed.ring.order().name().to_string(),
            seed: opts.seed,
            vars: parsed.ring.num_vars(),
            max_deg: 0,
            gens: 0,
            count: 1,
            j_strategy: match (&parsed.ann, opts.j_strategy) {
                (Some(_), _) => "ann".to_string(),
                (None, JStrategy::SelfIdeal) => "self".to_string(),
                (None, JStrategy::Ci { degree }) => format!("ci:{degree}"),
            },
        },
        instances,
        summary,
    })
}
