//! Input parsing, random-instance generation, batch verification runs,
//! and report emission.

mod batch;
mod gen;
mod input;
mod report;

pub use batch::{
    analyze_input, betti_entries, run_batch, single_report, summarize, BatchParams, BettiEntry,
    CandidateRecord, CharResult, CheckSet, EnvInfo, InstanceAnalysis, InstanceRecord,
    InstanceStatus, JReport, JStrategy, JobOptions, RunReport, StructuralCheck, Summary,
};
pub use gen::{gen_generic_forms, gen_monomial_ideal, instance_seed, GENERIC_FORM_RETRIES};
pub use input::{parse_input, render_input, ModuleInput, ParsedInput};
pub use report::{betti_grid, emit_report};
