//! Suite orchestration: task list, worker pool, cross-check diagnostics.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::config::{Config, Suite};
use super::exact_suite::check_exact_suite;
use super::numeric::*;
use super::report::{CheckKind, CheckResult, ConfigSnapshot, Report, Status};
use crate::error::{MzvError, Result};
use crate::mzv::{IndexSet, ZetaEngine};

/// Pointwise cyclic checks never go beyond this weight.
pub const CYCLIC_MAX_WEIGHT: u32 = 7;

#[derive(Clone, Debug)]
enum Task {
    Theorem(u32),
    TheoremControl(u32),
    CorollaryFactors,
    Corollary(u32, u8),
    CorollaryControl(u32),
    Series(SeriesId, u32),
    PropsControl(u32),
    AppendixControl(u32),
    Cyclic(IndexSet),
    CyclicControl(IndexSet),
}

fn tasks(cfg: &Config) -> Vec<Task> {
    let (lo, hi) = cfg.weights;
    let mut out = Vec::new();
    if cfg.has(Suite::Theorem) {
        out.extend((lo..=hi).map(Task::Theorem));
        out.push(Task::TheoremControl(lo));
    }
    if cfg.has(Suite::Corollary) {
        out.push(Task::CorollaryFactors);
        for l in lo..=hi {
            out.extend((1..=4).map(|k| Task::Corollary(l, k)));
        }
        out.push(Task::CorollaryControl(lo));
    }
    if cfg.has(Suite::Props) {
        for l in lo..=hi {
            out.extend(SeriesId::props().into_iter().map(|id| Task::Series(id, l)));
        }
        out.push(Task::PropsControl(lo));
    }
    if cfg.has(Suite::Cyclic) {
        out.extend(cyclic_index_sets(hi.min(CYCLIC_MAX_WEIGHT)).into_iter().map(Task::Cyclic));
        out.push(Task::CyclicControl(IndexSet::new(vec![2, 1, 1, 1]).expect("valid")));
    }
    if cfg.has(Suite::Appendix) {
        // The low weights come for free and exercise the smallest cases.
        let with_low = |from: u32| (from..lo).chain(lo..=hi);
        out.extend(with_low(3).map(|l| Task::Series(SeriesId::Depth2, l)));
        out.extend(with_low(4).map(|l| Task::Series(SeriesId::Depth3, l)));
        out.push(Task::AppendixControl(lo));
    }
    out
}

fn execute(ctx: &NumCtx, t: &Task) -> CheckResult {
    match t {
        Task::Theorem(l) => check_theorem(ctx, *l),
        Task::TheoremControl(l) => check_theorem_control(ctx, *l),
        Task::CorollaryFactors => check_corollary_factors(),
        Task::Corollary(l, k) => check_corollary(ctx, *l, *k),
        Task::CorollaryControl(l) => check_corollary_control(ctx, *l),
        Task::Series(id, l) => check_series_identity(ctx, *id, *l),
        Task::PropsControl(l) => check_props_control(ctx, *l),
        Task::AppendixControl(l) => check_appendix_control(ctx, *l),
        Task::Cyclic(l) => check_cyclic_pointwise(ctx, l),
        Task::CyclicControl(l) => check_cyclic_control(ctx, l),
    }
}

fn weight_of(c: &CheckResult) -> Option<u32> {
    c.params.get("l").and_then(|s| s.parse().ok())
}

/// The main identity follows from the regularized tensor identities; flag any weight where it does not.
fn proof_chain_checks(checks: &[CheckResult], cfg: &Config) -> Vec<CheckResult> {
    if !(cfg.has(Suite::Theorem) && cfg.has(Suite::Props)) {
        return Vec::new();
    }
    let chain: Vec<String> = SeriesId::chain().iter().map(|s| s.name()).collect();
    let (lo, hi) = cfg.weights;
    (lo..=hi)
        .filter_map(|l| {
            let at = |name: &str| checks.iter().find(|c| c.name == name && weight_of(c) == Some(l) && !c.negative_control);
            let theorem = at("omega_identity")?;
            let constituents_pass = chain.iter().all(|n| at(n).is_some_and(|c| c.passed()));
            let mut r = CheckResult::new("proof_chain", "props", CheckKind::Numeric).param("l", l);
            r.residual = theorem.residual;
            r.tol = theorem.tol;
            if constituents_pass && !theorem.passed() {
                r.status = Status::Fail;
                r.detail = Some("all constituent identities pass but the main identity does not".into());
            } else if !constituents_pass {
                r.note = Some("some constituent identity failed; implication not exercised".into());
            }
            Some(r)
        })
        .collect()
}

/// Pattern-level observations that individual checks cannot make.
fn diagnostics(checks: &[CheckResult]) -> Vec<String> {
    let regular: Vec<&CheckResult> = checks
        .iter()
        .filter(|c| !c.negative_control && (c.name.starts_with("sharp_tensor_") || c.name.starts_with("tensor_")))
        .collect();
    let admissible: Vec<&CheckResult> = checks
        .iter()
        .filter(|c| !c.negative_control && (c.suite == "theorem" || c.suite == "corollary"))
        .collect();
    let mut out = Vec::new();
    let failing: Vec<&&CheckResult> = regular.iter().filter(|c| c.status == Status::Fail).collect();
    if !failing.is_empty() {
        let mut by_weight: BTreeMap<u32, usize> = BTreeMap::new();
        for c in &failing {
            *by_weight.entry(weight_of(c).unwrap_or(0)).or_default() += 1;
        }
        let uniform = failing.len() == regular.len();
        let admissible_ok = !admissible.is_empty() && admissible.iter().all(|c| c.passed());
        if uniform && admissible_ok {
            out.push(
                "regularized tensor identities fail at every weight while the admissible-only identities pass: \
                 the regularization constant convention (T = 0) is implicated"
                    .into(),
            );
        } else {
            out.push(format!("regularized tensor identities failing by weight: {by_weight:?}"));
        }
    }
    out
}

pub fn snapshot(cfg: &Config) -> ConfigSnapshot {
    ConfigSnapshot {
        digits: cfg.digits,
        weights: [cfg.weights.0, cfg.weights.1],
        tol: cfg.tol,
        suites: cfg.suites.iter().map(|s| s.to_string()).collect(),
    }
}

/// Run every selected suite. Check failures are results; only configuration problems are errors.
pub fn run_all(cfg: &Config, engine: &ZetaEngine) -> Result<Report> {
    cfg.validate()?;
    let ctx = NumCtx { engine, digits: cfg.digits, tol: cfg.tol };
    let list = tasks(cfg);
    let work = || -> Vec<CheckResult> { list.par_iter().map(|t| execute(&ctx, t)).collect() };
    let numeric = match cfg.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| MzvError::Config(format!("worker pool: {e}")))?
            .install(work),
        None => work(),
    };
    let mut checks = if cfg.has(Suite::Exact) { check_exact_suite() } else { Vec::new() };
    checks.extend(numeric);
    let chain = proof_chain_checks(&checks, cfg);
    checks.extend(chain);
    let diag = diagnostics(&checks);
    Ok(Report::new(snapshot(cfg), checks, diag))
}
