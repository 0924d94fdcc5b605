//! Per-graph verification and parallel corpus runs.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use bkverify_core::checks::{bk_bound, brooks_bound, is_p6_c4_free, is_vertex_critical, ratio_bound, Facts, Verdict};
use bkverify_core::patterns::{ClassSpec, Membership};
use bkverify_core::Graph;
use rayon::prelude::*;

use crate::corpus::{graph6_string, Record};
use crate::deadline::Deadline;
use crate::report::{CheckResult, ErrorRecord, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Brooks,
    Bk,
    Ratio,
    Critical,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::Brooks, Check::Bk, Check::Ratio, Check::Critical];

    pub fn name(self) -> &'static str {
        match self {
            Check::Brooks => "brooks",
            Check::Bk => "bk",
            Check::Ratio => "ratio",
            Check::Critical => "critical",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown check `{s}` (expected brooks, bk, ratio or critical)"))
    }
}

/// What to check on every graph, and how long each graph may take.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub checks: Vec<Check>,
    pub class: ClassSpec,
    /// Solver budget per graph.
    pub budget: Duration,
}

/// Name of the always-on consistency check: `ω <= χ <= Δ + 1` and both
/// certificates accepted by the independent checkers.
pub const INVARIANTS: &str = "invariants";

fn bound_result(name: &'static str, verdict: Verdict, bound: Option<usize>, chi: Option<usize>) -> CheckResult {
    CheckResult {
        name,
        verdict,
        bound,
        tight: verdict == Verdict::Pass && bound.is_some() && bound == chi,
        note: None,
    }
}

/// Run the configured checks on one graph.
pub fn verify_graph(g: &Graph, cfg: &VerifyConfig) -> VerificationReport {
    let start = Instant::now();
    let facts = Facts::compute(g, &mut Deadline::after(cfg.budget));
    let omega = facts.omega();
    let chi = facts.chi();

    let mut checks = Vec::new();
    let sane = facts.is_consistent() && facts.certificates_hold(g);
    checks.push(CheckResult {
        name: INVARIANTS,
        verdict: if sane { Verdict::Pass } else { Verdict::Fail },
        bound: None,
        tight: false,
        note: (!sane).then(|| "solver certificates disagree".to_string()),
    });
    for &check in &cfg.checks {
        let result = match check {
            Check::Brooks => bound_result(
                check.name(),
                facts.brooks(),
                omega.and_then(|w| brooks_bound(facts.max_degree, w)),
                chi,
            ),
            Check::Bk => bound_result(
                check.name(),
                facts.bk(),
                omega.and_then(|w| bk_bound(facts.max_degree, w)),
                chi,
            ),
            Check::Ratio => {
                let free = is_p6_c4_free(g);
                let bound = omega.filter(|_| free).map(ratio_bound);
                bound_result(check.name(), facts.ratio(free), bound, chi)
            }
            Check::Critical => criticality(g, chi, cfg.budget),
        };
        checks.push(result);
    }

    let membership = cfg.class.membership(g);
    let (violated_pattern, witness) = match membership {
        Membership::Member => (None, None),
        Membership::Violates { pattern, witness } => (Some(pattern), Some(witness.mapping)),
    };
    VerificationReport {
        index: 0,
        line: None,
        graph6: graph6_string(g),
        n: facts.n,
        m: facts.m,
        max_degree: facts.max_degree,
        min_degree: facts.min_degree,
        omega,
        clique: facts.clique.as_ref().map(|c| c.vertices.clone()),
        chi,
        coloring: facts.chromatic.as_ref().map(|(_, c)| c.one_based()),
        member: violated_pattern.is_none(),
        violated_pattern,
        witness,
        status: overall(&checks),
        checks,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// `k`-vertex-criticality at `k = χ`. Critical graphs pass when `δ >= k - 1`
/// and fail otherwise; non-critical graphs are skipped.
fn criticality(g: &Graph, chi: Option<usize>, budget: Duration) -> CheckResult {
    let name = Check::Critical.name();
    let Some(k) = chi else {
        return bound_result(name, Verdict::Undecided, None, None);
    };
    let (verdict, note) = match is_vertex_critical(g, k, &mut Deadline::after(budget)) {
        Ok(c) if c.critical && c.degree_violation => (
            Verdict::Fail,
            Some(format!("{k}-critical with min degree below {}", k.saturating_sub(1))),
        ),
        Ok(c) if c.critical => (Verdict::Pass, Some(format!("{k}-vertex-critical"))),
        Ok(_) => (Verdict::Skipped, None),
        Err(_) => (Verdict::Undecided, None),
    };
    CheckResult {
        name,
        verdict,
        bound: Some(k),
        tight: false,
        note,
    }
}

/// Fail beats undecided beats pass beats skipped.
fn overall(checks: &[CheckResult]) -> Verdict {
    let has = |v| checks.iter().any(|c| c.verdict == v);
    if has(Verdict::Fail) {
        Verdict::Fail
    } else if has(Verdict::Undecided) {
        Verdict::Undecided
    } else if has(Verdict::Pass) {
        Verdict::Pass
    } else {
        Verdict::Skipped
    }
}

/// Verification output for a whole stream, in input order.
#[derive(Debug, Clone, Default)]
pub struct CorpusRun {
    pub reports: Vec<VerificationReport>,
    pub errors: Vec<ErrorRecord>,
}

/// A rayon pool with exactly `workers` threads.
pub fn pool(workers: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool")
}

/// Verify every parsed record on `workers` threads. Malformed records become
/// error entries; output order follows input order.
pub fn verify_records(records: &[Record], cfg: &VerifyConfig, workers: usize) -> CorpusRun {
    let outcomes: Vec<Result<VerificationReport, ErrorRecord>> = pool(workers).install(|| {
        records
            .par_iter()
            .enumerate()
            .map(|(index, rec)| match &rec.graph {
                Ok(g) => {
                    let mut r = verify_graph(g, cfg);
                    r.index = index;
                    r.line = Some(rec.line);
                    Ok(r)
                }
                Err(message) => Err(ErrorRecord {
                    index,
                    line: Some(rec.line),
                    input: rec.text.clone(),
                    message: message.clone(),
                }),
            })
            .collect()
    });
    let mut run = CorpusRun::default();
    for o in outcomes {
        match o {
            Ok(r) => run.reports.push(r),
            Err(e) => run.errors.push(e),
        }
    }
    run
}

/// Verify in-memory graphs on `workers` threads, in order.
pub fn verify_graphs(graphs: &[Graph], cfg: &VerifyConfig, workers: usize) -> Vec<VerificationReport> {
    pool(workers).install(|| {
        graphs
            .par_iter()
            .enumerate()
            .map(|(index, g)| {
                let mut r = verify_graph(g, cfg);
                r.index = index;
                r
            })
            .collect()
    })
}
