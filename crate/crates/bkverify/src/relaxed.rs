//! Search for relaxed graphs: class members with `Δ = 9`, `ω <= 8`, every
//! degree 8 or 9, and no proper 8-coloring.
//!
//! Stages run cheapest first and each dropped graph keeps the certificate that
//! justified dropping it. A seeded sample of every stage's drops is then
//! re-checked against those certificates with code that shares nothing with
//! the filters.

use std::collections::BTreeMap;
use std::time::Duration;

use bkverify_core::kempe::{find_u_phi, lemma_predicates, CENTER_DEGREE, PALETTE};
use bkverify_core::patterns::{ClassSpec, EmbeddingWitness, Membership};
use bkverify_core::solvers::{check, is_k_colorable, max_clique};
use bkverify_core::{Coloring, Graph};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::graph6_string;
use crate::deadline::Deadline;
use crate::harness::pool;

/// Filter stages, in the order they run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    MaxDegree,
    Membership,
    Clique,
    Degrees,
    Chromatic,
    State,
    Lemmas,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::MaxDegree => "max-degree",
            Stage::Membership => "membership",
            Stage::Clique => "clique",
            Stage::Degrees => "degrees",
            Stage::Chromatic => "chromatic",
            Stage::State => "state",
            Stage::Lemmas => "lemmas",
        }
    }
}

/// Why a graph was dropped, in a form that can be re-checked by hand.
#[derive(Debug, Clone)]
enum Evidence {
    /// Maximum degree is not 9.
    MaxDegree,
    /// Induced copy of a forbidden pattern.
    Witness { pattern: String, mapping: Vec<usize> },
    /// A clique on more than 8 vertices.
    Clique(Vec<usize>),
    /// A vertex whose degree is neither 8 nor 9.
    Vertex(usize),
    /// A proper coloring with at most 8 colors.
    Coloring(Coloring),
    /// No `(u, φ)` state exists.
    NoState,
    /// Failed conclusion clauses.
    Clauses(Vec<&'static str>),
}

enum Outcome {
    Dropped(Stage, Evidence),
    Undecided(Stage),
    Candidate(Candidate),
}

#[derive(Debug, Clone, Serialize)]
pub struct Candidate {
    pub index: usize,
    pub graph6: String,
    pub omega: usize,
    pub clique: Vec<usize>,
    pub u: usize,
    /// `u1..u7, x, y`.
    pub roles: Vec<usize>,
    /// 1-based colors of `G - u`; `u` has 0.
    pub phi: Vec<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Discarded {
    pub index: usize,
    pub graph6: String,
    pub stage: Stage,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct UndecidedEntry {
    pub index: usize,
    pub graph6: String,
    pub stage: Stage,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditStage {
    pub stage: Stage,
    pub dropped: usize,
    pub sampled: usize,
    pub confirmed: usize,
}

impl AuditStage {
    pub fn passed(&self) -> bool {
        self.confirmed == self.sampled && (self.dropped == 0 || self.sampled > 0)
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct RelaxedReport {
    pub scanned: usize,
    pub dropped: BTreeMap<Stage, usize>,
    pub candidates: Vec<Candidate>,
    /// Graphs without an 8-coloring dropped at the state or lemma stage.
    pub discarded: Vec<Discarded>,
    /// Every graph reaching the chromatic test without an 8-coloring. With
    /// `Δ = 9` and `ω <= 8` each one breaks the `max(Δ - 1, ω)` bound.
    pub bk_violations: Vec<String>,
    pub undecided: Vec<UndecidedEntry>,
    pub audit: Vec<AuditStage>,
}

impl RelaxedReport {
    pub fn audit_passed(&self) -> bool {
        self.audit.iter().all(AuditStage::passed)
    }
}

#[derive(Debug, Clone)]
pub struct RelaxedConfig {
    pub class: ClassSpec,
    pub budget: Duration,
    /// Fraction of each stage's drops to re-check; at least one per non-empty stage.
    pub audit_rate: f64,
    pub seed: u64,
    pub workers: usize,
}

fn classify(index: usize, g: &Graph, cfg: &RelaxedConfig) -> Outcome {
    if g.max_degree() != CENTER_DEGREE {
        return Outcome::Dropped(Stage::MaxDegree, Evidence::MaxDegree);
    }
    if let Membership::Violates { pattern, witness } = cfg.class.membership(g) {
        return Outcome::Dropped(
            Stage::Membership,
            Evidence::Witness {
                pattern,
                mapping: witness.mapping,
            },
        );
    }
    let mut budget = Deadline::after(cfg.budget);
    let Ok(clique) = max_clique(g, &mut budget) else {
        return Outcome::Undecided(Stage::Clique);
    };
    if clique.size() > PALETTE as usize {
        return Outcome::Dropped(Stage::Clique, Evidence::Clique(clique.vertices));
    }
    if let Some(v) = (0..g.n()).find(|&v| !(8..=9).contains(&g.degree(v))) {
        return Outcome::Dropped(Stage::Degrees, Evidence::Vertex(v));
    }
    match is_k_colorable(g, PALETTE, &mut budget) {
        Err(_) => return Outcome::Undecided(Stage::Chromatic),
        Ok(Some(col)) => return Outcome::Dropped(Stage::Chromatic, Evidence::Coloring(col)),
        Ok(None) => {}
    }
    let state = match find_u_phi(g, &mut budget) {
        Err(_) => return Outcome::Undecided(Stage::State),
        Ok(None) => return Outcome::Dropped(Stage::State, Evidence::NoState),
        Ok(Some(s)) => s,
    };
    let report = lemma_predicates(&state);
    let failed: Vec<&'static str> = report.failed_conclusions().map(|c| c.id).collect();
    if !failed.is_empty() {
        return Outcome::Dropped(Stage::Lemmas, Evidence::Clauses(failed));
    }
    let mut phi: Vec<u32> = (0..g.n()).map(|v| state.color(v).unwrap_or(0)).collect();
    phi[state.u()] = 0;
    Outcome::Candidate(Candidate {
        index,
        graph6: graph6_string(g),
        omega: clique.size(),
        clique: clique.vertices,
        u: state.u(),
        roles: state.roles().to_vec(),
        phi,
    })
}

/// Re-derive a drop from its certificate alone.
fn confirm(g: &Graph, evidence: &Evidence, cfg: &RelaxedConfig) -> bool {
    let degree = |v: usize| (0..g.n()).filter(|&w| w != v && g.has_edge(v, w)).count();
    match evidence {
        Evidence::MaxDegree => (0..g.n()).map(degree).max().unwrap_or(0) != CENTER_DEGREE,
        Evidence::Witness { pattern, mapping } => cfg
            .class
            .forbidden()
            .iter()
            .find(|p| p.name() == pattern)
            .is_some_and(|p| {
                EmbeddingWitness {
                    mapping: mapping.clone(),
                }
                .validate(g, p.graph())
            }),
        Evidence::Clique(c) => c.len() > PALETTE as usize && check::is_clique(g, c),
        Evidence::Vertex(v) => !(8..=9).contains(&degree(*v)),
        Evidence::Coloring(col) => check::is_proper_total(g, col) && col.colors_used() <= PALETTE as usize,
        Evidence::NoState => matches!(find_u_phi(g, &mut Deadline::after(cfg.budget)), Ok(None)),
        Evidence::Clauses(ids) => match find_u_phi(g, &mut Deadline::after(cfg.budget)) {
            Ok(Some(s)) => {
                let again: Vec<&str> = lemma_predicates(&s).failed_conclusions().map(|c| c.id).collect();
                again == *ids
            }
            _ => false,
        },
    }
}

/// Scan `graphs` for relaxed-graph candidates. The expected result is none.
pub fn search_relaxed(graphs: &[Graph], cfg: &RelaxedConfig) -> RelaxedReport {
    let outcomes: Vec<Outcome> = pool(cfg.workers).install(|| {
        graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| classify(i, g, cfg))
            .collect()
    });

    let mut report = RelaxedReport {
        scanned: graphs.len(),
        ..RelaxedReport::default()
    };
    let mut drops: BTreeMap<Stage, Vec<(usize, Evidence)>> = BTreeMap::new();
    for (i, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            Outcome::Dropped(stage, evidence) => {
                if stage >= Stage::State {
                    report.bk_violations.push(graph6_string(&graphs[i]));
                    report.discarded.push(Discarded {
                        index: i,
                        graph6: graph6_string(&graphs[i]),
                        stage,
                        reason: match &evidence {
                            Evidence::Clauses(ids) => ids.join(","),
                            _ => "no (u, phi) state".into(),
                        },
                    });
                }
                drops.entry(stage).or_default().push((i, evidence));
            }
            Outcome::Undecided(stage) => report.undecided.push(UndecidedEntry {
                index: i,
                graph6: graph6_string(&graphs[i]),
                stage,
            }),
            Outcome::Candidate(c) => {
                report.bk_violations.push(c.graph6.clone());
                report.candidates.push(c);
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for (stage, list) in &drops {
        report.dropped.insert(*stage, list.len());
        let want = ((list.len() as f64 * cfg.audit_rate).ceil() as usize).clamp(1, list.len());
        let picks = sample(&mut rng, list.len(), want).into_vec();
        let confirmed = pool(cfg.workers).install(|| {
            picks
                .par_iter()
                .filter(|&&k| {
                    let (i, ev) = &list[k];
                    confirm(&graphs[*i], ev, cfg)
                })
                .count()
        });
        report.audit.push(AuditStage {
            stage: *stage,
            dropped: list.len(),
            sampled: picks.len(),
            confirmed,
        });
    }
    report
}
