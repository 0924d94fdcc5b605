//! Acceptance suite. Prints one `PASS`/`FAIL` line per criterion (criterion 1
//! has one line per sub-check) and exits non-zero when any line fails.
//!
//! Shares the shipped corpora under `corpus/` with the CLI.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bkverify::corpus::read_file;
use bkverify::harness::{verify_graphs, Check, VerifyConfig};
use bkverify::relaxed::{search_relaxed, RelaxedConfig};
use bkverify::report::VerificationReport;
use bkverify::sampler::{sample_class_members, sample_sizes, SampleConfig};
use bkverify_core::canon::is_isomorphic;
use bkverify_core::checks::{is_vertex_critical, Verdict};
use bkverify_core::kempe::{
    exists_alternating_path, find_u_phi, kempe_component, kempe_interchange, try_extend_to_u, UPhiState,
};
use bkverify_core::patterns::{
    build_c5_plus, catalog, contains_induced, has_hole, has_induced_path, induces, ClassSpec,
};
use bkverify_core::solvers::chromatic_number;
use bkverify_core::{Coloring, Graph, Unlimited, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_917;
const BUDGET: Duration = Duration::from_secs(10);

const C1_RUNTIME: Duration = Duration::from_secs(1);
const C2_RUNTIME: Duration = Duration::from_secs(5 * 60);
const C4_RUNTIME: Duration = Duration::from_secs(10 * 60);
const C4_SAMPLED: usize = 1000;
const C4_MAX_UNDECIDED: f64 = 0.05;
const C4_WORKERS: usize = 4;
const C5_SWAP_TRIALS: usize = 10_000;
const C5_PATH_TRIALS: usize = 1_000;
const C7_AUDIT_RATE: f64 = 0.01;

struct Line {
    id: &'static str,
    pass: bool,
    detail: String,
}

struct Suite {
    lines: Vec<Line>,
}

impl Suite {
    fn record(&mut self, id: &'static str, pass: bool, detail: impl Into<String>) {
        let detail = detail.into();
        println!("criterion {id:<3} {}  {detail}", if pass { "PASS" } else { "FAIL" });
        self.lines.push(Line { id, pass, detail });
    }

    fn note(&self, text: impl AsRef<str>) {
        println!("              {}", text.as_ref());
    }
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Every shipped corpus graph with its file's vertex count.
fn load_corpus() -> Vec<(usize, Graph)> {
    let mut out = Vec::new();
    for n in 1..=8 {
        let path = corpus_dir().join(format!("graph{n}.g6"));
        for rec in read_file(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display())) {
            let g = rec
                .graph
                .unwrap_or_else(|e| panic!("{}:{}: {e}", path.display(), rec.line));
            assert_eq!(g.n(), n);
            out.push((n, g));
        }
    }
    out
}

fn class(key: &str) -> ClassSpec {
    ClassSpec::preset(key).expect("preset")
}

fn verify_cfg(checks: &[Check], class_key: &str) -> VerifyConfig {
    VerifyConfig {
        checks: checks.to_vec(),
        class: class(class_key),
        budget: BUDGET,
    }
}

fn verdicts<'a>(reports: &'a [VerificationReport], name: &'a str) -> impl Iterator<Item = Verdict> + 'a {
    reports.iter().map(move |r| r.check(name).expect("check ran").verdict)
}

fn count(reports: &[VerificationReport], name: &str, v: Verdict) -> usize {
    verdicts(reports, name).filter(|&x| x == v).count()
}

// Criterion 1.

fn configuration_fidelity(s: &mut Suite) {
    let start = Instant::now();
    let g = build_c5_plus();
    let mut degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let shape_ok = g.n() == 10 && g.edge_count() == 22 && degrees == [5, 5, 5, 5, 4, 4, 4, 4, 4, 4];
    s.record(
        "1a",
        shape_ok,
        format!("n = {}, m = {}, degrees {:?}", g.n(), g.edge_count(), degrees),
    );

    let mut matched = Vec::new();
    let mut mismatched = Vec::new();
    for e in catalog() {
        let Some(subset) = e.subset_indices() else { continue };
        let extracted = g.induced_subgraph(&subset).expect("subset in range");
        if is_isomorphic(&extracted, &e.graph()) {
            matched.push(e.key);
        } else {
            mismatched.push(e.key);
        }
    }
    s.record(
        "1b",
        matched.len() == 7 && mismatched.is_empty(),
        format!(
            "{} of 7 listed subsets match their entries; mismatched {:?}",
            matched.len(),
            mismatched
        ),
    );

    let mut absent = Vec::new();
    let mut absent_derived = Vec::new();
    let mut checked = 0;
    for e in catalog().iter().filter(|e| e.key != "c5plus" && e.key != "K7") {
        checked += 1;
        let pattern = e.graph();
        match contains_induced(&g, &pattern) {
            Some(w) => assert!(w.validate(&g, &pattern), "witness for {} must validate", e.key),
            None => {
                absent.push(e.key);
                if e.tier == bkverify_core::patterns::Tier::Derived {
                    absent_derived.push(e.key);
                }
            }
        }
    }
    s.record(
        "1c",
        absent.is_empty(),
        format!(
            "{} of {checked} catalog entries are induced in C5+; absent {:?}",
            checked - absent.len(),
            absent
        ),
    );
    s.note(format!("derived-tier entries absent: {absent_derived:?}"));

    let elapsed = start.elapsed();
    s.record(
        "1d",
        elapsed < C1_RUNTIME,
        format!("{elapsed:.2?} (limit {C1_RUNTIME:?})"),
    );
}

// Criteria 2 and 3.

fn corpus_bounds(s: &mut Suite, corpus: &[(usize, Graph)]) {
    let graphs: Vec<Graph> = corpus.iter().map(|(_, g)| g.clone()).collect();
    let n8 = corpus.iter().filter(|(n, _)| *n == 8).count();
    let size_ok = n8 == 12_346;

    let start = Instant::now();
    let ratio = verify_graphs(&graphs, &verify_cfg(&[Check::Ratio], "p6c4"), 1);
    let elapsed = start.elapsed();
    let members = ratio.iter().filter(|r| r.member).count();
    let ratio_pass = count(&ratio, "ratio", Verdict::Pass);
    let ratio_bad = count(&ratio, "ratio", Verdict::Fail) + count(&ratio, "ratio", Verdict::Undecided);
    // Every member must have been checked; non-members are skipped.
    let coverage = ratio
        .iter()
        .all(|r| (r.check("ratio").unwrap().verdict == Verdict::Skipped) != r.member);
    s.record(
        "2",
        size_ok && coverage && ratio_bad == 0 && members > 0 && elapsed < C2_RUNTIME,
        format!(
            "{} graphs ({n8} with n = 8), {members} (P6,C4)-free, {ratio_pass} within the ratio bound, {ratio_bad} violations, {elapsed:.2?} on 1 worker",
            graphs.len()
        ),
    );

    let brooks = verify_graphs(&graphs, &verify_cfg(&[Check::Brooks], "p6c4"), 1);
    let applicable: Vec<&VerificationReport> = brooks.iter().filter(|r| r.max_degree >= 3).collect();
    let bad = applicable
        .iter()
        .filter(|r| r.check("brooks").unwrap().verdict != Verdict::Pass)
        .count();
    s.record(
        "3",
        bad == 0 && !applicable.is_empty(),
        format!("{} graphs with Δ >= 3, {bad} violations", applicable.len()),
    );
    let tight: Vec<&&VerificationReport> = applicable.iter().filter(|r| r.check("brooks").unwrap().tight).collect();
    let complete = tight.iter().filter(|r| r.m == r.n * (r.n - 1) / 2).count();
    let clique_forced = tight.iter().filter(|r| r.chi == r.omega).count();
    let degree_forced = tight.len() - clique_forced;
    s.note(format!(
        "tight cases: {} ({complete} complete graphs, {clique_forced} with χ = ω, {degree_forced} with χ = Δ > ω)",
        tight.len()
    ));
}

// Criterion 4.

struct SpotSuite {
    sampled: Vec<Graph>,
    constructed: Vec<Graph>,
}

fn spot_suite() -> SpotSuite {
    let c = class("p6c4c5plus");
    let out = sample_sizes(&c, 10..=16, C4_SAMPLED, SEED, Some(9));
    if let Some(w) = &out.warning {
        println!("              sampler warning: {w}");
    }
    let mut constructed = vec![Graph::complete(10).unwrap()];
    for stable in 1..=4 {
        constructed.push(Graph::complete(9).unwrap().join(&Graph::empty(stable)));
    }
    let mut cfg = SampleConfig::new(9, 20, SEED ^ 0x9e37);
    cfg.target_delta = Some(8);
    for n in 9..=15 {
        cfg.n = n;
        cfg.seed += 1;
        for h in sample_class_members(&c, &cfg).graphs {
            constructed.push(Graph::complete(1).unwrap().join(&h));
        }
    }
    SpotSuite {
        sampled: out.graphs,
        constructed,
    }
}

fn borodin_kostochka(s: &mut Suite, suite: &SpotSuite) {
    let c = class("p6c4c5plus");
    let sampled_ok = suite.sampled.len() >= C4_SAMPLED
        && suite
            .sampled
            .iter()
            .all(|g| (10..=16).contains(&g.n()) && g.max_degree() >= 9 && c.contains(g));
    let all: Vec<Graph> = suite.sampled.iter().chain(&suite.constructed).cloned().collect();
    let start = Instant::now();
    let reports = verify_graphs(&all, &verify_cfg(&[Check::Bk], "p6c4c5plus"), C4_WORKERS);
    let elapsed = start.elapsed();
    let fail = count(&reports, "bk", Verdict::Fail);
    let undecided = count(&reports, "bk", Verdict::Undecided);
    let skipped = count(&reports, "bk", Verdict::Skipped);
    let rate = undecided as f64 / all.len() as f64;
    s.record(
        "4",
        sampled_ok && fail == 0 && skipped == 0 && rate < C4_MAX_UNDECIDED && elapsed < C4_RUNTIME,
        format!(
            "{} sampled members + {} constructed, {fail} violations, undecided {:.2}% (limit {:.0}%), {elapsed:.2?} on {C4_WORKERS} workers",
            suite.sampled.len(),
            suite.constructed.len(),
            100.0 * rate,
            100.0 * C4_MAX_UNDECIDED
        ),
    );
    let tight = reports.iter().filter(|r| r.check("bk").unwrap().tight).count();
    s.note(format!("tight cases: {tight}"));
}

// Criterion 5.

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random proper coloring: random vertex order, random free color from `palette`.
fn random_coloring(rng: &mut ChaCha8Rng, g: &Graph, palette: u32) -> Coloring {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut colors: Vec<Option<u32>> = vec![None; g.n()];
    for v in order {
        let used: BTreeSet<u32> = g.neighbors(v).filter_map(|w| colors[w]).collect();
        let free: Vec<u32> = (0..palette).filter(|c| !used.contains(c)).collect();
        colors[v] = Some(free[rng.random_range(0..free.len())]);
    }
    Coloring::from_partial(palette, colors).unwrap()
}

fn proper(g: &Graph, colors: &[Option<u32>]) -> bool {
    g.edges().all(|(a, b)| colors[a].is_some() && colors[a] != colors[b])
}

/// Vertices reachable from `from` through vertices colored `i` or `j`.
fn reachable(g: &Graph, colors: &[Option<u32>], from: usize, i: u32, j: u32, skip: usize) -> BTreeSet<usize> {
    let ok = |v: usize| v != skip && matches!(colors[v], Some(c) if c == i || c == j);
    let mut seen = BTreeSet::new();
    if !ok(from) {
        return seen;
    }
    let mut queue = VecDeque::from([from]);
    seen.insert(from);
    while let Some(v) = queue.pop_front() {
        for w in 0..g.n() {
            if g.has_edge(v, w) && ok(w) && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen
}

fn u_phi_states(rng: &mut ChaCha8Rng, want: usize) -> Vec<UPhiState> {
    let mut out = Vec::new();
    while out.len() < want {
        let n = rng.random_range(11..=16);
        let p = rng.random_range(0.15..0.6);
        let mut g = random_graph(rng, n - 1, p);
        let hub: VertexSet = (0..9).collect();
        g = g.with_vertex(&hub).unwrap();
        if let Ok(Some(state)) = find_u_phi(&g, &mut Unlimited) {
            out.push(state);
        }
    }
    out
}

fn kempe_soundness(s: &mut Suite) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut proper_after = 0;
    let mut restored = 0;
    for _ in 0..C5_SWAP_TRIALS {
        let n = rng.random_range(2..=16);
        let p = rng.random_range(0.1..0.7);
        let g = random_graph(&mut rng, n, p);
        let palette = (g.max_degree() as u32 + 1).max(2) + rng.random_range(0..3);
        let col = random_coloring(&mut rng, &g, palette);
        let v = rng.random_range(0..n);
        let i = col.get(v).unwrap();
        let j = (i + rng.random_range(1..palette)) % palette;
        let comp = kempe_component(&g, &col, v, i, j).unwrap();
        let swapped = kempe_interchange(&g, &col, &comp, i, j).unwrap();
        proper_after += proper(&g, swapped.as_slice()) as usize;
        let back = kempe_interchange(&g, &swapped, &comp, i, j).unwrap();
        restored += (back == col) as usize;
    }

    let mut agree = 0;
    let mut trials = 0;
    let states = u_phi_states(&mut rng, 200);
    'outer: for state in states.iter().cycle() {
        for (i, j) in state.nonadjacent_pairs() {
            if trials == C5_PATH_TRIALS {
                break 'outer;
            }
            trials += 1;
            let colors: Vec<Option<u32>> = (0..state.graph().n()).map(|v| state.color(v)).collect();
            let oracle =
                reachable(state.graph(), &colors, state.ui(i), i as u32, j as u32, state.u()).contains(&state.ui(j));
            agree += (exists_alternating_path(state, i, j).unwrap() == oracle) as usize;
        }
    }
    s.record(
        "5",
        proper_after == C5_SWAP_TRIALS && restored == C5_SWAP_TRIALS && trials == C5_PATH_TRIALS && agree == trials,
        format!(
            "interchange proper {proper_after}/{C5_SWAP_TRIALS}, double swap restores {restored}/{C5_SWAP_TRIALS}, path agreement {agree}/{trials}"
        ),
    );
}

// Criterion 6.

fn extension_soundness(s: &mut Suite, suite: &SpotSuite) {
    let mut states = 0;
    let mut successes = 0;
    let mut unsound = 0;
    for g in suite.sampled.iter().chain(&suite.constructed) {
        let Ok(Some(state)) = find_u_phi(g, &mut bkverify::deadline::Deadline::after(BUDGET)) else {
            continue;
        };
        states += 1;
        let Some(col) = try_extend_to_u(&state) else {
            continue;
        };
        successes += 1;
        let colors = col.as_slice();
        let used: BTreeSet<u32> = colors.iter().flatten().copied().collect();
        let ok = colors.len() == g.n() && proper(g, colors) && used.len() <= 8 && used.iter().all(|&c| c < 8);
        unsound += (!ok) as usize;
    }
    s.record(
        "6",
        unsound == 0 && states > 0,
        format!("{states} (u, φ) states, {successes} extensions, {unsound} unsound"),
    );
    if states > 0 {
        s.note(format!(
            "extension success rate {:.1}%",
            100.0 * successes as f64 / states as f64
        ));
    }
}

// Criterion 7.

fn relaxed_search(s: &mut Suite, corpus: &[(usize, Graph)], suite: &SpotSuite) {
    let cfg = RelaxedConfig {
        class: class("p6c4c5plus"),
        budget: BUDGET,
        audit_rate: C7_AUDIT_RATE,
        seed: SEED,
        workers: C4_WORKERS,
    };
    let mut pass = true;
    let mut parts = Vec::new();
    let shipped: Vec<Graph> = corpus.iter().map(|(_, g)| g.clone()).collect();
    let sampled: Vec<Graph> = suite.sampled.iter().chain(&suite.constructed).cloned().collect();
    for (name, graphs) in [("shipped", &shipped), ("sampled", &sampled)] {
        let report = search_relaxed(graphs, &cfg);
        pass &= report.candidates.is_empty() && report.audit_passed() && !report.audit.is_empty();
        let stages: BTreeMap<&str, (usize, usize, usize)> = report
            .audit
            .iter()
            .map(|a| (a.stage.name(), (a.dropped, a.sampled, a.confirmed)))
            .collect();
        parts.push(format!(
            "{name}: {} scanned, {} candidates, audit {}",
            report.scanned,
            report.candidates.len(),
            if report.audit_passed() { "ok" } else { "FAILED" }
        ));
        s.note(format!(
            "{name} stages (dropped, audited, confirmed): {stages:?}; undecided {}",
            report.undecided.len()
        ));
    }
    s.record("7", pass, parts.join("; "));
}

// Criterion 8.

fn criticality(s: &mut Suite, corpus: &[(usize, Graph)]) {
    let mut named_ok = true;
    for k in 1..=8 {
        let c = is_vertex_critical(&Graph::complete(k).unwrap(), k, &mut Unlimited).unwrap();
        named_ok &= c.critical;
    }
    for j in 1..=4 {
        let c = is_vertex_critical(&Graph::cycle(2 * j + 1).unwrap(), 3, &mut Unlimited).unwrap();
        named_ok &= c.critical;
    }
    let mut confirmed = 0;
    let mut exceptions = 0;
    for (_, g) in corpus {
        let (k, _) = chromatic_number(g, &mut Unlimited).unwrap();
        let c = is_vertex_critical(g, k, &mut Unlimited).unwrap();
        if c.critical {
            confirmed += 1;
            let delta_min = (0..g.n()).map(|v| g.degree(v)).min().unwrap_or(0);
            if delta_min + 1 < k || c.degree_violation {
                exceptions += 1;
            }
        }
    }
    s.record(
        "8",
        named_ok && exceptions == 0,
        format!(
            "K1..K8 and C3..C9 confirmed: {named_ok}; {confirmed} critical corpus graphs, {exceptions} with δ < k - 1"
        ),
    );
}

// Criterion 9.

fn detector_equivalence(s: &mut Suite, corpus: &[(usize, Graph)]) {
    let mut comparisons = 0;
    let mut disagreements = 0;
    for (n, g) in corpus.iter().filter(|(n, _)| *n <= 9) {
        for k in 2..=*n {
            let generic = induces(g, &Graph::path(k).unwrap());
            disagreements += (has_induced_path(g, k).unwrap() != generic) as usize;
            comparisons += 1;
        }
        for k in 4..=*n {
            let generic = induces(g, &Graph::cycle(k).unwrap());
            disagreements += (has_hole(g, k).unwrap() != generic) as usize;
            comparisons += 1;
        }
    }
    s.record(
        "9",
        disagreements == 0 && comparisons > 0,
        format!("{comparisons} path and hole queries, {disagreements} disagreements"),
    );
}

fn main() -> ExitCode {
    let mut suite = Suite { lines: Vec::new() };
    let corpus = load_corpus();
    configuration_fidelity(&mut suite);
    corpus_bounds(&mut suite, &corpus);
    let spot = spot_suite();
    borodin_kostochka(&mut suite, &spot);
    kempe_soundness(&mut suite);
    extension_soundness(&mut suite, &spot);
    relaxed_search(&mut suite, &corpus, &spot);
    criticality(&mut suite, &corpus);
    detector_equivalence(&mut suite, &corpus);

    let failed: Vec<&Line> = suite.lines.iter().filter(|l| !l.pass).collect();
    println!(
        "acceptance: {} passed, {} failed",
        suite.lines.len() - failed.len(),
        failed.len()
    );
    for l in &failed {
        println!("  failed {}: {}", l.id, l.detail);
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
