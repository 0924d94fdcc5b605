//! Seeded sampling of class members by incremental growth.
//!
//! Each graph grows one vertex at a time. A proposed neighbor set is either a
//! random subset or a perturbed copy of an existing vertex's neighborhood;
//! proposals that create a forbidden pattern through the new vertex are
//! rejected and redrawn. With a target `Δ`, vertex 0 is a hub joined to every
//! new vertex until it reaches the target, every other degree is capped at the
//! target, and finished graphs whose `Δ` misses it are discarded.

use bkverify_core::patterns::ClassSpec;
use bkverify_core::{Graph, VertexSet};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Proposals tried for one new vertex before the graph is abandoned.
const ADD_ATTEMPTS: usize = 64;

#[derive(Debug, Clone)]
pub struct SampleConfig {
    pub n: usize,
    pub count: usize,
    pub seed: u64,
    pub target_delta: Option<usize>,
    /// Whole-graph growth attempts allowed per requested graph.
    pub attempts_per_graph: usize,
}

impl SampleConfig {
    pub fn new(n: usize, count: usize, seed: u64) -> Self {
        Self {
            n,
            count,
            seed,
            target_delta: None,
            attempts_per_graph: 200,
        }
    }

    pub fn with_delta(mut self, delta: usize) -> Self {
        self.target_delta = Some(delta);
        self
    }
}

#[derive(Debug, Clone, Default)]
pub struct SampleOutcome {
    pub graphs: Vec<Graph>,
    /// Set when fewer than `count` graphs were produced.
    pub warning: Option<String>,
    pub attempts: usize,
}

/// Draw `count` members of `class` on `n` vertices. Deterministic for a fixed config.
pub fn sample_class_members(class: &ClassSpec, cfg: &SampleConfig) -> SampleOutcome {
    let mut out = SampleOutcome::default();
    if cfg.count == 0 {
        return out;
    }
    if cfg.n == 0 || cfg.n > 64 {
        out.warning = Some(format!("n = {} outside 1..=64", cfg.n));
        return out;
    }
    if let Some(t) = cfg.target_delta {
        if t >= cfg.n {
            out.warning = Some(format!("target degree {t} needs more than {} vertices", cfg.n));
            return out;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let limit = cfg.count.saturating_mul(cfg.attempts_per_graph.max(1));
    while out.graphs.len() < cfg.count && out.attempts < limit {
        out.attempts += 1;
        if let Some(g) = grow(class, cfg.n, cfg.target_delta, &mut rng) {
            debug_assert!(class.contains(&g));
            out.graphs.push(g);
        }
    }
    if out.graphs.len() < cfg.count {
        out.warning = Some(format!(
            "sampling budget exhausted: {} of {} graphs after {} attempts",
            out.graphs.len(),
            cfg.count,
            out.attempts
        ));
    }
    out
}

/// Spread `count` graphs as evenly as possible over every `n` in `sizes`,
/// smaller sizes first. Each size draws from its own stream derived from `seed`.
pub fn sample_sizes(
    class: &ClassSpec,
    sizes: std::ops::RangeInclusive<usize>,
    count: usize,
    seed: u64,
    target_delta: Option<usize>,
) -> SampleOutcome {
    let ns: Vec<usize> = sizes.collect();
    let mut out = SampleOutcome::default();
    if ns.is_empty() {
        out.warning = (count > 0).then(|| "empty size range".to_string());
        return out;
    }
    let mut warnings = Vec::new();
    for (i, &n) in ns.iter().enumerate() {
        let share = count / ns.len() + usize::from(i < count % ns.len());
        let mut cfg = SampleConfig::new(n, share, seed.wrapping_add(n as u64));
        cfg.target_delta = target_delta;
        let part = sample_class_members(class, &cfg);
        out.attempts += part.attempts;
        out.graphs.extend(part.graphs);
        warnings.extend(part.warning.map(|w| format!("n = {n}: {w}")));
    }
    if !warnings.is_empty() {
        out.warning = Some(warnings.join("; "));
    }
    out
}

fn grow(class: &ClassSpec, n: usize, target: Option<usize>, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut g = Graph::empty(1);
    let density = rng.random_range(0.2..0.9);
    for v in 1..n {
        let mut placed = false;
        for _ in 0..ADD_ATTEMPTS {
            let nbrs = propose(&g, density, target, rng);
            let next = g.with_vertex(&nbrs).expect("neighbors in range");
            if class.violated_through(&next, v) {
                continue;
            }
            g = next;
            placed = true;
            break;
        }
        if !placed {
            return None;
        }
    }
    match target {
        Some(t) if g.max_degree() != t => None,
        _ => Some(g),
    }
}

fn propose(g: &Graph, density: f64, target: Option<usize>, rng: &mut ChaCha8Rng) -> VertexSet {
    let k = g.n();
    let mut set = if rng.random_bool(0.5) {
        // Twin of an existing vertex, with a couple of adjacencies flipped.
        let w = rng.random_range(0..k);
        let mut s = g.neighbor_set(w);
        if rng.random_bool(0.7) {
            s.insert(w);
        }
        for _ in 0..rng.random_range(0..=2) {
            let f = rng.random_range(0..k);
            if !s.remove(f) {
                s.insert(f);
            }
        }
        s
    } else {
        (0..k).filter(|_| rng.random_bool(density)).collect()
    };
    if let Some(t) = target {
        if g.degree(0) < t {
            set.insert(0);
        }
        for v in set.to_vec() {
            if g.degree(v) >= t {
                set.remove(v);
            }
        }
        let members = set.to_vec();
        if members.len() > t {
            // Keep the hub when present and drop a random surplus.
            let rest: Vec<usize> = members.iter().copied().filter(|&v| v != 0).collect();
            let keep = t - set.contains(0) as usize;
            let chosen: VertexSet = rest.choose_multiple(rng, keep).copied().collect();
            let hub = set.contains(0);
            set = chosen;
            if hub {
                set.insert(0);
            }
        }
    }
    set
}
