//! Induced subgraph detection by backtracking over candidate bitsets.
//!
//! Pattern vertices are matched most-constrained first: highest degree, then
//! repeatedly the vertex with most already-ordered neighbors. Candidates for a
//! pattern vertex start from a degree / neighbor-degree filter and are cut by
//! the rows of the images of earlier pattern vertices: intersected for pattern
//! edges, subtracted for pattern non-edges.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Rows, VertexSet};

/// An induced embedding: `mapping[p]` is the host image of pattern vertex `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingWitness {
    pub mapping: Vec<usize>,
}

impl EmbeddingWitness {
    /// Injective, in range, and both edges and non-edges preserved.
    pub fn validate(&self, host: &Graph, pattern: &Graph) -> bool {
        let m = &self.mapping;
        if m.len() != pattern.n() || m.iter().any(|&h| h >= host.n()) {
            return false;
        }
        for a in 0..m.len() {
            for b in a + 1..m.len() {
                if m[a] == m[b] || pattern.has_edge(a, b) != host.has_edge(m[a], m[b]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn image(&self) -> VertexSet {
        self.mapping.iter().copied().collect()
    }
}

/// The induced embedding of `pattern` into `host` whose host-vertex tuple is
/// lexicographically smallest, or `None` when `host` is `pattern`-free.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<EmbeddingWitness> {
    if pattern.n() == 0 || pattern.n() > host.n() {
        return None;
    }
    let mut pins = vec![None; pattern.n()];
    let mut current = find(host, pattern, &pins)?;
    // Fix positions one by one to the smallest host vertex that still extends.
    for p in 0..pattern.n() {
        for h in 0..current[p] {
            pins[p] = Some(h);
            if let Some(found) = find(host, pattern, &pins) {
                current = found;
                break;
            }
        }
        pins[p] = Some(current[p]);
    }
    Some(EmbeddingWitness { mapping: current })
}

/// Existence only; skips the lexicographic minimization.
pub fn induces(host: &Graph, pattern: &Graph) -> bool {
    pattern.n() > 0 && pattern.n() <= host.n() && find(host, pattern, &vec![None; pattern.n()]).is_some()
}

/// An induced copy of `pattern` whose image contains `vertex`.
pub fn induces_through(host: &Graph, pattern: &Graph, vertex: usize) -> bool {
    if pattern.n() == 0 || pattern.n() > host.n() || vertex >= host.n() {
        return false;
    }
    let mut pins = vec![None; pattern.n()];
    let mut tried: Vec<usize> = Vec::new();
    for p in 0..pattern.n() {
        // Pattern vertices with identical neighborhoods give identical searches.
        if tried.iter().any(|&q| same_neighborhood(pattern, p, q)) {
            continue;
        }
        tried.push(p);
        pins[p] = Some(vertex);
        if find(host, pattern, &pins).is_some() {
            return true;
        }
        pins[p] = None;
    }
    false
}

fn same_neighborhood(g: &Graph, a: usize, b: usize) -> bool {
    (0..g.n()).all(|w| w == a || w == b || g.has_edge(a, w) == g.has_edge(b, w))
}

/// One embedding respecting `pins`, or `None`.
pub(crate) fn find(host: &Graph, pattern: &Graph, pins: &[Option<usize>]) -> Option<Vec<usize>> {
    if host.n() <= 64 {
        Matcher::<u64>::new(host, pattern, pins).run()
    } else {
        Matcher::<VertexSet>::new(host, pattern, pins).run()
    }
}

fn match_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.n();
    let mut order = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    for _ in 0..k {
        let next = (0..k)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| {
                let links = order.iter().filter(|&&q| pattern.has_edge(p, q)).count();
                (links, pattern.degree(p), core::cmp::Reverse(p))
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Matcher<S> {
    rows: Vec<S>,
    order: Vec<usize>,
    /// For depth d: depths of earlier pattern vertices adjacent / non-adjacent to `order[d]`.
    linked: Vec<Vec<usize>>,
    unlinked: Vec<Vec<usize>>,
    compat: Vec<S>,
    image: Vec<usize>,
    feasible: bool,
}

impl<S: Rows> Matcher<S> {
    fn new(host: &Graph, pattern: &Graph, pins: &[Option<usize>]) -> Self {
        let n = host.n();
        let k = pattern.n();
        let rows = S::rows_of(host);
        let order = match_order(pattern);
        let mut linked = Vec::with_capacity(k);
        let mut unlinked = Vec::with_capacity(k);
        for (d, &p) in order.iter().enumerate() {
            let (a, b): (Vec<usize>, Vec<usize>) = (0..d).partition(|&e| pattern.has_edge(p, order[e]));
            linked.push(a);
            unlinked.push(b);
        }

        let host_deg: Vec<usize> = (0..n).map(|h| host.degree(h)).collect();
        let host_nbr_deg: Vec<Vec<usize>> = (0..n)
            .map(|h| {
                let mut d: Vec<usize> = host.neighbors(h).map(|w| host_deg[w]).collect();
                d.sort_unstable_by(|a, b| b.cmp(a));
                d
            })
            .collect();

        let mut feasible = true;
        let compat: Vec<S> = (0..k)
            .map(|p| {
                let pd = pattern.degree(p);
                let non = k - 1 - pd;
                let mut pat_nbr: Vec<usize> = pattern.neighbors(p).map(|q| pattern.degree(q)).collect();
                pat_nbr.sort_unstable_by(|a, b| b.cmp(a));
                let mut set = S::empty_for(n);
                let candidates: Vec<usize> = match pins[p] {
                    Some(h) if h < n => vec![h],
                    Some(_) => Vec::new(),
                    None => (0..n).collect(),
                };
                for h in candidates {
                    if host_deg[h] < pd || n - 1 - host_deg[h] < non {
                        continue;
                    }
                    let dominated = pat_nbr.iter().zip(&host_nbr_deg[h]).all(|(a, b)| b >= a);
                    if dominated {
                        set.insert(h);
                    }
                }
                if set.is_empty() {
                    feasible = false;
                }
                set
            })
            .collect();

        Self {
            rows,
            order,
            linked,
            unlinked,
            compat,
            image: vec![usize::MAX; k],
            feasible,
        }
    }

    fn run(mut self) -> Option<Vec<usize>> {
        if !self.feasible {
            return None;
        }
        let n = self.rows.len();
        if self.extend(0, S::empty_for(n)) {
            let mut mapping = vec![0; self.order.len()];
            for (d, &p) in self.order.iter().enumerate() {
                mapping[p] = self.image[d];
            }
            Some(mapping)
        } else {
            None
        }
    }

    fn extend(&mut self, depth: usize, used: S) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut cand = self.compat[p].and_not(&used);
        for &e in &self.linked[depth] {
            cand = cand.and(&self.rows[self.image[e]]);
        }
        for &e in &self.unlinked[depth] {
            cand.and_not_assign(&self.rows[self.image[e]]);
        }
        while let Some(h) = cand.first() {
            cand.remove(h);
            self.image[depth] = h;
            let mut next = used.clone();
            next.insert(h);
            if self.extend(depth + 1, next) {
                return true;
            }
        }
        false
    }
}
