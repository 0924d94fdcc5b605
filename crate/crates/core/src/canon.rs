//! Canonical labelling by individualization and refinement.
//!
//! The ordered partition is refined to an equitable one, a vertex of the first
//! non-singleton cell is individualized, and the search recurses. Every leaf is
//! a discrete ordering; the canonical form is the lexicographically largest
//! graph6 encoding over all leaves. Branches on twins inside a cell are pruned,
//! since swapping two twins is an automorphism fixing the current partition.
//! Intended for the small graphs of a corpus, not for large symmetric inputs.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::graph6::to_graph6;

/// Canonical graph6 encoding: equal iff the graphs are isomorphic.
pub fn canonical_graph6(g: &Graph) -> Vec<u8> {
    canonical_order(g).1
}

/// The canonical relabelling of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    let (order, _) = canonical_order(g);
    g.permuted(&order)
        .expect("canonical order is a permutation")
        .without_labels()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    da == db && canonical_graph6(a) == canonical_graph6(b)
}

/// Returns `(order, code)` where `order[i]` is the original vertex placed at
/// position `i` and `code` is the graph6 encoding under that order.
pub fn canonical_order(g: &Graph) -> (Vec<usize>, Vec<u8>) {
    let n = g.n();
    if n == 0 {
        return (Vec::new(), to_graph6(g));
    }
    let mut best: Option<(Vec<usize>, Vec<u8>)> = None;
    search(g, vec![(0..n).collect()], &mut best);
    best.expect("at least one leaf")
}

type Partition = Vec<Vec<usize>>;

fn search(g: &Graph, partition: Partition, best: &mut Option<(Vec<usize>, Vec<u8>)>) {
    let partition = refine(g, partition);
    let Some(target) = partition.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = partition.iter().map(|c| c[0]).collect();
        let code = to_graph6(&g.permuted(&order).expect("discrete partition"));
        match best {
            Some((_, b)) if *b >= code => {}
            _ => *best = Some((order, code)),
        }
        return;
    };
    let cell = &partition[target];
    let mut representatives: Vec<usize> = Vec::new();
    for &v in cell {
        if !representatives.iter().any(|&r| are_twins(g, r, v)) {
            representatives.push(v);
        }
    }
    for v in representatives {
        let mut next = Vec::with_capacity(partition.len() + 1);
        next.extend_from_slice(&partition[..target]);
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&partition[target + 1..]);
        search(g, next, best);
    }
}

fn are_twins(g: &Graph, a: usize, b: usize) -> bool {
    (0..g.n()).all(|w| w == a || w == b || g.has_edge(a, w) == g.has_edge(b, w))
}

/// Split cells by neighbor counts into each splitter cell until stable. Subcells
/// are ordered by ascending count, so the result depends only on structure.
fn refine(g: &Graph, mut partition: Partition) -> Partition {
    let mut changed = true;
    while changed {
        changed = false;
        let mut s = 0;
        while s < partition.len() {
            let splitter = partition[s].clone();
            let mut next: Partition = Vec::with_capacity(partition.len());
            let mut split_any = false;
            for cell in &partition {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cell
                    .iter()
                    .map(|&v| (splitter.iter().filter(|&&w| g.has_edge(v, w)).count(), v))
                    .collect();
                keyed.sort_by_key(|&(k, _)| k);
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        if start > 0 || i < keyed.len() {
                            split_any = true;
                        }
                        let mut part: Vec<usize> = keyed[start..i].iter().map(|&(_, v)| v).collect();
                        part.sort_unstable();
                        next.push(part);
                        start = i;
                    }
                }
            }
            if split_any {
                partition = next;
                changed = true;
                s = 0;
            } else {
                s += 1;
            }
        }
    }
    partition
}
