//! Plain certificate checkers, deliberately sharing no code with the solvers.

use crate::{Coloring, Graph};

/// Every edge of `g` joins two differently colored vertices, and every vertex is colored.
pub fn is_proper_total(g: &Graph, coloring: &Coloring) -> bool {
    coloring.len() == g.n() && coloring.is_total() && is_proper_partial(g, coloring)
}

/// No edge joins two assigned vertices of the same color.
pub fn is_proper_partial(g: &Graph, coloring: &Coloring) -> bool {
    if coloring.len() != g.n() {
        return false;
    }
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            if g.has_edge(a, b) {
                if let (Some(x), Some(y)) = (coloring.get(a), coloring.get(b)) {
                    if x == y {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Pairwise adjacent, in range, no repeats.
pub fn is_clique(g: &Graph, vertices: &[usize]) -> bool {
    for (i, &a) in vertices.iter().enumerate() {
        if a >= g.n() {
            return false;
        }
        for &b in &vertices[i + 1..] {
            if a == b || !g.has_edge(a, b) {
                return false;
            }
        }
    }
    true
}
