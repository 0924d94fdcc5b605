//! All graphs of a given order up to isomorphism, by one-vertex extension.
//!
//! Every graph on `n` vertices is some graph on `n - 1` vertices plus one
//! vertex, so extending each isomorphism class in every way and deduplicating
//! by canonical code is complete. Fine for `n <= 9`.

use std::collections::BTreeSet;

use bkverify_core::canon::canonical_graph6;
use bkverify_core::graph6::from_graph6;
use bkverify_core::{Graph, VertexSet};
use rayon::prelude::*;

/// One representative per isomorphism class, as canonical graph6, sorted.
pub fn all_graphs(n: usize) -> Vec<Vec<u8>> {
    let mut level: Vec<Vec<u8>> = vec![canonical_graph6(&Graph::empty(0))];
    for k in 1..=n {
        let next: BTreeSet<Vec<u8>> = level
            .par_iter()
            .flat_map_iter(|code| {
                let g = from_graph6(code).expect("canonical codes parse");
                (0u64..1 << (k - 1)).map(move |mask| {
                    let nbrs: VertexSet = (0..k - 1).filter(|&v| mask >> v & 1 == 1).collect();
                    canonical_graph6(&g.with_vertex(&nbrs).expect("in range"))
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        level = next.into_iter().collect();
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156]);
    }
}
