//! The C5⁺ configuration and the named forbidden patterns.
//!
//! Entries of the derived tier are written out by hand from the C5⁺ adjacency
//! and are checked in tests against induced extraction from [`build_c5_plus`].

use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

/// Vertex labels of C5⁺ in index order.
pub const C5_PLUS_LABELS: [&str; 10] = ["v1", "v2", "v3", "v4", "v5", "x", "y", "z", "t1", "t2"];

/// An induced five-cycle `v1..v5`, a triangle `xyz` and an edge `t1t2` where
/// `x` and `y` see exactly `v1, v2, v3` on the cycle, `z` sees exactly `v2`,
/// `t1` sees exactly `v4, v5` and `z`, and `t2` sees exactly `v1, v4, v5` and
/// nothing in the triangle.
pub fn build_c5_plus() -> Graph {
    const V1: usize = 0;
    const V2: usize = 1;
    const V3: usize = 2;
    const V4: usize = 3;
    const V5: usize = 4;
    const X: usize = 5;
    const Y: usize = 6;
    const Z: usize = 7;
    const T1: usize = 8;
    const T2: usize = 9;
    let edges = [
        (V1, V2),
        (V2, V3),
        (V3, V4),
        (V4, V5),
        (V5, V1),
        (X, Y),
        (Y, Z),
        (Z, X),
        (T1, T2),
        (X, V1),
        (X, V2),
        (X, V3),
        (Y, V1),
        (Y, V2),
        (Y, V3),
        (Z, V2),
        (T1, V4),
        (T1, V5),
        (T1, Z),
        (T2, V1),
        (T2, V4),
        (T2, V5),
    ];
    Graph::from_edges(10, &edges)
        .and_then(|g| g.with_labels(C5_PLUS_LABELS))
        .expect("static edge list is valid")
}

/// Where a catalog entry comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tier {
    /// Named as an induced subset of C5⁺, or one of the class-defining graphs.
    Derived,
    /// Standard literature definition, used for subclass sanity checks only.
    External,
}

impl Tier {
    pub fn as_str(self) -> &'static str {
        match self {
            Tier::Derived => "derived",
            Tier::External => "external",
        }
    }
}

pub struct CatalogEntry {
    pub key: &'static str,
    pub aliases: &'static [&'static str],
    pub tier: Tier,
    pub note: &'static str,
    /// For extracted entries, the C5⁺ labels of the inducing subset.
    pub subset: Option<&'static [&'static str]>,
    build: fn() -> Graph,
}

impl CatalogEntry {
    pub fn graph(&self) -> Graph {
        (self.build)()
    }

    /// Indices into [`build_c5_plus`] of the inducing subset.
    pub fn subset_indices(&self) -> Option<VertexSet> {
        self.subset.map(|labels| {
            labels
                .iter()
                .map(|l| C5_PLUS_LABELS.iter().position(|c| c == l).expect("known label"))
                .collect()
        })
    }

    fn matches(&self, name: &str) -> bool {
        self.key.eq_ignore_ascii_case(name) || self.aliases.iter().any(|a| a.eq_ignore_ascii_case(name))
    }
}

fn labelled(labels: &[&str], edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(labels.len(), edges)
        .and_then(|g| g.with_labels(labels.iter().copied()))
        .expect("static edge list is valid")
}

// Each hand-written graph below lists its vertices in ascending C5⁺ index
// order, so it coincides with `induced_subgraph` of the subset, not merely
// up to isomorphism.

fn kite_plus() -> Graph {
    // Diamond v4 v5 t2 v1 (v4v1 missing) with the path v1 v2 z hanging off v1.
    labelled(
        &["v1", "v2", "v4", "v5", "z", "t2"],
        &[(2, 3), (2, 5), (3, 5), (3, 0), (5, 0), (0, 1), (1, 4)],
    )
}

fn flag_plus() -> Graph {
    // K4 on v1 v2 x y with the path v1 t2 v4.
    labelled(
        &["v1", "v2", "v4", "x", "y", "t2"],
        &[(0, 1), (0, 3), (0, 4), (1, 3), (1, 4), (3, 4), (0, 5), (5, 2)],
    )
}

fn tripod() -> Graph {
    // Triangle t1 v4 v5 with pendants z, v3, v1 respectively.
    labelled(
        &["v1", "v3", "v4", "v5", "z", "t1"],
        &[(5, 2), (5, 3), (2, 3), (5, 4), (2, 1), (3, 0)],
    )
}

fn crown() -> Graph {
    // Edge xy joined to the stable set {v1, v3, z}.
    labelled(
        &["v1", "v3", "x", "y", "z"],
        &[(2, 3), (2, 0), (2, 1), (2, 4), (3, 0), (3, 1), (3, 4)],
    )
}

fn hvn() -> Graph {
    // K4 on t2 v5 t1 v4 plus v1 adjacent to t2 and v5.
    labelled(
        &["v1", "v4", "v5", "t1", "t2"],
        &[(4, 2), (4, 3), (4, 1), (2, 3), (2, 1), (3, 1), (0, 4), (0, 2)],
    )
}

fn k5_minus_e() -> Graph {
    // K5 on v1 v2 v3 x y minus v1v3.
    labelled(
        &["v1", "v2", "v3", "x", "y"],
        &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
    )
}

fn butterfly() -> Graph {
    // Triangles x v1 v2 and v1 t2 v5 sharing v1.
    labelled(
        &["v1", "v2", "v5", "x", "t2"],
        &[(3, 0), (3, 1), (0, 1), (0, 4), (0, 2), (4, 2)],
    )
}

fn k7() -> Graph {
    Graph::complete(7).expect("k > 0")
}

fn diamond() -> Graph {
    // K4 minus one edge.
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).expect("static")
}

fn bull() -> Graph {
    // Triangle 0 1 2 with pendants 3 on 0 and 4 on 1.
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)]).expect("static")
}

fn gem() -> Graph {
    Graph::complete(1).expect("k > 0").join(&Graph::path(4).expect("k > 0"))
}

fn house() -> Graph {
    Graph::path(5).expect("k > 0").complement()
}

static CATALOG: [CatalogEntry; 13] = [
    CatalogEntry {
        key: "c5plus",
        aliases: &["C5+", "C5plus"],
        tier: Tier::Derived,
        note: "the ten-vertex configuration itself",
        subset: None,
        build: build_c5_plus,
    },
    CatalogEntry {
        key: "kite+",
        aliases: &["kiteplus"],
        tier: Tier::Derived,
        note: "induced by {v4, v5, t2, v1, v2, z}",
        subset: Some(&["v4", "v5", "t2", "v1", "v2", "z"]),
        build: kite_plus,
    },
    CatalogEntry {
        key: "flag+",
        aliases: &["flagplus"],
        tier: Tier::Derived,
        note: "induced by {x, y, v2, v1, t2, v4}",
        subset: Some(&["x", "y", "v2", "v1", "t2", "v4"]),
        build: flag_plus,
    },
    CatalogEntry {
        key: "tripod",
        aliases: &[],
        tier: Tier::Derived,
        note: "induced by {t1, v4, v5, z, v3, v1}",
        subset: Some(&["t1", "v4", "v5", "z", "v3", "v1"]),
        build: tripod,
    },
    CatalogEntry {
        key: "crown",
        aliases: &[],
        tier: Tier::Derived,
        note: "induced by {x, y, v1, z, v3}",
        subset: Some(&["x", "y", "v1", "z", "v3"]),
        build: crown,
    },
    CatalogEntry {
        key: "HVN",
        aliases: &[],
        tier: Tier::Derived,
        note: "induced by {v1, t2, v5, t1, v4}",
        subset: Some(&["v1", "t2", "v5", "t1", "v4"]),
        build: hvn,
    },
    CatalogEntry {
        key: "K5-e",
        aliases: &["K5e", "K5-minus-e"],
        tier: Tier::Derived,
        note: "induced by {v3, y, v2, x, v1}",
        subset: Some(&["v3", "y", "v2", "x", "v1"]),
        build: k5_minus_e,
    },
    CatalogEntry {
        key: "butterfly",
        aliases: &[],
        tier: Tier::Derived,
        note: "induced by {x, v1, t2, v2, v5}",
        subset: Some(&["x", "v1", "t2", "v2", "v5"]),
        build: butterfly,
    },
    CatalogEntry {
        key: "K7",
        aliases: &[],
        tier: Tier::External,
        note: "complete graph on seven vertices",
        subset: None,
        build: k7,
    },
    CatalogEntry {
        key: "diamond",
        aliases: &[],
        tier: Tier::External,
        note: "K4 minus an edge",
        subset: None,
        build: diamond,
    },
    CatalogEntry {
        key: "bull",
        aliases: &[],
        tier: Tier::External,
        note: "triangle with pendant vertices on two distinct triangle vertices",
        subset: None,
        build: bull,
    },
    CatalogEntry {
        key: "gem",
        aliases: &[],
        tier: Tier::External,
        note: "P4 joined to K1",
        subset: None,
        build: gem,
    },
    CatalogEntry {
        key: "house",
        aliases: &[],
        tier: Tier::External,
        note: "complement of P5",
        subset: None,
        build: house,
    },
];

pub fn catalog() -> &'static [CatalogEntry] {
    &CATALOG
}

pub fn catalog_entry(name: &str) -> Result<&'static CatalogEntry> {
    CATALOG
        .iter()
        .find(|e| e.matches(name))
        .ok_or_else(|| Error::UnknownPattern(name.into()))
}

/// Graph of a catalog entry, looked up case-insensitively by key or alias.
pub fn named_pattern(name: &str) -> Result<Graph> {
    catalog_entry(name).map(CatalogEntry::graph)
}

pub fn catalog_keys() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.key).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_plus_shape() {
        let g = build_c5_plus();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 22);
        let v2 = g.vertex_by_label("v2").unwrap();
        let mut names: Vec<_> = g.neighbors(v2).map(|w| g.display_name(w)).collect();
        names.sort();
        assert_eq!(names, ["v1", "v3", "x", "y", "z"]);
        let mut degrees: Vec<usize> = (0..10).map(|v| g.degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degrees, [5, 5, 5, 5, 4, 4, 4, 4, 4, 4]);
        let stats = g.degree_stats().unwrap();
        assert_eq!((stats.max, stats.min), (5, 4));
    }

    #[test]
    fn hand_written_entries_equal_extraction() {
        let host = build_c5_plus();
        for entry in catalog().iter().filter(|e| e.subset.is_some()) {
            let extracted = host.induced_subgraph(&entry.subset_indices().unwrap()).unwrap();
            let written = entry.graph();
            assert_eq!(written, extracted, "{}", entry.key);
            assert_eq!(written.labels(), extracted.labels(), "{}", entry.key);
        }
    }

    #[test]
    fn k5_minus_e_misses_v1v3() {
        let g = named_pattern("K5-e").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 9));
        let missing: Vec<_> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .filter(|&(a, b)| !g.has_edge(a, b))
            .map(|(a, b)| (g.display_name(a), g.display_name(b)))
            .collect();
        assert_eq!(missing, [("v1".into(), "v3".into())]);
    }

    #[test]
    fn lookup() {
        assert!(named_pattern("C5+").is_ok());
        assert!(named_pattern("hvn").is_ok());
        assert_eq!(named_pattern("nosuch"), Err(Error::UnknownPattern("nosuch".into())));
        assert_eq!(named_pattern("diamond").unwrap().edge_count(), 5);
        assert_eq!(named_pattern("house").unwrap().edge_count(), 6);
        assert_eq!(named_pattern("gem").unwrap().edge_count(), 7);
    }
}
