//! Forbidden configurations, induced-subgraph detection and class membership.

mod catalog;
mod embed;
mod paths;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

pub use catalog::{
    build_c5_plus, catalog, catalog_entry, catalog_keys, named_pattern, CatalogEntry, Tier, C5_PLUS_LABELS,
};
pub use embed::{contains_induced, induces, induces_through, EmbeddingWitness};
pub use paths::{find_hole, find_induced_path, has_hole, has_induced_path};

use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Path(usize),
    Hole(usize),
    General,
}

/// A resolved forbidden pattern with a display name.
///
/// Paths and holes route to the specialized detectors; everything else goes
/// through the generic induced-embedding search.
#[derive(Debug, Clone)]
pub struct Pattern {
    name: String,
    graph: Graph,
    shape: Shape,
}

impl Pattern {
    /// Resolve `P<k>`, `C<k>`, `K<k>` or a catalog key (case-insensitive).
    pub fn named(name: &str) -> Result<Self> {
        if let Some(p) = Self::parametric(name)? {
            return Ok(p);
        }
        let entry = catalog_entry(name)?;
        Ok(Self {
            name: entry.key.into(),
            graph: entry.graph(),
            shape: Shape::General,
        })
    }

    fn parametric(name: &str) -> Result<Option<Self>> {
        let mut chars = name.chars();
        let Some(head) = chars.next() else {
            return Err(Error::UnknownPattern(name.into()));
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.len() > 4 {
            return Ok(None);
        }
        let k: usize = digits.parse().expect("ascii digits");
        let unknown = || Error::UnknownPattern(name.into());
        let (graph, shape) = match head.to_ascii_uppercase() {
            'P' => (
                Graph::path(k).map_err(|_| unknown())?,
                if k >= 2 { Shape::Path(k) } else { Shape::General },
            ),
            'C' => (
                Graph::cycle(k).map_err(|_| unknown())?,
                if k >= 4 { Shape::Hole(k) } else { Shape::General },
            ),
            'K' => (Graph::complete(k).map_err(|_| unknown())?, Shape::General),
            _ => return Ok(None),
        };
        Ok(Some(Self {
            name: format!("{}{k}", head.to_ascii_uppercase()),
            graph,
            shape,
        }))
    }

    /// An arbitrary graph, matched by the generic engine.
    pub fn inline(name: impl Into<String>, graph: Graph) -> Self {
        Self {
            name: name.into(),
            graph,
            shape: Shape::General,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Whether `host` induces this pattern.
    pub fn occurs_in(&self, host: &Graph) -> bool {
        match self.shape {
            Shape::Path(k) => has_induced_path(host, k).expect("k >= 2"),
            Shape::Hole(k) => has_hole(host, k).expect("k >= 4"),
            Shape::General => induces(host, &self.graph),
        }
    }

    /// Whether some induced copy uses `vertex`.
    pub fn occurs_through(&self, host: &Graph, vertex: usize) -> bool {
        induces_through(host, &self.graph, vertex)
    }

    /// The lexicographically smallest induced embedding into `host`.
    pub fn witness_in(&self, host: &Graph) -> Option<EmbeddingWitness> {
        contains_induced(host, &self.graph)
    }
}

/// Outcome of a membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Member,
    Violates { pattern: String, witness: EmbeddingWitness },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member)
    }
}

/// Free of every pattern in `forbidden`, or the first violated pattern (in
/// list order) with its witness.
pub fn is_class_member(g: &Graph, forbidden: &[Pattern]) -> Membership {
    for p in forbidden {
        if p.occurs_in(g) {
            let witness = p.witness_in(g).expect("specialized and generic detectors agree");
            return Membership::Violates {
                pattern: p.name.clone(),
                witness,
            };
        }
    }
    Membership::Member
}

/// A hereditary class given by an ordered, non-empty list of forbidden patterns.
#[derive(Debug, Clone)]
pub struct ClassSpec {
    name: String,
    forbidden: Vec<Pattern>,
}

impl ClassSpec {
    pub fn new(name: impl Into<String>, forbidden: Vec<Pattern>) -> Result<Self> {
        if forbidden.is_empty() {
            return Err(Error::Precondition("a class needs at least one forbidden pattern"));
        }
        Ok(Self {
            name: name.into(),
            forbidden,
        })
    }

    pub fn from_names(name: impl Into<String>, names: &[&str]) -> Result<Self> {
        let forbidden = names.iter().map(|n| Pattern::named(n)).collect::<Result<Vec<_>>>()?;
        Self::new(name, forbidden)
    }

    /// `p6c4`, `p6c4k7` or `p6c4c5plus`.
    pub fn preset(key: &str) -> Result<Self> {
        match key.to_ascii_lowercase().as_str() {
            "p6c4" => Self::from_names("p6c4", &["P6", "C4"]),
            "p6c4k7" => Self::from_names("p6c4k7", &["P6", "C4", "K7"]),
            "p6c4c5plus" => Self::from_names("p6c4c5plus", &["P6", "C4", "c5plus"]),
            _ => Err(Error::UnknownPattern(key.into())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn forbidden(&self) -> &[Pattern] {
        &self.forbidden
    }

    pub fn membership(&self, g: &Graph) -> Membership {
        is_class_member(g, &self.forbidden)
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.forbidden.iter().all(|p| !p.occurs_in(g))
    }

    /// Whether adding `vertex` created a forbidden pattern, assuming
    /// `g - vertex` was already a member.
    pub fn violated_through(&self, g: &Graph, vertex: usize) -> bool {
        self.forbidden.iter().any(|p| p.occurs_through(g, vertex))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family() -> Vec<Pattern> {
        ["P6", "C4", "c5plus"]
            .iter()
            .map(|n| Pattern::named(n).unwrap())
            .collect()
    }

    #[test]
    fn membership_examples() {
        assert!(is_class_member(&Graph::cycle(5).unwrap(), &family()).is_member());
        let c4 = Graph::cycle(4).unwrap();
        match is_class_member(&c4, &family()) {
            Membership::Violates { pattern, witness } => {
                assert_eq!(pattern, "C4");
                assert_eq!(witness.mapping, [0, 1, 2, 3]);
            }
            Membership::Member => panic!("C4 is not C4-free"),
        }
    }

    #[test]
    fn parametric_names() {
        assert_eq!(Pattern::named("p6").unwrap().graph(), &Graph::path(6).unwrap());
        assert_eq!(Pattern::named("C4").unwrap().name(), "C4");
        assert_eq!(Pattern::named("K5-e").unwrap().graph().edge_count(), 9);
        assert!(Pattern::named("C2").is_err());
        assert!(Pattern::named("nosuch").is_err());
        assert!(ClassSpec::preset("p6c4c5plus").is_ok());
        assert!(ClassSpec::preset("bogus").is_err());
        assert!(ClassSpec::new("empty", Vec::new()).is_err());
    }

    #[test]
    fn c5_plus_is_a_p6_c4_member() {
        let g = build_c5_plus();
        assert!(!has_induced_path(&g, 6).unwrap());
        assert!(!induces(&g, &Graph::path(6).unwrap()));
        assert!(ClassSpec::preset("p6c4").unwrap().contains(&g));
        assert!(!ClassSpec::preset("p6c4c5plus").unwrap().contains(&g));
    }
}
