//! Coloring bounds and vertex-criticality.
//!
//! [`Facts`] computes the invariants once; the bound checks are then plain
//! comparisons against them.

use crate::budget::Budget;
use crate::patterns::{has_hole, has_induced_path};
use crate::solvers::{check, chromatic_number, greedy_bound, is_k_colorable, max_clique, CliqueCert, GreedyOrder};
use crate::{Coloring, Graph, Result};

/// Outcome of one check on one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    /// Precondition not met; the check says nothing about this graph.
    Skipped,
    /// Budget ran out before the check could be decided.
    Undecided,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
            Verdict::Undecided => "undecided",
        }
    }
}

/// `max(Δ, ω)` when `Δ >= 3`.
pub fn brooks_bound(max_degree: usize, omega: usize) -> Option<usize> {
    (max_degree >= 3).then(|| max_degree.max(omega))
}

/// `max(Δ - 1, ω)` when `Δ >= 9`.
pub fn bk_bound(max_degree: usize, omega: usize) -> Option<usize> {
    (max_degree >= 9).then(|| (max_degree - 1).max(omega))
}

/// `⌈5ω / 4⌉`.
pub fn ratio_bound(omega: usize) -> usize {
    (5 * omega).div_ceil(4)
}

/// Degrees, clique number and chromatic number of one graph, with certificates.
///
/// `clique` and `chromatic` are `None` when the budget ran out first.
#[derive(Debug, Clone)]
pub struct Facts {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub clique: Option<CliqueCert>,
    pub chromatic: Option<(usize, Coloring)>,
    /// Best greedy coloring, kept as an upper bound when χ is undecided.
    pub greedy: Coloring,
}

impl Facts {
    pub fn compute(g: &Graph, budget: &mut dyn Budget) -> Self {
        let clique = max_clique(g, budget).ok();
        let chromatic = if clique.is_some() {
            chromatic_number(g, budget).ok()
        } else {
            None
        };
        let greedy = [
            GreedyOrder::LargestFirst,
            GreedyOrder::SmallestLast,
            GreedyOrder::Natural,
        ]
        .into_iter()
        .map(|o| greedy_bound(g, o))
        .min_by_key(Coloring::colors_used)
        .expect("three orders");
        Self {
            n: g.n(),
            m: g.edge_count(),
            max_degree: g.max_degree(),
            min_degree: g.min_degree(),
            clique,
            chromatic,
            greedy,
        }
    }

    pub fn omega(&self) -> Option<usize> {
        self.clique.as_ref().map(CliqueCert::size)
    }

    pub fn chi(&self) -> Option<usize> {
        self.chromatic.as_ref().map(|(k, _)| *k)
    }

    /// `ω <= χ <= Δ + 1`, checked on whatever is known.
    pub fn is_consistent(&self) -> bool {
        let upper = if self.n == 0 { 0 } else { self.max_degree + 1 };
        match (self.omega(), self.chi()) {
            (Some(w), Some(c)) => w <= c && c <= upper,
            (Some(w), None) => w <= upper,
            _ => true,
        }
    }

    /// Both certificates, re-checked by the independent checkers.
    pub fn certificates_hold(&self, g: &Graph) -> bool {
        let clique_ok = self.clique.as_ref().is_none_or(|c| check::is_clique(g, &c.vertices));
        let color_ok = self
            .chromatic
            .as_ref()
            .is_none_or(|(k, col)| check::is_proper_total(g, col) && col.colors_used() == *k);
        clique_ok && color_ok
    }

    fn against(&self, bound: Option<usize>) -> Verdict {
        let Some(bound) = bound else {
            return Verdict::Skipped;
        };
        match self.chi() {
            Some(chi) if chi <= bound => Verdict::Pass,
            Some(_) => Verdict::Fail,
            None if self.greedy.colors_used() <= bound => Verdict::Pass,
            None => Verdict::Undecided,
        }
    }

    pub fn brooks(&self) -> Verdict {
        match self.omega() {
            Some(w) => self.against(brooks_bound(self.max_degree, w)),
            None if self.max_degree < 3 => Verdict::Skipped,
            None => Verdict::Undecided,
        }
    }

    pub fn bk(&self) -> Verdict {
        match self.omega() {
            Some(w) => self.against(bk_bound(self.max_degree, w)),
            None if self.max_degree < 9 => Verdict::Skipped,
            None => Verdict::Undecided,
        }
    }

    /// Ratio bound; the caller states whether `g` is `(P6, C4)`-free.
    pub fn ratio(&self, p6_c4_free: bool) -> Verdict {
        if !p6_c4_free {
            return Verdict::Skipped;
        }
        match self.omega() {
            Some(w) => self.against(Some(ratio_bound(w))),
            None => Verdict::Undecided,
        }
    }
}

pub fn is_p6_c4_free(g: &Graph) -> bool {
    !has_induced_path(g, 6).expect("k >= 2") && !has_hole(g, 4).expect("k >= 4")
}

pub fn verify_brooks(g: &Graph, budget: &mut dyn Budget) -> Verdict {
    if g.max_degree() < 3 {
        return Verdict::Skipped;
    }
    Facts::compute(g, budget).brooks()
}

pub fn verify_bk(g: &Graph, budget: &mut dyn Budget) -> Verdict {
    if g.max_degree() < 9 {
        return Verdict::Skipped;
    }
    Facts::compute(g, budget).bk()
}

pub fn verify_ratio_bound(g: &Graph, budget: &mut dyn Budget) -> Verdict {
    if !is_p6_c4_free(g) {
        return Verdict::Skipped;
    }
    Facts::compute(g, budget).ratio(true)
}

/// Result of a `k`-vertex-criticality test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Criticality {
    pub critical: bool,
    /// Set when `g` is critical yet some vertex has degree below `k - 1`,
    /// which can only come from a solver bug.
    pub degree_violation: bool,
}

/// `χ(g) = k` and `χ(g - v) = k - 1` for every vertex `v`.
pub fn is_vertex_critical(g: &Graph, k: usize, budget: &mut dyn Budget) -> Result<Criticality> {
    let not = Criticality {
        critical: false,
        degree_violation: false,
    };
    if k == 0 || g.n() == 0 {
        return Ok(not);
    }
    let k32 = k as u32;
    if is_k_colorable(g, k32, budget)?.is_none() || is_k_colorable(g, k32 - 1, budget)?.is_some() {
        return Ok(not);
    }
    for v in 0..g.n() {
        // χ(g - v) >= k - 1 always holds here, so (k-1)-colorability decides it.
        if is_k_colorable(&g.remove_vertex(v)?, k32 - 1, budget)?.is_none() {
            return Ok(not);
        }
    }
    Ok(Criticality {
        critical: true,
        degree_violation: g.min_degree() < k - 1,
    })
}
