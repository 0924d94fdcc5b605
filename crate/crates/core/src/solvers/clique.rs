use alloc::vec::Vec;

use crate::bitset::Bits;
use crate::budget::{Budget, Meter, Undecided};
use crate::graph::{Graph, Rows, VertexSet};
use crate::{Error, Result};

/// A clique, as ascending vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCert {
    pub vertices: Vec<usize>,
}

impl CliqueCert {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn as_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }
}

/// Maximum clique by branch and bound with a greedy-coloring upper bound.
///
/// Vertices are renumbered by non-increasing degree (ties by index) before the
/// search, which fixes the branching order and therefore the certificate.
pub fn max_clique(g: &Graph, budget: &mut dyn Budget) -> Result<CliqueCert> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    let relabelled = g.permuted(&order)?;
    let found = if g.n() <= 64 {
        run::<u64>(&relabelled, budget)
    } else {
        run::<VertexSet>(&relabelled, budget)
    };
    let mut vertices: Vec<usize> = found?.into_iter().map(|v| order[v]).collect();
    vertices.sort_unstable();
    Ok(CliqueCert { vertices })
}

fn run<S: Rows>(g: &Graph, budget: &mut dyn Budget) -> core::result::Result<Vec<usize>, Undecided> {
    let rows = S::rows_of(g);
    let mut search = CliqueSearch {
        rows: &rows,
        n: g.n(),
        best: Vec::new(),
        current: Vec::new(),
        meter: Meter::new(budget),
    };
    // Any single vertex is a clique; start from it so the bound is never zero.
    search.best.push(0);
    search.expand(S::full(g.n()))?;
    Ok(search.best)
}

struct CliqueSearch<'a, S> {
    rows: &'a [S],
    n: usize,
    best: Vec<usize>,
    current: Vec<usize>,
    meter: Meter<'a>,
}

impl<S: Bits> CliqueSearch<'_, S> {
    fn expand(&mut self, mut cand: S) -> core::result::Result<(), Undecided> {
        self.meter.tick()?;
        let (order, bounds) = self.color_sort(&cand);
        for idx in (0..order.len()).rev() {
            if self.current.len() + bounds[idx] <= self.best.len() {
                return Ok(());
            }
            let v = order[idx];
            self.current.push(v);
            let next = cand.and(&self.rows[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
            cand.remove(v);
        }
        Ok(())
    }

    /// Greedy sequential coloring of `cand`; `bounds[i]` is the color number of
    /// `order[i]`, an upper bound on the clique size inside `order[..=i]`.
    fn color_sort(&self, cand: &S) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(cand.count());
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut uncolored = cand.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut available = uncolored.clone();
            while let Some(v) = available.first() {
                available.remove(v);
                available.and_not_assign(&self.rows[v]);
                uncolored.remove(v);
                order.push(v);
                bounds.push(color);
            }
        }
        debug_assert!(order.iter().all(|&v| v < self.n));
        (order, bounds)
    }
}
