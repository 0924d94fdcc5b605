use alloc::vec;
use alloc::vec::Vec;

use super::clique::max_clique;
use super::Coloring;
use crate::budget::{Budget, Meter, Undecided};
use crate::graph::Graph;
use crate::{Error, Result};

/// Vertex order for [`greedy_bound`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GreedyOrder {
    /// Index order.
    Natural,
    /// Non-increasing degree, ties by index.
    #[default]
    LargestFirst,
    /// Reverse of a smallest-last elimination order.
    SmallestLast,
}

/// First-fit coloring along the chosen order. Uses at most `Δ + 1` colors.
pub fn greedy_bound(g: &Graph, order: GreedyOrder) -> Coloring {
    let n = g.n();
    let seq: Vec<usize> = match order {
        GreedyOrder::Natural => (0..n).collect(),
        GreedyOrder::LargestFirst => {
            let mut v: Vec<usize> = (0..n).collect();
            v.sort_by_key(|&x| (core::cmp::Reverse(g.degree(x)), x));
            v
        }
        GreedyOrder::SmallestLast => smallest_last(g),
    };
    let palette = (g.max_degree() + 1) as u32;
    let mut coloring = Coloring::uncolored(n, palette);
    let mut taken = vec![false; palette as usize];
    for &v in &seq {
        taken.iter_mut().for_each(|t| *t = false);
        for w in g.neighbors(v) {
            if let Some(c) = coloring.get(w) {
                taken[c as usize] = true;
            }
        }
        let c = taken.iter().position(|t| !t).expect("degree bound leaves a free color");
        coloring.set(v, Some(c as u32));
    }
    coloring
}

fn smallest_last(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut elim = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertices remain");
        removed[v] = true;
        elim.push(v);
        for w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    elim.reverse();
    elim
}

/// Decide whether `g` has a proper coloring with colors `0..k`.
///
/// A maximum clique is pre-colored `0..ω` before the search, which removes the
/// color-permutation symmetry on that clique.
pub fn is_k_colorable(g: &Graph, k: u32, budget: &mut dyn Budget) -> Result<Option<Coloring>> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Coloring::uncolored(0, k.max(1))));
    }
    if k == 0 {
        return Ok(None);
    }
    let clique = max_clique(g, budget)?;
    if clique.size() > k as usize {
        return Ok(None);
    }
    let mut pre = vec![None; n];
    for (c, &v) in clique.vertices.iter().enumerate() {
        pre[v] = Some(c as u32);
    }
    is_k_colorable_with(g, k, &pre, budget)
}

/// Decide k-colorability with some vertices fixed in advance.
///
/// `precolored[v] = Some(c)` pins `v` to color `c`. Returns `None` when no
/// proper extension exists, including when the pins already conflict.
pub fn is_k_colorable_with(
    g: &Graph,
    k: u32,
    precolored: &[Option<u32>],
    budget: &mut dyn Budget,
) -> Result<Option<Coloring>> {
    let n = g.n();
    if precolored.len() != n {
        return Err(Error::Precondition("precoloring length differs from vertex count"));
    }
    if n == 0 {
        return Ok(Some(Coloring::uncolored(0, k.max(1))));
    }
    if k == 0 {
        return Ok(None);
    }
    if precolored.iter().flatten().any(|&c| c >= k) {
        return Ok(None);
    }
    let mut search = DsaturSearch::new(g, k, Meter::new(budget));
    for (v, c) in precolored.iter().enumerate() {
        if let Some(c) = *c {
            if search.forbid[v * search.k + c as usize] > 0 {
                return Ok(None);
            }
            search.assign(v, c);
        }
    }
    if search.dead_end {
        return Ok(None);
    }
    let found = search.solve()?;
    Ok(found.then(|| {
        let colors: Vec<u32> = search.color.iter().map(|c| c.expect("total")).collect();
        Coloring::from_colors(k, &colors).expect("colors below k")
    }))
}

/// Exact chromatic number: climb from the clique lower bound until a
/// coloring is found, capped by the best greedy coloring.
pub fn chromatic_number(g: &Graph, budget: &mut dyn Budget) -> Result<(usize, Coloring)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let lower = max_clique(g, budget)?.size();
    let greedy = [
        GreedyOrder::LargestFirst,
        GreedyOrder::SmallestLast,
        GreedyOrder::Natural,
    ]
    .into_iter()
    .map(|o| greedy_bound(g, o))
    .min_by_key(Coloring::colors_used)
    .expect("three orders");
    let upper = greedy.colors_used();
    for k in lower..upper {
        if let Some(c) = is_k_colorable(g, k as u32, budget)? {
            return Ok((k, c.compacted()));
        }
    }
    Ok((upper, greedy.compacted()))
}

/// Backtracking in saturation order (most distinct neighbor colors first,
/// then highest degree, then lowest index) with forward checking.
struct DsaturSearch<'a> {
    n: usize,
    k: usize,
    neighbors: Vec<Vec<usize>>,
    degree: Vec<usize>,
    color: Vec<Option<u32>>,
    /// `forbid[v * k + c]`: colored neighbors of `v` using `c`.
    forbid: Vec<u16>,
    saturation: Vec<usize>,
    uses: Vec<usize>,
    uncolored: usize,
    dead_end: bool,
    meter: Meter<'a>,
}

impl<'a> DsaturSearch<'a> {
    fn new(g: &Graph, k: u32, meter: Meter<'a>) -> Self {
        let n = g.n();
        let k = k as usize;
        let neighbors: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
        let degree = neighbors.iter().map(Vec::len).collect();
        Self {
            n,
            k,
            neighbors,
            degree,
            color: vec![None; n],
            forbid: vec![0; n * k],
            saturation: vec![0; n],
            uses: vec![0; k],
            uncolored: n,
            dead_end: false,
            meter,
        }
    }

    fn assign(&mut self, v: usize, c: u32) {
        self.color[v] = Some(c);
        self.uses[c as usize] += 1;
        self.uncolored -= 1;
        for i in 0..self.neighbors[v].len() {
            let w = self.neighbors[v][i];
            let slot = &mut self.forbid[w * self.k + c as usize];
            *slot += 1;
            if *slot == 1 {
                self.saturation[w] += 1;
                if self.saturation[w] == self.k && self.color[w].is_none() {
                    self.dead_end = true;
                }
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v].take().expect("assigned");
        self.uses[c as usize] -= 1;
        self.uncolored += 1;
        for i in 0..self.neighbors[v].len() {
            let w = self.neighbors[v][i];
            let slot = &mut self.forbid[w * self.k + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn pick(&self) -> usize {
        (0..self.n)
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| (self.saturation[v], self.degree[v], core::cmp::Reverse(v)))
            .expect("an uncolored vertex")
    }

    fn solve(&mut self) -> core::result::Result<bool, Undecided> {
        if self.uncolored == 0 {
            return Ok(true);
        }
        self.meter.tick()?;
        let v = self.pick();
        let mut tried_fresh = false;
        for c in 0..self.k {
            if self.forbid[v * self.k + c] > 0 {
                continue;
            }
            // Unused colors are interchangeable: try only the first of them.
            if self.uses[c] == 0 {
                if tried_fresh {
                    continue;
                }
                tried_fresh = true;
            }
            self.assign(v, c as u32);
            let ok = if self.dead_end { false } else { self.solve()? };
            if ok {
                return Ok(true);
            }
            self.unassign(v);
            self.dead_end = false;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::{NodeLimit, Unlimited};
    use crate::solvers::check::is_proper_total;

    fn petersen() -> Graph {
        Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn decision_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(is_k_colorable(&c5, 2, &mut Unlimited).unwrap().is_none());
        let three = is_k_colorable(&c5, 3, &mut Unlimited).unwrap().unwrap();
        assert!(is_proper_total(&c5, &three));

        let k7 = Graph::complete(7).unwrap();
        assert!(is_k_colorable(&k7, 6, &mut Unlimited).unwrap().is_none());

        let p = petersen();
        let c = is_k_colorable(&p, 3, &mut Unlimited).unwrap().unwrap();
        assert!(is_proper_total(&p, &c));
        assert!(is_k_colorable(&p, 2, &mut Unlimited).unwrap().is_none());
    }

    #[test]
    fn chromatic_examples() {
        let chi = |g: &Graph| chromatic_number(g, &mut Unlimited).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        let (k, cert) = chi(&c5);
        assert_eq!(k, 3);
        assert!(is_proper_total(&c5, &cert));
        assert_eq!(cert.colors_used(), 3);

        let wheel = Graph::complete(1).unwrap().join(&c5);
        assert_eq!(chi(&wheel).0, 4);
        assert_eq!(chi(&Graph::empty(3)).0, 1);
        assert_eq!(chi(&Graph::complete(9).unwrap()).0, 9);
        assert_eq!(chi(&petersen()).0, 3);
        assert!(chromatic_number(&Graph::empty(0), &mut Unlimited).is_err());
    }

    #[test]
    fn greedy_examples() {
        let k7 = Graph::complete(7).unwrap();
        for order in [
            GreedyOrder::Natural,
            GreedyOrder::LargestFirst,
            GreedyOrder::SmallestLast,
        ] {
            let c = greedy_bound(&k7, order);
            assert_eq!(c.colors_used(), 7);
            assert!(is_proper_total(&k7, &c));
        }
        assert_eq!(greedy_bound(&Graph::empty(5), GreedyOrder::Natural).colors_used(), 1);
    }

    #[test]
    fn precoloring_is_respected() {
        let p3 = Graph::path(3).unwrap();
        let c = is_k_colorable_with(&p3, 2, &[Some(1), None, None], &mut Unlimited)
            .unwrap()
            .unwrap();
        assert_eq!(c.get(0), Some(1));
        assert_eq!(c.get(2), Some(1));
        assert!(is_k_colorable_with(&p3, 2, &[Some(0), Some(0), None], &mut Unlimited)
            .unwrap()
            .is_none());
        assert!(is_k_colorable_with(&p3, 2, &[Some(0), None, Some(1)], &mut Unlimited)
            .unwrap()
            .is_none());
    }

    fn mycielskian(g: &Graph) -> Graph {
        let n = g.n();
        let mut edges: alloc::vec::Vec<(usize, usize)> = g.edges().collect();
        for (a, b) in g.edges() {
            edges.push((a, n + b));
            edges.push((b, n + a));
        }
        for v in 0..n {
            edges.push((n + v, 2 * n));
        }
        Graph::from_edges(2 * n + 1, &edges).unwrap()
    }

    #[test]
    fn mycielski_chromatic_numbers() {
        // M2 = K2, M3 = C5, M4 = Groetzsch graph; chi(M_k) = k.
        let m3 = mycielskian(&Graph::complete(2).unwrap());
        assert_eq!(m3.n(), 5);
        let m4 = mycielskian(&m3);
        assert_eq!(chromatic_number(&m4, &mut Unlimited).unwrap().0, 4);
    }

    #[test]
    fn budget_exhaustion_is_undecided() {
        let m5 = mycielskian(&mycielskian(&mycielskian(&Graph::complete(2).unwrap())));
        assert_eq!(m5.n(), 23);
        let out = is_k_colorable(&m5, 4, &mut NodeLimit::new(2));
        assert!(matches!(out, Err(e) if e.is_undecided()));
    }
}
