//! Kempe chains and the `(u, φ)` recoloring layer.
//!
//! The free functions work on any [`Coloring`] and use its 0-based colors.
//! Everything hanging off [`UPhiState`] speaks the palette `1..=8`: `u_i`
//! carries color `i`, and `x`, `y` both carry color 8.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::{Budget, Meter, NodeLimit, Undecided};
use crate::patterns::{has_hole, has_induced_path};
use crate::solvers::{check, is_k_colorable_with, Coloring};
use crate::{Error, Graph, Result, VertexSet};

/// Colors available to `G - u`.
pub const PALETTE: u32 = 8;
/// Degree of the center vertex `u`.
pub const CENTER_DEGREE: usize = 9;
/// Default number of missing-color moves `try_extend_to_u` may stack.
pub const DEFAULT_DEPTH: usize = 4;
/// Budget polls granted to [`try_extend_to_u`].
const EXTEND_POLLS: u64 = 1 << 12;

/// Neighbor colors of one vertex.
///
/// Colors are reported in the numbering of whoever built the profile: 0-based
/// from [`color_profile`], 1-based from [`UPhiState::profile`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorProfile {
    own: Option<u32>,
    counts: Vec<usize>,
    base: u32,
}

impl ColorProfile {
    /// Color of the vertex itself.
    pub fn own(&self) -> Option<u32> {
        self.own
    }

    /// Number of neighbors carrying color `c`.
    pub fn multiplicity(&self, c: u32) -> usize {
        c.checked_sub(self.base)
            .and_then(|i| self.counts.get(i as usize))
            .copied()
            .unwrap_or(0)
    }

    fn palette(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.counts.len() as u32).map(move |i| i + self.base)
    }

    /// Colors seen at least once in the neighborhood.
    pub fn present(&self) -> Vec<u32> {
        self.palette().filter(|&c| self.multiplicity(c) > 0).collect()
    }

    /// Palette colors absent from both the neighborhood and the vertex.
    pub fn missing(&self) -> Vec<u32> {
        self.palette()
            .filter(|&c| self.multiplicity(c) == 0 && Some(c) != self.own)
            .collect()
    }

    /// Colors seen more than once.
    pub fn repeat_colors(&self) -> Vec<u32> {
        self.palette().filter(|&c| self.multiplicity(c) > 1).collect()
    }

    /// Colors seen exactly once.
    pub fn unique_colors(&self) -> Vec<u32> {
        self.palette().filter(|&c| self.multiplicity(c) == 1).collect()
    }

    pub fn has_no_missing(&self) -> bool {
        self.missing().is_empty()
    }

    /// Largest multiplicity of any single color.
    pub fn max_multiplicity(&self) -> usize {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    /// Sum of multiplicities, i.e. the number of colored neighbors.
    pub fn degree(&self) -> usize {
        self.counts.iter().sum()
    }
}

fn profile_of(g: &Graph, coloring: &Coloring, v: usize, skip: Option<usize>, base: u32) -> Result<ColorProfile> {
    let mut counts = vec![0; coloring.palette() as usize];
    for w in g.neighbors(v) {
        if Some(w) == skip {
            continue;
        }
        match coloring.get(w) {
            Some(c) => counts[c as usize] += 1,
            None => return Err(Error::UncoloredNeighbor(w)),
        }
    }
    Ok(ColorProfile {
        own: coloring.get(v).map(|c| c + base),
        counts,
        base,
    })
}

/// Exact multiset of colors around `v`. Every neighbor must be colored.
pub fn color_profile(g: &Graph, coloring: &Coloring, v: usize) -> Result<ColorProfile> {
    g.check_vertex(v)?;
    check_len(g, coloring)?;
    profile_of(g, coloring, v, None, 0)
}

fn check_len(g: &Graph, coloring: &Coloring) -> Result<()> {
    if coloring.len() != g.n() {
        return Err(Error::Precondition("coloring length differs from vertex count"));
    }
    Ok(())
}

fn check_pair(coloring: &Coloring, i: u32, j: u32) -> Result<()> {
    if i >= coloring.palette() || j >= coloring.palette() {
        return Err(Error::Precondition("color pair outside the palette"));
    }
    Ok(())
}

/// The connected component containing `v` of the subgraph induced by colors
/// `i` and `j`. Uncolored vertices never belong to a component.
pub fn kempe_component(g: &Graph, coloring: &Coloring, v: usize, i: u32, j: u32) -> Result<VertexSet> {
    g.check_vertex(v)?;
    check_len(g, coloring)?;
    check_pair(coloring, i, j)?;
    let color = coloring.get(v);
    if color != Some(i) && color != Some(j) {
        return Err(Error::NotInColorPair { vertex: v, color, i, j });
    }
    let mut comp = VertexSet::with_capacity(g.n());
    comp.insert(v);
    let mut queue = VecDeque::from([v]);
    while let Some(w) = queue.pop_front() {
        for z in g.neighbors(w) {
            let c = coloring.get(z);
            if (c == Some(i) || c == Some(j)) && comp.insert(z) {
                queue.push_back(z);
            }
        }
    }
    Ok(comp)
}

/// Swap colors `i` and `j` inside `component`.
///
/// The component must be closed: every `{i, j}`-colored neighbor of a member
/// is itself a member. A union of whole components is accepted.
pub fn kempe_interchange(g: &Graph, coloring: &Coloring, component: &VertexSet, i: u32, j: u32) -> Result<Coloring> {
    check_len(g, coloring)?;
    check_pair(coloring, i, j)?;
    for w in component.iter() {
        g.check_vertex(w)?;
        let color = coloring.get(w);
        if color != Some(i) && color != Some(j) {
            return Err(Error::NotInColorPair { vertex: w, color, i, j });
        }
        for z in g.neighbors(w) {
            let c = coloring.get(z);
            if (c == Some(i) || c == Some(j)) && !component.contains(z) {
                return Err(Error::NotKempeClosed { vertex: z, i, j });
            }
        }
    }
    let mut out = coloring.clone();
    for w in component.iter() {
        let swapped = if coloring.get(w) == Some(i) { j } else { i };
        out.set(w, Some(swapped));
    }
    for w in component.iter() {
        let c = out.get(w);
        assert!(
            g.neighbors(w).all(|z| out.get(z) != c),
            "interchange produced a monochromatic edge at {w}"
        );
    }
    Ok(out)
}

/// A degree-9 vertex `u`, its neighbors in role order `u1..u7, x, y`, and an
/// 8-coloring of `G - u` with `φ(u_i) = i` and `φ(x) = φ(y) = 8`.
#[derive(Debug, Clone)]
pub struct UPhiState {
    graph: Graph,
    u: usize,
    roles: [usize; CENTER_DEGREE],
    /// 0-based internally; `u` is unassigned.
    phi: Coloring,
}

impl UPhiState {
    /// Build and validate a state. `colors` is 1-based with `colors[u] == 0`.
    pub fn from_one_based(graph: Graph, u: usize, roles: [usize; CENTER_DEGREE], colors: &[u32]) -> Result<Self> {
        if colors.len() != graph.n() {
            return Err(Error::LabelCount {
                got: colors.len(),
                n: graph.n(),
            });
        }
        let mut phi = Coloring::uncolored(graph.n(), PALETTE);
        for (v, &c) in colors.iter().enumerate() {
            if c > PALETTE {
                return Err(Error::InvalidState("color outside 1..=8"));
            }
            phi.set(v, c.checked_sub(1));
        }
        let state = Self { graph, u, roles, phi };
        state.validate()?;
        Ok(state)
    }

    /// Re-check every state invariant.
    pub fn validate(&self) -> Result<()> {
        let g = &self.graph;
        g.check_vertex(self.u)?;
        if g.degree(self.u) != CENTER_DEGREE {
            return Err(Error::InvalidState("u must have degree 9"));
        }
        for (k, &r) in self.roles.iter().enumerate() {
            if !g.has_edge(self.u, r) {
                return Err(Error::InvalidState("every role must be a neighbor of u"));
            }
            if self.roles[..k].contains(&r) {
                return Err(Error::InvalidState("roles must be distinct"));
            }
        }
        if self.phi.len() != g.n() || self.phi.palette() != PALETTE {
            return Err(Error::InvalidState("phi must cover G with palette 8"));
        }
        if self.phi.get(self.u).is_some() {
            return Err(Error::InvalidState("u must be uncolored"));
        }
        if (0..g.n()).any(|v| v != self.u && self.phi.get(v).is_none()) {
            return Err(Error::InvalidState("phi must color every vertex of G - u"));
        }
        if !check::is_proper_partial(g, &self.phi) {
            return Err(Error::InvalidState("phi is not proper on G - u"));
        }
        for (k, &r) in self.roles.iter().enumerate() {
            let want = if k < 7 { k as u32 } else { PALETTE - 1 };
            if self.phi.get(r) != Some(want) {
                return Err(Error::InvalidState("phi must give u_i color i and x, y color 8"));
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn u(&self) -> usize {
        self.u
    }

    /// `u_i` for `i` in `1..=7`.
    pub fn ui(&self, i: usize) -> usize {
        assert!((1..=7).contains(&i), "u_i index {i} outside 1..=7");
        self.roles[i - 1]
    }

    pub fn x(&self) -> usize {
        self.roles[7]
    }

    pub fn y(&self) -> usize {
        self.roles[8]
    }

    /// Neighbors of `u` in role order `u1..u7, x, y`.
    pub fn roles(&self) -> &[usize; CENTER_DEGREE] {
        &self.roles
    }

    /// The set `{u1, ..., u7}`.
    pub fn u7(&self) -> VertexSet {
        self.roles[..7].iter().copied().collect()
    }

    /// 1-based color of `v`, `None` for `u`.
    pub fn color(&self, v: usize) -> Option<u32> {
        self.phi.get(v).map(|c| c + 1)
    }

    /// The underlying 0-based coloring of `G - u`.
    pub fn phi(&self) -> &Coloring {
        &self.phi
    }

    /// 1-based profile of `v` in `G - u`. For `v = u` it describes `N(u)`.
    pub fn profile(&self, v: usize) -> ColorProfile {
        profile_of(&self.graph, &self.phi, v, Some(self.u), 1).expect("G - u is fully colored")
    }

    /// Kempe component of `v` for the 1-based colors `i`, `j`.
    pub fn component(&self, v: usize, i: u32, j: u32) -> Result<VertexSet> {
        if !(1..=PALETTE).contains(&i) || !(1..=PALETTE).contains(&j) {
            return Err(Error::Precondition("colors must lie in 1..=8"));
        }
        kempe_component(&self.graph, &self.phi, v, i - 1, j - 1)
    }

    fn pair_check(&self, i: usize, j: usize) -> Result<()> {
        if !(1..=7).contains(&i) || !(1..=7).contains(&j) || i == j {
            return Err(Error::Precondition("need distinct indices in 1..=7"));
        }
        if self.graph.has_edge(self.ui(i), self.ui(j)) {
            return Err(Error::Precondition("u_i and u_j must be nonadjacent"));
        }
        Ok(())
    }

    /// Index pairs `(i, j)`, `i < j`, with `u_i` and `u_j` nonadjacent, in lexicographic order.
    pub fn nonadjacent_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=7 {
            for j in i + 1..=7 {
                if !self.graph.has_edge(self.ui(i), self.ui(j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Find a `(u, φ)` state, trying degree-9 vertices in index order and, for
/// each, nonadjacent neighbor pairs `(x, y)` in lexicographic order.
///
/// The pair gets color 8 and the other seven neighbors colors `1..7` in index
/// order; the rest of `G - u` is completed by the exact solver. Any state with
/// that `(x, y)` is a renaming of such a pinned coloring, so a `None` is exact.
pub fn find_u_phi(g: &Graph, budget: &mut dyn Budget) -> Result<Option<UPhiState>> {
    let n = g.n();
    for u in (0..n).filter(|&u| g.degree(u) == CENTER_DEGREE) {
        let rest = g.remove_vertex(u)?;
        let shift = |w: usize| if w > u { w - 1 } else { w };
        let nbrs: Vec<usize> = g.neighbors(u).collect();
        for a in 0..CENTER_DEGREE {
            for b in a + 1..CENTER_DEGREE {
                let (x, y) = (nbrs[a], nbrs[b]);
                if g.has_edge(x, y) {
                    continue;
                }
                let others: Vec<usize> = nbrs.iter().copied().filter(|&w| w != x && w != y).collect();
                let mut pins = vec![None; n - 1];
                pins[shift(x)] = Some(PALETTE - 1);
                pins[shift(y)] = Some(PALETTE - 1);
                for (c, &w) in others.iter().enumerate() {
                    pins[shift(w)] = Some(c as u32);
                }
                let Some(col) = is_k_colorable_with(&rest, PALETTE, &pins, budget)? else {
                    continue;
                };
                let mut phi = Coloring::uncolored(n, PALETTE);
                for w in (0..n).filter(|&w| w != u) {
                    phi.set(w, col.get(shift(w)));
                }
                let mut roles = [0; CENTER_DEGREE];
                roles[..7].copy_from_slice(&others);
                roles[7] = x;
                roles[8] = y;
                let state = UPhiState {
                    graph: g.clone(),
                    u,
                    roles,
                    phi,
                };
                debug_assert!(state.validate().is_ok());
                return Ok(Some(state));
            }
        }
    }
    Ok(None)
}

/// Whether `u_i` and `u_j` lie in the same `(i, j)` Kempe component.
///
/// Requires distinct `i`, `j` in `1..=7` with `u_i`, `u_j` nonadjacent.
pub fn exists_alternating_path(state: &UPhiState, i: usize, j: usize) -> Result<bool> {
    state.pair_check(i, j)?;
    let comp = state.component(state.ui(i), i as u32, j as u32)?;
    Ok(comp.contains(state.ui(j)))
}

/// A shortest `(i, j)`-alternating path from `u_i` to `u_j`, which is induced.
pub fn alternating_path(state: &UPhiState, i: usize, j: usize) -> Result<Option<Vec<usize>>> {
    state.pair_check(i, j)?;
    let allowed = state.component(state.ui(i), i as u32, j as u32)?;
    Ok(shortest_path(state.graph(), &allowed, state.ui(i), state.ui(j)))
}

/// BFS inside `allowed`; a shortest path in an induced subgraph is induced in `g`.
fn shortest_path(g: &Graph, allowed: &VertexSet, from: usize, to: usize) -> Option<Vec<usize>> {
    let dist = bfs(g, allowed, from);
    dist[to]?;
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        let d = dist[cur].expect("on a path");
        cur = g
            .neighbors(cur)
            .find(|&w| allowed.contains(w) && dist[w] == Some(d - 1))
            .expect("BFS predecessor");
        path.push(cur);
    }
    path.reverse();
    Some(path)
}

fn bfs(g: &Graph, allowed: &VertexSet, from: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[from] = Some(0);
    let mut queue = VecDeque::from([from]);
    while let Some(w) = queue.pop_front() {
        let d = dist[w].expect("queued");
        for z in g.neighbors(w) {
            if allowed.contains(z) && dist[z].is_none() {
                dist[z] = Some(d + 1);
                queue.push_back(z);
            }
        }
    }
    dist
}

/// Extend `φ` to all of `G` with 8 colors using the two recoloring moves:
///
/// * a vertex inside a `u_i`–`u_j` alternating path takes one of its missing colors;
/// * when `u_i` and `u_j` (nonadjacent) fall into different `(i, j)`
///   components, `u_i`'s component is interchanged and `u` takes color `i`.
///
/// Sound but incomplete. Depth [`DEFAULT_DEPTH`], a fixed node budget, and
/// `None` on failure or exhaustion.
pub fn try_extend_to_u(state: &UPhiState) -> Option<Coloring> {
    try_extend_to_u_with(state, DEFAULT_DEPTH, &mut NodeLimit::new(EXTEND_POLLS))
        .ok()
        .flatten()
}

/// [`try_extend_to_u`] with an explicit depth and budget.
///
/// The interchange move is tried at every node before any missing-color move
/// is expanded; only missing-color moves count against `depth`. Recolored
/// vertices lie on shortest alternating paths, which keeps the branching finite.
/// The returned coloring is 0-based with palette 8 and has passed the checker.
pub fn try_extend_to_u_with(state: &UPhiState, depth: usize, budget: &mut dyn Budget) -> Result<Option<Coloring>> {
    state.validate()?;
    let mut ext = Extender {
        state,
        pairs: state.nonadjacent_pairs(),
        seen: BTreeSet::new(),
        meter: Meter::new(budget),
    };
    ext.seen.insert(state.phi.as_slice().to_vec());
    Ok(ext.search(&state.phi, depth)?)
}

struct Extender<'a, 'b> {
    state: &'a UPhiState,
    pairs: Vec<(usize, usize)>,
    seen: BTreeSet<Vec<Option<u32>>>,
    meter: Meter<'b>,
}

impl Extender<'_, '_> {
    fn search(&mut self, phi: &Coloring, depth: usize) -> core::result::Result<Option<Coloring>, Undecided> {
        self.meter.tick()?;
        let g = self.state.graph();
        let u = self.state.u();
        for &(i, j) in &self.pairs {
            let (ci, cj) = (i as u32 - 1, j as u32 - 1);
            let (a, b) = (self.state.ui(i), self.state.ui(j));
            let comp = kempe_component(g, phi, a, ci, cj).expect("u_i keeps color i");
            if comp.contains(b) {
                continue;
            }
            let mut out = kempe_interchange(g, phi, &comp, ci, cj).expect("whole component");
            out.set(u, Some(ci));
            // Checker-enforced: only verified colorings leave this function.
            if check::is_proper_total(g, &out) {
                return Ok(Some(out));
            }
            debug_assert!(false, "interchange move produced an improper coloring");
        }
        if depth == 0 {
            return Ok(None);
        }
        for &(i, j) in &self.pairs.clone() {
            let (ci, cj) = (i as u32 - 1, j as u32 - 1);
            let (a, b) = (self.state.ui(i), self.state.ui(j));
            let comp = kempe_component(g, phi, a, ci, cj).expect("u_i keeps color i");
            for v in shortest_path_interior(g, &comp, a, b) {
                let missing = profile_of(g, phi, v, Some(u), 0).expect("G - u colored").missing();
                for c in missing {
                    let mut next = phi.clone();
                    next.set(v, Some(c));
                    if !self.seen.insert(next.as_slice().to_vec()) {
                        continue;
                    }
                    if let Some(done) = self.search(&next, depth - 1)? {
                        return Ok(Some(done));
                    }
                }
            }
        }
        Ok(None)
    }
}

/// Vertices other than the ends lying on some shortest `from`–`to` path inside `allowed`.
fn shortest_path_interior(g: &Graph, allowed: &VertexSet, from: usize, to: usize) -> Vec<usize> {
    let df = bfs(g, allowed, from);
    let dt = bfs(g, allowed, to);
    let Some(total) = df[to] else {
        return Vec::new();
    };
    allowed
        .iter()
        .filter(|&v| v != from && v != to)
        .filter(|&v| matches!((df[v], dt[v]), (Some(a), Some(b)) if a + b == total))
        .collect()
}

/// Whether a clause is a conclusion a genuine counterexample must satisfy, or
/// one of the conditions feeding a "not both" conclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClauseRole {
    Conclusion,
    Condition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails,
    NotApplicable,
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Holds
        } else {
            Outcome::Fails
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Holds => "holds",
            Outcome::Fails => "fails",
            Outcome::NotApplicable => "n/a",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub id: &'static str,
    pub role: ClauseRole,
    pub outcome: Outcome,
    /// Offending vertices or the measured quantity.
    pub detail: String,
}

/// Per-clause evaluation of the structural predicates on one state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub clauses: Vec<Clause>,
}

impl LemmaReport {
    pub fn clause(&self, id: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.id == id)
    }

    pub fn failed_conclusions(&self) -> impl Iterator<Item = &Clause> {
        self.clauses
            .iter()
            .filter(|c| c.role == ClauseRole::Conclusion && c.outcome == Outcome::Fails)
    }

    pub fn conclusions_hold(&self) -> bool {
        self.failed_conclusions().next().is_none()
    }
}

pub const UI_NO_MISSING: &str = "ui-no-missing-colors";
pub const UI_ONE_REPEAT: &str = "ui-at-most-one-repeat";
pub const COMMON_NEIGHBORS: &str = "nonadjacent-ui-share-at-most-two";
pub const PATHS_EXIST: &str = "alternating-path-with-full-interior";
pub const UI_NO_TRIPLE: &str = "ui-no-color-three-times";
pub const OUTER_REPEATS: &str = "outer-vertex-repeat-limits";
pub const FEW_NONNEIGHBORS: &str = "ui-nonadjacent-to-at-most-two";
pub const XY_COVER: &str = "xy-cover-at-least-five";
pub const NOT_BOTH: &str = "not-both-cover-conditions";
pub const SPARSE_UI: &str = "some-ui-has-at-most-three-in-u7";

/// Evaluate every predicate literally on `state`.
///
/// Neighborhoods and colors are taken in `G - u`. The sparse-`u_i` clause
/// applies only when the graph is `(P6, C4)`-free.
pub fn lemma_predicates(state: &UPhiState) -> LemmaReport {
    let g = state.graph();
    let u = state.u();
    let name = |v: usize| g.display_name(v);
    let u7 = state.u7();
    let mut clauses = Vec::new();
    let mut push = |id, role, ok: bool, detail: String| {
        clauses.push(Clause {
            id,
            role,
            outcome: Outcome::from_bool(ok),
            detail,
        })
    };

    let profiles: Vec<ColorProfile> = (1..=7).map(|i| state.profile(state.ui(i))).collect();
    let offenders = |bad: &dyn Fn(&ColorProfile) -> bool| -> Vec<String> {
        (1..=7)
            .filter(|&i| bad(&profiles[i - 1]))
            .map(|i| format!("u{i}"))
            .collect()
    };

    let bad = offenders(&|p| !p.has_no_missing());
    push(UI_NO_MISSING, ClauseRole::Conclusion, bad.is_empty(), bad.join(" "));

    let bad = offenders(&|p| p.repeat_colors().len() > 1);
    push(UI_ONE_REPEAT, ClauseRole::Conclusion, bad.is_empty(), bad.join(" "));

    let pairs = state.nonadjacent_pairs();
    let mut bad = Vec::new();
    for &(i, j) in &pairs {
        let common = g
            .neighbor_set(state.ui(i))
            .intersection(&g.neighbor_set(state.ui(j)))
            .intersection(&u7)
            .len();
        if common > 2 {
            bad.push(format!("u{i}u{j}:{common}"));
        }
    }
    push(COMMON_NEIGHBORS, ClauseRole::Conclusion, bad.is_empty(), bad.join(" "));

    let mut bad = Vec::new();
    for &(i, j) in &pairs {
        let (a, b) = (state.ui(i), state.ui(j));
        let mut allowed = state.component(a, i as u32, j as u32).expect("u_i has color i");
        let blocked: Vec<usize> = allowed
            .iter()
            .filter(|&v| v != a && v != b && !state.profile(v).has_no_missing())
            .collect();
        for v in blocked {
            allowed.remove(v);
        }
        if shortest_path(g, &allowed, a, b).is_none() {
            bad.push(format!("u{i}u{j}"));
        }
    }
    push(PATHS_EXIST, ClauseRole::Conclusion, bad.is_empty(), bad.join(" "));

    let bad = offenders(&|p| p.has_no_missing() && p.max_multiplicity() >= 3);
    push(UI_NO_TRIPLE, ClauseRole::Conclusion, bad.is_empty(), bad.join(" "));

    let mut bad = Vec::new();
    for v in (0..g.n()).filter(|&v| v != u && !g.has_edge(u, v)) {
        let p = state.profile(v);
        if p.has_no_missing() && (p.repeat_colors().len() >= 3 || p.max_multiplicity() >= 4) {
            bad.push(name(v));
        }
    }
    push(OUTER_REPEATS, ClauseRole::Conclusion, bad.is_empty(), bad.join(" "));

    let mut bad = Vec::new();
    for i in 1..=7 {
        let non = (1..=7)
            .filter(|&k| k != i && !g.has_edge(state.ui(i), state.ui(k)))
            .count();
        if non > 2 {
            bad.push(format!("u{i}:{non}"));
        }
    }
    let cond_i = bad.is_empty();
    push(FEW_NONNEIGHBORS, ClauseRole::Condition, cond_i, bad.join(" "));

    let cover = g
        .neighbor_set(state.x())
        .union(&g.neighbor_set(state.y()))
        .intersection(&u7)
        .len();
    let cond_ii = cover >= 5;
    push(XY_COVER, ClauseRole::Condition, cond_ii, format!("{cover}"));

    push(NOT_BOTH, ClauseRole::Conclusion, !(cond_i && cond_ii), String::new());

    let inner: Vec<usize> = (1..=7)
        .map(|i| g.neighbor_set(state.ui(i)).intersection(&u7).len())
        .collect();
    let p6c4_free = !has_induced_path(g, 6).expect("k >= 2") && !has_hole(g, 4).expect("k >= 4");
    let detail = inner.iter().map(|d| format!("{d}")).collect::<Vec<_>>().join(",");
    if p6c4_free {
        push(SPARSE_UI, ClauseRole::Conclusion, inner.iter().any(|&d| d <= 3), detail);
    } else {
        clauses.push(Clause {
            id: SPARSE_UI,
            role: ClauseRole::Conclusion,
            outcome: Outcome::NotApplicable,
            detail,
        });
    }

    LemmaReport { clauses }
}
