//! Specialized induced-path and hole detectors.
//!
//! Both grow an induced path one vertex at a time; a new vertex must be adjacent
//! to the current end and non-adjacent to every earlier path vertex, which is a
//! single bitset difference against the accumulated closed neighborhoods.

use alloc::vec::Vec;

use crate::graph::{Graph, Rows, VertexSet};
use crate::{Error, Result};

/// Whether `g` has an induced path on `k` vertices. Requires `k >= 2`.
pub fn has_induced_path(g: &Graph, k: usize) -> Result<bool> {
    find_induced_path(g, k).map(|p| p.is_some())
}

/// Some induced `P_k`, as its vertex sequence.
pub fn find_induced_path(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    if k < 2 {
        return Err(Error::InvalidSize {
            what: "induced path",
            expected: "k >= 2",
            got: k,
        });
    }
    if k > g.n() {
        return Ok(None);
    }
    Ok(if g.n() <= 64 {
        PathSearch::<u64>::new(g).path(k)
    } else {
        PathSearch::<VertexSet>::new(g).path(k)
    })
}

/// Whether `g` has an induced cycle on exactly `k` vertices. Requires `k >= 4`.
pub fn has_hole(g: &Graph, k: usize) -> Result<bool> {
    find_hole(g, k).map(|c| c.is_some())
}

/// Some `k`-hole, as its cyclic vertex sequence starting from its smallest vertex.
pub fn find_hole(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    if k < 4 {
        return Err(Error::InvalidSize {
            what: "hole",
            expected: "k >= 4",
            got: k,
        });
    }
    if k > g.n() {
        return Ok(None);
    }
    Ok(if g.n() <= 64 {
        PathSearch::<u64>::new(g).hole(k)
    } else {
        PathSearch::<VertexSet>::new(g).hole(k)
    })
}

struct PathSearch<S> {
    rows: Vec<S>,
    closed: Vec<S>,
    n: usize,
    seq: Vec<usize>,
}

impl<S: Rows> PathSearch<S> {
    fn new(g: &Graph) -> Self {
        let rows = S::rows_of(g);
        let closed = rows
            .iter()
            .enumerate()
            .map(|(v, r)| {
                let mut c = r.clone();
                c.insert(v);
                c
            })
            .collect();
        Self {
            rows,
            closed,
            n: g.n(),
            seq: Vec::new(),
        }
    }

    fn path(&mut self, k: usize) -> Option<Vec<usize>> {
        for start in 0..self.n {
            self.seq.clear();
            self.seq.push(start);
            let mut blocked = S::empty_for(self.n);
            blocked.insert(start);
            if self.grow_path(k, blocked) {
                return Some(self.seq.clone());
            }
        }
        None
    }

    /// `blocked` holds the path and the closed neighborhoods of all but its end.
    fn grow_path(&mut self, k: usize, blocked: S) -> bool {
        if self.seq.len() == k {
            return true;
        }
        let end = *self.seq.last().expect("non-empty");
        let mut cand = self.rows[end].and_not(&blocked);
        let mut next_blocked = blocked;
        next_blocked.or_assign(&self.closed[end]);
        while let Some(w) = cand.first() {
            cand.remove(w);
            self.seq.push(w);
            let mut b = next_blocked.clone();
            b.insert(w);
            if self.grow_path(k, b) {
                return true;
            }
            self.seq.pop();
        }
        false
    }

    fn hole(&mut self, k: usize) -> Option<Vec<usize>> {
        for start in 0..self.n {
            // Only vertices above `start` may join, so each hole is found from its minimum.
            let mut below = S::empty_for(self.n);
            for v in 0..=start {
                below.insert(v);
            }
            self.seq.clear();
            self.seq.push(start);
            let mut first = self.rows[start].and_not(&below);
            while let Some(p1) = first.first() {
                first.remove(p1);
                self.seq.push(p1);
                let mut blocked = below.clone();
                blocked.insert(p1);
                if self.grow_hole(k, blocked) {
                    return Some(self.seq.clone());
                }
                self.seq.pop();
            }
        }
        None
    }

    /// `blocked` covers vertices at or below the start, the path itself, and
    /// the closed neighborhoods of interior vertices other than the start.
    fn grow_hole(&mut self, k: usize, blocked: S) -> bool {
        let len = self.seq.len();
        let start = self.seq[0];
        let end = self.seq[len - 1];
        if len == k - 1 {
            // The last vertex closes the cycle: adjacent to both ends, and above
            // `seq[1]` so each hole is reported in one direction only.
            let mut cand = self.rows[end].and(&self.rows[start]).and_not(&blocked);
            let second = self.seq[1];
            while let Some(w) = cand.first() {
                cand.remove(w);
                if w > second {
                    self.seq.push(w);
                    return true;
                }
            }
            return false;
        }
        let mut cand = self.rows[end].and_not(&blocked).and_not(&self.closed[start]);
        let mut next_blocked = blocked;
        next_blocked.or_assign(&self.closed[end]);
        while let Some(w) = cand.first() {
            cand.remove(w);
            self.seq.push(w);
            let mut b = next_blocked.clone();
            b.insert(w);
            if self.grow_hole(k, b) {
                return true;
            }
            self.seq.pop();
        }
        false
    }
}
