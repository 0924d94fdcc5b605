//! Exact clique number, k-colorability, chromatic number and greedy bounds.
//!
//! Colors are 0-based inside this module. Reports and the `(u, φ)` layer
//! render them 1-based.

pub mod check;
mod clique;
mod coloring;

use alloc::vec;
use alloc::vec::Vec;

pub use clique::{max_clique, CliqueCert};
pub use coloring::{chromatic_number, greedy_bound, is_k_colorable, is_k_colorable_with, GreedyOrder};

/// A total or partial assignment of colors `0..palette` to vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    palette: u32,
    colors: Vec<Option<u32>>,
}

impl Coloring {
    /// Every vertex unassigned.
    pub fn uncolored(n: usize, palette: u32) -> Self {
        Self {
            palette,
            colors: vec![None; n],
        }
    }

    /// A total assignment. Colors at or above `palette` are rejected.
    pub fn from_colors(palette: u32, colors: &[u32]) -> Option<Self> {
        colors.iter().all(|&c| c < palette).then(|| Self {
            palette,
            colors: colors.iter().map(|&c| Some(c)).collect(),
        })
    }

    pub fn from_partial(palette: u32, colors: Vec<Option<u32>>) -> Option<Self> {
        colors
            .iter()
            .flatten()
            .all(|&c| c < palette)
            .then_some(Self { palette, colors })
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    #[inline]
    pub fn get(&self, v: usize) -> Option<u32> {
        self.colors.get(v).copied().flatten()
    }

    pub fn set(&mut self, v: usize, color: Option<u32>) {
        if let Some(c) = color {
            assert!(c < self.palette, "color {c} outside palette {}", self.palette);
        }
        self.colors[v] = color;
    }

    pub fn as_slice(&self) -> &[Option<u32>] {
        &self.colors
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.palette as usize];
        for c in self.colors.iter().flatten() {
            seen[*c as usize] = true;
        }
        seen.iter().filter(|&&b| b).count()
    }

    /// No edge between two assigned vertices is monochromatic.
    pub fn is_proper(&self, g: &crate::Graph) -> bool {
        check::is_proper_partial(g, self)
    }

    /// Vertices carrying `color`.
    pub fn class(&self, color: u32) -> impl Iterator<Item = usize> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter(move |(_, c)| **c == Some(color))
            .map(|(v, _)| v)
    }

    /// Renumber used colors to `0..colors_used()` by first appearance.
    pub fn compacted(&self) -> Self {
        let mut map = vec![None; self.palette as usize];
        let mut next = 0u32;
        let colors = self
            .colors
            .iter()
            .map(|c| {
                c.map(|c| {
                    *map[c as usize].get_or_insert_with(|| {
                        next += 1;
                        next - 1
                    })
                })
            })
            .collect();
        Self {
            palette: self.palette,
            colors,
        }
        .with_palette(next.max(1))
    }

    fn with_palette(mut self, palette: u32) -> Self {
        self.palette = palette;
        self
    }

    /// 1-based colors for display, `0` for unassigned.
    pub fn one_based(&self) -> Vec<u32> {
        self.colors.iter().map(|c| c.map_or(0, |c| c + 1)).collect()
    }
}
