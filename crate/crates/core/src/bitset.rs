//! Bitset abstraction shared by the search kernels.
//!
//! Graphs on at most 64 vertices run the kernels over plain `u64` rows; larger
//! graphs fall back to the multi-word [`VertexSet`]. Both implement [`Bits`].

use crate::graph::VertexSet;

pub(crate) trait Bits: Clone + PartialEq {
    fn empty_for(n: usize) -> Self;
    fn full(n: usize) -> Self;
    fn insert(&mut self, v: usize);
    fn remove(&mut self, v: usize);
    fn and(&self, other: &Self) -> Self;
    fn and_not(&self, other: &Self) -> Self;
    fn or_assign(&mut self, other: &Self);
    fn and_not_assign(&mut self, other: &Self);
    fn count(&self) -> usize;
    fn is_empty(&self) -> bool;
    fn first(&self) -> Option<usize>;
}

impl Bits for u64 {
    #[inline]
    fn empty_for(_n: usize) -> Self {
        0
    }
    #[inline]
    fn full(n: usize) -> Self {
        if n >= 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }
    #[inline]
    fn insert(&mut self, v: usize) {
        *self |= 1 << v;
    }
    #[inline]
    fn remove(&mut self, v: usize) {
        *self &= !(1 << v);
    }
    #[inline]
    fn and(&self, other: &Self) -> Self {
        self & other
    }
    #[inline]
    fn and_not(&self, other: &Self) -> Self {
        self & !other
    }
    #[inline]
    fn or_assign(&mut self, other: &Self) {
        *self |= other;
    }
    #[inline]
    fn and_not_assign(&mut self, other: &Self) {
        *self &= !other;
    }
    #[inline]
    fn count(&self) -> usize {
        self.count_ones() as usize
    }
    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn first(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }
}

impl Bits for VertexSet {
    fn empty_for(n: usize) -> Self {
        VertexSet::with_capacity(n)
    }
    fn full(n: usize) -> Self {
        VertexSet::full(n)
    }
    fn insert(&mut self, v: usize) {
        VertexSet::insert(self, v);
    }
    fn remove(&mut self, v: usize) {
        VertexSet::remove(self, v);
    }
    fn and(&self, other: &Self) -> Self {
        self.intersection(other)
    }
    fn and_not(&self, other: &Self) -> Self {
        self.difference(other)
    }
    fn or_assign(&mut self, other: &Self) {
        self.union_with(other);
    }
    fn and_not_assign(&mut self, other: &Self) {
        self.difference_with(other);
    }
    fn count(&self) -> usize {
        self.len()
    }
    fn is_empty(&self) -> bool {
        VertexSet::is_empty(self)
    }
    fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}

/// Ascending iterator over the set bits of one word.
pub(crate) struct WordOnes {
    pub(crate) word: u64,
    pub(crate) base: usize,
}

impl Iterator for WordOnes {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let tz = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(self.base + tz)
    }
}
