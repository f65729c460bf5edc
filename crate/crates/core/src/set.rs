//! Compact element sets over a fixed-size universe.
//!
//! Every structure in this crate indexes its universe canonically (elements
//! sorted by name), so subsets are stored as bit vectors over those indices.
//! All set operations assume both operands belong to the same universe.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

const WORD_BITS: usize = 64;

fn word_count(universe: usize) -> usize {
    universe.div_ceil(WORD_BITS)
}

/// A subset of a universe of `universe_len` elements, stored as a bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    universe_len: usize,
    bits: Vec<u64>,
}

impl ElemSet {
    pub fn empty(universe_len: usize) -> Self {
        ElemSet {
            universe_len,
            bits: vec![0; word_count(universe_len)],
        }
    }

    pub fn full(universe_len: usize) -> Self {
        let mut s = Self::empty(universe_len);
        for i in 0..universe_len {
            s.insert(i);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe_len: usize, indices: I) -> Self {
        let mut s = Self::empty(universe_len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn universe_len(&self) -> usize {
        self.universe_len
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.universe_len);
        self.bits[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.universe_len);
        self.bits[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe_len && self.bits[i / WORD_BITS] & (1u64 << (i % WORD_BITS)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        debug_assert_eq!(self.universe_len, other.universe_len);
        for (w, o) in self.bits.iter_mut().zip(&other.bits) {
            *w |= o;
        }
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        debug_assert_eq!(self.universe_len, other.universe_len);
        for (w, o) in self.bits.iter_mut().zip(&other.bits) {
            *w &= o;
        }
    }

    pub fn remove_all(&mut self, other: &ElemSet) {
        debug_assert_eq!(self.universe_len, other.universe_len);
        for (w, o) in self.bits.iter_mut().zip(&other.bits) {
            *w &= !o;
        }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.remove_all(other);
        s
    }

    pub fn complement(&self) -> ElemSet {
        let mut s = Self::full(self.universe_len);
        s.remove_all(self);
        s
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        debug_assert_eq!(self.universe_len, other.universe_len);
        self.bits.iter().zip(&other.bits).all(|(w, o)| w & !o == 0)
    }

    pub fn is_disjoint(&self, other: &ElemSet) -> bool {
        debug_assert_eq!(self.universe_len, other.universe_len);
        self.bits.iter().zip(&other.bits).all(|(w, o)| w & o == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Canonical order on subsets: by cardinality, then by the sorted index
    /// list compared lexicographically (the set holding the least element of
    /// the symmetric difference comes first).
    pub fn canonical_cmp(&self, other: &ElemSet) -> Ordering {
        debug_assert_eq!(self.universe_len, other.universe_len);
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (w, o) in self.bits.iter().zip(&other.bits) {
            let diff = w ^ o;
            if diff != 0 {
                let low = 1u64 << diff.trailing_zeros();
                return if w & low != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
