//! Reflexive transitive structures and the classification, strict order, and
//! class order they generate.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::relation::RelationStructure;
use crate::set::ElemSet;

/// A reflexive, transitively closed structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preorder {
    inner: RelationStructure,
}

/// Result of quotienting a preorder by its symmetric pairs.
#[derive(Clone, Debug)]
pub struct QuotientResult {
    /// Equivalence classes, ordered by least member.
    pub classes: Vec<ElemSet>,
    /// The strict order between classes, on least-member representative names.
    pub class_order: Poset,
    /// Class index of every element.
    pub projection: Vec<usize>,
}

impl Preorder {
    /// Validates reflexivity and transitivity.
    pub fn new(inner: RelationStructure) -> Result<Self> {
        for a in 0..inner.len() {
            if !inner.has_pair(a, a) {
                return Err(Error::NotReflexive {
                    name: inner.name(a).into(),
                });
            }
        }
        inner.require_transitive()?;
        Ok(Preorder { inner })
    }

    /// Accepts a transitive structure with irreflexive elements by adjoining
    /// every loop pair first. The flag reports whether loops were added.
    pub fn normalizing(inner: RelationStructure) -> Result<(Self, bool)> {
        inner.require_transitive()?;
        let mut normalized = false;
        let mut with_loops = inner;
        for a in 0..with_loops.len() {
            if !with_loops.has_pair(a, a) {
                normalized = true;
                let mut row = with_loops.successors(a).clone();
                row.insert(a);
                with_loops.set_row(a, row);
            }
        }
        Ok((Preorder { inner: with_loops }, normalized))
    }

    pub fn structure(&self) -> &RelationStructure {
        &self.inner
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn names(&self) -> &[String] {
        self.inner.names()
    }

    fn equivalent(&self, a: usize, b: usize) -> bool {
        self.inner.has_pair(a, b) && self.inner.has_pair(b, a)
    }

    fn strictly_less(&self, a: usize, b: usize) -> bool {
        self.inner.has_pair(a, b) && !self.inner.has_pair(b, a)
    }

    /// Classes of mutually related elements, the order between them, and the
    /// projection homomorphism.
    pub fn quotient(&self) -> QuotientResult {
        let n = self.len();
        let mut projection = alloc::vec![usize::MAX; n];
        let mut classes: Vec<ElemSet> = Vec::new();
        for a in 0..n {
            if projection[a] != usize::MAX {
                continue;
            }
            let idx = classes.len();
            let mut class = ElemSet::empty(n);
            for b in 0..n {
                if self.equivalent(a, b) {
                    class.insert(b);
                    projection[b] = idx;
                }
            }
            classes.push(class);
        }
        let reps: Vec<usize> = classes.iter().map(|c| c.first().unwrap()).collect();
        let rep_names: Vec<String> = reps.iter().map(|&r| self.inner.name(r).into()).collect();
        let mut pairs = Vec::new();
        for (i, &ra) in reps.iter().enumerate() {
            for (j, &rb) in reps.iter().enumerate() {
                if i != j && self.strictly_less(ra, rb) {
                    pairs.push((rep_names[i].clone(), rep_names[j].clone()));
                }
            }
        }
        let class_order = Poset::from_pairs(rep_names, pairs)
            .expect("the class order of a preorder is an order");
        QuotientResult {
            classes,
            class_order,
            projection,
        }
    }

    /// The strict part: pairs present in one direction only. Always an order.
    pub fn strict_part(&self) -> Poset {
        let n = self.len();
        let mut rows = alloc::vec![ElemSet::empty(n); n];
        for a in 0..n {
            for b in self.inner.successors(a).iter() {
                if !self.inner.has_pair(b, a) {
                    rows[a].insert(b);
                }
            }
        }
        let strict = RelationStructure::from_rows(self.inner.names().to_vec(), rows);
        Poset::new(strict).expect("the strict part of a preorder is an order")
    }
}
