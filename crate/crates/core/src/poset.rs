//! Orders: irreflexive transitively closed structures, with the calculus of
//! extremes, products, bounds, closures, sections, intervals, ramification,
//! cofinality, and subset comparisons.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::relation::RelationStructure;
use crate::set::ElemSet;

/// Bound side for majorant/minorant computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSide {
    Upper,
    Lower,
}

/// Closure side for initial/final closures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureSide {
    Initial,
    Final,
}

/// Extremes of an order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremes {
    /// Elements with no strict successor.
    pub maxima: ElemSet,
    /// Elements with no strict predecessor.
    pub minima: ElemSet,
    /// The element after all others, if any.
    pub supremum: Option<usize>,
    /// The element before all others, if any.
    pub infimum: Option<usize>,
}

/// Section and interval predicates of a subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SectionPredicates {
    pub is_initial: bool,
    pub is_final: bool,
    pub is_interval: bool,
}

/// Closure coincidence and the pairwise criterion for cofinality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CofinalityCheck {
    /// The two closures coincide.
    pub closures_coincide: bool,
    /// Every element of one set is reached from the other and conversely.
    pub pairwise_criterion: bool,
}

impl CofinalityCheck {
    pub fn holds(self) -> bool {
        self.closures_coincide
    }
}

/// The three subset comparisons between two subsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetRelations {
    /// `B` meets the strict upper bounds of `A`.
    pub finally_superior: bool,
    /// `A` and `B` share their strict upper bound set.
    pub same_majorant: bool,
    /// `B` meets the final closure of every element of `A`.
    pub envelops_superiorly: bool,
}

/// An irreflexive, transitively closed structure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poset {
    inner: RelationStructure,
}

impl Poset {
    /// Validates irreflexivity and transitivity.
    pub fn new(inner: RelationStructure) -> Result<Self> {
        for a in 0..inner.len() {
            if inner.has_pair(a, a) {
                return Err(Error::NotIrreflexive {
                    name: inner.name(a).into(),
                });
            }
        }
        inner.require_transitive()?;
        Ok(Poset { inner })
    }

    /// Builds and validates from names and pairs, without closing.
    pub fn from_pairs<N, P, S, T>(universe: N, pairs: P) -> Result<Self>
    where
        N: IntoIterator<Item = S>,
        P: IntoIterator<Item = (T, T)>,
        S: Into<String>,
        T: AsRef<str>,
    {
        Poset::new(RelationStructure::new(universe, pairs)?)
    }

    /// Builds from generator pairs: applies deductive closure first, then
    /// validates. Convenient when only the covering pairs are written out.
    pub fn from_generators<N, P, S, T>(universe: N, pairs: P) -> Result<Self>
    where
        N: IntoIterator<Item = S>,
        P: IntoIterator<Item = (T, T)>,
        S: Into<String>,
        T: AsRef<str>,
    {
        let raw = RelationStructure::new(universe, pairs)?;
        Poset::new(raw.deductive_closure().0)
    }

    pub fn structure(&self) -> &RelationStructure {
        &self.inner
    }

    pub fn into_structure(self) -> RelationStructure {
        self.inner
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

    pub fn name(&self, i: usize) -> &str {
        self.inner.name(i)
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.inner.index_of(name)
    }

    pub fn set_from_names<I, S>(&self, names: I) -> Result<ElemSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        self.inner.set_from_names(names)
    }

    pub fn names_of(&self, set: &ElemSet) -> Vec<String> {
        self.inner.names_of(set)
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.inner.has_pair(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a != b && (self.less(a, b) || self.less(b, a))
    }

    /// Strict successors of one element.
    pub fn up(&self, a: usize) -> &ElemSet {
        self.inner.successors(a)
    }

    /// Strict predecessors of one element.
    pub fn down(&self, a: usize) -> ElemSet {
        self.inner.predecessors(a)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.inner.pairs()
    }

    pub fn pair_count(&self) -> usize {
        self.inner.pair_count()
    }

    /// The sub-order induced on `keep`, reindexed.
    pub fn induced(&self, keep: &ElemSet) -> Poset {
        Poset {
            inner: self.inner.induced(keep),
        }
    }

    /// Maxima, minima, supremum, infimum.
    pub fn extremes(&self) -> Extremes {
        let n = self.len();
        let mut maxima = ElemSet::empty(n);
        let mut minima = ElemSet::empty(n);
        let mut supremum = None;
        let mut infimum = None;
        for a in 0..n {
            let above = self.up(a);
            let below = self.down(a);
            if above.is_empty() {
                maxima.insert(a);
            }
            if below.is_empty() {
                minima.insert(a);
            }
            if below.len() == n - 1 {
                supremum = Some(a);
            }
            if above.len() == n - 1 {
                infimum = Some(a);
            }
        }
        Extremes {
            maxima,
            minima,
            supremum,
            infimum,
        }
    }

    /// The lexicographic product: pairs `(m, n)` with `(m, n) < (m', n')` iff
    /// `m < m'`, or `m = m'` and `n < n'`. Product elements are named
    /// `m_n`; a name clash between distinct pairs is rejected.
    pub fn lex_product(&self, other: &Poset) -> Result<Poset> {
        let mut names = Vec::new();
        let mut members = Vec::new();
        for m in 0..self.len() {
            for x in 0..other.len() {
                names.push(format!("{}_{}", self.name(m), other.name(x)));
                members.push((m, x));
            }
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() {
            let mut seen = alloc::collections::BTreeSet::new();
            let dup = names.iter().find(|&n| !seen.insert(n.clone())).unwrap();
            return Err(Error::NameCollision { name: dup.clone() });
        }
        let mut pairs = Vec::new();
        for (i, &(m, x)) in members.iter().enumerate() {
            for (j, &(p, y)) in members.iter().enumerate() {
                if i == j {
                    continue;
                }
                if self.less(m, p) || (m == p && other.less(x, y)) {
                    pairs.push((names[i].clone(), names[j].clone()));
                }
            }
        }
        Poset::from_pairs(names, pairs)
    }

    /// Strict common bounds of a set; the empty set is bounded by the whole
    /// universe (empty intersection convention).
    pub fn bounds(&self, set: &ElemSet, side: BoundSide) -> ElemSet {
        let mut acc = ElemSet::full(self.len());
        for a in set.iter() {
            match side {
                BoundSide::Upper => acc.intersect_with(self.up(a)),
                BoundSide::Lower => acc.intersect_with(&self.down(a)),
            }
        }
        acc
    }

    /// Initial (or final) closure of a set: the set plus all its strict
    /// predecessors (successors). The empty set closes to itself.
    pub fn close(&self, set: &ElemSet, side: ClosureSide) -> ElemSet {
        let mut out = set.clone();
        for a in set.iter() {
            match side {
                ClosureSide::Initial => out.union_with(&self.down(a)),
                ClosureSide::Final => out.union_with(self.up(a)),
            }
        }
        out
    }

    /// Segmental closure: the intersection of the two closures.
    pub fn segmental_closure(&self, set: &ElemSet) -> ElemSet {
        self.close(set, ClosureSide::Initial)
            .intersection(&self.close(set, ClosureSide::Final))
    }

    /// Section and interval predicates of a subset. A subset with no
    /// comparable pair counts as an interval.
    pub fn section_predicates(&self, set: &ElemSet) -> SectionPredicates {
        let mut is_initial = true;
        let mut is_final = true;
        let mut is_interval = true;
        for a in set.iter() {
            if !self.down(a).is_subset(set) {
                is_initial = false;
            }
            if !self.up(a).is_subset(set) {
                is_final = false;
            }
        }
        'outer: for a in set.iter() {
            for b in set.iter() {
                if self.less(a, b) {
                    let between = self.up(a).intersection(&self.down(b));
                    if !between.is_subset(set) {
                        is_interval = false;
                        break 'outer;
                    }
                }
            }
        }
        SectionPredicates {
            is_initial,
            is_final,
            is_interval,
        }
    }

    /// True iff the induced order below every element is total.
    pub fn is_ramified(&self) -> bool {
        (0..self.len()).all(|m| {
            let below = self.down(m);
            let total = below
                .iter()
                .all(|a| below.iter().all(|b| a == b || self.comparable(a, b)));
            total
        })
    }

    /// Cofinality of two subsets. `ClosureSide::Initial` compares the initial
    /// closures (the sets are cofinal); `ClosureSide::Final` compares the
    /// final closures (coinitial). The pairwise criterion is computed
    /// independently and must agree with the closure comparison.
    pub fn cofinality(&self, a: &ElemSet, b: &ElemSet, side: ClosureSide) -> CofinalityCheck {
        let closures_coincide = self.close(a, side) == self.close(b, side);
        let reached = |x: usize, within: &ElemSet| -> bool {
            within.iter().any(|y| match side {
                ClosureSide::Initial => x == y || self.less(x, y),
                ClosureSide::Final => x == y || self.less(y, x),
            })
        };
        let pairwise_criterion =
            a.iter().all(|x| reached(x, b)) && b.iter().all(|y| reached(y, a));
        let check = CofinalityCheck {
            closures_coincide,
            pairwise_criterion,
        };
        assert_eq!(
            check.closures_coincide, check.pairwise_criterion,
            "closure comparison and pairwise criterion must agree"
        );
        check
    }

    /// The three subset comparisons of `a` against `b`.
    pub fn subset_relations(&self, a: &ElemSet, b: &ElemSet) -> SubsetRelations {
        let upper_a = self.bounds(a, BoundSide::Upper);
        let upper_b = self.bounds(b, BoundSide::Upper);
        let finally_superior = !b.is_disjoint(&upper_a);
        let same_majorant = upper_a == upper_b;
        let envelops_superiorly = a.iter().all(|x| {
            let mut reach = self.up(x).clone();
            reach.insert(x);
            !reach.is_disjoint(b)
        });
        SubsetRelations {
            finally_superior,
            same_majorant,
            envelops_superiorly,
        }
    }

    /// Covering pairs: `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, b) in self.pairs() {
            if self.up(a).intersection(&self.down(b)).is_empty() {
                out.push((a, b));
            }
        }
        out
    }

    /// Ascending order of a chain; errors with an incomparable witness pair
    /// when the subset is not a chain.
    pub fn chain_sorted(&self, set: &ElemSet) -> Result<Vec<usize>> {
        let mut members: Vec<usize> = set.iter().collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !self.comparable(a, b) {
                    return Err(Error::NotAChain {
                        witness: (self.name(a).into(), self.name(b).into()),
                    });
                }
            }
        }
        members.sort_by_key(|&x| self.down(x).intersection(set).len());
        Ok(members)
    }
}
