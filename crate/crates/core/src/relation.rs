//! Finite binary structures: a universe of named elements plus an arbitrary
//! set of ordered pairs.
//!
//! The universe is stored sorted by name and all operations work on the
//! resulting canonical indices, so every derived object (components, kernels,
//! closures) comes out in one reproducible order.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::set::ElemSet;

/// Comparability of an ordered element query `(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparability {
    /// Both `(a, b)` and `(b, a)` are present.
    SymmetricPair,
    /// Only `(a, b)` is present.
    AsymmetricForward,
    /// Only `(b, a)` is present.
    AsymmetricBackward,
    /// Neither is present. An element without its loop pair is
    /// incomparable with itself.
    Incomparable,
}

impl Comparability {
    pub fn is_comparable(self) -> bool {
        !matches!(self, Comparability::Incomparable)
    }
}

/// Which side of the relation an operation acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A finite universe plus a set of ordered pairs over it.
#[derive(Clone, PartialEq, Eq)]
pub struct RelationStructure {
    names: Vec<String>,
    rows: Vec<ElemSet>,
}

impl fmt::Debug for RelationStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RelationStructure{{")?;
        for (i, n) in self.names.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ";")?;
        for (a, b) in self.pairs() {
            write!(f, " {}->{}", self.names[a], self.names[b])?;
        }
        write!(f, "}}")
    }
}

impl RelationStructure {
    /// Builds a structure from element names and name pairs. Names are
    /// deduplicated and sorted; pairs must refer to declared elements.
    pub fn new<N, P, S, T>(universe: N, pairs: P) -> Result<Self>
    where
        N: IntoIterator<Item = S>,
        P: IntoIterator<Item = (T, T)>,
        S: Into<String>,
        T: AsRef<str>,
    {
        let mut names: Vec<String> = universe.into_iter().map(Into::into).collect();
        for n in &names {
            if n.is_empty() {
                return Err(Error::BadElementName {
                    name: n.clone(),
                    reason: "empty name",
                });
            }
        }
        names.sort();
        names.dedup();
        let n = names.len();
        let mut rows = alloc::vec![ElemSet::empty(n); n];
        let lookup = |name: &str| -> Result<usize> {
            names
                .binary_search_by(|probe| probe.as_str().cmp(name))
                .map_err(|_| Error::UnknownElement {
                    name: name.to_string(),
                })
        };
        for (a, b) in pairs {
            let ia = lookup(a.as_ref())?;
            let ib = lookup(b.as_ref())?;
            rows[ia].insert(ib);
        }
        Ok(RelationStructure { names, rows })
    }

    /// Builds a structure over an already-sorted universe from index pairs.
    pub(crate) fn from_rows(names: Vec<String>, rows: Vec<ElemSet>) -> Self {
        debug_assert!(names.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(names.len(), rows.len());
        RelationStructure { names, rows }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .binary_search_by(|probe| probe.as_str().cmp(name))
            .map_err(|_| Error::UnknownElement {
                name: name.to_string(),
            })
    }

    pub fn contains_name(&self, name: &str) -> bool {
        self.index_of(name).is_ok()
    }

    pub fn set_from_names<I, S>(&self, names: I) -> Result<ElemSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut s = ElemSet::empty(self.len());
        for n in names {
            s.insert(self.index_of(n.as_ref())?);
        }
        Ok(s)
    }

    pub fn names_of(&self, set: &ElemSet) -> Vec<String> {
        set.iter().map(|i| self.names[i].clone()).collect()
    }

    pub fn has_pair(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    /// Successors of `a`: all `x` with the pair `(a, x)` present.
    pub fn successors(&self, a: usize) -> &ElemSet {
        &self.rows[a]
    }

    /// Predecessors of `a`: all `x` with the pair `(x, a)` present.
    pub fn predecessors(&self, a: usize) -> ElemSet {
        let mut s = ElemSet::empty(self.len());
        for x in 0..self.len() {
            if self.rows[x].contains(a) {
                s.insert(x);
            }
        }
        s
    }

    /// All pairs in canonical (row, column) order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().map(move |b| (a, b)))
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(ElemSet::len).sum()
    }

    pub fn pairs_by_name(&self) -> Vec<(String, String)> {
        self.pairs()
            .map(|(a, b)| (self.names[a].clone(), self.names[b].clone()))
            .collect()
    }

    /// Comparability kind of the ordered query `(a, b)` by name.
    pub fn comparability(&self, a: &str, b: &str) -> Result<Comparability> {
        let ia = self.index_of(a)?;
        let ib = self.index_of(b)?;
        Ok(self.comparability_idx(ia, ib))
    }

    pub fn comparability_idx(&self, a: usize, b: usize) -> Comparability {
        match (self.has_pair(a, b), self.has_pair(b, a)) {
            (true, true) => Comparability::SymmetricPair,
            (true, false) => Comparability::AsymmetricForward,
            (false, true) => Comparability::AsymmetricBackward,
            (false, false) => Comparability::Incomparable,
        }
    }

    /// Splits the universe into its connected pieces: repeatedly grow a seed
    /// element by everything comparable to the set reached so far. Pieces are
    /// returned as induced substructures, ordered by their least element.
    pub fn connected_components(&self) -> Vec<RelationStructure> {
        let n = self.len();
        let mut seen = ElemSet::empty(n);
        let mut components = Vec::new();
        for seed in 0..n {
            if seen.contains(seed) {
                continue;
            }
            let mut comp = ElemSet::empty(n);
            comp.insert(seed);
            loop {
                let mut next = comp.clone();
                for a in comp.iter() {
                    next.union_with(&self.rows[a]);
                    next.union_with(&self.predecessors(a));
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            seen.union_with(&comp);
            components.push(self.induced(&comp));
        }
        components
    }

    /// The substructure induced on `keep`, with indices recompacted.
    pub fn induced(&self, keep: &ElemSet) -> RelationStructure {
        let members: Vec<usize> = keep.iter().collect();
        let names: Vec<String> = members.iter().map(|&i| self.names[i].clone()).collect();
        let m = members.len();
        let mut rows = alloc::vec![ElemSet::empty(m); m];
        for (new_a, &old_a) in members.iter().enumerate() {
            for (new_b, &old_b) in members.iter().enumerate() {
                if self.has_pair(old_a, old_b) {
                    rows[new_a].insert(new_b);
                }
            }
        }
        RelationStructure::from_rows(names, rows)
    }

    /// One-step closure of `set` on the given side: `Left` adjoins the direct
    /// predecessors of each member, `Right` the direct successors. A single
    /// application only; it is not transitive on raw structures.
    pub fn close_side(&self, set: &ElemSet, side: Side) -> ElemSet {
        let mut out = set.clone();
        for a in set.iter() {
            match side {
                Side::Left => out.union_with(&self.predecessors(a)),
                Side::Right => out.union_with(&self.rows[a]),
            }
        }
        out
    }

    /// The inverse structure: pair `(a, b)` present iff `(b, a)` was.
    pub fn invert(&self) -> RelationStructure {
        let n = self.len();
        let mut rows = alloc::vec![ElemSet::empty(n); n];
        for (a, b) in self.pairs() {
            rows[b].insert(a);
        }
        RelationStructure::from_rows(self.names.clone(), rows)
    }

    /// Splits the universe into the structured kernel (elements occurring in
    /// at least one pair) and the amorphous residue (everything else).
    pub fn kernel(&self) -> (RelationStructure, ElemSet) {
        let n = self.len();
        let mut in_kernel = ElemSet::empty(n);
        for (a, b) in self.pairs() {
            in_kernel.insert(a);
            in_kernel.insert(b);
        }
        let residue = in_kernel.complement();
        (self.induced(&in_kernel), residue)
    }

    pub(crate) fn set_row(&mut self, a: usize, row: ElemSet) {
        debug_assert_eq!(row.universe_len(), self.len());
        self.rows[a] = row;
    }

    /// The structure on the system of subsets of the universe: subset `A`
    /// relates to subset `B` iff both are nonempty and every element of `A`
    /// relates to every element of `B`. Applied once.
    ///
    /// Subset elements are named `s{card}_{i}_{j}_...` from the canonical
    /// indices of their members, zero-padded so that the name order equals
    /// the (cardinality, lexicographic) subset order.
    pub fn subjoin(&self, size_cap: usize) -> Result<RelationStructure> {
        let n = self.len();
        let limit = size_cap.min(20); // shift safety; 2^20 subsets is already enormous
        if n > limit {
            return Err(Error::CapExceeded {
                what: "subjoin universe",
                limit,
                requested: n,
            });
        }
        let mut subsets: Vec<ElemSet> = (0u64..(1u64 << n))
            .map(|mask| ElemSet::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1)))
            .collect();
        subsets.sort_by(|a, b| a.canonical_cmp(b));
        let card_width = digits(n);
        let idx_width = digits(n.saturating_sub(1));
        let names: Vec<String> = subsets.iter().map(|s| subset_name(s, card_width, idx_width)).collect();
        let m = subsets.len();
        // (A, B) related iff B lies inside the common successor set of A
        let common_succ: Vec<ElemSet> = subsets
            .iter()
            .map(|sa| {
                let mut acc = ElemSet::full(n);
                for a in sa.iter() {
                    acc.intersect_with(self.successors(a));
                }
                acc
            })
            .collect();
        let mut rows = alloc::vec![ElemSet::empty(m); m];
        for (ia, sa) in subsets.iter().enumerate() {
            if sa.is_empty() {
                continue;
            }
            for (ib, sb) in subsets.iter().enumerate() {
                if !sb.is_empty() && sb.is_subset(&common_succ[ia]) {
                    rows[ia].insert(ib);
                }
            }
        }
        // names are constructed in canonical subset order, which the padding
        // makes identical to lexicographic name order
        Ok(RelationStructure::from_rows(names, rows))
    }
}

fn digits(mut n: usize) -> usize {
    let mut d = 1;
    while n >= 10 {
        n /= 10;
        d += 1;
    }
    d
}

fn subset_name(s: &ElemSet, card_width: usize, idx_width: usize) -> String {
    let mut out = format!("s{:0width$}", s.len(), width = card_width);
    for i in s.iter() {
        out.push('_');
        out.push_str(&format!("{:0width$}", i, width = idx_width));
    }
    out
}

/// A pair-preserving and pair-reflecting bijection between the kernels of two
/// structures, if one exists. Absence is a value, not an error.
///
/// The search is a deterministic backtracking over kernel elements in
/// canonical order, so the first solution found is reproducible.
pub fn wide_isomorphic(
    s1: &RelationStructure,
    s2: &RelationStructure,
) -> Option<Vec<(String, String)>> {
    let (k1, _) = s1.kernel();
    let (k2, _) = s2.kernel();
    let n = k1.len();
    if n != k2.len() || k1.pair_count() != k2.pair_count() {
        return None;
    }
    let mut map: Vec<Option<usize>> = alloc::vec![None; n];
    let mut used = ElemSet::empty(n);
    if assign(&k1, &k2, 0, &mut map, &mut used) {
        Some(
            (0..n)
                .map(|i| (k1.name(i).to_string(), k2.name(map[i].unwrap()).to_string()))
                .collect(),
        )
    } else {
        None
    }
}

fn assign(
    k1: &RelationStructure,
    k2: &RelationStructure,
    next: usize,
    map: &mut Vec<Option<usize>>,
    used: &mut ElemSet,
) -> bool {
    let n = k1.len();
    if next == n {
        return true;
    }
    'candidate: for cand in 0..n {
        if used.contains(cand) {
            continue;
        }
        if k1.has_pair(next, next) != k2.has_pair(cand, cand) {
            continue;
        }
        for prev in 0..next {
            let img = map[prev].unwrap();
            if k1.has_pair(next, prev) != k2.has_pair(cand, img)
                || k1.has_pair(prev, next) != k2.has_pair(img, cand)
            {
                continue 'candidate;
            }
        }
        map[next] = Some(cand);
        used.insert(cand);
        if assign(k1, k2, next + 1, map, used) {
            return true;
        }
        map[next] = None;
        used.remove(cand);
    }
    false
}
