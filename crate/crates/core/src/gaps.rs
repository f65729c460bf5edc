//! Gaps (cuts) of a poset: their taxonomy, single and simultaneous filling,
//! the natural order on gaps, and the block decomposition.
//!
//! A gap is a pair `(A, B)` of an initial and a final section with `A < B`
//! pointwise. Gaps index exactly the one-element extensions of the order:
//! the new element sits above all of `A`, below all of `B`, and incomparable
//! to the neutral interval in between.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poset::{BoundSide, Poset};
use crate::relation::RelationStructure;
use crate::set::ElemSet;

/// How many down-sets an enumeration may produce before giving up.
const DOWN_SET_BUDGET: usize = 1 << 20;
/// How many (down-set, up-set) candidate pairs a scan may visit.
const PAIR_SCAN_BUDGET: u128 = 1 << 26;

/// A pair of an initial section `lower` and a final section `upper` with
/// `lower < upper` pointwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gap {
    pub lower: ElemSet,
    pub upper: ElemSet,
}

impl Gap {
    pub fn new(lower: ElemSet, upper: ElemSet) -> Self {
        Gap { lower, upper }
    }

    /// Canonical identifier: both sides as sorted name lists joined by
    /// commas, separated by a bar. `"a,b|d"` reads: lower part `{a, b}`,
    /// upper part `{d}`.
    pub fn token(&self, p: &Poset) -> String {
        let side = |s: &ElemSet| p.names_of(s).join(",");
        format!("{}|{}", side(&self.lower), side(&self.upper))
    }
}

/// Emptiness pattern of a gap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GapClass {
    /// Both sides empty; the neutral interval is the whole universe.
    Exterior,
    /// Empty lower part, nonempty upper part.
    Covered,
    /// Nonempty lower part, empty upper part.
    Supported,
    /// Both sides nonempty.
    Interior,
}

impl GapClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GapClass::Exterior => "exterior",
            GapClass::Covered => "covered",
            GapClass::Supported => "supported",
            GapClass::Interior => "interior",
        }
    }
}

/// Full classification of one gap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapInfo {
    pub class: GapClass,
    /// `lower` is exactly the lower bounds of `upper` and conversely.
    pub narrow: bool,
    /// Narrow with an empty neutral interval: the two sides exhaust the
    /// universe.
    pub disjunctive: bool,
    /// Everything incomparable to the filled element: the complement of the
    /// two sides. Always an interval.
    pub neutral: ElemSet,
}

impl Poset {
    /// All initial sections, canonically ordered. Guarded by an internal
    /// budget on the result count.
    fn down_set_masks(&self) -> Result<Vec<u64>> {
        let n = self.len();
        if n > 63 {
            return Err(Error::CapExceeded {
                what: "down-set enumeration universe",
                limit: 63,
                requested: n,
            });
        }
        let pred_masks: Vec<u64> = (0..n)
            .map(|i| self.down(i).iter().fold(0u64, |m, x| m | 1 << x))
            .collect();
        let mut out = Vec::new();
        for mask in 0u64..1 << n {
            if (0..n).all(|i| mask >> i & 1 == 0 || pred_masks[i] & !mask == 0) {
                out.push(mask);
                if out.len() > DOWN_SET_BUDGET {
                    return Err(Error::CapExceeded {
                        what: "down-set budget",
                        limit: DOWN_SET_BUDGET,
                        requested: out.len(),
                    });
                }
            }
        }
        Ok(out)
    }

    fn masks_to_sets(&self, masks: &[u64]) -> Vec<ElemSet> {
        let n = self.len();
        let mut sets: Vec<ElemSet> = masks
            .iter()
            .map(|&m| ElemSet::from_indices(n, (0..n).filter(|&i| m >> i & 1 == 1)))
            .collect();
        sets.sort_by(|a, b| a.canonical_cmp(b));
        sets
    }

    /// Checks that `g` is a gap of this poset.
    pub fn validate_gap(&self, g: &Gap) -> Result<()> {
        let n = self.len();
        if g.lower.universe_len() != n || g.upper.universe_len() != n {
            return Err(Error::InvalidGap {
                reason: "sides sized for a different universe",
            });
        }
        let preds = self.section_predicates(&g.lower);
        if !preds.is_initial {
            return Err(Error::InvalidGap {
                reason: "lower part is not an initial section",
            });
        }
        let preds = self.section_predicates(&g.upper);
        if !preds.is_final {
            return Err(Error::InvalidGap {
                reason: "upper part is not a final section",
            });
        }
        if !g.upper.is_subset(&self.bounds(&g.lower, BoundSide::Upper)) {
            return Err(Error::InvalidGap {
                reason: "lower part is not pointwise below the upper part",
            });
        }
        Ok(())
    }

    /// Every gap: each pair of an initial and a final section with the lower
    /// part pointwise below the upper part, ordered canonically.
    pub fn enumerate_gaps(&self, universe_cap: usize) -> Result<Vec<Gap>> {
        let n = self.len();
        if n > universe_cap {
            return Err(Error::CapExceeded {
                what: "gap enumeration universe",
                limit: universe_cap,
                requested: n,
            });
        }
        let down_masks = self.down_set_masks()?;
        let downs = self.masks_to_sets(&down_masks);
        let ups: Vec<ElemSet> = downs.iter().map(|d| d.complement()).collect();
        let mut ups_sorted = ups;
        ups_sorted.sort_by(|a, b| a.canonical_cmp(b));
        let candidates = (downs.len() as u128) * (ups_sorted.len() as u128);
        if candidates > PAIR_SCAN_BUDGET {
            return Err(Error::CapExceeded {
                what: "gap pair scan",
                limit: PAIR_SCAN_BUDGET as usize,
                requested: usize::MAX,
            });
        }
        let mut gaps = Vec::new();
        for a in &downs {
            let bound = self.bounds(a, BoundSide::Upper);
            for b in &ups_sorted {
                if b.is_subset(&bound) {
                    gaps.push(Gap::new(a.clone(), b.clone()));
                }
            }
        }
        Ok(gaps)
    }

    /// Classifies a gap and returns its neutral interval.
    pub fn classify_gap(&self, g: &Gap) -> Result<GapInfo> {
        self.validate_gap(g)?;
        let class = match (g.lower.is_empty(), g.upper.is_empty()) {
            (true, true) => GapClass::Exterior,
            (true, false) => GapClass::Covered,
            (false, true) => GapClass::Supported,
            (false, false) => GapClass::Interior,
        };
        let narrow = g.lower == self.bounds(&g.upper, BoundSide::Lower)
            && g.upper == self.bounds(&g.lower, BoundSide::Upper);
        let neutral = g.lower.union(&g.upper).complement();
        let disjunctive = narrow && neutral.is_empty();
        assert!(
            self.section_predicates(&neutral).is_interval,
            "the neutral interval of a gap is an interval"
        );
        Ok(GapInfo {
            class,
            narrow,
            disjunctive,
            neutral,
        })
    }

    /// The extension in which a fresh element occupies the gap: above all of
    /// the lower part, below all of the upper part, incomparable to the rest.
    pub fn fill_gap(&self, g: &Gap, name: &str) -> Result<Poset> {
        self.validate_gap(g)?;
        if name.is_empty() {
            return Err(Error::BadElementName {
                name: name.into(),
                reason: "empty name",
            });
        }
        if self.index_of(name).is_ok() {
            return Err(Error::NameCollision { name: name.into() });
        }
        let mut names: Vec<String> = self.names().to_vec();
        names.push(name.into());
        let mut pairs: Vec<(String, String)> = self
            .pairs()
            .map(|(a, b)| (self.name(a).into(), self.name(b).into()))
            .collect();
        for a in g.lower.iter() {
            pairs.push((self.name(a).into(), name.into()));
        }
        for b in g.upper.iter() {
            pairs.push((name.into(), self.name(b).into()));
        }
        let raw = RelationStructure::new(
            names,
            pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )?;
        // no closure needed: the gap conditions already make this transitive
        Poset::new(raw)
    }

    /// Occupies several gaps at once, each with its own fresh element, and
    /// closes deductively. The relations that come out are checked against
    /// their characterization: new under old exactly by lower-part
    /// membership, new under new exactly by the natural gap order.
    pub fn fill_simultaneous(&self, fills: &[(Gap, String)]) -> Result<Poset> {
        for (g, name) in fills {
            self.validate_gap(g)?;
            if name.is_empty() {
                return Err(Error::BadElementName {
                    name: name.clone(),
                    reason: "empty name",
                });
            }
            if self.index_of(name).is_ok() {
                return Err(Error::NameCollision { name: name.clone() });
            }
        }
        for (i, (_, name)) in fills.iter().enumerate() {
            if fills[i + 1..].iter().any(|(_, other)| other == name) {
                return Err(Error::NameCollision { name: name.clone() });
            }
        }
        let mut names: Vec<String> = self.names().to_vec();
        names.extend(fills.iter().map(|(_, n)| n.clone()));
        let mut pairs: Vec<(String, String)> = self
            .pairs()
            .map(|(a, b)| (self.name(a).into(), self.name(b).into()))
            .collect();
        for (g, name) in fills {
            for a in g.lower.iter() {
                pairs.push((self.name(a).into(), name.clone()));
            }
            for b in g.upper.iter() {
                pairs.push((name.clone(), self.name(b).into()));
            }
        }
        let raw = RelationStructure::new(
            names,
            pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )?;
        let (closed, _) = raw.deductive_closure();
        let result = Poset::new(closed)?;

        // the closure must add exactly the natural-order relations
        let old = |i: usize| self.index_of(result.name(i)).ok();
        for a in 0..result.len() {
            for b in 0..result.len() {
                match (old(a), old(b)) {
                    (Some(x), Some(y)) => assert_eq!(
                        result.less(a, b),
                        self.less(x, y),
                        "old relations stay untouched"
                    ),
                    (Some(x), None) => {
                        let (g, _) = fill_of(fills, result.name(b));
                        assert_eq!(
                            result.less(a, b),
                            g.lower.contains(x),
                            "old under new is lower-part membership"
                        );
                    }
                    (None, Some(y)) => {
                        let (g, _) = fill_of(fills, result.name(a));
                        assert_eq!(
                            result.less(a, b),
                            g.upper.contains(y),
                            "new under old is upper-part membership"
                        );
                    }
                    (None, None) => {
                        let (g, _) = fill_of(fills, result.name(a));
                        let (h, _) = fill_of(fills, result.name(b));
                        assert_eq!(
                            result.less(a, b),
                            !g.upper.is_disjoint(&h.lower),
                            "new under new is the natural gap order"
                        );
                    }
                }
            }
        }
        Ok(result)
    }

    /// The natural order on the gaps: `(A, B)` precedes `(A', B')` iff
    /// `B ∩ A'` is nonempty. Irreflexivity and transitivity are certified by
    /// the order validator.
    pub fn gap_order(&self, universe_cap: usize) -> Result<GapOrder> {
        let gaps = self.enumerate_gaps(universe_cap)?;
        let tokens: Vec<String> = gaps.iter().map(|g| g.token(self)).collect();
        let mut pairs = Vec::new();
        for (i, g) in gaps.iter().enumerate() {
            for (j, h) in gaps.iter().enumerate() {
                if i != j && !g.upper.is_disjoint(&h.lower) {
                    pairs.push((tokens[i].clone(), tokens[j].clone()));
                }
            }
        }
        let order = Poset::from_pairs(
            tokens.clone(),
            pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )
        .expect("the natural order on gaps is an order");
        Ok(GapOrder { gaps, tokens, order })
    }

    /// All disjunctive gaps, in their natural order, which is total on them.
    /// The extreme cuts (all-empty lower part, all-empty upper part) always
    /// qualify. Runs in polynomial time: disjunctive gaps are exactly the
    /// prefix cuts of any linear extension whose cross pairs are all related.
    pub fn disjunctive_chain(&self) -> Vec<Gap> {
        let n = self.len();
        let ext = self.linear_extension();
        let mut cuts = Vec::new();
        for k in 0..=n {
            let lower = ElemSet::from_indices(n, ext[..k].iter().copied());
            let upper = lower.complement();
            let separates = lower
                .iter()
                .all(|a| upper.iter().all(|b| self.less(a, b)));
            if separates {
                cuts.push(Gap::new(lower, upper));
            }
        }
        for g in &cuts {
            let info = self.classify_gap(g).expect("prefix cuts are gaps");
            debug_assert!(info.disjunctive);
        }
        for w in cuts.windows(2) {
            debug_assert!(!w[0].upper.is_disjoint(&w[1].lower));
        }
        cuts
    }

    /// A linear extension: repeatedly take the least-index minimal element.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut placed = ElemSet::empty(n);
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let next = (0..n)
                .find(|&i| !placed.contains(i) && self.down(i).is_subset(&placed))
                .expect("an order always has a minimal element");
            placed.insert(next);
            out.push(next);
        }
        out
    }

    /// The unique decomposition into consecutive blocks between disjunctive
    /// cuts. Cross-block pairs are all related; no block has a disjunctive
    /// gap besides its two extremes.
    pub fn block_decomposition(&self) -> Vec<ElemSet> {
        let cuts = self.disjunctive_chain();
        let mut blocks = Vec::new();
        for w in cuts.windows(2) {
            let block = w[1].lower.difference(&w[0].lower);
            debug_assert!(!block.is_empty());
            blocks.push(block);
        }
        for block in &blocks {
            let induced = self.induced(block);
            debug_assert_eq!(
                induced.disjunctive_chain().len(),
                2,
                "blocks only have the two extreme disjunctive gaps"
            );
        }
        blocks
    }
}

fn fill_of<'a>(fills: &'a [(Gap, String)], name: &str) -> &'a (Gap, String) {
    fills
        .iter()
        .find(|(_, n)| n == name)
        .expect("every new element comes from a fill")
}

/// The gaps of a poset with their canonical tokens and natural order.
#[derive(Clone, Debug)]
pub struct GapOrder {
    /// Gaps in canonical enumeration order.
    pub gaps: Vec<Gap>,
    /// Token of each gap, aligned with `gaps`.
    pub tokens: Vec<String>,
    /// The natural order, with tokens as element names.
    pub order: Poset,
}
