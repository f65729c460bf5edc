//! Complete lines (maximal chains), half-rays and ascending crossings,
//! complete transversals (maximal antichains), the trichotomy around a
//! transversal, and line/transversal crossings.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gaps::Gap;
use crate::poset::{BoundSide, ClosureSide, Poset};
use crate::set::ElemSet;
use crate::transitive;

/// Outcome of a line-passes-gap test: the direct definition and the
/// majorant/minorant criterion, which must agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PassReport {
    /// The line avoids the gap's neutral interval.
    pub passes: bool,
    /// The direct test matched the emptiness of
    /// `upper(L ∩ A) ∩ lower(L ∩ B)`.
    pub criterion_agrees: bool,
}

/// How a complete transversal crosses a complete line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Crossing {
    /// They share exactly one element.
    Point(usize),
    /// They are disjoint; the line splits into the part under the
    /// transversal and the part over it, a disjunctive gap of the line.
    GapOfLine { prefix: Vec<usize>, suffix: Vec<usize> },
}

/// The three classes a complete transversal cuts the universe into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalClasses {
    /// The transversal itself.
    pub on: ElemSet,
    /// Strictly under some member; an initial section.
    pub under: ElemSet,
    /// Strictly over some member; a final section.
    pub over: ElemSet,
}

impl Poset {
    /// All maximal chains, each in ascending order, canonically sorted.
    pub fn complete_lines(&self) -> Vec<Vec<usize>> {
        transitive::complete_lines(self.structure())
            .iter()
            .map(|set| self.chain_sorted(set).expect("cliques of comparability are chains"))
            .collect()
    }

    /// Validates that `line` is a maximal chain.
    pub fn require_complete_line(&self, line: &ElemSet) -> Result<()> {
        self.chain_sorted(line)?;
        for q in line.complement().iter() {
            if line.iter().all(|l| self.comparable(q, l)) {
                return Err(Error::NotACompleteLine {
                    reason: "an outside element is comparable to the whole chain",
                });
            }
        }
        if line.is_empty() && self.len() > 0 {
            return Err(Error::NotACompleteLine {
                reason: "the empty chain is not maximal in a nonempty order",
            });
        }
        Ok(())
    }

    /// Whether the chain can only be extended past one end: on the initial
    /// side, everything comparable to the whole chain lies in its majorant.
    /// The empty chain qualifies vacuously.
    pub fn is_half_ray(&self, chain: &ElemSet, side: ClosureSide) -> Result<bool> {
        self.chain_sorted(chain)?;
        let beyond = match side {
            ClosureSide::Initial => self.bounds(chain, BoundSide::Upper),
            ClosureSide::Final => self.bounds(chain, BoundSide::Lower),
        };
        Ok((0..self.len())
            .filter(|&x| chain.iter().all(|l| self.comparable(x, l)))
            .all(|x| beyond.contains(x)))
    }

    /// Number of pairwise initially-distinct complete lines continuing an
    /// initial half-ray: the classes of lines of the induced order on the
    /// majorant, where two lines are initially identical when they share a
    /// nonempty common initial half-ray of that induced order.
    pub fn crossing_index(&self, chain: &ElemSet) -> Result<usize> {
        if !self.is_half_ray(chain, ClosureSide::Initial)? {
            let witness = (0..self.len())
                .find(|&x| {
                    chain.iter().all(|l| self.comparable(x, l))
                        && !self.bounds(chain, BoundSide::Upper).contains(x)
                })
                .expect("a non-half-ray has a witness");
            return Err(Error::NotAHalfRay {
                witness: self.name(witness).to_string(),
            });
        }
        let continuation = self.induced(&self.bounds(chain, BoundSide::Upper));
        let lines = continuation.complete_lines();
        let mut identical = alloc::vec![usize::MAX; lines.len()];
        let mut classes = 0;
        for i in 0..lines.len() {
            if identical[i] != usize::MAX {
                continue;
            }
            identical[i] = classes;
            for j in i + 1..lines.len() {
                if identical[j] == usize::MAX
                    && initially_identical(&continuation, &lines[i], &lines[j])
                {
                    identical[j] = classes;
                }
            }
            classes += 1;
        }
        Ok(classes)
    }

    /// Whether a complete line passes a gap, with the equivalent
    /// majorant/minorant criterion computed alongside.
    pub fn line_passes_gap(&self, line: &ElemSet, gap: &Gap) -> Result<PassReport> {
        self.require_complete_line(line)?;
        self.validate_gap(gap)?;
        let neutral = gap.lower.union(&gap.upper).complement();
        let passes = line.is_disjoint(&neutral);
        let in_lower = line.intersection(&gap.lower);
        let in_upper = line.intersection(&gap.upper);
        let criterion = self
            .bounds(&in_lower, BoundSide::Upper)
            .intersection(&self.bounds(&in_upper, BoundSide::Lower))
            .is_empty();
        Ok(PassReport {
            passes,
            criterion_agrees: passes == criterion,
        })
    }

    /// All maximal antichains, canonically sorted.
    pub fn complete_transversals(&self) -> Vec<ElemSet> {
        let n = self.len();
        let mut incomparable = alloc::vec![ElemSet::empty(n); n];
        for a in 0..n {
            for b in 0..n {
                if a != b && !self.comparable(a, b) {
                    incomparable[a].insert(b);
                }
            }
        }
        let mut out = Vec::new();
        max_cliques(
            &incomparable,
            ElemSet::empty(n),
            ElemSet::full(n),
            ElemSet::empty(n),
            &mut out,
        );
        out.sort_by(|a, b| a.canonical_cmp(b));
        out
    }

    /// Validates that `t` is a complete transversal: pairwise incomparable,
    /// every outside element comparable to some member.
    pub fn require_complete_transversal(&self, t: &ElemSet) -> Result<()> {
        for a in t.iter() {
            for b in t.iter() {
                if a < b && self.comparable(a, b) {
                    return Err(Error::NotATransversal {
                        reason: "two members are comparable",
                    });
                }
            }
        }
        for z in t.complement().iter() {
            if !t.iter().any(|a| self.comparable(z, a)) {
                return Err(Error::NotATransversal {
                    reason: "an outside element is incomparable to every member",
                });
            }
        }
        Ok(())
    }

    /// The three classes around a complete transversal. For each outside
    /// element exactly one of the two strict sides meets the transversal, so
    /// the classes are disjoint and exhaust the universe.
    pub fn transversal_partition(&self, t: &ElemSet) -> Result<TransversalClasses> {
        self.require_complete_transversal(t)?;
        let under = self.close(t, ClosureSide::Initial).difference(t);
        let over = self.close(t, ClosureSide::Final).difference(t);
        assert!(
            under.is_disjoint(&over),
            "trichotomy: no outside element is on both sides of a complete transversal"
        );
        assert_eq!(
            t.union(&under).union(&over),
            ElemSet::full(self.len()),
            "the three classes exhaust the universe"
        );
        assert!(self.section_predicates(&under).is_initial);
        assert!(self.section_predicates(&over).is_final);
        Ok(TransversalClasses {
            on: t.clone(),
            under,
            over,
        })
    }

    /// Where a complete transversal crosses a complete line: in a single
    /// point, or through a disjunctive gap of the line. Two or more shared
    /// elements signal invalid inputs.
    pub fn transversal_crosses_line(&self, t: &ElemSet, line: &ElemSet) -> Result<Crossing> {
        self.require_complete_transversal(t)?;
        self.require_complete_line(line)?;
        let shared = t.intersection(line);
        match shared.len() {
            1 => Ok(Crossing::Point(shared.first().unwrap())),
            0 => {
                let classes = self.transversal_partition(t)?;
                let prefix_set = classes.under.intersection(line);
                let suffix_set = classes.over.intersection(line);
                assert_eq!(
                    prefix_set.union(&suffix_set),
                    *line,
                    "a line disjoint from the transversal splits into the two side classes"
                );
                for a in prefix_set.iter() {
                    for b in suffix_set.iter() {
                        assert!(self.less(a, b), "the split is a cut of the line");
                    }
                }
                Ok(Crossing::GapOfLine {
                    prefix: self.chain_sorted(&prefix_set)?,
                    suffix: self.chain_sorted(&suffix_set)?,
                })
            }
            _ => Err(Error::MultipleIntersection {
                names: self.names_of(&shared),
            }),
        }
    }

    /// True iff every complete line meets every complete transversal in
    /// exactly one point.
    pub fn all_crossings_pointlike(&self) -> bool {
        let lines = self.complete_lines();
        let transversals = self.complete_transversals();
        lines.iter().all(|line| {
            let line_set = ElemSet::from_indices(self.len(), line.iter().copied());
            transversals
                .iter()
                .all(|t| t.intersection(&line_set).len() == 1)
        })
    }
}

/// Two lines of `p` are initially identical when some nonempty common prefix
/// is an initial half-ray of `p`. Common initial half-rays are prefixes of
/// both lines, so scanning the longest common prefix is exhaustive.
fn initially_identical(p: &Poset, a: &[usize], b: &[usize]) -> bool {
    let common = a
        .iter()
        .zip(b.iter())
        .take_while(|(x, y)| x == y)
        .map(|(&x, _)| x);
    let mut prefix = ElemSet::empty(p.len());
    for x in common {
        prefix.insert(x);
        if p.is_half_ray(&prefix, ClosureSide::Initial)
            .expect("prefixes of chains are chains")
        {
            return true;
        }
    }
    false
}

fn max_cliques(
    adj: &[ElemSet],
    r: ElemSet,
    mut p: ElemSet,
    mut x: ElemSet,
    out: &mut Vec<ElemSet>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let candidates: Vec<usize> = p.iter().collect();
    for v in candidates {
        let mut r2 = r.clone();
        r2.insert(v);
        max_cliques(adj, r2, p.intersection(&adj[v]), x.intersection(&adj[v]), out);
        p.remove(v);
        x.insert(v);
    }
}
