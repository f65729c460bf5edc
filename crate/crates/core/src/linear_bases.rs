//! Linear bases: systems of complete lines whose con-fusion regenerates the
//! order, and the gluing of disjoint total orders through a classification.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::relation::RelationStructure;
use crate::set::ElemSet;
use crate::transitive::{confuse_orders, BaseMode, Confusion};

impl Poset {
    fn line_relation(&self, lines: &[Vec<usize>], selection: u64) -> RelationStructure {
        let n = self.len();
        let mut rows = alloc::vec![ElemSet::empty(n); n];
        for (k, line) in lines.iter().enumerate() {
            if selection >> k & 1 == 0 {
                continue;
            }
            for (i, &a) in line.iter().enumerate() {
                for &b in &line[i + 1..] {
                    rows[a].insert(b);
                }
            }
        }
        RelationStructure::from_rows(self.names().to_vec(), rows)
    }

    fn selection_mask(&self, line_count: usize, selection: &[usize]) -> Result<u64> {
        let mut mask = 0u64;
        for &i in selection {
            if i >= line_count {
                return Err(Error::BadLineIndex {
                    index: i,
                    count: line_count,
                });
            }
            mask |= 1 << i;
        }
        Ok(mask)
    }

    /// True iff the deductive closure of the union of the selected complete
    /// lines equals the whole relation. Indices refer to `complete_lines`.
    pub fn is_linear_basis(&self, selection: &[usize]) -> Result<bool> {
        let lines = self.complete_lines();
        let mask = self.selection_mask(lines.len(), selection)?;
        Ok(self.mask_is_basis(&lines, mask))
    }

    fn mask_is_basis(&self, lines: &[Vec<usize>], mask: u64) -> bool {
        let (closed, _) = self.line_relation(lines, mask).deductive_closure();
        closed == *self.structure()
    }

    /// Searches the line subsets that are bases. The basis family is upward
    /// closed, so irreducible bases are found walking down from the full set
    /// through bases only.
    pub fn linear_basis_family(&self, mode: BaseMode, cap: usize) -> Result<Vec<Vec<usize>>> {
        let lines = self.complete_lines();
        let k = lines.len();

        if let BaseMode::Absolute = mode {
            if k > 63 {
                return Err(Error::CapExceeded {
                    what: "complete line count",
                    limit: 63,
                    requested: k,
                });
            }
            let full: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
            let required: Vec<usize> = (0..k)
                .filter(|&i| !self.mask_is_basis(&lines, full & !(1u64 << i)))
                .collect();
            let mask = self.selection_mask(k, &required)?;
            return Ok(if self.mask_is_basis(&lines, mask) {
                alloc::vec![required]
            } else {
                Vec::new()
            });
        }

        let limit = cap.min(63);
        if k > limit {
            return Err(Error::CapExceeded {
                what: "complete line count",
                limit,
                requested: k,
            });
        }
        let full: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
        let mut found: BTreeSet<u64> = BTreeSet::new();
        match mode {
            BaseMode::All => {
                for mask in 0..=full {
                    if self.mask_is_basis(&lines, mask) {
                        found.insert(mask);
                    }
                    if full == 0 {
                        break;
                    }
                }
            }
            BaseMode::Irreducible => {
                let mut visited: BTreeSet<u64> = BTreeSet::new();
                let mut stack = alloc::vec![full];
                visited.insert(full);
                while let Some(mask) = stack.pop() {
                    let mut minimal = true;
                    for i in 0..k {
                        if mask >> i & 1 == 0 {
                            continue;
                        }
                        let child = mask & !(1u64 << i);
                        if self.mask_is_basis(&lines, child) {
                            minimal = false;
                            if visited.insert(child) {
                                stack.push(child);
                            }
                        }
                    }
                    if minimal {
                        found.insert(mask);
                    }
                }
            }
            BaseMode::Absolute => unreachable!(),
        }
        Ok(found
            .into_iter()
            .map(|mask| (0..k).filter(|&i| mask >> i & 1 == 1).collect())
            .collect())
    }

    /// Verifies that the basis family is a final section of the line-subset
    /// lattice: adding any line to a basis leaves a basis.
    pub fn basis_family_is_final_section(&self, cap: usize) -> Result<bool> {
        let lines = self.complete_lines();
        let k = lines.len();
        let limit = cap.min(63);
        if k > limit {
            return Err(Error::CapExceeded {
                what: "complete line count",
                limit,
                requested: k,
            });
        }
        let full: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
        let mut is_basis = alloc::vec![false; (full as usize) + 1];
        for mask in 0..=full {
            is_basis[mask as usize] = self.mask_is_basis(&lines, mask);
            if full == 0 {
                break;
            }
        }
        for mask in 0..=full {
            if is_basis[mask as usize] {
                for i in 0..k {
                    if mask >> i & 1 == 0 && !is_basis[(mask | 1 << i) as usize] {
                        return Ok(false);
                    }
                }
            }
            if full == 0 {
                break;
            }
        }
        Ok(true)
    }
}

/// Result of gluing disjoint total orders through a classification.
#[derive(Clone, Debug)]
pub struct GlueResult {
    /// The glued order, with the least member of each class as its token.
    pub poset: Poset,
    /// Class membership per token, sorted by token.
    pub classes: Vec<(String, Vec<String>)>,
}

/// Glues pairwise-disjoint total orders by identifying elements through the
/// given classes. Each class may meet each chain at most once, two classes
/// must keep one consistent order across all chains seeing both, and the
/// fused relation must stay acyclic.
pub fn glue_orders(chains: &[Vec<String>], classes: &[Vec<String>]) -> Result<GlueResult> {
    let mut seen: BTreeSet<&String> = BTreeSet::new();
    for chain in chains {
        for e in chain {
            if !seen.insert(e) {
                return Err(Error::BadPartition {
                    reason: "chains are not pairwise disjoint",
                });
            }
        }
    }
    let mut covered: BTreeSet<&String> = BTreeSet::new();
    for class in classes {
        if class.is_empty() {
            return Err(Error::BadPartition {
                reason: "empty class",
            });
        }
        for e in class {
            if !seen.contains(e) {
                return Err(Error::UnknownElement { name: e.clone() });
            }
            if !covered.insert(e) {
                return Err(Error::BadPartition {
                    reason: "an element appears in two classes",
                });
            }
        }
    }
    if covered.len() != seen.len() {
        return Err(Error::BadPartition {
            reason: "classes do not cover every chain element",
        });
    }

    let class_of = |e: &String| classes.iter().position(|c| c.contains(e)).unwrap();
    let token_of: Vec<String> = classes
        .iter()
        .map(|c| c.iter().min().unwrap().clone())
        .collect();

    // condition 1: a class may not meet one chain twice
    for (ci, chain) in chains.iter().enumerate() {
        let mut met: BTreeSet<usize> = BTreeSet::new();
        for e in chain {
            if !met.insert(class_of(e)) {
                return Err(Error::ClassMeetsChainTwice {
                    class: token_of[class_of(e)].clone(),
                    chain: ci,
                });
            }
        }
    }

    // condition 2: any two classes keep one order across all chains
    let mut direction: alloc::collections::BTreeMap<(usize, usize), bool> =
        alloc::collections::BTreeMap::new();
    for chain in chains {
        for (i, a) in chain.iter().enumerate() {
            for b in &chain[i + 1..] {
                let (p, q) = (class_of(a), class_of(b));
                let key = (p.min(q), p.max(q));
                let forward = p < q;
                if let Some(&prev) = direction.get(&key) {
                    if prev != forward {
                        return Err(Error::ConflictingClassOrder {
                            first: token_of[key.0].clone(),
                            second: token_of[key.1].clone(),
                        });
                    }
                } else {
                    direction.insert(key, forward);
                }
            }
        }
    }

    // quotient each chain to tokens and con-fuse
    let quotiented: Vec<RelationStructure> = chains
        .iter()
        .map(|chain| {
            let tokens: Vec<String> = chain.iter().map(|e| token_of[class_of(e)].clone()).collect();
            let pairs: Vec<(String, String)> = tokens
                .iter()
                .enumerate()
                .flat_map(|(i, a)| tokens[i + 1..].iter().map(move |b| (a.clone(), b.clone())))
                .collect();
            RelationStructure::new(
                tokens.iter().map(String::as_str),
                pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
            )
            .expect("chain tokens are declared")
        })
        .collect();
    match confuse_orders(&quotiented)? {
        Confusion::Order(poset) => {
            let mut out: Vec<(String, Vec<String>)> = classes
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let mut members = c.clone();
                    members.sort();
                    (token_of[i].clone(), members)
                })
                .collect();
            out.sort();
            Ok(GlueResult { poset, classes: out })
        }
        Confusion::Cyclic { witness } => Err(Error::CycleDetected { cycle: witness }),
    }
}
