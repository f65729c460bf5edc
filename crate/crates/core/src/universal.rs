//! Universal orders: the extension step that fills every gap at once, the
//! tower it generates from a singleton seed, embedding search, and the
//! incremental embedding of an arbitrary order into the tower.
//!
//! Materialized tower stages grow fast, so the incremental embedding only
//! materializes stages while they stay under budget; beyond that point new
//! elements are kept symbolic, as gaps of the host built so far, compared by
//! the natural gap order.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gaps::Gap;
use crate::poset::{ClosureSide, Poset};
use crate::set::ElemSet;

/// Materialization never enumerates gaps of a stage larger than this; the
/// embedding machinery switches to symbolic elements instead.
const MATERIALIZE_UNIVERSE_CAP: usize = 20;

/// Default element budget for tower construction.
pub const DEFAULT_ELEMENT_BUDGET: usize = 50_000;

/// Where an element of a tower stage came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Present in the level-0 poset.
    Seed,
    /// Fills the gap of the previous stage with the given side name lists.
    Filled {
        lower: Vec<String>,
        upper: Vec<String>,
    },
}

/// One level of the fill-all-gaps tower.
#[derive(Clone, Debug)]
pub struct PhiStage {
    pub level: usize,
    pub poset: Poset,
    /// Gaps of the previous stage that were filled, canonical order.
    pub gaps: Vec<Gap>,
    /// Fresh element names, aligned with `gaps`.
    pub new_names: Vec<String>,
    /// Universe names of the previous stage, for resolving gap sides.
    prev_names: Vec<String>,
}

impl PhiStage {
    /// Level 0 on a single seed element.
    pub fn seed(name: &str) -> Result<Self> {
        let poset = Poset::from_pairs([name], core::iter::empty::<(&str, &str)>())?;
        Ok(PhiStage {
            level: 0,
            poset,
            gaps: Vec::new(),
            new_names: Vec::new(),
            prev_names: Vec::new(),
        })
    }

    /// Level 0 on an arbitrary starting order.
    pub fn from_poset(poset: Poset) -> Self {
        PhiStage {
            level: 0,
            poset,
            gaps: Vec::new(),
            new_names: Vec::new(),
            prev_names: Vec::new(),
        }
    }

    /// Provenance of every element of this stage's poset.
    pub fn provenance(&self) -> BTreeMap<String, Provenance> {
        let mut out = BTreeMap::new();
        for name in self.poset.names() {
            out.insert(name.clone(), Provenance::Seed);
        }
        for (gap, name) in self.gaps.iter().zip(&self.new_names) {
            let side = |s: &ElemSet| -> Vec<String> {
                s.iter().map(|i| self.prev_names[i].clone()).collect()
            };
            out.insert(
                name.clone(),
                Provenance::Filled {
                    lower: side(&gap.lower),
                    upper: side(&gap.upper),
                },
            );
        }
        out
    }
}

/// Fills every gap of the stage's poset with one fresh element each.
///
/// Fresh names are `{prefix}{level}_g{index}` with the index taken from the
/// canonical gap order, so towers are reproducible. Fails when the extension
/// would exceed `element_budget`, reporting the measured requirement.
pub fn phi_step(stage: &PhiStage, element_budget: usize, prefix: &str) -> Result<PhiStage> {
    let p = &stage.poset;
    let gaps = p.enumerate_gaps(element_budget.min(63))?;
    let needed = p.len() + gaps.len();
    if needed > element_budget {
        return Err(Error::BudgetExceeded {
            budget: element_budget,
            needed,
        });
    }
    let width = core::cmp::max(3, decimal_width(gaps.len().saturating_sub(1)));
    let level = stage.level + 1;
    let names: Vec<String> = (0..gaps.len())
        .map(|i| format!("{prefix}{level}_g{i:0width$}"))
        .collect();
    let fills: Vec<(Gap, String)> = gaps.iter().cloned().zip(names.iter().cloned()).collect();
    let poset = p.fill_simultaneous(&fills)?;
    Ok(PhiStage {
        level,
        poset,
        gaps,
        new_names: names,
        prev_names: p.names().to_vec(),
    })
}

fn decimal_width(mut n: usize) -> usize {
    let mut w = 1;
    while n >= 10 {
        n /= 10;
        w += 1;
    }
    w
}

/// A tower of stages; `halted` reports why construction stopped early.
#[derive(Clone, Debug)]
pub struct PhiTower {
    pub stages: Vec<PhiStage>,
    /// The error that stopped the tower before reaching the requested level.
    pub halted: Option<(usize, Error)>,
}

impl PhiTower {
    pub fn sizes(&self) -> Vec<usize> {
        self.stages.iter().map(|s| s.poset.len()).collect()
    }
}

/// Builds stages 0 through `levels` from the given base stage, stopping with
/// a partial tower when a stage exceeds the budget. The partial result is a
/// value, not an error.
pub fn phi_tower_from(
    base: PhiStage,
    levels: usize,
    element_budget: usize,
    prefix: &str,
) -> PhiTower {
    let mut stages = alloc::vec![base];
    let mut halted = None;
    for _ in 0..levels {
        match phi_step(stages.last().unwrap(), element_budget, prefix) {
            Ok(next) => stages.push(next),
            Err(e) => {
                halted = Some((stages.len(), e));
                break;
            }
        }
    }
    PhiTower { stages, halted }
}

/// The tower from the singleton seed named by `prefix`.
pub fn phi_tower(levels: usize, element_budget: usize, prefix: &str) -> Result<PhiTower> {
    Ok(phi_tower_from(
        PhiStage::seed(prefix)?,
        levels,
        element_budget,
        prefix,
    ))
}

/// Tower construction for the embedding machinery: besides the element
/// budget, stops as soon as the latest stage is too large to enumerate gaps
/// over comfortably. Symbolic elements take over from there.
fn materialized_tower(levels: usize, element_budget: usize, prefix: &str) -> Result<PhiTower> {
    let mut stages = alloc::vec![PhiStage::seed(prefix)?];
    let mut halted = None;
    for _ in 0..levels {
        let last = stages.last().unwrap();
        if last.poset.len() > MATERIALIZE_UNIVERSE_CAP {
            halted = Some((
                stages.len(),
                Error::CapExceeded {
                    what: "tower materialization universe",
                    limit: MATERIALIZE_UNIVERSE_CAP,
                    requested: last.poset.len(),
                },
            ));
            break;
        }
        match phi_step(last, element_budget, prefix) {
            Ok(next) => stages.push(next),
            Err(e) => {
                halted = Some((stages.len(), e));
                break;
            }
        }
    }
    Ok(PhiTower { stages, halted })
}

/// An injective, order-preserving, order-reflecting map from a target order
/// into a host order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// Pairs `(target name, host name)` in target canonical order.
    pub map: Vec<(String, String)>,
}

/// Definition check: injective, and the target relation agrees with the host
/// relation on images in both directions.
pub fn is_embedding(target: &Poset, host: &Poset, map: &[(String, String)]) -> bool {
    if map.len() != target.len() {
        return false;
    }
    let mut images = BTreeSet::new();
    let mut img = alloc::vec![usize::MAX; target.len()];
    for (t, h) in map {
        let (Ok(ti), Ok(hi)) = (target.index_of(t), host.index_of(h)) else {
            return false;
        };
        if !images.insert(hi) {
            return false;
        }
        img[ti] = hi;
    }
    if img.iter().any(|&i| i == usize::MAX) {
        return false;
    }
    (0..target.len()).all(|a| {
        (0..target.len()).all(|b| target.less(a, b) == host.less(img[a], img[b]))
    })
}

/// Deterministic backtracking search for an embedding of `target` into
/// `host`: target elements in canonical order, host candidates in canonical
/// order, first solution returned.
pub fn find_embedding(target: &Poset, host: &Poset) -> Option<Embedding> {
    if target.len() > host.len() {
        return None;
    }
    let mut img = alloc::vec![usize::MAX; target.len()];
    let mut used = ElemSet::empty(host.len());
    fn assign(
        target: &Poset,
        host: &Poset,
        next: usize,
        img: &mut [usize],
        used: &mut ElemSet,
    ) -> bool {
        if next == target.len() {
            return true;
        }
        'cand: for cand in 0..host.len() {
            if used.contains(cand) {
                continue;
            }
            for prev in 0..next {
                if target.less(prev, next) != host.less(img[prev], cand)
                    || target.less(next, prev) != host.less(cand, img[prev])
                {
                    continue 'cand;
                }
            }
            img[next] = cand;
            used.insert(cand);
            if assign(target, host, next + 1, img, used) {
                return true;
            }
            img[next] = usize::MAX;
            used.remove(cand);
        }
        false
    }
    if assign(target, host, 0, &mut img, &mut used) {
        let map = (0..target.len())
            .map(|i| (target.name(i).to_string(), host.name(img[i]).to_string()))
            .collect();
        let e = Embedding { map };
        debug_assert!(is_embedding(target, host, &e.map));
        Some(e)
    } else {
        None
    }
}

/// Result of the incremental embedding into the tower.
#[derive(Clone, Debug)]
pub struct PsiEmbedding {
    /// The host: the last materialized stage extended by the symbolic
    /// elements that were placed.
    pub host: Poset,
    /// Pairs `(target name, host name)` in target canonical order.
    pub map: Vec<(String, String)>,
    /// Tower stage of each image, keyed by target name.
    pub stage_of: BTreeMap<String, usize>,
    /// Host names that stand for unmaterialized stage elements, with the gap
    /// of the running host they occupy.
    pub symbolic: BTreeMap<String, (Vec<String>, Vec<String>)>,
    /// Number of fully materialized tower levels.
    pub materialized_levels: usize,
}

/// Embeds `target` into the tower along its canonical linear extension.
pub fn embed_via_psi(target: &Poset, tower_budget: usize, prefix: &str) -> Result<PsiEmbedding> {
    let order = target.linear_extension();
    embed_via_psi_with_order(target, &order, tower_budget, prefix)
}

/// Embeds `target` into the tower, adding one element per step in the given
/// order. The element added at step `j` occupies, in the host, the gap
/// spanned by the closures of its already-embedded neighbours taken in stage
/// `j - 1`, and so becomes a stage-`j` element: a materialized one while the
/// tower fits the budget, a symbolic gap of the running host beyond that.
pub fn embed_via_psi_with_order(
    target: &Poset,
    well_order: &[usize],
    tower_budget: usize,
    prefix: &str,
) -> Result<PsiEmbedding> {
    let n = target.len();
    {
        let mut seen = ElemSet::empty(n);
        for &i in well_order {
            if i >= n || seen.contains(i) {
                return Err(Error::BadPartition {
                    reason: "well-order is not a permutation of the universe",
                });
            }
            seen.insert(i);
        }
        if well_order.len() != n {
            return Err(Error::BadPartition {
                reason: "well-order is not a permutation of the universe",
            });
        }
    }

    let tower = materialized_tower(n, tower_budget, prefix)?;
    let stages = tower.stages;

    let mut img: Vec<Option<String>> = alloc::vec![None; n];
    let mut stage_of: BTreeMap<String, usize> = BTreeMap::new();
    let mut symbolic: BTreeMap<String, (Vec<String>, Vec<String>)> = BTreeMap::new();
    let mut sym_host: Option<Poset> = None;
    let mut max_stage_used = 0;

    if n == 0 {
        let host = stages[0].poset.clone();
        return Ok(PsiEmbedding {
            host,
            map: Vec::new(),
            stage_of,
            symbolic,
            materialized_levels: 0,
        });
    }

    let first = well_order[0];
    img[first] = Some(prefix.to_string());
    stage_of.insert(target.name(first).to_string(), 0);

    for j in 2..=n {
        let x = well_order[j - 1];
        let below: Vec<usize> = well_order[..j - 1]
            .iter()
            .copied()
            .filter(|&e| target.less(e, x))
            .collect();
        let above: Vec<usize> = well_order[..j - 1]
            .iter()
            .copied()
            .filter(|&e| target.less(x, e))
            .collect();

        if sym_host.is_none() && stages.len() > j {
            // materialized placement: close the images in stage j-1 and take
            // the stage-j element spawned by that gap
            let s = &stages[j - 1].poset;
            let img_set = |elems: &[usize]| -> ElemSet {
                let mut set = ElemSet::empty(s.len());
                for &e in elems {
                    let name = img[e].as_ref().unwrap();
                    set.insert(s.index_of(name).expect("earlier images live in earlier stages"));
                }
                set
            };
            let lower = s.close(&img_set(&below), ClosureSide::Initial);
            let upper = s.close(&img_set(&above), ClosureSide::Final);
            let wanted = Gap::new(lower, upper);
            let stage_j = &stages[j];
            let pos = stage_j
                .gaps
                .iter()
                .position(|g| *g == wanted)
                .expect("every gap of a stage is filled in the next one");
            img[x] = Some(stage_j.new_names[pos].clone());
            stage_of.insert(target.name(x).to_string(), j);
            max_stage_used = max_stage_used.max(j);
        } else {
            // symbolic placement: fill the gap of the running host
            let host = sym_host.get_or_insert_with(|| stages.last().unwrap().poset.clone());
            let img_set = |host: &Poset, elems: &[usize], img: &[Option<String>]| -> ElemSet {
                let mut set = ElemSet::empty(host.len());
                for &e in elems {
                    let name = img[e].as_ref().unwrap();
                    set.insert(host.index_of(name).expect("images live in the running host"));
                }
                set
            };
            let lower = host.close(&img_set(host, &below, &img), ClosureSide::Initial);
            let upper = host.close(&img_set(host, &above, &img), ClosureSide::Final);
            let gap = Gap::new(lower.clone(), upper.clone());
            let name = format!("{prefix}{j}_w");
            let next = host.fill_gap(&gap, &name)?;
            symbolic.insert(
                name.clone(),
                (host.names_of(&lower), host.names_of(&upper)),
            );
            *host = next;
            img[x] = Some(name);
            stage_of.insert(target.name(x).to_string(), j);
            max_stage_used = max_stage_used.max(j);
        }
    }

    let materialized_levels = stages.len() - 1;
    let host = match sym_host {
        Some(h) => h,
        None => stages[max_stage_used].poset.clone(),
    };
    let map: Vec<(String, String)> = (0..n)
        .map(|i| (target.name(i).to_string(), img[i].clone().unwrap()))
        .collect();
    assert!(
        is_embedding(target, &host, &map),
        "the incremental embedding is order-preserving and order-reflecting"
    );
    Ok(PsiEmbedding {
        host,
        map,
        stage_of,
        symbolic,
        materialized_levels,
    })
}

/// Growth of one tower level against the conjectured power of two.
#[derive(Clone, Debug)]
pub struct StageGrowth {
    pub level: usize,
    pub size: usize,
    pub conjectured_pow2: u128,
}

/// Embedding outcomes for all labeled posets of one size.
#[derive(Clone, Debug)]
pub struct SizeReport {
    pub n: usize,
    pub poset_count: usize,
    pub embedded: usize,
    pub failures: Vec<String>,
}

/// The measured universality evidence: per-size embedding counts and the
/// tower growth sequence, with the conjectured sizes reported but never
/// asserted.
#[derive(Clone, Debug)]
pub struct UniversalityReport {
    pub per_size: Vec<SizeReport>,
    pub growth: Vec<StageGrowth>,
    pub materialized_levels: usize,
}

/// Tries to embed every labeled poset on 1..=`max_size` elements into the
/// tower. Failures are collected, not panicked on; for sizes whose stages
/// materialize they must come out empty.
pub fn universality_report(max_size: usize, tower_budget: usize) -> Result<UniversalityReport> {
    let mut per_size = Vec::new();
    for n in 1..=max_size {
        let posets = crate::enumerate::labeled_posets(n)?;
        let mut embedded = 0;
        let mut failures = Vec::new();
        let poset_count = posets.len();
        for (k, p) in posets.into_iter().enumerate() {
            match embed_via_psi(&p, tower_budget, "a") {
                Ok(_) => embedded += 1,
                Err(e) => failures.push(format!("poset {k} on {n} elements: {e}")),
            }
        }
        per_size.push(SizeReport {
            n,
            poset_count,
            embedded,
            failures,
        });
    }
    let tower = materialized_tower(max_size, tower_budget, "a")?;
    let growth = tower
        .stages
        .iter()
        .map(|s| StageGrowth {
            level: s.level,
            size: s.poset.len(),
            conjectured_pow2: 1u128 << s.level.min(127),
        })
        .collect();
    Ok(UniversalityReport {
        per_size,
        growth,
        materialized_levels: tower.stages.len() - 1,
    })
}
