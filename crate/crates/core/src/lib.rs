//! Calculus on finite binary structures and partial orders.
//!
//! The crate covers the full pipeline from raw relations to order theory:
//!
//! * [`relation`] — binary structures, comparability, connected pieces,
//!   one-sided closures, inversion, kernels, sub-join, wide isomorphism;
//! * [`transitive`] — deductive closure with stage tracking, the taxonomy of
//!   transitive structures, bases, con-fusion with cycle detection;
//! * [`quotient`] — reflexive transitive structures and their classification,
//!   strict part, and class order;
//! * [`poset`] — the order calculus: extremes, lexicographic products,
//!   majorant/minorant bounds, initial and final closures, sections,
//!   intervals, ramification, cofinality, subset comparisons;
//! * [`gaps`] — gaps (cuts) of a poset, their taxonomy, single and
//!   simultaneous filling, the natural order on gaps, block decomposition;
//! * [`universal`] — the fill-all-gaps tower from a singleton seed,
//!   embedding search, the incremental embedding into the tower, and the
//!   universality report;
//! * [`lines`] — complete lines (maximal chains), half-rays, crossing
//!   indices, complete transversals (maximal antichains), trichotomy, and
//!   line/transversal crossings;
//! * [`linear_bases`] — systems of complete lines whose con-fusion
//!   regenerates the order, plus the chain-gluing construction;
//! * [`enumerate`] — exhaustive generation of labeled posets.
//!
//! Everything is `no_std` + `alloc`: all values are immutable after
//! construction, every operation is a pure function of its inputs, and all
//! enumerations come out in one canonical order.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod enumerate;
pub mod error;
pub mod gaps;
pub mod linear_bases;
pub mod lines;
pub mod poset;
pub mod quotient;
pub mod relation;
pub mod set;
pub mod transitive;
pub mod universal;

pub use error::{Error, Result};
pub use gaps::{Gap, GapClass, GapInfo};
pub use poset::Poset;
pub use quotient::Preorder;
pub use relation::{Comparability, RelationStructure, Side};
pub use set::ElemSet;
pub use transitive::Taxon;
