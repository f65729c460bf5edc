//! Error type shared by all operations in this crate.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Everything that can go wrong when building or analyzing a structure.
///
/// Absence of a result (an embedding that does not exist, an absolute base
/// that does not exist) is reported as `Option`, never as an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An element name was referenced but is not part of the universe.
    UnknownElement { name: String },
    /// An element name is empty or declared twice where uniqueness is required.
    BadElementName { name: String, reason: &'static str },
    /// A fresh name collides with an existing element.
    NameCollision { name: String },
    /// An exhaustive enumeration would exceed the configured cap.
    CapExceeded {
        what: &'static str,
        limit: usize,
        requested: usize,
    },
    /// An extension would exceed the element budget; carries the measured need.
    BudgetExceeded { budget: usize, needed: usize },
    /// The structure is not transitively closed; witness `(a, b, c)` has
    /// `a -> b` and `b -> c` but not `a -> c`.
    NotTransitive { witness: (String, String, String) },
    /// A reflexive pair `(name, name)` is present where forbidden.
    NotIrreflexive { name: String },
    /// A loop `(name, name)` is missing where required.
    NotReflexive { name: String },
    /// The pair `(lower, upper)` is not a gap of the poset.
    InvalidGap { reason: &'static str },
    /// The given subset is not a chain of the poset.
    NotAChain { witness: (String, String) },
    /// The given chain is not a half-ray on the requested side.
    NotAHalfRay { witness: String },
    /// The given subset is not a complete line of the poset.
    NotACompleteLine { reason: &'static str },
    /// The given subset is not a complete transversal of the poset.
    NotATransversal { reason: &'static str },
    /// A line and a transversal intersect in two or more elements,
    /// which signals invalid inputs.
    MultipleIntersection { names: Vec<String> },
    /// An input to an order-only operation is not an order.
    NotAnOrder { index: usize, reason: &'static str },
    /// A con-fusion of orders produced a cycle; the witness lists the
    /// elements along the cycle, ending where it started.
    CycleDetected { cycle: Vec<String> },
    /// A line-subset index is out of range.
    BadLineIndex { index: usize, count: usize },
    /// Gluing condition 1: a class holds two or more elements of one chain.
    ClassMeetsChainTwice { class: String, chain: usize },
    /// Gluing condition 2: two classes appear in opposite orders in two chains.
    ConflictingClassOrder { first: String, second: String },
    /// The class list is not a partition of the chain union.
    BadPartition { reason: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownElement { name } => write!(f, "unknown element `{name}`"),
            Error::BadElementName { name, reason } => {
                write!(f, "bad element name `{name}`: {reason}")
            }
            Error::NameCollision { name } => {
                write!(f, "element name `{name}` already in use")
            }
            Error::CapExceeded {
                what,
                limit,
                requested,
            } => write!(f, "{what} cap exceeded: {requested} > limit {limit}"),
            Error::BudgetExceeded { budget, needed } => {
                write!(f, "element budget exceeded: need {needed}, budget {budget}")
            }
            Error::NotTransitive { witness: (a, b, c) } => write!(
                f,
                "structure is not transitive: `{a} -> {b}` and `{b} -> {c}` but not `{a} -> {c}`"
            ),
            Error::NotIrreflexive { name } => {
                write!(f, "structure has a reflexive element `{name}`")
            }
            Error::NotReflexive { name } => {
                write!(f, "element `{name}` is missing its reflexive pair")
            }
            Error::InvalidGap { reason } => write!(f, "not a gap: {reason}"),
            Error::NotAChain { witness: (a, b) } => {
                write!(f, "not a chain: `{a}` and `{b}` are incomparable")
            }
            Error::NotAHalfRay { witness } => write!(
                f,
                "not a half-ray: `{witness}` is comparable to the whole chain but not beyond it"
            ),
            Error::NotACompleteLine { reason } => write!(f, "not a complete line: {reason}"),
            Error::NotATransversal { reason } => {
                write!(f, "not a complete transversal: {reason}")
            }
            Error::MultipleIntersection { names } => {
                write!(f, "line and transversal share several elements:")?;
                for n in names {
                    write!(f, " {n}")?;
                }
                Ok(())
            }
            Error::NotAnOrder { index, reason } => {
                write!(f, "input {index} is not an order: {reason}")
            }
            Error::CycleDetected { cycle } => {
                write!(f, "cycle:")?;
                for n in cycle {
                    write!(f, " {n}")?;
                }
                Ok(())
            }
            Error::BadLineIndex { index, count } => {
                write!(f, "line index {index} out of range (have {count} lines)")
            }
            Error::ClassMeetsChainTwice { class, chain } => write!(
                f,
                "class of `{class}` meets chain {chain} in two or more elements"
            ),
            Error::ConflictingClassOrder { first, second } => write!(
                f,
                "classes of `{first}` and `{second}` appear in opposite orders"
            ),
            Error::BadPartition { reason } => write!(f, "bad partition: {reason}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
