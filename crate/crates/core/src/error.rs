use core::fmt;

use crate::census::Condition;
use crate::quasismooth::IndexSet;

/// Errors raised by the classification engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Weights were empty, non-positive or unsorted, or the degree was not positive.
    InvalidWeights(&'static str),
    /// An argument violated an operation's precondition.
    InvalidArgument(&'static str),
    /// An index set was empty or pointed outside the weight tuple.
    InvalidIndexSet(IndexSet),
    /// `d = a_i`: the hypersurface is a linear cone and its partials are not a regular sequence.
    LinearCone { index: usize },
    /// A stratum lies in the general member but no tangent variable exists.
    NoTangentVariable { r: i64 },
    /// A residue of a quotient type was outside `[1, r - 1]`.
    ResidueOutOfRange { r: i64, residue: i64 },
    /// A weight system failed one of the numbered admissibility conditions.
    ConditionFailed(Condition),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidWeights(why) => write!(f, "invalid weight system: {why}"),
            Error::InvalidArgument(why) => write!(f, "invalid argument: {why}"),
            Error::InvalidIndexSet(set) => write!(f, "invalid index set {set}"),
            Error::LinearCone { index } => write!(
                f,
                "linear cone has no Jacobian-regular sequence form (d = a_{index})"
            ),
            Error::NoTangentVariable { r } => write!(
                f,
                "no tangent variable: general member not quasi-smooth along stratum r = {r}"
            ),
            Error::ResidueOutOfRange { r, residue } => {
                write!(f, "residue {residue} outside [1, {}]", r - 1)
            }
            Error::ConditionFailed(c) => write!(f, "condition ({}) fails: {}", c.number(), c),
        }
    }
}

impl core::error::Error for Error {}
