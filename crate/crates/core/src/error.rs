use std::fmt;

/// Errors produced by the set, family and topology algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A set was requested over a universe with no elements.
    EmptyUniverse,
    /// A universe was declared with an empty element label.
    EmptyElementLabel,
    /// A universe was declared with the same element label twice.
    DuplicateElement(String),
    /// Two operands live over different universes.
    UniverseMismatch,
    /// An n-ary operation was applied to an empty collection of sets.
    EmptyArgument,
    /// A set was built with a number of triples different from the number
    /// of universe elements.
    ArityMismatch { expected: usize, actual: usize },
    /// A degree literal could not be parsed.
    DegreeSyntax(String),
    /// A degree literal parsed to a value outside `[0,1]`.
    DegreeRange(String),
    /// A degree literal needs more precision than the exact arithmetic
    /// supports (more than 18 fractional digits, or a denominator that
    /// does not fit in 64 bits).
    DegreePrecision(String),
    /// A family operation needs a universe but the family has none.
    MissingUniverse,
    /// An argument that must be a neutrosophic topology is not one.
    NotATopology,
    /// A generation operation was applied to a family larger than the
    /// configured combinatorial cap.
    ResourceLimit { size: usize, cap: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyUniverse => {
                write!(f, "universe must contain at least one element")
            }
            Error::EmptyElementLabel => {
                write!(f, "universe element labels must be non-empty")
            }
            Error::DuplicateElement(label) => {
                write!(f, "duplicate universe element '{label}'")
            }
            Error::UniverseMismatch => {
                write!(f, "operands are defined over different universes")
            }
            Error::EmptyArgument => {
                write!(f, "operation requires at least one set")
            }
            Error::ArityMismatch { expected, actual } => {
                write!(f, "expected {expected} triples, got {actual}")
            }
            Error::DegreeSyntax(literal) => {
                write!(f, "malformed degree literal '{literal}'")
            }
            Error::DegreeRange(literal) => {
                write!(f, "degree '{literal}' is outside [0,1]")
            }
            Error::DegreePrecision(literal) => {
                write!(f, "degree '{literal}' exceeds the supported precision")
            }
            Error::MissingUniverse => {
                write!(f, "family has no universe")
            }
            Error::NotATopology => {
                write!(f, "family is not a neutrosophic topology")
            }
            Error::ResourceLimit { size, cap } => {
                write!(f, "family of {size} sets exceeds the combinatorial cap of {cap}")
            }
        }
    }
}

impl std::error::Error for Error {}
