//! Single-valued neutrosophic set algebra over finite universes.
//!
//! A single-valued neutrosophic set assigns every element of a finite
//! universe a triple of degrees in `[0,1]`: membership, indeterminacy and
//! non-membership. The three degrees are independent of each other. This
//! crate provides:
//!
//! * exact rational degrees ([`Degree`]) with decimal/fraction literals,
//! * the pointwise set algebra (union, intersection, complement, subset),
//! * duplicate-free families of sets ([`NeutrosophicFamily`]) with their
//!   own subset/union/intersection/difference/complement algebra,
//! * topology generation from bases and sub-bases, closure checks and the
//!   topology axioms ([`topology`]),
//! * deterministic text rendering in simple and tabular formats
//!   ([`mod@format`]),
//! * a line-oriented script format declaring universes, sets and families
//!   ([`script`]).
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything can be shared and sent across threads freely.

mod degree;
mod error;
mod family;
mod set;
mod universe;

pub mod format;
pub mod script;
pub mod topology;

pub use degree::{Degree, NeutrosophicTriple};
pub use error::Error;
pub use family::NeutrosophicFamily;
pub use set::NeutrosophicSet;
pub use universe::Universe;

/// Convenience alias for results produced by the set and family algebra.
pub type Result<T> = std::result::Result<T, Error>;
