use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::degree::NeutrosophicTriple;
use crate::format;
use crate::universe::Universe;
use crate::{Error, Result};

/// A single-valued neutrosophic set: one degree triple per universe
/// element, stored positionally in universe order.
///
/// The optional display name is metadata only: two sets with the same
/// universe and triples are equal no matter how they are named.
#[derive(Debug, Clone)]
pub struct NeutrosophicSet {
    universe: Arc<Universe>,
    triples: Vec<NeutrosophicTriple>,
    name: Option<String>,
}

impl NeutrosophicSet {
    /// Builds a set from one triple per universe element, in universe
    /// order.
    pub fn new(universe: Arc<Universe>, triples: Vec<NeutrosophicTriple>) -> Result<Self> {
        if universe.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if triples.len() != universe.len() {
            return Err(Error::ArityMismatch {
                expected: universe.len(),
                actual: triples.len(),
            });
        }
        Ok(NeutrosophicSet {
            universe,
            triples,
            name: None,
        })
    }

    /// The constant map: every element gets the same triple.
    pub fn constant(universe: Arc<Universe>, triple: NeutrosophicTriple) -> Result<Self> {
        let len = universe.len();
        NeutrosophicSet::new(universe, vec![triple; len])
    }

    /// The neutrosophic empty set: every element has triple `(0, 0, 1)`.
    /// Named `"∅̃"`.
    pub fn empty(universe: Arc<Universe>) -> Result<Self> {
        use crate::degree::Degree;
        let triple = NeutrosophicTriple::new(Degree::ZERO, Degree::ZERO, Degree::ONE);
        Ok(NeutrosophicSet::constant(universe, triple)?.named("\u{2205}\u{0303}"))
    }

    /// The neutrosophic absolute set: every element has triple `(1, 1, 0)`.
    /// Named after the universe (double-struck) or `"1̃"` when the universe
    /// is unnamed.
    pub fn absolute(universe: Arc<Universe>) -> Result<Self> {
        use crate::degree::Degree;
        let triple = NeutrosophicTriple::new(Degree::ONE, Degree::ONE, Degree::ZERO);
        let name = format::absolute_name(&universe);
        Ok(NeutrosophicSet::constant(universe, triple)?.named(name))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn triples(&self) -> &[NeutrosophicTriple] {
        &self.triples
    }

    /// The triple of one element, by label.
    pub fn triple_for(&self, label: &str) -> Option<&NeutrosophicTriple> {
        self.universe.index_of(label).map(|i| &self.triples[i])
    }

    /// Iterates `(label, triple)` pairs in universe order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &NeutrosophicTriple)> {
        self.universe
            .elements()
            .iter()
            .map(String::as_str)
            .zip(self.triples.iter())
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Returns the set with the given display name.
    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    fn require_same_universe(&self, other: &Self) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// Subset test: for every element, `m <= m'`, `i <= i'` and `n >= n'`.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.require_same_universe(other)?;
        Ok(self
            .triples
            .iter()
            .zip(other.triples.iter())
            .all(|(a, b)| a.le(b)))
    }

    pub fn is_superset(&self, other: &Self) -> Result<bool> {
        other.is_subset(self)
    }

    /// Equality as mutual containment. With exact degrees this is the same
    /// as componentwise triple equality; names are ignored. Unlike `==`,
    /// comparing across universes is an error.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.require_same_universe(other)?;
        Ok(self.triples == other.triples)
    }

    /// Componentwise union of a non-empty collection of sets over one
    /// universe: `(max, max, min)` per element. The result is unnamed.
    pub fn union_all<'a, I>(sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a NeutrosophicSet>,
    {
        Self::fold(sets, NeutrosophicTriple::join)
    }

    /// Componentwise intersection of a non-empty collection of sets over
    /// one universe: `(min, min, max)` per element. The result is unnamed.
    pub fn intersection_all<'a, I>(sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a NeutrosophicSet>,
    {
        Self::fold(sets, NeutrosophicTriple::meet)
    }

    /// Binary union.
    pub fn union(&self, other: &Self) -> Result<Self> {
        NeutrosophicSet::union_all([self, other])
    }

    /// Binary intersection.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        NeutrosophicSet::intersection_all([self, other])
    }

    fn fold<'a, I>(
        sets: I,
        combine: fn(&NeutrosophicTriple, &NeutrosophicTriple) -> NeutrosophicTriple,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = &'a NeutrosophicSet>,
    {
        let mut sets = sets.into_iter();
        let first = sets.next().ok_or(Error::EmptyArgument)?;
        let mut triples = first.triples.clone();
        for set in sets {
            first.require_same_universe(set)?;
            for (acc, t) in triples.iter_mut().zip(set.triples.iter()) {
                *acc = combine(acc, t);
            }
        }
        Ok(NeutrosophicSet {
            universe: Arc::clone(&first.universe),
            triples,
            name: None,
        })
    }

    /// Componentwise complement: `(m, i, n)` becomes `(n, 1 - i, m)` per
    /// element. A named set yields a result named `"~"` + the name.
    pub fn complement(&self) -> Self {
        NeutrosophicSet {
            universe: Arc::clone(&self.universe),
            triples: self.triples.iter().map(NeutrosophicTriple::complement).collect(),
            name: self.name.as_ref().map(|n| format!("~{n}")),
        }
    }
}

/// Structural equality: same universe elements and same triples. Names
/// (of the set and of the universe) are ignored.
impl PartialEq for NeutrosophicSet {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.triples == other.triples
    }
}

impl Eq for NeutrosophicSet {}

impl Hash for NeutrosophicSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Triples alone keep hashing consistent with equality; families
        // only ever probe sets over one universe.
        self.triples.hash(state);
    }
}
