use std::collections::HashSet;
use std::sync::Arc;

use crate::set::NeutrosophicSet;
use crate::universe::Universe;
use crate::{Error, Result};

/// An ordered, duplicate-free collection of neutrosophic sets over one
/// universe.
///
/// Insertion order is preserved and observable in rendering and topology
/// generation; duplicates (under structural set equality) are dropped at
/// insertion, first occurrence wins. The universe is absent only when the
/// family is empty, and even then one can be attached with
/// [`set_universe`](NeutrosophicFamily::set_universe) so that topology
/// construction has a ground set to work with.
///
/// Families over different universes never compare; the empty family with
/// no universe is compatible with everything.
#[derive(Debug, Clone, Default)]
pub struct NeutrosophicFamily {
    universe: Option<Arc<Universe>>,
    members: Vec<NeutrosophicSet>,
    probe: HashSet<NeutrosophicSet>,
    name: Option<String>,
}

impl NeutrosophicFamily {
    /// Builds a family from sets sharing one universe, deduplicating while
    /// preserving first-seen order. The universe is taken from the first
    /// member; an empty input yields a family with no universe.
    pub fn new<I>(sets: I) -> Result<NeutrosophicFamily>
    where
        I: IntoIterator<Item = NeutrosophicSet>,
    {
        let mut family = NeutrosophicFamily::default();
        for set in sets {
            match &family.universe {
                None => family.universe = Some(Arc::clone(set.universe())),
                Some(u) => {
                    if u.as_ref() != set.universe().as_ref() {
                        return Err(Error::UniverseMismatch);
                    }
                }
            }
            family.push_unique(set);
        }
        Ok(family)
    }

    fn push_unique(&mut self, set: NeutrosophicSet) {
        if self.probe.insert(set.clone()) {
            self.members.push(set);
        }
    }

    pub fn cardinality(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in insertion order.
    pub fn members(&self) -> &[NeutrosophicSet] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, NeutrosophicSet> {
        self.members.iter()
    }

    /// Membership probe by structural set equality (names ignored).
    pub fn contains(&self, set: &NeutrosophicSet) -> bool {
        self.probe.contains(set)
    }

    /// Returns the stored member equal to `set`, if any. Useful for
    /// recovering the name a value carries inside this family.
    pub fn find(&self, set: &NeutrosophicSet) -> Option<&NeutrosophicSet> {
        self.probe.get(set)
    }

    pub fn universe(&self) -> Option<&Arc<Universe>> {
        self.universe.as_ref()
    }

    /// Attaches a universe. On a non-empty family the universe must equal
    /// the members' universe; on an empty family it enables later topology
    /// construction.
    pub fn set_universe(&mut self, universe: Arc<Universe>) -> Result<()> {
        if let Some(member) = self.members.first() {
            if member.universe().as_ref() != universe.as_ref() {
                return Err(Error::UniverseMismatch);
            }
        }
        self.universe = Some(universe);
        Ok(())
    }

    /// Builder form of [`set_universe`](NeutrosophicFamily::set_universe).
    pub fn with_universe(mut self, universe: Arc<Universe>) -> Result<Self> {
        self.set_universe(universe)?;
        Ok(self)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Returns the family with the given display name. Names affect only
    /// rendering, never any predicate.
    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    /// A family with no universe is compatible with anything; otherwise
    /// the universes must be equal.
    fn require_compatible(&self, other: &Self) -> Result<()> {
        match (&self.universe, &other.universe) {
            (Some(a), Some(b)) if a.as_ref() != b.as_ref() => Err(Error::UniverseMismatch),
            _ => Ok(()),
        }
    }

    fn shared_universe(&self, other: &Self) -> Option<Arc<Universe>> {
        self.universe
            .clone()
            .or_else(|| other.universe.clone())
    }

    /// True when every member of `self` equals some member of `other`.
    /// This is member-level equality, not pointwise set inclusion.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.require_compatible(other)?;
        Ok(self.members.iter().all(|m| other.contains(m)))
    }

    pub fn is_superset(&self, other: &Self) -> Result<bool> {
        other.is_subset(self)
    }

    /// Mutual containment; order and names are ignored.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.is_subset(other)? && other.is_subset(self)?)
    }

    /// Members of `self` followed by members of `other` not already
    /// present. The result is unnamed.
    pub fn union(&self, other: &Self) -> Result<NeutrosophicFamily> {
        self.require_compatible(other)?;
        let mut out = NeutrosophicFamily {
            universe: self.shared_universe(other),
            ..NeutrosophicFamily::default()
        };
        for set in self.members.iter().chain(other.members.iter()) {
            out.push_unique(set.clone());
        }
        Ok(out)
    }

    /// Members of `self` that equal some member of `other`, in `self`'s
    /// order.
    pub fn intersection(&self, other: &Self) -> Result<NeutrosophicFamily> {
        self.require_compatible(other)?;
        let mut out = NeutrosophicFamily {
            universe: self.shared_universe(other),
            ..NeutrosophicFamily::default()
        };
        for set in &self.members {
            if other.contains(set) {
                out.push_unique(set.clone());
            }
        }
        Ok(out)
    }

    /// Members of `self` absent from `other`, in `self`'s order.
    pub fn difference(&self, other: &Self) -> Result<NeutrosophicFamily> {
        self.require_compatible(other)?;
        let mut out = NeutrosophicFamily {
            universe: self.shared_universe(other),
            ..NeutrosophicFamily::default()
        };
        for set in &self.members {
            if !other.contains(set) {
                out.push_unique(set.clone());
            }
        }
        Ok(out)
    }

    /// The family of memberwise complements, in order. Each named member
    /// yields a member named `"~"` + the original name.
    pub fn complement(&self) -> NeutrosophicFamily {
        let mut out = NeutrosophicFamily {
            universe: self.universe.clone(),
            ..NeutrosophicFamily::default()
        };
        for set in &self.members {
            out.push_unique(set.complement());
        }
        out
    }

    /// True when the two families share no member.
    pub fn is_disjoint(&self, other: &Self) -> Result<bool> {
        Ok(self.intersection(other)?.cardinality() == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::NeutrosophicTriple;

    fn triple(m: &str, i: &str, n: &str) -> NeutrosophicTriple {
        NeutrosophicTriple::new(m.parse().unwrap(), i.parse().unwrap(), n.parse().unwrap())
    }

    fn abc() -> Arc<Universe> {
        Arc::new(Universe::new(["a", "b", "c"]).unwrap())
    }

    fn set(u: &Arc<Universe>, name: &str, rows: [(&str, &str, &str); 3]) -> NeutrosophicSet {
        let triples = rows.iter().map(|(m, i, n)| triple(m, i, n)).collect();
        NeutrosophicSet::new(Arc::clone(u), triples).unwrap().named(name)
    }

    // The four sets used throughout the family algebra examples.
    fn quad(u: &Arc<Universe>) -> [NeutrosophicSet; 4] {
        [
            set(u, "A1", [("0.4", "0.4", "0.3"), ("0.1", "0.1", "0.1"), ("0.2", "0.2", "0.2")]),
            set(u, "A2", [("0.1", "0.2", "0.9"), ("0.9", "0.1", "0.3"), ("0.5", "0.3", "0.4")]),
            set(u, "A3", [("0.7", "0.3", "0.1"), ("0.8", "0.4", "0.0"), ("0.1", "0.1", "0.9")]),
            set(u, "A4", [("0.2", "0.2", "0.8"), ("0.6", "0.6", "0.3"), ("0.5", "0.4", "0.5")]),
        ]
    }

    #[test]
    fn empty_family_has_no_universe() {
        let family = NeutrosophicFamily::new([]).unwrap();
        assert_eq!(family.cardinality(), 0);
        assert!(family.universe().is_none());
        assert!(family.name().is_none());
    }

    #[test]
    fn construction_deduplicates_keeping_first() {
        let u = abc();
        let [a1, a2, ..] = quad(&u);
        let copy = a1.clone().named("copy");
        let family = NeutrosophicFamily::new([a1.clone(), a2, copy]).unwrap();
        assert_eq!(family.cardinality(), 2);
        assert_eq!(family.members()[0].name(), Some("A1"));

        let lone = NeutrosophicFamily::new([a1.clone(), a1]).unwrap();
        assert_eq!(lone.cardinality(), 1);
    }

    #[test]
    fn construction_rejects_mixed_universes() {
        let u = abc();
        let other = Arc::new(Universe::new(["x", "y", "z"]).unwrap());
        let [a1, ..] = quad(&u);
        let foreign = NeutrosophicSet::empty(other).unwrap();
        assert!(matches!(
            NeutrosophicFamily::new([a1, foreign]),
            Err(Error::UniverseMismatch)
        ));
    }

    #[test]
    fn subset_and_equality_are_member_level() {
        let u = abc();
        let [a1, a2, a3, a4] = quad(&u);
        let l1 = NeutrosophicFamily::new([a1.clone(), a2.clone(), a3.clone()]).unwrap();
        let l2 = NeutrosophicFamily::new([a3.clone(), a4.clone()]).unwrap();

        let l3 = l1.intersection(&l2).unwrap();
        assert!(l3.is_subset(&l1).unwrap());
        assert!(l1.is_superset(&l3).unwrap());
        assert!(l1.is_subset(&l1).unwrap());

        let only_a1 = NeutrosophicFamily::new([a1.clone()]).unwrap();
        let only_a2 = NeutrosophicFamily::new([a2.clone()]).unwrap();
        assert!(!only_a1.is_subset(&only_a2).unwrap());

        let forward = NeutrosophicFamily::new([a1.clone(), a2.clone()]).unwrap();
        let backward = NeutrosophicFamily::new([a2, a1]).unwrap();
        assert!(forward.equals(&backward).unwrap());
        assert!(!forward.equals(&l1).unwrap());
    }

    #[test]
    fn union_appends_new_members_in_order() {
        let u = abc();
        let [a1, a2, a3, a4] = quad(&u);
        let l1 = NeutrosophicFamily::new([a1, a2, a3.clone()]).unwrap();
        let l2 = NeutrosophicFamily::new([a3, a4]).unwrap();
        let l4 = l1.union(&l2).unwrap();
        let names: Vec<_> = l4.members().iter().map(|m| m.name().unwrap()).collect();
        assert_eq!(names, ["A1", "A2", "A3", "A4"]);
        assert!(l4.name().is_none());

        let empty = NeutrosophicFamily::default();
        assert!(l1.union(&empty).unwrap().equals(&l1).unwrap());
        assert!(l1.union(&l1).unwrap().equals(&l1).unwrap());
    }

    #[test]
    fn intersection_keeps_common_members_in_left_order() {
        let u = abc();
        let [a1, a2, a3, a4] = quad(&u);
        let l1 = NeutrosophicFamily::new([a1, a2, a3.clone()]).unwrap();
        let l2 = NeutrosophicFamily::new([a3.clone(), a4]).unwrap();
        let l3 = l1.intersection(&l2).unwrap();
        assert_eq!(l3.cardinality(), 1);
        assert_eq!(l3.members()[0], a3);

        let empty = NeutrosophicFamily::default();
        assert_eq!(l1.intersection(&empty).unwrap().cardinality(), 0);
        assert!(l1.intersection(&l1).unwrap().equals(&l1).unwrap());
    }

    #[test]
    fn difference_removes_shared_members() {
        let u = abc();
        let [a1, a2, a3, a4] = quad(&u);
        let l1 = NeutrosophicFamily::new([a1.clone(), a2.clone(), a3.clone()]).unwrap();
        let l2 = NeutrosophicFamily::new([a3, a4]).unwrap();
        let diff = l1.difference(&l2).unwrap();
        let names: Vec<_> = diff.members().iter().map(|m| m.name().unwrap()).collect();
        assert_eq!(names, ["A1", "A2"]);

        assert_eq!(l1.difference(&l1).unwrap().cardinality(), 0);
        let empty = NeutrosophicFamily::default();
        assert!(l1.difference(&empty).unwrap().equals(&l1).unwrap());
    }

    #[test]
    fn difference_plus_intersection_recovers_the_family() {
        let u = abc();
        let [a1, a2, a3, a4] = quad(&u);
        let l1 = NeutrosophicFamily::new([a1, a2, a3.clone()]).unwrap();
        let l2 = NeutrosophicFamily::new([a3, a4]).unwrap();
        let rebuilt = l1
            .difference(&l2)
            .unwrap()
            .union(&l1.intersection(&l2).unwrap())
            .unwrap();
        assert!(rebuilt.equals(&l1).unwrap());
    }

    #[test]
    fn complement_family_negates_each_member() {
        let u = abc();
        let [a1, a2, a3, a4] = quad(&u);
        let l4 = NeutrosophicFamily::new([a1, a2, a3, a4]).unwrap();
        let l5 = l4.complement();

        let expected_neg_a1 =
            set(&u, "x", [("0.3", "0.6", "0.4"), ("0.1", "0.9", "0.1"), ("0.2", "0.8", "0.2")]);
        assert_eq!(l5.members()[0], expected_neg_a1);
        assert_eq!(l5.members()[0].name(), Some("~A1"));
        let expected_neg_a3 =
            set(&u, "x", [("0.1", "0.7", "0.7"), ("0", "0.6", "0.8"), ("0.9", "0.9", "0.1")]);
        assert_eq!(l5.members()[2], expected_neg_a3);

        assert!(l5.complement().equals(&l4).unwrap());
        assert!(l4.is_disjoint(&l5).unwrap());
        assert_eq!(NeutrosophicFamily::default().complement().cardinality(), 0);
    }

    #[test]
    fn disjointness_via_intersection_cardinality() {
        let u = abc();
        let [a1, a2, ..] = quad(&u);
        let f = NeutrosophicFamily::new([a1.clone(), a2]).unwrap();
        assert!(!f.is_disjoint(&f).unwrap());
        assert!(f.is_disjoint(&NeutrosophicFamily::default()).unwrap());
    }

    #[test]
    fn universe_can_be_set_on_empty_families_only_when_consistent() {
        let u = abc();
        let mut empty = NeutrosophicFamily::default();
        empty.set_universe(Arc::clone(&u)).unwrap();
        assert_eq!(empty.universe().unwrap().as_ref(), u.as_ref());
        assert_eq!(empty.cardinality(), 0);

        let [a1, ..] = quad(&u);
        let family = NeutrosophicFamily::new([a1]).unwrap();
        assert_eq!(family.universe().unwrap().as_ref(), u.as_ref());

        let other = Arc::new(Universe::new(["x"]).unwrap());
        let mut family = family;
        assert!(matches!(family.set_universe(other), Err(Error::UniverseMismatch)));
    }

    #[test]
    fn names_are_display_metadata() {
        let u = abc();
        let [a1, ..] = quad(&u);
        let named = NeutrosophicFamily::new([a1.clone()]).unwrap().named("L");
        assert_eq!(named.name(), Some("L"));
        let anonymous = NeutrosophicFamily::new([a1]).unwrap();
        assert!(anonymous.name().is_none());
        assert!(named.equals(&anonymous).unwrap());
    }
}
