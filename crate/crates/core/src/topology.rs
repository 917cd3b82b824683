//! Topology generation from bases and sub-bases, closure checks, the
//! topology axioms and a closure-fixpoint construction of the generated
//! topology.
//!
//! Roles are positional, not typed: a sub-basis, a basis and a topology
//! are all plain [`NeutrosophicFamily`] values. Generation enumerates
//! subsets of the input family by increasing size and, within a size,
//! lexicographically by member index, which makes member order and
//! derived names reproducible across runs.

use std::collections::HashSet;
use std::sync::Arc;

use crate::family::NeutrosophicFamily;
use crate::format;
use crate::set::NeutrosophicSet;
use crate::{Error, Result};

/// Default cap on the cardinality of families fed to the generators.
/// A family of `n` sets drives `2^n - 1` subset combinations, so the cap
/// keeps generation a clean error instead of an out-of-memory failure.
pub const DEFAULT_SIZE_CAP: usize = 20;

/// The first reason a family fails to be a neutrosophic topology, in
/// axiom order. Indices refer to the family's member order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopologyViolation {
    MissingEmptySet,
    MissingAbsoluteSet,
    UnionNotClosed { left: usize, right: usize },
    IntersectionNotClosed { left: usize, right: usize },
}

fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::ResourceLimit { size, cap })
    } else {
        Ok(())
    }
}

/// Largest member count the fixpoint may reach before giving up:
/// `2^cap + 1`, the same bound direct generation can produce.
fn member_bound(cap: usize) -> usize {
    1usize
        .checked_shl(cap as u32)
        .map_or(usize::MAX, |v| v.saturating_add(1))
}

/// Visits all `k`-subsets of `0..n` in lexicographic order.
fn visit_combinations<E, F>(
    n: usize,
    k: usize,
    start: usize,
    current: &mut Vec<usize>,
    visit: &mut F,
) -> std::result::Result<(), E>
where
    F: FnMut(&[usize]) -> std::result::Result<(), E>,
{
    if current.len() == k {
        return visit(current);
    }
    for i in start..n {
        current.push(i);
        visit_combinations(n, k, i + 1, current, visit)?;
        current.pop();
    }
    Ok(())
}

impl NeutrosophicFamily {
    /// Generates the topological basis of this family taken as a
    /// sub-basis: the intersections of all non-empty subsets of members,
    /// enumerated by increasing size then lexicographically, deduplicated
    /// keeping the first occurrence.
    ///
    /// Each intersection is named by joining its parts' names with `∩`;
    /// an intersection equal to a sub-basis member takes over that
    /// member's name. The absolute set is not added here; it enters in
    /// [`topology_from_base`](NeutrosophicFamily::topology_from_base).
    pub fn generate_base(&self, cap: usize) -> Result<NeutrosophicFamily> {
        let universe = self.universe().cloned().ok_or(Error::MissingUniverse)?;
        check_cap(self.cardinality(), cap)?;
        let members = self.members();
        let mut collected = Vec::new();
        for size in 1..=members.len() {
            let mut indices = Vec::with_capacity(size);
            visit_combinations(members.len(), size, 0, &mut indices, &mut |combo: &[usize]| {
                let mut meet =
                    NeutrosophicSet::intersection_all(combo.iter().map(|&i| &members[i]))?;
                meet.set_name(format::intersection_name(
                    combo.iter().map(|&i| members[i].name()),
                ));
                if let Some(original) = self.find(&meet) {
                    meet.set_name(original.name().map(str::to_owned));
                }
                collected.push(meet);
                Ok(())
            })?;
        }
        NeutrosophicFamily::new(collected)?.with_universe(universe)
    }

    /// Generates the topology spanned by this family taken as a basis:
    /// the empty set, the unions of all non-empty subsets of members
    /// (same enumeration order as
    /// [`generate_base`](NeutrosophicFamily::generate_base)), and the
    /// absolute set, deduplicated keeping the first occurrence.
    ///
    /// Unions are named by joining parts' names with `∪`, parenthesizing
    /// parts that contain `∩`; a union equal to a basis member takes over
    /// that member's name.
    pub fn topology_from_base(&self, cap: usize) -> Result<NeutrosophicFamily> {
        let universe = self.universe().cloned().ok_or(Error::MissingUniverse)?;
        check_cap(self.cardinality(), cap)?;
        let members = self.members();
        let mut collected = vec![NeutrosophicSet::empty(Arc::clone(&universe))?];
        for size in 1..=members.len() {
            let mut indices = Vec::with_capacity(size);
            visit_combinations(members.len(), size, 0, &mut indices, &mut |combo: &[usize]| {
                let mut join = NeutrosophicSet::union_all(combo.iter().map(|&i| &members[i]))?;
                join.set_name(format::union_name(combo.iter().map(|&i| members[i].name())));
                if let Some(original) = self.find(&join) {
                    join.set_name(original.name().map(str::to_owned));
                }
                collected.push(join);
                Ok(())
            })?;
        }
        collected.push(NeutrosophicSet::absolute(Arc::clone(&universe))?);
        NeutrosophicFamily::new(collected)?.with_universe(universe)
    }

    /// Generates the topology of this family taken as a sub-basis:
    /// the basis of all finite intersections, then all unions of that
    /// basis. The cap applies to this family and to the intermediate
    /// basis.
    pub fn topology_from_subbase(&self, cap: usize) -> Result<NeutrosophicFamily> {
        self.generate_base(cap)?.topology_from_base(cap)
    }

    fn first_unclosed_pair<F>(&self, combine: F) -> Option<(usize, usize)>
    where
        F: Fn(&NeutrosophicSet, &NeutrosophicSet) -> Result<NeutrosophicSet>,
    {
        let members = self.members();
        for i in 0..members.len() {
            for j in (i + 1)..members.len() {
                let combined = combine(&members[i], &members[j])
                    .expect("family members share one universe");
                if !self.contains(&combined) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// True when the union of every pair of members is a member. Because
    /// binary union is associative, commutative and idempotent, closure
    /// under pairs is equivalent to closure under every finite fold.
    pub fn is_union_closed(&self) -> bool {
        self.first_unclosed_pair(|a, b| a.union(b)).is_none()
    }

    /// True when the intersection of every pair of members is a member.
    pub fn is_intersection_closed(&self) -> bool {
        self.first_unclosed_pair(|a, b| a.intersection(b)).is_none()
    }

    /// The first violated topology axiom, or `None` when this family is a
    /// neutrosophic topology: the empty set is a member, the absolute set
    /// is a member, and the family is closed under union and
    /// intersection.
    pub fn topology_violation(&self) -> Result<Option<TopologyViolation>> {
        let universe = self.universe().cloned().ok_or(Error::MissingUniverse)?;
        let empty = NeutrosophicSet::empty(Arc::clone(&universe))?;
        if !self.contains(&empty) {
            return Ok(Some(TopologyViolation::MissingEmptySet));
        }
        let absolute = NeutrosophicSet::absolute(universe)?;
        if !self.contains(&absolute) {
            return Ok(Some(TopologyViolation::MissingAbsoluteSet));
        }
        if let Some((left, right)) = self.first_unclosed_pair(|a, b| a.union(b)) {
            return Ok(Some(TopologyViolation::UnionNotClosed { left, right }));
        }
        if let Some((left, right)) = self.first_unclosed_pair(|a, b| a.intersection(b)) {
            return Ok(Some(TopologyViolation::IntersectionNotClosed { left, right }));
        }
        Ok(None)
    }

    /// Whether this family satisfies the four topology axioms.
    pub fn is_neutrosophic_topology(&self) -> Result<bool> {
        Ok(self.topology_violation()?.is_none())
    }
}

/// True when `first` is coarser than (contained in) `second`. Both
/// arguments must be neutrosophic topologies.
pub fn is_coarser(first: &NeutrosophicFamily, second: &NeutrosophicFamily) -> Result<bool> {
    for family in [first, second] {
        if !family.is_neutrosophic_topology()? {
            return Err(Error::NotATopology);
        }
    }
    first.is_subset(second)
}

/// True when `first` is finer than (contains) `second`.
pub fn is_finer(first: &NeutrosophicFamily, second: &NeutrosophicFamily) -> Result<bool> {
    is_coarser(second, first)
}

/// Intersects a non-empty collection of topologies over one universe.
/// The result is checked to be a topology again before it is returned.
pub fn intersect_topologies<'a, I>(topologies: I) -> Result<NeutrosophicFamily>
where
    I: IntoIterator<Item = &'a NeutrosophicFamily>,
{
    let mut iter = topologies.into_iter();
    let first = iter.next().ok_or(Error::EmptyArgument)?;
    if !first.is_neutrosophic_topology()? {
        return Err(Error::NotATopology);
    }
    let mut combined = first.clone();
    combined.set_name(None);
    for family in iter {
        if !family.is_neutrosophic_topology()? {
            return Err(Error::NotATopology);
        }
        combined = combined.intersection(family)?;
    }
    assert!(
        combined.is_neutrosophic_topology()?,
        "intersection of neutrosophic topologies must be a neutrosophic topology"
    );
    Ok(combined)
}

fn add(
    members: &mut Vec<NeutrosophicSet>,
    seen: &mut HashSet<NeutrosophicSet>,
    set: NeutrosophicSet,
) -> bool {
    if seen.insert(set.clone()) {
        members.push(set);
        true
    } else {
        false
    }
}

/// Saturates `seed ∪ {empty, absolute}` under binary union and
/// intersection. The result is the smallest neutrosophic topology
/// containing the seed family, built without subset enumeration, as an
/// independent construction of the generated topology.
pub fn closure_fixpoint(seed: &NeutrosophicFamily, cap: usize) -> Result<NeutrosophicFamily> {
    let universe = seed.universe().cloned().ok_or(Error::MissingUniverse)?;
    check_cap(seed.cardinality(), cap)?;
    let bound = member_bound(cap);

    let mut members = Vec::new();
    let mut seen = HashSet::new();
    for set in seed.members() {
        add(&mut members, &mut seen, set.clone());
    }
    add(&mut members, &mut seen, NeutrosophicSet::empty(Arc::clone(&universe))?);
    add(&mut members, &mut seen, NeutrosophicSet::absolute(Arc::clone(&universe))?);

    let mut changed = true;
    while changed {
        changed = false;
        let snapshot = members.len();
        for i in 0..snapshot {
            for j in (i + 1)..snapshot {
                let joined = members[i].union(&members[j])?;
                let met = members[i].intersection(&members[j])?;
                changed |= add(&mut members, &mut seen, joined);
                changed |= add(&mut members, &mut seen, met);
                if members.len() > bound {
                    return Err(Error::ResourceLimit { size: members.len(), cap: bound });
                }
            }
        }
    }
    NeutrosophicFamily::new(members)?.with_universe(universe)
}
