//! Shared proptest strategies for sets and families over small universes
//! with tenth-valued degrees.

// Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use std::sync::Arc;

use nstopo_core::{Degree, NeutrosophicFamily, NeutrosophicSet, NeutrosophicTriple, Universe};
use proptest::collection::vec;
use proptest::prelude::*;

pub fn tenth() -> impl Strategy<Value = Degree> {
    (0..=10i64).prop_map(|n| Degree::from_ratio(n, 10).unwrap())
}

pub fn triple() -> impl Strategy<Value = NeutrosophicTriple> {
    (tenth(), tenth(), tenth()).prop_map(|(m, i, n)| NeutrosophicTriple::new(m, i, n))
}

pub fn universe(size: usize) -> Arc<Universe> {
    Arc::new(Universe::new((1..=size).map(|i| format!("u{i}"))).unwrap())
}

/// `count` sets over one random universe of 1 to 4 elements.
pub fn sets(count: usize) -> impl Strategy<Value = Vec<NeutrosophicSet>> {
    (1..=4usize).prop_flat_map(move |size| {
        let u = universe(size);
        vec(vec(triple(), size), count).prop_map(move |rows| {
            rows.into_iter()
                .map(|row| NeutrosophicSet::new(Arc::clone(&u), row).unwrap())
                .collect()
        })
    })
}

/// A family of 0 to `max_members` sets over one random universe of 1 to 4
/// elements, each member named `S1`, `S2`, … The universe is attached
/// even when the family is empty.
pub fn family(max_members: usize) -> impl Strategy<Value = NeutrosophicFamily> {
    (1..=4usize, 0..=max_members).prop_flat_map(move |(size, count)| {
        let u = universe(size);
        vec(vec(triple(), size), count).prop_map(move |rows| {
            let members = rows.into_iter().enumerate().map(|(i, row)| {
                NeutrosophicSet::new(Arc::clone(&u), row)
                    .unwrap()
                    .named(format!("S{}", i + 1))
            });
            NeutrosophicFamily::new(members)
                .unwrap()
                .with_universe(Arc::clone(&u))
                .unwrap()
        })
    })
}
