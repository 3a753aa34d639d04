#![allow(dead_code)]

use proptest::prelude::*;
use proptest::sample::Index;
use quiver_hh_core::digraph::{bouquet, cyclic, linear, point, Digraph};
use quiver_hh_core::fincat::{
    chain_poset, cyclic_group, idempotent_monoid, parallel_pair, symmetric_group, walking_arrow,
    walking_iso, FinCat,
};

/// Categories with at most eight morphisms.
pub fn small_categories() -> Vec<(&'static str, FinCat)> {
    vec![
        ("arrow", walking_arrow()),
        ("iso", walking_iso()),
        ("parallel", parallel_pair()),
        ("idempotent", idempotent_monoid()),
        ("Z/2", cyclic_group(2)),
        ("Z/3", cyclic_group(3)),
        ("Z/4", cyclic_group(4)),
        ("S3", symmetric_group(3)),
        ("chain3", chain_poset(3)),
    ]
}

pub fn small_graphs() -> Vec<Digraph> {
    vec![
        point(),
        linear(1),
        linear(2),
        cyclic(1).unwrap(),
        cyclic(2).unwrap(),
        cyclic(3).unwrap(),
        bouquet(2),
    ]
}

/// Draws choices from a pre-generated list of proptest indices.
#[derive(Debug, Clone)]
pub struct Picker {
    indices: Vec<Index>,
    at: usize,
}

impl Picker {
    pub fn new(indices: Vec<Index>) -> Self {
        Picker { indices, at: 0 }
    }

    pub fn index(&mut self, len: usize) -> usize {
        let i = self.indices[self.at % self.indices.len()].index(len);
        self.at += 1;
        i
    }

    pub fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        &xs[self.index(xs.len())]
    }
}

pub fn picker() -> impl Strategy<Value = Picker> {
    proptest::collection::vec(any::<Index>(), 32).prop_map(Picker::new)
}

/// A digraph on `1..=max_v` vertices with at most `max_e` edges.
pub fn digraph(max_v: usize, max_e: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_v).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=max_e).prop_map(move |es| {
            Digraph::new(
                (0..n).map(|i| i.to_string()),
                es.iter()
                    .enumerate()
                    .map(|(i, &(a, b))| (format!("e{i}"), a.to_string(), b.to_string())),
            )
            .unwrap()
        })
    })
}
