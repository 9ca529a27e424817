//! Isomorph-free generation of all simple connected graphs of a given order,
//! and their partition into degree classes.
//!
//! Generation is by canonical vertex augmentation: graphs of order k are
//! extended by one new vertex with every neighbor subset, and a child is kept
//! only when the new vertex lies in the automorphism orbit of the canonical
//! deletion vertex (the vertex placed last by the canonical labeling).
//! Isomorphic duplicates from orbit-equivalent neighbor subsets of the same
//! parent are removed locally; distinct parents cannot collide.

use alloc::vec::Vec;
use hashbrown::{HashMap, HashSet};

use crate::canon::{canonical_form_marked, canonical_labeling};
use crate::graph::{DegreeSequence, Graph, MAX_ORDER};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EnumError {
    /// Requested order is outside the supported range 1..=12.
    OrderOutOfRange(usize),
}

impl core::fmt::Display for EnumError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EnumError::OrderOutOfRange(n) => {
                write!(f, "order {} outside supported range 1..={}", n, MAX_ORDER)
            }
        }
    }
}

/// One canonically-labeled representative per isomorphism class of simple
/// connected graphs of a fixed order, sorted by canonical encoding.
#[derive(Clone, Debug)]
pub struct GraphCatalog {
    n: usize,
    graphs: Vec<Graph>,
    index: HashMap<u128, usize>,
}

impl GraphCatalog {
    /// Builds a catalog from canonically-labeled representatives. Sorts and
    /// indexes; the caller guarantees the entries are canonical and distinct.
    pub fn from_canonical_graphs(n: usize, mut graphs: Vec<Graph>) -> GraphCatalog {
        graphs.sort_unstable_by_key(|g| g.triangle_bits());
        let index = graphs
            .iter()
            .enumerate()
            .map(|(i, g)| (g.triangle_bits(), i))
            .collect();
        GraphCatalog { n, graphs, index }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    /// Position of the isomorphism class of `g`, which must be canonically
    /// labeled (as produced by [`crate::canon::canonical_graph`]).
    pub fn position_of_canonical(&self, bits: u128) -> Option<usize> {
        self.index.get(&bits).copied()
    }
}

impl PartialEq for GraphCatalog {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.graphs == other.graphs
    }
}
impl Eq for GraphCatalog {}

/// The set W^(n)_d for one degree sequence: member positions into the
/// catalog, with the subset attaining the maximum S-metric.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeClass {
    pub key: DegreeSequence,
    pub members: Vec<usize>,
    pub optimal_members: Vec<usize>,
}

/// All accepted canonical children of `parent` (order k -> k+1), canonically
/// labeled. Exposed so drivers can fan the augmentation tree out in parallel.
pub fn accepted_children(parent: &Graph) -> Vec<Graph> {
    let k = parent.order();
    debug_assert!(k < MAX_ORDER);
    let v = k; // index of the new vertex
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for subset in 0..(1u16 << k) {
        let mut child = Graph::new(k + 1);
        for (a, b) in parent.edges() {
            child.add_edge(a, b);
        }
        let mut bits = subset;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            child.add_edge(u, v);
        }
        let (form, perm) = canonical_labeling(&child);
        let last = perm.iter().position(|&p| p == k).unwrap();
        let accept = last == v
            || canonical_form_marked(&child, v) == canonical_form_marked(&child, last);
        if accept && seen.insert(form.bits) {
            out.push(child.relabel(&perm));
        }
    }
    out
}

/// All non-isomorphic simple graphs (connected or not) of order `n`.
pub fn enumerate_all(n: usize) -> Result<GraphCatalog, EnumError> {
    if n < 1 || n > MAX_ORDER {
        return Err(EnumError::OrderOutOfRange(n));
    }
    let mut level = alloc::vec![Graph::new(1)];
    for _ in 1..n {
        let mut next = Vec::new();
        for parent in &level {
            next.extend(accepted_children(parent));
        }
        level = next;
    }
    Ok(GraphCatalog::from_canonical_graphs(n, level))
}

/// Exactly one representative per isomorphism class of simple *connected*
/// graphs of order `n`, in canonical-form-sorted order.
pub fn enumerate_connected(n: usize) -> Result<GraphCatalog, EnumError> {
    let all = enumerate_all(n)?;
    let connected = all
        .graphs()
        .iter()
        .filter(|g| g.is_connected())
        .copied()
        .collect();
    Ok(GraphCatalog::from_canonical_graphs(n, connected))
}

/// Partition of the catalog by degree sequence, keys in sorted order, with
/// each class carrying its argmax-of-S subset.
pub fn degree_classes(catalog: &GraphCatalog) -> Vec<DegreeClass> {
    let mut by_key: HashMap<DegreeSequence, Vec<usize>> = HashMap::new();
    for (i, g) in catalog.graphs().iter().enumerate() {
        by_key.entry(g.degree_sequence()).or_default().push(i);
    }
    let mut classes: Vec<DegreeClass> = by_key
        .into_iter()
        .map(|(key, members)| {
            let max_s = members
                .iter()
                .map(|&i| catalog.graphs()[i].s_metric())
                .max()
                .unwrap();
            let optimal_members = members
                .iter()
                .copied()
                .filter(|&i| catalog.graphs()[i].s_metric() == max_s)
                .collect();
            DegreeClass {
                key,
                members,
                optimal_members,
            }
        })
        .collect();
    classes.sort_by(|a, b| a.key.cmp(&b.key));
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    #[test]
    fn tiny_connected_counts() {
        for (n, want) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)] {
            assert_eq!(enumerate_connected(n).unwrap().len(), want, "n={}", n);
        }
    }

    #[test]
    fn tiny_all_counts() {
        for (n, want) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
            assert_eq!(enumerate_all(n).unwrap().len(), want, "n={}", n);
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(
            enumerate_connected(13),
            Err(EnumError::OrderOutOfRange(13))
        ));
        assert!(enumerate_connected(0).is_err());
    }

    /// Brute force over all labeled graphs, canonical dedup — the independent
    /// cross-check of the augmentation generator at tiny orders.
    fn brute_force_connected(n: usize) -> usize {
        let pairs = n * (n - 1) / 2;
        let mut forms = HashSet::new();
        for mask in 0u32..1 << pairs {
            let mut g = Graph::new(n);
            let mut idx = 0;
            for v in 1..n {
                for u in 0..v {
                    if mask >> idx & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    idx += 1;
                }
            }
            if g.is_connected() {
                forms.insert(canonical_form(&g));
            }
        }
        forms.len()
    }

    #[test]
    fn brute_force_cross_check() {
        for n in 1..=5 {
            assert_eq!(
                enumerate_connected(n).unwrap().len(),
                brute_force_connected(n),
                "n={}",
                n
            );
        }
    }

    #[test]
    fn catalog_entries_are_connected_simple_distinct() {
        let cat = enumerate_connected(6).unwrap();
        let mut forms = HashSet::new();
        for g in cat.graphs() {
            assert!(g.is_connected());
            assert!(forms.insert(canonical_form(g)));
            assert_eq!(g.triangle_bits(), canonical_form(g).bits);
        }
    }

    #[test]
    fn classes_partition_catalog() {
        let cat = enumerate_connected(6).unwrap();
        let classes = degree_classes(&cat);
        assert_eq!(classes.len(), 68);
        let total: usize = classes.iter().map(|c| c.members.len()).sum();
        assert_eq!(total, cat.len());
        for c in &classes {
            assert!(!c.optimal_members.is_empty());
            for &i in &c.members {
                assert_eq!(cat.graphs()[i].degree_sequence(), c.key);
            }
        }
    }

    #[test]
    fn triangle_class_is_singleton_and_optimal() {
        let cat = enumerate_connected(3).unwrap();
        let classes = degree_classes(&cat);
        let tri = classes
            .iter()
            .find(|c| c.key.degrees() == [2, 2, 2])
            .unwrap();
        assert_eq!(tri.members.len(), 1);
        assert_eq!(tri.optimal_members, tri.members);
    }
}
