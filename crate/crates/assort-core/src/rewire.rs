//! Degree-preserving edge-pair rewiring, the greedy heuristics A/B/C, the
//! per-class meta-graphs, and counterexample counting.
//!
//! A rewiring removes two disjoint edges (ij, kl) and adds either (ik, jl)
//! or (il, jk). A rewiring is invalid if the result is not simple or not
//! connected.

use alloc::vec::Vec;
use hashbrown::{HashMap, HashSet};

use crate::canon::canonical_graph;
use crate::enumerate::{degree_classes, enumerate_connected, EnumError, GraphCatalog};
use crate::graph::{DegreeSequence, Graph};

/// The three greedy rewiring acceptance rules: A keeps moves with a
/// non-negative S-metric change, B keeps moves attaining the maximum change,
/// C keeps moves satisfying both.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum HeuristicKind {
    A,
    B,
    C,
}

impl HeuristicKind {
    pub const ALL: [HeuristicKind; 3] = [HeuristicKind::A, HeuristicKind::B, HeuristicKind::C];

    pub fn index(self) -> usize {
        match self {
            HeuristicKind::A => 0,
            HeuristicKind::B => 1,
            HeuristicKind::C => 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            HeuristicKind::A => 'A',
            HeuristicKind::B => 'B',
            HeuristicKind::C => 'C',
        }
    }
}

/// Removal of edges (ij, kl) on four distinct vertices, re-adding either
/// (ik, jl) (`crossed == false`) or (il, jk) (`crossed == true`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RewireMove {
    pub ij: (usize, usize),
    pub kl: (usize, usize),
    pub crossed: bool,
}

impl RewireMove {
    /// The two edges added by this move.
    pub fn added(&self) -> ((usize, usize), (usize, usize)) {
        let (i, j) = self.ij;
        let (k, l) = self.kl;
        if self.crossed {
            ((i, l), (j, k))
        } else {
            ((i, k), (j, l))
        }
    }
}

/// S-metric change of a move: for option (ik, jl) this is
/// (d_i d_k + d_j d_l) - (d_i d_j + d_k d_l), and analogously when crossed.
/// Equals s(G') - s(G) exactly, since all degrees are preserved.
pub fn delta(g: &Graph, mv: &RewireMove) -> i64 {
    let (i, j) = mv.ij;
    let (k, l) = mv.kl;
    let (di, dj) = (g.degree(i) as i64, g.degree(j) as i64);
    let (dk, dl) = (g.degree(k) as i64, g.degree(l) as i64);
    let gained = if mv.crossed {
        di * dl + dj * dk
    } else {
        di * dk + dj * dl
    };
    gained - (di * dj + dk * dl)
}

fn apply(g: &Graph, mv: &RewireMove) -> Option<Graph> {
    let (e1, e2) = mv.added();
    let mut h = *g;
    h.remove_edge(mv.ij.0, mv.ij.1);
    h.remove_edge(mv.kl.0, mv.kl.1);
    // simplicity: both new edges must be absent after removal
    if h.has_edge(e1.0, e1.1) || h.has_edge(e2.0, e2.1) {
        return None;
    }
    h.add_edge(e1.0, e1.1);
    h.add_edge(e2.0, e2.1);
    if !h.is_connected() {
        return None;
    }
    Some(h)
}

/// All valid single rewirings of `g`: unordered disjoint edge pairs, both
/// options, filtered to simple connected results. Results stay labeled.
pub fn valid_rewirings(g: &Graph) -> Vec<(RewireMove, Graph, i64)> {
    let edges = g.edges();
    let mut out = Vec::new();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            let (i, j) = edges[a];
            let (k, l) = edges[b];
            if i == k || i == l || j == k || j == l {
                continue;
            }
            for crossed in [false, true] {
                let mv = RewireMove {
                    ij: (i, j),
                    kl: (k, l),
                    crossed,
                };
                if let Some(h) = apply(g, &mv) {
                    out.push((mv, h, delta(g, &mv)));
                }
            }
        }
    }
    out
}

/// The heuristic-approved rewiring results of `g`, deduplicated as labeled
/// graphs. Heuristic B maximizes the S-metric change over all valid moves
/// even when that maximum is negative.
pub fn neighborhood(g: &Graph, h: HeuristicKind) -> Vec<Graph> {
    let moves = valid_rewirings(g);
    let max_delta = moves.iter().map(|&(_, _, d)| d).max();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (_, result, d) in moves {
        let keep = match h {
            HeuristicKind::A => d >= 0,
            HeuristicKind::B => Some(d) == max_delta,
            HeuristicKind::C => d >= 0 && Some(d) == max_delta,
        };
        if keep && seen.insert(result) {
            out.push(result);
        }
    }
    out
}

/// Meta-graph of one degree class: vertices are the class members; the
/// undirected edges connect members related by any valid rewiring (Taylor's
/// meta-graph), and each heuristic keeps a directed subset. Self-loops are
/// retained.
#[derive(Clone, Debug)]
pub struct MetaGraph {
    pub key: DegreeSequence,
    /// Canonically labeled representatives of the class members.
    pub members: Vec<Graph>,
    /// Member positions attaining the maximum S-metric.
    pub optimal: Vec<usize>,
    /// Unordered pairs (i, j) with i <= j, including self-loops.
    pub undirected: Vec<(usize, usize)>,
    /// Ordered pairs per heuristic (indexed by `HeuristicKind::index`).
    pub directed: [Vec<(usize, usize)>; 3],
    pub s_values: Vec<u64>,
    pub alpha_eq2: Vec<Option<f64>>,
    pub alpha_newman: Vec<Option<f64>>,
}

/// Builds the meta-graph over the given class members (canonically labeled,
/// as stored in a [`GraphCatalog`]).
pub fn build_meta_graph(key: DegreeSequence, members: &[Graph]) -> MetaGraph {
    let index: HashMap<u128, usize> = members
        .iter()
        .enumerate()
        .map(|(i, g)| (g.triangle_bits(), i))
        .collect();
    let mut undirected = HashSet::new();
    let mut directed: [HashSet<(usize, usize)>; 3] = Default::default();
    for (i, g) in members.iter().enumerate() {
        let moves = valid_rewirings(g);
        let max_delta = moves.iter().map(|&(_, _, d)| d).max();
        let mut targets: HashMap<Graph, usize> = HashMap::new();
        for &(_, result, _) in &moves {
            if let hashbrown::hash_map::Entry::Vacant(e) = targets.entry(result) {
                let bits = canonical_graph(&result).triangle_bits();
                let k = *index
                    .get(&bits)
                    .expect("rewiring result must stay in the degree class");
                e.insert(k);
            }
        }
        for (_, result, d) in moves {
            let k = targets[&result];
            undirected.insert((i.min(k), i.max(k)));
            if d >= 0 {
                directed[HeuristicKind::A.index()].insert((i, k));
            }
            if Some(d) == max_delta {
                directed[HeuristicKind::B.index()].insert((i, k));
                if d >= 0 {
                    directed[HeuristicKind::C.index()].insert((i, k));
                }
            }
        }
    }
    let s_values: Vec<u64> = members.iter().map(|g| g.s_metric()).collect();
    let max_s = *s_values.iter().max().unwrap();
    let optimal = (0..members.len())
        .filter(|&i| s_values[i] == max_s)
        .collect();
    let mut undirected: Vec<_> = undirected.into_iter().collect();
    undirected.sort_unstable();
    let directed = directed.map(|set| {
        let mut v: Vec<_> = set.into_iter().collect();
        v.sort_unstable();
        v
    });
    MetaGraph {
        key,
        alpha_eq2: members.iter().map(|g| g.assortativity_eq2()).collect(),
        alpha_newman: members.iter().map(|g| g.assortativity_newman()).collect(),
        members: members.to_vec(),
        optimal,
        undirected,
        directed,
        s_values,
    }
}

impl MetaGraph {
    /// True iff the undirected meta-graph with self-loops removed is
    /// connected (Taylor's theorem says it always is).
    pub fn taylor_connected(&self) -> bool {
        let n = self.members.len();
        if n <= 1 {
            return true;
        }
        let mut adj: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
        for &(i, j) in &self.undirected {
            if i != j {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
        let mut seen = alloc::vec![false; n];
        let mut stack = alloc::vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Members with no directed path under `h` to any optimal member.
    /// Self-loops cannot contribute to reachability and are skipped.
    pub fn unreachable_members(&self, h: HeuristicKind) -> Vec<usize> {
        let n = self.members.len();
        let mut reaches = alloc::vec![false; n];
        let mut stack: Vec<usize> = Vec::new();
        for &i in &self.optimal {
            reaches[i] = true;
            stack.push(i);
        }
        // reverse reachability from the optimal set
        let mut rev: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
        for &(i, k) in &self.directed[h.index()] {
            if i != k {
                rev[k].push(i);
            }
        }
        while let Some(v) = stack.pop() {
            for &w in &rev[v] {
                if !reaches[w] {
                    reaches[w] = true;
                    stack.push(w);
                }
            }
        }
        (0..n).filter(|&i| !reaches[i]).collect()
    }

    pub fn has_self_loop(&self, member: usize, h: HeuristicKind) -> bool {
        self.directed[h.index()].contains(&(member, member))
    }
}

/// One row of the rewiring counterexample table: per heuristic, the number
/// of stuck graphs and of degree sequences containing at least one.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RewireCounts {
    pub order: usize,
    pub num_graphs: usize,
    pub num_sequences: usize,
    /// (stuck graphs, sequences with >= 1 stuck graph) per heuristic.
    pub per_heuristic: [(usize, usize); 3],
}

impl RewireCounts {
    pub fn accumulate(&mut self, unreachable: &[Vec<usize>; 3]) {
        for (h, stuck) in unreachable.iter().enumerate() {
            if !stuck.is_empty() {
                self.per_heuristic[h].0 += stuck.len();
                self.per_heuristic[h].1 += 1;
            }
        }
    }
}

/// Per-class unreachable member sets for all three heuristics.
pub fn class_counterexamples(mg: &MetaGraph) -> [Vec<usize>; 3] {
    HeuristicKind::ALL.map(|h| mg.unreachable_members(h))
}

/// Builds every class meta-graph of order `n` and counts the stuck members.
pub fn count_rewiring_counterexamples(n: usize) -> Result<RewireCounts, EnumError> {
    let catalog = enumerate_connected(n)?;
    Ok(count_rewiring_counterexamples_in(&catalog))
}

pub fn count_rewiring_counterexamples_in(catalog: &GraphCatalog) -> RewireCounts {
    let classes = degree_classes(catalog);
    let mut row = RewireCounts {
        order: catalog.order(),
        num_graphs: catalog.len(),
        num_sequences: classes.len(),
        per_heuristic: [(0, 0); 3],
    };
    for class in &classes {
        let members: Vec<Graph> = class
            .members
            .iter()
            .map(|&i| catalog.graphs()[i])
            .collect();
        let mg = build_meta_graph(class.key.clone(), &members);
        row.accumulate(&class_counterexamples(&mg));
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g0a() -> Graph {
        Graph::from_edges(
            7,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (0, 3),
                (1, 3),
                (2, 3),
                (0, 4),
                (1, 4),
                (2, 4),
                (0, 5),
                (1, 5),
                (2, 5),
                (3, 6),
                (4, 6),
            ],
        )
    }

    #[test]
    fn delta_table_rows() {
        let g = g0a();
        // remove (43,57), add (45,37): 1-based labels from the table
        let mv = RewireMove {
            ij: (3, 2),
            kl: (4, 6),
            crossed: false,
        };
        assert_eq!(delta(&g, &mv), -2);
        // remove (47,63), add (46,73)
        let mv = RewireMove {
            ij: (3, 6),
            kl: (5, 2),
            crossed: false,
        };
        assert_eq!(delta(&g, &mv), -1);
    }

    #[test]
    fn delta_cancels_for_equal_degrees() {
        // with d_i = d_j = d_k the (ik,jl) change collapses to zero
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (1, 4), (3, 5), (0, 2)]);
        let mv = RewireMove {
            ij: (0, 1),
            kl: (2, 3),
            crossed: false,
        };
        assert_eq!(g.degree(0), g.degree(1));
        assert_eq!(g.degree(0), g.degree(2));
        assert_eq!(delta(&g, &mv), 0);
    }

    #[test]
    fn delta_equals_s_difference() {
        let g = g0a();
        for (mv, h, d) in valid_rewirings(&g) {
            assert_eq!(h.s_metric() as i64 - g.s_metric() as i64, d);
            assert_eq!(delta(&g, &mv), d);
            assert_eq!(h.degree_sequence(), g.degree_sequence());
        }
    }

    #[test]
    fn no_disjoint_edges_in_triangle() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        assert!(valid_rewirings(&k3).is_empty());
    }

    #[test]
    fn four_cycle_rewires_only_to_itself() {
        // brute force over the 2 disjoint edge pairs x 2 options: the crossed
        // options collide with existing edges; the straight options swap a
        // pair of opposite edges for the diagonals, giving a relabeled 4-cycle
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let moves = valid_rewirings(&c4);
        assert_eq!(moves.len(), 2);
        for (_, h, d) in moves {
            assert_eq!(d, 0);
            assert!(crate::canon::is_isomorphic(&h, &c4));
        }
    }

    #[test]
    fn g0a_matches_table_one() {
        let moves = valid_rewirings(&g0a());
        assert_eq!(moves.len(), 12);
        let mut deltas: Vec<i64> = moves.iter().map(|&(_, _, d)| d).collect();
        deltas.sort_unstable();
        assert_eq!(deltas, [-2, -2, -2, -2, -2, -2, -1, -1, -1, -1, -1, -1]);
        // each of the twelve disjoint edge pairs admits exactly one valid
        // option; the other is always invalid
        let mut pairs: Vec<_> = moves.iter().map(|(mv, _, _)| (mv.ij, mv.kl)).collect();
        pairs.sort_unstable();
        pairs.dedup();
        assert_eq!(pairs.len(), 12);
    }

    #[test]
    fn g0a_neighborhoods() {
        let g = g0a();
        assert!(neighborhood(&g, HeuristicKind::A).is_empty());
        let b = neighborhood(&g, HeuristicKind::B);
        assert!(!b.is_empty());
        for h in &b {
            assert_eq!(h.s_metric() as i64 - g.s_metric() as i64, -1);
        }
        assert!(neighborhood(&g, HeuristicKind::C).is_empty());
    }
}
