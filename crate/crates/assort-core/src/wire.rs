//! The greedy wiring heuristic with exhaustive tie-break breadth-first
//! search.
//!
//! Starting from the empty graph on a sorted target degree sequence, each
//! step selects a potential edge ("pedge") with maximum endpoint degree
//! product, breaking ties by free-stub counts. Wherever the tie set has more
//! than one pedge the search branches on every choice, so the outcome is the
//! set of all graphs the heuristic can produce.

use alloc::collections::VecDeque;
use alloc::vec::Vec;
use hashbrown::HashSet;

use crate::graph::{DegreeSequence, Graph, MAX_ORDER};
use crate::sequences::is_graphical_connected;

/// Index of pedge (i, j), i < j, in column-major upper-triangle order.
#[inline]
fn pedge_index(i: usize, j: usize) -> u32 {
    (j * (j - 1) / 2 + i) as u32
}

#[inline]
fn pedge_vertices(idx: u32) -> (usize, usize) {
    let mut j = 1usize;
    while pedge_index(0, j + 1) <= idx {
        j += 1;
    }
    ((idx - pedge_index(0, j)) as usize, j)
}

/// A point in the wiring search: the edges wired so far plus the pool of
/// pedges not yet considered. Attachment status and free-stub counts are
/// derived from the edges.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct WiringState {
    target: [u8; MAX_ORDER],
    n: u8,
    wired: Graph,
    pool: u128,
}

impl WiringState {
    /// Initial state: no edges, every pedge pending.
    pub fn new(target: &DegreeSequence) -> WiringState {
        let n = target.len();
        assert!(n >= 2 && n <= MAX_ORDER);
        let mut degs = [0u8; MAX_ORDER];
        degs[..n].copy_from_slice(target.degrees());
        let num_pedges = pedge_index(0, n - 1) + n as u32 - 1;
        WiringState {
            target: degs,
            n: n as u8,
            wired: Graph::new(n),
            pool: (1u128 << num_pedges) - 1,
        }
    }

    pub fn wired_graph(&self) -> &Graph {
        &self.wired
    }

    pub fn pool_is_empty(&self) -> bool {
        self.pool == 0
    }

    /// Free stubs of vertex `v`.
    #[inline]
    pub fn residual(&self, v: usize) -> usize {
        self.target[v] as usize - self.wired.degree(v)
    }

    /// Vertex 0 counts as attached from initialization; every other vertex
    /// is attached once it has an edge.
    #[inline]
    pub fn is_attached(&self, v: usize) -> bool {
        v == 0 || self.wired.degree(v) > 0
    }

    fn pool_pedges(&self) -> impl Iterator<Item = u32> + '_ {
        let mut bits = self.pool;
        core::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let idx = bits.trailing_zeros();
            bits &= bits - 1;
            Some(idx)
        })
    }

    /// One selection round: take the pedges of maximum target degree product,
    /// drop (from the pool too) those with a saturated endpoint, then keep
    /// the ties after maximizing first δ_i and then δ_j. Returns the
    /// pool-shrunk state and the tie set; an empty tie set means the loop
    /// just continues from the shrunk state.
    pub fn step_candidates(&self) -> (WiringState, Vec<(usize, usize)>) {
        let (shrunk, mut max_set) = self.step_candidates_raw();
        if max_set.is_empty() {
            return (shrunk, max_set);
        }
        let max_di = max_set.iter().map(|&(i, _)| self.residual(i)).max().unwrap();
        max_set.retain(|&(i, _)| self.residual(i) == max_di);
        let max_dj = max_set.iter().map(|&(_, j)| self.residual(j)).max().unwrap();
        max_set.retain(|&(_, j)| self.residual(j) == max_dj);
        (shrunk, max_set)
    }

    /// The max-product tie set after the saturated-pedge filter, before the
    /// free-stub tie-break.
    pub fn step_candidates_raw(&self) -> (WiringState, Vec<(usize, usize)>) {
        let mut shrunk = *self;
        let mut best_prod = 0;
        let mut max_set: Vec<(usize, usize)> = Vec::new();
        for idx in self.pool_pedges() {
            let (i, j) = pedge_vertices(idx);
            let prod = self.target[i] as usize * self.target[j] as usize;
            if prod > best_prod {
                best_prod = prod;
                max_set.clear();
            }
            if prod == best_prod {
                max_set.push((i, j));
            }
        }
        // F: max-product pedges without free stubs on both ends
        max_set.retain(|&(i, j)| {
            if self.residual(i) == 0 || self.residual(j) == 0 {
                shrunk.pool &= !(1u128 << pedge_index(i, j));
                false
            } else {
                true
            }
        });
        (shrunk, max_set)
    }

    /// Considers pedge `p` for wiring. A pedge with a detached endpoint is
    /// always wired and attaches that endpoint; an edge between two attached
    /// vertices is added only when the tree and disconnected-cluster
    /// conditions permit (they can only bind while detached vertices
    /// remain). The pedge leaves the pool either way.
    pub fn apply_pedge(&self, p: (usize, usize)) -> WiringState {
        self.apply_pedge_cfg(p, WireConfig::default())
    }

    /// Experimental: explicit R/Q set bookkeeping, branch on `j in Q` only;
    /// the wired `j` moves to R, `i` never moves. Guard applies when `j` is
    /// already in R and the bookkeeping Q is nonempty.
    pub fn apply_pedge_book(&self, p: (usize, usize), rmask: u16, move_i: bool) -> (WiringState, u16) {
        let (i, j) = p;
        let mut next = *self;
        next.pool &= !(1u128 << pedge_index(i, j));
        let mut rm = rmask;
        let n = self.n as usize;
        if rmask & (1 << j) == 0 {
            next.wired.add_edge(i, j);
            rm |= 1 << j;
            if move_i {
                rm |= 1 << i;
            }
            return (next, rm);
        }
        let q_verts: Vec<usize> = (0..n).filter(|&v| rmask & (1 << v) == 0).collect();
        if q_verts.is_empty() {
            next.wired.add_edge(i, j);
            return (next, rm);
        }
        let d_q: i64 = q_verts.iter().map(|&v| self.target[v] as i64).sum();
        let delta_r: i64 = (0..n)
            .filter(|&v| rmask & (1 << v) != 0)
            .map(|v| self.residual(v) as i64)
            .sum();
        if d_q != 2 * q_verts.len() as i64 - delta_r && delta_r != 2 {
            next.wired.add_edge(i, j);
        }
        (next, rm)
    }

    fn q_sums(&self, g: &Graph) -> (i64, i64, i64) {
        let n = self.n as usize;
        let attached = |v: usize| v == 0 || g.degree(v) > 0;
        let mut d_q = 0i64;
        let mut q_len = 0i64;
        let mut delta_r = 0i64;
        for v in 0..n {
            if attached(v) {
                delta_r += self.target[v] as i64 - g.degree(v) as i64;
            } else {
                d_q += self.target[v] as i64;
                q_len += 1;
            }
        }
        (d_q, q_len, delta_r)
    }

    pub fn apply_pedge_cfg(&self, p: (usize, usize), cfg: WireConfig) -> WiringState {
        let (i, j) = p;
        let mut next = *self;
        next.pool &= !(1u128 << pedge_index(i, j));
        let ri = self.is_attached(i);
        let rj = self.is_attached(j);
        let guarded = match (ri, rj) {
            (true, true) => true,
            (true, false) => cfg.guard_rq,
            (false, true) => cfg.guard_qr,
            (false, false) => cfg.guard_qq,
        };
        if !guarded {
            next.wired.add_edge(i, j);
            return next;
        }
        let (d_q, q_len, delta_r) = self.q_sums(&self.wired);
        let mut after = self.wired;
        after.add_edge(i, j);
        let (d_q2, q_len2, delta_r2) = self.q_sums(&after);
        let tree_ok = if cfg.tree_post {
            d_q2 >= 2 * q_len2 - delta_r2
        } else {
            q_len == 0 || d_q != 2 * q_len - delta_r
        };
        let dcc_applies = cfg.dcc_all || (ri && rj);
        let dcc_ok = !dcc_applies
            || if cfg.dcc_post {
                q_len2 == 0 || delta_r2 != 0
            } else {
                q_len == 0 || delta_r != 2
            };
        if tree_ok && dcc_ok {
            next.wired.add_edge(i, j);
        }
        next
    }
}

#[derive(Clone, Copy, Default, Debug)]
pub struct WireConfig {
    pub guard_qr: bool,
    pub guard_qq: bool,
    pub guard_rq: bool,
    pub tree_post: bool,
    pub dcc_post: bool,
    pub dcc_all: bool,
}

/// Exhaustive BFS over all tie-break choices, deduplicating states by the
/// exact (wired edges, pool) pair. Returns the distinct final graphs.
pub fn wire_all(target: &DegreeSequence) -> Vec<Graph> {
    wire_all_cfg(target, WireConfig::default())
}

pub fn wire_all_cfg(target: &DegreeSequence, cfg: WireConfig) -> Vec<Graph> {
    let start = WiringState::new(target);
    let mut visited: HashSet<WiringState> = HashSet::new();
    let mut queue: VecDeque<WiringState> = VecDeque::new();
    let mut results: HashSet<Graph> = HashSet::new();
    visited.insert(start);
    queue.push_back(start);
    while let Some(state) = queue.pop_front() {
        if state.pool_is_empty() {
            results.insert(*state.wired_graph());
            continue;
        }
        let (shrunk, ties) = state.step_candidates();
        if ties.is_empty() {
            if visited.insert(shrunk) {
                queue.push_back(shrunk);
            }
            continue;
        }
        for p in ties {
            let next = shrunk.apply_pedge_cfg(p, cfg);
            if visited.insert(next) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Graph> = results.into_iter().collect();
    out.sort_unstable();
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Classification {
    /// Some result realizes the target sequence and attains the class
    /// maximum S-metric.
    FeasibleOptimal,
    /// Some result realizes the target sequence but none is maximally
    /// assortative over the class.
    FeasibleSuboptimal,
    /// No result realizes the target sequence.
    Infeasible,
}

#[derive(Clone, Debug)]
pub struct WiringOutcome {
    pub target: DegreeSequence,
    /// All distinct graphs the tie-break search can produce.
    pub results: Vec<Graph>,
    pub classification: Classification,
    /// Maximum S-metric among target-realizing results, if any.
    pub best_s: Option<u64>,
    /// Maximum S-metric over the degree class (supplied by the caller).
    pub class_max_s: u64,
}

impl WiringOutcome {
    /// Target-realizing results: degree sequence matches and the graph is
    /// connected.
    pub fn feasible_results(&self) -> Vec<&Graph> {
        self.results
            .iter()
            .filter(|g| g.degree_sequence() == self.target && g.is_connected())
            .collect()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WireError {
    /// The sequence has no simple connected realization.
    NotRealizable(DegreeSequence),
}

impl core::fmt::Display for WireError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            WireError::NotRealizable(d) => {
                write!(f, "degree sequence {:?} has no connected realization", d.degrees())
            }
        }
    }
}

/// Runs the exhaustive wiring search and classifies the outcome against the
/// class optimum `class_max_s` (the maximum S-metric over all simple
/// connected graphs with the target sequence).
pub fn greedy_wire_all(
    target: &DegreeSequence,
    class_max_s: u64,
) -> Result<WiringOutcome, WireError> {
    if !is_graphical_connected(target) {
        return Err(WireError::NotRealizable(target.clone()));
    }
    if target.len() == 1 {
        // single vertex: nothing to wire
        return Ok(WiringOutcome {
            target: target.clone(),
            results: alloc::vec![Graph::new(1)],
            classification: Classification::FeasibleOptimal,
            best_s: Some(0),
            class_max_s: 0,
        });
    }
    let results = wire_all(target);
    let best_s = results
        .iter()
        .filter(|g| g.degree_sequence() == *target && g.is_connected())
        .map(|g| g.s_metric())
        .max();
    let classification = match best_s {
        None => Classification::Infeasible,
        Some(s) if s == class_max_s => Classification::FeasibleOptimal,
        Some(_) => Classification::FeasibleSuboptimal,
    };
    Ok(WiringOutcome {
        target: target.clone(),
        results,
        classification,
        best_s,
        class_max_s,
    })
}

/// Maximum S-metric per degree sequence over a catalog of connected graphs.
pub fn class_max_s_map(
    catalog: &crate::enumerate::GraphCatalog,
) -> hashbrown::HashMap<DegreeSequence, u64> {
    let mut map: hashbrown::HashMap<DegreeSequence, u64> = hashbrown::HashMap::new();
    for g in catalog.graphs() {
        let entry = map.entry(g.degree_sequence()).or_insert(0);
        *entry = (*entry).max(g.s_metric());
    }
    map
}

/// One row of the wiring counterexample table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WireCounts {
    pub order: usize,
    pub num_sequences: usize,
    pub feasibility: usize,
    pub optimality: usize,
}

/// Classifies every connected-graphical sequence of order `n` and counts the
/// infeasible and (among feasible) suboptimal ones.
pub fn count_wiring_counterexamples(
    n: usize,
) -> Result<WireCounts, crate::enumerate::EnumError> {
    let catalog = crate::enumerate::enumerate_connected(n)?;
    let max_s = class_max_s_map(&catalog);
    let sequences = crate::sequences::enumerate_sequences(n);
    let mut row = WireCounts {
        order: n,
        num_sequences: sequences.len(),
        feasibility: 0,
        optimality: 0,
    };
    for d in &sequences {
        let outcome = greedy_wire_all(d, max_s[d]).expect("sequence is realizable");
        match outcome.classification {
            Classification::Infeasible => row.feasibility += 1,
            Classification::FeasibleSuboptimal => row.optimality += 1,
            Classification::FeasibleOptimal => {}
        }
    }
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ds(degs: &[u8]) -> DegreeSequence {
        DegreeSequence::new(degs.to_vec())
    }

    #[test]
    fn pedge_index_round_trip() {
        let mut seen = vec![];
        for j in 1..MAX_ORDER {
            for i in 0..j {
                let idx = pedge_index(i, j);
                assert_eq!(pedge_vertices(idx), (i, j));
                seen.push(idx);
            }
        }
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), MAX_ORDER * (MAX_ORDER - 1) / 2);
    }

    #[test]
    fn initial_tie_set_of_counterexample_sequence() {
        let state = WiringState::new(&ds(&[5, 4, 4, 4, 4, 3]));
        let (_, ties) = state.step_candidates();
        assert_eq!(ties, vec![(0, 1), (0, 2), (0, 3), (0, 4)]);
    }

    #[test]
    fn first_wiring_attaches_vertex() {
        let state = WiringState::new(&ds(&[5, 4, 4, 4, 4, 3]));
        let (shrunk, ties) = state.step_candidates();
        let next = shrunk.apply_pedge(ties[0]);
        assert!(next.is_attached(1));
        assert_eq!(next.wired_graph().num_edges(), 1);
    }

    #[test]
    fn step_eleven_has_single_candidate() {
        // Wire (12)..(15) and all pedges among {2..5}, replaying the trace of
        // the infeasibility counterexample; the only remaining candidate is
        // then (16) with product 15.
        let mut state = WiringState::new(&ds(&[5, 4, 4, 4, 4, 3]));
        for _ in 0..10 {
            let (shrunk, ties) = state.step_candidates();
            assert!(!ties.is_empty());
            state = shrunk.apply_pedge(ties[0]);
        }
        let (_, ties) = state.step_candidates();
        assert_eq!(ties, vec![(0, 5)]);
        let after = state.step_candidates().0.apply_pedge((0, 5));
        assert_eq!(after.residual(5), 2);
        // no wireable pedge remains: the rest of the pool has a saturated end
        let mut s = after;
        while !s.pool_is_empty() {
            let (shrunk, ties) = s.step_candidates();
            assert!(ties.is_empty());
            s = shrunk;
        }
        assert_eq!(
            s.wired_graph().degree_sequence().degrees(),
            &[5, 4, 4, 4, 4, 1]
        );
    }

    #[test]
    fn saturated_max_product_pedges_shrink_pool() {
        let state = WiringState::new(&ds(&[2, 2, 2]));
        // wire (12) and (13): vertex 0 saturated
        let s = state.apply_pedge((0, 1)).apply_pedge((0, 2));
        let (shrunk, ties) = s.step_candidates();
        assert_eq!(ties, vec![(1, 2)]);
        assert_eq!(shrunk.pool, s.pool);
    }

    #[test]
    fn cluster_guard_refuses_attached_pair() {
        // target (2,2,2,1,1) with edges {01,02}: closing (12) would consume
        // the last two free stubs on the attached side while 3 and 4 are
        // still detached, so both guards refuse it
        let mut state = WiringState::new(&ds(&[2, 2, 2, 1, 1]));
        state = state.apply_pedge((0, 1)).apply_pedge((0, 2));
        let next = state.apply_pedge((1, 2));
        assert_eq!(next.wired_graph().num_edges(), 2);
        assert!(next.pool != state.pool);
    }

    #[test]
    fn detached_pedge_always_attaches() {
        let state = WiringState::new(&ds(&[2, 2, 2, 2]));
        let next = state.apply_pedge((2, 3));
        assert!(next.wired_graph().has_edge(2, 3));
        assert!(next.is_attached(2) && next.is_attached(3));
    }

    #[test]
    fn closing_edge_allowed_when_all_attached() {
        // the triangle must close even though delta_R = 2 at the last step
        let out = greedy_wire_all(&ds(&[2, 2, 2]), 12).unwrap();
        assert_eq!(out.classification, Classification::FeasibleOptimal);
        assert!(out.results.iter().any(|g| g.num_edges() == 3));
    }

    #[test]
    fn five_cycle_is_feasible() {
        // C5 is the unique member of its class; s = 5 * 4 = 20
        let out = greedy_wire_all(&ds(&[2, 2, 2, 2, 2]), 20).unwrap();
        assert_eq!(out.classification, Classification::FeasibleOptimal);
    }

    #[test]
    fn infeasibility_counterexample() {
        let out = greedy_wire_all(&ds(&[5, 4, 4, 4, 4, 3]), u64::MAX).unwrap();
        assert_eq!(out.classification, Classification::Infeasible);
        for g in &out.results {
            assert_eq!(g.degree_sequence().degrees(), &[5, 4, 4, 4, 4, 1]);
        }
    }

    #[test]
    fn rejects_non_realizable() {
        assert!(greedy_wire_all(&ds(&[3, 1, 1]), 0).is_err());
    }
}
