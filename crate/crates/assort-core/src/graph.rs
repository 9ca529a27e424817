//! Labeled undirected simple graphs of small order.
//!
//! Vertices are `0..n` with `n <= MAX_ORDER`. Adjacency is stored as one
//! bitmask row per vertex, so graphs are cheap `Copy` values and hash/compare
//! by exact labeled structure.

use alloc::vec::Vec;

/// Largest supported order. The tables in this crate go up to order 9; the
/// representation leaves headroom to 12.
pub const MAX_ORDER: usize = 12;

/// A labeled undirected simple graph on vertices `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    adj: [u16; MAX_ORDER],
}

impl Graph {
    /// Edgeless graph on `n` vertices. Panics if `n` is 0 or above [`MAX_ORDER`].
    pub fn new(n: usize) -> Graph {
        assert!(n >= 1 && n <= MAX_ORDER, "order out of range: {}", n);
        Graph {
            n: n as u8,
            adj: [0; MAX_ORDER],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order() && v < self.order());
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbor set of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u16 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn num_edges(&self) -> usize {
        self.adj[..self.order()]
            .iter()
            .map(|row| row.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as pairs `(u, v)` with `u < v`, in column-major upper-triangle
    /// order (the graph6 bit order).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for v in 1..self.order() {
            for u in 0..v {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degrees of `self`, sorted non-increasing.
    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new((0..self.order()).map(|v| self.degree(v) as u8).collect())
    }

    /// Sum over edges of the product of endpoint degrees.
    pub fn s_metric(&self) -> u64 {
        let mut s = 0u64;
        for (u, v) in self.edges() {
            s += (self.degree(u) * self.degree(v)) as u64;
        }
        s
    }

    /// Assortativity via vertex-distribution moments:
    /// `(s/m - E[d_w]^2) / Var(d_w)` for `w` uniform over vertices.
    /// `None` when the variance vanishes (regular graphs).
    pub fn assortativity_eq2(&self) -> Option<f64> {
        let n = self.order() as f64;
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for v in 0..self.order() {
            let d = self.degree(v) as f64;
            sum += d;
            sum_sq += d * d;
        }
        let mean = sum / n;
        let var = sum_sq / n - mean * mean;
        if var <= 0.0 {
            return None;
        }
        let m = self.num_edges() as f64;
        Some((self.s_metric() as f64 / m - mean * mean) / var)
    }

    /// Standard degree-degree Pearson correlation over edge endpoints
    /// (both orientations of each edge). `None` when the endpoint-degree
    /// variance vanishes.
    pub fn assortativity_newman(&self) -> Option<f64> {
        let m = self.num_edges();
        if m == 0 {
            return None;
        }
        // Endpoint distribution is symmetric, so the correlation reduces to
        // (E[d_u d_v] - E[d_u]^2) / Var(d_u) over directed edge ends.
        let ends = (2 * m) as f64;
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        let mut sum_prod = 0.0;
        for (u, v) in self.edges() {
            let du = self.degree(u) as f64;
            let dv = self.degree(v) as f64;
            sum += du + dv;
            sum_sq += du * du + dv * dv;
            sum_prod += 2.0 * du * dv;
        }
        let mean = sum / ends;
        let var = sum_sq / ends - mean * mean;
        if var <= 0.0 {
            return None;
        }
        Some((sum_prod / ends - mean * mean) / var)
    }

    /// True iff every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        let all = if n == 16 { !0u16 } else { (1u16 << n) - 1 };
        let mut seen: u16 = 1;
        loop {
            let mut next = seen;
            let mut bits = seen;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.adj[v];
            }
            if next == seen {
                return seen == all;
            }
            seen = next;
        }
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut h = Graph::new(self.order());
        for (u, v) in self.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        h
    }

    /// Upper-triangle adjacency bits in column-major order, packed with the
    /// first pair at the most significant used position. This is the encoding
    /// canonical forms compare on.
    pub fn triangle_bits(&self) -> u128 {
        let mut bits = 0u128;
        let mut idx = 0u32;
        for v in 1..self.order() {
            for u in 0..v {
                if self.has_edge(u, v) {
                    bits |= 1 << (127 - idx);
                }
                idx += 1;
            }
        }
        bits
    }

    /// Inverse of [`Graph::triangle_bits`].
    pub fn from_triangle_bits(n: usize, bits: u128) -> Graph {
        let mut g = Graph::new(n);
        let mut idx = 0u32;
        for v in 1..n {
            for u in 0..v {
                if bits >> (127 - idx) & 1 == 1 {
                    g.add_edge(u, v);
                }
                idx += 1;
            }
        }
        g
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A non-increasing sequence of vertex degrees.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DegreeSequence(Vec<u8>);

impl DegreeSequence {
    /// Sorts the given degrees non-increasing.
    pub fn new(mut degrees: Vec<u8>) -> DegreeSequence {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn degrees(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().map(|&d| d as usize).sum()
    }
}
