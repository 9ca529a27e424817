//! Canonical labeling by partition refinement plus search.
//!
//! The canonical form of a graph is the lexicographically minimal
//! column-major upper-triangle adjacency encoding over all labelings that
//! respect the refined vertex partition. Refinement iterates the
//! neighbor-color-multiset signature; the search individualizes one vertex of
//! the first non-singleton cell at a time, re-refining after each choice, and
//! prunes branches whose fixed prefix already exceeds the best encoding.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, MAX_ORDER};

/// Permutation-invariant encoding identifying an isomorphism class at fixed
/// order: two graphs of the same order are isomorphic iff their forms are
/// equal.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    pub n: u8,
    pub bits: u128,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm {
        n: g.order() as u8,
        bits: search(g, initial_partition(g, None)).0,
    }
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && canonical_form(g) == canonical_form(h)
}

/// The graph relabeled into its canonical labeling, so that
/// `canonical_graph(g).triangle_bits() == canonical_form(g).bits`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, perm) = search(g, initial_partition(g, None));
    g.relabel(&perm)
}

/// Canonical form plus a labeling `perm` achieving it (vertex `v` maps to
/// position `perm[v]`).
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let (bits, perm) = search(g, initial_partition(g, None));
    (
        CanonicalForm {
            n: g.order() as u8,
            bits,
        },
        perm,
    )
}

/// Canonical form of `g` with one vertex distinguished. Invariant under
/// isomorphisms of the pair `(g, marked)`; used by the enumeration module to
/// decide orbit equivalence of deletion candidates.
pub fn canonical_form_marked(g: &Graph, marked: usize) -> u128 {
    search(g, initial_partition(g, Some(marked))).0
}

/// An ordered partition of the vertices, kept as a flat vertex list plus cell
/// boundaries. Cell order is part of the canonical structure.
#[derive(Clone)]
struct Partition {
    verts: Vec<u8>,
    /// start index of each cell in `verts`, plus a trailing sentinel.
    starts: Vec<u8>,
}

impl Partition {
    fn num_cells(&self) -> usize {
        self.starts.len() - 1
    }

    fn cell(&self, c: usize) -> &[u8] {
        &self.verts[self.starts[c] as usize..self.starts[c + 1] as usize]
    }

    fn is_discrete(&self) -> bool {
        self.num_cells() == self.verts.len()
    }
}

fn initial_partition(g: &Graph, marked: Option<usize>) -> Partition {
    let n = g.order();
    let mut colors = [0u32; MAX_ORDER];
    if let Some(m) = marked {
        colors[m] = 1;
    }
    refine(g, &colors[..n])
}

/// Iterated neighbor-color-multiset refinement from the given seed colors.
/// Cells come out ordered by their (iso-invariant) signatures.
fn refine(g: &Graph, seed: &[u32]) -> Partition {
    let n = g.order();
    let mut colors: Vec<u32> = seed.to_vec();
    let mut num_colors = {
        let mut sorted: Vec<u32> = colors.clone();
        sorted.sort_unstable();
        sorted.dedup();
        // normalize seed colors to 0..k preserving order
        for c in colors.iter_mut() {
            *c = sorted.iter().position(|x| x == c).unwrap() as u32;
        }
        sorted.len()
    };
    loop {
        // signature: own color, then sorted multiset of neighbor colors
        let mut sigs: Vec<(Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut sig = Vec::with_capacity(1 + g.degree(v));
                sig.push(colors[v]);
                let mut bits = g.neighbors(v);
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    sig.push(colors[w]);
                }
                sig[1..].sort_unstable();
                (sig, v)
            })
            .collect();
        sigs.sort();
        let mut next = [0u32; MAX_ORDER];
        let mut k = 0u32;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                k += 1;
            }
            next[sigs[i].1] = k;
        }
        let stable = (k + 1) as usize == num_colors && {
            // same partition (colors may be relabeled, but both sides are
            // normalized in signature order, so direct comparison works)
            (0..n).all(|v| next[v] == colors[v])
        };
        colors.copy_from_slice(&next[..n]);
        num_colors = (k + 1) as usize;
        if stable || num_colors == n {
            break;
        }
    }
    let mut order: Vec<u8> = (0..n as u8).collect();
    order.sort_by_key(|&v| colors[v as usize]);
    let mut starts = vec![0u8];
    for i in 1..n {
        if colors[order[i] as usize] != colors[order[i - 1] as usize] {
            starts.push(i as u8);
        }
    }
    starts.push(n as u8);
    Partition {
        verts: order,
        starts,
    }
}

/// Minimal triangle-bit encoding over all partition-respecting labelings,
/// with the labeling that attains it.
fn search(g: &Graph, part: Partition) -> (u128, Vec<usize>) {
    let n = g.order();
    let mut best_bits = u128::MAX;
    let mut best_perm = vec![0usize; n];
    let mut ctx = Ctx {
        g,
        n,
        best_bits: &mut best_bits,
        best_perm: &mut best_perm,
    };
    descend(&mut ctx, part);
    (best_bits, best_perm)
}

struct Ctx<'a> {
    g: &'a Graph,
    n: usize,
    best_bits: &'a mut u128,
    best_perm: &'a mut Vec<usize>,
}

fn descend(ctx: &mut Ctx<'_>, part: Partition) {
    if part.is_discrete() {
        // position of vertex v is its index in the flat ordering
        let mut perm = [0usize; MAX_ORDER];
        for (pos, &v) in part.verts.iter().enumerate() {
            perm[v as usize] = pos;
        }
        let bits = ctx.g.relabel(&perm[..ctx.n]).triangle_bits();
        if bits < *ctx.best_bits {
            *ctx.best_bits = bits;
            ctx.best_perm.copy_from_slice(&perm[..ctx.n]);
        }
        return;
    }
    // Prefix prune: the leading run of singleton cells fixes the first k
    // positions, hence the top k(k-1)/2 encoding bits.
    let mut k = 0;
    while part.cell(k).len() == 1 {
        k += 1;
    }
    if k >= 2 {
        let fixed = k * (k - 1) / 2;
        let mut prefix = 0u128;
        let mut idx = 0u32;
        for j in 1..k {
            let vj = part.verts[j] as usize;
            for i in 0..j {
                if ctx.g.has_edge(part.verts[i] as usize, vj) {
                    prefix |= 1 << (127 - idx);
                }
                idx += 1;
            }
        }
        let mask = !((!0u128) >> fixed);
        if prefix > *ctx.best_bits & mask {
            return;
        }
    }
    // Individualize each vertex of the first non-singleton cell in turn,
    // then re-refine with the individualized vertex in its own cell.
    let target: Vec<u8> = part.cell(k).to_vec();
    for &u in &target {
        let mut seed = [0u32; MAX_ORDER];
        for c in 0..part.num_cells() {
            for &v in part.cell(c) {
                // leave room to slot u between cell k-1 and the rest of cell k
                seed[v as usize] = 2 * c as u32 + 2;
            }
        }
        seed[u as usize] = 2 * k as u32 + 1;
        let child = refine(ctx.g, &seed[..ctx.n]);
        descend(ctx, child);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_paths_agree() {
        let p1 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let p2 = Graph::from_edges(3, &[(1, 0), (0, 2)]);
        assert_eq!(canonical_form(&p1), canonical_form(&p2));
        assert!(is_isomorphic(&p1, &p2));
    }

    #[test]
    fn star_vs_path_differ() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_ne!(canonical_form(&star), canonical_form(&path));
        assert!(!is_isomorphic(&star, &path));
    }

    #[test]
    fn canonical_graph_is_fixed_point() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        let c = canonical_graph(&g);
        assert_eq!(c.triangle_bits(), canonical_form(&g).bits);
        assert_eq!(canonical_graph(&c), c);
        assert!(is_isomorphic(&g, &c));
    }

    #[test]
    fn labeling_achieves_form() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]);
        let (form, perm) = canonical_labeling(&g);
        assert_eq!(g.relabel(&perm).triangle_bits(), form.bits);
    }

    #[test]
    fn marked_form_separates_orbits() {
        // In a path a-b-c the endpoints are one orbit, the center another.
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(canonical_form_marked(&p, 0), canonical_form_marked(&p, 2));
        assert_ne!(canonical_form_marked(&p, 0), canonical_form_marked(&p, 1));
    }

    #[test]
    fn symmetric_graphs_terminate() {
        let mut k7 = Graph::new(7);
        for v in 1..7 {
            for u in 0..v {
                k7.add_edge(u, v);
            }
        }
        assert_eq!(canonical_form(&k7).bits, k7.triangle_bits());
        let empty = Graph::new(7);
        assert_eq!(canonical_form(&empty).bits, 0);
    }
}
