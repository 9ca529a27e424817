//! Degree-sequence realizability and enumeration.

use alloc::vec::Vec;

use crate::graph::{DegreeSequence, MAX_ORDER};

/// True iff `d` has a realization as a simple *connected* graph: the
/// Erdős–Gallai inequalities with even sum, plus minimum degree >= 1 and
/// degree sum >= 2(n-1). The single-vertex sequence (0) is the one connected
/// sequence with a zero entry.
pub fn is_graphical_connected(d: &DegreeSequence) -> bool {
    let n = d.len();
    let degs = d.degrees();
    if n == 0 {
        return false;
    }
    if n == 1 {
        return degs[0] == 0;
    }
    let sum = d.sum();
    if sum % 2 != 0 || sum < 2 * (n - 1) {
        return false;
    }
    if degs[n - 1] == 0 || degs[0] as usize >= n {
        return false;
    }
    // Erdős–Gallai: for each k, sum of the k largest degrees is at most
    // k(k-1) + sum over the rest of min(d_i, k).
    for k in 1..=n {
        let head: usize = degs[..k].iter().map(|&x| x as usize).sum();
        let tail: usize = degs[k..]
            .iter()
            .map(|&x| (x as usize).min(k))
            .sum();
        if head > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

/// All non-increasing sequences of length `n` passing
/// [`is_graphical_connected`], in decreasing lexicographic order.
pub fn enumerate_sequences(n: usize) -> Vec<DegreeSequence> {
    assert!(n >= 1 && n <= MAX_ORDER, "order out of range: {}", n);
    if n == 1 {
        return alloc::vec![DegreeSequence::new(alloc::vec![0])];
    }
    let mut out = Vec::new();
    let mut prefix: Vec<u8> = Vec::with_capacity(n);
    gen(n, (n - 1) as u8, &mut prefix, &mut out);
    out
}

fn gen(n: usize, max: u8, prefix: &mut Vec<u8>, out: &mut Vec<DegreeSequence>) {
    if prefix.len() == n {
        let d = DegreeSequence::new(prefix.clone());
        if is_graphical_connected(&d) {
            out.push(d);
        }
        return;
    }
    for v in (1..=max).rev() {
        prefix.push(v);
        gen(n, v, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ds(degs: &[u8]) -> DegreeSequence {
        DegreeSequence::new(degs.to_vec())
    }

    #[test]
    fn erdos_gallai_examples() {
        assert!(is_graphical_connected(&ds(&[5, 4, 4, 4, 4, 3])));
        assert!(!is_graphical_connected(&ds(&[3, 1])));
        // graphical (two disjoint edges) but below the tree lower bound
        assert!(!is_graphical_connected(&ds(&[1, 1, 1, 1])));
        assert!(is_graphical_connected(&ds(&[6, 4, 4, 4, 4, 3, 2, 1])));
        assert!(!is_graphical_connected(&ds(&[7, 1, 1, 1])));
    }

    #[test]
    fn single_vertex_sequence() {
        assert!(is_graphical_connected(&ds(&[0])));
        assert!(!is_graphical_connected(&ds(&[1])));
        assert_eq!(enumerate_sequences(1), vec![ds(&[0])]);
    }

    #[test]
    fn sequence_counts() {
        assert_eq!(enumerate_sequences(2), vec![ds(&[1, 1])]);
        assert_eq!(enumerate_sequences(5).len(), 19);
        assert_eq!(enumerate_sequences(6).len(), 68);
        assert_eq!(enumerate_sequences(7).len(), 236);
        assert_eq!(enumerate_sequences(8).len(), 863);
    }
}
