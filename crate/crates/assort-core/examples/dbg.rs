use std::collections::{HashSet, VecDeque};
use assort_core::graph::{DegreeSequence, Graph};
use assort_core::sequences::enumerate_sequences;
use assort_core::wire::{WiringState, WireConfig, class_max_s_map};
use assort_core::enumerate::enumerate_connected;

// mode 0: full tie set (baseline); 1: fix i to smallest index among max-delta_i;
// 2: fix j to smallest index among max-delta_j (after mode-1 restriction)
fn candidates(state: &WiringState, mode: u8) -> (WiringState, Vec<(usize, usize)>) {
    let (shrunk, mut set) = state.step_candidates_raw();
    if set.is_empty() { return (shrunk, set); }
    let max_di = set.iter().map(|&(i, _)| state.residual(i)).max().unwrap();
    set.retain(|&(i, _)| state.residual(i) == max_di);
    if mode >= 1 {
        let i0 = set.iter().map(|&(i, _)| i).min().unwrap();
        set.retain(|&(i, _)| i == i0);
    }
    let max_dj = set.iter().map(|&(_, j)| state.residual(j)).max().unwrap();
    set.retain(|&(_, j)| state.residual(j) == max_dj);
    if mode >= 2 {
        let j0 = set.iter().map(|&(_, j)| j).min().unwrap();
        set.retain(|&(_, j)| j == j0);
    }
    (shrunk, set)
}

fn wire(target: &DegreeSequence, mode: u8) -> Vec<Graph> {
    let cfg = WireConfig::default();
    let start = WiringState::new(target);
    let mut visited = HashSet::new();
    let mut queue = VecDeque::new();
    let mut results: HashSet<Graph> = HashSet::new();
    visited.insert(start);
    queue.push_back(start);
    while let Some(state) = queue.pop_front() {
        if state.pool_is_empty() {
            results.insert(*state.wired_graph());
            continue;
        }
        let (shrunk, ties) = candidates(&state, mode);
        if ties.is_empty() {
            if visited.insert(shrunk) { queue.push_back(shrunk); }
            continue;
        }
        for p in ties {
            let next = shrunk.apply_pedge_cfg(p, cfg);
            if visited.insert(next) { queue.push_back(next); }
        }
    }
    results.into_iter().collect()
}

fn main() {
    for mode in [1u8, 2] {
        println!("mode={}", mode);
        for n in [5usize, 6, 7] {
            let catalog = enumerate_connected(n).unwrap();
            let max_s = class_max_s_map(&catalog);
            let mut infeas = vec![];
            let mut subopt = 0;
            for d in enumerate_sequences(n) {
                let results = wire(&d, mode);
                let best_s = results.iter()
                    .filter(|g| g.degree_sequence() == d && g.is_connected())
                    .map(|g| g.s_metric()).max();
                match best_s {
                    None => infeas.push(d.degrees().to_vec()),
                    Some(s) if s == max_s[&d] => {}
                    Some(_) => subopt += 1,
                }
            }
            println!("  n={} infeasible={} subopt={}", n, infeas.len(), subopt);
            if infeas.len() <= 20 { for d in &infeas { println!("    {:?}", d); } }
        }
    }
}
