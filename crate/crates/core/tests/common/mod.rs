#![allow(dead_code)]

use std::fs::File;
use std::io::BufReader;

use distspec::graph::graph6::read_graph6_stream;
use distspec::graph::{enumerate_connected, Graph};

/// All connected graphs of orders 4 through 6 from the built-in enumerator.
pub fn census_4_to_6() -> Vec<Graph> {
    (4..=6)
        .flat_map(|n| enumerate_connected(n).unwrap())
        .collect()
}

/// The 853 connected graphs on seven vertices.
pub fn connected_7() -> Vec<Graph> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/connected7.g6");
    read_graph6_stream(BufReader::new(File::open(path).unwrap()))
        .collect::<Result<_, _>>()
        .unwrap()
}

/// Non-adjacency (plus equality) is an equivalence relation.
pub fn is_complete_multipartite(g: &Graph) -> bool {
    part_count(g).is_some()
}

/// Number of parts when `g` is complete multipartite.
pub fn part_count(g: &Graph) -> Option<usize> {
    let comp = g.complement();
    let parts = comp.components();
    parts
        .iter()
        .all(|c| {
            c.iter()
                .all(|&u| c.iter().all(|&v| u == v || comp.has_edge(u, v)))
        })
        .then_some(parts.len())
}

/// `K_r ∨ (K_s ∪ K_t)` with all of `r, s, t` positive.
pub fn is_clique_join_two_cliques(g: &Graph) -> bool {
    let n = g.order();
    let dominating: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    if dominating.is_empty() || dominating.len() == n {
        return false;
    }
    let rest: Vec<usize> = (0..n).filter(|v| !dominating.contains(v)).collect();
    let h = g.induced_subgraph(&rest).unwrap();
    let comps = h.components();
    comps.len() == 2
        && comps.iter().all(|c| {
            c.iter()
                .all(|&u| c.iter().all(|&v| u == v || h.has_edge(u, v)))
        })
}
