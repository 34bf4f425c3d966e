use std::collections::HashSet;

use super::{Graph, GraphError};
use crate::util::permutations;

/// Largest order the built-in enumerator accepts.
pub const MAX_ENUMERATION_ORDER: usize = 6;

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, ordered by edge count and then canonical code.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// the classes of order `n` are reached by attaching a new vertex to the
/// representatives of order `n - 1`. Duplicates are removed by the minimum
/// upper-triangle code over all `n!` relabellings.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidOrder(0));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(GraphError::UnsupportedOrder(n));
    }
    let mut level = vec![Graph::complete(1)?];
    for m in 2..=n {
        let perms = permutations(m);
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nbrs in 1u64..(1 << (m - 1)) {
                let mut h = Graph::empty(m)?;
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in super::bits(nbrs) {
                    h.add_edge(u, m - 1);
                }
                let code = canonical_code(&h, &perms);
                if seen.insert(code) {
                    next.push((h.edge_count(), code));
                }
            }
        }
        next.sort_unstable();
        level = next.into_iter().map(|(_, code)| decode(m, code)).collect();
    }
    Ok(level)
}

fn code_of(g: &Graph, perm: &[usize]) -> u64 {
    // bit index of the pair (i, j), i < j, in column order
    let mut code = 0u64;
    for (u, v) in g.edges() {
        let (i, j) = {
            let (a, b) = (perm[u], perm[v]);
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        };
        code |= 1 << (j * (j - 1) / 2 + i);
    }
    code
}

fn canonical_code(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| code_of(g, p))
        .min()
        .expect("at least one permutation")
}

fn decode(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n).expect("small order");
    for j in 1..n {
        for i in 0..j {
            if code >> (j * (j - 1) / 2 + i) & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_connected(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn order_three_is_path_and_triangle() {
        let gs = enumerate_connected(3).unwrap();
        assert!(super::super::is_isomorphic(
            &gs[0],
            &Graph::path(3).unwrap()
        ));
        assert_eq!(gs[1], Graph::complete(3).unwrap());
    }

    #[test]
    fn representatives_are_connected_and_distinct() {
        let gs = enumerate_connected(5).unwrap();
        for (i, g) in gs.iter().enumerate() {
            assert!(g.is_connected());
            for h in &gs[i + 1..] {
                assert!(!super::super::is_isomorphic(g, h));
            }
        }
    }

    #[test]
    fn order_limits() {
        assert_eq!(enumerate_connected(7), Err(GraphError::UnsupportedOrder(7)));
        assert_eq!(enumerate_connected(0), Err(GraphError::InvalidOrder(0)));
    }
}
