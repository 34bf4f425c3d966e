//! Brute-force isomorphism and induced-subgraph search for small graphs.

use super::{bits, mask_below, Graph, TwinKind, TwinPartition};

/// Whether `g` has an induced subgraph isomorphic to `h`.
///
/// Backtracks over injective maps from `h` into `g`, vertex by vertex,
/// keeping for each step the bitset of `g`-vertices whose adjacency to the
/// already-placed images agrees with `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    let k = h.order();
    if k == 0 {
        return true;
    }
    if k > g.order() || h.edge_count() > g.edge_count() {
        return false;
    }
    let order = search_order(h);
    let mut image = vec![usize::MAX; k];
    place(g, h, &order, 0, 0, &mut image)
}

fn place(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    used: u64,
    image: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    let mut cand = mask_below(g.order()) & !used;
    for &w in &order[..depth] {
        let nw = g.neighbors(image[w]);
        cand &= if h.has_edge(u, w) { nw } else { !nw };
    }
    let need = h.degree(u);
    for v in bits(cand) {
        if g.degree(v) < need {
            continue;
        }
        image[u] = v;
        if place(g, h, order, depth + 1, used | 1 << v, image) {
            return true;
        }
    }
    false
}

/// Vertices of `h` ordered so that each one (after the first of its
/// component) has an earlier neighbour; highest degree first.
fn search_order(h: &Graph) -> Vec<usize> {
    let n = h.order();
    let mut placed = 0u64;
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let start = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| (h.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex exists");
        placed |= 1 << start;
        out.push(start);
        let mut i = out.len() - 1;
        while i < out.len() {
            for w in bits(h.neighbors(out[i]) & !placed) {
                placed |= 1 << w;
                out.push(w);
            }
            i += 1;
        }
    }
    out
}

/// Exact isomorphism test.
///
/// Cheap invariants first, then a backtracking search on the twin-reduced
/// quotients: two graphs are isomorphic iff their twin quotients are
/// isomorphic preserving class kind and size.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    let (qg, lg) = typed_quotient(g);
    let (qh, lh) = typed_quotient(h);
    labeled_isomorphic(&qg, &lg, &qh, &lh)
}

/// Per-class label used for quotient matching: kind, size, and the degree
/// of a member in the original graph.
pub(crate) type ClassLabel = (TwinKind, usize, usize);

pub(crate) fn typed_quotient(g: &Graph) -> (Graph, Vec<ClassLabel>) {
    let tp = TwinPartition::of(g);
    let q = tp.quotient(g);
    let labels = tp
        .partition
        .blocks()
        .iter()
        .zip(&tp.kinds)
        .map(|(b, &k)| (k, b.len(), g.degree(b[0])))
        .collect();
    (q, labels)
}

/// Isomorphism of vertex-labelled graphs by backtracking.
pub(crate) fn labeled_isomorphic<L: Eq>(g: &Graph, gl: &[L], h: &Graph, hl: &[L]) -> bool {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut count_ok = true;
    for v in 0..n {
        let sig_g = gl
            .iter()
            .zip(0..n)
            .filter(|(l, w)| **l == gl[v] && g.degree(*w) == g.degree(v))
            .count();
        let sig_h = hl
            .iter()
            .zip(0..n)
            .filter(|(l, w)| **l == gl[v] && h.degree(*w) == g.degree(v))
            .count();
        count_ok &= sig_g == sig_h;
    }
    if !count_ok {
        return false;
    }
    let order = search_order(g);
    let mut image = vec![usize::MAX; n];
    extend_iso(g, gl, h, hl, &order, 0, 0, &mut image)
}

#[allow(clippy::too_many_arguments)]
fn extend_iso<L: Eq>(
    g: &Graph,
    gl: &[L],
    h: &Graph,
    hl: &[L],
    order: &[usize],
    depth: usize,
    used: u64,
    image: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    let mut cand = mask_below(h.order()) & !used;
    for &w in &order[..depth] {
        let nw = h.neighbors(image[w]);
        cand &= if g.has_edge(u, w) { nw } else { !nw };
    }
    for v in bits(cand) {
        if h.degree(v) != g.degree(u) || hl[v] != gl[u] {
            continue;
        }
        image[u] = v;
        if extend_iso(g, gl, h, hl, order, depth + 1, used | 1 << v, image) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::{combinations, permutations};

    /// Naive oracle: every k-subset, every bijection onto `h`.
    fn naive_contains(g: &Graph, h: &Graph) -> bool {
        let k = h.order();
        let perms = permutations(k);
        combinations(g.order(), k).into_iter().any(|set| {
            let sub = g.induced_subgraph(&set).unwrap();
            perms.iter().any(|p| sub.permuted(p) == *h)
        })
    }

    fn naive_iso(g: &Graph, h: &Graph) -> bool {
        g.order() == h.order() && permutations(g.order()).iter().any(|p| g.permuted(p) == *h)
    }

    fn random_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn contains_examples() {
        let k = |n| Graph::complete(n).unwrap();
        let e = |n| Graph::edgeless(n).unwrap();
        assert!(contains_induced(&k(4), &k(3)));
        let c4 = e(2).join(&e(2)).unwrap();
        assert!(!contains_induced(&c4, &k(3)));
        let g = k(2).join(&k(2).disjoint_union(&k(2)).unwrap()).unwrap();
        assert!(!contains_induced(&g, &Graph::path(4).unwrap()));
        assert!(contains_induced(
            &Graph::path(6).unwrap(),
            &Graph::path(4).unwrap()
        ));
    }

    #[test]
    fn contains_agrees_with_naive_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let e2 = Graph::edgeless(2).unwrap();
        let patterns = [
            Graph::path(4).unwrap(),
            Graph::complete(3).unwrap(),
            e2.join(&e2).unwrap(),
        ];
        for _ in 0..150 {
            let n = rng.gen_range(3..=7);
            let density = rng.gen_range(0.2..0.8);
            let g = random_graph(&mut rng, n, density);
            for h in &patterns {
                if h.order() <= n {
                    assert_eq!(
                        contains_induced(&g, h),
                        naive_contains(&g, h),
                        "{g:?} vs {h:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn isomorphism_agrees_with_naive_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..=6);
            let g = random_graph(&mut rng, n, 0.5);
            let h = if rng.gen_bool(0.5) {
                let mut p: Vec<usize> = (0..n).collect();
                rand::seq::SliceRandom::shuffle(&mut p[..], &mut rng);
                g.permuted(&p)
            } else {
                random_graph(&mut rng, n, 0.5)
            };
            assert_eq!(is_isomorphic(&g, &h), naive_iso(&g, &h), "{g:?} vs {h:?}");
        }
    }
}
