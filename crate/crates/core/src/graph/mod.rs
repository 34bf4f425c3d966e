//! Undirected simple graphs on vertices `0..n`, their constructors and
//! shortest-path distances.
//!
//! Adjacency is stored as one `u64` bitset per vertex, which caps the order at
//! [`MAX_ORDER`]. Every graph this crate handles (census orders, family
//! fixtures, graph6 short form) stays well below that.

mod enumerate;
pub mod graph6;
mod iso;
mod partition;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use enumerate::{enumerate_connected, MAX_ENUMERATION_ORDER};
pub use iso::{contains_induced, is_isomorphic};
pub use partition::{Partition, PartitionError, TwinKind, TwinPartition};

/// Largest order representable by the bitset adjacency.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid order {0}: graphs need at least one vertex")]
    InvalidOrder(usize),
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("expected {expected} parts, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("enumeration of order {0} is unsupported (maximum {MAX_ENUMERATION_ORDER}); supply a graph6 stream instead")]
    UnsupportedOrder(usize),
}

/// Which elementary graph [`Graph::atom`] builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtomKind {
    Complete,
    Edgeless,
    Path,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.order())?;
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "{})", edges.join(" "))
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices. `n = 0` is allowed here so that
    /// builders can start from nothing; the public atoms reject it.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(GraphError::InvalidVertexSet(format!("bad edge {u}-{v}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn atom(kind: AtomKind, n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidOrder(0));
        }
        let mut g = Graph::empty(n)?;
        match kind {
            AtomKind::Edgeless => {}
            AtomKind::Complete => {
                for u in 0..n {
                    g.adj[u] = mask_below(n) & !(1 << u);
                }
            }
            AtomKind::Path => {
                for u in 1..n {
                    g.add_edge(u - 1, u);
                }
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Graph::atom(AtomKind::Complete, n)
    }

    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        Graph::atom(AtomKind::Edgeless, n)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        Graph::atom(AtomKind::Path, n)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order() && v < self.order());
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Open neighbourhood of `v` as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order())
            .flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |k| (u, u + 1 + k)))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() * 2 == self.order() * (self.order().saturating_sub(1))
    }

    pub fn complement(&self) -> Graph {
        let all = mask_below(self.order());
        Graph {
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(u, m)| !m & all & !(1 << u))
                .collect(),
        }
    }

    /// `self` on vertices `0..n`, `other` shifted to `n..n+m`, no cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.order();
        let total = n + other.order();
        if total > MAX_ORDER {
            return Err(GraphError::TooLarge(total));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|m| m << n));
        Ok(Graph { adj })
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let n = self.order();
        let left = mask_below(n);
        let right = mask_below(g.order()) & !left;
        for u in 0..g.order() {
            g.adj[u] |= if u < n { right } else { left };
        }
        Ok(g)
    }

    /// Generalized lexicographic product `base[parts[0], ..., parts[k-1]]`.
    /// Block `i` occupies a contiguous index range, blocks in base order.
    pub fn glex_product(base: &Graph, parts: &[Graph]) -> Result<Graph, GraphError> {
        Ok(Graph::glex_product_with_blocks(base, parts)?.0)
    }

    /// Like [`Graph::glex_product`], also returning the partition into the
    /// substituted blocks.
    pub fn glex_product_with_blocks(
        base: &Graph,
        parts: &[Graph],
    ) -> Result<(Graph, Partition), GraphError> {
        if parts.len() != base.order() {
            return Err(GraphError::Arity {
                expected: base.order(),
                got: parts.len(),
            });
        }
        let total: usize = parts.iter().map(Graph::order).sum();
        if total > MAX_ORDER {
            return Err(GraphError::TooLarge(total));
        }
        let mut offsets = Vec::with_capacity(parts.len());
        let mut g = Graph::empty(0)?;
        for p in parts {
            offsets.push(g.order());
            g = g.disjoint_union(p)?;
        }
        let block_mask = |i: usize| mask_below(parts[i].order()) << offsets[i];
        for (i, j) in base.edges() {
            let (mi, mj) = (block_mask(i), block_mask(j));
            for u in bits(mi) {
                g.adj[u] |= mj;
            }
            for u in bits(mj) {
                g.adj[u] |= mi;
            }
        }
        let blocks = parts
            .iter()
            .zip(&offsets)
            .filter(|(p, _)| p.order() > 0)
            .map(|(p, &o)| (o..o + p.order()).collect())
            .collect();
        Ok((g, Partition::new_unchecked(blocks)))
    }

    /// Subgraph induced on `set`, relabelled `0..set.len()` in the order given.
    pub fn induced_subgraph(&self, set: &[usize]) -> Result<Graph, GraphError> {
        if set.is_empty() {
            return Err(GraphError::InvalidVertexSet("empty vertex set".into()));
        }
        let mut seen = 0u64;
        for &v in set {
            if v >= self.order() {
                return Err(GraphError::InvalidVertexSet(format!(
                    "vertex {v} out of range"
                )));
            }
            if seen >> v & 1 == 1 {
                return Err(GraphError::InvalidVertexSet(format!("vertex {v} repeated")));
            }
            seen |= 1 << v;
        }
        let mut g = Graph::empty(set.len())?;
        for (i, &u) in set.iter().enumerate() {
            for (j, &v) in set.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Vertices reachable from `start`, as a bitset.
    pub(crate) fn component_of(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.component_of(0) == mask_below(self.order())
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut left = mask_below(self.order());
        let mut out = Vec::new();
        while left != 0 {
            let c = self.component_of(left.trailing_zeros() as usize);
            out.push(bits(c).collect());
            left &= !c;
        }
        out
    }

    pub fn all_pairs_distances(&self) -> Result<DistanceMatrix, GraphError> {
        let n = self.order();
        let mut d = vec![0u32; n * n];
        for s in 0..n {
            let mut dist = vec![u32::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbor_iter(u) {
                    if dist[v] == u32::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            if dist.contains(&u32::MAX) {
                return Err(GraphError::NotConnected);
            }
            d[s * n..(s + 1) * n].copy_from_slice(&dist);
        }
        Ok(DistanceMatrix { n, d })
    }

    pub fn diameter(&self) -> Result<u32, GraphError> {
        Ok(self.all_pairs_distances()?.max())
    }

    /// If the complement is disconnected, split `self = g1 ∨ g2` where `g1` is
    /// induced on the complement component containing vertex 0.
    pub fn join_decompose(&self) -> Option<(Graph, Graph)> {
        if self.order() < 2 {
            return None;
        }
        let comp = self.complement().component_of(0);
        let rest = mask_below(self.order()) & !comp;
        if rest == 0 {
            return None;
        }
        let left: Vec<usize> = bits(comp).collect();
        let right: Vec<usize> = bits(rest).collect();
        Some((
            self.induced_subgraph(&left).expect("nonempty in-range set"),
            self.induced_subgraph(&right)
                .expect("nonempty in-range set"),
        ))
    }

    /// Apply a vertex relabelling: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph {
            adj: vec![0; self.order()],
        };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

/// Shortest-path distance matrix of a connected graph, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    pub fn max(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|&x| x as i64).collect())
            .collect()
    }
}

#[inline]
pub(crate) fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Indices of the set bits of `m`, ascending.
pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}
