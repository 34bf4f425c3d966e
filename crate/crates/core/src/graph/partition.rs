use thiserror::Error;

use super::{bits, mask_below, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition has an empty block")]
    EmptyBlock,
    #[error("vertex {0} appears in more than one block")]
    Overlap(usize),
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("vertex {0} is not covered by any block")]
    Uncovered(usize),
}

/// Ordered vertex partition. Blocks are sorted internally and ordered by
/// their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Validate `blocks` against a vertex set `0..n` and canonicalize.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut seen = vec![false; n];
        for b in &blocks {
            if b.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            for &v in b {
                if v >= n {
                    return Err(PartitionError::OutOfRange(v));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(PartitionError::Overlap(v));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(PartitionError::Uncovered(v));
        }
        Ok(Partition::new_unchecked(blocks))
    }

    pub(crate) fn new_unchecked(mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        Partition { blocks }
    }

    pub fn single_block(n: usize) -> Self {
        Partition {
            blocks: vec![(0..n).collect()],
        }
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// `block_of[v]` is the index of the block holding `v`.
    pub fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.order()];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                idx[v] = i;
            }
        }
        idx
    }

    /// Whether every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        let idx = coarser.block_index();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&v| idx[v] == idx[b[0]]))
    }
}

/// Kind of a twin class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TwinKind {
    /// Pairwise adjacent with equal closed neighbourhoods.
    Clique,
    /// Pairwise non-adjacent with equal open neighbourhoods.
    Independent,
    Singleton,
}

/// Maximal twin classes of a graph with their kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    pub partition: Partition,
    pub kinds: Vec<TwinKind>,
}

impl TwinPartition {
    pub fn of(g: &Graph) -> Self {
        let n = g.order();
        let mut assigned = 0u64;
        let mut blocks = Vec::new();
        let mut kinds = Vec::new();
        for u in 0..n {
            if assigned >> u & 1 == 1 {
                continue;
            }
            // A vertex cannot have both a true and a false twin, so the class
            // of u is whichever kind its first twin has.
            let closed_u = g.neighbors(u) | 1 << u;
            let mut block = 1u64 << u;
            let mut kind = TwinKind::Singleton;
            for v in bits(mask_below(n) & !assigned & !block) {
                if g.has_edge(u, v) {
                    if kind != TwinKind::Independent && g.neighbors(v) | 1 << v == closed_u {
                        kind = TwinKind::Clique;
                        block |= 1 << v;
                    }
                } else if kind != TwinKind::Clique && g.neighbors(v) == g.neighbors(u) {
                    kind = TwinKind::Independent;
                    block |= 1 << v;
                }
            }
            assigned |= block;
            blocks.push(bits(block).collect());
            kinds.push(kind);
        }
        TwinPartition {
            partition: Partition { blocks },
            kinds,
        }
    }

    pub fn len(&self) -> usize {
        self.kinds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kinds.is_empty()
    }

    /// Quotient graph on the twin classes: classes `i`, `j` are adjacent when
    /// their members are (twins make this all-or-nothing).
    pub fn quotient(&self, g: &Graph) -> Graph {
        let blocks = self.partition.blocks();
        let mut q = Graph::empty(blocks.len()).expect("quotient is no larger than g");
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                if g.has_edge(blocks[i][0], blocks[j][0]) {
                    q.add_edge(i, j);
                }
            }
        }
        q
    }
}
