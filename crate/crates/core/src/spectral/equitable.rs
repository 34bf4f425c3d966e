use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{distance_char_poly, largest_root, SpectralError};
use crate::graph::{DistanceMatrix, Graph, Partition, PartitionError};
use crate::poly::{char_poly_exact, IntMatrix, IntPoly};

/// Quotient matrix of a distance equitable partition: entry `(i, j)` is the
/// distance sum from any vertex of block `i` to block `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorMatrix {
    pub partition: Partition,
    pub matrix: IntMatrix,
}

impl DivisorMatrix {
    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    pub fn char_poly(&self) -> IntPoly {
        char_poly_exact(&self.matrix)
    }

    /// Largest real eigenvalue, from exact root isolation.
    pub fn largest_eigenvalue(&self) -> f64 {
        largest_root(&self.char_poly()).expect("divisor matrix has a real eigenvalue")
    }
}

fn check_cover(g: &Graph, p: &Partition) -> Result<(), PartitionError> {
    let n = g.order();
    match p.order() {
        m if m < n => Err(PartitionError::Uncovered(m)),
        m if m > n => Err(PartitionError::OutOfRange(n)),
        _ => Ok(()),
    }
}

fn block_sums(d: &DistanceMatrix, v: usize, blocks: &[Vec<usize>]) -> Vec<u64> {
    blocks
        .iter()
        .map(|b| b.iter().map(|&u| d.get(v, u) as u64).sum())
        .collect()
}

/// The divisor matrix when `p` is distance equitable for `g`.
pub fn check_equitable(g: &Graph, p: &Partition) -> Result<Option<DivisorMatrix>, SpectralError> {
    check_cover(g, p)?;
    let d = g.all_pairs_distances()?;
    let blocks = p.blocks();
    let k = blocks.len();
    let mut m = IntMatrix::zeros(k);
    for (i, b) in blocks.iter().enumerate() {
        let row = block_sums(&d, b[0], blocks);
        if b[1..].iter().any(|&v| block_sums(&d, v, blocks) != row) {
            return Ok(None);
        }
        for (j, s) in row.into_iter().enumerate() {
            m.set(i, j, BigInt::from(s));
        }
    }
    Ok(Some(DivisorMatrix {
        partition: p.clone(),
        matrix: m,
    }))
}

/// Coarsest distance equitable partition refining `seed`.
///
/// Vertices are repeatedly split by their current block together with the
/// vector of distance sums to every current block, until the number of
/// blocks stops growing. Blocks come out ordered by smallest vertex.
pub fn coarsest_equitable(g: &Graph, seed: &Partition) -> Result<Partition, SpectralError> {
    check_cover(g, seed)?;
    let d = g.all_pairs_distances()?;
    let mut current = seed.clone();
    loop {
        let blocks = current.blocks();
        let idx = current.block_index();
        let mut classes: BTreeMap<(usize, Vec<u64>), Vec<usize>> = BTreeMap::new();
        for (v, &b) in idx.iter().enumerate() {
            classes
                .entry((b, block_sums(&d, v, blocks)))
                .or_default()
                .push(v);
        }
        if classes.len() == blocks.len() {
            return Ok(current);
        }
        current = Partition::new(g.order(), classes.into_values().collect())?;
    }
}

/// Whether `det(xI - B)` divides the distance characteristic polynomial.
pub fn divisor_divides(g: &Graph, p: &Partition) -> Result<bool, SpectralError> {
    let b = check_equitable(g, p)?.ok_or(SpectralError::NotEquitable)?;
    Ok(distance_char_poly(g)?
        .divide_exact(&b.char_poly())?
        .is_some())
}
