use serde::Serialize;

use super::{FamilyDescriptor, FamilyId, Theorem};
use crate::graph::{is_isomorphic, Graph};
use crate::spectral::{distance_char_poly, SpectralError};
use crate::util::compositions;

/// Every structurally valid descriptor of a fixed total order, in priority
/// order, with its built graph.
pub struct Catalog {
    order: usize,
    members: Vec<(FamilyDescriptor, Graph)>,
}

impl Catalog {
    pub fn of_order(n: usize) -> Catalog {
        let mut members = Vec::new();
        for id in FamilyId::ALL {
            for params in compositions(n, id.arity()) {
                if let Ok(fd) = FamilyDescriptor::new(id, params) {
                    let g = fd.build();
                    members.push((fd, g));
                }
            }
        }
        Catalog { order: n, members }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn descriptors(&self) -> impl Iterator<Item = &FamilyDescriptor> {
        self.members.iter().map(|(fd, _)| fd)
    }

    /// All descriptors whose graph is isomorphic to `g`, in priority order.
    pub fn recognize_all(&self, g: &Graph) -> Vec<FamilyDescriptor> {
        if g.order() != self.order {
            return Vec::new();
        }
        self.members
            .iter()
            .filter(|(_, h)| is_isomorphic(g, h))
            .map(|(fd, _)| fd.clone())
            .collect()
    }
}

/// Descriptors matching `g`, in priority order.
///
/// Matching is exact isomorphism with each catalog member of the same order;
/// isomorphism itself compares twin quotients labelled by class kind and
/// size, so this is the quotient-pattern match against the catalog.
pub fn recognize_all(g: &Graph) -> Vec<FamilyDescriptor> {
    Catalog::of_order(g.order()).recognize_all(g)
}

/// The first matching descriptor in the order `I1 < ... < J7 < KST < KCK <
/// KABC < KKK < KJOIN`.
pub fn recognize(g: &Graph) -> Option<FamilyDescriptor> {
    recognize_all(g).into_iter().next()
}

/// Admissible descriptors of total order `n` for `which`. Isomorphic
/// duplicates are kept.
pub fn enumerate_members(n: usize, which: Theorem) -> Vec<FamilyDescriptor> {
    if n < 2 {
        return Vec::new();
    }
    Catalog::of_order(n)
        .descriptors()
        .filter(|fd| which.admits(fd))
        .cloned()
        .collect()
}

/// `m(-1) + m(-2)` relative to the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EigenBucket {
    #[serde(rename = "n_minus_1")]
    NMinus1,
    #[serde(rename = "n_minus_2")]
    NMinus2,
    #[serde(rename = "n_minus_3")]
    NMinus3,
    Other,
}

impl EigenBucket {
    pub fn from_counts(n: usize, m1: usize, m2: usize) -> Self {
        match n.saturating_sub(m1 + m2) {
            1 => EigenBucket::NMinus1,
            2 => EigenBucket::NMinus2,
            3 => EigenBucket::NMinus3,
            _ => EigenBucket::Other,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EigenBucket::NMinus1 => "n_minus_1",
            EigenBucket::NMinus2 => "n_minus_2",
            EigenBucket::NMinus3 => "n_minus_3",
            EigenBucket::Other => "other",
        }
    }
}

pub fn classify_eigencount(g: &Graph) -> Result<EigenBucket, SpectralError> {
    let p = distance_char_poly(g)?;
    let m1 = p.deflate_at(&(-1).into())?.1;
    let m2 = p.deflate_at(&(-2).into())?.1;
    Ok(EigenBucket::from_counts(g.order(), m1, m2))
}
