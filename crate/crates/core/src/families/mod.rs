//! The named graph families: descriptors, builders, admissibility under the
//! three characterization theorems, recognition and member enumeration.

mod admissible;
mod catalog;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub use admissible::{j7_value, thm31_admissible, thm41_admissible, thm42_admissible, Theorem};
pub use catalog::{
    classify_eigencount, enumerate_members, recognize, recognize_all, Catalog, EigenBucket,
};

use crate::graph::{Graph, GraphError, Partition, MAX_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    I1,
    I2,
    I3,
    I4,
    I5,
    I6,
    I7,
    J1,
    J2,
    J3,
    J4,
    J5,
    J6,
    J7,
    /// `K_{s,t}`
    Kst,
    /// `K_s^c v K_t`
    Kck,
    /// `K_{a,b,c}`
    Kabc,
    /// `(K_a^c v K_b^c) v K_c`
    Kkk,
    /// `K_a v (K_b u K_c)`
    Kjoin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Part {
    Clique,
    Independent,
}

use Part::{Clique as C, Independent as E};

const P4_EDGES: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3)];

impl FamilyId {
    /// Every id in recognition priority order.
    pub const ALL: [FamilyId; 19] = [
        FamilyId::I1,
        FamilyId::I2,
        FamilyId::I3,
        FamilyId::I4,
        FamilyId::I5,
        FamilyId::I6,
        FamilyId::I7,
        FamilyId::J1,
        FamilyId::J2,
        FamilyId::J3,
        FamilyId::J4,
        FamilyId::J5,
        FamilyId::J6,
        FamilyId::J7,
        FamilyId::Kst,
        FamilyId::Kck,
        FamilyId::Kabc,
        FamilyId::Kkk,
        FamilyId::Kjoin,
    ];

    pub fn name(self) -> &'static str {
        use FamilyId::*;
        match self {
            I1 => "I1",
            I2 => "I2",
            I3 => "I3",
            I4 => "I4",
            I5 => "I5",
            I6 => "I6",
            I7 => "I7",
            J1 => "J1",
            J2 => "J2",
            J3 => "J3",
            J4 => "J4",
            J5 => "J5",
            J6 => "J6",
            J7 => "J7",
            Kst => "KST",
            Kck => "KCK",
            Kabc => "KABC",
            Kkk => "KKK",
            Kjoin => "KJOIN",
        }
    }

    pub fn is_i(self) -> bool {
        self <= FamilyId::I7
    }

    pub fn is_j(self) -> bool {
        (FamilyId::J1..=FamilyId::J7).contains(&self)
    }

    /// Quotient pattern: the base graph on the parts and each part's kind.
    /// Part `i` is sized by parameter `i`.
    fn template(self) -> (&'static [(usize, usize)], &'static [Part]) {
        use FamilyId::*;
        match self {
            I1 => (&[], &[C]),
            I2 => (&[(0, 1)], &[C, E]),
            I3 => (&[(0, 1), (0, 2)], &[C, C, C]),
            I4 => (&[(0, 1), (0, 2)], &[C, C, E]),
            I5 => (&[(0, 1)], &[E, E]),
            I6 => (&[(0, 1), (0, 2)], &[E, C, C]),
            I7 => (&[(0, 1), (0, 2)], &[E, C, E]),
            J1 => (P4_EDGES, &[E, C, E, E]),
            J2 => (P4_EDGES, &[E, C, C, E]),
            J3 => (P4_EDGES, &[E, C, E, C]),
            J4 => (P4_EDGES, &[E, E, C, C]),
            J5 => (P4_EDGES, &[E, C, C, C]),
            J6 => (P4_EDGES, &[C, C, E, C]),
            J7 => (P4_EDGES, &[C, C, C, C]),
            Kst => (&[(0, 1)], &[E, E]),
            Kck => (&[(0, 1)], &[E, C]),
            Kabc => (&[(0, 1), (0, 2), (1, 2)], &[E, E, E]),
            Kkk => (&[(0, 1), (0, 2), (1, 2)], &[E, E, C]),
            Kjoin => (&[(0, 1), (0, 2)], &[C, C, C]),
        }
    }

    pub fn arity(self) -> usize {
        self.template().1.len()
    }

    /// Smallest admissible value of each parameter.
    pub fn minimums(self) -> &'static [usize] {
        use FamilyId::*;
        match self {
            I1 => &[4],
            I2 => &[2, 1],
            I3 => &[2, 2, 2],
            I4 => &[2, 2, 1],
            I5 => &[1, 1],
            I6 => &[1, 2, 2],
            I7 => &[1, 2, 1],
            J1 | J2 | J3 | J4 | J5 | J6 | J7 => &[1, 1, 1, 1],
            Kst | Kck => &[1, 1],
            Kabc | Kkk | Kjoin => &[1, 1, 1],
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescriptorError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("malformed descriptor at offset {offset}: {reason}")]
    Syntax { offset: usize, reason: &'static str },
    #[error("{family} takes {expected} parameters, got {got}")]
    Arity {
        family: FamilyId,
        expected: usize,
        got: usize,
    },
    #[error("{family} parameter {index} must be at least {min}, got {got}")]
    BelowMinimum {
        family: FamilyId,
        index: usize,
        min: usize,
        got: usize,
    },
    #[error("total order {0} exceeds the supported maximum")]
    TooLarge(usize),
}

/// A family id with validated parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyDescriptor {
    id: FamilyId,
    params: Vec<usize>,
}

impl FamilyDescriptor {
    pub fn new(id: FamilyId, params: Vec<usize>) -> Result<Self, DescriptorError> {
        if params.len() != id.arity() {
            return Err(DescriptorError::Arity {
                family: id,
                expected: id.arity(),
                got: params.len(),
            });
        }
        for (index, (&got, &min)) in params.iter().zip(id.minimums()).enumerate() {
            if got < min {
                return Err(DescriptorError::BelowMinimum {
                    family: id,
                    index,
                    min,
                    got,
                });
            }
        }
        let total = params
            .iter()
            .try_fold(0usize, |acc, &p| acc.checked_add(p))
            .unwrap_or(usize::MAX);
        if total > MAX_ORDER {
            return Err(DescriptorError::TooLarge(total));
        }
        Ok(FamilyDescriptor { id, params })
    }

    pub fn id(&self) -> FamilyId {
        self.id
    }

    pub fn params(&self) -> &[usize] {
        &self.params
    }

    pub fn order(&self) -> usize {
        self.params.iter().sum()
    }

    pub fn build(&self) -> Graph {
        self.build_with_parts().0
    }

    /// The graph together with the partition into its defining parts.
    pub fn build_with_parts(&self) -> (Graph, Partition) {
        let (edges, kinds) = self.id.template();
        let base = Graph::from_edges(kinds.len(), edges).expect("template edges are valid");
        let parts: Vec<Graph> = kinds
            .iter()
            .zip(&self.params)
            .map(|(k, &s)| match k {
                Part::Clique => Graph::complete(s),
                Part::Independent => Graph::edgeless(s),
            })
            .collect::<Result<_, GraphError>>()
            .expect("parameters are positive");
        Graph::glex_product_with_blocks(&base, &parts).expect("order checked at construction")
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.id)?;
        for (i, p) in self.params.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl Serialize for FamilyDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for FamilyDescriptor {
    type Err = DescriptorError;

    /// `ID[p1,p2,...]` with decimal parameters and no whitespace.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let open = s.find('[').ok_or(DescriptorError::Syntax {
            offset: s.len(),
            reason: "expected '['",
        })?;
        let name = &s[..open];
        let id = FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| DescriptorError::UnknownFamily(name.to_string()))?;
        let body = &s[open + 1..];
        let close = body.find(']').ok_or(DescriptorError::Syntax {
            offset: s.len(),
            reason: "expected ']'",
        })?;
        if close + 1 != body.len() {
            return Err(DescriptorError::Syntax {
                offset: open + close + 2,
                reason: "trailing characters",
            });
        }
        let mut params = Vec::new();
        let mut offset = open + 1;
        for field in body[..close].split(',') {
            if field.is_empty() || !field.bytes().all(|b| b.is_ascii_digit()) {
                return Err(DescriptorError::Syntax {
                    offset,
                    reason: "expected a decimal parameter",
                });
            }
            if field.len() > 1 && field.starts_with('0') {
                return Err(DescriptorError::Syntax {
                    offset,
                    reason: "leading zero",
                });
            }
            let v: usize = field.parse().map_err(|_| DescriptorError::Syntax {
                offset,
                reason: "parameter too large",
            })?;
            params.push(v);
            offset += field.len() + 1;
        }
        FamilyDescriptor::new(id, params)
    }
}
