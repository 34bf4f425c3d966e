//! Distance spectra: characteristic polynomials, exact eigenvalue counts,
//! threshold predicates, cospectrality and equitable partitions.

mod equitable;

use num_bigint::BigInt;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use thiserror::Error;

pub use equitable::{check_equitable, coarsest_equitable, divisor_divides, DivisorMatrix};

use crate::graph::{Graph, GraphError, PartitionError};
use crate::poly::{
    char_poly_exact, count_around, count_roots, isolate_real_roots, rational, IntMatrix, IntPoly,
    PolyError, Rational, RootCounts, Side,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("predicate needs at least {need} vertices, graph has {got}")]
    OrderTooSmall { need: usize, got: usize },
    #[error("partition is not distance equitable")]
    NotEquitable,
}

/// Distance matrix as an integer matrix.
pub fn distance_matrix(g: &Graph) -> Result<IntMatrix, GraphError> {
    Ok(IntMatrix::from(&g.all_pairs_distances()?))
}

/// `det(xI - D(g))`.
pub fn distance_char_poly(g: &Graph) -> Result<IntPoly, GraphError> {
    Ok(char_poly_exact(&distance_matrix(g)?))
}

/// Exact integer root or an isolating interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Root {
    Exact(BigInt),
    Interval(Rational, Rational),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumEntry {
    pub root: Root,
    pub approx: f64,
    pub mult: usize,
}

/// Distinct eigenvalues, descending, with multiplicities summing to the order.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Spectrum {
    pub entries: Vec<SpectrumEntry>,
}

/// Width below which isolating intervals are reported.
pub fn isolation_width() -> Rational {
    rational(1, 1 << 30)
}

impl Spectrum {
    pub fn of_poly(p: &IntPoly) -> Result<Self, PolyError> {
        let entries = isolate_real_roots(p, &isolation_width())?
            .into_iter()
            .map(|r| {
                let approx = r.approx();
                let root = match r.exact {
                    Some(k) => Root::Exact(k),
                    None => Root::Interval(r.lo, r.hi),
                };
                SpectrumEntry {
                    root,
                    approx,
                    mult: r.mult,
                }
            })
            .collect();
        Ok(Spectrum { entries })
    }

    pub fn order(&self) -> usize {
        self.entries.iter().map(|e| e.mult).sum()
    }

    /// Eigenvalues with repetition, descending: `∂1, ∂2, ...`.
    pub fn values(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.approx, e.mult))
            .collect()
    }

    /// The `k`-th largest eigenvalue, 1-based.
    pub fn nth(&self, k: usize) -> Option<f64> {
        self.values().get(k.checked_sub(1)?).copied()
    }
}

/// Round to four decimals for display, normalizing negative zero.
pub fn round4(x: f64) -> f64 {
    let r = (x * 1e4).round() / 1e4;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

impl Serialize for SpectrumEntry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SpectrumEntry", 3)?;
        match &self.root {
            Root::Exact(k) => st.serialize_field("root", &k.to_string())?,
            Root::Interval(lo, hi) => {
                st.serialize_field("root", &[lo.to_string(), hi.to_string()])?
            }
        }
        st.serialize_field("approx", &round4(self.approx))?;
        st.serialize_field("mult", &self.mult)?;
        st.end()
    }
}

pub fn spectrum(g: &Graph) -> Result<Spectrum, SpectralError> {
    Ok(Spectrum::of_poly(&distance_char_poly(g)?)?)
}

/// Multiplicity of the integer `r` as a distance eigenvalue.
pub fn multiplicity_at(g: &Graph, r: i64) -> Result<usize, SpectralError> {
    Ok(distance_char_poly(g)?.deflate_at(&BigInt::from(r))?.1)
}

/// Distance eigenvalues strictly on `side` of `t`, with multiplicity.
pub fn count_eigen(g: &Graph, side: Side, t: &Rational) -> Result<usize, SpectralError> {
    Ok(count_roots(&distance_char_poly(g)?, side, t)?)
}

/// Exact counts of distance eigenvalues below, at and above a rational.
pub fn counts_at(p: &IntPoly, t: i64) -> RootCounts {
    let q = IntPoly::new(vec![BigInt::from(-t), BigInt::from(1)]);
    count_around(p, &q, &rational(t - 1, 1), &rational(t + 1, 1))
        .expect("nonzero polynomial, simple bracket")
}

fn require_order(g: &Graph, need: usize) -> Result<(), SpectralError> {
    if g.order() < need {
        return Err(SpectralError::OrderTooSmall {
            need,
            got: g.order(),
        });
    }
    Ok(())
}

/// `∂3(g) <= -1`: at most two eigenvalues strictly above `-1`.
pub fn third_largest_le_minus1(g: &Graph) -> Result<bool, SpectralError> {
    require_order(g, 3)?;
    Ok(count_eigen(g, Side::Greater, &rational(-1, 1))? <= 2)
}

/// `∂(n-1)(g) >= -2`: at most one eigenvalue strictly below `-2`.
pub fn second_least_ge_minus2(g: &Graph) -> Result<bool, SpectralError> {
    require_order(g, 2)?;
    Ok(count_eigen(g, Side::Less, &rational(-2, 1))? <= 1)
}

/// Both threshold conditions from one characteristic polynomial.
pub fn threshold_pair(p: &IntPoly) -> (bool, bool) {
    let above = count_roots(p, Side::Greater, &rational(-1, 1)).expect("nonzero");
    let below = count_roots(p, Side::Less, &rational(-2, 1)).expect("nonzero");
    (above <= 2, below <= 1)
}

/// `x^2 - 2x - 2`, whose root in `(-1, 0)` is `1 - sqrt 3`.
pub fn one_minus_sqrt3_poly() -> IntPoly {
    IntPoly::from_i64s(&[-2, -2, 1])
}

/// Exact counts relative to `1 - sqrt 3`.
pub fn counts_at_one_minus_sqrt3(p: &IntPoly) -> RootCounts {
    count_around(
        p,
        &one_minus_sqrt3_poly(),
        &rational(-1, 1),
        &rational(0, 1),
    )
    .expect("nonzero polynomial")
}

/// `∂2(g) < 1 - sqrt 3`, decided exactly.
pub fn second_largest_below_one_minus_sqrt3(g: &Graph) -> Result<bool, SpectralError> {
    require_order(g, 2)?;
    let c = counts_at_one_minus_sqrt3(&distance_char_poly(g)?);
    Ok(c.greater <= 1 && c.equal == 0)
}

/// Equal distance characteristic polynomials.
pub fn are_cospectral(g: &Graph, h: &Graph) -> Result<bool, SpectralError> {
    let pg = distance_char_poly(g)?;
    let ph = distance_char_poly(h)?;
    Ok(g.order() == h.order() && pg == ph)
}

/// Largest real root as a float, from its isolating interval.
pub fn largest_root(p: &IntPoly) -> Option<f64> {
    isolate_real_roots(p, &isolation_width())
        .ok()?
        .first()
        .map(|r| r.approx())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }
    fn e(n: usize) -> Graph {
        Graph::edgeless(n).unwrap()
    }
    fn p(n: usize) -> Graph {
        Graph::path(n).unwrap()
    }

    #[test]
    fn char_poly_examples() {
        let k5 = &IntPoly::x_plus(-4) * &IntPoly::x_plus(1).pow(4);
        assert_eq!(distance_char_poly(&k(5)).unwrap(), k5);
        let k3 = &IntPoly::x_plus(-2) * &IntPoly::x_plus(1).pow(2);
        assert_eq!(distance_char_poly(&k(2).join(&e(1)).unwrap()).unwrap(), k3);
        // table formula for K_a^c v K_b^c at a = b = 2: (x+2)^2 (x^2 - 4x)
        let c4 = &IntPoly::x_plus(2).pow(2) * &IntPoly::from_i64s(&[0, -4, 1]);
        assert_eq!(distance_char_poly(&e(2).join(&e(2)).unwrap()).unwrap(), c4);
        assert_eq!(distance_char_poly(&e(2)), Err(GraphError::NotConnected));
    }

    #[test]
    fn spectrum_examples() {
        let s = spectrum(&k(4)).unwrap();
        assert_eq!(s.entries.len(), 2);
        assert_eq!(
            (s.entries[0].root.clone(), s.entries[0].mult),
            (Root::Exact(BigInt::from(3)), 1)
        );
        assert_eq!(
            (s.entries[1].root.clone(), s.entries[1].mult),
            (Root::Exact(BigInt::from(-1)), 3)
        );

        // K_2^c v K_2: roots of x^2 - 3x - 2, then -1 and -2
        let s = spectrum(&e(2).join(&k(2)).unwrap()).unwrap();
        let v = s.values();
        let disc = 17f64.sqrt();
        let expect = [(3.0 + disc) / 2.0, (3.0 - disc) / 2.0, -1.0, -2.0];
        for (a, b) in v.iter().zip(expect) {
            assert!((a - b).abs() < 1e-9, "{v:?}");
        }
        assert_eq!(s.order(), 4);

        let s = spectrum(&p(4)).unwrap();
        assert_eq!(s.entries.len(), 4);
        assert!((s.nth(3).unwrap() + 1.1623).abs() < 1e-4);
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity_at(&e(2).join(&e(3)).unwrap(), -1), Ok(0));
        assert_eq!(multiplicity_at(&k(6), -1), Ok(5));
        assert_eq!(multiplicity_at(&k(3).join(&e(2)).unwrap(), -2), Ok(1));
    }

    #[test]
    fn predicates() {
        assert_eq!(third_largest_le_minus1(&p(5)), Ok(false));
        assert_eq!(third_largest_le_minus1(&p(4)), Ok(true));
        assert_eq!(second_least_ge_minus2(&p(4)), Ok(true));
        assert_eq!(
            third_largest_le_minus1(&p(2)),
            Err(SpectralError::OrderTooSmall { need: 3, got: 2 })
        );
        let parts = [e(2), k(1), e(2), k(1)];
        let g = Graph::glex_product(&p(4), &parts).unwrap();
        assert_eq!(third_largest_le_minus1(&g), Ok(false));
        assert!((spectrum(&g).unwrap().nth(3).unwrap() + 0.8990).abs() < 1e-4);
    }

    #[test]
    fn one_minus_sqrt3_threshold() {
        // K_{1,2}: ∂2 equals the threshold exactly, so "strictly below" is false
        let star = k(1).join(&e(2)).unwrap();
        assert_eq!(second_largest_below_one_minus_sqrt3(&star), Ok(false));
        let c = counts_at_one_minus_sqrt3(&distance_char_poly(&star).unwrap());
        assert_eq!((c.greater, c.equal, c.less), (1, 1, 1));
        assert_eq!(second_largest_below_one_minus_sqrt3(&k(5)), Ok(true));
        assert_eq!(second_largest_below_one_minus_sqrt3(&p(4)), Ok(false));
    }

    #[test]
    fn cospectral_examples() {
        assert_eq!(are_cospectral(&k(3), &k(3)), Ok(true));
        assert_eq!(are_cospectral(&k(3), &p(3)), Ok(false));
    }

    #[test]
    fn spectrum_json_shape() {
        let s = spectrum(&k(1).join(&e(2)).unwrap()).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert!(j.starts_with("[{\"root\":[\""), "{j}");
        assert!(j.contains("\"approx\":2.7321,\"mult\":1"), "{j}");
        assert!(
            j.contains("{\"root\":\"-2\",\"approx\":-2.0,\"mult\":1}"),
            "{j}"
        );
    }
}
