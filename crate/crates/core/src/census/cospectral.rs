use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::families::FamilyDescriptor;
use crate::graph::is_isomorphic;
use crate::spectral::distance_char_poly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CospectralPair {
    pub first: FamilyDescriptor,
    pub second: FamilyDescriptor,
    pub order: usize,
}

/// Non-isomorphic pairs with equal distance characteristic polynomials.
///
/// Graphs are grouped by polynomial, each group is split into isomorphism
/// classes, and one pair is emitted per pair of classes using the first
/// descriptor seen in each. Output follows input order.
pub fn cospectral_search(descriptors: &[FamilyDescriptor]) -> Vec<CospectralPair> {
    let built: Vec<_> = descriptors
        .par_iter()
        .map(|fd| {
            let g = fd.build();
            let p = distance_char_poly(&g).expect("family graphs are connected");
            (g, p.coeffs().to_vec())
        })
        .collect();
    let mut groups: HashMap<&[BigInt], Vec<usize>> = HashMap::new();
    let mut first_seen = Vec::new();
    for (i, (_, key)) in built.iter().enumerate() {
        let e = groups.entry(key.as_slice()).or_default();
        if e.is_empty() {
            first_seen.push(key.as_slice());
        }
        e.push(i);
    }
    let mut out = Vec::new();
    for key in first_seen {
        let mut reps: Vec<usize> = Vec::new();
        for &i in &groups[key] {
            if !reps
                .iter()
                .any(|&r| is_isomorphic(&built[r].0, &built[i].0))
            {
                reps.push(i);
            }
        }
        for (a, &i) in reps.iter().enumerate() {
            for &j in &reps[a + 1..] {
                out.push(CospectralPair {
                    first: descriptors[i].clone(),
                    second: descriptors[j].clone(),
                    order: built[i].0.order(),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fds(xs: &[&str]) -> Vec<FamilyDescriptor> {
        xs.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn remark_pair_is_found() {
        let pairs = cospectral_search(&fds(&["J7[1,1,3,9]", "J7[1,9,1,3]", "J7[2,2,2,2]"]));
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].order, 14);
        assert_eq!(pairs[0].first.to_string(), "J7[1,1,3,9]");
    }

    #[test]
    fn trivial_inputs() {
        assert!(cospectral_search(&fds(&["I5[2,3]"])).is_empty());
        // isomorphic duplicates are not a pair
        assert!(cospectral_search(&fds(&["I5[2,3]", "I5[3,2]"])).is_empty());
    }
}
