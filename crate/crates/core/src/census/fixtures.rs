//! Forbidden-subgraph fixtures recovered from their spectral fingerprints.

use rayon::prelude::*;
use serde::Serialize;

use super::tables::bounded_descriptors;
use crate::families::{thm31_admissible, FamilyDescriptor, FamilyId};
use crate::graph::graph6::write_graph6;
use crate::graph::{contains_induced, enumerate_connected, is_isomorphic, Graph};
use crate::poly::jacobi::approx_eigenvalues;
use crate::spectral::round4;

/// Match window for a value printed to four decimals.
pub const FINGERPRINT_TOLERANCE: f64 = 5e-5;

/// What is printed for one forbidden graph: its order and `∂k = value`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixtureTarget {
    pub label: &'static str,
    pub order: usize,
    pub statistic: usize,
    pub value: f64,
}

pub fn forbidden_targets() -> [FixtureTarget; 7] {
    let t = |label, order, statistic, value| FixtureTarget {
        label,
        order,
        statistic,
        value,
    };
    [
        t("F1", 5, 3, -0.3820),
        t("F2", 5, 3, -0.9125),
        t("F3", 5, 3, -0.7217),
        t("F4", 6, 5, -2.2223),
        t("F5", 6, 5, -2.3589),
        t("F6", 5, 3, -0.8284),
        t("F7", 5, 3, -0.7667),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecoveryStatus {
    Unique,
    Ambiguous,
    Missing,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixtureReport {
    pub label: String,
    pub order: usize,
    pub statistic: String,
    pub printed: f64,
    pub candidates: Vec<String>,
    pub computed: Vec<f64>,
    pub status: RecoveryStatus,
    /// For F6 only: whether the recovered graph is `K_{2,2,1}`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pinned: Option<bool>,
}

impl FixtureReport {
    /// The recovered graph when recovery was unique and any pin holds.
    pub fn graph(&self) -> Option<Graph> {
        if self.status != RecoveryStatus::Unique || self.pinned == Some(false) {
            return None;
        }
        crate::graph::graph6::parse_graph6(&self.candidates[0]).ok()
    }
}

fn k221() -> Graph {
    FamilyDescriptor::new(FamilyId::Kabc, vec![2, 2, 1])
        .expect("valid")
        .build()
}

type Fingerprinted = (Graph, Vec<f64>);

/// Search every connected diameter-2 graph of each target's order for the
/// printed statistic. All candidates are reported.
pub fn recover_forbidden_fixtures() -> Vec<FixtureReport> {
    let pool: Vec<(usize, Vec<Fingerprinted>)> = [5, 6]
        .into_iter()
        .map(|n| {
            let gs = enumerate_connected(n).expect("small order");
            let with_ev = gs
                .into_par_iter()
                .filter(|g| g.diameter().ok() == Some(2))
                .map(|g| {
                    let rows = g.all_pairs_distances().expect("connected").to_rows();
                    let rows: Vec<Vec<f64>> = rows
                        .into_iter()
                        .map(|r| r.into_iter().map(|v| v as f64).collect())
                        .collect();
                    let ev = approx_eigenvalues(&rows).expect("symmetric");
                    (g, ev)
                })
                .collect();
            (n, with_ev)
        })
        .collect();
    forbidden_targets()
        .iter()
        .map(|t| {
            let graphs = &pool
                .iter()
                .find(|(n, _)| *n == t.order)
                .expect("order searched")
                .1;
            let hits: Vec<(&Graph, f64)> = graphs
                .iter()
                .map(|(g, ev)| (g, ev[t.statistic - 1]))
                .filter(|(_, v)| (v - t.value).abs() <= FINGERPRINT_TOLERANCE)
                .collect();
            let status = match hits.len() {
                0 => RecoveryStatus::Missing,
                1 => RecoveryStatus::Unique,
                _ => RecoveryStatus::Ambiguous,
            };
            let pinned =
                (t.label == "F6").then(|| hits.len() == 1 && is_isomorphic(hits[0].0, &k221()));
            FixtureReport {
                label: t.label.to_string(),
                order: t.order,
                statistic: format!("d{}", t.statistic),
                printed: t.value,
                candidates: hits.iter().map(|(g, _)| write_graph6(g)).collect(),
                computed: hits.iter().map(|&(_, v)| round4(v)).collect(),
                status,
                pinned,
            }
        })
        .collect()
}

/// `(label, graph)` for every uniquely recovered fixture.
pub fn recovered_fixtures(reports: &[FixtureReport]) -> Vec<(String, Graph)> {
    reports
        .iter()
        .filter_map(|r| r.graph().map(|g| (r.label.clone(), g)))
        .collect()
}

/// Admissible I and J descriptors with parameters at most `max_param`.
pub fn thm31_members_bounded(max_param: usize) -> Vec<FamilyDescriptor> {
    FamilyId::ALL
        .iter()
        .filter(|id| id.is_i() || id.is_j())
        .flat_map(|&id| bounded_descriptors(id, max_param))
        .filter(thm31_admissible)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub member: FamilyDescriptor,
    pub fixture: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbiddenReport {
    pub checked: usize,
    pub fixtures: Vec<String>,
    pub violations: Vec<Violation>,
    pub pass: bool,
}

/// No member may contain any of the fixtures as an induced subgraph.
pub fn verify_forbidden(
    members: &[FamilyDescriptor],
    fixtures: &[(String, Graph)],
) -> ForbiddenReport {
    let violations: Vec<Violation> = members
        .par_iter()
        .flat_map_iter(|fd| {
            let g = fd.build();
            fixtures
                .iter()
                .filter(move |(_, f)| contains_induced(&g, f))
                .map(|(label, _)| Violation {
                    member: fd.clone(),
                    fixture: label.clone(),
                })
                .collect::<Vec<_>>()
        })
        .collect();
    ForbiddenReport {
        checked: members.len(),
        fixtures: fixtures.iter().map(|(l, _)| l.clone()).collect(),
        pass: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f6_is_pinned() {
        let reports = recover_forbidden_fixtures();
        let f6 = reports.iter().find(|r| r.label == "F6").unwrap();
        assert_eq!(f6.status, RecoveryStatus::Unique);
        assert_eq!(f6.pinned, Some(true));
        assert_eq!(f6.computed, vec![-0.8284]);
        assert_eq!(recovered_fixtures(&reports).len(), 7);
    }

    #[test]
    fn forbidden_examples() {
        let f6 = vec![("F6".to_string(), k221())];
        for s in ["I3[2,2,2]", "I5[2,3]", "J5[1,1,1,1]"] {
            let fd: FamilyDescriptor = s.parse().unwrap();
            assert!(verify_forbidden(&[fd], &f6).pass, "{s}");
        }
        // the fixture contains itself
        let k: FamilyDescriptor = "KABC[2,2,1]".parse().unwrap();
        assert!(!verify_forbidden(&[k], &f6).pass);
    }
}
