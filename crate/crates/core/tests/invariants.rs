use distspec::census::{cospectral_search, CensusReport, TablesReport};
use distspec::families::{j7_value, thm31_admissible, thm42_admissible, FamilyDescriptor};
use distspec::graph::{enumerate_connected, is_isomorphic};
use distspec::spectral::{distance_char_poly, spectrum};

fn fd(s: &str) -> FamilyDescriptor {
    s.parse().unwrap()
}

#[test]
fn cospectral_pair_values() {
    let (g, h) = (fd("J7[1,1,3,9]").build(), fd("J7[1,9,1,3]").build());
    assert_eq!(
        distance_char_poly(&g).unwrap(),
        distance_char_poly(&h).unwrap()
    );
    assert!(!is_isomorphic(&g, &h));
    // both sit strictly inside the threshold family, not on its equality boundary
    assert_eq!(j7_value(1, 1, 3, 9), -132);
    assert_eq!(j7_value(1, 9, 1, 3), -132);
    assert!(thm31_admissible(&fd("J7[1,1,3,9]")) && thm31_admissible(&fd("J7[1,9,1,3]")));
    assert!(!thm42_admissible(&fd("J7[1,1,3,9]")));
}

#[test]
fn cospectral_search_over_order_14_j7() {
    let descs: Vec<FamilyDescriptor> = distspec::util::compositions(14, 4)
        .into_iter()
        .filter_map(|p| FamilyDescriptor::new(distspec::families::FamilyId::J7, p).ok())
        .filter(thm31_admissible)
        .collect();
    let pairs = cospectral_search(&descs);
    assert!(pairs.iter().any(|p| {
        let names = [p.first.to_string(), p.second.to_string()];
        names.contains(&"J7[1,1,3,9]".to_string()) && names.contains(&"J7[1,9,1,3]".to_string())
    }));
}

#[test]
fn reports_are_deterministic() {
    let graphs = enumerate_connected(5).unwrap();
    let a = serde_json::to_string(&CensusReport::theorems("n=5", &graphs)).unwrap();
    let b = serde_json::to_string(&CensusReport::theorems("n=5", &graphs)).unwrap();
    assert_eq!(a, b);
    assert!(a.starts_with(
        r#"{"scope":{"source":"n=5","orders":[5],"graphs":21},"theorem31":{"checked":21"#
    ));
    let report = CensusReport::theorems("n=5", &graphs);
    let s = report.theorem31.as_ref().unwrap();
    assert_eq!(s.disagreements.is_empty(), s.agreements == s.checked);
}

#[test]
fn tables_report_serializes_in_fixed_order() {
    let t = TablesReport::run(2);
    let v = serde_json::to_value(&t).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["table1", "table2", "table3"]);
    let s = serde_json::to_string(&t).unwrap();
    assert!(s.contains(r#""label":"A1","printed_statistic":"d3","matched_statistic":"d3","expected":-0.6557,"computed":-0.6557"#));
}

#[test]
fn spectrum_multiplicities_sum_to_order() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            let s = spectrum(&g).unwrap();
            assert_eq!(s.order(), n);
            let v = s.values();
            assert!(v.windows(2).all(|w| w[0] >= w[1]));
        }
    }
}
