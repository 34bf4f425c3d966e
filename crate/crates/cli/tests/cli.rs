use std::io::Write;
use std::process::{Command, Output, Stdio};

fn distspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distspec"))
        .args(args)
        .output()
        .unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_distspec"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_prints_graph6() {
    let o = distspec(&["build", "I5[2,3]", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "D]o\n");
    let v: serde_json::Value =
        serde_json::from_slice(&distspec(&["build", "I5[2,3]"]).stdout).unwrap();
    assert_eq!(v[0]["descriptor"], "I5[2,3]");
    assert_eq!(v[0]["order"], 5);
}

#[test]
fn classify_path_on_four_vertices() {
    let o = distspec(&["classify", "Ch"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let item = &v[0];
    assert_eq!(item["third_largest_le_minus1"], true);
    assert_eq!(item["second_least_ge_minus2"], true);
    assert_eq!(item["descriptor"], "J1[1,1,1,1]");
    assert!(item["matches"]
        .as_array()
        .unwrap()
        .iter()
        .any(|m| m == "J7[1,1,1,1]"));
}

#[test]
fn spectrum_is_exact_where_possible() {
    let o = distspec(&["spectrum", "Cr", "--format", "text"]);
    assert_eq!(stdout(&o), "Cr: 4 0 -2^2\n");
    let v: serde_json::Value =
        serde_json::from_slice(&distspec(&["spectrum", "Bw"]).stdout).unwrap();
    assert_eq!(
        v[0]["spectrum"][0],
        serde_json::json!({"root": "2", "approx": 2.0, "mult": 1})
    );
    assert_eq!(v[0]["spectrum"][1]["mult"], 2);
}

#[test]
fn stdin_stream_and_per_item_errors() {
    let o = with_stdin(&["spectrum", "--input", "-"], "Cr\nC?\n");
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[1]["error"], "graph is not connected");
    assert!(v[0]["spectrum"].is_array());
}

#[test]
fn parse_errors_exit_2_with_offset() {
    let o = with_stdin(&["classify", "--input", "-"], "Cr\nD?\n");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2") && err.contains("offset 2"), "{err}");
    let o = distspec(&["build", "I5[2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("offset 4"));
    assert_eq!(distspec(&["spectrum", "--bogus"]).status.code(), Some(2));
    assert_eq!(distspec(&[]).status.code(), Some(2));
    assert_eq!(distspec(&["census", "--order", "7"]).status.code(), Some(2));
}

#[test]
fn census_reports_are_byte_identical() {
    let a = distspec(&["census", "--order", "4", "--order", "5", "--jobs", "2"]);
    let b = distspec(&["census", "--order", "5", "--order", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let text = stdout(&a);
    let at = |k: &str| text.find(&format!("\n  \"{k}\"")).unwrap();
    assert!(
        at("scope") < at("theorem31")
            && at("theorem31") < at("theorem41")
            && at("theorem41") < at("theorem42")
    );
    assert!(!text.contains("\"tables\""));
    assert_eq!(v["theorem31"]["disagreements"].as_array().unwrap().len(), 0);
    assert_eq!(v["theorem41"]["checked"], 27);
}

#[test]
fn census_exit_code_follows_disagreements() {
    // order 4 has nothing in the three-eigenvalue bucket
    assert_eq!(distspec(&["census", "--order", "4"]).status.code(), Some(0));
    // K_{3,1,1} is listed by the three-eigenvalue theorem but lands in the n - 2 bucket
    let o = distspec(&["census", "--order", "5", "--format", "text"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("D}o spectral false structural true"));
}

#[test]
fn verify_tables_reports_the_a16_row() {
    let o = distspec(&["verify-tables", "--max-param", "3", "--format", "text"]);
    let text = stdout(&o);
    let failing: Vec<&str> = text.lines().filter(|l| l.contains("FAIL")).collect();
    assert_eq!(
        failing,
        [
            "table1 A16 d5 (matched none) expected -2.1099 computed -2.0671: FAIL",
            "result: FAIL"
        ]
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(text.contains("table1 A12 d3 (matched d5)"));
}

#[test]
fn fixture_recovery_and_cospectral() {
    let o = distspec(&["recover-fixtures", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("F6 order 5 d3 = -0.8284: unique [Dvw] pinned true"));
    let o = distspec(&["cospectral", "J7[1,1,3,9]", "J7[1,9,1,3]"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cospectral"][0]["first"], "J7[1,1,3,9]");
    assert_eq!(v["cospectral"][0]["order"], 14);
    let o = distspec(&["cospectral", "I5[2,3]"]);
    assert_eq!(
        serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap()["cospectral"],
        serde_json::json!([])
    );
}
