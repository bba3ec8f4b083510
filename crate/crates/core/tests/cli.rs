use vknot::cli::{run, EXIT_NOT_A_KNOT, EXIT_OK, EXIT_USAGE};

fn vknot(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("vknot").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn bound_of_vt_7_3_1() {
    let (code, out, _) = vknot(&["invariants", "--family", "vt:7,3,1", "--bound"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "6\n");
}

#[test]
fn bound_of_vt_6_5_2() {
    let (code, out, _) = vknot(&["invariants", "--family", "vt:6,5,2", "--bound"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "7\n");
}

#[test]
fn labelled_output_for_several_selectors() {
    let (code, out, _) = vknot(&["invariants", "--family", "ijk:2,1,0", "--p", "--u"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "P = 0\nu = 0\n");
}

#[test]
fn braid_input_with_negative_leading_token() {
    let (code, out, _) = vknot(&["invariants", "--braid", "-1 v2", "--gauss-code"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert_eq!(out.lines().count(), 1);
}

#[test]
fn invariants_json_is_byte_stable() {
    let args = ["invariants", "--family", "vt:4,3,1", "--json"];
    let (c1, a, _) = vknot(&args);
    let (c2, b, _) = vknot(&args);
    assert_eq!((c1, c2), (EXIT_OK, EXIT_OK));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert!(v["P"]["terms"].is_array());
    assert!(v["bound"].is_u64());
}

#[test]
fn parse_errors_exit_with_usage() {
    assert_eq!(vknot(&["invariants", "--braid", "1 x2"]).0, EXIT_USAGE);
    assert_eq!(vknot(&["invariants", "--family", "vt:2,1"]).0, EXIT_USAGE);
    assert_eq!(vknot(&["nonsense"]).0, EXIT_USAGE);
}

#[test]
fn multi_component_input_is_rejected() {
    let (code, _, err) = vknot(&["invariants", "--braid", "1 1", "--strands", "2"]);
    assert_eq!(code, EXIT_NOT_A_KNOT);
    assert!(err.starts_with("error:"));
}

#[test]
fn unknot_seq_3_2_0() {
    let (code, out, _) = vknot(&["unknot-seq", "3", "2", "0"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3, "{out}");
    assert!(lines[0].starts_with('A'));
    assert!(lines[1].starts_with('C'));
    assert_eq!(lines[2], "total 1");
}

#[test]
fn unknot_seq_3_2_2_with_verify() {
    let (code, out, _) = vknot(&["unknot-seq", "3", "2", "2", "--verify"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("total 2\n"));
    assert!(out.trim_end().ends_with("pass"));
}

#[test]
fn unknot_seq_rejects_links() {
    assert_eq!(vknot(&["unknot-seq", "4", "3", "1"]).0, EXIT_NOT_A_KNOT);
}

#[test]
fn table_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("vt2.csv");
    let (code, out, _) = vknot(&["table", "vt2", "--max-p", "6", "--csv", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("p,q,half_sum"));
    assert!(csv.contains("6,5,7"));
    assert_eq!(lines.count() + 1, out.lines().count());
}

#[test]
fn scan_is_deterministic_across_worker_counts() {
    let one = vknot(&["scan", "--p", "3", "--q", "4", "--workers", "1"]);
    let four = vknot(&["scan", "--p", "3", "--q", "4", "--workers", "4"]);
    assert_eq!(one.0, EXIT_OK);
    assert_eq!(one.1, four.1);
    assert_eq!(one.1.lines().count(), 1 << 8);
    let first: serde_json::Value = serde_json::from_str(one.1.lines().next().unwrap()).unwrap();
    assert_eq!(first["subset"], serde_json::json!([]));
}

#[test]
fn scan_to_jsonl_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.jsonl");
    let (code, out, _) = vknot(&["scan", "--p", "3", "--q", "4", "--nonzero-u", "--jsonl", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("scanned 256 subsets of (3,4);"));
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(body.lines().count() > 0);
    for line in body.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["components"], 1);
    }
}

#[test]
fn scan_rejects_zero_workers() {
    assert_eq!(vknot(&["scan", "--p", "3", "--q", "2", "--workers", "0"]).0, EXIT_USAGE);
}

#[test]
fn verify_small_range_passes() {
    let (code, out, _) = vknot(&["verify", "theorem2", "--max-i", "6", "--strict"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.trim_end().ends_with(", 0 failed"), "{out}");
    let (code, json, _) = vknot(&["verify", "theorem2", "--max-i", "6", "--json", "--workers", "2"]);
    assert_eq!(code, EXIT_OK);
    for line in json.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["pass"], true);
    }
}
