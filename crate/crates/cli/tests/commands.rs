use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use topoindex_cli::edgelist::read_edge_list;
use topoindex_core::{generate, Family, NetworkSpec};

fn topoindex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topoindex"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_writes_edge_lists() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("hc1.txt");
    let o = topoindex(&["gen", "--family", "HC", "--n", "1", "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().next(), Some("HC 1 6 6"));
    assert_eq!(text.lines().count(), 7);

    let o = topoindex(&["gen", "--family", "SL", "--n", "2"]);
    assert_eq!(stdout(&o).lines().next(), Some("SL 2 66 144"));
}

#[test]
fn gen_rejects_dimension_zero_and_bad_paths() {
    let o = topoindex(&["gen", "--family", "HX", "--n", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("invalid dimension"));

    let o = topoindex(&[
        "gen",
        "--family",
        "HX",
        "--n",
        "2",
        "--out",
        "/nonexistent-dir/x.txt",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("/nonexistent-dir/x.txt"));
}

#[test]
fn edge_lists_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for family in Family::ALL {
        for n in 1..=6 {
            let out = dir.path().join(format!("{family}{n}.txt"));
            let o = topoindex(&[
                "gen",
                "--family",
                family.code(),
                "--n",
                &n.to_string(),
                "--out",
                path_str(&out),
            ]);
            assert!(o.status.success());
            let bytes = fs::read(&out).unwrap();
            let (spec, g) = read_edge_list(bytes.as_slice()).unwrap();
            assert_eq!(spec, NetworkSpec::new(family, n));
            assert_eq!(g, generate(spec).unwrap().graph);
        }
    }
}

#[test]
fn compute_prints_exact_values() {
    let o = topoindex(&[
        "compute", "--family", "CS", "--n", "1", "--index", "pi1star",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "decimal: 46656"));

    let o = topoindex(&["compute", "--family", "OX", "--n", "1", "--index", "pi2"]);
    assert!(stdout(&o).lines().any(|l| l == "factored: 2^60"));

    for family in Family::ALL {
        let edges = generate(NetworkSpec::new(family, 4))
            .unwrap()
            .graph
            .edge_count();
        let o = topoindex(&[
            "compute",
            "--family",
            family.code(),
            "--n",
            "4",
            "--index",
            "chi",
            "--alpha",
            "0",
        ]);
        assert!(
            stdout(&o).lines().any(|l| l == format!("decimal: {edges}")),
            "{family}"
        );
    }

    let o = topoindex(&["compute", "--family", "CS", "--n", "1", "--index", "randic"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown index"));
}

#[test]
fn verify_exit_codes_follow_mismatches() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let r = path_str(&report);

    let o = topoindex(&["verify", "--family", "CS", "--n-range", "1..10", "--out", r]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = topoindex(&["verify", "--family", "HX", "--n-range", "3..10", "--out", r]);
    assert_eq!(o.status.code(), Some(1));
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    let mismatches: Vec<_> = json["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["status"] == "MISMATCH")
        .collect();
    assert_eq!(mismatches.len(), 3 * 8);
    assert!(mismatches
        .iter()
        .all(|e| e["published_value"].is_string() && e["oracle_value"].is_string()));

    let o = topoindex(&[
        "verify",
        "--family",
        "HX",
        "--n-range",
        "3..10",
        "--expect-mismatch",
        "pi2,pi1star,chi",
        "--out",
        r,
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    // an allowlist entry that never fires is itself a failure
    let o = topoindex(&[
        "verify",
        "--family",
        "HX",
        "--n-range",
        "3..10",
        "--expect-mismatch",
        "pi2,pi1star,chi,SL/pi2",
        "--out",
        r,
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("`SL/pi2` matched no mismatch"));

    let o = topoindex(&[
        "verify",
        "--family",
        "HX",
        "--n-range",
        "3..10",
        "--expect-mismatch",
        "pi2,chi",
        "--out",
        r,
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_report_goes_to_stdout_without_out() {
    let o = topoindex(&[
        "verify",
        "--family",
        "HC",
        "--n-range",
        "1..3",
        "--random-graphs",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["summary"]["HC"]["matched"], 3 * 8);
    assert_eq!(json["random_graphs"]["count"], 5);
    assert!(stderr(&o).ends_with("ok\n"));
}

#[test]
fn sweep_rows_and_errors() {
    let o = topoindex(&["sweep", "--index", "pi1", "--c", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1 + 55);
    // silicate values dominate at every n
    let rows: Vec<Vec<&str>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    for n in 2..=12 {
        let at_n: Vec<(&str, f64)> = rows
            .iter()
            .filter(|r| r[1] == n.to_string())
            .map(|r| (r[0], r[4].parse().unwrap()))
            .collect();
        let top = at_n.iter().max_by(|a, b| a.1.total_cmp(&b.1)).unwrap();
        assert_eq!(top.0, "SL", "n = {n}");
    }

    let o = topoindex(&["sweep", "--family", "", "--csv", "/dev/stdout"]);
    assert_eq!(stdout(&o), "family,n,index,param,value_log10,value_exact\n");

    let o = topoindex(&["sweep", "--n-range", "1..4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn honeycomb_chi_two_matches_graph_side() {
    let o = topoindex(&[
        "sweep",
        "--family",
        "HC",
        "--n-range",
        "2..3",
        "--index",
        "chi",
        "--alpha",
        "2",
    ]);
    let text = stdout(&o);
    let exact: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    // (2,2): 6 edges of 16, (2,3): 12n-12 of 25, (3,3): 9n^2-15n+6 of 36
    let chi = |n: i64| 6 * 16 + (12 * n - 12) * 25 + (9 * n * n - 15 * n + 6) * 36;
    assert_eq!(exact, vec![chi(2).to_string(), chi(3).to_string()]);
}

#[test]
fn plot_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("one.csv");
    fs::write(
        &csv,
        "family,n,index,param,value_log10,value_exact\nOX,2,pi2,,3.5,3162\n",
    )
    .unwrap();
    let o = topoindex(&["plot", "--csv", path_str(&csv)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let svg = stdout(&o);
    assert_eq!(svg.matches("<circle").count(), 1);
    roxmltree::Document::parse(&svg).unwrap();

    fs::write(
        &csv,
        "family,n,index,param,value_log10,value_exact,weight\n",
    )
    .unwrap();
    let o = topoindex(&["plot", "--csv", path_str(&csv)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown column `weight`"));

    fs::write(
        &csv,
        "family,n,index,param,value_log10,value_exact\nOX,two,pi2,,3.5,\n",
    )
    .unwrap();
    let o = topoindex(&["plot", "--csv", path_str(&csv)]);
    assert_eq!(o.status.code(), Some(2));

    let sweep = dir.path().join("pi2.csv");
    let svg_path = dir.path().join("pi2.svg");
    assert!(
        topoindex(&["sweep", "--index", "pi2", "--csv", path_str(&sweep)])
            .status
            .success()
    );
    assert!(topoindex(&[
        "plot",
        "--csv",
        path_str(&sweep),
        "--svg",
        path_str(&svg_path)
    ])
    .status
    .success());
    let svg = fs::read_to_string(&svg_path).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(
        doc.descendants()
            .filter(|n| n.has_tag_name("polyline"))
            .count(),
        5
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(topoindex(&[]).status.code(), Some(2));
    assert_eq!(
        topoindex(&["gen", "--family", "QQ", "--n", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        topoindex(&["verify", "--n-range", "9..2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        topoindex(&["verify", "--expect-mismatch", "QQ/pi2"])
            .status
            .code(),
        Some(2)
    );
}
