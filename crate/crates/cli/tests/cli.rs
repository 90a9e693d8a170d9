use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gencayley"))
}

fn run(args: &[&str]) -> Output {
    bin()
        .args(args)
        .env_remove("GENCAYLEY_CAP")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn partition_json_golden() {
    let o = run(&[
        "partition",
        "--group",
        "S3",
        "--alpha",
        "inner:(12)",
        "--format",
        "json",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let golden = r#"{
  "alpha": "inner:(12)",
  "big_omega": [
    "(12)"
  ],
  "group": "S3",
  "mho": [
    "(13)",
    "(23)"
  ],
  "omega": [
    "e",
    "(123)",
    "(132)"
  ]
}
"#;
    assert_eq!(stdout(&o), golden);
}

#[test]
fn validate_reports_condition() {
    let o = run(&[
        "validate",
        "--group",
        "S3",
        "--alpha",
        "inner:(12)",
        "--subset",
        "(123)",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("violates (b)"));
    let o = run(&[
        "validate",
        "--group",
        "S3",
        "--alpha",
        "inner:(12)",
        "--subset",
        "(13)",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("violates (c)"));
    let o = run(&[
        "validate",
        "--group",
        "S3",
        "--alpha",
        "inner:(12)",
        "--subset",
        "(13),(23)",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&[
        "build",
        "--group",
        "S3",
        "--alpha",
        "inner:(123)",
        "--subset",
        "",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("violates (a)"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["partition", "--group", "Q8", "--alpha", "id"][..],
        &["partition", "--group", "S9", "--alpha", "id"],
        &["partition", "--group", "S3", "--alpha", "outer:(12)"],
        &[
            "validate", "--group", "S3", "--alpha", "id", "--subset", "(12",
        ],
        &["build", "--group", "gens: (12", "--alpha", "id"],
        &["frobnicate"],
        &["partition", "--group", "S3"],
        &[
            "partition",
            "--group",
            "S3",
            "--alpha",
            "id",
            "--format",
            "dot",
        ],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn order_cap_from_environment() {
    let o = bin()
        .args(["group", "--group", "S4"])
        .env("GENCAYLEY_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = bin()
        .args(["group", "--group", "S4"])
        .env("GENCAYLEY_CAP", "ten")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = bin()
        .args(["group", "--group", "S4"])
        .env("GENCAYLEY_CAP", "24")
        .output()
        .unwrap();
    assert!(o.status.success());
}

#[test]
fn dot_and_edges_roundtrip_counts() {
    let args = [
        "build",
        "--group",
        "S4",
        "--alpha",
        "inner:(12)",
        "--subset",
        "(34),(13)(24),(14)(23)",
    ];
    let dot = stdout(&run(&[&args[..], &["--format", "dot"]].concat()));
    assert!(dot.starts_with("graph \"GC(S4,{(13)(24), (14)(23), (34)},inner:(12))\" {"));
    let vertices = dot.lines().filter(|l| l.contains("[label=")).count();
    let edges = dot.lines().filter(|l| l.contains(" -- ")).count();
    assert_eq!(vertices, 24);
    assert_eq!(edges, 24 * 3 / 2);

    let list = stdout(&run(&[&args[..], &["--format", "edges"]].concat()));
    let parsed: Vec<(usize, usize)> = list
        .lines()
        .map(|l| {
            let mut it = l.split(' ').map(|x| x.parse::<usize>().unwrap());
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect();
    assert_eq!(parsed.len(), edges);
    let mut sorted = parsed.clone();
    sorted.sort();
    assert_eq!(parsed, sorted);
    assert!(parsed.iter().all(|&(a, b)| a < b && b < 24));
}

#[test]
fn enumerate_and_gci_test() {
    let o = run(&[
        "enumerate",
        "--group",
        "S3",
        "--alpha",
        "inner:(12)",
        "--max-size",
        "6",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 4);
    assert_eq!(v["subsets"][3], serde_json::json!(["(13)", "(23)"]));

    let o = run(&[
        "gci-test",
        "--group",
        "S3",
        "--alpha",
        "inner:(12)",
        "--subset",
        "(12)",
        "--alpha2",
        "inner:(13)",
        "--subset2",
        "(13)",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["gci_isomorphic"], true);
    assert_eq!(v["graph_isomorphic"], true);
    assert_eq!(v["certificate"]["vertex_map"].as_object().unwrap().len(), 6);

    let o = run(&[
        "gci-test",
        "--group",
        "S3",
        "--alpha",
        "inner:(12)",
        "--subset",
        "(12)",
        "--alpha2",
        "id",
        "--subset2",
        "(12)",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["gci_isomorphic"], false);
    assert_eq!(v["graph_isomorphic"], true);
}

#[test]
fn aut_and_classify() {
    let o = run(&["aut", "--group", "S6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 1440);
    let o = run(&["classify", "--group", "S3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["restricted_gci"]["decision"]["status"], "yes");
    assert_eq!(v["gci"]["status"], "no");
    let o = run(&["classify", "--group", "S5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v["restricted_gci"]["decision"]["witness"]["involutions"],
        serde_json::json!(["(12)", "(12)(34)"])
    );
}

#[test]
fn verify_paper_passes_and_is_stable() {
    let a = run(&[
        "verify-paper",
        "--targets",
        "S3,S4,S5,S6",
        "--format",
        "json",
    ]);
    assert!(a.status.success(), "{}", stderr(&a));
    let b = run(&[
        "--parallel",
        "verify-paper",
        "--targets",
        "S3,S4,S5,S6",
        "--format",
        "json",
    ]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["all_pass"], true);
    let groups: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["restricted_gci"]["status"].as_str().unwrap())
        .collect();
    assert_eq!(groups, vec!["yes", "no", "no", "no"]);
    let text = run(&["verify-paper", "--targets", "S3"]);
    assert!(stdout(&text).contains("all claims pass"));
}

#[test]
fn out_path_writes_file() {
    let dir = std::env::temp_dir().join(format!("gencayley-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3.json");
    let o = run(&[
        "group",
        "--group",
        "gens: (12),(123) degree:3",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 6);
    std::fs::remove_dir_all(&dir).unwrap();
}
