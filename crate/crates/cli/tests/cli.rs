use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn equistat(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_equistat"));
    cmd.args(args).env_remove("EQUISTAT_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.env("EQUISTAT_CACHE_DIR", dir);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_equistat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn csv_counts(text: &str) -> Vec<(String, u64)> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.records()
        .map(|rec| {
            let rec = rec.unwrap();
            (rec[1].to_string(), rec[2].parse().unwrap())
        })
        .collect()
}

#[test]
fn enumerate_distribution_csv() {
    let o = equistat(
        &["enumerate", "--family", "perms", "--n", "4", "--stats", "p_silly"],
        None,
    );
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("n,key,count\n"));
    assert!(!text.contains('\r'));
    assert_eq!(csv_counts(&text).iter().map(|(_, c)| c).sum::<u64>(), 24);
}

#[test]
fn enumerate_fishburn_row() {
    for (n, expected) in [(6, 217), (7, 1014)] {
        let o = equistat(
            &["enumerate", "--family", "nlm", "--n", &n.to_string(), "--stats", "rne"],
            None,
        );
        let rows = csv_counts(&stdout(&o));
        assert_eq!(rows[0], ("0".to_string(), expected));
    }
}

#[test]
fn set_keys_and_json() {
    let o = equistat(
        &[
            "enumerate",
            "--family",
            "perms",
            "--n",
            "3",
            "--stats",
            "P,q",
            "--format",
            "json",
        ],
        None,
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["key_schema"], serde_json::json!(["P", "q"]));
    let total: u64 = v["counts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["count"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 6);

    let a = stdout(&equistat(
        &["enumerate", "--family", "nlm", "--n", "5", "--stats", "Lcr,rcr"],
        None,
    ));
    let b = stdout(&equistat(
        &[
            "enumerate",
            "--family",
            "nlm",
            "--n",
            "5",
            "--stats",
            "Lcr,rcr",
            "--by-filter",
        ],
        None,
    ));
    assert_eq!(a, b);
}

#[test]
fn verify_exit_codes() {
    for args in [
        &["verify", "--theorem", "zagier", "--n-max", "7"][..],
        &["verify", "--conjecture", "2", "--n-max", "7"],
        &["verify", "--theorem", "main_xyz", "--n-max", "1"],
    ] {
        let o = equistat(args, None);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(stdout(&o).contains("\"verified\""));
    }
    assert_eq!(
        equistat(&["verify", "--theorem", "zagier", "--n-max", "10"], None)
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        equistat(&["verify", "--theorem", "g_transfer", "--n-max", "8"], None)
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        equistat(&["verify", "--theorem", "nope", "--n-max", "3"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(equistat(&["verify", "--n-max", "3"], None).status.code(), Some(2));
    assert_eq!(
        equistat(&["enumerate", "--family", "perms", "--n", "12"], None)
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn io_errors() {
    let o = equistat(
        &[
            "enumerate",
            "--family",
            "perms",
            "--n",
            "3",
            "--out",
            "/nonexistent/dir/out.csv",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn cache_hits_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["enumerate", "--family", "nlm", "--n", "6", "--stats", "Rne,min"];
    let cold = equistat(&args, Some(dir.path()));
    let warm = equistat(&args, Some(dir.path()));
    assert_eq!(cold.stdout, warm.stdout);
    let uncached = equistat(&args, None);
    assert_eq!(cold.stdout, uncached.stdout);

    // the second run really reads the stored file
    let entries: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1);
    let path = entries[0].as_ref().unwrap().path();
    fs::write(&path, "sentinel\n").unwrap();
    assert_eq!(stdout(&equistat(&args, Some(dir.path()))), "sentinel\n");
    // a different configuration gets its own entry
    equistat(
        &["enumerate", "--family", "nlm", "--n", "5", "--stats", "Rne,min"],
        Some(dir.path()),
    );
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 2);
}

#[test]
fn counterexample_writes_witness() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "--theorem", "conj21", "--n-max", "3"];
    assert!(equistat(&args, Some(dir.path())).status.success());
    let entry = fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let forged = r#"{"check_id":"conj21","n_range":[1,3],"status":"counterexample","witness":{"n":2}}"#;
    fs::write(&entry, forged).unwrap();
    let witness = dir.path().join("w.json");
    let o = equistat(
        &[
            "verify",
            "--theorem",
            "conj21",
            "--n-max",
            "3",
            "--witness",
            witness.to_str().unwrap(),
        ],
        Some(dir.path()),
    );
    assert_eq!(o.status.code(), Some(1));
    let w: serde_json::Value = serde_json::from_str(&fs::read_to_string(witness).unwrap()).unwrap();
    assert_eq!(w["witness"]["n"], 2);
}

#[test]
fn series_outputs() {
    let o = equistat(&["series", "--formula", "fishburn", "--n-max", "7"], None);
    assert_eq!(stdout(&o), "1,1,2,5,15,53,217\n");

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("main.ncs");
    let o = equistat(
        &[
            "series",
            "--formula",
            "nc-main",
            "--variant",
            "silly-s",
            "--max-degree",
            "3",
            "--out",
            file.to_str().unwrap(),
        ],
        None,
    );
    assert!(o.status.success());
    let text = fs::read_to_string(&file).unwrap();
    assert_eq!(text.lines().next(), Some("t\ts"));
    assert!(text.lines().all(|l| l.split('·').count() <= 3));
    let general = stdout(&equistat(
        &["series", "--formula", "nc-main", "--max-degree", "3"],
        None,
    ));
    assert_eq!(general.lines().next(), Some("t\t1"));

    let table = stdout(&equistat(&["series", "--formula", "main-xyz", "--n-max", "3"], None));
    assert!(table.starts_with("n,monomial,coefficient\n"));
}

#[test]
fn nc_main_equals_brute_at_degree_five() {
    let main = equistat(&["series", "--formula", "nc-main", "--max-degree", "5"], None);
    for family in ["perms", "nlm"] {
        let brute = equistat(
            &[
                "series",
                "--formula",
                "brute",
                "--family",
                family,
                "--refinement",
                "pqr",
                "--substitute",
                "--max-degree",
                "5",
            ],
            None,
        );
        assert_eq!(main.stdout, brute.stdout, "{family}");
    }
    let silly = equistat(
        &[
            "series",
            "--formula",
            "nc-main",
            "--variant",
            "silly-s",
            "--max-degree",
            "5",
        ],
        None,
    );
    let brute = equistat(
        &[
            "series",
            "--formula",
            "brute",
            "--refinement",
            "silly-hat-s",
            "--substitute",
            "--max-degree",
            "5",
        ],
        None,
    );
    assert_eq!(silly.stdout, brute.stdout);
}

#[test]
fn bijections_from_stdin() {
    let m = r#"{"arcs":[[1,3],[2,4]]}"#;
    let o = with_stdin(&["bijection", "psi"], m);
    assert!(o.status.success());
    let back = with_stdin(&["bijection", "psi-inv"], &stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&back)).unwrap();
    assert_eq!(v, serde_json::from_str::<serde_json::Value>(m).unwrap());

    let p = stdout(&with_stdin(&["bijection", "leftcross"], m));
    assert!(p.contains("word"));

    assert_eq!(with_stdin(&["bijection", "psi"], "not json").status.code(), Some(2));
    assert_eq!(
        with_stdin(&["bijection", "psi"], r#"{"arcs":[[1,4],[2,3]]}"#)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn jobs_flag() {
    let a = equistat(
        &[
            "--jobs",
            "1",
            "enumerate",
            "--family",
            "perms",
            "--n",
            "6",
            "--stats",
            "Asc",
        ],
        None,
    );
    let b = equistat(
        &[
            "enumerate",
            "--family",
            "perms",
            "--n",
            "6",
            "--stats",
            "Asc",
            "--jobs",
            "3",
        ],
        None,
    );
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
