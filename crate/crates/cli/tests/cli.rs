use std::process::{Command, Output};

fn teachdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_teachdim"))
        .args(args)
        .env_remove("TEACHDIM_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Data rows as (name, bound, rtd, vcd).
fn triple_rows(o: &Output) -> Vec<(String, u32, u32, u32)> {
    stdout(o)
        .lines()
        .skip_while(|l| l.starts_with('#'))
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            (
                f[0].to_string(),
                f[3].parse().unwrap(),
                f[4].parse().unwrap(),
                f[5].parse().unwrap(),
            )
        })
        .collect()
}

#[test]
fn cycle_four_star_row() {
    let o = teachdim(&["triples", "--family", "cycle", "--n", "4", "--kind", "star"]);
    assert!(o.status.success());
    assert_eq!(triple_rows(&o), vec![("C_4".to_string(), 2, 3, 3)]);
}

#[test]
fn fig2_con_row() {
    let o = teachdim(&["triples", "--family", "fig2", "--kind", "con"]);
    assert!(o.status.success());
    let rows = triple_rows(&o);
    assert_eq!((rows[0].1, rows[0].2, rows[0].3), (4, 4, 5));
    assert!(stdout(&o).starts_with("# triples kind=con include_empty=false"));
}

#[test]
fn longer_paths_con_rows() {
    let o = teachdim(&[
        "triples", "--family", "path", "--n", "3..8", "--kind", "con",
    ]);
    let rows = triple_rows(&o);
    assert_eq!(rows.len(), 6);
    assert!(
        rows.iter().all(|r| (r.1, r.2, r.3) == (2, 2, 2)),
        "{rows:?}"
    );
}

#[test]
fn single_edge_path_is_complete_graph() {
    let o = teachdim(&["triples", "--family", "path", "--n", "2", "--kind", "con"]);
    let r = &triple_rows(&o)[0];
    assert_eq!((r.1, r.2, r.3), (1, 1, 1));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = [
        "verify", "--family", "random", "--n", "5..7", "--p", "0.5", "--seed", "9", "--count", "2",
        "--kind", "con",
    ];
    let a = teachdim(&args);
    let b = teachdim(&args);
    let mut par = args.to_vec();
    par.push("--parallel");
    let c = teachdim(&par);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert!(stdout(&a).contains("prng=ChaCha8 p=0.5 seed=9"));
}

#[test]
fn json_triples_parse() {
    let o = teachdim(&[
        "triples", "--family", "complete", "--n", "2..4", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kind"], "star");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for (k, r) in rows.iter().enumerate() {
        let d = k as u64 + 1;
        assert_eq!(
            (r["bound"].as_u64(), r["rtd"].as_u64(), r["vcd"].as_u64()),
            (Some(d), Some(d), Some(d))
        );
    }
}

#[test]
fn budget_exhaustion_is_an_error() {
    let o = teachdim(&[
        "triples", "--family", "complete", "--n", "10", "--budget", "100",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_teachdim"))
        .args(["triples", "--family", "complete", "--n", "10"])
        .env("TEACHDIM_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_passes_on_small_families() {
    for kind in ["star", "con"] {
        let o = teachdim(&["verify", "--family", "cycle", "--n", "3..6", "--kind", kind]);
        let out = stdout(&o);
        assert!(o.status.success(), "{out}");
        assert!(out.trim_end().ends_with(", 0 failures"));
    }
}

#[test]
fn verify_json_lists_checks() {
    let o = teachdim(&[
        "verify", "--family", "fig2", "--kind", "con", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .any(|c| c["check"] == "leaf-tree" && c["pass"] == true));
    assert_eq!(v["failures"], 0);
}

#[test]
fn teach_explains_a_concept() {
    let o = teachdim(&[
        "teach",
        "--family",
        "fig2",
        "--kind",
        "con",
        "--teacher",
        "superset",
        "--concept",
        "a,b",
    ]);
    let out = stdout(&o);
    assert!(o.status.success());
    assert!(out.contains("sample\ta+ c- d- e-"), "{out}");
    assert!(out.contains("verdict\tunique most preferred"));
}

#[test]
fn teach_refuses_unmet_precondition() {
    let o = teachdim(&[
        "teach",
        "--family",
        "cycle",
        "--n",
        "4",
        "--teacher",
        "special",
        "--concept",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("precondition"));
}

#[test]
fn teach_rejects_non_concepts() {
    let o = teachdim(&[
        "teach",
        "--family",
        "path",
        "--n",
        "4",
        "--kind",
        "con",
        "--teacher",
        "tree",
        "--concept",
        "1,3",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dims_of_cycle_four() {
    let o = teachdim(&["dims", "--family", "cycle", "--n", "4", "--kind", "con"]);
    let out = stdout(&o);
    assert!(out.contains("size\t13\n"));
    assert!(out.contains("rtd\t3\n"));
    assert!(out.contains("sauer_implication\t13 > 11 => rtd >= 3"));
}

#[test]
fn dims_reads_class_files() {
    let dir = std::env::temp_dir().join(format!("teachdim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("powerset2.txt");
    std::fs::write(&path, "4 2\n00\n01\n10\n11\n").unwrap();
    let o = teachdim(&[
        "dims",
        "--class-file",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        (v["vcd"].as_u64(), v["rtd"].as_u64(), v["td_min"].as_u64()),
        (Some(2), Some(2), Some(2))
    );
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn graph_files_are_read() {
    let dir = std::env::temp_dir().join(format!("teachdim-graph-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c4.txt");
    std::fs::write(&path, teachdim::families::cycle(4).unwrap().graph.to_text()).unwrap();
    let o = teachdim(&[
        "triples",
        "--family",
        "file",
        "--file",
        path.to_str().unwrap(),
    ]);
    let r = &triple_rows(&o)[0];
    assert_eq!((r.1, r.2, r.3), (2, 3, 3));
    std::fs::remove_dir_all(dir).ok();
}
