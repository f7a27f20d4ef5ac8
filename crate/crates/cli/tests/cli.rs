use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn gem(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gem")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gem-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn built(target: &[&str], name: &str) -> PathBuf {
    let path = scratch(name);
    let mut args = vec!["build"];
    args.extend(target);
    args.extend(["--out", path.to_str().unwrap()]);
    let o = gem(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/data")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--json"];
    full.extend(args);
    let o = gem(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn g1prime_genus() {
    let f = built(&["g1prime"], "g1.gem");
    let f = f.to_str().unwrap();
    let o = gem(&["genus", f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "regular-genus 6\nargmin (0,2,4,1,3)\n");
    let v = json(&["check", f]);
    assert_eq!(v["vertices"], 40);
    assert_eq!(v["contracted"], true);
    let v = json(&["genus", f, "--all"]);
    assert_eq!(v["reports"].as_array().unwrap().len(), 12);
    let v = json(&["wss", f, "--perm", "(0,2,4,1,3)", "--rank", "2"]);
    assert_eq!(v["holds"], true);
}

#[test]
fn g2prime_and_torus() {
    let v = json(&["build", "g2prime"]);
    assert_eq!(v["vertices"], 120);
    assert_eq!(v["trace"][0], 192);
    let g2 = built(&["g2prime"], "g2.gem");
    let t4 = built(&["torus-cube", "--n", "4"], "t4.gem");
    let v = json(&["genus", g2.to_str().unwrap(), "--perm", "(0,2,4,1,3)"]);
    assert_eq!(v["rho"], "16");
    let v = json(&["iso", t4.to_str().unwrap(), g2.to_str().unwrap(), "--color-perm"]);
    assert_eq!(v["isomorphic"], true);
    let o = gem(&["cycles", g2.to_str().unwrap(), "--pair", "0,2"]);
    assert_eq!(stdout(&o), "pair {0,2}\ncycles 30\nlength 4 count 30\n");
}

#[test]
fn small_covers() {
    let f = built(&["small-cover", "--lambda", "1"], "c1.gem");
    let v = json(&["check", f.to_str().unwrap()]);
    assert_eq!(v["vertices"], 96);
    assert_eq!(v["complement_counts"], serde_json::json!([1, 2, 3, 2, 1]));
    assert_eq!(v["bipartite"], false);
    let r = built(&["small-cover", "--lambda", "1", "--reduced"], "c1r.gem");
    let v = json(&["genus", r.to_str().unwrap()]);
    assert_eq!(v["regular_genus"], "8");
    let v = json(&["small-cover", "classify"]);
    assert_eq!(v["classes"], serde_json::json!([[1], [2, 5], [3, 6], [4, 7]]));
    let o = gem(&["build", "small-cover", "--lambda", "8"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn scripted_moves_reproduce_build() {
    let base = built(&["s2xs1"], "s2xs1.gem");
    let product = built(&["product-gem", base.to_str().unwrap()], "g1.gem.product");
    let out = scratch("g1-moved.gem");
    let o = gem(&[
        "moves",
        product.to_str().unwrap(),
        "--script",
        &data("g1prime.moves"),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("# trace: 64 "));
    let g1 = built(&["g1prime"], "g1-ref.gem");
    let a = json(&["canon", out.to_str().unwrap()]);
    let b = json(&["canon", g1.to_str().unwrap()]);
    assert_eq!(a["bytes"], b["bytes"]);
}

#[test]
fn exports() {
    let t3 = built(&["t3"], "t3.gem");
    let t3 = t3.to_str().unwrap();
    let dot = stdout(&gem(&["export", t3, "--format", "dot"]));
    assert_eq!(dot.matches(" -- ").count(), 48);
    let table = stdout(&gem(&["export", t3, "--format", "gluings"]));
    let rows: Vec<&str> = table.lines().collect();
    assert_eq!(rows.len(), 25);
    assert!(rows.iter().all(|r| r.split('\t').count() == 5));
    let text = stdout(&gem(&["export", t3, "--format", "gem"]));
    assert_eq!(text, std::fs::read_to_string(t3).unwrap().lines().skip(1).map(|l| format!("{l}\n")).collect::<String>());
    let v = json(&["chi", t3]);
    assert_eq!(v["chi"], 0);
    assert_eq!(v["faces"][0], 4);
    assert_eq!(v["faces"][3], 24);
}

#[test]
fn bound_values() {
    for (chi, m, want) in [("0", "2", "6"), ("0", "4", "16"), ("1", "2", "8"), ("-2", "0", "-8")] {
        let o = gem(&["bound", "--chi", chi, "--rank", m]);
        assert_eq!(stdout(&o), format!("bound {want}\n"));
    }
}

#[test]
fn exit_codes() {
    let dup = scratch("dup.gem");
    std::fs::write(&dup, "gem 1\ncolors 2\nvertices 2\nc 0: 0-1 0-1\nc 1: 0-1\n").unwrap();
    let o = gem(&["check", dup.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));

    let syn = scratch("syn.gem");
    std::fs::write(&syn, "gem 1\ncolors two\n").unwrap();
    let o = gem(&["check", syn.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let o = gem(&["--json", "check", syn.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exit_code"], 2);

    assert_eq!(gem(&["check", "/nonexistent/x.gem"]).status.code(), Some(1));
    assert_eq!(gem(&["build", "torus-cube", "--n", "9"]).status.code(), Some(1));

    let g = built(&["s2xs1"], "s.gem");
    let g = g.to_str().unwrap();
    assert_eq!(gem(&["genus", g, "--perm", "(0,1,2)"]).status.code(), Some(1));
    assert_eq!(gem(&["genus", g, "--perm", "(0,x)"]).status.code(), Some(2));
    assert_eq!(gem(&["cycles", g, "--pair", "0"]).status.code(), Some(2));
    assert_eq!(gem(&["wss", g, "--perm", "(0,1,2,3)", "--rank", "0"]).status.code(), Some(1));

    let bad_script = scratch("bad.moves");
    std::fs::write(&bad_script, "frobnicate\n").unwrap();
    assert_eq!(gem(&["moves", g, "--script", bad_script.to_str().unwrap()]).status.code(), Some(2));
    let wrong = scratch("wrong.moves");
    std::fs::write(&wrong, "dipole v0 v1 0\n").unwrap();
    assert_eq!(gem(&["moves", g, "--script", wrong.to_str().unwrap()]).status.code(), Some(1));
}
