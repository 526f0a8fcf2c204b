use std::path::PathBuf;

use serde_json::Value;

use dsgeom_cli::run;

fn exec(args: &[&str]) -> (String, i32) {
    let argv = std::iter::once("dsgeom").chain(args.iter().copied());
    let (report, code) = run(argv);
    assert_eq!(report.exit_status, code);
    (report.render(), code)
}

fn exec_json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let (text, code) = exec(&all);
    (serde_json::from_str(&text).expect("json report"), code)
}

fn golden(name: &str, args: &[&str]) {
    let (text, code) = exec(args);
    assert_eq!(code, 0, "{text}");
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &text).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(text, want, "golden mismatch for {name}");
}

#[test]
fn validate_builtin_algebra() {
    let (text, code) = exec(&["validate", "--algebra", "sl2_trivial2.json"]);
    assert_eq!(code, 0);
    assert!(text.contains("jacobi: ok") && text.contains("representation: ok"));
}

#[test]
fn roundtrip_is_exact() {
    let (text, code) = exec(&["rigid", "roundtrip", "--module", "grassmann2_free.json"]);
    assert_eq!(code, 0);
    assert!(text.contains("V(L(V)) = V: exact"));
}

#[test]
fn identity_on_trivial_module_is_not_stably_zero() {
    let (text, code) = exec(&["stable-eq", "--f", "id_k.json", "--g", "zero_k.json"]);
    assert_eq!(code, 0);
    assert!(text.contains("NOT stably equal"));
    let (text, _) = exec(&["stable-eq", "--map", "grassmann2_free_idempotent"]);
    assert!(text.starts_with("stably equal"));
}

#[test]
fn report_schema() {
    let (v, code) = exec_json(&["is-projective", "--module", "grassmann2_free"]);
    assert_eq!(code, 0);
    for key in ["command", "results", "certificates", "warnings", "exit_status"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["results"]["projective"], Value::Bool(true));
    let section = v["certificates"]["section"].as_array().unwrap();
    assert!(!section.is_empty());
    assert!(section[0]["matrix"][0][0].is_string());
}

#[test]
fn exit_codes() {
    assert_eq!(exec(&["no-such-command"]).1, 2);
    assert_eq!(exec(&["ds", "--module", "missing.json", "--point", "1"]).1, 2);
    assert_eq!(exec(&["ds", "--module", "grassmann2_free", "--point", "1,0,0"]).1, 2);
    assert_eq!(exec(&["ds", "--module", "grassmann2_free", "--point", "0,0"]).1, 2);
    assert_eq!(exec(&["nonfullness", "--params", "sl2_triv1_nonfullness", "-i", "0"]).1, 1);
    assert_eq!(exec(&["variety", "--module", "grassmann2_free", "--max-minor-dim", "2"]).1, 1);
    let (v, code) = exec_json(&["cech", "-r", "0", "-d", "1"]);
    assert_eq!(code, 1);
    assert!(v["error"].as_str().unwrap().contains("dimension 0"));
    assert_eq!(exec(&["--help"]).1, 0);
}

#[test]
fn invalid_algebra_file_fails_validation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let text = r#"{"dim0": 2, "bracket": [[0, 1, 0, 1]], "dim1": 1, "action": [[[0]], [[0]]]}"#;
    std::fs::write(&path, text).unwrap();
    let (out, code) = exec(&["validate", "--algebra", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("antisymmetry: FAILED"));
}

#[test]
fn sampling_is_deterministic() {
    let args = ["variety", "--module", "sl2_natural_trunc", "--sample", "10", "--ideal", "--seed", "5"];
    assert_eq!(exec_json(&args).0, exec_json(&args).0);
    let (v, code) = exec_json(&["support-check", "--module", "sl2_adjoint_mixed", "--sample", "6", "--seed", "9"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["support"]["all_equal"], Value::Bool(true));
}

#[test]
fn written_corpus_files_reload() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(exec(&["corpus", "--write", dir.path().to_str().unwrap()]).1, 0);
    let (list, _) = exec_json(&["corpus"]);
    for e in list["results"]["entries"].as_array().unwrap() {
        let name = e["name"].as_str().unwrap();
        let path = dir.path().join(format!("{name}.json"));
        let path = path.to_str().unwrap();
        let flag = match e["kind"].as_str().unwrap() {
            "algebra" => "--algebra",
            "module" => "--module",
            "map" => "--map",
            "g0-module" => "--q",
            _ => continue,
        };
        let (out, code) = exec(&["validate", flag, path]);
        assert_eq!(code, 0, "{name}: {out}");
    }
}

#[test]
fn module_outputs_feed_back_in() {
    let dir = tempfile::tempdir().unwrap();
    let (v, code) = exec_json(&["tensor", "--module", "grassmann1_free", "--module", "grassmann1_free"]);
    assert_eq!(code, 0);
    let path = dir.path().join("t.json");
    std::fs::write(&path, v["results"]["module"].to_string()).unwrap();
    let (info, code) = exec_json(&["module-info", "--module", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(info["results"]["dims"], serde_json::json!([1, 2, 1]));
    let (l, _) = exec_json(&["rigid", "l", "--module", path.to_str().unwrap()]);
    let cpath = dir.path().join("l.json");
    std::fs::write(&cpath, l["results"]["complex"].to_string()).unwrap();
    let (back, code) = exec_json(&["rigid", "v", "--complex", cpath.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(back["results"]["module"], v["results"]["module"]);
    let (fib, _) = exec_json(&["rigid", "fiber", "--complex", cpath.to_str().unwrap(), "--point", "1"]);
    // A tensor product of free modules is free, so every fiber is acyclic.
    assert!(fib["results"]["cohomology"]["entries"].as_object().unwrap().values().all(|d| d == 0));
}

#[test]
fn calculators() {
    let (v, _) = exec_json(&["ce", "--module", "q_adj_sl2_triv1", "--algebra", "sl2_trivial1"]);
    assert_eq!(v["results"]["cohomology"]["entries"]["3"], 0);
    let (v, _) = exec_json(&["koszul", "--module", "grassmann1_free", "--pmax", "8"]);
    assert_eq!(v["results"]["cohomology"]["entries"]["0"], 1);
    let (v, _) = exec_json(&["frobenius-check", "--q", "q_nat_sl2_natural1"]);
    assert_eq!(v["results"]["passed"], Value::Bool(true));
    let (v, code) = exec_json(&["decompose", "--module", "sl2_adjoint_mixed"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["check"]["dim_m"], 1);
    let (v, _) = exec_json(&["hom", "--source", "grassmann2_trivial_m2", "--target", "grassmann2_trivial_m2"]);
    assert_eq!(v["results"]["dim"], 1);
}

#[test]
fn golden_reports() {
    golden("cech.json", &["cech", "-r", "2", "-d", "-3", "--format", "json"]);
    golden("ext.json", &["ext", "-i", "3", "-j", "0", "-r", "2", "--format", "json"]);
    golden("stable_eq.json", &["stable-eq", "--f", "id_k.json", "--g", "zero_k.json", "--format", "json"]);
    golden("ds.txt", &["ds", "--module", "grassmann2_free_plus_trivial", "--point", "1,-1/2"]);
    golden("nonfullness.json", &["nonfullness", "--params", "sl2_triv1_nonfullness", "--format", "json"]);
    golden("is_reduced.json", &["is-reduced", "--module", "grassmann2_free", "--format", "json"]);
}
