use std::process::Command;

fn twistdem(args: &[&str]) -> (bool, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_twistdem")).args(args).output().unwrap();
    (out.status.success(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn rootsys_json_lists_half_roots() {
    let (ok, out) = twistdem(&["rootsys", "--type", "a2n_2", "--n", "1", "--grade-bound", "1", "--format", "json"]);
    assert!(ok);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let roots = v["roots"].as_array().unwrap();
    assert!(roots.iter().any(|r| r["half"] == true && r["delta"] == "1/2"));
}

#[test]
fn char_demazure_level_one_a2() {
    let base = ["char-demazure", "--type", "a2n_2", "--n", "1", "--level", "1", "--weight", "1"];
    let (ok, out) = twistdem(&[&base[..], &["--format", "table"]].concat());
    assert!(ok);
    assert!(out.contains("dimension 3"), "{out}");
    let (ok, out) = twistdem(&[&base[..], &["--collapse"]].concat());
    assert!(ok);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    assert!(terms.iter().all(|t| t["grade"] == "0"));
}

#[test]
fn verify_exit_code_tracks_failures() {
    let (ok, out) = twistdem(&["verify", "indexsets", "--rmax", "3", "--smax", "3", "--kmax", "2"]);
    assert!(ok, "{out}");
    let dir = std::env::temp_dir().join(format!("twistdem-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"cases":[{"check":"qsystem","type":"a2n_2","n":1,"i":5,"levels":[1]}]}"#).unwrap();
    let (ok, out) = twistdem(&["verify", "qsystem", "--config", bad.to_str().unwrap(), "--format", "json"]);
    assert!(!ok);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["status"], "fail");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn unknown_type_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_twistdem"))
        .args(["rootsys", "--type", "b2_2", "--n", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
