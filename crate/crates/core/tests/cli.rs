use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_homcalc"))
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("homcalc-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn run(cmd: &mut Command) -> (i32, String) {
    let o = cmd.output().unwrap();
    (o.status.code().unwrap(), String::from_utf8(o.stdout).unwrap())
}

fn builtin(dir: &Path, file: &str, args: &[&str]) -> String {
    let (code, out) = run(bin().arg("builtin").args(args));
    assert_eq!(code, 0, "{out}");
    let p = dir.join(file);
    std::fs::write(&p, out).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn builtin_then_validate_passes() {
    let d = scratch("validate");
    let f = builtin(&d, "z2.json", &["group_algebra_Zn", "--param", "n=2"]);
    let (code, out) = run(bin().args(["validate", &f]));
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    let (code, out) = run(bin().args(["validate", &f, "--level", "algebra", "--report", "text"]));
    assert_eq!(code, 0);
    assert!(out.contains("at level algebra"));
}

#[test]
fn singular_alpha_exits_1_with_witness() {
    let d = scratch("singular");
    let f = builtin(&d, "z3.json", &["group_algebra_Zn", "--param", "n=3", "--param", "e=2"]);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    v["alpha"] = serde_json::json!([["1", "0", "0"], ["0", "1", "1"], ["0", "1", "1"]]);
    std::fs::write(&f, v.to_string()).unwrap();
    let (code, out) = run(bin().args(["validate", &f]));
    assert_eq!(code, 1);
    let r: Value = serde_json::from_str(&out).unwrap();
    let c = &r["reports"][0]["checks"][0];
    assert_eq!(c["name"], "alpha_invertible");
    assert_eq!(c["verdict"], "fail");
    assert!(c["note"].as_str().unwrap().starts_with("SingularMatrix"));
    assert!(c["witness"]["lhs"].is_array());
}

#[test]
fn malformed_inputs_exit_2_with_json_error() {
    let d = scratch("malformed");
    let p = d.join("bad.json");
    for body in ["not json", r#"{"name":"x","dim":1}"#] {
        std::fs::write(&p, body).unwrap();
        let (code, out) = run(bin().args(["validate", p.to_str().unwrap()]));
        assert_eq!(code, 2);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v["error"]["kind"].is_string());
    }
    let (code, out) = run(bin().args(["bracket", "x.json", "--braiding", "sideways"]));
    assert_eq!(code, 2);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["error"]["kind"], "usage");
    let f = builtin(&d, "h4.json", &["sweedler_h4", "--param", "lambda=-1"]);
    std::fs::write(d.join("ideal.json"), r#"[["1","0","0","0"]]"#).unwrap();
    let (code, out) = run(bin().args(["fodc", &f, "--ideal", d.join("ideal.json").to_str().unwrap()]));
    assert_eq!(code, 2);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["error"]["kind"], "ideal");
}

#[test]
fn twist_emits_a_valid_file() {
    let d = scratch("twist");
    let f = builtin(&d, "h4.json", &["sweedler_h4"]);
    let a = d.join("a.json");
    std::fs::write(&a, r#"[["1","0","0","0"],["0","1","0","0"],["0","0","3","0"],["0","0","0","3"]]"#).unwrap();
    let out = d.join("t.json");
    let (code, _) = run(bin().args(["twist", &f, "--alpha", a.to_str().unwrap(), "--out", out.to_str().unwrap()]));
    assert_eq!(code, 0);
    let (code, _) = run(bin().args(["validate", out.to_str().unwrap()]));
    assert_eq!(code, 0);
    // twisting an already twisted algebra is refused
    let (code, _) = run(bin().args(["twist", out.to_str().unwrap(), "--alpha", a.to_str().unwrap()]));
    assert_eq!(code, 2);
}

#[test]
fn fodc_tangent_bracket_reports() {
    let d = scratch("reports");
    let f = builtin(&d, "h4.json", &["sweedler_h4", "--param", "lambda=-1"]);
    let out = d.join("fodc.json");
    let (code, stdout) = run(bin().args(["fodc", &f, "--out", out.to_str().unwrap()]));
    assert_eq!((code, stdout.as_str()), (0, ""));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["data"]["dim_calculus"], 12);
    assert_eq!(v["data"]["covariance"]["bicovariant"], true);
    let (code, out) = run(bin().args(["tangent", &f]));
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["data"]["gram"].as_array().unwrap().len(), 3);
    for mode in ["woronowicz", "flip"] {
        let (code, out) = run(bin().args(["bracket", &f, "--braiding", mode]));
        assert_eq!(code, 0, "{out}");
    }
    std::fs::write(d.join("left.json"), r#"{"ideal": [["0","0","1","-1"]]}"#).unwrap();
    let (code, out) = run(bin().args(["bracket", &f, "--ideal", d.join("left.json").to_str().unwrap()]));
    assert_eq!(code, 1);
    assert!(out.contains("needs a bicovariant calculus"));
}

#[test]
fn dc_honours_env_cap() {
    let d = scratch("dc");
    let f = builtin(&d, "z3.json", &["group_algebra_Zn", "--param", "n=3", "--param", "e=2"]);
    let (code, out) = run(bin().args(["dc", &f]).env("HOMCALC_MAX_DEGREE", "3"));
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["data"]["max_degree"], 3);
    let (_, out) = run(bin().args(["dc", &f, "--max-degree", "2"]).env("HOMCALC_MAX_DEGREE", "3"));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["data"]["max_degree"], 2);
    let (code, _) = run(bin().args(["dc", &f, "--max-degree", "0"]));
    assert_eq!(code, 2);
}

#[test]
fn reports_are_byte_stable() {
    let d = scratch("stable");
    let f = builtin(&d, "z4.json", &["group_algebra_Zn", "--param", "n=4", "--param", "e=3"]);
    let first = run(bin().args(["verify", &f, "--report", "text"]));
    let second = run(bin().args(["verify", &f, "--report", "text"]));
    assert_eq!(first.0, 0);
    assert_eq!(first, second);
}
