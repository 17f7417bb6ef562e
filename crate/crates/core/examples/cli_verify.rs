//! Drive the command surface in-process: emit a built-in, run `verify` on
//! it and print the text report.

use homcalc::cli::run;

fn main() {
    let dir = std::env::temp_dir().join("homcalc-example");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let file = dir.join("kz4.json").to_string_lossy().into_owned();
    let spec = run(["homcalc", "builtin", "group_algebra_Zn", "--param", "n=4", "--param", "e=3"]);
    std::fs::write(&file, spec.stdout).expect("writable");
    let out = run(["homcalc", "verify", file.as_str(), "--report", "text"]);
    print!("{}", out.stdout);
    println!("exit code {}", out.code);
}
