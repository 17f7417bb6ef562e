//! Read a structure-constant file (argument, or a built-in when absent),
//! validate it and write it back byte for byte in canonical form.

use homcalc::hopf::{check_axioms, group_algebra_zn, Level};
use homcalc::io::{read_file, AlgebraSpecFile};

fn main() {
    let spec = match std::env::args().nth(1) {
        Some(path) => AlgebraSpecFile::from_json(&read_file(&path).expect("readable")).expect("well-formed"),
        None => AlgebraSpecFile::from_data(group_algebra_zn(4, 3).expect("unit exponent").data()),
    };
    let h = spec.to_algebra().expect("well-formed").expect("alpha and S invertible");
    let r = check_axioms(&h, Level::Hopf);
    println!("{}: {} checks, passed = {}", h.name(), r.checks.len(), r.passed());
    let again = AlgebraSpecFile::from_json(&spec.to_json()).expect("round trip");
    assert_eq!(again.to_data().expect("valid"), *h.data());
    print!("{}", spec.to_json());
}
