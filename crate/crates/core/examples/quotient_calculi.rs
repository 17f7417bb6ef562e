//! Search α-stable right Hom-ideals of H4(−1), build the quotient calculi,
//! recover each ideal and decide left, right and bicovariance.

use homcalc::bicov::check_bicovariance;
use homcalc::fodc::{self, quotient_fodc, recover_ideal, search_right_ideals};
use homcalc::hopf::sweedler_h4;
use homcalc::scalar::{int, to_wire_vec};

fn main() {
    let h = sweedler_h4(&int(-1)).expect("built-in");
    for r in search_right_ideals(&h, 7, 64) {
        let f = quotient_fodc(&h, &r);
        let back = recover_ideal(&f);
        let (rep, b) = check_bicovariance(&f);
        let ideal: Vec<Vec<String>> = r.basis().iter().map(|v| to_wire_vec(v)).collect();
        println!(
            "R = {ideal:?}: dim Gamma = {}, recovered = {}, right-covariant = {}, bicovariant = {}",
            f.dim(),
            back.basis() == r.basis(),
            fodc::right_covariance(&f).1.is_some(),
            b.is_some()
        );
        println!("  {}", rep.get("decisions_agree").and_then(|c| c.note.clone()).unwrap_or_default());
    }
}
