//! Check the Hom-Hopf axioms of the built-ins, then break one structure
//! constant and print the witness.

use homcalc::fixtures::{mutate, Site};
use homcalc::hopf::{check_axioms, sweedler_h4, HomHopfAlgebra, Level};
use homcalc::scalar::int;

fn main() {
    let h = sweedler_h4(&int(-1)).expect("built-in");
    print!("{}", check_axioms(&h, Level::Hopf).render_text());

    let broken = mutate(h.data(), Site::Mult(1, 1, 0), &int(1));
    let m = HomHopfAlgebra::new(broken).expect("alpha and S stay invertible");
    let r = check_axioms(&m, Level::Hopf);
    println!("\nafter g*g += 1:");
    for c in r.failures() {
        let w = c.witness.as_ref().expect("failures carry witnesses");
        println!("  {} fails at {:?}: [{}] vs [{}]", c.name, w.at, w.lhs.join(", "), w.rhs.join(", "));
    }
}
