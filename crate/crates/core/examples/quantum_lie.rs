//! The quantum Hom-Lie bracket on the tangent space of the universal
//! calculus over H4(−1): bracket table, braiding and both identity sets.

use homcalc::bicov::{bracket, braid, verify_lie, BraidingMode};
use homcalc::fodc::universal_fodc;
use homcalc::hopf::sweedler_h4;
use homcalc::scalar::{int, to_wire_vec};
use homcalc::tangent::DualBases;

fn main() {
    let h = sweedler_h4(&int(-1)).expect("built-in");
    let f = universal_fodc(&h);
    let db = DualBases::new(&f).expect("nondegenerate pairing");
    let t = db.tangent();
    for (i, x) in t.basis().iter().enumerate() {
        for (j, y) in t.basis().iter().enumerate() {
            let c = t.coords(&bracket(&h, x, y)).expect("closed");
            println!("[X_{i}, X_{j}] = {:?}", to_wire_vec(&c));
        }
    }
    let b = braid(&h, &db, BraidingMode::Woronowicz);
    println!("det B = {}", b.matrix.determinant().expect("square"));
    for mode in [BraidingMode::Woronowicz, BraidingMode::Flip] {
        print!("\n{}", verify_lie(&f, mode).expect("tangent space").render_text());
    }
}
