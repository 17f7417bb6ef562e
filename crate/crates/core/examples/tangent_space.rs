//! Quantum tangent space of the bicovariant quotient of H4(−1) by
//! span{x + gx}: basis, Gram matrix, dual bases and the pairing identities.

use homcalc::fodc::{self, quotient_fodc, FodcPresentation};
use homcalc::hopf::sweedler_h4;
use homcalc::scalar::{int, to_wire_vec};
use homcalc::tangent::{verify_tangent_identities, DualBases};

fn main() {
    let h = sweedler_h4(&int(-1)).expect("built-in");
    let r = FodcPresentation::new(&h, &[vec![int(0), int(0), int(1), int(1)]]).expect("right Hom-ideal");
    let f = quotient_fodc(&h, &r);
    let db = DualBases::new(&f).expect("nondegenerate pairing");
    for (i, x) in db.tangent().basis().iter().enumerate() {
        println!("X_{i} = {:?}", to_wire_vec(x));
    }
    for i in 0..db.gram.rows() {
        println!("gram row {i}: {:?}", to_wire_vec(db.gram.row(i)));
    }
    for (j, w) in db.omegas.iter().enumerate() {
        println!("omega_{j} = {:?}", to_wire_vec(w));
    }
    let phi = fodc::left_covariance(&f).1.expect("left-covariant");
    print!("\n{}", verify_tangent_identities(&f, &phi).render_text());
}
