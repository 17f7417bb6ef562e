//! H coacting on itself through Δ on either side is a Hom-comodule algebra.

use homcalc::hopf::{check_comodule_algebra, group_algebra_zn, HomComoduleAlgebra, Side};

fn main() {
    let h = group_algebra_zn(5, 2).expect("unit exponent");
    for side in [Side::Left, Side::Right] {
        let c = HomComoduleAlgebra::regular(&h, side);
        print!("{:?}: {}", side, check_comodule_algebra(&c).expect("shapes match").render_text());
    }
}
