//! The universal first-order calculus H⊗ker ε over the kZ3 twist: ω on the
//! basis, the left coaction and the structure functionals f^i_j.

use homcalc::fodc::{self, universal_fodc};
use homcalc::hopf::group_algebra_zn;
use homcalc::scalar::to_wire_vec;

fn main() {
    let h = group_algebra_zn(3, 2).expect("unit exponent");
    let f = universal_fodc(&h);
    println!("dim H = {}, dim Gamma = {}", h.dim(), f.dim());
    for k in 0..h.dim() {
        println!("omega({}) = {:?}", h.labels()[k], to_wire_vec(&f.omega(&h.e(k))));
    }
    let (_, phi) = fodc::left_covariance(&f);
    let phi = phi.expect("universal calculus is left-covariant");
    let g = h.e(1);
    println!("phi(dg) = {:?}", to_wire_vec(&phi.apply(&f.d(&g))));

    let (_, basis) = f.coinvariant_basis();
    let sf = fodc::structure_functionals(&f, &phi, &basis);
    for (i, row) in sf.f.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            println!("f^{i}_{j} = {:?}", to_wire_vec(x));
        }
    }
    print!("\n{}", fodc::verify_fodc(&f).render_text());
}
