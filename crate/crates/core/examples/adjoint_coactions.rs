//! Ad_R, Ad_L and η on H4(−1), with their coaction laws and the identities
//! linking them to the covariant calculus.

use homcalc::bicov::{ad_l, ad_r, check_adjoint_coactions, check_bicovariance, check_lemmas, eta};
use homcalc::fodc::universal_fodc;
use homcalc::hopf::sweedler_h4;
use homcalc::scalar::{int, to_wire_vec};

fn main() {
    let h = sweedler_h4(&int(-1)).expect("built-in");
    for k in 0..h.dim() {
        let e = h.e(k);
        println!("Ad_R({}) = {:?}", h.labels()[k], to_wire_vec(&ad_r(&h, &e)));
        println!("Ad_L({}) = {:?}", h.labels()[k], to_wire_vec(&ad_l(&h, &e)));
    }
    print!("\n{}", check_adjoint_coactions(&h).render_text());

    let f = universal_fodc(&h);
    println!("\neta(g) = {:?}", to_wire_vec(&eta(&f, &h.e(1))));
    let (_, b) = check_bicovariance(&f);
    let b = b.expect("universal calculus is bicovariant");
    for c in check_lemmas(&f, &b) {
        println!("{}: {:?} {}", c.name, c.verdict, c.note.unwrap_or_default());
    }
}
