//! The graded universal calculus over the kZ3 twist g ↦ g²: the
//! differential on words, the graded product and the full verification.

use homcalc::graded::{self, GradedCalculus, GradedElement};
use homcalc::hopf::group_algebra_zn;

fn show(dc: &GradedCalculus, w: &GradedElement) -> String {
    let labels = dc.algebra().labels();
    let terms: Vec<String> = w
        .terms()
        .map(|(k, c)| {
            let word: Vec<&str> = k.iter().map(|&i| labels[i as usize].as_str()).collect();
            format!("{c}*[{}]", word.join("|"))
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn main() {
    let h = group_algebra_zn(3, 2).expect("unit exponent");
    let dc = GradedCalculus::new(&h, 4);
    println!("dims: {:?}", (0..=4).map(|n| dc.dim(n)).collect::<Vec<_>>());

    let g = h.e(1);
    let dg = dc.d0(&g);
    println!("dg = {}", show(&dc, &dg));
    let w = dc.product(&dg, &dg).expect("within cap");
    println!("dg dg = {}", show(&dc, &w));
    println!("d(dg dg) = {}", show(&dc, &dc.d(&w).expect("within cap")));
    println!("g . dg = {}", show(&dc, &dc.left_mult(&g, &dg)));
    println!("dg . g = {}", show(&dc, &dc.right_mult(&dg, &g)));

    print!("\n{}", graded::verify(&h, 4, 0).render_text());
}
