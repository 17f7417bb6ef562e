//! Twist the classical Sweedler algebra by x ↦ 2x, gx ↦ 2gx and emit the
//! result in the JSON structure-constant format.

use homcalc::hopf::{check_axioms, sweedler_classical, yau_twist, HomHopfAlgebra, Level};
use homcalc::io::AlgebraSpecFile;
use homcalc::linalg::Matrix;
use homcalc::scalar::int;

fn main() {
    let classical = HomHopfAlgebra::new(sweedler_classical()).expect("classical H4");
    let mut a = Matrix::identity(4);
    a.set(2, 2, int(2));
    a.set(3, 3, int(2));
    let h = yau_twist(&classical, &a, Some("H4 twisted by lambda=2".into())).expect("Hopf automorphism");
    assert!(check_axioms(&h, Level::Hopf).passed());
    print!("{}", AlgebraSpecFile::from_data(h.data()).to_json());

    let mut swap = Matrix::zeros(4, 4);
    for (i, j) in [(0, 0), (1, 1), (2, 3), (3, 2)] {
        swap.set(i, j, int(1));
    }
    match yau_twist(&classical, &swap, None) {
        Ok(_) => println!("x <-> gx is an automorphism"),
        Err(e) => println!("x <-> gx rejected: {e}"),
    }
}
