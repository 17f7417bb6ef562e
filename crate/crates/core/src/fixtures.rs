//! Reference fixtures: the built-in catalog, single-entry mutations of
//! structure data and proper right Hom-ideals found by the bounded search.

use crate::fodc::{search_right_ideals, FodcPresentation};
use crate::hopf::{group_algebra_zn, sweedler_h4, HomHopfAlgebra, HopfData};
use crate::scalar::{int, Scalar};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Every Yau twist of kZ_n by g ↦ g^e with gcd(e, n) = 1, for n in `ns`.
pub fn group_algebra_twists(ns: std::ops::RangeInclusive<usize>) -> Vec<HomHopfAlgebra> {
    let mut out = Vec::new();
    for n in ns {
        for e in (1..n).filter(|e| gcd(*e, n) == 1) {
            out.push(group_algebra_zn(n, e).expect("unit exponent"));
        }
    }
    out
}

pub fn sweedler_family(lambdas: &[i64]) -> Vec<HomHopfAlgebra> {
    lambdas.iter().map(|l| sweedler_h4(&int(*l)).expect("nonzero lambda")).collect()
}

/// kZ_2..kZ_6 with every unit exponent and H4 at λ = −1, 2, 3.
pub fn catalog() -> Vec<HomHopfAlgebra> {
    let mut out = group_algebra_twists(2..=6);
    out.extend(sweedler_family(&[-1, 2, 3]));
    out
}

/// Position of one structure constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Site {
    /// e_i e_j ∋ e_k
    Mult(usize, usize, usize),
    Unit(usize),
    /// Δ(e_k) ∋ e_i⊗e_j
    Comult(usize, usize, usize),
    Counit(usize),
    Antipode(usize, usize),
    Alpha(usize, usize),
}

/// Adds `delta` to the entry at `site`.
pub fn mutate(data: &HopfData, site: Site, delta: &Scalar) -> HopfData {
    let mut d = data.clone();
    match site {
        Site::Mult(i, j, k) => d.mult.add_to(i, j, k, delta),
        Site::Unit(i) => d.unit[i] += delta,
        Site::Comult(k, i, j) => d.comult.add_to(k, i, j, delta),
        Site::Counit(i) => d.counit[i] += delta,
        Site::Antipode(i, j) => {
            let x = d.antipode.get(i, j) + delta;
            d.antipode.set(i, j, x);
        }
        Site::Alpha(i, j) => {
            let x = d.alpha.get(i, j) + delta;
            d.alpha.set(i, j, x);
        }
    }
    d
}

/// Single-entry edits of H4 (basis 1, g, x, gx) that keep α and S
/// invertible, each breaking some Hom-Hopf axiom.
pub const H4_MUTATIONS: [Site; 14] = [
    Site::Mult(1, 1, 0),
    Site::Mult(2, 2, 0),
    Site::Mult(1, 2, 3),
    Site::Mult(0, 0, 0),
    Site::Unit(1),
    Site::Comult(1, 1, 1),
    Site::Comult(2, 2, 1),
    Site::Comult(0, 0, 0),
    Site::Counit(1),
    Site::Counit(2),
    Site::Antipode(1, 1),
    Site::Antipode(2, 2),
    Site::Alpha(1, 1),
    Site::Alpha(2, 3),
];

/// The same idea on a group algebra twist (basis 1, g, g², ...).
pub const ZN_MUTATIONS: [Site; 4] = [Site::Mult(1, 1, 0), Site::Comult(1, 1, 1), Site::Antipode(1, 1), Site::Alpha(0, 0)];

/// `(label, mutated data)` for every mutation site, with +1 added.
pub fn mutations(h: &HomHopfAlgebra, sites: &[Site]) -> Vec<(String, HopfData)> {
    sites.iter().map(|s| (format!("{} {:?}+1", h.name(), s), mutate(h.data(), *s, &int(1)))).collect()
}

/// Algebras with proper nonzero right Hom-ideals, paired with every ideal
/// the bounded search finds (kZ_4 twisted by g ↦ g³ and H4 at λ = −1).
pub fn ideal_fixtures() -> Vec<(HomHopfAlgebra, Vec<FodcPresentation>)> {
    [group_algebra_zn(4, 3).expect("unit"), sweedler_h4(&int(-1)).expect("nonzero")]
        .into_iter()
        .map(|h| {
            let found = search_right_ideals(&h, 7, 64);
            (h, found)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{check_axioms, Level};

    #[test]
    fn catalog_sizes() {
        // φ(2)+...+φ(6) = 1+2+2+4+2
        assert_eq!(group_algebra_twists(2..=6).len(), 11);
        assert_eq!(catalog().len(), 14);
    }

    #[test]
    fn h4_mutations_all_fail() {
        let h = sweedler_h4(&int(-1)).unwrap();
        for (label, d) in mutations(&h, &H4_MUTATIONS) {
            let m = HomHopfAlgebra::new(d).unwrap_or_else(|e| panic!("{label}: {e}"));
            let r = check_axioms(&m, Level::Hopf);
            let bad = r.failures().next().unwrap_or_else(|| panic!("{label} passes"));
            assert!(bad.witness.is_some(), "{label}");
        }
    }

    #[test]
    fn ideal_search_counts() {
        let f = ideal_fixtures();
        assert_eq!(f[0].1.len(), 2);
        assert_eq!(f[1].1.len(), 4);
    }
}
