//! Functionals on H, the dual Hom-Hopf algebra H°, the •-action, quantum
//! Hom-tangent spaces and their pairing with coinvariant 1-forms.

use num_traits::Zero;

use crate::fodc::{recover_ideal, structure_functionals, Coaction, Fodc, FodcPresentation, StructureFunctionals};
use crate::hopf::{check_axioms, HomHopfAlgebra, HopfData, Level, StructError};
use crate::linalg::{self, axpy, dot, invert, kron, zeros, ColumnSolver, LinalgError, Matrix, Tensor3, Vector};
use crate::report::{readings, AxiomReport, Check};
use crate::scalar::{int, to_wire_vec, Scalar};

/// Coordinates of a functional in the dual basis {δ_i}.
pub type Functional = Vector;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TangentError {
    #[error("functional does not vanish on 1 and R")]
    NotInTangentSpace,
    #[error("tangent space is not stable under X ↦ X∘α⁻¹")]
    NotTauStable,
    #[error("pairing is degenerate: Gram matrix has rank {rank} of {dim}")]
    Degenerate { rank: usize, dim: usize },
    #[error("vector is not a 1-form of this calculus")]
    NotInCalculus,
    #[error(transparent)]
    Struct(#[from] StructError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub fn evaluate(x: &[Scalar], h: &[Scalar]) -> Scalar {
    dot(x, h)
}

/// ᾱ^p(X) = X∘α^{-p}
pub fn alpha_bar(h: &HomHopfAlgebra, x: &[Scalar], p: i32) -> Functional {
    (0..h.dim()).map(|k| dot(x, &h.alpha_pow(&h.e(k), -p))).collect()
}

/// X•h = α²(h₁)X(α(h₂))
pub fn bullet(h: &HomHopfAlgebra, x: &[Scalar], v: &[Scalar]) -> Vector {
    let mut out = zeros(h.dim());
    for (c, a, b) in h.sweedler(v) {
        let w = &c * dot(x, &h.alpha_pow(&h.e(b), 1));
        axpy(&mut out, &w, &h.alpha_pow(&h.e(a), 2));
    }
    out
}

/// H° = H′ with convolution (XY)(h) = X(h₁)Y(h₂), Δ(X)(a⊗b) = X(ab),
/// unit ε, counit evaluation at 1, S° = S^T and α°(X) = X∘α⁻¹.
pub fn dual_hopf(h: &HomHopfAlgebra) -> Result<HomHopfAlgebra, StructError> {
    let n = h.dim();
    let d = h.data();
    let mut mult = Tensor3::zeros(n, n, n);
    let mut comult = Tensor3::zeros(n, n, n);
    for ([k, i, j], c) in d.comult.entries() {
        mult.set(i, j, k, c.clone());
    }
    for ([i, j, k], c) in d.mult.entries() {
        comult.set(k, i, j, c.clone());
    }
    HomHopfAlgebra::new(HopfData {
        name: format!("dual of {}", h.name()),
        basis: h.labels().iter().map(|l| format!("δ_{l}")).collect(),
        mult,
        unit: h.counit().clone(),
        comult,
        counit: h.unit().clone(),
        antipode: d.antipode.transpose(),
        alpha: h.alpha_inv().transpose(),
    })
}

/// (XY)(h) = X(h₁)Y(h₂)
pub fn convolve(h: &HomHopfAlgebra, x: &[Scalar], y: &[Scalar]) -> Functional {
    (0..h.dim())
        .map(|k| {
            let mut s = Scalar::zero();
            for (c, i, j) in h.sweedler_basis(k) {
                s += c * &x[*i] * &y[*j];
            }
            s
        })
        .collect()
}

/// T = {X : X(1) = 0, X(R) = 0} with τ(X_i) = Σ_j tau[i][j] X_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentSpace {
    basis: Vec<Functional>,
    tau: Matrix,
}

impl TangentSpace {
    pub fn basis(&self) -> &[Functional] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn tau(&self) -> &Matrix {
        &self.tau
    }

    /// Coordinates of X in the basis, if X ∈ T.
    pub fn coords(&self, x: &[Scalar]) -> Option<Vector> {
        let n = x.len();
        ColumnSolver::new(&self.basis, n).solve(x)
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        self.coords(x).is_some()
    }
}

pub fn tangent_space(h: &HomHopfAlgebra, r: &FodcPresentation) -> Result<TangentSpace, TangentError> {
    let n = h.dim();
    let mut rows = vec![h.unit().clone()];
    rows.extend(r.basis().iter().cloned());
    let basis = linalg::kernel_basis(&Matrix::from_rows(rows, n)?);
    let d = basis.len();
    let solver = ColumnSolver::new(&basis, n);
    let mut tau = Matrix::zeros(d, d);
    for (i, x) in basis.iter().enumerate() {
        let c = solver.solve(&alpha_bar(h, x, 1)).ok_or(TangentError::NotTauStable)?;
        for (j, v) in c.into_iter().enumerate() {
            tau.set(i, j, v);
        }
    }
    Ok(TangentSpace { basis, tau })
}

/// ⟨X, ρ⟩ = Σ ε(a)X(b) for ρ = Σ a·db.
#[derive(Debug, Clone)]
pub struct Pairing {
    h: HomHopfAlgebra,
    solver: ColumnSolver,
    ideal: Vec<Vector>,
    tangent: TangentSpace,
    kernel: Vec<Vector>,
}

impl Pairing {
    pub fn new(f: &Fodc) -> Result<Self, TangentError> {
        let h = f.base().clone();
        let n = h.dim();
        let mut cols = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cols.push(f.left_act(&h.e(a), &f.d(&h.e(b))));
            }
        }
        let kernel = linalg::kernel_basis(&Matrix::from_cols(&cols, f.dim())?);
        let ideal = recover_ideal(f);
        let tangent = tangent_space(&h, &ideal)?;
        Ok(Pairing { h, solver: ColumnSolver::new(&cols, f.dim()), ideal: ideal.basis().to_vec(), tangent, kernel })
    }

    pub fn tangent(&self) -> &TangentSpace {
        &self.tangent
    }

    pub fn ideal(&self) -> &[Vector] {
        &self.ideal
    }

    pub fn pair(&self, x: &[Scalar], rho: &[Scalar]) -> Result<Scalar, TangentError> {
        if !self.tangent.contains(x) {
            return Err(TangentError::NotInTangentSpace);
        }
        let c = self.solver.solve(rho).ok_or(TangentError::NotInCalculus)?;
        Ok(self.pair_coeffs(x, &c))
    }

    fn pair_coeffs(&self, x: &[Scalar], c: &[Scalar]) -> Scalar {
        let n = self.h.dim();
        let mut s = Scalar::zero();
        for (p, v) in linalg::support(c) {
            let (a, b) = (p / n, p % n);
            s += v * &self.h.counit()[a] * &x[b];
        }
        s
    }

    /// Σ a_i·db_i = 0 must force Σ ε(a_i) b̄_i ∈ R, so that the pairing does
    /// not depend on how ρ is written.
    pub fn check_well_defined(&self) -> Check {
        let n = self.h.dim();
        let rs = ColumnSolver::new(&self.ideal, n);
        let mut c = Check::new("pairing_well_defined");
        for (k, v) in self.kernel.iter().enumerate() {
            let mut s = zeros(n);
            for (p, x) in linalg::support(v) {
                let (a, b) = (p / n, p % n);
                let w = x * &self.h.counit()[a];
                axpy(&mut s, &w, &self.h.bar(&self.h.e(b)));
            }
            if !rs.contains(&s) {
                c.fail(&[k], to_wire_vec(&s), Vec::new());
            } else {
                c.case_bool(&[k], true);
            }
        }
        c
    }
}

/// Tangent basis X_i with the dual coinvariant basis ω_j (⟨X_i, ω_j⟩ = δ_ij)
/// and preimages v_j ∈ ker ε with ω(v_j) = ω_j.
#[derive(Debug, Clone)]
pub struct DualBases {
    pub pairing: Pairing,
    pub gram: Matrix,
    pub omegas: Vec<Vector>,
    pub preimages: Vec<Vector>,
}

impl DualBases {
    pub fn new(f: &Fodc) -> Result<Self, TangentError> {
        let pairing = Pairing::new(f)?;
        let (pre, img) = f.coinvariant_basis();
        let t = pairing.tangent().basis().to_vec();
        let d = t.len();
        let mut gram = Matrix::zeros(d, img.len());
        for (i, x) in t.iter().enumerate() {
            for (j, w) in img.iter().enumerate() {
                gram.set(i, j, pairing.pair(x, w)?);
            }
        }
        let dim = d.max(img.len());
        let rank = linalg::rank(&gram);
        if d != img.len() || rank != d {
            return Err(TangentError::Degenerate { rank, dim });
        }
        let gi = invert(&gram)?;
        let combine = |vs: &[Vector], len: usize| -> Vec<Vector> {
            (0..d)
                .map(|j| {
                    let mut out = zeros(len);
                    for (k, v) in vs.iter().enumerate() {
                        axpy(&mut out, gi.get(k, j), v);
                    }
                    out
                })
                .collect()
        };
        let omegas = combine(&img, f.dim());
        let preimages = combine(&pre, f.base().dim());
        Ok(DualBases { pairing, gram, omegas, preimages })
    }

    pub fn tangent(&self) -> &TangentSpace {
        self.pairing.tangent()
    }

    pub fn dim(&self) -> usize {
        self.omegas.len()
    }

    /// Coordinates of a coinvariant in the ω basis: (⟨X_i, ρ⟩)_i.
    pub fn coinvariant_coords(&self, rho: &[Scalar]) -> Vector {
        self.tangent().basis().iter().map(|x| self.pairing.pair(x, rho).expect("pairing")).collect()
    }
}

/// The tangent-space identities of a left-covariant calculus: the pairing
/// and its duality, the •-action, the expansion of d, the structure
/// functionals, H° and the coproduct formulas evaluated in H°.
pub fn verify_tangent_identities(f: &Fodc, phi: &Coaction) -> AxiomReport {
    let h = f.base();
    let n = h.dim();
    let mut r = AxiomReport::new(format!("tangent space of a calculus of dimension {} over {}", f.dim(), h.name()));
    let db = match DualBases::new(f) {
        Ok(db) => db,
        Err(e) => {
            let mut c = Check::new("nondegenerate_pairing");
            c.fail(&[], vec![e.to_string()], Vec::new());
            r.push(c);
            return r;
        }
    };
    let t = db.tangent().basis().to_vec();
    let d = t.len();
    let pair = |x: &[Scalar], rho: &[Scalar]| db.pairing.pair(x, rho).expect("pairing");
    let e: Vec<Vector> = (0..n).map(|i| h.e(i)).collect();

    let mut c = Check::new("tangent_dimension");
    let kd = crate::fodc::kernel_of_counit(h).len();
    c.case(&[], &[int(d as i64)], &[int((kd - db.pairing.ideal().len()) as i64)]);
    r.push(c);

    let mut c = Check::new("nondegenerate_pairing");
    c.case(&[], &[int(linalg::rank(&db.gram) as i64)], &[int(d as i64)]);
    r.push(c);

    let mut c = Check::new("dual_basis");
    for i in 0..d {
        for j in 0..d {
            let delta = if i == j { int(1) } else { int(0) };
            c.case_scalar(&[i, j], &pair(&t[i], &db.omegas[j]), &delta);
        }
    }
    r.push(c);

    r.push(db.pairing.check_well_defined());

    let mut c = Check::new("tau_stable");
    for (i, x) in t.iter().enumerate() {
        c.case_bool(&[i], db.tangent().contains(&alpha_bar(h, x, 1)));
    }
    r.push(c);

    let mut c = Check::new("pairing_h_dg");
    for (i, x) in t.iter().enumerate() {
        for a in 0..n {
            for b in 0..n {
                let rho = f.left_act(&e[a], &f.d(&e[b]));
                c.case_scalar(&[i, a, b], &pair(x, &rho), &(&h.counit()[a] * &x[b]));
            }
        }
    }
    r.push(c);

    let mut c = Check::new("pairing_omega");
    for (i, x) in t.iter().enumerate() {
        for k in 0..n {
            c.case_scalar(&[i, k], &pair(x, &f.omega(&e[k])), &evaluate(x, &h.alpha_pow(&e[k], -1)));
        }
    }
    r.push(c);

    let mut c = Check::new("pairing_equivariant");
    for (i, x) in t.iter().enumerate() {
        for a in 0..f.dim() {
            let rho = f.e(a);
            c.case_scalar(&[i, a], &pair(&alpha_bar(h, x, 1), &f.gamma(&rho, 1)), &pair(x, &rho));
        }
    }
    r.push(c);

    let mut c = Check::new("bullet_counit");
    for (i, x) in t.iter().enumerate() {
        for k in 0..n {
            c.case_scalar(&[i, k], &h.eps(&bullet(h, x, &e[k])), &evaluate(x, &e[k]));
        }
    }
    r.push(c);

    let mut c = Check::new("convolution_unit");
    for (i, x) in t.iter().enumerate() {
        let ab = alpha_bar(h, x, 1);
        c.case(&[i], &convolve(h, h.counit(), x), &ab);
        c.case(&[i], &convolve(h, x, h.counit()), &ab);
    }
    r.push(c);

    let mut c = Check::new("d_expansion");
    for k in 0..n {
        let hk = h.alpha_pow(&e[k], -2);
        let mut rhs = zeros(f.dim());
        for (i, x) in t.iter().enumerate() {
            axpy(&mut rhs, &int(1), &f.left_act(&bullet(h, x, &hk), &db.omegas[i]));
        }
        c.case(&[k], &f.d(&e[k]), &rhs);
    }
    r.push(c);

    let sf = structure_functionals(f, phi, &db.omegas);
    for c in crate::fodc::check_structure_functionals(h, &sf) {
        r.push(c);
    }
    for c in coproduct_formulas(h, &t, &sf) {
        r.push(c);
    }

    let dual = match dual_hopf(h) {
        Ok(dual) => dual,
        Err(e) => {
            let mut c = Check::new("dual_hopf");
            c.fail(&[], vec![e.to_string()], Vec::new());
            r.push(c);
            return r;
        }
    };
    r.absorb("dual_hopf", check_axioms(&dual, Level::Hopf));
    let mut c = Check::new("dual_convolution");
    for i in 0..d {
        for j in 0..d {
            c.case(&[i, j], &dual.mul(&t[i], &t[j]), &convolve(h, &t[i], &t[j]));
        }
    }
    r.push(c);
    r
}

/// f̄^i_j = γ̄^i_k f^k_j
pub fn fbar(sf: &StructureFunctionals) -> Vec<Vec<Functional>> {
    let d = sf.gamma.rows();
    let n = sf.f.first().and_then(|r| r.first()).map_or(0, Vec::len);
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let mut out = zeros(n);
                    for k in 0..d {
                        axpy(&mut out, sf.gamma_bar.get(i, k), &sf.f[k][j]);
                    }
                    out
                })
                .collect()
        })
        .collect()
}

/// X_l(hg) expansion and the coproduct formulas for Δ(f^i_j) and Δ(X_l), with
/// Δ(X)(a⊗b) = X(ab) taken from H°.
fn coproduct_formulas(h: &HomHopfAlgebra, t: &[Functional], sf: &StructureFunctionals) -> Vec<Check> {
    let n = h.dim();
    let d = t.len();
    let gm = &sf.gamma;
    let fb = fbar(sf);
    let ev = evaluate;
    let e: Vec<Vector> = (0..n).map(|i| h.e(i)).collect();
    let delta = |x: &[Scalar]| -> Vector {
        let mut out = zeros(n * n);
        for a in 0..n {
            for b in 0..n {
                out[a * n + b] = ev(x, h.mul_basis(a, b));
            }
        }
        out
    };
    let compose_alpha = |x: &[Scalar]| alpha_bar(h, x, -1);
    let mut out = Vec::new();

    // X_l(hg) = ε(h)(γ X)(g) + X_j(h)(γ f̄)(g); the ε-term and the f̄-term
    // each sum over either γ[i][l] or γ[l][i]
    let x_hg = |t_eps: bool, t_f: bool| -> Check {
        let g = |row: usize, col: usize, tr: bool| if tr { gm.get(col, row) } else { gm.get(row, col) };
        let mut c = Check::new("x_hg");
        for l in 0..d {
            for a in 0..n {
                for b in 0..n {
                    let lhs = ev(&t[l], h.mul_basis(a, b));
                    let mut rhs = Scalar::zero();
                    let eh = &h.counit()[a];
                    for i in 0..d {
                        rhs += eh * g(i, l, t_eps) * ev(&t[i], &e[b]);
                    }
                    for j in 0..d {
                        let xh = ev(&t[j], &e[a]);
                        if xh.is_zero() {
                            continue;
                        }
                        for k in 0..d {
                            rhs += &xh * g(k, l, t_f) * ev(&fb[j][k], &e[b]);
                        }
                    }
                    c.case_scalar(&[l, a, b], &lhs, &rhs);
                }
            }
        }
        c
    };
    out.push(readings("x_hg_expansion", vec![("gamma[i][l]", x_hg(false, false)), ("gamma[l][i]", x_hg(true, true))]));

    let mut c = Check::new("delta_f");
    for i in 0..d {
        for j in 0..d {
            let mut rhs = zeros(n * n);
            for l in 0..d {
                axpy(&mut rhs, &int(1), &kron(&fb[i][l], &compose_alpha(&sf.f[l][j])));
            }
            c.case(&[i, j], &delta(&sf.f[i][j]), &rhs);
        }
    }
    out.push(c);

    // Δ(X_l) = X_j⊗γ^k_l f̄^j_k + ε⊗γ^l_i X_i, the ε-term with γ[l][i] or
    // γ[i][l]
    let delta_x = |t_eps: bool| -> Check {
        let mut c = Check::new("delta_x");
        for l in 0..d {
            let mut rhs = zeros(n * n);
            for j in 0..d {
                let mut second = zeros(n);
                for k in 0..d {
                    axpy(&mut second, gm.get(k, l), &fb[j][k]);
                }
                axpy(&mut rhs, &int(1), &kron(&t[j], &second));
            }
            let mut second = zeros(n);
            for i in 0..d {
                let g = if t_eps { gm.get(i, l) } else { gm.get(l, i) };
                axpy(&mut second, g, &t[i]);
            }
            axpy(&mut rhs, &int(1), &kron(h.counit(), &second));
            c.case(&[l], &delta(&t[l]), &rhs);
        }
        c
    };
    out.push(readings("delta_x", vec![("epsilon term gamma[l][i]", delta_x(false)), ("epsilon term gamma[i][l]", delta_x(true))]));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fodc::{left_covariance, quotient_fodc, universal_fodc};
    use crate::hopf::{group_algebra_zn, sweedler_h4};

    #[test]
    fn convolution_examples() {
        let h = group_algebra_zn(2, 1).unwrap();
        let x = vec![int(0), int(1)];
        let xx = convolve(&h, &x, &x);
        assert_eq!(xx, vec![int(0), int(1)]);
        assert_eq!(convolve(&h, h.counit(), &x), alpha_bar(&h, &x, 1));
    }

    #[test]
    fn bullet_examples() {
        let h = group_algebra_zn(2, 1).unwrap();
        let x = vec![int(0), int(1)];
        assert_eq!(bullet(&h, &x, &h.e(1)), h.e(1));
        assert_eq!(bullet(&h, &x, h.unit()), zeros(2));
        let h4 = sweedler_h4(&int(-1)).unwrap();
        for k in 0..4 {
            assert_eq!(bullet(&h4, h4.counit(), &h4.e(k)), h4.alpha_pow(&h4.e(k), 1));
        }
    }

    #[test]
    fn tangent_dimensions() {
        let h = group_algebra_zn(2, 1).unwrap();
        let t = tangent_space(&h, &FodcPresentation::zero()).unwrap();
        assert_eq!(t.basis(), &[vec![int(0), int(1)]]);
        let h4 = sweedler_h4(&int(-1)).unwrap();
        assert_eq!(tangent_space(&h4, &FodcPresentation::zero()).unwrap().dim(), 3);
        assert_eq!(tangent_space(&h4, &FodcPresentation::full(&h4)).unwrap().dim(), 0);
    }

    #[test]
    fn pairing_examples() {
        let h = group_algebra_zn(2, 1).unwrap();
        let u = universal_fodc(&h);
        let p = Pairing::new(&u).unwrap();
        let x = vec![int(0), int(1)];
        assert_eq!(p.pair(&x, &u.d(&h.e(1))).unwrap(), int(1));
        assert_eq!(p.pair(&x, &u.omega(h.unit())).unwrap(), int(0));
        assert_eq!(p.pair(&x, &u.omega(&h.e(1))).unwrap(), int(1));
        assert_eq!(p.pair(&[int(1), int(0)], &u.d(&h.e(1))), Err(TangentError::NotInTangentSpace));
    }

    #[test]
    fn dual_of_kz2() {
        let h = group_algebra_zn(2, 1).unwrap();
        let dual = dual_hopf(&h).unwrap();
        assert!(check_axioms(&dual, Level::Hopf).passed());
        // Δ(δ_g) = δ_1⊗δ_g + δ_g⊗δ_1
        assert_eq!(dual.comul(&dual.e(1)), vec![int(0), int(1), int(1), int(0)]);
        assert_eq!(dual.s(&dual.e(1)), dual.e(1));
        assert_eq!(dual_hopf(&dual).unwrap().data().mult, h.data().mult);
        assert_eq!(dual_hopf(&dual).unwrap().data().comult, h.data().comult);
    }

    #[test]
    fn identities_on_h4() {
        let h4 = sweedler_h4(&int(-1)).unwrap();
        for q in [universal_fodc(&h4), quotient_fodc(&h4, &crate::fodc::search_right_ideals(&h4, 1, 30)[0])] {
            let phi = left_covariance(&q).1.unwrap();
            let r = verify_tangent_identities(&q, &phi);
            assert!(r.passed(), "{}", r.render_text());
        }
    }
}
