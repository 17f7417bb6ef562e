//! First-order differential calculi (Γ, γ, d) over a Hom-Hopf algebra:
//! the universal calculus H⊗ker ε, quotients by right Hom-ideals, the
//! covariance tests, ω, P_L and the structure functionals f^i_j.
//!
//! Γ is stored in coordinates: one m×m matrix per basis element of H for
//! each action, the m×n matrix of d and the m×m matrix of γ.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hopf::{coaction_laws, split2, HomHopfAlgebra, Side};
use crate::linalg::{self, axpy, invert, is_zero, kron, rref, span_basis, unit_vec, zeros, ColumnSolver, LinalgError, Matrix, Vector};
use crate::report::{AxiomReport, Check};
use crate::scalar::{int, to_wire_vec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FodcError {
    #[error("ideal vector {index} is not in ker ε (ε = {value})")]
    NotInKerEps { index: usize, value: String },
    #[error("α(r_{index}) is not in the ideal")]
    NotAlphaStable { index: usize },
    #[error("r_{index} · e_{by} is not in the ideal")]
    NotRightHomIdeal { index: usize, by: usize },
    #[error("ideal vector {index} has length {got}, expected {expected}")]
    BadLength { index: usize, expected: usize, got: usize },
    #[error("calculus is not left-covariant")]
    NotLeftCovariant,
    #[error("calculus is not right-covariant")]
    NotRightCovariant,
    #[error("calculus is not bicovariant")]
    NotBicovariant,
    #[error("malformed calculus: {0}")]
    Shape(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Basis of ker ε, echelonized.
pub fn kernel_of_counit(h: &HomHopfAlgebra) -> Vec<Vector> {
    let m = Matrix::from_rows(vec![h.counit().clone()], h.dim()).expect("counit row");
    linalg::kernel_basis(&m)
}

/// A right Hom-ideal R ⊆ ker ε given by an echelonized basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FodcPresentation {
    basis: Vec<Vector>,
}

impl FodcPresentation {
    pub fn zero() -> Self {
        FodcPresentation { basis: Vec::new() }
    }

    /// Validates R ⊆ ker ε, α(R) = R and R·H ⊆ R, then echelonizes.
    pub fn new(h: &HomHopfAlgebra, vecs: &[Vector]) -> Result<Self, FodcError> {
        let n = h.dim();
        for (index, v) in vecs.iter().enumerate() {
            if v.len() != n {
                return Err(FodcError::BadLength { index, expected: n, got: v.len() });
            }
        }
        let basis = span_basis(vecs, n);
        for (index, v) in vecs.iter().enumerate() {
            let e = h.eps(v);
            if !num_traits::Zero::is_zero(&e) {
                return Err(FodcError::NotInKerEps { index, value: e.to_string() });
            }
        }
        let solver = ColumnSolver::new(&basis, n);
        for (index, v) in vecs.iter().enumerate() {
            if !solver.contains(&h.alpha_pow(v, 1)) {
                return Err(FodcError::NotAlphaStable { index });
            }
        }
        for (index, v) in vecs.iter().enumerate() {
            for by in 0..n {
                if !solver.contains(&h.mul(v, &h.e(by))) {
                    return Err(FodcError::NotRightHomIdeal { index, by });
                }
            }
        }
        Ok(FodcPresentation { basis })
    }

    pub fn full(h: &HomHopfAlgebra) -> Self {
        FodcPresentation { basis: span_basis(&kernel_of_counit(h), h.dim()) }
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Raw coordinate data of a calculus, for building one by hand.
#[derive(Debug, Clone)]
pub struct FodcParts {
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
    pub d: Matrix,
    pub gamma: Matrix,
}

#[derive(Debug, Clone)]
pub struct Fodc {
    h: HomHopfAlgebra,
    dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    d: Matrix,
    gamma: Matrix,
    gamma_inv: Matrix,
    ideal: Vec<Vector>,
}

impl Fodc {
    pub fn from_parts(h: &HomHopfAlgebra, parts: FodcParts) -> Result<Self, FodcError> {
        let n = h.dim();
        let m = parts.gamma.rows();
        let square = |x: &Matrix| x.rows() == m && x.cols() == m;
        if parts.left.len() != n || parts.right.len() != n || !parts.left.iter().chain(&parts.right).all(square) {
            return Err(FodcError::Shape(format!("actions must be {n} matrices of size {m}x{m}")));
        }
        if parts.d.rows() != m || parts.d.cols() != n || !square(&parts.gamma) {
            return Err(FodcError::Shape(format!("d must be {m}x{n} and gamma {m}x{m}")));
        }
        let gamma_inv = invert(&parts.gamma)?;
        Ok(Fodc {
            h: h.clone(),
            dim: m,
            left: parts.left,
            right: parts.right,
            d: parts.d,
            gamma: parts.gamma,
            gamma_inv,
            ideal: Vec::new(),
        })
    }

    pub fn parts(&self) -> FodcParts {
        FodcParts { left: self.left.clone(), right: self.right.clone(), d: self.d.clone(), gamma: self.gamma.clone() }
    }

    pub fn base(&self) -> &HomHopfAlgebra {
        &self.h
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The ideal this calculus was presented by (empty for the universal one).
    pub fn ideal(&self) -> &[Vector] {
        &self.ideal
    }

    pub fn gamma_matrix(&self) -> &Matrix {
        &self.gamma
    }

    pub fn d_matrix(&self) -> &Matrix {
        &self.d
    }

    pub fn e(&self, a: usize) -> Vector {
        unit_vec(self.dim, a)
    }

    pub fn left_act(&self, h: &[Scalar], rho: &[Scalar]) -> Vector {
        let mut out = zeros(self.dim);
        for (i, c) in linalg::support(h) {
            axpy(&mut out, c, &self.left[i].apply(rho));
        }
        out
    }

    pub fn right_act(&self, rho: &[Scalar], h: &[Scalar]) -> Vector {
        let mut out = zeros(self.dim);
        for (i, c) in linalg::support(h) {
            axpy(&mut out, c, &self.right[i].apply(rho));
        }
        out
    }

    pub fn d(&self, h: &[Scalar]) -> Vector {
        self.d.apply(h)
    }

    pub fn gamma(&self, rho: &[Scalar], p: i32) -> Vector {
        let m = if p >= 0 { &self.gamma } else { &self.gamma_inv };
        let mut v = rho.to_vec();
        for _ in 0..p.unsigned_abs() {
            v = m.apply(&v);
        }
        v
    }

    /// ω(h) = S(h₁)·dh₂
    pub fn omega(&self, h: &[Scalar]) -> Vector {
        let mut out = zeros(self.dim);
        for (c, x, y) in self.h.sweedler(h) {
            axpy(&mut out, &c, &self.left_act(&self.h.s(&self.h.e(x)), &self.d(&self.h.e(y))));
        }
        out
    }

    /// Preimages u in ker ε and the independent coinvariants ω(u), chosen
    /// greedily along the echelonized basis of ker ε.
    pub fn coinvariant_basis(&self) -> (Vec<Vector>, Vec<Vector>) {
        let mut pre = Vec::new();
        let mut img: Vec<Vector> = Vec::new();
        for u in kernel_of_counit(&self.h) {
            let w = self.omega(&u);
            let mut trial = img.clone();
            trial.push(w.clone());
            if linalg::rank_of(&trial, self.dim) > img.len() {
                img.push(w);
                pre.push(u);
            }
        }
        (pre, img)
    }
}

/// The universal calculus Ω¹(H) = H⊗ker ε with dh = h₁⊗π(h₂),
/// g'·(g⊗k) = α⁻¹(g')g⊗α(k), (g⊗k)·h = g h₁⊗k h₂ and γ = α⊗α.
pub fn universal_fodc(h: &HomHopfAlgebra) -> Fodc {
    let n = h.dim();
    let kernel = kernel_of_counit(h);
    let kd = kernel.len();
    let m = n * kd;
    let solver = ColumnSolver::new(&kernel, n);
    let kc = |v: &[Scalar]| solver.solve(v).expect("vector lies in ker ε");
    let el = |g: &[Scalar], k: &[Scalar]| kron(g, &kc(k));
    let bar = |v: &[Scalar]| {
        let mut out = v.to_vec();
        axpy(&mut out, &-h.eps(v), h.unit());
        out
    };
    let cols = |f: &dyn Fn(usize, &Vector, &Vector) -> Vector| -> Matrix {
        let c: Vec<Vector> = (0..m).map(|a| f(a, &h.e(a / kd), &kernel[a % kd])).collect();
        Matrix::from_cols(&c, m).expect("square")
    };
    let left = (0..n)
        .map(|i| {
            let ai = h.alpha_pow(&h.e(i), -1);
            cols(&|_, g, k| el(&h.mul(&ai, g), &h.alpha_pow(k, 1)))
        })
        .collect();
    let right = (0..n)
        .map(|i| {
            cols(&|_, g, k| {
                let mut out = zeros(m);
                for (c, x, y) in h.sweedler_basis(i) {
                    axpy(&mut out, c, &el(&h.mul(g, &h.e(*x)), &h.mul(k, &h.e(*y))));
                }
                out
            })
        })
        .collect();
    let dcols: Vec<Vector> = (0..n)
        .map(|i| {
            let mut out = zeros(m);
            for (c, x, y) in h.sweedler_basis(i) {
                axpy(&mut out, c, &el(&h.e(*x), &bar(&h.e(*y))));
            }
            out
        })
        .collect();
    let gamma = cols(&|_, g, k| el(&h.alpha_pow(g, 1), &h.alpha_pow(k, 1)));
    let parts = FodcParts { left, right, d: Matrix::from_cols(&dcols, m).expect("d"), gamma };
    Fodc::from_parts(h, parts).expect("universal calculus is well-formed")
}

/// Γ/N for a sub-bimodule N spanned by `vecs`; the complement of N is the
/// set of non-pivot coordinates of its echelon form.
fn quotient(f: &Fodc, vecs: &[Vector]) -> Fodc {
    let m = f.dim;
    let basis = span_basis(vecs, m);
    if basis.is_empty() {
        return f.clone();
    }
    let (red, pivots) = rref(&Matrix::from_rows(basis, m).expect("rows"));
    let keep: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    let mm = keep.len();
    let proj = |v: &[Scalar]| -> Vector {
        let mut v = v.to_vec();
        for (r, &p) in pivots.iter().enumerate() {
            if !num_traits::Zero::is_zero(&v[p]) {
                let c = -v[p].clone();
                axpy(&mut v, &c, red.row(r));
            }
        }
        keep.iter().map(|&c| v[c].clone()).collect()
    };
    let lift = |a: usize| unit_vec(m, keep[a]);
    let conj = |mat: &Matrix| -> Matrix {
        let c: Vec<Vector> = (0..mm).map(|a| proj(&mat.apply(&lift(a)))).collect();
        Matrix::from_cols(&c, mm).expect("square")
    };
    let n = f.h.dim();
    let dcols: Vec<Vector> = (0..n).map(|i| proj(&f.d.col(i))).collect();
    let parts = FodcParts {
        left: f.left.iter().map(conj).collect(),
        right: f.right.iter().map(conj).collect(),
        d: Matrix::from_cols(&dcols, mm).expect("d"),
        gamma: conj(&f.gamma),
    };
    Fodc::from_parts(&f.h, parts).expect("quotient is well-formed")
}

/// Ω¹(H)/N with N = H·ω(R).
pub fn quotient_fodc(h: &HomHopfAlgebra, r: &FodcPresentation) -> Fodc {
    let u = universal_fodc(h);
    let mut n_vecs = Vec::new();
    for rv in r.basis() {
        let w = u.omega(rv);
        for i in 0..h.dim() {
            n_vecs.push(u.left_act(&h.e(i), &w));
        }
    }
    let mut q = quotient(&u, &n_vecs);
    q.ideal = r.basis().to_vec();
    q
}

/// R_Γ = {h ∈ ker ε : ω(h) = 0}, echelonized.
pub fn recover_ideal(f: &Fodc) -> FodcPresentation {
    let n = f.h.dim();
    let kernel = kernel_of_counit(&f.h);
    let cols: Vec<Vector> = kernel.iter().map(|k| f.omega(k)).collect();
    let mat = Matrix::from_cols(&cols, f.dim).expect("columns");
    let vecs: Vec<Vector> = linalg::kernel_basis(&mat)
        .iter()
        .map(|c| {
            let mut v = zeros(n);
            for (j, x) in linalg::support(c) {
                axpy(&mut v, x, &kernel[j]);
            }
            v
        })
        .collect();
    FodcPresentation { basis: span_basis(&vecs, n) }
}

/// A Hom-coaction of H on Γ materialized from the kernel test: ρ is written
/// as Σ c_ab e_a·de_b and mapped through the candidate formula.
#[derive(Debug, Clone)]
pub struct Coaction {
    side: Side,
    n: usize,
    m: usize,
    solver: ColumnSolver,
    images: Vec<Vector>,
}

impl Coaction {
    pub fn side(&self) -> Side {
        self.side
    }

    /// φ(ρ); left coactions land in H⊗Γ (index `h * m + a`), right ones in
    /// Γ⊗H (index `a * n + h`).
    pub fn apply(&self, rho: &[Scalar]) -> Vector {
        let c = self.solver.solve(rho).expect("Γ = H·dH");
        let mut out = zeros(self.n * self.m);
        for (p, x) in linalg::support(&c) {
            axpy(&mut out, x, &self.images[p]);
        }
        out
    }

    /// `(coef, h index, Γ vector)` terms of φ(ρ).
    pub fn terms(&self, rho: &[Scalar]) -> Vec<(usize, Vector)> {
        let v = self.apply(rho);
        (0..self.n)
            .filter_map(|i| {
                let g: Vector = match self.side {
                    Side::Left => v[i * self.m..(i + 1) * self.m].to_vec(),
                    Side::Right => (0..self.m).map(|a| v[a * self.n + i].clone()).collect(),
                };
                (!is_zero(&g)).then_some((i, g))
            })
            .collect()
    }
}

/// Kernel-inclusion test: ker(Φ₁) ⊆ ker(Φ₂) where Φ₁(a⊗b) = a·db and
/// Φ₂(a⊗b) = a₁b₁⊗a₂·db₂ (left) or a₁·db₁⊗a₂b₂ (right).
pub fn coaction_candidate(f: &Fodc, side: Side) -> (Check, Coaction) {
    let h = &f.h;
    let (n, m) = (h.dim(), f.dim);
    let mut phi1 = Vec::with_capacity(n * n);
    let mut phi2 = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            phi1.push(f.left_act(&h.e(a), &f.d(&h.e(b))));
            let mut out = zeros(n * m);
            for (c1, a1, a2) in h.sweedler_basis(a) {
                for (c2, b1, b2) in h.sweedler_basis(b) {
                    let t = match side {
                        Side::Left => kron(h.mul_basis(*a1, *b1), &f.left_act(&h.e(*a2), &f.d.col(*b2))),
                        Side::Right => kron(&f.left_act(&h.e(*a1), &f.d.col(*b1)), h.mul_basis(*a2, *b2)),
                    };
                    axpy(&mut out, &(c1 * c2), &t);
                }
            }
            phi2.push(out);
        }
    }
    let mat = Matrix::from_cols(&phi1, m).expect("columns");
    let mut chk = Check::new("kernel_inclusion");
    for (k, v) in linalg::kernel_basis(&mat).iter().enumerate() {
        let mut s = zeros(n * m);
        for (p, x) in linalg::support(v) {
            axpy(&mut s, x, &phi2[p]);
        }
        chk.case(&[k], &s, &zeros(n * m));
    }
    let solver = ColumnSolver::new(&phi1, m);
    (chk, Coaction { side, n, m, solver, images: phi2 })
}

fn coaction_structure_checks(f: &Fodc, phi: &Coaction) -> Vec<Check> {
    let h = &f.h;
    let (n, m) = (h.dim(), f.dim);
    let tensor = |x: &[Scalar], g: &[Scalar]| match phi.side {
        Side::Left => kron(x, g),
        Side::Right => kron(g, x),
    };
    // Δ(h)·φ(ρ) and φ(ρ)·Δ(h): the H leg meets h₁ on the left side and h₂ on
    // the right side, the Γ leg meets the other one
    let act = |v: &[Scalar], k: usize, on_left: bool| -> Vector {
        let mut out = zeros(n * m);
        let pieces = match phi.side {
            Side::Left => split2(v, n, m),
            Side::Right => split2(v, m, n).into_iter().map(|(c, a, i)| (c, i, a)).collect(),
        };
        for (c, i, a) in pieces {
            for (c2, x, y) in h.sweedler_basis(k) {
                let (hx, gx) = match phi.side {
                    Side::Left => (*x, *y),
                    Side::Right => (*y, *x),
                };
                let (hh, g) = if on_left {
                    (h.mul_basis(hx, i).to_vec(), f.left_act(&h.e(gx), &f.e(a)))
                } else {
                    (h.mul_basis(i, hx).to_vec(), f.right_act(&f.e(a), &h.e(gx)))
                };
                axpy(&mut out, &(&c * c2), &tensor(&hh, &g));
            }
        }
        out
    };
    let mut ll = Check::new("coaction_left_linear");
    let mut rl = Check::new("coaction_right_linear");
    for k in 0..n {
        for a in 0..m {
            let pr = phi.apply(&f.e(a));
            ll.case(&[k, a], &phi.apply(&f.left_act(&h.e(k), &f.e(a))), &act(&pr, k, true));
            rl.case(&[k, a], &phi.apply(&f.right_act(&f.e(a), &h.e(k))), &act(&pr, k, false));
        }
    }
    let mut dc = Check::new("d_colinear");
    for k in 0..n {
        let mut rhs = zeros(n * m);
        for (c, x, y) in h.sweedler_basis(k) {
            let t = match phi.side {
                Side::Left => kron(&h.e(*x), &f.d.col(*y)),
                Side::Right => kron(&f.d.col(*x), &h.e(*y)),
            };
            axpy(&mut rhs, c, &t);
        }
        dc.case(&[k], &phi.apply(&f.d.col(k)), &rhs);
    }
    let mut out = vec![ll, rl, dc];
    for mut c in coaction_laws(h, phi.side, &f.gamma, &|v| phi.apply(v)) {
        c.name = format!("coaction_{}", c.name);
        out.push(c);
    }
    out
}

fn covariance(f: &Fodc, side: Side) -> (AxiomReport, Option<Coaction>) {
    let label = match side {
        Side::Left => "left",
        Side::Right => "right",
    };
    let mut r = AxiomReport::new(format!("{label} covariance"));
    let (chk, phi) = coaction_candidate(f, side);
    let ok = chk.passed();
    r.push(chk);
    let mut span = Check::new("spanned_by_h_dh");
    span.case(&[], &[int(phi.solver.rank() as i64)], &[int(f.dim as i64)]);
    let ok = ok && span.passed();
    r.push(span);
    if !ok {
        return (r, None);
    }
    for c in coaction_structure_checks(f, &phi) {
        r.push(c);
    }
    let ok = r.passed();
    (r, ok.then_some(phi))
}

/// Kernel-inclusion test for left covariance plus the coaction axioms of the
/// materialized φ.
pub fn left_covariance(f: &Fodc) -> (AxiomReport, Option<Coaction>) {
    covariance(f, Side::Left)
}

pub fn right_covariance(f: &Fodc) -> (AxiomReport, Option<Coaction>) {
    covariance(f, Side::Right)
}

pub fn check_left_covariance(f: &Fodc) -> AxiomReport {
    left_covariance(f).0
}

pub fn check_right_covariance(f: &Fodc) -> AxiomReport {
    right_covariance(f).0
}

/// P_L(ρ) = S(ρ₍₋₁₎)·ρ₍₀₎
pub fn pl_project(f: &Fodc, phi: &Coaction, rho: &[Scalar]) -> Result<Vector, FodcError> {
    if phi.side != Side::Left {
        return Err(FodcError::NotLeftCovariant);
    }
    let mut out = zeros(f.dim);
    for (i, g) in phi.terms(rho) {
        axpy(&mut out, &int(1), &f.left_act(&f.h.s(&f.h.e(i)), &g));
    }
    Ok(out)
}

/// P_R(ρ) = ρ₍₀₎·S(ρ₍₁₎)
pub fn pr_project(f: &Fodc, phi: &Coaction, rho: &[Scalar]) -> Result<Vector, FodcError> {
    if phi.side != Side::Right {
        return Err(FodcError::NotRightCovariant);
    }
    let mut out = zeros(f.dim);
    for (i, g) in phi.terms(rho) {
        axpy(&mut out, &int(1), &f.right_act(&g, &f.h.s(&f.h.e(i))));
    }
    Ok(out)
}

/// ω⊲h = P_L(ω·h)
pub fn right_coinvariant_action(f: &Fodc, phi: &Coaction, w: &[Scalar], h: &[Scalar]) -> Vector {
    pl_project(f, phi, &f.right_act(w, h)).expect("left coaction")
}

/// ω_i⊲h = f^i_j(h)ω_j and γ(ω_i) = γ^i_j ω_j for a basis {ω_i} of the
/// coinvariants. `f[i][j]` holds the coordinates of the functional f^i_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFunctionals {
    pub f: Vec<Vec<Vector>>,
    pub gamma: Matrix,
    pub gamma_bar: Matrix,
}

pub fn structure_functionals(f: &Fodc, phi: &Coaction, basis: &[Vector]) -> StructureFunctionals {
    let (n, d) = (f.h.dim(), basis.len());
    let solver = ColumnSolver::new(basis, f.dim);
    let coords = |v: &[Scalar]| solver.solve(v).expect("coinvariant");
    let mut fm = vec![vec![zeros(n); d]; d];
    for (i, w) in basis.iter().enumerate() {
        for k in 0..n {
            let c = coords(&right_coinvariant_action(f, phi, w, &f.h.e(k)));
            for j in 0..d {
                fm[i][j][k] = c[j].clone();
            }
        }
    }
    let rows: Vec<Vector> = basis.iter().map(|w| coords(&f.gamma(w, 1))).collect();
    let gamma = Matrix::from_rows(rows, d).expect("square");
    let gamma_bar = invert(&gamma).expect("γ is invertible on coinvariants");
    StructureFunctionals { f: fm, gamma, gamma_bar }
}

/// f^i_j(1) = γ^i_j and f^i_j(hg) = γ̄^i_k f^k_l(h) f^l_j(α(g)).
pub fn check_structure_functionals(h: &HomHopfAlgebra, sf: &StructureFunctionals) -> Vec<Check> {
    let (n, d) = (h.dim(), sf.gamma.rows());
    let ev = |i: usize, j: usize, v: &[Scalar]| linalg::dot(&sf.f[i][j], v);
    let mut unit = Check::new("f_unit_is_gamma");
    for i in 0..d {
        for j in 0..d {
            unit.case_scalar(&[i, j], &ev(i, j, h.unit()), sf.gamma.get(i, j));
        }
    }
    let mut prod = Check::new("f_product_law");
    for a in 0..n {
        for b in 0..n {
            let ab = h.mul_basis(a, b).to_vec();
            let ag = h.alpha_pow(&h.e(b), 1);
            for i in 0..d {
                let fh: Vec<Vec<Scalar>> = (0..d).map(|k| (0..d).map(|l| ev(k, l, &h.e(a))).collect()).collect();
                for j in 0..d {
                    let mut rhs = int(0);
                    for k in 0..d {
                        for l in 0..d {
                            rhs += sf.gamma_bar.get(i, k) * &fh[k][l] * ev(l, j, &ag);
                        }
                    }
                    prod.case_scalar(&[i, j, a, b], &ev(i, j, &ab), &rhs);
                }
            }
        }
    }
    vec![unit, prod]
}

/// Leibniz, d∘α = γ∘d, Γ = H·dH = dH·H and the Hom-bimodule laws.
pub fn check_fodc(f: &Fodc) -> AxiomReport {
    let h = &f.h;
    let (n, m) = (h.dim(), f.dim);
    let mut r = AxiomReport::new(format!("first-order calculus of dimension {m} over {}", h.name()));
    let e: Vec<Vector> = (0..n).map(|i| h.e(i)).collect();

    let mut c = Check::new("leibniz");
    for a in 0..n {
        for b in 0..n {
            let mut rhs = f.left_act(&e[a], &f.d(&e[b]));
            axpy(&mut rhs, &int(1), &f.right_act(&f.d(&e[a]), &e[b]));
            c.case(&[a, b], &f.d(h.mul_basis(a, b)), &rhs);
        }
    }
    r.push(c);

    let mut c = Check::new("d_intertwines_alpha");
    for a in 0..n {
        c.case(&[a], &f.d(&h.alpha_pow(&e[a], 1)), &f.gamma(&f.d(&e[a]), 1));
    }
    r.push(c);

    let mut c = Check::new("d_unit_zero");
    c.case(&[], &f.d(h.unit()), &zeros(m));
    r.push(c);

    let mut sl = Vec::new();
    let mut sr = Vec::new();
    for a in 0..n {
        for b in 0..n {
            sl.push(f.left_act(&e[a], &f.d(&e[b])));
            sr.push(f.right_act(&f.d(&e[a]), &e[b]));
        }
    }
    let mut c = Check::new("spanned_by_h_dh");
    c.case(&[], &[int(linalg::rank_of(&sl, m) as i64)], &[int(m as i64)]);
    r.push(c);
    let mut c = Check::new("spanned_by_dh_h");
    c.case(&[], &[int(linalg::rank_of(&sr, m) as i64)], &[int(m as i64)]);
    r.push(c);

    let mut lm = Check::new("left_module_law");
    let mut rm = Check::new("right_module_law");
    let mut bm = Check::new("bimodule_compatibility");
    for a in 0..n {
        let aa = h.alpha_pow(&e[a], 1);
        for b in 0..n {
            let ab = h.mul_basis(a, b).to_vec();
            let ba = h.alpha_pow(&e[b], 1);
            for g in 0..m {
                let rho = f.e(g);
                let gr = f.gamma(&rho, 1);
                lm.case(&[a, b, g], &f.left_act(&aa, &f.left_act(&e[b], &rho)), &f.left_act(&ab, &gr));
                rm.case(&[a, b, g], &f.right_act(&f.right_act(&rho, &e[a]), &ba), &f.right_act(&gr, &ab));
                bm.case(&[a, b, g], &f.left_act(&aa, &f.right_act(&rho, &e[b])), &f.right_act(&f.left_act(&e[a], &rho), &ba));
            }
        }
    }
    r.push(lm);
    r.push(rm);
    r.push(bm);

    let mut c = Check::new("gamma_twists_left_action");
    let mut c2 = Check::new("gamma_twists_right_action");
    for a in 0..n {
        for g in 0..m {
            let rho = f.e(g);
            let aa = h.alpha_pow(&e[a], 1);
            c.case(&[a, g], &f.gamma(&f.left_act(&e[a], &rho), 1), &f.left_act(&aa, &f.gamma(&rho, 1)));
            c2.case(&[a, g], &f.gamma(&f.right_act(&rho, &e[a]), 1), &f.right_act(&f.gamma(&rho, 1), &aa));
        }
    }
    r.push(c);
    r.push(c2);
    r
}

/// The ω identities of a left-covariant calculus: dh = h₁·ω(h₂),
/// ω(h)⊲g = ω(h̄g), ω∘α = γ∘ω, ω(H) = coinvariants, Γ = H·ω(H), and the
/// P_L laws.
pub fn check_omega(f: &Fodc, phi: &Coaction) -> Vec<Check> {
    let h = &f.h;
    let (n, m) = (h.dim(), f.dim);
    let e: Vec<Vector> = (0..n).map(|i| h.e(i)).collect();
    let pl = |v: &[Scalar]| pl_project(f, phi, v).expect("left coaction");
    let mut out = Vec::new();

    let mut c = Check::new("omega_unit_zero");
    c.case(&[], &f.omega(h.unit()), &zeros(m));
    out.push(c);

    let mut c = Check::new("dh_via_omega");
    for k in 0..n {
        let mut rhs = zeros(m);
        for (x, y, z) in h.sweedler_basis(k).iter().map(|(c, x, y)| (c, *x, *y)) {
            axpy(&mut rhs, x, &f.left_act(&e[y], &f.omega(&e[z])));
        }
        c.case(&[k], &f.d(&e[k]), &rhs);
    }
    out.push(c);

    let mut c = Check::new("omega_is_pl_of_d");
    for k in 0..n {
        c.case(&[k], &pl(&f.d(&e[k])), &f.omega(&e[k]));
    }
    out.push(c);

    let mut c = Check::new("omega_intertwines_alpha");
    for k in 0..n {
        c.case(&[k], &f.omega(&h.alpha_pow(&e[k], 1)), &f.gamma(&f.omega(&e[k]), 1));
    }
    out.push(c);

    let mut c = Check::new("omega_right_action");
    for a in 0..n {
        for b in 0..n {
            let hb = h.bar(&e[a]);
            c.case(&[a, b], &right_coinvariant_action(f, phi, &f.omega(&e[a]), &e[b]), &f.omega(&h.mul(&hb, &e[b])));
        }
    }
    out.push(c);

    // coinvariants: φ(ρ) = 1⊗γ⁻¹(ρ)
    let mut rows = Vec::new();
    let mut diff_cols: Vec<Vector> = Vec::new();
    for a in 0..m {
        let rho = f.e(a);
        let mut v = phi.apply(&rho);
        axpy(&mut v, &int(-1), &kron(h.unit(), &f.gamma(&rho, -1)));
        diff_cols.push(v);
    }
    let coinv = linalg::kernel_basis(&Matrix::from_cols(&diff_cols, n * m).expect("columns"));
    for k in 0..n {
        rows.push(f.omega(&e[k]));
    }
    let om_span = span_basis(&rows, m);
    let co_span = span_basis(&coinv, m);
    let mut c = Check::new("omega_image_is_coinvariants");
    c.case(&[], &to_scalars(&om_span), &to_scalars(&co_span));
    out.push(c);

    let mut all = Vec::new();
    for a in 0..n {
        for w in &om_span {
            all.push(f.left_act(&e[a], w));
        }
    }
    let mut c = Check::new("spanned_by_h_omega");
    c.case(&[], &[int(linalg::rank_of(&all, m) as i64)], &[int(m as i64)]);
    out.push(c);

    let mut c1 = Check::new("pl_left_linear");
    let mut c2 = Check::new("pl_reconstructs");
    for a in 0..m {
        let rho = f.e(a);
        let p = pl(&rho);
        for k in 0..n {
            let mut rhs = f.gamma(&p, 1);
            rhs = linalg::scale(&rhs, &h.eps(&e[k]));
            c1.case(&[k, a], &pl(&f.left_act(&e[k], &rho)), &rhs);
        }
        let mut back = zeros(m);
        for (i, g) in phi.terms(&rho) {
            axpy(&mut back, &int(1), &f.left_act(&e[i], &pl(&g)));
        }
        c2.case(&[a], &back, &rho);
    }
    out.push(c1);
    out.push(c2);
    out
}

fn to_scalars(vs: &[Vector]) -> Vec<Scalar> {
    vs.iter().flatten().cloned().collect()
}

/// Every left-covariant FODC invariant: [`check_fodc`], the covariance
/// report, the ω identities and the structure-functional laws in the
/// basis of ω-images.
pub fn verify_fodc(f: &Fodc) -> AxiomReport {
    let mut r = check_fodc(f);
    let (cov, phi) = left_covariance(f);
    r.absorb("left_covariance", cov);
    match phi {
        Some(phi) => {
            for c in check_omega(f, &phi) {
                r.push(c);
            }
            let (_, basis) = f.coinvariant_basis();
            let sf = structure_functionals(f, &phi, &basis);
            for c in check_structure_functionals(&f.h, &sf) {
                r.push(c);
            }
        }
        None => r.push(Check::skipped("omega", "calculus is not left-covariant")),
    }
    let back = recover_ideal(f);
    if !f.ideal.is_empty() || f.dim == universal_dim(&f.h) {
        let mut c = Check::new("recover_ideal_round_trip");
        c.case(&[], &to_scalars(back.basis()), &to_scalars(&span_basis(&f.ideal, f.h.dim())));
        r.push(c);
    }
    r
}

fn universal_dim(h: &HomHopfAlgebra) -> usize {
    h.dim() * kernel_of_counit(h).len()
}

/// Smallest α^{±1}-stable right Hom-ideal containing `seeds`, echelonized.
pub fn generate_right_ideal(h: &HomHopfAlgebra, seeds: &[Vector]) -> Vec<Vector> {
    let n = h.dim();
    let mut vecs = span_basis(seeds, n);
    loop {
        let mut next = vecs.clone();
        for v in &vecs {
            next.push(h.alpha_pow(v, 1));
            next.push(h.alpha_pow(v, -1));
            for g in 0..n {
                next.push(h.mul(v, &h.e(g)));
            }
        }
        let next = span_basis(&next, n);
        if next.len() == vecs.len() {
            return vecs;
        }
        vecs = next;
    }
}

/// Bounded search for proper nonzero right Hom-ideals. Seeds are every
/// combination of the ker ε basis with coefficients in {-1, 0, 1} (when
/// there are at most 3⁶ of them), then `tries` random integer combinations.
/// Results are deduplicated and kept in discovery order.
pub fn search_right_ideals(h: &HomHopfAlgebra, seed: u64, tries: usize) -> Vec<FodcPresentation> {
    let n = h.dim();
    let kernel = kernel_of_counit(h);
    let k = kernel.len();
    let mut seeds: Vec<Vec<i64>> = Vec::new();
    if k <= 6 {
        for code in 1..3usize.pow(k as u32) {
            let mut c = Vec::with_capacity(k);
            let mut x = code;
            for _ in 0..k {
                c.push((x % 3) as i64 - 1);
                x /= 3;
            }
            seeds.push(c);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..tries {
        seeds.push((0..k).map(|_| rng.gen_range(-1..=2)).collect());
    }
    let mut found: Vec<FodcPresentation> = Vec::new();
    for cs in seeds {
        let mut v = zeros(n);
        for (c, kv) in cs.iter().zip(&kernel) {
            axpy(&mut v, &int(*c), kv);
        }
        if is_zero(&v) {
            continue;
        }
        let basis = generate_right_ideal(h, &[v]);
        if !basis.is_empty() && basis.len() < k && !found.iter().any(|p| p.basis == basis) {
            found.push(FodcPresentation { basis });
        }
    }
    found
}

/// Compact text for a vector, used by reports.
pub fn wire(v: &[Scalar]) -> Vec<String> {
    to_wire_vec(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{group_algebra_zn, sweedler_h4};
    use crate::scalar::frac;

    fn kz2() -> HomHopfAlgebra {
        group_algebra_zn(2, 1).unwrap()
    }

    #[test]
    fn universal_dimensions() {
        let u = universal_fodc(&kz2());
        assert_eq!(u.dim(), 2);
        assert_eq!(u.coinvariant_basis().1.len(), 1);
        let h4 = sweedler_h4(&int(-1)).unwrap();
        let u = universal_fodc(&h4);
        assert_eq!(u.dim(), 12);
        assert_eq!(u.coinvariant_basis().1.len(), 3);
    }

    #[test]
    fn kz2_dg_is_g_omega_g() {
        let h = kz2();
        let u = universal_fodc(&h);
        let g = h.e(1);
        assert_eq!(u.d(&g), u.left_act(&g, &u.omega(&g)));
        assert!(is_zero(&u.omega(h.unit())));
        let mut gm1 = g.clone();
        gm1[0] = int(-1);
        assert_eq!(u.omega(&gm1), u.omega(&g));
    }

    #[test]
    fn quotient_examples() {
        let h = kz2();
        let u = universal_fodc(&h);
        let q = quotient_fodc(&h, &FodcPresentation::zero());
        assert_eq!(q.dim(), u.dim());
        let r = FodcPresentation::new(&h, &[vec![int(-1), int(1)]]).unwrap();
        let q = quotient_fodc(&h, &r);
        assert_eq!(q.dim(), 0);
        assert_eq!(recover_ideal(&q), r);
        let h4 = sweedler_h4(&int(-1)).unwrap();
        let q = quotient_fodc(&h4, &FodcPresentation::full(&h4));
        assert_eq!(q.dim(), 0);
        assert!(recover_ideal(&universal_fodc(&h4)).basis().is_empty());
    }

    #[test]
    fn ideal_validation_errors() {
        let h4 = sweedler_h4(&int(-1)).unwrap();
        let e = |i| h4.e(i);
        assert!(matches!(FodcPresentation::new(&h4, &[e(0)]), Err(FodcError::NotInKerEps { index: 0, .. })));
        // x + (1 - g): α maps it to -x + (1 - g)
        let v = vec![int(1), int(-1), int(1), int(0)];
        assert!(matches!(FodcPresentation::new(&h4, &[v]), Err(FodcError::NotAlphaStable { index: 0 })));
        assert!(matches!(FodcPresentation::new(&h4, &[e(2)]), Err(FodcError::NotRightHomIdeal { index: 0, .. })));
    }

    #[test]
    fn structure_functionals_kz2() {
        let h = kz2();
        let u = universal_fodc(&h);
        let (_, phi) = left_covariance(&u);
        let phi = phi.unwrap();
        let (_, basis) = u.coinvariant_basis();
        let sf = structure_functionals(&u, &phi, &basis);
        assert_eq!(sf.f[0][0], vec![int(1), int(-1)]);
        assert_eq!(sf.gamma.get(0, 0), &int(1));
    }

    #[test]
    fn pl_examples() {
        let h = kz2();
        let u = universal_fodc(&h);
        let phi = left_covariance(&u).1.unwrap();
        let g = h.e(1);
        let w = u.omega(&g);
        assert_eq!(pl_project(&u, &phi, &w).unwrap(), w);
        assert_eq!(pl_project(&u, &phi, &u.left_act(&g, &w)).unwrap(), w);
        assert_eq!(pl_project(&u, &phi, &u.d(&g)).unwrap(), w);
    }

    #[test]
    fn universal_calculi_verify() {
        for h in [kz2(), group_algebra_zn(3, 2).unwrap(), sweedler_h4(&frac(-1, 1)).unwrap()] {
            let r = verify_fodc(&universal_fodc(&h));
            assert!(r.passed(), "{}", r.render_text());
            assert!(check_right_covariance(&universal_fodc(&h)).passed());
        }
    }

    #[test]
    fn corrupted_d_fails_kernel_test() {
        let h = sweedler_h4(&int(-1)).unwrap();
        let mut parts = universal_fodc(&h).parts();
        let x = parts.d.get(0, 1).clone() + int(1);
        parts.d.set(0, 1, x);
        let bad = Fodc::from_parts(&h, parts).unwrap();
        let r = check_left_covariance(&bad);
        let c = r.get("kernel_inclusion").unwrap();
        assert!(!c.passed());
        assert!(c.witness.is_some());
    }

    #[test]
    fn search_finds_proper_ideals_in_h4() {
        let h = sweedler_h4(&int(-1)).unwrap();
        let found = search_right_ideals(&h, 1, 30);
        assert!(!found.is_empty());
        for p in &found {
            assert!(FodcPresentation::new(&h, p.basis()).is_ok());
            assert_eq!(&recover_ideal(&quotient_fodc(&h, p)), p);
        }
    }
}
