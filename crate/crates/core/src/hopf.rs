//! Monoidal Hom-Hopf algebras in coordinates: validation, Yau twisting,
//! built-in fixtures and Hom-comodule algebras.
//!
//! Conventions (all checked by [`check_axioms`]):
//! - Hom-associativity `α(a)(bc) = (ab)α(c)`, Hom-unit `1a = α(a) = a1`
//! - Hom-coassociativity `(α⁻¹⊗Δ)Δ = (Δ⊗α⁻¹)Δ`
//! - Hom-counit `ε(h₁)h₂ = α⁻¹(h) = h₁ε(h₂)`
//! - antipode `S(h₁)h₂ = ε(h)1 = h₁S(h₂)`

use num_traits::{One, Zero};

use crate::linalg::{self, axpy, invert, kron, support, unit_vec, zeros, LinalgError, Matrix, Tensor3, Vector};
use crate::report::{AxiomReport, Check, Witness};
use crate::scalar::{int, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("{field} has shape {got}, expected {expected}")]
    Shape { field: &'static str, expected: String, got: String },
    #[error("alpha is singular: {0}")]
    SingularAlpha(LinalgError),
    #[error("antipode is singular: {0}")]
    SingularAntipode(LinalgError),
    #[error("expected a classical Hopf algebra (alpha = id)")]
    NotClassical,
    #[error("input fails axiom `{0}`")]
    AxiomFailure(String),
    #[error("not a Hopf automorphism: `{law}` fails at basis {:?}", witness.at)]
    NotAutomorphism { law: String, witness: Witness },
    #[error("unknown built-in `{0}`")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
}

/// Raw structure data. Every field is public so fixtures can be edited
/// before being validated by [`HomHopfAlgebra::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfData {
    pub name: String,
    pub basis: Vec<String>,
    pub mult: Tensor3,
    pub unit: Vector,
    pub comult: Tensor3,
    pub counit: Vector,
    pub antipode: Matrix,
    pub alpha: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomHopfAlgebra {
    data: HopfData,
    alpha_inv: Matrix,
    antipode_inv: Matrix,
    // Δ(e_k) as (coef, i, j)
    cosupp: Vec<Vec<(Scalar, usize, usize)>>,
}

pub type Sweedler = Vec<(Scalar, usize, usize)>;

impl HomHopfAlgebra {
    /// Checks shapes and invertibility of α and S. The axioms themselves are
    /// checked separately by [`check_axioms`].
    pub fn new(data: HopfData) -> Result<Self, StructError> {
        let n = data.basis.len();
        let shape = |field: &'static str, expected: String, got: String| {
            if expected == got {
                Ok(())
            } else {
                Err(StructError::Shape { field, expected, got })
            }
        };
        shape("mult", format!("{:?}", [n, n, n]), format!("{:?}", data.mult.dims()))?;
        shape("comult", format!("{:?}", [n, n, n]), format!("{:?}", data.comult.dims()))?;
        shape("unit", n.to_string(), data.unit.len().to_string())?;
        shape("counit", n.to_string(), data.counit.len().to_string())?;
        shape("antipode", format!("{n}x{n}"), format!("{}x{}", data.antipode.rows(), data.antipode.cols()))?;
        shape("alpha", format!("{n}x{n}"), format!("{}x{}", data.alpha.rows(), data.alpha.cols()))?;
        let alpha_inv = invert(&data.alpha).map_err(StructError::SingularAlpha)?;
        let antipode_inv = invert(&data.antipode).map_err(StructError::SingularAntipode)?;
        let mut cosupp = vec![Vec::new(); n];
        for ([k, i, j], c) in data.comult.entries() {
            cosupp[k].push((c.clone(), i, j));
        }
        Ok(HomHopfAlgebra { data, alpha_inv, antipode_inv, cosupp })
    }

    pub fn data(&self) -> &HopfData {
        &self.data
    }

    pub fn into_data(self) -> HopfData {
        self.data
    }

    pub fn name(&self) -> &str {
        &self.data.name
    }

    pub fn dim(&self) -> usize {
        self.data.basis.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.data.basis
    }

    pub fn unit(&self) -> &Vector {
        &self.data.unit
    }

    pub fn counit(&self) -> &Vector {
        &self.data.counit
    }

    pub fn alpha(&self) -> &Matrix {
        &self.data.alpha
    }

    pub fn alpha_inv(&self) -> &Matrix {
        &self.alpha_inv
    }

    pub fn antipode(&self) -> &Matrix {
        &self.data.antipode
    }

    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn e(&self, i: usize) -> Vector {
        unit_vec(self.dim(), i)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.data.mult.contract(a, b)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.data.mult.fibre(i, j)
    }

    /// Δ(h) as a vector in H⊗H, index `i * dim + j`.
    pub fn comul(&self, h: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zeros(n * n);
        for (k, x) in support(h) {
            for (c, i, j) in &self.cosupp[k] {
                out[i * n + j] += x * c;
            }
        }
        out
    }

    /// Δ(h) as a list of `(coef, i, j)` with basis indices, merged and in
    /// index order.
    pub fn sweedler(&self, h: &[Scalar]) -> Sweedler {
        let n = self.dim();
        split2(&self.comul(h), n, n)
    }

    pub fn sweedler_basis(&self, k: usize) -> &[(Scalar, usize, usize)] {
        &self.cosupp[k]
    }

    /// (Δ⊗id)Δ(h) as `(coef, h11, h12, h2)`.
    pub fn sweedler3_left(&self, h: &[Scalar]) -> Vec<(Scalar, usize, usize, usize)> {
        let mut out = Vec::new();
        for (c, a, b) in self.sweedler(h) {
            for (c2, a1, a2) in &self.cosupp[a] {
                out.push((&c * c2, *a1, *a2, b));
            }
        }
        out
    }

    /// (id⊗Δ)Δ(h) as `(coef, h1, h21, h22)`.
    pub fn sweedler3_right(&self, h: &[Scalar]) -> Vec<(Scalar, usize, usize, usize)> {
        let mut out = Vec::new();
        for (c, a, b) in self.sweedler(h) {
            for (c2, b1, b2) in &self.cosupp[b] {
                out.push((&c * c2, a, *b1, *b2));
            }
        }
        out
    }

    /// α^p(v) for any integer `p`.
    pub fn alpha_pow(&self, v: &[Scalar], p: i32) -> Vector {
        let m = if p >= 0 { &self.data.alpha } else { &self.alpha_inv };
        let mut v = v.to_vec();
        for _ in 0..p.unsigned_abs() {
            v = m.apply(&v);
        }
        v
    }

    pub fn s(&self, v: &[Scalar]) -> Vector {
        self.data.antipode.apply(v)
    }

    pub fn eps(&self, v: &[Scalar]) -> Scalar {
        linalg::dot(&self.data.counit, v)
    }

    /// h̄ = h − ε(h)1
    pub fn bar(&self, h: &[Scalar]) -> Vector {
        let mut v = h.to_vec();
        axpy(&mut v, &-self.eps(h), &self.data.unit);
        v
    }

    /// Multiplication as a `dim × dim²` matrix on H⊗H.
    pub fn mult_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n * n);
        for ([i, j, k], c) in self.data.mult.entries() {
            m.set(k, i * n + j, c.clone());
        }
        m
    }

    /// (f⊗g)(v) for v in H⊗H.
    pub fn map2(&self, v: &[Scalar], f: &Matrix, g: &Matrix) -> Vector {
        let n = self.dim();
        let mut out = zeros(f.rows() * g.rows());
        for (c, i, j) in split2(v, n, n) {
            axpy(&mut out, &c, &kron(&f.col(i), &g.col(j)));
        }
        out
    }
}

/// Splits a vector of H⊗K (index `i * k + j`) into `(coef, i, j)`.
pub fn split2(v: &[Scalar], _n: usize, k: usize) -> Vec<(Scalar, usize, usize)> {
    support(v).map(|(p, c)| (c.clone(), p / k, p % k)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Level {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

impl std::str::FromStr for Level {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "algebra" => Ok(Level::Algebra),
            "coalgebra" => Ok(Level::Coalgebra),
            "bialgebra" => Ok(Level::Bialgebra),
            "hopf" => Ok(Level::Hopf),
            _ => Err(format!("unknown level `{s}` (algebra|coalgebra|bialgebra|hopf)")),
        }
    }
}

/// Evaluates every axiom of `level` on all basis tuples.
pub fn check_axioms(h: &HomHopfAlgebra, level: Level) -> AxiomReport {
    let mut r = AxiomReport::new(format!("axioms of {} at level {}", h.name(), format!("{level:?}").to_lowercase()));
    let n = h.dim();
    let e: Vec<Vector> = (0..n).map(|i| h.e(i)).collect();
    let al = |v: &[Scalar]| h.alpha().apply(v);
    let ali = |v: &[Scalar]| h.alpha_inv().apply(v);
    let wants_algebra = level != Level::Coalgebra;
    let wants_coalgebra = level != Level::Algebra;

    if wants_algebra {
        let mut c = Check::new("alpha_fixes_unit");
        c.case(&[], &al(h.unit()), h.unit());
        r.push(c);

        let mut c = Check::new("alpha_multiplicative");
        for i in 0..n {
            for j in 0..n {
                c.case(&[i, j], &al(h.mul_basis(i, j)), &h.mul(&al(&e[i]), &al(&e[j])));
            }
        }
        r.push(c);

        let mut c = Check::new("hom_associativity");
        for i in 0..n {
            for j in 0..n {
                let ab = h.mul_basis(i, j).to_vec();
                for k in 0..n {
                    let lhs = h.mul(&al(&e[i]), h.mul_basis(j, k));
                    let rhs = h.mul(&ab, &al(&e[k]));
                    c.case(&[i, j, k], &lhs, &rhs);
                }
            }
        }
        r.push(c);

        let mut c = Check::new("hom_unit");
        for i in 0..n {
            let a = al(&e[i]);
            c.case(&[i], &h.mul(h.unit(), &e[i]), &a);
            c.case(&[i], &h.mul(&e[i], h.unit()), &a);
        }
        r.push(c);
    }

    if wants_coalgebra {
        let mut c = Check::new("alpha_comultiplicative");
        for i in 0..n {
            c.case(&[i], &h.comul(&al(&e[i])), &h.map2(&h.comul(&e[i]), h.alpha(), h.alpha()));
        }
        r.push(c);

        let mut c = Check::new("counit_alpha_invariant");
        for i in 0..n {
            c.case_scalar(&[i], &h.eps(&al(&e[i])), &h.eps(&e[i]));
        }
        r.push(c);

        let mut c = Check::new("hom_coassociativity");
        for i in 0..n {
            let mut lhs = zeros(n * n * n);
            let mut rhs = zeros(n * n * n);
            for (cf, a, b) in h.sweedler(&e[i]) {
                let left = kron(&ali(&e[a]), &h.comul(&e[b]));
                axpy(&mut lhs, &cf, &left);
                let right = kron(&h.comul(&e[a]), &ali(&e[b]));
                axpy(&mut rhs, &cf, &right);
            }
            c.case(&[i], &lhs, &rhs);
        }
        r.push(c);

        let mut c = Check::new("hom_counit");
        for i in 0..n {
            let mut l = zeros(n);
            let mut rr = zeros(n);
            for (cf, a, b) in h.sweedler(&e[i]) {
                axpy(&mut l, &(&cf * &h.data.counit[a]), &e[b]);
                axpy(&mut rr, &(&cf * &h.data.counit[b]), &e[a]);
            }
            let target = ali(&e[i]);
            c.case(&[i], &l, &target);
            c.case(&[i], &rr, &target);
        }
        r.push(c);
    }

    if level >= Level::Bialgebra {
        let mut c = Check::new("comult_multiplicative");
        for i in 0..n {
            for j in 0..n {
                let lhs = h.comul(h.mul_basis(i, j));
                let mut rhs = zeros(n * n);
                for (c1, a1, a2) in h.sweedler(&e[i]) {
                    for (c2, b1, b2) in h.sweedler(&e[j]) {
                        axpy(&mut rhs, &(&c1 * &c2), &kron(h.mul_basis(a1, b1), h.mul_basis(a2, b2)));
                    }
                }
                c.case(&[i, j], &lhs, &rhs);
            }
        }
        r.push(c);

        let mut c = Check::new("comult_unit");
        c.case(&[], &h.comul(h.unit()), &kron(h.unit(), h.unit()));
        r.push(c);

        let mut c = Check::new("counit_multiplicative");
        c.case_scalar(&[], &h.eps(h.unit()), &Scalar::one());
        for i in 0..n {
            for j in 0..n {
                c.case_scalar(&[i, j], &h.eps(h.mul_basis(i, j)), &(&h.data.counit[i] * &h.data.counit[j]));
            }
        }
        r.push(c);
    }

    if level >= Level::Hopf {
        let mut c = Check::new("antipode");
        for i in 0..n {
            let mut l = zeros(n);
            let mut rr = zeros(n);
            for (cf, a, b) in h.sweedler(&e[i]) {
                axpy(&mut l, &cf, &h.mul(&h.s(&e[a]), &e[b]));
                axpy(&mut rr, &cf, &h.mul(&e[a], &h.s(&e[b])));
            }
            let target = linalg::scale(h.unit(), &h.data.counit[i]);
            c.case(&[i], &l, &target);
            c.case(&[i], &rr, &target);
        }
        r.push(c);

        let mut c = Check::new("antipode_commutes_with_alpha");
        for i in 0..n {
            c.case(&[i], &h.s(&al(&e[i])), &al(&h.s(&e[i])));
        }
        r.push(c);
    }
    r
}

fn first_failure(r: &AxiomReport) -> Option<String> {
    r.failures().next().map(|c| c.name.clone())
}

/// Twists a classical Hopf algebra (α = id) by a Hopf automorphism `a`:
/// m_α = a∘m, Δ_α = Δ∘a⁻¹, same unit, counit and antipode, α = a.
pub fn yau_twist(classical: &HomHopfAlgebra, a: &Matrix, name: Option<String>) -> Result<HomHopfAlgebra, StructError> {
    let n = classical.dim();
    if !classical.alpha().is_identity() {
        return Err(StructError::NotClassical);
    }
    if let Some(f) = first_failure(&check_axioms(classical, Level::Hopf)) {
        return Err(StructError::AxiomFailure(f));
    }
    if a.rows() != n || a.cols() != n {
        return Err(StructError::Shape { field: "automorphism", expected: format!("{n}x{n}"), got: format!("{}x{}", a.rows(), a.cols()) });
    }
    let ainv = invert(a).map_err(|_| StructError::NotAutomorphism {
        law: "invertible".into(),
        witness: Witness { at: vec![], lhs: vec![], rhs: vec![] },
    })?;
    automorphism_laws(classical, a)?;

    let d = classical.data();
    let mut mult = Tensor3::zeros(n, n, n);
    for i in 0..n {
        for j in 0..n {
            for (k, x) in a.apply(d.mult.fibre(i, j)).into_iter().enumerate() {
                mult.set(i, j, k, x);
            }
        }
    }
    let mut comult = Tensor3::zeros(n, n, n);
    for k in 0..n {
        for l in 0..n {
            let c = ainv.get(l, k);
            if c.is_zero() {
                continue;
            }
            for (cf, i, j) in classical.sweedler_basis(l) {
                comult.add_to(k, *i, *j, &(c * cf));
            }
        }
    }
    HomHopfAlgebra::new(HopfData {
        name: name.unwrap_or_else(|| format!("twist({})", d.name)),
        basis: d.basis.clone(),
        mult,
        unit: d.unit.clone(),
        comult,
        counit: d.counit.clone(),
        antipode: d.antipode.clone(),
        alpha: a.clone(),
    })
}

fn automorphism_laws(h: &HomHopfAlgebra, a: &Matrix) -> Result<(), StructError> {
    let n = h.dim();
    let fail = |law: &str, at: Vec<usize>, l: &[Scalar], r: &[Scalar]| StructError::NotAutomorphism {
        law: law.into(),
        witness: Witness { at, lhs: crate::scalar::to_wire_vec(l), rhs: crate::scalar::to_wire_vec(r) },
    };
    let au = a.apply(h.unit());
    if &au != h.unit() {
        return Err(fail("fixes unit", vec![], &au, h.unit()));
    }
    for i in 0..n {
        let ei = h.e(i);
        for j in 0..n {
            let l = a.apply(h.mul_basis(i, j));
            let r = h.mul(&a.col(i), &a.col(j));
            if l != r {
                return Err(fail("multiplicative", vec![i, j], &l, &r));
            }
        }
        let l = h.comul(&a.col(i));
        let r = h.map2(&h.comul(&ei), a, a);
        if l != r {
            return Err(fail("comultiplicative", vec![i], &l, &r));
        }
        let (l, r) = (h.eps(&a.col(i)), h.counit()[i].clone());
        if l != r {
            return Err(fail("fixes counit", vec![i], &[l], &[r]));
        }
        let l = h.s(&a.col(i));
        let r = a.apply(&h.s(&ei));
        if l != r {
            return Err(fail("commutes with antipode", vec![i], &l, &r));
        }
    }
    Ok(())
}

/// Classical group algebra kZ_n with basis g^0..g^{n-1}.
pub fn group_algebra_classical(n: usize) -> HopfData {
    let mut mult = Tensor3::zeros(n, n, n);
    let mut comult = Tensor3::zeros(n, n, n);
    let mut antipode = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            mult.set(i, j, (i + j) % n, Scalar::one());
        }
        comult.set(i, i, i, Scalar::one());
        antipode.set((n - i) % n, i, Scalar::one());
    }
    let basis = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    HopfData {
        name: format!("kZ{n}"),
        basis,
        mult,
        unit: unit_vec(n, 0),
        comult,
        counit: vec![Scalar::one(); n],
        antipode,
        alpha: Matrix::identity(n),
    }
}

/// Classical Sweedler algebra with basis 1, g, x, gx.
pub fn sweedler_classical() -> HopfData {
    let mut mult = Tensor3::zeros(4, 4, 4);
    // (i, j) -> (k, sign); x·x, x·gx, gx·x, gx·gx vanish
    let table = [
        ((0, 0), (0, 1)),
        ((0, 1), (1, 1)),
        ((0, 2), (2, 1)),
        ((0, 3), (3, 1)),
        ((1, 0), (1, 1)),
        ((1, 1), (0, 1)),
        ((1, 2), (3, 1)),
        ((1, 3), (2, 1)),
        ((2, 0), (2, 1)),
        ((2, 1), (3, -1)),
        ((3, 0), (3, 1)),
        ((3, 1), (2, -1)),
    ];
    for ((i, j), (k, s)) in table {
        mult.set(i, j, k, int(s));
    }
    let mut comult = Tensor3::zeros(4, 4, 4);
    comult.set(0, 0, 0, int(1));
    comult.set(1, 1, 1, int(1));
    comult.set(2, 2, 0, int(1));
    comult.set(2, 1, 2, int(1));
    comult.set(3, 3, 1, int(1));
    comult.set(3, 0, 3, int(1));
    let mut antipode = Matrix::zeros(4, 4);
    antipode.set(0, 0, int(1));
    antipode.set(1, 1, int(1));
    antipode.set(3, 2, int(-1));
    antipode.set(2, 3, int(1));
    HopfData {
        name: "H4".into(),
        basis: ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect(),
        mult,
        unit: unit_vec(4, 0),
        comult,
        counit: vec![int(1), int(1), int(0), int(0)],
        antipode,
        alpha: Matrix::identity(4),
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Yau twist of kZ_n by g ↦ g^e.
pub fn group_algebra_zn(n: usize, e: usize) -> Result<HomHopfAlgebra, StructError> {
    if n == 0 {
        return Err(StructError::BadParams("n must be positive".into()));
    }
    if gcd(e % n, n) != 1 && n > 1 {
        return Err(StructError::BadParams(format!("gcd({e}, {n}) != 1")));
    }
    let classical = HomHopfAlgebra::new(group_algebra_classical(n))?;
    let mut a = Matrix::zeros(n, n);
    for i in 0..n {
        a.set((i * e) % n, i, Scalar::one());
    }
    yau_twist(&classical, &a, Some(format!("group_algebra_Zn(n={n},e={e})")))
}

/// Yau twist of the Sweedler algebra by x ↦ λx, gx ↦ λgx.
pub fn sweedler_h4(lambda: &Scalar) -> Result<HomHopfAlgebra, StructError> {
    if lambda.is_zero() {
        return Err(StructError::BadParams("lambda must be nonzero".into()));
    }
    let classical = HomHopfAlgebra::new(sweedler_classical())?;
    let mut a = Matrix::identity(4);
    a.set(2, 2, lambda.clone());
    a.set(3, 3, lambda.clone());
    yau_twist(&classical, &a, Some(format!("sweedler_h4(lambda={lambda})")))
}

/// Built-in catalog: `group_algebra_Zn` (params `n`, `e` default 1) and
/// `sweedler_h4` (param `lambda`, default 1).
pub fn builtin(name: &str, params: &[(String, String)]) -> Result<HomHopfAlgebra, StructError> {
    let get = |keys: &[&str]| params.iter().find(|(k, _)| keys.contains(&k.as_str())).map(|(_, v)| v.as_str());
    let known = |allowed: &[&str]| -> Result<(), StructError> {
        for (k, _) in params {
            if !allowed.contains(&k.as_str()) {
                return Err(StructError::BadParams(format!("unknown parameter `{k}` for {name}")));
            }
        }
        Ok(())
    };
    match name {
        "group_algebra_Zn" => {
            known(&["n", "e", "k", "exponent"])?;
            let n: usize = get(&["n"])
                .ok_or_else(|| StructError::BadParams("missing n".into()))?
                .parse()
                .map_err(|_| StructError::BadParams("n must be a positive integer".into()))?;
            let e: usize = get(&["e", "k", "exponent"])
                .unwrap_or("1")
                .parse()
                .map_err(|_| StructError::BadParams("exponent must be a non-negative integer".into()))?;
            group_algebra_zn(n, e)
        }
        "sweedler_h4" => {
            known(&["lambda", "λ"])?;
            let l = crate::scalar::parse(get(&["lambda", "λ"]).unwrap_or("1")).map_err(|e| StructError::BadParams(e.to_string()))?;
            sweedler_h4(&l)
        }
        _ => Err(StructError::UnknownName(name.to_string())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A Hom-algebra carrier (A, α_A) with a Hom-coaction of a Hom-Hopf algebra.
/// A left coaction has coordinates `b * dim_A + a` on B⊗A, a right one
/// `a * dim_B + b` on A⊗B.
#[derive(Debug, Clone)]
pub struct HomComoduleAlgebra {
    pub base: HomHopfAlgebra,
    pub dim: usize,
    pub mult: Tensor3,
    pub unit: Vector,
    pub alpha: Matrix,
    pub coaction: Matrix,
    pub side: Side,
}

impl HomComoduleAlgebra {
    /// H coacting on itself through Δ.
    pub fn regular(h: &HomHopfAlgebra, side: Side) -> Self {
        let n = h.dim();
        let mut coaction = Matrix::zeros(n * n, n);
        for k in 0..n {
            for (c, i, j) in h.sweedler_basis(k) {
                coaction.set(i * n + j, k, c.clone());
            }
        }
        HomComoduleAlgebra {
            base: h.clone(),
            dim: n,
            mult: h.data().mult.clone(),
            unit: h.unit().clone(),
            alpha: h.alpha().clone(),
            coaction,
            side,
        }
    }
}

/// Hom-coaction laws and multiplicativity of the coaction.
pub fn check_comodule_algebra(c: &HomComoduleAlgebra) -> Result<AxiomReport, StructError> {
    let b = &c.base;
    let (nb, na) = (b.dim(), c.dim);
    if c.coaction.rows() != nb * na || c.coaction.cols() != na {
        return Err(StructError::Shape {
            field: "coaction",
            expected: format!("{}x{}", nb * na, na),
            got: format!("{}x{}", c.coaction.rows(), c.coaction.cols()),
        });
    }
    let a_inv = invert(&c.alpha).map_err(StructError::SingularAlpha)?;
    let mut r = AxiomReport::new(format!("comodule algebra over {} ({:?})", b.name(), c.side).to_lowercase());
    let rho = |v: &[Scalar]| c.coaction.apply(v);
    let ea = |i: usize| unit_vec(na, i);
    // (x, y) pairs of a coaction value, x in the first tensor slot
    let (n1, n2) = match c.side {
        Side::Left => (nb, na),
        Side::Right => (na, nb),
    };
    let (m1, m2): (&Matrix, &Matrix) = match c.side {
        Side::Left => (b.alpha(), &c.alpha),
        Side::Right => (&c.alpha, b.alpha()),
    };
    let amul = |x: &[Scalar], y: &[Scalar]| c.mult.contract(x, y);

    let mut chk = Check::new("coaction_natural");
    for i in 0..na {
        let lhs = rho(&c.alpha.apply(&ea(i)));
        let mut rhs = zeros(nb * na);
        for (cf, x, y) in split2(&rho(&ea(i)), n1, n2) {
            axpy(&mut rhs, &cf, &kron(&m1.col(x), &m2.col(y)));
        }
        chk.case(&[i], &lhs, &rhs);
    }
    r.push(chk);

    let mut chk = Check::new("coaction_hom_coassociative");
    for i in 0..na {
        let mut lhs = zeros(nb * nb * na);
        let mut rhs = zeros(nb * nb * na);
        for (cf, x, y) in split2(&rho(&ea(i)), n1, n2) {
            match c.side {
                Side::Left => {
                    // (Δ⊗α⁻¹)ρ = (β⁻¹⊗ρ)ρ
                    axpy(&mut lhs, &cf, &kron(&b.comul(&b.e(x)), &a_inv.col(y)));
                    axpy(&mut rhs, &cf, &kron(&b.alpha_inv().col(x), &rho(&ea(y))));
                }
                Side::Right => {
                    // (ρ⊗β⁻¹)ρ = (α⁻¹⊗Δ)ρ
                    axpy(&mut lhs, &cf, &kron(&rho(&ea(x)), &b.alpha_inv().col(y)));
                    axpy(&mut rhs, &cf, &kron(&a_inv.col(x), &b.comul(&b.e(y))));
                }
            }
        }
        chk.case(&[i], &lhs, &rhs);
    }
    r.push(chk);

    let mut chk = Check::new("coaction_counit");
    for i in 0..na {
        let mut lhs = zeros(na);
        for (cf, x, y) in split2(&rho(&ea(i)), n1, n2) {
            match c.side {
                Side::Left => axpy(&mut lhs, &(&cf * &b.counit()[x]), &ea(y)),
                Side::Right => axpy(&mut lhs, &(&cf * &b.counit()[y]), &ea(x)),
            }
        }
        chk.case(&[i], &lhs, &a_inv.col(i));
    }
    r.push(chk);

    let mut chk = Check::new("coaction_unital");
    let one = match c.side {
        Side::Left => kron(b.unit(), &c.unit),
        Side::Right => kron(&c.unit, b.unit()),
    };
    chk.case(&[], &rho(&c.unit), &one);
    r.push(chk);

    let mut chk = Check::new("coaction_multiplicative");
    for i in 0..na {
        for j in 0..na {
            let lhs = rho(&amul(&ea(i), &ea(j)));
            let mut rhs = zeros(nb * na);
            for (c1, x1, y1) in split2(&rho(&ea(i)), n1, n2) {
                for (c2, x2, y2) in split2(&rho(&ea(j)), n1, n2) {
                    let t = match c.side {
                        Side::Left => kron(b.mul_basis(x1, x2), &amul(&ea(y1), &ea(y2))),
                        Side::Right => kron(&amul(&ea(x1), &ea(x2)), b.mul_basis(y1, y2)),
                    };
                    axpy(&mut rhs, &(&c1 * &c2), &t);
                }
            }
            chk.case(&[i, j], &lhs, &rhs);
        }
    }
    r.push(chk);
    Ok(r)
}

/// Hom-coaction laws for a linear map ρ from (V, ν) to H⊗V (left, index
/// `h * dim V + v`) or V⊗H (right, index `v * dim H + h`): naturality
/// ρ∘ν = (α⊗ν)∘ρ, Hom-coassociativity and the counit law, on every basis
/// vector of V.
pub fn coaction_laws(h: &HomHopfAlgebra, side: Side, nu: &Matrix, rho: &dyn Fn(&[Scalar]) -> Vector) -> Vec<Check> {
    let (nh, nv) = (h.dim(), nu.rows());
    let nu_inv = invert(nu).expect("carrier automorphism is invertible");
    let ev = |i: usize| unit_vec(nv, i);
    let (n1, n2) = match side {
        Side::Left => (nh, nv),
        Side::Right => (nv, nh),
    };
    let mut nat = Check::new("natural");
    let mut coass = Check::new("hom_coassociative");
    let mut counit = Check::new("counit");
    for i in 0..nv {
        let image = rho(&ev(i));
        let pieces = split2(&image, n1, n2);
        let mut lhs = zeros(nh * nv);
        for (c, x, y) in &pieces {
            let t = match side {
                Side::Left => kron(&h.alpha().col(*x), &nu.col(*y)),
                Side::Right => kron(&nu.col(*x), &h.alpha().col(*y)),
            };
            axpy(&mut lhs, c, &t);
        }
        nat.case(&[i], &rho(&nu.col(i)), &lhs);

        let mut l = zeros(nh * nh * nv);
        let mut r = zeros(nh * nh * nv);
        let mut cu = zeros(nv);
        for (c, x, y) in &pieces {
            match side {
                Side::Left => {
                    axpy(&mut l, c, &kron(&h.comul(&h.e(*x)), &nu_inv.col(*y)));
                    axpy(&mut r, c, &kron(&h.alpha_inv().col(*x), &rho(&ev(*y))));
                    axpy(&mut cu, &(c * &h.counit()[*x]), &ev(*y));
                }
                Side::Right => {
                    axpy(&mut l, c, &kron(&nu_inv.col(*x), &h.comul(&h.e(*y))));
                    axpy(&mut r, c, &kron(&rho(&ev(*x)), &h.alpha_inv().col(*y)));
                    axpy(&mut cu, &(c * &h.counit()[*y]), &ev(*x));
                }
            }
        }
        coass.case(&[i], &l, &r);
        counit.case(&[i], &cu, &nu_inv.col(i));
    }
    vec![nat, coass, counit]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    fn hopf_ok(h: &HomHopfAlgebra) -> bool {
        check_axioms(h, Level::Hopf).passed()
    }

    #[test]
    fn kz2_classical_passes() {
        let h = group_algebra_zn(2, 1).unwrap();
        assert!(h.alpha().is_identity());
        assert_eq!(h.dim(), 2);
        assert!(hopf_ok(&h));
    }

    #[test]
    fn kz3_twist_product() {
        let h = group_algebra_zn(3, 2).unwrap();
        assert!(hopf_ok(&h));
        // g·g = α(g²) = g⁴ = g
        assert_eq!(h.mul(&h.e(1), &h.e(1)), h.e(1));
        assert_eq!(h.alpha().apply(&h.e(1)), h.e(2));
    }

    #[test]
    fn sweedler_twist_product() {
        let h = sweedler_h4(&int(-1)).unwrap();
        assert!(hopf_ok(&h));
        // x·g = α(xg) = α(−gx) = gx
        assert_eq!(h.mul(&h.e(2), &h.e(1)), h.e(3));
        assert_eq!(h.alpha().apply(&h.e(2)), linalg::scale(&h.e(2), &int(-1)));
    }

    #[test]
    fn classical_sweedler_relation() {
        let h = HomHopfAlgebra::new(sweedler_classical()).unwrap();
        let xg = h.mul(&h.e(2), &h.e(1));
        assert_eq!(xg, linalg::scale(&h.e(3), &int(-1)));
        assert_eq!(crate::linalg::contract(&h.data().mult, &h.e(2), &h.e(1)).unwrap(), xg);
    }

    #[test]
    fn identity_twist_is_identity() {
        let c = HomHopfAlgebra::new(sweedler_classical()).unwrap();
        let t = yau_twist(&c, &Matrix::identity(4), Some("H4".into())).unwrap();
        assert_eq!(t.data(), c.data());
    }

    #[test]
    fn corrupted_antipode_fails_at_x() {
        let mut d = sweedler_classical();
        d.antipode.set(3, 2, int(1));
        let h = HomHopfAlgebra::new(d).unwrap();
        let r = check_axioms(&h, Level::Hopf);
        let c = r.get("antipode").unwrap();
        assert!(!c.passed());
        assert_eq!(c.witness.as_ref().unwrap().at, vec![2]);
    }

    #[test]
    fn non_automorphism_rejected() {
        let c = HomHopfAlgebra::new(group_algebra_classical(3)).unwrap();
        let mut a = Matrix::identity(3);
        a.set(1, 1, int(2));
        assert!(matches!(yau_twist(&c, &a, None), Err(StructError::NotAutomorphism { .. })));
    }

    #[test]
    fn builtin_params() {
        let p = |k: &str, v: &str| vec![(k.to_string(), v.to_string())];
        assert_eq!(builtin("group_algebra_Zn", &p("n", "2")).unwrap().dim(), 2);
        assert!(matches!(
            builtin("group_algebra_Zn", &[("n".into(), "4".into()), ("e".into(), "2".into())]),
            Err(StructError::BadParams(_))
        ));
        assert!(matches!(builtin("sweedler_h4", &p("lambda", "0")), Err(StructError::BadParams(_))));
        assert!(matches!(builtin("sl2", &[]), Err(StructError::UnknownName(_))));
        assert!(hopf_ok(&builtin("sweedler_h4", &p("lambda", "2/3")).unwrap()));
        let _ = frac(1, 2);
    }

    #[test]
    fn regular_comodule_algebras() {
        for h in [group_algebra_zn(2, 1).unwrap(), sweedler_h4(&int(-1)).unwrap(), group_algebra_zn(5, 2).unwrap()] {
            for side in [Side::Left, Side::Right] {
                let r = check_comodule_algebra(&HomComoduleAlgebra::regular(&h, side)).unwrap();
                assert!(r.passed(), "{}", r.render_text());
            }
        }
    }

    #[test]
    fn zeroed_coaction_row_fails() {
        let h = sweedler_h4(&int(-1)).unwrap();
        let mut c = HomComoduleAlgebra::regular(&h, Side::Left);
        for j in 0..4 {
            c.coaction.set(0, j, int(0));
        }
        let r = check_comodule_algebra(&c).unwrap();
        assert!(!r.passed());
        assert!(r.failures().all(|c| c.witness.is_some()));
    }
}
