//! The graded universal differential calculus Ω(A) = ⊕ A⊗Ā^{⊗n}.
//!
//! An element of degree n is a combination of words `a₀⊗ā₁⊗…⊗āₙ`
//! (left-nested, i.e. the monomial `a₀(da₁(⋯(daₙ₋₁daₙ)⋯))`). A word is stored
//! as its key `[i₀, j₁, …, jₙ]`: `i₀` indexes the basis of A and each `j`
//! indexes the basis of Ā, which is the basis of A without the first
//! coordinate where the unit is nonzero.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hopf::HomHopfAlgebra;
use crate::linalg::{self, axpy, support, unit_vec, zeros, Vector};
use crate::report::{AxiomReport, Check};
use crate::scalar::{int, Scalar};

pub const DEFAULT_MAX_DEGREE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GradedError {
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

pub type Key = Vec<u8>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement {
    degree: usize,
    terms: BTreeMap<Key, Scalar>,
}

impl GradedElement {
    pub fn zero(degree: usize) -> Self {
        GradedElement { degree, terms: BTreeMap::new() }
    }

    pub fn basis(key: Key) -> Self {
        let mut terms = BTreeMap::new();
        let degree = key.len() - 1;
        terms.insert(key, Scalar::from_integer(1.into()));
        GradedElement { degree, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[u8]) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, key: Key, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &Scalar, other: &GradedElement) {
        if other.is_zero() {
            return;
        }
        debug_assert_eq!(self.degree, other.degree);
        for (k, x) in &other.terms {
            self.add_term(k.clone(), c * x);
        }
    }

    pub fn plus(mut self, other: &GradedElement) -> Self {
        self.axpy(&int(1), other);
        self
    }

    pub fn minus(mut self, other: &GradedElement) -> Self {
        self.axpy(&int(-1), other);
        self
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut out = GradedElement::zero(self.degree);
        out.axpy(c, self);
        out
    }
}

/// Ω(A) over the algebra part of a Hom-Hopf algebra, up to a degree cap.
#[derive(Debug, Clone)]
pub struct GradedCalculus {
    h: HomHopfAlgebra,
    pivot: usize,
    comp: Vec<usize>,
    cap: usize,
}

impl GradedCalculus {
    pub fn new(h: &HomHopfAlgebra, cap: usize) -> Self {
        let pivot = h.unit().iter().position(|x| !x.is_zero()).expect("unit is nonzero");
        let comp = (0..h.dim()).filter(|&i| i != pivot).collect();
        GradedCalculus { h: h.clone(), pivot, comp, cap }
    }

    pub fn algebra(&self) -> &HomHopfAlgebra {
        &self.h
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Dimension of Ω^n.
    pub fn dim(&self, n: usize) -> usize {
        self.h.dim() * self.comp.len().pow(n as u32)
    }

    fn check_cap(&self, degree: usize) -> Result<(), GradedError> {
        if degree > self.cap {
            Err(GradedError::DegreeCapExceeded { degree, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// Coordinates of ā in the Ā basis.
    pub fn project(&self, v: &[Scalar]) -> Vector {
        let u = self.h.unit();
        let c = &v[self.pivot] / &u[self.pivot];
        self.comp.iter().map(|&i| &v[i] - &c * &u[i]).collect()
    }

    fn lift(&self, j: u8) -> Vector {
        unit_vec(self.h.dim(), self.comp[j as usize])
    }

    /// The word a₀⊗ā₁⊗…⊗āₙ expanded in the basis.
    pub fn word(&self, a0: &[Scalar], rest: &[Vector]) -> GradedElement {
        let mut acc: Vec<(Key, Scalar)> = support(a0).map(|(i, c)| (vec![i as u8], c.clone())).collect();
        for a in rest {
            let pa = self.project(a);
            let mut next = Vec::new();
            for (k, c) in &acc {
                for (j, x) in support(&pa) {
                    let mut k2 = k.clone();
                    k2.push(j as u8);
                    next.push((k2, c * x));
                }
            }
            acc = next;
        }
        let mut out = GradedElement::zero(rest.len());
        for (k, c) in acc {
            out.add_term(k, c);
        }
        out
    }

    pub fn scalar_word(&self, a: &[Scalar]) -> GradedElement {
        self.word(a, &[])
    }

    fn unpack(&self, key: &[u8]) -> (Vector, Vec<Vector>) {
        (self.h.e(key[0] as usize), key[1..].iter().map(|&j| self.lift(j)).collect())
    }

    /// All basis keys of Ω^n in index order.
    pub fn basis_keys(&self, n: usize) -> Vec<Key> {
        let mut keys: Vec<Key> = (0..self.h.dim()).map(|i| vec![i as u8]).collect();
        for _ in 0..n {
            let mut next = Vec::new();
            for k in &keys {
                for j in 0..self.comp.len() {
                    let mut k2 = k.clone();
                    k2.push(j as u8);
                    next.push(k2);
                }
            }
            keys = next;
        }
        keys
    }

    fn lin(&self, w: &GradedElement, degree: usize, f: impl Fn(&[u8]) -> GradedElement) -> GradedElement {
        let mut out = GradedElement::zero(degree);
        for (k, c) in &w.terms {
            out.axpy(c, &f(k));
        }
        out
    }

    fn al(&self, v: &[Scalar], p: i32) -> Vector {
        self.h.alpha_pow(v, p)
    }

    fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.h.mul(a, b)
    }

    /// da = 1⊗\overline{α⁻¹(a)}
    pub fn d0(&self, a: &[Scalar]) -> GradedElement {
        self.word(self.h.unit(), &[self.al(a, -1)])
    }

    fn d_unchecked(&self, w: &GradedElement) -> GradedElement {
        self.lin(w, w.degree + 1, |k| {
            let (a0, rest) = self.unpack(k);
            let mut slots = vec![self.al(&a0, -1)];
            slots.extend(rest.iter().map(|a| self.al(a, -1)));
            self.word(self.h.unit(), &slots)
        })
    }

    /// d(a₀⊗ā₁⊗…⊗āₙ) = 1⊗\overline{α⁻¹a₀}⊗…⊗\overline{α⁻¹aₙ}
    pub fn d(&self, w: &GradedElement) -> Result<GradedElement, GradedError> {
        self.check_cap(w.degree + 1)?;
        Ok(self.d_unchecked(w))
    }

    /// The graded automorphism α⊗ᾱ⊗…⊗ᾱ raised to the power `p`.
    pub fn gamma(&self, w: &GradedElement, p: i32) -> GradedElement {
        self.lin(w, w.degree, |k| {
            let (a0, rest) = self.unpack(k);
            let slots: Vec<Vector> = rest.iter().map(|a| self.al(a, p)).collect();
            self.word(&self.al(&a0, p), &slots)
        })
    }

    /// b·w; in degree ≥ 1 this is (α⁻¹(b)a₀)⊗\overline{α(a₁)}⊗…
    pub fn left_mult(&self, b: &[Scalar], w: &GradedElement) -> GradedElement {
        self.lin(w, w.degree, |k| {
            let (a0, rest) = self.unpack(k);
            if rest.is_empty() {
                return self.word(&self.mul(b, &a0), &[]);
            }
            let slots: Vec<Vector> = rest.iter().map(|a| self.al(a, 1)).collect();
            self.word(&self.mul(&self.al(b, -1), &a0), &slots)
        })
    }

    /// w·b by the closed formulas: explicit ones in degrees ≤ 3 and the
    /// general one for degree ≥ 4.
    pub fn right_mult(&self, w: &GradedElement, b: &[Scalar]) -> GradedElement {
        self.lin(w, w.degree, |k| self.right_word(k, b))
    }

    fn right_word(&self, k: &[u8], b: &[Scalar]) -> GradedElement {
        let (a0, r) = self.unpack(k);
        let n = r.len();
        let mut a = vec![a0];
        a.extend(r);
        let al = |v: &[Scalar], p: i32| self.al(v, p);
        let mul = |x: &[Scalar], y: &[Scalar]| self.mul(x, y);
        match n {
            0 => self.word(&mul(&a[0], b), &[]),
            1 => self.word(&al(&a[0], 1), &[mul(&a[1], &al(b, -1))]).minus(&self.word(&mul(&a[0], &a[1]), &[b.to_vec()])),
            2 => self
                .word(&al(&a[0], 1), &[al(&a[1], 1), mul(&a[2], &al(b, -2))])
                .minus(&self.word(&al(&a[0], 1), &[mul(&a[1], &a[2]), al(b, -1)]))
                .plus(&self.word(&mul(&a[0], &al(&a[1], 1)), &[al(&a[2], 1), al(b, -1)])),
            3 => {
                let x0 = al(&a[0], 1);
                self.word(&x0, &[al(&a[1], 1), al(&a[2], 1), mul(&a[3], &al(b, -3))])
                    .minus(&self.word(&x0, &[al(&a[1], 1), mul(&a[2], &a[3]), al(b, -2)]))
                    .plus(&self.word(&x0, &[mul(&a[1], &al(&a[2], 1)), al(&a[3], 1), al(b, -2)]))
                    .minus(&self.word(&mul(&a[0], &al(&a[1], 1)), &[al(&a[2], 2), al(&a[3], 1), al(b, -2)]))
            }
            _ => {
                let x0 = al(&a[0], 1);
                let tail_b = al(b, -(n as i32 - 1));
                let sign = |e: usize| if e.is_multiple_of(2) { int(1) } else { int(-1) };
                let mut out = GradedElement::zero(n);

                let mut s: Vec<Vector> = (2..n).map(|t| al(&a[t], 2)).collect();
                s.push(al(&a[n], 1));
                s.push(tail_b.clone());
                out.axpy(&sign(n), &self.word(&mul(&a[0], &al(&a[1], 1)), &s));

                for i in 1..=n - 3 {
                    let mut s: Vec<Vector> = (1..i).map(|t| al(&a[t], 1)).collect();
                    s.push(mul(&a[i], &al(&a[i + 1], 1)));
                    s.extend((i + 2..n).map(|t| al(&a[t], 2)));
                    s.push(al(&a[n], 1));
                    s.push(tail_b.clone());
                    out.axpy(&sign(n - i), &self.word(&x0, &s));
                }

                let mut s: Vec<Vector> = (1..n - 2).map(|t| al(&a[t], 1)).collect();
                s.push(mul(&a[n - 2], &al(&a[n - 1], 1)));
                s.push(al(&a[n], 1));
                s.push(tail_b.clone());
                out.axpy(&int(1), &self.word(&x0, &s));

                let mut s: Vec<Vector> = (1..n - 1).map(|t| al(&a[t], 1)).collect();
                s.push(mul(&a[n - 1], &a[n]));
                s.push(tail_b);
                out.axpy(&int(-1), &self.word(&x0, &s));

                let mut s: Vec<Vector> = (1..n).map(|t| al(&a[t], 1)).collect();
                s.push(mul(&a[n], &al(b, -(n as i32))));
                out.axpy(&int(1), &self.word(&x0, &s));
                out
            }
        }
    }

    /// (x₀⊗x̄₁)⊗_A w for w = a₂⊗R: α(x₀)⊗\overline{α⁻¹(x₁a₂)}⊗R − x₀x₁⊗ā₂⊗R.
    fn balance(&self, x0: &[Scalar], x1: &[Scalar], w: &GradedElement) -> GradedElement {
        let mut out = GradedElement::zero(w.degree + 1);
        for (k, c) in &w.terms {
            let (a2, rest) = self.unpack(k);
            let mut s = vec![self.al(&self.mul(x1, &a2), -1)];
            s.extend(rest.iter().cloned());
            out.axpy(c, &self.word(&self.al(x0, 1), &s));
            let mut s = vec![a2];
            s.extend(rest);
            out.axpy(&-c.clone(), &self.word(&self.mul(x0, x1), &s));
        }
        out
    }

    /// w·b computed by peeling the first factor and using the closed formula
    /// one degree lower: (a₀⊗ā₁⊗R)·b = (a₀, α(a₁)) balanced against
    /// (1⊗R)·α⁻¹(b).
    pub fn right_mult_inductive(&self, w: &GradedElement, b: &[Scalar]) -> GradedElement {
        self.lin(w, w.degree, |k| {
            if k.len() <= 2 {
                return self.right_word(k, b);
            }
            let (a0, r) = self.unpack(k);
            let rest = self.word(self.h.unit(), &r[1..]);
            let t = self.right_mult(&rest, &self.al(b, -1));
            self.balance(&a0, &self.al(&r[0], 1), &t)
        })
    }

    fn product_unchecked(&self, w1: &GradedElement, w2: &GradedElement) -> GradedElement {
        let n = w1.degree;
        let mut out = GradedElement::zero(n + w2.degree);
        for (k2, c2) in &w2.terms {
            let (b0, s) = self.unpack(k2);
            if s.is_empty() {
                out.axpy(c2, &self.right_mult(w1, &b0));
                continue;
            }
            let tail: Vec<Vector> = s.iter().map(|y| self.al(y, 1 - n as i32)).collect();
            let inner = self.right_mult(&self.gamma(w1, -1), &b0);
            for (k, c) in &inner.terms {
                let (x0, xs) = self.unpack(k);
                let piece = if n == 0 {
                    self.word(&x0, &tail)
                } else {
                    let mut slots: Vec<Vector> = xs[..n - 1].iter().map(|y| self.al(y, 1)).collect();
                    slots.push(xs[n - 1].clone());
                    slots.extend(tail.iter().cloned());
                    self.word(&self.al(&x0, 1), &slots)
                };
                out.axpy(&(c * c2), &piece);
            }
        }
        out
    }

    /// Graded product. The right factor's leading coefficient acts on the
    /// left factor through the right action; the remaining factors are
    /// re-associated with the Hom-associator.
    pub fn product(&self, w1: &GradedElement, w2: &GradedElement) -> Result<GradedElement, GradedError> {
        self.check_cap(w1.degree + w2.degree)?;
        Ok(self.product_unchecked(w1, w2))
    }

    /// A random combination of `terms` basis words of degree `n` with small
    /// integer coefficients.
    pub fn random_element(&self, n: usize, terms: usize, rng: &mut impl Rng) -> GradedElement {
        let mut w = GradedElement::zero(n);
        for _ in 0..terms {
            let mut k = vec![rng.gen_range(0..self.h.dim()) as u8];
            for _ in 0..n {
                k.push(rng.gen_range(0..self.comp.len()) as u8);
            }
            w.add_term(k, int(rng.gen_range(-3..=3)));
        }
        w
    }
}

/// Ω¹(A) = ker m: the span of {a·db} in A⊗A against the kernel of the
/// multiplication map.
pub fn kernel_of_multiplication(h: &HomHopfAlgebra) -> Check {
    let n = h.dim();
    let mut span = Vec::new();
    for i in 0..n {
        for j in 0..n {
            // a·db with a·(x⊗y) = α⁻¹(a)x⊗α(y) and db = 1⊗α⁻¹b − α⁻¹b⊗1
            let (a, b) = (h.e(i), h.e(j));
            let ai = h.alpha_pow(&a, -1);
            let bi = h.alpha_pow(&b, -1);
            let mut v = linalg::kron(&h.mul(&ai, h.unit()), &h.alpha_pow(&bi, 1));
            axpy(&mut v, &int(-1), &linalg::kron(&h.mul(&ai, &bi), &h.alpha_pow(h.unit(), 1)));
            span.push(v);
        }
    }
    let ker = linalg::kernel_basis(&h.mult_matrix());
    let mut c = Check::new("kernel_of_multiplication");
    let a = linalg::span_basis(&span, n * n);
    let b = linalg::span_basis(&ker, n * n);
    c.case(&[], &[int(a.len() as i64)], &[int(b.len() as i64)]);
    let mut joint = a.clone();
    joint.extend(b.iter().cloned());
    c.case(&[], &[int(linalg::rank_of(&joint, n * n) as i64)], &[int(a.len() as i64)]);
    c
}

/// Random degree-4 samples for the closed-form right action.
pub const RANDOM_SAMPLES: usize = 24;

/// Degree cap for the `dc` command: `HOMCALC_MAX_DEGREE` or 4.
pub fn default_max_degree() -> usize {
    std::env::var("HOMCALC_MAX_DEGREE").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_MAX_DEGREE)
}

/// Every graded-calculus identity up to the cap: d² = 0, graded Leibniz,
/// the derivative of monomials, the Hom-unit law, module laws, d∘γ = γ∘d,
/// Ω¹ = ker m, and the closed right action against the inductive one.
pub fn verify(h: &HomHopfAlgebra, cap: usize, seed: u64) -> AxiomReport {
    let dc = GradedCalculus::new(h, cap);
    let mut r = AxiomReport::new(format!("graded calculus of {} up to degree {cap}", h.name()));
    let n = h.dim();
    let e: Vec<Vector> = (0..n).map(|i| h.e(i)).collect();
    let idx = |k: &[u8]| k.iter().map(|&x| x as usize).collect::<Vec<_>>();
    let coords = |w: &GradedElement| -> Vec<Scalar> {
        let mut v: Vec<Scalar> = Vec::new();
        for (k, c) in &w.terms {
            v.extend(k.iter().map(|&x| int(x as i64)));
            v.push(c.clone());
        }
        v
    };

    let mut c = Check::new("d_squared_zero");
    for deg in 0..=cap.saturating_sub(2) {
        for k in dc.basis_keys(deg) {
            let w = GradedElement::basis(k.clone());
            let dd = dc.d_unchecked(&dc.d_unchecked(&w));
            c.case(&idx(&k), &coords(&dd), &[]);
        }
    }
    r.push(c);

    let mut c = Check::new("d_commutes_with_gamma");
    for deg in 0..cap {
        for k in dc.basis_keys(deg) {
            let w = GradedElement::basis(k.clone());
            c.case(&idx(&k), &coords(&dc.d_unchecked(&dc.gamma(&w, 1))), &coords(&dc.gamma(&dc.d_unchecked(&w), 1)));
        }
    }
    r.push(c);

    let mut c = Check::new("graded_leibniz");
    for p in 0..cap {
        for q in 0..cap - p {
            for k1 in dc.basis_keys(p) {
                let w1 = GradedElement::basis(k1.clone());
                let dw1 = dc.d_unchecked(&w1);
                for k2 in dc.basis_keys(q) {
                    let w2 = GradedElement::basis(k2.clone());
                    let lhs = dc.d_unchecked(&dc.product_unchecked(&w1, &w2));
                    let sign = if p % 2 == 0 { int(1) } else { int(-1) };
                    let mut rhs = dc.product_unchecked(&dw1, &w2);
                    rhs.axpy(&sign, &dc.product_unchecked(&w1, &dc.d_unchecked(&w2)));
                    let mut at = idx(&k1);
                    at.extend(idx(&k2));
                    c.case(&at, &coords(&lhs), &coords(&rhs));
                }
            }
        }
    }
    r.push(c);

    let mut c = Check::new("derivative_of_monomials");
    for deg in 1..cap {
        for k in dc.basis_keys(deg) {
            let (a0, rest) = dc.unpack(&k);
            let w = GradedElement::basis(k.clone());
            // d(a₀(da₁(⋯))) = da₀(da₁(⋯)) and a₀(da₁(⋯)) equals the word
            let ds: Vec<GradedElement> = rest.iter().map(|a| dc.d0(a)).collect();
            let mut nested = ds.last().unwrap().clone();
            for x in ds[..ds.len() - 1].iter().rev() {
                nested = dc.product_unchecked(x, &nested);
            }
            let lhs_word = dc.product_unchecked(&dc.scalar_word(&a0), &nested);
            c.case(&idx(&k), &coords(&lhs_word), &coords(&w));
            let d_nested = dc.product_unchecked(&dc.d0(&a0), &nested);
            c.case(&idx(&k), &coords(&dc.d_unchecked(&w)), &coords(&d_nested));
        }
    }
    r.push(c);

    let one = dc.scalar_word(h.unit());
    let mut c = Check::new("hom_unit");
    for deg in 0..=cap {
        for k in dc.basis_keys(deg) {
            let w = GradedElement::basis(k.clone());
            let g = coords(&dc.gamma(&w, 1));
            c.case(&idx(&k), &coords(&dc.product_unchecked(&w, &one)), &g);
            c.case(&idx(&k), &coords(&dc.product_unchecked(&one, &w)), &g);
            c.case(&idx(&k), &coords(&dc.right_mult(&w, h.unit())), &g);
        }
    }
    r.push(c);

    let top = cap.min(3);
    let mut lm = Check::new("left_module_law");
    let mut rm = Check::new("right_module_law");
    let mut bm = Check::new("bimodule_compatibility");
    for deg in 0..=top {
        for k in dc.basis_keys(deg) {
            let w = GradedElement::basis(k.clone());
            let gw = dc.gamma(&w, 1);
            for i in 0..n {
                for j in 0..n {
                    let mut at = idx(&k);
                    at.extend([i, j]);
                    let ai = dc.al(&e[i], 1);
                    let aj = dc.al(&e[j], 1);
                    let ab = h.mul(&e[i], &e[j]);
                    lm.case(&at, &coords(&dc.left_mult(&ai, &dc.left_mult(&e[j], &w))), &coords(&dc.left_mult(&ab, &gw)));
                    rm.case(&at, &coords(&dc.right_mult(&dc.right_mult(&w, &e[i]), &aj)), &coords(&dc.right_mult(&gw, &ab)));
                    bm.case(
                        &at,
                        &coords(&dc.left_mult(&ai, &dc.right_mult(&w, &e[j]))),
                        &coords(&dc.right_mult(&dc.left_mult(&e[i], &w), &aj)),
                    );
                }
            }
        }
    }
    r.push(lm);
    r.push(rm);
    r.push(bm);

    let mut c = Check::new("right_action_closed_vs_inductive");
    for deg in 2..=cap.min(4) {
        for k in dc.basis_keys(deg) {
            let w = GradedElement::basis(k.clone());
            for (i, b) in e.iter().enumerate() {
                let mut at = idx(&k);
                at.push(i);
                c.case(&at, &coords(&dc.right_mult(&w, b)), &coords(&dc.right_mult_inductive(&w, b)));
            }
        }
    }
    r.push(c);
    if cap >= 4 {
        let mut c = Check::new("right_action_random").with_note(format!("{RANDOM_SAMPLES} random degree-4 elements, seed {seed}"));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for s in 0..RANDOM_SAMPLES {
            let w = dc.random_element(4, 6, &mut rng);
            let b: Vector = (0..n).map(|_| int(rng.gen_range(-2..=2))).collect();
            c.case(&[s], &coords(&dc.right_mult(&w, &b)), &coords(&dc.right_mult_inductive(&w, &b)));
        }
        r.push(c);
    }

    r.push(kernel_of_multiplication(h));
    r
}

/// Dense coordinates of an element over the basis of Ω^n in key order.
pub fn dense(dc: &GradedCalculus, w: &GradedElement) -> Vector {
    let keys = dc.basis_keys(w.degree);
    let mut v = zeros(keys.len());
    for (i, k) in keys.iter().enumerate() {
        v[i] = w.coeff(k);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{group_algebra_zn, sweedler_h4};

    fn kz2() -> GradedCalculus {
        GradedCalculus::new(&group_algebra_zn(2, 1).unwrap(), 4)
    }

    #[test]
    fn d0_examples() {
        let dc = kz2();
        let h = dc.algebra().clone();
        assert!(dc.d0(h.unit()).is_zero());
        assert_eq!(dc.d0(&h.e(1)), GradedElement::basis(vec![0, 0]));
        let t = GradedCalculus::new(&group_algebra_zn(3, 2).unwrap(), 4);
        // α⁻¹(g) = g², whose bar is the second Ā basis vector
        assert_eq!(t.d0(&t.algebra().e(1)), GradedElement::basis(vec![0, 1]));
    }

    #[test]
    fn d_examples() {
        let dc = kz2();
        let h = dc.algebra().clone();
        let a = dc.scalar_word(&h.e(1));
        assert_eq!(dc.d(&a).unwrap(), dc.d0(&h.e(1)));
        assert!(dc.d(&dc.d0(&h.e(1))).unwrap().is_zero());
        // d(g⊗ḡ) = 1⊗ḡ⊗ḡ
        assert_eq!(dc.d(&GradedElement::basis(vec![1, 0])).unwrap(), GradedElement::basis(vec![0, 0, 0]));
        assert!(matches!(dc.d(&GradedElement::basis(vec![0, 0, 0, 0, 0])), Err(GradedError::DegreeCapExceeded { .. })));
    }

    #[test]
    fn left_examples() {
        let dc = kz2();
        let h = dc.algebra().clone();
        let w = GradedElement::basis(vec![0, 0]);
        assert_eq!(dc.left_mult(&h.e(1), &w), GradedElement::basis(vec![1, 0]));
        assert_eq!(dc.left_mult(h.unit(), &w), dc.gamma(&w, 1));
        let t = GradedCalculus::new(&group_algebra_zn(3, 2).unwrap(), 4);
        // g·(1⊗ḡ) = α⁻¹(g)·1⊗\overline{α(g)} = g⊗\overline{g²}
        assert_eq!(t.left_mult(&t.algebra().e(1), &GradedElement::basis(vec![0, 0])), GradedElement::basis(vec![1, 1]));
    }

    #[test]
    fn right_examples() {
        let dc = kz2();
        let h = dc.algebra().clone();
        // (1·dg)·g = −g⊗ḡ
        let got = dc.right_mult(&GradedElement::basis(vec![0, 0]), &h.e(1));
        assert_eq!(got, GradedElement::basis(vec![1, 0]).scaled(&int(-1)));
        let a = dc.scalar_word(&h.e(1));
        assert_eq!(dc.right_mult(&a, &h.e(1)), dc.scalar_word(&h.e(0)));
    }

    #[test]
    fn product_examples() {
        let dc = kz2();
        let h = dc.algebra().clone();
        let dg = GradedElement::basis(vec![0, 0]);
        assert_eq!(dc.product(&dg, &dg).unwrap(), GradedElement::basis(vec![0, 0, 0]));
        assert_eq!(dc.product(&dg, &dc.scalar_word(h.unit())).unwrap(), dc.gamma(&dg, 1));
        assert_eq!(dc.product(&dc.scalar_word(&h.e(1)), &dc.scalar_word(&h.e(1))).unwrap(), dc.scalar_word(&h.e(0)));
    }

    #[test]
    fn closed_right_action_matches_induction_in_degree_four() {
        let h = sweedler_h4(&int(-1)).unwrap();
        let dc = GradedCalculus::new(&h, 4);
        for k in dc.basis_keys(4).into_iter().step_by(7) {
            let w = GradedElement::basis(k);
            for i in 0..4 {
                assert_eq!(dc.right_mult(&w, &h.e(i)), dc.right_mult_inductive(&w, &h.e(i)));
            }
        }
    }

    #[test]
    fn kz3_twist_small_cap_verifies() {
        let r = verify(&group_algebra_zn(3, 2).unwrap(), 3, 7);
        assert!(r.passed(), "{}", r.render_text());
    }
}
