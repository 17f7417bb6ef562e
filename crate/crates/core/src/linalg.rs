//! Dense exact linear and multilinear algebra.

use num_traits::{One, Zero};

use crate::scalar::Scalar;

pub type Vector = Vec<Scalar>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: expected {expected}, got {got}")]
    DimensionMismatch { op: &'static str, expected: usize, got: usize },
    #[error("matrix is singular (rank {rank} < {dim})")]
    SingularMatrix { rank: usize, dim: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

fn check(op: &'static str, expected: usize, got: usize) -> Result<(), LinalgError> {
    if expected == got {
        Ok(())
    } else {
        Err(LinalgError::DimensionMismatch { op, expected, got })
    }
}

pub fn zeros(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

/// The `i`-th standard basis vector of length `n`.
pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

pub fn add(u: &[Scalar], v: &[Scalar]) -> Vector {
    debug_assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[Scalar], v: &[Scalar]) -> Vector {
    debug_assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn scale(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|a| a * c).collect()
}

pub fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    debug_assert_eq!(u.len(), v.len());
    let mut s = Scalar::zero();
    for (a, b) in u.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            s += a * b;
        }
    }
    s
}

/// Tensor product of coordinate vectors, index `i * v.len() + j`.
pub fn kron(u: &[Scalar], v: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for a in u {
        for b in v {
            out.push(a * b);
        }
    }
    out
}

/// Nonzero entries as `(index, coefficient)`.
pub fn support(v: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>, cols: usize) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            check("from_rows", cols, r.len())?;
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Builds the matrix whose columns are `cols`, each of length `nrows`.
    pub fn from_cols(cols: &[Vector], nrows: usize) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            check("from_cols", nrows, c.len())?;
            for (i, x) in c.iter().enumerate() {
                m.data[i * cols.len() + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn try_apply(&self, v: &[Scalar]) -> Result<Vector, LinalgError> {
        check("matrix-vector", self.cols, v.len())?;
        Ok(self.apply(v))
    }

    /// Matrix-vector product. Panics on a length mismatch; use `try_apply`
    /// for unchecked input.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let mut out = zeros(self.rows);
        for (j, x) in support(v) {
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        check("matrix-matrix", self.cols, other.rows)?;
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).expect("matrix-matrix dimension mismatch")
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix { rows: self.rows, cols: self.cols, data: sub(&self.data, &other.data) }
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.rows)
    }

    pub fn determinant(&self) -> Result<Scalar, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a.get(r, c).is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != c {
                a.swap_rows(p, c);
                det = -det;
            }
            let pv = a.get(c, c).clone();
            det *= &pv;
            for r in c + 1..n {
                let f = a.get(r, c) / &pv;
                if !f.is_zero() {
                    a.row_axpy(r, c, &-f);
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// row[dst] += f * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, f: &Scalar) {
        for j in 0..self.cols {
            let s = self.data[src * self.cols + j].clone();
            if !s.is_zero() {
                self.data[dst * self.cols + j] += f * s;
            }
        }
    }

    fn scale_row(&mut self, r: usize, f: &Scalar) {
        for j in 0..self.cols {
            let x = &mut self.data[r * self.cols + j];
            if !x.is_zero() {
                *x *= f;
            }
        }
    }
}

/// Reduced row echelon form, pivots searched in the first `limit` columns.
fn rref_limited(m: &Matrix, limit: usize) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..limit {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a.get(r, c).recip();
        a.scale_row(r, &inv);
        for i in 0..a.rows {
            if i != r && !a.get(i, c).is_zero() {
                let f = -a.get(i, c).clone();
                a.row_axpy(i, r, &f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Reduced row echelon form and pivot columns (in column order).
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    rref_limited(m, m.cols)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Rank of a family of vectors of common length `n`.
pub fn rank_of(vecs: &[Vector], n: usize) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    rank(&Matrix::from_rows(vecs.to_vec(), n).expect("ragged vectors"))
}

/// Echelonized basis of the span of `vecs`: the nonzero rows of the rref.
pub fn span_basis(vecs: &[Vector], n: usize) -> Vec<Vector> {
    if vecs.is_empty() {
        return Vec::new();
    }
    let (r, piv) = rref(&Matrix::from_rows(vecs.to_vec(), n).expect("ragged vectors"));
    (0..piv.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Exact null-space basis of `m`, echelonized (pivot order = column order).
/// Empty iff `m` is injective.
pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    let (r, piv) = rref(m);
    let n = m.cols;
    let mut raw = Vec::new();
    for f in (0..n).filter(|c| !piv.contains(c)) {
        let mut v = zeros(n);
        v[f] = Scalar::one();
        for (i, &p) in piv.iter().enumerate() {
            v[p] = -r.get(i, f).clone();
        }
        raw.push(v);
    }
    span_basis(&raw, n)
}

pub fn invert(m: &Matrix) -> Result<Matrix, LinalgError> {
    if m.rows != m.cols {
        return Err(LinalgError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut aug = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n + i, Scalar::one());
    }
    let (r, piv) = rref_limited(&aug, n);
    if piv.len() < n {
        return Err(LinalgError::SingularMatrix { rank: piv.len(), dim: n });
    }
    let mut inv = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, r.get(i, n + j).clone());
        }
    }
    Ok(inv)
}

/// `w[k] = sum_{i,j} t[i][j][k] u[i] v[j]`
pub fn contract(t: &Tensor3, u: &[Scalar], v: &[Scalar]) -> Result<Vector, LinalgError> {
    check("contract (first slot)", t.dims[0], u.len())?;
    check("contract (second slot)", t.dims[1], v.len())?;
    Ok(t.contract(u, v))
}

/// Rank-3 array `c[i][j][k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    dims: [usize; 3],
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(a: usize, b: usize, c: usize) -> Self {
        Tensor3 { dims: [a, b, c], data: vec![Scalar::zero(); a * b * c] }
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, x: Scalar) {
        let p = self.idx(i, j, k);
        self.data[p] = x;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, x: &Scalar) {
        let p = self.idx(i, j, k);
        self.data[p] += x;
    }

    /// The fibre `t[i][j][..]`.
    pub fn fibre(&self, i: usize, j: usize) -> &[Scalar] {
        let p = self.idx(i, j, 0);
        &self.data[p..p + self.dims[2]]
    }

    pub fn contract(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut w = zeros(self.dims[2]);
        for (i, a) in support(u) {
            for (j, b) in support(v) {
                let c = a * b;
                axpy(&mut w, &c, self.fibre(i, j));
            }
        }
        w
    }

    /// Nonzero entries in index order.
    pub fn entries(&self) -> impl Iterator<Item = ([usize; 3], &Scalar)> {
        let [_, b, c] = self.dims;
        self.data.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(move |(p, x)| ([p / (b * c), (p / c) % b, p % c], x))
    }
}

/// Solves `sum_j x_j cols[j] = v` for many right-hand sides against a fixed
/// column family. The returned solution sets free variables to zero.
#[derive(Debug, Clone)]
pub struct ColumnSolver {
    nrows: usize,
    ncols: usize,
    transform: Matrix,
    pivots: Vec<usize>,
}

impl ColumnSolver {
    pub fn new(cols: &[Vector], nrows: usize) -> Self {
        let ncols = cols.len();
        let mut aug = Matrix::zeros(nrows, ncols + nrows);
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), nrows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                aug.set(i, j, x.clone());
            }
        }
        for i in 0..nrows {
            aug.set(i, ncols + i, Scalar::one());
        }
        let (r, pivots) = rref_limited(&aug, ncols);
        let mut transform = Matrix::zeros(nrows, nrows);
        for i in 0..nrows {
            for j in 0..nrows {
                transform.set(i, j, r.get(i, ncols + j).clone());
            }
        }
        ColumnSolver { nrows, ncols, transform, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn solve(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.nrows, "right-hand side length mismatch");
        let y = self.transform.apply(v);
        if !is_zero(&y[self.pivots.len()..]) {
            return None;
        }
        let mut x = zeros(self.ncols);
        for (i, &p) in self.pivots.iter().enumerate() {
            x[p] = y[i].clone();
        }
        Some(x)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.solve(v).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn m(rows: &[&[i64]]) -> Matrix {
        let c = rows[0].len();
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(), c).unwrap()
    }

    #[test]
    fn kernel_of_rank_one_symmetric() {
        assert_eq!(kernel_basis(&m(&[&[1, 1], &[1, 1]])), vec![vec![int(1), int(-1)]]);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(kernel_basis(&Matrix::identity(3)).is_empty());
    }

    #[test]
    fn kernel_of_kz2_multiplication() {
        // columns indexed by (i,j) -> i*2+j, rows by output basis
        let mult = m(&[&[1, 0, 0, 1], &[0, 1, 1, 0]]);
        let k = kernel_basis(&mult);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero(&mult.apply(v)));
        }
    }

    #[test]
    fn invert_examples() {
        assert_eq!(invert(&Matrix::identity(3)).unwrap(), Matrix::identity(3));
        let sw = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(invert(&sw).unwrap(), sw);
        let d = m(&[&[1, 0], &[0, -1]]);
        assert_eq!(invert(&d).unwrap(), d);
        assert!(matches!(invert(&m(&[&[1, 2], &[2, 4]])), Err(LinalgError::SingularMatrix { .. })));
        let a = m(&[&[2, 1], &[7, 4]]);
        assert!(invert(&a).unwrap().mul(&a).is_identity());
    }

    #[test]
    fn contract_checks_dimensions() {
        let t = Tensor3::zeros(2, 2, 2);
        assert!(contract(&t, &zeros(3), &zeros(2)).is_err());
        assert_eq!(contract(&t, &zeros(2), &zeros(2)).unwrap(), zeros(2));
    }

    #[test]
    fn solver_matches_columns() {
        let cols = vec![vec![int(1), int(0), int(1)], vec![int(0), int(1), int(1)], vec![int(1), int(1), int(2)]];
        let s = ColumnSolver::new(&cols, 3);
        assert_eq!(s.rank(), 2);
        let v = vec![frac(1, 2), int(3), frac(7, 2)];
        let x = s.solve(&v).unwrap();
        let mut back = zeros(3);
        for (c, col) in x.iter().zip(&cols) {
            axpy(&mut back, c, col);
        }
        assert_eq!(back, v);
        assert!(s.solve(&[int(1), int(0), int(0)]).is_none());
    }

    #[test]
    fn determinant_sign() {
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant().unwrap(), int(-1));
        assert_eq!(m(&[&[2, 1], &[7, 4]]).determinant().unwrap(), int(1));
    }
}
