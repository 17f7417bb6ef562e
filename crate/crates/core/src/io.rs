//! JSON structure-constant files. Scalars are strings `"p/q"` (or `"p"`),
//! tensors are sparse lists, omitted entries are zero.
//!
//! ```json
//! {"name": "kZ2", "dim": 2, "basis": ["1", "g"], "field": "Q",
//!  "mult": [[0,0,0,"1"], [0,1,1,"1"], [1,0,1,"1"], [1,1,0,"1"]],
//!  "unit": ["1","0"],
//!  "comult": [[0,0,0,"1"], [1,1,1,"1"]],
//!  "counit": ["1","1"],
//!  "antipode": [["1","0"],["0","1"]],
//!  "alpha": [["1","0"],["0","1"]]}
//! ```
//!
//! `mult` entries are `[i, j, k, c]` for e_i e_j ∋ c e_k and `comult`
//! entries `[k, i, j, c]` for Δ(e_k) ∋ c e_i⊗e_j. Matrices act on column
//! vectors: `alpha[i][j]` is the e_i-coordinate of α(e_j).

use serde::{Deserialize, Serialize};

use crate::hopf::{HomHopfAlgebra, HopfData, StructError};
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::scalar::{self, to_wire, to_wire_vec, Scalar};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad scalar {value:?} in {field}")]
    Scalar { field: String, value: String },
    #[error("unsupported field {0:?} (only \"Q\")")]
    Field(String),
    #[error("{field}: {detail}")]
    Invalid { field: String, detail: String },
}

type Entry = (usize, usize, usize, String);

/// The on-disk form of a Hom-Hopf algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpecFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default = "rational_field")]
    pub field: String,
    pub mult: Vec<Entry>,
    pub unit: Vec<String>,
    pub comult: Vec<Entry>,
    pub counit: Vec<String>,
    pub antipode: Vec<Vec<String>>,
    pub alpha: Vec<Vec<String>>,
}

fn rational_field() -> String {
    "Q".to_string()
}

fn invalid(field: &str, detail: impl Into<String>) -> IoError {
    IoError::Invalid { field: field.to_string(), detail: detail.into() }
}

fn parse_scalar(field: &str, s: &str) -> Result<Scalar, IoError> {
    scalar::parse(s).map_err(|_| IoError::Scalar { field: field.to_string(), value: s.to_string() })
}

fn parse_vec(field: &str, v: &[String], n: usize) -> Result<Vector, IoError> {
    if v.len() != n {
        return Err(invalid(field, format!("length {}, expected {n}", v.len())));
    }
    v.iter().map(|s| parse_scalar(field, s)).collect()
}

pub fn parse_matrix(field: &str, rows: &[Vec<String>], n: usize) -> Result<Matrix, IoError> {
    if rows.len() != n {
        return Err(invalid(field, format!("{} rows, expected {n}", rows.len())));
    }
    let rows = rows.iter().map(|r| parse_vec(field, r, n)).collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(rows, n).map_err(|e| invalid(field, e.to_string()))
}

fn parse_tensor(field: &str, entries: &[Entry], n: usize) -> Result<Tensor3, IoError> {
    let mut t = Tensor3::zeros(n, n, n);
    let mut seen = std::collections::BTreeSet::new();
    for (a, b, c, s) in entries {
        if *a >= n || *b >= n || *c >= n {
            return Err(invalid(field, format!("index [{a},{b},{c}] out of range for dim {n}")));
        }
        if !seen.insert((*a, *b, *c)) {
            return Err(invalid(field, format!("duplicate entry [{a},{b},{c}]")));
        }
        t.set(*a, *b, *c, parse_scalar(field, s)?);
    }
    Ok(t)
}

fn emit_tensor(t: &Tensor3) -> Vec<Entry> {
    t.entries().map(|([a, b, c], x)| (a, b, c, to_wire(x))).collect()
}

fn emit_matrix(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| to_wire_vec(r)).collect()
}

impl AlgebraSpecFile {
    pub fn from_json(s: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(s)?)
    }

    /// Pretty JSON with a trailing newline; entries in lexicographic order.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    /// Structure data, checked for shapes, index ranges and scalar syntax
    /// but not for invertibility or axioms.
    pub fn to_data(&self) -> Result<HopfData, IoError> {
        if self.field != "Q" {
            return Err(IoError::Field(self.field.clone()));
        }
        let n = self.dim;
        if n == 0 {
            return Err(invalid("dim", "must be positive"));
        }
        if self.basis.len() != n {
            return Err(invalid("basis", format!("{} labels, expected {n}", self.basis.len())));
        }
        Ok(HopfData {
            name: self.name.clone(),
            basis: self.basis.clone(),
            mult: parse_tensor("mult", &self.mult, n)?,
            unit: parse_vec("unit", &self.unit, n)?,
            comult: parse_tensor("comult", &self.comult, n)?,
            counit: parse_vec("counit", &self.counit, n)?,
            antipode: parse_matrix("antipode", &self.antipode, n)?,
            alpha: parse_matrix("alpha", &self.alpha, n)?,
        })
    }

    pub fn from_data(d: &HopfData) -> Self {
        AlgebraSpecFile {
            name: d.name.clone(),
            dim: d.basis.len(),
            basis: d.basis.clone(),
            field: rational_field(),
            mult: emit_tensor(&d.mult),
            unit: to_wire_vec(&d.unit),
            comult: emit_tensor(&d.comult),
            counit: to_wire_vec(&d.counit),
            antipode: emit_matrix(&d.antipode),
            alpha: emit_matrix(&d.alpha),
        }
    }

    pub fn to_algebra(&self) -> Result<Result<HomHopfAlgebra, StructError>, IoError> {
        Ok(HomHopfAlgebra::new(self.to_data()?))
    }
}

pub fn read_file(path: &str) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::Read { path: path.to_string(), source })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum VectorList {
    Bare(Vec<Vec<String>>),
    Ideal { ideal: Vec<Vec<String>> },
    Basis { basis: Vec<Vec<String>> },
}

/// An ideal basis file: a list of coordinate vectors, bare or under the key
/// `ideal` or `basis`.
pub fn parse_vectors(s: &str, n: usize) -> Result<Vec<Vector>, IoError> {
    let list: VectorList = serde_json::from_str(s)?;
    let rows = match list {
        VectorList::Bare(r) | VectorList::Ideal { ideal: r } | VectorList::Basis { basis: r } => r,
    };
    rows.iter().map(|r| parse_vec("ideal", r, n)).collect()
}

pub fn emit_vectors(vs: &[Vector]) -> String {
    let rows: Vec<Vec<String>> = vs.iter().map(|v| to_wire_vec(v)).collect();
    let mut s = serde_json::to_string_pretty(&serde_json::json!({ "ideal": rows })).expect("serializable");
    s.push('\n');
    s
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixDoc {
    Bare(Vec<Vec<String>>),
    Alpha { alpha: Vec<Vec<String>> },
}

/// A square matrix file: rows of scalars, bare or under the key `alpha`.
pub fn parse_matrix_file(s: &str, n: usize) -> Result<Matrix, IoError> {
    let rows = match serde_json::from_str::<MatrixDoc>(s)? {
        MatrixDoc::Bare(r) | MatrixDoc::Alpha { alpha: r } => r,
    };
    parse_matrix("alpha", &rows, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{group_algebra_zn, sweedler_h4};
    use crate::scalar::int;

    #[test]
    fn builtins_round_trip() {
        for h in [group_algebra_zn(3, 2).unwrap(), sweedler_h4(&int(-1)).unwrap()] {
            let f = AlgebraSpecFile::from_data(h.data());
            let back = AlgebraSpecFile::from_json(&f.to_json()).unwrap();
            assert_eq!(back, f);
            assert_eq!(&back.to_data().unwrap(), h.data());
        }
    }

    #[test]
    fn module_doc_example_parses() {
        let s = r#"{"name": "kZ2", "dim": 2, "basis": ["1", "g"], "field": "Q",
            "mult": [[0,0,0,"1"], [0,1,1,"1"], [1,0,1,"1"], [1,1,0,"1"]],
            "unit": ["1","0"], "comult": [[0,0,0,"1"], [1,1,1,"1"]],
            "counit": ["1","1"], "antipode": [["1","0"],["0","1"]],
            "alpha": [["1","0"],["0","1"]]}"#;
        let h = AlgebraSpecFile::from_json(s).unwrap().to_algebra().unwrap().unwrap();
        assert_eq!(h.data().mult, group_algebra_zn(2, 1).unwrap().data().mult);
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        let h = group_algebra_zn(2, 1).unwrap();
        let good = AlgebraSpecFile::from_data(h.data());
        let mut f = good.clone();
        f.mult.push((0, 0, 2, "1".into()));
        assert!(matches!(f.to_data(), Err(IoError::Invalid { .. })));
        let mut f = good.clone();
        f.unit[0] = "1/0".into();
        assert!(matches!(f.to_data(), Err(IoError::Scalar { .. })));
        let mut f = good.clone();
        f.field = "F2".into();
        assert!(matches!(f.to_data(), Err(IoError::Field(_))));
        let mut f = good;
        f.mult.push(f.mult[0].clone());
        assert!(matches!(f.to_data(), Err(IoError::Invalid { .. })));
        assert!(AlgebraSpecFile::from_json("{").is_err());
    }

    #[test]
    fn vector_files() {
        let vs = vec![vec![int(1), int(-1)]];
        assert_eq!(parse_vectors(&emit_vectors(&vs), 2).unwrap(), vs);
        assert_eq!(parse_vectors(r#"[["1","-1"]]"#, 2).unwrap(), vs);
        assert!(parse_vectors(r#"[["1"]]"#, 2).is_err());
        let m = parse_matrix_file(r#"{"alpha": [["0","1"],["1","0"]]}"#, 2).unwrap();
        assert_eq!(m.get(0, 1), &int(1));
    }
}
