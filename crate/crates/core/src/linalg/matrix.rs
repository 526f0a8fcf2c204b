//! Dense row-major matrices over [`Scalar`].
//!
//! Elimination routines skip zero entries of the pivot row, so the many
//! sparse constraint systems built elsewhere in the crate cost roughly in
//! proportion to their nonzeros even though storage is dense.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::{self, Scalar, ScalarRepr};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn scalar_identity(n: usize, c: &Scalar) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    /// Builds from rows of small integers; intended for literals in tests and
    /// built-in tables.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix literal");
            data.extend(row.iter().map(|&v| scalar::int(v)));
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Self> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Shape(format!("row of length {} in a matrix with {cols} columns", row.len())));
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols, data })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let cols = columns.len();
        let mut m = Matrix::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.data[i * cols + j] = v.clone();
            }
        }
        m
    }

    pub fn column_vector(v: Vec<Scalar>) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Scalar> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn nonzeros(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
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

    pub fn scale(&self, c: &Scalar) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * c).collect() }
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn try_add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_shape(rhs)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_shape(rhs)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        })
    }

    /// `self += c * rhs`.
    pub fn add_scaled(&mut self, c: &Scalar, rhs: &Matrix) {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in add_scaled");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    fn same_shape(&self, rhs: &Matrix) -> Result<()> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Kronecker product; row `(ia, ib)` maps to `ia * b.rows + ib`.
    pub fn kron(&self, b: &Matrix) -> Matrix {
        let rows = self.rows * b.rows;
        let cols = self.cols * b.cols;
        let mut out = Matrix::zeros(rows, cols);
        for ia in 0..self.rows {
            for ja in 0..self.cols {
                let a = self.get(ia, ja);
                if a.is_zero() {
                    continue;
                }
                for ib in 0..b.rows {
                    for jb in 0..b.cols {
                        let v = b.get(ib, jb);
                        if !v.is_zero() {
                            out.data[(ia * b.rows + ib) * cols + ja * b.cols + jb] = a * v;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(parts: &[&Matrix]) -> Result<Matrix> {
        let rows = parts.first().map_or(0, |m| m.rows);
        if parts.iter().any(|m| m.rows != rows) {
            return Err(Error::DimensionMismatch("hstack with unequal row counts".into()));
        }
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut offset = 0;
        for m in parts {
            out.set_block(0, offset, m);
            offset += m.cols;
        }
        Ok(out)
    }

    pub fn vstack(parts: &[&Matrix]) -> Result<Matrix> {
        let cols = parts.first().map_or(0, |m| m.cols);
        if parts.iter().any(|m| m.cols != cols) {
            return Err(Error::DimensionMismatch("vstack with unequal column counts".into()));
        }
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            data.extend(m.data.iter().cloned());
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn block_diag(parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r, mut c) = (0, 0);
        for m in parts {
            out.set_block(r, c, m);
            r += m.rows;
            c += m.cols;
        }
        out
    }

    pub fn set_block(&mut self, row: usize, col: usize, block: &Matrix) {
        assert!(row + block.rows <= self.rows && col + block.cols <= self.cols, "block out of range");
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.data[(row + i) * self.cols + col + j] = block.get(i, j).clone();
            }
        }
    }

    pub fn block(&self, row: usize, col: usize, rows: usize, cols: usize) -> Matrix {
        assert!(row + rows <= self.rows && col + cols <= self.cols, "block out of range");
        let mut out = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.data[i * cols + j] = self.get(row + i, col + j).clone();
            }
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                out.data[i * idx.len() + k] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend(self.row(i).iter().cloned());
        }
        Matrix { rows: idx.len(), cols: self.cols, data }
    }

    /// In-place Gaussian elimination. With `full`, produces the reduced row
    /// echelon form; otherwise only clears below each pivot. Returns the
    /// pivot columns and the number of row swaps performed.
    fn eliminate(&mut self, full: bool) -> (Vec<usize>, usize) {
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut prow = 0;
        for col in 0..cols {
            if prow == self.rows {
                break;
            }
            let Some(found) = (prow..self.rows).find(|&r| !self.data[r * cols + col].is_zero()) else {
                continue;
            };
            if found != prow {
                for k in 0..cols {
                    self.data.swap(found * cols + k, prow * cols + k);
                }
                swaps += 1;
            }
            if full {
                let inv = Scalar::one() / &self.data[prow * cols + col];
                for k in col..cols {
                    let v = &mut self.data[prow * cols + k];
                    if !v.is_zero() {
                        *v *= &inv;
                    }
                }
            }
            let support: Vec<usize> = (col..cols).filter(|&k| !self.data[prow * cols + k].is_zero()).collect();
            let pivot_row: Vec<Scalar> = support.iter().map(|&k| self.data[prow * cols + k].clone()).collect();
            let start = if full { 0 } else { prow + 1 };
            for r in start..self.rows {
                if r == prow {
                    continue;
                }
                let lead = &self.data[r * cols + col];
                if lead.is_zero() {
                    continue;
                }
                let factor = if full { lead.clone() } else { lead / &pivot_row[0] };
                for (&k, pv) in support.iter().zip(&pivot_row) {
                    let delta = &factor * pv;
                    self.data[r * cols + k] -= delta;
                }
            }
            pivots.push(col);
            prow += 1;
        }
        (pivots, swaps)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let (pivots, _) = m.eliminate(true);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Eliminate along the shorter side.
        let mut m = if self.rows < self.cols { self.transpose() } else { self.clone() };
        m.eliminate(false).0.len()
    }

    /// Basis of `{v : self * v = 0}` as the columns of a `cols x (cols - rank)`
    /// matrix. Basis vector `k` has a 1 in the k-th free column and zeros in
    /// all other free columns.
    pub fn nullspace(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, Scalar::one());
            for (i, &p) in pivots.iter().enumerate() {
                let v = r.get(i, f);
                if !v.is_zero() {
                    out.set(p, k, -v.clone());
                }
            }
        }
        out
    }

    /// Some `x` with `self * x = b`, or `None` if the system is inconsistent.
    /// Free variables of the reduced row echelon form are set to zero.
    pub fn solve_affine(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for a matrix with {} rows",
                b.len(),
                self.rows
            )));
        }
        let rhs = Matrix::column_vector(b.to_vec());
        Ok(self.solve_many(&rhs)?.map(|x| x.into_data()))
    }

    /// Solves `self * X = B` column by column with one elimination, using the
    /// same free-variable convention as [`Matrix::solve_affine`].
    pub fn solve_many(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if b.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side with {} rows for a matrix with {} rows",
                b.rows, self.rows
            )));
        }
        let aug = Matrix::hstack(&[self, b])?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.get(i, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve_many(&Matrix::identity(self.rows)).ok()??;
        if self.rank() == self.rows {
            Some(x)
        } else {
            None
        }
    }

    /// Left inverse of a matrix with full column rank.
    pub fn left_inverse(&self) -> Option<Matrix> {
        let t = self.transpose();
        let gram = &t * self;
        Some(&gram.inverse()? * &t)
    }

    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let mut m = self.clone();
        let (pivots, swaps) = m.eliminate(false);
        if pivots.len() < self.rows {
            return Ok(Scalar::zero());
        }
        let mut d: Scalar = (0..self.rows).map(|i| m.get(i, i).clone()).product();
        if swaps % 2 == 1 {
            d = -d;
        }
        Ok(d)
    }

    /// Smallest set of standard basis vectors extending the column space of
    /// `self` to the whole space, by greedy rank increase in index order.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        let n = self.rows;
        let mut current = self.clone();
        let mut rank = current.rank();
        let mut chosen = Vec::new();
        for i in 0..n {
            if rank == n {
                break;
            }
            let mut e = Matrix::zeros(n, 1);
            e.set(i, 0, Scalar::one());
            let trial = Matrix::hstack(&[&current, &e]).expect("same row count");
            let r = trial.rank();
            if r > rank {
                current = trial;
                rank = r;
                chosen.push(i);
            }
        }
        chosen
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix sum shape mismatch")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix difference shape mismatch")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| -v).collect() }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[{}x{}]", self.rows, self.cols);
        }
        let cells: Vec<String> = self.data.iter().map(|v| v.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

// Serialized as nested arrays of "p/q" strings. A sparse form
// `{"rows", "cols", "entries": [[i, j, value], ...]}` is accepted on input.
impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        if self.rows == 0 || self.cols == 0 {
            let sparse = SparseOut { rows: self.rows, cols: self.cols, entries: Vec::new() };
            return sparse.serialize(ser);
        }
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(|v| v.to_string()).collect()).collect();
        rows.serialize(ser)
    }
}

#[derive(Serialize)]
struct SparseOut {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, String)>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixRepr {
    Dense(Vec<Vec<ScalarRepr>>),
    Sparse { rows: usize, cols: usize, entries: Vec<(usize, usize, ScalarRepr)> },
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Matrix, D::Error> {
        use serde::de::Error as _;
        match MatrixRepr::deserialize(de)? {
            MatrixRepr::Dense(rows) => {
                let cols = rows.first().map_or(0, Vec::len);
                let parsed: Result<Vec<Vec<Scalar>>> =
                    rows.into_iter().map(|r| r.into_iter().map(ScalarRepr::into_scalar).collect()).collect();
                let parsed = parsed.map_err(D::Error::custom)?;
                Matrix::from_rows(parsed, cols).map_err(D::Error::custom)
            }
            MatrixRepr::Sparse { rows, cols, entries } => {
                let mut m = Matrix::zeros(rows, cols);
                for (i, j, v) in entries {
                    if i >= rows || j >= cols {
                        return Err(D::Error::custom(format!("sparse entry ({i},{j}) outside {rows}x{cols}")));
                    }
                    m.set(i, j, v.into_scalar().map_err(D::Error::custom)?);
                }
                Ok(m)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(2).rank(), 2);
        assert_eq!(Matrix::zeros(3, 2).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn nullspace_examples() {
        let n = Matrix::identity(2).nullspace();
        assert_eq!(n.shape(), (2, 0));

        let n = m(&[&[1, 1]]).nullspace();
        assert_eq!(n.shape(), (2, 1));
        assert_eq!(n.column(0), vec![int(-1), int(1)]);

        // Elimination by hand: rref = [[1,2],[0,0]], free column 1, so the
        // kernel is spanned by (-2, 1), a multiple of (2, -1).
        let n = m(&[&[1, 2], &[2, 4]]).nullspace();
        assert_eq!(n.column(0), vec![int(-2), int(1)]);
    }

    #[test]
    fn solve_affine_examples() {
        let b = vec![int(4), int(-1)];
        assert_eq!(Matrix::identity(2).solve_affine(&b).unwrap(), Some(b.clone()));
        assert_eq!(Matrix::zeros(2, 2).solve_affine(&b).unwrap(), None);
        assert_eq!(m(&[&[1, 1]]).solve_affine(&[int(3)]).unwrap(), Some(vec![int(3), int(0)]));
        assert!(matches!(m(&[&[1, 1]]).solve_affine(&b), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn kron_examples() {
        assert_eq!(Matrix::identity(2).kron(&Matrix::identity(3)), Matrix::identity(6));
        assert!(m(&[&[1, 2], &[3, 4]]).kron(&Matrix::zeros(1, 1)).is_zero());
        assert_eq!(m(&[&[2]]).kron(&m(&[&[0, 1], &[1, 0]])), m(&[&[0, 2], &[2, 0]]));
    }

    #[test]
    fn inverse_and_det() {
        let a = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.det().unwrap(), int(1));
        assert_eq!(&a * &a.inverse().unwrap(), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), int(-1));
    }

    #[test]
    fn serde_dense_and_sparse() {
        let a = Matrix::new(2, 2, vec![scalar::frac(1, 2), int(0), int(-3), int(1)]).unwrap();
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, r#"[["1/2","0"],["-3","1"]]"#);
        let back: Matrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, a);
        let sparse: Matrix = serde_json::from_str(r#"{"rows":2,"cols":2,"entries":[[0,0,"1/2"],[1,0,-3],[1,1,1]]}"#).unwrap();
        assert_eq!(sparse, a);
        let empty: Matrix = serde_json::from_str(&serde_json::to_string(&Matrix::zeros(0, 3)).unwrap()).unwrap();
        assert_eq!(empty.shape(), (0, 3));
    }

    fn small_matrix(max_dim: usize) -> impl Strategy<Value = Matrix> {
        (0..=max_dim, 0..=max_dim).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c)
                .prop_map(move |v| Matrix::new(r, c, v.into_iter().map(int).collect()).unwrap())
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(a in small_matrix(5)) {
            let n = a.nullspace();
            prop_assert_eq!(a.rank() + n.cols(), a.cols());
            prop_assert!((&a * &n).is_zero());
        }

        #[test]
        fn solve_affine_consistency(a in small_matrix(4), seed in proptest::collection::vec(-3i64..=3, 4)) {
            let b: Vec<Scalar> = (0..a.rows()).map(|i| int(seed[i % seed.len()])).collect();
            let aug = Matrix::hstack(&[&a, &Matrix::column_vector(b.clone())]).unwrap();
            let sol = a.solve_affine(&b).unwrap();
            prop_assert_eq!(sol.is_none(), aug.rank() > a.rank());
            if let Some(x) = sol {
                prop_assert_eq!(a.mul_vec(&x), b);
            }
        }

        #[test]
        fn kron_mixed_product(a in small_matrix(3), b in small_matrix(3), seed in 0u64..1000) {
            // c and d get shapes that compose with a and b.
            let c = Matrix::new(a.cols(), 2, (0..a.cols() * 2).map(|k| int(((seed + k as u64) % 5) as i64 - 2)).collect()).unwrap();
            let d = Matrix::new(b.cols(), 1, (0..b.cols()).map(|k| int(((seed * 3 + k as u64) % 7) as i64 - 3)).collect()).unwrap();
            prop_assert_eq!(&a.kron(&b) * &c.kron(&d), (&a * &c).kron(&(&b * &d)));
        }
    }
}
