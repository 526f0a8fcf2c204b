//! Exact dense linear algebra over the rationals.

mod matrix;
mod poly;
pub mod scalar;

pub use matrix::Matrix;
pub use poly::{grlex, PolyIdeal, Polynomial};
pub use scalar::Scalar;

/// Rank of `m`.
pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// Kernel basis of `m` as matrix columns.
pub fn nullspace(m: &Matrix) -> Matrix {
    m.nullspace()
}

/// Particular solution of `a x = b` (free variables zero), if any.
pub fn solve_affine(a: &Matrix, b: &[Scalar]) -> crate::Result<Option<Vec<Scalar>>> {
    a.solve_affine(b)
}

pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b)
}

pub fn poly_eval(p: &Polynomial, point: &[Scalar]) -> crate::Result<Scalar> {
    p.eval(point)
}

/// Basis of the subspace of `basis`'s column span on which `constraint`
/// vanishes. `constraint` maps a vector to its residual; it must be linear.
/// Returns `basis * N` where `N` spans the kernel of the residual matrix.
pub fn restrict_kernel<F>(basis: &Matrix, constraint: F) -> Matrix
where
    F: Fn(&[Scalar]) -> Vec<Scalar>,
{
    if basis.cols() == 0 {
        return basis.clone();
    }
    let residuals: Vec<Vec<Scalar>> = basis.columns().iter().map(|c| constraint(c)).collect();
    let len = residuals[0].len();
    let r = Matrix::from_columns(len, &residuals);
    let coeffs = r.nullspace();
    basis * &coeffs
}
