use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{submodule, GradedModule};
use crate::linalg::Matrix;

use super::require_odd;

/// The composite `E = a_{e1} a_{e2} ... a_{en}` of all odd generators, as a
/// map from degree `j` to degree `j + n` for each `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopOddOperator {
    pub n: usize,
    pub order: Vec<usize>,
    /// Matrix on the total space `⊕_j V^j`.
    pub matrix: Matrix,
    /// `(j, E^j)` for every degree of the window.
    pub components: Vec<(i64, Matrix)>,
}

impl TopOddOperator {
    pub fn rank(&self) -> usize {
        self.components.iter().map(|(_, m)| m.rank()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|(_, m)| m.is_zero())
    }

    /// Basis of `ker E^j` for each degree, as matrix columns.
    pub fn kernel_bases(&self) -> Vec<Matrix> {
        self.components.iter().map(|(_, m)| m.nullspace()).collect()
    }
}

pub fn top_operator(v: &GradedModule) -> Result<TopOddOperator> {
    let order: Vec<usize> = (0..v.n_odd()).collect();
    top_operator_ordered(v, &order)
}

/// `E` for the product taken in the given order (rightmost factor applied first).
/// Checks that `ker E` is a `g`-submodule.
pub fn top_operator_ordered(v: &GradedModule, order: &[usize]) -> Result<TopOddOperator> {
    require_odd(v.alg())?;
    let n = v.n_odd();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::Precondition("order must be a permutation of the odd basis".into()));
    }
    let components: Vec<(i64, Matrix)> = v
        .degrees()
        .map(|j| {
            let mut m = Matrix::identity(v.dim_at(j));
            for (step, &e) in order.iter().rev().enumerate() {
                m = &*v.odd_at(j + step as i64, e) * &m;
            }
            (j, m)
        })
        .collect();
    let total = v.total_dim();
    let mut matrix = Matrix::zeros(total, total);
    for (j, m) in &components {
        if m.rows() > 0 {
            matrix.set_block(v.offset(j + n as i64), v.offset(*j), m);
        }
    }
    let op = TopOddOperator { n, order: order.to_vec(), matrix, components };
    submodule(v, &op.kernel_bases())
        .map_err(|e| Error::Invariant(format!("ker E is not a submodule: {e}")))?;
    Ok(op)
}

/// True iff `Λ^n(g1)` kills `v`.
pub fn is_reduced(v: &GradedModule) -> Result<bool> {
    Ok(top_operator(v)?.is_zero())
}
