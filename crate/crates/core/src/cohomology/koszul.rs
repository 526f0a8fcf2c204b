use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::superalg::SuperAlgebra;

use super::sym::{monomial_index, monomials};
use super::CohomologyTable;

/// Differential `S^p(g1*) ⊗ V -> S^{p+1}(g1*) ⊗ V`,
/// `t^α ⊗ v ↦ Σ_e t^{α + ε_e} ⊗ a_e v`.
pub fn koszul_differential(ops: &[Matrix], dim: usize, p: usize) -> Matrix {
    let n = ops.len();
    let src = monomials(n, p);
    let tgt = monomials(n, p + 1);
    let index = monomial_index(&tgt);
    let mut d = Matrix::zeros(tgt.len() * dim, src.len() * dim);
    for (si, alpha) in src.iter().enumerate() {
        for (e, a) in ops.iter().enumerate() {
            let mut beta = alpha.clone();
            beta[e] += 1;
            let ti = index[&beta];
            for r in 0..dim {
                for c in 0..dim {
                    let v = a.get(r, c);
                    if !v.is_zero() {
                        *d.get_mut(ti * dim + r, si * dim + c) += v;
                    }
                }
            }
        }
    }
    d
}

/// `H^p` of the Koszul complex of the odd operators `ops` on `V`, for `p < p_max`.
pub fn koszul_odd(alg: &SuperAlgebra, ops: &[Matrix], p_max: usize) -> Result<CohomologyTable> {
    if p_max < 1 {
        return Err(Error::Precondition("p_max must be at least 1".into()));
    }
    if ops.len() != alg.dim1() {
        return Err(Error::Shape(format!("{} odd operators for dim g1 = {}", ops.len(), alg.dim1())));
    }
    let dim = ops.first().map_or(0, Matrix::rows);
    if let Some(a) = ops.iter().find(|a| a.shape() != (dim, dim)) {
        return Err(Error::Shape(format!("odd operator of shape {:?} on a {dim}-dimensional space", a.shape())));
    }
    for (e, a) in ops.iter().enumerate() {
        for b in &ops[e..] {
            if !(&(a * b) + &(b * a)).is_zero() {
                return Err(Error::Precondition("odd operators do not anticommute".into()));
            }
        }
    }
    let ranks: Vec<usize> = (0..p_max).map(|p| koszul_differential(ops, dim, p).rank()).collect();
    let mut table = CohomologyTable::new("koszul");
    for p in 0..p_max {
        let dim_c = monomials(ops.len(), p).len() * dim;
        let inc = if p > 0 { ranks[p - 1] } else { 0 };
        table.set(p as i64, dim_c - ranks[p] - inc);
    }
    Ok(table)
}
