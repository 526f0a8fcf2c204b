use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graded::{sort_with_sign, G0Module};
use crate::linalg::scalar::{int, sign};
use crate::linalg::Matrix;

use super::CohomologyTable;

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    crate::graded::ExteriorBasis::new(n).of_size(k).to_vec()
}

/// Differential `C^p -> C^{p+1}` on `Λ^p(g0*) ⊗ M`, cochains stored by
/// their values on sorted `p`-subsets of the basis:
/// `(dω)(x_T) = Σ_i (-1)^i x_{t_i} ω(T \ t_i) + Σ_{i<j} (-1)^{i+j} ω([x_{t_i}, x_{t_j}], T \ {t_i, t_j})`.
pub fn ce_differential(m: &G0Module, p: usize) -> Matrix {
    let g0 = m.alg().even();
    let (n, dm) = (g0.dim(), m.dim());
    let src = subsets(n, p);
    let tgt = subsets(n, p + 1);
    let src_index = |s: &[usize]| src.iter().position(|x| x == s).expect("sorted subset");
    let mut d = Matrix::zeros(tgt.len() * dm, src.len() * dm);
    for (ti, t) in tgt.iter().enumerate() {
        for i in 0..t.len() {
            let mut rest = t.clone();
            rest.remove(i);
            let si = src_index(&rest);
            let sg = sign(i as i64);
            let rho = m.rho(t[i]);
            for a in 0..dm {
                for b in 0..dm {
                    let v = rho.get(a, b);
                    if !v.is_zero() {
                        *d.get_mut(ti * dm + a, si * dm + b) += &sg * v;
                    }
                }
            }
        }
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let rest: Vec<usize> = t.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, &x)| x).collect();
                for k in 0..n {
                    let c = g0.c(t[i], t[j], k);
                    if c.is_zero() {
                        continue;
                    }
                    let mut seq = vec![k];
                    seq.extend(&rest);
                    let Some((s, sorted)) = sort_with_sign(&seq) else { continue };
                    let si = src_index(&sorted);
                    let coef = &(c * &int(s)) * &sign((i + j) as i64);
                    for a in 0..dm {
                        *d.get_mut(ti * dm + a, si * dm + a) += &coef;
                    }
                }
            }
        }
    }
    d
}

/// Chevalley–Eilenberg cohomology `H^p(g0, M)` for `0 <= p <= dim g0`.
pub fn chevalley_eilenberg(m: &G0Module) -> Result<CohomologyTable> {
    let n = m.alg().dim0();
    let diffs: Vec<Matrix> = (0..n).map(|p| ce_differential(m, p)).collect();
    for p in 1..n {
        if !(&diffs[p] * &diffs[p - 1]).is_zero() {
            return Err(Error::Invariant(format!("Chevalley-Eilenberg d^2 != 0 at degree {p}")));
        }
    }
    let ranks: Vec<usize> = diffs.iter().map(Matrix::rank).collect();
    let mut table = CohomologyTable::new("chevalley-eilenberg");
    for p in 0..=n {
        let dim_c = subsets(n, p).len() * m.dim();
        let out = if p < n { ranks[p] } else { 0 };
        let inc = if p > 0 { ranks[p - 1] } else { 0 };
        table.set(p as i64, dim_c - out - inc);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::SuperAlgebra;
    use std::sync::Arc;

    fn sl2() -> Arc<SuperAlgebra> {
        Arc::new(SuperAlgebra::sl2_trivial(1))
    }

    #[test]
    fn sl2_trivial_coefficients() {
        let t = chevalley_eilenberg(&G0Module::trivial(sl2(), 1)).unwrap();
        assert_eq!(t.dims(0, 3), vec![1, 0, 0, 1]);
    }

    #[test]
    fn sl2_adjoint_coefficients_vanish() {
        // Whitehead: nontrivial irreducible coefficients are acyclic.
        let t = chevalley_eilenberg(&G0Module::adjoint(sl2())).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn abelian_algebra_gives_exterior_algebra() {
        let alg = Arc::new(SuperAlgebra::new(crate::superalg::LieAlgebraEven::abelian(2), crate::superalg::OddPart::trivial(1, 2)).unwrap());
        let t = chevalley_eilenberg(&G0Module::trivial(alg, 1)).unwrap();
        assert_eq!(t.dims(0, 2), vec![1, 2, 1]);
    }
}
