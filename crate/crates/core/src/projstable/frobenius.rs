use serde::Serialize;

use crate::error::Result;
use crate::graded::{wedge_sign, ExteriorBasis, G0Module};
use crate::linalg::scalar::int;
use crate::linalg::Matrix;

use super::require_odd;

/// The two mutually inverse maps between `Λ(g1) ⊗ Q` and
/// `Hom_k(Λ(g1), Λ^n(g1) ⊗ Q) ≅ Hom_k(Λ(g1), Q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusReport {
    pub dim: usize,
    /// `f(e_S ⊗ q)(e_T) = [e_T ∧ e_S]_top q`.
    pub f: Matrix,
    /// `g(β) = sum_T ε(T) e_{T^c} ⊗ β(e_T)`, `ε(T)` the sign of `e_T ∧ e_{T^c}`.
    pub g: Matrix,
    pub fg_identity: bool,
    pub gf_identity: bool,
    /// `f` intertwines the `g0`-actions, with `g0` acting on the top power
    /// `Λ^n(g1)` by the trace of its action on `g1`.
    pub g0_equivariant: bool,
    pub passed: bool,
}

fn complement(n: usize, s: &[usize]) -> Vec<usize> {
    (0..n).filter(|i| !s.contains(i)).collect()
}

pub fn frobenius_check(q: &G0Module) -> Result<FrobeniusReport> {
    let alg = q.alg();
    require_odd(alg)?;
    let n = alg.dim1();
    let dq = q.dim();
    let ext = ExteriorBasis::new(n);
    let subsets: Vec<Vec<usize>> = ext.all().cloned().collect();
    let dim = subsets.len() * dq;

    let mut f = Matrix::zeros(dim, dim);
    let mut g = Matrix::zeros(dim, dim);
    for s in &subsets {
        let sc = complement(n, s);
        let (is, ic) = (ext.global_index(s), ext.global_index(&sc));
        let f_sign = wedge_sign(&sc, s).expect("complements are disjoint");
        let g_sign = wedge_sign(s, &sc).expect("complements are disjoint");
        for k in 0..dq {
            // Column e_S ⊗ q_k of f is the functional supported on e_{S^c}.
            f.set(ic * dq + k, is * dq + k, int(f_sign));
            // Column (T = S, q_k) of g lands on e_{S^c} ⊗ q_k.
            g.set(ic * dq + k, is * dq + k, int(g_sign));
        }
    }
    let id = Matrix::identity(dim);
    let fg_identity = &f * &g == id;
    let gf_identity = &g * &f == id;

    let g0_equivariant = (0..alg.dim0()).all(|x| {
        let a = alg.odd().action(x);
        let derivation = Matrix::block_diag(&(0..=n).map(|k| ext.derivation(a, k)).collect::<Vec<_>>().iter().collect::<Vec<_>>());
        let iq = Matrix::identity(dq);
        let il = Matrix::identity(subsets.len());
        let on_ind = &derivation.kron(&iq) + &il.kron(q.rho(x));
        let top = Matrix::scalar_identity(dq, &a.trace());
        let on_hom = &il.kron(&(&top + q.rho(x))) - &derivation.transpose().kron(&iq);
        &f * &on_ind == &on_hom * &f
    });

    let passed = fg_identity && gf_identity && g0_equivariant;
    Ok(FrobeniusReport { dim, f, g, fg_identity, gf_identity, g0_equivariant, passed })
}
