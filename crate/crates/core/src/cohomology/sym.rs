use std::collections::HashMap;

use crate::error::Result;
use crate::graded::G0Module;
use crate::linalg::scalar::int;
use crate::linalg::Matrix;

/// Exponent vectors of length `nvars` summing to `degree`, with `x_0^degree`
/// first and later variables favoured progressively.
pub fn monomials(nvars: usize, degree: usize) -> Vec<Vec<usize>> {
    fn rec(nvars: usize, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=left).rev() {
            prefix.push(a);
            rec(nvars, left - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn monomial_index(monos: &[Vec<usize>]) -> HashMap<Vec<usize>, usize> {
    monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect()
}

/// The symmetric power `S^p(M)` on the monomial basis of [`monomials`].
pub fn sym_power(m: &G0Module, p: usize) -> Result<G0Module> {
    let monos = monomials(m.dim(), p);
    let index = monomial_index(&monos);
    let rho = m
        .rhos()
        .iter()
        .map(|a| {
            let mut out = Matrix::zeros(monos.len(), monos.len());
            for (col, alpha) in monos.iter().enumerate() {
                for i in 0..alpha.len() {
                    if alpha[i] == 0 {
                        continue;
                    }
                    let mult = int(alpha[i] as i64);
                    for r in 0..alpha.len() {
                        let c = a.get(r, i);
                        if num_traits::Zero::is_zero(c) {
                            continue;
                        }
                        let mut beta = alpha.clone();
                        beta[i] -= 1;
                        beta[r] += 1;
                        let row = index[&beta];
                        *out.get_mut(row, col) += &mult * c;
                    }
                }
            }
            out
        })
        .collect();
    G0Module::new(m.alg().clone(), monos.len(), rho)
}
