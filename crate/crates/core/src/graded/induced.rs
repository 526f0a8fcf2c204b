use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::scalar::int;
use crate::linalg::Matrix;

use super::module::{G0Module, GradedMap, GradedModule};
use super::ops::direct_sum;

/// Basis of the exterior algebra `Λ(k^n)`: subsets of `0..n` ordered by size,
/// then lexicographically.
#[derive(Clone, Debug)]
pub struct ExteriorBasis {
    n: usize,
    by_size: Vec<Vec<Vec<usize>>>,
    index: HashMap<Vec<usize>, usize>,
}

impl ExteriorBasis {
    pub fn new(n: usize) -> Self {
        let by_size: Vec<Vec<Vec<usize>>> = (0..=n).map(|k| combinations(n, k)).collect();
        let mut index = HashMap::new();
        for subsets in &by_size {
            for (i, s) in subsets.iter().enumerate() {
                index.insert(s.clone(), i);
            }
        }
        ExteriorBasis { n, by_size, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Subsets of size `k` in order.
    pub fn of_size(&self, k: usize) -> &[Vec<usize>] {
        &self.by_size[k]
    }

    /// Position of a sorted subset among the subsets of its size.
    pub fn local_index(&self, s: &[usize]) -> usize {
        self.index[s]
    }

    /// Position of a sorted subset in the full `(size, lex)` order.
    pub fn global_index(&self, s: &[usize]) -> usize {
        let before: usize = self.by_size[..s.len()].iter().map(Vec::len).sum();
        before + self.local_index(s)
    }

    pub fn all(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.by_size.iter().flatten()
    }

    /// Matrix of `e_i ∧ (-)` from `Λ^k` to `Λ^{k+1}`.
    pub fn wedge_matrix(&self, i: usize, k: usize) -> Matrix {
        let rows = self.by_size.get(k + 1).map_or(0, Vec::len);
        let mut m = Matrix::zeros(rows, self.by_size[k].len());
        for (c, s) in self.by_size[k].iter().enumerate() {
            if let Some((sg, t)) = wedge_left(i, s) {
                m.set(self.local_index(&t), c, int(sg));
            }
        }
        m
    }

    /// Matrix on `Λ^k` of the derivation extending `a` (acting on `k^n`).
    pub fn derivation(&self, a: &Matrix, k: usize) -> Matrix {
        let dim = self.by_size[k].len();
        let mut m = Matrix::zeros(dim, dim);
        for (c, s) in self.by_size[k].iter().enumerate() {
            for t in 0..k {
                for row in 0..self.n {
                    let coeff = a.get(row, s[t]);
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut seq = s.clone();
                    seq[t] = row;
                    if let Some((sg, sorted)) = sort_with_sign(&seq) {
                        let r = self.local_index(&sorted);
                        *m.get_mut(r, c) += coeff * int(sg);
                    }
                }
            }
        }
        m
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(combo.clone());
        let Some(pos) = (0..k).rev().find(|&p| combo[p] < n - k + p) else {
            return out;
        };
        combo[pos] += 1;
        for q in pos + 1..k {
            combo[q] = combo[q - 1] + 1;
        }
    }
}

/// `e_i ∧ e_S = sign · e_T`, or `None` when `i ∈ S`.
pub fn wedge_left(i: usize, s: &[usize]) -> Option<(i64, Vec<usize>)> {
    if s.contains(&i) {
        return None;
    }
    let before = s.iter().filter(|&&x| x < i).count();
    let mut t = s.to_vec();
    t.insert(before, i);
    Some((if before % 2 == 0 { 1 } else { -1 }, t))
}

/// Sorts a sequence of distinct indices, returning the permutation sign; `None`
/// on a repeated index (the wedge vanishes).
pub fn sort_with_sign(seq: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut inversions = 0;
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            if seq[a] == seq[b] {
                return None;
            }
            if seq[a] > seq[b] {
                inversions += 1;
            }
        }
    }
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    Some((if inversions % 2 == 0 { 1 } else { -1 }, sorted))
}

/// The induced module `U(g) ⊗_{U(g0)} Q ≅ Λ(g1) ⊗ Q`, graded by exterior
/// degree plus `base`. Basis of degree `base + k`: pairs `(S, q)` with `|S| = k`,
/// subsets in lexicographic order, index `local(S) * dim Q + q`.
pub fn induced_module(q: &G0Module, base: i64) -> GradedModule {
    let alg = q.alg().clone();
    let n = alg.dim1();
    let dq = q.dim();
    let ext = ExteriorBasis::new(n);
    let iq = Matrix::identity(dq);
    let dims: Vec<usize> = (0..=n).map(|k| ext.of_size(k).len() * dq).collect();
    let rho0 = (0..=n)
        .map(|k| {
            let ik = Matrix::identity(ext.of_size(k).len());
            (0..alg.dim0())
                .map(|x| &ext.derivation(alg.odd().action(x), k).kron(&iq) + &ik.kron(q.rho(x)))
                .collect()
        })
        .collect();
    let odd = (0..=n).map(|k| (0..n).map(|e| ext.wedge_matrix(e, k).kron(&iq)).collect()).collect();
    GradedModule::new_unchecked(alg, base, dims, rho0, odd)
}

/// The map `Ind(Q) -> V` determined by a `g0`-map `s : Q -> V^base`, sending
/// `e_S ⊗ q` to `e_{s1}(e_{s2}(...e_{sk}(s q)))`.
pub fn evaluation_map(v: &GradedModule, q: &G0Module, base: i64, s: &Matrix) -> Result<GradedMap> {
    if s.shape() != (v.dim_at(base), q.dim()) {
        return Err(Error::Shape(format!(
            "embedding of shape {:?}, expected {}x{}",
            s.shape(),
            v.dim_at(base),
            q.dim()
        )));
    }
    let ind = induced_module(q, base);
    let comps = evaluation_comps(v, q.dim(), base, s);
    GradedMap::new(ind, v.clone(), comps)
}

fn evaluation_comps(v: &GradedModule, dq: usize, base: i64, s: &Matrix) -> Vec<Matrix> {
    let n = v.n_odd();
    let ext = ExteriorBasis::new(n);
    (0..=n)
        .map(|k| {
            let deg = base + k as i64;
            let subsets = ext.of_size(k);
            let mut m = Matrix::zeros(v.dim_at(deg), subsets.len() * dq);
            for (si, sub) in subsets.iter().enumerate() {
                let mut img = s.clone();
                for (step, &e) in sub.iter().rev().enumerate() {
                    img = &*v.odd_at(base + step as i64, e) * &img;
                }
                if img.rows() > 0 {
                    m.set_block(0, si * dq, &img);
                }
            }
            m
        })
        .collect()
}

/// Direct sum of induced modules `⊕ Ind(Q_t)` placed at the given degrees,
/// with the sum of the evaluation maps into `v`.
pub fn evaluation_from_pieces(v: &GradedModule, pieces: &[(G0Module, i64, Matrix)]) -> Result<GradedMap> {
    let inds: Vec<GradedModule> = pieces.iter().map(|(q, b, _)| induced_module(q, *b)).collect();
    let refs: Vec<&GradedModule> = inds.iter().collect();
    let sum = if refs.is_empty() { GradedModule::zero(v.alg().clone(), v.lo()) } else { direct_sum(&refs)? };
    let per_piece: Vec<(i64, Vec<Matrix>)> =
        pieces.iter().map(|(q, b, s)| (*b, evaluation_comps(v, q.dim(), *b, s))).collect();
    let comps = sum
        .degrees()
        .map(|j| {
            let blocks: Vec<Matrix> = per_piece
                .iter()
                .zip(&inds)
                .map(|((b, cs), ind)| {
                    if j >= *b && j <= ind.hi() {
                        cs[(j - b) as usize].clone()
                    } else {
                        Matrix::zeros(v.dim_at(j), 0)
                    }
                })
                .collect();
            Matrix::hstack(&blocks.iter().collect::<Vec<_>>()).expect("blocks share the row count")
        })
        .collect();
    GradedMap::new(sum, v.clone(), comps)
}

/// The free cover `ε : ⊕_j Ind(V^j) -> V`, inducing each degree of `v` as a
/// `g0`-module and evaluating. Always surjective.
pub fn free_cover(v: &GradedModule) -> Result<GradedMap> {
    let pieces: Vec<(G0Module, i64, Matrix)> = v
        .degrees()
        .filter(|&j| v.dim_at(j) > 0)
        .map(|j| (v.piece(j), j, Matrix::identity(v.dim_at(j))))
        .collect();
    evaluation_from_pieces(v, &pieces)
}

/// Coefficient of `e_T` in `e_A ∧ e_B` for disjoint sorted `A`, `B`.
pub fn wedge_sign(a: &[usize], b: &[usize]) -> Option<i64> {
    let seq: Vec<usize> = a.iter().chain(b).copied().collect();
    sort_with_sign(&seq).map(|(s, _)| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::ops::direct_sum;
    use crate::superalg::SuperAlgebra;
    use std::sync::Arc;

    #[test]
    fn exterior_basis_order() {
        let ext = ExteriorBasis::new(3);
        let all: Vec<Vec<usize>> = ext.all().cloned().collect();
        assert_eq!(
            all,
            vec![vec![], vec![0], vec![1], vec![2], vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]]
        );
        assert_eq!(ext.global_index(&[1, 2]), 6);
        assert_eq!(wedge_left(1, &[0, 2]), Some((-1, vec![0, 1, 2])));
        assert_eq!(wedge_left(0, &[0]), None);
        assert_eq!(sort_with_sign(&[2, 0, 1]), Some((1, vec![0, 1, 2])));
        assert_eq!(sort_with_sign(&[1, 0]), Some((-1, vec![0, 1])));
    }

    #[test]
    fn grassmann_module_dims() {
        let alg = Arc::new(SuperAlgebra::grassmann(2));
        let m = induced_module(&G0Module::trivial(alg, 1), 0);
        assert_eq!(m.dims(), &[1, 2, 1]);
        m.validated().unwrap();
    }

    #[test]
    fn sl2_adjoint_induced_has_dim_12() {
        let alg = Arc::new(SuperAlgebra::sl2_trivial(2));
        let q = G0Module::adjoint(alg);
        let m = induced_module(&q, 0);
        assert_eq!(m.total_dim(), 12);
        m.validated().unwrap();
    }

    #[test]
    fn derivation_on_adjoint_odd_part() {
        // g1 = sl2 adjoint: Λ^3 is the determinant, on which the derivation is the trace = 0.
        let alg = Arc::new(SuperAlgebra::sl2_adjoint());
        let m = induced_module(&G0Module::trivial(alg, 1), 0);
        assert_eq!(m.dims(), &[1, 3, 3, 1]);
        assert!(m.rho0_at(3, 1).is_zero());
        m.validated().unwrap();
    }

    #[test]
    fn induction_is_additive() {
        let alg = Arc::new(SuperAlgebra::sl2_trivial(1));
        let q1 = G0Module::adjoint(alg.clone());
        let q2 = G0Module::trivial(alg.clone(), 1);
        let sum = induced_module(&q1.direct_sum(&q2).unwrap(), 0);
        let parts = direct_sum(&[&induced_module(&q1, 0), &induced_module(&q2, 0)]).unwrap();
        assert_eq!(sum.dims(), parts.dims());
        // Ind(Q1 ⊕ Q2) interleaves the summands per subset; both have one subset per degree here.
        assert_eq!(sum, parts);
    }

    #[test]
    fn free_cover_is_surjective_g_map() {
        let alg = Arc::new(SuperAlgebra::grassmann(2));
        let v = induced_module(&G0Module::trivial(alg, 1), 0);
        let eps = free_cover(&v).unwrap();
        for j in v.degrees() {
            assert_eq!(eps.comp(j).rank(), v.dim_at(j));
        }
    }
}
