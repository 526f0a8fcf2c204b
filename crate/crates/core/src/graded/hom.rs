use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::scalar::int;
use crate::linalg::{Matrix, Scalar};

use super::module::{GradedMap, GradedModule};

/// The space of degree-preserving `g`-maps `V -> W`, solved in stages:
/// per-degree commutation with generators of `g0`, then commutation with
/// `g1` on the reduced coordinates.
///
/// Unknowns in degree `j` are the entries of `X^j` in row-major order. The
/// solution set is `X^j = blocks[j] · y_j` with `y = null · z`.
#[derive(Clone, Debug)]
pub struct MapSpace {
    source: GradedModule,
    target: GradedModule,
    blocks: Vec<Matrix>,
    null: Matrix,
}

/// Coefficient matrix of `X ↦ L X - X R` on row-major `vec(X)`.
fn sylvester(l: &Matrix, r: &Matrix) -> Matrix {
    let (p, q) = (l.rows(), r.rows());
    &l.kron(&Matrix::identity(q)) - &Matrix::identity(p).kron(&r.transpose())
}

impl MapSpace {
    pub fn new(v: &GradedModule, w: &GradedModule) -> Result<Self> {
        if v.alg() != w.alg() {
            return Err(Error::AlgebraMismatch);
        }
        let gens = v.alg().even().generating_indices();
        let blocks: Vec<Matrix> = v
            .degrees()
            .map(|j| {
                let n = w.dim_at(j) * v.dim_at(j);
                let mut basis: Option<Matrix> = None;
                for &x in &gens {
                    let k = sylvester(&w.rho0_at(j, x), &v.rho0_at(j, x));
                    basis = Some(match basis {
                        None => k.nullspace(),
                        Some(b) => {
                            if b.cols() == 0 {
                                b
                            } else {
                                &b * &(&k * &b).nullspace()
                            }
                        }
                    });
                }
                basis.unwrap_or_else(|| Matrix::identity(n))
            })
            .collect();

        let offsets: Vec<usize> = blocks
            .iter()
            .scan(0, |acc, b| {
                let o = *acc;
                *acc += b.cols();
                Some(o)
            })
            .collect();
        let total: usize = blocks.iter().map(Matrix::cols).sum();

        let mut residuals: Vec<Matrix> = Vec::new();
        for (d, j) in v.degrees().enumerate() {
            let (pn, qj) = (w.dim_at(j + 1), v.dim_at(j));
            if pn * qj == 0 {
                continue;
            }
            for e in 0..v.n_odd() {
                let mut r = Matrix::zeros(pn * qj, total);
                let here = &w.odd_at(j, e).kron(&Matrix::identity(qj)) * &blocks[d];
                r.set_block(0, offsets[d], &here);
                if d + 1 < blocks.len() && blocks[d + 1].cols() > 0 {
                    let there = &Matrix::identity(pn).kron(&v.odd_at(j, e).transpose()) * &blocks[d + 1];
                    let there = -&there;
                    r.set_block(0, offsets[d + 1], &there);
                }
                if !r.is_zero() {
                    residuals.push(r);
                }
            }
        }
        let null = if residuals.is_empty() {
            Matrix::identity(total)
        } else {
            Matrix::vstack(&residuals.iter().collect::<Vec<_>>())?.nullspace()
        };
        Ok(MapSpace { source: v.clone(), target: w.clone(), blocks, null })
    }

    pub fn dim(&self) -> usize {
        self.null.cols()
    }

    pub fn source(&self) -> &GradedModule {
        &self.source
    }

    pub fn target(&self) -> &GradedModule {
        &self.target
    }

    /// The map with coordinates `z` in the basis of this space.
    pub fn map(&self, z: &[Scalar]) -> GradedMap {
        let y = self.null.mul_vec(z);
        let mut off = 0;
        let comps = self
            .source
            .degrees()
            .zip(&self.blocks)
            .map(|(j, b)| {
                let yj = &y[off..off + b.cols()];
                off += b.cols();
                let data = b.mul_vec(yj);
                Matrix::new(self.target.dim_at(j), self.source.dim_at(j), data).expect("block has matching size")
            })
            .collect();
        GradedMap::new_unchecked(self.source.clone(), self.target.clone(), comps).expect("shapes match")
    }

    pub fn basis(&self) -> Vec<GradedMap> {
        (0..self.dim())
            .map(|t| {
                let mut z = vec![Scalar::zero(); self.dim()];
                z[t] = int(1);
                self.map(&z)
            })
            .collect()
    }

    /// A map `f` in this space with `constraint(f) = rhs`, for a linear
    /// `constraint`. Free coordinates are set to zero.
    pub fn solve<F>(&self, constraint: F, rhs: &[Scalar]) -> Result<Option<GradedMap>>
    where
        F: Fn(&GradedMap) -> Vec<Scalar>,
    {
        let cols: Vec<Vec<Scalar>> = self.basis().iter().map(&constraint).collect();
        let c = Matrix::from_columns(rhs.len(), &cols);
        Ok(c.solve_affine(rhs)?.map(|z| self.map(&z)))
    }
}

/// Basis of `Hom(V, W)` in the category of graded modules.
pub fn hom_graded(v: &GradedModule, w: &GradedModule) -> Result<Vec<GradedMap>> {
    Ok(MapSpace::new(v, w)?.basis())
}

/// Searches for an isomorphism among random integer combinations of a hom
/// basis. Over an infinite field a generic combination is invertible when
/// any is, so a few draws suffice in practice; `None` is not a proof of
/// non-isomorphism.
pub fn find_isomorphism(v: &GradedModule, w: &GradedModule, seed: u64, attempts: usize) -> Result<Option<GradedMap>> {
    if v.degrees().chain(w.degrees()).any(|j| v.dim_at(j) != w.dim_at(j)) {
        return Ok(None);
    }
    let space = MapSpace::new(v, w)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        let z: Vec<Scalar> = (0..space.dim()).map(|_| int(rng.gen_range(-9..=9))).collect();
        let f = space.map(&z);
        if f.is_isomorphism() {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{induced_module, G0Module};
    use crate::superalg::SuperAlgebra;
    use std::sync::Arc;

    // Oracle: impose every commutation constraint at once on all unknowns.
    fn brute_force_hom_dim(v: &GradedModule, w: &GradedModule) -> usize {
        let sizes: Vec<usize> = v.degrees().map(|j| w.dim_at(j) * v.dim_at(j)).collect();
        let total: usize = sizes.iter().sum();
        let offs: Vec<usize> = sizes.iter().scan(0, |a, s| { let o = *a; *a += s; Some(o) }).collect();
        let mut rows = Vec::new();
        for (d, j) in v.degrees().enumerate() {
            for x in 0..v.alg().dim0() {
                let k = sylvester(&w.rho0_at(j, x), &v.rho0_at(j, x));
                let mut r = Matrix::zeros(k.rows(), total);
                r.set_block(0, offs[d], &k);
                rows.push(r);
            }
            for e in 0..v.n_odd() {
                let (pn, qj) = (w.dim_at(j + 1), v.dim_at(j));
                let mut r = Matrix::zeros(pn * qj, total);
                r.set_block(0, offs[d], &w.odd_at(j, e).kron(&Matrix::identity(qj)));
                if d + 1 < sizes.len() {
                    r.set_block(0, offs[d + 1], &-&Matrix::identity(pn).kron(&v.odd_at(j, e).transpose()));
                }
                rows.push(r);
            }
        }
        let big = Matrix::vstack(&rows.iter().collect::<Vec<_>>()).unwrap();
        total - big.rank()
    }

    #[test]
    fn hom_examples() {
        let alg = Arc::new(SuperAlgebra::grassmann(1));
        let k0 = GradedModule::trivial(alg.clone(), 0);
        let k1 = GradedModule::trivial(alg.clone(), 1);
        assert_eq!(hom_graded(&k0, &k0).unwrap().len(), 1);
        assert_eq!(hom_graded(&k0, &k1).unwrap().len(), 0);
        let lam = induced_module(&G0Module::trivial(alg, 1), 0);
        assert_eq!(hom_graded(&lam, &lam).unwrap().len(), 1);
        assert_eq!(brute_force_hom_dim(&lam, &lam), 1);
    }

    #[test]
    fn staged_solver_matches_oracle() {
        let alg = Arc::new(SuperAlgebra::sl2_trivial(1));
        let q = G0Module::adjoint(alg.clone());
        let ind = induced_module(&q, 0);
        let k = GradedModule::trivial(alg.clone(), 1);
        for (v, w) in [(&ind, &ind), (&ind, &k), (&k, &ind)] {
            let basis = hom_graded(v, w).unwrap();
            assert_eq!(basis.len(), brute_force_hom_dim(v, w));
            for f in &basis {
                f.check_commutes().unwrap();
            }
        }
    }

    #[test]
    fn finds_identity_up_to_scalar() {
        let alg = Arc::new(SuperAlgebra::grassmann(2));
        let v = induced_module(&G0Module::trivial(alg, 1), 0);
        let iso = find_isomorphism(&v, &v, 7, 4).unwrap().unwrap();
        assert!(iso.is_isomorphism());
    }
}
