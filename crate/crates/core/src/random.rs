//! Seeded generation of valid graded modules with `g0 ∈ {0, sl2}`, at most
//! three odd generators, and bounded total dimension.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graded::{
    change_basis, direct_sum, dual, image, induced_module, truncate_above, truncate_below, G0Module, GradedModule,
    MapSpace,
};
use crate::linalg::scalar::int;
use crate::linalg::{Matrix, Scalar};
use crate::superalg::{sl2_natural, SuperAlgebra};

pub const RANDOM_ALGEBRAS: &[&str] = &[
    "grassmann(1)",
    "grassmann(2)",
    "grassmann(3)",
    "sl2_trivial(1)",
    "sl2_trivial(2)",
    "sl2_trivial(3)",
    "sl2_adjoint",
    "sl2_natural_sum(1)",
];

fn random_q(rng: &mut ChaCha8Rng, alg: &Arc<SuperAlgebra>) -> G0Module {
    if alg.dim0() == 0 {
        return G0Module::trivial(alg.clone(), rng.gen_range(1..=2));
    }
    match rng.gen_range(0..3) {
        0 => G0Module::trivial(alg.clone(), 1),
        1 => G0Module::new(alg.clone(), 2, sl2_natural()).expect("natural sl2-module"),
        _ => G0Module::adjoint(alg.clone()),
    }
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let data: Vec<Scalar> = (0..n * n).map(|_| int(rng.gen_range(-2..=2))).collect();
        let m = Matrix::new(n, n, data).expect("square");
        if m.inverse().is_some() {
            return m;
        }
    }
}

fn random_piece(rng: &mut ChaCha8Rng, alg: &Arc<SuperAlgebra>, budget: usize) -> Result<Option<GradedModule>> {
    let lo = rng.gen_range(-2..=2);
    let q = random_q(rng, alg);
    let ind = induced_module(&q, lo);
    let n = alg.dim1() as i64;
    let piece = match rng.gen_range(0..6) {
        0 => ind,
        1 => truncate_above(&ind, lo + rng.gen_range(0..=n)),
        2 => truncate_below(&ind, lo + rng.gen_range(0..=n)),
        3 => GradedModule::concentrated(&q, lo),
        4 => dual(&truncate_above(&ind, lo + rng.gen_range(0..=n))),
        _ => {
            let src = truncate_below(&ind, lo + rng.gen_range(0..=n));
            let space = MapSpace::new(&src, &ind)?;
            if space.dim() == 0 {
                src
            } else {
                let z: Vec<Scalar> = (0..space.dim()).map(|_| int(rng.gen_range(-3..=3))).collect();
                image(&space.map(&z))?.0
            }
        }
    };
    Ok((piece.total_dim() > 0 && piece.total_dim() <= budget).then_some(piece))
}

/// A random valid module of total dimension at most `max_dim`, with a random
/// change of basis in every degree.
pub fn random_module(rng: &mut ChaCha8Rng, max_dim: usize) -> Result<GradedModule> {
    let name = RANDOM_ALGEBRAS.choose(rng).expect("nonempty");
    random_module_over(rng, &Arc::new(SuperAlgebra::builtin(name)?), max_dim)
}

/// As [`random_module`], over a fixed algebra with `g0` zero or `sl2`.
pub fn random_module_over(rng: &mut ChaCha8Rng, alg: &Arc<SuperAlgebra>, max_dim: usize) -> Result<GradedModule> {
    let target_pieces = rng.gen_range(1..=3);
    let mut pieces: Vec<GradedModule> = Vec::new();
    let mut used = 0;
    for _ in 0..4 * target_pieces {
        if pieces.len() == target_pieces {
            break;
        }
        if let Some(p) = random_piece(rng, alg, max_dim - used)? {
            used += p.total_dim();
            pieces.push(p);
        }
    }
    if pieces.is_empty() {
        pieces.push(GradedModule::trivial(alg.clone(), 0));
    }
    let sum = direct_sum(&pieces.iter().collect::<Vec<_>>())?;
    let p: Vec<Matrix> = sum.dims().iter().map(|&d| random_invertible(rng, d)).collect();
    Ok(change_basis(&sum, &p)?.0)
}

pub fn random_modules(count: usize, max_dim: usize, seed: u64) -> Result<Vec<GradedModule>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_module(&mut rng, max_dim)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_modules_are_valid_and_bounded() {
        let ms = random_modules(30, 24, 11).unwrap();
        for m in &ms {
            assert!(m.total_dim() <= 24 && m.total_dim() > 0);
            assert!(m.n_odd() <= 3);
            assert!(m.alg().dim0() == 0 || m.alg().dim0() == 3);
            let rebuilt = GradedModule::new(m.alg().clone(), m.lo(), m.dims().to_vec(), m.rho0_raw().to_vec(), m.odd_raw().to_vec());
            assert!(rebuilt.is_ok());
        }
        assert!(ms.iter().any(|m| m.alg().dim0() == 0) && ms.iter().any(|m| m.alg().dim0() == 3));
    }

    #[test]
    fn deterministic_for_a_seed() {
        assert_eq!(random_modules(5, 24, 3).unwrap(), random_modules(5, 24, 3).unwrap());
    }
}
