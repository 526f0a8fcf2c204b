//! The Duflo–Serganova fiber `M_x = Ker x_M / x_M M` and the projective
//! associated variety `X_M = {x : rank x_M < dim M / 2}`.

use std::collections::HashMap;

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::CohomologyTable;
use crate::error::{Error, Result};
use crate::graded::GradedModule;
use crate::linalg::scalar::int;
use crate::linalg::{PolyIdeal, Polynomial, Scalar};
use crate::rigid::{fiber, fiber_cohomology, l_of, OddPoint};

/// Dimensions of the DS fiber of a module at one point.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DsResult {
    pub point: OddPoint,
    pub total_dim: usize,
    pub rank_x: usize,
    pub ds_dim: usize,
    pub per_degree: CohomologyTable,
}

pub fn ds_at(m: &GradedModule, x: &OddPoint) -> Result<DsResult> {
    x.check_dim(m.n_odd())?;
    let xm = m.total_odd_at(x.coords());
    if !(&xm * &xm).is_zero() {
        return Err(Error::Invariant("x_M does not square to zero".into()));
    }
    let rank_x = xm.rank();
    let total_dim = m.total_dim();
    let mut per_degree = fiber_cohomology(&fiber(&l_of(m), x)?);
    per_degree.context = "ds".into();
    let ds_dim = total_dim - 2 * rank_x;
    debug_assert_eq!(ds_dim, per_degree.total());
    Ok(DsResult { point: x.clone(), total_dim, rank_x, ds_dim, per_degree })
}

/// True iff `rank x_M < dim M / 2`.
pub fn in_variety(m: &GradedModule, x: &OddPoint) -> Result<bool> {
    x.check_dim(m.n_odd())?;
    let rank = m.total_odd_at(x.coords()).rank();
    Ok(2 * rank < m.total_dim())
}

/// Default bound on `dim M` for symbolic minor enumeration.
pub const DEFAULT_MAX_MINOR_DIM: usize = 12;

/// Generators of the determinantal ideal cutting out `X_M`: all minors of
/// size `ceil(dim M / 2)` of the matrix of linear forms `x_M(t)`. Zero and
/// repeated minors (up to sign) are dropped.
pub fn variety_ideal(m: &GradedModule, max_dim: usize) -> Result<PolyIdeal> {
    let n = m.n_odd();
    let d = m.total_dim();
    if d > max_dim {
        return Err(Error::Precondition(format!(
            "dim M = {d} exceeds the minor enumeration limit {max_dim}; use point sampling instead"
        )));
    }
    let size = d.div_ceil(2);
    if size == 0 {
        return Ok(PolyIdeal::new(n, [Polynomial::constant(n, int(1))]));
    }
    let ops: Vec<_> = (0..n).map(|e| m.total_odd(e)).collect();
    let entry = |r: usize, c: usize| -> Polynomial {
        let mut p = Polynomial::zero(n);
        for (e, op) in ops.iter().enumerate() {
            let v = op.get(r, c);
            if !v.is_zero() {
                p = p.add(&Polynomial::variable(n, e).scale(v));
            }
        }
        p
    };
    let sym: Vec<Vec<Polynomial>> = (0..d).map(|r| (0..d).map(|c| entry(r, c)).collect()).collect();
    let rows: Vec<usize> = (0..d).filter(|&r| sym[r].iter().any(|p| !p.is_zero())).collect();
    let cols: Vec<usize> = (0..d).filter(|&c| sym.iter().any(|row| !row[c].is_zero())).collect();
    if rows.len() < size || cols.len() < size {
        return Ok(PolyIdeal::new(n, []));
    }
    let row_sets = subsets(&rows, size);
    let col_sets = subsets(&cols, size);
    let minors: Vec<Polynomial> = row_sets
        .par_iter()
        .flat_map_iter(|rs| {
            col_sets.iter().map(|cs| {
                let mut memo = HashMap::new();
                det_laplace(&sym, rs, cs, 0, (1u64 << size) - 1, &mut memo).sign_normalized()
            })
        })
        .collect();
    Ok(PolyIdeal::new(n, minors))
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    let n = items.len();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
            return out;
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Determinant of the submatrix on `rows[depth..]` and the columns of `cs`
/// selected by `mask`, expanding along the first remaining row.
fn det_laplace(
    sym: &[Vec<Polynomial>],
    rows: &[usize],
    cs: &[usize],
    depth: usize,
    mask: u64,
    memo: &mut HashMap<u64, Polynomial>,
) -> Polynomial {
    let nvars = sym[0][0].nvars();
    if depth == rows.len() {
        return Polynomial::constant(nvars, int(1));
    }
    if let Some(p) = memo.get(&mask) {
        return p.clone();
    }
    let mut acc = Polynomial::zero(nvars);
    let mut position = 0;
    for (k, &c) in cs.iter().enumerate() {
        if mask & (1 << k) == 0 {
            continue;
        }
        let a = &sym[rows[depth]][c];
        if !a.is_zero() {
            let sub = det_laplace(sym, rows, cs, depth + 1, mask & !(1 << k), memo);
            if !sub.is_zero() {
                let term = a.mul(&sub);
                acc = if position % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
        }
        position += 1;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Points with integer coordinates uniform in `[-9, 9]`, zero vectors
/// rejected. Reproducible for a fixed seed.
pub fn random_points(n: usize, count: usize, seed: u64) -> Vec<OddPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    if n == 0 {
        return out;
    }
    while out.len() < count {
        let coords: Vec<Scalar> = (0..n).map(|_| int(rng.gen_range(-9..=9))).collect();
        if let Ok(p) = OddPoint::new(coords) {
            out.push(p);
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SupportRow {
    pub point: OddPoint,
    pub fiber_total: usize,
    pub ds_dim: usize,
    pub in_variety: bool,
    pub equal: bool,
    /// Nonzero fiber cohomology implies membership in `X_M`.
    pub contained: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SupportReport {
    pub rows: Vec<SupportRow>,
    pub all_equal: bool,
    pub all_contained: bool,
}

/// Compares total fiber cohomology of `L(M)` with `dim M_x` at each sample,
/// and checks that the support of the cohomology lies inside `X_M`.
pub fn support_check(m: &GradedModule, samples: &[OddPoint]) -> Result<SupportReport> {
    let l = l_of(m);
    let rows = samples
        .par_iter()
        .map(|x| -> Result<SupportRow> {
            let fiber_total = fiber_cohomology(&fiber(&l, x)?).total();
            let ds = ds_at(m, x)?;
            let inv = 2 * ds.rank_x < ds.total_dim;
            Ok(SupportRow {
                point: x.clone(),
                fiber_total,
                ds_dim: ds.ds_dim,
                in_variety: inv,
                equal: fiber_total == ds.ds_dim,
                contained: fiber_total == 0 || inv,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_equal = rows.iter().all(|r| r.equal);
    let all_contained = rows.iter().all(|r| r.contained);
    Ok(SupportReport { rows, all_equal, all_contained })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{direct_sum, induced_module, G0Module};
    use crate::linalg::Matrix;
    use crate::superalg::SuperAlgebra;
    use std::sync::Arc;

    fn free(n: usize) -> GradedModule {
        induced_module(&G0Module::trivial(Arc::new(SuperAlgebra::grassmann(n)), 1), 0)
    }

    #[test]
    fn ds_examples() {
        let alg = Arc::new(SuperAlgebra::grassmann(2));
        let k = GradedModule::trivial(alg, 0);
        let x = OddPoint::from_i64(&[1, 0]).unwrap();
        assert_eq!(ds_at(&k, &x).unwrap().ds_dim, 1);
        let v = free(2);
        let r = ds_at(&v, &x).unwrap();
        assert_eq!((r.rank_x, r.ds_dim), (2, 0));
        // Oracle: the 4x4 matrix of e_1 on Λ(k^2) in basis 1, e1, e2, e1e2.
        let oracle = Matrix::from_i64(&[&[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 1, 0]]);
        assert_eq!(v.total_odd(0), oracle);
        let y = OddPoint::from_i64(&[2, -7]).unwrap();
        let ys = y.scaled(&int(-5)).unwrap();
        assert_eq!(ds_at(&v, &y).unwrap().ds_dim, ds_at(&v, &ys).unwrap().ds_dim);
    }

    #[test]
    fn zero_point_is_rejected() {
        assert_eq!(OddPoint::from_i64(&[0, 0]).unwrap_err(), Error::ZeroPoint);
    }

    #[test]
    fn variety_membership() {
        let alg = Arc::new(SuperAlgebra::grassmann(2));
        let k = GradedModule::trivial(alg.clone(), 0);
        let v = free(2);
        let sum = direct_sum(&[&v, &k]).unwrap();
        for x in random_points(2, 20, 3) {
            assert!(in_variety(&k, &x).unwrap());
            assert!(!in_variety(&v, &x).unwrap());
            assert!(in_variety(&sum, &x).unwrap());
        }
    }

    #[test]
    fn ideal_examples() {
        let alg = Arc::new(SuperAlgebra::grassmann(1));
        let k = GradedModule::trivial(alg, 0);
        assert!(variety_ideal(&k, 12).unwrap().is_zero_ideal());
        let lam = free(1);
        let ideal = variety_ideal(&lam, 12).unwrap();
        assert_eq!(ideal.generators, vec![Polynomial::variable(1, 0)]);
        assert!(matches!(variety_ideal(&free(3), 4), Err(Error::Precondition(_))));
    }

    #[test]
    fn ideal_agrees_with_rank_test() {
        let alg = Arc::new(SuperAlgebra::grassmann(2));
        let v = direct_sum(&[&free(2), &GradedModule::trivial(alg.clone(), 1)]).unwrap();
        let w = crate::graded::truncate_above(&free(2), 1);
        for m in [&v, &w] {
            let ideal = variety_ideal(m, 12).unwrap();
            for x in random_points(2, 30, 11) {
                assert_eq!(ideal.vanishes_at(x.coords()).unwrap(), in_variety(m, &x).unwrap());
            }
        }
    }

    #[test]
    fn random_points_are_reproducible_and_nonzero() {
        let a = random_points(3, 40, 5);
        assert_eq!(a, random_points(3, 40, 5));
        assert_ne!(a, random_points(3, 40, 6));
        assert!(a.iter().all(|p| p.coords().iter().all(|c| crate::linalg::scalar::abs(c) <= int(9))));
    }

    #[test]
    fn support_of_free_and_trivial() {
        let alg = Arc::new(SuperAlgebra::grassmann(2));
        let pts = random_points(2, 10, 1);
        let r = support_check(&free(2), &pts).unwrap();
        assert!(r.all_equal && r.rows.iter().all(|row| row.fiber_total == 0));
        let r = support_check(&GradedModule::trivial(alg, 4), &pts).unwrap();
        assert!(r.all_equal && r.all_contained && r.rows.iter().all(|row| row.ds_dim == 1));
    }
}
