//! Rigid complexes on `P(g1)` and the functors `L` and `V` relating them to
//! graded modules.
//!
//! A rigid complex is stored by its matrix family: `D_e^j` is the coefficient
//! of the coordinate function `e_e*` in `d^j : V^j ⊗ O(j) -> V^{j+1} ⊗ O(j+1)`,
//! with `Γ(O(1))` identified with `g1*` through the dual basis.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cohomology::CohomologyTable;
use crate::error::{Error, Result};
use crate::graded::{GradedMap, GradedModule};
use crate::linalg::scalar::{self, sign};
use crate::linalg::{Matrix, Scalar};

/// Sign relating module data and complex data in degree `j`: `D^j = s(j) a^j`.
pub fn sign_convention(j: i64) -> Scalar {
    sign(j)
}

/// Family of `g0`-equivariant differentials. The underlying data has the
/// same shape and the same two identities as a graded module.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RigidComplex {
    inner: GradedModule,
}

impl RigidComplex {
    /// Validates composability and equivariance of the differentials.
    pub fn new(
        alg: std::sync::Arc<crate::superalg::SuperAlgebra>,
        lo: i64,
        dims: Vec<usize>,
        rho0: Vec<Vec<Matrix>>,
        diff: Vec<Vec<Matrix>>,
    ) -> Result<Self> {
        let inner = GradedModule::new(alg, lo, dims, rho0, diff).map_err(|e| match e {
            Error::Invariant(msg) => Error::Invariant(format!("rigid complex: {msg}")),
            other => other,
        })?;
        Ok(RigidComplex { inner })
    }

    pub fn alg(&self) -> &std::sync::Arc<crate::superalg::SuperAlgebra> {
        self.inner.alg()
    }

    pub fn lo(&self) -> i64 {
        self.inner.lo()
    }

    pub fn hi(&self) -> i64 {
        self.inner.hi()
    }

    pub fn dims(&self) -> &[usize] {
        self.inner.dims()
    }

    pub fn dim_at(&self, j: i64) -> usize {
        self.inner.dim_at(j)
    }

    /// `D_e^j`, a `dims[j+1] x dims[j]` matrix.
    pub fn diff_at(&self, j: i64, e: usize) -> std::borrow::Cow<'_, Matrix> {
        self.inner.odd_at(j, e)
    }

    pub fn rho0_at(&self, j: i64, i: usize) -> std::borrow::Cow<'_, Matrix> {
        self.inner.rho0_at(j, i)
    }

    pub fn rho0_raw(&self) -> &[Vec<Matrix>] {
        self.inner.rho0_raw()
    }

    pub fn diff_raw(&self) -> &[Vec<Matrix>] {
        self.inner.odd_raw()
    }
}

/// `L(V)`: `D_e^j = s(j) a_e^j`.
pub fn l_of(v: &GradedModule) -> RigidComplex {
    // With s(j) = (-1)^j this is exactly the sign change of the right twist.
    RigidComplex { inner: crate::graded::right_twist(v) }
}

/// `V(L)`: `a_e^j = s(j) D_e^j`, inverse to [`l_of`].
pub fn v_of(l: &RigidComplex) -> GradedModule {
    crate::graded::right_twist(&l.inner)
}

/// The complex `L(j) ⊗ O(m)` reindexed so that `L[m]^{j+m} = L^j`, with
/// differentials multiplied by `(-1)^m`. Matches `L(V(m)) = L(V)[m]`.
pub fn shift_complex(l: &RigidComplex, m: i64) -> RigidComplex {
    let s = sign(m);
    let diff = l.diff_raw().iter().map(|ms| ms.iter().map(|d| d.scale(&s)).collect()).collect();
    let inner = crate::graded::GradedModule::new(
        l.alg().clone(),
        l.lo() + m,
        l.dims().to_vec(),
        l.rho0_raw().to_vec(),
        diff,
    )
    .expect("sign changes preserve the identities");
    RigidComplex { inner }
}

/// Checks that the components of `f` commute with the differentials of
/// `L(source)` and `L(target)`.
pub fn check_functoriality(f: &GradedMap) -> Result<()> {
    let (lv, lw) = (l_of(f.source()), l_of(f.target()));
    for j in (f.source().lo() - 1)..=f.source().hi() {
        for e in 0..f.source().n_odd() {
            if &*lw.diff_at(j, e) * &*f.comp(j) != &*f.comp(j + 1) * &*lv.diff_at(j, e) {
                return Err(Error::Invariant(format!("L(f) does not commute with d in degree {j}")));
            }
        }
    }
    Ok(())
}

/// A nonzero vector of `g1`, representing a point of `P(g1)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OddPoint {
    #[serde(with = "point_serde")]
    coords: Vec<Scalar>,
}

mod point_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Scalar], ser: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = v.iter().map(scalar::to_string).collect();
        strs.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Vec<Scalar>, D::Error> {
        let raw: Vec<scalar::ScalarRepr> = Vec::deserialize(de)?;
        raw.into_iter().map(|r| r.into_scalar().map_err(serde::de::Error::custom)).collect()
    }
}

impl OddPoint {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::ZeroPoint);
        }
        Ok(OddPoint { coords })
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self> {
        OddPoint::new(coords.iter().map(|&c| scalar::int(c)).collect())
    }

    /// Parses a comma-separated list such as `1,0,-1/2`.
    pub fn parse(text: &str) -> Result<Self> {
        let coords = text.split(',').map(|t| scalar::parse(t.trim())).collect::<Result<Vec<_>>>()?;
        OddPoint::new(coords)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn scaled(&self, c: &Scalar) -> Result<Self> {
        OddPoint::new(self.coords.iter().map(|x| x * c).collect())
    }

    pub(crate) fn check_dim(&self, n: usize) -> Result<()> {
        if self.coords.len() != n {
            return Err(Error::DimensionMismatch(format!("point has {} coordinates, dim g1 = {n}", self.coords.len())));
        }
        Ok(())
    }
}

impl std::fmt::Display for OddPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(scalar::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The complex of vector spaces obtained by evaluating a rigid complex at a
/// point: `d^j(x) = sum_e x_e D_e^j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiberComplex {
    lo: i64,
    dims: Vec<usize>,
    diffs: Vec<Matrix>,
}

impl FiberComplex {
    pub fn new(lo: i64, dims: Vec<usize>, diffs: Vec<Matrix>) -> Result<Self> {
        if diffs.len() != dims.len() {
            return Err(Error::Shape("one differential per degree required".into()));
        }
        for (k, d) in diffs.iter().enumerate() {
            let want = (dims.get(k + 1).copied().unwrap_or(0), dims[k]);
            if d.shape() != want {
                return Err(Error::Shape(format!("differential {k} is {:?}, expected {want:?}", d.shape())));
            }
        }
        for k in 0..diffs.len().saturating_sub(1) {
            if !(&diffs[k + 1] * &diffs[k]).is_zero() {
                return Err(Error::Invariant(format!("d^2 != 0 at degree {}", lo + k as i64)));
            }
        }
        Ok(FiberComplex { lo, dims, diffs })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, j: i64) -> usize {
        let k = j - self.lo;
        if k < 0 || k >= self.dims.len() as i64 {
            0
        } else {
            self.dims[k as usize]
        }
    }

    /// `d^j(x)`; zero-sized outside the window.
    pub fn diff(&self, j: i64) -> Matrix {
        let k = j - self.lo;
        if k < 0 || k >= self.dims.len() as i64 {
            return Matrix::zeros(self.dim_at(j + 1), 0);
        }
        self.diffs[k as usize].clone()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.diffs.iter().map(Matrix::rank).collect()
    }
}

pub fn fiber(l: &RigidComplex, x: &OddPoint) -> Result<FiberComplex> {
    x.check_dim(l.alg().dim1())?;
    let diffs = (l.lo()..=l.hi()).map(|j| l.inner.odd_combination(j, x.coords())).collect();
    FiberComplex::new(l.lo(), l.dims().to_vec(), diffs)
}

/// `dim H^j = dims[j] - rank d^j - rank d^{j-1}`.
pub fn fiber_cohomology(f: &FiberComplex) -> CohomologyTable {
    let ranks = f.ranks();
    let dims: Vec<usize> = (0..f.dims.len())
        .map(|k| f.dims[k] - ranks[k] - if k > 0 { ranks[k - 1] } else { 0 })
        .collect();
    CohomologyTable::from_dims("fiber", f.lo, &dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{induced_module, shift, G0Module};
    use crate::linalg::scalar::int;
    use crate::superalg::SuperAlgebra;
    use std::sync::Arc;

    fn grassmann2() -> GradedModule {
        induced_module(&G0Module::trivial(Arc::new(SuperAlgebra::grassmann(2)), 1), 0)
    }

    #[test]
    fn trivial_module_complex() {
        let k = GradedModule::trivial(Arc::new(SuperAlgebra::grassmann(2)), 0);
        let l = l_of(&k);
        assert_eq!(l.dims(), &[1]);
        assert!(l.diff_raw().iter().flatten().all(Matrix::is_zero));
        assert_eq!(v_of(&l), k);
        let f = fiber(&l, &OddPoint::from_i64(&[3, -1]).unwrap()).unwrap();
        assert_eq!(fiber_cohomology(&f).get(0), 1);
    }

    #[test]
    fn grassmann_complex_and_fiber() {
        let v = grassmann2();
        let l = l_of(&v);
        // Degree 1 carries the sign s(1) = -1.
        assert_eq!(*l.diff_at(1, 0), v.odd_at(1, 0).scale(&int(-1)));
        assert_eq!(*l.diff_at(0, 0), *v.odd_at(0, 0));
        assert_eq!(v_of(&l), v);
        let x = OddPoint::from_i64(&[1, 0]).unwrap();
        let f = fiber(&l, &x).unwrap();
        assert_eq!(f.ranks(), vec![1, 1, 0]);
        assert!(fiber_cohomology(&f).is_zero());
        assert_eq!(f.diff(0), *l.diff_at(0, 0));
    }

    #[test]
    fn shift_commutes_with_l() {
        let v = grassmann2();
        for m in [-3, -1, 0, 2] {
            assert_eq!(l_of(&shift(&v, m)), shift_complex(&l_of(&v), m));
        }
    }

    #[test]
    fn scaling_point_scales_differentials() {
        let l = l_of(&grassmann2());
        let x = OddPoint::from_i64(&[2, 5]).unwrap();
        let fx = fiber(&l, &x).unwrap();
        let fcx = fiber(&l, &x.scaled(&int(-3)).unwrap()).unwrap();
        assert_eq!(fcx.diff(0), fx.diff(0).scale(&int(-3)));
        assert_eq!(fiber_cohomology(&fx), fiber_cohomology(&fcx));
    }

    #[test]
    fn zero_point_rejected() {
        assert_eq!(OddPoint::from_i64(&[0, 0]), Err(Error::ZeroPoint));
        assert_eq!(OddPoint::parse("1, -1/2").unwrap().coords()[1], scalar::frac(-1, 2));
    }

    #[test]
    fn functoriality_of_identity_and_hom_basis() {
        let v = grassmann2();
        check_functoriality(&GradedMap::identity(&v)).unwrap();
        for f in crate::graded::hom_graded(&v, &v).unwrap() {
            check_functoriality(&f).unwrap();
        }
    }
}
