use std::borrow::Cow;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::superalg::SuperAlgebra;

/// A finite-dimensional `g0`-module, given by one matrix per even basis element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct G0Module {
    alg: Arc<SuperAlgebra>,
    dim: usize,
    rho: Vec<Matrix>,
}

impl G0Module {
    pub fn new(alg: Arc<SuperAlgebra>, dim: usize, rho: Vec<Matrix>) -> Result<Self> {
        if rho.len() != alg.dim0() {
            return Err(Error::Shape(format!("{} action matrices for dim g0 = {}", rho.len(), alg.dim0())));
        }
        if let Some(m) = rho.iter().find(|m| m.shape() != (dim, dim)) {
            return Err(Error::Shape(format!("action matrix of shape {:?} on a {dim}-dimensional module", m.shape())));
        }
        let check = alg.even().check_representation(&rho, "representation");
        if !check.passed {
            return Err(Error::Invariant(format!("not a g0-representation at {:?}", check.first_failure)));
        }
        Ok(G0Module { alg, dim, rho })
    }

    pub fn trivial(alg: Arc<SuperAlgebra>, dim: usize) -> Self {
        let rho = vec![Matrix::zeros(dim, dim); alg.dim0()];
        G0Module { alg, dim, rho }
    }

    /// `g1` itself as a `g0`-module.
    pub fn odd_part(alg: Arc<SuperAlgebra>) -> Self {
        let rho = alg.odd().actions().to_vec();
        let dim = alg.dim1();
        G0Module { alg, dim, rho }
    }

    /// The adjoint module `g0`.
    pub fn adjoint(alg: Arc<SuperAlgebra>) -> Self {
        let rho = (0..alg.dim0()).map(|i| alg.even().ad(i)).collect();
        let dim = alg.dim0();
        G0Module { alg, dim, rho }
    }

    pub fn alg(&self) -> &Arc<SuperAlgebra> {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn rhos(&self) -> &[Matrix] {
        &self.rho
    }

    /// Contragredient: `x` acts by `-rho(x)^T`.
    pub fn dual(&self) -> Self {
        G0Module { alg: self.alg.clone(), dim: self.dim, rho: self.rho.iter().map(|m| -&m.transpose()).collect() }
    }

    /// Tensor product with the Leibniz action; basis index `(i, j) -> i * other.dim + j`.
    pub fn tensor(&self, other: &G0Module) -> Result<Self> {
        if self.alg != other.alg {
            return Err(Error::AlgebraMismatch);
        }
        let (ia, ib) = (Matrix::identity(self.dim), Matrix::identity(other.dim));
        let rho = self.rho.iter().zip(&other.rho).map(|(a, b)| &a.kron(&ib) + &ia.kron(b)).collect();
        Ok(G0Module { alg: self.alg.clone(), dim: self.dim * other.dim, rho })
    }

    pub fn direct_sum(&self, other: &G0Module) -> Result<Self> {
        if self.alg != other.alg {
            return Err(Error::AlgebraMismatch);
        }
        let rho = self.rho.iter().zip(&other.rho).map(|(a, b)| Matrix::block_diag(&[a, b])).collect();
        Ok(G0Module { alg: self.alg.clone(), dim: self.dim + other.dim, rho })
    }
}

/// A finite-dimensional `Z`-graded `g`-module: `g0` preserves degree, `g1`
/// raises it by one. Degrees run over the window `lo..=hi`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedModule {
    alg: Arc<SuperAlgebra>,
    lo: i64,
    dims: Vec<usize>,
    // rho0[d][i]: action of x_i on degree lo + d.
    rho0: Vec<Vec<Matrix>>,
    // odd[d][e]: action of e_e from degree lo + d to lo + d + 1.
    odd: Vec<Vec<Matrix>>,
}

impl GradedModule {
    /// Builds and validates a module. `rho0[d]` and `odd[d]` describe degree
    /// `lo + d`; the odd matrices leaving the top degree must have zero rows.
    pub fn new(
        alg: Arc<SuperAlgebra>,
        lo: i64,
        dims: Vec<usize>,
        rho0: Vec<Vec<Matrix>>,
        odd: Vec<Vec<Matrix>>,
    ) -> Result<Self> {
        let m = GradedModule { alg, lo, dims, rho0, odd };
        m.check_shapes()?;
        m.check_invariants()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        alg: Arc<SuperAlgebra>,
        lo: i64,
        dims: Vec<usize>,
        rho0: Vec<Vec<Matrix>>,
        odd: Vec<Vec<Matrix>>,
    ) -> Self {
        let m = GradedModule { alg, lo, dims, rho0, odd };
        debug_assert!(m.check_shapes().is_ok());
        m
    }

    /// Runs the full validation on data assembled by a constructor. Every
    /// operation in this crate ends with this call.
    pub(crate) fn validated(self) -> Result<Self> {
        self.check_shapes()?;
        self.check_invariants()?;
        Ok(self)
    }

    /// One-dimensional trivial module concentrated in `degree`.
    pub fn trivial(alg: Arc<SuperAlgebra>, degree: i64) -> Self {
        GradedModule::concentrated(&G0Module::trivial(alg, 1), degree)
    }

    /// A `g0`-module placed in a single degree, with `g1` acting by zero.
    pub fn concentrated(q: &G0Module, degree: i64) -> Self {
        let alg = q.alg().clone();
        let odd = vec![vec![Matrix::zeros(0, q.dim()); alg.dim1()]];
        GradedModule::new_unchecked(alg, degree, vec![q.dim()], vec![q.rhos().to_vec()], odd)
    }

    /// The zero module with an empty window starting at `lo`.
    pub fn zero(alg: Arc<SuperAlgebra>, lo: i64) -> Self {
        GradedModule::new_unchecked(alg, lo, Vec::new(), Vec::new(), Vec::new())
    }

    fn check_shapes(&self) -> Result<()> {
        let (n0, n1) = (self.alg.dim0(), self.alg.dim1());
        if self.rho0.len() != self.dims.len() || self.odd.len() != self.dims.len() {
            return Err(Error::Shape("per-degree data does not match the number of degrees".into()));
        }
        for (d, &dim) in self.dims.iter().enumerate() {
            let deg = self.lo + d as i64;
            if self.rho0[d].len() != n0 {
                return Err(Error::Shape(format!("degree {deg}: {} even matrices, expected {n0}", self.rho0[d].len())));
            }
            if let Some(m) = self.rho0[d].iter().find(|m| m.shape() != (dim, dim)) {
                return Err(Error::Shape(format!("degree {deg}: even matrix {:?}, expected {dim}x{dim}", m.shape())));
            }
            if self.odd[d].len() != n1 {
                return Err(Error::Shape(format!("degree {deg}: {} odd matrices, expected {n1}", self.odd[d].len())));
            }
            let next = self.dims.get(d + 1).copied().unwrap_or(0);
            if let Some(m) = self.odd[d].iter().find(|m| m.shape() != (next, dim)) {
                return Err(Error::Shape(format!("degree {deg}: odd matrix {:?}, expected {next}x{dim}", m.shape())));
            }
        }
        Ok(())
    }

    fn check_invariants(&self) -> Result<()> {
        let even = self.alg.even();
        let n1 = self.alg.dim1();
        for d in 0..self.dims.len() {
            let deg = self.lo + d as i64;
            let c = even.check_representation(&self.rho0[d], "representation");
            if !c.passed {
                return Err(Error::Invariant(format!(
                    "degree {deg}: even action is not a representation at {:?}",
                    c.first_failure
                )));
            }
        }
        for j in self.lo..=self.hi() {
            for i in 0..self.alg.dim0() {
                let r_here = self.rho0_at(j, i);
                let r_next = self.rho0_at(j + 1, i);
                let a = self.alg.odd().action(i);
                for e in 0..n1 {
                    let ae = self.odd_at(j, e);
                    let lhs = &(&*r_next * &*ae) - &(&*ae * &*r_here);
                    let mut rhs = Matrix::zeros(lhs.rows(), lhs.cols());
                    for k in 0..n1 {
                        rhs.add_scaled(a.get(k, e), &self.odd_at(j, k));
                    }
                    if lhs != rhs {
                        return Err(Error::Invariant(format!(
                            "degree {j}: mixed bracket [x_{i}, e_{e}] not respected"
                        )));
                    }
                }
            }
            for e in 0..n1 {
                for f in e..n1 {
                    let s = &(&*self.odd_at(j + 1, e) * &*self.odd_at(j, f))
                        + &(&*self.odd_at(j + 1, f) * &*self.odd_at(j, e));
                    if !s.is_zero() {
                        return Err(Error::Invariant(format!(
                            "degree {j}: odd generators e_{e}, e_{f} do not anticommute"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn alg(&self) -> &Arc<SuperAlgebra> {
        &self.alg
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Top degree of the window; `lo - 1` for an empty window.
    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    fn index(&self, j: i64) -> Option<usize> {
        if j < self.lo || j > self.hi() {
            None
        } else {
            Some((j - self.lo) as usize)
        }
    }

    pub fn dim_at(&self, j: i64) -> usize {
        self.index(j).map_or(0, |d| self.dims[d])
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn n_odd(&self) -> usize {
        self.alg.dim1()
    }

    /// Even action of `x_i` on degree `j` (a 0x0 matrix outside the window).
    pub fn rho0_at(&self, j: i64, i: usize) -> Cow<'_, Matrix> {
        match self.index(j) {
            Some(d) => Cow::Borrowed(&self.rho0[d][i]),
            None => Cow::Owned(Matrix::zeros(0, 0)),
        }
    }

    /// Odd action of `e_e` from degree `j` to `j + 1`.
    pub fn odd_at(&self, j: i64, e: usize) -> Cow<'_, Matrix> {
        match self.index(j) {
            Some(d) => Cow::Borrowed(&self.odd[d][e]),
            None => Cow::Owned(Matrix::zeros(self.dim_at(j + 1), 0)),
        }
    }

    pub fn rho0_raw(&self) -> &[Vec<Matrix>] {
        &self.rho0
    }

    pub fn odd_raw(&self) -> &[Vec<Matrix>] {
        &self.odd
    }

    /// Offset of degree `j` in the ungraded total space `⊕_j V^j`.
    pub fn offset(&self, j: i64) -> usize {
        match self.index(j) {
            Some(d) => self.dims[..d].iter().sum(),
            None if j < self.lo => 0,
            None => self.total_dim(),
        }
    }

    /// Action of `e` on the total space, as one square matrix.
    pub fn total_odd(&self, e: usize) -> Matrix {
        let n = self.total_dim();
        let mut m = Matrix::zeros(n, n);
        for j in self.lo..self.hi() {
            m.set_block(self.offset(j + 1), self.offset(j), &self.odd_at(j, e));
        }
        m
    }

    /// Action of `sum_e c_e e_e` on the total space.
    pub fn total_odd_at(&self, coords: &[Scalar]) -> Matrix {
        let n = self.total_dim();
        let mut m = Matrix::zeros(n, n);
        for j in self.lo..self.hi() {
            m.set_block(self.offset(j + 1), self.offset(j), &self.odd_combination(j, coords));
        }
        m
    }

    /// `sum_e c_e a_e^j`.
    pub fn odd_combination(&self, j: i64, coords: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim_at(j + 1), self.dim_at(j));
        for (e, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled(c, &self.odd_at(j, e));
            }
        }
        m
    }

    pub fn total_even(&self, i: usize) -> Matrix {
        let parts: Vec<&Matrix> = self.rho0.iter().map(|r| &r[i]).collect();
        Matrix::block_diag(&parts)
    }

    /// Degree `j` as a `g0`-module.
    pub fn piece(&self, j: i64) -> G0Module {
        let dim = self.dim_at(j);
        let rho = (0..self.alg.dim0()).map(|i| self.rho0_at(j, i).into_owned()).collect();
        G0Module { alg: self.alg.clone(), dim, rho }
    }

    /// The whole module restricted to `g0`, forgetting the grading.
    pub fn underlying_g0(&self) -> G0Module {
        let rho = (0..self.alg.dim0()).map(|i| self.total_even(i)).collect();
        G0Module { alg: self.alg.clone(), dim: self.total_dim(), rho }
    }

    /// Same data with the window trimmed to the smallest range containing
    /// all nonzero degrees.
    pub fn trimmed(&self) -> GradedModule {
        let first = self.dims.iter().position(|&d| d > 0);
        let Some(first) = first else {
            return GradedModule::zero(self.alg.clone(), self.lo);
        };
        let last = self.dims.iter().rposition(|&d| d > 0).unwrap();
        GradedModule::new_unchecked(
            self.alg.clone(),
            self.lo + first as i64,
            self.dims[first..=last].to_vec(),
            self.rho0[first..=last].to_vec(),
            self.odd[first..=last].to_vec(),
        )
    }
}

/// A degree-preserving `g`-module homomorphism. `comps[d]` is the component
/// on degree `source.lo() + d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedMap {
    source: GradedModule,
    target: GradedModule,
    comps: Vec<Matrix>,
}

impl GradedMap {
    pub fn new(source: GradedModule, target: GradedModule, comps: Vec<Matrix>) -> Result<Self> {
        let f = GradedMap::new_unchecked(source, target, comps)?;
        f.check_commutes()?;
        Ok(f)
    }

    /// Checks shapes but not equivariance.
    pub fn new_unchecked(source: GradedModule, target: GradedModule, comps: Vec<Matrix>) -> Result<Self> {
        if source.alg() != target.alg() {
            return Err(Error::AlgebraMismatch);
        }
        if comps.len() != source.dims().len() {
            return Err(Error::Shape(format!(
                "{} components for a source with {} degrees",
                comps.len(),
                source.dims().len()
            )));
        }
        for (d, c) in comps.iter().enumerate() {
            let j = source.lo() + d as i64;
            let want = (target.dim_at(j), source.dim_at(j));
            if c.shape() != want {
                return Err(Error::Shape(format!("component in degree {j} is {:?}, expected {want:?}", c.shape())));
            }
        }
        Ok(GradedMap { source, target, comps })
    }

    pub fn zero(source: &GradedModule, target: &GradedModule) -> Result<Self> {
        let comps = source.degrees().map(|j| Matrix::zeros(target.dim_at(j), source.dim_at(j))).collect();
        GradedMap::new_unchecked(source.clone(), target.clone(), comps)
    }

    pub fn identity(v: &GradedModule) -> Self {
        let comps = v.dims().iter().map(|&d| Matrix::identity(d)).collect();
        GradedMap { source: v.clone(), target: v.clone(), comps }
    }

    pub fn source(&self) -> &GradedModule {
        &self.source
    }

    pub fn target(&self) -> &GradedModule {
        &self.target
    }

    pub fn comps(&self) -> &[Matrix] {
        &self.comps
    }

    /// Component on degree `j` (zero-sized outside the source window).
    pub fn comp(&self, j: i64) -> Cow<'_, Matrix> {
        if j >= self.source.lo() && j <= self.source.hi() {
            Cow::Borrowed(&self.comps[(j - self.source.lo()) as usize])
        } else {
            Cow::Owned(Matrix::zeros(self.target.dim_at(j), 0))
        }
    }

    pub fn check_commutes(&self) -> Result<()> {
        let (v, w) = (&self.source, &self.target);
        for j in v.degrees() {
            let f = self.comp(j);
            for i in 0..v.alg().dim0() {
                if &*w.rho0_at(j, i) * &*f != &*f * &*v.rho0_at(j, i) {
                    return Err(Error::Invariant(format!("map does not commute with x_{i} in degree {j}")));
                }
            }
        }
        for j in (v.lo() - 1)..=v.hi() {
            for e in 0..v.n_odd() {
                if &*w.odd_at(j, e) * &*self.comp(j) != &*self.comp(j + 1) * &*v.odd_at(j, e) {
                    return Err(Error::Invariant(format!("map does not commute with e_{e} in degree {j}")));
                }
            }
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &GradedMap) -> Result<GradedMap> {
        if inner.target != self.source {
            return Err(Error::Shape("composition of maps whose modules do not match".into()));
        }
        let comps = inner.source.degrees().map(|j| &*self.comp(j) * &*inner.comp(j)).collect();
        GradedMap::new_unchecked(inner.source.clone(), self.target.clone(), comps)
    }

    fn zip_with(&self, other: &GradedMap, f: impl Fn(&Matrix, &Matrix) -> Matrix) -> Result<GradedMap> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Shape("maps have different source or target".into()));
        }
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| f(a, b)).collect();
        Ok(GradedMap { source: self.source.clone(), target: self.target.clone(), comps })
    }

    pub fn add(&self, other: &GradedMap) -> Result<GradedMap> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &GradedMap) -> Result<GradedMap> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> GradedMap {
        GradedMap {
            source: self.source.clone(),
            target: self.target.clone(),
            comps: self.comps.iter().map(|m| m.scale(c)).collect(),
        }
    }

    /// The map on total spaces, block diagonal by degree.
    pub fn total(&self) -> Matrix {
        let mut m = Matrix::zeros(self.target.total_dim(), self.source.total_dim());
        for j in self.source.degrees() {
            if self.target.dim_at(j) > 0 {
                m.set_block(self.target.offset(j), self.source.offset(j), &self.comp(j));
            }
        }
        m
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.degrees().chain(self.target.degrees()).all(|j| {
            let c = self.comp(j);
            self.source.dim_at(j) == self.target.dim_at(j) && c.rank() == self.source.dim_at(j)
        })
    }
}
