use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{evaluation_from_pieces, kernel, G0Module, GradedMap, GradedModule, MapSpace};
use crate::linalg::scalar;
use crate::linalg::{Matrix, Scalar};

use super::{is_reduced, require_semisimple, top_operator};

/// `V ≅ Ind(Q) ⊕ M` with `Q` a graded `g0`-complement of `K = ker E` and `M`
/// reduced.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Basis of `K^j` per degree of `V`.
    pub k_basis: Vec<Matrix>,
    /// Basis of the complement `Q^j` per degree of `V`.
    pub q_basis: Vec<Matrix>,
    /// `Q^j` with its `g0`-action, for every degree where it is nonzero.
    pub q_pieces: Vec<(i64, G0Module)>,
    pub induced_part: GradedModule,
    pub induced_embedding: GradedMap,
    pub reduced_part: GradedModule,
    pub reduced_embedding: GradedMap,
    /// A `g`-map `V -> induced_part` left inverse to the embedding.
    pub projector: GradedMap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionCheck {
    pub dim_v: usize,
    pub dim_q: usize,
    pub dim_m: usize,
    pub dimension_formula: bool,
    pub reduced_part_is_reduced: bool,
    pub projector_splits: bool,
    pub parts_span: bool,
    pub passed: bool,
}

impl Decomposition {
    pub fn dim_q(&self) -> usize {
        self.q_basis.iter().map(Matrix::cols).sum()
    }

    /// Re-verifies every claimed property from the stored data.
    pub fn check(&self, v: &GradedModule) -> Result<DecompositionCheck> {
        let n = v.n_odd() as u32;
        let dim_v = v.total_dim();
        let dim_q = self.dim_q();
        let dim_m = self.reduced_part.total_dim();
        let dimension_formula = dim_v == (1usize << n) * dim_q + dim_m;
        let reduced_part_is_reduced = self.reduced_part.total_dim() == 0 || is_reduced(&self.reduced_part)?;
        self.induced_embedding.check_commutes()?;
        self.reduced_embedding.check_commutes()?;
        self.projector.check_commutes()?;
        let split = self.projector.after(&self.induced_embedding)?;
        let projector_splits = split == GradedMap::identity(&self.induced_part);
        let both = Matrix::hstack(&[&self.induced_embedding.total(), &self.reduced_embedding.total()])?;
        let parts_span = both.cols() == dim_v && both.rank() == dim_v;
        let passed = dimension_formula && reduced_part_is_reduced && projector_splits && parts_span;
        Ok(DecompositionCheck {
            dim_v,
            dim_q,
            dim_m,
            dimension_formula,
            reduced_part_is_reduced,
            projector_splits,
            parts_span,
            passed,
        })
    }
}

/// Quotient coordinates for `V^j / K^j`: standard complement columns `C`,
/// the projection `P` onto them along `K`.
fn quotient_coordinates(k: &Matrix) -> (Matrix, Matrix) {
    let n = k.rows();
    let cc = k.complement_coordinates();
    let mut c = Matrix::zeros(n, cc.len());
    for (t, &i) in cc.iter().enumerate() {
        c.set(i, t, scalar::one());
    }
    let t = Matrix::hstack(&[k, &c]).expect("same row count");
    let tinv = t.inverse().expect("K plus complement coordinates span V");
    let rows: Vec<usize> = (k.cols()..n).collect();
    (c, tinv.select_rows(&rows))
}

/// A `g0`-equivariant section `s` of `V^j -> V^j / K^j`: `P s = I` and
/// `rho(x) s = s rhobar(x)` for generators `x`.
fn equivariant_section(v: &GradedModule, j: i64, p: &Matrix, c: &Matrix) -> Result<(Matrix, Vec<Matrix>)> {
    let alg = v.alg();
    let (dim, q) = (v.dim_at(j), c.cols());
    let rhobar: Vec<Matrix> = (0..alg.dim0()).map(|x| &(p * &*v.rho0_at(j, x)) * c).collect();
    if q == 0 {
        return Ok((Matrix::zeros(dim, 0), rhobar));
    }
    let mut basis = Matrix::identity(dim * q);
    for x in alg.even().generating_indices() {
        let l = &*v.rho0_at(j, x);
        let r = &rhobar[x];
        let k = &l.kron(&Matrix::identity(q)) - &Matrix::identity(dim).kron(&r.transpose());
        basis = &basis * &(&k * &basis).nullspace();
    }
    let section = p.kron(&Matrix::identity(q));
    let target = Matrix::identity(q).into_data();
    let z = (&section * &basis)
        .solve_affine(&target)?
        .ok_or_else(|| Error::NoSection(format!("no g0-equivariant complement in degree {j}")))?;
    let s = Matrix::new(dim, q, basis.mul_vec(&z))?;
    Ok((s, rhobar))
}

pub fn decompose(v: &GradedModule) -> Result<Decomposition> {
    require_semisimple(v.alg())?;
    let e = top_operator(v)?;
    let k_basis = e.kernel_bases();

    let mut q_basis = Vec::new();
    let mut q_pieces = Vec::new();
    let mut eval_pieces = Vec::new();
    for (d, j) in v.degrees().enumerate() {
        let (c, p) = quotient_coordinates(&k_basis[d]);
        let (s, rhobar) = equivariant_section(v, j, &p, &c)?;
        if s.cols() > 0 {
            let q = G0Module::new(v.alg().clone(), s.cols(), rhobar)?;
            q_pieces.push((j, q.clone()));
            eval_pieces.push((q, j, s.clone()));
        }
        q_basis.push(s);
    }

    let ev = evaluation_from_pieces(v, &eval_pieces)?;
    for j in ev.source().degrees() {
        if ev.comp(j).rank() != ev.source().dim_at(j) {
            return Err(Error::Invariant(format!("evaluation from the induced part is not injective in degree {j}")));
        }
    }
    let induced = ev.source().clone();

    let space = MapSpace::new(v, &induced)?;
    let id = GradedMap::identity(&induced);
    let rhs: Vec<Scalar> = id.comps().iter().flat_map(|m| m.data().iter().cloned()).collect();
    let projector = space
        .solve(
            |f| {
                let comp = f.after(&ev).expect("maps compose");
                comp.comps().iter().flat_map(|m| m.data().iter().cloned()).collect()
            },
            &rhs,
        )?
        .ok_or_else(|| Error::NoSection("no g-equivariant projector onto the induced part".into()))?;

    let (reduced, incl) = kernel(&projector)?;
    Ok(Decomposition {
        k_basis,
        q_basis,
        q_pieces,
        induced_part: induced,
        induced_embedding: ev,
        reduced_part: reduced,
        reduced_embedding: incl,
        projector,
    })
}
