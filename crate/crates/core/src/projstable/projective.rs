use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{free_cover, GradedMap, GradedModule, MapSpace};
use crate::linalg::{Matrix, Scalar};

use super::require_semisimple;

fn flat(f: &GradedMap) -> Vec<Scalar> {
    f.comps().iter().flat_map(|m| m.data().iter().cloned()).collect()
}

/// Result of the projectivity test. When projective, `section` holds the
/// components of a `g`-map `σ : V -> Ind(V)` with `ε σ = id`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectivityResult {
    pub projective: bool,
    pub cover_dims: Vec<(i64, usize)>,
    pub section: Option<Vec<(i64, Matrix)>>,
}

/// Lifts `h : V -> W` along the free cover `ε : Ind(W) -> W`.
fn lift_through_cover(h: &GradedMap) -> Result<(GradedMap, Option<GradedMap>)> {
    let eps = free_cover(h.target())?;
    let space = MapSpace::new(h.source(), eps.source())?;
    let lift = space.solve(|l| flat(&eps.after(l).expect("maps compose")), &flat(h))?;
    Ok((eps, lift))
}

fn certificate(f: &GradedMap) -> Vec<(i64, Matrix)> {
    f.source().degrees().map(|j| (j, f.comp(j).into_owned())).collect()
}

/// `V` is projective iff the identity lifts along `Ind(V|g0) -> V`.
pub fn is_projective(v: &GradedModule) -> Result<ProjectivityResult> {
    require_semisimple(v.alg())?;
    let (eps, lift) = lift_through_cover(&GradedMap::identity(v))?;
    let cover = eps.source();
    let cover_dims = cover.degrees().map(|j| (j, cover.dim_at(j))).collect();
    Ok(ProjectivityResult { projective: lift.is_some(), cover_dims, section: lift.as_ref().map(certificate) })
}

/// Result of the stable equality test. When equal, `lift` holds a `g`-map
/// `ℓ : V -> Ind(W)` with `ε ℓ = f - g`, so `f - g` factors through a
/// projective.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableResult {
    pub stably_equal: bool,
    pub difference_is_zero: bool,
    pub lift: Option<Vec<(i64, Matrix)>>,
}

pub fn stable_equal(f: &GradedMap, g: &GradedMap) -> Result<StableResult> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::Shape("maps have different source or target".into()));
    }
    require_semisimple(f.source().alg())?;
    let h = f.sub(g)?;
    let (_, lift) = lift_through_cover(&h)?;
    Ok(StableResult {
        stably_equal: lift.is_some(),
        difference_is_zero: h.is_zero(),
        lift: lift.as_ref().map(certificate),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{direct_sum, induced_module, G0Module};
    use crate::superalg::SuperAlgebra;
    use std::sync::Arc;

    #[test]
    fn induced_modules_are_projective() {
        let alg = Arc::new(SuperAlgebra::grassmann(2));
        let v = induced_module(&G0Module::trivial(alg.clone(), 1), 0);
        let r = is_projective(&v).unwrap();
        assert!(r.projective);
        // The certificate is a genuine section.
        let eps = free_cover(&v).unwrap();
        let comps: Vec<Matrix> = r.section.unwrap().into_iter().map(|(_, m)| m).collect();
        let sigma = GradedMap::new(v.clone(), eps.source().clone(), comps).unwrap();
        assert_eq!(eps.after(&sigma).unwrap(), GradedMap::identity(&v));
    }

    #[test]
    fn trivial_and_mixed_are_not_projective() {
        let alg = Arc::new(SuperAlgebra::grassmann(2));
        let k = GradedModule::trivial(alg.clone(), 0);
        assert!(!is_projective(&k).unwrap().projective);
        let v = induced_module(&G0Module::trivial(alg.clone(), 1), 0);
        let sum = direct_sum(&[&v, &k]).unwrap();
        assert!(!is_projective(&sum).unwrap().projective);
    }

    #[test]
    fn identity_of_trivial_is_not_stably_zero() {
        let alg = Arc::new(SuperAlgebra::grassmann(1));
        let k = GradedModule::trivial(alg, 0);
        let id = GradedMap::identity(&k);
        let zero = GradedMap::zero(&k, &k).unwrap();
        assert!(stable_equal(&id, &id).unwrap().stably_equal);
        let r = stable_equal(&id, &zero).unwrap();
        assert!(!r.stably_equal && !r.difference_is_zero);
    }

    #[test]
    fn maps_through_induced_are_stably_zero() {
        // k(1) -> Λ(k) -> k(1)... the socle inclusion followed by the top projection.
        let alg = Arc::new(SuperAlgebra::grassmann(1));
        let v = induced_module(&G0Module::trivial(alg.clone(), 1), 0);
        let top = GradedModule::trivial(alg.clone(), 1);
        let incl = GradedMap::new(top.clone(), v.clone(), vec![Matrix::identity(1)]).unwrap();
        let r = stable_equal(&GradedMap::identity(&v), &GradedMap::zero(&v, &v).unwrap()).unwrap();
        assert!(r.stably_equal);
        let r = stable_equal(&incl, &GradedMap::zero(&top, &v).unwrap()).unwrap();
        assert!(r.stably_equal);
    }
}
