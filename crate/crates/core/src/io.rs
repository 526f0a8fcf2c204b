//! JSON documents for algebras, modules, maps, complexes and `g0`-modules.
//!
//! Rationals are written as `"p/q"` strings (integers may also be bare
//! numbers). Matrices are either nested row arrays or the sparse form
//! `{"rows": r, "cols": c, "entries": [[i, j, value], ...]}`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::corpus;
use crate::error::{Error, Result};
use crate::graded::{G0Module, GradedMap, GradedModule};
use crate::linalg::scalar::serde_scalar;
use crate::linalg::{Matrix, Scalar};
use crate::rigid::RigidComplex;
use crate::superalg::{LieAlgebraEven, OddBracketForm, OddPart, SuperAlgebra};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rat(#[serde(with = "serde_scalar")] pub Scalar);

/// An algebra: a built-in name, `{"builtin": name}`, or explicit data.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraDoc {
    Name(String),
    Builtin { builtin: String },
    Explicit(AlgebraData),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraData {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim0: usize,
    /// `[i, j, k, c]`: `[x_i, x_j]` has coefficient `c` on `x_k`.
    #[serde(default)]
    pub bracket: Vec<(usize, usize, usize, Rat)>,
    pub dim1: usize,
    #[serde(default)]
    pub action: Vec<Matrix>,
    /// `[j, k, i, c]`: `[e_j, e_k]` has coefficient `c` on `x_i`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub odd_bracket: Option<Vec<(usize, usize, usize, Rat)>>,
}

impl AlgebraDoc {
    pub fn from_algebra(alg: &SuperAlgebra) -> Self {
        if let Some(name) = &alg.name {
            if SuperAlgebra::builtin(name).is_ok_and(|b| &b == alg) {
                return AlgebraDoc::Builtin { builtin: name.clone() };
            }
        }
        let bracket = alg.even().triples().into_iter().map(|(i, j, k, c)| (i, j, k, Rat(c))).collect();
        let odd_bracket =
            alg.odd_bracket().map(|b| b.triples().into_iter().map(|(j, k, i, c)| (j, k, i, Rat(c))).collect());
        AlgebraDoc::Explicit(AlgebraData {
            name: alg.name.clone(),
            dim0: alg.dim0(),
            bracket,
            dim1: alg.dim1(),
            action: alg.odd().actions().to_vec(),
            odd_bracket,
        })
    }

    /// Builds and validates the algebra. Names resolve to built-ins first,
    /// then to corpus algebras.
    pub fn resolve(&self) -> Result<Arc<SuperAlgebra>> {
        match self {
            AlgebraDoc::Explicit(_) => Ok(Arc::new(self.build()?.validated()?)),
            _ => self.build().map(Arc::new),
        }
    }

    /// Builds the algebra checking shapes only.
    pub fn build(&self) -> Result<SuperAlgebra> {
        match self {
            AlgebraDoc::Name(name) | AlgebraDoc::Builtin { builtin: name } => Ok((*corpus::algebra(name)?).clone()),
            AlgebraDoc::Explicit(d) => {
                let even = LieAlgebraEven::from_triples(d.dim0, d.bracket.iter().map(|(i, j, k, c)| (*i, *j, *k, c.0.clone())))?;
                let action = if d.action.is_empty() && d.dim0 == 0 { Vec::new() } else { d.action.clone() };
                let odd = OddPart::new(d.dim1, action)?;
                let mut alg = SuperAlgebra::new(even, odd)?;
                if let Some(ob) = &d.odd_bracket {
                    let form = OddBracketForm::from_triples(d.dim1, d.dim0, ob.iter().map(|(j, k, i, c)| (*j, *k, *i, c.0.clone())))?;
                    alg = alg.with_odd_bracket(form)?;
                }
                if let Some(n) = &d.name {
                    alg = alg.named(n.clone());
                }
                Ok(alg)
            }
        }
    }
}

/// Graded module data; `rho0[d]` and `odd[d]` refer to degree `lo + d`.
/// `rho0` may be omitted when `dim g0 = 0`; the odd matrices leaving the top
/// degree may be omitted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleDoc {
    pub algebra: AlgebraDoc,
    pub lo: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hi: Option<i64>,
    pub dims: Vec<usize>,
    #[serde(default)]
    pub rho0: Vec<Vec<Matrix>>,
    #[serde(default)]
    pub odd: Vec<Vec<Matrix>>,
}

type PerDegree = Vec<Vec<Matrix>>;

fn fill_window(
    alg: &SuperAlgebra,
    lo: i64,
    hi: Option<i64>,
    dims: &[usize],
    rho0: &[Vec<Matrix>],
    odd: &[Vec<Matrix>],
) -> Result<(PerDegree, PerDegree)> {
    let n = dims.len();
    if let Some(hi) = hi {
        if hi - lo + 1 != n as i64 {
            return Err(Error::Shape(format!("window [{lo}, {hi}] does not match {n} dims")));
        }
    }
    let rho0 = if rho0.is_empty() && alg.dim0() == 0 { vec![Vec::new(); n] } else { rho0.to_vec() };
    let mut odd = odd.to_vec();
    if odd.is_empty() && alg.dim1() == 0 {
        odd = vec![Vec::new(); n];
    }
    if n > 0 && odd.len() + 1 == n {
        odd.push(vec![Matrix::zeros(0, dims[n - 1]); alg.dim1()]);
    }
    Ok((rho0, odd))
}

impl ModuleDoc {
    pub fn from_module(m: &GradedModule) -> Self {
        ModuleDoc {
            algebra: AlgebraDoc::from_algebra(m.alg()),
            lo: m.lo(),
            hi: Some(m.hi()),
            dims: m.dims().to_vec(),
            rho0: m.rho0_raw().to_vec(),
            odd: m.odd_raw().to_vec(),
        }
    }

    pub fn resolve(&self) -> Result<GradedModule> {
        let alg = self.algebra.resolve()?;
        let (rho0, odd) = fill_window(&alg, self.lo, self.hi, &self.dims, &self.rho0, &self.odd)?;
        GradedModule::new(alg, self.lo, self.dims.clone(), rho0, odd)
    }
}

/// A module given inline or by corpus name.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModuleRef {
    Name(String),
    Inline(Box<ModuleDoc>),
}

impl ModuleRef {
    pub fn resolve(&self) -> Result<GradedModule> {
        match self {
            ModuleRef::Name(name) => corpus::module(name),
            ModuleRef::Inline(doc) => doc.resolve(),
        }
    }
}

/// A graded map: one matrix per degree of the source window.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapDoc {
    pub source: ModuleRef,
    pub target: ModuleRef,
    pub comps: Vec<Matrix>,
}

impl MapDoc {
    pub fn from_map(f: &GradedMap) -> Self {
        MapDoc {
            source: ModuleRef::Inline(Box::new(ModuleDoc::from_module(f.source()))),
            target: ModuleRef::Inline(Box::new(ModuleDoc::from_module(f.target()))),
            comps: f.comps().to_vec(),
        }
    }

    pub fn resolve(&self) -> Result<GradedMap> {
        let (v, w) = (self.source.resolve()?, self.target.resolve()?);
        if v.alg() != w.alg() {
            return Err(Error::AlgebraMismatch);
        }
        GradedMap::new(v, w, self.comps.clone())
    }
}

/// A rigid complex: `diff[d][e]` is the coefficient of `t_e` in the
/// differential leaving degree `lo + d`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub algebra: AlgebraDoc,
    pub lo: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hi: Option<i64>,
    pub dims: Vec<usize>,
    #[serde(default)]
    pub rho0: Vec<Vec<Matrix>>,
    #[serde(default)]
    pub diff: Vec<Vec<Matrix>>,
}

impl ComplexDoc {
    pub fn from_complex(c: &RigidComplex) -> Self {
        ComplexDoc {
            algebra: AlgebraDoc::from_algebra(c.alg()),
            lo: c.lo(),
            hi: Some(c.hi()),
            dims: c.dims().to_vec(),
            rho0: c.rho0_raw().to_vec(),
            diff: c.diff_raw().to_vec(),
        }
    }

    pub fn resolve(&self) -> Result<RigidComplex> {
        let alg = self.algebra.resolve()?;
        let (rho0, diff) = fill_window(&alg, self.lo, self.hi, &self.dims, &self.rho0, &self.diff)?;
        RigidComplex::new(alg, self.lo, self.dims.clone(), rho0, diff)
    }
}

/// A `g0`-module, one matrix per even basis element.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QDoc {
    pub algebra: AlgebraDoc,
    pub dim: usize,
    #[serde(default)]
    pub rho: Vec<Matrix>,
}

impl QDoc {
    pub fn from_g0(q: &G0Module) -> Self {
        QDoc { algebra: AlgebraDoc::from_algebra(q.alg()), dim: q.dim(), rho: q.rhos().to_vec() }
    }

    pub fn resolve(&self) -> Result<G0Module> {
        let alg = self.algebra.resolve()?;
        let rho = if self.rho.is_empty() && alg.dim0() == 0 { Vec::new() } else { self.rho.clone() };
        G0Module::new(alg, self.dim, rho)
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

pub fn parse_algebra(text: &str) -> Result<Arc<SuperAlgebra>> {
    parse_json::<AlgebraDoc>(text, "algebra")?.resolve()
}

pub fn parse_module(text: &str) -> Result<GradedModule> {
    parse_json::<ModuleRef>(text, "module")?.resolve()
}

pub fn parse_map(text: &str) -> Result<GradedMap> {
    parse_json::<MapDoc>(text, "map")?.resolve()
}

pub fn parse_complex(text: &str) -> Result<RigidComplex> {
    parse_json::<ComplexDoc>(text, "complex")?.resolve()
}

pub fn parse_q(text: &str) -> Result<G0Module> {
    parse_json::<QDoc>(text, "g0-module")?.resolve()
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::induced_module;

    #[test]
    fn module_roundtrip() {
        let alg = Arc::new(SuperAlgebra::sl2_trivial(1));
        let v = induced_module(&G0Module::adjoint(alg), 1);
        let text = to_json(&ModuleDoc::from_module(&v));
        assert!(text.contains("\"builtin\": \"sl2_trivial(1)\""));
        assert_eq!(parse_module(&text).unwrap(), v);
    }

    #[test]
    fn explicit_algebra_and_sparse_module() {
        let text = r#"{
            "algebra": {"dim0": 0, "dim1": 1},
            "lo": 0,
            "dims": [1, 1],
            "odd": [[{"rows": 1, "cols": 1, "entries": [[0, 0, 1]]}]]
        }"#;
        let v = parse_module(text).unwrap();
        assert_eq!(v.dims(), &[1, 1]);
        assert_eq!(v.odd_at(0, 0).get(0, 0), &crate::linalg::scalar::int(1));
    }

    #[test]
    fn explicit_algebra_roundtrip() {
        let alg = SuperAlgebra::new(LieAlgebraEven::sl2(), OddPart::new(2, crate::superalg::sl2_natural()).unwrap()).unwrap();
        let text = to_json(&AlgebraDoc::from_algebra(&alg));
        assert_eq!(*parse_algebra(&text).unwrap(), alg);
    }

    #[test]
    fn map_and_q_roundtrip() {
        let alg = Arc::new(SuperAlgebra::grassmann(2));
        let v = induced_module(&G0Module::trivial(alg.clone(), 1), 0);
        let id = GradedMap::identity(&v);
        assert_eq!(parse_map(&to_json(&MapDoc::from_map(&id))).unwrap(), id);
        let q = G0Module::adjoint(Arc::new(SuperAlgebra::sl2_adjoint()));
        assert_eq!(parse_q(&to_json(&QDoc::from_g0(&q))).unwrap(), q);
    }

    #[test]
    fn rejects_invalid_data() {
        let text = r#"{"algebra": "grassmann(1)", "lo": 0, "dims": [1, 1], "odd": [[[[2]]]], "hi": 3}"#;
        assert!(matches!(parse_module(text), Err(Error::Shape(_))));
        assert!(matches!(parse_module("{"), Err(Error::Parse(_))));
    }
}
