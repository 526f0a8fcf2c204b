//! Named golden inputs: algebras, modules, maps, `g0`-modules and parameter
//! sets, each validated on construction.

use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{
    direct_sum, hom_graded, induced_module, sum_inclusion, sum_projection, truncate_above, truncate_below, G0Module,
    GradedMap, GradedModule,
};
use crate::io::{AlgebraDoc, MapDoc, ModuleDoc, QDoc};
use crate::superalg::{sl2_natural, SuperAlgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tag {
    /// A module of the form `Λ(g1) ⊗ Q`.
    Induced,
    /// A map built as a composite through an induced module.
    FactorsThroughInduced,
    /// A map into a reduced module with nonzero fibers, not stably zero.
    NotStablyZero,
}

/// Parameters of a non-fullness computation.
#[derive(Clone, Debug)]
pub struct NonfullnessParams {
    pub v: G0Module,
    pub w: G0Module,
    pub i: i64,
    pub j: i64,
    pub n: usize,
}

#[derive(Clone, Debug)]
pub enum CorpusItem {
    Algebra(Arc<SuperAlgebra>),
    Module(GradedModule),
    Map(GradedMap),
    Q(G0Module),
    Nonfullness(NonfullnessParams),
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub item: CorpusItem,
    pub tags: Vec<Tag>,
}

impl CorpusEntry {
    pub fn kind(&self) -> &'static str {
        match self.item {
            CorpusItem::Algebra(_) => "algebra",
            CorpusItem::Module(_) => "module",
            CorpusItem::Map(_) => "map",
            CorpusItem::Q(_) => "g0-module",
            CorpusItem::Nonfullness(_) => "nonfullness-params",
        }
    }

    pub fn has(&self, tag: Tag) -> bool {
        self.tags.contains(&tag)
    }

    /// The entry as a JSON document in the input format of its kind.
    pub fn to_json(&self) -> serde_json::Value {
        let value = match &self.item {
            CorpusItem::Algebra(a) => serde_json::to_value(AlgebraDoc::from_algebra(a)),
            CorpusItem::Module(m) => serde_json::to_value(ModuleDoc::from_module(m)),
            CorpusItem::Map(f) => serde_json::to_value(MapDoc::from_map(f)),
            CorpusItem::Q(q) => serde_json::to_value(QDoc::from_g0(q)),
            CorpusItem::Nonfullness(p) => Ok(serde_json::json!({
                "algebra": AlgebraDoc::from_algebra(p.v.alg()),
                "v": QDoc::from_g0(&p.v),
                "w": QDoc::from_g0(&p.w),
                "i": p.i,
                "j": p.j,
                "n": p.n,
            })),
        };
        value.expect("documents serialize")
    }
}

const ALGEBRAS: &[(&str, &str)] = &[
    ("grassmann1", "grassmann(1)"),
    ("grassmann2", "grassmann(2)"),
    ("grassmann3", "grassmann(3)"),
    ("sl2_trivial1", "sl2_trivial(1)"),
    ("sl2_trivial2", "sl2_trivial(2)"),
    ("sl2_trivial3", "sl2_trivial(3)"),
    ("sl2_adjoint", "sl2_adjoint"),
    ("sl2_natural1", "sl2_natural_sum(1)"),
    ("sl2_natural2", "sl2_natural_sum(2)"),
];

/// Resolves a built-in name such as `"sl2_trivial(2)"` or a corpus alias
/// such as `"sl2_trivial2"`.
pub fn algebra(name: &str) -> Result<Arc<SuperAlgebra>> {
    let name = name.trim();
    if let Ok(a) = SuperAlgebra::builtin(name) {
        return Ok(Arc::new(a));
    }
    match ALGEBRAS.iter().find(|(alias, _)| *alias == name) {
        Some((_, builtin)) => Ok(Arc::new(SuperAlgebra::builtin(builtin)?)),
        None => Err(Error::Parse(format!("unknown algebra {name:?}"))),
    }
}

fn alg(name: &str) -> Arc<SuperAlgebra> {
    algebra(name).expect("corpus algebra")
}

fn natural(a: &Arc<SuperAlgebra>) -> G0Module {
    G0Module::new(a.clone(), 2, sl2_natural()).expect("natural sl2-module")
}

fn build() -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    let mut push = |name: &str, item: CorpusItem, tags: &[Tag]| {
        out.push(CorpusEntry { name: name.to_string(), item, tags: tags.to_vec() })
    };
    use CorpusItem::{Map, Module, Nonfullness, Q};
    use Tag::*;

    for (alias, _) in ALGEBRAS {
        push(alias, CorpusItem::Algebra(alg(alias)), &[]);
    }

    let g1 = alg("grassmann1");
    let g1_k = GradedModule::trivial(g1.clone(), 0);
    push("grassmann1_free", Module(induced_module(&G0Module::trivial(g1.clone(), 1), 0)), &[Induced]);
    push("grassmann1_trivial", Module(g1_k.clone()), &[]);
    push("id_k", Map(GradedMap::identity(&g1_k)), &[NotStablyZero]);
    push("zero_k", Map(GradedMap::zero(&g1_k, &g1_k)?), &[]);

    let g2 = alg("grassmann2");
    let g2_q = G0Module::trivial(g2.clone(), 1);
    let g2_free = induced_module(&g2_q, 0);
    let g2_k = GradedModule::trivial(g2.clone(), 0);
    let g2_k2 = GradedModule::trivial(g2.clone(), 2);
    let g2_sum = direct_sum(&[&g2_free, &g2_k])?;
    let g2_trunc = truncate_above(&g2_free, 1);
    let g2_shifted = induced_module(&g2_q, -1);
    push("grassmann2_free", Module(g2_free.clone()), &[Induced]);
    push("grassmann2_free_rank2", Module(direct_sum(&[&g2_free, &g2_shifted])?), &[Induced]);
    push("grassmann2_trivial0", Module(g2_k.clone()), &[]);
    push("grassmann2_trivial1", Module(GradedModule::trivial(g2.clone(), 1)), &[]);
    push("grassmann2_trivial_m2", Module(GradedModule::trivial(g2.clone(), -2)), &[]);
    push("grassmann2_free_plus_trivial", Module(g2_sum.clone()), &[]);
    push("grassmann2_trunc", Module(g2_trunc.clone()), &[]);
    push("grassmann2_top", Module(truncate_below(&g2_free, 1)), &[]);
    push("q_k_grassmann2", Q(g2_q.clone()), &[]);

    let parts = [&g2_free, &g2_k];
    let incl_free = sum_inclusion(&parts, 0, &g2_sum)?;
    let proj_free = sum_projection(&parts, 0, &g2_sum)?;
    let proj_k = sum_projection(&parts, 1, &g2_sum)?;
    push("grassmann2_free_id", Map(GradedMap::identity(&g2_free)), &[FactorsThroughInduced]);
    push("grassmann2_free_idempotent", Map(incl_free.after(&proj_free)?), &[FactorsThroughInduced]);
    let socle = hom_graded(&g2_k2, &g2_free)?.remove(0);
    push("grassmann2_socle_incl", Map(socle.clone()), &[FactorsThroughInduced]);
    let mult = hom_graded(&g2_free, &g2_shifted)?.remove(0);
    push("grassmann2_free_mult", Map(mult), &[FactorsThroughInduced]);
    let through = incl_free.after(&socle)?;
    push("grassmann2_socle_into_sum", Map(through), &[FactorsThroughInduced]);
    push("grassmann2_proj_k", Map(proj_k), &[NotStablyZero]);
    push("grassmann2_trunc_id", Map(GradedMap::identity(&g2_trunc)), &[NotStablyZero]);
    let to_k = hom_graded(&g2_trunc, &g2_k)?.remove(0);
    push("grassmann2_trunc_to_k", Map(to_k), &[NotStablyZero]);

    let g3 = alg("grassmann3");
    let g3_q = G0Module::trivial(g3.clone(), 1);
    push("grassmann3_free", Module(induced_module(&g3_q, 0)), &[Induced]);
    push("grassmann3_trivial", Module(GradedModule::trivial(g3.clone(), 0)), &[]);
    push("q_k_grassmann3", Q(g3_q), &[]);

    let s1 = alg("sl2_trivial1");
    let s1_adj = G0Module::adjoint(s1.clone());
    let s1_free = induced_module(&s1_adj, 0);
    let s1_k = GradedModule::trivial(s1.clone(), 1);
    let s1_mixed = direct_sum(&[&s1_free, &s1_k])?;
    push("sl2_triv1_free_adj", Module(s1_free.clone()), &[Induced]);
    push("sl2_triv1_trivial", Module(s1_k.clone()), &[]);
    push("sl2_triv1_mixed", Module(s1_mixed.clone()), &[]);
    push("q_adj_sl2_triv1", Q(s1_adj), &[]);
    let parts = [&s1_free, &s1_k];
    let incl = sum_inclusion(&parts, 0, &s1_mixed)?;
    let proj = sum_projection(&parts, 0, &s1_mixed)?;
    push("sl2_triv1_through_free", Map(incl.after(&proj)?), &[FactorsThroughInduced]);
    push("sl2_triv1_id_k", Map(GradedMap::identity(&s1_k)), &[NotStablyZero]);
    push("sl2_triv1_proj_k", Map(sum_projection(&parts, 1, &s1_mixed)?), &[NotStablyZero]);
    let k = G0Module::trivial(s1.clone(), 1);
    push(
        "sl2_triv1_nonfullness",
        Nonfullness(NonfullnessParams { v: k.clone(), w: k, i: 3, j: 0, n: 1 }),
        &[],
    );

    let s2 = alg("sl2_trivial2");
    let s2_nat = natural(&s2);
    let s2_free = induced_module(&s2_nat, 0);
    push("sl2_triv2_free_nat", Module(s2_free.clone()), &[Induced]);
    push("sl2_triv2_trunc_nat", Module(truncate_above(&s2_free, 1)), &[]);
    push("q_nat_sl2_triv2", Q(s2_nat), &[]);
    push("q_adj_sl2_triv2", Q(G0Module::adjoint(s2.clone())), &[]);

    let s3 = alg("sl2_trivial3");
    push("sl2_triv3_free", Module(induced_module(&G0Module::trivial(s3.clone(), 1), 0)), &[Induced]);
    push("sl2_triv3_trivial", Module(GradedModule::trivial(s3.clone(), 0)), &[]);

    let sa = alg("sl2_adjoint");
    let sa_free = induced_module(&G0Module::trivial(sa.clone(), 1), 0);
    let sa_k = GradedModule::trivial(sa.clone(), 0);
    push("sl2_adjoint_free", Module(sa_free.clone()), &[Induced]);
    push("sl2_adjoint_trivial", Module(sa_k.clone()), &[]);
    push("sl2_adjoint_mixed", Module(direct_sum(&[&sa_free, &sa_k])?), &[]);
    push("sl2_adjoint_id_k", Map(GradedMap::identity(&sa_k)), &[NotStablyZero]);
    push("q_k_sl2_adjoint", Q(G0Module::trivial(sa.clone(), 1)), &[]);

    let sn = alg("sl2_natural1");
    let sn_free = induced_module(&G0Module::trivial(sn.clone(), 1), 0);
    push("sl2_natural_free", Module(sn_free.clone()), &[Induced]);
    push("sl2_natural_trivial", Module(GradedModule::trivial(sn.clone(), 0)), &[]);
    push("sl2_natural_trunc", Module(truncate_above(&sn_free, 1)), &[]);
    push("q_nat_sl2_natural1", Q(natural(&sn)), &[]);

    Ok(out)
}

/// Every corpus entry, built once.
pub fn corpus() -> &'static [CorpusEntry] {
    static CORPUS: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    CORPUS.get_or_init(|| build().expect("corpus entries are valid"))
}

pub fn entry(name: &str) -> Result<&'static CorpusEntry> {
    corpus().iter().find(|e| e.name == name).ok_or_else(|| Error::Parse(format!("no corpus entry {name:?}")))
}

fn wrong_kind(name: &str, want: &str) -> Error {
    Error::Parse(format!("corpus entry {name:?} is not a {want}"))
}

pub fn module(name: &str) -> Result<GradedModule> {
    match &entry(name)?.item {
        CorpusItem::Module(m) => Ok(m.clone()),
        _ => Err(wrong_kind(name, "module")),
    }
}

pub fn map(name: &str) -> Result<GradedMap> {
    match &entry(name)?.item {
        CorpusItem::Map(f) => Ok(f.clone()),
        _ => Err(wrong_kind(name, "map")),
    }
}

pub fn q(name: &str) -> Result<G0Module> {
    match &entry(name)?.item {
        CorpusItem::Q(q) => Ok(q.clone()),
        _ => Err(wrong_kind(name, "g0-module")),
    }
}

pub fn modules() -> impl Iterator<Item = (&'static CorpusEntry, &'static GradedModule)> {
    corpus().iter().filter_map(|e| match &e.item {
        CorpusItem::Module(m) => Some((e, m)),
        _ => None,
    })
}

pub fn maps() -> impl Iterator<Item = (&'static CorpusEntry, &'static GradedMap)> {
    corpus().iter().filter_map(|e| match &e.item {
        CorpusItem::Map(f) => Some((e, f)),
        _ => None,
    })
}

pub fn qs() -> impl Iterator<Item = (&'static CorpusEntry, &'static G0Module)> {
    corpus().iter().filter_map(|e| match &e.item {
        CorpusItem::Q(q) => Some((e, q)),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grassmann2_free_dims() {
        assert_eq!(module("grassmann2_free").unwrap().dims(), &[1, 2, 1]);
    }

    #[test]
    fn names_are_unique_and_kinds_resolve() {
        let mut names: Vec<&str> = corpus().iter().map(|e| e.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), corpus().len());
        assert!(module("id_k").is_err());
        assert!(map("id_k").is_ok());
        assert!(matches!(entry("sl2_triv1_nonfullness").unwrap().item, CorpusItem::Nonfullness(ref p) if p.i - p.j == 3 && p.n == 1));
    }

    #[test]
    fn every_entry_revalidates_from_json() {
        for e in corpus() {
            let text = e.to_json().to_string();
            match &e.item {
                CorpusItem::Algebra(a) => assert_eq!(*crate::io::parse_algebra(&text).unwrap(), **a),
                CorpusItem::Module(m) => assert_eq!(&crate::io::parse_module(&text).unwrap(), m, "{}", e.name),
                CorpusItem::Map(f) => assert_eq!(&crate::io::parse_map(&text).unwrap(), f, "{}", e.name),
                CorpusItem::Q(q) => assert_eq!(&crate::io::parse_q(&text).unwrap(), q),
                CorpusItem::Nonfullness(_) => {}
            }
        }
    }
}
