use serde_json::{json, Value};

use dsgeom::cohomology::{
    cech_line_bundle, chevalley_eilenberg, closed_form_h0, closed_form_top, ext_convention_notes, ext_twisted,
    koszul_odd, nonfullness_ext,
};
use dsgeom::corpus::{self, NonfullnessParams};
use dsgeom::dsvariety::{ds_at, in_variety, random_points, support_check, variety_ideal};
use dsgeom::graded::{dual, hom_graded, induced_module, shift, tensor, GradedMap, GradedModule};
use dsgeom::io::{ComplexDoc, ModuleDoc};
use dsgeom::linalg::Matrix;
use dsgeom::projstable::{decompose, frobenius_check, is_projective, stable_equal, top_operator};
use dsgeom::rigid::{fiber, fiber_cohomology, l_of, v_of, OddPoint, RigidComplex};

use crate::{load, Cli, CliError, Command, NonfullnessArgs, Out, RigidCommand, StableEqArgs, ValidateArgs};

type Res = Result<(), CliError>;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn comps_json(f: &GradedMap) -> Value {
    let comps: Vec<Value> = f.source().degrees().zip(f.comps()).map(|(j, m)| json!({"degree": j, "matrix": m})).collect();
    Value::Array(comps)
}

fn degree_matrices(list: &[(i64, Matrix)]) -> Value {
    Value::Array(list.iter().map(|(j, m)| json!({"degree": j, "matrix": m})).collect())
}

fn describe(m: &GradedModule) -> String {
    let name = m.alg().name.clone().unwrap_or_else(|| "custom".into());
    format!("module over {name}: degrees [{}, {}], dims {:?}, total {}", m.lo(), m.hi(), m.dims(), m.total_dim())
}

fn emit_module(out: &mut Out, key: &str, m: &GradedModule) {
    out.line(describe(m));
    let doc = ModuleDoc::from_module(m);
    out.line(serde_json::to_string_pretty(&doc).expect("documents serialize"));
    out.result(key, doc);
}

fn point(text: &str, n: usize) -> Result<OddPoint, CliError> {
    let x = OddPoint::parse(text)?;
    if x.dim() != n {
        return Err(CliError::Malformed(format!("point has {} coordinates, dim g1 = {n}", x.dim())));
    }
    Ok(x)
}

pub(crate) fn dispatch(cli: &Cli, out: &mut Out) -> Res {
    match &cli.command {
        Command::Validate(a) => validate(a, out),
        Command::ModuleInfo(a) => module_info(&load::module(&a.module)?, out),
        Command::Shift { module, by } => {
            let v = load::module(&module.module)?;
            emit_module(out, "module", &shift(&v, *by));
            Ok(())
        }
        Command::Tensor { modules } => {
            if modules.len() != 2 {
                return Err(CliError::Malformed("tensor takes exactly two --module arguments".into()));
            }
            let (v, w) = (load::module(&modules[0])?, load::module(&modules[1])?);
            emit_module(out, "module", &tensor(&v, &w)?);
            Ok(())
        }
        Command::Dual(a) => {
            emit_module(out, "module", &dual(&load::module(&a.module)?));
            Ok(())
        }
        Command::Hom { source, target } => {
            let (v, w) = (load::module(source)?, load::module(target)?);
            let basis = hom_graded(&v, &w)?;
            out.line(format!("dim Hom(V, W) = {}", basis.len()));
            out.result("dim", basis.len());
            out.cert("basis", basis.iter().map(comps_json).collect::<Vec<_>>());
            Ok(())
        }
        Command::Induce { q, lo } => {
            let q = load::q(q)?;
            emit_module(out, "module", &induced_module(&q, *lo));
            Ok(())
        }
        Command::Rigid(r) => rigid(r, out),
        Command::Ds { module, point: p } => {
            let m = load::module(&module.module)?;
            let x = point(p, m.n_odd())?;
            let ds = ds_at(&m, &x)?;
            let member = in_variety(&m, &x)?;
            out.line(format!("x = {x}: rank x_M = {}, dim M_x = {}", ds.rank_x, ds.ds_dim));
            out.line(format!("per degree: {}", ds.per_degree));
            out.line(format!("in X_M: {}", yes_no(member)));
            out.result("ds", &ds);
            out.result("in_variety", member);
            Ok(())
        }
        Command::Variety { module, ideal, sample } => variety(cli, &load::module(&module.module)?, *ideal, *sample, out),
        Command::SupportCheck { module, sample } => {
            let m = load::module(&module.module)?;
            let points = random_points(m.n_odd(), *sample, cli.seed);
            let report = support_check(&m, &points)?;
            out.line(format!(
                "{} points: fiber total = dim M_x everywhere: {}; support inside X_M: {}",
                report.rows.len(),
                yes_no(report.all_equal),
                yes_no(report.all_contained)
            ));
            if !(report.all_equal && report.all_contained) {
                out.fail();
            }
            out.result("support", &report);
            Ok(())
        }
        Command::Decompose(a) => decompose_cmd(&load::module(&a.module)?, out),
        Command::IsProjective(a) => {
            let v = load::module(&a.module)?;
            let r = is_projective(&v)?;
            out.line(format!("projective: {}", yes_no(r.projective)));
            out.result("projective", r.projective);
            out.result("cover_dims", &r.cover_dims);
            if let Some(s) = &r.section {
                out.cert("section", degree_matrices(s));
            }
            Ok(())
        }
        Command::IsReduced(a) => {
            let v = load::module(&a.module)?;
            let e = top_operator(&v)?;
            out.line(format!("reduced: {} (rank of the top odd operator: {})", yes_no(e.is_zero()), e.rank()));
            out.result("reduced", e.is_zero());
            out.result("top_operator_rank", e.rank());
            out.result("order", &e.order);
            if !e.is_zero() {
                out.cert("top_operator", degree_matrices(&e.components));
            }
            Ok(())
        }
        Command::StableEq(a) => stable_eq(a, out),
        Command::FrobeniusCheck { q } => {
            let q = load::q(q)?;
            let r = frobenius_check(&q)?;
            out.line(format!(
                "dim {}: f g = id: {}, g f = id: {}, g0-equivariant: {}",
                r.dim,
                yes_no(r.fg_identity),
                yes_no(r.gf_identity),
                yes_no(r.g0_equivariant)
            ));
            if !r.passed {
                out.fail();
            }
            out.result("dim", r.dim);
            out.result("fg_identity", r.fg_identity);
            out.result("gf_identity", r.gf_identity);
            out.result("g0_equivariant", r.g0_equivariant);
            out.result("passed", r.passed);
            out.cert("f", &r.f);
            out.cert("g", &r.g);
            Ok(())
        }
        Command::Cech { r, d } => {
            let t = cech_line_bundle(*r, *d)?;
            let closed = (t.get(0) == closed_form_h0(*r, *d)) && (t.get(*r as i64) == closed_form_top(*r, *d));
            out.line(format!("H^l(P^{r}, O({d})) for l = 0..{r}: {:?}", t.dims(0, *r as i64)));
            out.line(format!("matches closed forms: {}", yes_no(closed)));
            if !closed {
                out.fail();
            }
            out.result("dims", t.dims(0, *r as i64));
            out.result("closed_form_agrees", closed);
            Ok(())
        }
        Command::Ext { i, j, r } => {
            let descs = ext_twisted(*i, *j, *r)?;
            if descs.is_empty() {
                out.line(format!("Ext^l(R({i}), R({j})) = 0 for all l"));
            }
            for d in &descs {
                let twist = if d.top_twist_present { format!(" ⊗ Λ^{}(E*)", r + 1) } else { String::new() };
                out.line(format!(
                    "Ext^{}(R({i}), R({j})) = U(g0) ⊗ S^{}(E*){twist}  (dim S = {})",
                    d.l, d.sym_degree, d.sym_dim
                ));
            }
            for note in ext_convention_notes(*i, *j, *r) {
                out.warn(note);
            }
            out.result("ext", &descs);
            Ok(())
        }
        Command::Ce { algebra, module } => {
            let q = load::q(module)?;
            if let Some(a) = algebra {
                if *load::algebra(a)? != **q.alg() {
                    return Err(dsgeom::Error::AlgebraMismatch.into());
                }
            }
            let t = chevalley_eilenberg(&q)?;
            out.line(format!("H^p(g0, Q) for p = 0..{}: {:?}", q.alg().dim0(), t.dims(0, q.alg().dim0() as i64)));
            out.result("cohomology", &t);
            Ok(())
        }
        Command::Koszul { algebra, module, pmax } => {
            let v = load::module(module)?;
            if let Some(a) = algebra {
                if *load::algebra(a)? != **v.alg() {
                    return Err(dsgeom::Error::AlgebraMismatch.into());
                }
            }
            let ops: Vec<Matrix> = (0..v.n_odd()).map(|e| v.total_odd(e)).collect();
            let t = koszul_odd(v.alg(), &ops, *pmax)?;
            out.line(format!("H^p(g1, V) for p < {pmax}: {:?}", t.dims(0, *pmax as i64 - 1)));
            out.result("cohomology", &t);
            Ok(())
        }
        Command::Nonfullness(a) => nonfullness(a, out),
        Command::Corpus { name, write } => corpus_cmd(name.as_deref(), write.as_deref(), out),
    }
}

fn validate(a: &ValidateArgs, out: &mut Out) -> Res {
    let mut any = false;
    if let Some(arg) = &a.algebra {
        any = true;
        let alg = load::algebra_doc(arg)?.build()?;
        let report = alg.validate();
        for c in &report.checks {
            match c.first_failure {
                None => out.line(format!("{}: ok", c.name)),
                Some(t) => out.line(format!("{}: FAILED at {:?}", c.name, t)),
            }
        }
        let semisimple = report.passed() && (alg.dim0() == 0 || alg.even().is_semisimple());
        out.line(format!("dim g0 = {}, dim g1 = {}, semisimple (or zero) g0: {}", alg.dim0(), alg.dim1(), yes_no(semisimple)));
        if !report.passed() {
            out.fail();
        }
        out.result("algebra", json!({"checks": report.checks, "passed": report.passed(), "dim0": alg.dim0(), "dim1": alg.dim1(), "semisimple": semisimple}));
    }
    if let Some(arg) = &a.module {
        any = true;
        let m = load::module(arg)?;
        out.line(format!("valid {}", describe(&m)));
        out.result("module", json!({"valid": true, "dims": m.dims(), "lo": m.lo()}));
    }
    if let Some(arg) = &a.map {
        any = true;
        let f = load::map(arg)?;
        out.line(format!("valid map between modules of dims {:?} and {:?}", f.source().dims(), f.target().dims()));
        out.result("map", json!({"valid": true}));
    }
    if let Some(arg) = &a.complex {
        any = true;
        let c = load::complex(arg)?;
        out.line(format!("valid rigid complex: degrees [{}, {}], dims {:?}", c.lo(), c.hi(), c.dims()));
        out.result("complex", json!({"valid": true, "dims": c.dims()}));
    }
    if let Some(arg) = &a.q {
        any = true;
        let q = load::q(arg)?;
        out.line(format!("valid g0-module of dimension {}", q.dim()));
        out.result("q", json!({"valid": true, "dim": q.dim()}));
    }
    if !any {
        return Err(CliError::Malformed("validate needs one of --algebra, --module, --map, --complex, --q".into()));
    }
    Ok(())
}

fn module_info(m: &GradedModule, out: &mut Out) -> Res {
    out.line(describe(m));
    out.result("lo", m.lo());
    out.result("hi", m.hi());
    out.result("dims", m.dims());
    out.result("total_dim", m.total_dim());
    out.result("dim0", m.alg().dim0());
    out.result("dim1", m.n_odd());
    if m.n_odd() > 0 {
        let e = top_operator(m)?;
        out.line(format!("reduced: {}", yes_no(e.is_zero())));
        out.result("reduced", e.is_zero());
    }
    Ok(())
}

fn rigid(r: &RigidCommand, out: &mut Out) -> Res {
    match r {
        RigidCommand::L(a) => {
            let l = l_of(&load::module(&a.module)?);
            out.line(format!("rigid complex: degrees [{}, {}], dims {:?}", l.lo(), l.hi(), l.dims()));
            let doc = ComplexDoc::from_complex(&l);
            out.line(serde_json::to_string_pretty(&doc).expect("documents serialize"));
            out.result("complex", doc);
        }
        RigidCommand::V { complex } => emit_module(out, "module", &v_of(&load::complex(complex)?)),
        RigidCommand::Fiber { module, complex, point: p } => {
            let l: RigidComplex = match (module, complex) {
                (Some(m), None) => l_of(&load::module(m)?),
                (None, Some(c)) => load::complex(c)?,
                _ => return Err(CliError::Malformed("give exactly one of --module, --complex".into())),
            };
            let x = point(p, l.alg().dim1())?;
            let f = fiber(&l, &x)?;
            let h = fiber_cohomology(&f);
            out.line(format!("fiber at {x}: dims {:?}, ranks {:?}", f.dims(), f.ranks()));
            out.line(format!("cohomology: {h}"));
            out.result("dims", f.dims());
            out.result("ranks", f.ranks());
            out.result("cohomology", &h);
            out.cert("differentials", f.dims().iter().enumerate().map(|(k, _)| f.diff(f.lo() + k as i64)).collect::<Vec<_>>());
        }
        RigidCommand::Roundtrip(a) => {
            let v = load::module(&a.module)?;
            let l = l_of(&v);
            let forward = v_of(&l) == v;
            let backward = l_of(&v_of(&l)) == l;
            out.line(format!("V(L(V)) = V: {}", if forward { "exact" } else { "FAILED" }));
            out.line(format!("L(V(L)) = L: {}", if backward { "exact" } else { "FAILED" }));
            if !(forward && backward) {
                out.fail();
            }
            out.result("v_of_l_of_v", forward);
            out.result("l_of_v_of_l", backward);
        }
    }
    Ok(())
}

fn variety(cli: &Cli, m: &GradedModule, ideal: bool, sample: Option<usize>, out: &mut Out) -> Res {
    let want_ideal = ideal || sample.is_none();
    let gens = if want_ideal {
        let id = variety_ideal(m, cli.max_minor_dim)?;
        out.line(format!("{} generators of degree {} in {} variables", id.generators.len(), m.total_dim().div_ceil(2), id.nvars));
        let text: Vec<String> = id.generators.iter().map(ToString::to_string).collect();
        for g in &text {
            out.line(format!("  {g}"));
        }
        out.result("generator_count", id.generators.len());
        out.cert("ideal_generators", &text);
        Some(id)
    } else {
        None
    };
    if let Some(count) = sample {
        let mut rows = Vec::new();
        let mut mismatches = 0;
        for x in random_points(m.n_odd(), count, cli.seed) {
            let member = in_variety(m, &x)?;
            let vanish = match &gens {
                Some(id) => Some(id.vanishes_at(x.coords())?),
                None => None,
            };
            if vanish.is_some_and(|v| v != member) {
                mismatches += 1;
            }
            rows.push(json!({"point": x, "in_variety": member, "generators_vanish": vanish}));
        }
        let inside = rows.iter().filter(|r| r["in_variety"] == json!(true)).count();
        out.line(format!("{inside} of {count} sampled points lie in X_M"));
        if mismatches > 0 {
            out.line(format!("{mismatches} points where the ideal and the rank test disagree"));
            out.fail();
        }
        out.result("samples", rows);
    }
    Ok(())
}

fn decompose_cmd(v: &GradedModule, out: &mut Out) -> Res {
    let d = decompose(v)?;
    let check = d.check(v)?;
    out.line(format!(
        "dim V = {} = 2^{} * dim Q ({}) + dim M ({}): {}",
        check.dim_v,
        v.n_odd(),
        check.dim_q,
        check.dim_m,
        yes_no(check.dimension_formula)
    ));
    out.line(format!("M reduced: {}, projector splits: {}, parts span V: {}", yes_no(check.reduced_part_is_reduced), yes_no(check.projector_splits), yes_no(check.parts_span)));
    out.line(format!("projective: {}", yes_no(check.dim_m == 0)));
    if !check.passed {
        out.fail();
    }
    out.result("check", &check);
    out.result("q_pieces", d.q_pieces.iter().map(|(j, q)| json!({"degree": j, "dim": q.dim()})).collect::<Vec<_>>());
    out.result("reduced_part", ModuleDoc::from_module(&d.reduced_part));
    out.cert("k_basis", &d.k_basis);
    out.cert("q_basis", &d.q_basis);
    out.cert("induced_embedding", comps_json(&d.induced_embedding));
    out.cert("reduced_embedding", comps_json(&d.reduced_embedding));
    out.cert("projector", comps_json(&d.projector));
    Ok(())
}

fn stable_eq(a: &StableEqArgs, out: &mut Out) -> Res {
    let (f, g) = match (&a.f, &a.g, a.maps.as_slice()) {
        (Some(f), Some(g), []) => (load::map(f)?, load::map(g)?),
        (Some(f), None, []) | (None, None, [f]) => {
            let f = load::map(f)?;
            let zero = GradedMap::zero(f.source(), f.target())?;
            (f, zero)
        }
        (None, None, [f, g]) => (load::map(f)?, load::map(g)?),
        _ => return Err(CliError::Malformed("give --f and --g, or --map twice".into())),
    };
    let r = stable_equal(&f, &g)?;
    out.line(if r.stably_equal { "stably equal".to_string() } else { "NOT stably equal".to_string() });
    if r.difference_is_zero {
        out.line("the maps are equal");
    }
    out.result("stably_equal", r.stably_equal);
    out.result("difference_is_zero", r.difference_is_zero);
    if let Some(lift) = &r.lift {
        out.cert("lift", degree_matrices(lift));
    }
    Ok(())
}

fn nonfullness(a: &NonfullnessArgs, out: &mut Out) -> Res {
    let p = match &a.params {
        Some(name) => {
            let mut p = load::nonfullness_params(name)?;
            p.i = a.i.unwrap_or(p.i);
            p.j = a.j.unwrap_or(p.j);
            p.n = a.n.unwrap_or(p.n);
            p
        }
        None => {
            let (Some(v), Some(w), Some(i), Some(j)) = (&a.v, &a.w, a.i, a.j) else {
                return Err(CliError::Malformed("give --params, or --v, --w, -i and -j".into()));
            };
            let (v, w) = (load::q(v)?, load::q(w)?);
            if let Some(alg) = &a.algebra {
                if *load::algebra(alg)? != **v.alg() {
                    return Err(dsgeom::Error::AlgebraMismatch.into());
                }
            }
            let n = match a.n {
                Some(n) => n,
                None => {
                    out.warn(format!("n not given; using dim g1 = {}", v.alg().dim1()));
                    v.alg().dim1()
                }
            };
            NonfullnessParams { v, w, i, j, n }
        }
    };
    let dim = nonfullness_ext(&p.v, &p.w, p.i, p.j, p.n)?;
    let m = p.i - p.j - p.n as i64;
    out.line(format!("Ext^{}_g0(V, S^{}(g1) ⊗ W) has dimension {dim}", m + 1, m));
    out.result("dim", dim);
    out.result("ext_degree", m + 1);
    out.result("sym_degree", m);
    out.result("n", p.n);
    Ok(())
}

fn corpus_cmd(name: Option<&str>, write: Option<&std::path::Path>, out: &mut Out) -> Res {
    if let Some(name) = name {
        let e = corpus::entry(name)?;
        let doc = e.to_json();
        out.line(serde_json::to_string_pretty(&doc).expect("documents serialize"));
        out.result("kind", e.kind());
        out.result("document", doc);
        return Ok(());
    }
    if let Some(dir) = write {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Failed(format!("cannot create {}: {e}", dir.display())))?;
        for e in corpus::corpus() {
            let path = dir.join(format!("{}.json", e.name));
            let text = serde_json::to_string_pretty(&e.to_json()).expect("documents serialize");
            std::fs::write(&path, text + "\n").map_err(|err| CliError::Failed(format!("cannot write {}: {err}", path.display())))?;
        }
        out.line(format!("wrote {} files to {}", corpus::corpus().len(), dir.display()));
    }
    let entries: Vec<Value> =
        corpus::corpus().iter().map(|e| json!({"name": e.name, "kind": e.kind(), "tags": e.tags})).collect();
    if write.is_none() {
        for e in corpus::corpus() {
            let tags: Vec<String> = e.tags.iter().map(|t| format!("{t:?}")).collect();
            out.line(format!("{:<32} {:<18} {}", e.name, e.kind(), tags.join(",")));
        }
    }
    out.result("entries", entries);
    Ok(())
}
