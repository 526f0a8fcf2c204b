//! Acceptance suite: one line per criterion, exit status nonzero on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;

use dsgeom::cohomology::{
    cech_line_bundle, chevalley_eilenberg, closed_form_h0, closed_form_top, ext_twisted, koszul_odd, nonfullness_ext,
};
use dsgeom::corpus::{self, CorpusItem, Tag};
use dsgeom::dsvariety::{ds_at, in_variety, random_points, variety_ideal};
use dsgeom::graded::{induced_module, G0Module, GradedMap, GradedModule};
use dsgeom::projstable::{decompose, frobenius_check, is_projective, is_reduced, stable_equal};
use dsgeom::random::random_modules;
use dsgeom::rigid::{fiber, fiber_cohomology, l_of, v_of, OddPoint};
use dsgeom::superalg::SuperAlgebra;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(ctx: &str) -> impl Fn(E) -> String + '_ {
    move |e| format!("{ctx}: {e}")
}

fn points_for(m: &GradedModule, count: usize, salt: u64) -> Vec<OddPoint> {
    random_points(m.n_odd(), count, 0xD5 ^ salt)
}

fn roundtrip() -> Outcome {
    let randoms = random_modules(24, 24, 2024).map_err(err("random modules"))?;
    let mut count = 0;
    for v in randoms.iter().chain(corpus::modules().map(|(_, m)| m)) {
        let l = l_of(v);
        ensure(&v_of(&l) == v, || format!("V(L(V)) != V for a module with dims {:?}", v.dims()))?;
        ensure(l_of(&v_of(&l)) == l, || format!("L(V(L)) != L for dims {:?}", v.dims()))?;
        count += 1;
    }
    Ok(format!("{count} modules ({} random), exact equality", randoms.len()))
}

fn acyclic_projectives() -> Outcome {
    let mut checked = 0;
    for (e, m) in corpus::modules().filter(|(e, _)| e.has(Tag::Induced)) {
        for (k, x) in points_for(m, 25, 2).iter().enumerate() {
            let l = l_of(m);
            let h = fiber_cohomology(&fiber(&l, x).map_err(err(&e.name))?);
            ensure(h.is_zero(), || format!("{}: fiber cohomology {h} at point {k}", e.name))?;
            ensure(!in_variety(m, x).map_err(err(&e.name))?, || format!("{}: point {k} in X_M", e.name))?;
            checked += 1;
        }
    }
    ensure(checked > 0, || "no induced modules in the corpus".into())?;
    Ok(format!("{checked} (module, point) pairs acyclic and outside X_M"))
}

fn ds_fiber_consistency() -> Outcome {
    let mut checked = 0;
    for (e, m) in corpus::modules() {
        let l = l_of(m);
        for x in points_for(m, 25, 3) {
            let ds = ds_at(m, &x).map_err(err(&e.name))?;
            let total = fiber_cohomology(&fiber(&l, &x).map_err(err(&e.name))?).total();
            let rank = m.total_odd_at(x.coords()).rank();
            ensure(ds.ds_dim == total, || format!("{}: ds {} vs fiber total {total} at {x}", e.name, ds.ds_dim))?;
            ensure(ds.ds_dim == m.total_dim() - 2 * rank, || format!("{}: ds {} vs dim - 2 rank at {x}", e.name, ds.ds_dim))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (module, point) pairs"))
}

fn variety_correctness() -> Outcome {
    let (mut modules, mut inside, mut outside) = (0, 0, 0);
    for (e, m) in corpus::modules().filter(|(_, m)| m.total_dim() <= 12) {
        let ideal = variety_ideal(m, 12).map_err(err(&e.name))?;
        for x in points_for(m, 50, 4) {
            let vanish = ideal
                .generators
                .iter()
                .map(|g| g.eval(x.coords()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err(&e.name))?
                .iter()
                .all(Zero::is_zero);
            let member = in_variety(m, &x).map_err(err(&e.name))?;
            ensure(vanish == member, || format!("{}: generators vanish = {vanish}, in_variety = {member} at {x}", e.name))?;
            if member {
                inside += 1
            } else {
                outside += 1
            }
        }
        modules += 1;
    }
    Ok(format!("{modules} modules x 50 points ({inside} inside, {outside} outside)"))
}

fn cech_agreement() -> Outcome {
    for r in 1..=3usize {
        for d in -8..=8i64 {
            let t = cech_line_bundle(r, d).map_err(err("cech"))?;
            ensure(t.get(0) == closed_form_h0(r, d) && t.get(r as i64) == closed_form_top(r, d), || {
                format!("r={r} d={d}: {t}")
            })?;
            ensure((1..r as i64).all(|l| t.get(l) == 0), || format!("r={r} d={d}: middle cohomology {t}"))?;
            let dual = cech_line_bundle(r, -d - r as i64 - 1).map_err(err("cech"))?;
            ensure(t.get(0) == dual.get(r as i64), || format!("Serre symmetry fails at r={r} d={d}"))?;
        }
        for i in -8..=8i64 {
            for j in -8..=8i64 {
                for desc in ext_twisted(i, j, r).map_err(err("ext"))? {
                    ensure(desc.l == 0 || desc.l == r, || format!("Ext^{} between twists {i}, {j}", desc.l))?;
                }
            }
        }
        for gap in 1..=8i64 {
            let m = 0;
            let hit = ext_twisted(m + gap, m, r).map_err(err("ext"))?.iter().any(|e| e.l as i64 == gap - 1);
            ensure(hit == (gap == r as i64 + 1), || format!("r={r}, i-m={gap}: nonzero = {hit}"))?;
        }
    }
    Ok("r in 1..3, d in -8..8; Ext only at l in {0, r}; nonzero at l = i-m-1 iff i-m = r+1".into())
}

fn nonfullness_witness() -> Outcome {
    let sl2 = std::sync::Arc::new(SuperAlgebra::sl2_trivial(1));
    let ce = chevalley_eilenberg(&G0Module::trivial(sl2, 1)).map_err(err("ce"))?;
    ensure(ce.dims(0, 3) == vec![1, 0, 0, 1], || format!("CE(sl2, k) = {:?}", ce.dims(0, 3)))?;
    let CorpusItem::Nonfullness(p) = &corpus::entry("sl2_triv1_nonfullness").map_err(err("corpus"))?.item else {
        return Err("sl2_triv1_nonfullness is not a parameter set".into());
    };
    ensure(p.i - p.j == 3 && p.n == 1, || "unexpected witness parameters".into())?;
    let dim = nonfullness_ext(&p.v, &p.w, p.i, p.j, p.n).map_err(err("nonfullness"))?;
    ensure(dim == 1, || format!("nonfullness Ext = {dim}"))?;
    Ok("CE(sl2, k) = (1, 0, 0, 1); witness Ext^3 = 1".into())
}

fn revalidates(m: &GradedModule) -> bool {
    GradedModule::new(m.alg().clone(), m.lo(), m.dims().to_vec(), m.rho0_raw().to_vec(), m.odd_raw().to_vec()).is_ok()
}

fn decomposition() -> Outcome {
    let (mut projective, mut non_projective) = (0, 0);
    for (e, v) in corpus::modules() {
        let d = decompose(v).map_err(err(&e.name))?;
        let check = d.check(v).map_err(err(&e.name))?;
        ensure(check.passed, || format!("{}: {check:?}", e.name))?;
        let n = v.n_odd() as u32;
        ensure(v.total_dim() == (1 << n) * d.dim_q() + d.reduced_part.total_dim(), || format!("{}: dimension formula", e.name))?;
        let reduced = d.reduced_part.total_dim() == 0 || is_reduced(&d.reduced_part).map_err(err(&e.name))?;
        ensure(reduced, || format!("{}: E does not vanish on M", e.name))?;
        ensure(revalidates(&d.induced_part) && revalidates(&d.reduced_part), || format!("{}: parts fail validation", e.name))?;
        let proj = is_projective(v).map_err(err(&e.name))?.projective;
        ensure(proj == (d.reduced_part.total_dim() == 0), || format!("{}: projective = {proj}, dim M = {}", e.name, d.reduced_part.total_dim()))?;
        if proj {
            projective += 1
        } else {
            non_projective += 1
        }
    }
    let mut qs = 0;
    for (e, q) in corpus::qs() {
        let r = frobenius_check(q).map_err(err(&e.name))?;
        ensure(r.passed, || format!("{}: Frobenius check {:?}", e.name, (r.fg_identity, r.gf_identity, r.g0_equivariant)))?;
        qs += 1;
    }
    ensure(projective > 0 && non_projective > 0, || "corpus lacks projective or non-projective modules".into())?;
    Ok(format!("{projective} projective, {non_projective} not; Frobenius exact for {qs} Q"))
}

fn has_nonzero_fiber(m: &GradedModule) -> Result<bool, String> {
    for x in points_for(m, 25, 8) {
        if ds_at(m, &x).map_err(err("ds"))?.ds_dim > 0 {
            return Ok(true);
        }
    }
    Ok(false)
}

fn faithfulness() -> Outcome {
    let zero = |f: &GradedMap| GradedMap::zero(f.source(), f.target()).map_err(err("zero map"));
    let (mut through, mut witnesses) = (0, 0);
    for (e, f) in corpus::maps() {
        if e.has(Tag::FactorsThroughInduced) {
            let r = stable_equal(f, &zero(f)?).map_err(err(&e.name))?;
            ensure(r.stably_equal && !r.difference_is_zero, || format!("{}: {r:?}", e.name))?;
            through += 1;
        }
        if e.has(Tag::NotStablyZero) {
            let r = stable_equal(f, &zero(f)?).map_err(err(&e.name))?;
            ensure(!r.stably_equal, || format!("{}: unexpectedly stably zero", e.name))?;
            ensure(is_reduced(f.target()).map_err(err(&e.name))?, || format!("{}: target not reduced", e.name))?;
            ensure(has_nonzero_fiber(f.target())?, || format!("{}: target has zero fibers", e.name))?;
            if e.name != "id_k" {
                witnesses += 1;
            }
        }
    }
    let id_k = corpus::map("id_k").map_err(err("id_k"))?;
    ensure(id_k.source().n_odd() >= 1, || "id_k over an algebra without odd part".into())?;
    ensure(!stable_equal(&id_k, &zero(&id_k)?).map_err(err("id_k"))?.stably_equal, || "id_k is stably zero".into())?;
    ensure(through > 0 && witnesses >= 3, || format!("{through} factored maps, {witnesses} witnesses"))?;
    Ok(format!("{through} factored maps stably zero; id_k and {witnesses} other maps not"))
}

fn koszul_sanity() -> Outcome {
    let alg = std::sync::Arc::new(SuperAlgebra::grassmann(1));
    let k = GradedModule::trivial(alg.clone(), 0);
    let t = koszul_odd(&alg, &[k.total_odd(0)], 8).map_err(err("koszul"))?;
    ensure(t.dims(0, 7) == vec![1; 8], || format!("trivial: {:?}", t.dims(0, 7)))?;
    let free = induced_module(&G0Module::trivial(alg.clone(), 1), 0);
    let t = koszul_odd(&alg, &[free.total_odd(0)], 8).map_err(err("koszul"))?;
    let mut want = vec![0; 8];
    want[0] = 1;
    ensure(t.dims(0, 7) == want, || format!("free: {:?}", t.dims(0, 7)))?;
    Ok("trivial: H^p = 1 for p < 8; free: H^0 = 1, H^1..7 = 0".into())
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "roundtrip exactness", budget: Some(Duration::from_secs(10)), run: roundtrip },
        Criterion { id: 2, name: "acyclicity for projectives", budget: Some(Duration::from_secs(10)), run: acyclic_projectives },
        Criterion { id: 3, name: "DS/fiber consistency", budget: None, run: ds_fiber_consistency },
        Criterion { id: 4, name: "determinantal variety", budget: None, run: variety_correctness },
        Criterion { id: 5, name: "Cech / Ext table agreement", budget: Some(Duration::from_secs(5)), run: cech_agreement },
        Criterion { id: 6, name: "non-fullness witness", budget: None, run: nonfullness_witness },
        Criterion { id: 7, name: "decomposition and projectivity", budget: None, run: decomposition },
        Criterion { id: 8, name: "faithfulness", budget: None, run: faithfulness },
        Criterion { id: 9, name: "Koszul sanity", budget: Some(Duration::from_secs(5)), run: koszul_sanity },
    ];
    let start = Instant::now();
    let mut failed = 0;
    for c in &criteria {
        let t0 = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = t0.elapsed();
        if let (Ok(_), Some(b)) = (&outcome, c.budget) {
            if elapsed > b {
                outcome = Err(format!("took {elapsed:.2?}, budget {b:?}"));
            }
        }
        match outcome {
            Ok(detail) => println!("PASS  criterion {:>2} {}: {detail} [{elapsed:.2?}]", c.id, c.name),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {:>2} {}: {detail} [{elapsed:.2?}]", c.id, c.name);
            }
        }
    }
    let total = start.elapsed();
    if total < Duration::from_secs(120) {
        println!("PASS  criterion 10 full-suite runtime: {total:.2?} < 120s");
    } else {
        failed += 1;
        println!("FAIL  criterion 10 full-suite runtime: {total:.2?} >= 120s");
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
