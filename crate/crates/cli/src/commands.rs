use std::io::{self, Write};

use multitree::algebra::{Monomial, Polynomial, Rational, TermRecord, Var};
use multitree::bijection::{
    classify, classify_and_apply, phi_unitype, star_reduction_factor, star_reduction_schedule, star_tree_gf,
    star_vector, MarkedTree,
};
use multitree::cactus::{
    cactus_phi, cactus_psi, cactus_size, count_cacti_by_degree, count_cacti_total, enumerate_cacti, Cactus,
    CactusDegreeVector, CactusJson,
};
use multitree::enumerate::{
    enumerate_forests, enumerate_plane_trees, enumerate_skeletons, enumerate_trees, enumerate_unrooted,
};
use multitree::formulas::{
    count_by_complete_types, count_by_degree_classes, count_by_edge_types, count_by_indegree_vector,
    count_complete_special, count_embedded, count_injective_by_edge_types, count_injective_embedded,
    count_plane_trees, count_unitype_degree, delta_polynomial, gf_forests, gf_multitype, EmbeddingDigraph,
};
use multitree::lagrange::{
    direct_coefficient, lagrange_rhs_coefficient, solve_functional_system, tree_sum_coefficient, FunctionalSystem,
    FunctionalSystemRecord,
};
use multitree::model::{ForestJson, MarkedTreeJson, TreeJson, UnrootedTreeJson};
use multitree::verify::{run_suite, Suite, VerificationReport, VerifyConfig};
use multitree::{
    Bounds, CompleteTypeCounts, DegreeClassCounts, EdgeTypeMatrix, Error, IndegreeVector, Profile, Result, VertexId,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::parse;
use crate::{
    BijectionCommand, CactiCommand, Command, CountArgs, GfArgs, GfKind, LagrangeArgs, ListArgs, ListKind, Route,
    Stat, SweepArgs, VerifyArgs,
};

struct Out<'a> {
    w: &'a mut dyn Write,
    pretty: bool,
}

impl Out<'_> {
    fn line(&mut self, s: impl std::fmt::Display) {
        if let Err(e) = writeln!(self.w, "{s}") {
            if e.kind() == io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }

    /// One JSON document: compact, or indented under `--pretty`.
    fn json<T: Serialize>(&mut self, v: &T) {
        let s = if self.pretty {
            serde_json::to_string_pretty(v)
        } else {
            serde_json::to_string(v)
        };
        self.line(s.expect("serializable"));
    }

    /// One JSON Lines record; always compact.
    fn record<T: Serialize>(&mut self, v: &T) {
        self.line(serde_json::to_string(v).expect("serializable"));
    }
}

pub fn run(cmd: Command, bounds: &Bounds, pretty: bool, w: &mut dyn Write) -> Result<bool> {
    let mut out = Out { w, pretty };
    match cmd {
        Command::Count(a) => count(a, &mut out),
        Command::Gf(a) => gf(a, bounds, &mut out),
        Command::List(a) => list(a, bounds, &mut out),
        Command::Bijection(c) => bijection(c, bounds, &mut out),
        Command::Lagrange(a) => lagrange(a, bounds, &mut out),
        Command::Cacti(c) => cacti(c, bounds, &mut out),
        Command::Verify(a) => verify(a, bounds, &mut out),
    }
}

fn required<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::Invalid(format!("--{flag} is required here")))
}

fn profile_arg(s: Option<&str>, d: Option<usize>) -> Result<Profile> {
    let p = Profile::new(parse::list(required(s, "profile")?)?)?;
    if let Some(d) = d {
        if d != p.d() {
            return Err(Error::Invalid(format!("--d {d} but the profile has {} types", p.d())));
        }
    }
    Ok(p)
}

/// `d` from `--d`, else from the length of `--profile`.
fn types_arg(a: &CountArgs) -> Result<usize> {
    match (a.d, &a.profile) {
        (_, Some(p)) => Ok(profile_arg(Some(p), a.d)?.d()),
        (Some(d), None) => Ok(d),
        (None, None) => Err(Error::Invalid("--d or --profile is required here".into())),
    }
}

fn count(a: CountArgs, out: &mut Out) -> Result<bool> {
    let profile = || profile_arg(a.profile.as_deref(), a.d);
    let root = || required(a.root, "root");
    let edge_matrix = |d: usize| -> Result<EdgeTypeMatrix> {
        let entries = parse::keyed(required(a.m.as_deref(), "m")?, 2)?;
        EdgeTypeMatrix::from_entries(d, entries.into_iter().map(|(key, k)| ((key[0], key[1]), k)))
    };
    let digraph = |d: usize| EmbeddingDigraph::new(d, parse::pairs(required(a.digraph.as_deref(), "digraph")?)?);
    let n = match a.stat {
        Stat::UnitypeDegree => count_unitype_degree(&parse::list_u64(required(a.gamma.as_deref(), "gamma")?)?)?,
        Stat::EdgeTypes => {
            let p = profile()?;
            count_by_edge_types(&edge_matrix(p.d())?, &p, root()?)?
        }
        Stat::InjectiveEdgeTypes => {
            let p = profile()?;
            count_injective_by_edge_types(&edge_matrix(p.d())?, &p, root()?)?
        }
        Stat::Embedded => {
            let p = profile()?;
            count_embedded(&digraph(p.d())?, &p, root()?)?
        }
        Stat::InjectiveEmbedded => {
            let p = profile()?;
            count_injective_embedded(&digraph(p.d())?, &p, root()?)?
        }
        Stat::Indegree => {
            let p = profile()?;
            let entries = parse::keyed(required(a.gamma.as_deref(), "gamma")?, 3)?;
            let gamma = IndegreeVector::from_entries(
                &p,
                entries.into_iter().map(|(key, k)| ((key[0], VertexId::new(key[1], key[2])), k)),
            )?;
            count_by_indegree_vector(&gamma, root()?)?
        }
        Stat::DegreeClasses => {
            let mut classes = DegreeClassCounts::new(types_arg(&a)?);
            for (key, c, k) in parse::classes(required(a.classes.as_deref(), "classes")?, 1)? {
                classes.add(key[0], c, k);
            }
            count_by_degree_classes(&classes, root()?)?
        }
        Stat::CompleteTypes | Stat::CompleteSpecial => {
            let mut counts = CompleteTypeCounts::new(types_arg(&a)?);
            for (key, c, k) in parse::classes(required(a.classes.as_deref(), "classes")?, 2)? {
                counts.add(key[0], key[1], c, k);
            }
            if matches!(a.stat, Stat::CompleteSpecial) {
                count_complete_special(&counts)?
            } else {
                count_by_complete_types(&counts, root()?)?
            }
        }
        Stat::Plane => count_plane_trees(&parse::list_u64(required(a.counts.as_deref(), "counts")?)?)?,
        Stat::CactiDegree => {
            let p = profile()?;
            let degrees = parse::list(required(a.degrees.as_deref(), "degrees")?)?;
            count_cacti_by_degree(&CactusDegreeVector::from_degrees(&p, &degrees)?)
        }
        Stat::CactiTotal => count_cacti_total(&profile()?),
    };
    out.line(n);
    Ok(true)
}

fn gf(a: GfArgs, bounds: &Bounds, out: &mut Out) -> Result<bool> {
    let p = profile_arg(Some(&a.profile), None)?;
    let root = || required(a.root, "root");
    let (kind, poly): (&str, Polynomial) = match a.kind {
        GfKind::Multitype => ("multitype", gf_multitype(&p, root()?, bounds)?),
        GfKind::Forests => ("forests", gf_forests(&p, bounds)?),
        GfKind::Delta => ("delta", delta_polynomial(&p, root()?, bounds)?),
        GfKind::Star => ("star", star_tree_gf(&p, root()?, bounds)?),
    };
    if out.pretty {
        out.line(&poly);
    } else {
        let terms: Vec<TermRecord> = poly.to_records();
        out.json(&json!({
            "kind": kind,
            "profile": p.counts(),
            "root": a.root,
            "terms": terms,
        }));
    }
    Ok(true)
}

fn list(a: ListArgs, bounds: &Bounds, out: &mut Out) -> Result<bool> {
    let limit = a.limit.unwrap_or(usize::MAX);
    let profile = || profile_arg(a.profile.as_deref(), a.d);
    match a.kind {
        ListKind::Trees => {
            let p = profile()?;
            for t in enumerate_trees(&p, required(a.root, "root")?, bounds)?.take(limit) {
                out.record(&TreeJson::from(&t));
            }
        }
        ListKind::Forests => {
            for f in enumerate_forests(&profile()?, bounds)?.take(limit) {
                out.record(&ForestJson::from(&f));
            }
        }
        ListKind::Unrooted => {
            for t in enumerate_unrooted(required(a.n, "n")?, bounds)?.take(limit) {
                out.record(&UnrootedTreeJson::from(&t));
            }
        }
        ListKind::Plane => {
            for t in enumerate_plane_trees(required(a.n, "n")?, bounds)?.iter().take(limit) {
                out.record(t);
            }
        }
        ListKind::Skeletons => {
            for s in enumerate_skeletons(required(a.d, "d")?, required(a.root, "root")?, bounds)?.iter().take(limit) {
                out.record(s);
            }
        }
        ListKind::Cacti => {
            for c in enumerate_cacti(&profile()?, bounds)?.iter().take(limit) {
                out.record(&c.to_json());
            }
        }
    }
    Ok(true)
}

fn bijection(c: BijectionCommand, bounds: &Bounds, out: &mut Out) -> Result<bool> {
    match c {
        BijectionCommand::Unitype { tree, mark, from, to } => {
            let tree = parse::json::<UnrootedTreeJson>(&tree)?.to_tree()?;
            let mark = match parse::list(&mark)?[..] {
                [a, b] => (a, b),
                _ => return Err(Error::Invalid("--mark takes two vertices a,b".into())),
            };
            let (img, marked) = phi_unitype(&tree, mark, from, to)?;
            out.json(&json!({
                "tree": UnrootedTreeJson::from(&img),
                "marked": marked,
                "degrees": img.degrees(),
            }));
            Ok(true)
        }
        BijectionCommand::Marked {
            verify,
            tree,
            s,
            t,
            from,
            to,
        } => {
            let m = MarkedTree::from_json(&parse::json::<MarkedTreeJson>(&tree)?)?;
            let case = classify(&m, s, t, from, to)?;
            let img = classify_and_apply(&m, s, t, from, to)?;
            if !verify {
                out.json(&json!({ "case": case, "tree": img.to_json() }));
                return Ok(true);
            }
            let image_case = classify(&img, s, t, to, from)?;
            let back = classify_and_apply(&img, s, t, to, from)?;
            let ok = image_case == case && back == m;
            out.json(&json!({
                "case": case,
                "tree": img.to_json(),
                "image_case": image_case,
                "round_trip": back == m,
            }));
            Ok(ok)
        }
        BijectionCommand::Star { profile, gamma } => {
            let p = profile_arg(Some(&profile), None)?;
            let entries = parse::keyed(&gamma, 3)?;
            let gamma = IndegreeVector::from_entries(
                &p,
                entries.into_iter().map(|(key, k)| ((key[0], VertexId::new(key[1], key[2])), k)),
            )?;
            let star: Vec<_> = star_vector(&gamma).entries().collect();
            out.json(&json!({
                "star": star,
                "factor": star_reduction_factor(&gamma).to_string(),
                "schedule": star_reduction_schedule(&gamma),
            }));
            Ok(true)
        }
        BijectionCommand::Verify(SweepArgs {
            max_vertices,
            max_d,
            timing,
        }) => {
            let cfg = VerifyConfig {
                max_vertices,
                max_d,
                bounds: *bounds,
                ..VerifyConfig::default()
            };
            let r = run_suite(Suite::Bijections, &cfg)?;
            report(&r, timing, out);
            Ok(r.passed())
        }
    }
}

fn lagrange(a: LagrangeArgs, bounds: &Bounds, out: &mut Out) -> Result<bool> {
    let mut record = parse::json::<FunctionalSystemRecord>(&a.system)?;
    if let Some(order) = a.order {
        record.order = order;
    }
    let system = FunctionalSystem::from_record(&record)?;
    let n = parse::list(&a.coefficient)?;
    let d = system.d();
    if n.len() != d {
        return Err(Error::Invalid(format!("--coefficient has {} entries, expected {d}", n.len())));
    }
    if n.iter().sum::<u32>() >= system.order() {
        return Err(Error::Precondition(format!(
            "total degree is not below the truncation order {}",
            system.order()
        )));
    }
    let want = |r: Route| a.route == Route::All || a.route == r;
    let mut doc = serde_json::Map::new();
    doc.insert("coefficient".into(), json!(n));
    let mut solve = Vec::new();
    let mut tree = Vec::new();
    let mut direct = None;
    let mut rhs = None;
    if want(Route::Solve) {
        let m = Monomial::from_powers(n.iter().enumerate().map(|(t, &e)| (Var::Plain(t as u32 + 1), e)));
        solve = solve_functional_system(&system).iter().map(|s| s.coefficient(&m)).collect();
        doc.insert("solve".into(), json!(strings(&solve)));
    }
    if want(Route::Treesum) {
        let top = if system.has_output() { d + 1 } else { d } as u32;
        tree = (1..=top)
            .map(|rho| tree_sum_coefficient(&system, rho, &n, bounds))
            .collect::<Result<Vec<_>>>()?;
        doc.insert("treesum".into(), json!(strings(&tree)));
    }
    // the remaining routes need G_{d+1}; under `all` they are skipped without it
    if want(Route::Direct) && (system.has_output() || a.route == Route::Direct) {
        let c = direct_coefficient(&system, &n)?;
        doc.insert("direct".into(), json!(c.to_string()));
        direct = Some(c);
    }
    if want(Route::Rhs) && ((system.has_output() && n.iter().all(|&k| k > 0)) || a.route == Route::Rhs) {
        let c = lagrange_rhs_coefficient(&system, &n, bounds)?;
        doc.insert("rhs".into(), json!(c.to_string()));
        rhs = Some(c);
    }
    let mut agree = true;
    if a.route == Route::All {
        let mut diff = Vec::new();
        for (rho, (x, y)) in solve.iter().zip(&tree).enumerate() {
            if x != y {
                diff.push(format!("f_{}: solve {x} vs treesum {y}", rho + 1));
            }
        }
        let output = tree.get(d);
        for (name, c) in [("direct", &direct), ("rhs", &rhs)] {
            if let (Some(c), Some(t)) = (c, output) {
                if c != t {
                    diff.push(format!("G_{}: {name} {c} vs treesum {t}", d + 1));
                }
            }
        }
        agree = diff.is_empty();
        doc.insert("agree".into(), json!(agree));
        if !agree {
            doc.insert("diff".into(), json!(diff));
        }
    }
    out.json(&Value::Object(doc));
    Ok(agree)
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn cactus_arg(s: &str) -> Result<Cactus> {
    Cactus::from_json(&parse::json::<CactusJson>(s)?)
}

fn cacti(c: CactiCommand, bounds: &Bounds, out: &mut Out) -> Result<bool> {
    match c {
        CactiCommand::Count { profile, degrees } => {
            let p = profile_arg(Some(&profile), None)?;
            let n = match degrees {
                Some(deg) => count_cacti_by_degree(&CactusDegreeVector::from_degrees(&p, &parse::list(&deg)?)?),
                None => count_cacti_total(&p),
            };
            if out.pretty {
                out.line(n);
            } else {
                out.json(&json!({ "size": cactus_size(&p), "count": n.to_string() }));
            }
        }
        CactiCommand::List { profile, limit } => {
            let p = profile_arg(Some(&profile), None)?;
            for c in enumerate_cacti(&p, bounds)?.iter().take(limit.unwrap_or(usize::MAX)) {
                out.record(&c.to_json());
            }
        }
        CactiCommand::Phi { cactus, s, j, k } => {
            out.json(&cactus_phi(&cactus_arg(&cactus)?, s, j, k)?.to_json());
        }
        CactiCommand::Psi { cactus, r, s } => {
            out.json(&cactus_psi(&cactus_arg(&cactus)?, r, s)?.to_json());
        }
        CactiCommand::Verify { timing } => {
            let cfg = VerifyConfig {
                bounds: *bounds,
                ..VerifyConfig::default()
            };
            let r = run_suite(Suite::Cacti, &cfg)?;
            report(&r, timing, out);
            return Ok(r.passed());
        }
    }
    Ok(true)
}

fn report(r: &VerificationReport, timing: bool, out: &mut Out) {
    if out.pretty {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let time = if timing { format!("  {} ms", r.elapsed_ms) } else { String::new() };
        out.line(format!("{:<12} {status}  {} cases, {} failures{time}", r.suite, r.cases, r.failure_count));
        for f in &r.failures {
            out.line(format!("  {}: expected {}, got {}", f.input, f.expected, f.actual));
        }
        return;
    }
    let mut v = serde_json::to_value(r).expect("serializable");
    if !timing {
        // elapsed time varies run to run; leave it out unless asked
        v.as_object_mut().expect("report is an object").remove("elapsed_ms");
    }
    out.record(&v);
}

fn verify(a: VerifyArgs, bounds: &Bounds, out: &mut Out) -> Result<bool> {
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        a.suite.split(',').map(str::parse).collect::<Result<_>>()?
    };
    let defaults = VerifyConfig::default();
    let cfg = VerifyConfig {
        max_vertices: a.max_vertices,
        max_d: a.max_d,
        seed: a.seed.unwrap_or(defaults.seed),
        bounds: *bounds,
    };
    let mut ok = true;
    for s in suites {
        let r = run_suite(s, &cfg)?;
        ok &= r.passed();
        report(&r, a.timing, out);
    }
    Ok(ok)
}
