//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always printed.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use ccq_cli::{connect_problem, run};
use ccq_core::apparent::apparent_singularities;
use ccq_core::connect::node_resolution;
use ccq_core::poly::{first_subresultant_x2, resultant_x2, BiPoly, Rational, Term, Var};
use ccq_core::realroot::{eval_poly, isolate, sign_at, AlgebraicNumber, Ordinate};
use ccq_core::topo2d::{FiberKind, TopologyGraph, VertexKind};
use ccq_core::Error;
use ccq_oracles::determinant::{determinantal_s1, swap_variables, sylvester_resultant_x2};
use ccq_oracles::subdivision::{Cover, Window};
use ccq_oracles::tracking::Tracked;
use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;

use common::*;

type Check = Result<String, String>;
type Criterion = fn() -> Check;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli_json(args: &[&str]) -> Result<Value, String> {
    let mut argv = vec!["ccq"];
    argv.extend_from_slice(args);
    let out = run(argv);
    ensure(out.code == 0, || format!("ccq {} exited {}: {}", args.join(" "), out.code, out.stderr))?;
    serde_json::from_str(&out.stdout).map_err(|e| e.to_string())
}

fn timed(budget: Duration, f: impl FnOnce() -> Check) -> Check {
    let start = Instant::now();
    let detail = f()?;
    let took = start.elapsed();
    ensure(took < budget, || format!("took {took:?}, budget {budget:?}"))?;
    Ok(format!("{detail} ({} ms)", took.as_millis()))
}

fn path(name: &str) -> String {
    corpus_path(name).to_string_lossy().into_owned()
}

fn criterion_1() -> Check {
    timed(Duration::from_secs(1), || {
        let p = path("nodal_cubic");
        let app = cli_json(&["appsing", &p])?;
        ensure(app["q_app"] == "x1", || format!("q_app = {}", app["q_app"]))?;
        let con = cli_json(&["connect", &p])?;
        ensure(con["partition"] == serde_json::json!([[1, 2]]), || format!("partition = {}", con["partition"]))?;
        ensure(con["components"] == 1, || format!("components = {}", con["components"]))?;
        Ok("q_app = x1, partition {{1,2}}, 1 component".into())
    })
}

fn criterion_2() -> Check {
    timed(Duration::from_secs(1), || {
        let con = cli_json(&["connect", &path("two_circles")])?;
        ensure(con["partition"] == serde_json::json!([[1], [2]]), || format!("partition = {}", con["partition"]))?;
        ensure(con["components"] == 2, || format!("components = {}", con["components"]))?;
        Ok("partition {{1},{2}}, 2 components".into())
    })
}

fn criterion_3() -> Check {
    let mut parts = Vec::new();
    for name in ["circle", "twisted_cubic"] {
        parts.push(timed(Duration::from_secs(1), || {
            let p = path(name);
            let app = cli_json(&["appsing", &p])?;
            ensure(app["q_app"] == "1", || format!("{name}: q_app = {}", app["q_app"]))?;
            let con = cli_json(&["connect", "--components-only", &p])?;
            ensure(con["components"] == 1, || format!("{name}: components = {}", con["components"]))?;
            Ok(format!("{name}: q_app = 1, 1 component"))
        })?);
    }
    Ok(parts.join("; "))
}

fn random_poly(rng: &mut ChaCha8Rng, min_deg_x2: u32) -> BiPoly {
    loop {
        let d = rng.gen_range(1..=4u32);
        let mut terms = Vec::new();
        for e1 in 0..=d {
            for e2 in 0..=d - e1 {
                if rng.gen_bool(0.5) {
                    let c: i64 = rng.gen_range(-9..=9);
                    terms.push(Term { e1, e2, coeff: Rational::from_integer(c.into()) });
                }
            }
        }
        let p = BiPoly::from_terms(terms);
        if p.deg_x2().is_some_and(|k| k >= min_deg_x2) {
            return p;
        }
    }
}

/// Checks `-sr10/sr1` at every real critical abscissa of `f` against the
/// ordinates of the singular and critical points found independently by
/// isolating `Res_x1(f, f_x2)`. Returns the number of abscissas checked.
fn double_root_check(f: &BiPoly, tol: &Rational) -> Result<usize, String> {
    let fy = f.partial(Var::X2);
    let r = resultant_x2(f, &fy).map_err(|e| e.to_string())?;
    if r.is_zero() || r.is_constant() || f.deg_x1().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let s1 = first_subresultant_x2(f, &fy).map_err(|e| e.to_string())?;
    let (d1, d0) = determinantal_s1(f, &fy);
    let same = (s1.sr1 == d1 && s1.sr10 == d0) || (s1.sr1 == -&d1 && s1.sr10 == -&d0);
    ensure(same, || format!("S1 of {f} differs from the determinant"))?;
    let ordinates = sylvester_resultant_x2(&swap_variables(f), &swap_variables(&fy));
    if ordinates.is_zero() {
        return Ok(0);
    }
    let ys: Vec<AlgebraicNumber> = isolate(&ordinates.squarefree_part().unwrap())
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|y| y.refine(tol))
        .collect();
    let mut checked = 0;
    for alpha in isolate(&r.squarefree_part().unwrap()).map_err(|e| e.to_string())? {
        if sign_at(&s1.sr1, &alpha).is_eq() {
            continue;
        }
        let mut a = alpha.clone();
        let beta = loop {
            let b = eval_poly(&s1.sr10, a.interval()).div(&eval_poly(&s1.sr1, a.interval()));
            if let Some(b) = b {
                if &b.width() < tol {
                    break b.neg();
                }
            }
            let w = a.interval().width() / Rational::from_integer(1024.into());
            a.refine_in_place(&w);
        };
        let hits = ys.iter().filter(|y| y.interval().intersects(&beta)).count();
        ensure(hits == 1, || format!("f = {f}, x1 = {alpha}: {hits} isolated ordinates meet -sr10/sr1"))?;
        checked += 1;
    }
    Ok(checked)
}

fn criterion_4() -> Check {
    timed(Duration::from_secs(60), || {
        let mut rng = ChaCha8Rng::seed_from_u64(20240601);
        let tol = Rational::new(BigInt::one(), BigInt::from(10).pow(20));
        let pairs: Vec<(BiPoly, BiPoly)> =
            (0..500).map(|_| (random_poly(&mut rng, 1), random_poly(&mut rng, 1))).collect();
        let fibers = pairs
            .par_iter()
            .map(|(f, g)| {
                let fast = resultant_x2(f, g).map_err(|e| e.to_string())?;
                let slow = sylvester_resultant_x2(f, g);
                ensure(fast == slow, || format!("Res({f}, {g}): {fast} vs Sylvester {slow}"))?;
                if f.deg_x2().unwrap() >= 2 {
                    double_root_check(f, &tol)
                } else {
                    Ok(0)
                }
            })
            .collect::<Result<Vec<usize>, String>>()?
            .into_iter()
            .sum::<usize>();
        Ok(format!("500 resultants exact, {fibers} double ordinates within 1e-20"))
    })
}

fn structure(name: &str, g: &TopologyGraph) -> Result<(), String> {
    let last = g.fibers.len() - 1;
    let pos = |id: usize| {
        let v = g.vertex(id).unwrap();
        (v.fiber, g.fibers[v.fiber].ids.iter().position(|&w| w == id).unwrap())
    };
    for &(a, b) in &g.edges {
        let (fa, fb) = (pos(a).0, pos(b).0);
        ensure(fa.abs_diff(fb) == 1, || format!("{name}: edge {a}-{b} skips fibers"))?;
        let (ka, kb) = (g.vertex(a).unwrap().kind, g.vertex(b).unwrap().kind);
        ensure(!(ka.is_critical() && kb.is_critical()), || format!("{name}: critical vertices {a}, {b} adjacent"))?;
    }
    for v in &g.vertices {
        let nbrs = g.neighbors(v.id);
        let left = nbrs.iter().filter(|&&w| pos(w).0 < v.fiber).count();
        let right = nbrs.len() - left;
        let boundary = v.fiber == 0 || v.fiber == last;
        let ok = match v.kind {
            VertexKind::Regular if boundary => nbrs.len() == 1 || nbrs.is_empty(),
            VertexKind::Regular => left == 1 && right == 1,
            VertexKind::Control => left == 1 && right == 1,
            VertexKind::ApparentNode => left == 2 && right == 2,
            VertexKind::XCritical => (left + right).is_multiple_of(2) && left <= 2 && right <= 2,
        };
        ensure(ok, || format!("{name}: {} vertex {} has {left}+{right} edges", v.kind.as_str(), v.id))?;
    }
    for i in 0..last {
        let (l, r) = (&g.fibers[i], &g.fibers[i + 1]);
        let mut between: Vec<(usize, usize)> = g
            .edges
            .iter()
            .filter(|&&(a, b)| {
                let (fa, fb) = (pos(a).0, pos(b).0);
                fa.min(fb) == i
            })
            .map(|&(a, b)| {
                let (pa, pb) = (pos(a), pos(b));
                if pa.0 == i { (pa.1, pb.1) } else { (pb.1, pa.1) }
            })
            .collect();
        let regular = if l.kind == FiberKind::Critical { r } else { l };
        ensure(between.len() == regular.ids.len(), || {
            format!("{name}: {} edges between fibers {i} and {}, {} branches", between.len(), i + 1, regular.ids.len())
        })?;
        between.sort();
        ensure(between.windows(2).all(|w| w[0].1 <= w[1].1), || format!("{name}: edges cross after fiber {i}"))?;
    }
    for w in g.fibers.windows(2) {
        let (a, b) = (w[0].x.interval(), w[1].x.interval());
        ensure(a.hi <= b.lo, || format!("{name}: fiber [{}, {}] before [{}, {}]", a.lo, a.hi, b.lo, b.hi))?;
    }
    Ok(())
}

fn criterion_5() -> Check {
    let corpus = corpus();
    let mut vertices = 0;
    for (name, p) in &corpus {
        let (g, _, _) = connect_problem(p).map_err(|o| format!("{name}: exit {} {}", o.code, o.stderr))?;
        structure(name, &g)?;
        let app = apparent_singularities(&p.curve).map_err(|e| e.to_string())?;
        let roots = if app.q_app.is_constant() { 0 } else { isolate(&app.q_app).unwrap().len() };
        ensure(g.v_app.len() == roots, || format!("{name}: {} apparent vertices, {roots} roots", g.v_app.len()))?;
        let queries = p.queries.as_ref().map_or(0, |q| isolate(&q.lambda).map_or(0, |r| r.len()));
        ensure(g.v_ctrl.len() == queries, || format!("{name}: {} control vertices", g.v_ctrl.len()))?;
        vertices += g.vertices.len();
    }
    ensure(corpus.len() >= 10, || format!("corpus has {} curves", corpus.len()))?;
    Ok(format!("{} curves, {vertices} vertices", corpus.len()))
}

const SUBDIVISION_RESOLUTION: f64 = 1.0 / 4096.0;

fn criterion_6() -> Check {
    let mut plane = 0;
    let mut space = 0;
    for (name, p) in corpus() {
        let (_, _, part) = connect_problem(&p).map_err(|o| format!("{name}: {}", o.stderr))?;
        let qs = p.queries.as_ref().map(query_points).unwrap_or_default();
        if p.curve.n == 2 {
            let cover = Cover::new(&p.curve.omega, Window::square(6.0), SUBDIVISION_RESOLUTION);
            let want = cover.components();
            ensure(part.component_count == want, || format!("{name}: graph {} vs subdivision {want}", part.component_count))?;
            let labels: Vec<_> = qs.iter().map(|q| cover.label(q[0], q[1])).collect();
            let oracle = partition_of(&labels).ok_or_else(|| format!("{name}: query outside the cover"))?;
            ensure(oracle == part.blocks, || format!("{name}: partition {:?} vs {oracle:?}", part.blocks))?;
            plane += 1;
        } else if let Some(pieces) = space_pieces(&name) {
            let t = Tracked::new(pieces, 1e-3);
            ensure(part.component_count == t.components(), || {
                format!("{name}: graph {} vs tracking {}", part.component_count, t.components())
            })?;
            let labels: Vec<_> = qs.iter().map(|q| t.label(q, 1e-6)).collect();
            let oracle = partition_of(&labels).ok_or_else(|| format!("{name}: query off the tracked path"))?;
            ensure(oracle == part.blocks, || format!("{name}: partition {:?} vs {oracle:?}", part.blocks))?;
            space += 1;
        } else {
            return Err(format!("{name}: no oracle"));
        }
    }
    Ok(format!("{plane} plane curves vs subdivision at 2^-12, {space} space curves vs path tracking"))
}

fn vertex_at(g: &mut TopologyGraph, fiber: usize, y: i64, kind: VertexKind) -> usize {
    g.push_vertex(fiber, Ordinate::Exact(AlgebraicNumber::from_rational(Rational::from_integer(y.into()))), kind)
}

fn fiber_at(g: &mut TopologyGraph, x: i64, kind: FiberKind) -> usize {
    g.push_fiber(AlgebraicNumber::from_rational(Rational::from_integer(x.into())), kind)
}

/// `a, b` left of a node `n`, `c, d` right of it, lower first.
fn single_x() -> (TopologyGraph, [usize; 5]) {
    let mut g = TopologyGraph::default();
    let l = fiber_at(&mut g, -1, FiberKind::Sample);
    let a = vertex_at(&mut g, l, -1, VertexKind::Regular);
    let b = vertex_at(&mut g, l, 1, VertexKind::Regular);
    let m = fiber_at(&mut g, 0, FiberKind::Critical);
    let n = vertex_at(&mut g, m, 0, VertexKind::ApparentNode);
    let r = fiber_at(&mut g, 1, FiberKind::Sample);
    let c = vertex_at(&mut g, r, -1, VertexKind::Regular);
    let d = vertex_at(&mut g, r, 1, VertexKind::Regular);
    for v in [a, b, c, d] {
        g.add_edge(v, n);
    }
    g.v_app.push(n);
    (g, [a, b, n, c, d])
}

fn criterion_7() -> Check {
    let (g, [a, b, n, c, d]) = single_x();
    let h = node_resolution(&g).map_err(|e| e.to_string())?;
    let want: std::collections::BTreeSet<_> = [(a, d), (b, c)].into_iter().collect();
    ensure(h.edges == want, || format!("single X resolved to {:?}", h.edges))?;
    ensure(h.vertex(n).is_none() && h.v_app.is_empty(), || "node survived".into())?;

    let (mut plain, _) = single_x();
    plain.v_app.clear();
    ensure(node_resolution(&plain).map_err(|e| e.to_string())? == plain, || "empty v_app is not the identity".into())?;

    let (mut bad, [_, _, n, _, d]) = single_x();
    bad.edges.remove(&(n.min(d), n.max(d)));
    match node_resolution(&bad) {
        Err(Error::GenericityViolation(_)) => {}
        other => return Err(format!("3-neighbour node gave {other:?}")),
    }
    Ok("single X pairs lower-left with upper-right; empty v_app identity; 3 neighbours rejected".into())
}

fn criterion_8() -> Check {
    let bin = env!("CARGO_BIN_EXE_ccq");
    let mut files = 0;
    for (name, p) in corpus() {
        let file = path(&name);
        let mut args = vec!["connect"];
        if p.queries.is_none() {
            args.push("--components-only");
        }
        args.push(&file);
        let mut outs = Vec::new();
        for threads in ["1", "1", "4", "4"] {
            outs.push(Command::new(bin).args(&args).env("CCQ_THREADS", threads).output().unwrap());
        }
        ensure(outs[0].status.success(), || format!("{name}: {}", String::from_utf8_lossy(&outs[0].stderr)))?;
        ensure(outs.iter().all(|o| o.stdout == outs[0].stdout && o.status == outs[0].status), || {
            format!("{name}: outputs differ between runs")
        })?;
        files += 1;
    }
    Ok(format!("{files} files, byte-identical JSON over 4 runs with 1 and 4 threads"))
}

fn main() {
    let criteria: [(&str, Criterion); 8] = [
        ("nodal space cubic", criterion_1),
        ("concentric circles", criterion_2),
        ("smooth curves", criterion_3),
        ("resultant and subresultant oracles", criterion_4),
        ("topology graph structure", criterion_5),
        ("component-count oracles", criterion_6),
        ("node resolution", criterion_7),
        ("determinism", criterion_8),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match result {
            Ok(detail) => println!("PASS criterion {}: {title}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {title}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
