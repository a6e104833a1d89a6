//! One pass/fail line per acceptance criterion. Every numeric comparison is
//! exact (zero tolerance); the only tolerances are the wall-clock budgets.
//!
//! Run with `cargo test -p halfgraph --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use halfgraph::constructions::{clebsch_recipe_half, gewirtz_recipe_half, krivelevich_bound, m22_recipe_half};
use halfgraph::density::{c4_density, rho};
use halfgraph::exactmath::{int, rat, verify_sparse_identities, QuadNum, Rational};
use halfgraph::girth5::{girth5_report_with, Reading};
use halfgraph::graphcore::mis::independence_number;
use halfgraph::graphcore::{count_edge_rooted_flags4, enumerate_triangle_free, named, Graph, VertexSet};
use halfgraph::halves::{beta_exact, local_search_half, BoundCertificate, DEFAULT_RESTARTS, DEFAULT_SEED};
use halfgraph::independence::{
    analytic_bound, independence_formula_checks, independence_half, random_large_alpha_graphs,
};
use halfgraph::srg::{q1, rho_qc, srg_beta_bound};

const BUDGET_COUNTS: Duration = Duration::from_secs(120);
const BUDGET_EXACT_BETA: Duration = Duration::from_secs(1);
const BUDGET_QUADRILATERALS: Duration = Duration::from_secs(300);
const BUDGET_AVERAGING: Duration = Duration::from_secs(300);
const BUDGET_RECIPE: Duration = Duration::from_secs(60);
const BUDGET_HIGMAN_SIMS: Duration = Duration::from_secs(600);
const BUDGET_SRG_ALGEBRA: Duration = Duration::from_secs(1);
const BUDGET_GIRTH5: Duration = Duration::from_secs(10);
const BUDGET_SPARSE_IDENTITIES: Duration = Duration::from_secs(60);
const BUDGET_INDEPENDENCE: Duration = Duration::from_secs(300);

/// Seed of the random large-α sample in criterion 10.
const LARGE_ALPHA_SEED: u64 = 7;
const LARGE_ALPHA_SAMPLES: usize = 200;

struct Outcome {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
    elapsed: Duration,
    budget: Duration,
}

fn criterion(id: u32, title: &'static str, budget: Duration, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (pass, detail) = f();
    let elapsed = start.elapsed();
    Outcome {
        id,
        title,
        pass: pass && elapsed <= budget,
        detail,
        elapsed,
        budget,
    }
}

fn all_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(|k| enumerate_triangle_free(k).unwrap()).collect()
}

/// Vertices of weight 1 and the vertices of weight strictly between 0 and 1.
fn split_half(cert: &BoundCertificate) -> (VertexSet, Vec<usize>) {
    let half = cert.half.as_ref().expect("recipe certificates carry a half");
    let n = half.n();
    let ones = VertexSet::from_vertices(n, half.ones());
    let fractional = (0..n)
        .filter(|&v| !ones.contains(v) && *half.weight(v) != int(0))
        .collect();
    (ones, fractional)
}

fn counts() -> (bool, String) {
    let n6 = enumerate_triangle_free(6).unwrap().len();
    let n8 = enumerate_triangle_free(8).unwrap().len();
    let flags = count_edge_rooted_flags4();
    (
        n6 == 38 && n8 == 410 && flags == 10,
        format!("|M6| = {n6}, |M8| = {n8}, edge-rooted flags = {flags}"),
    )
}

fn exact_beta() -> (bool, String) {
    let c5 = beta_exact(&Graph::cycle(5).unwrap()).unwrap().0;
    let p = beta_exact(&named("petersen").unwrap().graph).unwrap().0;
    (
        c5 == rat(1, 50) && p == rat(1, 50),
        format!("beta(C5) = {c5}, beta(Petersen) = {p}"),
    )
}

fn quadrilaterals() -> (bool, String) {
    let graphs = all_up_to(8);
    let general = |r: &Rational| rat(3, 2) * r * r - rat(81, 256) * r;
    let no_matching = |r: &Rational| rat(3, 2) * r * r - rat(6, 25) * r;
    let mut bad_general = 0;
    let mut bad_restricted = 0;
    let mut restricted = 0;
    for g in &graphs {
        let (r, c4) = (rho(g), c4_density(g));
        bad_general += (c4 < general(&r)) as usize;
        if !g.has_induced_2matching() {
            restricted += 1;
            bad_restricted += (c4 < no_matching(&r)) as usize;
        }
    }
    let cl = named("clebsch").unwrap().graph;
    let (cr, cc) = (rho(&cl), c4_density(&cl));
    let clebsch_tight = cr == rat(5, 16) && cc == rat(195, 4096) && cc == general(&cr);
    let c5 = Graph::cycle(5).unwrap();
    let (fr, fc) = (rho(&c5), c4_density(&c5));
    let c5_tight = fr == rat(2, 5) && fc == rat(18, 125) && fc == no_matching(&fr) && !c5.has_induced_2matching();
    (
        bad_general == 0 && bad_restricted == 0 && clebsch_tight && c5_tight,
        format!(
            "{} graphs, {bad_general} below the general bound; {restricted} without induced 2-matchings, {bad_restricted} below; Clebsch tight = {clebsch_tight}, C5 tight = {c5_tight}",
            graphs.len()
        ),
    )
}

fn averaging() -> (bool, String) {
    let graphs: Vec<Graph> = all_up_to(7).into_iter().filter(|g| g.edge_count() > 0).collect();
    let bad = graphs
        .iter()
        .filter(|g| beta_exact(g).unwrap().0 > krivelevich_bound(g).unwrap())
        .count();
    (
        bad == 0,
        format!(
            "{} graphs with an edge, {bad} with beta > rho/8 - C4/(12 rho)",
            graphs.len()
        ),
    )
}

fn recipes() -> (bool, String) {
    let start = Instant::now();
    let cl = named("clebsch").unwrap().graph;
    let c = clebsch_recipe_half(&cl, None).unwrap();
    let (set, _) = split_half(&c);
    let cl_edges = cl.induced_edge_count(&set);
    let cl_ok = set.len() == 8 && cl_edges <= 5 && c.bound <= rat(1, 50) && c.verify(&cl);
    let t_cl = start.elapsed();

    let start = Instant::now();
    let gw = named("gewirtz").unwrap().graph;
    let c = gewirtz_recipe_half(&gw).unwrap();
    let (set, _) = split_half(&c);
    let gw_edges = gw.induced_edge_count(&set);
    let gw_ok = set.len() == 28 && gw_edges == 51 && c.bound <= rat(17, 1000) && c.verify(&gw);
    let gw_bound = c.bound.clone();
    let t_gw = start.elapsed();

    let start = Instant::now();
    let m = named("m22").unwrap().graph;
    let c = m22_recipe_half(&m).unwrap();
    let (set, frac) = split_half(&c);
    let m_edges = m.induced_edge_count(&set);
    let extra = frac.first().map(|&v| m.neighbors(v).intersection_len(&set));
    let m_ok = set.len() == 38
        && m_edges == 109
        && frac.len() == 1
        && extra == Some(9)
        && c.bound < rat(192, 10000)
        && c.verify(&m);
    let t_m = start.elapsed();

    let in_time = [t_cl, t_gw, t_m].iter().all(|t| *t <= BUDGET_RECIPE);
    (
        cl_ok && gw_ok && m_ok && in_time,
        format!(
            "Clebsch: {cl_edges} induced edges; Gewirtz: {gw_edges} edges, beta <= {}; M22: |A| = {}, |E(A)| = {m_edges}, extra vertex sees {extra:?}, certificate {}",
            gw_bound,
            set.len(),
            c.bound
        ),
    )
}

fn higman_sims() -> (bool, String) {
    let g = named("higman_sims").unwrap().graph;
    let c = local_search_half(&g, DEFAULT_SEED, DEFAULT_RESTARTS).unwrap();
    let (set, frac) = split_half(&c);
    let edges = g.induced_edge_count(&set);
    let restart = c.param("restart").cloned().unwrap_or_else(|| int(-1));
    let target = rat(1, 50) - rat(1, 10000);
    (
        set.len() == 50
            && frac.is_empty()
            && edges <= 199
            && c.bound <= target
            && restart < int(DEFAULT_RESTARTS as i64),
        format!(
            "seed {DEFAULT_SEED}: 50-set with {edges} induced edges (beta <= {}), found on restart {restart}",
            c.bound
        ),
    )
}

fn srg_algebra() -> (bool, String) {
    let rho0 = QuadNum::rho0();
    let q21 = rho_qc(2, 1).unwrap();
    let q311 = rho_qc(3, 11).unwrap();
    let q14 = q1(4).unwrap();
    let krein = srg_beta_bound(3, 12).unwrap();
    let below = |x: &Rational| QuadNum::rational(x.clone()) < rho0;
    let values = q21 == rat(7, 50) && q311 == rat(583, 3350) && q14 == rat(29, 196) && krein == rat(11, 560);
    let order = below(&q21) && below(&q311) && below(&q14) && krein < rat(1, 50);
    (
        values && order,
        format!("Q(2,1) = {q21}, Q(3,11) = {q311}, Q1(4) = {q14} (all < rho0 = {rho0}); Krein bound = {krein} < 1/50"),
    )
}

fn girth5() -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for reading in [Reading::Displayed, Reading::Truncated] {
        let rows = girth5_report_with(reading).unwrap();
        let per_k: Vec<usize> = (2..=5).map(|k| rows.iter().filter(|r| r.k == k).count()).collect();
        let worst = rows.iter().map(|r| r.beta_bound.clone()).max().unwrap();
        let good = rows.len() == 80 && per_k == [10, 19, 26, 25] && rows.iter().all(|r| r.beta_bound <= rat(1, 50));
        ok &= good;
        parts.push(format!("{reading:?}: {} rows {per_k:?}, max bound {worst}", rows.len()));
    }
    (ok, parts.join("; "))
}

fn sparse_identities() -> (bool, String) {
    let r = verify_sparse_identities();
    let required = [
        "q_exact_division",
        "dq_drho_factorization",
        "individual_degrees",
        "q_vanishes_at_rho0",
        "taylor_sign_pattern",
        "case2_boundary_conditions",
    ];
    let missing: Vec<&str> = required.iter().copied().filter(|n| r.check(n).is_none()).collect();
    let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
    (
        missing.is_empty() && failed.is_empty(),
        format!("{} identities, missing {missing:?}, failed {failed:?}", r.checks.len()),
    )
}

fn independence() -> (bool, String) {
    let p = named("petersen").unwrap().graph;
    let a = VertexSet::from_vertices(10, independence_number(&p).1);
    let pc = independence_half(&p, &a).unwrap();
    let petersen_ok = a.len() == 4 && pc.bound <= rat(1, 50) && pc.verify(&p);

    let ids = independence_formula_checks();
    let four = ["dq_drbd_at_max", "q_at_max_is_q1", "dq1_dpb_at_alpha", "q1_diagonal"];
    let identities_ok = four.iter().all(|n| ids.check(n).is_some_and(|c| c.pass));

    let sample = random_large_alpha_graphs(LARGE_ALPHA_SEED, LARGE_ALPHA_SAMPLES);
    let mut bad = 0;
    for (g, a) in &sample {
        let alpha = rat(a.len() as i64, g.n() as i64);
        let c = independence_half(g, a).unwrap();
        if !c.verify(g) || c.bound > analytic_bound(&alpha) {
            bad += 1;
        }
    }
    (
        petersen_ok && identities_ok && bad == 0 && sample.len() == LARGE_ALPHA_SAMPLES,
        format!(
            "Petersen certificate {}; displayed identities hold = {identities_ok}; {bad}/{} random graphs above (alpha/2)(1/2 - alpha)",
            pc.bound,
            sample.len()
        ),
    )
}

#[test]
fn acceptance_criteria() {
    let outcomes = [
        criterion(1, "enumeration counts", BUDGET_COUNTS, counts),
        criterion(2, "exact beta of C5 and Petersen", BUDGET_EXACT_BETA, exact_beta),
        criterion(
            3,
            "C4 lower bounds on all graphs n <= 8",
            BUDGET_QUADRILATERALS,
            quadrilaterals,
        ),
        criterion(4, "averaging bound on all graphs n <= 7", BUDGET_AVERAGING, averaging),
        criterion(5, "named-graph recipe halves", 3 * BUDGET_RECIPE, recipes),
        criterion(6, "Higman-Sims local search", BUDGET_HIGMAN_SIMS, higman_sims),
        criterion(7, "strongly regular parameter algebra", BUDGET_SRG_ALGEBRA, srg_algebra),
        criterion(8, "girth-5 case analysis", BUDGET_GIRTH5, girth5),
        criterion(
            9,
            "sparse-case identity suite",
            BUDGET_SPARSE_IDENTITIES,
            sparse_identities,
        ),
        criterion(10, "large independence number suite", BUDGET_INDEPENDENCE, independence),
    ];
    for o in &outcomes {
        println!(
            "criterion {:>2} {}: {} ({}; {:.3}s of {}s)",
            o.id,
            if o.pass { "PASS" } else { "FAIL" },
            o.title,
            o.detail,
            o.elapsed.as_secs_f64(),
            o.budget.as_secs()
        );
    }
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
