//! The reproduction suites, one [`Section`] each.

use std::fmt;
use std::str::FromStr;

use num::Zero;

use crate::constructions::{krivelevich_bound, maxdeg_halves, triple_half_bound};
use crate::density::{c4_density, rho};
use crate::error::{Error, Result};
use crate::exactmath::{int, rat, verify_sparse_identities, Rational};
use crate::girth5::girth5_section;
use crate::graphcore::{count_edge_rooted_flags4, enumerate_triangle_free, named, Graph, VertexSet};
use crate::halves::{beta_exact, DEFAULT_RESTARTS, DEFAULT_SEED};
use crate::independence::{analytic_bound, independence_formula_checks, independence_half, random_large_alpha_graphs};
use crate::report::{run, CheckResult, Relation, Report, Section};
use crate::srg::srg_case_analysis_with;

/// Triangle-free counts for `n = 1..=8`.
pub const TRIANGLE_FREE_COUNTS: [u64; 8] = [1, 2, 3, 7, 14, 38, 107, 410];
pub const EDGE_ROOTED_FLAGS: u64 = 10;
/// Seed and sample size of the random large-α property check.
pub const INDEPENDENCE_SEED: u64 = 2024;
pub const INDEPENDENCE_SAMPLES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SectionName {
    Quadrilaterals,
    Sparse,
    Srg,
    Independence,
    Girth5,
    Counts,
}

impl SectionName {
    pub const ALL: [SectionName; 6] = [
        SectionName::Counts,
        SectionName::Quadrilaterals,
        SectionName::Sparse,
        SectionName::Srg,
        SectionName::Independence,
        SectionName::Girth5,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SectionName::Quadrilaterals => "quadrilaterals",
            SectionName::Sparse => "sparse",
            SectionName::Srg => "srg",
            SectionName::Independence => "independence",
            SectionName::Girth5 => "girth5",
            SectionName::Counts => "counts",
        }
    }
}

impl fmt::Display for SectionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SectionName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SectionName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown section `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Seed of the Higman-Sims local search.
    pub seed: u64,
    /// Restart budget of that search.
    pub restarts: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: DEFAULT_SEED,
            restarts: DEFAULT_RESTARTS,
        }
    }
}

pub fn run_section(name: SectionName, opts: &VerifyOptions) -> Section {
    match name {
        SectionName::Quadrilaterals => quadrilaterals(),
        SectionName::Sparse => sparse(),
        SectionName::Srg => srg_case_analysis_with(opts.seed, opts.restarts),
        SectionName::Independence => independence(),
        SectionName::Girth5 => girth5_section(),
        SectionName::Counts => counts(),
    }
}

/// Runs the given sections, up to `jobs` at a time, keeping their order.
pub fn run_sections(names: &[SectionName], opts: &VerifyOptions, jobs: usize) -> Report {
    let jobs = jobs.max(1);
    let mut sections = Vec::with_capacity(names.len());
    for chunk in names.chunks(jobs) {
        let done: Vec<Section> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunk
                .iter()
                .map(|&n| scope.spawn(move || run_section(n, opts)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("section thread panicked"))
                .collect()
        });
        sections.extend(done);
    }
    Report::new(sections)
}

pub fn verify_all(opts: &VerifyOptions) -> Report {
    run_sections(&SectionName::ALL, opts, 1)
}

/// Enumeration counts and the number of edge-rooted 4-vertex flags.
pub fn counts() -> Section {
    let mut s = Section::new("counts");
    for (i, &want) in TRIANGLE_FREE_COUNTS.iter().enumerate() {
        let n = i + 1;
        let id = format!("triangle_free_n{n}");
        let claim = format!("triangle-free graphs on {n} vertices");
        s.push(run(&id, &claim, || {
            Ok(CheckResult::count(
                &id,
                &claim,
                enumerate_triangle_free(n)?.len() as u64,
                Relation::Eq,
                want,
            ))
        }));
    }
    s.push(run("edge_rooted_flags4", "edge-rooted 4-vertex flags", || {
        Ok(CheckResult::count(
            "edge_rooted_flags4",
            "edge-rooted 4-vertex flags",
            count_edge_rooted_flags4() as u64,
            Relation::Eq,
            EDGE_ROOTED_FLAGS,
        ))
    }));
    s
}

/// `(3/2)ρ² − (81/256)ρ`.
pub fn c4_lower_general(rho: &Rational) -> Rational {
    rat(3, 2) * rho * rho - rat(81, 256) * rho
}

/// `(3/2)ρ² − (6/25)ρ`, for graphs without induced 2-matchings.
pub fn c4_lower_no_2matching(rho: &Rational) -> Rational {
    rat(3, 2) * rho * rho - rat(6, 25) * rho
}

fn all_small(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_triangle_free(n)?);
    }
    Ok(out)
}

/// Lower bounds on the `C₄` density over all triangle-free graphs on at
/// most 8 vertices, their equality cases, and the averaging bound on `β`
/// for at most 7 vertices.
pub fn quadrilaterals() -> Section {
    let mut s = Section::new("quadrilaterals");
    s.push(run(
        "c4_general",
        "C4 >= (3/2)rho^2 - (81/256)rho on all triangle-free n <= 8",
        || {
            let graphs = all_small(8)?;
            let bad = graphs
                .iter()
                .filter(|g| c4_density(g) < c4_lower_general(&rho(g)))
                .count();
            Ok(CheckResult::count(
                "c4_general",
                &format!("violations among {} graphs", graphs.len()),
                bad as u64,
                Relation::Eq,
                0,
            ))
        },
    ));
    s.push(run("c4_general_clebsch", "equality at the Clebsch graph", || {
        let g = named("clebsch")?.graph;
        let c4 = c4_density(&g);
        if c4 != rat(195, 4096) {
            return Err(Error::Inconsistent("Clebsch C4 density is not 195/4096".into()));
        }
        Ok(CheckResult::rational(
            "c4_general_clebsch",
            "Clebsch: C4 = (3/2)rho^2 - (81/256)rho",
            &c4,
            Relation::Eq,
            &c4_lower_general(&rho(&g)),
        ))
    }));
    s.push(run(
        "c4_no_2matching",
        "C4 >= (3/2)rho^2 - (6/25)rho without induced 2-matchings, n <= 8",
        || {
            let graphs: Vec<Graph> = all_small(8)?
                .into_iter()
                .filter(|g| !g.has_induced_2matching())
                .collect();
            let bad = graphs
                .iter()
                .filter(|g| c4_density(g) < c4_lower_no_2matching(&rho(g)))
                .count();
            Ok(CheckResult::count(
                "c4_no_2matching",
                &format!("violations among {} graphs", graphs.len()),
                bad as u64,
                Relation::Eq,
                0,
            ))
        },
    ));
    s.push(run("c4_no_2matching_c5", "equality at C5", || {
        let g = Graph::cycle(5)?;
        Ok(CheckResult::rational(
            "c4_no_2matching_c5",
            "C5: C4 = (3/2)rho^2 - (6/25)rho",
            &c4_density(&g),
            Relation::Eq,
            &c4_lower_no_2matching(&rho(&g)),
        ))
    }));
    s.push(run(
        "averaging_bound",
        "beta <= rho/8 - C4/(12 rho) on all triangle-free n <= 7 with an edge",
        || {
            let graphs: Vec<Graph> = all_small(7)?.into_iter().filter(|g| g.edge_count() > 0).collect();
            let mut bad = 0;
            for g in &graphs {
                if beta_exact(g)?.0 > krivelevich_bound(g)? {
                    bad += 1;
                }
            }
            Ok(CheckResult::count(
                "averaging_bound",
                &format!("violations among {} graphs", graphs.len()),
                bad,
                Relation::Eq,
                0,
            ))
        },
    ));
    s.push(run("averaging_bound_c5", "tight at C5", || {
        let g = Graph::cycle(5)?;
        Ok(CheckResult::rational(
            "averaging_bound_c5",
            "C5: rho/8 - C4/(12 rho) = 1/50",
            &krivelevich_bound(&g)?,
            Relation::Eq,
            &rat(1, 50),
        ))
    }));
    s.push(run(
        "blowup_invariance",
        "rho and C4 unchanged by doubling every vertex (n <= 6)",
        || {
            let mut bad = 0;
            for g in all_small(6)? {
                let b = g.blowup(2)?;
                if rho(&b) != rho(&g) || c4_density(&b) != c4_density(&g) {
                    bad += 1;
                }
            }
            Ok(CheckResult::count(
                "blowup_invariance",
                "graphs whose densities change under blow-up",
                bad,
                Relation::Eq,
                0,
            ))
        },
    ));
    s
}

/// The symbolic identities behind the sparse-case bound, plus the max-degree
/// and three-half constructions on a few concrete graphs.
pub fn sparse() -> Section {
    let mut s = Section::new("sparse");
    s.extend_identities("identity_", &verify_sparse_identities());
    s.push(run("maxdeg_petersen", "max-degree bound on Petersen = 3/98", || {
        let cert = maxdeg_halves(&named("petersen")?.graph)?;
        let analytic = cert.param("analytic").cloned().unwrap_or_else(Rational::zero);
        Ok(CheckResult::rational(
            "maxdeg_petersen",
            "max-degree analytic bound on Petersen",
            &analytic,
            Relation::Eq,
            &rat(3, 98),
        ))
    }));
    for n in [8, 10, 12, 16] {
        let id = format!("triple_c{n}");
        let claim = format!("three-half bound on C{n} is a valid half below f");
        s.push(run(&id, &claim, || {
            let g = Graph::cycle(n)?;
            let cert = triple_half_bound(&g)?;
            let f = cert.param("analytic").cloned().unwrap_or_else(Rational::zero);
            Ok(CheckResult::rational(&id, &claim, &cert.bound, Relation::Le, &f))
        }));
    }
    s
}

/// Identities for `Q` and `Q₁`, the two fixed examples and the random
/// property check.
pub fn independence() -> Section {
    let mut s = Section::new("independence");
    s.extend_identities("identity_", &independence_formula_checks());
    for (id, name, blowup) in [("petersen", "petersen", 1), ("c5_blowup", "c5", 2)] {
        let claim = format!("{name} (x{blowup}) with a maximum independent set: certificate <= 1/50");
        s.push(run(id, &claim, || {
            let g = named(name)?.graph.blowup(blowup)?;
            let a = VertexSet::from_vertices(g.n(), crate::graphcore::mis::independence_number(&g).1);
            let cert = independence_half(&g, &a)?;
            Ok(CheckResult::rational(
                id,
                &claim,
                &cert.bound,
                Relation::Le,
                &rat(1, 50),
            ))
        }));
    }
    s.push(run("bipartite", "K3,3: zero-edge half", || {
        let g = Graph::complete_bipartite(3, 3)?;
        let cert = independence_half(&g, &g.vertex_set(&[0, 1, 2]))?;
        Ok(CheckResult::rational(
            "bipartite",
            "K3,3: zero-edge half",
            &cert.bound,
            Relation::Eq,
            &int(0),
        ))
    }));
    let claim = format!("{INDEPENDENCE_SAMPLES} random even triangle-free graphs with 3/8 <= alpha <= 1/2: certificate <= (alpha/2)(1/2 - alpha)");
    s.push(run("random_large_alpha", &claim, || {
        let mut bad = 0;
        let sample = random_large_alpha_graphs(INDEPENDENCE_SEED, INDEPENDENCE_SAMPLES);
        for (g, a) in &sample {
            let cert = independence_half(g, a)?;
            if !cert.verify(g) || cert.bound > analytic_bound(&rat(a.len() as i64, g.n() as i64)) {
                bad += 1;
            }
        }
        Ok(CheckResult::count("random_large_alpha", &claim, bad, Relation::Eq, 0))
    }));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for n in SectionName::ALL {
            assert_eq!(n.as_str().parse::<SectionName>().unwrap(), n);
        }
        assert!("all".parse::<SectionName>().is_err());
    }

    #[test]
    fn cheap_sections_pass() {
        for s in [counts(), sparse(), independence()] {
            assert!(s.passed(), "{}: {:?}", s.name, s.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn parallel_keeps_order() {
        let names = [SectionName::Girth5, SectionName::Counts];
        let r = run_sections(&names, &VerifyOptions::default(), 2);
        assert_eq!(
            r.sections.iter().map(|s| s.name.as_str()).collect::<Vec<_>>(),
            vec!["girth5", "counts"]
        );
        assert!(r.passed());
    }
}
