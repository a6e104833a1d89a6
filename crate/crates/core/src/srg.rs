//! Parameter algebra of triangle-free strongly regular graphs, written in
//! terms of the positive eigenvalue `q` and the common-neighbour count `c`.

use num::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::constructions::{clebsch_recipe_half, gewirtz_recipe_half, m22_recipe_half};
use crate::density::{c4_density, rho};
use crate::error::{Error, Result};
use crate::exactmath::rational::as_string;
use crate::exactmath::{fmt_rational, int, rat, Polynomial, QuadNum, RatFn, Rational};
use crate::graphcore::named;
use crate::halves::{beta_exact, local_search_half, DEFAULT_RESTARTS, DEFAULT_SEED};
use crate::report::{run, CheckResult, Relation, Section};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgParams {
    pub q: u64,
    pub c: u64,
    pub k: u64,
    /// `1 + k(k − 1 + c)/c`; inadmissible parameters give a non-integer.
    #[serde(with = "as_string")]
    pub n: Rational,
    pub s: u64,
    pub admissible: bool,
}

/// Derived parameters; requires `q ≥ 1` and `1 ≤ c ≤ q(q + 1)`.
pub fn srg_from_qc(q: u64, c: u64) -> Result<SrgParams> {
    if q == 0 || c == 0 || c > q * (q + 1) {
        return Err(Error::Precondition(format!(
            "need q ≥ 1 and 1 ≤ c ≤ q(q+1), got q={q}, c={c}"
        )));
    }
    let k = (q + 1) * c + q * q;
    let n = Rational::one() + rat(k as i64, c as i64) * int((k - 1 + c) as i64);
    let s = 2 * q + c;
    debug_assert_eq!(s * s, c * c + 4 * (k - c));
    Ok(SrgParams {
        q,
        c,
        k,
        admissible: n.is_integer(),
        n,
        s,
    })
}

/// `Q(q, c) = c(qc + q² + c) / ((qc + q² + 2c + q)(qc + q² + c − q))`, which
/// is `k/n`. Defined on the whole range of `c`, admissible or not.
pub fn rho_qc(q: u64, c: u64) -> Result<Rational> {
    let p = srg_from_qc(q, c)?;
    let (q, c) = (int(q as i64), int(c as i64));
    let value =
        &c * (&q * &c + &q * &q + &c) / ((&q * &c + &q * &q + int(2) * &c + &q) * (&q * &c + &q * &q + &c - &q));
    debug_assert_eq!(value, int(p.k as i64) / &p.n);
    Ok(value)
}

/// `Q₁(q) = Q(q, q(q + 1))`.
pub fn q1(q: u64) -> Result<Rational> {
    rho_qc(q, q * (q + 1))
}

/// `3(k² + c²(n − k − 1))/n³`, the `C₄` density of an SRG with `λ = 0`.
pub fn srg_c4_nkc(n: &Rational, k: &Rational, c: &Rational) -> Rational {
    int(3) * (k * k + c * c * (n - k - Rational::one())) / (n * n * n)
}

pub fn srg_c4(p: &SrgParams) -> Rational {
    srg_c4_nkc(&p.n, &int(p.k as i64), &int(p.c as i64))
}

/// `((2/3)C₄ + ρ²(1 − 4ρ)) / (8ρ(1 − 2ρ)²)`, valid for regular
/// triangle-free graphs with `0 < ρ < 1/2`.
pub fn regular_beta_bound(rho: &Rational, c4: &Rational) -> Result<Rational> {
    if !rho.is_positive() || *rho >= rat(1, 2) {
        return Err(Error::Precondition(format!(
            "need 0 < ρ < 1/2, got {}",
            fmt_rational(rho)
        )));
    }
    let one = Rational::one();
    let t = &one - int(2) * rho;
    Ok((rat(2, 3) * c4 + rho * rho * (&one - int(4) * rho)) / (int(8) * rho * &t * &t))
}

/// `c(cq + q² − c) / (8q(q + 1)(c + q)(c + q − 1))`.
pub fn srg_beta_bound(q: u64, c: u64) -> Result<Rational> {
    srg_from_qc(q, c)?;
    let (q, c) = (int(q as i64), int(c as i64));
    let one = Rational::one();
    Ok(&c * (&c * &q + &q * &q - &c) / (int(8) * &q * (&q + &one) * (&c + &q) * (&c + &q - &one)))
}

fn pv(name: &str) -> Polynomial {
    Polynomial::var(name)
}

fn pk(c: i64) -> Polynomial {
    Polynomial::int(c)
}

/// `Q(q, c)` as a rational function.
pub fn q_ratfn() -> RatFn {
    let (q, c) = (pv("q"), pv("c"));
    let base = &q * &c + q.pow(2);
    RatFn {
        num: &c * &(&base + &c),
        den: &(&base + &(pk(2) * &c) + &q) * &(&base + &c - &q),
    }
}

/// The displayed `∂Q/∂c`.
pub fn dq_dc_displayed() -> RatFn {
    let (q, c) = (pv("q"), pv("c"));
    let base = &q * &c + q.pow(2);
    let top = &q
        * &(&q + &pk(1))
        * (c.pow(2) * q.pow(2) + pk(2) * &c * q.pow(3) + q.pow(4) + c.pow(2) * &q
            - q.pow(3)
            - c.pow(2)
            - pk(2) * &q * &c);
    let d1 = &base + &(pk(2) * &c) + &q;
    let d2 = &base + &c - &q;
    RatFn {
        num: top,
        den: d1.pow(2) * d2.pow(2),
    }
}

fn dq_dc_numerator(q: i64, c: i64) -> i64 {
    q * (q + 1) * (c * c * q * q + 2 * c * q.pow(3) + q.pow(4) + c * c * q - q.pow(3) - c * c - 2 * q * c)
}

fn le_fiftieth(id: &str, claim: &str, value: &Rational) -> CheckResult {
    CheckResult::rational(id, claim, value, Relation::Le, &rat(1, 50))
}

/// The case analysis over `q`, with the default local-search settings.
pub fn srg_case_analysis() -> Section {
    srg_case_analysis_with(DEFAULT_SEED, DEFAULT_RESTARTS)
}

pub fn srg_case_analysis_with(seed: u64, restarts: usize) -> Section {
    let mut s = Section::new("srg");
    let rho0 = QuadNum::rho0();

    s.push(run("dq_dc_identity", "dQ/dc equals the displayed quotient", || {
        let d = q_ratfn().derive("c")?;
        let ok = d.same_as(&dq_dc_displayed());
        Ok(CheckResult::count(
            "dq_dc_identity",
            "dQ/dc equals the displayed quotient",
            ok as u64,
            Relation::Eq,
            1,
        ))
    }));

    s.push(run(
        "dq_dc_nonnegative",
        "dQ/dc numerator >= 0 for 1<=q<=10, 1<=c<=q(q+1)",
        || {
            let bad = (1..=10i64)
                .flat_map(|q| (1..=q * (q + 1)).map(move |c| (q, c)))
                .filter(|&(q, c)| dq_dc_numerator(q, c) < 0);
            Ok(CheckResult::count(
                "dq_dc_nonnegative",
                "negative grid points of the dQ/dc numerator",
                bad.count() as u64,
                Relation::Eq,
                0,
            ))
        },
    ));

    s.push(run("q_increasing_in_c", "Q(q,c) < Q(q,c+1) on the same grid", || {
        let mut bad = 0;
        for q in 1..=10u64 {
            for c in 1..q * (q + 1) {
                if rho_qc(q, c)? >= rho_qc(q, c + 1)? {
                    bad += 1;
                }
            }
        }
        Ok(CheckResult::count(
            "q_increasing_in_c",
            "grid pairs with Q(q,c) >= Q(q,c+1)",
            bad,
            Relation::Eq,
            0,
        ))
    }));

    s.push(run("q1_closed_form", "Q(q,q(q+1)) = (q^2+3q+1)/(q(q+3)^2)", || {
        let q = pv("q");
        let sub = q_ratfn().substitute("c", &(&q.pow(2) + &q))?;
        let want = RatFn {
            num: q.pow(2) + pk(3) * &q + pk(1),
            den: &q * &(&q + &pk(3)).pow(2),
        };
        Ok(CheckResult::count(
            "q1_closed_form",
            "Q(q,q(q+1)) = (q^2+3q+1)/(q(q+3)^2)",
            sub.same_as(&want) as u64,
            Relation::Eq,
            1,
        ))
    }));

    s.push(run("q1_decreasing", "Q1(q) > Q1(q+1) for q = 1..20", || {
        let mut bad = 0;
        for q in 1..=20 {
            if q1(q)? <= q1(q + 1)? {
                bad += 1;
            }
        }
        Ok(CheckResult::count(
            "q1_decreasing",
            "q in 1..20 with Q1(q) <= Q1(q+1)",
            bad,
            Relation::Eq,
            0,
        ))
    }));

    for (id, q, c, want) in [
        ("q1_4", 4, 20, rat(29, 196)),
        ("q_2_1", 2, 1, rat(7, 50)),
        ("q_3_11", 3, 11, rat(583, 3350)),
    ] {
        let claim = format!("Q({q},{c}) = {}", fmt_rational(&want));
        s.push(run(&format!("{id}_value"), &claim, || {
            Ok(CheckResult::rational(
                &format!("{id}_value"),
                &claim,
                &rho_qc(q, c)?,
                Relation::Eq,
                &want,
            ))
        }));
        let claim = format!("Q({q},{c}) < rho0");
        s.push(run(&format!("{id}_below_rho0"), &claim, || {
            Ok(CheckResult::compare(
                &format!("{id}_below_rho0"),
                &claim,
                &QuadNum::rational(rho_qc(q, c)?),
                Relation::Lt,
                &rho0,
            ))
        }));
    }

    s.push(run("q1_c1_petersen", "q=1, c=1: exact beta(Petersen) <= 1/50", || {
        let p = srg_from_qc(1, 1)?;
        let g = named("petersen")?;
        check_params(&p, &g.graph)?;
        Ok(le_fiftieth(
            "q1_c1_petersen",
            "q=1, c=1: exact beta(Petersen) <= 1/50",
            &beta_exact(&g.graph)?.0,
        ))
    }));
    s.push(run("q1_c2_clebsch", "q=1, c=2: Clebsch recipe half <= 1/50", || {
        let p = srg_from_qc(1, 2)?;
        let g = named("clebsch")?;
        check_params(&p, &g.graph)?;
        Ok(le_fiftieth(
            "q1_c2_clebsch",
            "q=1, c=2: Clebsch recipe half <= 1/50",
            &clebsch_recipe_half(&g.graph, None)?.bound,
        ))
    }));
    s.push(run(
        "q2_c2_gewirtz",
        "q=2, c=2: Gewirtz recipe half spans 51 edges, beta <= 0.017",
        || {
            let g = named("gewirtz")?;
            check_params(&srg_from_qc(2, 2)?, &g.graph)?;
            let cert = gewirtz_recipe_half(&g.graph)?;
            Ok(CheckResult::rational(
                "q2_c2_gewirtz",
                "q=2, c=2: Gewirtz recipe half <= 17/1000",
                &cert.bound,
                Relation::Le,
                &rat(17, 1000),
            ))
        },
    ));
    for c in [3, 5] {
        let p = srg_from_qc(2, c).expect("in range");
        s.push(CheckResult {
            id: format!("q2_c{c}_excluded"),
            claim: format!(
                "q=2, c={c} (n={}, k={}) excluded by known feasibility conditions; taken as an assumption, not computed",
                fmt_rational(&p.n),
                p.k
            ),
            computed: "1".into(),
            bound: "1".into(),
            pass: true,
            runtime_ms: 0,
        });
    }
    s.push(run("q2_c4_m22", "q=2, c=4: M22 recipe half <= 0.0192", || {
        let g = named("m22")?;
        check_params(&srg_from_qc(2, 4)?, &g.graph)?;
        let cert = m22_recipe_half(&g.graph)?;
        Ok(CheckResult::rational(
            "q2_c4_m22",
            "q=2, c=4: M22 recipe half (109 + 9/2)/77^2 < 192/10000",
            &cert.bound,
            Relation::Lt,
            &rat(192, 10000),
        ))
    }));
    s.push(run(
        "q2_c6_higman_sims",
        "q=2, c=6: Higman-Sims local search <= 1/50 - 1/10000",
        || {
            let g = named("higman_sims")?;
            check_params(&srg_from_qc(2, 6)?, &g.graph)?;
            let cert = local_search_half(&g.graph, seed, restarts)?;
            Ok(CheckResult::rational(
                "q2_c6_higman_sims",
                &format!("q=2, c=6: Higman-Sims local search (seed {seed}, {restarts} restarts) <= 199/10000"),
                &cert.bound,
                Relation::Le,
                &rat(199, 10000),
            ))
        },
    ));

    s.push(run("krein_params", "q=3, c=12: k = 57, n = 324", || {
        let p = srg_from_qc(3, 12)?;
        let ok = p.k == 57 && p.n == int(324);
        Ok(CheckResult::count(
            "krein_params",
            "q=3, c=12 gives k = 57 and n = 324",
            ok as u64,
            Relation::Eq,
            1,
        ))
    }));
    s.push(run("krein_value", "srg_beta_bound(3,12) = 11/560", || {
        Ok(CheckResult::rational(
            "krein_value",
            "srg_beta_bound(3,12) = 11/560",
            &srg_beta_bound(3, 12)?,
            Relation::Eq,
            &rat(11, 560),
        ))
    }));
    s.push(run("krein_bound", "11/560 <= 1/50", || {
        Ok(le_fiftieth("krein_bound", "11/560 <= 1/50", &srg_beta_bound(3, 12)?))
    }));

    s.push(run(
        "beta_bound_identity",
        "srg_beta_bound = regular_beta_bound(Q, C4) for admissible q <= 6",
        || {
            let mut bad = 0;
            for q in 1..=6 {
                for c in 1..=q * (q + 1) {
                    let p = srg_from_qc(q, c)?;
                    if !p.admissible {
                        continue;
                    }
                    if srg_beta_bound(q, c)? != regular_beta_bound(&rho_qc(q, c)?, &srg_c4(&p))? {
                        bad += 1;
                    }
                }
            }
            Ok(CheckResult::count(
                "beta_bound_identity",
                "admissible (q,c), q <= 6, where the two bounds differ",
                bad,
                Relation::Eq,
                0,
            ))
        },
    ));

    for name in crate::graphcore::named::NAMES {
        let id = format!("c4_closed_form_{name}");
        let claim = format!("{name}: C4 = 3(k^2 + c^2(n-k-1))/n^3 and rho = k/n");
        s.push(run(&id, &claim, || {
            let g = named(name)?;
            let quad = g.expected_srg.expect("named graphs carry parameters");
            let (n, k, c) = (int(quad.n as i64), int(quad.k as i64), int(quad.mu as i64));
            let closed = srg_c4_nkc(&n, &k, &c);
            if rho(&g.graph) != &k / &n {
                return Err(Error::Inconsistent("rho differs from k/n".into()));
            }
            Ok(CheckResult::rational(
                &id,
                &claim,
                &c4_density(&g.graph),
                Relation::Eq,
                &closed,
            ))
        }));
    }
    s
}

fn check_params(p: &SrgParams, g: &crate::graphcore::Graph) -> Result<()> {
    if p.n != int(g.n() as i64) || g.regular_degree() != Some(p.k as usize) {
        return Err(Error::Inconsistent(format!(
            "graph does not have n = {}, k = {}",
            fmt_rational(&p.n),
            p.k
        )));
    }
    Ok(())
}

/// Whether a rational lies below ρ₀, decided exactly.
pub fn below_rho0(x: &Rational) -> bool {
    QuadNum::rational(x.clone()) < QuadNum::rho0()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_parameters() {
        let p = srg_from_qc(1, 1).unwrap();
        assert_eq!((p.k, p.n.clone()), (3, int(10)));
        let c = srg_from_qc(1, 2).unwrap();
        assert_eq!((c.k, c.n.clone()), (5, int(16)));
        let k = srg_from_qc(3, 12).unwrap();
        assert_eq!((k.k, k.n.clone(), k.admissible), (57, int(324), true));
        assert!(!srg_from_qc(3, 11).unwrap().admissible);
        assert!(srg_from_qc(1, 3).is_err());
        assert!(srg_from_qc(0, 1).is_err());
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho_qc(2, 1).unwrap(), rat(7, 50));
        assert_eq!(rho_qc(3, 11).unwrap(), rat(583, 3350));
        assert_eq!(q1(4).unwrap(), rat(29, 196));
        assert!(below_rho0(&rat(29, 196)));
        assert!(!below_rho0(&rat(18, 100)));
    }

    #[test]
    fn c4_closed_forms() {
        assert_eq!(srg_c4(&srg_from_qc(1, 1).unwrap()), rat(9, 200));
        assert_eq!(srg_c4(&srg_from_qc(1, 2).unwrap()), rat(195, 4096));
        assert_eq!(srg_c4_nkc(&int(5), &int(2), &int(1)), rat(18, 125));
    }

    #[test]
    fn beta_bounds() {
        assert_eq!(srg_beta_bound(3, 12).unwrap(), rat(11, 560));
        assert_eq!(srg_beta_bound(1, 1).unwrap(), rat(1, 32));
        assert_eq!(srg_beta_bound(1, 2).unwrap(), rat(1, 48));
        assert_eq!(regular_beta_bound(&rat(3, 10), &rat(9, 200)).unwrap(), rat(1, 32));
        // degenerates on C₅: the numerator cancels exactly, below β(C₅) = 1/50
        let c5 = regular_beta_bound(&rat(2, 5), &rat(18, 125)).unwrap();
        assert_eq!(c5, rat(0, 1));
        let kp = srg_from_qc(3, 12).unwrap();
        assert_eq!(
            regular_beta_bound(&rho_qc(3, 12).unwrap(), &srg_c4(&kp)).unwrap(),
            rat(11, 560)
        );
        assert!(regular_beta_bound(&rat(1, 2), &rat(0, 1)).is_err());
        assert!(regular_beta_bound(&rat(0, 1), &rat(0, 1)).is_err());
    }

    #[test]
    fn case_analysis_passes() {
        let s = srg_case_analysis();
        let failures: Vec<String> = s.failures().map(|c| c.line()).collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert!(s.check("krein_bound").unwrap().pass);
        assert_eq!(s.check("krein_value").unwrap().computed, "11/560");
    }

    #[test]
    fn numerator_matches_symbolic_derivative() {
        let d = dq_dc_displayed();
        for (q, c) in [(1, 1), (2, 5), (3, 7)] {
            let num = d.num.eval(&[("q", int(q)), ("c", int(c))]).unwrap();
            assert_eq!(num, int(dq_dc_numerator(q, c)));
        }
    }
}
