//! Symbolic checks behind the sparse (`Δ ≤ 1/4`) case: the closed-form
//! bound `f(ρ, Δ, e₂)`, the polynomial `Q` defined by
//! `1/50 − f = Q / (200(1−Δ−e₂)(1−Δ−e₂+2Δe₂))`, and its sign analysis
//! around `ρ₀ = (33 − √161)/116`.

use num::{One, Signed, Zero};

use super::identity::IdentityReport;
use super::poly::{Polynomial, RatFn};
use super::quad::QuadNum;
use super::rational::{factorial, int, rat, Rational};
use crate::error::{Error, Result};

pub const RHO: &str = "rho";
pub const DELTA: &str = "Delta";
pub const E1: &str = "e1";
pub const E2: &str = "e2";

fn v(name: &str) -> Polynomial {
    Polynomial::var(name)
}
fn k(c: i64) -> Polynomial {
    Polynomial::int(c)
}
fn kr(n: i64, d: i64) -> Polynomial {
    Polynomial::constant(rat(n, d))
}

/// `f = numerator / denominator` as polynomials in `rho, Delta, e2`.
#[derive(Clone, Debug)]
pub struct SparseBoundForm {
    pub numerator: Polynomial,
    pub denominator: Polynomial,
}

impl SparseBoundForm {
    /// The closed form of the three-half estimate.
    pub fn displayed() -> Self {
        let (r, d, e) = (v(RHO), v(DELTA), v(E2));
        let inner =
            k(4) * d.pow(2) * &r - k(4) * d.pow(2) * &e + k(4) * &d * &r * &e - k(4) * &d * e.pow(2) - k(4) * &d * &r
                + k(2) * &d * &e
                + &r;
        let numerator = (k(1) - k(2) * &e) * inner;
        let denominator = k(8) * (k(1) + k(2) * &d * &e - &d - &e) * (k(1) - &d - &e);
        SparseBoundForm { numerator, denominator }
    }

    pub fn as_ratfn(&self) -> RatFn {
        RatFn {
            num: self.numerator.clone(),
            den: self.denominator.clone(),
        }
    }
}

/// `200(1−Δ−e₂)(1−Δ−e₂+2Δe₂)`, the factor clearing the denominator of `1/50 − f`.
pub fn q_multiplier() -> Polynomial {
    let (d, e) = (v(DELTA), v(E2));
    k(200) * (k(1) - &d - &e) * (k(1) - &d - &e + k(2) * &d * &e)
}

/// Computes `Q = (1/50 − f)·200(1−Δ−e₂)(1−Δ−e₂+2Δe₂)` by exact division;
/// returns the quotient and the division remainder.
pub fn q_from_bound(form: &SparseBoundForm) -> Result<(Polynomial, Polynomial)> {
    // 1/50 − N/D = (D − 50N) / (50 D)
    let top = &q_multiplier() * &(&form.denominator - &form.numerator.scale(&int(50)));
    let bottom = form.denominator.scale(&int(50));
    top.div_rem(&bottom)
}

/// The polynomial `Q(ρ, Δ, e₂)`.
pub fn sparse_q() -> Polynomial {
    let (q, r) = q_from_bound(&SparseBoundForm::displayed()).expect("nonzero divisor");
    assert!(r.is_zero());
    q
}

/// The displayed factorisation of `∂Q/∂ρ`.
pub fn dq_drho_displayed() -> Polynomial {
    let (d, e) = (v(DELTA), v(E2));
    k(-25) * (k(1) - k(2) * &e) * (k(4) * d.pow(2) + k(4) * &d * &e - k(4) * &d + k(1))
}

fn q_at(q: &Polynomial, rho: &QuadNum, delta: &QuadNum, e2: &QuadNum) -> Result<QuadNum> {
    q.eval(&[(RHO, rho.clone()), (DELTA, delta.clone()), (E2, e2.clone())])
}

fn qmin(a: &QuadNum, b: &QuadNum) -> QuadNum {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

/// Grid points `j·step` inside `[lo, hi]`, plus `extra` when it lies inside.
fn grid(lo: &QuadNum, hi: &Rational, step: &Rational, extra: Option<QuadNum>) -> Vec<QuadNum> {
    let mut pts = Vec::new();
    let mut j = Rational::zero();
    while &j <= hi {
        let p = QuadNum::rational(j.clone());
        if &p >= lo {
            pts.push(p);
        }
        j += step;
    }
    if let Some(x) = extra {
        if &x >= lo && x <= QuadNum::rational(hi.clone()) && !pts.contains(&x) {
            pts.push(x);
            pts.sort();
        }
    }
    pts
}

/// Runs every sparse-case identity with the displayed `f` and grid step 1/100.
pub fn verify_sparse_identities() -> IdentityReport {
    verify_sparse_identities_with(&SparseBoundForm::displayed(), &rat(1, 100))
}

pub fn verify_sparse_identities_with(form: &SparseBoundForm, step: &Rational) -> IdentityReport {
    let mut report = IdentityReport::new("sparse");
    match run(form, step, &mut report) {
        Ok(()) => {}
        Err(e) => report.push("evaluation", false, e.to_string()),
    }
    report
}

fn run(form: &SparseBoundForm, step: &Rational, report: &mut IdentityReport) -> Result<()> {
    if !step.is_positive() {
        return Err(Error::Precondition("grid step must be positive".into()));
    }
    let quarter = rat(1, 4);
    let rho0 = QuadNum::rho0();

    let x = v("x");
    let minpoly = k(58) * x.pow(2) - k(33) * &x + k(4);
    let at = minpoly.eval(&[("x", rho0.clone())])?;
    report.push_eq("rho0_minimal_polynomial", at.is_zero(), &at, 0);

    let (q, rem) = q_from_bound(form)?;
    report.push_eq("q_exact_division", rem.is_zero(), &rem, 0);

    let dq = q.derive(RHO)?;
    let want = dq_drho_displayed();
    report.push_eq("dq_drho_factorization", dq == want, &dq, &want);

    // 4Δ² + 4Δe₂ − 4Δ + 1 = (1 − 2Δ)² + 4Δe₂, so ∂Q/∂ρ ≤ −25(1−2e₂)(1−2Δ)²
    let (d, e) = (v(DELTA), v(E2));
    let lhs = k(4) * d.pow(2) + k(4) * &d * &e - k(4) * &d + k(1);
    let rhs = (k(1) - k(2) * &d).pow(2) + k(4) * &d * &e;
    report.push_eq("dq_drho_upper_bound_split", lhs == rhs, &lhs, &rhs);

    let degs = (q.degree_in(RHO)?, q.degree_in(DELTA)?, q.degree_in(E2)?);
    report.push(
        "individual_degrees",
        degs == (1, 2, 3),
        format!("(rho, Delta, e2) degrees = {degs:?}"),
    );

    let at0 = q_at(&q, &rho0, &rho0, &rho0)?;
    report.push_eq("q_vanishes_at_rho0", at0.is_zero(), &at0, 0);

    combination_checks(form, report)?;

    // Case e₂ ≤ ρ₀: Taylor coefficients of Q₁(Δ, ·) at e₂ = ρ₀.
    let mut bad = Vec::new();
    let deltas = grid(&QuadNum::rational(step.clone()), &quarter, step, Some(rho0.clone()));
    let derivs: Vec<Polynomial> = (0..=3).map(|r| q.derive_n(E2, r)).collect::<Result<_>>()?;
    for delta in &deltas {
        let rho = qmin(&rho0, delta);
        for (r, dr) in derivs.iter().enumerate() {
            let c = q_at(dr, &rho, delta, &rho0)?;
            let c = &c / &QuadNum::rational(factorial(r as u32));
            let ok = if r % 2 == 0 { c.signum() >= 0 } else { c.signum() < 0 };
            if !ok {
                bad.push(format!("Delta={delta} r={r} coeff={c}"));
            }
        }
    }
    report.push(
        "taylor_sign_pattern",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} Delta values, r = 0..3", deltas.len())
        } else {
            bad.join("; ")
        },
    );

    // Case e₂ ≥ ρ₀: Q₁ = Q(ρ₀, Δ, e₂) on Δ ∈ [e₂, 1/4].
    let mut bad = Vec::new();
    let e2s = grid(&rho0, &quarter, step, Some(rho0.clone()));
    let dq_ddelta = q.derive(DELTA)?;
    let qq = QuadNum::rational(quarter.clone());
    for e2 in &e2s {
        let left = q_at(&q, &rho0, e2, e2)?;
        let right = q_at(&q, &rho0, &qq, e2)?;
        let slope = q_at(&dq_ddelta, &rho0, e2, e2)?;
        for (what, val) in [
            ("Q1(e2,e2)", &left),
            ("Q1(1/4,e2)", &right),
            ("dQ1/dDelta(e2,e2)", &slope),
        ] {
            if val.signum() < 0 {
                bad.push(format!("e2={e2}: {what}={val}"));
            }
        }
    }
    report.push(
        "case2_boundary_conditions",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} e2 values", e2s.len())
        } else {
            bad.join("; ")
        },
    );

    // Direct corroboration of Q₁ ≥ 0 on the box 0 ≤ e₂ ≤ Δ ≤ 1/4.
    let mut bad = Vec::new();
    let mut points = 0usize;
    for delta in &deltas {
        let rho = qmin(&rho0, delta);
        for e2 in grid(&QuadNum::rational(Rational::zero()), &quarter, step, Some(rho0.clone())) {
            if &e2 > delta {
                continue;
            }
            points += 1;
            let val = q_at(&q, &rho, delta, &e2)?;
            if val.signum() < 0 {
                bad.push(format!("Delta={delta} e2={e2}: Q1={val}"));
            }
        }
    }
    report.push(
        "q1_grid_nonnegative",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{points} grid points")
        } else {
            bad.join("; ")
        },
    );
    Ok(())
}

/// `α₀, α₁, α₂, γ` and the three half bounds as rational functions of `e₁, e₂`.
struct Combination {
    alpha: [RatFn; 3],
    gamma: RatFn,
}

fn combination() -> Combination {
    let (e1, e2) = (v(E1), v(E2));
    let one = || k(1);
    let a0 = (one() - k(2) * &e1).pow(2) * (one() - k(2) * &e2);
    let a1 = (one() - k(2) * &e1) * (one() - k(2) * &e2);
    let a2 = k(2) * (one() - k(2) * &e1) * &e2;
    let gamma = RatFn {
        num: (one() - k(2) * &e1) * (one() - k(2) * &e2) * (one() - k(4) * &e1 + k(4) * e1.pow(2) + k(4) * &e1 * &e2),
        den: k(2) * (one() - &e1 - &e2),
    };
    Combination {
        alpha: [RatFn::poly(a0), RatFn::poly(a1), RatFn::poly(a2)],
        gamma,
    }
}

fn combination_checks(form: &SparseBoundForm, report: &mut IdentityReport) -> Result<()> {
    let (e1, e2) = (v(E1), v(E2));
    let c = combination();
    let s = &(k(1) - &e1) - &e2;
    let p = |top: Polynomial| RatFn {
        num: top,
        den: s.clone(),
    };
    let p1 = p(kr(1, 2) - &e1);
    let p2 = p(kr(1, 2) - &e2);
    let p0 = p(kr(1, 2) - &e1 - &e2);

    let want = RatFn::poly(k(2) * (k(1) - k(2) * &e1) * (k(1) - &e1 - &e2 + k(2) * &e1 * &e2));
    let total = &(&c.alpha[0] + &c.alpha[1]) + &c.alpha[2];
    report.push_eq("combination_total_weight", total.same_as(&want), &total.num, &want.num);

    // within-part terms use the 2|E(X)|/n² scale, matching the cross terms
    let r1b = &(&c.alpha[0] * &p0) + &(&c.alpha[1] * &p1);
    let r2b = &(&c.alpha[0] * &p0) + &(&c.alpha[2] * &p2);
    let rb = &(&(&c.alpha[0] * &(&p0 * &p0)) + &(&c.alpha[1] * &(&p1 * &p1))) + &(&c.alpha[2] * &(&p2 * &p2));
    report.push_eq(
        "combination_rho_a1b",
        r1b.same_as(&c.alpha[0]),
        &r1b.num,
        &c.alpha[0].num,
    );
    report.push_eq("combination_rho_a2b", r2b.same_as(&c.gamma), &r2b.num, &c.gamma.num);
    report.push_eq("combination_rho_b", rb.same_as(&c.gamma), &rb.num, &c.gamma.num);

    let diff = &c.alpha[0] - &c.gamma;
    let note = RatFn {
        num: (k(1) - k(2) * &e1) * (k(1) - k(2) * &e2) * (k(1) - k(2) * &e1 - k(2) * &e2),
        den: k(2) * (k(1) - &e1 - &e2),
    };
    report.push_eq("alpha0_minus_gamma", diff.same_as(&note), &diff.num, &note.num);

    // ρ_{a₁a₂} + ρ_{a₁b} ≤ 2Δe₂ with e₁ = Δ yields f
    let bound = &(&diff * &RatFn::poly(k(2) * &e1 * &e2)) + &(&c.gamma * &RatFn::poly(v(RHO)));
    let bound = bound.div(&RatFn::poly(
        k(4) * (k(1) - k(2) * &e1) * (k(1) - &e1 - &e2 + k(2) * &e1 * &e2),
    ))?;
    let bound = bound.substitute(E1, &v(DELTA))?;
    let f = form.as_ratfn();
    report.push_eq("f_from_combination", bound.same_as(&f), &bound.num, &f.num);
    Ok(())
}

/// `Q₁(Δ, e₂) = Q(min(ρ₀, Δ), Δ, e₂)` at a point.
pub fn q1_value(delta: &QuadNum, e2: &QuadNum) -> QuadNum {
    let q = sparse_q();
    let rho = qmin(&QuadNum::rho0(), delta);
    q_at(&q, &rho, delta, e2).expect("all variables bound")
}

pub fn one_fiftieth() -> Rational {
    Rational::one() / int(50)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_run_passes() {
        let report = verify_sparse_identities();
        for c in &report.checks {
            assert!(c.pass, "{}: {} {:?} {:?}", c.name, c.detail, c.lhs, c.rhs);
        }
        assert_eq!(report.checks.len(), 15);
    }

    #[test]
    fn q_expansion() {
        // −25ρ + 4 constant/ρ part of the expansion
        let q = sparse_q();
        assert_eq!(q.coefficient(&[(RHO, 1)]).unwrap(), int(-25));
        assert_eq!(q.coefficient(&[]).unwrap(), int(4));
        assert_eq!(q.coefficient(&[(DELTA, 1), (E2, 3)]).unwrap(), int(-200));
        assert_eq!(q.num_terms(), 17);
    }

    #[test]
    fn perturbed_denominator_breaks_division() {
        let mut form = SparseBoundForm::displayed();
        form.denominator = &form.denominator + &Polynomial::var(DELTA);
        let report = verify_sparse_identities_with(&form, &rat(1, 10));
        let c = report.check("q_exact_division").unwrap();
        assert!(!c.pass);
        assert!(c.lhs.is_some() && c.rhs.is_some());
        assert!(!report.passed());
    }

    #[test]
    fn perturbed_numerator_breaks_derivative_identity() {
        let mut form = SparseBoundForm::displayed();
        form.numerator = &form.numerator + &Polynomial::var(RHO);
        let report = verify_sparse_identities_with(&form, &rat(1, 10));
        assert!(!report.check("dq_drho_factorization").unwrap().pass);
        assert!(!report.check("f_from_combination").unwrap().pass);
    }

    #[test]
    fn q1_is_zero_at_the_corner() {
        let r = QuadNum::rho0();
        assert!(q1_value(&r, &r).is_zero());
        assert!(q1_value(&QuadNum::rational(rat(1, 4)), &QuadNum::rational(rat(1, 5))).signum() > 0);
    }

    #[test]
    fn zero_step_is_rejected() {
        let report = verify_sparse_identities_with(&SparseBoundForm::displayed(), &int(0));
        assert!(!report.passed());
    }
}
