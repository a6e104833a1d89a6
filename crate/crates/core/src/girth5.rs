//! Numeric case analysis for graphs of girth at least 5.
//!
//! With `k` the maximum degree and `n` the order, a minimal counterexample
//! must have `k ∈ {2,3,4,5}` and `n` in a window per `k`; for each of the
//! 80 pairs a recursive bound is minimised over `u`. Everything here is
//! integer or exact rational arithmetic.

use std::collections::HashMap;

use num::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::rational::as_string;
use crate::exactmath::{fmt_rational, int, rat, Rational};
use crate::report::{run, CheckResult, Relation, Section};

const RAMSEY3: [i64; 6] = [0, 1, 3, 6, 9, 14];

/// `R(3, u)` for `u ≤ 5`.
pub fn ramsey3(u: u32) -> Result<i64> {
    RAMSEY3
        .get(u as usize)
        .copied()
        .ok_or_else(|| Error::Precondition(format!("R(3,{u}) is outside the table (u ≤ 5)")))
}

fn ceil_div(a: i64, b: i64) -> i64 {
    Integer::div_ceil(&a, &b)
}

/// Inclusive range of `n` left open for maximum degree `k`; empty when
/// `lower > upper`.
pub fn n_window(k: i64) -> Result<(i64, i64)> {
    if !(2..=6).contains(&k) {
        return Err(Error::Precondition(format!("window defined for 2 ≤ k ≤ 6, got {k}")));
    }
    let lower = ceil_div(2 * k * (25 - 2 * k), 25 - 4 * k).max(2 * k + 1);
    let upper = ceil_div(27 * (k - 1), 2);
    Ok((lower, upper))
}

/// `((n−2k)²/50 + n/2 − k)/n² = 1/50 − (n(4k−25) + 50k − 4k²)/(50n²)`, from
/// bounding the `A`–`B` edges by the weight on `B`.
pub fn first_bound(k: i64, n: i64) -> Result<Rational> {
    if k < 1 || n < 2 * k + 1 {
        return Err(Error::Precondition(format!(
            "need k ≥ 1 and n ≥ 2k+1, got k={k}, n={n}"
        )));
    }
    Ok(rat(1, 50) - rat(n * (4 * k - 25) + 50 * k - 4 * k * k, 50 * n * n))
}

/// `1/50 − k(2n + 25 − 27k)/(25n²)`, from bounding the `A`–`B` edges by `k(k−1)`.
pub fn second_bound(k: i64, n: i64) -> Result<Rational> {
    if k < 1 || n < 2 * k + 1 {
        return Err(Error::Precondition(format!(
            "need k ≥ 1 and n ≥ 2k+1, got k={k}, n={n}"
        )));
    }
    Ok(rat(1, 50) - rat(k * (2 * n + 25 - 27 * k), 25 * n * n))
}

/// Memoised `γ(k, n, t, e)`.
#[derive(Default)]
pub struct Gamma {
    memo: HashMap<(i64, i64, i64, i64), Rational>,
}

impl Gamma {
    pub fn new() -> Self {
        Gamma::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn eval(&mut self, k: i64, n: i64, t: i64, e: i64) -> Result<Rational> {
        if k < 0 || n < 1 || t < 0 || e < 0 {
            return Err(Error::Precondition(format!(
                "γ({k},{n},{t},{e}) needs non-negative arguments and n ≥ 1"
            )));
        }
        if t > n / 2 {
            return Err(Error::Precondition(format!("γ needs t ≤ ⌊n/2⌋, got t={t}, n={n}")));
        }
        let mut t0 = t;
        let mut e0 = e;
        let mut path = Vec::new();
        // iterate the recursion instead of nesting; every visited key shares the answer
        let value = loop {
            if let Some(v) = self.memo.get(&(k, n, t0, e0)) {
                break v.clone();
            }
            path.push((t0, e0));
            // floor division; a negative numerator rounds down, as displayed
            let step = |es: i64| Integer::div_floor(&(k * t0 - 2 * es), &(n - t0));
            if n % 2 == 0 && t0 == n / 2 {
                break rat(e0, n * n);
            }
            if n % 2 == 1 && t0 == (n - 1) / 2 {
                let best = (0..=e0).map(|es| int(es) + rat(step(es), 2)).max().expect("e ≥ 0");
                break best / int(n * n);
            }
            e0 = (0..=e0).map(|es| es + step(es)).max().expect("e ≥ 0");
            t0 += 1;
        };
        for key in path {
            self.memo.insert((k, n, key.0, key.1), value.clone());
        }
        Ok(value)
    }
}

pub fn gamma(k: i64, n: i64, t: i64, e: i64) -> Result<Rational> {
    Gamma::new().eval(k, n, t, e)
}

/// Which subtraction sits inside the `min` of the largest-`u` case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reading {
    /// Plain subtraction `R(3,u) − (n − k² − 1)`.
    Displayed,
    /// Truncated subtraction `R(3,u) ∸ (n − k² − 1)`.
    Truncated,
}

/// `⌈n/2 − k⌉`, the largest useful `u`.
pub fn u_max(k: i64, n: i64) -> i64 {
    ceil_div(n - 2 * k, 2)
}

/// `β_u`, or `None` when `u` is out of range or `R(3,u) > n − k − 1`.
pub fn beta_u(gamma: &mut Gamma, k: i64, n: i64, u: i64, reading: Reading) -> Result<Option<Rational>> {
    let top = u_max(k, n);
    if u < 0 || u > top || u > 5 {
        return Ok(None);
    }
    let r = ramsey3(u as u32)?;
    if r > n - k - 1 {
        return Ok(None);
    }
    let far = n - k * k - 1;
    let truncated = (r - far).max(0);
    if u == top {
        let inner = match reading {
            Reading::Displayed => u.min(r - far),
            Reading::Truncated => u.min(truncated),
        };
        let value = crate::exactmath::monus(&int(inner), &rat(n % 2, 2));
        return Ok(Some(value / int(n * n)));
    }
    gamma.eval(k, n, k + u, u.min(truncated)).map(Some)
}

/// Row of the girth-5 table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRow {
    pub k: i64,
    pub n: i64,
    pub u_star: i64,
    #[serde(with = "as_string")]
    pub beta_bound: Rational,
    pub pass: bool,
}

/// Minimum of `β_u` over admissible `u`, with the smallest minimising `u`.
pub fn girth5_master_with(gamma: &mut Gamma, k: i64, n: i64, reading: Reading) -> Result<(Rational, i64)> {
    let mut best: Option<(Rational, i64)> = None;
    for u in 0..=u_max(k, n).min(5) {
        if let Some(b) = beta_u(gamma, k, n, u, reading)? {
            if best.as_ref().is_none_or(|(v, _)| b < *v) {
                best = Some((b, u));
            }
        }
    }
    best.ok_or_else(|| Error::Inconsistent(format!("no admissible u for k={k}, n={n}")))
}

pub fn girth5_master(k: i64, n: i64) -> Result<Rational> {
    girth5_master_with(&mut Gamma::new(), k, n, Reading::Displayed).map(|(b, _)| b)
}

pub fn girth5_report_with(reading: Reading) -> Result<Vec<CaseRow>> {
    let mut gamma = Gamma::new();
    let mut rows = Vec::new();
    for k in 2..=5 {
        let (lo, hi) = n_window(k)?;
        for n in lo..=hi {
            let (beta_bound, u_star) = girth5_master_with(&mut gamma, k, n, reading)?;
            let pass = beta_bound <= rat(1, 50);
            rows.push(CaseRow {
                k,
                n,
                u_star,
                beta_bound,
                pass,
            });
        }
    }
    Ok(rows)
}

/// The 80 rows under the displayed reading.
pub fn girth5_report() -> Result<Vec<CaseRow>> {
    girth5_report_with(Reading::Displayed)
}

/// `k,n,u_star,beta_bound,beta_decimal,pass`, one line per row.
pub fn rows_to_csv(rows: &[CaseRow]) -> String {
    let mut out = String::from("k,n,u_star,beta_bound,beta_decimal,pass\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{:.6},{}\n",
            r.k,
            r.n,
            r.u_star,
            fmt_rational(&r.beta_bound),
            crate::exactmath::to_f64(&r.beta_bound),
            r.pass
        ));
    }
    out
}

/// Window sizes, the per-row bound under both readings, and the large-`k`
/// closing argument.
pub fn girth5_section() -> Section {
    let mut s = Section::new("girth5");
    let mut rows_by_reading = Vec::new();
    for reading in [Reading::Displayed, Reading::Truncated] {
        let tag = match reading {
            Reading::Displayed => "displayed",
            Reading::Truncated => "truncated",
        };
        match girth5_report_with(reading) {
            Ok(rows) => {
                for r in &rows {
                    let id = format!("{tag}_k{}_n{}", r.k, r.n);
                    let claim = format!("k={}, n={}, u*={}: master bound <= 1/50", r.k, r.n, r.u_star);
                    s.push(CheckResult::rational(
                        &id,
                        &claim,
                        &r.beta_bound,
                        Relation::Le,
                        &rat(1, 50),
                    ));
                }
                rows_by_reading.push((tag, rows));
            }
            Err(e) => s.push(CheckResult::error(
                &format!("{tag}_rows"),
                "girth-5 driver",
                &e.to_string(),
            )),
        }
    }
    for (tag, rows) in &rows_by_reading {
        s.push(CheckResult::count(
            &format!("{tag}_row_count"),
            "(k,n) cases",
            rows.len() as u64,
            Relation::Eq,
            80,
        ));
    }
    for (k, want) in [(2, 10), (3, 19), (4, 26), (5, 25)] {
        let id = format!("window_k{k}");
        s.push(run(&id, &format!("n window size for k={k}"), || {
            let (lo, hi) = n_window(k)?;
            Ok(CheckResult::count(
                &id,
                &format!("n window size for k={k}"),
                (hi - lo + 1).max(0) as u64,
                Relation::Eq,
                want,
            ))
        }));
    }
    s.push(run("window_k6_empty", "k=6 leaves no n", || {
        let (lo, hi) = n_window(6)?;
        Ok(CheckResult::count(
            "window_k6_empty",
            "k=6 leaves no n (lower - upper)",
            (lo - hi) as u64,
            Relation::Ge,
            1,
        ))
    }));
    s.push(run("k1_ruled_out", "k=1: upper bound on n is below 2k+1", || {
        Ok(CheckResult::count(
            "k1_ruled_out",
            "k=1: ceil(27(k-1)/2) < 3",
            ceil_div(0, 2) as u64,
            Relation::Lt,
            3,
        ))
    }));
    s.push(run(
        "large_k_first_bound",
        "k in 7..40, n in 2k+1..200: first bound <= 1/50",
        || {
            let mut worst = rat(0, 1);
            for k in 7..=40 {
                for n in 2 * k + 1..=200 {
                    worst = worst.max(first_bound(k, n)?);
                }
            }
            Ok(CheckResult::rational(
                "large_k_first_bound",
                "k in 7..40: max first bound <= 1/50",
                &worst,
                Relation::Le,
                &rat(1, 50),
            ))
        },
    ));
    if let Some((_, rows)) = rows_by_reading.first() {
        s.push(run(
            "master_below_first_bound",
            "master bound <= first bound on every row",
            || {
                let mut bad = 0;
                for r in rows {
                    if r.beta_bound > first_bound(r.k, r.n)? {
                        bad += 1;
                    }
                }
                Ok(CheckResult::count(
                    "master_below_first_bound",
                    "rows with master bound > first bound",
                    bad,
                    Relation::Eq,
                    0,
                ))
            },
        ));
    }
    s
}
