//! Halves for graphs with a large independent set.
//!
//! Starting from an independent set `A` with `α = |A|/n ≥ 3/8`, a greedy
//! loop grows `B ⊇ A` and then one of two explicit halves is built around a
//! vertex of `B`. The certificate bound is the exact value of the returned
//! half; the analytic bound `(α/2)(1/2 − α)` rides along as `analytic`.
//!
//! Cross densities use `ρ_xy = 2|E(X,Y)|/n²` and, unlike
//! [`crate::density`], within densities here are `ρ_x = 2|E(X)|/n²`.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{fmt_rational, int, rat, IdentityReport, Polynomial, RatFn, Rational};
use crate::graphcore::mis::independence_number;
use crate::graphcore::random::random_triangle_free;
use crate::graphcore::{Graph, VertexSet};
use crate::halves::{BoundCertificate, Half};

pub const METHOD: &str = "independence";

/// Case tags stored in the certificate's `case` parameter.
pub const CASE_GREEDY: i64 = 0;
pub const CASE_NEIGHBOURHOOD: i64 = 1;
pub const CASE_THREE_LEVEL: i64 = 2;

/// The set grown from `A`, with vertices in acceptance order.
#[derive(Clone, Debug)]
pub struct GreedyState {
    pub b: VertexSet,
    pub history: Vec<usize>,
    pub p_b: Rational,
    pub rho_b: Rational,
}

fn inconsistent(what: &str, lhs: &Rational, rhs: &Rational) -> Error {
    Error::Inconsistent(format!("{what}: {} vs {}", fmt_rational(lhs), fmt_rational(rhs)))
}

fn n2(count: usize, n: usize) -> Rational {
    rat(count as i64, (n * n) as i64)
}

fn cross_count(g: &Graph, x: &VertexSet, y: &VertexSet) -> usize {
    x.iter().map(|v| g.neighbors(v).intersection_len(y)).sum()
}

/// Adds, in index order, the first vertex with `e_B(v) ≤ 1/2 − α` until
/// none is left or `|B| = n/2`. Asserts the resulting bounds on `B`.
pub fn greedy(g: &Graph, a: &VertexSet) -> Result<GreedyState> {
    let n = g.n();
    let (half, alen) = (n / 2, a.len());
    // e_B(v) ≤ 1/2 − α  ⇔  2|N(v) ∩ B| ≤ n − 2|A|
    let slack = n.saturating_sub(2 * alen);
    let mut b = a.clone();
    let mut history = Vec::new();
    while b.len() < half {
        let next = (0..n).find(|&v| !b.contains(v) && 2 * g.neighbors(v).intersection_len(&b) <= slack);
        match next {
            Some(v) => {
                let edges_in = g.neighbors(v).intersection_len(&b);
                let before = g.induced_edge_count(&b);
                b.insert(v);
                history.push(v);
                debug_assert_eq!(g.induced_edge_count(&b), before + edges_in);
            }
            None => break,
        }
    }
    let blen = b.len();
    let edges = g.induced_edge_count(&b);
    if 2 * edges > slack * (blen - alen) {
        return Err(Error::Inconsistent(format!(
            "greedy set spans {edges} edges, above (1/2 − α)(p_b − α)n² = {}/2",
            slack * (blen - alen)
        )));
    }
    if blen < half {
        if let Some(v) = (0..n).find(|&v| !b.contains(v) && 2 * g.neighbors(v).intersection_len(&b) <= slack) {
            return Err(Error::Inconsistent(format!(
                "greedy stopped although vertex {v} qualifies"
            )));
        }
    }
    Ok(GreedyState {
        b,
        history,
        p_b: rat(blen as i64, n as i64),
        rho_b: n2(2 * edges, n),
    })
}

/// `(α/2)(1/2 − α)`.
pub fn analytic_bound(alpha: &Rational) -> Rational {
    alpha / int(2) * (rat(1, 2) - alpha)
}

/// Runs the construction on `g` with independent set `a`. Needs `n` even;
/// for odd `n` pass `g.blowup(2)` with the doubled set.
///
/// Outside `3/8 ≤ α ≤ 1/2` the half is still built but the certificate
/// carries `hypothesis = 0` and nothing is claimed about `analytic`.
pub fn independence_half(g: &Graph, a: &VertexSet) -> Result<BoundCertificate> {
    let n = g.n();
    if n % 2 == 1 {
        return Err(Error::Precondition(format!(
            "n = {n} is odd; blow up each vertex into two twins first"
        )));
    }
    if !g.is_independent(a) {
        return Err(Error::Precondition("A is not independent".into()));
    }
    if a.is_empty() {
        return Err(Error::Precondition("A is empty".into()));
    }
    let alpha = rat(a.len() as i64, n as i64);
    // for α > 1/2 the analytic bound is negative; any n/2 vertices of A do
    let in_hypothesis = alpha >= rat(3, 8) && alpha <= rat(1, 2);
    let analytic = analytic_bound(&alpha);
    if 2 * a.len() > n {
        let set = VertexSet::from_vertices(n, a.iter().take(n / 2));
        return Ok(BoundCertificate::from_half(g, METHOD, Half::from_set(n, &set)?)?
            .with_param("alpha", alpha)
            .with_param("analytic", analytic)
            .with_param("case", int(CASE_GREEDY))
            .with_param("greedy_added", int(0))
            .with_param("hypothesis", int(0)));
    }

    let state = greedy(g, a)?;
    let (cert, case) = if state.b.len() == n / 2 {
        (
            BoundCertificate::from_half(g, METHOD, Half::from_set(n, &state.b)?)?,
            CASE_GREEDY,
        )
    } else {
        split_cases(g, a, &state)?
    };

    if in_hypothesis && cert.bound > analytic {
        return Err(inconsistent("half exceeds (α/2)(1/2 − α)", &cert.bound, &analytic));
    }
    if case == CASE_GREEDY && in_hypothesis {
        let sq = (rat(1, 2) - &alpha) * (rat(1, 2) - &alpha);
        if cert.bound > sq {
            return Err(inconsistent("greedy half exceeds (1/2 − α)²", &cert.bound, &sq));
        }
    }
    Ok(cert
        .with_param("alpha", alpha)
        .with_param("analytic", analytic)
        .with_param("case", int(case))
        .with_param("greedy_added", int(state.history.len() as i64))
        .with_param("hypothesis", int(in_hypothesis as i64)))
}

/// [`independence_half`] for any `n`: odd graphs are doubled, and the half
/// found there is averaged over each pair of twins, which keeps its value.
pub fn independence_half_any(g: &Graph, a: &VertexSet) -> Result<BoundCertificate> {
    let n = g.n();
    if n.is_multiple_of(2) {
        return independence_half(g, a);
    }
    let doubled = g.blowup(2)?;
    let a2 = VertexSet::from_vertices(2 * n, a.iter().flat_map(|v| [2 * v, 2 * v + 1]));
    let cert = independence_half(&doubled, &a2)?;
    let half = cert.half.as_ref().expect("constructive certificate");
    let w = half.weights();
    let projected = Half::new((0..n).map(|v| (&w[2 * v] + &w[2 * v + 1]) / int(2)).collect())?;
    let mut out = BoundCertificate::from_half(g, METHOD, projected)?;
    if out.bound != cert.bound {
        return Err(inconsistent("projected half changes value", &out.bound, &cert.bound));
    }
    out.params = cert.params;
    Ok(out.with_param("doubled", int(1)))
}

fn split_cases(g: &Graph, a: &VertexSet, state: &GreedyState) -> Result<(BoundCertificate, i64)> {
    let n = g.n();
    let b = &state.b;
    let (alen, blen) = (a.len(), b.len());
    let alpha = rat(alen as i64, n as i64);
    let p_b = &state.p_b;
    let half_minus_alpha = rat(1, 2) - &alpha;

    let outside: Vec<usize> = (0..n).filter(|&v| !b.contains(v)).collect();
    let c = VertexSet::from_vertices(
        n,
        outside
            .iter()
            .copied()
            .filter(|&v| 2 * g.neighbors(v).intersection_len(b) > blen),
    );
    for u in c.iter() {
        for w in c.iter().filter(|&w| w > u) {
            if g.neighbors(u).intersection(g.neighbors(w)).intersection_len(b) == 0 {
                return Err(Error::Inconsistent(format!("{u} and {w} in C share no neighbour in B")));
            }
        }
    }
    if !g.is_independent(&c) {
        return Err(Error::Inconsistent("C is not independent".into()));
    }
    let dlen = n - alen - blen;
    let pool: Vec<usize> = outside.iter().copied().filter(|&v| !c.contains(v)).collect();
    if pool.len() < dlen {
        return Err(Error::Inconsistent(format!(
            "|C| = {} exceeds |A| = {alen}, so D of size {dlen} does not exist; A is not a maximum independent set",
            c.len()
        )));
    }
    let d = VertexSet::from_vertices(n, pool[..dlen].iter().copied());
    let target_e = n / 2 - blen;
    let greedy_part = int(2) * &half_minus_alpha * (p_b - &alpha);

    // Case 1: some v ∈ B has at least n/2 − |B| neighbours in D.
    if let Some(v) = b.iter().find(|&v| g.neighbors(v).intersection_len(&d) >= target_e) {
        let e = VertexSet::from_vertices(n, g.neighbors(v).intersection(&d).iter().take(target_e));
        let set = b.union(&e);
        let cert = BoundCertificate::from_half(g, METHOD, Half::from_set(n, &set)?)?;
        let twice = int(2) * &cert.bound;
        let rhs = &greedy_part + p_b * (rat(1, 2) - p_b);
        if twice > rhs {
            return Err(inconsistent("2β(B ∪ E) against its estimate", &twice, &rhs));
        }
        return Ok((cert.with_param("v", int(v as i64)), CASE_NEIGHBOURHOOD));
    }

    // Case 2: a three-level half for every v₀ ∈ B, keeping the best.
    let rho_bd = n2(2 * cross_count(g, b, &d), n);
    let mut best: Option<(BoundCertificate, usize)> = None;
    for v0 in b.iter() {
        let e = g.neighbors(v0).intersection(&d);
        let f = d.difference(&e);
        let (elen, flen) = (e.len(), f.len());
        if flen == 0 {
            return Err(Error::Inconsistent(format!("F is empty for v₀ = {v0}")));
        }
        let p = rat((n / 2 - blen - elen) as i64, flen as i64);
        if p < Rational::zero() || p > Rational::one() {
            return Err(Error::Inconsistent(format!(
                "level p = {} outside [0, 1]",
                fmt_rational(&p)
            )));
        }
        let weights = (0..n)
            .map(|v| {
                if b.contains(v) || e.contains(v) {
                    Rational::one()
                } else if f.contains(v) {
                    p.clone()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        let cert = BoundCertificate::from_half(g, METHOD, Half::new(weights)?)?;
        let p_e = rat(elen as i64, n as i64);
        let rest = rat(1, 2) - p_b - &p_e;
        let rho_be = n2(2 * cross_count(g, b, &e), n);
        let rhs = &greedy_part + rat(1, 2) * &rest * (rat(1, 2) + p_b + int(3) * &p_e) + rho_be;
        let twice = int(2) * &cert.bound;
        if twice > rhs {
            return Err(inconsistent(
                &format!("2β(μ) for v₀ = {v0} against its estimate"),
                &twice,
                &rhs,
            ));
        }
        if best.as_ref().is_none_or(|(c, _)| cert.bound < c.bound) {
            best = Some((cert, v0));
        }
    }
    let (cert, v0) = best.expect("B is nonempty");
    let q = q_value(&alpha, p_b, &rho_bd);
    if cert.bound > q {
        return Err(inconsistent(
            "best three-level half exceeds Q(α, p_b, ρ_bd)",
            &cert.bound,
            &q,
        ));
    }
    Ok((
        cert.with_param("rho_bd", rho_bd).with_param("v", int(v0 as i64)),
        CASE_THREE_LEVEL,
    ))
}

/// `count` random triangle-free graphs on an even number `6 ≤ n ≤ 24` of
/// vertices with `3/8 ≤ α(G) ≤ 1/2`, each with a maximum independent set.
pub fn random_large_alpha_graphs(seed: u64, count: usize) -> Vec<(Graph, VertexSet)> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = 2 * rng.gen_range(3..=12);
        let m = rng.gen_range(n..=n * n / 4);
        let g = random_triangle_free(n, m, &mut rng).expect("n ≥ 6");
        let a = VertexSet::from_vertices(n, independence_number(&g).1);
        if 8 * a.len() >= 3 * n && 2 * a.len() <= n {
            out.push((g, a));
        }
    }
    out
}

const ALPHA: &str = "alpha";
const PB: &str = "pb";
const RBD: &str = "rbd";

fn var(name: &str) -> RatFn {
    RatFn::poly(Polynomial::var(name))
}

fn constant(c: Rational) -> RatFn {
    RatFn::poly(Polynomial::constant(c))
}

/// Numerator of `Q(α, p_b, ρ_bd)`; the denominator is `16p_b²`.
pub fn q_numerator() -> Polynomial {
    let (a, p, x) = (Polynomial::var(ALPHA), Polynomial::var(PB), Polynomial::var(RBD));
    let terms: [(i64, Vec<&Polynomial>); 10] = [
        (8, vec![&a, &a, &p, &p]),
        (-24, vec![&a, &p, &p, &p]),
        (-4, vec![&p, &p, &p, &p]),
        (4, vec![&a, &p, &p]),
        (-8, vec![&a, &p, &x]),
        (12, vec![&p, &p, &p]),
        (-4, vec![&p, &p, &x]),
        (-3, vec![&p, &p]),
        (6, vec![&p, &x]),
        (-3, vec![&x, &x]),
    ];
    terms.iter().fold(Polynomial::zero(), |acc, (c, factors)| {
        let t = factors.iter().fold(Polynomial::int(*c), |t, f| &t * *f);
        &acc + &t
    })
}

pub fn q_displayed() -> RatFn {
    let p = Polynomial::var(PB);
    RatFn::new(q_numerator(), (&p * &p).scale(&int(16))).expect("nonzero denominator")
}

/// `Q` rebuilt from its ingredients: the Case-2 estimate with `p_e`
/// replaced by `ρ_bd/(2p_b)` and `ρ_be` by the second-moment bound.
pub fn q_derived() -> RatFn {
    let (a, p, x) = (var(ALPHA), var(PB), var(RBD));
    let h = constant(rat(1, 2));
    let p_e = x.div(&(&constant(int(2)) * &p)).expect("p_b is a nonzero polynomial");
    let hma = &h - &a;
    let greedy = &(&constant(int(2)) * &hma) * &(&p - &a);
    let rest = &(&h - &p) - &p_e;
    let spread = &(&h + &p) + &(&constant(int(3)) * &p_e);
    let levels = &(&h * &rest) * &spread;
    let p_d = &(&constant(Rational::one()) - &a) - &p;
    let moment = &x.div(&p).expect("nonzero") * &(&hma + &(&p * &h));
    let rho_be = &moment - &(&p_d * &hma);
    let twice = &(&greedy + &levels) + &rho_be;
    &twice * &h
}

/// `Q₁(α, p_b) = (13/16)α² − (9/8)αp_b − (3/16)p_b² − α/4 + p_b/2`.
pub fn q1() -> Polynomial {
    let (a, p) = (Polynomial::var(ALPHA), Polynomial::var(PB));
    let parts = [
        (&a * &a).scale(&rat(13, 16)),
        (&a * &p).scale(&rat(-9, 8)),
        (&p * &p).scale(&rat(-3, 16)),
        a.scale(&rat(-1, 4)),
        p.scale(&rat(1, 2)),
    ];
    parts.iter().fold(Polynomial::zero(), |acc, t| &acc + t)
}

pub fn q_value(alpha: &Rational, p_b: &Rational, rho_bd: &Rational) -> Rational {
    q_displayed()
        .eval(&[(ALPHA, alpha.clone()), (PB, p_b.clone()), (RBD, rho_bd.clone())])
        .expect("p_b > 0")
}

pub fn q1_value(alpha: &Rational, p_b: &Rational) -> Rational {
    q1().eval(&[(ALPHA, alpha.clone()), (PB, p_b.clone())])
        .expect("all variables bound")
}

/// Symbolic checks of `Q` and `Q₁`.
pub fn independence_formula_checks() -> IdentityReport {
    let mut r = IdentityReport::new("large independence number: Q and Q1");
    let q = q_displayed();
    let (a, p) = (Polynomial::var(ALPHA), Polynomial::var(PB));
    let one = Polynomial::int(1);
    let max_bd = &p * &(&(&one - &a) - &p);

    let derived = q_derived();
    r.push_eq(
        "q_matches_derivation",
        q.same_as(&derived),
        format!("{q:?}"),
        format!("{derived:?}"),
    );

    let dq = q.derive(RBD).and_then(|d| d.substitute(RBD, &max_bd));
    let want = RatFn::new(&p - &a, p.scale(&int(8))).expect("nonzero");
    match dq {
        Ok(dq) => r.push_eq(
            "dq_drbd_at_max",
            dq.same_as(&want),
            format!("{dq:?}"),
            format!("{want:?}"),
        ),
        Err(e) => r.push("dq_drbd_at_max", false, e.to_string()),
    }

    let q1p = RatFn::poly(q1());
    match q.substitute(RBD, &max_bd) {
        Ok(at) => r.push_eq(
            "q_at_max_is_q1",
            at.same_as(&q1p),
            format!("{at:?}"),
            format!("{q1p:?}"),
        ),
        Err(e) => r.push("q_at_max_is_q1", false, e.to_string()),
    }

    let dq1 = q1().derive(PB).and_then(|d| d.substitute(PB, &a));
    let want = (&one - &a.scale(&int(3))).scale(&rat(1, 2));
    match dq1 {
        Ok(d) => r.push_eq("dq1_dpb_at_alpha", d == want, &d, &want),
        Err(e) => r.push("dq1_dpb_at_alpha", false, e.to_string()),
    }

    let diag = q1().substitute(PB, &a);
    let want = &a.scale(&rat(1, 2)) * &(&Polynomial::constant(rat(1, 2)) - &a);
    match diag {
        Ok(d) => r.push_eq("q1_diagonal", d == want, &d, &want),
        Err(e) => r.push("q1_diagonal", false, e.to_string()),
    }

    // concavity: ρ_bd² enters as −3ρ_bd²/(16p_b²)
    let lead = q_numerator().coefficient(&[(RBD, 2)]);
    r.push_eq(
        "q_concave_in_rbd",
        lead.as_ref().is_ok_and(|c| *c == int(-3)),
        format!("{lead:?}"),
        "-3",
    );
    let q1_lead = q1().coefficient(&[(PB, 2)]);
    r.push_eq(
        "q1_concave_in_pb",
        q1_lead.as_ref().is_ok_and(|c| *c == rat(-3, 16)),
        format!("{q1_lead:?}"),
        "-3/16",
    );

    let at = q1_value(&rat(3, 8), &rat(3, 8));
    r.push_eq("q1_at_three_eighths", at == rat(3, 128), fmt_rational(&at), "3/128");
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::named;
    use crate::halves::{beta_exact, beta_of_half};

    fn max_independent(g: &Graph) -> VertexSet {
        VertexSet::from_vertices(g.n(), independence_number(g).1)
    }

    #[test]
    fn formula_checks_pass() {
        let r = independence_formula_checks();
        for c in &r.checks {
            assert!(c.pass, "{c:?}");
        }
        assert_eq!(r.checks.len(), 8);
    }

    #[test]
    fn petersen() {
        let g = named("petersen").unwrap().graph;
        let a = max_independent(&g);
        assert_eq!(a.len(), 4);
        let cert = independence_half(&g, &a).unwrap();
        assert!(cert.verify(&g));
        assert!(cert.bound <= rat(1, 50));
        assert_eq!(cert.param("analytic"), Some(&rat(1, 50)));
        assert_eq!(cert.param("hypothesis"), Some(&int(1)));
    }

    #[test]
    fn c5_blowup() {
        let g = Graph::cycle(5).unwrap().blowup(2).unwrap();
        let a = max_independent(&g);
        assert_eq!(a.len(), 4);
        let cert = independence_half(&g, &a).unwrap();
        assert!(cert.bound <= rat(1, 50));
        assert_eq!(beta_of_half(&g, cert.half.as_ref().unwrap()).unwrap(), cert.bound);
        // the blow-up has the same β as C₅
        assert!(cert.bound >= beta_exact(&g).unwrap().0);
    }

    #[test]
    fn odd_graphs_are_doubled() {
        let c5 = Graph::cycle(5).unwrap();
        let cert = independence_half_any(&c5, &c5.vertex_set(&[0, 2])).unwrap();
        assert_eq!(cert.half.as_ref().unwrap().n(), 5);
        assert!(cert.verify(&c5));
        assert_eq!(cert.bound, rat(1, 50));
        assert_eq!(cert.param("doubled"), Some(&int(1)));
    }

    #[test]
    fn bipartite_is_immediate() {
        let g = Graph::complete_bipartite(3, 3).unwrap();
        let a = g.vertex_set(&[0, 1, 2]);
        let cert = independence_half(&g, &a).unwrap();
        assert!(cert.bound.is_zero());
        assert_eq!(cert.param("case"), Some(&int(CASE_GREEDY)));
        assert_eq!(cert.param("greedy_added"), Some(&int(0)));
    }

    #[test]
    fn preconditions() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(matches!(
            independence_half(&c5, &c5.vertex_set(&[0, 2])),
            Err(Error::Precondition(_))
        ));
        let c6 = Graph::cycle(6).unwrap();
        assert!(matches!(
            independence_half(&c6, &c6.vertex_set(&[0, 1])),
            Err(Error::Precondition(_))
        ));
        // below 3/8 the construction still runs, flagged
        let p = named("petersen").unwrap().graph;
        let cert = independence_half(&p, &p.vertex_set(&[0])).unwrap_or_else(|e| panic!("{e}"));
        assert_eq!(cert.param("hypothesis"), Some(&int(0)));
        // above 1/2 the analytic bound is negative, but β = 0 is immediate
        let star = Graph::complete_bipartite(1, 5).unwrap();
        let cert = independence_half(&star, &star.vertex_set(&[1, 2, 3, 4, 5])).unwrap();
        assert!(cert.bound.is_zero() && cert.param("analytic").unwrap() < &Rational::zero());
        assert_eq!(cert.param("hypothesis"), Some(&int(0)));
    }

    #[test]
    fn three_level_case() {
        // a blow-up where no vertex of B sees n/2 − |B| vertices of D
        let g = crate::graphcore::graph6::decode(
            r"]??????????^?}?}?^@xoNM?{w@xo@}??~??No?@}??WF?NoM?]ooF_^_{?FwN??~@w?B{F_??",
        )
        .unwrap();
        assert!(g.is_triangle_free());
        let a = g.vertex_set(&[15, 16, 17, 18, 19, 20, 21, 22, 26, 27, 28, 29]);
        let cert = independence_half(&g, &a).unwrap();
        assert_eq!(cert.param("case"), Some(&int(CASE_THREE_LEVEL)));
        assert!(cert.verify(&g));
        assert!(cert.bound <= rat(1, 2) * rat(2, 5) * rat(1, 10));
        let q = q_value(&rat(2, 5), &greedy(&g, &a).unwrap().p_b, cert.param("rho_bd").unwrap());
        assert!(cert.bound <= q);
    }

    #[test]
    fn greedy_invariants() {
        let g = named("petersen").unwrap().graph;
        let a = max_independent(&g);
        let s = greedy(&g, &a).unwrap();
        assert!(a.iter().all(|v| s.b.contains(v)));
        let alpha = rat(2, 5);
        assert!(s.p_b >= alpha && s.p_b <= rat(1, 2));
        assert!(s.rho_b <= int(2) * (rat(1, 2) - &alpha) * (&s.p_b - &alpha));
    }

    #[test]
    fn random_graphs_meet_the_bound() {
        let mut cases = [0usize; 3];
        for (g, a) in random_large_alpha_graphs(2024, 200) {
            let alpha = rat(a.len() as i64, g.n() as i64);
            let cert = independence_half(&g, &a).unwrap();
            assert!(cert.verify(&g));
            assert!(cert.bound <= analytic_bound(&alpha));
            cases[cert.param("case").unwrap().to_integer().try_into().unwrap_or(0usize)] += 1;
        }
        assert!(cases[0] > 0 && cases[1] > 0, "case coverage {cases:?}");
    }
}
