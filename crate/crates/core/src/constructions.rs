//! Explicit half constructions and the bounds they certify.
//!
//! Identities between half values and partition densities are stated in
//! terms of `2β`, with every density on the `2|E|/n²` scale (`ρ_b` below is
//! twice the within-part density returned by
//! [`partition_densities`](crate::density::partition_densities)).
//! Ties are always broken towards the lowest vertex index.

use num::{One, Signed, Zero};

use crate::density::{c4_density, delta, partition_densities, rho};
use crate::error::{Error, Result};
use crate::exactmath::sparse::{SparseBoundForm, DELTA, E2, RHO};
use crate::exactmath::{fmt_rational, int, rat, Rational};
use crate::graphcore::{Graph, SrgQuad, VertexSet};
use crate::halves::{beta_of_half, BoundCertificate, Half};

fn half_of(n: usize, levels: &[(&VertexSet, Rational)]) -> Result<Half> {
    let mut w = vec![Rational::zero(); n];
    for (set, value) in levels {
        for v in set.iter() {
            w[v] = value.clone();
        }
    }
    Half::new(w)
}

fn inconsistent(what: &str, lhs: &Rational, rhs: &Rational) -> Error {
    Error::Inconsistent(format!("{what}: {} vs {}", fmt_rational(lhs), fmt_rational(rhs)))
}

/// The split `A₁ = N(v₁)`, `A₂ = N(v₂)`, `B = V ∖ (A₁ ∪ A₂)` around an edge.
#[derive(Clone, Debug)]
pub struct EdgeSplit {
    pub v1: usize,
    pub v2: usize,
    pub a1: VertexSet,
    pub a2: VertexSet,
    pub b: VertexSet,
    pub e1: Rational,
    pub e2: Rational,
    pub p1: Rational,
    pub p2: Rational,
    /// `p₀ = (1/2 − e₁ − e₂)/(1 − e₁ − e₂)`.
    pub p0: Rational,
    pub rho_a1a2: Rational,
    pub rho_a1b: Rational,
    pub rho_a2b: Rational,
    /// `2|E(B)|/n²`.
    pub rho_b: Rational,
}

impl EdgeSplit {
    pub fn new(g: &Graph, v1: usize, v2: usize) -> Result<EdgeSplit> {
        let n = g.n();
        if v1 >= n || v2 >= n || !g.has_edge(v1, v2) {
            return Err(Error::Precondition(format!("({v1},{v2}) is not an edge")));
        }
        let a1 = g.neighbors(v1).clone();
        let a2 = g.neighbors(v2).clone();
        if !a1.is_disjoint(&a2) {
            return Err(Error::Precondition(format!("edge ({v1},{v2}) lies in a triangle")));
        }
        let b = VertexSet::full(n).difference(&a1.union(&a2));
        let e1 = rat(a1.len() as i64, n as i64);
        let e2 = rat(a2.len() as i64, n as i64);
        let s = Rational::one() - &e1 - &e2;
        if !s.is_positive() {
            return Err(Error::Precondition("e₁ + e₂ must be below 1".into()));
        }
        let half = rat(1, 2);
        let p1 = (&half - &e1) / &s;
        let p2 = (&half - &e2) / &s;
        let p0 = (&half - &e1 - &e2) / &s;
        let d = partition_densities(g, &[a1.clone(), a2.clone(), b.clone()])?;
        Ok(EdgeSplit {
            v1,
            v2,
            rho_a1a2: d.cross(0, 1),
            rho_a1b: d.cross(0, 2),
            rho_a2b: d.cross(1, 2),
            rho_b: int(2) * &d.within[2],
            a1,
            a2,
            b,
            e1,
            e2,
            p1,
            p2,
            p0,
        })
    }

    /// `μ_i`: 1 on `A_i`, `p_i` on `B`, 0 on `A_{3−i}`.
    pub fn mu(&self, i: usize) -> Result<Half> {
        let n = self.a1.len() + self.a2.len() + self.b.len();
        match i {
            1 => half_of(n, &[(&self.a1, Rational::one()), (&self.b, self.p1.clone())]),
            2 => half_of(n, &[(&self.a2, Rational::one()), (&self.b, self.p2.clone())]),
            0 => half_of(
                n,
                &[
                    (&self.a1, Rational::one()),
                    (&self.a2, Rational::one()),
                    (&self.b, self.p0.clone()),
                ],
            ),
            _ => Err(Error::Precondition(format!("no half μ{i}"))),
        }
    }

    /// `2β(G, μ_i)` in terms of the split densities.
    pub fn twice_beta_formula(&self, i: usize) -> Rational {
        match i {
            1 => &self.p1 * &self.rho_a1b + &self.p1 * &self.p1 * &self.rho_b,
            2 => &self.p2 * &self.rho_a2b + &self.p2 * &self.p2 * &self.rho_b,
            _ => &self.rho_a1a2 + &self.p0 * (&self.rho_a1b + &self.rho_a2b) + &self.p0 * &self.p0 * &self.rho_b,
        }
    }

    /// `p₁p₂(ρ − ρ_{a₁a₂})`, which equals `p₂·2β(μ₁) + p₁·2β(μ₂)`.
    pub fn combined(&self, rho: &Rational) -> Rational {
        &self.p1 * &self.p2 * (rho - &self.rho_a1a2)
    }
}

/// The two halves of an edge split, each checked against its density formula.
pub fn edge_halves(g: &Graph, edge: (usize, usize)) -> Result<(BoundCertificate, BoundCertificate)> {
    let split = EdgeSplit::new(g, edge.0, edge.1)?;
    let mut out = Vec::with_capacity(2);
    for i in [1, 2] {
        let cert = BoundCertificate::from_half(g, "edge", split.mu(i)?)?;
        let formula = split.twice_beta_formula(i);
        let twice = int(2) * &cert.bound;
        if twice != formula {
            return Err(inconsistent(
                &format!("2β(μ{i}) against split densities"),
                &twice,
                &formula,
            ));
        }
        out.push(
            cert.with_param("e1", split.e1.clone())
                .with_param("e2", split.e2.clone())
                .with_param("p1", split.p1.clone())
                .with_param("p2", split.p2.clone()),
        );
    }
    let second = out.pop().expect("two halves");
    Ok((out.pop().expect("two halves"), second))
}

/// The better edge half over all edges; edges whose split admits no half
/// are skipped.
pub fn best_edge_half(g: &Graph) -> Result<BoundCertificate> {
    let mut best: Option<BoundCertificate> = None;
    let mut last_err = None;
    for e in g.edges() {
        let (a, b) = match edge_halves(g, e) {
            Ok(pair) => pair,
            Err(err @ Error::Precondition(_)) => {
                last_err = Some(err);
                continue;
            }
            Err(err) => return Err(err),
        };
        for c in [a, b] {
            if best.as_ref().is_none_or(|x| c.bound < x.bound) {
                best = Some(c);
            }
        }
    }
    best.ok_or_else(|| last_err.unwrap_or_else(|| Error::Precondition("edge halves need at least one edge".into())))
}

/// `ρ/8 − C₄/(12ρ)`.
pub fn krivelevich_bound(g: &Graph) -> Result<Rational> {
    let r = rho(g);
    if r.is_zero() {
        return Err(Error::Precondition(
            "the averaging bound needs at least one edge".into(),
        ));
    }
    Ok(&r / int(8) - c4_density(g) / (int(12) * &r))
}

/// `ρ(1 − 2Δ)/(8(1 − Δ)²)`.
pub fn maxdeg_bound(rho: &Rational, delta: &Rational) -> Rational {
    let s = Rational::one() - delta;
    rho * (Rational::one() - int(2) * delta) / (int(8) * &s * &s)
}

/// The halves `μ₀, μ₁` around a maximum-degree vertex `v`, `A = N(v)`,
/// `B = V ∖ A`.
pub struct MaxDegreeSplit {
    pub v: usize,
    pub delta: Rational,
    pub mu0: Half,
    pub mu1: Half,
    pub rho_ab: Rational,
    /// `2|E(B)|/n²`.
    pub rho_b: Rational,
}

pub fn maxdeg_split(g: &Graph) -> Result<MaxDegreeSplit> {
    let d = delta(g);
    if d >= rat(1, 2) {
        return Err(Error::Precondition(format!(
            "Δ = {} must be below 1/2",
            fmt_rational(&d)
        )));
    }
    let n = g.n();
    let v = g.max_degree_vertex();
    let a = g.neighbors(v).clone();
    let b = VertexSet::full(n).difference(&a);
    let s = Rational::one() - &d;
    let mu0 = half_of(n, &[(&b, Rational::one() / (int(2) * &s))])?;
    let mu1 = half_of(n, &[(&a, Rational::one()), (&b, (rat(1, 2) - &d) / &s)])?;
    let p = partition_densities(g, &[a, b])?;
    Ok(MaxDegreeSplit {
        v,
        delta: d,
        mu0,
        mu1,
        rho_ab: p.cross(0, 1),
        rho_b: int(2) * &p.within[1],
    })
}

/// Better of `μ₀, μ₁`, with the analytic bound attached as `analytic`.
pub fn maxdeg_halves(g: &Graph) -> Result<BoundCertificate> {
    let split = maxdeg_split(g)?;
    let r = rho(g);
    let analytic = maxdeg_bound(&r, &split.delta);
    let c0 = BoundCertificate::from_half(g, "maxdeg", split.mu0)?;
    let c1 = BoundCertificate::from_half(g, "maxdeg", split.mu1)?;
    let best = if c1.bound < c0.bound { c1 } else { c0 };
    if best.bound > analytic {
        return Err(inconsistent(
            "best max-degree half exceeds the analytic bound",
            &best.bound,
            &analytic,
        ));
    }
    Ok(best
        .with_param("analytic", analytic)
        .with_param("delta", split.delta)
        .with_param("rho", r))
}

/// The sparse-case estimate `f(ρ, Δ, e₂)`.
pub fn sparse_f(rho: &Rational, delta: &Rational, e2: &Rational) -> Result<Rational> {
    SparseBoundForm::displayed()
        .as_ratfn()
        .eval(&[(RHO, rho.clone()), (DELTA, delta.clone()), (E2, e2.clone())])
}

/// Three halves around `v₁` of maximum degree and `v₂` of maximum degree in
/// `N(v₁)`. Requires `Δ ≤ 1/4`; above that use [`maxdeg_halves`].
pub fn triple_half_bound(g: &Graph) -> Result<BoundCertificate> {
    let d = delta(g);
    if d > rat(1, 4) {
        return Err(Error::Precondition(format!(
            "three-half bound needs Δ ≤ 1/4, got Δ = {}; use the max-degree halves",
            fmt_rational(&d)
        )));
    }
    if g.edge_count() == 0 {
        return Err(Error::Precondition("three-half bound needs at least one edge".into()));
    }
    let v1 = g.max_degree_vertex();
    let v2 = g
        .neighbors(v1)
        .iter()
        .max_by_key(|&u| (g.degree(u), std::cmp::Reverse(u)))
        .expect("v₁ has a neighbour");
    let split = EdgeSplit::new(g, v1, v2)?;
    let r = rho(g);
    let mut best: Option<BoundCertificate> = None;
    for i in [0, 1, 2] {
        let cert = BoundCertificate::from_half(g, "triple", split.mu(i)?)?;
        let twice = int(2) * &cert.bound;
        let formula = split.twice_beta_formula(i);
        if twice != formula {
            return Err(inconsistent(
                &format!("2β(μ{i}) against split densities"),
                &twice,
                &formula,
            ));
        }
        if best.as_ref().is_none_or(|b| cert.bound < b.bound) {
            best = Some(cert);
        }
    }
    let incident = &split.rho_a1a2 + &split.rho_a1b;
    let cap = int(2) * &d * &split.e2;
    if incident > cap {
        return Err(inconsistent("edges at A₁ exceed 2Δe₂", &incident, &cap));
    }
    let f = sparse_f(&r, &d, &split.e2)?;
    let best = best.expect("three halves");
    if best.bound > f {
        return Err(inconsistent("best of three halves exceeds f", &best.bound, &f));
    }
    Ok(best
        .with_param("analytic", f)
        .with_param("delta", d)
        .with_param("e2", split.e2.clone())
        .with_param("rho", r)
        .with_param("v1", int(v1 as i64))
        .with_param("v2", int(v2 as i64)))
}

fn require(g: &Graph, name: &str, quad: SrgQuad) -> Result<()> {
    quad.verify(g)
        .map_err(|m| Error::Precondition(format!("not the {name} graph: {m}")))
}

/// `(N(u) ∪ N(v)) ∖ {u, v}` for an edge `uv` of the Clebsch graph; the
/// lowest edge when `edge` is `None`.
pub fn clebsch_recipe_half(g: &Graph, edge: Option<(usize, usize)>) -> Result<BoundCertificate> {
    require(g, "Clebsch", SrgQuad::new(16, 5, 0, 2))?;
    let (u, v) = match edge {
        Some(e) if g.has_edge(e.0, e.1) => e,
        Some(e) => return Err(Error::Precondition(format!("({},{}) is not an edge", e.0, e.1))),
        None => g.edges()[0],
    };
    let mut set = g.neighbors(u).union(g.neighbors(v));
    set.remove(u);
    set.remove(v);
    let edges = g.induced_edge_count(&set);
    let cert = BoundCertificate::from_half(g, "clebsch-recipe", Half::from_set(16, &set)?)?;
    Ok(cert.with_param("induced_edges", int(edges as i64)))
}

fn union_minus_roots(g: &Graph, roots: &[usize]) -> VertexSet {
    let mut set = VertexSet::new(g.n());
    for &r in roots {
        set = set.union(g.neighbors(r));
    }
    for &r in roots {
        set.remove(r);
    }
    set
}

pub const GEWIRTZ_EDGES: usize = 51;

/// Union of the neighbourhoods of an induced 2-matching `v₁v₂, v₃v₄` in the
/// Gewirtz graph, minus the four roots. Roots are scanned in index order and
/// the first set of 28 vertices spanning 51 edges is returned.
pub fn gewirtz_recipe_half(g: &Graph) -> Result<BoundCertificate> {
    require(g, "Gewirtz", SrgQuad::new(56, 10, 0, 2))?;
    let edges = g.edges();
    let mut fewest: Option<usize> = None;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            let induced = [(a, c), (a, d), (b, c), (b, d)]
                .iter()
                .all(|&(x, y)| x != y && !g.has_edge(x, y));
            if !induced {
                continue;
            }
            let set = union_minus_roots(g, &[a, b, c, d]);
            if set.len() != 28 {
                continue;
            }
            let e = g.induced_edge_count(&set);
            fewest = Some(fewest.map_or(e, |x| x.min(e)));
            if e == GEWIRTZ_EDGES {
                let cert = BoundCertificate::from_half(g, "gewirtz-recipe", Half::from_set(56, &set)?)?;
                return Ok(cert
                    .with_param("induced_edges", int(e as i64))
                    .with_param("v1", int(a as i64))
                    .with_param("v2", int(b as i64))
                    .with_param("v3", int(c as i64))
                    .with_param("v4", int(d as i64)));
            }
        }
    }
    Err(Error::Inconsistent(format!(
        "no induced 2-matching gives {GEWIRTZ_EDGES} edges; fewest found {fewest:?}"
    )))
}

pub const M22_SET_SIZE: usize = 38;
pub const M22_EDGES: usize = 109;
pub const M22_EXTRA_DEGREE: usize = 9;

/// `A = (N(u₁) ∪ N(u₂) ∪ N(u₃)) ∖ {u₁, u₂, u₃}` for an edge `u₁u₂` and
/// `u₃ ∉ N(u₁) ∪ N(u₂)`, plus half of a vertex `v ∉ A` with 9 neighbours in
/// `A`. The first root triple giving `|A| = 38`, `|E(A)| = 109` wins.
pub fn m22_recipe_half(g: &Graph) -> Result<BoundCertificate> {
    require(g, "M22", SrgQuad::new(77, 16, 0, 4))?;
    let n = g.n();
    let mut seen = Vec::new();
    for (u1, u2) in g.edges() {
        let near = g.neighbors(u1).union(g.neighbors(u2));
        for u3 in (0..n).filter(|&w| !near.contains(w)) {
            let a = union_minus_roots(g, &[u1, u2, u3]);
            let e = g.induced_edge_count(&a);
            if a.len() != M22_SET_SIZE || e != M22_EDGES {
                if seen.len() < 4 && !seen.contains(&(a.len(), e)) {
                    seen.push((a.len(), e));
                }
                continue;
            }
            let Some(v) = (0..n).find(|&v| !a.contains(v) && g.neighbors(v).intersection_len(&a) == M22_EXTRA_DEGREE)
            else {
                continue;
            };
            let half = Half::almost_01(n, &a, v)?;
            let cert = BoundCertificate::from_half(g, "m22-recipe", half)?;
            return Ok(cert
                .with_param("set_size", int(a.len() as i64))
                .with_param("induced_edges", int(e as i64))
                .with_param("extra_degree", int(M22_EXTRA_DEGREE as i64))
                .with_param("u1", int(u1 as i64))
                .with_param("u2", int(u2 as i64))
                .with_param("u3", int(u3 as i64))
                .with_param("v", int(v as i64)));
        }
    }
    Err(Error::Inconsistent(format!(
        "no root triple reaches |A| = 38, |E(A)| = 109; saw (|A|, |E(A)|) = {seen:?}"
    )))
}

/// Direct check of a 2β identity: `β(μ)` from the half equals `value / 2`.
pub fn check_twice_beta(g: &Graph, mu: &Half, twice: &Rational) -> Result<bool> {
    Ok(int(2) * beta_of_half(g, mu)? == *twice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::named;

    #[test]
    fn petersen_edge_halves() {
        let g = named("petersen").unwrap().graph;
        for e in g.edges() {
            let (c1, c2) = edge_halves(&g, e).unwrap();
            assert_eq!(c1.param("p1"), Some(&rat(1, 2)));
            assert!(c1.verify(&g) && c2.verify(&g));
            assert_eq!(c1.half.as_ref().unwrap().ones().len(), 3);
        }
    }

    #[test]
    fn c5_edge_split() {
        // 0-1-2-3-4-0; split around edge (0,1)
        let g = Graph::cycle(5).unwrap();
        let s = EdgeSplit::new(&g, 0, 1).unwrap();
        assert_eq!(s.a1.to_vec(), vec![1, 4]);
        assert_eq!(s.a2.to_vec(), vec![0, 2]);
        assert_eq!(s.b.to_vec(), vec![3]);
        assert_eq!((s.p1.clone(), s.p2.clone()), (rat(1, 2), rat(1, 2)));
        // μ₁ = (0,1,0,1/2,1): edges 3-4 weigh 1/2, 0-1 and 0-4 are killed
        let (c1, _) = edge_halves(&g, (0, 1)).unwrap();
        assert_eq!(c1.bound, rat(1, 50));
        assert!(EdgeSplit::new(&g, 0, 2).is_err());
    }

    #[test]
    fn star_edge_split() {
        // K₁,₃ alone has e₁ + e₂ = 1
        assert!(edge_halves(&Graph::complete_bipartite(1, 3).unwrap(), (0, 1)).is_err());
        let g = Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = EdgeSplit::new(&g, 0, 1).unwrap();
        assert_eq!(s.b.to_vec(), vec![4, 5, 6, 7]);
        assert_eq!((s.p1.clone(), s.p2.clone()), (rat(1, 4), rat(3, 4)));
        let (c1, c2) = edge_halves(&g, (0, 1)).unwrap();
        assert!(c1.verify(&g) && c2.verify(&g));
        assert!(EdgeSplit::new(&Graph::complete(3).unwrap(), 0, 1).is_err());
    }

    #[test]
    fn krivelevich_values() {
        assert_eq!(
            krivelevich_bound(&named("petersen").unwrap().graph).unwrap(),
            rat(1, 40)
        );
        assert_eq!(krivelevich_bound(&Graph::cycle(5).unwrap()).unwrap(), rat(1, 50));
        let clebsch = named("clebsch").unwrap().graph;
        let kb = krivelevich_bound(&clebsch).unwrap();
        assert_eq!(kb, rat(5, 128) - rat(195, 4096) / rat(60, 16));
        assert!(krivelevich_bound(&Graph::empty(3).unwrap()).is_err());
    }

    #[test]
    fn maxdeg_values() {
        let p = maxdeg_halves(&named("petersen").unwrap().graph).unwrap();
        assert_eq!(p.param("analytic"), Some(&rat(3, 98)));
        let c = maxdeg_halves(&named("clebsch").unwrap().graph).unwrap();
        assert_eq!(c.param("analytic"), Some(&rat(15, 484)));
        let m = maxdeg_halves(&Graph::perfect_matching(2).unwrap()).unwrap();
        assert_eq!(m.param("analytic"), Some(&rat(1, 36)));
        assert!(maxdeg_halves(&Graph::complete(2).unwrap()).is_err());
    }

    #[test]
    fn maxdeg_combination() {
        // (1 − 2Δ)·2β(μ₀) + 2β(μ₁) = (1 − 2Δ)ρ/(2(1 − Δ))
        for name in ["petersen", "clebsch", "hoffman_singleton", "c5"] {
            let g = named(name).unwrap().graph;
            let s = maxdeg_split(&g).unwrap();
            let one = Rational::one();
            let b0 = int(2) * beta_of_half(&g, &s.mu0).unwrap();
            let b1 = int(2) * beta_of_half(&g, &s.mu1).unwrap();
            let lhs = (&one - int(2) * &s.delta) * &b0 + &b1;
            let rhs = (&one - int(2) * &s.delta) * rho(&g) / (int(2) * (&one - &s.delta));
            assert_eq!(lhs, rhs, "{name}");
            let w = &one / (int(2) * (&one - &s.delta));
            assert!(check_twice_beta(&g, &s.mu0, &(&s.rho_b * &w * &w)).unwrap());
        }
    }

    #[test]
    fn triple_cases() {
        assert!(triple_half_bound(&named("petersen").unwrap().graph).is_err());
        assert!(triple_half_bound(&Graph::cycle(6).unwrap()).is_err());
        let c10 = Graph::cycle(10).unwrap();
        let t = triple_half_bound(&c10).unwrap();
        let exact = crate::halves::beta_exact(&c10).unwrap().0;
        assert!(t.param("analytic").unwrap() >= &exact);
        assert!(t.verify(&c10));
        let m = Graph::perfect_matching(4).unwrap();
        let t = triple_half_bound(&m).unwrap();
        assert!(t.verify(&m));
    }

    #[test]
    fn clebsch_recipe() {
        let g = named("clebsch").unwrap().graph;
        for e in g.edges() {
            let c = clebsch_recipe_half(&g, Some(e)).unwrap();
            assert_eq!(c.half.as_ref().unwrap().ones().len(), 8);
            assert!(c.bound <= rat(1, 50));
            assert!(c.param("induced_edges").unwrap() <= &int(5));
        }
        assert!(clebsch_recipe_half(&named("petersen").unwrap().graph, None).is_err());
    }
}
