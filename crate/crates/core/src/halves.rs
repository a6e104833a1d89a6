//! Halves, their exact value `β(G, μ)`, exact minimisation and local search.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::rational::{as_string, vec_as_string};
use crate::exactmath::{fmt_rational, int, rat, Rational};
use crate::graphcore::{Graph, VertexSet};

/// A weighting `μ: V → [0, 1]` with `Σ μ(v) = n/2`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "HalfRepr", into = "HalfRepr")]
pub struct Half {
    weights: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct HalfRepr {
    #[serde(with = "vec_as_string")]
    weights: Vec<Rational>,
}

impl TryFrom<HalfRepr> for Half {
    type Error = Error;
    fn try_from(r: HalfRepr) -> Result<Half> {
        Half::new(r.weights)
    }
}

impl From<Half> for HalfRepr {
    fn from(h: Half) -> HalfRepr {
        HalfRepr { weights: h.weights }
    }
}

impl Half {
    pub fn new(weights: Vec<Rational>) -> Result<Half> {
        if weights.is_empty() {
            return Err(Error::Precondition("a half needs at least one vertex".into()));
        }
        if let Some((v, w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| w.is_negative() || **w > Rational::one())
        {
            return Err(Error::Precondition(format!(
                "weight {} of vertex {v} is outside [0, 1]",
                fmt_rational(w)
            )));
        }
        let total: Rational = weights.iter().sum();
        let want = rat(weights.len() as i64, 2);
        if total != want {
            return Err(Error::Precondition(format!(
                "weights sum to {}, expected {}",
                fmt_rational(&total),
                fmt_rational(&want)
            )));
        }
        Ok(Half { weights })
    }

    /// The 0-1 half of a set of exactly `n/2` vertices.
    pub fn from_set(n: usize, set: &VertexSet) -> Result<Half> {
        let weights = (0..n)
            .map(|v| {
                if set.contains(v) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Half::new(weights)
    }

    /// Weight 1 on `set` (of size `(n−1)/2`) and 1/2 on `v0`.
    pub fn almost_01(n: usize, set: &VertexSet, v0: usize) -> Result<Half> {
        if set.contains(v0) {
            return Err(Error::Precondition(format!("vertex {v0} is already in the set")));
        }
        let mut weights: Vec<Rational> = (0..n)
            .map(|v| {
                if set.contains(v) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        weights[v0] = rat(1, 2);
        Half::new(weights)
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> &Rational {
        &self.weights[v]
    }

    /// Vertices of weight exactly 1.
    pub fn ones(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.weights[v].is_one()).collect()
    }

    /// True when every weight is 0 or 1.
    pub fn is_01(&self) -> bool {
        self.weights.iter().all(|w| w.is_zero() || w.is_one())
    }
}

/// `β(G, μ) = n⁻² Σ_{uv ∈ E} μ(u)μ(v)`.
pub fn beta_of_half(g: &Graph, mu: &Half) -> Result<Rational> {
    if mu.n() != g.n() {
        return Err(Error::Precondition(format!(
            "half has {} weights for {} vertices",
            mu.n(),
            g.n()
        )));
    }
    let mut total = Rational::zero();
    for (u, v) in g.edges() {
        let (a, b) = (mu.weight(u), mu.weight(v));
        if !a.is_zero() && !b.is_zero() {
            total += a * b;
        }
    }
    let n = g.n() as i64;
    Ok(total / int(n * n))
}

/// `β(G, A)` for a vertex set: induced edges over `n²`.
pub fn beta_of_set(g: &Graph, set: &VertexSet) -> Rational {
    rat(g.induced_edge_count(set) as i64, (g.n() * g.n()) as i64)
}

/// An upper bound on `β(G)`, with its witness half when one exists.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub half: Option<Half>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty", with = "param_map")]
    pub params: BTreeMap<String, Rational>,
    #[serde(with = "as_string")]
    pub bound: Rational,
}

mod param_map {
    use std::collections::BTreeMap;

    use crate::exactmath::{fmt_rational, parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<String, Rational>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(m.iter().map(|(k, v)| (k, fmt_rational(v))))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<String, Rational>, D::Error> {
        BTreeMap::<String, String>::deserialize(d)?
            .into_iter()
            .map(|(k, v)| parse_rational(&v).map(|r| (k, r)).map_err(D::Error::custom))
            .collect()
    }
}

impl BoundCertificate {
    /// A certificate whose bound is `β(G, half)`, computed here.
    pub fn from_half(g: &Graph, method: &str, half: Half) -> Result<Self> {
        let bound = beta_of_half(g, &half)?;
        Ok(BoundCertificate {
            method: method.to_string(),
            half: Some(half),
            params: BTreeMap::new(),
            bound,
        })
    }

    /// A purely analytic bound with no half attached.
    pub fn analytic(method: &str, bound: Rational) -> Self {
        BoundCertificate {
            method: method.to_string(),
            half: None,
            params: BTreeMap::new(),
            bound,
        }
    }

    pub fn with_param(mut self, name: &str, value: Rational) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn param(&self, name: &str) -> Option<&Rational> {
        self.params.get(name)
    }

    /// Recomputes the bound from the half; analytic certificates only need
    /// a non-negative bound.
    pub fn verify(&self, g: &Graph) -> bool {
        match &self.half {
            Some(h) => beta_of_half(g, h).is_ok_and(|b| b == self.bound),
            None => !self.bound.is_negative(),
        }
    }
}

/// Node budget for [`beta_exact`].
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

/// Exact `β(G)` with a witness, using [`DEFAULT_NODE_BUDGET`].
pub fn beta_exact(g: &Graph) -> Result<(Rational, Half)> {
    beta_exact_with_budget(g, DEFAULT_NODE_BUDGET)
}

/// Branch and bound over `⌊n/2⌋`-subsets `S`.
///
/// Even `n` minimises `e(S)`; odd `n` minimises `2e(S) + min_{v∉S} |N(v)∩S|`
/// and puts weight 1/2 on the minimising `v`. The lower bound at a node adds
/// the smallest degrees into the current set among the remaining vertices.
pub fn beta_exact_with_budget(g: &Graph, budget: u64) -> Result<(Rational, Half)> {
    let n = g.n();
    let k = n / 2;
    let odd = n % 2 == 1;
    let mut search = Exact {
        g,
        k,
        odd,
        best: u64::MAX,
        best_set: None,
        nodes: 0,
        budget,
        set: VertexSet::new(n),
    };
    search.run(0, 0, 0)?;
    let set = search.best_set.expect("some subset has size ⌊n/2⌋");
    let half = if odd {
        let v0 = (0..n)
            .filter(|&v| !set.contains(v))
            .min_by_key(|&v| g.neighbors(v).intersection_len(&set))
            .expect("odd n leaves a vertex outside");
        Half::almost_01(n, &set, v0)?
    } else {
        Half::from_set(n, &set)?
    };
    let value = beta_of_half(g, &half)?;
    debug_assert_eq!(value, rat(search.best as i64, 2 * (n * n) as i64));
    Ok((value, half))
}

struct Exact<'a> {
    g: &'a Graph,
    k: usize,
    odd: bool,
    /// Objective in half-edge units: `2e(S)` (+ the odd correction).
    best: u64,
    best_set: Option<VertexSet>,
    nodes: u64,
    budget: u64,
    set: VertexSet,
}

impl Exact<'_> {
    fn run(&mut self, next: usize, size: usize, edges: u64) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget(format!(
                "exact search exceeded {} nodes on {} vertices",
                self.budget,
                self.g.n()
            )));
        }
        let n = self.g.n();
        if size == self.k {
            let extra = if self.odd {
                (0..n)
                    .filter(|&v| !self.set.contains(v))
                    .map(|v| self.g.neighbors(v).intersection_len(&self.set) as u64)
                    .min()
                    .unwrap_or(0)
            } else {
                0
            };
            let value = 2 * edges + extra;
            if value < self.best {
                self.best = value;
                self.best_set = Some(self.set.clone());
            }
            return Ok(());
        }
        let need = self.k - size;
        if n - next < need {
            return Ok(());
        }
        let mut into: Vec<u64> = (next..n)
            .map(|v| self.g.neighbors(v).intersection_len(&self.set) as u64)
            .collect();
        into.select_nth_unstable(need - 1);
        let lower = edges + into[..need].iter().sum::<u64>();
        if 2 * lower >= self.best {
            return Ok(());
        }
        let d = self.g.neighbors(next).intersection_len(&self.set) as u64;
        self.set.insert(next);
        self.run(next + 1, size + 1, edges + d)?;
        self.set.remove(next);
        self.run(next + 1, size, edges)
    }
}

/// Default seed for [`local_search_half`].
pub const DEFAULT_SEED: u64 = 1;
/// Default number of restarts for [`local_search_half`].
pub const DEFAULT_RESTARTS: usize = 20;

/// Steepest-descent swap search over `n/2`-subsets with random restarts.
///
/// Each restart draws a uniform `n/2`-subset from a ChaCha8 stream seeded
/// with `seed`, then repeatedly makes the swap (one vertex out, one in) that
/// removes the most induced edges, ties to the lowest indices, until no swap
/// helps. The best subset over all restarts is returned.
pub fn local_search_half(g: &Graph, seed: u64, restarts: usize) -> Result<BoundCertificate> {
    let n = g.n();
    if n % 2 == 1 {
        return Err(Error::Precondition(
            "local search needs an even number of vertices; blow the graph up first".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    let mut best: Option<(usize, VertexSet, usize)> = None;
    for restart in 0..restarts.max(1) {
        order.shuffle(&mut rng);
        let set = VertexSet::from_vertices(n, order[..n / 2].iter().copied());
        let (set, edges) = descend(g, set);
        if best.as_ref().is_none_or(|(e, _, _)| edges < *e) {
            best = Some((edges, set, restart));
        }
        if edges == 0 {
            break;
        }
    }
    let (_, set, restart) = best.expect("at least one restart");
    let cert = BoundCertificate::from_half(g, "local-search", Half::from_set(n, &set)?)?;
    Ok(cert
        .with_param("seed", int(seed as i64))
        .with_param("restart", int(restart as i64)))
}

/// Runs steepest descent from `set`; returns the local optimum and its
/// induced edge count.
pub fn descend(g: &Graph, mut set: VertexSet) -> (VertexSet, usize) {
    let n = g.n();
    let mut into: Vec<i64> = (0..n).map(|v| g.neighbors(v).intersection_len(&set) as i64).collect();
    let mut edges = g.induced_edge_count(&set);
    loop {
        let inside: Vec<usize> = set.iter().collect();
        let outside: Vec<usize> = (0..n).filter(|&v| !set.contains(v)).collect();
        let mut step: Option<(i64, usize, usize)> = None;
        for &u in &inside {
            for &w in &outside {
                let change = into[w] - into[u] - g.has_edge(u, w) as i64;
                if change < 0 && step.is_none_or(|(c, _, _)| change < c) {
                    step = Some((change, u, w));
                }
            }
        }
        let Some((change, u, w)) = step else { break };
        set.remove(u);
        set.insert(w);
        for x in g.neighbors(u).iter() {
            into[x] -= 1;
        }
        for x in g.neighbors(w).iter() {
            into[x] += 1;
        }
        edges = (edges as i64 + change) as usize;
    }
    (set, edges)
}
