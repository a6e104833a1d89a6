//! Normalised densities with sampling-with-repetition semantics.
//!
//! All values are exact. Within-part densities `ρ_x = |E(X)|/n²` carry no
//! factor 2, cross densities `ρ_xy = 2|E(X,Y)|/n²` do.

use std::collections::BTreeMap;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::rational::as_string;
use crate::exactmath::{int, rat, Rational};
use crate::graphcore::mis::independence_number;
use crate::graphcore::{Graph, VertexSet};

fn over_n2(count: usize, n: usize) -> Rational {
    rat(count as i64, (n * n) as i64)
}

/// `ρ(G) = 2|E|/n²`.
pub fn rho(g: &Graph) -> Rational {
    over_n2(2 * g.edge_count(), g.n())
}

/// `Δ(G)`: maximum degree over `n`.
pub fn delta(g: &Graph) -> Rational {
    rat(g.max_degree() as i64, g.n() as i64)
}

/// Probability that four vertices sampled with repetition span a labelled
/// `C₄` pattern, summed over the three labelled 4-cycles on `[4]`.
///
/// For the cycle `1-2-3-4` the tuple needs edges `v₁v₂, v₂v₃, v₃v₄, v₄v₁`
/// and non-edges `v₁v₃, v₂v₄`. Fixing the non-adjacent (or equal) pair
/// `(v₁, v₃)`, both `v₂` and `v₄` range over `S = N(v₁) ∩ N(v₃)` subject to
/// `v₂ ≁ v₄`, giving `|S|² − 2e(S)` choices.
pub fn c4_density(g: &Graph) -> Rational {
    let n = g.n();
    let mut count: u64 = 0;
    for a in 0..n {
        for c in 0..n {
            if g.has_edge(a, c) {
                continue;
            }
            let s = g.neighbors(a).intersection(g.neighbors(c));
            let k = s.len() as u64;
            if k > 0 {
                count += k * k - 2 * g.induced_edge_count(&s) as u64;
            }
        }
    }
    let n4 = (n as i64).pow(4);
    int(3) * Rational::new((count as i64).into(), n4.into())
}

/// `α(G)`: independence number over `n`, exact via branch and bound.
pub fn alpha(g: &Graph) -> Rational {
    rat(independence_number(g).0 as i64, g.n() as i64)
}

/// `e_X(v) = |N(v) ∩ X|/n`, or `e(v) = |N(v)|/n` when `x` is `None`.
pub fn e_rel(g: &Graph, v: usize, x: Option<&VertexSet>) -> Result<Rational> {
    let count = match x {
        None => g.degree(v),
        Some(x) if x.contains(v) => return Err(Error::Precondition(format!("vertex {v} lies in X"))),
        Some(x) => g.neighbors(v).intersection_len(x),
    };
    Ok(rat(count as i64, g.n() as i64))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartitionDensities {
    /// `p_x = |X|/n`.
    pub p: Vec<Rational>,
    /// `ρ_x = |E(X)|/n²`.
    pub within: Vec<Rational>,
    /// `ρ_xy = 2|E(X,Y)|/n²` for `x < y`.
    pub cross: BTreeMap<(usize, usize), Rational>,
}

impl PartitionDensities {
    pub fn cross(&self, x: usize, y: usize) -> Rational {
        let key = if x < y { (x, y) } else { (y, x) };
        self.cross.get(&key).cloned().unwrap_or_else(Rational::zero)
    }
}

/// Densities of pairwise disjoint vertex sets; they need not cover `V`.
pub fn partition_densities(g: &Graph, parts: &[VertexSet]) -> Result<PartitionDensities> {
    let n = g.n();
    for (i, a) in parts.iter().enumerate() {
        for (j, b) in parts.iter().enumerate().skip(i + 1) {
            if !a.is_disjoint(b) {
                return Err(Error::Precondition(format!("parts {i} and {j} overlap")));
            }
        }
    }
    let p = parts.iter().map(|x| rat(x.len() as i64, n as i64)).collect();
    let within = parts.iter().map(|x| over_n2(g.induced_edge_count(x), n)).collect();
    let mut cross = BTreeMap::new();
    for (i, a) in parts.iter().enumerate() {
        for (j, b) in parts.iter().enumerate().skip(i + 1) {
            let e: usize = a.iter().map(|v| g.neighbors(v).intersection_len(b)).sum();
            cross.insert((i, j), over_n2(2 * e, n));
        }
    }
    Ok(PartitionDensities { p, within, cross })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DensityReport {
    #[serde(with = "as_string")]
    pub rho: Rational,
    #[serde(with = "as_string")]
    pub c4: Rational,
    #[serde(with = "as_string")]
    pub delta: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_string")]
    pub alpha: Option<Rational>,
}

mod opt_string {
    use crate::exactmath::{fmt_rational, parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_some(&fmt_rational(v)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| parse_rational(&t).map_err(D::Error::custom))
            .transpose()
    }
}

/// `α` is computed only when asked, since it needs the exact solver.
pub fn density_report(g: &Graph, with_alpha: bool) -> DensityReport {
    DensityReport {
        rho: rho(g),
        c4: c4_density(g),
        delta: delta(g),
        alpha: with_alpha.then(|| alpha(g)),
    }
}
