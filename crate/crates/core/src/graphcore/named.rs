//! The seven known triangle-free strongly regular graphs.
//!
//! C₅, Petersen, Clebsch and Hoffman-Singleton have short direct
//! constructions. Gewirtz, M22 and Higman-Sims come from the Steiner system
//! S(3,6,22), which is derived here from the extended binary Golay code:
//! take the octads through two fixed coordinates and delete those two.
//! Every graph is checked against its parameters before it is returned.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Parameters `(n, k, λ, μ)` of a strongly regular graph.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SrgQuad {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgQuad {
    pub const fn new(n: usize, k: usize, lambda: usize, mu: usize) -> Self {
        SrgQuad { n, k, lambda, mu }
    }

    /// Checks every pair of vertices; the error names the first violation.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        if g.n() != self.n {
            return Err(format!("expected {} vertices, found {}", self.n, g.n()));
        }
        for v in 0..g.n() {
            if g.degree(v) != self.k {
                return Err(format!("vertex {v} has degree {}, expected {}", g.degree(v), self.k));
            }
        }
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let common = g.neighbors(u).intersection_len(g.neighbors(v));
                let (want, kind) = if g.has_edge(u, v) {
                    (self.lambda, "adjacent")
                } else {
                    (self.mu, "non-adjacent")
                };
                if common != want {
                    return Err(format!(
                        "{kind} pair ({u},{v}) has {common} common neighbours, expected {want}"
                    ));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub name: &'static str,
    pub graph: Graph,
    pub expected_srg: Option<SrgQuad>,
}

pub const NAMES: [&str; 7] = [
    "c5",
    "petersen",
    "clebsch",
    "hoffman_singleton",
    "gewirtz",
    "m22",
    "higman_sims",
];

pub fn named(name: &str) -> Result<NamedGraph> {
    let (name, graph, quad) = match name {
        "c5" => ("c5", Graph::cycle(5)?, SrgQuad::new(5, 2, 0, 1)),
        "petersen" => ("petersen", petersen(), SrgQuad::new(10, 3, 0, 1)),
        "clebsch" => ("clebsch", clebsch(), SrgQuad::new(16, 5, 0, 2)),
        "hoffman_singleton" => ("hoffman_singleton", hoffman_singleton(), SrgQuad::new(50, 7, 0, 1)),
        "gewirtz" => ("gewirtz", gewirtz(), SrgQuad::new(56, 10, 0, 2)),
        "m22" => ("m22", m22(), SrgQuad::new(77, 16, 0, 4)),
        "higman_sims" => ("higman_sims", higman_sims(), SrgQuad::new(100, 22, 0, 6)),
        other => return Err(Error::UnknownGraph(other.to_string())),
    };
    checked(name, graph, quad)
}

pub(crate) fn checked(name: &'static str, graph: Graph, quad: SrgQuad) -> Result<NamedGraph> {
    quad.verify(&graph).map_err(|message| Error::Integrity {
        name: name.to_string(),
        message,
    })?;
    Ok(NamedGraph {
        name,
        graph,
        expected_srg: Some(quad),
    })
}

fn from_pairs(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Graph {
    let mut g = Graph::empty(n).expect("named graphs are non-empty");
    for u in 0..n {
        for v in u + 1..n {
            if adjacent(u, v) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Kneser graph K(5,2): 2-subsets of a 5-set, adjacent when disjoint.
fn petersen() -> Graph {
    let pairs: Vec<u32> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (1u32 << a) | (1 << b)))
        .collect();
    from_pairs(pairs.len(), |u, v| pairs[u] & pairs[v] == 0)
}

/// Cayley graph on GF(2)⁴ with connection set the unit vectors and 1111.
fn clebsch() -> Graph {
    from_pairs(16, |u, v| matches!((u ^ v).count_ones(), 1 | 4))
}

/// Five pentagons `P_h` and five pentagrams `Q_i`; vertex `j` of `P_h` is
/// joined to vertex `h·i + j` of `Q_i` (indices mod 5).
fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut g = Graph::empty(50).expect("non-empty");
    for h in 0..5 {
        for j in 0..5 {
            g.add_edge(p(h, j), p(h, j + 1));
            g.add_edge(q(h, j), q(h, j + 2));
            for i in 0..5 {
                g.add_edge(p(h, j), q(i, h * i + j));
            }
        }
    }
    g
}

/// Blocks of S(3,6,22) as bitmasks over points `0..22`, in increasing order.
fn steiner_blocks() -> Vec<u32> {
    // generator of the cyclic [23,12,7] Golay code
    const GEN: u32 = (1 << 11) | (1 << 10) | (1 << 6) | (1 << 5) | (1 << 4) | (1 << 2) | 1;
    let mut blocks = Vec::new();
    for m in 0u32..1 << 12 {
        let mut word = 0u32;
        for i in 0..12 {
            if m >> i & 1 == 1 {
                word ^= GEN << i;
            }
        }
        let word = word | ((word.count_ones() & 1) << 23);
        if word.count_ones() == 8 && word >> 22 == 0b11 {
            blocks.push(word & ((1 << 22) - 1));
        }
    }
    blocks.sort_unstable();
    blocks
}

/// The 77 blocks, adjacent when disjoint.
fn m22() -> Graph {
    let blocks = steiner_blocks();
    from_pairs(blocks.len(), |u, v| blocks[u] & blocks[v] == 0)
}

/// The 56 blocks missing point 0, adjacent when disjoint.
fn gewirtz() -> Graph {
    let blocks: Vec<u32> = steiner_blocks().into_iter().filter(|b| b & 1 == 0).collect();
    from_pairs(blocks.len(), |u, v| blocks[u] & blocks[v] == 0)
}

/// Vertex 0 is a new point ∞, vertices `1..=22` the points and `23..100` the
/// blocks: ∞ sees every point, a point sees the blocks through it, and
/// blocks are adjacent when disjoint.
fn higman_sims() -> Graph {
    let blocks = steiner_blocks();
    let mut g = Graph::empty(100).expect("non-empty");
    for p in 0..22 {
        g.add_edge(0, 1 + p);
    }
    for (i, &b) in blocks.iter().enumerate() {
        for p in 0..22 {
            if b >> p & 1 == 1 {
                g.add_edge(1 + p, 23 + i);
            }
        }
        for (j, &c) in blocks.iter().enumerate().skip(i + 1) {
            if b & c == 0 {
                g.add_edge(23 + i, 23 + j);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn steiner_system() {
        let blocks = steiner_blocks();
        assert_eq!(blocks.len(), 77);
        assert!(blocks.iter().all(|b| b.count_ones() == 6));
        // every 3 points lie in exactly one block
        for a in 0..22 {
            for b in a + 1..22 {
                for c in b + 1..22 {
                    let t = (1u32 << a) | (1 << b) | (1 << c);
                    assert_eq!(blocks.iter().filter(|&&x| x & t == t).count(), 1);
                }
            }
        }
    }

    #[test]
    fn sizes() {
        let expect = [
            ("c5", 5, 5),
            ("petersen", 10, 15),
            ("clebsch", 16, 40),
            ("hoffman_singleton", 50, 175),
            ("gewirtz", 56, 280),
            ("m22", 77, 616),
            ("higman_sims", 100, 1100),
        ];
        for (name, n, m) in expect {
            let g = named(name).unwrap();
            assert_eq!((g.graph.n(), g.graph.edge_count()), (n, m), "{name}");
            assert!(g.graph.is_triangle_free());
        }
    }

    #[test]
    fn errors() {
        assert_eq!(named("k5").unwrap_err(), Error::UnknownGraph("k5".into()));
        let bad = checked("c6", Graph::cycle(6).unwrap(), SrgQuad::new(6, 2, 0, 1));
        assert!(matches!(bad, Err(Error::Integrity { .. })));
        let wrong_n = SrgQuad::new(11, 3, 0, 1).verify(&petersen());
        assert!(wrong_n.is_err());
    }
}
