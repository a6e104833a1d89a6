//! Simple undirected graphs on bit-row adjacency, their basic predicates,
//! graph6 I/O, named strongly regular graphs and small-graph enumeration.

mod bitset;
pub mod canon;
pub mod enumerate;
pub mod graph6;
pub mod mis;
pub mod named;
pub mod random;

pub use bitset::VertexSet;
pub use enumerate::{count_edge_rooted_flags, count_edge_rooted_flags4, enumerate_triangle_free};
pub use named::{named, NamedGraph, SrgQuad};

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..n`, `n ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graphs need at least one vertex".into()));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::new(n); n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph("cycles need at least 3 vertices".into()));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    /// `k` disjoint edges `(2i, 2i+1)`.
    pub fn perfect_matching(k: usize) -> Result<Self> {
        let edges: Vec<_> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
        Graph::from_edges(2 * k, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Lowest-index vertex of maximum degree.
    pub fn max_degree_vertex(&self) -> usize {
        let d = self.max_degree();
        (0..self.n).find(|&v| self.degree(v) == d).unwrap_or(0)
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn vertex_set(&self, vertices: &[usize]) -> VertexSet {
        VertexSet::from_vertices(self.n, vertices.iter().copied())
    }

    /// Number of edges with both ends in `set`.
    pub fn induced_edge_count(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.adj[v].intersection_len(set)).sum::<usize>() / 2
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// True iff no edge has a common neighbour of its ends.
    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .into_iter()
            .all(|(u, v)| self.adj[u].is_disjoint(&self.adj[v]))
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                    break;
                }
                for w in self.adj[u].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// True iff two edges on four distinct vertices span no other edge.
    pub fn has_induced_2matching(&self) -> bool {
        let edges = self.edges();
        for (i, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[i + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                if !self.has_edge(a, c) && !self.has_edge(a, d) && !self.has_edge(b, c) && !self.has_edge(b, d) {
                    return true;
                }
            }
        }
        false
    }

    /// Replaces each vertex `v` by `t` pairwise non-adjacent twins
    /// `v·t, …, v·t + t − 1`.
    pub fn blowup(&self, t: usize) -> Result<Graph> {
        if t == 0 {
            return Err(Error::Precondition("blow-up factor must be positive".into()));
        }
        let mut g = Graph::empty(self.n * t)?;
        for (u, v) in self.edges() {
            for i in 0..t {
                for j in 0..t {
                    g.add_edge(u * t + i, v * t + j);
                }
            }
        }
        Ok(g)
    }

    /// Applies a vertex relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph {
            n: self.n,
            adj: vec![VertexSet::new(self.n); self.n],
        };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        named("petersen").unwrap().graph
    }

    #[test]
    fn triangle_freeness() {
        assert!(Graph::cycle(5).unwrap().is_triangle_free());
        assert!(!Graph::complete(3).unwrap().is_triangle_free());
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!(p.is_triangle_free());
    }

    #[test]
    fn girths() {
        assert_eq!(petersen().girth(), Some(5));
        assert_eq!(Graph::cycle(6).unwrap().girth(), Some(6));
        assert_eq!(Graph::path(4).unwrap().girth(), None);
        assert_eq!(Graph::complete(4).unwrap().girth(), Some(3));
        assert_eq!(Graph::complete_bipartite(2, 3).unwrap().girth(), Some(4));
    }

    #[test]
    fn induced_matchings() {
        assert!(!Graph::cycle(5).unwrap().has_induced_2matching());
        // C₆ as 0..5: edges {0,1} and {3,4} span nothing else
        assert!(Graph::cycle(6).unwrap().has_induced_2matching());
        assert!(!Graph::complete(2).unwrap().has_induced_2matching());
    }

    #[test]
    fn blowups() {
        let k2 = Graph::complete(2).unwrap();
        let c4 = k2.blowup(2).unwrap();
        assert_eq!(c4.n(), 4);
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.regular_degree(), Some(2));
        assert_eq!(c4.girth(), Some(4));
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.blowup(1).unwrap(), c5);
        let b = c5.blowup(2).unwrap();
        assert_eq!((b.n(), b.edge_count()), (10, 20));
        assert!(b.is_triangle_free());
        assert!(c5.blowup(0).is_err());
    }

    #[test]
    fn constructor_errors() {
        assert!(Graph::empty(0).is_err());
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }
}
