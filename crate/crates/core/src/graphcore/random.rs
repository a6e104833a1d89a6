//! Random triangle-free graphs for property tests and sampling.

use rand::seq::SliceRandom;
use rand::Rng;

use super::Graph;
use crate::error::Result;

/// Scans all pairs in random order and keeps an edge whenever it closes no
/// triangle, stopping after `max_edges` edges. With `max_edges` large this
/// is a uniformly ordered triangle-free process, so the result is maximal.
pub fn random_triangle_free<R: Rng + ?Sized>(n: usize, max_edges: usize, rng: &mut R) -> Result<Graph> {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut g = Graph::empty(n)?;
    let mut added = 0;
    for (u, v) in pairs {
        if added == max_edges {
            break;
        }
        if g.neighbors(u).is_disjoint(g.neighbors(v)) {
            g.add_edge(u, v);
            added += 1;
        }
    }
    Ok(g)
}
