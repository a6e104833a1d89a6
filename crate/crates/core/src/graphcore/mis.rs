//! Exact maximum independent set by branch and bound.
//!
//! The bound on a candidate set is its size minus a greedy matching inside
//! it; in a triangle-free graph edges are the only cliques, so this is the
//! clique-cover bound.

use super::{Graph, VertexSet};

/// Independence number (unnormalised) together with one witness set.
pub fn independence_number(g: &Graph) -> (usize, Vec<usize>) {
    let mut best = greedy(g);
    let mut cur = Vec::new();
    branch(g, VertexSet::full(g.n()), &mut cur, &mut best);
    best.sort_unstable();
    (best.len(), best)
}

/// Minimum-degree greedy, used as the initial incumbent.
fn greedy(g: &Graph) -> Vec<usize> {
    let mut cand = VertexSet::full(g.n());
    let mut out = Vec::new();
    while let Some(v) = cand.iter().min_by_key(|&v| g.neighbors(v).intersection_len(&cand)) {
        out.push(v);
        cand = cand.difference(g.neighbors(v));
        cand.remove(v);
    }
    out
}

fn matching_bound(g: &Graph, cand: &VertexSet) -> usize {
    let mut free = cand.clone();
    let mut matched = 0;
    for v in cand.iter() {
        if !free.contains(v) {
            continue;
        }
        if let Some(w) = g.neighbors(v).intersection(&free).first() {
            free.remove(v);
            free.remove(w);
            matched += 1;
        }
    }
    cand.len() - matched
}

fn branch(g: &Graph, mut cand: VertexSet, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
    let base = cur.len();
    // vertices of degree ≤ 1 in the candidate set belong to some optimum
    loop {
        let low = cand.iter().find(|&v| g.neighbors(v).intersection_len(&cand) <= 1);
        let Some(v) = low else { break };
        cur.push(v);
        cand = cand.difference(g.neighbors(v));
        cand.remove(v);
    }
    if cand.is_empty() {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
    } else if cur.len() + matching_bound(g, &cand) > best.len() {
        let v = cand
            .iter()
            .max_by_key(|&v| g.neighbors(v).intersection_len(&cand))
            .expect("non-empty candidate set");
        let mut with = cand.difference(g.neighbors(v));
        with.remove(v);
        cur.push(v);
        branch(g, with, cur, best);
        cur.pop();
        cand.remove(v);
        branch(g, cand, cur, best);
    }
    cur.truncate(base);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::named;

    fn brute(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .filter(|&m| {
                let s = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| m >> v & 1 == 1));
                g.is_independent(&s)
            })
            .map(u32::count_ones)
            .max()
            .unwrap() as usize
    }

    #[test]
    fn known_values() {
        for (name, alpha) in [
            ("c5", 2),
            ("petersen", 4),
            ("clebsch", 5),
            ("hoffman_singleton", 15),
            ("gewirtz", 16),
        ] {
            let g = named(name).unwrap().graph;
            let (a, w) = independence_number(&g);
            assert_eq!(a, alpha, "{name}");
            assert!(g.is_independent(&g.vertex_set(&w)));
            assert_eq!(w.len(), a);
        }
    }

    #[test]
    fn agrees_with_brute_force() {
        for g in crate::graphcore::enumerate_triangle_free(7).unwrap() {
            assert_eq!(independence_number(&g).0, brute(&g));
        }
        let c = named("clebsch").unwrap().graph;
        assert_eq!(brute(&c), 5);
    }
}
