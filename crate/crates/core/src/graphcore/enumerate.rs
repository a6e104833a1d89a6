use std::collections::{BTreeMap, BTreeSet};

use super::canon::{canonical_form, canonical_form_colored, CanonicalForm};
use super::Graph;
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_N: usize = 10;

/// One representative per isomorphism class of triangle-free graphs on `n`
/// vertices, canonically labelled and sorted by certificate.
///
/// Each class on `n` vertices arises from a class on `n − 1` vertices by
/// adding a vertex whose neighbourhood is independent; children are merged
/// on their canonical form.
pub fn enumerate_triangle_free(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::Precondition(format!(
            "enumeration supports 1 ≤ n ≤ {MAX_ENUMERATION_N}, got {n}"
        )));
    }
    let mut level = vec![Graph::empty(1)?];
    for _ in 1..n {
        level = extend(&level).into_values().collect();
    }
    Ok(level)
}

fn extend(parents: &[Graph]) -> BTreeMap<CanonicalForm, Graph> {
    let mut children = BTreeMap::new();
    for g in parents {
        let m = g.n();
        let mut sets = Vec::new();
        independent_sets(g, 0, &mut Vec::new(), &mut sets);
        for s in sets {
            let mut edges = g.edges();
            edges.extend(s.iter().map(|&u| (u, m)));
            let child = Graph::from_edges(m + 1, &edges).expect("valid extension");
            let form = canonical_form(&child);
            children.entry(form).or_insert_with_key(|f| f.to_graph());
        }
    }
    children
}

fn independent_sets(g: &Graph, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    out.push(cur.clone());
    for v in from..g.n() {
        if cur.iter().all(|&u| !g.has_edge(u, v)) {
            cur.push(v);
            independent_sets(g, v + 1, cur, out);
            cur.pop();
        }
    }
}

/// Isomorphism classes of triangle-free graphs on `n` vertices with a
/// distinguished edge `xy`. With `labeled_roots` an isomorphism must fix `x`
/// and `y` individually, otherwise it may swap them.
pub fn count_edge_rooted_flags(n: usize, labeled_roots: bool) -> Result<usize> {
    if n < 2 {
        return Err(Error::Precondition(
            "an edge-rooted flag needs at least 2 vertices".into(),
        ));
    }
    let mut classes = BTreeSet::new();
    for g in enumerate_triangle_free(n)? {
        for (a, b) in g.edges() {
            let orientations: &[(usize, usize)] = if labeled_roots { &[(a, b), (b, a)] } else { &[(a, b)] };
            for &(x, y) in orientations {
                let rest: Vec<usize> = (0..n).filter(|&v| v != x && v != y).collect();
                let cells = if labeled_roots {
                    vec![vec![x], vec![y], rest]
                } else {
                    vec![vec![x, y], rest]
                };
                classes.insert(canonical_form_colored(&g, &cells));
            }
        }
    }
    Ok(classes.len())
}

/// Edge-rooted flags on four vertices with labelled roots.
pub fn count_edge_rooted_flags4() -> usize {
    count_edge_rooted_flags(4, true).expect("n = 4 is in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force: all labelled graphs on `n` vertices, merged by minimum
    /// adjacency code over every permutation.
    fn brute_force_count(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut perms: Vec<Vec<usize>> = vec![vec![]];
        for k in 0..n {
            perms = perms
                .into_iter()
                .flat_map(|p| {
                    (0..=k).map(move |i| {
                        let mut q = p.clone();
                        q.insert(i, k);
                        q
                    })
                })
                .collect();
        }
        let mut seen = BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if !g.is_triangle_free() {
                continue;
            }
            let code = perms
                .iter()
                .map(|p| {
                    pairs
                        .iter()
                        .enumerate()
                        .fold(0u32, |acc, (i, &(a, b))| acc | ((g.has_edge(p[a], p[b]) as u32) << i))
                })
                .min()
                .unwrap();
            seen.insert(code);
        }
        seen.len()
    }

    #[test]
    fn small_counts_match_brute_force() {
        for n in 1..=6 {
            assert_eq!(enumerate_triangle_free(n).unwrap().len(), brute_force_count(n), "n={n}");
        }
    }

    #[test]
    fn counts_through_eight() {
        let counts: Vec<usize> = (1..=8).map(|n| enumerate_triangle_free(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 7, 14, 38, 107, 410]);
    }

    #[test]
    fn representatives_are_triangle_free_and_distinct() {
        let gs = enumerate_triangle_free(7).unwrap();
        assert!(gs.iter().all(Graph::is_triangle_free));
        let forms: BTreeSet<_> = gs.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), gs.len());
    }

    #[test]
    fn flags() {
        assert_eq!(count_edge_rooted_flags4(), 10);
        assert_eq!(count_edge_rooted_flags(2, true).unwrap(), 1);
        let unlabeled = count_edge_rooted_flags(4, false).unwrap();
        assert!(unlabeled <= 10);
        // swapping x and y merges {xx,yy} and {x0,y0}: 4 classes without ab, 3 with
        assert_eq!(unlabeled, 7);
        assert!(count_edge_rooted_flags(1, true).is_err());
    }

    #[test]
    fn range_errors() {
        assert!(enumerate_triangle_free(0).is_err());
        assert!(enumerate_triangle_free(MAX_ENUMERATION_N + 1).is_err());
    }
}
