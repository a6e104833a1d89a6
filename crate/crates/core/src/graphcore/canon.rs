//! Canonical labelling by equitable refinement and individualisation.
//!
//! The certificate is the lexicographically largest upper-triangle bit string
//! over all leaves of the search tree. Twin vertices in a cell give the same
//! subtree (their transposition is an automorphism) and are tried once.

use super::Graph;

/// Upper triangle of the adjacency matrix under a canonical labelling, most
/// significant bit first, so that derived `Ord` is lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The graph this certificate describes, labelled canonically.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("certificates are non-empty");
        let mut k = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.bits[k / 64] >> (63 - k % 64) & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }
}

type Partition = Vec<Vec<usize>>;

/// Canonical form with every vertex in one initial cell.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_form_colored(g, &[(0..g.n()).collect()])
}

/// Canonical form of a vertex-coloured graph. `cells` is an ordered
/// partition of the vertices; isomorphisms must map cell `i` onto cell `i`.
pub fn canonical_form_colored(g: &Graph, cells: &[Vec<usize>]) -> CanonicalForm {
    debug_assert_eq!(cells.iter().map(Vec::len).sum::<usize>(), g.n());
    let mut part: Partition = cells.iter().filter(|c| !c.is_empty()).cloned().collect();
    refine(g, &mut part);
    let mut best = None;
    search(g, part, &mut best);
    best.expect("search visits at least one leaf")
}

/// Splits cells by neighbour counts into each cell until the partition is
/// equitable. Split pieces keep their position and are ordered by count.
fn refine(g: &Graph, part: &mut Partition) {
    let mut s = 0;
    while s < part.len() {
        let splitter = g.vertex_set(&part[s]);
        let mut split_any = false;
        let mut i = 0;
        while i < part.len() {
            if part[i].len() > 1 {
                let mut keyed: Vec<(usize, usize)> = part[i]
                    .iter()
                    .map(|&v| (g.neighbors(v).intersection_len(&splitter), v))
                    .collect();
                keyed.sort_unstable();
                if keyed[0].0 != keyed[keyed.len() - 1].0 {
                    let mut pieces: Vec<Vec<usize>> = Vec::new();
                    let mut last = usize::MAX;
                    for (c, v) in keyed {
                        if c != last {
                            pieces.push(Vec::new());
                            last = c;
                        }
                        pieces.last_mut().expect("just pushed").push(v);
                    }
                    let added = pieces.len();
                    part.splice(i..=i, pieces);
                    i += added;
                    split_any = true;
                    continue;
                }
            }
            i += 1;
        }
        // any split may unbalance earlier splitters
        s = if split_any { 0 } else { s + 1 };
    }
}

fn leaf(g: &Graph, part: &Partition) -> CanonicalForm {
    let order: Vec<usize> = part.iter().map(|c| c[0]).collect();
    let n = order.len();
    let mut bits = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64).max(1)];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                bits[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    CanonicalForm { n, bits }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let mut a = g.neighbors(u).clone();
    let mut b = g.neighbors(v).clone();
    a.remove(v);
    b.remove(u);
    a == b
}

fn search(g: &Graph, part: Partition, best: &mut Option<CanonicalForm>) {
    let Some(target) = part.iter().position(|c| c.len() > 1) else {
        let cand = leaf(g, &part);
        if best.as_ref().is_none_or(|b| cand > *b) {
            *best = Some(cand);
        }
        return;
    };
    let cell = part[target].clone();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = part.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        refine(g, &mut next);
        search(g, next, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::named;

    fn shuffle(n: usize, seed: u64) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed | 1;
        for i in (1..n).rev() {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            perm.swap(i, (x % (i as u64 + 1)) as usize);
        }
        perm
    }

    #[test]
    fn invariant_under_relabelling() {
        for name in ["c5", "petersen", "clebsch"] {
            let g = named(name).unwrap().graph;
            let c = canonical_form(&g);
            for seed in 1..6 {
                assert_eq!(canonical_form(&g.relabel(&shuffle(g.n(), seed))), c, "{name}");
            }
            let back = c.to_graph();
            assert_eq!(back.edge_count(), g.edge_count());
            assert_eq!(canonical_form(&back), c);
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let c6 = Graph::cycle(6).unwrap();
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        let forms = [
            canonical_form(&c6),
            canonical_form(&two_triangles),
            canonical_form(&k33),
        ];
        assert_ne!(forms[0], forms[1]);
        assert_ne!(forms[0], forms[2]);
        assert_ne!(forms[1], forms[2]);
    }

    #[test]
    fn colours_are_respected() {
        // P₃ rooted at an end versus rooted at the centre
        let p3 = Graph::path(3).unwrap();
        let end = canonical_form_colored(&p3, &[vec![0], vec![1, 2]]);
        let centre = canonical_form_colored(&p3, &[vec![1], vec![0, 2]]);
        let other_end = canonical_form_colored(&p3, &[vec![2], vec![0, 1]]);
        assert_ne!(end, centre);
        assert_eq!(end, other_end);
    }
}
