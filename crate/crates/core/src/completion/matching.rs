//! Hopcroft–Karp maximum matching in bipartite graphs.

use std::collections::VecDeque;

/// Bipartite graph with left vertices `0..left` and right vertices
/// `0..right`; edges are `(left, right)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    pub left: usize,
    pub right: usize,
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteGraph { left, right, edges: Vec::new() }
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        assert!(l < self.left && r < self.right, "edge end out of range");
        self.edges.push((l, r));
    }
}

const NONE: usize = usize::MAX;

/// Maximum matching as `(left, right)` pairs sorted by left vertex.
pub fn max_bipartite_matching(b: &BipartiteGraph) -> Vec<(usize, usize)> {
    let mut adj = vec![Vec::new(); b.left];
    for &(l, r) in &b.edges {
        adj[l].push(r);
    }
    for a in &mut adj {
        a.sort_unstable();
        a.dedup();
    }
    let mut mate_l = vec![NONE; b.left];
    let mut mate_r = vec![NONE; b.right];
    let mut dist = vec![0usize; b.left];
    while bfs(&adj, &mate_l, &mate_r, &mut dist) {
        for l in 0..b.left {
            if mate_l[l] == NONE {
                dfs(l, &adj, &mut mate_l, &mut mate_r, &mut dist);
            }
        }
    }
    (0..b.left).filter(|&l| mate_l[l] != NONE).map(|l| (l, mate_l[l])).collect()
}

fn bfs(adj: &[Vec<usize>], mate_l: &[usize], mate_r: &[usize], dist: &mut [usize]) -> bool {
    let mut queue = VecDeque::new();
    for l in 0..adj.len() {
        if mate_l[l] == NONE {
            dist[l] = 0;
            queue.push_back(l);
        } else {
            dist[l] = usize::MAX;
        }
    }
    let mut found = false;
    while let Some(l) = queue.pop_front() {
        for &r in &adj[l] {
            let m = mate_r[r];
            if m == NONE {
                found = true;
            } else if dist[m] == usize::MAX {
                dist[m] = dist[l] + 1;
                queue.push_back(m);
            }
        }
    }
    found
}

fn dfs(l: usize, adj: &[Vec<usize>], mate_l: &mut [usize], mate_r: &mut [usize], dist: &mut [usize]) -> bool {
    for i in 0..adj[l].len() {
        let r = adj[l][i];
        let m = mate_r[r];
        if m == NONE || (dist[m] == dist[l] + 1 && dfs(m, adj, mate_l, mate_r, dist)) {
            mate_l[l] = r;
            mate_r[r] = l;
            return true;
        }
    }
    dist[l] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::flow::{min_st_cut, FlowNetwork};
    use rand::{Rng, SeedableRng};

    /// Oracle: simple augmenting paths (Kuhn).
    fn kuhn(b: &BipartiteGraph) -> usize {
        fn aug(l: usize, b: &BipartiteGraph, seen: &mut [bool], mate_r: &mut [usize]) -> bool {
            for &(x, r) in &b.edges {
                if x == l && !seen[r] {
                    seen[r] = true;
                    if mate_r[r] == NONE || aug(mate_r[r], b, seen, mate_r) {
                        mate_r[r] = l;
                        return true;
                    }
                }
            }
            false
        }
        let mut mate_r = vec![NONE; b.right];
        (0..b.left).filter(|&l| aug(l, b, &mut vec![false; b.right], &mut mate_r)).count()
    }

    #[test]
    fn examples() {
        let mut b = BipartiteGraph::new(1, 2);
        b.add_edge(0, 0);
        b.add_edge(0, 1);
        assert_eq!(max_bipartite_matching(&b).len(), 1);
        assert!(max_bipartite_matching(&BipartiteGraph::new(3, 3)).is_empty());
        let mut k33 = BipartiteGraph::new(3, 3);
        for l in 0..3 {
            for r in 0..3 {
                k33.add_edge(l, r);
            }
        }
        assert_eq!(max_bipartite_matching(&k33).len(), 3);
    }

    #[test]
    fn agrees_with_augmenting_paths_and_min_cut() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let (nl, nr) = (rng.gen_range(0..7), rng.gen_range(0..7));
            let mut b = BipartiteGraph::new(nl, nr);
            for l in 0..nl {
                for r in 0..nr {
                    if rng.gen_bool(0.35) {
                        b.add_edge(l, r);
                    }
                }
            }
            let m = max_bipartite_matching(&b);
            let mut used_l = vec![false; nl];
            let mut used_r = vec![false; nr];
            for &(l, r) in &m {
                assert!(b.edges.contains(&(l, r)));
                assert!(!used_l[l] && !used_r[r]);
                used_l[l] = true;
                used_r[r] = true;
            }
            assert_eq!(m.len(), kuhn(&b));
            // König: the unit network's min cut equals the matching size
            let (s, t) = (nl + nr, nl + nr + 1);
            let mut f = FlowNetwork::new(nl + nr + 2, s, t);
            for l in 0..nl {
                f.add_arc(s, l, 1);
            }
            for r in 0..nr {
                f.add_arc(nl + r, t, 1);
            }
            for &(l, r) in &b.edges {
                f.add_arc(l, nl + r, 1);
            }
            assert_eq!(min_st_cut(&f).0 as usize, m.len());
        }
    }
}
