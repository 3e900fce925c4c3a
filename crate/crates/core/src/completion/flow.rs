//! Dinic maximum flow on small integer-capacity networks.

use std::collections::VecDeque;

/// Directed network; parallel arcs are kept as separate arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowNetwork {
    nodes: usize,
    source: usize,
    sink: usize,
    arcs: Vec<(usize, usize, u64)>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Self {
        assert!(source < nodes && sink < nodes, "terminals out of range");
        assert_ne!(source, sink, "source and sink must differ");
        FlowNetwork { nodes, source, sink, arcs: Vec::new() }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: u64) {
        assert!(capacity >= 1, "capacities are positive");
        assert!(from < self.nodes && to < self.nodes, "arc end out of range");
        self.arcs.push((from, to, capacity));
    }

    /// An undirected edge: one arc each way with the same capacity.
    pub fn add_edge(&mut self, u: usize, v: usize, capacity: u64) {
        self.add_arc(u, v, capacity);
        self.add_arc(v, u, capacity);
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[(usize, usize, u64)] {
        &self.arcs
    }
}

struct Residual {
    head: Vec<usize>,
    cap: Vec<u64>,
    adj: Vec<Vec<usize>>,
}

impl Residual {
    fn new(f: &FlowNetwork) -> Self {
        let mut r = Residual { head: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); f.nodes] };
        for &(u, v, c) in &f.arcs {
            r.adj[u].push(r.head.len());
            r.head.push(v);
            r.cap.push(c);
            r.adj[v].push(r.head.len());
            r.head.push(u);
            r.cap.push(0);
        }
        r
    }

    fn levels(&self, s: usize) -> Vec<Option<usize>> {
        let mut level = vec![None; self.adj.len()];
        level[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.head[e];
                if self.cap[e] > 0 && level[v].is_none() {
                    level[v] = Some(level[u].unwrap_or(0) + 1);
                    queue.push_back(v);
                }
            }
        }
        level
    }

    fn push(&mut self, u: usize, t: usize, limit: u64, level: &[Option<usize>], next: &mut [usize]) -> u64 {
        if u == t {
            return limit;
        }
        while next[u] < self.adj[u].len() {
            let e = self.adj[u][next[u]];
            let v = self.head[e];
            if self.cap[e] > 0 && level[v] == level[u].map(|l| l + 1) {
                let got = self.push(v, t, limit.min(self.cap[e]), level, next);
                if got > 0 {
                    self.cap[e] -= got;
                    self.cap[e ^ 1] += got;
                    return got;
                }
            }
            next[u] += 1;
        }
        0
    }
}

/// Minimum `source`–`sink` cut: its value (= maximum flow) and the set of
/// nodes reachable from the source in the final residual network.
pub fn min_st_cut(f: &FlowNetwork) -> (u64, Vec<bool>) {
    let mut r = Residual::new(f);
    let mut flow = 0;
    loop {
        let level = r.levels(f.source);
        if level[f.sink].is_none() {
            let side = level.iter().map(Option::is_some).collect();
            return (flow, side);
        }
        let mut next = vec![0; f.nodes];
        loop {
            let got = r.push(f.source, f.sink, u64::MAX, &level, &mut next);
            if got == 0 {
                break;
            }
            flow += got;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_cut(f: &FlowNetwork) -> u64 {
        let n = f.nodes();
        let mut best = u64::MAX;
        for mask in 0u32..(1 << n) {
            let inside = |v: usize| mask >> v & 1 == 1;
            if !inside(f.source()) || inside(f.sink()) {
                continue;
            }
            let c = f.arcs().iter().filter(|&&(u, v, _)| inside(u) && !inside(v)).map(|a| a.2).sum();
            best = best.min(c);
        }
        best
    }

    #[test]
    fn small_networks() {
        let mut f = FlowNetwork::new(2, 0, 1);
        f.add_arc(0, 1, 1);
        assert_eq!(min_st_cut(&f).0, 1);
        f.add_arc(0, 1, 1);
        assert_eq!(min_st_cut(&f).0, 2);
        let mut f = FlowNetwork::new(4, 0, 3);
        for (u, v) in [(0, 1), (0, 2), (1, 3), (2, 3)] {
            f.add_arc(u, v, 1);
        }
        assert_eq!(min_st_cut(&f).0, 2);
        assert_eq!(brute_cut(&f), 2);
    }

    #[test]
    fn agrees_with_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(2..9);
            let mut f = FlowNetwork::new(n, 0, n - 1);
            for _ in 0..rng.gen_range(0..20) {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u != v {
                    f.add_edge(u, v, rng.gen_range(1..4));
                }
            }
            let (value, side) = min_st_cut(&f);
            assert_eq!(value, brute_cut(&f));
            assert!(side[0] && !side[n - 1]);
            let crossing: u64 = f.arcs().iter().filter(|&&(u, v, _)| side[u] && !side[v]).map(|a| a.2).sum();
            assert_eq!(crossing, value);
        }
    }
}
