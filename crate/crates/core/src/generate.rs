//! Deterministic instance families for tests and the command line.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::Graph;

pub const MAX_ALL_CONNECTED_N: usize = 9;

/// A named instance family.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Gnp { n: usize, p: f64, seed: u64 },
    Cograph { n: usize, seed: u64 },
    AllConnected(usize),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(k) => write!(f, "path {k}"),
            Family::Cycle(k) => write!(f, "cycle {k}"),
            Family::Star(k) => write!(f, "star {k}"),
            Family::Complete(k) => write!(f, "complete {k}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete-bipartite {a} {b}"),
            Family::Gnp { n, p, seed } => write!(f, "gnp {n} {p} {seed}"),
            Family::Cograph { n, seed } => write!(f, "cograph {n} {seed}"),
            Family::AllConnected(n) => write!(f, "all-connected {n}"),
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        let bad = || GraphError::Generator(format!("cannot parse family `{s}`"));
        let int = |i: usize| -> Result<usize, GraphError> { toks.get(i).ok_or_else(bad)?.parse().map_err(|_| bad()) };
        let fam = match *toks.first().ok_or_else(bad)? {
            "path" => Family::Path(int(1)?),
            "cycle" => Family::Cycle(int(1)?),
            "star" => Family::Star(int(1)?),
            "complete" => Family::Complete(int(1)?),
            "complete-bipartite" => Family::CompleteBipartite(int(1)?, int(2)?),
            "gnp" => Family::Gnp {
                n: int(1)?,
                p: toks.get(2).ok_or_else(bad)?.parse().map_err(|_| bad())?,
                seed: toks.get(3).ok_or_else(bad)?.parse().map_err(|_| bad())?,
            },
            "cograph" => Family::Cograph {
                n: int(1)?,
                seed: toks.get(2).ok_or_else(bad)?.parse().map_err(|_| bad())?,
            },
            "all-connected" => Family::AllConnected(int(1)?),
            _ => return Err(bad()),
        };
        Ok(fam)
    }
}

fn positive(k: usize, what: &str) -> Result<(), GraphError> {
    if k == 0 {
        Err(GraphError::Generator(format!("{what} must be positive")))
    } else {
        Ok(())
    }
}

/// Path on `k` vertices.
pub fn path(k: usize) -> Graph {
    Graph::new(k, (1..k).map(|i| (i - 1, i))).expect("path")
}

/// Cycle on `k >= 3` vertices.
pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3, "a cycle needs at least three vertices");
    Graph::new(k, (0..k).map(|i| (i, (i + 1) % k))).expect("cycle")
}

/// Star `K_{1,k}`: centre 0 and `k` leaves.
pub fn star(k: usize) -> Graph {
    Graph::new(k + 1, (1..=k).map(|i| (0, i))).expect("star")
}

pub fn complete(k: usize) -> Graph {
    Graph::new(k, (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)))).expect("complete")
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).expect("complete bipartite")
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("gnp")
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// independently with probability `p`.
pub fn random_connected(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = HashSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i], order[j]);
        edges.insert((a.min(b), a.max(b)));
    }
    for i in 0..n {
        for j in i + 1..n {
            if !edges.contains(&(i, j)) && rng.gen_bool(p) {
                edges.insert((i, j));
            }
        }
    }
    let mut edges: Vec<_> = edges.into_iter().collect();
    edges.sort_unstable();
    Graph::new(n, edges).expect("random connected graph")
}

fn cotree_edges(vertices: &[usize], join_at_root: Option<bool>, rng: &mut ChaCha8Rng, edges: &mut Vec<(usize, usize)>) {
    if vertices.len() <= 1 {
        return;
    }
    let split = rng.gen_range(1..vertices.len());
    let (left, right) = vertices.split_at(split);
    let join = join_at_root.unwrap_or_else(|| rng.gen_bool(0.5));
    if join {
        for &a in left {
            for &b in right {
                edges.push((a.min(b), a.max(b)));
            }
        }
    }
    cotree_edges(left, None, rng, edges);
    cotree_edges(right, None, rng, edges);
}

/// Random cograph from a random cotree; the vertex order is shuffled.
pub fn cograph(n: usize, seed: u64) -> Graph {
    random_cograph(n, false, seed)
}

/// Random cograph whose cotree root is a join, hence connected.
pub fn connected_cograph(n: usize, seed: u64) -> Graph {
    random_cograph(n, true, seed)
}

fn random_cograph(n: usize, connected: bool, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(&mut rng);
    let mut edges = Vec::new();
    cotree_edges(&vertices, connected.then_some(true), &mut rng, &mut edges);
    edges.sort_unstable();
    Graph::new(n, edges).expect("cotree edges are simple")
}

/// Lazily enumerates every connected graph on `n` labelled vertices exactly
/// once, in increasing order of edge bitmask.
pub struct AllConnected {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl AllConnected {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        positive(n, "n")?;
        if n > MAX_ALL_CONNECTED_N {
            return Err(GraphError::Generator(format!("all-connected is limited to n <= {MAX_ALL_CONNECTED_N}")));
        }
        let pairs: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Ok(AllConnected { n, end: 1u64 << pairs.len(), pairs, next: 0 })
    }
}

fn mask_connected(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    let mut adj = [0u16; 16];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    let mut seen: u16 = 1;
    let mut frontier: u16 = 1;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen.count_ones() as usize == n
}

impl Iterator for AllConnected {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if mask_connected(self.n, &self.pairs, mask) {
                let edges = self.pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
                return Some(Graph::new(self.n, edges).expect("mask edges are simple"));
            }
        }
        None
    }
}

/// Materialises a family. `all-connected` yields every member; the other
/// families yield one graph.
pub fn generate(family: &Family) -> Result<Vec<Graph>, GraphError> {
    let g = match *family {
        Family::Path(k) => {
            positive(k, "k")?;
            path(k)
        }
        Family::Cycle(k) => {
            if k < 3 {
                return Err(GraphError::Generator("cycle needs k >= 3".into()));
            }
            cycle(k)
        }
        Family::Star(k) => {
            positive(k, "k")?;
            star(k)
        }
        Family::Complete(k) => {
            positive(k, "k")?;
            complete(k)
        }
        Family::CompleteBipartite(a, b) => {
            positive(a, "a")?;
            positive(b, "b")?;
            complete_bipartite(a, b)
        }
        Family::Gnp { n, p, seed } => {
            positive(n, "n")?;
            if !(0.0..=1.0).contains(&p) {
                return Err(GraphError::Generator("p must lie in [0, 1]".into()));
            }
            gnp(n, p, seed)
        }
        Family::Cograph { n, seed } => {
            positive(n, "n")?;
            cograph(n, seed)
        }
        Family::AllConnected(n) => return Ok(AllConnected::new(n)?.collect()),
    };
    Ok(vec![g])
}

/// Canonical adjacency code: equal codes iff the graphs are isomorphic.
/// Supports `n <= 16`.
pub fn canonical_code(g: &Graph) -> u128 {
    let n = g.n();
    assert!(n <= 16, "canonical_code supports at most 16 vertices");
    let cells = refine(g);
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut best: Option<Vec<u32>> = None;
    let mut prefix: Vec<u32> = Vec::with_capacity(n);
    canon_search(g, &cells, &mut order, &mut used, &mut prefix, &mut best);
    let rows = best.expect("search visits at least one ordering");
    let mut code: u128 = n as u128;
    for (i, r) in rows.iter().enumerate() {
        code = (code << i) | *r as u128;
    }
    code
}

/// Equitable ordered partition by iterated degree refinement.
fn refine(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<usize> = g.neighbours(v).iter().map(|&w| colour[w]).collect();
                ns.sort_unstable();
                (colour[v], ns)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        let new: Vec<usize> = sigs.iter_mut().map(|s| uniq.binary_search(s).expect("present")).collect();
        let before = colour.iter().collect::<HashSet<_>>().len();
        let after = uniq.len();
        colour = new;
        if after == before {
            break;
        }
    }
    let k = colour.iter().max().map_or(0, |m| m + 1);
    let mut cells = vec![Vec::new(); k];
    for v in 0..n {
        cells[colour[v]].push(v);
    }
    cells.retain(|c| !c.is_empty());
    cells
}

fn canon_search(
    g: &Graph,
    cells: &[Vec<usize>],
    order: &mut Vec<usize>,
    used: &mut [bool],
    prefix: &mut Vec<u32>,
    best: &mut Option<Vec<u32>>,
) {
    let pos = order.len();
    if pos == g.n() {
        if best.as_ref().is_none_or(|b| *prefix > *b) {
            *best = Some(prefix.clone());
        }
        return;
    }
    let mut acc = 0;
    let cell = cells
        .iter()
        .find(|c| {
            acc += c.len();
            acc > pos
        })
        .expect("positions are covered by cells");
    for &v in cell {
        if used[v] {
            continue;
        }
        let mut row = 0u32;
        for &u in order.iter() {
            row = (row << 1) | g.has_edge(u, v) as u32;
        }
        prefix.push(row);
        // prune orderings whose code prefix already loses to the best found
        let losing = best.as_ref().is_some_and(|b| prefix[..] < b[..=pos]);
        if !losing {
            used[v] = true;
            order.push(v);
            canon_search(g, cells, order, used, prefix, best);
            order.pop();
            used[v] = false;
        }
        prefix.pop();
    }
}

/// All graphs on `n` vertices up to isomorphism (connected or not).
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let base = g.edges();
            for mask in 0u32..(1 << (k - 1)) {
                let mut edges = base.clone();
                edges.extend((0..k - 1).filter(|i| mask >> i & 1 == 1).map(|i| (i, k - 1)));
                let h = Graph::new(k, edges).expect("extension is simple");
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

/// Connected graphs on `n` vertices, one per isomorphism class.
pub fn nonisomorphic_connected(n: usize) -> Vec<Graph> {
    nonisomorphic_graphs(n).into_iter().filter(Graph::is_connected).collect()
}
