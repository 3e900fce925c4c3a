//! Simple undirected graphs on dense vertex indices, the edge-list text
//! format, and BFS metrics.
//!
//! The text format is line oriented: the first non-comment line is `n m`,
//! followed by `m` lines `u v`. Lines starting with `#` are comments and
//! blank lines are ignored.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::bitset::VertexSet;
use crate::error::GraphError;

/// Immutable simple undirected graph with vertices `0..n`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    rows: Vec<VertexSet>,
    m: usize,
    k23: OnceLock<Vec<VertexSet>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ends.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut rows = vec![VertexSet::new(n); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if rows[u].contains(v) {
                return Err(GraphError::DuplicateEdge { u: u.min(v), v: u.max(v) });
            }
            rows[u].insert(v);
            rows[v].insert(u);
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, adj, rows, m, k23: OnceLock::new() })
    }

    /// Like [`Graph::new`] but silently drops loops and repeated edges.
    pub fn from_edges_lossy(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let set: BTreeSet<(usize, usize)> = edges
            .into_iter()
            .filter(|&(u, v)| u != v && u < n && v < n)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        Graph::new(n, set).expect("edges were normalised")
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, []).expect("no edges")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn row(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertex_set(&self, items: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_iter_in(self.n, items)
    }

    /// Closed neighbourhood union of `set`.
    pub fn closed_neighbourhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = set.clone();
        for v in set.iter() {
            out.union_with(&self.rows[v]);
        }
        out
    }

    /// Whether every vertex of `target` is in `set` or adjacent to it.
    pub fn dominates(&self, set: &VertexSet, target: &VertexSet) -> bool {
        target.is_subset(&self.closed_neighbourhood(set))
    }

    /// Induced subgraph on `vertices`; the i-th new vertex is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph")
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph::new(self.n, self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
            .expect("relabelling is a bijection")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges()
            .into_iter()
            .chain(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges).expect("disjoint union")
    }

    /// Adds a new vertex adjacent to `anchor`.
    pub fn with_pendant(&self, anchor: usize) -> Graph {
        let mut edges = self.edges();
        edges.push((anchor, self.n));
        Graph::new(self.n + 1, edges).expect("pendant vertex")
    }

    /// Connected components of the subgraph induced by `allowed`, each sorted,
    /// ordered by smallest vertex.
    pub fn components_within(&self, allowed: &VertexSet) -> Vec<Vec<usize>> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for s in allowed.iter() {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if allowed.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&VertexSet::full(self.n))
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn induces_connected(&self, set: &VertexSet) -> bool {
        self.components_within(set).len() <= 1
    }

    /// BFS distances from `s` inside `allowed` (`None` = unreachable).
    pub fn bfs_within(&self, s: usize, allowed: &VertexSet) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        if !allowed.contains(s) {
            return dist;
        }
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if allowed.contains(w) && dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        self.bfs_within(s, &VertexSet::full(self.n))
    }

    /// Shortest path from `s` to `t` inside `allowed`, lowest-index parents
    /// first. Both ends included.
    pub fn shortest_path_within(&self, s: usize, t: usize, allowed: &VertexSet) -> Option<Vec<usize>> {
        if !allowed.contains(s) || !allowed.contains(t) {
            return None;
        }
        let mut parent = vec![usize::MAX; self.n];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &w in &self.adj[u] {
                if allowed.contains(w) && parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if parent[t] == usize::MAX {
            return None;
        }
        let mut path = vec![t];
        let mut cur = t;
        while cur != s {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }

    /// Length of a shortest `u`–`v` path using only vertices of `allowed`.
    pub fn distance_within(&self, allowed: &VertexSet, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
            if !allowed.contains(x) {
                return Err(GraphError::NotInAllowedSet { vertex: x });
            }
        }
        Ok(self.bfs_within(u, allowed)[v])
    }

    /// Eccentricities, radius and diameter; errors on disconnected input.
    pub fn metrics(&self) -> Result<Metrics, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        let mut eccentricity = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut ecc = 0;
            for d in self.bfs(v) {
                ecc = ecc.max(d.ok_or(GraphError::Disconnected)?);
            }
            eccentricity.push(ecc);
        }
        let radius = *eccentricity.iter().min().expect("n > 0");
        let diameter = *eccentricity.iter().max().expect("n > 0");
        Ok(Metrics { radius, diameter, eccentricity })
    }

    /// A proper 2-colouring (side per vertex), if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("queued vertices are sided");
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Vertex sets `{a, b} ∪ (N(a) ∩ N(b))` for every pair with at least three
    /// common neighbours. Any three vertices of such a set lie in a common
    /// K_{2,3} subgraph, and every K_{2,3} subgraph lies in one of them.
    pub fn k23_groups(&self) -> &[VertexSet] {
        self.k23.get_or_init(|| {
            let mut groups: Vec<VertexSet> = Vec::new();
            for a in 0..self.n {
                for b in a + 1..self.n {
                    if self.rows[a].intersection_len(&self.rows[b]) >= 3 {
                        let mut g = self.rows[a].clone();
                        g.intersect_with(&self.rows[b]);
                        g.insert(a);
                        g.insert(b);
                        if !groups.contains(&g) {
                            groups.push(g);
                        }
                    }
                }
            }
            groups
        })
    }

    /// Serialises to the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        load_graph(text)
    }
}

/// Radius, diameter and per-vertex eccentricity of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metrics {
    pub radius: usize,
    pub diameter: usize,
    pub eccentricity: Vec<usize>,
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| GraphError::Parse { line: lineno, reason: format!("missing {what}") })?;
        tok.parse::<usize>()
            .map_err(|_| GraphError::Parse { line: lineno, reason: format!("{what} `{tok}` is not a nonnegative integer") })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = it.next() {
        return Err(GraphError::Parse { line: lineno, reason: format!("unexpected trailing field `{extra}`") });
    }
    Ok((a, b))
}

/// Parses the edge-list text format.
pub fn load_graph(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (a, b) = parse_pair(line, lineno)?;
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                if a == b {
                    return Err(GraphError::SelfLoop { vertex: a });
                }
                if a >= n || b >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: a.max(b), n });
                }
                let key = (a.min(b), a.max(b));
                if !seen.insert(key) {
                    return Err(GraphError::DuplicateEdge { u: key.0, v: key.1 });
                }
                edges.push(key);
            }
        }
    }
    let (n, m) = header.ok_or(GraphError::Parse { line: 0, reason: "missing `n m` header".into() })?;
    if edges.len() != m {
        return Err(GraphError::EdgeCountMismatch { declared: m, found: edges.len() });
    }
    Graph::new(n, edges)
}

/// Splits a stream of edge-list documents, each introduced by a `# graph`
/// comment line, and parses every document.
pub fn load_graph_stream(text: &str) -> Result<Vec<Graph>, GraphError> {
    let mut docs: Vec<String> = Vec::new();
    for line in text.lines() {
        if line.trim_start().starts_with("# graph") || docs.is_empty() {
            docs.push(String::new());
        }
        let doc = docs.last_mut().expect("pushed above");
        doc.push_str(line);
        doc.push('\n');
    }
    docs.iter()
        .filter(|d| d.lines().any(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#')))
        .map(|d| load_graph(d))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn load_path_on_three_vertices() {
        let g = load_graph("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn load_single_vertex_and_comments() {
        let g = load_graph("# a lonely vertex\n\n1 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn load_errors() {
        assert_eq!(load_graph("3 1\n0 0\n"), Err(GraphError::SelfLoop { vertex: 0 }));
        assert_eq!(load_graph("3 2\n0 1\n1 0\n"), Err(GraphError::DuplicateEdge { u: 0, v: 1 }));
        assert_eq!(load_graph("3 1\n0 3\n"), Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 }));
        assert!(matches!(load_graph("3 1\n0 x\n"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(load_graph("3 2\n0 1\n"), Err(GraphError::EdgeCountMismatch { .. })));
        assert!(matches!(load_graph(""), Err(GraphError::Parse { .. })));
    }

    #[test]
    fn text_round_trip() {
        let g = cycle(5);
        assert_eq!(load_graph(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn metrics_of_small_graphs() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let m = p4.metrics().unwrap();
        assert_eq!((m.radius, m.diameter), (2, 3));
        assert_eq!(m.eccentricity, vec![3, 2, 2, 3]);
        let c4 = cycle(4).metrics().unwrap();
        assert_eq!((c4.radius, c4.diameter), (2, 2));
        assert_eq!(Graph::empty(2).metrics(), Err(GraphError::Disconnected));
    }

    #[test]
    fn restricted_distances() {
        let c4 = cycle(4);
        let all = VertexSet::full(4);
        let three = c4.vertex_set([0, 1, 2]);
        assert_eq!(c4.distance_within(&three, 0, 2), Ok(Some(2)));
        assert_eq!(c4.distance_within(&c4.vertex_set([0, 2]), 0, 2), Ok(None));
        assert_eq!(c4.distance_within(&all, 0, 2), Ok(Some(2)));
        assert_eq!(c4.distance_within(&three, 0, 3), Err(GraphError::NotInAllowedSet { vertex: 3 }));
    }

    #[test]
    fn k23_groups_of_k23() {
        let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(k23.k23_groups().len(), 1);
        assert_eq!(k23.k23_groups()[0].len(), 5);
        assert!(cycle(6).k23_groups().is_empty());
    }

    #[test]
    fn stream_round_trip() {
        let text = format!("# graph 0\n{}# graph 1\n{}", cycle(3), cycle(4));
        let gs = load_graph_stream(&text).unwrap();
        assert_eq!(gs, vec![cycle(3), cycle(4)]);
    }
}
