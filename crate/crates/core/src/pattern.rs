//! Induced-subgraph search for a fixed family of small patterns, class
//! recognition, and dominating-structure discovery in `P_k`-free graphs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::bitset::VertexSet;
use crate::error::PatternError;
use crate::generate::{complete_bipartite, cycle, path, star};
use crate::graph::Graph;

/// The named patterns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// Induced path on the given number of vertices.
    Path(usize),
    /// Induced cycle on the given number of vertices (at least 3).
    Cycle(usize),
    /// `K_{1,3}`.
    Claw,
    K14,
    /// Claw with one edge subdivided once.
    S112,
    K23,
    P6PlusP4,
    ThreeP3,
    /// The "H" graph with its middle edge subdivided `i - 1` times.
    HStar(usize),
}

impl Pattern {
    pub fn graph(&self) -> Graph {
        match *self {
            Pattern::Path(k) => path(k),
            Pattern::Cycle(k) => cycle(k),
            Pattern::Claw => star(3),
            Pattern::K14 => star(4),
            Pattern::S112 => Graph::new(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).expect("S112"),
            Pattern::K23 => complete_bipartite(2, 3),
            Pattern::P6PlusP4 => path(6).disjoint_union(&path(4)),
            Pattern::ThreeP3 => path(3).disjoint_union(&path(3)).disjoint_union(&path(3)),
            Pattern::HStar(i) => {
                assert!(i >= 1, "H_star index starts at 1");
                // 0 and 1 are the branch vertices, 2..6 the leaves, 6.. the subdivision
                let mut edges = vec![(0, 2), (0, 3), (1, 4), (1, 5)];
                let mut prev = 0;
                for s in 0..i - 1 {
                    edges.push((prev, 6 + s));
                    prev = 6 + s;
                }
                edges.push((prev, 1));
                Graph::new(5 + i, edges).expect("H star")
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.graph().n()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Path(k) => write!(f, "P{k}"),
            Pattern::Cycle(k) => write!(f, "C{k}"),
            Pattern::Claw => f.write_str("K1_3"),
            Pattern::K14 => f.write_str("K1_4"),
            Pattern::S112 => f.write_str("S_1_1_2"),
            Pattern::K23 => f.write_str("K2_3"),
            Pattern::P6PlusP4 => f.write_str("P6_plus_P4"),
            Pattern::ThreeP3 => f.write_str("threeP3"),
            Pattern::HStar(i) => write!(f, "H_star_{i}"),
        }
    }
}

impl FromStr for Pattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || PatternError::UnknownPattern(s.to_string());
        let p = match s {
            "K1_3" => Pattern::Claw,
            "K1_4" => Pattern::K14,
            "S_1_1_2" => Pattern::S112,
            "K2_3" => Pattern::K23,
            "P6_plus_P4" => Pattern::P6PlusP4,
            "threeP3" => Pattern::ThreeP3,
            _ => {
                if let Some(i) = s.strip_prefix("H_star_") {
                    let i: usize = i.parse().map_err(|_| unknown())?;
                    if i == 0 {
                        return Err(unknown());
                    }
                    Pattern::HStar(i)
                } else if let Some(k) = s.strip_prefix('P') {
                    let k: usize = k.parse().map_err(|_| unknown())?;
                    if !(2..=14).contains(&k) {
                        return Err(unknown());
                    }
                    Pattern::Path(k)
                } else if let Some(k) = s.strip_prefix('C') {
                    let k: usize = k.parse().map_err(|_| unknown())?;
                    if k < 3 {
                        return Err(unknown());
                    }
                    Pattern::Cycle(k)
                } else {
                    return Err(unknown());
                }
            }
        };
        Ok(p)
    }
}

/// Searches for an induced copy of `p` in `g`. The returned vector maps
/// pattern vertex `i` to a vertex of `g`.
pub fn find_induced(g: &Graph, p: &Pattern) -> Option<Vec<usize>> {
    find_induced_graph(g, &p.graph())
}

/// Induced-subgraph search for an arbitrary small pattern graph.
pub fn find_induced_graph(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let k = h.n();
    if k > g.n() {
        return None;
    }
    if k == 0 {
        return Some(Vec::new());
    }
    // match order: greedily pick the vertex with most already-ordered neighbours
    let mut order: Vec<usize> = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = h.neighbours(v).iter().filter(|&&w| placed[w]).count();
                (linked, h.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    let below = symmetry_constraints(h, &order);
    let mut map = vec![usize::MAX; k];
    let mut used = VertexSet::new(g.n());
    if extend(g, h, &order, &below, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// For each pattern vertex, earlier vertices (in match order) whose image
/// must be smaller. Twins are interchangeable, and so are components that
/// are identical position by position in the match order; requiring
/// increasing images picks one representative per symmetric copy.
fn symmetry_constraints(h: &Graph, order: &[usize]) -> Vec<Vec<usize>> {
    let k = h.n();
    let mut below = vec![Vec::new(); k];
    for (i, &u) in order.iter().enumerate() {
        for &v in &order[i + 1..] {
            let mut nu = h.row(u).clone();
            let mut nv = h.row(v).clone();
            nu.remove(v);
            nv.remove(u);
            if nu == nv {
                below[v].push(u);
            }
        }
    }
    // contiguous blocks of the match order lying in one component
    let comp_of = {
        let mut c = vec![0; k];
        for (i, comp) in h.components().iter().enumerate() {
            for &v in comp {
                c[v] = i;
            }
        }
        c
    };
    let mut blocks: Vec<&[usize]> = Vec::new();
    let mut start = 0;
    for i in 1..=k {
        if i == k || comp_of[order[i]] != comp_of[order[start]] {
            blocks.push(&order[start..i]);
            start = i;
        }
    }
    let same_shape = |a: &[usize], b: &[usize]| {
        a.len() == b.len()
            && (0..a.len()).all(|s| (0..a.len()).all(|t| h.has_edge(a[s], a[t]) == h.has_edge(b[s], b[t])))
    };
    for (i, a) in blocks.iter().enumerate() {
        if let Some(b) = blocks[i + 1..].iter().find(|b| same_shape(a, b)) {
            if comp_of[a[0]] != comp_of[b[0]] {
                below[b[0]].push(a[0]);
            }
        }
    }
    below
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    below: &[Vec<usize>],
    depth: usize,
    map: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let pv = order[depth];
    let mut cand = VertexSet::full(g.n());
    cand.difference_with(used);
    for &pw in &order[..depth] {
        let gw = map[pw];
        if h.has_edge(pv, pw) {
            cand.intersect_with(g.row(gw));
        } else {
            cand.difference_with(g.row(gw));
        }
    }
    let floor = below[pv].iter().map(|&u| map[u] + 1).max().unwrap_or(0);
    let need = h.degree(pv);
    for v in cand.iter() {
        if v < floor || g.degree(v) < need {
            continue;
        }
        map[pv] = v;
        used.insert(v);
        if extend(g, h, order, below, depth + 1, map, used) {
            return true;
        }
        used.remove(v);
        map[pv] = usize::MAX;
    }
    false
}

pub fn is_free(g: &Graph, p: &Pattern) -> bool {
    find_induced(g, p).is_none()
}

/// Graph-class labels reported by [`recognize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassLabel {
    P4Free,
    P6Free,
    P7Free,
    S112Free,
    P6P4Free,
    ThreeP3Free,
    ClawFree,
    Bipartite,
    DiameterAtMost2,
    RadiusAtMost2,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 10] = [
        ClassLabel::P4Free,
        ClassLabel::P6Free,
        ClassLabel::P7Free,
        ClassLabel::S112Free,
        ClassLabel::P6P4Free,
        ClassLabel::ThreeP3Free,
        ClassLabel::ClawFree,
        ClassLabel::Bipartite,
        ClassLabel::DiameterAtMost2,
        ClassLabel::RadiusAtMost2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassLabel::P4Free => "P4-free",
            ClassLabel::P6Free => "P6-free",
            ClassLabel::P7Free => "P7-free",
            ClassLabel::S112Free => "S112-free",
            ClassLabel::P6P4Free => "P6+P4-free",
            ClassLabel::ThreeP3Free => "3P3-free",
            ClassLabel::ClawFree => "claw-free",
            ClassLabel::Bipartite => "bipartite",
            ClassLabel::DiameterAtMost2 => "diameter<=2",
            ClassLabel::RadiusAtMost2 => "radius<=2",
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Every label that holds for `g`, each decided independently. Metric labels
/// are only reported for connected graphs.
pub fn recognize(g: &Graph) -> BTreeSet<ClassLabel> {
    let mut out = BTreeSet::new();
    let free = [
        (ClassLabel::P4Free, Pattern::Path(4)),
        (ClassLabel::P6Free, Pattern::Path(6)),
        (ClassLabel::P7Free, Pattern::Path(7)),
        (ClassLabel::S112Free, Pattern::S112),
        (ClassLabel::P6P4Free, Pattern::P6PlusP4),
        (ClassLabel::ThreeP3Free, Pattern::ThreeP3),
        (ClassLabel::ClawFree, Pattern::Claw),
    ];
    for (label, p) in free {
        if is_free(g, &p) {
            out.insert(label);
        }
    }
    if g.is_bipartite() {
        out.insert(ClassLabel::Bipartite);
    }
    if g.n() > 0 {
        if let Ok(m) = g.metrics() {
            if m.diameter <= 2 {
                out.insert(ClassLabel::DiameterAtMost2);
            }
            if m.radius <= 2 {
                out.insert(ClassLabel::RadiusAtMost2);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    InducedPath,
    ConnectedSubgraph,
}

/// A vertex set dominating its target; either an induced path (vertices in
/// path order) or a connected subgraph avoiding `freeness`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominatingStructure {
    pub kind: StructureKind,
    pub vertices: Vec<usize>,
    pub freeness: Option<Pattern>,
}

impl DominatingStructure {
    /// True if the structure's vertices induce a clique.
    pub fn is_clique(&self, g: &Graph) -> bool {
        self.vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| self.vertices[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }
}

/// Finds a dominating induced path on at most `k - 2` vertices, or failing
/// that, a smallest connected dominating set whose induced subgraph is
/// `P_{k-2}`-free.
pub fn dominating_structure(g: &Graph, k: usize) -> Result<DominatingStructure, PatternError> {
    assert!(k >= 3, "k must be at least 3");
    if g.n() == 0 || !g.is_connected() {
        return Err(PatternError::Disconnected);
    }
    let pk = Pattern::Path(k);
    if !is_free(g, &pk) {
        return Err(PatternError::NotFree(pk.to_string()));
    }
    let target = VertexSet::full(g.n());
    if let Some(p) = dominating_induced_path(g, k - 2, &target) {
        return Ok(DominatingStructure { kind: StructureKind::InducedPath, vertices: p, freeness: None });
    }
    let forbidden = Pattern::Path(k - 2);
    let fg = forbidden.graph();
    for size in 1..=g.n() {
        let mut found = None;
        for_each_connected_set(g, size, &mut |set| {
            let vs = g.vertex_set(set.iter().copied());
            if g.dominates(&vs, &target) && find_induced_graph(&g.induced(set), &fg).is_none() {
                found = Some(set.to_vec());
                return true;
            }
            false
        });
        if let Some(mut vertices) = found {
            vertices.sort_unstable();
            return Ok(DominatingStructure { kind: StructureKind::ConnectedSubgraph, vertices, freeness: Some(forbidden) });
        }
    }
    unreachable!("the whole vertex set is a connected dominating set of a P_k-free graph")
}

/// Shortest dominating induced path with at most `max_len` vertices, scanning
/// lengths in increasing order and start vertices in index order.
pub fn dominating_induced_path(g: &Graph, max_len: usize, target: &VertexSet) -> Option<Vec<usize>> {
    for len in 1..=max_len.min(g.n()) {
        let mut path = Vec::with_capacity(len);
        for s in 0..g.n() {
            path.push(s);
            if grow_path(g, len, target, &mut path) {
                return Some(path);
            }
            path.pop();
        }
    }
    None
}

fn grow_path(g: &Graph, len: usize, target: &VertexSet, path: &mut Vec<usize>) -> bool {
    if path.len() == len {
        return g.dominates(&g.vertex_set(path.iter().copied()), target);
    }
    let last = *path.last().expect("nonempty path");
    for &w in g.neighbours(last) {
        // induced: w must avoid every earlier path vertex and its neighbours
        if path.contains(&w) || path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        // report each undirected path once: first end smaller than last end
        if path.len() + 1 == len && w < path[0] {
            continue;
        }
        path.push(w);
        if grow_path(g, len, target, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// Calls `f` on every connected vertex set of the given size exactly once
/// (ESU enumeration); stops early when `f` returns true.
pub fn for_each_connected_set(g: &Graph, size: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let n = g.n();
    for v in 0..n {
        let mut sub = vec![v];
        let ext: Vec<usize> = g.neighbours(v).iter().copied().filter(|&w| w > v).collect();
        let mut nbhd = g.row(v).clone();
        nbhd.insert(v);
        if esu(g, size, v, &mut sub, ext, &nbhd, f) {
            return true;
        }
    }
    false
}

fn esu(
    g: &Graph,
    size: usize,
    root: usize,
    sub: &mut Vec<usize>,
    mut ext: Vec<usize>,
    closed: &VertexSet,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if sub.len() == size {
        return f(sub);
    }
    while let Some(w) = ext.pop() {
        let mut next_ext = ext.clone();
        for &u in g.neighbours(w) {
            if u > root && !closed.contains(u) && !next_ext.contains(&u) {
                next_ext.push(u);
            }
        }
        let mut next_closed = closed.clone();
        next_closed.union_with(g.row(w));
        sub.push(w);
        if esu(g, size, root, sub, next_ext, &next_closed, f) {
            return true;
        }
        sub.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, gnp, AllConnected};

    /// Naive oracle: try every injection.
    fn naive_find(g: &Graph, h: &Graph) -> bool {
        fn rec(g: &Graph, h: &Graph, map: &mut Vec<usize>) -> bool {
            let i = map.len();
            if i == h.n() {
                return true;
            }
            for v in 0..g.n() {
                if map.contains(&v) {
                    continue;
                }
                if (0..i).all(|j| h.has_edge(i, j) == g.has_edge(v, map[j])) {
                    map.push(v);
                    if rec(g, h, map) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        h.n() <= g.n() && rec(g, h, &mut Vec::new())
    }

    fn is_induced_embedding(g: &Graph, h: &Graph, map: &[usize]) -> bool {
        let distinct: BTreeSet<_> = map.iter().collect();
        distinct.len() == map.len()
            && (0..h.n()).all(|i| (0..h.n()).all(|j| i == j || h.has_edge(i, j) == g.has_edge(map[i], map[j])))
    }

    #[test]
    fn pattern_shapes() {
        let s = Pattern::S112.graph();
        let mut degs: Vec<_> = (0..5).map(|v| s.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![3, 2, 1, 1, 1]);
        assert_eq!(Pattern::HStar(1).graph().m(), 5);
        assert_eq!(Pattern::HStar(3).graph().n(), 8);
        assert_eq!(Pattern::HStar(3).graph().m(), 7);
        assert_eq!(Pattern::ThreeP3.graph().m(), 6);
        assert_eq!(Pattern::P6PlusP4.vertex_count(), 10);
    }

    #[test]
    fn names_round_trip() {
        for s in ["P2", "P14", "C3", "C9", "K1_3", "K1_4", "S_1_1_2", "K2_3", "P6_plus_P4", "threeP3", "H_star_2"] {
            assert_eq!(s.parse::<Pattern>().unwrap().to_string(), s);
        }
        for s in ["P1", "P15", "C2", "H_star_0", "foo"] {
            assert!(s.parse::<Pattern>().is_err(), "{s}");
        }
    }

    #[test]
    fn small_examples() {
        assert!(find_induced(&complete(4), &Pattern::Path(3)).is_none());
        assert!(find_induced(&path(7), &Pattern::P6PlusP4).is_none());
        let c6 = cycle(6);
        let emb = find_induced(&c6, &Pattern::Path(5)).unwrap();
        assert!(is_induced_embedding(&c6, &path(5), &emb));
        assert!(find_induced(&c6, &Pattern::Path(6)).is_none());
    }

    #[test]
    fn agrees_with_naive_oracle() {
        let patterns = [
            Pattern::Path(3),
            Pattern::Path(4),
            Pattern::Path(5),
            Pattern::Cycle(4),
            Pattern::Cycle(5),
            Pattern::Claw,
            Pattern::S112,
            Pattern::K23,
        ];
        let mut graphs: Vec<Graph> = AllConnected::new(5).unwrap().step_by(7).collect();
        graphs.extend((0..60).map(|s| gnp(8, 0.2 + (s % 6) as f64 * 0.1, s)));
        for g in &graphs {
            for p in &patterns {
                let h = p.graph();
                let got = find_induced(g, p);
                assert_eq!(got.is_some(), naive_find(g, &h), "{g:?} {p}");
                if let Some(m) = got {
                    assert!(is_induced_embedding(g, &h, &m));
                }
            }
        }
    }

    #[test]
    fn symmetric_patterns_agree_with_naive_oracle() {
        // twins, repeated components and isolated vertices exercise the
        // symmetry breaking
        let two_k2 = path(2).disjoint_union(&path(2));
        let p3_k1_k1 = path(3).disjoint_union(&Graph::empty(2));
        let mixed = path(3).disjoint_union(&path(2)).disjoint_union(&path(3));
        let shapes =
            [Pattern::ThreeP3.graph(), Pattern::P6PlusP4.graph(), Pattern::K23.graph(), star(4), two_k2, p3_k1_k1, mixed];
        for seed in 0..80 {
            let g = gnp(11, 0.1 + (seed % 8) as f64 * 0.07, 1000 + seed);
            for h in &shapes {
                let got = find_induced_graph(&g, h);
                assert_eq!(got.is_some(), naive_find(&g, h), "{g:?} {h:?}");
                if let Some(m) = got {
                    assert!(is_induced_embedding(&g, h, &m));
                }
            }
        }
    }

    #[test]
    fn recognize_examples() {
        let c4 = recognize(&cycle(4));
        for l in [ClassLabel::P6Free, ClassLabel::P7Free, ClassLabel::S112Free, ClassLabel::Bipartite, ClassLabel::DiameterAtMost2] {
            assert!(c4.contains(&l));
        }
        let k14 = recognize(&star(4));
        assert!(!k14.contains(&ClassLabel::ClawFree));
        assert!(k14.contains(&ClassLabel::S112Free));
        let p5 = recognize(&path(5));
        assert!(p5.contains(&ClassLabel::ClawFree));
        assert!(!p5.contains(&ClassLabel::P4Free));
    }

    #[test]
    fn connected_set_enumeration_counts() {
        // oracle: filter all subsets of the given size by connectivity
        for seed in 0..10 {
            let g = gnp(9, 0.35, seed);
            for size in 1..=5 {
                let mut count = 0;
                let mut seen = BTreeSet::new();
                for_each_connected_set(&g, size, &mut |s| {
                    let mut s = s.to_vec();
                    s.sort_unstable();
                    assert!(seen.insert(s));
                    count += 1;
                    false
                });
                let mut expected = 0;
                for mask in 0u32..(1 << 9) {
                    if mask.count_ones() as usize == size {
                        let vs = g.vertex_set((0..9).filter(|i| mask >> i & 1 == 1));
                        if g.induces_connected(&vs) {
                            expected += 1;
                        }
                    }
                }
                assert_eq!(count, expected);
            }
        }
    }

    fn check_structure(g: &Graph, s: &DominatingStructure, k: usize) {
        let full = VertexSet::full(g.n());
        assert!(g.dominates(&g.vertex_set(s.vertices.iter().copied()), &full));
        let sub = g.induced(&s.vertices);
        match s.kind {
            StructureKind::InducedPath => {
                assert!(s.vertices.len() <= k - 2);
                assert!(s.vertices.windows(2).all(|w| g.has_edge(w[0], w[1])));
                assert_eq!(sub.m() + 1, s.vertices.len());
            }
            StructureKind::ConnectedSubgraph => {
                assert!(sub.is_connected());
                assert!(naive_find(&sub, &path(k - 2)) == false);
            }
        }
    }

    #[test]
    fn dominating_structure_examples() {
        let s = dominating_structure(&star(5), 7).unwrap();
        assert_eq!(s.vertices, vec![0]);
        let c6 = cycle(6);
        let s = dominating_structure(&c6, 7).unwrap();
        check_structure(&c6, &s, 7);
        assert!(s.vertices.len() <= 5);
        let p4 = path(4);
        check_structure(&p4, &dominating_structure(&p4, 7).unwrap(), 7);
        assert_eq!(dominating_structure(&path(7), 7), Err(PatternError::NotFree("P7".into())));
    }

    #[test]
    fn dominating_structures_on_small_graphs() {
        for n in 1..=6 {
            for g in AllConnected::new(n).unwrap().step_by(3) {
                for k in [5, 7] {
                    if let Ok(s) = dominating_structure(&g, k) {
                        check_structure(&g, &s, k);
                    } else {
                        assert!(!is_free(&g, &Pattern::Path(k)));
                    }
                }
            }
        }
    }
}
