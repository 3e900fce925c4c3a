//! Vertex Cover reductions producing matching-cut instances, and the oracles
//! used to check them on small inputs.
//!
//! The plain gadget is built from cliques: a clique `C` (holding the
//! connectors `u_v`, one vertex per edge of `H`, the cover vertices and `a`),
//! a clique `C'` (the connectors `u'_v` and `b`), and per vertex `v` of `H`
//! two cliques `C_v` (size `|E| + 2`) and `C'_v` (size `max(3, deg v + 1)`).
//! Every vertex lies in exactly one of these `2|V| + 2` cliques, each of
//! which is monochromatic in a valid colouring, so the exact minimum is
//! found by trying every colour assignment to the cliques.
//!
//! The bipartite gadget doubles every vertex `x` into `x_a`, `x_b`, joins
//! `x_a x_b`, and replaces every edge `xy` by `x_a y_b` and `x_b y_a`, so
//! each clique becomes a complete bipartite graph and cut values double.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::colouring::{Colour, PartialColouring};
use crate::error::HardnessError;
use crate::graph::{load_graph, Graph};
use crate::result::{Best, SolverResult, Stats};

pub const VERTEX_COVER_CAP: usize = 20;
/// Largest number of clique parts the oracle will enumerate.
pub const ORACLE_PART_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCoverInstance {
    pub graph: Graph,
    pub k: usize,
}

impl VertexCoverInstance {
    pub fn new(graph: Graph, k: usize) -> Result<Self, HardnessError> {
        if graph.m() == 0 {
            return Err(HardnessError::NoEdges);
        }
        if k > graph.n() {
            return Err(HardnessError::BudgetOutOfRange { k, n: graph.n() });
        }
        Ok(VertexCoverInstance { graph, k })
    }
}

/// What a gadget vertex is. Indices refer to vertices or edges of `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// A vertex of `C_v`; `slot` 0 is the one joined to both connectors.
    CliqueV { v: usize, slot: usize },
    /// A vertex of `C'_v`; slot 0 is joined to both connectors, slots
    /// `1..=deg v` are private edge-gadget attachments.
    CliqueVPrime { v: usize, slot: usize },
    Connector(usize),
    ConnectorPrime(usize),
    /// The vertex of `C` for an edge of `H`.
    EdgeVertex(usize),
    /// One of the `|E| + 1` vertices of `C` matched into `C_v`.
    CoverVertex { v: usize, slot: usize },
    A,
    B,
}

/// The monochromatic part a vertex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    Main,
    MainPrime,
    Vertex(usize),
    VertexPrime(usize),
}

impl Role {
    pub fn part(self) -> Part {
        match self {
            Role::Connector(_) | Role::EdgeVertex(_) | Role::CoverVertex { .. } | Role::A => Part::Main,
            Role::ConnectorPrime(_) | Role::B => Part::MainPrime,
            Role::CliqueV { v, .. } => Part::Vertex(v),
            Role::CliqueVPrime { v, .. } => Part::VertexPrime(v),
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::CliqueV { v, slot } => write!(f, "C_v[{v}.{slot}]"),
            Role::CliqueVPrime { v, slot } => write!(f, "C_v'[{v}.{slot}]"),
            Role::Connector(v) => write!(f, "u_v[{v}]"),
            Role::ConnectorPrime(v) => write!(f, "u_v'[{v}]"),
            Role::EdgeVertex(e) => write!(f, "edge[{e}]"),
            Role::CoverVertex { v, slot } => write!(f, "cover[{v}.{slot}]"),
            Role::A => f.write_str("a"),
            Role::B => f.write_str("b"),
        }
    }
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("unknown part label `{s}`");
        match s {
            "a" => return Ok(Role::A),
            "b" => return Ok(Role::B),
            _ => {}
        }
        let (head, rest) = s.split_once('[').ok_or_else(bad)?;
        let inner = rest.strip_suffix(']').ok_or_else(bad)?;
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let pair = || -> Result<(usize, usize), String> {
            let (x, y) = inner.split_once('.').ok_or_else(bad)?;
            Ok((num(x)?, num(y)?))
        };
        Ok(match head {
            "C_v" => {
                let (v, slot) = pair()?;
                Role::CliqueV { v, slot }
            }
            "C_v'" => {
                let (v, slot) = pair()?;
                Role::CliqueVPrime { v, slot }
            }
            "u_v" => Role::Connector(num(inner)?),
            "u_v'" => Role::ConnectorPrime(num(inner)?),
            "edge" => Role::EdgeVertex(num(inner)?),
            "cover" => {
                let (v, slot) = pair()?;
                Role::CoverVertex { v, slot }
            }
            _ => return Err(bad()),
        })
    }
}

/// Side of a vertex in the bipartite gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PartLabel {
    pub role: Role,
    /// `Some` in the bipartite gadget.
    pub side: Option<Side>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetOutput {
    pub graph: Graph,
    /// Cut values in `lo..=hi` correspond to a vertex cover of size `k`.
    pub lo: usize,
    pub hi: usize,
    pub labels: Vec<PartLabel>,
    pub bipartite: bool,
}

/// `2|V| + (1 + |E|) k + 1` and that plus `|E|`.
pub fn value_interval(n: usize, m: usize, k: usize) -> (usize, usize) {
    let lo = 2 * n + (1 + m) * k + 1;
    (lo, lo + m)
}

struct Builder {
    edges: Vec<(usize, usize)>,
    roles: Vec<Role>,
}

impl Builder {
    fn add(&mut self, role: Role) -> usize {
        self.roles.push(role);
        self.roles.len() - 1
    }

    fn clique(&mut self, vs: &[usize]) {
        for (i, &x) in vs.iter().enumerate() {
            for &y in &vs[i + 1..] {
                self.edges.push((x, y));
            }
        }
    }
}

/// Builds the clique gadget for `(H, k)`.
pub fn reduce_vc_to_3p3free(inst: &VertexCoverInstance) -> Result<GadgetOutput, HardnessError> {
    let h = &inst.graph;
    if h.m() == 0 {
        return Err(HardnessError::NoEdges);
    }
    if inst.k > h.n() {
        return Err(HardnessError::BudgetOutOfRange { k: inst.k, n: h.n() });
    }
    let (n, m) = (h.n(), h.m());
    let hedges = h.edges();
    let mut b = Builder { edges: Vec::new(), roles: Vec::new() };

    let mut cv = Vec::with_capacity(n);
    let mut cvp = Vec::with_capacity(n);
    let mut conn = Vec::with_capacity(n);
    let mut connp = Vec::with_capacity(n);
    for v in 0..n {
        let a: Vec<usize> = (0..m + 2).map(|slot| b.add(Role::CliqueV { v, slot })).collect();
        let size = 3.max(h.degree(v) + 1);
        let p: Vec<usize> = (0..size).map(|slot| b.add(Role::CliqueVPrime { v, slot })).collect();
        b.clique(&a);
        b.clique(&p);
        let u = b.add(Role::Connector(v));
        let up = b.add(Role::ConnectorPrime(v));
        let (w, wp) = (a[0], p[0]);
        b.edges.extend([(u, w), (w, up), (u, wp), (wp, up)]);
        cv.push(a);
        cvp.push(p);
        conn.push(u);
        connp.push(up);
    }

    // each edge takes the next free attachment of both endpoints
    let mut next_slot = vec![1usize; n];
    let mut edge_vs = Vec::with_capacity(m);
    for (i, &(x, y)) in hedges.iter().enumerate() {
        let e = b.add(Role::EdgeVertex(i));
        for end in [x, y] {
            b.edges.push((e, cvp[end][next_slot[end]]));
            next_slot[end] += 1;
        }
        edge_vs.push(e);
    }

    let mut cover = Vec::new();
    for v in 0..n {
        for slot in 0..m + 1 {
            let c = b.add(Role::CoverVertex { v, slot });
            b.edges.push((c, cv[v][slot + 1]));
            cover.push(c);
        }
    }

    let a = b.add(Role::A);
    let bb = b.add(Role::B);
    b.edges.push((a, bb));

    let mut main: Vec<usize> = conn.clone();
    main.extend(&edge_vs);
    main.extend(&cover);
    main.push(a);
    b.clique(&main);
    let mut main_prime = connp.clone();
    main_prime.push(bb);
    b.clique(&main_prime);

    let graph = Graph::new(b.roles.len(), b.edges)?;
    let (lo, hi) = value_interval(n, m, inst.k);
    let labels = b.roles.into_iter().map(|role| PartLabel { role, side: None }).collect();
    Ok(GadgetOutput { graph, lo, hi, labels, bipartite: false })
}

/// Builds the bipartite gadget: the clique gadget with every vertex doubled.
/// Vertex `x` of the clique gadget becomes `2x` (side A) and `2x + 1` (side B).
pub fn reduce_vc_to_bipartite(inst: &VertexCoverInstance) -> Result<GadgetOutput, HardnessError> {
    let plain = reduce_vc_to_3p3free(inst)?;
    Ok(double(&plain))
}

fn double(plain: &GadgetOutput) -> GadgetOutput {
    let g = &plain.graph;
    let mut edges = Vec::with_capacity(2 * g.m() + g.n());
    for x in 0..g.n() {
        edges.push((2 * x, 2 * x + 1));
    }
    for (x, y) in g.edges() {
        edges.push((2 * x, 2 * y + 1));
        edges.push((2 * x + 1, 2 * y));
    }
    let graph = Graph::new(2 * g.n(), edges).expect("doubling keeps the graph simple");
    let labels = plain
        .labels
        .iter()
        .flat_map(|l| [Side::A, Side::B].map(|s| PartLabel { role: l.role, side: Some(s) }))
        .collect();
    GadgetOutput { graph, lo: 2 * plain.lo, hi: 2 * plain.hi, labels, bipartite: true }
}

impl GadgetOutput {
    /// The distinct parts, in sorted order.
    pub fn parts(&self) -> Vec<Part> {
        let set: BTreeSet<Part> = self.labels.iter().map(|l| l.role.part()).collect();
        set.into_iter().collect()
    }

    /// Gadget file: the edge list followed by `# part <vertex> <label>` and
    /// `# interval <lo> <hi>` lines.
    pub fn to_text(&self) -> String {
        let mut s = self.graph.to_edge_list();
        for (v, l) in self.labels.iter().enumerate() {
            match l.side {
                None => s.push_str(&format!("# part {v} {}\n", l.role)),
                Some(Side::A) => s.push_str(&format!("# part {v} {} A\n", l.role)),
                Some(Side::B) => s.push_str(&format!("# part {v} {} B\n", l.role)),
            }
        }
        s.push_str(&format!("# interval {} {}\n", self.lo, self.hi));
        s
    }

    pub fn parse(text: &str) -> Result<Self, HardnessError> {
        let graph = load_graph(text)?;
        let mut labels: Vec<Option<PartLabel>> = vec![None; graph.n()];
        let mut interval = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |reason: String| HardnessError::Parse { line, reason };
            let Some(body) = raw.trim().strip_prefix('#') else { continue };
            let toks: Vec<&str> = body.split_whitespace().collect();
            match toks.first() {
                Some(&"part") => {
                    let v: usize = toks.get(1).and_then(|t| t.parse().ok()).ok_or_else(|| err("bad vertex".into()))?;
                    if v >= graph.n() {
                        return Err(err(format!("vertex {v} out of range")));
                    }
                    let role: Role = toks.get(2).ok_or_else(|| err("missing label".into()))?.parse().map_err(err)?;
                    let side = match toks.get(3) {
                        None => None,
                        Some(&"A") => Some(Side::A),
                        Some(&"B") => Some(Side::B),
                        Some(t) => return Err(err(format!("unknown side `{t}`"))),
                    };
                    labels[v] = Some(PartLabel { role, side });
                }
                Some(&"interval") => {
                    let lo = toks.get(1).and_then(|t| t.parse().ok());
                    let hi = toks.get(2).and_then(|t| t.parse().ok());
                    match (lo, hi) {
                        (Some(lo), Some(hi)) => interval = Some((lo, hi)),
                        _ => return Err(err("bad interval".into())),
                    }
                }
                _ => {}
            }
        }
        if labels.iter().all(Option::is_none) {
            return Err(HardnessError::MissingParts);
        }
        let labels: Vec<PartLabel> = labels
            .into_iter()
            .enumerate()
            .map(|(v, l)| l.ok_or(HardnessError::Parse { line: 0, reason: format!("vertex {v} has no part label") }))
            .collect::<Result<_, _>>()?;
        let (lo, hi) = interval.ok_or(HardnessError::Parse { line: 0, reason: "missing interval line".into() })?;
        let bipartite = labels[0].side.is_some();
        if labels.iter().any(|l| l.side.is_some() != bipartite) {
            return Err(HardnessError::Parse { line: 0, reason: "side given for some vertices only".into() });
        }
        Ok(GadgetOutput { graph, lo, hi, labels, bipartite })
    }
}

/// Oracle answer: the minimum plus every value a valid colouring takes.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub result: SolverResult,
    pub values: BTreeSet<usize>,
    /// Valid colourings found (each counted once).
    pub valid: usize,
}

/// Colours every vertex by the colour of its part.
pub fn colour_parts(gout: &GadgetOutput, parts: &[Part], mask: u64) -> PartialColouring {
    PartialColouring::from_total(gout.labels.iter().map(|l| {
        let i = parts.binary_search(&l.role.part()).expect("part listed");
        if mask >> i & 1 == 1 {
            Colour::Blue
        } else {
            Colour::Red
        }
    }))
}

/// Exact minimum over all colour assignments to the monochromatic parts.
pub fn clique_oracle(gout: &GadgetOutput) -> Result<OracleReport, HardnessError> {
    if gout.labels.len() != gout.graph.n() {
        return Err(HardnessError::MissingParts);
    }
    let parts = gout.parts();
    if parts.len() > ORACLE_PART_CAP {
        return Err(HardnessError::SizeCap { n: parts.len(), cap: ORACLE_PART_CAP });
    }
    // the first part is fixed red
    let total = 1u64 << (parts.len() - 1);
    let found: Vec<(u64, usize)> = (0..total)
        .into_par_iter()
        .filter_map(|half| {
            let mask = half << 1;
            colour_parts(gout, &parts, mask).validate(&gout.graph).ok().map(|v| (mask, v))
        })
        .collect();
    let values = found.iter().map(|&(_, v)| v).collect();
    let mut best = Best::new(&gout.graph);
    if let Some(&(mask, _)) = found.iter().min_by_key(|&&(mask, v)| (v, mask)) {
        best.offer(&colour_parts(gout, &parts, mask));
    }
    let stats = Stats { branches: total, ..Stats::default() };
    Ok(OracleReport { result: best.into_result("clique-oracle", stats), values, valid: found.len() })
}

pub fn clique_oracle_min_cut(gout: &GadgetOutput) -> Result<SolverResult, HardnessError> {
    Ok(clique_oracle(gout)?.result)
}

/// Where the bichromatic edges of a colouring sit in the gadget.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValueBreakdown {
    /// Per vertex of `H`: connector edges.
    pub vertex_gadgets: Vec<usize>,
    /// Per edge of `H`: attachment edges.
    pub edge_gadgets: Vec<usize>,
    /// Per vertex of `H`: matched cover edges.
    pub cover_gadgets: Vec<usize>,
    pub ab: usize,
    /// Bichromatic edges inside a part (zero for a valid colouring).
    pub within_parts: usize,
}

impl ValueBreakdown {
    pub fn total(&self) -> usize {
        self.vertex_gadgets.iter().sum::<usize>()
            + self.edge_gadgets.iter().sum::<usize>()
            + self.cover_gadgets.iter().sum::<usize>()
            + self.ab
            + self.within_parts
    }
}

/// Attributes every bichromatic edge of `c` to a gadget. In the bipartite
/// gadget both copies of an edge are counted.
pub fn value_breakdown(gout: &GadgetOutput, h: &Graph, c: &PartialColouring) -> ValueBreakdown {
    let mut out = ValueBreakdown {
        vertex_gadgets: vec![0; h.n()],
        edge_gadgets: vec![0; h.m()],
        cover_gadgets: vec![0; h.n()],
        ..ValueBreakdown::default()
    };
    for (x, y) in gout.graph.edges() {
        if c.get(x) == c.get(y) {
            continue;
        }
        let (rx, ry) = (gout.labels[x].role, gout.labels[y].role);
        if rx.part() == ry.part() {
            out.within_parts += 1;
            continue;
        }
        let (lo, hi) = if rank(rx) <= rank(ry) { (rx, ry) } else { (ry, rx) };
        match (lo, hi) {
            (Role::CliqueV { v, .. } | Role::CliqueVPrime { v, .. }, Role::Connector(_) | Role::ConnectorPrime(_)) => {
                out.vertex_gadgets[v] += 1
            }
            (Role::CliqueVPrime { .. }, Role::EdgeVertex(e)) => out.edge_gadgets[e] += 1,
            (Role::CliqueV { v, .. }, Role::CoverVertex { .. }) => out.cover_gadgets[v] += 1,
            (Role::A, Role::B) => out.ab += 1,
            other => unreachable!("no gadget edge joins {:?}", other),
        }
    }
    out
}

fn rank(r: Role) -> u8 {
    match r {
        Role::CliqueV { .. } | Role::CliqueVPrime { .. } => 0,
        Role::Connector(_) | Role::ConnectorPrime(_) => 1,
        Role::EdgeVertex(_) | Role::CoverVertex { .. } => 2,
        Role::A => 3,
        Role::B => 4,
    }
}

/// Minimum vertex cover by branching on an uncovered edge.
pub fn brute_force_vertex_cover(h: &Graph) -> Result<usize, HardnessError> {
    if h.n() > VERTEX_COVER_CAP {
        return Err(HardnessError::SizeCap { n: h.n(), cap: VERTEX_COVER_CAP });
    }
    let edges = h.edges();
    fn go(edges: &[(usize, usize)], chosen: u32, size: usize, best: &mut usize) {
        if size >= *best {
            return;
        }
        let Some(&(u, v)) = edges.iter().find(|&&(u, v)| chosen >> u & 1 == 0 && chosen >> v & 1 == 0) else {
            *best = size;
            return;
        };
        go(edges, chosen | 1 << u, size + 1, best);
        go(edges, chosen | 1 << v, size + 1, best);
    }
    let mut best = h.n();
    go(&edges, 0, 0, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, nonisomorphic_connected, path};
    use crate::pattern::{find_induced, Pattern};
    use crate::solvers::solve_bruteforce;

    fn k2() -> Graph {
        path(2)
    }

    fn gadget(h: &Graph, k: usize) -> GadgetOutput {
        reduce_vc_to_3p3free(&VertexCoverInstance::new(h.clone(), k).unwrap()).unwrap()
    }

    /// Subset enumeration, no pruning.
    fn cover_by_subsets(h: &Graph) -> usize {
        (0u32..1 << h.n())
            .filter(|s| h.edges().iter().all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1))
            .map(u32::count_ones)
            .min()
            .unwrap() as usize
    }

    #[test]
    fn vertex_cover_examples() {
        assert_eq!(brute_force_vertex_cover(&k2()).unwrap(), 1);
        assert_eq!(brute_force_vertex_cover(&cycle(5)).unwrap(), 3);
        assert_eq!(brute_force_vertex_cover(&complete(3)).unwrap(), 2);
        assert!(brute_force_vertex_cover(&Graph::empty(21)).is_err());
        for n in 2..=6 {
            for h in nonisomorphic_connected(n) {
                assert_eq!(brute_force_vertex_cover(&h).unwrap(), cover_by_subsets(&h));
            }
        }
    }

    #[test]
    fn k2_gadget_sizes() {
        let g = gadget(&k2(), 1);
        assert_eq!(g.graph.n(), 23);
        assert_eq!((g.lo, g.hi), (7, 8));
        assert_eq!((gadget(&k2(), 0).lo, gadget(&k2(), 0).hi), (5, 6));
        assert_eq!(g.parts().len(), 6);
        let b = reduce_vc_to_bipartite(&VertexCoverInstance::new(k2(), 1).unwrap()).unwrap();
        assert_eq!((b.lo, b.hi), (14, 16));
        assert!(b.graph.is_bipartite());
        assert!(!g.graph.is_bipartite());
    }

    #[test]
    fn rejects_bad_instances() {
        assert_eq!(VertexCoverInstance::new(Graph::empty(3), 0), Err(HardnessError::NoEdges));
        assert!(matches!(VertexCoverInstance::new(k2(), 3), Err(HardnessError::BudgetOutOfRange { .. })));
    }

    #[test]
    fn parts_are_cliques_of_the_stated_sizes() {
        let h = path(3);
        let g = gadget(&h, 1);
        for part in g.parts() {
            let vs: Vec<usize> = (0..g.graph.n()).filter(|&v| g.labels[v].role.part() == part).collect();
            assert!(vs.iter().all(|&x| vs.iter().all(|&y| x == y || g.graph.has_edge(x, y))), "{part:?}");
            match part {
                Part::Vertex(_) => assert_eq!(vs.len(), h.m() + 2),
                Part::VertexPrime(v) => assert_eq!(vs.len(), 3.max(h.degree(v) + 1)),
                _ => {}
            }
        }
    }

    #[test]
    fn k2_gadget_is_3p3_free() {
        assert!(find_induced(&gadget(&k2(), 1).graph, &Pattern::ThreeP3).is_none());
    }

    #[test]
    fn oracle_matches_bruteforce_on_k2() {
        let g = gadget(&k2(), 1);
        let oracle = clique_oracle_min_cut(&g).unwrap();
        assert_eq!(oracle.value(), solve_bruteforce(&g.graph).unwrap().value());
        let v = oracle.value().unwrap();
        assert!((7..=8).contains(&v));
        // k = 0 has no cover, so no value in [5, 6]
        let r = clique_oracle(&gadget(&k2(), 0)).unwrap();
        assert!(r.values.range(5..=6).next().is_none());
    }

    #[test]
    fn equal_colours_on_paired_cliques_are_invalid() {
        let h = path(3);
        let g = gadget(&h, 1);
        let parts = g.parts();
        let idx = |p: Part| parts.binary_search(&p).unwrap();
        for mask in 0u64..1 << parts.len() {
            let c = colour_parts(&g, &parts, mask);
            if !c.is_valid(&g.graph) {
                continue;
            }
            assert_ne!(mask >> idx(Part::Main) & 1, mask >> idx(Part::MainPrime) & 1);
            for v in 0..h.n() {
                assert_ne!(mask >> idx(Part::Vertex(v)) & 1, mask >> idx(Part::VertexPrime(v)) & 1);
            }
        }
    }

    #[test]
    fn breakdown_adds_up() {
        let h = cycle(4);
        let g = gadget(&h, 2);
        let r = clique_oracle_min_cut(&g).unwrap();
        let b = value_breakdown(&g, &h, r.colouring().unwrap());
        assert_eq!(b.total(), r.value().unwrap());
        assert!(b.vertex_gadgets.iter().all(|&x| x == 2));
        assert_eq!(b.ab, 1);
        assert_eq!(b.within_parts, 0);
    }

    #[test]
    fn file_round_trip() {
        for bip in [false, true] {
            let inst = VertexCoverInstance::new(path(3), 1).unwrap();
            let g = if bip { reduce_vc_to_bipartite(&inst) } else { reduce_vc_to_3p3free(&inst) }.unwrap();
            let text = g.to_text();
            assert!(text.contains(&format!("# interval {} {}\n", g.lo, g.hi)));
            assert_eq!(GadgetOutput::parse(&text).unwrap(), g);
        }
        assert_eq!(GadgetOutput::parse("2 1\n0 1\n"), Err(HardnessError::MissingParts));
    }

    #[test]
    fn role_labels_round_trip() {
        let roles = [
            Role::CliqueV { v: 1, slot: 2 },
            Role::CliqueVPrime { v: 0, slot: 0 },
            Role::Connector(3),
            Role::ConnectorPrime(2),
            Role::EdgeVertex(4),
            Role::CoverVertex { v: 1, slot: 5 },
            Role::A,
            Role::B,
        ];
        for r in roles {
            assert_eq!(r.to_string().parse::<Role>().unwrap(), r);
        }
        assert!("x[1]".parse::<Role>().is_err());
    }
}
