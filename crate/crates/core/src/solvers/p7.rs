//! `P_7`-free graphs: a dominating `P_5`, or a dominating set `D` whose own
//! dominating structure is a clique or a short path.

use crate::colouring::{Colour, PartialColouring};
use crate::completion::Search;
use crate::error::SolveError;
use crate::graph::Graph;
use crate::pattern::{dominating_structure, Pattern, StructureKind};
use crate::result::SolverResult;

use super::{require_free, trivial_cases};

const NAME: &str = "p7";

pub fn solve_p7_free(g: &Graph) -> Result<SolverResult, SolveError> {
    if let Some(r) = trivial_cases(g, NAME)? {
        return Ok(r);
    }
    require_free(g, &Pattern::Path(7), NAME)?;
    let outer = dominating_structure(g, 7)
        .map_err(|e| SolveError::Precondition { solver: NAME, reason: e.to_string() })?;
    let mut s = Search::new(g);
    match outer.kind {
        StructureKind::InducedPath => s.small_domset(&outer.vertices),
        StructureKind::ConnectedSubgraph => {
            let d = &outer.vertices;
            let inner = dominating_structure(&g.induced(d), 5)
                .map_err(|e| SolveError::Precondition { solver: NAME, reason: e.to_string() })?;
            let verts: Vec<usize> = inner.vertices.iter().map(|&i| d[i]).collect();
            let is_path = inner.kind == StructureKind::InducedPath;
            if verts.len() == 1 || (!is_path && verts.len() >= 3) {
                if !is_clique(g, &verts) {
                    return Err(SolveError::Precondition {
                        solver: NAME,
                        reason: "inner dominating structure is not a clique".into(),
                    });
                }
                clique_case(&mut s, &verts);
            } else {
                path_case(&mut s, &verts);
            }
        }
    }
    if let Some(detail) = s.stalled.take() {
        return Err(SolveError::Stalled { solver: NAME, detail });
    }
    Ok(s.finish(NAME))
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Records a stall and returns false unless the uncoloured count dropped.
pub(crate) fn progressed(s: &mut Search<'_>, before: usize, c: &PartialColouring, solver: &str, at: &str) -> bool {
    let after = c.uncoloured_count();
    if after < before {
        return true;
    }
    if s.stalled.is_none() {
        s.stalled = Some(format!("{solver}: uncoloured count stayed at {after} {at}"));
    }
    false
}

/// The dominating set `D` is itself dominated by a clique `k` of size 1 or
/// at least 3, which is monochromatic; colour it red.
fn clique_case(s: &mut Search<'_>, k: &[usize]) {
    let g = s.g;
    let mut c = PartialColouring::uncoloured(g.n());
    for &v in k {
        c.set(v, Colour::Red);
    }
    let mut nk: Vec<usize> = k.iter().flat_map(|&v| g.neighbours(v).iter().copied()).filter(|&w| c.get(w).is_none()).collect();
    nk.sort_unstable();
    nk.dedup();

    // every neighbour of the clique red: the red set dominates, and some
    // other vertex is blue
    let mut all_red = c.clone();
    for &w in &nk {
        all_red.set(w, Colour::Red);
    }
    if all_red.oversaturated_vertex(g).is_none() {
        for z in 0..g.n() {
            if all_red.get(z).is_none() {
                let mut d = all_red.clone();
                d.set(z, Colour::Blue);
                s.stats.branches += 1;
                s.monodom(d, Colour::Red);
            }
        }
    }

    for &first in &nk {
        let mut d = c.clone();
        d.set(first, Colour::Blue);
        s.stats.branches += 1;
        clique_loop(s, d, k);
    }
}

fn clique_loop(s: &mut Search<'_>, mut c: PartialColouring, k: &[usize]) {
    let g = s.g;
    loop {
        if !s.propagate(&mut c) {
            return;
        }
        let zset = c.uncoloured_set();
        if zset.is_empty() {
            s.offer(&c);
            return;
        }
        let comps = g.components_within(&zset);
        let Some(comp) = comps.iter().find(|k| k.len() >= 2) else {
            s.independent(c);
            return;
        };
        let blue = c.blue();
        let Some(&x0) = comp.iter().find(|&&v| g.row(v).intersects(&blue)) else {
            s.violation();
            s.fallback(c);
            return;
        };
        let mut x = x0;
        let mut y = *g.neighbours(x).iter().find(|&&w| zset.contains(w)).expect("component has two vertices");
        let b0 = *g.neighbours(x).iter().find(|&&w| c.get(w) == Some(Colour::Blue)).expect("chosen with a blue neighbour");
        let dist = g.bfs_within(b0, &blue);
        let touches_clique = |v: usize| k.iter().any(|&a| g.has_edge(a, v));
        let beta = blue.iter().filter(|&v| dist[v].is_some() && touches_clique(v)).min_by_key(|&v| (dist[v], v));
        let Some(beta) = beta else {
            s.violation();
            s.fallback(c);
            return;
        };
        let mut path = g.shortest_path_within(b0, beta, &blue).expect("reachable");
        // move the anchor along the path so that neither x nor y touches
        // an inner vertex
        if path.len() > 2 {
            if let Some(j) = (1..path.len() - 1).rev().find(|&j| g.has_edge(path[j], x) || g.has_edge(path[j], y)) {
                if !g.has_edge(path[j], x) {
                    std::mem::swap(&mut x, &mut y);
                }
                path.drain(..j);
            }
        }
        let b = path[0];
        let inner: Vec<usize> = if path.len() >= 2 { path[1..path.len() - 1].to_vec() } else { Vec::new() };
        if inner.len() > 1 || g.has_edge(b, y) {
            s.violation();
            s.fallback(c);
            return;
        }

        let mut d = c.clone();
        d.set(y, Colour::Blue);
        if s.propagate(&mut d) {
            let mut centres = vec![b, x, y];
            centres.extend(&inner);
            s.neighbourhoods(d, &centres, &mut |s2, leaf| s2.monodom(leaf, Colour::Red));
        }

        let before = c.uncoloured_count();
        c.set(y, Colour::Red);
        if !progressed(s, before, &c, NAME, "after colouring y red") {
            return;
        }
    }
}

/// `D` is dominated by an induced `P_2` or `P_3` (`p`, in path order).
fn path_case(s: &mut Search<'_>, p: &[usize]) {
    // single colour on p; the all-blue case is the same up to swapping
    s.ddmp(p);
    let mut orientations = vec![p.to_vec()];
    if p.len() == 3 {
        orientations.push(p.iter().rev().copied().collect());
    }
    // the other mixed patterns either swap colours or give the middle
    // vertex two opposite neighbours
    for o in orientations {
        let mut c = PartialColouring::uncoloured(s.g.n());
        c.set(o[0], Colour::Red);
        for &v in &o[1..] {
            c.set(v, Colour::Blue);
        }
        let x1 = o[0];
        s.neighbourhoods(c, &o, &mut |s2, leaf| path_loop(s2, leaf, x1));
    }
}

fn path_loop(s: &mut Search<'_>, mut c: PartialColouring, x1: usize) {
    let g = s.g;
    loop {
        if !s.propagate(&mut c) {
            return;
        }
        let zset = c.uncoloured_set();
        if zset.is_empty() {
            s.offer(&c);
            return;
        }
        let Some(u) = zset.iter().find(|&z| c.neighbours_coloured(g, z, Colour::Blue) == 0) else {
            s.monodom(c, Colour::Blue);
            return;
        };
        let r = g.neighbours(u).iter().copied().find(|&r| c.get(r) == Some(Colour::Red) && g.has_edge(r, x1));
        let v = g.neighbours(u).iter().copied().find(|&w| zset.contains(w));
        let (Some(r), Some(v)) = (r, v) else {
            s.violation();
            s.fallback(c);
            return;
        };

        let mut d = c.clone();
        d.set(v, Colour::Red);
        if s.propagate(&mut d) {
            s.neighbourhoods(d, &[r, u, v], &mut |s2, leaf| s2.monodom(leaf, Colour::Red));
        }

        let before = c.uncoloured_count();
        c.set(v, Colour::Blue);
        if !progressed(s, before, &c, NAME, "after colouring v blue") {
            return;
        }
    }
}
