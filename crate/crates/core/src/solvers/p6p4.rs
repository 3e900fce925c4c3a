//! `(P_6+P_4)`-free graphs containing an induced `P_6`.
//!
//! After colouring a `P_6` and its neighbourhood, the uncoloured subgraph is
//! `P_4`-free. Components next to blue vertices are coloured in turn ("blue
//! coast") until some blue component is met twice, which yields an induced
//! `P_6` whose whole neighbourhood is coloured; then no induced `P_4` may
//! avoid it, which pins the remaining components down to sizes two and
//! three ("red coast") and finally to a peeling over size-two components.

use crate::bitset::VertexSet;
use crate::colouring::{Colour, PartialColouring};
use crate::completion::{colouring_from_matching, complete_small_domset, perfect_matching, Search};
use crate::completion::{BRUTE_FORCE_CAP, DEFAULT_DOMSET_CAP};
use crate::error::SolveError;
use crate::graph::Graph;
use crate::pattern::{find_induced, Pattern};
use crate::result::SolverResult;

use super::p4free::enumerate_p4free_colourings;
use super::p7::progressed;
use super::{min_dominating_set, require_free, solve_bruteforce, trivial_cases, DOMSET_SEARCH_CAP};

const NAME: &str = "p6p4";

pub fn solve_p6p4_free(g: &Graph) -> Result<SolverResult, SolveError> {
    if let Some(r) = trivial_cases(g, NAME)? {
        return Ok(r);
    }
    require_free(g, &Pattern::P6PlusP4, NAME)?;
    let Some(p) = find_induced(g, &Pattern::Path(6)) else {
        return p6_free_fallback(g);
    };
    let mut s = Search::new(g);
    for mask in 0u32..1 << 6 {
        let mut c = PartialColouring::uncoloured(g.n());
        for (i, &v) in p.iter().enumerate() {
            c.set(v, if mask >> i & 1 == 1 { Colour::Blue } else { Colour::Red });
        }
        s.neighbourhoods(c, &p, &mut |s2, leaf| start(s2, leaf));
    }
    if let Some(detail) = s.stalled.take() {
        return Err(SolveError::Stalled { solver: NAME, detail });
    }
    Ok(s.finish(NAME))
}

/// `P_6`-free inputs go to a small dominating set, or brute force.
fn p6_free_fallback(g: &Graph) -> Result<SolverResult, SolveError> {
    if g.n() <= DOMSET_SEARCH_CAP {
        if let Some(d) = min_dominating_set(g, DEFAULT_DOMSET_CAP) {
            let mut r = complete_small_domset(g, &d, DEFAULT_DOMSET_CAP)?;
            r.solver = format!("{NAME}-fallback-domset");
            return Ok(r);
        }
    }
    if g.n() <= BRUTE_FORCE_CAP {
        let mut r = solve_bruteforce(g)?;
        r.solver = format!("{NAME}-fallback-brute");
        return Ok(r);
    }
    Err(SolveError::SizeCap { solver: NAME, n: g.n(), cap: BRUTE_FORCE_CAP })
}

fn start(s: &mut Search<'_>, leaf: PartialColouring) {
    if leaf.has_both() {
        blue_coast(s, leaf, &[]);
        return;
    }
    let col = if leaf.has(Colour::Red) { Colour::Blue } else { Colour::Red };
    for z in 0..s.g.n() {
        if leaf.get(z).is_none() {
            let mut d = leaf.clone();
            d.set(z, col);
            s.stats.branches += 1;
            blue_coast(s, d, &[]);
        }
    }
}

/// A blue vertex used to enter a component, with the two component
/// vertices next to it.
#[derive(Clone, Copy, Debug)]
struct Visit {
    w: usize,
    s1: usize,
    s2: usize,
}

fn blue_coast(s: &mut Search<'_>, mut c: PartialColouring, visits: &[Visit]) {
    let g = s.g;
    if !s.propagate(&mut c) {
        return;
    }
    let zset = c.uncoloured_set();
    if zset.is_empty() {
        s.offer(&c);
        return;
    }
    let comps = g.components_within(&zset);
    let Some(comp) = comps.into_iter().find(|k| k.len() >= 2) else {
        s.independent(c);
        return;
    };
    let cset = g.vertex_set(comp.iter().copied());
    let blue = c.blue();
    let blue_nbrs: Vec<usize> = blue.iter().filter(|&b| g.row(b).intersects(&cset)).collect();
    let local = enumerate_p4free_colourings(&g.induced(&comp));
    let (Some(&w0), Ok(local)) = (blue_nbrs.first(), local) else {
        s.violation();
        s.fallback(c);
        return;
    };
    let from_w0 = g.bfs_within(w0, &blue);
    let before = c.uncoloured_count();
    match visits.iter().find(|v| from_w0[v.w].is_some()).copied() {
        None => {
            let (s1, s2, centres) = anchors(g, &c, &comp, w0);
            let mut next = visits.to_vec();
            next.push(Visit { w: w0, s1, s2 });
            for loc in &local {
                let d = paint(&c, &comp, loc);
                if !progressed(s, before, &d, NAME, "in the blue coast") {
                    return;
                }
                s.neighbourhoods(d, &centres, &mut |s2, leaf| blue_coast(s2, leaf, &next));
            }
        }
        Some(prev) => {
            let from_v = g.bfs_within(prev.w, &blue);
            let w = *blue_nbrs
                .iter()
                .filter(|&&b| from_v[b].is_some())
                .min_by_key(|&&b| (from_v[b], b))
                .expect("w0 qualifies");
            let (s1, s2, centres) = anchors(g, &c, &comp, w);
            let path = g.shortest_path_within(prev.w, w, &blue).expect("same blue component");
            let Some((long_path, extra)) = second_visit_path(g, &path, prev, s1, s2) else {
                s.violation();
                s.fallback(c);
                return;
            };
            let mut all: Vec<usize> = extra;
            all.extend(&centres);
            // colouring the neighbourhood of the path as well keeps every
            // uncoloured vertex off it
            all.extend(&long_path);
            let mut seen = VertexSet::new(g.n());
            all.retain(|&v| {
                let fresh = !seen.contains(v);
                seen.insert(v);
                fresh
            });
            for loc in &local {
                let d = paint(&c, &comp, loc);
                if !progressed(s, before, &d, NAME, "in the blue coast") {
                    return;
                }
                s.neighbourhoods(d, &all, &mut |s2, leaf| red_coast(s2, leaf, &long_path));
            }
        }
    }
}

/// `s1` is the lowest vertex of `comp` next to `w`, `s2` its lowest
/// neighbour in `comp`; the centres are `w` and the red neighbours of `s1`,
/// `s2` and the blue neighbour of `s2`.
fn anchors(g: &Graph, c: &PartialColouring, comp: &[usize], w: usize) -> (usize, usize, Vec<usize>) {
    let s1 = *comp.iter().find(|&&v| g.has_edge(v, w)).expect("w touches the component");
    let s2 = *g.neighbours(s1).iter().find(|v| comp.binary_search(v).is_ok()).expect("component has two vertices");
    let of = |v: usize, col: Colour| g.neighbours(v).iter().copied().find(|&u| c.get(u) == Some(col));
    let mut centres = vec![w];
    centres.extend(of(s1, Colour::Red));
    centres.extend(of(s2, Colour::Red));
    centres.extend(of(s2, Colour::Blue));
    (s1, s2, centres)
}

fn paint(c: &PartialColouring, comp: &[usize], local: &PartialColouring) -> PartialColouring {
    let mut d = c.clone();
    for (i, &v) in comp.iter().enumerate() {
        d.set(v, local.get(i).expect("total"));
    }
    d
}

/// The induced path through the earlier and the current component when a
/// blue component is met the second time, with the inner blue vertices
/// whose neighbourhoods must be coloured. `path` runs from the earlier
/// entry vertex to `w` inside the blue class.
fn second_visit_path(g: &Graph, path: &[usize], prev: Visit, s1: usize, s2: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    if path.len() < 2 {
        return None;
    }
    let inner = &path[1..path.len() - 1];
    let w = path[path.len() - 1];
    let touches = |t: usize| g.has_edge(t, prev.s1) || g.has_edge(t, prev.s2);
    let (long, extra) = match inner.iter().rposition(|&t| touches(t)) {
        None => {
            let mut p = vec![prev.s2, prev.s1];
            p.extend(path);
            p.extend([s1, s2]);
            (p, Vec::new())
        }
        Some(l) => {
            let t = inner[l];
            let tail = &inner[l..];
            match (g.has_edge(t, prev.s1), g.has_edge(t, prev.s2)) {
                (true, true) => {
                    let mut p = path.to_vec();
                    p.extend([s1, s2]);
                    (p, inner.to_vec())
                }
                (first, _) => {
                    let mut p = if first { vec![prev.s2, prev.s1] } else { vec![prev.s1, prev.s2] };
                    p.extend(tail);
                    p.extend([w, s1, s2]);
                    (p, tail.to_vec())
                }
            }
        }
    };
    (long.len() >= 6 && is_induced_path(g, &long)).then_some((long, extra))
}

fn is_induced_path(g: &Graph, p: &[usize]) -> bool {
    let mut seen = VertexSet::new(g.n());
    for &v in p {
        if seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    p.iter()
        .enumerate()
        .all(|(i, &u)| p[i + 1..].iter().enumerate().all(|(j, &v)| g.has_edge(u, v) == (j == 0)))
}

fn red_coast(s: &mut Search<'_>, mut c: PartialColouring, long_path: &[usize]) {
    let g = s.g;
    if !s.propagate(&mut c) {
        return;
    }
    let zset = c.uncoloured_set();
    if zset.is_empty() {
        s.offer(&c);
        return;
    }
    let pset = g.vertex_set(long_path.iter().copied());
    let near = g.closed_neighbourhood(&pset);
    let isolated = near.iter().all(|v| match c.get(v) {
        None => false,
        Some(Colour::Red) => !g.row(v).intersects(&zset),
        Some(Colour::Blue) => true,
    });
    if !isolated {
        s.violation();
        s.fallback(c);
        return;
    }
    let comps = g.components_within(&zset);
    if comps.iter().all(|k| k.len() == 1) {
        s.independent(c);
        return;
    }
    let mut d = c.clone();
    for comp in comps.iter().filter(|k| k.len() >= 2) {
        if !settle_component(g, &mut d, comp) {
            s.violation();
            s.fallback(c);
            return;
        }
    }
    remaining(s, d);
}

/// Applies the colouring rules for one component of size at least 2 of the
/// uncoloured subgraph; false if its structure is not as expected.
fn settle_component(g: &Graph, d: &mut PartialColouring, comp: &[usize]) -> bool {
    let kset = g.vertex_set(comp.iter().copied());
    let red: Vec<usize> = d.red().iter().filter(|&q| g.row(q).intersects(&kset)).collect();
    if red.is_empty() {
        return false;
    }
    // every red neighbour has its uncoloured neighbours inside the component
    let private = red.iter().all(|&q| g.neighbours(q).iter().all(|&v| d.get(v).is_some() || kset.contains(v)));
    if !private {
        return false;
    }
    let inside = |q: usize| -> Vec<usize> { g.neighbours(q).iter().copied().filter(|&v| kset.contains(v)).collect() };
    let has_blue = |v: usize| d.neighbours_coloured(g, v, Colour::Blue) > 0;
    let paint = |d: &mut PartialColouring, vs: &[usize], col: Colour| vs.iter().for_each(|&v| d.set(v, col));
    match red.iter().copied().find(|&q| inside(q).len() >= 2) {
        Some(q) => {
            let n = inside(q);
            let (x1, x2) = (n[0], n[1]);
            if comp.len() != 3 {
                return false;
            }
            let x3 = *comp.iter().find(|&&v| v != x1 && v != x2).expect("three vertices");
            if g.has_edge(x1, x2) || !g.has_edge(x1, x3) || !g.has_edge(x2, x3) || g.has_edge(q, x3) {
                return false;
            }
            let x3_free_of_red = d.neighbours_coloured(g, x3, Colour::Red) == 0;
            match (has_blue(x1), has_blue(x2), has_blue(x3)) {
                (true, true, _) => paint(d, comp, Colour::Red),
                // of the two colourings of value two, prefer the one that
                // keeps the blue neighbours free, when it is available
                (true, false, true) if x3_free_of_red => {
                    d.set(x2, Colour::Red);
                    paint(d, &[x1, x3], Colour::Blue);
                }
                (false, true, true) if x3_free_of_red => {
                    d.set(x1, Colour::Red);
                    paint(d, &[x2, x3], Colour::Blue);
                }
                (true, false, true) | (false, true, true) => paint(d, comp, Colour::Red),
                (true, false, false) => d.set(x2, Colour::Red),
                (false, true, false) | (false, false, true) => d.set(x1, Colour::Red),
                (false, false, false) => return false,
            }
        }
        None => {
            if red.len() == 1 {
                paint(d, comp, Colour::Blue);
                return true;
            }
            let (x1, x2) = (inside(red[0])[0], inside(red[1])[0]);
            if comp.len() != 2 || x1 == x2 {
                return false;
            }
            if has_blue(x1) && has_blue(x2) {
                paint(d, comp, Colour::Blue);
            }
        }
    }
    true
}

/// Components of size one (with both colours next to them) and size two
/// remain. Parts that share no coloured neighbour are independent, so each
/// is finished on its own: try each size-two component red, or all of them
/// blue and match the rest.
fn remaining(s: &mut Search<'_>, mut c: PartialColouring) {
    let g = s.g;
    if !s.propagate(&mut c) {
        return;
    }
    let zset = c.uncoloured_set();
    if zset.is_empty() {
        s.offer(&c);
        return;
    }
    if g.components_within(&zset).iter().any(|k| k.len() > 2) {
        s.violation();
        s.fallback(c);
        return;
    }
    let mut cur = c.clone();
    for part in independent_parts(g, &c) {
        let pset = g.vertex_set(part.iter().copied());
        let pairs: Vec<Vec<usize>> = g.components_within(&pset).into_iter().filter(|k| k.len() == 2).collect();
        let mut options: Vec<PartialColouring> = Vec::new();
        let mut base = cur.clone();
        let mut alive = true;
        for t in &pairs {
            if base.get(t[0]).is_some() || base.get(t[1]).is_some() {
                continue;
            }
            s.stats.branches += 1;
            let mut red = base.clone();
            paint_all(&mut red, t, Colour::Red);
            if s.propagate(&mut red) {
                if !confined(&cur, &red, &pset) || part.iter().any(|&v| red.get(v).is_none()) {
                    s.violation();
                    s.fallback(c);
                    return;
                }
                options.push(red);
            }
            let before = base.uncoloured_count();
            paint_all(&mut base, t, Colour::Blue);
            if !progressed(s, before, &base, NAME, "while peeling") {
                return;
            }
            if !s.propagate(&mut base) {
                alive = false;
                break;
            }
            if !confined(&cur, &base, &pset) {
                s.violation();
                s.fallback(c);
                return;
            }
        }
        if alive {
            let free: Vec<usize> = part.iter().copied().filter(|&v| base.get(v).is_none()).collect();
            let two_sided = free.iter().all(|&z| {
                g.neighbours(z).iter().all(|&w| base.get(w).is_some())
                    && base.neighbours_coloured(g, z, Colour::Red) > 0
                    && base.neighbours_coloured(g, z, Colour::Blue) > 0
            });
            if !two_sided {
                s.violation();
                s.fallback(c);
                return;
            }
            if let Some(m) = perfect_matching(g, &base, &free) {
                options.push(colouring_from_matching(&base, &m));
            }
        }
        let best = options
            .into_iter()
            .filter_map(|o| local_cost(g, &o, &pset).map(|cost| (cost, o)))
            .min_by_key(|(cost, _)| *cost);
        match best {
            Some((_, o)) => cur = o,
            None => return,
        }
    }
    if cur.is_valid(g) {
        s.offer(&cur);
    } else {
        s.violation();
        s.fallback(c);
    }
}

fn paint_all(c: &mut PartialColouring, vs: &[usize], col: Colour) {
    for &v in vs {
        c.set(v, col);
    }
}

/// Uncoloured vertices grouped by the graph whose edges are those with an
/// uncoloured end.
fn independent_parts(g: &Graph, c: &PartialColouring) -> Vec<Vec<usize>> {
    let mut seen = VertexSet::new(g.n());
    let mut out = Vec::new();
    for z in 0..g.n() {
        if c.get(z).is_some() || seen.contains(z) {
            continue;
        }
        seen.insert(z);
        let mut stack = vec![z];
        let mut part = Vec::new();
        while let Some(u) = stack.pop() {
            if c.get(u).is_none() {
                part.push(u);
            }
            for &w in g.neighbours(u) {
                let edge_counts = c.get(u).is_none() || c.get(w).is_none();
                if edge_counts && !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        part.sort_unstable();
        out.push(part);
    }
    out
}

/// True if `after` differs from `before` only on `part`.
fn confined(before: &PartialColouring, after: &PartialColouring, part: &VertexSet) -> bool {
    (0..before.len()).all(|v| part.contains(v) || before.get(v) == after.get(v))
}

/// Number of bichromatic edges touching `part`, if every vertex in or next
/// to `part` keeps at most one opposite neighbour.
fn local_cost(g: &Graph, c: &PartialColouring, part: &VertexSet) -> Option<usize> {
    let near = g.closed_neighbourhood(part);
    for v in near.iter() {
        let col = c.get(v)?;
        if c.neighbours_coloured(g, v, col.opposite()) > 1 {
            return None;
        }
    }
    let mut cost = 0;
    for v in part.iter() {
        for &w in g.neighbours(v) {
            if c.get(v) != c.get(w) && (!part.contains(w) || v < w) {
                cost += 1;
            }
        }
    }
    Some(cost)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path, nonisomorphic_connected};
    use crate::pattern::is_free;
    use crate::solvers::solve_bruteforce;

    #[test]
    fn examples() {
        let r = solve_p6p4_free(&cycle(6)).unwrap();
        assert_eq!(r.value(), Some(2));
        // C6 has no induced P6
        assert!(r.solver.contains("fallback"));
        let p6 = solve_p6p4_free(&path(6)).unwrap();
        assert_eq!((p6.solver.as_str(), p6.value()), ("p6p4", Some(1)));
        let k3 = solve_p6p4_free(&complete(3)).unwrap();
        assert_eq!(k3.value(), None);
        assert!(k3.solver.contains("fallback"));
        assert!(matches!(solve_p6p4_free(&path(11)), Err(SolveError::Precondition { .. })));
    }

    #[test]
    fn second_visit_path_is_induced() {
        // 0-1-2-3-4-5-6-7: earlier entry at 2 with (1, 0), current w = 5 with (6, 7)
        let g = path(8);
        let prev = Visit { w: 2, s1: 1, s2: 0 };
        let (p, extra) = second_visit_path(&g, &[2, 3, 4, 5], prev, 6, 7).unwrap();
        assert_eq!(p, vec![0, 1, 2, 3, 4, 5, 6, 7]);
        assert!(extra.is_empty());
        assert!(is_induced_path(&g, &p));
        assert!(!is_induced_path(&cycle(5), &[0, 1, 2, 3, 4]));
    }

    #[test]
    fn agrees_with_bruteforce_small() {
        for n in 6..=7 {
            for g in nonisomorphic_connected(n) {
                if is_free(&g, &Pattern::Path(6)) {
                    continue;
                }
                let r = solve_p6p4_free(&g).unwrap();
                assert_eq!(r.value(), solve_bruteforce(&g).unwrap().value(), "{}", g.to_edge_list());
            }
        }
    }
}
