//! `S_{1,1,2}`-free graphs: fix one bichromatic edge, propagate, then the
//! uncoloured part is claw-free and a minimum cut in a contracted multigraph
//! gives the best completion.

use crate::colouring::{Colour, PartialColouring};
use crate::completion::flow::{min_st_cut, FlowNetwork};
use crate::completion::Search;
use crate::error::SolveError;
use crate::graph::Graph;
use crate::pattern::{find_induced, Pattern};
use crate::result::{SolverResult, Stats};

use super::{require_free, trivial_cases};

const NAME: &str = "s112";

pub fn solve_s112_free(g: &Graph) -> Result<SolverResult, SolveError> {
    if let Some(r) = trivial_cases(g, NAME)? {
        return Ok(r);
    }
    require_free(g, &Pattern::S112, NAME)?;
    if let Some(r) = pendant_cut(g, NAME) {
        return Ok(r);
    }
    let mut s = Search::new(g);
    for x in 0..g.n() {
        for &y in g.neighbours(x) {
            s.stats.branches += 1;
            let mut c = PartialColouring::uncoloured(g.n());
            c.set(x, Colour::Red);
            c.set(y, Colour::Blue);
            if s.propagate(&mut c) {
                branch(&mut s, c);
            }
        }
    }
    Ok(s.finish(NAME))
}

/// A vertex of degree one can be cut off by its single edge.
pub(crate) fn pendant_cut(g: &Graph, solver: &str) -> Option<SolverResult> {
    let v = (0..g.n()).find(|&v| g.degree(v) == 1)?;
    let mut c = PartialColouring::from_total(vec![Colour::Red; g.n()]);
    c.set(v, Colour::Blue);
    let mut best = crate::result::Best::new(g);
    best.offer(&c);
    Some(best.into_result(solver, Stats { branches: 1, ..Stats::default() }))
}

fn branch(s: &mut Search<'_>, mut c: PartialColouring) {
    let g = s.g;
    loop {
        let zs: Vec<usize> = (0..g.n()).filter(|&v| c.get(v).is_none()).collect();
        if zs.is_empty() {
            s.offer(&c);
            return;
        }
        let gz = g.induced(&zs);
        if find_induced(&gz, &Pattern::Claw).is_some() {
            s.violation();
            s.fallback(c);
            return;
        }
        if has_long_cycle_component(&gz) {
            s.violation();
            s.fallback(c);
            return;
        }
        let groups = triangle_groups(g, &c, &zs);
        // a group acts as one vertex: apply the forcing rule to it
        match force_group(g, &c, &groups) {
            Forcing::None => {}
            Forcing::Conflict => return,
            Forcing::Colour(group, col) => {
                for &v in &groups[group] {
                    c.set(v, col);
                }
                if !s.propagate(&mut c) {
                    return;
                }
                continue;
            }
        }
        min_cut_completion(s, c, &groups);
        return;
    }
}

fn has_long_cycle_component(gz: &Graph) -> bool {
    gz.components()
        .iter()
        .any(|k| k.len() >= 4 && k.iter().all(|&v| gz.degree(v) == 2))
}

/// Classes of uncoloured vertices joined by edges lying in triangles of the
/// uncoloured subgraph, closed under "two neighbours in a class joins the
/// class". Only classes with at least two vertices are returned.
fn triangle_groups(g: &Graph, c: &PartialColouring, zs: &[usize]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    let zset = c.uncoloured_set();
    for &u in zs {
        for &v in g.neighbours(u) {
            if v > u && zset.contains(v) {
                let mut common = g.row(u).clone();
                common.intersect_with(g.row(v));
                if common.intersects(&zset) {
                    let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                    parent[a] = b;
                }
            }
        }
    }
    loop {
        let mut changed = false;
        for &z in zs {
            let rz = find(&mut parent, z);
            let mut counts: Vec<(usize, usize)> = Vec::new();
            for &w in g.neighbours(z) {
                if zset.contains(w) {
                    let r = find(&mut parent, w);
                    if r == rz {
                        continue;
                    }
                    match counts.iter_mut().find(|(k, _)| *k == r) {
                        Some(e) => e.1 += 1,
                        None => counts.push((r, 1)),
                    }
                }
            }
            if let Some(&(r, _)) = counts.iter().find(|&&(_, k)| k >= 2) {
                parent[rz] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &z in zs {
        let r = find(&mut parent, z);
        by_root[r].push(z);
    }
    let mut out: Vec<Vec<usize>> = by_root.into_iter().filter(|k| k.len() >= 2).collect();
    out.sort();
    out
}

enum Forcing {
    None,
    Conflict,
    Colour(usize, Colour),
}

/// A monochromatic class with two edges into one colour, or an edge to a
/// vertex already holding a bichromatic edge, must take that colour.
fn force_group(g: &Graph, c: &PartialColouring, groups: &[Vec<usize>]) -> Forcing {
    for (i, k) in groups.iter().enumerate() {
        let mut forced = [false; 2];
        for (j, col) in [Colour::Red, Colour::Blue].into_iter().enumerate() {
            let mut edges = 0;
            for &v in k {
                for &w in g.neighbours(v) {
                    if c.get(w) == Some(col) {
                        edges += 1;
                        if c.neighbours_coloured(g, w, col.opposite()) > 0 {
                            forced[j] = true;
                        }
                    }
                }
            }
            forced[j] |= edges >= 2;
        }
        match forced {
            [true, true] => return Forcing::Conflict,
            [true, false] => return Forcing::Colour(i, Colour::Red),
            [false, true] => return Forcing::Colour(i, Colour::Blue),
            [false, false] => {}
        }
    }
    Forcing::None
}

fn min_cut_completion(s: &mut Search<'_>, c: PartialColouring, groups: &[Vec<usize>]) {
    let g = s.g;
    const RED: usize = 0;
    const BLUE: usize = 1;
    let mut node = vec![usize::MAX; g.n()];
    let mut next = 2;
    for k in groups {
        for &v in k {
            node[v] = next;
        }
        next += 1;
    }
    for v in 0..g.n() {
        node[v] = match c.get(v) {
            Some(Colour::Red) => RED,
            Some(Colour::Blue) => BLUE,
            None if node[v] == usize::MAX => {
                next += 1;
                next - 1
            }
            None => node[v],
        };
    }
    let mut f = FlowNetwork::new(next, RED, BLUE);
    for (u, v) in g.edges() {
        if node[u] != node[v] {
            f.add_edge(node[u], node[v], 1);
        }
    }
    let (_, source_side) = min_st_cut(&f);
    let d = PartialColouring::from_total((0..g.n()).map(|v| if source_side[node[v]] { Colour::Red } else { Colour::Blue }));
    if d.is_valid(g) {
        s.offer(&d);
    } else {
        s.violation();
        s.fallback(c);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path, nonisomorphic_connected};
    use crate::pattern::is_free;
    use crate::solvers::solve_bruteforce;

    #[test]
    fn examples() {
        let r = solve_s112_free(&path(5)).unwrap();
        assert_eq!(r.value(), Some(1));
        assert_eq!(solve_s112_free(&cycle(4)).unwrap().value(), Some(2));
        let mut k4e = complete(4).edges();
        k4e.retain(|&e| e != (0, 1));
        assert_eq!(solve_s112_free(&Graph::new(4, k4e).unwrap()).unwrap().value(), None);
        assert!(matches!(solve_s112_free(&path(2).with_pendant(1).with_pendant(1).with_pendant(3)), Err(SolveError::Precondition { .. })));
    }

    #[test]
    fn agrees_with_bruteforce_small() {
        for n in 2..=7 {
            for g in nonisomorphic_connected(n) {
                if !is_free(&g, &Pattern::S112) {
                    continue;
                }
                let r = solve_s112_free(&g).unwrap();
                assert_eq!(r.value(), solve_bruteforce(&g).unwrap().value(), "{}", g.to_edge_list());
            }
        }
    }
}
