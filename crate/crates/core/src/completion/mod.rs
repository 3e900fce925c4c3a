//! Procedures that finish a partial colouring optimally under structural
//! hypotheses, and the generic exact completion they fall back on.
//!
//! Every procedure enumerates a complete set of branches: a branch is only
//! discarded when it provably has no valid extension. Wherever a procedure
//! relies on a structural property of the input class to stay polynomial,
//! the property is checked on the current branch; if it fails, the branch
//! is counted in [`Stats::claim_violations`] and finished by the generic
//! branch-and-propagate search instead, so results stay exact on any input.

pub mod flow;
pub mod matching;
pub mod twosat;

use crate::bitset::VertexSet;
use crate::colouring::{Colour, PartialColouring};
use crate::error::{ColouringError, CompletionError};
use crate::graph::Graph;
use crate::pattern::{is_free, Pattern};
use crate::propagate::propagate_in_place;
use crate::result::{Best, SolverResult, Stats};

use matching::{max_bipartite_matching, BipartiteGraph};
use twosat::{Lit, TwoSat};

pub const DEFAULT_DOMSET_CAP: usize = 6;
pub const DEFAULT_DDMP_CAP: usize = 3;
pub const BRUTE_FORCE_CAP: usize = 25;

/// A branch continuation.
pub(crate) type Cont<'a, 'g> = &'a mut dyn FnMut(&mut Search<'g>, PartialColouring);

/// Search state shared by the recursive procedures: the running minimum and
/// the statistics.
pub(crate) struct Search<'g> {
    pub g: &'g Graph,
    pub best: Best<'g>,
    pub stats: Stats,
    /// Set when a loop that must shrink the uncoloured set failed to.
    pub stalled: Option<String>,
}

impl<'g> Search<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Search { g, best: Best::new(g), stats: Stats::default(), stalled: None }
    }

    pub fn finish(self, solver: impl Into<String>) -> SolverResult {
        self.best.into_result(solver, self.stats)
    }

    /// Propagates when both colours are present; false on a no-answer.
    pub fn propagate(&mut self, c: &mut PartialColouring) -> bool {
        if !c.has_both() {
            return c.oversaturated_vertex(self.g).is_none();
        }
        propagate_in_place(self.g, c, &mut self.stats).expect("both colours present and lengths match")
    }

    pub fn offer(&mut self, c: &PartialColouring) {
        self.best.offer(c);
    }

    pub fn violation(&mut self) {
        self.stats.claim_violations += 1;
    }

    /// Generic exact completion, counted as a fallback.
    pub fn fallback(&mut self, c: PartialColouring) {
        self.stats.fallbacks += 1;
        self.exhaustive(c);
    }

    /// Branch on one uncoloured vertex at a time, propagating in between.
    pub fn exhaustive(&mut self, mut c: PartialColouring) {
        self.stats.branches += 1;
        if !self.propagate(&mut c) {
            return;
        }
        let g = self.g;
        let pick = (0..g.n())
            .filter(|&v| c.get(v).is_none())
            .min_by_key(|&v| (g.neighbours(v).iter().all(|&w| c.get(w).is_none()), v));
        match pick {
            None => self.offer(&c),
            Some(v) => {
                for col in [Colour::Red, Colour::Blue] {
                    let mut d = c.clone();
                    d.set(v, col);
                    self.exhaustive(d);
                }
            }
        }
    }

    /// Enumerates, centre by centre, every way to colour the uncoloured
    /// neighbours of each coloured centre so that the centre keeps at most
    /// one neighbour of the other colour; calls `k` on each leaf.
    pub fn neighbourhoods(&mut self, c: PartialColouring, centres: &[usize], k: Cont<'_, 'g>) {
        let Some((&v, rest)) = centres.split_first() else {
            self.stats.branches += 1;
            k(self, c);
            return;
        };
        let Some(col) = c.get(v) else {
            self.neighbourhoods(c, rest, &mut *k);
            return;
        };
        let g = self.g;
        let opp = c.neighbours_coloured(g, v, col.opposite());
        if opp >= 2 {
            return;
        }
        let free: Vec<usize> = g.neighbours(v).iter().copied().filter(|&w| c.get(w).is_none()).collect();
        let mut same = c.clone();
        for &w in &free {
            same.set(w, col);
        }
        if opp == 0 {
            for &odd in &free {
                let mut d = same.clone();
                d.set(odd, col.opposite());
                self.neighbourhoods(d, rest, &mut *k);
            }
        }
        self.neighbourhoods(same, rest, &mut *k);
    }

    /// Independent uncoloured set: a perfect matching decides the rest.
    pub fn independent(&mut self, mut c: PartialColouring) {
        if !self.propagate(&mut c) {
            return;
        }
        let g = self.g;
        let free: Vec<usize> = (0..g.n()).filter(|&v| c.get(v).is_none()).collect();
        if free.is_empty() {
            self.offer(&c);
            return;
        }
        let two_sided = free.iter().all(|&z| {
            c.neighbours_coloured(g, z, Colour::Red) >= 1 && c.neighbours_coloured(g, z, Colour::Blue) >= 1
        });
        let independent = free.iter().all(|&z| g.neighbours(z).iter().all(|&w| c.get(w).is_some()));
        if !two_sided || !independent {
            self.violation();
            self.fallback(c);
            return;
        }
        match perfect_matching(g, &c, &free) {
            Some(pairs) => self.offer(&colouring_from_matching(&c, &pairs)),
            None => self.stats.branches += 1,
        }
    }

    /// Every uncoloured vertex has a red and a blue neighbour: components of
    /// the uncoloured subgraph are monochromatic, every uncoloured vertex
    /// adds exactly one bichromatic edge, and feasibility is a 2-SAT
    /// instance over component colours.
    pub fn two_sided(&mut self, mut c: PartialColouring) {
        if !self.propagate(&mut c) {
            return;
        }
        let g = self.g;
        let zset = c.uncoloured_set();
        if zset.is_empty() {
            self.offer(&c);
            return;
        }
        let ok = zset.iter().all(|z| {
            c.neighbours_coloured(g, z, Colour::Red) >= 1 && c.neighbours_coloured(g, z, Colour::Blue) >= 1
        });
        if !ok {
            self.violation();
            self.fallback(c);
            return;
        }
        if let Some(d) = two_sided_assignment(g, &c, &zset) {
            self.offer(&d);
        }
    }

    /// Finish a branch where the uncoloured set is dominated by `dom`.
    pub fn monodom(&mut self, mut c: PartialColouring, dom: Colour) {
        self.stats.branches += 1;
        if !self.propagate(&mut c) {
            return;
        }
        let g = self.g;
        let oth = dom.opposite();
        let zset = c.uncoloured_set();
        if zset.is_empty() {
            self.offer(&c);
            return;
        }
        if zset.iter().any(|z| c.neighbours_coloured(g, z, dom) == 0) {
            self.violation();
            self.fallback(c);
            return;
        }
        let Some(x) = zset.iter().find(|&z| c.neighbours_coloured(g, z, oth) == 0) else {
            self.two_sided(c);
            return;
        };
        let comp = component_of(g, &zset, x);
        let dist = g.bfs_within(x, &comp);
        let y = comp
            .iter()
            .filter(|&v| c.neighbours_coloured(g, v, oth) > 0)
            .min_by_key(|&v| (dist[v], v));
        let Some(y) = y else {
            // propagation colours one-sided components, so this cannot happen
            self.violation();
            self.fallback(c);
            return;
        };
        let b = *g.neighbours(y).iter().find(|&&w| c.get(w) == Some(oth)).expect("y has such a neighbour");
        let path = g.shortest_path_within(x, y, &comp).expect("same component");
        let mut centres: Vec<usize> = Vec::new();
        for &p in &path {
            let q = *g.neighbours(p).iter().find(|&&w| c.get(w) == Some(dom)).expect("dominated");
            if !centres.contains(&q) {
                centres.push(q);
            }
        }
        self.neighbourhoods(c, &centres, &mut |s, leaf| s.monodom_attach(leaf, dom, b, &comp));
    }

    /// After colouring around the path centres: every component with a
    /// vertex lacking an `oth` neighbour should touch `b`; branch over the
    /// colours of the components touching `b`.
    fn monodom_attach(&mut self, mut c: PartialColouring, dom: Colour, b: usize, first: &VertexSet) {
        if !self.propagate(&mut c) {
            return;
        }
        let g = self.g;
        let oth = dom.opposite();
        let zset = c.uncoloured_set();
        if zset.is_empty() {
            self.offer(&c);
            return;
        }
        let comps = g.components_within(&zset);
        let touches_b = |k: &[usize]| k.iter().any(|&v| g.has_edge(v, b));
        let claim = comps
            .iter()
            .filter(|k| k.iter().any(|&v| c.neighbours_coloured(g, v, oth) == 0))
            .all(|k| touches_b(k));
        if !claim {
            self.violation();
            // make progress on the first component before recursing
            let rest: Vec<usize> = first.iter().filter(|&v| c.get(v).is_none()).collect();
            if rest.is_empty() {
                self.monodom(c, dom);
            } else {
                for col in [dom, oth] {
                    let mut d = c.clone();
                    for &v in &rest {
                        d.set(v, col);
                    }
                    self.monodom(d, dom);
                }
            }
            return;
        }
        let attached: Vec<&Vec<usize>> = comps.iter().filter(|k| touches_b(k)).collect();
        if attached.is_empty() {
            self.monodom(c, dom);
            return;
        }
        // `b` has at most one neighbour of colour `dom`: at most one attached
        // component takes `dom`
        for pick in std::iter::once(None).chain((0..attached.len()).map(Some)) {
            let mut d = c.clone();
            for (i, k) in attached.iter().enumerate() {
                let col = if pick == Some(i) { dom } else { oth };
                for &v in k.iter() {
                    d.set(v, col);
                }
            }
            self.monodom(d, dom);
        }
    }

    /// Colour `dprime` red, branch around it, then finish each branch with
    /// the dominated-set procedure.
    pub fn ddmp(&mut self, dprime: &[usize]) {
        let mut c = PartialColouring::uncoloured(self.g.n());
        for &v in dprime {
            c.set(v, Colour::Red);
        }
        self.neighbourhoods(c, dprime, &mut |s, leaf| s.ddmp_leaf(leaf));
    }

    fn ddmp_leaf(&mut self, c: PartialColouring) {
        if c.has(Colour::Blue) {
            self.ddmp_finish(c);
            return;
        }
        // some vertex outside the coloured part must be blue
        for z in 0..self.g.n() {
            if c.get(z).is_none() {
                let mut d = c.clone();
                d.set(z, Colour::Blue);
                self.ddmp_finish(d);
            }
        }
    }

    fn ddmp_finish(&mut self, mut c: PartialColouring) {
        if !self.propagate(&mut c) {
            return;
        }
        let g = self.g;
        let zset = c.uncoloured_set();
        if zset.is_empty() {
            self.offer(&c);
            return;
        }
        let dominated_by = |col: Colour| zset.iter().all(|z| c.neighbours_coloured(g, z, col) > 0);
        if dominated_by(Colour::Red) {
            self.monodom(c, Colour::Red);
        } else if dominated_by(Colour::Blue) {
            self.monodom(c, Colour::Blue);
        } else {
            self.violation();
            self.fallback(c);
        }
    }

    /// Colour `d` in every way and each coloured vertex's neighbourhood in
    /// every admissible way; `d` dominating makes every leaf total.
    pub fn small_domset(&mut self, d: &[usize]) {
        let n = self.g.n();
        for mask in 0u64..(1 << d.len()) {
            let mut c = PartialColouring::uncoloured(n);
            for (i, &v) in d.iter().enumerate() {
                c.set(v, if mask >> i & 1 == 1 { Colour::Blue } else { Colour::Red });
            }
            self.neighbourhoods(c, d, &mut |s, leaf| {
                if leaf.is_total() {
                    s.offer(&leaf);
                } else {
                    s.violation();
                    s.fallback(leaf);
                }
            });
        }
    }
}

fn component_of(g: &Graph, zset: &VertexSet, x: usize) -> VertexSet {
    let dist = g.bfs_within(x, zset);
    VertexSet::from_iter_in(g.n(), (0..g.n()).filter(|&v| dist[v].is_some()))
}

/// Maximum matching between the uncoloured vertices `free` and their
/// neighbourhood; `Some` only if it saturates `free`. Pairs are `(z, w)`.
pub fn perfect_matching(g: &Graph, c: &PartialColouring, free: &[usize]) -> Option<Vec<(usize, usize)>> {
    let _ = c;
    let mut right: Vec<usize> = free.iter().flat_map(|&z| g.neighbours(z).iter().copied()).collect();
    right.sort_unstable();
    right.dedup();
    let mut b = BipartiteGraph::new(free.len(), right.len());
    for (i, &z) in free.iter().enumerate() {
        for &w in g.neighbours(z) {
            b.add_edge(i, right.binary_search(&w).expect("collected above"));
        }
    }
    let m = max_bipartite_matching(&b);
    (m.len() == free.len()).then(|| m.into_iter().map(|(i, j)| (free[i], right[j])).collect())
}

/// Colours each matched uncoloured vertex opposite to its partner.
pub fn colouring_from_matching(c: &PartialColouring, pairs: &[(usize, usize)]) -> PartialColouring {
    let mut d = c.clone();
    for &(z, w) in pairs {
        let col = c.get(w).expect("partners are coloured");
        d.set(z, col.opposite());
    }
    d
}

/// 2-SAT over component colours (true = red).
fn two_sided_assignment(g: &Graph, c: &PartialColouring, zset: &VertexSet) -> Option<PartialColouring> {
    let comps = g.components_within(zset);
    let mut comp_of = vec![usize::MAX; g.n()];
    for (i, k) in comps.iter().enumerate() {
        for &v in k {
            comp_of[v] = i;
        }
    }
    let mut sat = TwoSat::new(comps.len());
    for w in 0..g.n() {
        let Some(col) = c.get(w) else { continue };
        let keep = Lit::is_colour(col);
        let opp = c.neighbours_coloured(g, w, col.opposite());
        if opp >= 2 {
            return None;
        }
        let mut touching: Vec<(usize, usize)> = Vec::new();
        for &u in g.neighbours(w) {
            if comp_of[u] != usize::MAX {
                match touching.iter_mut().find(|(k, _)| *k == comp_of[u]) {
                    Some(e) => e.1 += 1,
                    None => touching.push((comp_of[u], 1)),
                }
            }
        }
        for (i, &(k, count)) in touching.iter().enumerate() {
            if opp == 1 || count >= 2 {
                sat.force(keep(k));
            }
            for &(k2, _) in &touching[i + 1..] {
                sat.either(keep(k), keep(k2));
            }
        }
    }
    let asg = sat.solve()?;
    let mut d = c.clone();
    for (i, k) in comps.iter().enumerate() {
        let col = if asg[i] { Colour::Red } else { Colour::Blue };
        for &v in k {
            d.set(v, col);
        }
    }
    Some(d)
}

impl Lit {
    /// Literal constructor for "component takes colour `col`".
    fn is_colour(col: Colour) -> fn(usize) -> Lit {
        match col {
            Colour::Red => Lit::pos,
            Colour::Blue => Lit::neg,
        }
    }
}

/// Exhaustive oracle: tries every colouring of the uncoloured vertices.
pub fn min_value_extension_bruteforce(g: &Graph, c: &PartialColouring) -> Result<SolverResult, CompletionError> {
    if c.len() != g.n() {
        return Err(ColouringError::LengthMismatch { found: c.len(), n: g.n() }.into());
    }
    let free: Vec<usize> = (0..g.n()).filter(|&v| c.get(v).is_none()).collect();
    if free.len() > BRUTE_FORCE_CAP {
        return Err(ColouringError::TooManyUncoloured { count: free.len(), cap: BRUTE_FORCE_CAP }.into());
    }
    let mut best = Best::new(g);
    let mut stats = Stats::default();
    let mut d = c.clone();
    for mask in 0u64..(1 << free.len()) {
        for (i, &v) in free.iter().enumerate() {
            d.set(v, if mask >> i & 1 == 1 { Colour::Blue } else { Colour::Red });
        }
        stats.branches += 1;
        best.offer(&d);
    }
    Ok(best.into_result("extension-brute", stats))
}

fn check_len(g: &Graph, c: &PartialColouring) -> Result<(), CompletionError> {
    if c.len() != g.n() {
        return Err(ColouringError::LengthMismatch { found: c.len(), n: g.n() }.into());
    }
    Ok(())
}

/// Minimum valid extension when the uncoloured vertices form an
/// independent set.
pub fn complete_independent(g: &Graph, c: &PartialColouring) -> Result<SolverResult, CompletionError> {
    check_len(g, c)?;
    if !c.has_both() {
        return Err(ColouringError::MissingColour.into());
    }
    for (u, v) in g.edges() {
        if c.get(u).is_none() && c.get(v).is_none() {
            return Err(CompletionError::NotIndependent(u, v));
        }
    }
    let mut s = Search::new(g);
    s.independent(c.clone());
    Ok(s.finish("independent"))
}

/// Minimum valid colouring of `g` found by colouring the dominating set `d`
/// and the neighbourhood of each of its vertices in every admissible way.
pub fn complete_small_domset(g: &Graph, d: &[usize], cap: usize) -> Result<SolverResult, CompletionError> {
    if d.len() > cap {
        return Err(CompletionError::CapExceeded { size: d.len(), cap });
    }
    check_dominates(g, d, &VertexSet::full(g.n()))?;
    let mut s = Search::new(g);
    s.small_domset(d);
    Ok(s.finish("domset"))
}

fn check_dominates(g: &Graph, d: &[usize], target: &VertexSet) -> Result<(), CompletionError> {
    if let Some(&v) = d.iter().find(|&&v| v >= g.n()) {
        return Err(CompletionError::Precondition(format!("vertex {v} out of range")));
    }
    let closed = g.closed_neighbourhood(&g.vertex_set(d.iter().copied()));
    match target.iter().find(|&v| !closed.contains(v)) {
        Some(v) => Err(CompletionError::NotDominating(v)),
        None => Ok(()),
    }
}

/// Minimum valid extension of `c` when one colour class dominates the
/// uncoloured vertices, in a `P_7`-free graph whose colour classes each
/// induce a connected subgraph.
pub fn complete_monodominated(g: &Graph, c: &PartialColouring) -> Result<SolverResult, CompletionError> {
    check_len(g, c)?;
    if !c.has_both() {
        return Err(ColouringError::MissingColour.into());
    }
    if !is_free(g, &Pattern::Path(7)) {
        return Err(CompletionError::Precondition("graph is not P7-free".into()));
    }
    for col in [Colour::Red, Colour::Blue] {
        if !g.induces_connected(&c.class(col)) {
            return Err(CompletionError::Precondition(format!("{col:?} vertices do not induce a connected subgraph")));
        }
    }
    let zset = c.uncoloured_set();
    let dominated = |col: Colour| zset.iter().all(|z| c.neighbours_coloured(g, z, col) > 0);
    let dom = if dominated(Colour::Red) {
        Colour::Red
    } else if dominated(Colour::Blue) {
        Colour::Blue
    } else {
        return Err(CompletionError::Precondition("neither colour class dominates the uncoloured vertices".into()));
    };
    let mut s = Search::new(g);
    s.monodom(c.clone(), dom);
    Ok(s.finish("monodom"))
}

/// Minimum valid colouring of a connected `P_7`-free graph in which
/// `dprime` is monochromatic, where `d` dominates `g` and `dprime`
/// dominates `G[d]`.
pub fn complete_ddmp(g: &Graph, d: &[usize], dprime: &[usize], cap: usize) -> Result<SolverResult, CompletionError> {
    if dprime.len() > cap {
        return Err(CompletionError::CapExceeded { size: dprime.len(), cap });
    }
    if g.n() == 0 || !g.is_connected() {
        return Err(CompletionError::Precondition("graph is not connected".into()));
    }
    if !is_free(g, &Pattern::Path(7)) {
        return Err(CompletionError::Precondition("graph is not P7-free".into()));
    }
    check_dominates(g, d, &VertexSet::full(g.n()))?;
    if let Some(v) = dprime.iter().find(|v| !d.contains(v)) {
        return Err(CompletionError::Precondition(format!("vertex {v} of the inner set is not in the dominating set")));
    }
    check_dominates(g, dprime, &g.vertex_set(d.iter().copied()))?;
    let mut s = Search::new(g);
    s.ddmp(dprime);
    Ok(s.finish("ddmp"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, gnp, path, star};
    use Colour::{Blue as B, Red as R};

    fn part(cols: &[Option<Colour>]) -> PartialColouring {
        PartialColouring::from_colours(cols.to_vec())
    }

    fn brute(g: &Graph, c: &PartialColouring) -> Option<usize> {
        min_value_extension_bruteforce(g, c).unwrap().value()
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(brute(&path(2), &PartialColouring::uncoloured(2)), Some(1));
        assert_eq!(brute(&complete(3), &PartialColouring::uncoloured(3)), None);
        assert_eq!(brute(&cycle(5), &PartialColouring::uncoloured(5)), Some(2));
    }

    #[test]
    fn independent_examples() {
        let r = complete_independent(&path(3), &part(&[Some(R), None, Some(B)])).unwrap();
        assert_eq!(r.value(), Some(1));
        let r = complete_independent(&cycle(4), &part(&[Some(R), None, Some(B), None])).unwrap();
        assert_eq!(r.value(), Some(2));
        // three uncoloured vertices each adjacent to one red r and one blue b
        let g = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let r = complete_independent(&g, &part(&[Some(R), Some(B), None, None, None])).unwrap();
        assert_eq!(r.value(), None);
        assert!(matches!(
            complete_independent(&path(4), &part(&[Some(R), None, None, Some(B)])),
            Err(CompletionError::NotIndependent(1, 2))
        ));
    }

    #[test]
    fn domset_examples() {
        assert_eq!(complete_small_domset(&star(4), &[0], 6).unwrap().value(), Some(1));
        assert_eq!(complete_small_domset(&complete(4), &[2], 6).unwrap().value(), None);
        assert_eq!(complete_small_domset(&cycle(6), &[0, 2, 4], 6).unwrap().value(), Some(2));
        assert_eq!(complete_small_domset(&cycle(6), &[0], 6), Err(CompletionError::NotDominating(2)));
        assert!(matches!(complete_small_domset(&cycle(6), &[0, 1, 2], 2), Err(CompletionError::CapExceeded { .. })));
    }

    #[test]
    fn monodom_examples() {
        let c4 = cycle(4);
        let r = complete_monodominated(&c4, &part(&[Some(R), None, Some(B), None])).unwrap();
        assert_eq!(r.value(), Some(2));
        let r = complete_monodominated(&path(3), &part(&[Some(R), None, Some(B)])).unwrap();
        assert_eq!(r.value(), Some(1));
        let r = complete_monodominated(&complete(3), &part(&[Some(R), None, Some(B)])).unwrap();
        assert_eq!(r.value(), None);
        assert!(complete_monodominated(&path(7), &part(&[Some(R), None, None, None, None, None, Some(B)])).is_err());
    }

    #[test]
    fn ddmp_examples() {
        assert_eq!(complete_ddmp(&star(4), &[0], &[0], 3).unwrap().value(), Some(1));
        assert_eq!(complete_ddmp(&complete(4), &[1], &[1], 3).unwrap().value(), None);
        // C6 with d = {0,1,2,3}: connected dominating, inner set {1,2}
        assert_eq!(complete_ddmp(&cycle(6), &[0, 1, 2, 3], &[1, 2], 3).unwrap().value(), Some(2));
        // {0,2,4} is independent, so the inner set must be all of it; forcing
        // it monochromatic forces the whole cycle monochromatic
        assert_eq!(complete_ddmp(&cycle(6), &[0, 2, 4], &[0, 2, 4], 3).unwrap().value(), None);
    }

    #[test]
    fn two_sided_matches_bruteforce() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        let mut checked = 0;
        for seed in 0..400 {
            let g = gnp(8, 0.45, seed);
            let mut c = PartialColouring::uncoloured(8);
            for v in 0..8 {
                match rng.gen_range(0..3) {
                    0 => c.set(v, R),
                    1 => c.set(v, B),
                    _ => {}
                }
            }
            if !c.has_both() {
                continue;
            }
            let mut s = Search::new(&g);
            if !s.propagate(&mut c) {
                continue;
            }
            let z = c.uncoloured_set();
            if z.iter().any(|v| c.neighbours_coloured(&g, v, R) == 0 || c.neighbours_coloured(&g, v, B) == 0) {
                continue;
            }
            s.two_sided(c.clone());
            assert_eq!(s.stats.claim_violations, 0);
            assert_eq!(s.best.value(), brute(&g, &c), "{g:?} {c:?}");
            checked += 1;
        }
        assert!(checked > 20, "only {checked} instances");
    }

    #[test]
    fn exhaustive_matches_bruteforce() {
        for seed in 0..200 {
            let g = gnp(8, 0.4, seed);
            let mut c = PartialColouring::uncoloured(8);
            c.set((seed % 8) as usize, R);
            let mut s = Search::new(&g);
            s.exhaustive(c.clone());
            assert_eq!(s.best.value(), brute(&g, &c));
        }
    }
}
