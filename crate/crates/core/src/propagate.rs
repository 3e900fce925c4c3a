//! The propagation engine: safe deductions that extend a partial colouring
//! or prove that it has no valid extension.
//!
//! Rules are tried in a fixed order and the first applicable one fires, on
//! the lowest vertex it applies to:
//!
//! 1. a coloured vertex with two neighbours of the opposite colour → no;
//! 2. an uncoloured vertex forced both ways → no;
//! 3. an uncoloured vertex with two red neighbours, or a red neighbour that
//!    already has a blue neighbour, becomes red (symmetrically blue);
//! 4. an uncoloured vertex in a triangle with a coloured vertex takes its
//!    colour;
//! 5. a component of the uncoloured subgraph without red neighbours becomes
//!    blue, one without blue neighbours becomes red;
//! 6. a `K_{2,3}` subgraph containing both colours → no; one containing a
//!    single colour passes it on to its uncoloured vertices.

use crate::bitset::VertexSet;
use crate::colouring::{Colour, PartialColouring};
use crate::error::ColouringError;
use crate::graph::Graph;
use crate::result::Stats;

/// Which deduction fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// A coloured vertex already has two opposite-coloured neighbours.
    OverSaturated,
    /// An uncoloured vertex cannot take either colour.
    Conflict,
    /// An uncoloured vertex is forced by its coloured neighbours.
    Forced,
    /// Triangles are monochromatic.
    Triangle,
    /// An uncoloured component touches only one colour.
    OneSided,
    /// A `K_{2,3}` subgraph holds both colours.
    K23Conflict,
    /// A `K_{2,3}` subgraph passes its colour on.
    K23Copy,
}

impl Rule {
    pub fn is_conflict(self) -> bool {
        matches!(self, Rule::OverSaturated | Rule::Conflict | Rule::K23Conflict)
    }
}

/// One rule firing: the vertices it coloured (or the witnesses of a
/// conflict) and the colour assigned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Firing {
    pub rule: Rule,
    pub vertices: Vec<usize>,
    pub colour: Option<Colour>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PropagationOutcome {
    NoAnswer { trace: Vec<Firing> },
    Extended { colouring: PartialColouring, trace: Vec<Firing> },
}

impl PropagationOutcome {
    pub fn colouring(&self) -> Option<&PartialColouring> {
        match self {
            PropagationOutcome::NoAnswer { .. } => None,
            PropagationOutcome::Extended { colouring, .. } => Some(colouring),
        }
    }

    pub fn trace(&self) -> &[Firing] {
        match self {
            PropagationOutcome::NoAnswer { trace } | PropagationOutcome::Extended { trace, .. } => trace,
        }
    }
}

/// Propagates to a fixed point, returning a new colouring and the trace.
pub fn propagate(g: &Graph, c: &PartialColouring) -> Result<PropagationOutcome, ColouringError> {
    check_input(g, c)?;
    let mut work = c.clone();
    let mut trace = Vec::new();
    let ok = run(g, &mut work, Some(&mut trace));
    Ok(if ok {
        PropagationOutcome::Extended { colouring: work, trace }
    } else {
        PropagationOutcome::NoAnswer { trace }
    })
}

/// In-place propagation for solvers; returns false on a no-answer (the
/// colouring is then left partially extended and must be discarded).
pub fn propagate_in_place(g: &Graph, c: &mut PartialColouring, stats: &mut Stats) -> Result<bool, ColouringError> {
    check_input(g, c)?;
    stats.propagations += 1;
    let mut count = 0u64;
    let ok = run_counting(g, c, &mut count);
    stats.firings += count;
    Ok(ok)
}

fn check_input(g: &Graph, c: &PartialColouring) -> Result<(), ColouringError> {
    if c.len() != g.n() {
        return Err(ColouringError::LengthMismatch { found: c.len(), n: g.n() });
    }
    if !c.has_both() {
        return Err(ColouringError::MissingColour);
    }
    Ok(())
}

/// Applies a recorded trace to `c`, firing by firing.
pub fn replay(c: &PartialColouring, trace: &[Firing]) -> Option<PartialColouring> {
    let mut out = c.clone();
    for f in trace {
        if f.rule.is_conflict() {
            return None;
        }
        let colour = f.colour.expect("colouring firings carry a colour");
        for &v in &f.vertices {
            out.set(v, colour);
        }
    }
    Some(out)
}

fn run(g: &Graph, c: &mut PartialColouring, mut trace: Option<&mut Vec<Firing>>) -> bool {
    let mut engine = Engine::new(g, c);
    loop {
        match engine.step() {
            None => return true,
            Some(f) => {
                let conflict = f.rule.is_conflict();
                if let Some(t) = trace.as_deref_mut() {
                    t.push(f);
                }
                if conflict {
                    return false;
                }
            }
        }
    }
}

fn run_counting(g: &Graph, c: &mut PartialColouring, count: &mut u64) -> bool {
    let mut engine = Engine::new(g, c);
    loop {
        match engine.step() {
            None => return true,
            Some(f) => {
                *count += 1;
                if f.rule.is_conflict() {
                    return false;
                }
            }
        }
    }
}

struct Engine<'a> {
    g: &'a Graph,
    c: &'a mut PartialColouring,
    red: VertexSet,
    blue: VertexSet,
    free: VertexSet,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, c: &'a mut PartialColouring) -> Self {
        let red = c.red();
        let blue = c.blue();
        let free = c.uncoloured_set();
        Engine { g, c, red, blue, free }
    }

    fn paint(&mut self, v: usize, colour: Colour) {
        self.c.set(v, colour);
        self.free.remove(v);
        match colour {
            Colour::Red => self.red.insert(v),
            Colour::Blue => self.blue.insert(v),
        }
    }

    fn class(&self, colour: Colour) -> &VertexSet {
        match colour {
            Colour::Red => &self.red,
            Colour::Blue => &self.blue,
        }
    }

    /// Coloured vertices with a neighbour of the opposite colour.
    fn saturated(&self, colour: Colour) -> VertexSet {
        let other = self.class(colour.opposite());
        let mut out = VertexSet::new(self.g.n());
        for v in self.class(colour).iter() {
            if self.g.row(v).intersects(other) {
                out.insert(v);
            }
        }
        out
    }

    fn fire(&mut self, rule: Rule, vertices: Vec<usize>, colour: Option<Colour>) -> Option<Firing> {
        if let Some(col) = colour {
            for &v in &vertices {
                self.paint(v, col);
            }
        }
        Some(Firing { rule, vertices, colour })
    }

    fn step(&mut self) -> Option<Firing> {
        let g = self.g;
        // coloured vertex with two opposite neighbours
        for v in 0..g.n() {
            if let Some(col) = self.c.get(v) {
                if g.row(v).intersection_len(self.class(col.opposite())) >= 2 {
                    return self.fire(Rule::OverSaturated, vec![v], None);
                }
            }
        }
        let red_sat = self.saturated(Colour::Red);
        let blue_sat = self.saturated(Colour::Blue);
        let free: Vec<usize> = self.free.iter().collect();
        let mut forced: Option<(usize, Colour)> = None;
        for &v in &free {
            let row = g.row(v);
            let nr = row.intersection_len(&self.red);
            let nb = row.intersection_len(&self.blue);
            let nrs = row.intersection_len(&red_sat);
            let nbs = row.intersection_len(&blue_sat);
            let to_red = nr >= 2 || nrs >= 1;
            let to_blue = nb >= 2 || nbs >= 1;
            if to_red && to_blue {
                return self.fire(Rule::Conflict, vec![v], None);
            }
            if forced.is_none() {
                if to_red {
                    forced = Some((v, Colour::Red));
                } else if to_blue {
                    forced = Some((v, Colour::Blue));
                }
            }
        }
        if let Some((v, col)) = forced {
            return self.fire(Rule::Forced, vec![v], Some(col));
        }
        for &v in &free {
            for &u in g.neighbours(v) {
                if let Some(col) = self.c.get(u) {
                    if g.row(u).intersects(g.row(v)) {
                        return self.fire(Rule::Triangle, vec![v], Some(col));
                    }
                }
            }
        }
        for comp in g.components_within(&self.free) {
            let mut touches_red = false;
            let mut touches_blue = false;
            for &v in &comp {
                touches_red |= g.row(v).intersects(&self.red);
                touches_blue |= g.row(v).intersects(&self.blue);
            }
            if !touches_red {
                return self.fire(Rule::OneSided, comp, Some(Colour::Blue));
            }
            if !touches_blue {
                return self.fire(Rule::OneSided, comp, Some(Colour::Red));
            }
        }
        for group in g.k23_groups() {
            let has_red = group.intersects(&self.red);
            let has_blue = group.intersects(&self.blue);
            if has_red && has_blue {
                return self.fire(Rule::K23Conflict, group.iter().collect(), None);
            }
            if (has_red || has_blue) && group.intersects(&self.free) {
                let col = if has_red { Colour::Red } else { Colour::Blue };
                let mut todo = group.clone();
                todo.intersect_with(&self.free);
                return self.fire(Rule::K23Copy, todo.iter().collect(), Some(col));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_bipartite, path};
    use Colour::{Blue as B, Red as R};

    fn partial(cols: &[Option<Colour>]) -> PartialColouring {
        PartialColouring::from_colours(cols.to_vec())
    }

    #[test]
    fn triangle_with_both_colours_fails() {
        let out = propagate(&complete(3), &partial(&[Some(R), Some(B), None])).unwrap();
        assert!(matches!(out, PropagationOutcome::NoAnswer { .. }));
    }

    #[test]
    fn p4_red_blue_prefix() {
        let out = propagate(&path(4), &partial(&[Some(R), Some(B), None, None])).unwrap();
        let c = out.colouring().unwrap();
        assert_eq!(c, &PartialColouring::from_total([R, B, B, B]));
        assert_eq!(out.trace()[0], Firing { rule: Rule::Forced, vertices: vec![2], colour: Some(B) });
    }

    #[test]
    fn k23_copies_colour() {
        // K_{2,3} on 0..5 (sides {0,1} and {2,3,4}) plus a blue pendant at 5
        let base = complete_bipartite(2, 3);
        let g = base.with_pendant(4);
        let mut c = PartialColouring::uncoloured(6);
        c.set(0, R);
        c.set(5, B);
        let out = propagate(&g, &c).unwrap();
        let got = out.colouring().unwrap();
        for v in 0..5 {
            assert_eq!(got.get(v), Some(R));
        }
        assert!(out.trace().iter().any(|f| f.rule == Rule::K23Copy));
    }

    #[test]
    fn k23_with_both_colours_fails() {
        let g = complete_bipartite(2, 3);
        let mut c = PartialColouring::uncoloured(5);
        c.set(2, R);
        c.set(3, B);
        let out = propagate(&g, &c).unwrap();
        assert!(out.colouring().is_none());
    }

    #[test]
    fn requires_both_colours() {
        let c = partial(&[Some(R), None, None]);
        assert_eq!(propagate(&path(3), &c), Err(ColouringError::MissingColour));
    }

    #[test]
    fn trace_replays_and_extends_input() {
        let g = crate::generate::gnp(9, 0.4, 5);
        let mut c = PartialColouring::uncoloured(9);
        c.set(0, R);
        c.set(8, B);
        let out = propagate(&g, &c).unwrap();
        if let PropagationOutcome::Extended { colouring, trace } = &out {
            assert!(c.is_extended_by(colouring));
            assert_eq!(replay(&c, trace).as_ref(), Some(colouring));
            // a fixed point stays put
            let again = propagate(&g, colouring).unwrap();
            assert!(again.trace().is_empty());
        }
        assert_eq!(propagate(&g, &c).unwrap(), out);
    }
}
