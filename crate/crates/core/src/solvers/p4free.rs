//! Colourings of connected `P_4`-free graphs.
//!
//! A connected cograph on `n ≥ 2` vertices has a disconnected complement;
//! taking its smallest co-component as one side gives a spanning complete
//! bipartite subgraph `K_{k,l}` with `k ≤ l`. Both sides at least 2 and one
//! at least 3 forces a single colour; otherwise the graph has a spanning
//! star or a spanning `C_4` and the candidates are few.

use crate::bitset::VertexSet;
use crate::colouring::{Colour, PartialColouring};
use crate::error::SolveError;
use crate::graph::Graph;
use crate::pattern::Pattern;

use super::require_free;

const NAME: &str = "p4free";

/// Every colouring of `g` in which each vertex has at most one neighbour of
/// the other colour, the two single-colour ones included; at most `2n` for
/// connected `P_4`-free graphs. Sorted, with red-first encodings first.
pub fn enumerate_p4free_colourings(g: &Graph) -> Result<Vec<PartialColouring>, SolveError> {
    if g.n() == 0 {
        return Err(SolveError::Empty);
    }
    if !g.is_connected() {
        return Err(SolveError::Precondition { solver: NAME, reason: "graph is disconnected".into() });
    }
    require_free(g, &Pattern::Path(4), NAME)?;
    let n = g.n();
    let mono = |col: Colour| PartialColouring::from_total(vec![col; n]);
    let mut out = vec![mono(Colour::Red), mono(Colour::Blue)];
    let side = co_components(g).into_iter().min_by_key(|c| (c.len(), c[0])).expect("nonempty");
    let other = n - side.len();
    let mut candidates: Vec<PartialColouring> = Vec::new();
    if side.len() == 1 {
        let centre = side[0];
        for col in [Colour::Red, Colour::Blue] {
            for odd in (0..n).filter(|&v| v != centre) {
                let mut c = mono(col);
                c.set(odd, col.opposite());
                candidates.push(c);
            }
        }
    } else if side.len() == 2 && other == 2 {
        for mask in 0u32..16 {
            candidates.push(PartialColouring::from_total(
                (0..4).map(|v| if mask >> v & 1 == 1 { Colour::Blue } else { Colour::Red }),
            ));
        }
    }
    for c in candidates {
        if c.oversaturated_vertex(g).is_none() && !out.contains(&c) {
            out.push(c);
        }
    }
    out.sort_by_key(|c| c.to_text());
    Ok(out)
}

/// The red-blue colourings proper: both colours used.
pub fn enumerate_p4free_red_blue(g: &Graph) -> Result<Vec<PartialColouring>, SolveError> {
    Ok(enumerate_p4free_colourings(g)?.into_iter().filter(PartialColouring::has_both).collect())
}

/// Components of the complement graph.
fn co_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut left = VertexSet::full(n);
    let mut out = Vec::new();
    while let Some(s) = left.first() {
        left.remove(s);
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            let mut next = left.clone();
            next.difference_with(g.row(u));
            for w in next.iter() {
                left.remove(w);
                comp.push(w);
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, connected_cograph, cycle, path, star};

    fn all_locally_valid(g: &Graph) -> Vec<PartialColouring> {
        let n = g.n();
        let mut out: Vec<PartialColouring> = (0u32..1 << n)
            .map(|mask| PartialColouring::from_total((0..n).map(|v| if mask >> v & 1 == 1 { Colour::Blue } else { Colour::Red })))
            .filter(|c| (0..n).all(|v| c.neighbours_coloured(g, v, c.get(v).unwrap().opposite()) <= 1))
            .collect();
        out.sort_by_key(|c| c.to_text());
        out
    }

    #[test]
    fn examples() {
        assert_eq!(enumerate_p4free_colourings(&cycle(4)).unwrap().len(), 6);
        assert_eq!(enumerate_p4free_colourings(&star(3)).unwrap().len(), 8);
        assert_eq!(enumerate_p4free_colourings(&complete(4)).unwrap().len(), 2);
        assert!(enumerate_p4free_red_blue(&complete(4)).unwrap().is_empty());
        assert_eq!(enumerate_p4free_red_blue(&cycle(4)).unwrap().len(), 4);
        assert!(enumerate_p4free_colourings(&path(4)).is_err());
        assert!(enumerate_p4free_colourings(&Graph::empty(2)).is_err());
    }

    #[test]
    fn matches_filtered_enumeration_on_cographs() {
        for n in 1..=9 {
            for seed in 0..25 {
                let g = connected_cograph(n, seed);
                let got = enumerate_p4free_colourings(&g).unwrap();
                assert_eq!(got, all_locally_valid(&g), "n={n} seed={seed}");
                assert!(got.len() <= 2 * n.max(1));
            }
        }
    }
}
