//! Partial red-blue colourings, their value, and the correspondence with
//! matching cuts.

use std::fmt;

use crate::bitset::VertexSet;
use crate::error::ColouringError;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn opposite(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Colour::Red => 'R',
            Colour::Blue => 'B',
        }
    }
}

/// Per-vertex state: `Some(colour)` or uncoloured.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialColouring {
    cols: Vec<Option<Colour>>,
}

impl fmt::Debug for PartialColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.cols.iter().map(|c| c.map_or('.', Colour::letter)).collect();
        write!(f, "[{s}]")
    }
}

impl PartialColouring {
    pub fn uncoloured(n: usize) -> Self {
        PartialColouring { cols: vec![None; n] }
    }

    pub fn from_colours(cols: Vec<Option<Colour>>) -> Self {
        PartialColouring { cols }
    }

    pub fn from_total(cols: impl IntoIterator<Item = Colour>) -> Self {
        PartialColouring { cols: cols.into_iter().map(Some).collect() }
    }

    /// Total colouring with `red` vertices red and everything else blue.
    pub fn from_red_set(n: usize, red: &VertexSet) -> Self {
        PartialColouring { cols: (0..n).map(|v| Some(if red.contains(v) { Colour::Red } else { Colour::Blue })).collect() }
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    #[inline]
    pub fn get(&self, v: usize) -> Option<Colour> {
        self.cols[v]
    }

    #[inline]
    pub fn set(&mut self, v: usize, c: Colour) {
        self.cols[v] = Some(c);
    }

    pub fn clear(&mut self, v: usize) {
        self.cols[v] = None;
    }

    pub fn as_slice(&self) -> &[Option<Colour>] {
        &self.cols
    }

    pub fn is_total(&self) -> bool {
        self.cols.iter().all(Option::is_some)
    }

    pub fn class(&self, c: Colour) -> VertexSet {
        VertexSet::from_iter_in(self.cols.len(), (0..self.cols.len()).filter(|&v| self.cols[v] == Some(c)))
    }

    pub fn red(&self) -> VertexSet {
        self.class(Colour::Red)
    }

    pub fn blue(&self) -> VertexSet {
        self.class(Colour::Blue)
    }

    pub fn uncoloured_set(&self) -> VertexSet {
        VertexSet::from_iter_in(self.cols.len(), (0..self.cols.len()).filter(|&v| self.cols[v].is_none()))
    }

    pub fn uncoloured_count(&self) -> usize {
        self.cols.iter().filter(|c| c.is_none()).count()
    }

    pub fn has(&self, c: Colour) -> bool {
        self.cols.contains(&Some(c))
    }

    pub fn has_both(&self) -> bool {
        self.has(Colour::Red) && self.has(Colour::Blue)
    }

    /// Exchanges red and blue everywhere.
    pub fn swapped(&self) -> Self {
        PartialColouring { cols: self.cols.iter().map(|c| c.map(Colour::opposite)).collect() }
    }

    /// Whether `other` agrees with `self` on every vertex `self` colours.
    pub fn is_extended_by(&self, other: &PartialColouring) -> bool {
        self.cols.len() == other.cols.len() && self.cols.iter().zip(&other.cols).all(|(a, b)| a.is_none() || a == b)
    }

    /// Number of neighbours of `v` coloured `c`.
    pub fn neighbours_coloured(&self, g: &Graph, v: usize, c: Colour) -> usize {
        g.neighbours(v).iter().filter(|&&w| self.cols[w] == Some(c)).count()
    }

    /// First coloured vertex with two or more neighbours of the opposite colour.
    pub fn oversaturated_vertex(&self, g: &Graph) -> Option<(usize, usize)> {
        (0..self.cols.len()).find_map(|v| {
            let c = self.cols[v]?;
            let k = self.neighbours_coloured(g, v, c.opposite());
            (k >= 2).then_some((v, k))
        })
    }

    /// Number of bichromatic edges among coloured vertices.
    pub fn value(&self, g: &Graph) -> usize {
        g.edges()
            .into_iter()
            .filter(|&(u, v)| matches!((self.cols[u], self.cols[v]), (Some(a), Some(b)) if a != b))
            .count()
    }

    /// Checks that the colouring is total, valid and uses both colours;
    /// returns its value.
    pub fn validate(&self, g: &Graph) -> Result<usize, ColouringError> {
        if self.cols.len() != g.n() {
            return Err(ColouringError::LengthMismatch { found: self.cols.len(), n: g.n() });
        }
        if let Some(v) = self.cols.iter().position(Option::is_none) {
            return Err(ColouringError::NotTotal(v));
        }
        if !self.has_both() {
            return Err(ColouringError::Monochromatic);
        }
        if let Some((vertex, count)) = self.oversaturated_vertex(g) {
            return Err(ColouringError::Invalid { vertex, count });
        }
        Ok(self.value(g))
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }

    /// One line per vertex: `index R|B|U`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (v, c) in self.cols.iter().enumerate() {
            s.push_str(&format!("{v} {}\n", c.map_or('U', Colour::letter)));
        }
        s
    }
}

/// A matching cut with the vertex bipartition it separates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingCut {
    /// Cut edges as `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl MatchingCut {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Checks every invariant against `g`: sides partition `V`, both sides
    /// nonempty, the edges are graph edges, pairwise disjoint, and exactly
    /// the edges crossing the sides.
    pub fn check(&self, g: &Graph) -> Result<(), ColouringError> {
        let n = g.n();
        let mut side = vec![None; n];
        for (s, list) in [(false, &self.side_a), (true, &self.side_b)] {
            for &v in list {
                if v >= n {
                    return Err(ColouringError::NotAPartition(format!("vertex {v} out of range")));
                }
                if side[v].is_some() {
                    return Err(ColouringError::NotAPartition(format!("vertex {v} listed twice")));
                }
                side[v] = Some(s);
            }
        }
        if let Some(v) = side.iter().position(Option::is_none) {
            return Err(ColouringError::NotAPartition(format!("vertex {v} is on neither side")));
        }
        if self.side_a.is_empty() || self.side_b.is_empty() {
            return Err(ColouringError::NotAPartition("a side is empty".into()));
        }
        let mut used = vec![false; n];
        let mut listed = std::collections::BTreeSet::new();
        for &(u, v) in &self.edges {
            if u >= n || v >= n || !g.has_edge(u, v) {
                return Err(ColouringError::NoSuchEdge(u, v));
            }
            if !listed.insert((u.min(v), u.max(v))) {
                return Err(ColouringError::NotAMatching(u));
            }
            for x in [u, v] {
                if used[x] {
                    return Err(ColouringError::NotAMatching(x));
                }
                used[x] = true;
            }
            if side[u] == side[v] {
                return Err(ColouringError::NotCrossing(u.min(v), u.max(v)));
            }
        }
        for (u, v) in g.edges() {
            if side[u] != side[v] && !listed.contains(&(u, v)) {
                return Err(ColouringError::NotACut(u, v));
            }
        }
        Ok(())
    }
}

/// Bichromatic edges of a valid total colouring, with red as side A.
pub fn colouring_to_cut(g: &Graph, c: &PartialColouring) -> Result<MatchingCut, ColouringError> {
    c.validate(g)?;
    let edges = g.edges().into_iter().filter(|&(u, v)| c.get(u) != c.get(v)).collect();
    let side_a = (0..g.n()).filter(|&v| c.get(v) == Some(Colour::Red)).collect();
    let side_b = (0..g.n()).filter(|&v| c.get(v) == Some(Colour::Blue)).collect();
    Ok(MatchingCut { edges, side_a, side_b })
}

/// Colours side A red and side B blue after checking the cut.
pub fn cut_to_colouring(g: &Graph, m: &MatchingCut) -> Result<PartialColouring, ColouringError> {
    m.check(g)?;
    let mut c = PartialColouring::uncoloured(g.n());
    for &v in &m.side_a {
        c.set(v, Colour::Red);
    }
    for &v in &m.side_b {
        c.set(v, Colour::Blue);
    }
    c.validate(g)?;
    Ok(c)
}

/// A solve certificate: the colouring (which fixes the two sides), the cut
/// edges and optionally the claimed value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub colouring: PartialColouring,
    pub cut: Vec<(usize, usize)>,
    pub value: Option<usize>,
}

impl Certificate {
    pub fn from_colouring(g: &Graph, c: &PartialColouring) -> Result<Self, ColouringError> {
        let cut = colouring_to_cut(g, c)?;
        Ok(Certificate { colouring: c.clone(), value: Some(cut.size()), cut: cut.edges })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("# colouring\n");
        s.push_str(&self.colouring.to_text());
        s.push_str("# cut\n");
        for (u, v) in &self.cut {
            s.push_str(&format!("{u} {v}\n"));
        }
        if let Some(v) = self.value {
            s.push_str(&format!("value {v}\n"));
        }
        s
    }

    /// Parses the certificate text; vertex lines may appear in any order but
    /// must cover `0..n` exactly once.
    pub fn parse(text: &str) -> Result<Self, ColouringError> {
        let mut cols: Vec<(usize, Option<Colour>)> = Vec::new();
        let mut cut = Vec::new();
        let mut value = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = i + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |reason: String| ColouringError::Parse { line: lineno, reason };
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(err(format!("expected two fields, found {}", toks.len())));
            }
            let num = |t: &str| t.parse::<usize>().map_err(|_| err(format!("`{t}` is not a nonnegative integer")));
            if toks[0] == "value" {
                value = Some(num(toks[1])?);
                continue;
            }
            let a = num(toks[0])?;
            match toks[1] {
                "R" => cols.push((a, Some(Colour::Red))),
                "B" => cols.push((a, Some(Colour::Blue))),
                "U" => cols.push((a, None)),
                t => cut.push((a, num(t)?)),
            }
        }
        let n = cols.len();
        let mut out = vec![None; n];
        let mut seen = vec![false; n];
        for (v, c) in cols {
            if v >= n || seen[v] {
                return Err(ColouringError::Parse { line: 0, reason: format!("vertex {v} repeated or out of range") });
            }
            seen[v] = true;
            out[v] = c;
        }
        for e in &mut cut {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        cut.sort_unstable();
        Ok(Certificate { colouring: PartialColouring::from_colours(out), cut, value })
    }

    /// The matching cut described by the certificate (sides from the colouring).
    pub fn matching_cut(&self) -> Result<MatchingCut, ColouringError> {
        let c = &self.colouring;
        if let Some(v) = (0..c.len()).find(|&v| c.get(v).is_none()) {
            return Err(ColouringError::NotTotal(v));
        }
        Ok(MatchingCut {
            edges: self.cut.clone(),
            side_a: (0..c.len()).filter(|&v| c.get(v) == Some(Colour::Red)).collect(),
            side_b: (0..c.len()).filter(|&v| c.get(v) == Some(Colour::Blue)).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path};

    use Colour::{Blue as B, Red as R};

    #[test]
    fn p2_cut() {
        let g = path(2);
        let c = PartialColouring::from_total([R, B]);
        let cut = colouring_to_cut(&g, &c).unwrap();
        assert_eq!(cut.edges, vec![(0, 1)]);
    }

    #[test]
    fn c4_pairs() {
        let g = cycle(4);
        let c = PartialColouring::from_total([R, R, B, B]);
        assert_eq!(colouring_to_cut(&g, &c).unwrap().size(), 2);
        let c = PartialColouring::from_total([R, B, R, B]);
        assert!(matches!(colouring_to_cut(&g, &c), Err(ColouringError::Invalid { .. })));
    }

    #[test]
    fn triangle_has_no_valid_bichromatic_colouring() {
        let g = complete(3);
        for mask in 0..8u32 {
            let c = PartialColouring::from_total((0..3).map(|i| if mask >> i & 1 == 1 { R } else { B }));
            assert!(colouring_to_cut(&g, &c).is_err());
        }
    }

    #[test]
    fn cut_to_colouring_examples() {
        let p3 = path(3);
        let m = MatchingCut { edges: vec![(0, 1)], side_a: vec![0], side_b: vec![1, 2] };
        let c = cut_to_colouring(&p3, &m).unwrap();
        assert_eq!(c, PartialColouring::from_total([R, B, B]));
        assert_eq!(c.value(&p3), 1);

        let c4 = cycle(4);
        let m = MatchingCut { edges: vec![(0, 1), (2, 3)], side_a: vec![0, 3], side_b: vec![1, 2] };
        assert_eq!(cut_to_colouring(&c4, &m).unwrap().value(&c4), 2);

        let m = MatchingCut { edges: vec![(0, 1), (1, 2)], side_a: vec![1], side_b: vec![0, 2] };
        assert_eq!(cut_to_colouring(&p3, &m), Err(ColouringError::NotAMatching(1)));
        let m = MatchingCut { edges: vec![(0, 1)], side_a: vec![0], side_b: vec![1] };
        assert!(matches!(cut_to_colouring(&p3, &m), Err(ColouringError::NotAPartition(_))));
        let m = MatchingCut { edges: vec![], side_a: vec![0], side_b: vec![1, 2] };
        assert_eq!(cut_to_colouring(&p3, &m), Err(ColouringError::NotACut(0, 1)));
        let m = MatchingCut { edges: vec![(0, 1), (1, 2)], side_a: vec![0], side_b: vec![1, 2] };
        assert!(matches!(cut_to_colouring(&p3, &m), Err(ColouringError::NotAMatching(1))));
        let m = MatchingCut { edges: vec![(1, 2)], side_a: vec![0, 1], side_b: vec![2] };
        assert!(cut_to_colouring(&p3, &m).is_ok());
        let m = MatchingCut { edges: vec![(0, 2)], side_a: vec![0], side_b: vec![1, 2] };
        assert_eq!(cut_to_colouring(&p3, &m), Err(ColouringError::NoSuchEdge(0, 2)));
    }

    #[test]
    fn round_trip_on_all_valid_colourings_of_c6() {
        let g = cycle(6);
        for mask in 1..63u32 {
            let c = PartialColouring::from_total((0..6).map(|i| if mask >> i & 1 == 1 { R } else { B }));
            if let Ok(cut) = colouring_to_cut(&g, &c) {
                let back = cut_to_colouring(&g, &cut).unwrap();
                assert_eq!(back, c);
                assert_eq!(colouring_to_cut(&g, &back).unwrap(), cut);
            }
        }
    }

    #[test]
    fn certificate_text_round_trip() {
        let g = cycle(4);
        let c = PartialColouring::from_total([R, R, B, B]);
        let cert = Certificate::from_colouring(&g, &c).unwrap();
        let text = cert.to_text();
        assert!(text.contains("0 R\n") && text.contains("1 2\n") && text.contains("value 2\n"));
        let back = Certificate::parse(&text).unwrap();
        assert_eq!(back, cert);
        assert!(back.matching_cut().unwrap().check(&g).is_ok());
        assert!(Certificate::parse("0 X Y").is_err());
        assert!(Certificate::parse("0 R\n0 B\n").is_err());
    }

    #[test]
    fn partial_helpers() {
        let mut c = PartialColouring::uncoloured(4);
        c.set(0, R);
        c.set(3, B);
        assert!(c.has_both());
        assert_eq!(c.uncoloured_count(), 2);
        assert_eq!(c.swapped().get(0), Some(B));
        let mut d = c.clone();
        d.set(1, R);
        assert!(c.is_extended_by(&d));
        assert!(!d.is_extended_by(&c));
        assert_eq!(format!("{d:?}"), "[RR.B]");
    }
}
