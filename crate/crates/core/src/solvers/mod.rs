//! Top-level exact solvers and dispatch.
//!
//! Every solver returns a [`SolverResult`] whose cut, if any, has been
//! validated against the graph. Disconnected graphs have a matching cut of
//! size zero and single vertices have none; all solvers report these
//! directly.

mod p4free;
mod p6p4;
mod p7;
mod s112;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::colouring::{Colour, MatchingCut, PartialColouring};
use crate::completion::{complete_small_domset, BRUTE_FORCE_CAP, DEFAULT_DOMSET_CAP};
use crate::error::SolveError;
use crate::graph::Graph;
use crate::pattern::{is_free, Pattern};
use crate::result::{Best, SolverResult, Stats};

pub use p4free::{enumerate_p4free_colourings, enumerate_p4free_red_blue};
pub use p6p4::solve_p6p4_free;
pub use p7::solve_p7_free;
pub use s112::solve_s112_free;

/// Graphs above this size are not searched for a small dominating set.
pub const DOMSET_SEARCH_CAP: usize = 64;

/// Handles the inputs every solver treats the same way: no vertices, a
/// single vertex, or a disconnected graph.
pub(crate) fn trivial_cases(g: &Graph, solver: &str) -> Result<Option<SolverResult>, SolveError> {
    if g.n() == 0 {
        return Err(SolveError::Empty);
    }
    if g.n() == 1 {
        return Ok(Some(SolverResult::no_cut(solver, Stats::default())));
    }
    let comps = g.components();
    if comps.len() > 1 {
        let mut c = PartialColouring::from_total(vec![Colour::Blue; g.n()]);
        for &v in &comps[0] {
            c.set(v, Colour::Red);
        }
        let mut best = Best::new(g);
        best.offer(&c);
        return Ok(Some(best.into_result(solver, Stats::default())));
    }
    Ok(None)
}

pub(crate) fn require_free(g: &Graph, p: &Pattern, solver: &'static str) -> Result<(), SolveError> {
    if is_free(g, p) {
        Ok(())
    } else {
        Err(SolveError::Precondition { solver, reason: format!("graph is not {p}-free") })
    }
}

/// Minimum over all colourings with vertex 0 red.
pub fn solve_bruteforce(g: &Graph) -> Result<SolverResult, SolveError> {
    const NAME: &str = "brute";
    if g.n() > BRUTE_FORCE_CAP {
        return Err(SolveError::SizeCap { solver: NAME, n: g.n(), cap: BRUTE_FORCE_CAP });
    }
    if let Some(r) = trivial_cases(g, NAME)? {
        return Ok(r);
    }
    let n = g.n();
    let adj: Vec<u32> = (0..n).map(|v| g.neighbours(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let all: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    // bit i of `mask` makes vertex i + 1 blue
    let total: u64 = 1 << (n - 1);
    let chunk_bits = (n - 1).min(10);
    let chunks = 1u64 << chunk_bits;
    let per_chunk = total / chunks;
    let best = (0..chunks)
        .into_par_iter()
        .filter_map(|ch| {
            let mut best: Option<(usize, u32)> = None;
            for mask in ch * per_chunk..(ch + 1) * per_chunk {
                let blue = (mask as u32) << 1;
                if blue == 0 {
                    continue;
                }
                let red = all & !blue;
                let mut value = 0usize;
                let mut ok = true;
                for (v, &row) in adj.iter().enumerate() {
                    let opp = if blue >> v & 1 == 1 { red } else { blue };
                    let k = (row & opp).count_ones();
                    if k > 1 {
                        ok = false;
                        break;
                    }
                    if blue >> v & 1 == 0 {
                        value += k as usize;
                    }
                }
                if ok && best.is_none_or(|b| (value, blue) < b) {
                    best = Some((value, blue));
                }
            }
            best
        })
        .min();
    let stats = Stats { branches: total, ..Stats::default() };
    let mut acc = Best::new(g);
    if let Some((_, blue)) = best {
        let c = PartialColouring::from_total((0..n).map(|v| if blue >> v & 1 == 1 { Colour::Blue } else { Colour::Red }));
        acc.offer(&c);
    }
    Ok(acc.into_result(NAME, stats))
}

/// Outcome of [`verify_matching_cut`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(String),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Accept => write!(f, "accept"),
            Verdict::Reject(reason) => write!(f, "reject: {reason}"),
        }
    }
}

/// Checks that `m` is a matching cut of `g` separating its two sides and
/// that it has exactly `claimed` edges.
pub fn verify_matching_cut(g: &Graph, m: &MatchingCut, claimed: usize) -> Verdict {
    if let Err(e) = m.check(g) {
        return Verdict::Reject(e.to_string());
    }
    if m.size() != claimed {
        return Verdict::Reject(format!("cut has {} edges but {claimed} were claimed", m.size()));
    }
    Verdict::Accept
}

/// A smallest dominating set with at most `cap` vertices, scanning sizes in
/// increasing order and subsets in lexicographic order.
pub fn min_dominating_set(g: &Graph, cap: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let full = crate::bitset::VertexSet::full(n);
    for size in 1..=cap.min(n) {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            if g.dominates(&g.vertex_set(pick.iter().copied()), &full) {
                return Some(pick);
            }
            // next combination
            let mut i = size;
            while i > 0 && pick[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            pick[i - 1] += 1;
            for j in i..size {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    None
}

/// Solves via a smallest dominating set of at most [`DEFAULT_DOMSET_CAP`]
/// vertices.
pub fn solve_domset(g: &Graph) -> Result<SolverResult, SolveError> {
    const NAME: &str = "domset";
    if let Some(r) = trivial_cases(g, NAME)? {
        return Ok(r);
    }
    if g.n() > DOMSET_SEARCH_CAP {
        return Err(SolveError::SizeCap { solver: NAME, n: g.n(), cap: DOMSET_SEARCH_CAP });
    }
    let d = min_dominating_set(g, DEFAULT_DOMSET_CAP).ok_or_else(|| SolveError::Precondition {
        solver: NAME,
        reason: format!("no dominating set with at most {DEFAULT_DOMSET_CAP} vertices"),
    })?;
    Ok(complete_small_domset(g, &d, DEFAULT_DOMSET_CAP)?)
}

/// Which solver to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverChoice {
    Auto,
    Brute,
    S112,
    P7,
    P6P4,
    Domset,
}

impl SolverChoice {
    pub const ALL: [SolverChoice; 6] =
        [SolverChoice::Auto, SolverChoice::Brute, SolverChoice::S112, SolverChoice::P7, SolverChoice::P6P4, SolverChoice::Domset];

    pub fn as_str(self) -> &'static str {
        match self {
            SolverChoice::Auto => "auto",
            SolverChoice::Brute => "brute",
            SolverChoice::S112 => "s112",
            SolverChoice::P7 => "p7",
            SolverChoice::P6P4 => "p6p4",
            SolverChoice::Domset => "domset",
        }
    }
}

impl fmt::Display for SolverChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SolverChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SolverChoice::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown solver `{s}`"))
    }
}

pub fn solve_with(g: &Graph, choice: SolverChoice) -> Result<SolverResult, SolveError> {
    match choice {
        SolverChoice::Auto => solve_auto(g),
        SolverChoice::Brute => solve_bruteforce(g),
        SolverChoice::S112 => solve_s112_free(g),
        SolverChoice::P7 => solve_p7_free(g),
        SolverChoice::P6P4 => solve_p6p4_free(g),
        SolverChoice::Domset => solve_domset(g),
    }
}

/// Picks the first applicable solver in the order: `S_{1,1,2}`-free,
/// `(P_6+P_4)`-free (when the graph contains a `P_6`), `P_7`-free, small
/// dominating set, brute force.
pub fn solve_auto(g: &Graph) -> Result<SolverResult, SolveError> {
    if let Some(r) = trivial_cases(g, "auto")? {
        return Ok(r);
    }
    if is_free(g, &Pattern::S112) {
        return solve_s112_free(g);
    }
    let p7_free = is_free(g, &Pattern::Path(7));
    // a P6-free graph goes straight to the P7-free solver
    if !is_free(g, &Pattern::Path(6)) && is_free(g, &Pattern::P6PlusP4) {
        return solve_p6p4_free(g);
    }
    if p7_free {
        return solve_p7_free(g);
    }
    if g.n() <= DOMSET_SEARCH_CAP {
        if let Some(d) = min_dominating_set(g, DEFAULT_DOMSET_CAP) {
            return Ok(complete_small_domset(g, &d, DEFAULT_DOMSET_CAP)?);
        }
    }
    if g.n() <= BRUTE_FORCE_CAP {
        return solve_bruteforce(g);
    }
    Err(SolveError::NoApplicableSolver)
}
