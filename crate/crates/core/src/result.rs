//! Solver outcomes, statistics, and the running-minimum accumulator shared
//! by every solver.

use std::fmt;

use crate::colouring::{colouring_to_cut, PartialColouring};
use crate::graph::Graph;

/// Counters collected while solving.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// Branches (partial colourings) explored.
    pub branches: u64,
    /// Calls to the propagation engine.
    pub propagations: u64,
    /// Individual rule firings across all propagations.
    pub firings: u64,
    /// Times a structural property the algorithm relies on did not hold on
    /// the current branch (the branch was then finished generically).
    pub claim_violations: u64,
    /// Branches finished by the generic exact completion.
    pub fallbacks: u64,
}

impl Stats {
    pub fn merge(&mut self, other: &Stats) {
        self.branches += other.branches;
        self.propagations += other.propagations;
        self.firings += other.firings;
        self.claim_violations += other.claim_violations;
        self.fallbacks += other.fallbacks;
    }
}

impl fmt::Display for Stats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "branches={} propagations={} firings={} claim_violations={} fallbacks={}",
            self.branches, self.propagations, self.firings, self.claim_violations, self.fallbacks
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    NoCut,
    Cut { value: usize, colouring: PartialColouring, cut: Vec<(usize, usize)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverResult {
    pub outcome: Outcome,
    pub solver: String,
    pub stats: Stats,
}

impl SolverResult {
    pub fn value(&self) -> Option<usize> {
        match &self.outcome {
            Outcome::NoCut => None,
            Outcome::Cut { value, .. } => Some(*value),
        }
    }

    pub fn colouring(&self) -> Option<&PartialColouring> {
        match &self.outcome {
            Outcome::NoCut => None,
            Outcome::Cut { colouring, .. } => Some(colouring),
        }
    }

    pub fn no_cut(solver: impl Into<String>, stats: Stats) -> Self {
        SolverResult { outcome: Outcome::NoCut, solver: solver.into(), stats }
    }
}

/// Keeps the minimum-value valid total colouring offered so far. Every
/// candidate is re-validated, so a solver can only ever report a genuine
/// matching cut. Ties keep the earlier candidate.
#[derive(Clone, Debug)]
pub struct Best<'g> {
    g: &'g Graph,
    best: Option<(usize, PartialColouring)>,
}

impl<'g> Best<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Best { g, best: None }
    }

    /// Offers a candidate; returns true if it was valid.
    pub fn offer(&mut self, c: &PartialColouring) -> bool {
        match c.validate(self.g) {
            Ok(v) => {
                if self.best.as_ref().is_none_or(|(b, _)| v < *b) {
                    self.best = Some((v, c.clone()));
                }
                true
            }
            Err(_) => false,
        }
    }

    pub fn absorb(&mut self, other: Best<'_>) {
        if let Some((_, c)) = other.best {
            self.offer(&c);
        }
    }

    pub fn value(&self) -> Option<usize> {
        self.best.as_ref().map(|(v, _)| *v)
    }

    pub fn colouring(&self) -> Option<&PartialColouring> {
        self.best.as_ref().map(|(_, c)| c)
    }

    pub fn into_outcome(self) -> Outcome {
        match self.best {
            None => Outcome::NoCut,
            Some((value, colouring)) => {
                let cut = colouring_to_cut(self.g, &colouring).expect("stored colourings are valid").edges;
                Outcome::Cut { value, colouring, cut }
            }
        }
    }

    pub fn into_result(self, solver: impl Into<String>, stats: Stats) -> SolverResult {
        SolverResult { outcome: self.into_outcome(), solver: solver.into(), stats }
    }
}
