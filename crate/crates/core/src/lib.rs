//! Exact minimum matching cuts via red-blue colourings.
//!
//! A matching cut of a connected graph corresponds to a colouring of the
//! vertices red and blue, both colours used, in which every vertex has at
//! most one neighbour of the other colour; the cut is the set of
//! bichromatic edges.

pub mod bitset;
pub mod colouring;
pub mod completion;
pub mod error;
pub mod generate;
pub mod graph;
pub mod hardness;
pub mod pattern;
pub mod propagate;
pub mod result;
pub mod selftest;
pub mod solvers;

pub use bitset::VertexSet;
pub use error::{ColouringError, CompletionError, GraphError, HardnessError, PatternError, SolveError};
pub use graph::{load_graph, load_graph_stream, Graph, Metrics};
pub use colouring::{colouring_to_cut, cut_to_colouring, Certificate, Colour, MatchingCut, PartialColouring};
pub use result::{Outcome, SolverResult, Stats};
pub use solvers::{
    enumerate_p4free_colourings, solve_auto, solve_bruteforce, solve_p6p4_free, solve_p7_free, solve_s112_free,
    solve_with, verify_matching_cut, SolverChoice, Verdict,
};
pub use hardness::{
    brute_force_vertex_cover, clique_oracle, clique_oracle_min_cut, reduce_vc_to_3p3free, reduce_vc_to_bipartite,
    GadgetOutput, VertexCoverInstance,
};
