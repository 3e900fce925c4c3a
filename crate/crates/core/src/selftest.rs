//! Self-test harness: oracle suites over exhaustive and seeded instance sets,
//! with counterexample shrinking and a fault-injection hook for checking
//! that the harness itself notices a broken solver.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::colouring::{colouring_to_cut, cut_to_colouring, Colour, PartialColouring};
use crate::completion::{complete_independent, min_value_extension_bruteforce, BRUTE_FORCE_CAP, DEFAULT_DOMSET_CAP};
use crate::generate::{connected_cograph, cycle, nonisomorphic_connected, random_connected};
use crate::graph::Graph;
use crate::hardness::{
    brute_force_vertex_cover, clique_oracle, reduce_vc_to_3p3free, reduce_vc_to_bipartite, value_breakdown,
    VertexCoverInstance,
};
use crate::pattern::{find_induced, is_free, Pattern};
use crate::propagate::propagate;
use crate::result::{Outcome, SolverResult};
use crate::solvers::{
    enumerate_p4free_colourings, min_dominating_set, solve_bruteforce, solve_with, verify_matching_cut, SolverChoice,
    DOMSET_SEARCH_CAP,
};

/// A deliberate defect, to check the harness reports it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Adds one to every cut value the named solver reports.
    OffByOne(SolverChoice),
    /// Makes the named solver report "no matching cut" on every graph with
    /// at least this many vertices.
    DropCuts(SolverChoice, usize),
}

impl FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("cannot parse fault `{s}` (expected off-by-one:<solver> or drop-cuts:<solver>:<n>)");
        let toks: Vec<&str> = s.split(':').collect();
        let fault = match toks.as_slice() {
            ["off-by-one", solver] => Fault::OffByOne(solver.parse().map_err(|_| bad())?),
            ["drop-cuts", solver, n] => Fault::DropCuts(solver.parse().map_err(|_| bad())?, n.parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        };
        let (Fault::OffByOne(target) | Fault::DropCuts(target, _)) = fault;
        if target == SolverChoice::Brute {
            return Err("brute force is the reference oracle; fault another solver".to_string());
        }
        Ok(fault)
    }
}

#[derive(Clone, Debug)]
pub struct SelftestConfig {
    /// Exhaustive suites cover every connected graph up to isomorphism on at
    /// most this many vertices.
    pub max_n: usize,
    /// Seeded random graphs in the oracle suite.
    pub samples: usize,
    pub seed: u64,
    /// Partial colourings sampled per graph in the propagation suite.
    pub partials_per_graph: usize,
    /// Instances in the independent-completion suite.
    pub independent_instances: usize,
    pub fault: Option<Fault>,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            max_n: 8,
            samples: 1000,
            seed: 0,
            partials_per_graph: 50,
            independent_instances: 10_000,
            fault: None,
        }
    }
}

/// A failing instance, already shrunk where the suite supports it.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub detail: String,
    pub graph: Graph,
    pub colouring: Option<PartialColouring>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.detail)?;
        f.write_str(&self.graph.to_edge_list())?;
        if let Some(c) = &self.colouring {
            writeln!(f, "# partial colouring")?;
            for line in c.to_text().lines() {
                writeln!(f, "# {line}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    /// Individual checks performed.
    pub checked: u64,
    pub failures: usize,
    /// The first failure, shrunk.
    pub counterexample: Option<Counterexample>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite {}: {} checked={} failures={}",
            self.name,
            if self.passed() { "pass" } else { "FAIL" },
            self.checked,
            self.failures
        )
    }
}

pub const SUITES: [&str; 5] =
    ["oracle-equivalence", "propagation-safeness", "independent-completion", "p4free-count", "reduction-equivalence"];

/// Runs every suite in order.
pub fn run_selftest(cfg: &SelftestConfig) -> Vec<SuiteReport> {
    SUITES.iter().map(|name| run_suite(name, cfg).expect("listed suite")).collect()
}

pub fn run_suite(name: &str, cfg: &SelftestConfig) -> Option<SuiteReport> {
    let start = Instant::now();
    let (name, outcome): (&'static str, Tally) = match name {
        "oracle-equivalence" => (SUITES[0], oracle_equivalence(cfg)),
        "propagation-safeness" => (SUITES[1], propagation_safeness(cfg)),
        "independent-completion" => (SUITES[2], independent_completion(cfg)),
        "p4free-count" => (SUITES[3], p4free_count(cfg)),
        "reduction-equivalence" => (SUITES[4], reduction_equivalence(cfg)),
        _ => return None,
    };
    Some(SuiteReport {
        name,
        checked: outcome.checked,
        failures: outcome.failures.len(),
        counterexample: outcome.failures.into_iter().next(),
        elapsed: start.elapsed(),
    })
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failures: Vec<Counterexample>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self
    }
}

fn reduce_ordered(parts: Vec<Tally>) -> Tally {
    parts.into_iter().fold(Tally::default(), Tally::merge)
}

/// Runs a solver, applying the configured fault.
pub fn run_solver(g: &Graph, choice: SolverChoice, fault: Option<Fault>) -> Result<SolverResult, crate::SolveError> {
    let mut r = solve_with(g, choice)?;
    match fault {
        Some(Fault::OffByOne(s)) if s == choice => {
            if let Outcome::Cut { value, .. } = &mut r.outcome {
                *value += 1;
            }
        }
        Some(Fault::DropCuts(s, n)) if s == choice && g.n() >= n => r.outcome = Outcome::NoCut,
        _ => {}
    }
    Ok(r)
}

/// The specialised solvers whose preconditions hold for `g`.
pub fn applicable_solvers(g: &Graph) -> Vec<SolverChoice> {
    let mut out = Vec::new();
    if is_free(g, &Pattern::S112) {
        out.push(SolverChoice::S112);
    }
    if is_free(g, &Pattern::Path(7)) {
        out.push(SolverChoice::P7);
    }
    if is_free(g, &Pattern::P6PlusP4) {
        out.push(SolverChoice::P6P4);
    }
    if g.n() <= DOMSET_SEARCH_CAP && min_dominating_set(g, DEFAULT_DOMSET_CAP).is_some() {
        out.push(SolverChoice::Domset);
    }
    out
}

/// Checks a result's certificate: verification, and the cut/colouring
/// round trip preserving the value.
pub fn certificate_problem(g: &Graph, r: &SolverResult) -> Option<String> {
    let Outcome::Cut { value, colouring, cut } = &r.outcome else { return None };
    let m = match colouring_to_cut(g, colouring) {
        Ok(m) => m,
        Err(e) => return Some(format!("{}: colouring rejected: {e}", r.solver)),
    };
    if &m.edges != cut {
        return Some(format!("{}: reported cut differs from the colouring's bichromatic edges", r.solver));
    }
    let verdict = verify_matching_cut(g, &m, *value);
    if !verdict.is_accept() {
        return Some(format!("{}: {verdict}", r.solver));
    }
    match cut_to_colouring(g, &m) {
        Ok(back) if back.value(g) == *value => None,
        Ok(back) => Some(format!("{}: round trip gives value {}", r.solver, back.value(g))),
        Err(e) => Some(format!("{}: round trip failed: {e}", r.solver)),
    }
}

/// Compares every applicable solver with brute force on `g`; returns the
/// number of comparisons and the first discrepancy.
fn oracle_check(g: &Graph, fault: Option<Fault>) -> (u64, Option<String>) {
    let want = match solve_bruteforce(g) {
        Ok(r) => r,
        Err(e) => return (1, Some(format!("brute force failed: {e}"))),
    };
    if let Some(p) = certificate_problem(g, &want) {
        return (1, Some(p));
    }
    let mut checked = 0;
    for choice in applicable_solvers(g) {
        checked += 1;
        let got = match run_solver(g, choice, fault) {
            Ok(r) => r,
            Err(e) => return (checked, Some(format!("{choice} failed: {e}"))),
        };
        if got.value() != want.value() {
            return (checked, Some(format!("{choice} gave {:?}, brute force {:?}", got.value(), want.value())));
        }
        if let Some(p) = certificate_problem(g, &got) {
            return (checked, Some(p));
        }
    }
    (checked, None)
}

/// Greedily deletes vertices, then edges, while the graph stays connected
/// and `fails` still holds.
pub fn shrink(g: &Graph, fails: impl Fn(&Graph) -> bool) -> Graph {
    let mut cur = g.clone();
    loop {
        let mut changed = false;
        for v in (0..cur.n()).rev() {
            if cur.n() <= 2 {
                break;
            }
            let keep: Vec<usize> = (0..cur.n()).filter(|&u| u != v).collect();
            let h = cur.induced(&keep);
            if h.is_connected() && fails(&h) {
                cur = h;
                changed = true;
            }
        }
        for e in cur.edges().into_iter().rev() {
            let h = Graph::new(cur.n(), cur.edges().into_iter().filter(|&f| f != e)).expect("subgraph");
            if h.is_connected() && fails(&h) {
                cur = h;
                changed = true;
            }
        }
        if !changed {
            return cur;
        }
    }
}

fn oracle_equivalence(cfg: &SelftestConfig) -> Tally {
    let mut graphs: Vec<Graph> = (2..=cfg.max_n.min(8)).flat_map(nonisomorphic_connected).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (lo, hi) = (cfg.max_n + 1, (cfg.max_n + 6).min(14));
    for _ in 0..cfg.samples {
        let n = rng.gen_range(lo.min(hi)..=hi);
        let p = rng.gen_range(0.1..0.7);
        graphs.push(random_connected(n, p, &mut rng));
    }
    let fault = cfg.fault;
    let parts: Vec<Tally> = graphs
        .par_iter()
        .map(|g| {
            let (checked, problem) = oracle_check(g, fault);
            let failures = problem
                .map(|_| {
                    let small = shrink(g, |h| oracle_check(h, fault).1.is_some());
                    let detail = oracle_check(&small, fault).1.expect("shrinking keeps the failure");
                    Counterexample { detail, graph: small, colouring: None }
                })
                .into_iter()
                .collect();
            Tally { checked, failures }
        })
        .collect();
    reduce_ordered(parts)
}

fn random_partial(n: usize, rng: &mut impl Rng) -> PartialColouring {
    loop {
        let cols: Vec<Option<Colour>> = (0..n)
            .map(|_| match rng.gen_range(0..3) {
                0 => Some(Colour::Red),
                1 => Some(Colour::Blue),
                _ => None,
            })
            .collect();
        let c = PartialColouring::from_colours(cols);
        if c.has_both() {
            return c;
        }
    }
}

fn propagation_check(g: &Graph, c: &PartialColouring) -> Option<String> {
    let before = min_value_extension_bruteforce(g, c).expect("small").value();
    let out = propagate(g, c).expect("both colours present");
    let after = match out.colouring() {
        None => None,
        Some(d) => {
            if !c.is_extended_by(d) {
                return Some("propagation changed a coloured vertex".into());
            }
            min_value_extension_bruteforce(g, d).expect("small").value()
        }
    };
    (before != after).then(|| format!("minimum extension {before:?} before propagation, {after:?} after"))
}

fn propagation_safeness(cfg: &SelftestConfig) -> Tally {
    let graphs: Vec<Graph> = (2..=cfg.max_n.min(7)).flat_map(nonisomorphic_connected).collect();
    let parts: Vec<Tally> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let mut t = Tally::default();
            for _ in 0..cfg.partials_per_graph {
                let c = random_partial(g.n(), &mut rng);
                t.checked += 1;
                if let Some(detail) = propagation_check(g, &c) {
                    t.failures.push(Counterexample { detail, graph: g.clone(), colouring: Some(c) });
                    break;
                }
            }
            t
        })
        .collect();
    reduce_ordered(parts)
}

/// A propagated partial colouring whose uncoloured vertices are independent,
/// or `None` if this attempt did not produce one.
pub fn independent_instance(rng: &mut impl Rng) -> Option<(Graph, PartialColouring)> {
    let n = rng.gen_range(4..=12);
    let g = random_connected(n, rng.gen_range(0.15..0.6), rng);
    // half the time start from a valid colouring so extensions exist
    let base: PartialColouring = match (rng.gen_bool(0.5), solve_bruteforce(&g).ok().and_then(|r| r.colouring().cloned())) {
        (true, Some(c)) => c,
        _ => PartialColouring::from_total((0..n).map(|_| if rng.gen_bool(0.5) { Colour::Red } else { Colour::Blue })),
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut c = base;
    let budget = rng.gen_range(1..=n / 2);
    let mut taken = 0;
    for v in order {
        if taken == budget {
            break;
        }
        if g.neighbours(v).iter().all(|&w| c.get(w).is_some()) {
            c.clear(v);
            taken += 1;
        }
    }
    if !c.has_both() {
        return None;
    }
    let d = propagate(&g, &c).ok()?.colouring()?.clone();
    Some((g, d))
}

fn independent_check(g: &Graph, c: &PartialColouring) -> Option<String> {
    let got = complete_independent(g, c).map_err(|e| e.to_string());
    let got = match got {
        Ok(r) => r,
        Err(e) => return Some(format!("complete_independent failed: {e}")),
    };
    let free: Vec<usize> = (0..g.n()).filter(|&v| c.get(v).is_none()).collect();
    // every valid extension must have the same value
    let mut values = std::collections::BTreeSet::new();
    let mut d = c.clone();
    for mask in 0u32..1 << free.len() {
        for (i, &v) in free.iter().enumerate() {
            d.set(v, if mask >> i & 1 == 1 { Colour::Blue } else { Colour::Red });
        }
        if let Ok(v) = d.validate(g) {
            values.insert(v);
        }
    }
    if values.len() > 1 {
        return Some(format!("valid extensions take several values {values:?}"));
    }
    let want = values.into_iter().next();
    if got.value() != want {
        return Some(format!("complete_independent {:?}, exhaustive {want:?}", got.value()));
    }
    certificate_problem(g, &got)
}

fn independent_completion(cfg: &SelftestConfig) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    let mut instances = Vec::with_capacity(cfg.independent_instances);
    while instances.len() < cfg.independent_instances {
        if let Some(x) = independent_instance(&mut rng) {
            instances.push(x);
        }
    }
    let parts: Vec<Tally> = instances
        .par_iter()
        .map(|(g, c)| Tally {
            checked: 1,
            failures: independent_check(g, c)
                .map(|detail| Counterexample { detail, graph: g.clone(), colouring: Some(c.clone()) })
                .into_iter()
                .collect(),
        })
        .collect();
    reduce_ordered(parts)
}

/// Total colourings in which each vertex has at most one neighbour of the
/// other colour.
fn locally_valid_count(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|mask| {
            (0..n).all(|v| g.neighbours(v).iter().filter(|&&w| (mask >> v ^ mask >> w) & 1 == 1).count() <= 1)
        })
        .count()
}

fn p4free_check(g: &Graph) -> Option<String> {
    let n = g.n();
    let want = locally_valid_count(g);
    if want > 2 * n {
        return Some(format!("{want} valid colourings exceed 2n = {}", 2 * n));
    }
    match enumerate_p4free_colourings(g) {
        Err(e) => Some(format!("enumeration failed: {e}")),
        Ok(list) if list.len() != want => Some(format!("enumerated {} colourings, brute force {want}", list.len())),
        Ok(list) => list
            .iter()
            .find(|c| (0..n).any(|v| c.neighbours_coloured(g, v, c.get(v).expect("total").opposite()) > 1))
            .map(|c| format!("enumerated an invalid colouring {}", c.to_text().trim())),
    }
}

fn p4free_count(cfg: &SelftestConfig) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(2));
    let top = cfg.max_n.clamp(4, 10);
    let mut graphs = vec![cycle(4)];
    for _ in 0..cfg.samples {
        graphs.push(connected_cograph(rng.gen_range(2..=top), rng.gen()));
    }
    let mut t = Tally::default();
    if enumerate_p4free_colourings(&graphs[0]).map(|l| l.len()).ok() != Some(6) {
        t.failures.push(Counterexample { detail: "C4 does not give 6 colourings".into(), graph: graphs[0].clone(), colouring: None });
    }
    let parts: Vec<Tally> = graphs
        .par_iter()
        .map(|g| Tally {
            checked: 1,
            failures: p4free_check(g)
                .map(|detail| Counterexample { detail, graph: g.clone(), colouring: None })
                .into_iter()
                .collect(),
        })
        .collect();
    t.merge(reduce_ordered(parts))
}

/// Every check on one `(H, k)`.
pub fn reduction_check(h: &Graph, k: usize) -> Vec<String> {
    let mut out = Vec::new();
    let inst = match VertexCoverInstance::new(h.clone(), k) {
        Ok(i) => i,
        Err(e) => return vec![e.to_string()],
    };
    let vc = brute_force_vertex_cover(h).expect("small");
    let plain = reduce_vc_to_3p3free(&inst).expect("valid instance");
    let bip = reduce_vc_to_bipartite(&inst).expect("valid instance");
    let po = clique_oracle(&plain).expect("labelled");
    let bo = clique_oracle(&bip).expect("labelled");
    let in_window = po.values.range(plain.lo..=plain.hi).next().is_some();
    if (vc <= k) != in_window {
        out.push(format!("cover number {vc}, k = {k}, some value in [{}, {}]: {in_window}", plain.lo, plain.hi));
    }
    let min = po.result.value();
    let min_in = min.is_some_and(|m| (plain.lo..=plain.hi).contains(&m));
    if (vc == k) != min_in {
        out.push(format!("cover number {vc}, k = {k}, minimum {min:?} vs [{}, {}]", plain.lo, plain.hi));
    }
    if bo.result.value() != min.map(|m| 2 * m) {
        out.push(format!("bipartite minimum {:?} is not twice {min:?}", bo.result.value()));
    }
    if find_induced(&plain.graph, &Pattern::ThreeP3).is_some() {
        out.push("gadget contains an induced 3P3".into());
    }
    if !bip.graph.is_bipartite() {
        out.push("doubled gadget is not bipartite".into());
    }
    if plain.graph.n() <= BRUTE_FORCE_CAP && solve_bruteforce(&plain.graph).ok().and_then(|r| r.value()) != min {
        out.push("clique oracle disagrees with brute force".into());
    }
    if let Some(c) = po.result.colouring() {
        let b = value_breakdown(&plain, h, c);
        let blue_vertex_cliques = (0..h.n()).filter(|&v| b.cover_gadgets[v] > 0).count();
        if b.vertex_gadgets.iter().any(|&x| x != 2)
            || b.ab != 1
            || b.within_parts != 0
            || b.cover_gadgets.iter().any(|&x| x != 0 && x != h.m() + 1)
            || b.total() != c.value(&plain.graph)
            || blue_vertex_cliques < vc
        {
            out.push(format!("value breakdown does not decompose: {b:?}"));
        }
    }
    for (g, r) in [(&plain.graph, &po.result), (&bip.graph, &bo.result)] {
        if let Some(p) = certificate_problem(g, r) {
            out.push(p);
        }
    }
    out
}

fn reduction_equivalence(cfg: &SelftestConfig) -> Tally {
    let hs: Vec<(Graph, usize)> = (2..=cfg.max_n.min(4))
        .flat_map(nonisomorphic_connected)
        .flat_map(|h| (0..=h.n()).map(move |k| (h.clone(), k)))
        .collect();
    let parts: Vec<Tally> = hs
        .par_iter()
        .map(|(h, k)| Tally {
            checked: 1,
            failures: reduction_check(h, *k)
                .into_iter()
                .take(1)
                .map(|detail| Counterexample { detail: format!("k = {k}: {detail}"), graph: h.clone(), colouring: None })
                .collect(),
        })
        .collect();
    reduce_ordered(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> SelftestConfig {
        SelftestConfig { max_n: 5, samples: 40, seed: 3, partials_per_graph: 10, independent_instances: 200, fault: None }
    }

    #[test]
    fn quick_run_passes() {
        for r in run_selftest(&quick()) {
            assert!(r.passed(), "{r}\n{}", r.counterexample.as_ref().map(|c| c.to_string()).unwrap_or_default());
            assert!(r.checked > 0, "{r}");
        }
    }

    #[test]
    fn injected_fault_is_caught_and_shrunk() {
        let cfg = SelftestConfig { fault: Some(Fault::OffByOne(SolverChoice::P7)), ..quick() };
        let r = run_suite("oracle-equivalence", &cfg).unwrap();
        assert!(!r.passed());
        let ce = r.counterexample.unwrap();
        assert_eq!(ce.graph.n(), 2, "{ce}");
        assert!(ce.detail.contains("p7"), "{}", ce.detail);
    }

    #[test]
    fn fault_parsing() {
        assert_eq!("off-by-one:s112".parse::<Fault>(), Ok(Fault::OffByOne(SolverChoice::S112)));
        assert_eq!("drop-cuts:p7:6".parse::<Fault>(), Ok(Fault::DropCuts(SolverChoice::P7, 6)));
        assert!("nonsense".parse::<Fault>().is_err());
        assert!("off-by-one:brute".parse::<Fault>().is_err());
    }

    #[test]
    fn shrink_finds_a_minimal_witness() {
        let g = cycle(7);
        let small = shrink(&g, |h| !h.edges().is_empty() && find_induced(h, &Pattern::Path(3)).is_some());
        assert_eq!(small.n(), 3);
        assert_eq!(small.m(), 2);
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &quick()).is_none());
    }
}
