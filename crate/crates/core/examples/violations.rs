//! Claim-violation and fallback counts per solver over every connected
//! graph up to isomorphism, by vertex count. Usage: `violations [max_n]`.

use matchcut::generate::nonisomorphic_connected;
use matchcut::pattern::{is_free, Pattern};
use matchcut::*;

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for n in 2..=max {
        let mut tally = [(0u64, 0u64, 0u64, 0u64); 3];
        for g in nonisomorphic_connected(n) {
            let want = solve_bruteforce(&g).unwrap().value();
            let runs: [(bool, fn(&Graph) -> Result<SolverResult, SolveError>); 3] = [
                (is_free(&g, &Pattern::S112), solve_s112_free),
                (is_free(&g, &Pattern::Path(7)), solve_p7_free),
                (!is_free(&g, &Pattern::Path(6)) && is_free(&g, &Pattern::P6PlusP4), solve_p6p4_free),
            ];
            for (i, (ok, f)) in runs.iter().enumerate() {
                if !ok {
                    continue;
                }
                let r = f(&g).unwrap();
                tally[i].0 += 1;
                if r.value() != want {
                    tally[i].1 += 1;
                    if tally[i].1 <= 3 {
                        eprintln!("MISMATCH solver {i} n={n}: got {:?} want {:?}\n{}", r.value(), want, g.to_edge_list());
                    }
                }
                tally[i].2 += (r.stats.claim_violations > 0) as u64;
                tally[i].3 += r.stats.fallbacks;
            }
        }
        println!("n={n} (graphs, mismatches, with-violations, fallbacks) s112={:?} p7={:?} p6p4={:?}", tally[0], tally[1], tally[2]);
    }
}
