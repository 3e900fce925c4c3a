//! Seeded random graphs on 9..=14 vertices: agreement with brute force
//! plus claim-violation and fallback counts. Usage: `random_check [count] [seed]`.

use matchcut::generate::random_connected;
use matchcut::pattern::{is_free, Pattern};
use matchcut::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let count: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1000);
    let seed: u64 = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = [(0u64, 0u64, 0u64, 0u64); 3];
    for _ in 0..count {
        let n = rng.gen_range(9..=14);
        let p = rng.gen_range(0.1..0.7);
        let g = random_connected(n, p, &mut rng);
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
                eprintln!("MISMATCH solver {i}: got {:?} want {:?}\n{}", r.value(), want, g.to_edge_list());
            }
            tally[i].2 += (r.stats.claim_violations > 0) as u64;
            tally[i].3 += r.stats.fallbacks;
        }
    }
    println!("(graphs, mismatches, with-violations, fallbacks) s112={:?} p7={:?} p6p4={:?}", tally[0], tally[1], tally[2]);
}
