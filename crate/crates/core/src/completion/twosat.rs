//! 2-satisfiability via strongly connected components.

/// Literal `2 * var + (negated as usize)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lit(usize);

impl Lit {
    pub fn pos(var: usize) -> Lit {
        Lit(2 * var)
    }

    pub fn neg(var: usize) -> Lit {
        Lit(2 * var + 1)
    }

    /// Literal asserting `var == value`.
    pub fn is(var: usize, value: bool) -> Lit {
        if value {
            Lit::pos(var)
        } else {
            Lit::neg(var)
        }
    }

    fn not(self) -> Lit {
        Lit(self.0 ^ 1)
    }
}

#[derive(Clone, Debug)]
pub struct TwoSat {
    vars: usize,
    implications: Vec<Vec<usize>>,
}

impl TwoSat {
    pub fn new(vars: usize) -> Self {
        TwoSat { vars, implications: vec![Vec::new(); 2 * vars] }
    }

    /// Adds the clause `a ∨ b`.
    pub fn either(&mut self, a: Lit, b: Lit) {
        self.implications[a.not().0].push(b.0);
        self.implications[b.not().0].push(a.0);
    }

    pub fn force(&mut self, a: Lit) {
        self.either(a, a);
    }

    /// A satisfying assignment, or `None`.
    pub fn solve(&self) -> Option<Vec<bool>> {
        let comp = tarjan(&self.implications);
        let mut out = Vec::with_capacity(self.vars);
        for v in 0..self.vars {
            let (p, n) = (comp[2 * v], comp[2 * v + 1]);
            if p == n {
                return None;
            }
            // Tarjan numbers components in reverse topological order
            out.push(p < n);
        }
        Some(out)
    }
}

fn tarjan(adj: &[Vec<usize>]) -> Vec<usize> {
    struct St<'a> {
        adj: &'a [Vec<usize>],
        index: Vec<usize>,
        low: Vec<usize>,
        on: Vec<bool>,
        stack: Vec<usize>,
        comp: Vec<usize>,
        next: usize,
        ncomp: usize,
    }
    fn visit(s: &mut St<'_>, v: usize) {
        s.index[v] = s.next;
        s.low[v] = s.next;
        s.next += 1;
        s.stack.push(v);
        s.on[v] = true;
        for i in 0..s.adj[v].len() {
            let w = s.adj[v][i];
            if s.index[w] == usize::MAX {
                visit(s, w);
                s.low[v] = s.low[v].min(s.low[w]);
            } else if s.on[w] {
                s.low[v] = s.low[v].min(s.index[w]);
            }
        }
        if s.low[v] == s.index[v] {
            while let Some(w) = s.stack.pop() {
                s.on[w] = false;
                s.comp[w] = s.ncomp;
                if w == v {
                    break;
                }
            }
            s.ncomp += 1;
        }
    }
    let n = adj.len();
    let mut s = St {
        adj,
        index: vec![usize::MAX; n],
        low: vec![0; n],
        on: vec![false; n],
        stack: Vec::new(),
        comp: vec![0; n],
        next: 0,
        ncomp: 0,
    };
    for v in 0..n {
        if s.index[v] == usize::MAX {
            visit(&mut s, v);
        }
    }
    s.comp
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn agrees_with_enumeration() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let vars = rng.gen_range(1..7);
            let clauses: Vec<(Lit, Lit)> = (0..rng.gen_range(0..12))
                .map(|_| {
                    let a = Lit::is(rng.gen_range(0..vars), rng.gen_bool(0.5));
                    let b = Lit::is(rng.gen_range(0..vars), rng.gen_bool(0.5));
                    (a, b)
                })
                .collect();
            let mut ts = TwoSat::new(vars);
            for &(a, b) in &clauses {
                ts.either(a, b);
            }
            let holds = |asg: &[bool], l: Lit| asg[l.0 / 2] == (l.0 % 2 == 0);
            let brute = (0u32..(1 << vars)).any(|m| {
                let asg: Vec<bool> = (0..vars).map(|i| m >> i & 1 == 1).collect();
                clauses.iter().all(|&(a, b)| holds(&asg, a) || holds(&asg, b))
            });
            match ts.solve() {
                Some(asg) => assert!(clauses.iter().all(|&(a, b)| holds(&asg, a) || holds(&asg, b))),
                None => assert!(!brute),
            }
            assert_eq!(ts.solve().is_some(), brute);
        }
    }
}
