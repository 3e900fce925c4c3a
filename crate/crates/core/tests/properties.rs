//! Property tests for the library invariants.

use proptest::prelude::*;

use matchcut::generate::connected_cograph;
use matchcut::hardness::{reduce_vc_to_3p3free, reduce_vc_to_bipartite, value_interval, GadgetOutput, VertexCoverInstance};
use matchcut::pattern::{is_free, Pattern};
use matchcut::propagate::propagate;
use matchcut::{
    colouring_to_cut, cut_to_colouring, enumerate_p4free_colourings, load_graph, solve_auto, solve_bruteforce,
    Certificate, Colour, Graph, PartialColouring,
};

/// Connected graph: a random spanning tree plus random extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
        let extra = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect();
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            edges.extend(pairs.zip(extra).filter(|&(_, keep)| keep).map(|(e, _)| e));
            Graph::from_edges_lossy(n, edges)
        })
    })
}

fn with_partial(max_n: usize) -> impl Strategy<Value = (Graph, PartialColouring)> {
    connected_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        let cols = proptest::collection::vec(prop_oneof![Just(None), Just(Some(Colour::Red)), Just(Some(Colour::Blue))], n);
        (Just(g), cols.prop_map(PartialColouring::from_colours))
    })
}

/// Smallest value over every valid total extension, by enumeration.
fn min_extension(g: &Graph, c: &PartialColouring) -> Option<usize> {
    let free: Vec<usize> = (0..g.n()).filter(|&v| c.get(v).is_none()).collect();
    (0u32..1 << free.len())
        .filter_map(|mask| {
            let mut d = c.clone();
            for (i, &v) in free.iter().enumerate() {
                d.set(v, if mask >> i & 1 == 1 { Colour::Blue } else { Colour::Red });
            }
            d.validate(g).ok()
        })
        .min()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn edge_list_round_trip(g in connected_graph(12)) {
        prop_assert_eq!(load_graph(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn colouring_and_cut_round_trip(g in connected_graph(10)) {
        let r = solve_bruteforce(&g).unwrap();
        if let Some(c) = r.colouring() {
            let cut = colouring_to_cut(&g, c).unwrap();
            prop_assert_eq!(cut.size(), r.value().unwrap());
            let back = cut_to_colouring(&g, &cut).unwrap();
            prop_assert_eq!(colouring_to_cut(&g, &back).unwrap(), cut);
            let cert = Certificate::from_colouring(&g, c).unwrap();
            prop_assert_eq!(Certificate::parse(&cert.to_text()).unwrap(), cert);
        }
    }

    #[test]
    fn propagation_keeps_minimum_and_colours((g, c) in with_partial(8)) {
        prop_assume!(c.has_both());
        let out = propagate(&g, &c).unwrap();
        match out.colouring() {
            None => prop_assert_eq!(min_extension(&g, &c), None),
            Some(d) => {
                prop_assert!(c.is_extended_by(d));
                prop_assert_eq!(min_extension(&g, &c), min_extension(&g, d));
            }
        }
    }

    #[test]
    fn auto_agrees_with_bruteforce(g in connected_graph(11)) {
        let auto = solve_auto(&g).unwrap();
        let brute = solve_bruteforce(&g).unwrap();
        prop_assert_eq!(auto.value(), brute.value());
        if let Some(c) = auto.colouring() {
            prop_assert_eq!(c.validate(&g).ok(), auto.value());
        }
    }

    #[test]
    fn pendant_vertex_gives_value_one(g in connected_graph(12), anchor in any::<prop::sample::Index>()) {
        let h = g.with_pendant(anchor.index(g.n()));
        prop_assert_eq!(solve_auto(&h).unwrap().value(), Some(1));
    }

    #[test]
    fn cograph_colourings_at_most_2n(n in 2usize..=12, seed in any::<u64>()) {
        let g = connected_cograph(n, seed);
        prop_assert!(is_free(&g, &Pattern::Path(4)));
        let all = enumerate_p4free_colourings(&g).unwrap();
        prop_assert!(all.len() <= 2 * n);
        for c in &all {
            prop_assert!(c.is_total());
            prop_assert!((0..n).all(|v| c.neighbours_coloured(&g, v, c.get(v).unwrap().opposite()) <= 1));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gadget_invariants(h in connected_graph(4), k in 0usize..=4) {
        let (n, m) = (h.n(), h.m());
        prop_assume!(k <= n);
        let inst = VertexCoverInstance::new(h, k).unwrap();
        let plain = reduce_vc_to_3p3free(&inst).unwrap();
        prop_assert_eq!((plain.lo, plain.hi), value_interval(n, m, k));
        prop_assert_eq!(plain.hi - plain.lo, m);
        prop_assert!(plain.graph.is_connected());
        prop_assert!(is_free(&plain.graph, &Pattern::ThreeP3));
        prop_assert_eq!(GadgetOutput::parse(&plain.to_text()).unwrap(), plain.clone());

        let bip = reduce_vc_to_bipartite(&inst).unwrap();
        prop_assert!(bip.graph.is_bipartite());
        prop_assert_eq!(bip.graph.n(), 2 * plain.graph.n());
        prop_assert_eq!(bip.graph.m(), 2 * plain.graph.m() + plain.graph.n());
        prop_assert_eq!((bip.lo, bip.hi), (2 * plain.lo, 2 * plain.hi));
    }
}
