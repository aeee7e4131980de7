//! Cross-module invariants: switching/parity laws, oracle agreement,
//! certificate re-verification, hemisphere partitions, and component
//! computations against brute force.

use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sgcolor::campaigns::random_signed_graph;
use sgcolor::families::{self, SignedSubset};
use sgcolor::graph::{Balance, Sign, SignedGraph};
use sgcolor::{solver, topo};

fn arb_signed_graph() -> impl Strategy<Value = SignedGraph> {
    (1usize..=8).prop_flat_map(|n| {
        let edge = (0..n, 0..n, any::<bool>());
        proptest::collection::vec(edge, 0..=3 * n).prop_map(move |raw| {
            let edges = raw.into_iter().filter(|&(u, v, _)| u != v).map(|(u, v, s)| {
                (u, v, if s { Sign::Plus } else { Sign::Minus })
            });
            SignedGraph::from_edges(n, edges).expect("ids in range, no loops")
        })
    })
}

fn arb_subset_pair() -> impl Strategy<Value = (SignedSubset, SignedSubset)> {
    (1usize..=6).prop_flat_map(|n| {
        let entry = prop_oneof![Just(-1i8), Just(0i8), Just(1i8)];
        let vec1 = proptest::collection::vec(entry.clone(), n);
        let vec2 = proptest::collection::vec(entry, n);
        (vec1, vec2).prop_map(|(a, b)| {
            (
                SignedSubset::from_entries(a).unwrap(),
                SignedSubset::from_entries(b).unwrap(),
            )
        })
    })
}

/// All simple cycles (length >= 2, counting digons) as edge lists.
fn simple_cycles(g: &SignedGraph) -> Vec<Vec<sgcolor::Edge>> {
    let n = g.order();
    let mut cycles = Vec::new();
    // digon 2-cycles
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v, Sign::Plus) && g.has_edge(u, v, Sign::Minus) {
                cycles.push(vec![
                    sgcolor::Edge { u, v, sign: Sign::Plus },
                    sgcolor::Edge { u, v, sign: Sign::Minus },
                ]);
            }
        }
    }
    // vertex-simple cycles of length >= 3, smallest vertex first, direction
    // fixed by second < last, every sign selection of the traversed pairs
    fn extend(
        g: &SignedGraph,
        start: usize,
        path: &mut Vec<usize>,
        cycles: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for next in start + 1..g.order() {
            if path.contains(&next) {
                continue;
            }
            if g.pair_kind(last, next).is_none() {
                continue;
            }
            path.push(next);
            if path.len() >= 3 && g.pair_kind(next, start).is_some() && path[1] < next {
                cycles.push(path.clone());
            }
            extend(g, start, path, cycles);
            path.pop();
        }
    }
    let mut vertex_cycles = Vec::new();
    for start in 0..n {
        let mut path = vec![start];
        extend(g, start, &mut path, &mut vertex_cycles);
    }
    for vc in vertex_cycles {
        // expand each consecutive pair into its available signs
        let mut choices: Vec<Vec<sgcolor::Edge>> = vec![Vec::new()];
        for i in 0..vc.len() {
            let (a, b) = (vc[i], vc[(i + 1) % vc.len()]);
            let mut next = Vec::new();
            for sign in [Sign::Plus, Sign::Minus] {
                if g.has_edge(a, b, sign) {
                    for partial in &choices {
                        let mut c = partial.clone();
                        c.push(sgcolor::Edge { u: a.min(b), v: a.max(b), sign });
                        next.push(c);
                    }
                }
            }
            choices = next;
        }
        cycles.extend(choices);
    }
    cycles
}

fn cycle_sign(edges: &[sgcolor::Edge]) -> Sign {
    edges.iter().fold(Sign::Plus, |acc, e| acc * e.sign)
}

proptest! {
    #[test]
    fn switching_preserves_cycle_parity(
        g in arb_signed_graph(),
        mask in any::<u16>(),
    ) {
        let inside: Vec<bool> = (0..g.order()).map(|v| mask >> v & 1 == 1).collect();
        let x: Vec<usize> = (0..g.order()).filter(|&v| inside[v]).collect();
        let switched = g.switch(&x).unwrap();
        // map each cycle edge through the switching: sign flips iff the cut
        // separates the endpoints; the image must exist and keep the parity
        for cycle in simple_cycles(&g) {
            let image: Vec<sgcolor::Edge> = cycle
                .iter()
                .map(|e| {
                    let sign = if inside[e.u] != inside[e.v] { -e.sign } else { e.sign };
                    sgcolor::Edge { sign, ..*e }
                })
                .collect();
            for e in &image {
                prop_assert!(switched.has_edge(e.u, e.v, e.sign));
            }
            prop_assert_eq!(cycle_sign(&cycle), cycle_sign(&image));
        }
    }

    #[test]
    fn balance_is_switching_invariant_and_matches_enumeration(
        g in arb_signed_graph(),
    ) {
        let n = g.order();
        // independent oracle: some switching makes every edge positive
        let enumerated = (0u32..1 << n).any(|mask| {
            let x: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            g.switch(&x).unwrap().edges().iter().all(|e| e.sign == Sign::Plus)
        });
        prop_assert_eq!(g.is_balanced().is_balanced(), enumerated);
        // invariance under every switching
        for mask in 0u32..1 << n {
            let x: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            prop_assert_eq!(
                g.switch(&x).unwrap().is_balanced().is_balanced(),
                enumerated
            );
        }
    }

    #[test]
    fn balance_witnesses_check_out(g in arb_signed_graph()) {
        match g.is_balanced() {
            Balance::Balanced { switching } => {
                let fixed = g.switch_by(&switching).unwrap();
                prop_assert!(fixed.edges().iter().all(|e| e.sign == Sign::Plus));
            }
            Balance::Unbalanced { cycle } => {
                prop_assert_eq!(cycle_sign(&cycle), Sign::Minus);
                for e in &cycle {
                    prop_assert!(g.has_edge(e.u, e.v, e.sign));
                }
            }
        }
    }

    #[test]
    fn switching_equivalence_is_an_equivalence(
        g in arb_signed_graph(),
        mask1 in any::<u16>(),
        mask2 in any::<u16>(),
    ) {
        let x: Vec<usize> = (0..g.order()).filter(|&v| mask1 >> v & 1 == 1).collect();
        let y: Vec<usize> = (0..g.order()).filter(|&v| mask2 >> v & 1 == 1).collect();
        let g1 = g.switch(&x).unwrap();
        let g2 = g.switch(&y).unwrap();
        // reflexive
        prop_assert!(g.switching_equivalent(&g).unwrap().is_some());
        // symmetric + transitive across two switchings
        prop_assert!(g.switching_equivalent(&g1).unwrap().is_some());
        prop_assert!(g1.switching_equivalent(&g).unwrap().is_some());
        prop_assert!(g1.switching_equivalent(&g2).unwrap().is_some());
    }

    #[test]
    fn accepted_colorings_have_valid_witnesses(
        g in arb_signed_graph(),
        colors_seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(colors_seed);
        let colors: Vec<usize> = (0..g.order()).map(|_| rng.random_range(0..3)).collect();
        if let sgcolor::graph::ColoringCheck::Accepted(bc) =
            g.verify_balanced_coloring(&colors).unwrap()
        {
            for e in g.edges() {
                if bc.colors[e.u] == bc.colors[e.v] {
                    prop_assert_eq!(bc.witness[e.u] * bc.witness[e.v] * e.sign, Sign::Plus);
                }
            }
        }
    }

    #[test]
    fn subset_adjacency_is_symmetric((a, b) in arb_subset_pair()) {
        if a != b && a.k() >= 1 && b.k() >= 1 {
            let ab = families::adjacency(&a, &b).unwrap();
            let ba = families::adjacency(&b, &a).unwrap();
            prop_assert_eq!(ab, ba);
        }
    }

    #[test]
    fn dimacs_round_trip(g in arb_signed_graph()) {
        let text = sgcolor::dimacs::to_string(&g);
        let back = sgcolor::dimacs::read_signed(std::io::Cursor::new(text.clone())).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(sgcolor::dimacs::to_string(&back), text);
    }
}

#[test]
fn replacing_a_hat_vertex_by_its_negation_is_a_switching() {
    // rebuilding the adjacency at one slot with -A equals switching at A
    for n in 1..=4usize {
        for k in 1..=n {
            let fam = families::kneser_signed_hat(n, k).unwrap();
            for pos in 0..fam.vertices.len() {
                let mut vertices = fam.vertices.clone();
                vertices[pos] = vertices[pos].negate();
                let mut edges = Vec::new();
                for i in 0..vertices.len() {
                    for j in i + 1..vertices.len() {
                        let kind = families::adjacency(&vertices[i], &vertices[j]).unwrap();
                        if kind.positive {
                            edges.push((i, j, Sign::Plus));
                        }
                        if kind.negative {
                            edges.push((i, j, Sign::Minus));
                        }
                    }
                }
                let variant = SignedGraph::from_edges(vertices.len(), edges).unwrap();
                let switched = fam.graph.switch(&[pos]).unwrap();
                assert_eq!(variant.edges(), switched.edges(), "n={n} k={k} pos={pos}");
            }
        }
    }
}

#[test]
fn hat_restriction_preserves_chi_b() {
    for n in 1..=4usize {
        for k in 1..=n {
            let full = families::kneser_signed(n, k).unwrap();
            let hat = families::kneser_signed_hat(n, k).unwrap();
            let a = solver::chi_b_exact(&full.graph, None, None).unwrap().value;
            let b = solver::chi_b_exact(&hat.graph, None, None).unwrap().value;
            assert_eq!(a, b, "chi_b(KS({n},{k})) vs hat");
            assert_eq!(a, n - k + 1);
        }
    }
}

#[test]
fn schrijver_vertices_are_exactly_the_alternating_ones() {
    for n in 1..=6usize {
        for k in 1..=n {
            let all = families::signed_subsets(n, k).unwrap();
            let ss = families::schrijver_signed(n, k).unwrap();
            let expected: Vec<_> = all.iter().filter(|s| s.is_alternating()).collect();
            assert_eq!(ss.vertices.len(), expected.len());
            for (got, want) in ss.vertices.iter().zip(expected) {
                assert_eq!(got, want);
            }
        }
    }
}

#[test]
fn solver_oracles_agree_on_seeded_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for round in 0..60 {
        let n = rng.random_range(2..=8);
        let g = random_signed_graph(n, &mut rng);
        let exact = solver::chi_b_exact(&g, None, None).unwrap();
        let brute = solver::chi_b_brute_force(&g).unwrap();
        let via = solver::chi_b_via_switchings(&g).unwrap();
        assert_eq!(exact.value, brute, "round {round}");
        assert_eq!(exact.value, via, "round {round}");
        // every certificate re-verifies
        assert!(g
            .verify_balanced_coloring(&exact.coloring.colors)
            .unwrap()
            .is_accepted());
        assert_eq!(exact.coloring.class_count(), exact.value);
    }
}

#[test]
fn chi_b_is_switching_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xabcd);
    for _ in 0..40 {
        let n = rng.random_range(2..=9);
        let g = random_signed_graph(n, &mut rng);
        let base = solver::chi_b_exact(&g, None, None).unwrap().value;
        for _ in 0..3 {
            let x: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
            let s = g.switch(&x).unwrap();
            assert_eq!(solver::chi_b_exact(&s, None, None).unwrap().value, base);
        }
    }
}

#[test]
fn deleting_a_vertex_never_increases_chi_b() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7777);
    for _ in 0..30 {
        let n = rng.random_range(2..=8);
        let g = random_signed_graph(n, &mut rng);
        let whole = solver::chi_b_exact(&g, None, None).unwrap().value;
        for v in 0..n {
            let sub = g.delete_vertex(v).unwrap();
            let dropped = solver::chi_b_exact(&sub, None, None).unwrap().value;
            assert!(dropped <= whole);
            assert!(dropped + 1 >= whole);
        }
    }
}

#[test]
fn proposition_14_on_sampled_small_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1414);
    for _ in 0..40 {
        let n = rng.random_range(2..=7);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = sgcolor::Graph::from_edges(n, edges).unwrap();
        let chi = solver::chi_exact(&g, None).unwrap().value;
        let neg = solver::chi_b_exact(&families::all_negative(&g), None, None).unwrap().value;
        let pm = solver::chi_b_exact(&families::plus_minus(&g), None, None).unwrap().value;
        assert_eq!(neg, chi.div_ceil(2));
        assert_eq!(pm, chi);
    }
}

#[test]
fn hemisphere_members_partition_without_boundary_flags() {
    let emb = topo::moment_embedding(6, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e11);
    for _ in 0..200 {
        let mut a: Vec<f64> = (0..4).map(|_| rng.random_range(-1.0..1.0)).collect();
        let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-3 {
            continue;
        }
        for x in &mut a {
            *x /= norm;
        }
        let h = topo::hemisphere_members(&emb, &a);
        let hn = topo::hemisphere_members(&emb, &a.iter().map(|x| -x).collect::<Vec<_>>());
        if h.boundary.is_empty() && hn.boundary.is_empty() {
            let mut all: Vec<i32> = h.members.iter().chain(&hn.members).copied().collect();
            all.sort_by_key(|&i| (i.abs(), i));
            let expected: Vec<i32> = (1..=6).flat_map(|m| [-m, m]).collect();
            assert_eq!(all, expected);
        }
    }
}

#[test]
fn hemisphere_search_never_absent_on_sampled_directions() {
    let mut failures = 0;
    for (n, k) in [(4usize, 2usize), (5, 3), (6, 3), (8, 5)] {
        let emb = topo::moment_embedding(n, k).unwrap();
        let sets = topo::alternating_sets(n, k).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0x6a1e + n as u64);
        for _ in 0..1000 {
            let mut a: Vec<f64> = (0..=(n - k + 1)).map(|_| rng.random_range(-1.0..1.0)).collect();
            let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm < 1e-3 {
                continue;
            }
            for x in &mut a {
                *x /= norm;
            }
            match topo::find_alternating_cached(&emb, &sets, &a) {
                topo::HemisphereSearch::Found(s) => {
                    assert!(s.is_alternating());
                    assert_eq!(s.k(), k);
                }
                topo::HemisphereSearch::Absent => failures += 1,
                topo::HemisphereSearch::BoundaryRetry => {}
            }
        }
    }
    assert_eq!(failures, 0);
}

#[test]
fn antipodal_components_match_transitive_closure() {
    let disc = topo::borsuk_discretization(2, 0.5, 120, 99).unwrap();
    let n = disc.points.len();
    assert!(n <= 500);
    let all: Vec<usize> = (0..n).collect();
    // brute-force positive reachability
    let mut reach = vec![vec![false; n]; n];
    for i in 0..n {
        reach[i][i] = true;
    }
    for e in disc.graph.edges() {
        if e.sign == Sign::Plus {
            reach[e.u][e.v] = true;
            reach[e.v][e.u] = true;
        }
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    let brute = (0..n).find(|&i| reach[i][disc.antipode[i]]);
    let witness = topo::antipodal_connectivity(&disc, &[all]).unwrap();
    match (brute, witness) {
        (Some(_), Some(w)) => {
            // the witness path must realize positive reachability
            for pair in w.path.windows(2) {
                assert!(disc.graph.has_edge(pair[0], pair[1], Sign::Plus));
            }
        }
        (None, None) => {}
        (b, w) => panic!("disagreement: brute={b:?} union-find={}", w.is_some()),
    }
}
