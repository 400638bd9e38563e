//! Property tests over randomly generated graphs and representations.

use proptest::prelude::*;
use setrep::{
    atoms, chromatic_index_greedy, co_star, exact_f_kn, exact_theta0, gen_gnp, greedy_cover,
    induced_graph, kneser_from_cover, parse_csv, reduce, restrict_to_points, rows_to_csv,
    theta0_lower_bound, thickness, validate_cover, validate_linear_space, verify, Diameter,
    ExperimentRow, Graph, GreedyStrategy, Mode, Seed, SetRepresentation,
};

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << bits)).prop_map(|(n, mask)| graph_from_mask(n, mask))
    })
}

fn arb_rep(max_n: usize, max_ground: usize) -> impl Strategy<Value = SetRepresentation> {
    (1..=max_n, 1..=max_ground).prop_flat_map(|(n, s)| {
        proptest::collection::vec(proptest::collection::btree_set(0..s as u32, 0..=s), n)
            .prop_map(move |sets| {
                SetRepresentation::new(s, sets.into_iter().map(|b| b.into_iter().collect()).collect())
                    .unwrap()
            })
    })
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in arb_graph(6)) {
        let c = g.complement();
        prop_assert_eq!(c.complement().edges(), g.edges());
        let n = g.n();
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * (n - 1) / 2);
        if n >= 1 {
            let gs = g.degree_stats();
            let cs = c.degree_stats();
            prop_assert_eq!(cs.max_degree, n - 1 - gs.min_degree);
            prop_assert_eq!(cs.min_degree, n - 1 - gs.max_degree);
        }
    }

    #[test]
    fn diameter_one_exactly_on_complete_graphs(g in arb_graph(6)) {
        if g.n() >= 2 {
            prop_assert_eq!(g.diameter() == Diameter::Finite(1), g.is_complete());
        }
    }

    #[test]
    fn max_clique_is_a_maximal_clique(g in arb_graph(7)) {
        let clique = setrep::clique::max_clique(&g);
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                prop_assert!(g.has_edge(u, v));
            }
        }
        // no vertex extends it
        for w in 0..g.n() {
            if clique.contains(&w) {
                continue;
            }
            prop_assert!(!clique.iter().all(|&u| g.has_edge(u, w)));
        }
    }

    #[test]
    fn co_star_always_verifies(g in arb_graph(7)) {
        let (rep, rank) = co_star(&g);
        prop_assert!(verify(&rep, &g, Mode::Kneser, rank).unwrap().valid);
    }

    #[test]
    fn verify_accepts_the_induced_graph(
        rep in arb_rep(6, 8),
        mode in prop_oneof![Just(Mode::Min), Just(Mode::Max), Just(Mode::Avg)],
        k in 1usize..=3,
    ) {
        let g = induced_graph(&rep, mode, k).unwrap();
        prop_assert!(verify(&rep, &g, mode, k).unwrap().valid);
    }

    #[test]
    fn reduce_preserves_the_graph_and_leaves_no_slack(
        rep in arb_rep(5, 7),
        mode in prop_oneof![Just(Mode::Min), Just(Mode::Max), Just(Mode::Avg)],
        k in 1usize..=3,
    ) {
        let g = induced_graph(&rep, mode, k).unwrap();
        let red = reduce(&rep, mode, k).unwrap();
        prop_assert_eq!(induced_graph(&red, mode, k).unwrap(), g.clone());
        prop_assert!(red.union_size() <= rep.union_size());
        // minimality: deleting any single surviving element changes the graph
        let s = red.ground_size();
        for x in 0..s as u32 {
            let sets: Vec<Vec<u32>> = red
                .sets()
                .iter()
                .map(|set| set.iter().copied().filter(|&y| y != x).collect())
                .collect();
            if sets.iter().zip(red.sets()).all(|(a, b)| a.len() == b.len()) {
                continue; // x appears nowhere
            }
            let smaller = SetRepresentation::new(s, sets).unwrap();
            prop_assert_ne!(induced_graph(&smaller, mode, k).unwrap(), g.clone());
        }
    }

    #[test]
    fn atoms_partition_the_used_elements(rep in arb_rep(6, 9)) {
        let partition = atoms(&rep);
        let mut seen = vec![false; rep.ground_size()];
        for atom in &partition.atoms {
            prop_assert!(!atom.pattern.is_empty());
            prop_assert!(!atom.elements.is_empty());
            for &x in &atom.elements {
                prop_assert!(!seen[x as usize], "element in two atoms");
                seen[x as usize] = true;
                // membership pattern matches exactly
                for v in 0..rep.n() {
                    prop_assert_eq!(
                        rep.set(v).contains(&x),
                        atom.pattern.contains(&v)
                    );
                }
            }
        }
        for x in 0..rep.ground_size() as u32 {
            let used = (0..rep.n()).any(|v| rep.set(v).contains(&x));
            prop_assert_eq!(used, seen[x as usize]);
        }
        // patterns pairwise distinct (atoms are maximal)
        for (i, a) in partition.atoms.iter().enumerate() {
            for b in &partition.atoms[i + 1..] {
                prop_assert_ne!(&a.pattern, &b.pattern);
            }
        }
    }

    #[test]
    fn greedy_covers_validate_and_respect_the_lower_bound(
        g in arb_graph(7),
        strategy in prop_oneof![
            Just(GreedyStrategy::EdgeGreedy),
            Just(GreedyStrategy::VertexGreedy),
            Just(GreedyStrategy::RandomOrder),
        ],
        seed in 0u64..1000,
    ) {
        let cover = greedy_cover(&g, strategy, &Seed::new(seed));
        prop_assert!(validate_cover(&g, &cover).valid);
        prop_assert!(thickness(&cover) >= theta0_lower_bound(&g));
        // determinism
        let again = greedy_cover(&g, strategy, &Seed::new(seed));
        prop_assert_eq!(cover.cliques(), again.cliques());
    }

    #[test]
    fn chromatic_classes_are_vertex_disjoint(g in arb_graph(7), seed in 0u64..500) {
        let cover = greedy_cover(&g, GreedyStrategy::RandomOrder, &Seed::new(seed));
        let coloring = chromatic_index_greedy(&cover);
        prop_assert_eq!(coloring.assignment.len(), cover.len());
        for class in 0..coloring.classes {
            let mut used = vec![false; g.n()];
            for (i, clique) in cover.cliques().iter().enumerate() {
                if coloring.assignment[i] != class {
                    continue;
                }
                for &v in clique {
                    prop_assert!(!used[v as usize], "class {class} reuses vertex {v}");
                    used[v as usize] = true;
                }
            }
        }
    }

    #[test]
    fn cover_derived_kneser_representations_verify(g in arb_graph(6), seed in 0u64..500) {
        let comp = g.complement();
        let cover = greedy_cover(&comp, GreedyStrategy::EdgeGreedy, &Seed::new(seed));
        let (rep, rank) = kneser_from_cover(&comp, &cover).unwrap();
        prop_assert_eq!(rank, thickness(&cover) + 1);
        prop_assert!(verify(&rep, &g, Mode::Kneser, rank).unwrap().valid);
    }

    #[test]
    fn exact_theta0_is_sandwiched_by_bounds(g in arb_graph(5)) {
        let sol = exact_theta0(&g).unwrap();
        prop_assert!(sol.value >= theta0_lower_bound(&g));
        for strategy in [GreedyStrategy::EdgeGreedy, GreedyStrategy::VertexGreedy] {
            let greedy = greedy_cover(&g, strategy, &Seed::new(1));
            prop_assert!(sol.value <= thickness(&greedy));
        }
        prop_assert!(validate_cover(&g, &sol.cover).valid);
        prop_assert_eq!(thickness(&sol.cover), sol.value);
    }

    #[test]
    fn kneser_rank_sits_in_the_cover_sandwich(g in arb_graph(5)) {
        let t = exact_theta0(&g.complement()).unwrap().value;
        let f = exact_f_kn(&g).unwrap();
        prop_assert!(t <= f.value && f.value <= t + 1);
        let rep = f.witness.representation().unwrap();
        prop_assert!(verify(rep, &g, Mode::Kneser, f.value).unwrap().valid);
    }

    #[test]
    fn plane_restrictions_stay_linear_spaces(
        q in prop_oneof![Just(2usize), Just(3), Just(5)],
        mask in 1u64..,
    ) {
        let plane = setrep::affine_plane(q).unwrap();
        let keep: Vec<usize> = (0..q * q).filter(|&p| mask >> (p % 64) & 1 == 1).collect();
        prop_assume!(!keep.is_empty());
        let sub = restrict_to_points(&plane, &keep).unwrap();
        prop_assert_eq!(sub.points(), keep.len());
        prop_assert!(validate_linear_space(&sub).valid);
    }

    #[test]
    fn csv_emission_round_trips(
        rows in proptest::collection::vec(
            (1usize..5000, 0usize..10, 0u32..10_000, 0u32..10_000, any::<bool>()),
            0..40,
        )
    ) {
        let rows: Vec<ExperimentRow> = rows
            .into_iter()
            .map(|(n, trial, upper, lower, exact)| ExperimentRow {
                n,
                p: 0.5,
                trial,
                strategy: "direct_edge_greedy".into(),
                theta0_upper: upper as usize,
                theta0_lower: lower as usize,
                fkn_upper: upper as usize + 1,
                ratio_upper: upper as f64 * (n as f64).ln() / n as f64,
                ratio_lower: lower as f64 * (n as f64).ln() / n as f64,
                omega_exact: exact,
                wall_ms: 0,
            })
            .collect();
        let parsed = parse_csv(&rows_to_csv(&rows)).unwrap();
        prop_assert_eq!(parsed, rows);
    }

    #[test]
    fn gnp_is_deterministic_and_in_range(n in 0usize..40, master in any::<u64>()) {
        let a = gen_gnp(n, 0.5, &Seed::new(master)).unwrap();
        let b = gen_gnp(n, 0.5, &Seed::new(master)).unwrap();
        prop_assert_eq!(a.edges(), b.edges());
        prop_assert!(a.edge_count() <= n * n.saturating_sub(1) / 2);
    }
}
