//! Edge clique covers and thickness: greedy strategies on a random
//! graph, the degree lower bound, and exact optima on small graphs.

use setrep::{
    chromatic_index_greedy, exact_theta0, exact_theta0_prime, gen_gnp, greedy_cover,
    theta0_lower_bound, thickness, validate_cover, Graph, GreedyStrategy, Seed,
};

fn main() -> setrep::Result<()> {
    let seed = Seed::new(7);
    let g = gen_gnp(128, 0.5, &seed.child(0))?;
    println!(
        "G(128, 0.5): {} edges, lower bound on thickness = {}",
        g.edge_count(),
        theta0_lower_bound(&g)
    );

    for strategy in [
        GreedyStrategy::EdgeGreedy,
        GreedyStrategy::VertexGreedy,
        GreedyStrategy::RandomOrder,
    ] {
        let cover = greedy_cover(&g, strategy, &seed.child(1));
        let report = validate_cover(&g, &cover);
        assert!(report.valid);
        let coloring = chromatic_index_greedy(&cover);
        println!(
            "  {strategy:>13}: {} cliques, thickness {}, {} vertex-disjoint classes",
            cover.len(),
            thickness(&cover),
            coloring.classes
        );
    }

    // Exact thickness for small graphs, with a witness cover.
    println!();
    for (name, g) in [
        ("K6", Graph::complete(6)),
        ("C5", Graph::cycle(5)),
        ("Petersen", Graph::petersen()),
        ("star K_{1,5}", Graph::star(6)),
    ] {
        let sol = exact_theta0(&g)?;
        println!(
            "theta0({name}) = {} ({} search nodes), witness: {:?}",
            sol.value,
            sol.nodes,
            sol.cover.cliques()
        );
    }

    // theta0' asks for the cover to split into vertex-disjoint groups;
    // it is never smaller than theta0.
    let c5 = Graph::cycle(5);
    let t0 = exact_theta0(&c5)?.value;
    let t0p = exact_theta0_prime(&c5)?.value;
    println!("\nC5: theta0 = {t0}, theta0' = {t0p}");
    Ok(())
}
