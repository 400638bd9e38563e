//! Seeded random graphs: G(n,p), bipartite G(n,n,p), and the seed
//! derivation scheme that makes parallel experiments reproducible.

use setrep::{gen_gnnp, gen_gnp, Seed};

fn main() -> setrep::Result<()> {
    let seed = Seed::new(2024);

    let g = gen_gnp(64, 0.3, &seed.child(0))?;
    let stats = g.degree_stats();
    println!(
        "G(64, 0.3): {} edges (expectation {:.0}), degrees in [{}, {}], diameter {}",
        stats.edge_count,
        0.3 * (64.0 * 63.0 / 2.0),
        stats.min_degree,
        stats.max_degree,
        g.diameter()
    );

    // The same (master, path) always gives the same graph...
    let again = gen_gnp(64, 0.3, &seed.child(0))?;
    assert_eq!(g.edges(), again.edges());
    // ...and sibling paths give independent ones.
    let sibling = gen_gnp(64, 0.3, &seed.child(1))?;
    println!(
        "child(0) == child(0): {} edges both times; child(1) differs: {} edges",
        g.edge_count(),
        sibling.edge_count()
    );

    // Deeper paths are how the experiment harness keys its cells: one
    // sub-stream per (kind, n, trial), stable no matter the schedule.
    for trial in 0..3u64 {
        let cell = gen_gnp(32, 0.5, &seed.descend(&[1, 32, trial]))?;
        println!("cell (n=32, trial={trial}): {} edges", cell.edge_count());
    }

    let b = gen_gnnp(16, 0.25, &seed.child(2))?;
    println!(
        "G(16, 16, 0.25): {} of {} possible cross edges",
        b.edge_count(),
        16 * 16
    );

    // Complementation swaps edges and non-edges.
    let c = g.complement();
    assert_eq!(c.edge_count(), 64 * 63 / 2 - g.edge_count());
    assert_eq!(c.complement().edges(), g.edges());
    println!("complement has {} edges; double complement is identity", c.edge_count());
    Ok(())
}
