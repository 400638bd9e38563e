//! The co-star construction: assign every vertex its incident
//! non-edges. Two vertices are adjacent exactly when those sets are
//! disjoint, so every graph has a Kneser representation.

use setrep::{co_star, verify, Graph, Mode};

fn show(name: &str, g: &Graph) -> setrep::Result<()> {
    let (rep, rank) = co_star(g);
    let report = verify(&rep, g, Mode::Kneser, rank)?;
    println!(
        "{name}: n={}, rank {rank}, ground set {} elements, verify: {}",
        g.n(),
        rep.ground_size(),
        if report.valid { "ok" } else { "FAILED" }
    );
    Ok(())
}

fn main() -> setrep::Result<()> {
    show("C5", &Graph::cycle(5))?;
    show("Petersen", &Graph::petersen())?;
    show("K6", &Graph::complete(6))?;
    show("star K_{1,5}", &Graph::star(6))?;
    show("empty on 4", &Graph::empty(4))?;

    // The sets of C5's representation, spelled out. Vertex v receives
    // one element per complement edge at v, all of size n-1-deg = 2.
    let g = Graph::cycle(5);
    let (rep, rank) = co_star(&g);
    println!("\nC5 co-star sets (rank {rank}):");
    for v in 0..rep.n() {
        println!("  A_{v} = {:?}", rep.set(v));
    }

    // co_star is a worst-case construction; the solvers usually do
    // better. For C5 the optimum rank is 2, not 3.
    let best = setrep::exact_f_kn(&g)?;
    println!("co-star rank {rank} vs optimal rank {}", best.value);
    Ok(())
}
