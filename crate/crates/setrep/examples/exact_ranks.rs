//! Exact Kneser ranks, and how they sandwich between thickness values
//! of the complement: theta0(comp G) <= f_Kn(G) <= theta0(comp G) + 1.

use setrep::{exact_f_kn, exact_theta0, gen_gnp, verify, Graph, Mode, Seed};

fn main() -> setrep::Result<()> {
    for (name, g) in [
        ("K5", Graph::complete(5)),
        ("C5", Graph::cycle(5)),
        ("Petersen", Graph::petersen()),
        ("empty on 4", Graph::empty(4)),
        ("path P4", Graph::path(4)),
        ("complement of K_{1,5}", Graph::star(6).complement()),
    ] {
        let r = exact_f_kn(&g)?;
        let rep = r.witness.representation().expect("kneser witness is a representation");
        assert!(verify(rep, &g, Mode::Kneser, r.value)?.valid);
        println!(
            "f_Kn({name}) = {} ({} nodes, ground set {})",
            r.value,
            r.nodes_explored,
            rep.ground_size()
        );
    }

    // The Petersen graph is Kn(5,2): its vertices are the ten 2-subsets
    // of a 5-set, adjacent when disjoint — so rank 2 is no surprise,
    // and the witness is exactly such an assignment.
    let r = exact_f_kn(&Graph::petersen())?;
    let rep = r.witness.representation().unwrap();
    println!("\nPetersen witness sets: {:?}", rep.sets());

    // Sandwich on random graphs.
    println!();
    let seed = Seed::new(30);
    for trial in 0..5 {
        let g = gen_gnp(7, 0.5, &seed.child(trial))?;
        let t = exact_theta0(&g.complement())?.value;
        let f = exact_f_kn(&g)?.value;
        assert!(t <= f && f <= t + 1);
        println!("trial {trial}: theta0(comp) = {t}, f_Kn = {f}");
    }
    Ok(())
}
