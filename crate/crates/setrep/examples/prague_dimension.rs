//! Prague dimension: the least number of proper colorings such that
//! edges disagree in every coordinate, non-edges agree in some
//! coordinate, and the color vectors are distinct. It sandwiches
//! between the cover chromatic index of the complement:
//! theta0'(comp G) <= f_Pra(G) <= theta0'(comp G) + 1.

use setrep::{exact_f_kn, exact_prague, exact_theta0_prime, gen_gnp, prague_valid, Graph, Seed};

fn main() -> setrep::Result<()> {
    for (name, g) in [
        ("K5", Graph::complete(5)),
        ("empty on 3", Graph::empty(3)),
        ("C5", Graph::cycle(5)),
        ("P4", Graph::path(4)),
        ("2K2", Graph::matching(2)),
    ] {
        let r = exact_prague(&g)?;
        let colorings = r.witness.colorings().expect("prague witness is colorings");
        assert!(prague_valid(&g, colorings));
        println!("f_Pra({name}) = {} with colorings {:?}", r.value, colorings);
    }

    // The sandwich, on random 5-vertex graphs.
    println!();
    let seed = Seed::new(4);
    for trial in 0..6 {
        let g = gen_gnp(5, 0.5, &seed.child(trial))?;
        let t = exact_theta0_prime(&g.complement())?.value;
        let f = exact_prague(&g)?.value;
        assert!(t <= f && f <= t + 1, "sandwich failed: {t} vs {f}");
        println!("trial {trial}: theta0'(comp) = {t}, f_Pra = {f}");
    }

    // The Kneser rank never exceeds the Prague dimension: a family of t
    // colorings turns into sets {(coordinate, color)} of uniform size t
    // that are disjoint exactly on edges.
    println!();
    let g = Graph::cycle(5);
    let fkn = exact_f_kn(&g)?.value;
    let fpra = exact_prague(&g)?.value;
    println!("C5: f_Kn = {fkn} <= f_Pra = {fpra}");
    Ok(())
}
