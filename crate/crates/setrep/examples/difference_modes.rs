//! Min-, max-, and average-difference representations. An edge asks the
//! one-sided set differences |A\B|, |B\A| to be large; the three modes
//! aggregate the two numbers differently, and the minimum feasible k
//! differs sharply between them.

use setrep::{decide_difference_rep, exact_f_mode, CapSchedule, Graph, Mode};

fn main() -> setrep::Result<()> {
    // Matchings tell the modes apart: f_min(tK2) stays 1 forever, while
    // f_max(tK2) grows like log t. (The exact solver handles up to 5
    // vertices, which covers t = 1, 2.)
    for t in 1..=2 {
        let g = Graph::matching(t);
        let fmin = exact_f_mode(&g, Mode::Min, CapSchedule::Default)?;
        let fmax = exact_f_mode(&g, Mode::Max, CapSchedule::Default)?;
        println!("{t}K2: f_min = {}, f_max = {}", fmin.value, fmax.value);
    }

    // A witness for 2K2 at min-difference rank 1: opposite ends of each
    // edge differ one way, non-adjacent vertices are nested or equal.
    let g = Graph::matching(2);
    let r = exact_f_mode(&g, Mode::Min, CapSchedule::Default)?;
    let rep = r.witness.representation().unwrap();
    println!("\n2K2 min-witness (k = {}):", r.value);
    for v in 0..rep.n() {
        println!("  A_{v} = {:?}", rep.set(v));
    }

    // All three modes on a handful of named graphs.
    println!();
    for (name, g) in [
        ("C5", Graph::cycle(5)),
        ("K4", Graph::complete(4)),
        ("P4", Graph::path(4)),
        ("K_{1,4}", Graph::star(5)),
    ] {
        let fmin = exact_f_mode(&g, Mode::Min, CapSchedule::Default)?.value;
        let favg = exact_f_mode(&g, Mode::Avg, CapSchedule::Default)?.value;
        let fmax = exact_f_mode(&g, Mode::Max, CapSchedule::Default)?.value;
        let fkn = setrep::exact_f_kn(&g)?.value;
        assert!(fmin <= fkn && favg <= fkn && fmax <= fkn);
        println!("{name}: f_min = {fmin}, f_avg = {favg}, f_max = {fmax}, f_Kn = {fkn}");
    }

    // The underlying decision procedure is also public: is there a
    // 2-max-difference representation of C5 using each vertex pattern
    // at most twice?
    let d = decide_difference_rep(&Graph::cycle(5), Mode::Max, 2, 2)?;
    println!(
        "\nC5 max-difference at k=2, cap 2: {} ({} nodes)",
        if d.witness.is_some() { "representable" } else { "no witness" },
        d.nodes
    );

    // Starving the searcher of multiplicity can cost exactness: the
    // result below is still refuted correctly, but the solver flags
    // that a cap this small cannot rule out larger multiplicities.
    let starved = exact_f_mode(&Graph::cycle(5), Mode::Avg, CapSchedule::Fixed(1))?;
    let full = exact_f_mode(&Graph::cycle(5), Mode::Avg, CapSchedule::Default)?;
    println!(
        "C5 avg: cap 1 gives value {} (exact: {}), full schedule gives {} (exact: {})",
        starved.value, starved.exact, full.value, full.exact
    );
    Ok(())
}
