//! How evenly does a line-partitioned cover spread cliques over the
//! vertices? Each line contributes cliques only among its own points,
//! so a vertex's thickness is a sum of independent-ish per-line counts
//! and concentrates around its mean — almost no vertex should exceed
//! the Chernoff-style threshold.

use setrep::{
    concentration_report, gen_gnp, linear_space_cover_parts, linear_space_for, GreedyStrategy, Seed,
};

fn main() -> setrep::Result<()> {
    let n = 529; // 23^2: the sampled space is a full affine plane here
    let seed = Seed::new(12);
    let g = gen_gnp(n, 0.5, &seed.child(0))?;
    let ls = linear_space_for(n, &seed.child(1))?;
    let parts = linear_space_cover_parts(&g, &ls, GreedyStrategy::EdgeGreedy, &seed.child(2))?;

    let report = concentration_report(&g, &ls, &parts, None)?;
    let max_x = report.thickness.iter().max().unwrap();
    let mean_x = report.thickness.iter().sum::<usize>() as f64 / n as f64;
    println!(
        "n = {n}: {} lines, longest {} points, mean per-line clique load {:.3}",
        ls.lines().len(),
        report.max_line_size,
        report.mean_line_contribution
    );
    println!(
        "vertex thickness: mean {:.1}, max {max_x}, threshold at v=0 is {:.1}",
        mean_x, report.thresholds[0]
    );
    println!(
        "{} of {n} vertices exceed their threshold (fraction {:.5}, target < {:.5})",
        report.exceed_count,
        report.exceed_fraction,
        1.0 / n as f64
    );
    println!("calibrated constant c = {:.4} (mu = c sqrt(n) / ln n)", report.c);
    assert!(report.exceed_fraction < 1.0 / n as f64 + 1e-12);
    Ok(())
}
