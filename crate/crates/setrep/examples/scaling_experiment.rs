//! The thickness of greedy clique covers of G(n, 1/2) against the
//! degree lower bound, across a size grid. Both bounds, scaled by
//! ln(n)/n, flatten out as n grows — thickness behaves like a constant
//! times n/log n.

use setrep::{
    best_strategy_ratios, emit_plot, rows_to_csv, run_theta0_scaling, CoverMethod,
    ExperimentConfig, GreedyStrategy, Seed,
};

fn main() -> setrep::Result<()> {
    let mut cfg = ExperimentConfig::new(vec![64, 128, 256, 512], 0.5, 3, Seed::new(1));
    cfg.strategies = vec![
        CoverMethod::Direct(GreedyStrategy::EdgeGreedy),
        CoverMethod::Direct(GreedyStrategy::VertexGreedy),
        CoverMethod::Lines(GreedyStrategy::EdgeGreedy),
    ];

    let rows = run_theta0_scaling(&cfg)?;
    print!("{}", rows_to_csv(&rows));

    println!("\nbest mean ratio_upper per n (lower is better):");
    for (n, ratio) in best_strategy_ratios(&rows) {
        println!("  n = {n:>4}: {ratio:.4}");
    }

    // Identical config and seed reproduce the rows byte for byte.
    let again = run_theta0_scaling(&cfg)?;
    assert_eq!(rows_to_csv(&rows), rows_to_csv(&again));
    println!("\nrerun with the same seed is byte-identical");

    let plot = std::env::temp_dir().join("setrep_scaling.svg");
    emit_plot(&rows, &plot)?;
    println!("chart written to {}", plot.display());
    Ok(())
}
