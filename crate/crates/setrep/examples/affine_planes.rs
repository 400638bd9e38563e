//! Finite affine planes AG(2,q) as linear spaces, restriction to a
//! point subset, and covering a graph line by line.

use setrep::{
    affine_plane, gen_gnp, linear_space_cover, linear_space_for, restrict_to_points, thickness,
    validate_cover, validate_linear_space, GreedyStrategy, Seed,
};

fn main() -> setrep::Result<()> {
    // AG(2,q): q^2 points, q^2 + q lines of q points each, every point
    // on q + 1 lines, every pair of points on exactly one line.
    for q in [2, 3, 5, 7] {
        let plane = affine_plane(q)?;
        let stats = plane.stats();
        let report = validate_linear_space(&plane);
        println!(
            "AG(2,{q}): {} points, {} lines, line size {}, point degree {}, valid: {}",
            stats.points, stats.lines, stats.max_line_size, stats.max_point_degree, report.valid
        );
    }

    // Dropping points keeps the two axioms: traces of length >= 2
    // survive, and any pair left uncovered gets its own 2-point line.
    let plane = affine_plane(3)?;
    let sub = restrict_to_points(&plane, &[0, 1, 3, 4, 8])?;
    println!(
        "\nAG(2,3) restricted to 5 points: {} lines, valid: {}",
        sub.lines().len(),
        validate_linear_space(&sub).valid
    );
    for line in sub.lines() {
        println!("  line {line:?}");
    }

    // linear_space_for picks the smallest plane that fits n points and
    // samples the embedding; covering each line's induced subgraph
    // separately caps how unevenly cliques can pile on one vertex.
    let seed = Seed::new(11);
    let g = gen_gnp(100, 0.5, &seed.child(0))?;
    let ls = linear_space_for(g.n(), &seed.child(1))?;
    let cover = linear_space_cover(&g, &ls, GreedyStrategy::EdgeGreedy, &seed.child(2))?;
    assert!(validate_cover(&g, &cover).valid);
    println!(
        "\nG(100, 0.5) covered over a {}-line space: {} cliques, thickness {}",
        ls.lines().len(),
        cover.len(),
        thickness(&cover)
    );
    Ok(())
}
