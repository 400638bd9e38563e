//! Encoding a bipartite min-difference representation as two
//! permutations plus two bit matrices, and decoding the graph back.
//! The encoding is what makes counting arguments work: after sorting
//! the sets by size, consecutive rows differ in few positions.

use setrep::{
    decode_bipartite, encode_bipartite, gen_gnnp, greedy_cover, kneser_from_cover, reduce, verify,
    BipartiteGraph, GreedyStrategy, Mode, Seed, SetRepresentation,
};

fn main() -> setrep::Result<()> {
    // Hand-built: sets for the two sides over a shared ground set.
    // Within a side the sets are nested, so same-side differences stay
    // one-sided and below the threshold.
    let k = 2;
    let rep_a = SetRepresentation::new(6, vec![vec![0], vec![0, 1], vec![0, 1, 2]])?;
    let rep_b = SetRepresentation::new(6, vec![vec![3], vec![3, 4], vec![3, 4, 5]])?;

    let enc = encode_bipartite(&rep_a, &rep_b)?;
    println!(
        "encoded: {} vertices a side, ground set {}, permutations {:?} / {:?}",
        enc.n(),
        enc.ground_size(),
        enc.pi,
        enc.rho
    );
    println!("P1 (sorted row sums): {}", enc.p1_holds());
    println!("P2 (consecutive rows differ by < k): {}", enc.p2_holds(k));

    let decoded = decode_bipartite(&enc, k)?;
    println!("decoded bipartite edges: {:?}", decoded.edges());

    // Round-trip on random instances: build a min-difference
    // representation of each bipartite graph, reduce it, encode, and
    // decode the graph back.
    let seed = Seed::new(77);
    let mut checked = 0;
    for trial in 0..20 {
        let b = gen_gnnp(4, 0.4, &seed.child(trial))?;
        let (rep, k) = min_rep_for(&b, &seed.child(100 + trial))?;
        let n = b.side_size();
        let rep_a = SetRepresentation::new(
            rep.ground_size(),
            (0..n).map(|v| rep.set(v).to_vec()).collect(),
        )?;
        let rep_b = SetRepresentation::new(
            rep.ground_size(),
            (n..2 * n).map(|v| rep.set(v).to_vec()).collect(),
        )?;
        let enc = encode_bipartite(&rep_a, &rep_b)?;
        assert!(enc.p1_holds() && enc.p2_holds(k));
        let back = decode_bipartite(&enc, k)?;
        assert_eq!(back.edges(), b.edges());
        checked += 1;
    }
    println!("\n{checked} random 4+4 instances round-tripped exactly");
    Ok(())
}

/// A reduced min-k representation of the flattened bipartite graph. A
/// rank-k Kneser representation is one for free: with all sets of size
/// k, both one-sided differences equal k minus the overlap, so the
/// min-difference threshold is crossed exactly on disjoint pairs.
fn min_rep_for(b: &BipartiteGraph, seed: &Seed) -> setrep::Result<(SetRepresentation, usize)> {
    let g = b.flatten();
    let comp = g.complement();
    let cover = greedy_cover(&comp, GreedyStrategy::EdgeGreedy, seed);
    let (rep, k) = kneser_from_cover(&comp, &cover)?;
    let rep = reduce(&rep, Mode::Min, k)?;
    debug_assert!(verify(&rep, &g, Mode::Min, k)?.valid);
    Ok((rep, k))
}
