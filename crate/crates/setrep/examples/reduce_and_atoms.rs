//! Reduction strips ground elements that never influence the induced
//! graph; atoms are the maximal blocks of elements with identical
//! membership. Reduced min-difference representations obey strong size
//! bounds: at most 2·e(G)·k ground elements in total, and at most k per
//! atom.

use setrep::{atoms, induced_graph, reduce, verify, Mode, SetRepresentation};

fn main() -> setrep::Result<()> {
    // A deliberately wasteful representation: the padding elements 5, 6
    // appear in every set, so they separate nothing.
    let rep = SetRepresentation::new(
        7,
        vec![
            vec![0, 1, 5, 6],
            vec![2, 3, 5, 6],
            vec![0, 2, 5, 6],
            vec![4, 5, 6],
        ],
    )?;
    let k = 2;
    let g = induced_graph(&rep, Mode::Min, k)?;
    println!("induced graph: {:?}", g.edges());
    println!("before: ground elements used = {}", rep.union_size());

    let reduced = reduce(&rep, Mode::Min, k)?;
    println!("after reduce: ground elements used = {}", reduced.union_size());
    assert!(verify(&reduced, &g, Mode::Min, k)?.valid);
    for v in 0..reduced.n() {
        println!("  A_{v}: {:?} -> {:?}", rep.set(v), reduced.set(v));
    }

    // Atom structure of the reduced representation. Each atom is a
    // membership pattern (which vertices contain it) plus its elements.
    let partition = atoms(&reduced);
    println!("\n{} atoms, largest has {} elements:", partition.len(), partition.max_atom_size());
    for a in &partition.atoms {
        println!("  pattern {:?} holds elements {:?}", a.pattern, a.elements);
    }

    // The size bounds in action.
    let bound = 2 * g.edge_count() * k;
    println!(
        "\n|union of sets| = {} <= 2 e(G) k = {}",
        reduced.union_size(),
        bound
    );
    assert!(reduced.union_size() <= bound);
    assert!(partition.max_atom_size() <= k);
    Ok(())
}
