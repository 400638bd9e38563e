//! Set representations of graphs and the machinery around them:
//! Kneser representations (edges are disjoint pairs), min/max/avg
//! difference representations (edges are pairs whose one-sided set
//! differences are large), Prague colorings, edge clique covers with
//! their thickness, finite affine planes for line-partitioned covers,
//! exact solvers for small graphs, and a deterministic random-graph
//! experiment harness.
//!
//! A quick taste — every graph gets a Kneser representation from the
//! co-star construction, and small graphs can be solved to optimality:
//!
//! ```
//! use setrep::{co_star, exact_f_kn, verify, Graph, Mode};
//!
//! let g = Graph::petersen();
//! let (rep, rank) = co_star(&g);
//! assert!(verify(&rep, &g, Mode::Kneser, rank).unwrap().valid);
//!
//! let best = exact_f_kn(&g).unwrap();
//! assert_eq!(best.value, 2); // the Petersen graph is Kn(5,2)
//! ```
//!
//! The `examples/` directory is the guided tour: `random_graphs`,
//! `costar_and_verify`, `clique_covers`, `exact_ranks`,
//! `difference_modes`, `reduce_and_atoms`, `affine_planes`,
//! `bipartite_encoding`, `prague_dimension`, `scaling_experiment`, and
//! `concentration`. The `setrep` binary exposes the same operations as
//! subcommands (`gen`, `rep`, `cover`, `exact`, `exp`).
//!
//! Everything randomized takes a [`Seed`]; identical seeds give
//! identical results, on any platform and at any thread count.

pub mod bitset;
pub mod clique;
pub mod cli;
pub mod cover;
pub mod encoding;
pub mod error;
pub mod exact_cover;
pub mod experiments;
pub mod graph;
pub mod io;
pub mod linear_space;
pub mod rep;
pub mod seed;
pub mod solvers;

pub use cover::{
    chromatic_index_greedy, cover_size, greedy_cover, theta0_lower_bound, thickness,
    validate_cover, CliqueColoring, CliqueCover, CoverReport, CoverViolation, GreedyStrategy,
};
pub use encoding::{decode_bipartite, encode_bipartite, BipartiteEncoding, BitMatrix};
pub use error::{Error, Result};
pub use exact_cover::{exact_theta0, exact_theta0_prime, CoverColoringSolution, CoverSolution};
pub use experiments::{
    best_strategy_ratios, concentration_report, emit_csv, emit_plot, parse_csv, rows_to_csv,
    run_fkn_bipartite, run_theta0_scaling, ConcentrationReport, CoverMethod, ExperimentConfig,
    ExperimentRow, CSV_HEADER,
};
pub use linear_space::{
    affine_plane, linear_space_cover, linear_space_cover_parts, linear_space_for,
    restrict_to_points, validate_linear_space, LinearSpace, LinearSpaceStats, SpaceReport,
    SpaceViolation,
};
pub use graph::{gen_gnnp, gen_gnp, BipartiteGraph, DegreeStats, Diameter, Graph};
pub use rep::{
    atoms, co_star, induced_graph, kneser_from_cover, reduce, verify, Atom, AtomPartition, Mode,
    SetRepresentation, VerifyReport, Violation,
};
pub use seed::Seed;
pub use solvers::{
    decide_difference_rep, exact_f_kn, exact_f_mode, exact_prague, prague_valid, CapSchedule,
    DiffDecision, SolverResult, Witness,
};
