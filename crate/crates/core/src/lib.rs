//! The sweep map on (2n,n)-Dyck paths and a rank-based algorithm for
//! inverting it.
//!
//! - [`path`]: path words, levels, west-south labels, enumeration.
//! - [`sweep`]: the forward map in both scan directions.
//! - [`inverse`]: rank recovery and path reconstruction.
//! - [`oracle`]: exhaustive brute-force checks.
//! - [`render`]: ASCII lattice drawings.
//! - [`cli`]: the `dyck-sweep` command line.

pub mod cli;
pub mod inverse;
pub mod oracle;
pub mod path;
pub mod render;
pub mod sweep;

pub use inverse::{invert_sweep, reconstruct_path, recover_ranks, InverseError};
pub use oracle::{brute_force_invert, l2r_collision_census, verify_bijectivity, VerifyReport};
pub use path::{enumerate_paths, DyckPath, Label, LabeledStep, Level, PathError, Step};
pub use sweep::{
    check_theorem_3_2, collision_witness_a, collision_witness_b, sweep_map, RankSeq, ScanDirection,
    SweptWord,
};
