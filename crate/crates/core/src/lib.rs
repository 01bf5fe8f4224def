//! Recursive cyclic tournaments and the minimum out-degree of their small
//! subsets.
//!
//! `T_k` is the tournament on `3^k` vertices obtained by blowing up a
//! directed triangle with three copies of `T_{k-1}`. Every vertex has
//! out-degree `(3^k - 1)/2`, yet every subset of at most `(3^k - 1)/2`
//! vertices induces a subdigraph with minimum out-degree at most
//! `((3^k - 1)/2 - k)/2`. Deleting one vertex gives a `2n`-vertex digraph
//! of minimum out-degree `s = n - 1` whose best `n`-vertex half loses
//! `(k - 1)/2` against `s/2`.
//!
//! The crate builds these digraphs, verifies the subset bound by exhaustive
//! search for small `k`, produces replayable certificates for the bound on
//! any individual subset, and runs random-split experiments.
//!
//! ```
//! use cyclotour::{certify_bound, cyclic_tournament, VertexSet};
//!
//! let t2 = cyclic_tournament(2)?;
//! let x = VertexSet::from_ids(9, [0, 3, 6, 7])?;
//! let (bound, cert) = certify_bound(2, &x)?;
//! assert!(t2.min_out_degree(&x)? <= bound);
//! assert_eq!(cert.replay()?, bound);
//! # Ok::<(), cyclotour::Error>(())
//! ```

pub mod certifier;
pub mod construction;
pub mod digraph;
mod error;
pub mod experiments;
pub mod format;
pub mod search;

pub use certifier::{certify_bound, min_identity_check, partition_parts, BoundCertificate, CaseKind};
pub use construction::{
    compose_cyclic, counterexample_digraph, cyclic_tournament, level_params, trit_arc, LevelParams,
    TritLabel,
};
pub use digraph::{Degree, Digraph, Vertex, VertexSet};
pub use error::{Error, Result};
pub use experiments::{gap_table, random_balanced_split, split_experiment, GapRow, SplitTrial};
pub use format::{read_digraph, write_digraph};
pub use search::{
    branch_bound_max, enumerate_max, verify_subset_bound, witness_extremal, BoundCheck,
    SearchConfig, SearchReport,
};

/// The guide under `book/src`, compiled so its listings run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/digraphs.md")]
    mod digraphs {}
    #[doc = include_str!("../../../book/src/construction.md")]
    mod construction {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/experiments.md")]
    mod experiments {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
