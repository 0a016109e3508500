//! Exact analysis of 2-(n,m,1) block designs and their block graphs.
//!
//! The crate builds designs (from base blocks, text listings or embedded
//! data), verifies the design axioms and the strongly regular parameters of
//! the block graph, enumerates every maximum clique and classifies it, and
//! computes permutation groups, orbits and full graph automorphism groups.

pub mod arith;
pub mod bitset;
pub mod builtin;
pub mod clique;
pub mod design;
pub mod develop;
pub mod format;
pub mod graph;
pub mod perm;
pub mod point;
pub mod report;
pub mod srg;

pub use builtin::{builtin_design, BuiltinName};
pub use design::{
    admissibility, validate_2design, Design, DesignError, DesignParameters, ValidationReport,
};
pub use develop::{develop_base_blocks, Development};
pub use format::{parse_design, serialize_design, DesignFormat};
pub use graph::{build_block_graph, BlockGraph};
pub use point::{StructuredPoint, Tag};
pub use srg::{delsarte_bound, srg_from_design_params, verify_srg, SrgParams};
