//! Permutations, finite permutation groups and automorphism search.

pub mod aut;
pub mod group;
pub mod permutation;

pub use aut::{
    coloured_automorphism_group, design_automorphism_group, graph_automorphism_group, AutError,
    AutOptions, AutomorphismGroup, ColouredGraph, SeedInvariants, DEFAULT_NODE_LIMIT,
};
pub use group::{
    block_orbits, clique_orbits, close_group, coloured_orbit_split, induced_block_action,
    induced_clique_action, is_design_automorphism, is_graph_automorphism,
    point_action_from_block_perm, point_orbits, OrbitPartition, PermGroup, DEFAULT_CLOSURE_CAP,
};
pub use permutation::{compose, inverse, parse_cycles, PermError, Permutation};
