//! Isomorph-free enumeration of connected graphs and the brute-force oracle
//! used to validate it.

mod augment;
mod brute;
mod canon;

pub use augment::{
    enumerate_connected, enumerate_shard, shard_enumeration, EnumError, EnumShard, SOFT_MAX_ORDER,
};
pub use brute::{brute_force_connected, ORACLE_MAX_ORDER};
pub use canon::{canonical_form, canonical_labeling, CanonicalGraph, Labeling};

/// Number of connected graphs on `n = 1..=10` vertices, up to isomorphism.
pub const CONNECTED_CLASS_COUNTS: [u64; 10] =
    [1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571];
