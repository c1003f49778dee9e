//! Primitive Pythagorean triples from the generating square.
//!
//! Any even side `s` factors as `2 · 2^(a0-1) · p1^a1 ··· pr^ar`. Splitting
//! the odd prime powers between `t` and `l` (with `2^(a0-1)` always in `t`)
//! gives `2^r` partitions `s = 2tl`, and each partition gives one primitive
//! triple `(2tl + l², 2t(l + t), 2tl + 2t² + l²)` with classical parameters
//! `m = l + t`, `n = t`.
//!
//! All values are unbounded integers.

pub mod construction;
pub mod error;
pub mod numtheory;
pub mod oracles;
pub mod render;

pub use construction::{
    count_partitions, enumerate_partitions, enumerate_triples_by_side, gnomon_decomposition,
    gnomon_ring_width, mn_from_partition, partition_from_mn, partitions, triple_from_partition,
    Generated, GnomonDecomposition, MnPair, Partition, Partitions, PrimitiveTriple, TripleStream,
};
pub use error::{Error, Result};
pub use numtheory::{
    brute_force_primitive_triples, factor_even_side, gcd, Factorization, PrimePower,
};
pub use oracles::{
    euclid_triple, euclid_triples_by_side, euclid_triples_within, plato_family, pythagoras_family,
    rational_point, RationalPoint,
};
pub use render::{render_construction, DiagramSpec, Region, RegionKind, Stage, CANVAS_BOUND};

pub use num_bigint::BigUint;
