//! Exact Farey sequence machinery.
//!
//! * [`fraction`]: reduced fractions on `[0, 1]`, the determinant `Δ`, mediants.
//! * [`oracle`]: brute-force enumeration of `F_N` and a checker for its laws.
//! * [`subsequence`]: the triple `F_{n,N}` around `n/N` via a Euclidean chain.
//! * [`continued_fraction`]: the same triple read off a continued fraction.
//! * [`neighbor`]: successor and predecessor of any term of any `F_N`.

pub mod continued_fraction;
pub mod error;
pub mod fraction;
pub mod neighbor;
pub mod oracle;
pub mod subsequence;

pub use continued_fraction::{
    cf_canonicalize, cf_evaluate, cf_expand, cf_of_chain, neighbors_from_cf, ContinuedFraction,
};
pub use error::{FareyError, Result};
pub use fraction::{delta, gcd, mediant, FareyOrder, Fraction};
pub use neighbor::{base_right_neighbor, left_neighbor, right_neighbor, NeighborResult, Side};
pub use oracle::{
    center_triples, enumerate, enumerate_capped, exceeds_cap, sequence_length, triple_by_scan,
    triple_by_scan_capped, verify_properties, FareyIter, FareySequence, PropertyReport,
    PropertyViolation, ViolationKind, DEFAULT_CAP,
};
pub use subsequence::{
    are_adjacent, fundamental_triple, lift_triple, reduce_chain, rho_map, triple, FareyTriple,
    ReductionChain,
};
