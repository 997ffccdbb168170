//! Exact integer arithmetic foundations: arbitrary-precision integers,
//! integer matrices, and Hermite-normal-form lattice bases.
//!
//! Everything here is pure and immutable after construction. No floating
//! point anywhere; all divisions are exact or explicitly Euclidean.

mod hnf;
mod matrix;
mod primes;

pub use hnf::{hnf, hnf_with_modulus, HnfBasis};
pub use matrix::IntMatrix;
pub use primes::is_prime;

/// Signed arbitrary-precision integer used throughout the crate.
pub type Int = num_bigint::BigInt;

/// Convenience constructor for small test values and CLI defaults.
pub fn int(v: i64) -> Int {
    Int::from(v)
}
