//! Exact-arithmetic noncommutative Gröbner bases over the free associative
//! algebra, together with a toolkit for anti-Jordan triple systems: axiom
//! checking, universal-envelope construction, structure constants, center
//! computation and Wedderburn decomposition of the envelope of the n×n
//! matrix system.
//!
//! Everything is computed over the Gaussian rationals ℚ(i); there is no
//! floating point anywhere in this crate.

pub mod ajts;
pub mod arith;
pub mod center;
pub mod decomp;
pub mod envelope;
pub mod freealg;
pub mod groebner;
