//! Brute-force Hurwitz oracles.

pub mod perm;
pub mod tuple;
pub mod wick;
