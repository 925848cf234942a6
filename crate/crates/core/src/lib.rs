//! Exact Hurwitz numbers of closed surfaces.
//!
//! The engine evaluates the character formula
//! `H_e(Δ¹,…,Δᶠ) = Σ_λ ∏ φ_λ(Δⁱ) (dimλ/d!)^e` in exact rational arithmetic
//! and checks it against two brute-force oracles: counting permutation
//! tuples that satisfy the surface relator, and contracting Wick pairings of
//! complex Gaussian matrices along a combinatorial map.
//!
//! ```
//! use hurwitz::{HurwitzQuery, Partition, SurfaceSpec};
//!
//! let three: Partition = "[3]".parse().unwrap();
//! let q = HurwitzQuery::new(SurfaceSpec::sphere(), vec![three.clone(), three.clone(), three]).unwrap();
//! assert_eq!(hurwitz::rational::to_string(&hurwitz::hurwitz(&q).unwrap()), "1/3");
//! ```

pub mod characters;
pub mod class_algebra;
pub mod error;
pub mod hurwitz;
pub mod oracles;
pub mod partitions;
pub mod rational;
pub mod selftest;
pub mod series;
pub mod symfun;
pub mod yangmills;

pub use error::{Error, Result};
pub use hurwitz::{hurwitz, HurwitzQuery, SurfaceSpec};
pub use partitions::Partition;
pub use rational::Rational;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/characters.md")]
    struct Characters;
    #[doc = include_str!("../../../book/src/hurwitz-numbers.md")]
    struct HurwitzNumbers;
    #[doc = include_str!("../../../book/src/oracles.md")]
    struct Oracles;
    #[doc = include_str!("../../../book/src/cut-and-join.md")]
    struct CutAndJoin;
    #[doc = include_str!("../../../book/src/yang-mills.md")]
    struct YangMills;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
