//! k sequences of generalized order-k numbers.
//!
//! For an order `k >= 2` and a weight `λ >= 1` the crate computes the `k`
//! sequences `a[i][n]` (`1 <= i <= k`) four independent ways:
//!
//! * the exact recurrence ([`sequences`]),
//! * determinants of banded lower Hessenberg matrices ([`families`], [`hessenberg`]),
//! * permanents of banded lower Hessenberg matrices,
//! * a Binet-style closed form over the roots of the characteristic
//!   polynomial ([`binet`]).
//!
//! Exact values are [`Integer`]s; complex matrix entries are [`Gaussian`]
//! integers. The matrix recursions are generic over [`Ring`] and the root
//! finder over [`num_traits::Float`].

pub mod binet;
pub mod dense;
pub mod error;
pub mod families;
pub mod hessenberg;
pub mod ring;
pub mod sequences;
pub mod verify;

pub use error::{Error, Result};
pub use ring::{Gaussian, Integer, Ring};

/// Band matrix over exact integers.
pub type IntegerMatrix = hessenberg::BandedLowerHessenberg<Integer>;
/// Band matrix over Gaussian integers.
pub type GaussianMatrix = hessenberg::BandedLowerHessenberg<Gaussian>;
/// Root set in double precision.
pub type RootSet64 = binet::RootSet<f64>;
/// Root set in single precision.
pub type RootSet32 = binet::RootSet<f32>;
