//! Coxeter pyramids in hyperbolic 3-space.
//!
//! Enumerates the 33 pyramids, computes the growth functions of their
//! reflection groups exactly, certifies that the growth rates are Perron
//! numbers, evaluates hyperbolic volumes through the Lobachevsky function,
//! and compares both against the inclusion order of the pyramids.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod coxeter;
pub mod error;
pub mod exactpoly;
pub mod geometry;
pub mod growth;
pub mod order;
pub mod volume;

pub use error::{Error, Result};
pub use geometry::PyramidQuadruple;
