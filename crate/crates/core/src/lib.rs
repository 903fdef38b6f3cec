//! Exact detection of affine rotation surfaces and affine spheres.
//!
//! The kernel works entirely over arbitrary-precision rationals (and
//! quadratic extensions where eigenvalues demand it). It needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod diffgeo;
pub mod error;
pub mod exactmath;
pub mod generators;
pub mod parabolic;
pub mod pipeline;
pub mod plucker;

pub use error::{Error, Result};
