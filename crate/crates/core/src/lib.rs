//! Emptiness and dimension of affine Deligne-Lusztig varieties `X_w(sigma)`
//! at Iwahori level with `b = 1`, for the affine Weyl groups of SL2, SL3 and
//! Sp4, computed by folding galleries in the standard apartment.

pub mod adlv;
pub mod affine_weyl;
pub mod cli;
pub mod error;
pub mod folding;
pub mod galleries;
pub mod root_data;

pub use error::{Error, Result};
