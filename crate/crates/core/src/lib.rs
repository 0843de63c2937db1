#![no_std]
//! Serre weights, principal series, Diamond diagrams and an exact oracle for
//! `GL_2` over `F_q` and the Galois ring `GR(p^2, f)`.

extern crate alloc;

pub mod diamond;
pub mod error;
pub mod filtration;
pub mod oracle;
pub mod params;
pub mod principal_series;
pub mod report;
pub mod tuples;
pub mod weight;

pub use error::{Error, Result};
pub use params::Params;
