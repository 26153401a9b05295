//! Electron-photon sideband kinematics, long-wavelength spatial beating and
//! the photon-transport interference model for a 50 keV electron beam
//! crossing a laser-illuminated dielectric film.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod beating;
pub mod config;
pub mod error;
pub mod kinematics;
pub mod phenomenological;
pub mod report;
pub mod roots;
pub mod scenario;
pub mod slab_optics;
pub mod units;

pub use error::{Error, Result};
pub use units::Length;
