//! Elliptic fake degrees, exotic Fourier transforms and formal degrees of
//! unipotent discrete series, computed in exact arithmetic.

pub mod affine;
pub mod combinat;
pub mod elliptic;
pub mod error;
pub mod exactq;
pub mod fixtures;
pub mod fourier;
pub mod unipotent;
pub mod verify;
pub mod weylgrp;

pub use error::{Error, Result};
