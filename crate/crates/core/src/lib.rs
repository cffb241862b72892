//! Determinantal schemes and their graded deformations, computed exactly.

pub mod cli;
pub mod combinatorics;
pub mod complexes;
pub mod detmodel;
pub mod error;
pub mod exactalg;
pub mod gradeddef;
pub mod gradedpoly;

pub use error::{Error, Result};
