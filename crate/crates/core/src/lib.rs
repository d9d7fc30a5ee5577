//! Artin and Coxeter groups and their parabolic subgroups.

pub mod classify;
pub mod complex;
pub mod coxeter;
pub mod error;
pub mod fc;
pub mod euclid;
pub mod even;
pub mod garside;
pub mod graph;
pub mod limits;
pub mod oracle;
pub mod parabolic;
pub mod salvetti;
pub mod selftest;
pub mod word;

pub use error::{Error, Result};
