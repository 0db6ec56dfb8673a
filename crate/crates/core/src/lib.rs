//! Exact counts of level-`p` cuspidal automorphic representations of GSp(4)
//! by Iwahori-spherical local type, with the derived Siegel cusp form and
//! newform dimensions and the local Plancherel masses.

pub mod arith;
pub mod checks;
pub mod classnum;
pub mod cli;
pub mod counts;
pub mod elliptic;
pub mod error;
pub mod fixture;
pub mod plancherel;
pub mod series;
pub mod siegel;

pub use counts::{count, CountResult, CountValue, ReprType, Route};
pub use error::{Error, Result};
