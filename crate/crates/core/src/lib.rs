//! Fibonacci and tribonacci-style analogues of the Stirling numbers, built
//! from weighted tiling placements on Ferrers boards, with exhaustive
//! checks of the recursions, product formulas, inversion and closed forms
//! they satisfy.

pub mod board;
pub mod cli;
pub mod error;
pub mod identities;
pub mod poly;
pub mod report;
pub mod stirling;
pub mod tiling;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{Monomial, PQRPoly, TSeries, Var, XPoly};
pub use tiling::{TileFamily, Tiling};
