//! Exact polynomial and factored rational function arithmetic over the
//! integers.

mod rational;
mod render;
mod tpoly;
mod ztpoly;

pub use rational::{equal_rational, exact_div_factor, BinomFactor, FactoredRational};
pub use render::{FactorDoc, Format, RationalDoc, TermDoc};
pub use tpoly::TPoly;
pub use ztpoly::{Exps, ZTPoly};
