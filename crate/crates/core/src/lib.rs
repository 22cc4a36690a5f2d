pub mod corpus;
pub mod error;
pub mod hecke;
pub mod poset;
pub mod promo;
pub mod qpoly;
pub mod sieve;
pub mod slender;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use poset::{LinearExtension, Poset, Shape};
pub use qpoly::{IntPoly, Rat, RatFunc};
