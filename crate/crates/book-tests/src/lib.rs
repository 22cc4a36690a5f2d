//! Each guide chapter is included as module docs, so its `rust` blocks
//! run under `cargo test --doc`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/posets.md")]
pub mod posets {}

#[doc = include_str!("../../../book/src/promotion.md")]
pub mod promotion {}

#[doc = include_str!("../../../book/src/statistics.md")]
pub mod statistics {}

#[doc = include_str!("../../../book/src/sieving.md")]
pub mod sieving {}

#[doc = include_str!("../../../book/src/hecke.md")]
pub mod hecke {}

#[doc = include_str!("../../../book/src/slender.md")]
pub mod slender {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
