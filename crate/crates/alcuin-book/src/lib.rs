//! Binds each chapter of the book into rustdoc, so that every Rust
//! snippet in `book/src/` compiles and runs under `cargo test --doc`.
//! The book cannot drift from the library without a test failing here.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/building-blocks.md")]
pub mod building_blocks {}

#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}

#[doc = include_str!("../../../book/src/generating-function.md")]
pub mod generating_function {}

#[doc = include_str!("../../../book/src/max-area.md")]
pub mod max_area {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
