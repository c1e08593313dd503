//! The guide under `book/` is written for mdbook, which cannot run examples
//! that depend on a local crate. Each chapter is included here as a module
//! doc so `cargo test --doc` compiles and runs every snippet.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/toric.md")]
pub mod toric {}
#[doc = include_str!("../../../book/src/macaulay.md")]
pub mod macaulay {}
#[doc = include_str!("../../../book/src/recurrences.md")]
pub mod recurrences {}
#[doc = include_str!("../../../book/src/evaluation.md")]
pub mod evaluation {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../book/src/benchmark.md")]
pub mod benchmark {}
