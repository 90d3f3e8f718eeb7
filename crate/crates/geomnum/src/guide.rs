//! The user guide, embedded chapter by chapter.
//!
//! The rendered book lives in `book/` at the workspace root and is built
//! with mdbook.  Each module below carries one chapter as its
//! documentation, so every fenced Rust block in the book compiles and
//! runs under `cargo test --doc` — the guide cannot drift from the
//! library.  One module per chapter keeps doc-test failures traceable to
//! the chapter they came from.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-bodies.md")]
pub mod exact_bodies {}

#[doc = include_str!("../../../book/src/lattices.md")]
pub mod lattices {}

#[doc = include_str!("../../../book/src/descent.md")]
pub mod descent_walkthrough {}

#[doc = include_str!("../../../book/src/invariants.md")]
pub mod invariants_walkthrough {}

#[doc = include_str!("../../../book/src/flat-tori.md")]
pub mod flat_tori {}

#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}
