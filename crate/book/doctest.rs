// mdbook cannot run listings that depend on a workspace crate, so every
// chapter is included here as documentation and `cargo test --doc` runs
// its code blocks. One module per chapter keeps failures traceable.

#[doc = include_str!("src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("src/gaussian.md")]
pub mod gaussian {}
#[doc = include_str!("src/hurwitz.md")]
pub mod hurwitz {}
#[doc = include_str!("src/euler.md")]
pub mod euler {}
#[doc = include_str!("src/lattices.md")]
pub mod lattices {}
#[doc = include_str!("src/counting.md")]
pub mod counting {}
#[doc = include_str!("src/twins.md")]
pub mod twins {}
#[doc = include_str!("src/pythagorean.md")]
pub mod pythagorean {}
#[doc = include_str!("src/verification.md")]
pub mod verification {}
