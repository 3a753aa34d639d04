//! Executable calculus of quivers, cyclic nerves and the category `M`.
//!
//! Everything space-valued is computed on connected components: quiver
//! representations in finite categories, `π₀` Hochschild homology with its
//! power operators, paracyclic and epicyclic morphism arithmetic, hom-sets
//! in `M`, and exhaustive checkers for the closed-sheaf and excision laws.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cyccat;
pub mod digraph;
pub mod emm;
pub mod error;
pub mod fincat;
pub mod hochschild;
pub mod partition;
pub mod quiver;
pub mod simplex;

pub use error::{Error, Result};
