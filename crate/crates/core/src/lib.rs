//! Concatenated stabilizer codes over GF(4).
//!
//! The crate builds quantum Reed–Solomon codes from self-dual binary
//! expansions, concatenates them with small inner stabilizer codes through an
//! inner-product-preserving map into `C⊥/C`, evaluates the asymptotic
//! rate/distance bound curves for these families, and decodes concatenated
//! codes with a two-stage (inner table, outer Berlekamp–Massey) decoder.
//!
//! Vectors over GF(4) are [`gf4::SymplecticVec`]s: two packed bit halves
//! (the ω and ω̄ coordinates) on which the trace inner product is the binary
//! symplectic form.

pub mod addcode;
pub mod bounds;
pub mod cli;
pub mod codes;
pub mod concat;
pub mod decoder;
pub mod error;
pub(crate) mod gf2;
pub mod gf2m;
pub mod gf4;
pub mod io;
pub mod qrs;
pub mod verify;

pub use error::{Error, Result};
