//! Cover ideals of graphs and the `H_t` family: powers, irreducible
//! decompositions, associated primes, k-covers and admissible degree vectors.

pub mod covers;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod monomial;
pub mod theorem;

pub use error::{Error, Result};
