//! Words, closed forms and exact distances for the Cayley graph of `S_n`
//! generated by the transposition `(12)` and the two cyclic shifts.

pub mod bfs;
pub mod cli;
pub mod error;
pub mod formulas;
pub mod perm;
pub mod verifier;
pub mod words;

pub use error::{Error, Result};
pub use perm::{Generator, Permutation};
pub use words::GenWord;
