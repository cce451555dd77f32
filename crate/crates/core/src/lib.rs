//! Computations around Nichols algebras of Yetter–Drinfeld modules over `S_n`
//! supported on transpositions, and the Fomin–Kirillov algebras `E_n`.
//!
//! Permutations compose right to left: `(p ∘ q)(k) = p(q(k))`.

pub mod error;
pub mod fk;
pub mod linalg;
pub mod nichols;
pub mod perm;
pub mod quiver;
pub mod report;
pub mod verify;
pub mod yd;

pub use error::{Error, Result};
pub use perm::{Permutation, Sign, Transposition};
pub use report::DimensionReport;
pub use yd::{CharacterSpec, YdModule};
