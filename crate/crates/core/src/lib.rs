//! The universal gl-weight system on permutations, its specializations, and
//! the interlace / skew-characteristic polynomial family on graphs, chord
//! diagrams and delta-matroids.

pub mod algebra;
pub mod dmat;
pub mod error;
pub mod glws;
pub mod graphs;
pub mod hopf;
pub mod invariants;
pub mod perm;
pub mod verify;

pub use algebra::{Coef, Poly, RatFunc, Var};
pub use dmat::DMat;
pub use error::{Error, Result};
pub use glws::WglEngine;
pub use graphs::{GF2Matrix, Graph};
pub use perm::{ChordDiag, Perm};
