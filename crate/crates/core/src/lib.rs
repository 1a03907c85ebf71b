//! Exact symmetric Grothendieck polynomials `G_λ` and their duals `g_λ`.
//!
//! Coefficients live in ℤ[β]. Elements of the completed ring of symmetric
//! functions are handled through `(n_vars, max_degree)` truncations.

pub mod algebra;
pub mod error;
pub mod fermion;
pub mod kpoly;
pub mod pieri;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
