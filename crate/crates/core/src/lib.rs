//! Genus theory of Artin–Schreier extensions of rational function fields `F_q(t)`.
//!
//! The pipeline normalizes a datum `D` for `y^p - y = D`, computes Hasse symbols at
//! the ramified places, and from them the genus field, `λ₁`, the Rédei matrix and
//! `λ₂`. The [`zeta`] module independently counts points on the curve to obtain the
//! class number and check `p^{λ₁} | h`.

pub mod asnorm;
pub mod error;
pub mod gf;
pub mod invariants;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod report;
pub mod sample;
pub mod symbols;
pub mod zeta;

pub use error::Error;
