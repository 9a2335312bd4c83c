//! Exact Chern-class arithmetic for complete intersections and a rule engine
//! for morphisms between hypersurfaces in projective space.
//!
//! * [`numerics`]: rationals, `Φ_N`, sign-change counting.
//! * [`chow`]: truncated Chow ring of a complete intersection.
//! * [`bounds`]: closed forms for both sides of the Hurwitz-type inequality.
//! * [`feasibility`]: per-`m` verdicts, case reports, tables.
//! * [`golden`]: regeneration of the published `P^4` tables.
//! * [`cli`] and [`render`]: the `morphcheck` binary.

pub mod bounds;
pub mod chow;
pub mod cli;
pub mod error;
pub mod feasibility;
pub mod golden;
pub mod numerics;
pub mod render;

pub use error::{Error, Result};
pub use numerics::Rational;
