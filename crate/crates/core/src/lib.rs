//! Minimal graded free resolutions over standard graded polynomial rings.
//!
//! The engine computes Groebner bases, iterated syzygies, minimal free
//! resolutions, Betti tables, graded shift profiles, and regularity for
//! finitely generated graded modules over `F_p[x_1..x_n]`, and evaluates a
//! family of shift inequalities against the computed profiles. A batch
//! harness generates random instances, verifies the proved inequalities,
//! and records candidate violations of the open ones.

pub mod bounds;
pub mod error;
pub mod groebner;
pub mod harness;
pub mod invariants;
pub mod polyring;
pub mod resolution;

pub use error::{EngineError, Result};
