//! Symbolic engine for mapping classes of a once-bordered surface acting on
//! its free fundamental group.
//!
//! * [`freegroup`]: freely reduced words, parsing and printing.
//! * [`automorphism`]: endomorphisms given by generator images.
//! * [`mcg`]: Dehn twists, pillar switchings, the boundary relator, the
//!   `y, z` basis and the verification sweeps built on them.
//! * [`braid`]: braid words, the Artin representation and the pillar
//!   switching map `ψ`.

pub mod automorphism;
pub mod braid;
pub mod error;
pub mod freegroup;
pub mod mcg;

pub use automorphism::{verify_inverse_pair, FreeEndomorphism, DEFAULT_BUDGET};
pub use braid::{BraidLetter, BraidWord};
pub use error::{Error, Result};
pub use freegroup::{Basis, Family, Letter, Symbol, Word};
pub use mcg::{TwistWord, VerificationReport};
