//! Mapping classes of the genus-`g` surface with one boundary circle, as
//! automorphisms of its fundamental group: Dehn twists, pillar switchings,
//! the boundary relator and the `y, z` basis.

mod chains;
mod report;
mod surface;
mod twist;
mod verify;
mod yz;

pub use chains::{recorded_step_count, replay_middle_chain, replay_proof_chains};
pub use report::{CaseReport, Mismatch, VerificationReport};
pub use surface::{
    conventions_fixed_by_twists, expand_z, fixes_relator, fundamental_relator, pillar_switching_action,
    pillar_switching_inverse, relator_with, select_commutator_convention, sigma_twist_word, z_word,
    CommutatorConvention, RELATOR_CONVENTION,
};
pub use twist::{dehn_twist_action, twist_generators, TwistKind, TwistSymbol, TwistWord};
pub use verify::{
    random_word, verify_basis_change, verify_inverse_certificates, verify_relator_invariance,
    verify_twist_factorizations, verify_twist_factorizations_within,
};
pub use yz::{from_yz, pillar_switching_yz, to_yz, BasisChange};
