//! Whole-genus verification sweeps over the mapping-class data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automorphism::{verify_inverse_pair, FreeEndomorphism, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::freegroup::{Basis, Letter, Word, WordBuilder};

use super::report::{CaseReport, Mismatch, VerificationReport};
use super::surface::{fixes_relator, pillar_switching_action, pillar_switching_inverse, sigma_twist_word};
use super::twist::{dehn_twist_action, twist_generators};
use super::yz::BasisChange;

fn require_pillars(genus: u32) -> Result<()> {
    if genus < 2 {
        return Err(Error::Genus { genus, reason: "pillar switchings need genus at least 2" });
    }
    Ok(())
}

/// Evaluates the twist factorization of every `σ_i` and compares it with
/// the pillar-switching action on all `2g` generators.
pub fn verify_twist_factorizations(genus: u32) -> Result<VerificationReport> {
    verify_twist_factorizations_within(genus, DEFAULT_BUDGET)
}

pub fn verify_twist_factorizations_within(genus: u32, budget: usize) -> Result<VerificationReport> {
    require_pillars(genus)?;
    let mut report = VerificationReport::new(genus);
    for i in 0..genus {
        let word = sigma_twist_word(i, genus)?;
        let lhs = word.evaluate_within(budget)?;
        let rhs = pillar_switching_action(i, genus)?;
        let shape = match i {
            0 => "first",
            _ if i + 1 == genus => "last",
            _ => "middle",
        };
        report.cases.push(CaseReport::compare(format!("factorization/{shape}/sigma{i} = {word}"), &lhs, &rhs)?);
    }
    Ok(report)
}

fn relator_case(name: String, f: &FreeEndomorphism) -> Result<CaseReport> {
    if fixes_relator(f)? {
        return Ok(CaseReport::flag(name, true));
    }
    let r = super::surface::fundamental_relator(match f.basis() {
        Basis::Xy(g) => g,
        _ => unreachable!("fixes_relator rejects other bases"),
    });
    Ok(CaseReport::new(name, vec![Mismatch { generator: "R".into(), lhs: f.apply(&r)?, rhs: r }]))
}

/// Every twist (both signs) and, from genus 2 on, every `σ_i` must fix the
/// boundary relator exactly.
pub fn verify_relator_invariance(genus: u32) -> Result<VerificationReport> {
    if genus == 0 {
        return Err(Error::Genus { genus, reason: "surface needs at least one handle" });
    }
    let mut report = VerificationReport::new(genus);
    for s in twist_generators(genus) {
        for sym in [s, s.inverse()] {
            report.cases.push(relator_case(format!("relator/{sym}"), &dehn_twist_action(sym, genus)?)?);
        }
    }
    if genus >= 2 {
        for i in 0..genus {
            report.cases.push(relator_case(format!("relator/sigma{i}"), &pillar_switching_action(i, genus)?)?);
            report.cases.push(relator_case(format!("relator/sigma{i}^-1"), &pillar_switching_inverse(i, genus)?)?);
        }
    }
    Ok(report)
}

/// Each shipped generator action against its shipped inverse.
pub fn verify_inverse_certificates(genus: u32) -> Result<VerificationReport> {
    if genus == 0 {
        return Err(Error::Genus { genus, reason: "surface needs at least one handle" });
    }
    let mut report = VerificationReport::new(genus);
    for s in twist_generators(genus) {
        let ok = verify_inverse_pair(&dehn_twist_action(s, genus)?, &dehn_twist_action(s.inverse(), genus)?)?;
        report.cases.push(CaseReport::flag(format!("inverse/{s}"), ok));
    }
    if genus >= 2 {
        for i in 0..genus {
            let ok = verify_inverse_pair(&pillar_switching_action(i, genus)?, &pillar_switching_inverse(i, genus)?)?;
            report.cases.push(CaseReport::flag(format!("inverse/sigma{i}"), ok));
        }
    }
    Ok(report)
}

/// Uniformly random freely reduced word of length `len`.
pub fn random_word<R: Rng>(rng: &mut R, basis: Basis, len: usize) -> Word {
    let rank = basis.rank();
    let mut b = WordBuilder::with_capacity(basis, len);
    while b.len() < len {
        let l = Letter::new(basis.symbol(rng.gen_range(0..rank)), rng.gen_bool(0.5));
        b.push_unchecked(l);
    }
    b.finish()
}

/// Round trips through the `y, z` basis on `samples` random words of each
/// basis (seeded), plus the generator-level free-basis certificate.
pub fn verify_basis_change(genus: u32, samples: usize, seed: u64) -> Result<VerificationReport> {
    let change = BasisChange::new(genus)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(genus).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut report = VerificationReport::new(genus);

    let mut xy_fail = Vec::new();
    let mut yz_fail = Vec::new();
    for _ in 0..samples {
        let len = rng.gen_range(0..=24);
        let u = random_word(&mut rng, Basis::Xy(genus), len);
        let back = change.from_yz(&change.to_yz(&u)?)?;
        if back != u && xy_fail.len() < 8 {
            xy_fail.push(Mismatch { generator: "from_yz(to_yz(w))".into(), lhs: back, rhs: u });
        }
        let v = random_word(&mut rng, Basis::Yz(genus), len);
        let back = change.to_yz(&change.from_yz(&v)?)?;
        if back != v && yz_fail.len() < 8 {
            yz_fail.push(Mismatch { generator: "to_yz(from_yz(w))".into(), lhs: back, rhs: v });
        }
    }
    report.cases.push(CaseReport::new("yz-roundtrip/xy-words", xy_fail));
    report.cases.push(CaseReport::new("yz-roundtrip/yz-words", yz_fail));
    report.cases.push(CaseReport::flag("yz-roundtrip/free-basis", change.is_free_basis()?));
    Ok(report)
}
