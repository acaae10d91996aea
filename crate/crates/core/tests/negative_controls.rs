use pillar_core::braid::{is_trivial_braid, restrict_to_z};
use pillar_core::mcg::{
    pillar_switching_action, relator_with, sigma_twist_word, BasisChange, CaseReport, CommutatorConvention, TwistWord,
};
use pillar_core::{BraidWord, Error, FreeEndomorphism};

#[test]
fn truncated_factorization_is_rejected() {
    for g in 2..=5 {
        for i in 0..g {
            let word = sigma_twist_word(i, g).unwrap();
            let cut = TwistWord::new(g, word.symbols()[1..].to_vec()).unwrap();
            let case =
                CaseReport::compare("cut", &cut.evaluate().unwrap(), &pillar_switching_action(i, g).unwrap()).unwrap();
            assert!(!case.holds, "g={g} i={i}");
            assert!(!case.mismatches.is_empty());
        }
    }
}

#[test]
fn other_convention_is_not_fixed() {
    let r = relator_with(2, CommutatorConvention::UinvVinvUV).unwrap();
    let moved = [TwistWord::parse("a1", 2), TwistWord::parse("b2", 2), TwistWord::parse("w1", 2)]
        .into_iter()
        .map(|t| t.unwrap().evaluate().unwrap())
        .filter(|f| f.apply(&r).unwrap() != r)
        .count();
    assert!(moved > 0);
}

#[test]
fn sigma_zero_is_not_z_stable() {
    let change = BasisChange::new(3).unwrap();
    let yz = change.conjugate_to_yz(&pillar_switching_action(0, 3).unwrap()).unwrap();
    assert!(matches!(restrict_to_z(&yz), Err(Error::NotZStable { .. })));
}

#[test]
fn budget_stops_runaway_powers() {
    // a1 b1^-1 acts hyperbolically on the first handle, so lengths grow exponentially.
    let g = TwistWord::parse("a1 b1^-1", 2).unwrap().evaluate().unwrap();
    assert!(matches!(g.power_within(40, 500), Err(Error::BudgetExceeded { budget: 500 })));
    assert!(FreeEndomorphism::identity(g.basis()).power_within(40, 4).is_ok());
}

#[test]
fn nontrivial_commutator_of_adjacent_generators() {
    assert!(!is_trivial_braid(&BraidWord::parse("b1 b2 b1^-1 b2^-1", 3).unwrap()).unwrap());
    assert!(is_trivial_braid(&BraidWord::parse("b1 b3 b1^-1 b3^-1", 4).unwrap()).unwrap());
}
