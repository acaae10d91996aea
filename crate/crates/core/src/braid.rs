//! Braid words, the Artin representation and the map `ψ` sending the braid
//! generator `β_i` to the pillar switching `σ_i`.

use std::fmt;

use crate::automorphism::{FreeEndomorphism, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::freegroup::{Basis, Family, Symbol};
use crate::mcg::{
    pillar_switching_action, pillar_switching_inverse, pillar_switching_yz, BasisChange, CaseReport, TwistWord,
    VerificationReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub index: u32,
    pub inverse: bool,
}

impl BraidLetter {
    pub const fn new(index: u32, inverse: bool) -> Self {
        BraidLetter { index, inverse }
    }

    pub fn inverse(self) -> Self {
        BraidLetter { inverse: !self.inverse, ..self }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{}", self.index)?;
        if self.inverse {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// A word in the generators `β_1..β_{n-1}` of the braid group on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: u32,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: u32, letters: Vec<BraidLetter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::IndexOutOfRange { name: "0 strands".into(), context: "braid groups".into() });
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(Error::IndexOutOfRange {
                    name: l.to_string(),
                    context: format!("braids on {strands} strands"),
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: u32) -> Self {
        BraidWord { strands: strands.max(1), letters: Vec::new() }
    }

    /// Parses tokens `b<k>` with optional `^-1`; empty text or `1` is the
    /// trivial braid.
    pub fn parse(text: &str, strands: u32) -> Result<Self> {
        let mut letters = Vec::new();
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let mut offset = 0;
        for &token in &tokens {
            let position = text[offset..].find(token).map_or(offset, |p| p + offset);
            offset = position + token.len();
            if token == "1" && tokens.len() == 1 {
                break;
            }
            let syntax = |message: String| Error::Syntax { position, message };
            let (name, inverse) = match token.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (token, false),
            };
            let digits = name.strip_prefix('b').ok_or_else(|| syntax(format!("unknown braid generator `{token}`")))?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(syntax(format!("expected a decimal index in `{token}`")));
            }
            let index = digits.parse().map_err(|_| syntax(format!("index in `{token}` is too large")))?;
            letters.push(BraidLetter::new(index, inverse));
        }
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { strands: other.strands, genus: self.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn pow(&self, k: u32) -> BraidWord {
        BraidWord { strands: self.strands, letters: (0..k).flat_map(|_| self.letters.iter().copied()).collect() }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Artin's automorphism for one generator of `B_n` acting on `F_n`:
/// `α_i ↦ α_{i+1}`, `α_{i+1} ↦ α_{i+1}^-1 α_i α_{i+1}`; the inverse sends
/// `α_{i+1} ↦ α_i`, `α_i ↦ α_i α_{i+1} α_i^-1`.
pub fn artin_generator(letter: BraidLetter, strands: u32) -> Result<FreeEndomorphism> {
    BraidWord::new(strands, vec![letter])?;
    let (i, j) = (letter.index, letter.index + 1);
    let (first, second) = if letter.inverse {
        (format!("al{i} al{j} al{i}^-1"), format!("al{i}"))
    } else {
        (format!("al{j}"), format!("al{j}^-1 al{i} al{j}"))
    };
    FreeEndomorphism::from_assignments(
        Basis::Abstract(strands),
        &[(Symbol::alpha(i), &first), (Symbol::alpha(j), &second)],
    )
}

fn fold<F>(b: &BraidWord, basis: Basis, budget: usize, mut generator: F) -> Result<FreeEndomorphism>
where
    F: FnMut(BraidLetter) -> Result<FreeEndomorphism>,
{
    let mut acc = FreeEndomorphism::identity(basis);
    for &l in b.letters.iter().rev() {
        acc = generator(l)?.compose_within(&acc, budget)?;
    }
    Ok(acc)
}

/// The Artin representation of a braid word; the rightmost letter acts first.
pub fn artin_action(b: &BraidWord) -> Result<FreeEndomorphism> {
    artin_action_within(b, DEFAULT_BUDGET)
}

pub fn artin_action_within(b: &BraidWord, budget: usize) -> Result<FreeEndomorphism> {
    fold(b, Basis::Abstract(b.strands), budget, |l| artin_generator(l, b.strands))
}

/// Decides the word problem through the faithful Artin representation.
pub fn is_trivial_braid(b: &BraidWord) -> Result<bool> {
    is_trivial_braid_within(b, DEFAULT_BUDGET)
}

pub fn is_trivial_braid_within(b: &BraidWord, budget: usize) -> Result<bool> {
    Ok(artin_action_within(b, budget)?.is_identity())
}

fn psi_check(b: &BraidWord, genus: u32) -> Result<()> {
    if genus < 2 {
        return Err(Error::Genus { genus, reason: "pillar switchings need genus at least 2" });
    }
    if b.strands != genus {
        return Err(Error::StrandMismatch { strands: b.strands, genus });
    }
    Ok(())
}

/// `ψ(b)` over the `x, y` basis: each `β_i^{±1}` becomes `σ_i^{±1}`.
/// The strand count must equal the genus.
pub fn psi_action(b: &BraidWord, genus: u32) -> Result<FreeEndomorphism> {
    psi_action_within(b, genus, DEFAULT_BUDGET)
}

pub fn psi_action_within(b: &BraidWord, genus: u32, budget: usize) -> Result<FreeEndomorphism> {
    psi_check(b, genus)?;
    let sigma: Vec<FreeEndomorphism> = (1..genus).map(|i| pillar_switching_action(i, genus)).collect::<Result<_>>()?;
    let sigma_inv: Vec<FreeEndomorphism> =
        (1..genus).map(|i| pillar_switching_inverse(i, genus)).collect::<Result<_>>()?;
    fold(b, Basis::Xy(genus), budget, |l| {
        let k = l.index as usize - 1;
        Ok(if l.inverse { sigma_inv[k].clone() } else { sigma[k].clone() })
    })
}

/// `ψ(b)` rewritten over the `y, z` basis.
pub fn psi_action_yz(b: &BraidWord, genus: u32) -> Result<FreeEndomorphism> {
    BasisChange::new(genus)?.conjugate_to_yz(&psi_action(b, genus)?)
}

/// Twist word for `ψ(β_i)`:
/// `a_{i+2}^-1 a_{i+1} b_{i+1} w_{i+1} w_i a_i^-1 b_{i+1} a_{i+1}` for
/// `i ≤ g - 2`, and `(w_{g-1} a_g b_g)^2 a_{g-1}^-1` for `i = g - 1`.
pub fn psi_twist_word(index: u32, genus: u32) -> Result<TwistWord> {
    if index == 0 || index >= genus {
        return Err(Error::IndexOutOfRange { name: format!("b{index}"), context: format!("genus {genus}") });
    }
    let i = index;
    let text = if i + 2 <= genus {
        format!("a{}^-1 a{} b{} w{} w{} a{}^-1 b{} a{}", i + 2, i + 1, i + 1, i + 1, i, i, i + 1, i + 1)
    } else {
        let h = genus - 1;
        let g = genus;
        format!("w{h} a{g} b{g} w{h} a{g} b{g} a{h}^-1")
    };
    TwistWord::parse(&text, genus)
}

/// Restricts a `y, z`-basis endomorphism to the subgroup generated by the
/// `z` letters, relabelling `z_j` as `α_j`. Fails when some `z_j` image
/// leaves that subgroup.
pub fn restrict_to_z(f: &FreeEndomorphism) -> Result<FreeEndomorphism> {
    match f.basis() {
        Basis::Yz(g) => f.restrict(Family::Z, Basis::Abstract(g), Family::Alpha),
        found => Err(Error::WrongBasis { expected: "y, z", found }),
    }
}

/// Braid and commutation relations among all of `σ_0..σ_{g-1}` as
/// equalities of endomorphisms.
pub fn verify_psi_relations(genus: u32) -> Result<VerificationReport> {
    verify_psi_relations_within(genus, DEFAULT_BUDGET)
}

pub fn verify_psi_relations_within(genus: u32, budget: usize) -> Result<VerificationReport> {
    if genus < 2 {
        return Err(Error::Genus { genus, reason: "pillar switchings need genus at least 2" });
    }
    let basis = Basis::Xy(genus);
    let sigma: Vec<FreeEndomorphism> = (0..genus).map(|i| pillar_switching_action(i, genus)).collect::<Result<_>>()?;
    let mut report = VerificationReport::new(genus);
    for i in 0..genus as usize - 1 {
        let (s, t) = (&sigma[i], &sigma[i + 1]);
        let lhs = FreeEndomorphism::compose_all(basis, [s, t, s], budget)?;
        let rhs = FreeEndomorphism::compose_all(basis, [t, s, t], budget)?;
        let name = format!("braid/sigma{i} sigma{} sigma{i} = sigma{} sigma{i} sigma{}", i + 1, i + 1, i + 1);
        report.cases.push(CaseReport::compare(name, &lhs, &rhs)?);
    }
    for i in 0..genus as usize {
        for j in i + 2..genus as usize {
            let lhs = sigma[i].compose_within(&sigma[j], budget)?;
            let rhs = sigma[j].compose_within(&sigma[i], budget)?;
            let name = format!("commute/sigma{i} sigma{j} = sigma{j} sigma{i}");
            report.cases.push(CaseReport::compare(name, &lhs, &rhs)?);
        }
    }
    Ok(report)
}

/// For each `β_i`: the `y, z` form of `ψ(β_i)` matches the closed-form
/// pillar switching on that basis, is `z`-stable, and restricts to Artin's
/// automorphism; `ψ(β_i)` also equals its twist word.
pub fn verify_artin_restriction(genus: u32) -> Result<VerificationReport> {
    if genus < 2 {
        return Err(Error::Genus { genus, reason: "pillar switchings need genus at least 2" });
    }
    let change = BasisChange::new(genus)?;
    let mut report = VerificationReport::new(genus);
    for i in 1..genus {
        let beta = BraidWord::new(genus, vec![BraidLetter::new(i, false)])?;
        let psi = psi_action(&beta, genus)?;
        let yz = change.conjugate_to_yz(&psi)?;
        report.cases.push(CaseReport::compare(format!("yz-form/sigma{i}"), &yz, &pillar_switching_yz(i, genus)?)?);
        let name = format!("artin-restriction/b{i}");
        match restrict_to_z(&yz) {
            Ok(restricted) => {
                report.cases.push(CaseReport::compare(name, &restricted, &artin_action(&beta)?)?);
            }
            Err(_) => report.cases.push(CaseReport::flag(name, false)),
        }
        let twisted = psi_twist_word(i, genus)?.evaluate()?;
        report.cases.push(CaseReport::compare(format!("psi-twist-word/b{i}"), &psi, &twisted)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::Word;

    fn braid(text: &str, n: u32) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn artin_generator_b3() {
        let f = artin_action(&braid("b1", 3)).unwrap();
        let b = Basis::Abstract(3);
        assert_eq!(f.image(Symbol::alpha(1)).unwrap(), &Word::parse("al2", b).unwrap());
        assert_eq!(f.image(Symbol::alpha(2)).unwrap(), &Word::parse("al2^-1 al1 al2", b).unwrap());
        assert_eq!(f.image(Symbol::alpha(3)).unwrap(), &Word::parse("al3", b).unwrap());
        assert!(artin_action(&braid("b1 b1^-1", 3)).unwrap().is_identity());
        assert_eq!(artin_action(&braid("b1 b2 b1", 3)).unwrap(), artin_action(&braid("b2 b1 b2", 3)).unwrap());
    }

    #[test]
    fn word_problem_examples() {
        assert!(is_trivial_braid(&braid("b1 b1^-1", 3)).unwrap());
        assert!(is_trivial_braid(&braid("b1 b2 b1 b2^-1 b1^-1 b2^-1", 3)).unwrap());
        assert!(!is_trivial_braid(&braid("b1", 3)).unwrap());
        assert!(is_trivial_braid(&braid("1", 1)).unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(BraidWord::parse("b2", 2), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(BraidWord::parse("b1 c2", 3), Err(Error::Syntax { position: 3, .. })));
        assert!(BraidWord::parse("b0", 3).is_err());
        assert_eq!(braid(" b1  b2^-1 ", 3).to_string(), "b1 b2^-1");
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_action(&braid("b1", 2), 2).unwrap(), pillar_switching_action(1, 2).unwrap());
        assert!(psi_action(&braid("", 2), 2).unwrap().is_identity());
        assert!(psi_action(&braid("b1 b1^-1", 2), 2).unwrap().is_identity());
        for i in 1..=2 {
            let psi = psi_action(&BraidWord::new(4, vec![BraidLetter::new(i, false)]).unwrap(), 4).unwrap();
            assert_eq!(psi, psi_twist_word(i, 4).unwrap().evaluate().unwrap());
        }
        assert!(matches!(psi_action(&braid("b1", 3), 2), Err(Error::StrandMismatch { .. })));
        assert!(matches!(psi_action(&braid("", 1), 1), Err(Error::Genus { .. })));
    }

    #[test]
    fn restriction_examples() {
        for i in 1..4 {
            let r = restrict_to_z(&pillar_switching_yz(i, 4).unwrap()).unwrap();
            let beta = BraidWord::new(4, vec![BraidLetter::new(i, false)]).unwrap();
            assert_eq!(r, artin_action(&beta).unwrap());
        }
        let id = restrict_to_z(&FreeEndomorphism::identity(Basis::Yz(3))).unwrap();
        assert!(id.is_identity());
        assert_eq!(id.basis(), Basis::Abstract(3));

        let bad = FreeEndomorphism::from_assignments(Basis::Yz(2), &[(Symbol::z(1), "y1 z1")]).unwrap();
        match restrict_to_z(&bad) {
            Err(Error::NotZStable { generator, image }) => {
                assert_eq!(generator, "z1");
                assert_eq!(image, "y1 z1");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn relations_small_genus() {
        let r = verify_psi_relations(2).unwrap();
        assert_eq!(r.cases.len(), 1);
        assert!(r.holds());
        let r = verify_psi_relations(3).unwrap();
        assert!(r.holds());
        let r = verify_psi_relations(4).unwrap();
        assert_eq!(r.cases.iter().filter(|c| c.name.starts_with("commute")).count(), 3);
        assert!(r.holds());
    }

    #[test]
    fn artin_restriction_small_genus() {
        for g in 2..=4 {
            let r = verify_artin_restriction(g).unwrap();
            assert!(r.holds(), "{r:#?}");
        }
    }
}
