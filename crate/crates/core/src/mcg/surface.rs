//! Surface-group data over the `x, y` basis: the `z` loops, the boundary
//! relator and the pillar-switching actions.

use crate::automorphism::{FreeEndomorphism, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::freegroup::{parse_letters, Basis, Family, Symbol, Word, WordBuilder};

use super::twist::{dehn_twist_action, TwistWord};

/// `z_i` written in the `x, y` basis. For `i < g` this is
/// `x_i^-1 y_{i+1} x_{i+1} y_{i+1}^-1`; `z_g` is `x_g^-1`.
pub fn z_word(index: u32, genus: u32) -> Result<Word> {
    let basis = Basis::Xy(genus);
    if index == 0 || index > genus {
        return Err(Error::IndexOutOfRange { name: format!("z{index}"), context: basis.to_string() });
    }
    if index == genus {
        return Ok(Word::generator(basis, Symbol::x(genus))?.inverse());
    }
    let j = index + 1;
    Word::parse(&format!("x{index}^-1 y{j} x{j} y{j}^-1"), basis)
}

/// Parses word text over the `x, y` basis where `z<k>` tokens abbreviate
/// [`z_word`].
pub fn expand_z(text: &str, genus: u32) -> Result<Word> {
    let basis = Basis::Xy(genus);
    let mut b = WordBuilder::new(basis);
    for (symbol, inverse) in parse_letters(text)? {
        if symbol.family == Family::Z {
            let z = z_word(symbol.index, genus)?;
            if inverse {
                b.push_inverse(&z);
            } else {
                b.push_word(&z);
            }
        } else {
            b.push(crate::freegroup::Letter::new(symbol, inverse))?;
        }
    }
    Ok(b.finish())
}

/// Bracket expansion used for the boundary relator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CommutatorConvention {
    /// `[u, v] = u v u^-1 v^-1`
    UVUinvVinv,
    /// `[u, v] = u^-1 v^-1 u v`
    UinvVinvUV,
}

impl CommutatorConvention {
    pub fn commutator(self, u: &Word, v: &Word) -> Result<Word> {
        let (ui, vi) = (u.inverse(), v.inverse());
        match self {
            CommutatorConvention::UVUinvVinv => Word::product(u.basis(), [u, v, &ui, &vi]),
            CommutatorConvention::UinvVinvUV => Word::product(u.basis(), [&ui, &vi, u, v]),
        }
    }
}

/// The convention under which every twist generator fixes the relator.
/// [`select_commutator_convention`] re-derives it.
pub const RELATOR_CONVENTION: CommutatorConvention = CommutatorConvention::UVUinvVinv;

/// `[y_1, x_1] ⋯ [y_g, x_g]` under the given bracket.
pub fn relator_with(genus: u32, convention: CommutatorConvention) -> Result<Word> {
    let basis = Basis::Xy(genus);
    let mut b = WordBuilder::new(basis);
    for i in 1..=genus {
        let y = Word::generator(basis, Symbol::y(i))?;
        let x = Word::generator(basis, Symbol::x(i))?;
        b.push_word(&convention.commutator(&y, &x)?);
    }
    Ok(b.finish())
}

/// The boundary loop `R = [y_1, x_1] ⋯ [y_g, x_g]`, `[u, v] = u v u^-1 v^-1`.
pub fn fundamental_relator(genus: u32) -> Word {
    relator_with(genus, RELATOR_CONVENTION).expect("generators of XY(g)")
}

/// Exact (not up to conjugacy) invariance of the boundary relator.
pub fn fixes_relator(f: &FreeEndomorphism) -> Result<bool> {
    match f.basis() {
        Basis::Xy(g) => Ok(f.apply(&fundamental_relator(g))? == fundamental_relator(g)),
        found => Err(Error::WrongBasis { expected: "x, y", found }),
    }
}

/// Runs both bracket conventions against the twist generators at genus 2
/// (both signs) and returns those under which all of them fix the relator.
pub fn conventions_fixed_by_twists() -> Result<Vec<CommutatorConvention>> {
    let genus = 2;
    let mut passing = Vec::new();
    for convention in [CommutatorConvention::UVUinvVinv, CommutatorConvention::UinvVinvUV] {
        let r = relator_with(genus, convention)?;
        let mut ok = true;
        for s in super::twist::twist_generators(genus) {
            for sym in [s, s.inverse()] {
                ok &= dehn_twist_action(sym, genus)?.apply(&r)? == r;
            }
        }
        if ok {
            passing.push(convention);
        }
    }
    Ok(passing)
}

/// The unique convention that passes [`conventions_fixed_by_twists`], if any.
pub fn select_commutator_convention() -> Result<Option<CommutatorConvention>> {
    let passing = conventions_fixed_by_twists()?;
    Ok(if passing.len() == 1 { Some(passing[0]) } else { None })
}

fn check_sigma(index: u32, genus: u32) -> Result<()> {
    if genus < 2 {
        return Err(Error::Genus { genus, reason: "pillar switchings need genus at least 2" });
    }
    if index >= genus {
        return Err(Error::IndexOutOfRange { name: format!("sigma{index}"), context: format!("genus {genus}") });
    }
    Ok(())
}

/// Action of the pillar switching `σ_index` (`0 ≤ index ≤ genus - 1`) over
/// the `x, y` basis, `z` loops expanded. Generators not listed are fixed.
///
/// ```text
/// σ_0     : x_1 ↦ z_1^-1 y_1 z_1 y_1^-1 z_1
///           y_1 ↦ z_1^-1 y_1^-1 z_1
///           y_2 ↦ z_1^-1 y_1 z_1 y_2
/// σ_j     : x_j     ↦ y_{j+1}^-1 x_j y_{j+1}                  (1 ≤ j ≤ g-2)
///           x_{j+1} ↦ z_{j+1}^-1 y_{j+1} z_{j+1} y_{j+1}^-1 x_j z_{j+1}
///           y_j     ↦ y_j y_{j+1}
///           y_{j+1} ↦ z_{j+1}^-1 y_{j+1}^-1 z_{j+1}
///           y_{j+2} ↦ z_{j+1}^-1 y_{j+1} x_{j+1}^-1 y_{j+2} x_{j+2}
/// σ_{g-1} : x_{g-1} ↦ y_g^-1 x_{g-1} y_g
///           x_g     ↦ x_g z_{g-1}^-1 x_g^-1
///           y_{g-1} ↦ y_{g-1} y_g
///           y_g     ↦ x_g y_g^-1 x_g^-1
/// ```
pub fn pillar_switching_action(index: u32, genus: u32) -> Result<FreeEndomorphism> {
    check_sigma(index, genus)?;
    let g = genus;
    let assignments: Vec<(Symbol, String)> = if index == 0 {
        vec![
            (Symbol::x(1), "z1^-1 y1 z1 y1^-1 z1".into()),
            (Symbol::y(1), "z1^-1 y1^-1 z1".into()),
            (Symbol::y(2), "z1^-1 y1 z1 y2".into()),
        ]
    } else if index < g - 1 {
        let (j, k, l) = (index, index + 1, index + 2);
        vec![
            (Symbol::x(j), format!("y{k}^-1 x{j} y{k}")),
            (Symbol::x(k), format!("z{k}^-1 y{k} z{k} y{k}^-1 x{j} z{k}")),
            (Symbol::y(j), format!("y{j} y{k}")),
            (Symbol::y(k), format!("z{k}^-1 y{k}^-1 z{k}")),
            (Symbol::y(l), format!("z{k}^-1 y{k} x{k}^-1 y{l} x{l}")),
        ]
    } else {
        let h = g - 1;
        vec![
            (Symbol::x(h), format!("y{g}^-1 x{h} y{g}")),
            (Symbol::x(g), format!("x{g} z{h}^-1 x{g}^-1")),
            (Symbol::y(h), format!("y{h} y{g}")),
            (Symbol::y(g), format!("x{g} y{g}^-1 x{g}^-1")),
        ]
    };
    let basis = Basis::Xy(g);
    let mut images = FreeEndomorphism::identity(basis).images().to_vec();
    for (s, text) in assignments {
        images[basis.position(s).expect("index checked")] = expand_z(&text, g)?;
    }
    FreeEndomorphism::new(basis, images)
}

/// The factorization of `σ_index` into standard twists, in function order.
///
/// ```text
/// σ_0     = a_2^-1 (w_1 a_1 b_1)^2
/// σ_{i-1} = a_{i+1}^-1 a_i b_i w_i w_{i-1} a_{i-1}^-1 b_i a_i     (2 ≤ i ≤ g-1)
/// σ_{g-1} = (w_{g-1} a_g b_g)^2 a_{g-1}^-1
/// ```
pub fn sigma_twist_word(index: u32, genus: u32) -> Result<TwistWord> {
    check_sigma(index, genus)?;
    let g = genus;
    let text = if index == 0 {
        "a2^-1 w1 a1 b1 w1 a1 b1".to_string()
    } else if index < g - 1 {
        let (h, i, j) = (index, index + 1, index + 2);
        format!("a{j}^-1 a{i} b{i} w{i} w{h} a{h}^-1 b{i} a{i}")
    } else {
        let h = g - 1;
        format!("w{h} a{g} b{g} w{h} a{g} b{g} a{h}^-1")
    };
    TwistWord::parse(&text, g)
}

/// Inverse of `σ_index`, obtained by evaluating the inverted twist
/// factorization. Pair it with [`pillar_switching_action`] through
/// `verify_inverse_pair` before relying on it.
pub fn pillar_switching_inverse(index: u32, genus: u32) -> Result<FreeEndomorphism> {
    sigma_twist_word(index, genus)?.inverse().evaluate_within(DEFAULT_BUDGET)
}
