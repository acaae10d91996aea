//! The standard Dehn twists `a_i`, `b_i`, `w_i` and products of them.

use std::fmt;

use crate::automorphism::{FreeEndomorphism, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::freegroup::{Basis, Symbol};

use super::surface::expand_z;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwistKind {
    A,
    B,
    W,
}

impl TwistKind {
    fn prefix(self) -> char {
        match self {
            TwistKind::A => 'a',
            TwistKind::B => 'b',
            TwistKind::W => 'w',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwistSymbol {
    pub kind: TwistKind,
    pub index: u32,
    pub inverse: bool,
}

impl TwistSymbol {
    pub const fn new(kind: TwistKind, index: u32, inverse: bool) -> Self {
        TwistSymbol { kind, index, inverse }
    }

    pub fn inverse(self) -> Self {
        TwistSymbol { inverse: !self.inverse, ..self }
    }

    pub fn check(self, genus: u32) -> Result<()> {
        let top = match self.kind {
            TwistKind::A | TwistKind::B => genus,
            TwistKind::W => genus.saturating_sub(1),
        };
        if self.index == 0 || self.index > top {
            return Err(Error::IndexOutOfRange { name: self.to_string(), context: format!("genus {genus}") });
        }
        Ok(())
    }
}

impl fmt::Display for TwistSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.prefix(), self.index)?;
        if self.inverse {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// A product of twists in function order: the rightmost symbol acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwistWord {
    genus: u32,
    symbols: Vec<TwistSymbol>,
}

impl TwistWord {
    pub fn new(genus: u32, symbols: Vec<TwistSymbol>) -> Result<Self> {
        for s in &symbols {
            s.check(genus)?;
        }
        Ok(TwistWord { genus, symbols })
    }

    /// Parses tokens `a<k>`, `b<k>`, `w<k>` with optional `^-1`. An empty
    /// string (or `1`) is the identity.
    pub fn parse(text: &str, genus: u32) -> Result<Self> {
        let mut symbols = Vec::new();
        let mut offset = 0;
        for token in text.split_whitespace() {
            let position = text[offset..].find(token).map_or(offset, |p| p + offset);
            offset = position + token.len();
            if token == "1" && text.split_whitespace().count() == 1 {
                break;
            }
            let syntax = |message: String| Error::Syntax { position, message };
            let (name, inverse) = match token.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (token, false),
            };
            let mut chars = name.chars();
            let kind = match chars.next() {
                Some('a') => TwistKind::A,
                Some('b') => TwistKind::B,
                Some('w') => TwistKind::W,
                _ => return Err(syntax(format!("unknown twist `{token}`"))),
            };
            let digits = chars.as_str();
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(syntax(format!("expected a decimal index in `{token}`")));
            }
            let index: u32 = digits.parse().map_err(|_| syntax(format!("index in `{token}` is too large")))?;
            symbols.push(TwistSymbol::new(kind, index, inverse));
        }
        TwistWord::new(genus, symbols)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn symbols(&self) -> &[TwistSymbol] {
        &self.symbols
    }

    pub fn inverse(&self) -> TwistWord {
        TwistWord { genus: self.genus, symbols: self.symbols.iter().rev().map(|s| s.inverse()).collect() }
    }

    pub fn evaluate(&self) -> Result<FreeEndomorphism> {
        self.evaluate_within(DEFAULT_BUDGET)
    }

    pub fn evaluate_within(&self, budget: usize) -> Result<FreeEndomorphism> {
        let mut acc = FreeEndomorphism::identity(Basis::Xy(self.genus));
        for &s in self.symbols.iter().rev() {
            acc = dehn_twist_action(s, self.genus)?.compose_within(&acc, budget)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.is_empty() {
            return f.write_str("1");
        }
        for (k, s) in self.symbols.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Action of a single twist (or its inverse) on `π1` of the genus-`genus`
/// surface with one boundary circle, over the `x, y` basis. Generators not
/// listed are fixed.
///
/// ```text
/// a_i : y_i ↦ y_i x_i^-1
/// b_i : x_i ↦ x_i y_i
/// w_i : x_i ↦ z_i^-1 y_{i+1} x_{i+1} y_{i+1}^-1,  y_i ↦ y_i z_i,  y_{i+1} ↦ z_i^-1 y_{i+1}
/// ```
///
/// with `z_i = x_i^-1 y_{i+1} x_{i+1} y_{i+1}^-1`. Since `w_i` fixes `z_i`
/// its inverse conjugates the other way: `x_i ↦ z_i x_i z_i^-1`,
/// `y_i ↦ y_i z_i^-1`, `y_{i+1} ↦ z_i y_{i+1}`.
pub fn dehn_twist_action(symbol: TwistSymbol, genus: u32) -> Result<FreeEndomorphism> {
    symbol.check(genus)?;
    let i = symbol.index;
    let j = i + 1;
    let assignments: Vec<(Symbol, String)> = match (symbol.kind, symbol.inverse) {
        (TwistKind::A, false) => vec![(Symbol::y(i), format!("y{i} x{i}^-1"))],
        (TwistKind::A, true) => vec![(Symbol::y(i), format!("y{i} x{i}"))],
        (TwistKind::B, false) => vec![(Symbol::x(i), format!("x{i} y{i}"))],
        (TwistKind::B, true) => vec![(Symbol::x(i), format!("x{i} y{i}^-1"))],
        (TwistKind::W, false) => vec![
            (Symbol::x(i), format!("z{i}^-1 y{j} x{j} y{j}^-1")),
            (Symbol::y(i), format!("y{i} z{i}")),
            (Symbol::y(j), format!("z{i}^-1 y{j}")),
        ],
        (TwistKind::W, true) => vec![
            (Symbol::x(i), format!("z{i} x{i} z{i}^-1")),
            (Symbol::y(i), format!("y{i} z{i}^-1")),
            (Symbol::y(j), format!("z{i} y{j}")),
        ],
    };
    let basis = Basis::Xy(genus);
    let mut images: Vec<_> = FreeEndomorphism::identity(basis).images().to_vec();
    for (s, text) in assignments {
        images[basis.position(s).expect("index checked")] = expand_z(&text, genus)?;
    }
    FreeEndomorphism::new(basis, images)
}

/// Every twist generator of the given genus, positive sign.
pub fn twist_generators(genus: u32) -> Vec<TwistSymbol> {
    let mut out = Vec::new();
    for i in 1..=genus {
        out.push(TwistSymbol::new(TwistKind::A, i, false));
        out.push(TwistSymbol::new(TwistKind::B, i, false));
    }
    for i in 1..genus {
        out.push(TwistSymbol::new(TwistKind::W, i, false));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::verify_inverse_pair;
    use crate::freegroup::Word;

    fn w(text: &str, g: u32) -> Word {
        Word::parse(text, Basis::Xy(g)).unwrap()
    }

    #[test]
    fn a1_genus_two() {
        let a1 = dehn_twist_action(TwistSymbol::new(TwistKind::A, 1, false), 2).unwrap();
        assert_eq!(a1.image(Symbol::y(1)).unwrap(), &w("y1 x1^-1", 2));
        for s in [Symbol::x(1), Symbol::x(2), Symbol::y(2)] {
            assert_eq!(a1.image(s).unwrap(), &Word::generator(Basis::Xy(2), s).unwrap());
        }
    }

    #[test]
    fn b1_inverse_genus_two() {
        let b = dehn_twist_action(TwistSymbol::new(TwistKind::B, 1, false), 2).unwrap();
        let b_inv = dehn_twist_action(TwistSymbol::new(TwistKind::B, 1, true), 2).unwrap();
        assert_eq!(b_inv.image(Symbol::x(1)).unwrap(), &w("x1 y1^-1", 2));
        assert!(verify_inverse_pair(&b, &b_inv).unwrap());
    }

    #[test]
    fn w1_genus_two() {
        let w1 = dehn_twist_action(TwistSymbol::new(TwistKind::W, 1, false), 2).unwrap();
        assert_eq!(w1.image(Symbol::y(1)).unwrap(), &w("y1 x1^-1 y2 x2 y2^-1", 2));
        assert_eq!(w1.image(Symbol::x(2)).unwrap(), &w("x2", 2));
    }

    #[test]
    fn index_validation() {
        assert!(dehn_twist_action(TwistSymbol::new(TwistKind::W, 2, false), 2).is_err());
        assert!(dehn_twist_action(TwistSymbol::new(TwistKind::A, 3, false), 2).is_err());
        assert!(dehn_twist_action(TwistSymbol::new(TwistKind::A, 0, false), 2).is_err());
        assert!(dehn_twist_action(TwistSymbol::new(TwistKind::W, 1, false), 1).is_err());
        assert!(TwistWord::parse("a1 c2", 2).is_err());
        assert!(matches!(TwistWord::parse("a1 w2", 2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn evaluate_examples() {
        assert!(TwistWord::parse("", 2).unwrap().evaluate().unwrap().is_identity());
        assert!(TwistWord::parse("1", 2).unwrap().evaluate().unwrap().is_identity());
        // a1 acts first: y1 -> y1 x1^-1 -> y1 y1^-1 x1^-1
        let ba = TwistWord::parse("b1 a1", 2).unwrap().evaluate().unwrap();
        assert_eq!(ba.image(Symbol::y(1)).unwrap(), &w("x1^-1", 2));
        let f = TwistWord::parse("a2^-1 w1 a1 b1 w1 a1 b1", 2).unwrap().evaluate().unwrap();
        assert_eq!(f.image(Symbol::y(1)).unwrap(), &expand_z("z1^-1 y1^-1 z1", 2).unwrap());
    }

    #[test]
    fn twist_word_text_round_trip() {
        let tw = TwistWord::parse("a2^-1  w1 a1 b1", 3).unwrap();
        assert_eq!(tw.to_string(), "a2^-1 w1 a1 b1");
        assert_eq!(tw.inverse().to_string(), "b1^-1 a1^-1 w1^-1 a2");
        let id = tw.evaluate().unwrap().compose(&tw.inverse().evaluate().unwrap()).unwrap();
        assert!(id.is_identity());
    }
}
