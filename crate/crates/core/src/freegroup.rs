//! Freely reduced words over an indexed alphabet.
//!
//! A [`Word`] never holds an adjacent pair `s s^-1`; every constructor goes
//! through [`WordBuilder`], a stack that cancels on push. Equality of group
//! elements is therefore plain equality of letter sequences.
//!
//! Text form: whitespace-separated tokens `x<k>`, `y<k>`, `z<k>`, `al<k>`,
//! each optionally followed by `^-1`. The identity is written `1`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    Y,
    Z,
    Alpha,
}

impl Family {
    fn code(self) -> i32 {
        match self {
            Family::X => 0,
            Family::Y => 1,
            Family::Z => 2,
            Family::Alpha => 3,
        }
    }

    fn from_code(code: i32) -> Family {
        match code {
            0 => Family::X,
            1 => Family::Y,
            2 => Family::Z,
            _ => Family::Alpha,
        }
    }

    pub fn prefix(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::Y => "y",
            Family::Z => "z",
            Family::Alpha => "al",
        }
    }
}

/// A named generator such as `x3` or `al1`. Indices start at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    pub family: Family,
    pub index: u32,
}

impl Symbol {
    pub const fn new(family: Family, index: u32) -> Self {
        Symbol { family, index }
    }

    pub const fn x(index: u32) -> Self {
        Symbol::new(Family::X, index)
    }

    pub const fn y(index: u32) -> Self {
        Symbol::new(Family::Y, index)
    }

    pub const fn z(index: u32) -> Self {
        Symbol::new(Family::Z, index)
    }

    pub const fn alpha(index: u32) -> Self {
        Symbol::new(Family::Alpha, index)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.prefix(), self.index)
    }
}

/// One occurrence of a generator or its inverse, packed into a signed integer
/// so that cancellation is a single comparison.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(symbol: Symbol, inverse: bool) -> Self {
        debug_assert!(symbol.index >= 1 && symbol.index < (1 << 28));
        let magnitude = ((symbol.index as i32) << 2) | symbol.family.code();
        Letter(if inverse { -magnitude } else { magnitude })
    }

    pub fn symbol(self) -> Symbol {
        let magnitude = self.0.abs();
        Symbol::new(Family::from_code(magnitude & 3), (magnitude >> 2) as u32)
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn sign(self) -> i8 {
        if self.is_inverse() {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inverse() {
            write!(f, "{}^-1", self.symbol())
        } else {
            write!(f, "{}", self.symbol())
        }
    }
}

/// The free basis a word is written in.
///
/// `Xy(g)` is the standard basis `x1..xg, y1..yg` of the surface group,
/// `Yz(g)` the alternative basis `y1..yg, z1..zg`, and `Abstract(n)` the
/// basis `al1..aln` of the braid group's Artin representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Xy(u32),
    Yz(u32),
    Abstract(u32),
}

impl Basis {
    pub fn rank(self) -> usize {
        match self {
            Basis::Xy(g) | Basis::Yz(g) => 2 * g as usize,
            Basis::Abstract(n) => n as usize,
        }
    }

    pub fn families(self) -> &'static [Family] {
        match self {
            Basis::Xy(_) => &[Family::X, Family::Y],
            Basis::Yz(_) => &[Family::Y, Family::Z],
            Basis::Abstract(_) => &[Family::Alpha],
        }
    }

    fn block(self) -> u32 {
        match self {
            Basis::Xy(g) | Basis::Yz(g) | Basis::Abstract(g) => g,
        }
    }

    /// Position of `symbol` in this basis, or `None` when it is not a generator.
    pub fn position(self, symbol: Symbol) -> Option<usize> {
        let block = self.block();
        if symbol.index == 0 || symbol.index > block {
            return None;
        }
        let slot = self.families().iter().position(|&f| f == symbol.family)?;
        Some(slot * block as usize + symbol.index as usize - 1)
    }

    /// Generator at `position`; panics when `position >= rank`.
    pub fn symbol(self, position: usize) -> Symbol {
        assert!(position < self.rank(), "generator {position} outside {self}");
        let block = self.block() as usize;
        let family = self.families()[position / block];
        Symbol::new(family, (position % block) as u32 + 1)
    }

    pub fn symbols(self) -> impl Iterator<Item = Symbol> {
        (0..self.rank()).map(move |p| self.symbol(p))
    }

    pub fn admits(self, symbol: Symbol) -> bool {
        self.position(symbol).is_some()
    }

    fn check(self, symbol: Symbol) -> Result<usize> {
        if let Some(p) = self.position(symbol) {
            return Ok(p);
        }
        if self.families().contains(&symbol.family) && symbol.index >= 1 {
            Err(Error::IndexOutOfRange { name: symbol.to_string(), context: self.to_string() })
        } else {
            Err(Error::BasisMismatch { symbol, basis: self })
        }
    }

    pub(crate) fn same_as(self, other: Basis) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::DifferentBases { left: self, right: other })
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Xy(g) => write!(f, "XY({g})"),
            Basis::Yz(g) => write!(f, "YZ({g})"),
            Basis::Abstract(n) => write!(f, "ABSTRACT({n})"),
        }
    }
}

/// Stack-based free reduction. Letters pushed onto the builder cancel
/// against the current tail, so the content is reduced at every moment.
#[derive(Debug, Clone)]
pub struct WordBuilder {
    basis: Basis,
    letters: Vec<Letter>,
}

impl WordBuilder {
    pub fn new(basis: Basis) -> Self {
        WordBuilder { basis, letters: Vec::new() }
    }

    pub fn with_capacity(basis: Basis, capacity: usize) -> Self {
        WordBuilder { basis, letters: Vec::with_capacity(capacity) }
    }

    /// Pushes a letter that is already known to belong to the basis.
    pub(crate) fn push_unchecked(&mut self, letter: Letter) {
        if self.letters.last() == Some(&letter.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
        }
    }

    pub fn push(&mut self, letter: Letter) -> Result<()> {
        self.basis.check(letter.symbol())?;
        self.push_unchecked(letter);
        Ok(())
    }

    pub fn push_word(&mut self, word: &Word) {
        debug_assert_eq!(word.basis, self.basis);
        for &l in &word.letters {
            self.push_unchecked(l);
        }
    }

    pub fn push_inverse(&mut self, word: &Word) {
        debug_assert_eq!(word.basis, self.basis);
        for &l in word.letters.iter().rev() {
            self.push_unchecked(l.inverse());
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn finish(self) -> Word {
        Word { basis: self.basis, letters: self.letters }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    basis: Basis,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(basis: Basis) -> Self {
        Word { basis, letters: Vec::new() }
    }

    pub fn generator(basis: Basis, symbol: Symbol) -> Result<Self> {
        basis.check(symbol)?;
        Ok(Word { basis, letters: vec![Letter::new(symbol, false)] })
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I>(basis: Basis, letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut b = WordBuilder::new(basis);
        for l in letters {
            b.push(l)?;
        }
        Ok(b.finish())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &Word) -> Result<Word> {
        self.basis.same_as(other.basis)?;
        let mut b = WordBuilder::with_capacity(self.basis, self.len() + other.len());
        b.push_word(self);
        b.push_word(other);
        Ok(b.finish())
    }

    /// Multiplies a sequence of words over the same basis.
    pub fn product<'a, I>(basis: Basis, words: I) -> Result<Word>
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let mut b = WordBuilder::new(basis);
        for w in words {
            basis.same_as(w.basis)?;
            b.push_word(w);
        }
        Ok(b.finish())
    }

    pub fn inverse(&self) -> Word {
        Word { basis: self.basis, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exponent: i64) -> Word {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut b = WordBuilder::new(self.basis);
        for _ in 0..exponent.unsigned_abs() {
            b.push_word(&base);
        }
        b.finish()
    }

    /// True when every letter belongs to `family`.
    pub fn only_family(&self, family: Family) -> bool {
        self.letters.iter().all(|l| l.symbol().family == family)
    }

    pub fn parse(text: &str, basis: Basis) -> Result<Word> {
        Word::reduce(basis, parse_letters(text)?.into_iter().map(|(s, inv)| Letter::new(s, inv)))
    }

    /// Reinterprets the letters over another basis. Used when two bases
    /// share a family, e.g. `al<k>` standing for `z<k>`.
    pub(crate) fn from_reduced(basis: Basis, letters: Vec<Letter>) -> Word {
        Word { basis, letters }
    }
}

impl fmt::Display for Word {
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

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Tokenizes word text into `(symbol, inverse)` pairs without consulting a
/// basis. `"1"` yields the empty list.
pub fn parse_letters(text: &str) -> Result<Vec<(Symbol, bool)>> {
    let tokens: Vec<(usize, &str)> = split_tokens(text);
    if tokens.is_empty() {
        return Err(Error::Syntax { position: text.len(), message: "empty word".into() });
    }
    if tokens.len() == 1 && tokens[0].1 == "1" {
        return Ok(Vec::new());
    }
    tokens.into_iter().map(|(pos, tok)| parse_token(pos, tok)).collect()
}

fn split_tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out
}

fn parse_token(position: usize, token: &str) -> Result<(Symbol, bool)> {
    let syntax = |offset: usize, message: String| Error::Syntax { position: position + offset, message };
    let (name, inverse) = match token.strip_suffix("^-1") {
        Some(n) => (n, true),
        None => (token, false),
    };
    let (family, digits) = if let Some(d) = name.strip_prefix("al") {
        (Family::Alpha, d)
    } else if let Some(d) = name.strip_prefix('x') {
        (Family::X, d)
    } else if let Some(d) = name.strip_prefix('y') {
        (Family::Y, d)
    } else if let Some(d) = name.strip_prefix('z') {
        (Family::Z, d)
    } else if name == "1" {
        return Err(syntax(0, "`1` must stand alone".into()));
    } else {
        return Err(syntax(0, format!("unknown generator `{token}`")));
    };
    let offset = name.len() - digits.len();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(offset, format!("expected a decimal index in `{token}`")));
    }
    let index: u32 = digits
        .parse()
        .ok()
        .filter(|&k| (1..(1 << 28)).contains(&k))
        .ok_or_else(|| syntax(offset, format!("index in `{token}` must be a positive integer")))?;
    Ok((Symbol::new(family, index), inverse))
}

#[cfg(test)]
mod tests {
    use super::*;

    const XY2: Basis = Basis::Xy(2);

    fn w(text: &str, basis: Basis) -> Word {
        Word::parse(text, basis).unwrap()
    }

    fn raw(items: &[(Symbol, bool)]) -> Vec<Letter> {
        items.iter().map(|&(s, i)| Letter::new(s, i)).collect()
    }

    /// Repeatedly deletes the first cancelling pair until none is left.
    fn naive_reduce(mut letters: Vec<Letter>) -> Vec<Letter> {
        loop {
            let hit = letters.windows(2).position(|p| p[0] == p[1].inverse());
            match hit {
                Some(k) => {
                    letters.drain(k..k + 2);
                }
                None => return letters,
            }
        }
    }

    #[test]
    fn reduce_examples() {
        let e = Word::reduce(XY2, raw(&[(Symbol::x(1), false), (Symbol::x(1), true)])).unwrap();
        assert!(e.is_identity());

        let r = Word::reduce(
            XY2,
            raw(&[(Symbol::y(1), false), (Symbol::x(1), true), (Symbol::x(1), false), (Symbol::y(2), false)]),
        )
        .unwrap();
        assert_eq!(r, w("y1 y2", XY2));

        let yz = Basis::Yz(2);
        let input = raw(&[
            (Symbol::z(1), true),
            (Symbol::y(1), false),
            (Symbol::y(1), true),
            (Symbol::z(1), false),
            (Symbol::y(2), false),
        ]);
        let expected = naive_reduce(input.clone());
        assert_eq!(expected, raw(&[(Symbol::y(2), false)]));
        assert_eq!(Word::reduce(yz, input).unwrap().letters(), &expected[..]);
    }

    #[test]
    fn reduce_rejects_foreign_letters() {
        let err = Word::reduce(XY2, raw(&[(Symbol::z(1), false)])).unwrap_err();
        assert!(matches!(err, Error::BasisMismatch { .. }));
        let err = Word::reduce(XY2, raw(&[(Symbol::x(3), false)])).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange { .. }));
    }

    #[test]
    fn multiply_and_invert() {
        let u = w("y1 x1^-1", XY2);
        let v = w("x1 y2", XY2);
        assert_eq!(u.multiply(&v).unwrap(), w("y1 y2", XY2));
        assert_eq!(u.multiply(&Word::identity(XY2)).unwrap(), u);
        assert!(Word::identity(XY2).inverse().is_identity());
        assert_eq!(w("x1 y2^-1", XY2).inverse(), w("y2 x1^-1", XY2));
        // z1 written out in x and y
        let z1 = w("x1^-1 y2 x2 y2^-1", XY2);
        assert_eq!(z1.inverse(), w("y2 x2^-1 y2^-1 x1", XY2));
        assert!(matches!(u.multiply(&Word::identity(Basis::Yz(2))), Err(Error::DifferentBases { .. })));
    }

    #[test]
    fn parse_examples() {
        let word = w("x1 y1^-1", XY2);
        assert_eq!(word.letters(), &raw(&[(Symbol::x(1), false), (Symbol::y(1), true)])[..]);
        assert!(matches!(Word::parse("x3", XY2), Err(Error::IndexOutOfRange { .. })));
        let s0x1 = w("z1^-1 y1 z1 y1^-1 z1", Basis::Yz(2));
        assert_eq!(s0x1.len(), 5);
        assert!(Word::parse("1", XY2).unwrap().is_identity());
        assert!(Word::parse("al2 al1^-1", Basis::Abstract(3)).is_ok());
    }

    #[test]
    fn parse_errors_carry_positions() {
        match Word::parse("x1 q2", XY2) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        match Word::parse("x1  y", XY2) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(Word::parse("", XY2), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse("x0", XY2), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse("x1 1", XY2), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse("x1^-2", XY2), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse("z1", XY2), Err(Error::BasisMismatch { .. })));
    }

    #[test]
    fn format_examples() {
        assert_eq!(Word::identity(XY2).to_string(), "1");
        assert_eq!(w("x1 y1^-1", XY2).to_string(), "x1 y1^-1");
        assert_eq!(w("z1^-1 y1^-1 z1", Basis::Yz(2)).to_string(), "z1^-1 y1^-1 z1");
        assert_eq!(w("  x1\ty2   ", XY2).to_string(), "x1 y2");
    }

    #[test]
    fn basis_positions_round_trip() {
        for basis in [Basis::Xy(3), Basis::Yz(4), Basis::Abstract(5)] {
            for p in 0..basis.rank() {
                assert_eq!(basis.position(basis.symbol(p)), Some(p));
            }
        }
        assert_eq!(Basis::Xy(2).symbol(2), Symbol::y(1));
        assert_eq!(Basis::Yz(2).symbol(3), Symbol::z(2));
    }

    #[test]
    fn letter_packing() {
        for s in [Symbol::x(1), Symbol::y(7), Symbol::z(12), Symbol::alpha(3)] {
            let l = Letter::new(s, true);
            assert_eq!(l.symbol(), s);
            assert!(l.is_inverse());
            assert_eq!(l.inverse().sign(), 1);
        }
    }

    #[test]
    fn pow_matches_repeated_product() {
        let u = w("x1 y2^-1", XY2);
        assert_eq!(u.pow(3), Word::product(XY2, [&u, &u, &u]).unwrap());
        assert_eq!(u.pow(-2), u.inverse().pow(2));
        assert!(u.pow(0).is_identity());
    }
}
