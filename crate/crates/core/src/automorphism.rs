//! Endomorphisms of a free group given by the images of its generators.
//!
//! Composition follows function notation: `f.compose(&h)` applies `h` first
//! and `f` second. A product of generators written left to right therefore
//! acts with its rightmost factor first.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freegroup::{Basis, Family, Symbol, Word, WordBuilder};

/// Default cap on the total number of image letters a composition may produce.
pub const DEFAULT_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeEndomorphism {
    basis: Basis,
    images: Vec<Word>,
}

/// Substitutes `images[position]` for each generator of `word`'s basis,
/// writing into `target`.
pub(crate) fn substitute(word: &Word, images: &[Word], target: Basis, budget: usize) -> Result<Word> {
    let source = word.basis();
    let mut b = WordBuilder::new(target);
    for &l in word.letters() {
        let p = source.position(l.symbol()).expect("letters of a word belong to its basis");
        if l.is_inverse() {
            b.push_inverse(&images[p]);
        } else {
            b.push_word(&images[p]);
        }
        if b.len() > budget {
            return Err(Error::BudgetExceeded { budget });
        }
    }
    Ok(b.finish())
}

impl FreeEndomorphism {
    pub fn new(basis: Basis, images: Vec<Word>) -> Result<Self> {
        if images.len() != basis.rank() {
            return Err(Error::ImageCount { expected: basis.rank(), found: images.len() });
        }
        for im in &images {
            basis.same_as(im.basis())?;
        }
        Ok(FreeEndomorphism { basis, images })
    }

    pub fn identity(basis: Basis) -> Self {
        let images = basis.symbols().map(|s| Word::generator(basis, s).expect("basis symbol")).collect();
        FreeEndomorphism { basis, images }
    }

    /// Builds the endomorphism sending each listed generator to the given
    /// text and fixing every other generator.
    pub fn from_assignments(basis: Basis, assignments: &[(Symbol, &str)]) -> Result<Self> {
        let mut f = FreeEndomorphism::identity(basis);
        for &(symbol, text) in assignments {
            let p = basis.position(symbol).ok_or(Error::BasisMismatch { symbol, basis })?;
            f.images[p] = Word::parse(text, basis)?;
        }
        Ok(f)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, symbol: Symbol) -> Option<&Word> {
        self.basis.position(symbol).map(|p| &self.images[p])
    }

    pub fn total_length(&self) -> usize {
        self.images.iter().map(Word::len).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, im)| {
            im.len() == 1 && {
                let l = im.letters()[0];
                !l.is_inverse() && self.basis.position(l.symbol()) == Some(p)
            }
        })
    }

    pub fn apply(&self, word: &Word) -> Result<Word> {
        self.apply_within(word, usize::MAX)
    }

    pub fn apply_within(&self, word: &Word, budget: usize) -> Result<Word> {
        self.basis.same_as(word.basis())?;
        substitute(word, &self.images, self.basis, budget)
    }

    /// `self ∘ inner`: `inner` acts first.
    pub fn compose(&self, inner: &FreeEndomorphism) -> Result<FreeEndomorphism> {
        self.compose_within(inner, DEFAULT_BUDGET)
    }

    pub fn compose_within(&self, inner: &FreeEndomorphism, budget: usize) -> Result<FreeEndomorphism> {
        self.basis.same_as(inner.basis)?;
        let mut remaining = budget;
        let mut images = Vec::with_capacity(inner.images.len());
        for im in &inner.images {
            let out =
                substitute(im, &self.images, self.basis, remaining).map_err(|_| Error::BudgetExceeded { budget })?;
            remaining -= out.len();
            images.push(out);
        }
        Ok(FreeEndomorphism { basis: self.basis, images })
    }

    /// Composes a sequence written in function order: the last entry acts first.
    pub fn compose_all<'a, I>(basis: Basis, factors: I, budget: usize) -> Result<FreeEndomorphism>
    where
        I: IntoIterator<Item = &'a FreeEndomorphism>,
        I::IntoIter: DoubleEndedIterator,
    {
        let mut acc = FreeEndomorphism::identity(basis);
        for f in factors.into_iter().rev() {
            acc = f.compose_within(&acc, budget)?;
        }
        Ok(acc)
    }

    pub fn power(&self, k: u32) -> Result<FreeEndomorphism> {
        self.power_within(k, DEFAULT_BUDGET)
    }

    pub fn power_within(&self, k: u32, budget: usize) -> Result<FreeEndomorphism> {
        let mut acc = FreeEndomorphism::identity(self.basis);
        for _ in 0..k {
            acc = self.compose_within(&acc, budget)?;
        }
        Ok(acc)
    }

    /// Equality as endomorphisms: every generator image agrees.
    pub fn equals(&self, other: &FreeEndomorphism) -> Result<bool> {
        self.basis.same_as(other.basis)?;
        Ok(self.images == other.images)
    }

    /// Generators on which the two maps disagree, with both images.
    pub fn mismatches(&self, other: &FreeEndomorphism) -> Result<Vec<(Symbol, Word, Word)>> {
        self.basis.same_as(other.basis)?;
        Ok(self
            .images
            .iter()
            .zip(&other.images)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(p, (a, b))| (self.basis.symbol(p), a.clone(), b.clone()))
            .collect())
    }

    /// Generator-wise restriction to a single family, relabelled into `target`.
    /// Fails if some image leaves the family.
    pub(crate) fn restrict(&self, family: Family, target: Basis, relabel: Family) -> Result<FreeEndomorphism> {
        let mut images = Vec::with_capacity(target.rank());
        for (p, im) in self.images.iter().enumerate() {
            let symbol = self.basis.symbol(p);
            if symbol.family != family {
                continue;
            }
            if !im.only_family(family) {
                return Err(Error::NotZStable { generator: symbol.to_string(), image: im.to_string() });
            }
            let letters = im
                .letters()
                .iter()
                .map(|l| crate::freegroup::Letter::new(Symbol::new(relabel, l.symbol().index), l.is_inverse()))
                .collect();
            images.push(Word::from_reduced(target, letters));
        }
        FreeEndomorphism::new(target, images)
    }

    pub fn to_json(&self) -> EndomorphismJson {
        let (kind, n) = match self.basis {
            Basis::Xy(g) => ("xy", g),
            Basis::Yz(g) => ("yz", g),
            Basis::Abstract(n) => ("abstract", n),
        };
        EndomorphismJson {
            basis: BasisJson { kind: kind.to_string(), genus_or_rank: n },
            images: self.basis.symbols().zip(&self.images).map(|(s, im)| (s.to_string(), im.to_string())).collect(),
        }
    }

    pub fn from_json(json: &EndomorphismJson) -> Result<FreeEndomorphism> {
        let n = json.basis.genus_or_rank;
        let basis = match json.basis.kind.as_str() {
            "xy" => Basis::Xy(n),
            "yz" => Basis::Yz(n),
            "abstract" => Basis::Abstract(n),
            other => return Err(Error::Json(format!("unknown basis kind `{other}`"))),
        };
        if json.images.len() != basis.rank() {
            return Err(Error::ImageCount { expected: basis.rank(), found: json.images.len() });
        }
        let images = basis
            .symbols()
            .map(|s| {
                let text =
                    json.images.get(&s.to_string()).ok_or_else(|| Error::Json(format!("missing image of {s}")))?;
                Word::parse(text, basis)
            })
            .collect::<Result<Vec<_>>>()?;
        FreeEndomorphism::new(basis, images)
    }
}

/// Checks `f ∘ h = id = h ∘ f`.
pub fn verify_inverse_pair(f: &FreeEndomorphism, h: &FreeEndomorphism) -> Result<bool> {
    f.basis.same_as(h.basis)?;
    Ok(f.compose(h)?.is_identity() && h.compose(f)?.is_identity())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub kind: String,
    pub genus_or_rank: u32,
}

/// Serialized form; `images` is keyed by generator name in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndomorphismJson {
    pub basis: BasisJson,
    pub images: BTreeMap<String, String>,
}
