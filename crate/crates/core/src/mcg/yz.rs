//! The alternative free basis `y_1..y_g, z_1..z_g` of the surface group,
//! with `z_i = x_i^-1 y_{i+1} x_{i+1} y_{i+1}^-1` and `z_g = x_g^-1`.

use crate::automorphism::{substitute, FreeEndomorphism};
use crate::error::{Error, Result};
use crate::freegroup::{Basis, Symbol, Word};

use super::surface::z_word;

/// Substitution tables for both directions of the basis change at one genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisChange {
    genus: u32,
    /// images of `x, y` generators written over `YZ(g)`
    to_yz: Vec<Word>,
    /// images of `y, z` generators written over `XY(g)`
    from_yz: Vec<Word>,
}

impl BasisChange {
    pub fn new(genus: u32) -> Result<Self> {
        if genus == 0 {
            return Err(Error::Genus { genus, reason: "surface needs at least one handle" });
        }
        let xy = Basis::Xy(genus);
        let yz = Basis::Yz(genus);

        // x_g = z_g^-1, then x_i = y_{i+1} x_{i+1} y_{i+1}^-1 z_i^-1 descending.
        let mut x_images = vec![Word::identity(yz); genus as usize];
        x_images[genus as usize - 1] = Word::generator(yz, Symbol::z(genus))?.inverse();
        for i in (1..genus).rev() {
            let y = Word::generator(yz, Symbol::y(i + 1))?;
            let z_inv = Word::generator(yz, Symbol::z(i))?.inverse();
            let next = &x_images[i as usize];
            x_images[i as usize - 1] = Word::product(yz, [&y, next, &y.inverse(), &z_inv])?;
        }
        let to_yz = xy
            .symbols()
            .map(|s| match s {
                Symbol { family: crate::freegroup::Family::X, index } => Ok(x_images[index as usize - 1].clone()),
                _ => Word::generator(yz, s),
            })
            .collect::<Result<Vec<_>>>()?;

        let from_yz = yz
            .symbols()
            .map(|s| match s {
                Symbol { family: crate::freegroup::Family::Z, index } => z_word(index, genus),
                _ => Word::generator(xy, s),
            })
            .collect::<Result<Vec<_>>>()?;

        Ok(BasisChange { genus, to_yz, from_yz })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn to_yz(&self, word: &Word) -> Result<Word> {
        Basis::Xy(self.genus).same_as(word.basis())?;
        substitute(word, &self.to_yz, Basis::Yz(self.genus), usize::MAX)
    }

    pub fn from_yz(&self, word: &Word) -> Result<Word> {
        Basis::Yz(self.genus).same_as(word.basis())?;
        substitute(word, &self.from_yz, Basis::Xy(self.genus), usize::MAX)
    }

    /// `to_yz ∘ f ∘ from_yz` for an endomorphism written over `XY(g)`.
    pub fn conjugate_to_yz(&self, f: &FreeEndomorphism) -> Result<FreeEndomorphism> {
        Basis::Xy(self.genus).same_as(f.basis())?;
        let images = self.from_yz.iter().map(|v| self.to_yz(&f.apply(v)?)).collect::<Result<Vec<_>>>()?;
        FreeEndomorphism::new(Basis::Yz(self.genus), images)
    }

    /// `from_yz ∘ f ∘ to_yz` for an endomorphism written over `YZ(g)`.
    pub fn conjugate_to_xy(&self, f: &FreeEndomorphism) -> Result<FreeEndomorphism> {
        Basis::Yz(self.genus).same_as(f.basis())?;
        let images = self.to_yz.iter().map(|u| self.from_yz(&f.apply(u)?)).collect::<Result<Vec<_>>>()?;
        FreeEndomorphism::new(Basis::Xy(self.genus), images)
    }

    /// Generator-level check that the two substitutions are mutually inverse,
    /// which certifies that `y, z` is a free basis.
    pub fn is_free_basis(&self) -> Result<bool> {
        let xy = Basis::Xy(self.genus);
        let yz = Basis::Yz(self.genus);
        for s in xy.symbols() {
            let u = Word::generator(xy, s)?;
            if self.from_yz(&self.to_yz(&u)?)? != u {
                return Ok(false);
            }
        }
        for s in yz.symbols() {
            let v = Word::generator(yz, s)?;
            if self.to_yz(&self.from_yz(&v)?)? != v {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn genus_of(word: &Word) -> u32 {
    match word.basis() {
        Basis::Xy(g) | Basis::Yz(g) => g,
        Basis::Abstract(n) => n,
    }
}

/// Rewrites a word over `XY(g)` in the `y, z` basis.
pub fn to_yz(word: &Word) -> Result<Word> {
    match word.basis() {
        Basis::Xy(g) => BasisChange::new(g)?.to_yz(word),
        found => Err(Error::WrongBasis { expected: "x, y", found }),
    }
}

/// Rewrites a word over `YZ(g)` in the `x, y` basis.
pub fn from_yz(word: &Word) -> Result<Word> {
    match word.basis() {
        Basis::Yz(_) => BasisChange::new(genus_of(word))?.from_yz(word),
        found => Err(Error::WrongBasis { expected: "y, z", found }),
    }
}

/// Pillar switching `σ_index`, `1 ≤ index ≤ g - 1`, acting on the `y, z`
/// basis. With `j = index`:
///
/// ```text
/// y_j     ↦ y_j y_{j+1}
/// y_{j+1} ↦ z_{j+1}^-1 y_{j+1}^-1 z_{j+1}
/// y_{j+2} ↦ z_{j+1}^-1 y_{j+1} z_{j+1} y_{j+2}     (only when j + 2 ≤ g)
/// z_j     ↦ z_{j+1}
/// z_{j+1} ↦ z_{j+1}^-1 z_j z_{j+1}
/// ```
///
/// `σ_0` has no such form; conjugate its `x, y` action instead.
pub fn pillar_switching_yz(index: u32, genus: u32) -> Result<FreeEndomorphism> {
    if genus < 2 {
        return Err(Error::Genus { genus, reason: "pillar switchings need genus at least 2" });
    }
    if index == 0 || index >= genus {
        return Err(Error::IndexOutOfRange {
            name: format!("sigma{index}"),
            context: format!("y, z basis of genus {genus}"),
        });
    }
    let (j, k, l) = (index, index + 1, index + 2);
    let mut assignments = vec![
        (Symbol::y(j), format!("y{j} y{k}")),
        (Symbol::y(k), format!("z{k}^-1 y{k}^-1 z{k}")),
        (Symbol::z(j), format!("z{k}")),
        (Symbol::z(k), format!("z{k}^-1 z{j} z{k}")),
    ];
    if l <= genus {
        assignments.push((Symbol::y(l), format!("z{k}^-1 y{k} z{k} y{l}")));
    }
    let borrowed: Vec<(Symbol, &str)> = assignments.iter().map(|(s, t)| (*s, t.as_str())).collect();
    FreeEndomorphism::from_assignments(Basis::Yz(genus), &borrowed)
}
