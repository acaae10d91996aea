use thiserror::Error;

use crate::freegroup::{Basis, Symbol};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol {symbol} is not a generator of {basis}")]
    BasisMismatch { symbol: Symbol, basis: Basis },

    #[error("operands live over different bases: {left} and {right}")]
    DifferentBases { left: Basis, right: Basis },

    #[error("expected a word or map over the {expected} basis, found {found}")]
    WrongBasis { expected: &'static str, found: Basis },

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("{name} is out of range for {context}")]
    IndexOutOfRange { name: String, context: String },

    #[error("expected {expected} images, got {found}")]
    ImageCount { expected: usize, found: usize },

    #[error("image budget of {budget} letters exceeded")]
    BudgetExceeded { budget: usize },

    #[error("genus {genus} is not supported here: {reason}")]
    Genus { genus: u32, reason: &'static str },

    #[error("braid on {strands} strands cannot act on genus {genus}")]
    StrandMismatch { strands: u32, genus: u32 },

    #[error("image of {generator} is not a word in z letters: {image}")]
    NotZStable { generator: String, image: String },

    #[error("malformed endomorphism description: {0}")]
    Json(String),
}
