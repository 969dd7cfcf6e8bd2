//! Words in free groups and in free products `ℤ_p ∗ ℤ_q`.

mod free_product;
mod symbol;
mod word;

use thiserror::Error;

pub use free_product::{fp_normal_form, Factor, FreeProductWord, Syllable};
pub use symbol::Symbol;
pub use word::{commutator, GroupWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("no image given for generator `{0}`")]
    MissingImage(&'static str),
    #[error("no weight given for generator `{0}`")]
    MissingWeight(&'static str),
    #[error("generator `{0}` is not x or y")]
    UnknownGenerator(&'static str),
    #[error("factor orders p={p}, q={q} must both exceed 1 and be coprime")]
    InvalidOrders { p: u64, q: u64 },
    #[error("free product words over different (p, q)")]
    MismatchedOrders,
    #[error("cannot parse word `{0}`")]
    Parse(String),
}
