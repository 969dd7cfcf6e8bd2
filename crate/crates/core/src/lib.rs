//! Exact computations for slice disks of generalized square knots:
//! pillowcase slope words, the `ℤ_p ∗ ℤ_q` triviality obstruction, the
//! rational Alexander module of the square knot and its Blanchfield pairing.

pub mod alexander;
pub mod algebra;
pub mod obstruction;
pub mod slopes;
pub mod verify;
pub mod words;

pub use alexander::{
    AlexanderError, BlanchfieldForm, IntersectionVector, ModulePresentation, ModuleVector,
    SeifertData,
};
pub use algebra::{
    AlgebraError, FieldElem, LaurentPoly, Matrix, Rational, RationalFn, TorsionPairingValue,
};
pub use obstruction::{
    ObstructionError, ObstructionReport, SubstitutionConvention, TorusKnotParams,
};
pub use slopes::{Sign, SignSequence, SlopeError, SlopeParam};
pub use words::{FreeProductWord, GroupWord, Letter, Symbol, WordError};
