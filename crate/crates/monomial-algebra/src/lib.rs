//! Monomial algebras presented by an alphabet and an obstruction antichain:
//! normal-word enumeration, growth tables, boundary detection, and
//! finite-horizon structural classification of the long normal words.

mod algebra;
mod bound;
mod classify;
mod error;
mod growth;

pub use algebra::{normal_language, normal_words, MonomialAlgebra, ResourceBudget};
pub use bound::{obstruction_bound_check, ObstructionBoundReport};
pub use classify::{
    classify, ClassificationReport, ClassifyDiagnostics, ClassifyVerdict, Family,
};
pub use error::AlgebraError;
pub use growth::{
    boundary_verdict, good_word_delta, growth_profile, BoundaryVerdict, GoodWordDelta,
    GrowthProfile,
};
