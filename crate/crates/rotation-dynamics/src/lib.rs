//! Circle rotations by a quadratic irrational, with exact arithmetic end
//! to end: symbolic codings, factor intervals, block recodings onto larger
//! alphabets, and endpoint lattice recovery. No floating point takes part
//! in any decision.

mod arc;
mod error;
mod quadratic;
mod system;

pub use arc::{Arc, ArcSet};
pub use error::RotationError;
pub use quadratic::{AlphaRef, ExactNumber, ExactValue, QuadraticIrrational};
pub use system::{
    block_factors, code, endpoint_lattice, factor_interval, sturmian_recode, sturmian_system,
    LatticeEntry, RotationSystem,
};
