//! Words over finite ordered alphabets, analyzed through finite prefixes.
//!
//! Every predicate about an infinite word is computed over a finite window
//! and reported relative to that horizon; nothing here claims to decide a
//! property of a genuinely infinite object. Saturation guards (complexity
//! needs `horizon >= 2 * max_n`, recurrence needs `horizon >= 10 * max_len`)
//! turn silent truncation artifacts into errors.

mod alphabet;
mod balance;
mod complexity;
mod equation;
mod error;
mod factors;
mod forbidden;
mod recurrence;
mod returns;
mod source;
mod special;

pub use alphabet::Alphabet;
pub use balance::{is_balanced, BalanceVerdict};
pub use complexity::{complexity, eventual_period, ComplexityProfile};
pub use equation::{minimal_period, solve_sw_wt, ShiftVerdict};
pub use error::{SourceError, WordError};
pub use factors::{factor_language, factors, FactorLanguage, FactorSet, Word};
pub use forbidden::minimal_forbidden_words;
pub use recurrence::{recurrence_report, RecurrenceReport};
pub use returns::{consecutive_return_words, return_words, ReturnSet};
pub use source::{
    EventuallyPeriodicSource, ExplicitSource, PeriodicSource, PrefixSource, SubstitutionSource,
    TwoSidedSource,
};
pub use special::{special_factors, SpecialFactor};
