//! Finite preorders and their order-preserving representations.
//!
//! Preorders live on labelled ground sets as dense relation matrices. On top
//! of them the crate builds monotones and multi-utilities (in exact rational
//! arithmetic), separating families of up-sets, order-theoretic structure
//! (width, linear extensions, Debreu density), and exact search for the
//! smallest multi-utility and separating family of each kind.
//!
//! ```
//! use ordrep::{generators, min_multi_utility_size, MultiUtilityKind};
//!
//! let p = generators::standard_example(3).unwrap();
//! let m = min_multi_utility_size(&p, MultiUtilityKind::Plain, 5);
//! assert_eq!(m.found().map(Vec::len), Some(3));
//! ```

pub mod cover;
pub mod error;
pub mod generators;
pub mod monotone;
pub mod oracle;
pub mod preorder;
pub mod rational;
pub mod separating;
pub mod structure;

pub use cover::{Certificate, Minimum};
pub use error::{Error, Result};
pub use monotone::{
    classify_function, combine_strict_mu, combine_strict_mu_dyadic, indicator_multi_utility,
    injectivize, monotone_from_family, upsets_from_monotone, verify_multi_utility, FamilyMode,
    FunctionClass, MonotoneFn, MuFailure, MultiUtility, MultiUtilityKind, Verdict,
};
pub use oracle::{
    cross_check, exists_utility, min_multi_utility_size, realizer, Bounded, Budgets,
    ClassificationReport, CrossCheck, Discrepancy, WeakOrder, Witnesses,
};
pub use preorder::{ClosureMode, GroundSet, Preorder, QuotientPoset, Relation};
pub use rational::Rat;
pub use separating::{
    enumerate_upsets, min_separating_family, separation_deficit, Requirement, SeparatingFamily,
    SeparationKind, UpSet,
};
pub use structure::{
    debreu_check, linear_extension, min_debreu_subset, width, DebreuMode, LinearExtension, Width,
};
