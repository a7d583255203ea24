//! Identity catalog, verification runs and the pieces behind the `qlab` binary.

pub mod catalog;
pub mod product_match;
pub mod recipe;
pub mod verify;

pub use catalog::{catalog, lookup, Filter, IdentityEntry, Reading, RingKind, Status};
pub use product_match::{candidate_pairs, product_match_search, ProductMatch};
pub use recipe::{Factor, Recipe, SchurSide};
pub use verify::{
    run_all, run_entries, verify, verify_entry, RunItem, RunOutcome, EXIT_CONJECTURE_MISMATCH,
    EXIT_OK, EXIT_PROVED_MISMATCH, EXIT_USAGE,
};
