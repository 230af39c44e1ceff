//! Exact character arithmetic for symmetric groups.
//!
//! The heart of the crate is a Murnaghan-Nakayama evaluator over beta-sets
//! that computes irreducible character values chi^lambda(mu) as exact big
//! integers, plus verifiers for a family of character identities relating
//! two-row and hook characters across the classes (alpha, 2, 4, ..., 2^t)
//! and (alpha, 2^(t+1)).

pub mod betaset;
pub mod error;
pub mod evaluator;
pub mod identities;
pub mod partition;

pub use betaset::{virtual_char_pair, BetaSet, OrderedBetaSet, VirtualChar2Row};
pub use error::{Error, Result};
pub use evaluator::{
    dimension, CharValue, CharacterTable, Evaluator, MemoStore, DEFAULT_TABLE_BOUND,
};
pub use identities::{
    eval_expansion, expand_two_row, sweep, verify_coincidence, verify_expansion,
    verify_square_sums, CheckKind, CheckRow, Expansion, ExpansionTerm, FamilyInstance, Report,
    SweepSummary, MAX_SWEEP_N, MAX_T,
};
pub use partition::{
    partitions_into_odd_parts, partitions_of, partitions_of_with, CycleType, Partition,
    DEFAULT_GENERATION_BOUND,
};
