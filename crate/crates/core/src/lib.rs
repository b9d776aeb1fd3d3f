//! Minimal words and root words in the free group of rank two.
//!
//! Words are written over `a`, `b` and their inverses `A`, `B`, and most of
//! the crate works with [`CyclicWord`]s: conjugacy classes held in canonical
//! rotation. The main entry points:
//!
//! * [`is_minimal`] / [`is_root`]: the two-letter count tests, with
//!   [`is_minimal_oracle`] / [`is_root_oracle`] as independent checks that
//!   apply automorphisms directly.
//! * [`children`] / [`parents`]: growing words by lengthening a run.
//! * [`minimize`] and [`minimal_class`]: Whitehead reduction and the set of
//!   minimal words in an automorphism class.
//! * [`CyclicWords`], [`census`], [`run_verification`]: exhaustive
//!   enumeration by length.
//!
//! ```
//! use rootwords::{is_minimal, is_root, minimize, CyclicWord};
//!
//! let w: CyclicWord = "aabb".parse().unwrap();
//! assert!(is_minimal(&w) && is_root(&w));
//!
//! let (m, trace) = minimize(&"bA".parse().unwrap());
//! assert_eq!(m.to_string(), "A");
//! assert_eq!(trace.steps.len(), 1);
//! ```

pub mod automorphism;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod minimality;
pub mod search;
pub mod verify;
pub mod word;

pub use automorphism::{
    all_one_letter, all_permutations, is_level, is_level_by_counts, one_letter_representatives, predict_profile,
    Automorphism, CountUpdate, Permutation, WhiteheadAuto,
};
pub use enumeration::{
    census, census_record, enumerate_cyclic_words, enumerate_root_classes, enumerate_root_words, CensusRecord,
    CyclicWords, MAX_ENUMERATION_LEN,
};
pub use error::{Error, Result};
pub use minimality::{
    children, concat_minimal_check, is_minimal, is_minimal_oracle, is_root, is_root_oracle, parents,
};
pub use search::{
    are_equivalent, minimal_class, minimal_class_with_limit, minimize, minimize_word, verify_root_class,
    EquivalenceClass, ReductionTrace, TraceStep,
};
pub use verify::{run_verification, Report};
pub use word::{CyclicWord, Letter, PairCounts, Word};
