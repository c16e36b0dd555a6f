//! The free skew monoidal monoid signature: words, axiom schemas, rewriting,
//! bounded equality search and checkable derivations.

pub mod convert;
pub mod derivation;
pub mod matching;
pub mod parse;
pub mod rewrite;
pub mod rules;
pub mod search;
pub mod suite;
pub mod word;

pub use convert::{convert_presentation, translate_word, Definition};
pub use derivation::{Derivation, RejectReason, Verdict};
pub use matching::{instantiate, match_at, match_range, Match, Subst};
pub use parse::{normalize, parse_word, parse_word_with, sigma_pi, sigma_s, ParseOptions, Term};
pub use rewrite::{apply_step, invert_step, rewrite_at, simplify, successors, Direction, Step, StepConfig, StepError};
pub use rules::{Presentation, RuleSchema, RuleSet};
pub use search::{prove_equal, Budget, ProofOutcome, SearchStats, UnknownReason};
pub use suite::{catalogue, identity_suite, Identity, Status, SuiteRecord};
pub use word::{Atom, Endo, Letter, Sym, Word, Wrapper};
