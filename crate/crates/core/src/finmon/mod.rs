//! Finite monoids given by tables, and SMM structures on them.
//!
//! Elements are dense indices `0..n`. Enumerated monoids always have unit
//! `0`; instances read from JSON may name any element as the unit.

mod axioms;
mod enumerate;
mod eval;
mod instance;
mod monoid;
mod triviality;

pub use axioms::{axiom_ids, check_axioms, check_gamma, is_smm, GammaData, Violation};
pub use enumerate::{
    canonical_form, enumerate_monoids, enumerate_smm, instance_universe, is_isomorphic, isomorphisms, ALL_TABLES_UP_TO,
    MAX_MONOID_SIZE,
};
pub use eval::{eval_word, find_countermodel, for_each_assignment, Countermodel};
pub use instance::SmmInstance;
pub use monoid::{EndoMap, FiniteMonoid};
pub use triviality::{is_trivial, mimosa_report, structure_properties, MimosaReport, MIMOSA_FLAGS};

pub(crate) use instance::sorted;
