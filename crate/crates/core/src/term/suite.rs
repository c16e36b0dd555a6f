//! The fixed catalogue of identities the engine is expected to prove.

use rayon::prelude::*;
use serde::Serialize;

use super::convert::round_trip_identities;
use super::derivation::Derivation;
use super::parse::{parse_word_with, ParseOptions};
use super::rules::RuleSet;
use super::search::{prove_equal, Budget, ProofOutcome, UnknownReason};
use super::word::Word;

#[derive(Debug, Clone)]
pub struct Identity {
    pub name: &'static str,
    pub lhs: Word,
    pub rhs: Word,
}

/// Identities over the variables `a, b`. The smash identity is instantiated
/// at `f = Q(a)*delta` and `g = mu*T(b)`.
pub fn catalogue() -> Vec<Identity> {
    let opts = ParseOptions::with_vars(&["a", "b"]);
    let id = |name, l: &str, r: &str| Identity {
        name,
        lhs: parse_word_with(l, &opts).expect("catalogue term"),
        rhs: parse_word_with(r, &opts).expect("catalogue term"),
    };
    let mut out = vec![
        id("mu_S", "mu*S(a)", "mu*T(Q(a))"),
        id("S_mu", "S(a)*mu", "mu*T(S(a))"),
        id("S_delta", "S(a)*delta", "Q(T(a))*delta"),
        id("delta_S", "delta*S(a)", "Q(S(a))*delta"),
        id("S_eta", "S(a)*eta", "Q(a)*eta"),
        id("eps_S", "eps*S(a)", "eps*T(a)"),
        id("pi_T", "pi(T(a))", "a"),
        id("pi_Q", "pi(Q(a))", "a"),
        id("pi_S", "pi(S(a))", "a"),
        id("S_formulas", "mu*T(Q(a)*eta)", "Q(eps*T(a))*delta"),
    ];
    for (sym, lhs, rhs) in round_trip_identities() {
        out.push(Identity {
            name: if sym == "mu" {
                "round_trip_mu"
            } else {
                "round_trip_delta"
            },
            lhs,
            rhs,
        });
    }
    out.push(id(
        "smash",
        "Q(a)*delta*mu*T(b)",
        "mu*T(delta*mu*T(b)*eta)*Q(eps*Q(a)*delta*mu)*delta",
    ));
    out
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Proved,
    Unknown(UnknownReason),
    /// A derivation was found but the checker rejected it.
    Rejected,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteRecord {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
    /// Derivation length when proved.
    pub depth: Option<usize>,
    pub states: usize,
    #[serde(skip)]
    pub derivation: Option<Derivation>,
}

impl SuiteRecord {
    pub fn proved(&self) -> bool {
        matches!(self.status, Status::Proved)
    }
}

pub fn identity_suite(budget: Budget) -> Vec<SuiteRecord> {
    let rules = RuleSet::mu_delta();
    catalogue().par_iter().map(|id| run_one(id, &rules, budget)).collect()
}

fn run_one(id: &Identity, rules: &RuleSet, budget: Budget) -> SuiteRecord {
    let out = prove_equal(&id.lhs, &id.rhs, rules, budget);
    let states = out.stats().states;
    let (status, derivation) = match out {
        ProofOutcome::Proved { derivation, .. } => {
            if derivation.check_with(rules).is_accept() {
                (Status::Proved, Some(derivation))
            } else {
                (Status::Rejected, Some(derivation))
            }
        }
        ProofOutcome::Unknown { reason, .. } => (Status::Unknown(reason), None),
    };
    SuiteRecord {
        name: id.name.to_string(),
        lhs: id.lhs.to_string(),
        rhs: id.rhs.to_string(),
        depth: derivation.as_ref().map(Derivation::len),
        status,
        states,
        derivation,
    }
}
