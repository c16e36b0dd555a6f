//! Bounded bidirectional breadth-first search for derivations.
//!
//! The axioms are not known to form a confluent system, so equality is only
//! semi-decided: a failed search reports `Unknown`, never "unequal".

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::derivation::Derivation;
use super::rewrite::{invert_step, successors, Step, StepConfig};
use super::rules::RuleSet;
use super::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Maximum total derivation length.
    pub max_depth: usize,
    /// Maximum number of distinct words visited over both directions.
    pub max_states: usize,
    /// Intermediate words may exceed the longer endpoint by this many letters.
    pub len_slack: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_depth: 12,
            max_states: 1_000_000,
            len_slack: 4,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub states: usize,
    pub forward_depth: usize,
    pub backward_depth: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnknownReason {
    BudgetExceeded,
    DepthExhausted,
    /// Both frontiers emptied: no derivation within the length bound exists.
    SpaceExhausted,
}

#[derive(Debug, Clone)]
pub enum ProofOutcome {
    Proved { derivation: Derivation, stats: SearchStats },
    Unknown { reason: UnknownReason, stats: SearchStats },
}

impl ProofOutcome {
    pub fn derivation(&self) -> Option<&Derivation> {
        match self {
            ProofOutcome::Proved { derivation, .. } => Some(derivation),
            ProofOutcome::Unknown { .. } => None,
        }
    }

    pub fn stats(&self) -> SearchStats {
        match self {
            ProofOutcome::Proved { stats, .. } | ProofOutcome::Unknown { stats, .. } => *stats,
        }
    }
}

/// Words visited from one endpoint, each with the index of its parent.
struct Side {
    words: Vec<(Arc<Word>, u32)>,
    index: HashMap<Arc<Word>, u32>,
    frontier: Vec<u32>,
    depth: usize,
}

impl Side {
    fn new(root: Word) -> Self {
        let root = Arc::new(root);
        let mut index = HashMap::new();
        index.insert(root.clone(), 0);
        Side {
            words: vec![(root, u32::MAX)],
            index,
            frontier: vec![0],
            depth: 0,
        }
    }

    /// Words from the root to `id`, root first.
    fn path(&self, mut id: u32) -> Vec<Arc<Word>> {
        let mut out = Vec::new();
        while id != u32::MAX {
            let (w, parent) = &self.words[id as usize];
            out.push(w.clone());
            id = *parent;
        }
        out.reverse();
        out
    }
}

/// Searches for a derivation of `lhs = rhs`. Pattern variables are frozen
/// into fresh generators first, which is sound for universally quantified
/// identities.
///
/// Intermediate words are bounded in length by the longer endpoint plus a
/// slack; the slack is widened from zero up to `budget.len_slack`, and the
/// state budget is shared by all rounds.
pub fn prove_equal(lhs: &Word, rhs: &Word, rules: &RuleSet, budget: Budget) -> ProofOutcome {
    let lhs = lhs.freeze_vars();
    let rhs = rhs.freeze_vars();
    let mut spent = 0;
    let mut last = None;
    for slack in 0..=budget.len_slack {
        let cfg = StepConfig {
            max_len: lhs.len().max(rhs.len()) + slack,
            ..StepConfig::default()
        };
        let out = search(
            &lhs,
            &rhs,
            rules,
            &cfg,
            budget.max_depth,
            budget.max_states.saturating_sub(spent),
        );
        let mut out = match out {
            ProofOutcome::Proved { .. } => out,
            ProofOutcome::Unknown { reason, stats } => {
                let stop = reason == UnknownReason::BudgetExceeded;
                let out = ProofOutcome::Unknown { reason, stats };
                if !stop {
                    spent += stats.states;
                    last = Some(out);
                    continue;
                }
                out
            }
        };
        match &mut out {
            ProofOutcome::Proved { stats, .. } | ProofOutcome::Unknown { stats, .. } => stats.states += spent,
        }
        return out;
    }
    let mut out = last.expect("at least one round runs");
    if let ProofOutcome::Unknown { stats, .. } = &mut out {
        stats.states = spent;
    }
    out
}

fn search(
    lhs: &Word,
    rhs: &Word,
    rules: &RuleSet,
    cfg: &StepConfig,
    max_depth: usize,
    max_states: usize,
) -> ProofOutcome {
    let (lhs, rhs) = (lhs.clone(), rhs.clone());
    let mut sides = [Side::new(lhs.clone()), Side::new(rhs.clone())];
    let stats = |sides: &[Side; 2]| SearchStats {
        states: sides[0].words.len() + sides[1].words.len(),
        forward_depth: sides[0].depth,
        backward_depth: sides[1].depth,
    };
    if lhs == rhs {
        return proved(&sides, 0, 0, rules, cfg, lhs, rhs, stats(&sides));
    }
    loop {
        if sides[0].depth + sides[1].depth >= max_depth {
            return ProofOutcome::Unknown {
                reason: UnknownReason::DepthExhausted,
                stats: stats(&sides),
            };
        }
        // expand the smaller non-empty frontier
        let (f0, f1) = (sides[0].frontier.len(), sides[1].frontier.len());
        let k = usize::from(f0 == 0 || (f1 != 0 && f0 > f1));
        if sides[k].frontier.is_empty() {
            return ProofOutcome::Unknown {
                reason: UnknownReason::SpaceExhausted,
                stats: stats(&sides),
            };
        }
        let frontier = std::mem::take(&mut sides[k].frontier);
        let mut next = Vec::new();
        for id in frontier {
            let word = sides[k].words[id as usize].0.clone();
            for (succ, _) in successors(&word, rules, cfg) {
                if sides[k].index.contains_key(&succ) {
                    continue;
                }
                let new_id = sides[k].words.len() as u32;
                let succ = Arc::new(succ);
                sides[k].words.push((succ.clone(), id));
                sides[k].index.insert(succ.clone(), new_id);
                if let Some(&other) = sides[1 - k].index.get(&succ) {
                    sides[k].depth += 1;
                    let (f, b) = if k == 0 { (new_id, other) } else { (other, new_id) };
                    return proved(&sides, f, b, rules, cfg, lhs, rhs, stats(&sides));
                }
                next.push(new_id);
                if sides[0].words.len() + sides[1].words.len() > max_states {
                    return ProofOutcome::Unknown {
                        reason: UnknownReason::BudgetExceeded,
                        stats: stats(&sides),
                    };
                }
            }
        }
        sides[k].frontier = next;
        sides[k].depth += 1;
    }
}

#[allow(clippy::too_many_arguments)]
fn proved(
    sides: &[Side; 2],
    fwd: u32,
    bwd: u32,
    rules: &RuleSet,
    cfg: &StepConfig,
    lhs: Word,
    rhs: Word,
    stats: SearchStats,
) -> ProofOutcome {
    let mut words = sides[0].path(fwd);
    let mut back = sides[1].path(bwd);
    back.pop();
    back.reverse();
    words.extend(back);
    let mut steps = Vec::with_capacity(words.len());
    for pair in words.windows(2) {
        steps.push(connecting_step(&pair[0], &pair[1], rules, cfg));
    }
    ProofOutcome::Proved {
        derivation: Derivation {
            presentation: rules.presentation,
            start: lhs,
            steps,
            end: rhs,
        },
        stats,
    }
}

/// Recovers a step between adjacent words of a search path. Steps are not
/// stored during the search; recomputing them for the few words on the
/// path is cheaper than keeping one per visited state.
fn connecting_step(from: &Word, to: &Word, rules: &RuleSet, cfg: &StepConfig) -> Step {
    if let Some((_, step)) = successors(from, rules, cfg).into_iter().find(|(w, _)| w == to) {
        return step;
    }
    // the edge was discovered from the other endpoint
    let (_, step) = successors(to, rules, cfg)
        .into_iter()
        .find(|(w, _)| w == from)
        .expect("adjacent search words are one step apart");
    invert_step(&step, rules)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse::{parse_word, parse_word_with, ParseOptions};

    fn w(s: &str) -> Word {
        parse_word_with(s, &ParseOptions::with_vars(&["a", "b"])).unwrap()
    }

    #[test]
    fn pi_after_t_is_identity() {
        let rules = RuleSet::mu_delta();
        let out = prove_equal(&w("eps*T(a)*eta"), &w("a"), &rules, Budget::default());
        let d = out.derivation().expect("proved");
        assert_eq!(d.len(), 2);
        assert!(d.check().is_accept());
    }

    #[test]
    fn reflexive_query() {
        let rules = RuleSet::mu_delta();
        let out = prove_equal(&w("mu"), &w("mu"), &rules, Budget::default());
        assert_eq!(out.derivation().unwrap().len(), 0);
    }

    #[test]
    fn unprovable_within_budget_is_unknown() {
        let rules = RuleSet::mu_delta();
        let budget = Budget {
            max_depth: 3,
            max_states: 20_000,
            len_slack: 2,
        };
        let out = prove_equal(
            &parse_word("mu").unwrap(),
            &parse_word("delta").unwrap(),
            &rules,
            budget,
        );
        assert!(matches!(out, ProofOutcome::Unknown { .. }));
    }
}
