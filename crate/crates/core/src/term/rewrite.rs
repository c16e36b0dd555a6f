//! Single rewrite steps: application, exact replay, and successor enumeration.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::matching::{instantiate, match_lifted, Subst};
use super::rules::{RuleSchema, RuleSet};
use super::word::{Word, Wrapper};
use crate::error::SmmError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Direction::Forward => "fwd",
            Direction::Backward => "bwd",
        }
    }

    pub fn from_token(s: &str) -> Option<Self> {
        match s {
            "fwd" | "forward" => Some(Direction::Forward),
            "bwd" | "backward" => Some(Direction::Backward),
            _ => None,
        }
    }
}

/// One rewrite: replace `[start, end)` of the current word, which must equal
/// the rule's source side under `subst` and `lift`, by the target side.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Step {
    pub rule: String,
    /// Endomorphism context the rule is applied under (empty for a plain step).
    pub lift: Wrapper,
    pub start: usize,
    pub end: usize,
    pub dir: Direction,
    pub subst: Subst,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rule)?;
        if !self.lift.is_empty() {
            write!(f, "^")?;
            for e in self.lift.endos() {
                write!(f, "{}", e.name())?;
            }
        }
        write!(f, " @{}..{} {} {}", self.start, self.end, self.dir.token(), self.subst)
    }
}

/// Why a step failed to replay.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StepError {
    #[error("unknown rule {0}")]
    UnknownRule(String),
    #[error("range {start}..{end} out of bounds for word of length {len}")]
    OutOfBounds { start: usize, end: usize, len: usize },
    #[error("substitution does not bind exactly the rule variables")]
    BadSubstitution,
    #[error("source side does not match at the given range")]
    NoMatch,
}

/// Replays a step exactly as recorded.
pub fn apply_step(w: &Word, rules: &RuleSet, step: &Step) -> Result<Word, StepError> {
    let rule = rules
        .get(&step.rule)
        .ok_or_else(|| StepError::UnknownRule(step.rule.clone()))?;
    if step.start > step.end || step.end > w.len() {
        return Err(StepError::OutOfBounds {
            start: step.start,
            end: step.end,
            len: w.len(),
        });
    }
    let mut want = rule.vars();
    let mut got = step.subst.vars();
    want.sort();
    got.sort();
    if want != got || !step.subst.0.iter().all(|(_, b)| b.is_ground()) {
        return Err(StepError::BadSubstitution);
    }
    let (src, tgt) = rule.sides(step.dir);
    let src = instantiate(src, &step.subst)
        .ok_or(StepError::BadSubstitution)?
        .lift(step.lift);
    if w.letters()[step.start..step.end] != src.letters()[..] {
        return Err(StepError::NoMatch);
    }
    let tgt = instantiate(tgt, &step.subst)
        .ok_or(StepError::BadSubstitution)?
        .lift(step.lift);
    Ok(w.splice(step.start, step.end, &tgt))
}

/// Rewrites at `pos` with the longest match of the rule's source side.
pub fn rewrite_at(w: &Word, rule: &RuleSchema, pos: usize, dir: Direction) -> Result<Word, SmmError> {
    let (src, tgt) = rule.sides(dir);
    let matches = match_lifted(src.letters(), w.letters(), pos, Wrapper::EMPTY);
    let best = matches
        .into_iter()
        .rev()
        .max_by_key(|m| m.end)
        .ok_or_else(|| SmmError::NoMatch {
            rule: rule.id.clone(),
            pos,
        })?;
    let tgt = instantiate(tgt, &best.subst).expect("rule variables are bound");
    Ok(w.splice(pos, best.end, &tgt))
}

#[derive(Debug, Clone)]
pub struct StepConfig {
    /// Lifts allowed for insertions, i.e. backward use of rules with an empty side.
    pub insert_lifts: Vec<Wrapper>,
    /// Successors longer than this are discarded.
    pub max_len: usize,
}

impl Default for StepConfig {
    fn default() -> Self {
        use super::word::Endo;
        StepConfig {
            insert_lifts: vec![Wrapper::EMPTY, Wrapper::single(Endo::T), Wrapper::single(Endo::Q)],
            max_len: usize::MAX,
        }
    }
}

/// Every word reachable from `w` in one step, with the step taken.
/// No-op rewrites are dropped.
pub fn successors(w: &Word, rules: &RuleSet, cfg: &StepConfig) -> Vec<(Word, Step)> {
    let mut out = Vec::new();
    let n = w.len();
    for rule in &rules.rules {
        for dir in [Direction::Forward, Direction::Backward] {
            let (src, tgt) = rule.sides(dir);
            if src.is_empty() {
                if n + tgt.len() > cfg.max_len {
                    continue;
                }
                for &lift in &cfg.insert_lifts {
                    let ins = tgt.lift(lift);
                    for pos in 0..=n {
                        out.push((
                            w.splice(pos, pos, &ins),
                            Step {
                                rule: rule.id.clone(),
                                lift,
                                start: pos,
                                end: pos,
                                dir,
                                subst: Subst::default(),
                            },
                        ));
                    }
                }
                continue;
            }
            for start in 0..n {
                let wrapper = w.letters()[start].wrapper;
                for depth in 0..=wrapper.len() {
                    let lift = wrapper.prefix(depth);
                    for m in match_lifted(src.letters(), w.letters(), start, lift) {
                        if m.end == start {
                            continue;
                        }
                        let rep = instantiate(tgt, &m.subst).expect("rule variables are bound").lift(lift);
                        if n - (m.end - start) + rep.len() > cfg.max_len {
                            continue;
                        }
                        if rep.letters() == &w.letters()[start..m.end] {
                            continue;
                        }
                        out.push((
                            w.splice(start, m.end, &rep),
                            Step {
                                rule: rule.id.clone(),
                                lift,
                                start,
                                end: m.end,
                                dir,
                                subst: m.subst,
                            },
                        ));
                    }
                }
            }
        }
    }
    out
}

/// The inverse of `step` applied to `from`, producing `to`: same rule, lift
/// and substitution, opposite direction, range over the rewritten part.
pub fn invert_step(step: &Step, rules: &RuleSet) -> Step {
    let rule = rules.get(&step.rule).expect("step rule exists");
    let (_, tgt) = rule.sides(step.dir);
    let len = instantiate(tgt, &step.subst).expect("bound").len();
    Step {
        rule: step.rule.clone(),
        lift: step.lift,
        start: step.start,
        end: step.start + len,
        dir: step.dir.flip(),
        subst: step.subst.clone(),
    }
}

/// Repeatedly applies rules in their preferred orientation, but only steps
/// that shorten the word, until none applies or `limit` steps were taken.
pub fn simplify(w: &Word, rules: &RuleSet, limit: usize) -> (Word, Vec<Step>) {
    let mut cur = w.clone();
    let mut steps = Vec::new();
    'outer: while steps.len() < limit {
        for rule in &rules.rules {
            let (src, tgt) = rule.sides(rule.orientation);
            if src.is_empty() {
                continue;
            }
            for start in 0..cur.len() {
                let wrapper = cur.letters()[start].wrapper;
                for depth in 0..=wrapper.len() {
                    let lift = wrapper.prefix(depth);
                    for m in match_lifted(src.letters(), cur.letters(), start, lift) {
                        let rep = instantiate(tgt, &m.subst).expect("bound").lift(lift);
                        if rep.len() < m.end - start {
                            let step = Step {
                                rule: rule.id.clone(),
                                lift,
                                start,
                                end: m.end,
                                dir: rule.orientation,
                                subst: m.subst,
                            };
                            cur = cur.splice(start, step.end, &rep);
                            steps.push(step);
                            continue 'outer;
                        }
                    }
                }
            }
        }
        break;
    }
    (cur, steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn rewrite_examples() {
        let rules = RuleSet::mu_delta();
        let smm2 = rules.get("SMM2").unwrap();
        assert_eq!(
            rewrite_at(&w("eta*g"), smm2, 0, Direction::Forward).unwrap(),
            w("T(g)*eta")
        );
        let smm18 = rules.get("SMM18").unwrap();
        assert_eq!(
            rewrite_at(&w("eps*eta"), smm18, 0, Direction::Forward).unwrap(),
            Word::unit()
        );
        let smm9 = rules.get("SMM9").unwrap();
        assert_eq!(
            rewrite_at(&w("mu*mu"), smm9, 0, Direction::Backward).unwrap(),
            w("mu*T(mu)")
        );
        assert!(matches!(
            rewrite_at(&w("mu*mu"), smm18, 0, Direction::Forward),
            Err(SmmError::NoMatch { .. })
        ));
    }

    #[test]
    fn successors_replay_and_invert() {
        let rules = RuleSet::mu_delta();
        let start = w("eps*T(g)*eta*mu");
        let succ = successors(&start, &rules, &StepConfig::default());
        assert!(!succ.is_empty());
        for (next, step) in &succ {
            assert_eq!(&apply_step(&start, &rules, step).unwrap(), next, "{step}");
            let back = invert_step(step, &rules);
            assert_eq!(apply_step(next, &rules, &back).unwrap(), start, "{back}");
        }
    }

    #[test]
    fn lifted_steps_are_generated() {
        let rules = RuleSet::mu_delta();
        let start = w("T(mu)*T(eta)");
        let succ = successors(&start, &rules, &StepConfig::default());
        assert!(succ
            .iter()
            .any(|(n, s)| n.is_empty() && s.rule == "SMM10" && s.lift.len() == 1));
    }

    #[test]
    fn simplify_removes_unit_redexes() {
        let rules = RuleSet::mu_delta();
        let (out, steps) = simplify(&w("eps*mu*eta*eta*Q(eps)*delta"), &rules, 10);
        assert_eq!(out, Word::unit());
        assert_eq!(steps.len(), 3);
        let (partial, steps) = simplify(&w("eps*mu*eta*eta*Q(eps)*delta"), &rules, 1);
        assert_eq!(partial, w("eps*eta*Q(eps)*delta"));
        assert_eq!(steps.len(), 1);
    }
}
