//! Proof objects and their replay checker.
//!
//! Text format, one item per line:
//!
//! ```text
//! presentation: mu-delta
//! start: eps*T(a)*eta
//! end: a
//! SMM2 @1..3 bwd {a=a}
//! SMM18 @0..2 fwd {}
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. A lifted step carries
//! its endomorphism context after a caret, as in `SMM7^TQ @1..3 fwd {a=g}`.

use std::fmt;

use super::matching::Subst;
use super::parse::parse_word_with;
use super::rewrite::{apply_step, Direction, Step, StepError};
use super::rules::{Presentation, RuleSet};
use super::word::{Endo, Sym, Word, Wrapper};
use crate::error::SmmError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub presentation: Presentation,
    pub start: Word,
    pub steps: Vec<Step>,
    pub end: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    /// Index of the first failing step; `steps.len()` when every step
    /// replays but the final word differs from `end`.
    Reject {
        step: usize,
        reason: RejectReason,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectReason {
    Step(StepError),
    EndMismatch { reached: Word },
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::Step(e) => write!(f, "{e}"),
            RejectReason::EndMismatch { reached } => {
                write!(f, "replay ends at {reached}, not at the stated end")
            }
        }
    }
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

impl Derivation {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays every step against the rule set of the derivation's presentation.
    pub fn check(&self) -> Verdict {
        self.check_with(&RuleSet::for_presentation(self.presentation))
    }

    pub fn check_with(&self, rules: &RuleSet) -> Verdict {
        let mut cur = self.start.clone();
        for (i, step) in self.steps.iter().enumerate() {
            match apply_step(&cur, rules, step) {
                Ok(next) => cur = next,
                Err(e) => {
                    return Verdict::Reject {
                        step: i,
                        reason: RejectReason::Step(e),
                    }
                }
            }
        }
        if cur == self.end {
            Verdict::Accept
        } else {
            Verdict::Reject {
                step: self.steps.len(),
                reason: RejectReason::EndMismatch { reached: cur },
            }
        }
    }

    /// The intermediate words, `start` first. Stops early at a failing step.
    pub fn trace(&self) -> Vec<Word> {
        let rules = RuleSet::for_presentation(self.presentation);
        let mut out = vec![self.start.clone()];
        for step in &self.steps {
            match apply_step(out.last().unwrap(), &rules, step) {
                Ok(w) => out.push(w),
                Err(_) => break,
            }
        }
        out
    }

    pub fn then(mut self, other: Derivation) -> Derivation {
        debug_assert_eq!(self.end, other.start);
        self.steps.extend(other.steps);
        self.end = other.end;
        self
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn parse(src: &str) -> Result<Derivation, SmmError> {
        let mut presentation = Presentation::MuDelta;
        let mut start = None;
        let mut end = None;
        let mut steps = Vec::new();
        for (i, raw) in src.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| SmmError::Derivation { line: line_no, message };
            let opts = presentation.parse_options(&[]);
            let word = |s: &str| parse_word_with(s, &opts).map_err(|e| err(e.to_string()));
            if let Some(rest) = line.strip_prefix("presentation:") {
                presentation = Presentation::from_name(rest.trim())
                    .ok_or_else(|| err(format!("unknown presentation {}", rest.trim())))?;
            } else if let Some(rest) = line.strip_prefix("start:") {
                start = Some(word(rest)?);
            } else if let Some(rest) = line.strip_prefix("end:") {
                end = Some(word(rest)?);
            } else if line.starts_with("schema:") {
                continue;
            } else {
                steps.push(parse_step(line, presentation).map_err(err)?);
            }
        }
        let missing = |what: &str| SmmError::Derivation {
            line: 0,
            message: format!("missing {what} line"),
        };
        Ok(Derivation {
            presentation,
            start: start.ok_or_else(|| missing("start"))?,
            steps,
            end: end.ok_or_else(|| missing("end"))?,
        })
    }
}

fn parse_step(line: &str, presentation: Presentation) -> Result<Step, String> {
    let (head, rest) = line
        .split_once(char::is_whitespace)
        .ok_or("step needs a rule, a range, a direction and a substitution")?;
    let (rule, lift) = match head.split_once('^') {
        Some((r, l)) => {
            let endos = l
                .chars()
                .map(|c| match c {
                    'T' => Ok(Endo::T),
                    'Q' => Ok(Endo::Q),
                    _ => Err(format!("bad lift {l}")),
                })
                .collect::<Result<Vec<_>, _>>()?;
            (r, Wrapper::from_endos(&endos))
        }
        None => (head, Wrapper::EMPTY),
    };
    let rest = rest.trim_start();
    let (range, rest) = rest.split_once(char::is_whitespace).ok_or("missing direction")?;
    let range = range.strip_prefix('@').ok_or("range must start with @")?;
    let (s, e) = range.split_once("..").ok_or("range must be start..end")?;
    let start: usize = s.parse().map_err(|_| format!("bad range start {s}"))?;
    let end: usize = e.parse().map_err(|_| format!("bad range end {e}"))?;
    let rest = rest.trim_start();
    let (dir, rest) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
    let dir = Direction::from_token(dir).ok_or_else(|| format!("bad direction {dir}"))?;
    let subst = parse_subst(rest.trim(), presentation)?;
    Ok(Step {
        rule: rule.to_string(),
        lift,
        start,
        end,
        dir,
        subst,
    })
}

fn parse_subst(src: &str, presentation: Presentation) -> Result<Subst, String> {
    let inner = src
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or("substitution must be braced")?;
    let mut subst = Subst::default();
    // bindings are separated by commas at parenthesis depth zero
    let mut depth = 0i32;
    let mut from = 0;
    let mut parts = Vec::new();
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&inner[from..i]);
                from = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&inner[from..]);
    for part in parts {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (v, t) = part.split_once('=').ok_or_else(|| format!("bad binding {part}"))?;
        let w = parse_word_with(t, &presentation.parse_options(&[])).map_err(|e| e.to_string())?;
        subst.insert(Sym::new(v.trim()), w);
    }
    Ok(subst)
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "presentation: {}", self.presentation)?;
        writeln!(f, "start: {}", self.start)?;
        writeln!(f, "end: {}", self.end)?;
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse::parse_word;

    fn pi_t() -> Derivation {
        Derivation::parse(
            "presentation: mu-delta\n\
             start: eps*T(a)*eta\n\
             end: a\n\
             SMM2 @1..3 bwd {a=a}\n\
             SMM18 @0..2 fwd {}\n",
        )
        .unwrap()
    }

    #[test]
    fn accepts_valid_derivation() {
        assert_eq!(pi_t().check(), Verdict::Accept);
    }

    #[test]
    fn flipped_direction_is_rejected_at_that_step() {
        for i in 0..2 {
            let mut d = pi_t();
            d.steps[i].dir = d.steps[i].dir.flip();
            assert_eq!(
                d.check(),
                Verdict::Reject {
                    step: i,
                    reason: RejectReason::Step(StepError::NoMatch)
                }
            );
        }
    }

    #[test]
    fn reflexive_derivation() {
        let w = parse_word("mu*T(eta)").unwrap();
        let d = Derivation {
            presentation: Presentation::MuDelta,
            start: w.clone(),
            steps: vec![],
            end: w,
        };
        assert!(d.check().is_accept());
    }

    #[test]
    fn wrong_end_is_rejected_after_last_step() {
        let mut d = pi_t();
        d.end = parse_word("b").unwrap();
        assert!(matches!(
            d.check(),
            Verdict::Reject {
                step: 2,
                reason: RejectReason::EndMismatch { .. }
            }
        ));
    }

    #[test]
    fn text_round_trip() {
        let d = pi_t();
        let again = Derivation::parse(&d.to_text()).unwrap();
        assert_eq!(d, again);
        let lifted = "start: mu*T(mu)*T(Q(g))\nend: mu*T(Q(g))*T(mu)\nSMM7^T @1..3 fwd {a=g}\n";
        let d = Derivation::parse(lifted).unwrap();
        assert_eq!(d.steps[0].lift, Wrapper::single(Endo::T));
        assert!(d.check().is_accept());
        assert_eq!(Derivation::parse(&d.to_text()).unwrap(), d);
    }

    #[test]
    fn malformed_lines_report_position() {
        let err = Derivation::parse("start: 1\nend: 1\nSMM2 1..2 fwd {}\n").unwrap_err();
        assert!(matches!(err, SmmError::Derivation { line: 3, .. }));
    }
}
