//! Axiom schemas of the three presentations.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::parse::{parse_word_with, ParseOptions};
use super::rewrite::Direction;
use super::word::{Sym, Word};
use crate::error::SmmError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Presentation {
    /// `T, Q, mu, eta, delta, eps` with axioms SMM1–SMM18.
    #[default]
    MuDelta,
    /// `T, Q, gamma, eta, eps` with the eleven gamma axioms.
    Gamma,
    /// The skew product `a⊛b = Q(a)T(b)` with `gamma, eta, eps`.
    Product,
}

impl Presentation {
    pub fn name(self) -> &'static str {
        match self {
            Presentation::MuDelta => "mu-delta",
            Presentation::Gamma => "gamma",
            Presentation::Product => "product",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "mu-delta" => Some(Presentation::MuDelta),
            "gamma" => Some(Presentation::Gamma),
            "product" => Some(Presentation::Product),
            _ => None,
        }
    }

    /// Whether words of this presentation carry `gamma` as a letter.
    pub fn gamma_letters(self) -> bool {
        !matches!(self, Presentation::MuDelta)
    }

    pub fn parse_options(self, vars: &[&str]) -> ParseOptions {
        ParseOptions {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            presentation: if self.gamma_letters() {
                Presentation::Gamma
            } else {
                Presentation::MuDelta
            },
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSchema {
    pub id: String,
    pub lhs: Word,
    pub rhs: Word,
    pub presentation: Presentation,
    /// Preferred direction when the rule is used for simplification.
    pub orientation: Direction,
}

impl RuleSchema {
    pub fn new(id: &str, lhs: Word, rhs: Word, presentation: Presentation) -> Result<Self, SmmError> {
        let rule = RuleSchema {
            id: id.to_string(),
            lhs,
            rhs,
            presentation,
            orientation: Direction::Forward,
        };
        rule.validate()?;
        Ok(rule)
    }

    /// Parses both sides; identifiers listed in `vars` become pattern variables.
    pub fn parse(id: &str, lhs: &str, rhs: &str, vars: &[&str], presentation: Presentation) -> Result<Self, SmmError> {
        let opts = presentation.parse_options(vars);
        RuleSchema::new(
            id,
            parse_word_with(lhs, &opts)?,
            parse_word_with(rhs, &opts)?,
            presentation,
        )
    }

    /// Both sides must be linear and share their variables, so the schema
    /// can be used in either direction.
    fn validate(&self) -> Result<(), SmmError> {
        for side in [&self.lhs, &self.rhs] {
            let occurrences = side.letters().iter().filter(|l| l.atom.is_var()).count();
            if occurrences != side.vars().len() {
                return Err(SmmError::InvalidRule {
                    id: self.id.clone(),
                    reason: "a variable occurs more than once on one side".into(),
                });
            }
        }
        let mut l = self.lhs.vars();
        let mut r = self.rhs.vars();
        l.sort();
        r.sort();
        if l != r {
            return Err(SmmError::InvalidRule {
                id: self.id.clone(),
                reason: "sides have different variables".into(),
            });
        }
        Ok(())
    }

    pub fn vars(&self) -> Vec<Sym> {
        self.lhs.vars()
    }

    /// `(source, target)` for rewriting in direction `dir`.
    pub fn sides(&self, dir: Direction) -> (&Word, &Word) {
        match dir {
            Direction::Forward => (&self.lhs, &self.rhs),
            Direction::Backward => (&self.rhs, &self.lhs),
        }
    }

    pub fn oriented(mut self, dir: Direction) -> Self {
        self.orientation = dir;
        self
    }
}

#[derive(Debug, Clone)]
pub struct RuleSet {
    pub presentation: Presentation,
    pub rules: Vec<RuleSchema>,
}

impl RuleSet {
    pub fn get(&self, id: &str) -> Option<&RuleSchema> {
        self.rules.iter().find(|r| r.id == id)
    }

    pub fn ids(&self) -> Vec<&str> {
        self.rules.iter().map(|r| r.id.as_str()).collect()
    }

    /// SMM1–SMM18.
    pub fn mu_delta() -> RuleSet {
        let p = Presentation::MuDelta;
        let r = |id: &str, l: &str, r: &str, v: &[&str]| RuleSchema::parse(id, l, r, v, p).expect("built-in rule");
        RuleSet {
            presentation: p,
            rules: vec![
                r("SMM1", "mu*T(T(a))", "T(a)*mu", &["a"]),
                r("SMM2", "eta*a", "T(a)*eta", &["a"]),
                r("SMM3", "delta*Q(a)", "Q(Q(a))*delta", &["a"]),
                r("SMM4", "a*eps", "eps*Q(a)", &["a"]),
                r("SMM5", "mu*delta*T(Q(a))", "Q(T(a))*mu*delta", &["a"]),
                r("SMM6", "T(a)*Q(b)", "Q(b)*T(a)", &["a", "b"]),
                r("SMM7", "mu*Q(a)", "Q(a)*mu", &["a"]),
                r("SMM8", "delta*T(a)", "T(a)*delta", &["a"]),
                r("SMM9", "mu*T(mu)", "mu*mu", &[]),
                r("SMM10", "mu*eta", "1", &[]),
                r("SMM11", "mu*T(eta)", "1", &[]),
                r("SMM12", "Q(delta)*delta", "delta*delta", &[]),
                r("SMM13", "eps*delta", "1", &[]),
                r("SMM14", "Q(eps)*delta", "1", &[]),
                r("SMM15", "Q(mu)*mu*delta*T(delta)", "delta*mu", &[]),
                r("SMM16", "eps*mu", "eps*T(eps)", &[]),
                r("SMM17", "delta*eta", "Q(eta)*eta", &[]),
                r("SMM18", "eps*eta", "1", &[]),
            ],
        }
    }

    /// The eleven axioms in terms of `gamma`.
    pub fn gamma() -> RuleSet {
        let p = Presentation::Gamma;
        let r = |id: &str, l: &str, r: &str, v: &[&str]| RuleSchema::parse(id, l, r, v, p).expect("built-in rule");
        RuleSet {
            presentation: p,
            rules: vec![
                r("SMMG1", "T(a)*Q(b)", "Q(b)*T(a)", &["a", "b"]),
                r("SMMG2", "gamma*T(T(a))", "T(a)*gamma", &["a"]),
                r("SMMG3", "gamma*T(Q(a))", "Q(T(a))*gamma", &["a"]),
                r("SMMG4", "gamma*Q(a)", "Q(Q(a))*gamma", &["a"]),
                r("SMMG5", "eta*a", "T(a)*eta", &["a"]),
                r("SMMG6", "a*eps", "eps*Q(a)", &["a"]),
                r("SMMG7", "Q(gamma)*gamma*T(gamma)", "gamma*gamma", &[]),
                r("SMMG8", "gamma*eta", "Q(eta)", &[]),
                r("SMMG9", "eps*gamma", "T(eps)", &[]),
                r("SMMG10", "Q(eps)*gamma*T(eta)", "1", &[]),
                r("SMMG11", "eps*eta", "1", &[]),
            ],
        }
    }

    /// Axioms of the skew product `a⊛b := Q(a)T(b)`, transcribed through that
    /// definition. The unit law `1⊛1 = 1` and the endomorphism laws hold by
    /// normalization and have no schema.
    pub fn product() -> RuleSet {
        let p = Presentation::Product;
        let r = |id: &str, l: &str, r: &str, v: &[&str]| RuleSchema::parse(id, l, r, v, p).expect("built-in rule");
        RuleSet {
            presentation: p,
            rules: vec![
                r(
                    "P1",
                    "Q(a)*Q(b)*T(c)*T(d)",
                    "Q(a)*T(c)*Q(b)*T(d)",
                    &["a", "b", "c", "d"],
                ),
                r(
                    "P3",
                    "gamma*Q(a)*T(Q(b))*T(T(c))",
                    "Q(Q(a))*Q(T(b))*T(c)*gamma",
                    &["a", "b", "c"],
                ),
                r("P4", "eta*a", "T(a)*eta", &["a"]),
                r("P5", "a*eps", "eps*Q(a)", &["a"]),
                r("P6", "Q(gamma)*gamma*T(gamma)", "gamma*gamma", &[]),
                r("P7", "gamma*eta", "Q(eta)", &[]),
                r("P8", "eps*gamma", "T(eps)", &[]),
                r("P9", "Q(eps)*gamma*T(eta)", "1", &[]),
                r("P10", "eps*eta", "1", &[]),
            ],
        }
    }

    pub fn for_presentation(p: Presentation) -> RuleSet {
        match p {
            Presentation::MuDelta => RuleSet::mu_delta(),
            Presentation::Gamma => RuleSet::gamma(),
            Presentation::Product => RuleSet::product(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_sets_are_well_formed() {
        assert_eq!(RuleSet::mu_delta().rules.len(), 18);
        assert_eq!(RuleSet::gamma().rules.len(), 11);
        assert_eq!(RuleSet::product().rules.len(), 9);
    }

    #[test]
    fn rejects_nonlinear_and_unbound() {
        let p = Presentation::MuDelta;
        assert!(RuleSchema::parse("bad", "a*a", "a", &["a"], p).is_err());
        assert!(RuleSchema::parse("bad", "a", "b", &["a", "b"], p).is_err());
        assert!(RuleSchema::parse("ok", "mu*a", "a*mu", &["a"], p).is_ok());
    }

    #[test]
    fn rule_sides_print_as_schemas() {
        let set = RuleSet::mu_delta();
        let smm1 = set.get("SMM1").unwrap();
        assert_eq!(format!("{:?}", smm1.lhs), "mu·[TT]a");
        assert_eq!(format!("{:?}", smm1.rhs), "[T]a·mu");
    }
}
