//! Translation between the mu-delta, gamma and product presentations.

use super::parse::{parse_word_with, ParseOptions};
use super::rules::{Presentation, RuleSet};
use super::search::{prove_equal, Budget, ProofOutcome};
use super::word::{Atom, Letter, Word};

/// A defining equation `symbol := word` of the target presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Definition {
    pub symbol: &'static str,
    pub word: Word,
}

fn raw(src: &str, vars: &[&str]) -> Word {
    // letters are built without macro expansion of gamma/mu/delta
    let opts = ParseOptions {
        vars: vars.iter().map(|s| s.to_string()).collect(),
        presentation: Presentation::Product,
    };
    parse_word_with(src, &opts).expect("built-in definition")
}

/// The words defining the structure of `to` in terms of that of `from`.
pub fn convert_presentation(from: Presentation, to: Presentation) -> Vec<Definition> {
    use Presentation::*;
    let gamma = || Definition {
        symbol: "gamma",
        word: Word(vec![Letter::bare(Atom::Mu), Letter::bare(Atom::Delta)]),
    };
    let mu_delta = || {
        vec![
            Definition {
                symbol: "mu",
                word: raw("Q(eps)*gamma", &[]),
            },
            Definition {
                symbol: "delta",
                word: raw("gamma*T(eta)", &[]),
            },
        ]
    };
    let product = || Definition {
        symbol: "a*b",
        word: raw("Q(a)*T(b)", &["a", "b"]),
    };
    match (from, to) {
        (MuDelta, Gamma) => vec![gamma()],
        (Gamma, MuDelta) | (Product, MuDelta) => mu_delta(),
        (MuDelta, Product) => vec![gamma(), product()],
        (Gamma, Product) => vec![product()],
        (Product, Gamma) => vec![],
        (a, b) if a == b => vec![],
        _ => unreachable!(),
    }
}

/// Rewrites a word over `from` letters into `to` letters by substituting
/// the defining words under each letter's wrapper.
pub fn translate_word(w: &Word, from: Presentation, to: Presentation) -> Word {
    let to_gamma_letters = to.gamma_letters();
    if from.gamma_letters() == to_gamma_letters {
        return w.clone();
    }
    let mut out = Vec::new();
    for l in w.letters() {
        let def = match (l.atom, to_gamma_letters) {
            (Atom::Gamma, false) => Some(Word(vec![Letter::bare(Atom::Mu), Letter::bare(Atom::Delta)])),
            (Atom::Mu, true) => Some(raw("Q(eps)*gamma", &[])),
            (Atom::Delta, true) => Some(raw("gamma*T(eta)", &[])),
            _ => None,
        };
        match def {
            Some(d) => out.extend(d.lift(l.wrapper).0),
            None => out.push(*l),
        }
    }
    Word(out)
}

/// Identities making `MuDelta → Gamma → MuDelta` the identity: after
/// substituting `gamma = mu*delta`, the definitions of `mu` and `delta`
/// must be provable from the mu-delta axioms.
pub fn round_trip_identities() -> Vec<(&'static str, Word, Word)> {
    let back = convert_presentation(Presentation::Gamma, Presentation::MuDelta);
    back.into_iter()
        .map(|d| {
            let lhs = translate_word(&d.word, Presentation::Gamma, Presentation::MuDelta);
            let rhs = Word(vec![Letter::bare(match d.symbol {
                "mu" => Atom::Mu,
                _ => Atom::Delta,
            })]);
            (d.symbol, lhs, rhs)
        })
        .collect()
}

pub fn prove_round_trip(budget: Budget) -> Vec<(&'static str, ProofOutcome)> {
    let rules = RuleSet::mu_delta();
    round_trip_identities()
        .into_iter()
        .map(|(name, l, r)| (name, prove_equal(&l, &r, &rules, budget)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse::parse_word;

    #[test]
    fn definitions() {
        let g = convert_presentation(Presentation::MuDelta, Presentation::Gamma);
        assert_eq!(g[0].word, parse_word("mu*delta").unwrap());
        let md = convert_presentation(Presentation::Gamma, Presentation::MuDelta);
        assert_eq!(format!("{:?}", md[0].word), "[Q]eps·gamma");
        assert_eq!(format!("{:?}", md[1].word), "gamma·[T]eta");
    }

    #[test]
    fn translation_respects_wrappers() {
        let w = raw("T(gamma)*eta", &[]);
        let md = translate_word(&w, Presentation::Gamma, Presentation::MuDelta);
        assert_eq!(md, parse_word("T(mu)*T(delta)*eta").unwrap());
        let g = translate_word(
            &parse_word("Q(mu)").unwrap(),
            Presentation::MuDelta,
            Presentation::Gamma,
        );
        assert_eq!(format!("{g:?}"), "[QQ]eps·[Q]gamma");
    }

    #[test]
    fn round_trip_is_provable() {
        for (name, out) in prove_round_trip(Budget::default()) {
            let d = out.derivation().unwrap_or_else(|| panic!("{name} not proved"));
            assert!(d.check().is_accept());
        }
    }
}
