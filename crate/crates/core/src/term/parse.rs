//! Textual term grammar and normalization of tree-shaped terms into words.
//!
//! ```text
//! expr   := factor ('*' factor)*
//! factor := '1' | atom | ident | F '(' expr ')' | '(' expr ')'
//! F      := T | Q | S | pi
//! atom   := mu | eta | delta | eps | gamma
//! ```
//!
//! `S(x)` and `pi(x)` are macros for `mu*T(Q(x)*eta)` and `eps*x*eta`.

use super::rules::Presentation;
use super::word::{Atom, Endo, Letter, Sym, Word, Wrapper};
use crate::error::SmmError;

/// Tree-shaped term over {mul, unit, T, Q, atoms}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Unit,
    Atom(Atom),
    Mul(Vec<Term>),
    Apply(Endo, Box<Term>),
}

#[allow(clippy::should_implement_trait)]
impl Term {
    pub fn mul(a: Term, b: Term) -> Term {
        Term::Mul(vec![a, b])
    }

    pub fn apply(e: Endo, t: Term) -> Term {
        Term::Apply(e, Box::new(t))
    }
}

/// Returns the normal form of a term: products flattened, endomorphisms
/// distributed down to atoms, and units dropped.
pub fn normalize(term: &Term) -> Word {
    let mut out = Vec::new();
    push_normal(term, Wrapper::EMPTY, &mut out);
    Word(out)
}

fn push_normal(term: &Term, ctx: Wrapper, out: &mut Vec<Letter>) {
    match term {
        Term::Unit => {}
        Term::Atom(a) => out.push(Letter::new(ctx, *a)),
        Term::Mul(ts) => {
            for t in ts {
                push_normal(t, ctx, out);
            }
        }
        // ctx is applied outside e
        Term::Apply(e, t) => push_normal(t, Wrapper::single(*e).under(ctx), out),
    }
}

/// Converts a word back to a tree (a product of wrapped atoms).
pub fn word_to_term(w: &Word) -> Term {
    Term::Mul(
        w.letters()
            .iter()
            .map(|l| {
                l.wrapper
                    .endos()
                    .into_iter()
                    .rev()
                    .fold(Term::Atom(l.atom), |t, e| Term::apply(e, t))
            })
            .collect(),
    )
}

/// `S(w) = mu·T(Q(w)·eta)`, normalized.
pub fn sigma_s(w: &Word) -> Word {
    let inner = w.apply_endo(Endo::Q).concat(&Word::atom(Atom::Eta));
    Word::atom(Atom::Mu).concat(&inner.apply_endo(Endo::T))
}

/// `pi(w) = eps·w·eta`, normalized.
pub fn sigma_pi(w: &Word) -> Word {
    Word::atom(Atom::Eps).concat(w).concat(&Word::atom(Atom::Eta))
}

#[derive(Debug, Clone, Default)]
pub struct ParseOptions {
    /// Identifiers parsed as pattern variables instead of generators.
    pub vars: Vec<String>,
    /// Under `MuDelta`, `gamma` expands to `mu*delta`; under `Gamma`, `mu`
    /// and `delta` expand to their gamma definitions; under `Product` every
    /// atom is kept as a letter.
    pub presentation: Presentation,
}

impl ParseOptions {
    pub fn with_vars(vars: &[&str]) -> Self {
        ParseOptions {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            presentation: Presentation::MuDelta,
        }
    }
}

/// Parses a ground term (every identifier is a generator) and normalizes it.
pub fn parse_word(src: &str) -> Result<Word, SmmError> {
    parse_word_with(src, &ParseOptions::default())
}

pub fn parse_word_with(src: &str, opts: &ParseOptions) -> Result<Word, SmmError> {
    Ok(normalize(&parse_term(src, opts)?))
}

pub fn parse_term(src: &str, opts: &ParseOptions) -> Result<Term, SmmError> {
    let tokens = tokenize(src)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        opts,
        src,
    };
    let t = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.error("trailing input"));
    }
    Ok(t)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    One,
    Star,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, SmmError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (off, c) = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '*' | '·' => {
                out.push((Tok::Star, off));
                i += 1
            }
            '(' => {
                out.push((Tok::LParen, off));
                i += 1
            }
            ')' => {
                out.push((Tok::RParen, off));
                i += 1
            }
            '1' => {
                out.push((Tok::One, off));
                i += 1
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while i < chars.len() {
                    let c = chars[i].1;
                    if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                        s.push(c);
                        i += 1;
                    } else {
                        break;
                    }
                }
                out.push((Tok::Ident(s), off));
            }
            other => {
                return Err(SmmError::Parse {
                    offset: off,
                    message: format!("unexpected character {other:?}"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    opts: &'a ParseOptions,
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> SmmError {
        let offset = self.tokens.get(self.pos).map(|t| t.1).unwrap_or(self.src.len());
        SmmError::Parse {
            offset,
            message: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.0)
    }

    fn expect(&mut self, tok: Tok) -> Result<(), SmmError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected {tok:?}")))
        }
    }

    fn expr(&mut self) -> Result<Term, SmmError> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Term::Mul(factors)
        })
    }

    fn parenthesized(&mut self) -> Result<Term, SmmError> {
        self.expect(Tok::LParen)?;
        let t = self.expr()?;
        self.expect(Tok::RParen)?;
        Ok(t)
    }

    fn factor(&mut self) -> Result<Term, SmmError> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.error("unexpected end of input"));
        };
        match tok {
            Tok::One => {
                self.pos += 1;
                Ok(Term::Unit)
            }
            Tok::LParen => self.parenthesized(),
            Tok::Ident(name) => {
                self.pos += 1;
                let gamma_atom = self.opts.presentation != Presentation::MuDelta;
                match name.as_str() {
                    "T" => Ok(Term::apply(Endo::T, self.parenthesized()?)),
                    "Q" => Ok(Term::apply(Endo::Q, self.parenthesized()?)),
                    "S" => {
                        let x = self.parenthesized()?;
                        Ok(Term::mul(
                            self.mu(),
                            Term::apply(Endo::T, Term::mul(Term::apply(Endo::Q, x), Term::Atom(Atom::Eta))),
                        ))
                    }
                    "pi" => {
                        let x = self.parenthesized()?;
                        Ok(Term::Mul(vec![Term::Atom(Atom::Eps), x, Term::Atom(Atom::Eta)]))
                    }
                    "mu" => Ok(self.mu()),
                    "delta" => Ok(self.delta()),
                    "eta" => Ok(Term::Atom(Atom::Eta)),
                    "eps" => Ok(Term::Atom(Atom::Eps)),
                    "gamma" if gamma_atom => Ok(Term::Atom(Atom::Gamma)),
                    "gamma" => Ok(Term::mul(Term::Atom(Atom::Mu), Term::Atom(Atom::Delta))),
                    _ => {
                        let sym = Sym::new(&name);
                        if self.opts.vars.iter().any(|v| v == &name) {
                            Ok(Term::Atom(Atom::Var(sym)))
                        } else {
                            Ok(Term::Atom(Atom::Gen(sym)))
                        }
                    }
                }
            }
            Tok::Star | Tok::RParen => Err(self.error("expected a factor")),
        }
    }

    // In the gamma presentation mu and delta are derived elements.
    fn mu(&self) -> Term {
        if self.opts.presentation == Presentation::Gamma {
            Term::mul(Term::apply(Endo::Q, Term::Atom(Atom::Eps)), Term::Atom(Atom::Gamma))
        } else {
            Term::Atom(Atom::Mu)
        }
    }

    fn delta(&self) -> Term {
        if self.opts.presentation == Presentation::Gamma {
            Term::mul(Term::Atom(Atom::Gamma), Term::apply(Endo::T, Term::Atom(Atom::Eta)))
        } else {
            Term::Atom(Atom::Delta)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dbg(w: &Word) -> String {
        format!("{w:?}")
    }

    #[test]
    fn normalize_distributes_endomorphisms() {
        let a = Term::Atom(Atom::Gen(Sym::new("a")));
        let b = Term::Atom(Atom::Gen(Sym::new("b")));
        let w = normalize(&Term::apply(Endo::T, Term::mul(a, b)));
        assert_eq!(dbg(&w), "[T]a·[T]b");
        assert_eq!(normalize(&Term::apply(Endo::T, Term::Unit)), Word::unit());
        let t = Term::apply(
            Endo::T,
            Term::mul(Term::apply(Endo::Q, Term::Atom(Atom::Mu)), Term::Atom(Atom::Eta)),
        );
        assert_eq!(dbg(&normalize(&t)), "[TQ]mu·[T]eta");
    }

    #[test]
    fn macros() {
        assert_eq!(dbg(&sigma_s(&Word::unit())), "mu·[T]eta");
        assert_eq!(dbg(&sigma_pi(&Word::unit())), "eps·eta");
        let g = parse_word("g").unwrap();
        assert_eq!(dbg(&sigma_s(&g)), "mu·[TQ]g·[T]eta");
        assert_eq!(parse_word("S(g)").unwrap(), sigma_s(&g));
        assert_eq!(parse_word("pi(T(g))").unwrap(), sigma_pi(&g.apply_endo(Endo::T)));
    }

    #[test]
    fn parse_grammar() {
        let w = parse_word(" T( Q(mu) * eta ) * 1 * eps ").unwrap();
        assert_eq!(dbg(&w), "[TQ]mu·[T]eta·eps");
        assert_eq!(parse_word("1").unwrap(), Word::unit());
        assert_eq!(dbg(&parse_word("gamma").unwrap()), "mu·delta");
        let opts = ParseOptions {
            vars: vec![],
            presentation: Presentation::Gamma,
        };
        assert_eq!(dbg(&parse_word_with("mu", &opts).unwrap()), "[Q]eps·gamma");
        assert!(parse_word("T(mu").is_err());
        assert!(parse_word("mu * ").is_err());
        assert!(parse_word("mu $").is_err());
        let v = parse_word_with("T(a)*b", &ParseOptions::with_vars(&["a"])).unwrap();
        assert!(v.letters()[0].atom.is_var());
        assert!(!v.letters()[1].atom.is_var());
    }

    #[test]
    fn display_round_trips() {
        let w = parse_word("T(Q(mu))*eta*Q(g)").unwrap();
        assert_eq!(w.to_string(), "T(Q(mu))*eta*Q(g)");
        assert_eq!(parse_word(&w.to_string()).unwrap(), w);
    }

    fn arb_term() -> impl Strategy<Value = Term> {
        let leaf = prop_oneof![
            Just(Term::Unit),
            Just(Term::Atom(Atom::Mu)),
            Just(Term::Atom(Atom::Eta)),
            Just(Term::Atom(Atom::Delta)),
            Just(Term::Atom(Atom::Eps)),
            Just(Term::Atom(Atom::Gen(Sym::new("g")))),
        ];
        leaf.prop_recursive(4, 24, 3, |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 0..3).prop_map(Term::Mul),
                inner.clone().prop_map(|t| Term::apply(Endo::T, t)),
                inner.prop_map(|t| Term::apply(Endo::Q, t)),
            ]
        })
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(t in arb_term()) {
            let w = normalize(&t);
            prop_assert_eq!(normalize(&word_to_term(&w)), w.clone());
            prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w);
        }

        #[test]
        fn endo_distributes_over_concat(a in arb_term(), b in arb_term()) {
            let (u, v) = (normalize(&a), normalize(&b));
            for e in [Endo::T, Endo::Q] {
                prop_assert_eq!(u.concat(&v).apply_endo(e), u.apply_endo(e).concat(&v.apply_endo(e)));
            }
        }

        #[test]
        fn concat_is_a_monoid(a in arb_term(), b in arb_term(), c in arb_term()) {
            let (u, v, w) = (normalize(&a), normalize(&b), normalize(&c));
            prop_assert_eq!(u.concat(&v).concat(&w), u.concat(&v.concat(&w)));
            prop_assert_eq!(Word::unit().concat(&u), u.clone());
            prop_assert_eq!(u.concat(&Word::unit()), u);
        }
    }
}
