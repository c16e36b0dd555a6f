//! Associative matching of schema sides against words.
//!
//! A pattern variable under wrapper `W` binds a contiguous, possibly empty
//! run of subject letters that all carry `W` as an outer prefix; the binding
//! is the run with `W` stripped. Matching may additionally happen under a
//! lift: every subject letter touched must then carry the lift prefix, which
//! is stripped before comparison. Lifted matches realize congruence of the
//! axioms under the endomorphisms `T` and `Q`.

use std::fmt;

use super::word::{Atom, Letter, Sym, Word, Wrapper};

/// Variable bindings, sorted by variable.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Subst(pub Vec<(Sym, Word)>);

impl Subst {
    pub fn get(&self, v: Sym) -> Option<&Word> {
        self.0.iter().find(|(s, _)| *s == v).map(|(_, w)| w)
    }

    pub fn insert(&mut self, v: Sym, w: Word) {
        match self.0.binary_search_by(|(s, _)| s.cmp(&v)) {
            Ok(i) => self.0[i].1 = w,
            Err(i) => self.0.insert(i, (v, w)),
        }
    }

    pub fn vars(&self) -> Vec<Sym> {
        self.0.iter().map(|(s, _)| *s).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Debug for Subst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (s, w)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s} ↦ {w:?}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Subst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut entries: Vec<_> = self.0.iter().collect();
        entries.sort_by_key(|(s, _)| s.name());
        write!(f, "{{")?;
        for (i, (s, w)) in entries.into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}={w}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Match {
    pub subst: Subst,
    /// Exclusive end index of the matched subword.
    pub end: usize,
}

/// All matches of `pattern` against the subword of `subject` starting at
/// `start`, for every possible end index. Order is leftmost-shortest: the
/// first variable's binding grows slowest.
pub fn match_at(pattern: &Word, subject: &Word, start: usize) -> Vec<Match> {
    match_lifted(pattern.letters(), subject.letters(), start, Wrapper::EMPTY)
}

/// Matches covering exactly `subject[start..end]`.
pub fn match_range(pattern: &Word, subject: &Word, start: usize, end: usize) -> Vec<Match> {
    match_at(pattern, subject, start)
        .into_iter()
        .filter(|m| m.end == end)
        .collect()
}

pub fn match_lifted(pattern: &[Letter], subject: &[Letter], start: usize, lift: Wrapper) -> Vec<Match> {
    let mut out = Vec::new();
    if start > subject.len() {
        return out;
    }
    let mut bindings = Vec::new();
    go(pattern, subject, start, lift, &mut bindings, &mut out);
    out
}

fn strip(l: &Letter, prefix: Wrapper) -> Option<Letter> {
    l.wrapper.strip_prefix(prefix).map(|w| Letter::new(w, l.atom))
}

fn go(
    pattern: &[Letter],
    subject: &[Letter],
    pos: usize,
    lift: Wrapper,
    bindings: &mut Vec<(Sym, Word)>,
    out: &mut Vec<Match>,
) {
    let Some((item, rest)) = pattern.split_first() else {
        let mut subst = Subst::default();
        for (v, w) in bindings.iter() {
            subst.insert(*v, w.clone());
        }
        out.push(Match { subst, end: pos });
        return;
    };
    match item.atom {
        Atom::Var(v) => {
            let prefix = item.wrapper.under(lift);
            let mut bound = Vec::new();
            let mut p = pos;
            loop {
                bindings.push((v, Word(bound.clone())));
                go(rest, subject, p, lift, bindings, out);
                bindings.pop();
                match subject.get(p).and_then(|l| strip(l, prefix)) {
                    Some(l) => {
                        bound.push(l);
                        p += 1;
                    }
                    None => break,
                }
            }
        }
        _ => {
            if let Some(l) = subject.get(pos).and_then(|l| strip(l, lift)) {
                if l == *item {
                    go(rest, subject, pos + 1, lift, bindings, out);
                }
            }
        }
    }
}

/// Substitutes bound words for the variables of a schema side.
pub fn instantiate(side: &Word, subst: &Subst) -> Option<Word> {
    let mut out = Vec::with_capacity(side.len());
    for l in side.letters() {
        match l.atom {
            Atom::Var(v) => {
                let w = subst.get(v)?;
                out.extend(w.letters().iter().map(|x| x.lift(l.wrapper)));
            }
            _ => out.push(*l),
        }
    }
    Some(Word(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse::{parse_word, parse_word_with, ParseOptions};
    use proptest::prelude::*;

    fn pat(s: &str, vars: &[&str]) -> Word {
        parse_word_with(s, &ParseOptions::with_vars(vars)).unwrap()
    }

    fn a() -> Sym {
        Sym::new("a")
    }

    #[test]
    fn suffix_binding() {
        let p = pat("eta*a", &["a"]);
        let s = parse_word("eta*T(mu)*eps").unwrap();
        let full = match_range(&p, &s, 0, 3);
        assert_eq!(full.len(), 1);
        assert_eq!(full[0].subst.get(a()), Some(&parse_word("T(mu)*eps").unwrap()));
        // every end position is enumerated, shortest binding first
        let all = match_at(&p, &s, 0);
        assert_eq!(all.iter().map(|m| m.end).collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn wrapper_stripping() {
        let p = pat("T(a)*eta", &["a"]);
        let s = parse_word("T(Q(g))*T(eps)*eta").unwrap();
        let m = match_at(&p, &s, 0);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].subst.get(a()), Some(&parse_word("Q(g)*eps").unwrap()));
        assert_eq!(m[0].end, 3);
    }

    #[test]
    fn head_mismatch() {
        let p = pat("mu*T(a)", &["a"]);
        let s = parse_word("delta*eta").unwrap();
        assert!(match_at(&p, &s, 0).is_empty());
    }

    #[test]
    fn lifted_match() {
        let p = pat("mu*Q(a)", &["a"]);
        let s = parse_word("mu*T(mu)*T(Q(g))*T(eta)").unwrap();
        let m = match_lifted(p.letters(), s.letters(), 1, Wrapper::single(crate::term::Endo::T));
        let ends: Vec<usize> = m.iter().map(|m| m.end).collect();
        assert_eq!(ends, vec![2, 3]);
        assert_eq!(m[1].subst.get(a()), Some(&parse_word("g").unwrap()));
    }

    #[test]
    fn instantiate_lifts_bindings() {
        let side = pat("Q(T(a))*mu", &["a"]);
        let mut s = Subst::default();
        s.insert(a(), parse_word("g*eps").unwrap());
        let w = instantiate(&side, &s).unwrap();
        assert_eq!(format!("{w:?}"), "[QT]g·[QT]eps·mu");
    }

    /// Brute force: try every binding of each variable to every contiguous
    /// subword and compare the instantiated pattern with the subject slice.
    fn brute_force(pattern: &Word, subject: &Word, start: usize) -> Vec<(Subst, usize)> {
        let vars = pattern.vars();
        let n = subject.len();
        let mut candidates: Vec<Word> = vec![Word::unit()];
        for i in 0..n {
            for j in i + 1..=n {
                let run = &subject.letters()[i..j];
                // candidate bindings are the runs with any common prefix stripped
                let common = run.iter().map(|l| l.wrapper.len()).min().unwrap();
                for k in 0..=common {
                    let pre = run[0].wrapper.prefix(k);
                    if run.iter().all(|l| l.wrapper.has_prefix(pre)) {
                        let w: Word = run.iter().map(|l| strip(l, pre).unwrap()).collect();
                        if !candidates.contains(&w) {
                            candidates.push(w);
                        }
                    }
                }
            }
        }
        let mut out = Vec::new();
        let mut idx = vec![0usize; vars.len()];
        loop {
            let mut subst = Subst::default();
            for (v, &i) in vars.iter().zip(&idx) {
                subst.insert(*v, candidates[i].clone());
            }
            let inst = instantiate(pattern, &subst).unwrap();
            let end = start + inst.len();
            if end <= n && subject.letters()[start..end] == inst.letters()[..] {
                out.push((subst, end));
            }
            let mut k = 0;
            loop {
                if k == idx.len() {
                    out.sort();
                    out.dedup();
                    return out;
                }
                idx[k] += 1;
                if idx[k] < candidates.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    fn arb_letter() -> impl Strategy<Value = Letter> {
        let atoms = prop_oneof![
            Just(Atom::Mu),
            Just(Atom::Eta),
            Just(Atom::Eps),
            Just(Atom::Gen(Sym::new("g"))),
        ];
        let wrappers = prop_oneof![
            Just(vec![]),
            Just(vec![crate::term::Endo::T]),
            Just(vec![crate::term::Endo::Q]),
            Just(vec![crate::term::Endo::T, crate::term::Endo::Q]),
            Just(vec![crate::term::Endo::T, crate::term::Endo::T]),
        ];
        (wrappers, atoms).prop_map(|(w, a)| Letter::new(Wrapper::from_endos(&w), a))
    }

    fn arb_pattern() -> impl Strategy<Value = Word> {
        prop_oneof![
            Just(pat("eta*a", &["a"])),
            Just(pat("T(a)*eta", &["a"])),
            Just(pat("T(a)*Q(b)", &["a", "b"])),
            Just(pat("mu*T(T(a))", &["a"])),
            Just(pat("a*eps", &["a"])),
            Just(pat("mu*T(eta)", &[])),
            Just(pat("Q(a)*mu*b", &["a", "b"])),
        ]
    }

    proptest! {
        #[test]
        fn matching_agrees_with_brute_force(
            letters in prop::collection::vec(arb_letter(), 0..=6),
            p in arb_pattern(),
            start in 0usize..=6,
        ) {
            let subject = Word(letters);
            prop_assume!(start <= subject.len());
            let mut got: Vec<(Subst, usize)> = match_at(&p, &subject, start)
                .into_iter()
                .map(|m| (m.subst, m.end))
                .collect();
            got.sort();
            let n = got.len();
            got.dedup();
            prop_assert_eq!(n, got.len(), "duplicate matches");
            prop_assert_eq!(got, brute_force(&p, &subject, start));
        }
    }
}
