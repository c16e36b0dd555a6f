//! Letters and words of the free skew monoidal monoid signature.
//!
//! A word is a product of letters; each letter is an atom under a stack of
//! endomorphism applications. Because `T` and `Q` are monoid endomorphisms,
//! every term has a normal form of this shape: products are flattened into
//! the letter sequence and `T(1) = Q(1) = 1` disappears.

use std::collections::HashMap;
use std::fmt;

use once_cell::sync::Lazy;
use parking_lot::RwLock;

/// One of the two canonical endomorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endo {
    T,
    Q,
}

impl Endo {
    fn bit(self) -> u32 {
        match self {
            Endo::T => 0,
            Endo::Q => 1,
        }
    }

    fn from_bit(b: u32) -> Self {
        if b & 1 == 0 {
            Endo::T
        } else {
            Endo::Q
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Endo::T => "T",
            Endo::Q => "Q",
        }
    }
}

pub const MAX_WRAPPER_DEPTH: u8 = 32;

/// A finite stack of endomorphisms, outermost first.
///
/// Packed into a bit string: bit `i` holds the endomorphism at depth `i`
/// counted from the outside (`T` = 0, `Q` = 1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Wrapper {
    len: u8,
    bits: u32,
}

impl Wrapper {
    pub const EMPTY: Wrapper = Wrapper { len: 0, bits: 0 };

    pub fn single(e: Endo) -> Self {
        Wrapper { len: 1, bits: e.bit() }
    }

    pub fn from_endos(endos: &[Endo]) -> Self {
        endos.iter().rev().fold(Wrapper::EMPTY, |w, &e| w.push_outer(e))
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn endos(self) -> Vec<Endo> {
        (0..self.len).map(|i| Endo::from_bit(self.bits >> i)).collect()
    }

    /// Applies `e` outside the current stack.
    pub fn push_outer(self, e: Endo) -> Self {
        assert!(self.len < MAX_WRAPPER_DEPTH, "wrapper depth overflow");
        Wrapper {
            len: self.len + 1,
            bits: (self.bits << 1) | e.bit(),
        }
    }

    /// `outer ∘ self`: the stack obtained by applying all of `outer` outside `self`.
    pub fn under(self, outer: Wrapper) -> Self {
        assert!(
            self.len as u16 + outer.len as u16 <= MAX_WRAPPER_DEPTH as u16,
            "wrapper depth overflow"
        );
        Wrapper {
            len: self.len + outer.len,
            bits: (self.bits << outer.len) | outer.bits,
        }
    }

    pub fn has_prefix(self, prefix: Wrapper) -> bool {
        prefix.len <= self.len && (self.bits & mask(prefix.len)) == prefix.bits
    }

    pub fn strip_prefix(self, prefix: Wrapper) -> Option<Wrapper> {
        if self.has_prefix(prefix) {
            Some(Wrapper {
                len: self.len - prefix.len,
                bits: self.bits >> prefix.len,
            })
        } else {
            None
        }
    }

    /// The prefix of length `n`.
    pub fn prefix(self, n: usize) -> Wrapper {
        let n = n.min(self.len as usize) as u8;
        Wrapper {
            len: n,
            bits: self.bits & mask(n),
        }
    }
}

fn mask(n: u8) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

impl fmt::Debug for Wrapper {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for e in self.endos() {
            write!(f, "{}", e.name())?;
        }
        write!(f, "]")
    }
}

struct Interner {
    names: Vec<String>,
    ids: HashMap<String, u32>,
}

static INTERNER: Lazy<RwLock<Interner>> = Lazy::new(|| {
    RwLock::new(Interner {
        names: Vec::new(),
        ids: HashMap::new(),
    })
});

/// An interned identifier (generator or variable name).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sym(u32);

impl Sym {
    pub fn new(name: &str) -> Self {
        if let Some(&id) = INTERNER.read().ids.get(name) {
            return Sym(id);
        }
        let mut table = INTERNER.write();
        if let Some(&id) = table.ids.get(name) {
            return Sym(id);
        }
        let id = table.names.len() as u32;
        table.names.push(name.to_string());
        table.ids.insert(name.to_string(), id);
        Sym(id)
    }

    pub fn name(self) -> String {
        INTERNER.read().names[self.0 as usize].clone()
    }
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Mu,
    Eta,
    Delta,
    Eps,
    /// The associator-like element; only the gamma presentation uses it as a letter.
    Gamma,
    Gen(Sym),
    /// Pattern variable; never part of a ground word.
    Var(Sym),
}

impl Atom {
    pub fn is_var(self) -> bool {
        matches!(self, Atom::Var(_))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Mu => write!(f, "mu"),
            Atom::Eta => write!(f, "eta"),
            Atom::Delta => write!(f, "delta"),
            Atom::Eps => write!(f, "eps"),
            Atom::Gamma => write!(f, "gamma"),
            Atom::Gen(s) | Atom::Var(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub wrapper: Wrapper,
    pub atom: Atom,
}

impl Letter {
    pub fn bare(atom: Atom) -> Self {
        Letter {
            wrapper: Wrapper::EMPTY,
            atom,
        }
    }

    pub fn new(wrapper: Wrapper, atom: Atom) -> Self {
        Letter { wrapper, atom }
    }

    pub fn apply(self, e: Endo) -> Self {
        Letter {
            wrapper: self.wrapper.push_outer(e),
            atom: self.atom,
        }
    }

    pub fn lift(self, outer: Wrapper) -> Self {
        Letter {
            wrapper: self.wrapper.under(outer),
            atom: self.atom,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let endos = self.wrapper.endos();
        for e in &endos {
            write!(f, "{}(", e.name())?;
        }
        write!(f, "{}", self.atom)?;
        for _ in &endos {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.wrapper.is_empty() {
            write!(f, "{}", self.atom)
        } else {
            write!(f, "{:?}{}", self.wrapper, self.atom)
        }
    }
}

/// A word in normal form. The empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn atom(a: Atom) -> Self {
        Word(vec![Letter::bare(a)])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Applies an endomorphism to the whole word, distributing over the product.
    pub fn apply_endo(&self, e: Endo) -> Word {
        Word(self.0.iter().map(|l| l.apply(e)).collect())
    }

    pub fn lift(&self, outer: Wrapper) -> Word {
        if outer.is_empty() {
            return self.clone();
        }
        Word(self.0.iter().map(|l| l.lift(outer)).collect())
    }

    pub fn is_ground(&self) -> bool {
        self.0.iter().all(|l| !l.atom.is_var())
    }

    pub fn vars(&self) -> Vec<Sym> {
        let mut out = Vec::new();
        for l in &self.0 {
            if let Atom::Var(s) = l.atom {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        out
    }

    pub fn generators(&self) -> Vec<Sym> {
        let mut out = Vec::new();
        for l in &self.0 {
            if let Atom::Gen(s) = l.atom {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        out
    }

    /// Replaces every variable by the generator of the same name.
    pub fn freeze_vars(&self) -> Word {
        Word(
            self.0
                .iter()
                .map(|l| match l.atom {
                    Atom::Var(s) => Letter::new(l.wrapper, Atom::Gen(s)),
                    _ => *l,
                })
                .collect(),
        )
    }

    pub fn splice(&self, start: usize, end: usize, replacement: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() - (end - start) + replacement.len());
        v.extend_from_slice(&self.0[..start]);
        v.extend_from_slice(&replacement.0);
        v.extend_from_slice(&self.0[end..]);
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "{l:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrapper_prefix_and_compose() {
        let tq = Wrapper::from_endos(&[Endo::T, Endo::Q]);
        assert_eq!(tq.endos(), vec![Endo::T, Endo::Q]);
        assert!(tq.has_prefix(Wrapper::single(Endo::T)));
        assert!(!tq.has_prefix(Wrapper::single(Endo::Q)));
        assert_eq!(
            tq.strip_prefix(Wrapper::single(Endo::T)),
            Some(Wrapper::single(Endo::Q))
        );
        let q = Wrapper::single(Endo::Q);
        assert_eq!(q.under(Wrapper::single(Endo::T)), tq);
        assert_eq!(tq.prefix(1), Wrapper::single(Endo::T));
    }

    #[test]
    fn apply_endo_examples() {
        let mu_eta = Word(vec![Letter::bare(Atom::Mu), Letter::bare(Atom::Eta)]);
        let t = mu_eta.apply_endo(Endo::T);
        assert_eq!(format!("{t:?}"), "[T]mu·[T]eta");
        assert_eq!(Word::unit().apply_endo(Endo::Q), Word::unit());
        let qe = Word::letter(Letter::bare(Atom::Eps).apply(Endo::Q));
        assert_eq!(format!("{:?}", qe.apply_endo(Endo::T)), "[TQ]eps");
    }

    #[test]
    fn concat_examples() {
        let mu = Word::atom(Atom::Mu);
        let eta = Word::atom(Atom::Eta);
        let eps = Word::atom(Atom::Eps);
        assert_eq!(Word::unit().concat(&mu), mu);
        assert_eq!(format!("{:?}", mu.concat(&eta)), "mu·eta");
        let e_eta = eps.concat(&eta);
        assert_eq!(e_eta.concat(&Word::unit()), e_eta);
    }

    #[test]
    fn interning_is_stable() {
        let a = Sym::new("alpha_test");
        let b = Sym::new("alpha_test");
        assert_eq!(a, b);
        assert_eq!(a.name(), "alpha_test");
    }
}
