//! The simplicial object of the comonad `- ⊛ 1_μ` in `Aᵀ`.
//!
//! Degree `d` holds `μ^{⊛d}` (degree 0 is the unit `ε`). The faces out of
//! degree `d` are `Qⁱ(ε)` for `i < d`; the degeneracies out of degree
//! `d ≥ 1` are `Qʲ(δ)` for `j < d`. The element of a face or degeneracy does
//! not depend on the degree, only its domain and codomain do.

use serde::Serialize;

use super::{h_tensor_obj, is_t_arrow};
use crate::finmon::SmmInstance;
use crate::term::{prove_equal, Atom, Budget, Endo, ProofOutcome, RuleSet, Word};

/// The element-level operations the construction needs.
trait Carrier {
    type E: Clone + PartialEq;
    fn one(&self) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn q(&self, a: &Self::E) -> Self::E;
    fn mu(&self) -> Self::E;
    fn delta(&self) -> Self::E;
    fn eps(&self) -> Self::E;
    /// `x ⊛ y = yQ(x)δ`.
    fn h_tensor(&self, x: &Self::E, y: &Self::E) -> Self::E {
        self.mul(&self.mul(y, &self.q(x)), &self.delta())
    }
    fn q_pow(&self, k: usize, a: &Self::E) -> Self::E {
        (0..k).fold(a.clone(), |acc, _| self.q(&acc))
    }
}

impl Carrier for SmmInstance {
    type E = usize;
    fn one(&self) -> usize {
        self.unit()
    }
    fn mul(&self, a: &usize, b: &usize) -> usize {
        SmmInstance::mul(self, *a, *b)
    }
    fn q(&self, a: &usize) -> usize {
        self.qq(*a)
    }
    fn mu(&self) -> usize {
        self.mu
    }
    fn delta(&self) -> usize {
        self.delta
    }
    fn eps(&self) -> usize {
        self.eps
    }
    fn h_tensor(&self, x: &usize, y: &usize) -> usize {
        h_tensor_obj(self, *x, *y)
    }
}

struct Free;

impl Carrier for Free {
    type E = Word;
    fn one(&self) -> Word {
        Word::unit()
    }
    fn mul(&self, a: &Word, b: &Word) -> Word {
        a.concat(b)
    }
    fn q(&self, a: &Word) -> Word {
        a.apply_endo(Endo::Q)
    }
    fn mu(&self) -> Word {
        Word::atom(Atom::Mu)
    }
    fn delta(&self) -> Word {
        Word::atom(Atom::Delta)
    }
    fn eps(&self) -> Word {
        Word::atom(Atom::Eps)
    }
}

/// A simplicial identity instantiated at the degree of its domain.
#[derive(Debug, Clone, Serialize)]
pub struct SimplicialIdentity<E> {
    pub name: String,
    pub degree: usize,
    pub lhs: E,
    pub rhs: E,
}

struct Skeleton<E> {
    objects: Vec<E>,
    faces: Vec<E>,
    degeneracies: Vec<E>,
    identities: Vec<SimplicialIdentity<E>>,
}

fn build<C: Carrier>(c: &C, n: usize) -> Skeleton<C::E> {
    let mut objects = vec![c.eps()];
    if n >= 1 {
        objects.push(c.mu());
    }
    for d in 2..=n {
        let prev = objects[d - 1].clone();
        objects.push(c.h_tensor(&prev, &c.mu()));
    }
    let faces: Vec<C::E> = (0..n).map(|i| c.q_pow(i, &c.eps())).collect();
    let degeneracies: Vec<C::E> = (0..n.saturating_sub(1)).map(|j| c.q_pow(j, &c.delta())).collect();
    let d = |i: usize| &faces[i];
    let s = |j: usize| &degeneracies[j];
    let mut identities = Vec::new();
    let mut push = |name: String, degree: usize, lhs: C::E, rhs: C::E| {
        identities.push(SimplicialIdentity { name, degree, lhs, rhs })
    };
    for k in 2..=n {
        for j in 0..k {
            for i in 0..j {
                let name = format!("d{i}d{j}=d{}d{i}", j - 1);
                push(name, k, c.mul(d(i), d(j)), c.mul(d(j - 1), d(i)));
            }
        }
    }
    // s_j leaves degree k for degree k+1, whose faces are d_0..d_k
    for k in 1..n {
        for j in 0..k {
            for i in 0..=k {
                let lhs = c.mul(d(i), s(j));
                if i < j {
                    push(format!("d{i}s{j}=s{}d{i}", j - 1), k, lhs, c.mul(s(j - 1), d(i)));
                } else if i == j || i == j + 1 {
                    push(format!("d{i}s{j}=id"), k, lhs, c.one());
                } else {
                    push(format!("d{i}s{j}=s{j}d{}", i - 1), k, lhs, c.mul(s(j), d(i - 1)));
                }
            }
        }
    }
    for k in 1..n.saturating_sub(1) {
        for j in 0..k {
            for i in 0..=j {
                let name = format!("s{i}s{j}=s{}s{i}", j + 1);
                push(name, k, c.mul(s(i), s(j)), c.mul(s(j + 1), s(i)));
            }
        }
    }
    Skeleton {
        objects,
        faces,
        degeneracies,
        identities,
    }
}

/// Numeric simplicial data up to degree `n`, with every arrow and identity
/// checked.
#[derive(Debug, Clone, Serialize)]
pub struct SimplicialData {
    pub degree: usize,
    pub objects: Vec<usize>,
    /// `faces[i] = Qⁱ(ε)`.
    pub faces: Vec<usize>,
    /// `degeneracies[j] = Qʲ(δ)`.
    pub degeneracies: Vec<usize>,
    /// Arrows that are not `Aᵀ`-arrows between the stated objects, as
    /// `(name, domain degree)`.
    pub bad_arrows: Vec<(String, usize)>,
    /// Names and degrees of identities that fail.
    pub failed: Vec<(String, usize)>,
    pub checked: usize,
}

impl SimplicialData {
    pub fn passes(&self) -> bool {
        self.bad_arrows.is_empty() && self.failed.is_empty()
    }
}

pub fn simplicial_object(inst: &SmmInstance, n: usize) -> SimplicialData {
    let sk = build(inst, n);
    let mut bad_arrows = Vec::new();
    for k in 1..=n {
        for i in 0..k {
            if !is_t_arrow(inst, sk.faces[i], sk.objects[k], sk.objects[k - 1]) {
                bad_arrows.push((format!("d{i}"), k));
            }
        }
    }
    for k in 1..n {
        for j in 0..k {
            if !is_t_arrow(inst, sk.degeneracies[j], sk.objects[k], sk.objects[k + 1]) {
                bad_arrows.push((format!("s{j}"), k));
            }
        }
    }
    let failed = sk
        .identities
        .iter()
        .filter(|id| id.lhs != id.rhs)
        .map(|id| (id.name.clone(), id.degree))
        .collect();
    SimplicialData {
        degree: n,
        objects: sk.objects,
        faces: sk.faces,
        degeneracies: sk.degeneracies,
        bad_arrows,
        failed,
        checked: sk.identities.len(),
    }
}

/// Symbolic simplicial data over the free signature. Identities are
/// attempted with the proof engine; `proved[i]` records the outcome for
/// `identities[i]`.
#[derive(Debug, Clone)]
pub struct SymbolicSimplicial {
    pub objects: Vec<Word>,
    pub faces: Vec<Word>,
    pub degeneracies: Vec<Word>,
    pub identities: Vec<SimplicialIdentity<Word>>,
    pub proved: Vec<bool>,
}

pub fn simplicial_words(n: usize, budget: Option<Budget>) -> SymbolicSimplicial {
    let sk = build(&Free, n);
    let proved = match budget {
        Some(b) => {
            let rules = RuleSet::mu_delta();
            sk.identities
                .iter()
                .map(|id| matches!(prove_equal(&id.lhs, &id.rhs, &rules, b), ProofOutcome::Proved { .. }))
                .collect()
        }
        None => vec![false; sk.identities.len()],
    };
    SymbolicSimplicial {
        objects: sk.objects,
        faces: sk.faces,
        degeneracies: sk.degeneracies,
        identities: sk.identities,
        proved,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmon::{enumerate_monoids, enumerate_smm, eval_word, FiniteMonoid};
    use crate::term::parse_word;
    use std::collections::HashMap;

    #[test]
    fn symbolic_objects() {
        let s = simplicial_words(3, None);
        assert_eq!(s.objects[0], parse_word("eps").unwrap());
        assert_eq!(s.objects[2], parse_word("mu*Q(mu)*delta").unwrap());
        assert_eq!(s.objects[3], parse_word("mu*Q(mu*Q(mu)*delta)*delta").unwrap());
        assert_eq!(s.faces[2], parse_word("Q(Q(eps))").unwrap());
        assert_eq!(s.degeneracies[1], parse_word("Q(delta)").unwrap());
    }

    #[test]
    fn degree_one_maps() {
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        let d = simplicial_object(&z, 2);
        assert_eq!(d.objects, vec![1, 1, 1]);
        assert_eq!(d.faces, vec![1, 1]);
        assert_eq!(d.degeneracies, vec![1]);
        assert!(d.passes());
    }

    #[test]
    fn identities_hold_numerically() {
        for n in 1..=3 {
            for m in enumerate_monoids(n, true).unwrap() {
                for inst in enumerate_smm(&m) {
                    let d = simplicial_object(&inst, 4);
                    assert!(d.passes(), "{:?}", d);
                    assert!(d.checked > 0);
                }
            }
        }
    }

    #[test]
    fn symbolic_identities_prove_and_evaluate() {
        let s = simplicial_words(
            3,
            Some(Budget {
                max_depth: 8,
                max_states: 200_000,
                len_slack: 2,
            }),
        );
        assert!(s.proved.iter().all(|&p| p), "{:?}", s.proved);
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(3), 2).unwrap();
        let numeric = simplicial_object(&z, 3);
        for (w, &x) in s.objects.iter().zip(&numeric.objects) {
            assert_eq!(eval_word(w, &z, &HashMap::new()).unwrap(), x);
        }
    }
}
