use std::collections::HashMap;

use super::instance::SmmInstance;
use crate::error::SmmError;
use crate::term::{Atom, Endo, Letter, Sym, Word};

/// Interprets a word in a finite instance. Generators and pattern
/// variables are both looked up in `env`; `gamma` denotes `mu delta`.
pub fn eval_word(w: &Word, inst: &SmmInstance, env: &HashMap<Sym, usize>) -> Result<usize, SmmError> {
    w.letters()
        .iter()
        .try_fold(inst.unit(), |acc, l| Ok(inst.mul(acc, eval_letter(l, inst, env)?)))
}

fn eval_letter(l: &Letter, inst: &SmmInstance, env: &HashMap<Sym, usize>) -> Result<usize, SmmError> {
    let base = match l.atom {
        Atom::Mu => inst.mu,
        Atom::Eta => inst.eta,
        Atom::Delta => inst.delta,
        Atom::Eps => inst.eps,
        Atom::Gamma => inst.gamma(),
        Atom::Gen(s) | Atom::Var(s) => *env.get(&s).ok_or_else(|| SmmError::UnassignedGenerator(s.name()))?,
    };
    // endos are listed outermost first
    Ok(l.wrapper.endos().iter().rev().fold(base, |x, e| match e {
        Endo::T => inst.tt(x),
        Endo::Q => inst.qq(x),
    }))
}

/// Calls `f` with every assignment of elements to `gens`.
pub fn for_each_assignment(gens: &[Sym], n: usize, mut f: impl FnMut(&HashMap<Sym, usize>) -> bool) -> bool {
    let total = n
        .checked_pow(gens.len() as u32)
        .expect("assignment space fits in usize");
    let mut env = HashMap::new();
    for code in 0..total {
        let mut c = code;
        for g in gens {
            env.insert(*g, c % n);
            c /= n;
        }
        if !f(&env) {
            return false;
        }
    }
    true
}

/// An instance and assignment separating two words.
#[derive(Debug, Clone)]
pub struct Countermodel {
    pub instance: SmmInstance,
    pub assignment: Vec<(String, usize)>,
    pub lhs: usize,
    pub rhs: usize,
}

/// The first instance of `universe` and assignment of the generators and
/// variables of both words under which they evaluate differently.
pub fn find_countermodel(lhs: &Word, rhs: &Word, universe: &[SmmInstance]) -> Result<Option<Countermodel>, SmmError> {
    let mut syms: Vec<Sym> = lhs
        .generators()
        .into_iter()
        .chain(lhs.vars())
        .chain(rhs.generators())
        .chain(rhs.vars())
        .collect();
    syms.sort_by_key(|s| s.name());
    syms.dedup();
    for inst in universe {
        let mut found = None;
        let mut err = None;
        for_each_assignment(&syms, inst.size(), |env| {
            match (eval_word(lhs, inst, env), eval_word(rhs, inst, env)) {
                (Ok(l), Ok(r)) if l != r => {
                    let mut assignment: Vec<(String, usize)> = env.iter().map(|(s, &v)| (s.name(), v)).collect();
                    assignment.sort();
                    found = Some((assignment, l, r));
                    false
                }
                (Ok(_), Ok(_)) => true,
                (Err(e), _) | (_, Err(e)) => {
                    err = Some(e);
                    false
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        if let Some((assignment, l, r)) = found {
            return Ok(Some(Countermodel {
                instance: inst.clone(),
                assignment,
                lhs: l,
                rhs: r,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmon::FiniteMonoid;
    use crate::term::parse_word;

    #[test]
    fn documented_examples() {
        let one = SmmInstance::trivial_one();
        assert_eq!(eval_word(&Word::unit(), &one, &HashMap::new()).unwrap(), 0);
        let z2 = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        assert_eq!(
            eval_word(&parse_word("eps*eta").unwrap(), &z2, &HashMap::new()).unwrap(),
            0
        );
        assert_eq!(
            eval_word(&parse_word("mu*delta").unwrap(), &z2, &HashMap::new()).unwrap(),
            0
        );
        assert!(matches!(
            eval_word(&parse_word("g").unwrap(), &z2, &HashMap::new()),
            Err(SmmError::UnassignedGenerator(g)) if g == "g"
        ));
    }

    #[test]
    fn wrappers_apply_innermost_first() {
        use crate::finmon::EndoMap;
        // Z/3 with T = doubling, Q = trivial map: T(Q(g)) = 0, Q(T(g)) = 0, T(T(g)) = 4g = g
        let m = FiniteMonoid::cyclic(3);
        let inst = SmmInstance::new(
            m,
            EndoMap { images: vec![0, 2, 1] },
            EndoMap::constant(3, 0),
            0,
            0,
            0,
            0,
        )
        .unwrap();
        let g = Sym::new("g");
        let env = HashMap::from([(g, 1)]);
        assert_eq!(eval_word(&parse_word("T(T(g))").unwrap(), &inst, &env).unwrap(), 1);
        assert_eq!(eval_word(&parse_word("T(g)*T(g)").unwrap(), &inst, &env).unwrap(), 1);
        assert_eq!(eval_word(&parse_word("T(Q(g))*g").unwrap(), &inst, &env).unwrap(), 1);
    }
}
