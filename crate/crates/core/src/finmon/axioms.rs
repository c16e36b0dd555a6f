//! Pointwise checking of the axioms on finite data.

use serde::Serialize;

use super::instance::SmmInstance;
use super::monoid::{EndoMap, FiniteMonoid};
use crate::term::Presentation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: &'static str,
    /// The first failing assignment of the axiom's variables.
    pub witness: Vec<(&'static str, usize)>,
}

type Side<D> = fn(&D, &[usize]) -> usize;

struct Equation<D> {
    id: &'static str,
    vars: &'static [&'static str],
    lhs: Side<D>,
    rhs: Side<D>,
}

impl<D> Equation<D> {
    fn first_failure(&self, d: &D, n: usize) -> Option<Vec<usize>> {
        let k = self.vars.len();
        let mut xs = vec![0; k];
        loop {
            if (self.lhs)(d, &xs) != (self.rhs)(d, &xs) {
                return Some(xs);
            }
            let mut i = 0;
            loop {
                if i == k {
                    return None;
                }
                xs[i] += 1;
                if xs[i] < n {
                    break;
                }
                xs[i] = 0;
                i += 1;
            }
        }
    }
}

fn run<D>(eqs: &[Equation<D>], d: &D, n: usize, stop_early: bool) -> Vec<Violation> {
    let mut out = Vec::new();
    for eq in eqs {
        if let Some(xs) = eq.first_failure(d, n) {
            out.push(Violation {
                axiom: eq.id,
                witness: eq.vars.iter().copied().zip(xs).collect(),
            });
            if stop_early {
                break;
            }
        }
    }
    out
}

macro_rules! eqn {
    ($id:literal, [$($v:literal),*], |$d:ident, $x:ident| $l:expr, $r:expr) => {
        Equation {
            id: $id,
            vars: &[$($v),*],
            lhs: |$d, $x| { let _ = $x; $l },
            rhs: |$d, $x| { let _ = $x; $r },
        }
    };
}

/// SMM1–SMM18 in checking order: unit equations, then the other closed
/// equations, then the quantified families, with SMM15 last.
fn mu_delta_equations() -> Vec<Equation<SmmInstance>> {
    vec![
        eqn!("SMM18", [], |i, _x| i.mul(i.eps, i.eta), i.unit()),
        eqn!("SMM10", [], |i, _x| i.mul(i.mu, i.eta), i.unit()),
        eqn!("SMM11", [], |i, _x| i.mul(i.mu, i.tt(i.eta)), i.unit()),
        eqn!("SMM13", [], |i, _x| i.mul(i.eps, i.delta), i.unit()),
        eqn!("SMM14", [], |i, _x| i.mul(i.qq(i.eps), i.delta), i.unit()),
        eqn!("SMM9", [], |i, _x| i.mul(i.mu, i.tt(i.mu)), i.mul(i.mu, i.mu)),
        eqn!(
            "SMM12",
            [],
            |i, _x| i.mul(i.qq(i.delta), i.delta),
            i.mul(i.delta, i.delta)
        ),
        eqn!("SMM16", [], |i, _x| i.mul(i.eps, i.mu), i.mul(i.eps, i.tt(i.eps))),
        eqn!("SMM17", [], |i, _x| i.mul(i.delta, i.eta), i.mul(i.qq(i.eta), i.eta)),
        eqn!(
            "SMM1",
            ["a"],
            |i, x| i.mul(i.mu, i.tt(i.tt(x[0]))),
            i.mul(i.tt(x[0]), i.mu)
        ),
        eqn!("SMM2", ["a"], |i, x| i.mul(i.eta, x[0]), i.mul(i.tt(x[0]), i.eta)),
        eqn!(
            "SMM3",
            ["a"],
            |i, x| i.mul(i.delta, i.qq(x[0])),
            i.mul(i.qq(i.qq(x[0])), i.delta)
        ),
        eqn!("SMM4", ["a"], |i, x| i.mul(x[0], i.eps), i.mul(i.eps, i.qq(x[0]))),
        eqn!(
            "SMM5",
            ["a"],
            |i, x| i.prod(&[i.mu, i.delta, i.tt(i.qq(x[0]))]),
            i.prod(&[i.qq(i.tt(x[0])), i.mu, i.delta])
        ),
        eqn!(
            "SMM6",
            ["a", "b"],
            |i, x| i.mul(i.tt(x[0]), i.qq(x[1])),
            i.mul(i.qq(x[1]), i.tt(x[0]))
        ),
        eqn!("SMM7", ["a"], |i, x| i.mul(i.mu, i.qq(x[0])), i.mul(i.qq(x[0]), i.mu)),
        eqn!(
            "SMM8",
            ["a"],
            |i, x| i.mul(i.delta, i.tt(x[0])),
            i.mul(i.tt(x[0]), i.delta)
        ),
        eqn!(
            "SMM15",
            [],
            |i, _x| i.prod(&[i.qq(i.mu), i.mu, i.delta, i.tt(i.delta)]),
            i.mul(i.delta, i.mu)
        ),
    ]
}

/// Data of the gamma presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaData {
    pub monoid: FiniteMonoid,
    pub t: EndoMap,
    pub q: EndoMap,
    pub gamma: usize,
    pub eta: usize,
    pub eps: usize,
}

impl GammaData {
    pub fn from_instance(i: &SmmInstance) -> Self {
        GammaData {
            monoid: i.monoid.clone(),
            t: i.t.clone(),
            q: i.q.clone(),
            gamma: i.gamma(),
            eta: i.eta,
            eps: i.eps,
        }
    }

    /// `mu = Q(eps) gamma` and `delta = gamma T(eta)`.
    pub fn to_instance(&self) -> SmmInstance {
        let m = &self.monoid;
        SmmInstance {
            monoid: m.clone(),
            t: self.t.clone(),
            q: self.q.clone(),
            mu: m.mul(self.q.apply(self.eps), self.gamma),
            eta: self.eta,
            delta: m.mul(self.gamma, self.t.apply(self.eta)),
            eps: self.eps,
        }
    }

    fn m(&self, a: usize, b: usize) -> usize {
        self.monoid.mul(a, b)
    }
    fn tt(&self, a: usize) -> usize {
        self.t.apply(a)
    }
    fn qq(&self, a: usize) -> usize {
        self.q.apply(a)
    }
    fn unit(&self) -> usize {
        self.monoid.unit()
    }
}

fn gamma_equations() -> Vec<Equation<GammaData>> {
    vec![
        eqn!("SMMG11", [], |g, _x| g.m(g.eps, g.eta), g.unit()),
        eqn!(
            "SMMG10",
            [],
            |g, _x| g.monoid.prod(&[g.qq(g.eps), g.gamma, g.tt(g.eta)]),
            g.unit()
        ),
        eqn!("SMMG8", [], |g, _x| g.m(g.gamma, g.eta), g.qq(g.eta)),
        eqn!("SMMG9", [], |g, _x| g.m(g.eps, g.gamma), g.tt(g.eps)),
        eqn!(
            "SMMG7",
            [],
            |g, _x| g.monoid.prod(&[g.qq(g.gamma), g.gamma, g.tt(g.gamma)]),
            g.m(g.gamma, g.gamma)
        ),
        eqn!(
            "SMMG1",
            ["a", "b"],
            |g, x| g.m(g.tt(x[0]), g.qq(x[1])),
            g.m(g.qq(x[1]), g.tt(x[0]))
        ),
        eqn!(
            "SMMG2",
            ["a"],
            |g, x| g.m(g.gamma, g.tt(g.tt(x[0]))),
            g.m(g.tt(x[0]), g.gamma)
        ),
        eqn!(
            "SMMG3",
            ["a"],
            |g, x| g.m(g.gamma, g.tt(g.qq(x[0]))),
            g.m(g.qq(g.tt(x[0])), g.gamma)
        ),
        eqn!(
            "SMMG4",
            ["a"],
            |g, x| g.m(g.gamma, g.qq(x[0])),
            g.m(g.qq(g.qq(x[0])), g.gamma)
        ),
        eqn!("SMMG5", ["a"], |g, x| g.m(g.eta, x[0]), g.m(g.tt(x[0]), g.eta)),
        eqn!("SMMG6", ["a"], |g, x| g.m(x[0], g.eps), g.m(g.eps, g.qq(x[0]))),
    ]
}

/// Every violated axiom of the chosen presentation with its first witness.
/// Under `Gamma` the instance is converted with `gamma = mu delta`.
pub fn check_axioms(inst: &SmmInstance, presentation: Presentation) -> Vec<Violation> {
    match presentation {
        Presentation::MuDelta => run(&mu_delta_equations(), inst, inst.size(), false),
        Presentation::Gamma | Presentation::Product => check_gamma(&GammaData::from_instance(inst)),
    }
}

pub fn check_gamma(data: &GammaData) -> Vec<Violation> {
    run(&gamma_equations(), data, data.monoid.size(), false)
}

/// Whether every mu-delta axiom holds; stops at the first failure.
pub fn is_smm(inst: &SmmInstance) -> bool {
    run(&mu_delta_equations(), inst, inst.size(), true).is_empty()
}

pub fn axiom_ids(presentation: Presentation) -> Vec<&'static str> {
    match presentation {
        Presentation::MuDelta => mu_delta_equations().iter().map(|e| e.id).collect(),
        _ => gamma_equations().iter().map(|e| e.id).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmon::eval::eval_word;
    use crate::term::RuleSet;
    use std::collections::HashMap;

    fn z2(t: EndoMap, q: EndoMap, mu: usize, eta: usize, delta: usize, eps: usize) -> SmmInstance {
        SmmInstance::new(FiniteMonoid::cyclic(2), t, q, mu, eta, delta, eps).unwrap()
    }

    #[test]
    fn documented_examples() {
        assert!(check_axioms(&SmmInstance::trivial_one(), Presentation::MuDelta).is_empty());
        let id = EndoMap::identity(2);
        let g = z2(id.clone(), id.clone(), 1, 1, 1, 1);
        assert!(check_axioms(&g, Presentation::MuDelta).is_empty());
        assert!(check_axioms(&g, Presentation::Gamma).is_empty());
        let bad = z2(EndoMap::constant(2, 0), id, 0, 0, 0, 0);
        assert_eq!(
            check_axioms(&bad, Presentation::MuDelta),
            vec![Violation {
                axiom: "SMM2",
                witness: vec![("a", 1)]
            }]
        );
    }

    /// Independent transcription: evaluate the symbolic rule schemas.
    fn schema_violations(inst: &SmmInstance, rules: &RuleSet) -> Vec<String> {
        let n = inst.size();
        let mut out = Vec::new();
        for r in &rules.rules {
            let vars = r.vars();
            let mut ok = true;
            let total = n.pow(vars.len() as u32);
            for code in 0..total {
                let mut env = HashMap::new();
                let mut c = code;
                for v in &vars {
                    env.insert(*v, c % n);
                    c /= n;
                }
                let l = eval_word(&r.lhs, inst, &env).unwrap();
                let rr = eval_word(&r.rhs, inst, &env).unwrap();
                if l != rr {
                    ok = false;
                    break;
                }
            }
            if !ok {
                out.push(r.id.clone());
            }
        }
        out.sort();
        out
    }

    #[test]
    fn hand_transcription_agrees_with_schemas() {
        // all candidate tuples on Z/2 and {1,e}, with T, Q endomorphisms
        let rules = RuleSet::mu_delta();
        let grules = RuleSet::gamma();
        for m in [
            FiniteMonoid::cyclic(2),
            FiniteMonoid::idempotent(),
            FiniteMonoid::cyclic(3),
        ] {
            let endos = m.endomorphisms();
            let n = m.size();
            for t in &endos {
                for q in &endos {
                    for code in 0..n.pow(4) {
                        let e = [code % n, code / n % n, code / n / n % n, code / n / n / n];
                        let inst = SmmInstance::new(m.clone(), t.clone(), q.clone(), e[0], e[1], e[2], e[3]).unwrap();
                        let mut hand: Vec<_> = check_axioms(&inst, Presentation::MuDelta)
                            .into_iter()
                            .map(|v| v.axiom.to_string())
                            .collect();
                        hand.sort();
                        assert_eq!(hand, schema_violations(&inst, &rules));
                        let mut hand_g: Vec<_> = check_axioms(&inst, Presentation::Gamma)
                            .into_iter()
                            .map(|v| v.axiom.to_string())
                            .collect();
                        hand_g.sort();
                        assert_eq!(hand_g, schema_violations(&inst, &grules));
                    }
                }
            }
        }
    }
}
