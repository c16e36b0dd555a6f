use serde::Serialize;

use super::axioms::Violation;
use super::instance::{sorted, SmmInstance};
use crate::modcat::{are_isomorphic_objects, h_tensor_obj};

/// True iff `A` is commutative, `T = Q = id`, `ε` is invertible, `μ = ε`
/// and `δ = η = ε⁻¹`.
pub fn is_trivial(inst: &SmmInstance) -> bool {
    let m = &inst.monoid;
    m.is_commutative()
        && inst.t.is_identity()
        && inst.q.is_identity()
        && inst.mu == inst.eps
        && m.inverse(inst.eps)
            .is_some_and(|inv| inst.delta == inv && inst.eta == inv)
}

/// Flag names, in the order of [`MimosaReport::flags`].
pub const MIMOSA_FLAGS: [&str; 10] = [
    "finite",
    "cancellative",
    "commutative",
    "T-automorphism",
    "Q-automorphism",
    "eta-invertible",
    "mu-invertible",
    "delta-invertible",
    "eps-invertible",
    "mu-tensor-mu-iso-eps",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MimosaReport {
    pub flags: [bool; 10],
    pub trivial: bool,
    /// Names of flags that hold on a non-trivial instance. Each one would
    /// contradict the classification of trivial SMMs.
    pub findings: Vec<&'static str>,
}

impl MimosaReport {
    pub fn consistent(&self) -> bool {
        self.findings.is_empty()
    }
}

pub fn mimosa_report(inst: &SmmInstance) -> MimosaReport {
    let m = &inst.monoid;
    let invertible = |x: usize| m.inverse(x).is_some();
    let mm = h_tensor_obj(inst, inst.mu, inst.mu);
    let flags = [
        true,
        m.is_cancellative(),
        m.is_commutative(),
        inst.t.is_bijective(),
        inst.q.is_bijective(),
        invertible(inst.eta),
        invertible(inst.mu),
        invertible(inst.delta),
        invertible(inst.eps),
        are_isomorphic_objects(inst, mm, inst.eps),
    ];
    let trivial = is_trivial(inst);
    let findings = if trivial {
        vec![]
    } else {
        MIMOSA_FLAGS
            .iter()
            .zip(flags)
            .filter(|(_, f)| *f)
            .map(|(name, _)| *name)
            .collect()
    };
    MimosaReport {
        flags,
        trivial,
        findings,
    }
}

/// The structural properties of `T`, `Q`, `S`, `π`, `F` and `G`:
/// injectivity of `T`, `Q`, `S`; `π` a common left inverse; pairwise
/// commuting images; `S(A) = F ∩ G`.
pub fn structure_properties(inst: &SmmInstance) -> Vec<Violation> {
    let mut out = Vec::new();
    let s = inst.s_map();
    let maps = [("T", &inst.t), ("Q", &inst.q), ("S", &s)];
    for (name, f) in maps {
        if !f.is_injective() {
            out.push(Violation {
                axiom: match name {
                    "T" => "T-injective",
                    "Q" => "Q-injective",
                    _ => "S-injective",
                },
                witness: vec![],
            });
        }
        for a in inst.monoid.elements() {
            if inst.pi(f.apply(a)) != a {
                out.push(Violation {
                    axiom: match name {
                        "T" => "pi-T",
                        "Q" => "pi-Q",
                        _ => "pi-S",
                    },
                    witness: vec![("a", a)],
                });
            }
        }
    }
    for (i, (n1, f1)) in maps.iter().enumerate() {
        for (n2, f2) in &maps[i + 1..] {
            for a in inst.monoid.elements() {
                for b in inst.monoid.elements() {
                    let (x, y) = (f1.apply(a), f2.apply(b));
                    if inst.mul(x, y) != inst.mul(y, x) {
                        let axiom = match (*n1, *n2) {
                            ("T", "Q") => "TQ-commute",
                            ("T", "S") => "TS-commute",
                            _ => "QS-commute",
                        };
                        out.push(Violation {
                            axiom,
                            witness: vec![("a", a), ("b", b)],
                        });
                    }
                }
            }
        }
    }
    let f = inst.f_carrier();
    let g = inst.g_carrier();
    let meet: Vec<usize> = f.iter().copied().filter(|x| g.binary_search(x).is_ok()).collect();
    if sorted(inst.monoid.elements().map(|a| inst.s(a))) != meet {
        out.push(Violation {
            axiom: "S-image-is-F-meet-G",
            witness: vec![],
        });
    }
    out
}
