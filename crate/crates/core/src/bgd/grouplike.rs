use serde::Serialize;

use super::bialgebroid::{build_f, build_g};
use crate::error::SmmError;
use crate::finmon::{sorted, SmmInstance, Violation};
use crate::modcat::{enum_q_coalgebras, enum_t_algebras, h_tensor_obj, v_tensor_obj};

#[derive(Debug, Clone, Serialize)]
pub struct GrouplikeReport {
    pub comodule_objects: Vec<usize>,
    pub grouplikes_g: Vec<usize>,
    pub module_objects: Vec<usize>,
    pub grouplikes_f: Vec<usize>,
    pub violations: Vec<Violation>,
}

impl GrouplikeReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

fn v(axiom: &'static str, witness: &[(&'static str, usize)]) -> Violation {
    Violation {
        axiom,
        witness: witness.to_vec(),
    }
}

/// `u ↦ μT(u)` maps `A_Q` objects onto `Gr(G)` with `u ⊻ v ↦ K(v)K(u)`, and
/// `x ↦ Q(x)δ` maps `Aᵀ` objects onto `Gr(F)` with `x ⊛ y ↦ L(y)L(x)`.
pub fn grouplike_bijection_check(inst: &SmmInstance) -> Result<GrouplikeReport, SmmError> {
    let g = build_g(inst)?;
    let f = build_f(inst)?;
    let us = enum_q_coalgebras(inst);
    let xs = enum_t_algebras(inst);
    let gr_g = g.grouplikes();
    let gr_f = f.grouplikes();
    let k = |u: usize| inst.mul(inst.mu, inst.tt(u));
    let l = |x: usize| inst.mul(inst.qq(x), inst.delta);
    let mut out = Vec::new();
    let k_image = sorted(us.iter().map(|&u| k(u)));
    if k_image.len() != us.len() {
        out.push(v("K-injective", &[]));
    }
    if k_image != gr_g {
        out.push(v("K-onto-grouplikes", &[]));
    }
    let l_image = sorted(xs.iter().map(|&x| l(x)));
    if l_image.len() != xs.len() {
        out.push(v("L-injective", &[]));
    }
    if l_image != gr_f {
        out.push(v("L-onto-grouplikes", &[]));
    }
    if k(inst.eta) != inst.unit() {
        out.push(v("K-unit", &[]));
    }
    if l(inst.eps) != inst.unit() {
        out.push(v("L-unit", &[]));
    }
    for &u in &us {
        for &w in &us {
            if k(v_tensor_obj(inst, u, w)) != inst.mul(k(w), k(u)) {
                out.push(v("K-reverses-product", &[("u", u), ("v", w)]));
            }
        }
    }
    for &x in &xs {
        for &y in &xs {
            if l(h_tensor_obj(inst, x, y)) != inst.mul(l(y), l(x)) {
                out.push(v("L-reverses-product", &[("x", x), ("y", y)]));
            }
        }
    }
    Ok(GrouplikeReport {
        comodule_objects: us,
        grouplikes_g: gr_g,
        module_objects: xs,
        grouplikes_f: gr_f,
        violations: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmon::{enumerate_monoids, enumerate_smm, FiniteMonoid};

    #[test]
    fn z2_grouplikes() {
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        let r = grouplike_bijection_check(&z).unwrap();
        assert_eq!(r.comodule_objects, vec![1]);
        assert_eq!(r.grouplikes_g, vec![0]);
        assert_eq!(r.module_objects, vec![1]);
        assert_eq!(r.grouplikes_f, vec![0]);
        assert!(r.passes());
    }

    #[test]
    fn unit_is_grouplike_everywhere() {
        for n in 1..=3 {
            for m in enumerate_monoids(n, false).unwrap() {
                for inst in enumerate_smm(&m) {
                    let g = build_g(&inst).unwrap();
                    assert!(g.is_grouplike(inst.unit()));
                    assert!(grouplike_bijection_check(&inst).unwrap().passes());
                }
            }
        }
    }
}
