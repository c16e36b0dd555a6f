use serde::Serialize;

use super::{h_tensor_obj, is_t_algebra, t_hom_set, violation};
use crate::bgd::QuotientTensor;
use crate::error::SmmError;
use crate::finmon::{SmmInstance, Violation};

/// `Aᵀ(μ, x) = xT(A)` as an `A`-biset, `a₁·t·a₂ = tS(a₁)T(a₂)`.
#[derive(Debug, Clone, Serialize)]
pub struct ForgetfulBimodule {
    pub object: usize,
    pub carrier: Vec<usize>,
    /// Bimodule law failures; empty on a valid instance.
    pub violations: Vec<Violation>,
}

pub fn forgetful_bimodule(inst: &SmmInstance, x: usize) -> Result<ForgetfulBimodule, SmmError> {
    if !is_t_algebra(inst, x) {
        return Err(SmmError::ElementNotInCarrier(x));
    }
    let carrier = t_hom_set(inst, inst.mu, x);
    let mut violations = Vec::new();
    let act = |a1: usize, t: usize, a2: usize| inst.prod(&[t, inst.s(a1), inst.tt(a2)]);
    let one = inst.unit();
    for &t in &carrier {
        if act(one, t, one) != t {
            violations.push(violation("bimodule-unit", &[("t", t)]));
        }
        for a in inst.monoid.elements() {
            for b in inst.monoid.elements() {
                if carrier.binary_search(&act(a, t, b)).is_err() {
                    violations.push(violation("bimodule-closure", &[("a", a), ("t", t), ("b", b)]));
                }
                let ab = inst.mul(a, b);
                if act(ab, t, one) != act(a, act(b, t, one), one) {
                    violations.push(violation("left-action", &[("a", a), ("b", b), ("t", t)]));
                }
                if act(one, t, ab) != act(one, act(one, t, a), b) {
                    violations.push(violation("right-action", &[("a", a), ("b", b), ("t", t)]));
                }
                if act(a, act(one, t, b), one) != act(one, act(a, t, one), b) {
                    violations.push(violation("bimodule-compatible", &[("a", a), ("b", b), ("t", t)]));
                }
            }
        }
    }
    Ok(ForgetfulBimodule {
        object: x,
        carrier,
        violations,
    })
}

/// `Aᵀ(μ,x) ⊗_A Aᵀ(μ,y)`, identifying `(sT(a), t)` with `(s, tS(a))`.
pub fn hom_tensor(inst: &SmmInstance, x: usize, y: usize) -> Result<QuotientTensor, SmmError> {
    let els: Vec<usize> = inst.monoid.elements().collect();
    QuotientTensor::binary(
        t_hom_set(inst, inst.mu, x),
        t_hom_set(inst, inst.mu, y),
        &els,
        &|s, a| inst.mul(s, inst.tt(a)),
        &|a, t| inst.mul(t, inst.s(a)),
    )
}

/// The strong monoidal constraints of `Aᵀ(μ, -)`: `s ⊗ t ↦ tQ(s)δ` with
/// inverse `r ↦ x ⊗ yT(rη)` for every pair of objects, and `a ↦ εT(a)` with
/// inverse `r ↦ rη` on `Aᵀ(μ, ε)`.
pub fn monoidal_constraint_check(inst: &SmmInstance) -> Result<Vec<Violation>, SmmError> {
    let mut out = Vec::new();
    let obs = super::enum_t_algebras(inst);
    for &x in &obs {
        for &y in &obs {
            let tensor = hom_tensor(inst, x, y)?;
            let target = t_hom_set(inst, inst.mu, h_tensor_obj(inst, x, y));
            let phi = |p: &[usize]| inst.prod(&[p[1], inst.qq(p[0]), inst.delta]);
            let mut images = Vec::new();
            for c in 0..tensor.num_classes() {
                match tensor.lift(c, phi) {
                    Ok(r) => {
                        if target.binary_search(&r).is_err() {
                            out.push(violation("phi2-codomain", &[("x", x), ("y", y), ("r", r)]));
                        }
                        images.push(r);
                    }
                    Err((p, _)) => {
                        out.push(violation("phi2-well-defined", &[("s", p[0]), ("t", p[1])]));
                    }
                }
            }
            for c in 0..tensor.num_classes() {
                for a in inst.monoid.elements() {
                    for b in inst.monoid.elements() {
                        let p = tensor.rep(c);
                        let moved = [inst.mul(p[0], inst.s(a)), inst.mul(p[1], inst.tt(b))];
                        let lhs = phi(&moved);
                        let rhs = inst.prod(&[phi(&p), inst.s(a), inst.tt(b)]);
                        if lhs != rhs {
                            out.push(violation("phi2-bimodule", &[("class", c), ("a", a), ("b", b)]));
                        }
                    }
                }
            }
            for &r in &target {
                let back = [x, inst.mul(y, inst.tt(inst.mul(r, inst.eta)))];
                match tensor.class(&back) {
                    Ok(c) => {
                        if images.get(c) != Some(&r) {
                            out.push(violation("phi2-inverse-right", &[("x", x), ("y", y), ("r", r)]));
                        }
                    }
                    Err(_) => out.push(violation("phi2-inverse-domain", &[("r", r)])),
                }
            }
            for (c, &r) in images.iter().enumerate() {
                let back = [x, inst.mul(y, inst.tt(inst.mul(r, inst.eta)))];
                if tensor.class(&back).ok() != Some(c) {
                    out.push(violation("phi2-inverse-left", &[("x", x), ("y", y), ("class", c)]));
                }
            }
        }
    }
    let eps_hom = t_hom_set(inst, inst.mu, inst.eps);
    for a in inst.monoid.elements() {
        let r = inst.mul(inst.eps, inst.s(a));
        if r != inst.mul(inst.eps, inst.tt(a)) || eps_hom.binary_search(&r).is_err() {
            out.push(violation("unit-constraint", &[("a", a)]));
        }
        if inst.mul(r, inst.eta) != a {
            out.push(violation("unit-constraint-inverse", &[("a", a)]));
        }
    }
    for &r in &eps_hom {
        let a = inst.mul(r, inst.eta);
        if inst.mul(inst.eps, inst.tt(a)) != r {
            out.push(violation("unit-constraint-inverse", &[("r", r)]));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmon::{enumerate_monoids, enumerate_smm, FiniteMonoid};

    #[test]
    fn carrier_of_mu_is_g() {
        for m in enumerate_monoids(3, true).unwrap() {
            for inst in enumerate_smm(&m) {
                let b = forgetful_bimodule(&inst, inst.mu).unwrap();
                assert_eq!(b.carrier, inst.g_carrier());
                assert!(b.violations.is_empty());
                assert!(monoidal_constraint_check(&inst).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn z2_constraints_are_bijections_of_two_element_sets() {
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        let t = hom_tensor(&z, 1, 1).unwrap();
        assert_eq!(t.num_classes(), 2);
        assert_eq!(t_hom_set(&z, z.mu, h_tensor_obj(&z, 1, 1)).len(), 2);
        assert!(monoidal_constraint_check(&z).unwrap().is_empty());
    }

    #[test]
    fn non_object_is_rejected() {
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        assert!(forgetful_bimodule(&z, 0).is_err());
    }
}
