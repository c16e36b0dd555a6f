use serde::Serialize;

use super::bialgebroid::{build_g, BialgebroidData};
use crate::error::SmmError;
use crate::finmon::{isomorphisms, SmmInstance, Violation};

/// A skew monoidal isomorphism `⟨φ, φ₂, φ₀⟩` from one instance to another;
/// `phi[a]` is `φ(a)` and `phi2`, `phi0` live in the codomain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmmIso {
    pub phi: Vec<usize>,
    pub phi2: usize,
    pub phi0: usize,
}

impl SmmIso {
    pub fn identity(inst: &SmmInstance) -> Self {
        SmmIso {
            phi: inst.monoid.elements().collect(),
            phi2: inst.unit(),
            phi0: inst.unit(),
        }
    }
}

fn v(axiom: &'static str, witness: &[(&'static str, usize)]) -> Violation {
    Violation {
        axiom,
        witness: witness.to_vec(),
    }
}

/// Checks that `φ` is a monoid isomorphism, `φ₂` and `φ₀` are invertible, and
/// the intertwiner and skew monoidal functor identities hold.
pub fn check_smm_iso(iso: &SmmIso, a: &SmmInstance, b: &SmmInstance) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = a.size();
    if iso.phi.len() != n || iso.phi.iter().any(|&x| x >= b.size()) || iso.phi2 >= b.size() || iso.phi0 >= b.size() {
        out.push(v("iso-shape", &[]));
        return out;
    }
    let phi = |x: usize| iso.phi[x];
    let mut seen = vec![false; b.size()];
    if b.size() != n || !iso.phi.iter().all(|&x| !std::mem::replace(&mut seen[x], true)) {
        out.push(v("phi-bijective", &[]));
    }
    if phi(a.unit()) != b.unit() {
        out.push(v("phi-hom", &[]));
    }
    for x in a.monoid.elements() {
        for y in a.monoid.elements() {
            if phi(a.mul(x, y)) != b.mul(phi(x), phi(y)) {
                out.push(v("phi-hom", &[("a", x), ("b", y)]));
            }
        }
    }
    if b.monoid.inverse(iso.phi2).is_none() {
        out.push(v("phi2-invertible", &[]));
    }
    if b.monoid.inverse(iso.phi0).is_none() {
        out.push(v("phi0-invertible", &[]));
    }
    if !out.is_empty() {
        return out;
    }
    let (p2, p0) = (iso.phi2, iso.phi0);
    for x in a.monoid.elements() {
        if b.mul(p2, b.qq(phi(x))) != b.mul(phi(a.qq(x)), p2) {
            out.push(v("iso1-Q", &[("a", x)]));
        }
        if b.mul(p2, b.tt(phi(x))) != b.mul(phi(a.tt(x)), p2) {
            out.push(v("iso1-T", &[("a", x)]));
        }
    }
    if b.prod(&[phi(a.gamma()), p2, b.tt(p2)]) != b.prod(&[p2, b.qq(p2), b.gamma()]) {
        out.push(v("iso2", &[]));
    }
    if b.prod(&[p2, b.qq(p0), b.eta]) != phi(a.eta) {
        out.push(v("iso3", &[]));
    }
    if b.prod(&[phi(a.eps), p2, b.tt(p0)]) != b.eps {
        out.push(v("iso4", &[]));
    }
    out
}

/// Every SMM isomorphism between two instances.
pub fn find_smm_isos(a: &SmmInstance, b: &SmmInstance) -> Vec<SmmIso> {
    let units: Vec<usize> = b.monoid.elements().filter(|&x| b.monoid.inverse(x).is_some()).collect();
    let mut out = Vec::new();
    for phi in isomorphisms(&a.monoid, &b.monoid) {
        for &phi2 in &units {
            for &phi0 in &units {
                let iso = SmmIso {
                    phi: phi.clone(),
                    phi2,
                    phi0,
                };
                if check_smm_iso(&iso, a, b).is_empty() {
                    out.push(iso);
                }
            }
        }
    }
    out
}

/// Checks that `map` (on carriers) with `base` (on base monoids) is a
/// bijective bialgebroid morphism `src → dst`.
pub fn check_bialgebroid_morphism(
    src: &BialgebroidData,
    dst: &BialgebroidData,
    map: &dyn Fn(usize) -> usize,
    base: &dyn Fn(usize) -> usize,
) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut images: Vec<usize> = src.carrier.iter().map(|&g| map(g)).collect();
    if images.iter().any(|&x| !dst.contains(x)) {
        out.push(v("morphism-carrier", &[]));
        return out;
    }
    images.sort_unstable();
    images.dedup();
    if images != dst.carrier {
        out.push(v("morphism-bijective", &[]));
    }
    if map(src.base.unit()) != dst.base.unit() {
        out.push(v("morphism-unit", &[]));
    }
    for &g in &src.carrier {
        for &h in &src.carrier {
            if map(src.base.mul(g, h)) != dst.base.mul(map(g), map(h)) {
                out.push(v("morphism-multiplicative", &[("g", g), ("h", h)]));
            }
        }
    }
    for a in src.base.elements() {
        if map(src.source[a]) != dst.source[base(a)] {
            out.push(v("morphism-source", &[("a", a)]));
        }
        if map(src.target[a]) != dst.target[base(a)] {
            out.push(v("morphism-target", &[("a", a)]));
        }
    }
    for &g in &src.carrier {
        if dst.counit_of(map(g)).ok() != src.counit_of(g).ok().map(base) {
            out.push(v("morphism-counit", &[("g", g)]));
        }
        let target = dst.coproduct_class(map(g)).ok();
        for (g1, g2) in src.legs(g).unwrap_or_default() {
            if dst.tensor.class(&[map(g1), map(g2)]).ok() != target {
                out.push(v("morphism-coproduct", &[("g", g), ("g1", g1), ("g2", g2)]));
                break;
            }
        }
    }
    out
}

/// The bialgebroid isomorphism induced by an SMM isomorphism.
#[derive(Debug, Clone, Serialize)]
pub struct InducedMorphism {
    pub sigma: usize,
    pub tau: usize,
    /// `(g, φ̃(g))` over the carrier of `G`.
    pub map: Vec<(usize, usize)>,
    /// `φ̃₀(a)` per base element.
    pub base: Vec<usize>,
    pub violations: Vec<Violation>,
}

impl InducedMorphism {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `φ̃(g) = τφ(g)τ⁻¹`, `φ̃₀(a) = φ₀⁻¹φ(a)φ₀`, with `σ = φ₂Q′(φ₀)` and
/// `τ = T′(φ₀⁻¹)φ₂⁻¹`. Also checks the monad morphism laws for `σ` and the
/// comonad morphism laws for `τ`.
pub fn apply_smm_iso(iso: &SmmIso, a: &SmmInstance, b: &SmmInstance) -> Result<InducedMorphism, SmmError> {
    let bad = check_smm_iso(iso, a, b);
    if let Some(first) = bad.first() {
        return Err(SmmError::InvalidIso(first.axiom.to_string()));
    }
    let inv = |x: usize| b.monoid.inverse(x).expect("checked invertible");
    let phi = |x: usize| iso.phi[x];
    let sigma = b.mul(iso.phi2, b.qq(iso.phi0));
    let tau = b.mul(b.tt(inv(iso.phi0)), inv(iso.phi2));
    let tau_inv = inv(tau);
    let mut out = Vec::new();
    if b.mul(sigma, b.mu) != b.prod(&[phi(a.mu), sigma, b.tt(sigma)]) {
        out.push(v("sigma-mu", &[]));
    }
    if b.mul(sigma, b.eta) != phi(a.eta) {
        out.push(v("sigma-eta", &[]));
    }
    if b.mul(b.delta, tau) != b.prod(&[b.qq(tau), tau, phi(a.delta)]) {
        out.push(v("tau-delta", &[]));
    }
    if b.mul(b.eps, tau) != phi(a.eps) {
        out.push(v("tau-eps", &[]));
    }
    for x in a.monoid.elements() {
        if b.mul(sigma, b.tt(phi(x))) != b.mul(phi(a.tt(x)), sigma) {
            out.push(v("sigma-natural", &[("a", x)]));
        }
        if b.mul(tau, phi(a.qq(x))) != b.mul(b.qq(phi(x)), tau) {
            out.push(v("tau-natural", &[("a", x)]));
        }
    }
    let g = build_g(a)?;
    let g2 = build_g(b)?;
    let map = |x: usize| b.prod(&[tau, phi(x), tau_inv]);
    let base = |x: usize| b.prod(&[inv(iso.phi0), phi(x), iso.phi0]);
    out.extend(check_bialgebroid_morphism(&g, &g2, &map, &base));
    Ok(InducedMorphism {
        sigma,
        tau,
        map: g.carrier.iter().map(|&x| (x, map(x))).collect(),
        base: a.monoid.elements().map(base).collect(),
        violations: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmon::{enumerate_monoids, enumerate_smm, FiniteMonoid};

    #[test]
    fn identity_iso() {
        for n in 1..=3 {
            for m in enumerate_monoids(n, true).unwrap() {
                for inst in enumerate_smm(&m) {
                    let id = SmmIso::identity(&inst);
                    let r = apply_smm_iso(&id, &inst, &inst).unwrap();
                    assert!(r.passes(), "{:?}", r.violations);
                    assert!(r.map.iter().all(|&(g, h)| g == h));
                }
            }
        }
    }

    #[test]
    fn z2_self_isos() {
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        let isos = find_smm_isos(&z, &z);
        // φ = id; iso3 forces φ₂φ₀ = 1, so φ₂ = φ₀
        assert_eq!(
            isos,
            vec![
                SmmIso {
                    phi: vec![0, 1],
                    phi2: 0,
                    phi0: 0
                },
                SmmIso {
                    phi: vec![0, 1],
                    phi2: 1,
                    phi0: 1
                },
            ]
        );
        for iso in &isos {
            assert!(apply_smm_iso(iso, &z, &z).unwrap().passes());
        }
    }

    #[test]
    fn corrupted_phi2_is_rejected() {
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        let iso = SmmIso {
            phi: vec![0, 1],
            phi2: 1,
            phi0: 0,
        };
        assert!(matches!(apply_smm_iso(&iso, &z, &z), Err(SmmError::InvalidIso(_))));
    }

    #[test]
    fn isos_between_the_two_z2_structures() {
        let a = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 0).unwrap();
        let b = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        let isos = find_smm_isos(&a, &b);
        assert!(!isos.is_empty());
        for iso in &isos {
            assert!(apply_smm_iso(iso, &a, &b).unwrap().passes());
        }
    }
}
