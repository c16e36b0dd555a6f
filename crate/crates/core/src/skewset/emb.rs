use serde::Serialize;

use super::aset::FiniteASet;
use super::coherence::SkewSetCategory;
use super::product::compose;
use crate::bgd::{find_smm_isos, SmmIso};
use crate::error::SmmError;
use crate::finmon::{check_axioms, EndoMap, SmmInstance};
use crate::term::Presentation;

/// The SMM on `End(R) ≅ A` (identified by `f ↦ f(1)`) built from an
/// isomorphism `κ: R⊛R → R`.
#[derive(Debug, Clone, Serialize)]
pub struct Embedded {
    pub instance: SmmInstance,
    pub kappa: Vec<usize>,
    /// Isomorphisms from the result to the input instance.
    pub isos: Vec<SmmIso>,
}

/// `κ[m, n, g] = T(n) g S(m) η`: the isomorphism `ν_{R,R}` followed by
/// `G → R`, `g ↦ gη`.
pub fn default_kappa(inst: &SmmInstance) -> Result<Vec<usize>, SmmError> {
    let mut cat = SkewSetCategory::new(inst)?;
    let r = cat.unit();
    let p = cat.product_table(r, r)?;
    (0..p.size())
        .map(|c| {
            p.classes
                .lift(c, |t| inst.prod(&[inst.tt(t[1]), t[2], inst.s(t[0]), inst.eta]))
                .map_err(|(x, y)| SmmError::IllDefined(format!("κ on {x:?} and {y:?}")))
        })
        .collect()
}

pub fn smm_from_unit_iso(kappa: &[usize], inst: &SmmInstance) -> Result<Embedded, SmmError> {
    let a = &inst.monoid;
    let mut cat = SkewSetCategory::new(inst)?;
    let r = cat.unit();
    let rr = cat.tensor(r, r)?;
    let regular: FiniteASet = cat.object(r).clone();
    if !cat.object(rr).is_iso(&regular, kappa) {
        return Err(SmmError::NotIso("κ is not an equivariant bijection R⊛R → R".into()));
    }
    let mut kappa_inv = vec![0; kappa.len()];
    for (c, &x) in kappa.iter().enumerate() {
        kappa_inv[x] = c;
    }
    let one = a.unit();
    // the endomorphism of R corresponding to a
    let left_mul = |x: usize| -> Vec<usize> { a.elements().map(|y| a.mul(x, y)).collect() };
    let skew = |x: usize, y: usize, cat: &mut SkewSetCategory<'_>| -> Result<usize, SmmError> {
        let xy = cat.tensor_arrows((r, r, &left_mul(x)), (r, r, &left_mul(y)))?;
        Ok(kappa[xy[kappa_inv[one]]])
    };
    let t: Vec<usize> = a.elements().map(|y| skew(one, y, &mut cat)).collect::<Result<_, _>>()?;
    let q: Vec<usize> = a.elements().map(|x| skew(x, one, &mut cat)).collect::<Result<_, _>>()?;
    let id_r: Vec<usize> = a.elements().collect();
    let r_kinv = cat.tensor_arrows((r, r, &id_r), (r, rr, &kappa_inv))?;
    let k_r = cat.tensor_arrows((rr, r, kappa), (r, r, &id_r))?;
    let gamma_rrr = cat.gamma(r, r, r)?;
    let gamma_map = compose(
        kappa,
        &compose(&k_r, &compose(&gamma_rrr, &compose(&r_kinv, &kappa_inv))),
    );
    let gamma = gamma_map[one];
    let eta = kappa[cat.eta(r)?[one]];
    let eps = cat.eps(r)?[kappa_inv[one]];
    let (t, q) = (EndoMap { images: t }, EndoMap { images: q });
    let mu = a.mul(q.apply(eps), gamma);
    let delta = a.mul(gamma, t.apply(eta));
    let instance = SmmInstance::new(a.clone(), t, q, mu, eta, delta, eps)?;
    if let Some(bad) = check_axioms(&instance, Presentation::MuDelta).first() {
        return Err(SmmError::InvalidInstance(format!(
            "constructed tuple fails {}",
            bad.axiom
        )));
    }
    let isos = find_smm_isos(&instance, inst);
    Ok(Embedded {
        instance,
        kappa: kappa.to_vec(),
        isos,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmon::FiniteMonoid;

    #[test]
    fn one_element() {
        let one = SmmInstance::trivial_one();
        let e = smm_from_unit_iso(&default_kappa(&one).unwrap(), &one).unwrap();
        assert_eq!(e.instance, one);
    }

    #[test]
    fn z2_round_trip() {
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        let e = smm_from_unit_iso(&default_kappa(&z).unwrap(), &z).unwrap();
        assert!(!e.isos.is_empty());
    }

    #[test]
    fn non_equivariant_kappa_is_rejected() {
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(3), 2).unwrap();
        let mut k = default_kappa(&z).unwrap();
        k.swap(0, 1);
        assert!(matches!(smm_from_unit_iso(&k, &z), Err(SmmError::NotIso(_))));
    }
}
