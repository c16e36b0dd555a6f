use std::collections::BTreeMap;

use serde::Serialize;

use super::aset::{enumerate_asets, equivariant_maps, g_as_aset};
use super::coherence::SkewSetCategory;
use super::product::compose;
use crate::error::SmmError;
use crate::finmon::{SmmInstance, Violation};

/// Rank-1 free objects with chosen free generators `ξ`.
pub struct Rank1<'c, 'a> {
    pub cat: &'c mut SkewSetCategory<'a>,
    xi: BTreeMap<usize, usize>,
}

impl<'c, 'a> Rank1<'c, 'a> {
    /// Starts with `R` (`ξ_R = 1`) and `G` (`ξ_G = μ`). When `G` and `R`
    /// have the same action table they are one object and `ξ_R` is kept.
    pub fn new(cat: &'c mut SkewSetCategory<'a>) -> Self {
        let inst = cat.inst;
        let mut xi = BTreeMap::new();
        xi.insert(cat.unit(), inst.unit());
        let g = cat.intern(g_as_aset(inst));
        let mu = inst.g_carrier().binary_search(&inst.mu).expect("μ ∈ G");
        xi.entry(g).or_insert(mu);
        Rank1 { cat, xi }
    }

    /// Adds an object with its least free generator.
    pub fn add(&mut self, id: usize) -> Result<usize, SmmError> {
        if let Some(&x) = self.xi.get(&id) {
            return Ok(x);
        }
        let x = self
            .cat
            .object(id)
            .free_generator()
            .ok_or_else(|| SmmError::NotRank1Free(format!("object {id}")))?;
        self.xi.insert(id, x);
        Ok(x)
    }

    pub fn objects(&self) -> Vec<usize> {
        self.xi.keys().copied().collect()
    }

    pub fn xi(&self, id: usize) -> usize {
        self.xi[&id]
    }

    /// `ν_M(a) = ξ_M·a`.
    pub fn nu(&self, id: usize) -> Vec<usize> {
        let obj = self.cat.object(id);
        self.cat
            .inst
            .monoid
            .elements()
            .map(|a| obj.act(self.xi(id), a))
            .collect()
    }

    /// `ν_M⁻¹`, indexed by carrier element.
    pub fn nu_inv(&self, id: usize) -> Vec<usize> {
        let mut inv = vec![0; self.cat.object(id).size];
        for (a, m) in self.nu(id).into_iter().enumerate() {
            inv[m] = a;
        }
        inv
    }

    /// `∇f = ν_N⁻¹(f(ξ_M))` for `f: M → N`.
    pub fn nabla(&self, m: usize, n: usize, f: &[usize]) -> usize {
        self.nu_inv(n)[f[self.xi(m)]]
    }

    /// The `α` with `ξ_{M⊛N}·α = [ξ_M, ξ_N, μ]`.
    pub fn alpha(&mut self, m: usize, n: usize) -> Result<usize, SmmError> {
        let mn = self.cat.tensor(m, n)?;
        self.add(mn)?;
        let (xm, xn, mu) = (self.xi(m), self.xi(n), self.cat.inst.mu);
        let c = self.cat.product_table(m, n)?.class(xm, xn, mu)?;
        Ok(self.nu_inv(mn)[c])
    }

    /// `ν_{M,N}: [m, n, g] ↦ T(ν_N⁻¹ n) g S(ν_M⁻¹ m)`, as values in `G`.
    pub fn nu_pair(&mut self, m: usize, n: usize) -> Result<Vec<usize>, SmmError> {
        let (im, inn) = (self.nu_inv(m), self.nu_inv(n));
        let inst = self.cat.inst;
        let p = self.cat.product_table(m, n)?;
        (0..p.size())
            .map(|c| {
                p.classes
                    .lift(c, |t| inst.prod(&[inst.tt(inn[t[1]]), t[2], inst.s(im[t[0]])]))
                    .map_err(|(x, y)| SmmError::IllDefined(format!("nu on {x:?} and {y:?}")))
            })
            .collect()
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Rank1Report {
    pub objects: Vec<usize>,
    pub generators: Vec<usize>,
    /// `α_{M,N}` for the listed pairs of objects.
    pub alpha: Vec<(usize, usize, usize)>,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl Rank1Report {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    fn check(&mut self, ok: bool, axiom: &'static str, witness: &[(&'static str, usize)]) {
        self.checked += 1;
        if !ok {
            self.violations.push(Violation {
                axiom,
                witness: witness.to_vec(),
            });
        }
    }
}

/// Builds `M₁` from `R`, `G`, every rank-1 free `A`-set of size at most
/// `max`, and their pairwise products; checks `ν_M`, `ν_{M,N}`, `α` and that
/// `∇` is a fully faithful, strictly normal, strong skew monoidal functor.
pub fn rank1_subcategory(inst: &SmmInstance, max: usize) -> Result<Rank1Report, SmmError> {
    let mut cat = SkewSetCategory::new(inst)?;
    let universe = enumerate_asets(&inst.monoid, max)?;
    let mut m1 = Rank1::new(&mut cat);
    for x in universe {
        if x.free_generator().is_some() {
            let id = m1.cat.intern(x);
            m1.add(id)?;
        }
    }
    let base = m1.objects();
    for &m in &base {
        for &n in &base {
            let mn = m1.cat.tensor(m, n)?;
            m1.add(mn)?;
        }
    }
    let mut rep = Rank1Report::default();
    let a = &inst.monoid;
    let g_aset = g_as_aset(inst);
    let g_carrier = inst.g_carrier();
    let r = m1.cat.unit();
    for &m in &m1.objects() {
        let regular = m1.cat.object(r).clone();
        let nu = m1.nu(m);
        rep.check(regular.is_iso(m1.cat.object(m), &nu), "nu-iso", &[("M", m)]);
    }
    for &m in &base {
        for &n in &base {
            let w = [("M", m), ("N", n)];
            let alpha = m1.alpha(m, n)?;
            rep.alpha.push((m, n, alpha));
            rep.check(a.inverse(alpha).is_some(), "alpha-invertible", &w);
            let Ok(values) = m1.nu_pair(m, n) else {
                rep.check(false, "nu-pair-well-defined", &w);
                continue;
            };
            let positions: Vec<usize> = values
                .iter()
                .map(|g| g_carrier.binary_search(g).unwrap_or(usize::MAX))
                .collect();
            let mn = m1.cat.tensor(m, n)?;
            rep.check(m1.cat.object(mn).is_iso(&g_aset, &positions), "nu-pair-iso", &w);
            let (xm, xn) = (m1.xi(m), m1.xi(n));
            let table = m1.cat.product_table(m, n)?;
            let inverse_ok = g_carrier
                .iter()
                .all(|&g| table.class(xm, xn, g).is_ok_and(|c| values[c] == g));
            rep.check(inverse_ok, "nu-pair-inverse", &w);
        }
    }
    // ∇ on hom-sets, functoriality and full faithfulness
    let objs = m1.objects();
    for &m in &objs {
        for &n in &objs {
            let maps = equivariant_maps(m1.cat.object(m), m1.cat.object(n));
            let mut images: Vec<usize> = maps.iter().map(|f| m1.nabla(m, n, f)).collect();
            images.sort_unstable();
            images.dedup();
            rep.check(
                images.len() == maps.len() && images.len() == a.size(),
                "nabla-fully-faithful",
                &[("M", m), ("N", n)],
            );
            if m == n {
                let id: Vec<usize> = (0..m1.cat.object(m).size).collect();
                rep.check(m1.nabla(m, m, &id) == a.unit(), "nabla-identity", &[("M", m)]);
            }
        }
    }
    for &l in &base {
        for &m in &base {
            for &n in &base {
                let maps_lm = equivariant_maps(m1.cat.object(l), m1.cat.object(m));
                let maps_mn = equivariant_maps(m1.cat.object(m), m1.cat.object(n));
                for f in &maps_lm {
                    for g in &maps_mn {
                        let lhs = m1.nabla(l, n, &compose(g, f));
                        let rhs = a.mul(m1.nabla(m, n, g), m1.nabla(l, m, f));
                        rep.check(lhs == rhs, "nabla-functor", &[("L", l), ("M", m), ("N", n)]);
                    }
                }
            }
        }
    }
    strong_monoidal(&mut m1, &base, inst, &mut rep)?;
    rep.objects = m1.objects();
    rep.generators = rep.objects.iter().map(|&o| m1.xi(o)).collect();
    Ok(rep)
}

/// The constraints of `∇` with `φ₂ = α` and `φ₀ = 1`: naturality of `α`,
/// compatibility with `γ`, `η` and `ε`.
fn strong_monoidal(
    m1: &mut Rank1<'_, '_>,
    base: &[usize],
    inst: &SmmInstance,
    rep: &mut Rank1Report,
) -> Result<(), SmmError> {
    let r = m1.cat.unit();
    for &m in base {
        for &m2 in base {
            for &n in base {
                for &n2 in base {
                    let fs = equivariant_maps(m1.cat.object(m), m1.cat.object(m2));
                    let gs = equivariant_maps(m1.cat.object(n), m1.cat.object(n2));
                    let (a, a2) = (m1.alpha(m, n)?, m1.alpha(m2, n2)?);
                    let (mn, mn2) = (m1.cat.tensor(m, n)?, m1.cat.tensor(m2, n2)?);
                    for f in &fs {
                        for g in &gs {
                            let fg = m1.cat.tensor_arrows((m, m2, f), (n, n2, g))?;
                            let lhs = inst.prod(&[a2, inst.qq(m1.nabla(m, m2, f)), inst.tt(m1.nabla(n, n2, g))]);
                            let rhs = inst.mul(m1.nabla(mn, mn2, &fg), a);
                            rep.check(
                                lhs == rhs,
                                "alpha-natural",
                                &[("M", m), ("N", n), ("M'", m2), ("N'", n2)],
                            );
                        }
                    }
                }
            }
        }
    }
    for &l in base {
        for &m in base {
            for &n in base {
                let (lm, mn) = (m1.cat.tensor(l, m)?, m1.cat.tensor(m, n)?);
                let (dom, cod) = (m1.cat.tensor(l, mn)?, m1.cat.tensor(lm, n)?);
                m1.add(dom)?;
                m1.add(cod)?;
                let gamma = m1.cat.gamma(l, m, n)?;
                let lhs = inst.prod(&[m1.nabla(dom, cod, &gamma), m1.alpha(l, mn)?, inst.tt(m1.alpha(m, n)?)]);
                let rhs = inst.prod(&[m1.alpha(lm, n)?, inst.qq(m1.alpha(l, m)?), inst.gamma()]);
                rep.check(lhs == rhs, "nabla-gamma", &[("L", l), ("M", m), ("N", n)]);
            }
        }
    }
    for &m in base {
        let (rm, mr) = (m1.cat.tensor(r, m)?, m1.cat.tensor(m, r)?);
        m1.add(rm)?;
        m1.add(mr)?;
        let eta = m1.cat.eta(m)?;
        let lhs = m1.nabla(m, rm, &eta);
        rep.check(lhs == inst.mul(m1.alpha(r, m)?, inst.eta), "nabla-eta", &[("M", m)]);
        let eps = m1.cat.eps(m)?;
        let lhs = inst.mul(m1.nabla(mr, m, &eps), m1.alpha(m, r)?);
        rep.check(lhs == inst.eps, "nabla-eps", &[("M", m)]);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmon::FiniteMonoid;
    use crate::skewset::FiniteASet;

    #[test]
    fn nabla_on_r_is_evaluation_at_one() {
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(3), 1).unwrap();
        let mut cat = SkewSetCategory::new(&z).unwrap();
        let m1 = Rank1::new(&mut cat);
        let r = m1.cat.unit();
        let regular = FiniteASet::regular(&z.monoid);
        for f in equivariant_maps(&regular, &regular) {
            assert_eq!(m1.nabla(r, r, &f), f[z.unit()]);
        }
    }

    #[test]
    fn mu_generates_g() {
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        let g = g_as_aset(&z);
        assert!(g.generates_freely(z.g_carrier().binary_search(&z.mu).unwrap()));
        let mut cat = SkewSetCategory::new(&z).unwrap();
        let id = cat.intern(g);
        assert_eq!(id, cat.unit());
        let m1 = Rank1::new(&mut cat);
        assert_eq!(m1.xi(id), z.unit());
    }

    #[test]
    fn z2_report() {
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        let rep = rank1_subcategory(&z, 3).unwrap();
        assert!(rep.passes(), "{:?}", rep.violations);
        // R⊛R: ξ = [1, 1, μ] = [1, 1, g] and α_{R,R} is its coordinate
        assert!(rep.alpha.iter().all(|&(_, _, a)| a < 2));
    }

    #[test]
    fn non_free_object_is_rejected() {
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        let mut cat = SkewSetCategory::new(&z).unwrap();
        let point = cat.intern(FiniteASet {
            size: 1,
            action: vec![vec![0, 0]],
        });
        let mut m1 = Rank1::new(&mut cat);
        assert!(matches!(m1.add(point), Err(SmmError::NotRank1Free(_))));
    }
}
