//! Source-regular right `G`-modules versus objects of `Aᵀ`, by exhaustive
//! enumeration of module structures on a carrier of size `|A|`.

use serde::Serialize;

use super::{enum_t_algebras, t_hom_set, violation};
use crate::error::SmmError;
use crate::finmon::{SmmInstance, Violation};

/// Largest `|A|` for which all module structures are enumerated.
pub const MAX_REGULAR_SIZE: usize = 3;

/// A right action of `G` on `0..size`; `action[m][i]` is `m · carrier[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GModule {
    pub size: usize,
    pub carrier: Vec<usize>,
    pub action: Vec<Vec<usize>>,
}

impl GModule {
    fn act(&self, m: usize, g: usize) -> usize {
        let i = self.carrier.binary_search(&g).expect("g in G");
        self.action[m][i]
    }

    /// `m₀` with `a ↦ m₀·T(a)` bijective, if any.
    fn free_generator(&self, inst: &SmmInstance) -> Option<usize> {
        (0..self.size).find(|&m0| {
            let mut seen = vec![false; self.size];
            inst.monoid
                .elements()
                .all(|a| !std::mem::replace(&mut seen[self.act(m0, inst.tt(a))], true))
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularClassification {
    /// Right `G`-module structures on `0..|A|`.
    pub modules: usize,
    pub source_regular: usize,
    /// For each source-regular module, the `T`-algebra it is isomorphic to.
    pub algebras: Vec<usize>,
    pub violations: Vec<Violation>,
}

/// All right `G`-actions on `0..|A|`.
pub fn enumerate_g_modules(inst: &SmmInstance) -> Vec<GModule> {
    let carrier = inst.g_carrier();
    let k = inst.size();
    let one = carrier.binary_search(&inst.unit()).expect("1 in G");
    let mut action = vec![vec![usize::MAX; carrier.len()]; k];
    for (m, row) in action.iter_mut().enumerate() {
        row[one] = m;
    }
    let cells: Vec<(usize, usize)> = (0..k)
        .flat_map(|m| (0..carrier.len()).filter(move |&i| i != one).map(move |i| (m, i)))
        .collect();
    let mut out = Vec::new();
    fill(inst, &carrier, &cells, 0, &mut action, &mut out);
    out
}

fn fill(
    inst: &SmmInstance,
    carrier: &[usize],
    cells: &[(usize, usize)],
    next: usize,
    action: &mut Vec<Vec<usize>>,
    out: &mut Vec<GModule>,
) {
    let Some(&(m, i)) = cells.get(next) else {
        out.push(GModule {
            size: action.len(),
            carrier: carrier.to_vec(),
            action: action.clone(),
        });
        return;
    };
    for v in 0..action.len() {
        action[m][i] = v;
        if consistent(inst, carrier, action) {
            fill(inst, carrier, cells, next + 1, action, out);
        }
    }
    action[m][i] = usize::MAX;
}

/// `(m·g)·h = m·(gh)` wherever all three entries are defined.
fn consistent(inst: &SmmInstance, carrier: &[usize], action: &[Vec<usize>]) -> bool {
    let pos = |g: usize| carrier.binary_search(&g).expect("G is closed");
    for row in action {
        for (gi, &g) in carrier.iter().enumerate() {
            let mg = row[gi];
            if mg == usize::MAX {
                continue;
            }
            for (hi, &h) in carrier.iter().enumerate() {
                let lhs = action[mg][hi];
                let rhs = row[pos(inst.mul(g, h))];
                if lhs != usize::MAX && rhs != usize::MAX && lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Checks that source-regular right `G`-modules are exactly the `xT(A)` for
/// `T`-algebras `x`, and that `Aᵀ(x, y)` is the set of `G`-module maps
/// `xT(A) → yT(A)`.
pub fn classify_source_regular(inst: &SmmInstance) -> Result<RegularClassification, SmmError> {
    if inst.size() > MAX_REGULAR_SIZE {
        return Err(SmmError::BoundExceeded {
            size: inst.size(),
            bound: MAX_REGULAR_SIZE,
        });
    }
    let g = inst.g_carrier();
    let modules = enumerate_g_modules(inst);
    let mut violations = Vec::new();
    let mut algebras = Vec::new();
    let mut source_regular = 0;
    for (idx, module) in modules.iter().enumerate() {
        let Some(m0) = module.free_generator(inst) else {
            continue;
        };
        source_regular += 1;
        let x = inst
            .monoid
            .elements()
            .find(|&x| module.act(m0, inst.mu) == module.act(m0, inst.tt(x)))
            .expect("m0 generates freely");
        if !super::is_t_algebra(inst, x) {
            violations.push(violation("regular-module-algebra", &[("module", idx), ("x", x)]));
            continue;
        }
        // xT(a) ↦ m₀·T(a) must be a well-defined equivariant bijection
        let mut map = vec![usize::MAX; inst.size()];
        let mut ok = true;
        for a in inst.monoid.elements() {
            let src = inst.mul(x, inst.tt(a));
            let dst = module.act(m0, inst.tt(a));
            if map[src] != usize::MAX && map[src] != dst {
                ok = false;
            }
            map[src] = dst;
        }
        let domain = t_hom_set(inst, inst.mu, x);
        ok &= domain.len() == module.size;
        ok &= domain
            .iter()
            .all(|&s| g.iter().all(|&h| map[inst.mul(s, h)] == module.act(map[s], h)));
        if !ok {
            violations.push(violation("regular-module-iso", &[("module", idx), ("x", x)]));
        }
        algebras.push(x);
    }
    let objects = enum_t_algebras(inst);
    for &x in &objects {
        let carrier = t_hom_set(inst, inst.mu, x);
        let free = inst.monoid.elements().map(|a| inst.mul(x, inst.tt(a)));
        if crate::finmon::sorted(free).len() != inst.size() || carrier.len() != inst.size() {
            violations.push(violation("object-module-regular", &[("x", x)]));
        }
        if !algebras.contains(&x) && !algebras.iter().any(|&y| super::are_isomorphic_objects(inst, x, y)) {
            violations.push(violation("object-module-missing", &[("x", x)]));
        }
        for &y in &objects {
            let target = t_hom_set(inst, inst.mu, y);
            let maps = equivariant_maps(inst, &carrier, &target, &g);
            let arrows = t_hom_set(inst, x, y);
            let induced: Vec<Vec<usize>> = arrows
                .iter()
                .map(|&t| carrier.iter().map(|&s| inst.mul(t, s)).collect())
                .collect();
            let mut sorted_induced = induced.clone();
            sorted_induced.sort();
            sorted_induced.dedup();
            if sorted_induced.len() != arrows.len() || sorted_induced != maps {
                violations.push(violation("fully-faithful", &[("x", x), ("y", y)]));
            }
        }
    }
    Ok(RegularClassification {
        modules: modules.len(),
        source_regular,
        algebras,
        violations,
    })
}

/// All maps `dom → cod` (as image vectors over `dom`) commuting with right
/// multiplication by `G`, sorted.
fn equivariant_maps(inst: &SmmInstance, dom: &[usize], cod: &[usize], g: &[usize]) -> Vec<Vec<usize>> {
    let n = dom.len();
    let total = cod.len().pow(n as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let images: Vec<usize> = (0..n)
            .map(|i| cod[code / cod.len().pow(i as u32) % cod.len()])
            .collect();
        let f = |s: usize| images[dom.binary_search(&s).expect("closed")];
        if dom
            .iter()
            .all(|&s| g.iter().all(|&h| f(inst.mul(s, h)) == inst.mul(f(s), h)))
        {
            out.push(images);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmon::{enumerate_monoids, enumerate_smm, FiniteMonoid};

    #[test]
    fn classification_for_small_instances() {
        for n in 1..=2 {
            for m in enumerate_monoids(n, false).unwrap() {
                for inst in enumerate_smm(&m) {
                    let c = classify_source_regular(&inst).unwrap();
                    assert!(c.violations.is_empty(), "{:?}", c.violations);
                    assert!(c.source_regular >= 1);
                    assert!(c.algebras.iter().all(|&x| x == inst.eps));
                }
            }
        }
    }

    #[test]
    fn z2_module_census() {
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        // actions of Z/2 on a 2-element set: trivial and swap
        assert_eq!(enumerate_g_modules(&z).len(), 2);
        let c = classify_source_regular(&z).unwrap();
        assert_eq!(c.source_regular, 1);
    }

    #[test]
    fn size_bound() {
        let inst = SmmInstance::trivial_on(FiniteMonoid::cyclic(4), 0).unwrap();
        assert!(classify_source_regular(&inst).is_err());
    }
}
