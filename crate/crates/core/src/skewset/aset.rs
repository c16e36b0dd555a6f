use serde::{Deserialize, Serialize};

use crate::error::SmmError;
use crate::finmon::{EndoMap, FiniteMonoid, SmmInstance};

/// A finite right `A`-set; `action[m][a]` is `m·a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteASet {
    pub size: usize,
    pub action: Vec<Vec<usize>>,
}

impl FiniteASet {
    pub fn new(monoid: &FiniteMonoid, size: usize, action: Vec<Vec<usize>>) -> Result<Self, SmmError> {
        let bad = |msg: String| Err(SmmError::InvalidInstance(msg));
        if action.len() != size || action.iter().any(|row| row.len() != monoid.size()) {
            return bad(format!("action table must be {size} x {}", monoid.size()));
        }
        if action.iter().flatten().any(|&m| m >= size) {
            return bad("action value out of range".into());
        }
        let s = FiniteASet { size, action };
        for m in 0..size {
            if s.act(m, monoid.unit()) != m {
                return bad(format!("{m}·1 ≠ {m}"));
            }
            for a in monoid.elements() {
                for b in monoid.elements() {
                    if s.act(s.act(m, a), b) != s.act(m, monoid.mul(a, b)) {
                        return bad(format!("({m}·{a})·{b} ≠ {m}·({a}{b})"));
                    }
                }
            }
        }
        Ok(s)
    }

    pub fn from_json(monoid: &FiniteMonoid, text: &str) -> Result<Self, SmmError> {
        let raw: FiniteASet = serde_json::from_str(text).map_err(|e| SmmError::Parse {
            offset: e.column(),
            message: e.to_string(),
        })?;
        FiniteASet::new(monoid, raw.size, raw.action)
    }

    pub fn act(&self, m: usize, a: usize) -> usize {
        self.action[m][a]
    }

    /// `A` acting on itself by right multiplication.
    pub fn regular(monoid: &FiniteMonoid) -> Self {
        FiniteASet {
            size: monoid.size(),
            action: monoid
                .elements()
                .map(|x| monoid.elements().map(|a| monoid.mul(x, a)).collect())
                .collect(),
        }
    }

    /// The same carrier with `m ·_f a = m·f(a)`.
    pub fn twisted(&self, f: &EndoMap) -> Self {
        FiniteASet {
            size: self.size,
            action: self
                .action
                .iter()
                .map(|row| f.images.iter().map(|&fa| row[fa]).collect())
                .collect(),
        }
    }

    /// Least `ξ` with `a ↦ ξ·a` bijective.
    pub fn free_generator(&self) -> Option<usize> {
        (0..self.size).find(|&x| self.generates_freely(x))
    }

    pub fn generates_freely(&self, x: usize) -> bool {
        let row = &self.action[x];
        if row.len() != self.size {
            return false;
        }
        let mut seen = vec![false; self.size];
        row.iter().all(|&m| !std::mem::replace(&mut seen[m], true))
    }

    pub fn is_equivariant(&self, other: &FiniteASet, f: &[usize]) -> bool {
        f.len() == self.size
            && f.iter().all(|&y| y < other.size)
            && (0..self.size).all(|m| {
                self.action[m]
                    .iter()
                    .zip(&other.action[f[m]])
                    .all(|(&ma, &fma)| f[ma] == fma)
            })
    }

    pub fn is_iso(&self, other: &FiniteASet, f: &[usize]) -> bool {
        if self.size != other.size || !self.is_equivariant(other, f) {
            return false;
        }
        let mut seen = vec![false; other.size];
        f.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    fn relabel(&self, perm: &[usize]) -> FiniteASet {
        let mut action = vec![vec![0; self.action.first().map_or(0, Vec::len)]; self.size];
        for m in 0..self.size {
            action[perm[m]] = self.action[m].iter().map(|&x| perm[x]).collect();
        }
        FiniteASet {
            size: self.size,
            action,
        }
    }

    /// Least relabelling in lexicographic order of the action table.
    pub fn canonical(&self) -> FiniteASet {
        permutations(self.size)
            .iter()
            .map(|p| self.relabel(p))
            .min()
            .unwrap_or_else(|| self.clone())
    }
}

/// All equivariant maps `dom → cod`, as image vectors, in lexicographic order.
pub fn equivariant_maps(dom: &FiniteASet, cod: &FiniteASet) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut f = vec![usize::MAX; dom.size];
    extend(dom, cod, 0, &mut f, &mut out);
    out
}

fn extend(dom: &FiniteASet, cod: &FiniteASet, next: usize, f: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if next == dom.size {
        if dom.is_equivariant(cod, f) {
            out.push(f.clone());
        }
        return;
    }
    for y in 0..cod.size {
        f[next] = y;
        let consistent = (0..=next).all(|m| {
            dom.action[m]
                .iter()
                .zip(&cod.action[f[m]])
                .all(|(&ma, &fma)| ma > next || f[ma] == fma)
        });
        if consistent {
            extend(dom, cod, next + 1, f, out);
        }
    }
    f[next] = usize::MAX;
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Largest carrier in the exhaustive universe of test objects.
pub const MAX_ASET_SIZE: usize = 3;

/// All right `A`-sets with carrier size `1..=max`, one per isomorphism class,
/// in canonical form and sorted.
pub fn enumerate_asets(monoid: &FiniteMonoid, max: usize) -> Result<Vec<FiniteASet>, SmmError> {
    if max > MAX_ASET_SIZE {
        return Err(SmmError::BoundExceeded {
            size: max,
            bound: MAX_ASET_SIZE,
        });
    }
    let mut out = Vec::new();
    for n in 1..=max {
        let maps: Vec<Vec<usize>> = (0..n.pow(n as u32))
            .map(|code| (0..n).map(|i| code / n.pow(i as u32) % n).collect())
            .collect();
        // a right action is a choice of a self-map per element, compatible
        // with the monoid structure; the unit acts as the identity
        let mut choice: Vec<Option<usize>> = vec![None; monoid.size()];
        let identity = (0..n).map(|i| n.pow(i as u32) * i).sum::<usize>();
        choice[monoid.unit()] = Some(identity);
        let order: Vec<usize> = monoid.elements().filter(|&a| a != monoid.unit()).collect();
        assign(monoid, &maps, &order, 0, &mut choice, n, &mut out);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn assign(
    monoid: &FiniteMonoid,
    maps: &[Vec<usize>],
    order: &[usize],
    next: usize,
    choice: &mut Vec<Option<usize>>,
    n: usize,
    out: &mut Vec<FiniteASet>,
) {
    let Some(&a) = order.get(next) else {
        let action = (0..n)
            .map(|m| {
                monoid
                    .elements()
                    .map(|b| maps[choice[b].expect("assigned")][m])
                    .collect()
            })
            .collect();
        out.push(FiniteASet { size: n, action }.canonical());
        return;
    };
    for code in 0..maps.len() {
        choice[a] = Some(code);
        let ok = monoid.elements().all(|x| {
            monoid
                .elements()
                .all(|y| match (choice[x], choice[y], choice[monoid.mul(x, y)]) {
                    (Some(fx), Some(fy), Some(fxy)) => (0..n).all(|m| maps[fy][maps[fx][m]] == maps[fxy][m]),
                    _ => true,
                })
        });
        if ok {
            assign(monoid, maps, order, next + 1, choice, n, out);
        }
    }
    choice[a] = None;
}

/// `G` with `g·a = gT(a)`, on positions of the sorted carrier.
pub fn g_as_aset(inst: &SmmInstance) -> FiniteASet {
    let g = inst.g_carrier();
    let pos = |x: usize| {
        g.binary_search(&x)
            .expect("G is closed under right multiplication by T(A)")
    };
    FiniteASet {
        size: g.len(),
        action: g
            .iter()
            .map(|&x| inst.monoid.elements().map(|a| pos(inst.mul(x, inst.tt(a)))).collect())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_over_small_monoids() {
        let one = FiniteMonoid::trivial();
        assert_eq!(enumerate_asets(&one, 3).unwrap().len(), 3);
        // Z/2-sets: 1 | 2 (trivial, swap) | 3 (trivial, swap + fixed point)
        assert_eq!(enumerate_asets(&FiniteMonoid::cyclic(2), 3).unwrap().len(), 5);
        // idempotent self-maps up to conjugacy: 1 | 2 | 3
        assert_eq!(enumerate_asets(&FiniteMonoid::idempotent(), 3).unwrap().len(), 6);
        assert!(enumerate_asets(&one, 4).is_err());
    }

    #[test]
    fn regular_and_json() {
        let z = FiniteMonoid::cyclic(2);
        let r = FiniteASet::regular(&z);
        assert_eq!(r.free_generator(), Some(0));
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(text, r#"{"size":2,"action":[[0,1],[1,0]]}"#);
        assert_eq!(FiniteASet::from_json(&z, &text).unwrap(), r);
        assert!(FiniteASet::from_json(&z, r#"{"size":2,"action":[[1,1],[1,0]]}"#).is_err());
    }

    #[test]
    fn equivariant_maps_of_z2_sets() {
        let z = FiniteMonoid::cyclic(2);
        let r = FiniteASet::regular(&z);
        let point = FiniteASet {
            size: 1,
            action: vec![vec![0, 0]],
        };
        assert_eq!(equivariant_maps(&r, &r), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(equivariant_maps(&r, &point).len(), 1);
        assert!(equivariant_maps(&point, &r).is_empty());
    }
}
