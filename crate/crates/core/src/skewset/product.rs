use super::aset::FiniteASet;
use crate::bgd::QuotientTensor;
use crate::error::SmmError;
use crate::finmon::SmmInstance;

/// `M ⊛ N = M ⊗_S (N ⊗_T G)`: classes `[m, n, g]` under
/// `⟨m·b, n·a, g⟩ ~ ⟨m, n, T(a)gS(b)⟩`, with `[m, n, g]·a = [m, n, gT(a)]`.
#[derive(Debug, Clone)]
pub struct SkewProduct {
    pub left: usize,
    pub right: usize,
    pub classes: QuotientTensor,
    /// The product as an `A`-set on class indices.
    pub aset: FiniteASet,
}

impl SkewProduct {
    pub fn class(&self, m: usize, n: usize, g: usize) -> Result<usize, SmmError> {
        self.classes.class(&[m, n, g])
    }

    /// Members `(m, n, g)` of class `c`.
    pub fn members(&self, c: usize) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.classes.members(c).map(|t| (t[0], t[1], t[2]))
    }

    pub fn rep(&self, c: usize) -> (usize, usize, usize) {
        let t = self.classes.rep(c);
        (t[0], t[1], t[2])
    }

    pub fn size(&self) -> usize {
        self.aset.size
    }
}

pub fn skew_product(m: &FiniteASet, n: &FiniteASet, inst: &SmmInstance) -> Result<SkewProduct, SmmError> {
    let g = inst.g_carrier();
    let els: Vec<usize> = inst.monoid.elements().collect();
    let mut pairs = Vec::new();
    for x in 0..m.size {
        for y in 0..n.size {
            for &h in &g {
                for &a in &els {
                    for &b in &els {
                        let moved = inst.prod(&[inst.tt(a), h, inst.s(b)]);
                        pairs.push((vec![m.act(x, b), n.act(y, a), h], vec![x, y, moved]));
                    }
                }
            }
        }
    }
    let classes = QuotientTensor::from_pairs(vec![(0..m.size).collect(), (0..n.size).collect(), g], pairs)?;
    let mut action = Vec::with_capacity(classes.num_classes());
    for c in 0..classes.num_classes() {
        let row: Result<Vec<usize>, SmmError> = els
            .iter()
            .map(|&a| {
                classes
                    .lift(c, |t| classes.class(&[t[0], t[1], inst.mul(t[2], inst.tt(a))]).ok())
                    .map_err(|(p, q)| SmmError::IllDefined(format!("action on {p:?} and {q:?}")))?
                    .ok_or(SmmError::ElementNotInCarrier(a))
            })
            .collect();
        action.push(row?);
    }
    Ok(SkewProduct {
        left: m.size,
        right: n.size,
        aset: FiniteASet {
            size: classes.num_classes(),
            action,
        },
        classes,
    })
}

/// `f ⊛ g: [m, n, h] ↦ [f(m), g(n), h]` between two skew products.
pub fn product_map(dom: &SkewProduct, cod: &SkewProduct, f: &[usize], g: &[usize]) -> Result<Vec<usize>, SmmError> {
    (0..dom.size())
        .map(|c| {
            dom.classes
                .lift(c, |t| cod.class(f[t[0]], g[t[1]], t[2]).ok())
                .map_err(|(p, q)| SmmError::IllDefined(format!("f⊛g on {p:?} and {q:?}")))?
                .ok_or_else(|| SmmError::IllDefined("f⊛g leaves the codomain".into()))
        })
        .collect()
}

pub(crate) fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// `(f ∘ g)(x) = f(g(x))`.
pub(crate) fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmon::FiniteMonoid;

    #[test]
    fn regular_products() {
        let one = SmmInstance::trivial_one();
        let r1 = FiniteASet::regular(&one.monoid);
        assert_eq!(skew_product(&r1, &r1, &one).unwrap().size(), 1);
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        let r = FiniteASet::regular(&z.monoid);
        let rr = skew_product(&r, &r, &z).unwrap();
        assert_eq!(rr.size(), 2);
        assert!(rr.aset.generates_freely(0));
    }

    #[test]
    fn point_products() {
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        let p = FiniteASet {
            size: 1,
            action: vec![vec![0, 0]],
        };
        // ⟨*, *, g⟩ ~ ⟨*, *, abg⟩ collapses G to one class
        assert_eq!(skew_product(&p, &p, &z).unwrap().size(), 1);
    }
}
