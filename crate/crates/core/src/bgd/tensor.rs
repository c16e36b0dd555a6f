//! Set-level tensor products over a monoid, as quotients of finite products.

use petgraph::unionfind::UnionFind;

use crate::error::SmmError;

/// A right action `x·a` on one factor paired with a left action `a·y` on the next.
pub struct Link<'a> {
    pub right: &'a dyn Fn(usize, usize) -> usize,
    pub left: &'a dyn Fn(usize, usize) -> usize,
}

/// The quotient of `factors[0] × … × factors[k-1]` by the equivalence
/// generated by a set of related tuple pairs.
///
/// Tuples hold element values, not positions. Classes are numbered in
/// order of their least member, which is also their representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientTensor {
    factors: Vec<Vec<usize>>,
    lookup: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

const ABSENT: usize = usize::MAX;

impl QuotientTensor {
    /// Builds the finest equivalence containing every pair in `related`.
    pub fn from_pairs(
        factors: Vec<Vec<usize>>,
        related: impl IntoIterator<Item = (Vec<usize>, Vec<usize>)>,
    ) -> Result<Self, SmmError> {
        let mut factors = factors;
        for f in &mut factors {
            f.sort_unstable();
            f.dedup();
        }
        let lookup: Vec<Vec<usize>> = factors
            .iter()
            .map(|f| {
                let top = f.iter().copied().max().map_or(0, |m| m + 1);
                let mut v = vec![ABSENT; top];
                for (i, &x) in f.iter().enumerate() {
                    v[x] = i;
                }
                v
            })
            .collect();
        let total: usize = factors.iter().map(Vec::len).product();
        let mut t = QuotientTensor {
            factors,
            lookup,
            class_of: vec![0; total],
            classes: vec![],
        };
        let mut uf = UnionFind::<usize>::new(total);
        for (a, b) in related {
            uf.union(t.code(&a)?, t.code(&b)?);
        }
        // codes enumerate tuples lexicographically, so the first code seen
        // for each root is the least member of its class
        let mut root_class = vec![ABSENT; total];
        for code in 0..total {
            let root = uf.find(code);
            if root_class[root] == ABSENT {
                root_class[root] = t.classes.len();
                t.classes.push(vec![]);
            }
            t.class_of[code] = root_class[root];
            t.classes[root_class[root]].push(code);
        }
        Ok(t)
    }

    /// `f_0 ⊗ f_1 ⊗ … ⊗ f_{k-1}` over `acting`, where link `i` identifies
    /// `(…, x·a, y, …)` with `(…, x, a·y, …)` in slots `i, i+1`.
    pub fn chain(factors: Vec<Vec<usize>>, acting: &[usize], links: &[Link<'_>]) -> Result<Self, SmmError> {
        assert_eq!(links.len() + 1, factors.len(), "one link per adjacent pair");
        let mut pairs = Vec::new();
        let all = product(&factors);
        for tuple in &all {
            for (i, link) in links.iter().enumerate() {
                for &a in acting {
                    let mut lhs = tuple.clone();
                    lhs[i] = (link.right)(tuple[i], a);
                    let mut rhs = tuple.clone();
                    rhs[i + 1] = (link.left)(a, tuple[i + 1]);
                    pairs.push((lhs, rhs));
                }
            }
        }
        QuotientTensor::from_pairs(factors, pairs)
    }

    /// Binary `L ⊗ R` identifying `(x·a, y)` with `(x, a·y)`.
    pub fn binary(
        left: Vec<usize>,
        right: Vec<usize>,
        acting: &[usize],
        right_action: &dyn Fn(usize, usize) -> usize,
        left_action: &dyn Fn(usize, usize) -> usize,
    ) -> Result<Self, SmmError> {
        QuotientTensor::chain(
            vec![left, right],
            acting,
            &[Link {
                right: right_action,
                left: left_action,
            }],
        )
    }

    fn code(&self, tuple: &[usize]) -> Result<usize, SmmError> {
        debug_assert_eq!(tuple.len(), self.factors.len());
        let mut code = 0;
        for ((&x, look), f) in tuple.iter().zip(&self.lookup).zip(&self.factors) {
            let pos = look.get(x).copied().unwrap_or(ABSENT);
            if pos == ABSENT {
                return Err(SmmError::ElementNotInCarrier(x));
            }
            code = code * f.len() + pos;
        }
        Ok(code)
    }

    fn decode(&self, mut code: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, f) in self.factors.iter().enumerate().rev() {
            out[slot] = f[code % f.len()];
            code /= f.len();
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Vec<usize>] {
        &self.factors
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Class index of a tuple; errors if a coordinate is outside its factor.
    pub fn class(&self, tuple: &[usize]) -> Result<usize, SmmError> {
        Ok(self.class_of[self.code(tuple)?])
    }

    /// The least member of class `c`.
    pub fn rep(&self, c: usize) -> Vec<usize> {
        self.decode(self.classes[c][0])
    }

    pub fn members(&self, c: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.classes[c].iter().map(|&code| self.decode(code))
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Applies a tuple map to every member of class `c` and returns the common
    /// value, or `Err` with two members that disagree.
    pub fn lift<T: PartialEq + Clone>(
        &self,
        c: usize,
        mut f: impl FnMut(&[usize]) -> T,
    ) -> Result<T, (Vec<usize>, Vec<usize>)> {
        let mut first: Option<(Vec<usize>, T)> = None;
        for m in self.members(c) {
            let v = f(&m);
            match &first {
                None => first = Some((m, v)),
                Some((m0, v0)) => {
                    if *v0 != v {
                        return Err((m0.clone(), m));
                    }
                }
            }
        }
        Ok(first.expect("classes are non-empty").1)
    }
}

/// All tuples of the cartesian product, lexicographic in factor order.
pub fn product(factors: &[Vec<usize>]) -> Vec<Vec<usize>> {
    factors.iter().fold(vec![vec![]], |acc, f| {
        acc.iter()
            .flat_map(|prefix| {
                f.iter().map(move |&x| {
                    let mut t = prefix.clone();
                    t.push(x);
                    t
                })
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmon::FiniteMonoid;

    #[test]
    fn regular_tensor_is_the_monoid() {
        for m in [FiniteMonoid::cyclic(3), FiniteMonoid::idempotent()] {
            let els: Vec<usize> = m.elements().collect();
            let mul = |x, y| m.mul(x, y);
            let t = QuotientTensor::binary(els.clone(), els.clone(), &els, &mul, &mul).unwrap();
            assert_eq!(t.num_classes(), m.size());
            for &a in &els {
                for &b in &els {
                    let c = t.class(&[a, b]).unwrap();
                    // the class is determined by the product
                    assert_eq!(t.lift(c, |p| m.mul(p[0], p[1])), Ok(m.mul(a, b)));
                }
            }
        }
    }

    #[test]
    fn representatives_are_minimal() {
        let m = FiniteMonoid::cyclic(2);
        let els = vec![0, 1];
        let mul = |x, y| m.mul(x, y);
        let t = QuotientTensor::binary(els.clone(), els.clone(), &els, &mul, &mul).unwrap();
        assert_eq!(t.rep(0), vec![0, 0]);
        assert_eq!(t.rep(1), vec![0, 1]);
        assert_eq!(t.class(&[1, 0]).unwrap(), 1);
        assert_eq!(t.class(&[1, 1]).unwrap(), 0);
    }

    #[test]
    fn discrete_and_out_of_carrier() {
        let t = QuotientTensor::from_pairs(vec![vec![3, 5], vec![7]], []).unwrap();
        assert_eq!(t.num_classes(), 2);
        assert_eq!(t.rep(1), vec![5, 7]);
        assert_eq!(t.class(&[4, 7]), Err(SmmError::ElementNotInCarrier(4)));
    }

    #[test]
    fn lift_reports_disagreement() {
        let t = QuotientTensor::from_pairs(vec![vec![0, 1]], [(vec![0], vec![1])]).unwrap();
        assert_eq!(t.num_classes(), 1);
        assert_eq!(t.lift(0, |p| p[0]), Err((vec![0], vec![1])));
    }
}
