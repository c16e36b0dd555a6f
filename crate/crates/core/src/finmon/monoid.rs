use serde::{Deserialize, Serialize};

use crate::error::SmmError;

/// A finite monoid on `0..size`, given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteMonoid {
    size: usize,
    table: Vec<usize>,
    unit: usize,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct RawMonoid {
    pub size: usize,
    pub table: Vec<Vec<usize>>,
    pub unit: usize,
}

impl FiniteMonoid {
    /// Validates shape, range, associativity and the unit.
    pub fn new(table: Vec<Vec<usize>>, unit: usize) -> Result<Self, SmmError> {
        let size = table.len();
        if size == 0 {
            return Err(SmmError::InvalidMonoid("empty carrier".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != size {
                return Err(SmmError::InvalidMonoid(format!(
                    "row {i} has {} entries, expected {size}",
                    row.len()
                )));
            }
            if let Some(j) = row.iter().position(|&x| x >= size) {
                return Err(SmmError::InvalidMonoid(format!(
                    "entry ({i},{j}) = {} out of range",
                    row[j]
                )));
            }
        }
        if unit >= size {
            return Err(SmmError::InvalidMonoid(format!("unit {unit} out of range")));
        }
        let m = FiniteMonoid {
            size,
            table: table.into_iter().flatten().collect(),
            unit,
        };
        for a in 0..size {
            if m.mul(unit, a) != a || m.mul(a, unit) != a {
                return Err(SmmError::InvalidMonoid(format!(
                    "unit {unit} is not an identity for {a}"
                )));
            }
        }
        if let Some((a, b, c)) = m.associativity_failure() {
            return Err(SmmError::InvalidMonoid(format!("not associative at ({a},{b},{c})")));
        }
        Ok(m)
    }

    /// Builds from a flat row-major table already known to be a monoid.
    pub(crate) fn from_flat_unchecked(size: usize, table: Vec<usize>, unit: usize) -> Self {
        debug_assert_eq!(table.len(), size * size);
        FiniteMonoid { size, table, unit }
    }

    fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.size {
            for b in 0..self.size {
                let ab = self.mul(a, b);
                for c in 0..self.size {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn trivial() -> Self {
        FiniteMonoid::from_flat_unchecked(1, vec![0], 0)
    }

    /// The cyclic group of order `n` under addition, `0` the unit.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        FiniteMonoid::from_flat_unchecked(n, table, 0)
    }

    /// `{1, e}` with `e*e = e`.
    pub fn idempotent() -> Self {
        FiniteMonoid::from_flat_unchecked(2, vec![0, 1, 1, 1], 0)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    /// Product of a sequence, left to right.
    pub fn prod(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.unit, |acc, &x| self.mul(acc, x))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        self.elements()
            .find(|&b| self.mul(a, b) == self.unit && self.mul(b, a) == self.unit)
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Both left and right cancellative.
    pub fn is_cancellative(&self) -> bool {
        self.elements().all(|a| {
            let mut left = vec![false; self.size];
            let mut right = vec![false; self.size];
            self.elements().all(|b| {
                let l = std::mem::replace(&mut left[self.mul(a, b)], true);
                let r = std::mem::replace(&mut right[self.mul(b, a)], true);
                !l && !r
            })
        })
    }

    /// All monoid endomorphisms, in lexicographic order of image vectors.
    pub fn endomorphisms(&self) -> Vec<EndoMap> {
        let mut out = Vec::new();
        let mut images = vec![usize::MAX; self.size];
        images[self.unit] = self.unit;
        self.extend_endo(&mut images, 0, &mut out);
        out.sort();
        debug_assert!(out.iter().all(|f| f.is_endomorphism(self)));
        out
    }

    fn extend_endo(&self, images: &mut Vec<usize>, next: usize, out: &mut Vec<EndoMap>) {
        if next == self.size {
            out.push(EndoMap { images: images.clone() });
            return;
        }
        if next == self.unit {
            return self.extend_endo(images, next + 1, out);
        }
        for v in self.elements() {
            images[next] = v;
            if self.partial_hom_ok(images) {
                self.extend_endo(images, next + 1, out);
            }
        }
        images[next] = usize::MAX;
    }

    fn partial_hom_ok(&self, images: &[usize]) -> bool {
        for a in self.elements() {
            let fa = images[a];
            if fa == usize::MAX {
                continue;
            }
            for b in self.elements() {
                let fb = images[b];
                let fab = images[self.mul(a, b)];
                if fb != usize::MAX && fab != usize::MAX && fab != self.mul(fa, fb) {
                    return false;
                }
            }
        }
        true
    }

    pub fn automorphisms(&self) -> Vec<EndoMap> {
        self.endomorphisms().into_iter().filter(EndoMap::is_bijective).collect()
    }

    /// The table relabelled along the bijection `perm` (old index to new).
    pub fn relabel(&self, perm: &[usize]) -> FiniteMonoid {
        let n = self.size;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        FiniteMonoid::from_flat_unchecked(n, table, perm[self.unit])
    }

    pub(crate) fn to_raw(&self) -> RawMonoid {
        RawMonoid {
            size: self.size,
            table: self.rows(),
            unit: self.unit,
        }
    }
}

impl Serialize for FiniteMonoid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_raw().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteMonoid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawMonoid::deserialize(d)?;
        if raw.size != raw.table.len() {
            return Err(serde::de::Error::custom(format!(
                "size {} does not match {} table rows",
                raw.size,
                raw.table.len()
            )));
        }
        FiniteMonoid::new(raw.table, raw.unit).map_err(serde::de::Error::custom)
    }
}

/// A map `A -> A` given by its images. Whether it is an endomorphism is
/// checked against a monoid separately.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EndoMap {
    pub images: Vec<usize>,
}

impl EndoMap {
    pub fn identity(n: usize) -> Self {
        EndoMap {
            images: (0..n).collect(),
        }
    }

    pub fn constant(n: usize, v: usize) -> Self {
        EndoMap { images: vec![v; n] }
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &EndoMap) -> EndoMap {
        EndoMap {
            images: other.images.iter().map(|&a| self.images[a]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        self.images
            .iter()
            .all(|&v| v < seen.len() && !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective()
    }

    pub fn is_endomorphism(&self, m: &FiniteMonoid) -> bool {
        self.images.len() == m.size()
            && self.images.iter().all(|&v| v < m.size())
            && self.apply(m.unit()) == m.unit()
            && m.elements().all(|a| {
                m.elements()
                    .all(|b| self.apply(m.mul(a, b)) == m.mul(self.apply(a), self.apply(b)))
            })
    }

    /// The image set, sorted.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.images.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_bad_tables() {
        assert!(FiniteMonoid::new(vec![vec![0, 1], vec![1, 0]], 0).is_ok());
        // 1*1 = 0, so 1 is not an identity
        assert!(FiniteMonoid::new(vec![vec![0, 1], vec![1, 0]], 1).is_err());
        // 1*1 = 2, 2*x = 2 except 2*1 = 1: not associative
        let bad = vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 1, 2]];
        let err = FiniteMonoid::new(bad, 0).unwrap_err();
        assert!(err.to_string().contains("not associative"));
        assert!(FiniteMonoid::new(vec![vec![0, 2], vec![1, 0]], 0).is_err());
    }

    #[test]
    fn endomorphisms_of_small_monoids() {
        // Z/2: identity and the trivial map
        assert_eq!(FiniteMonoid::cyclic(2).endomorphisms().len(), 2);
        // {1,e}: identity and e -> 1
        assert_eq!(FiniteMonoid::idempotent().endomorphisms().len(), 2);
        // Z/3: x -> kx for k = 0, 1, 2
        assert_eq!(FiniteMonoid::cyclic(3).endomorphisms().len(), 3);
        assert_eq!(FiniteMonoid::cyclic(3).automorphisms().len(), 2);
    }

    #[test]
    fn inverses_and_flags() {
        let z2 = FiniteMonoid::cyclic(2);
        assert_eq!(z2.inverse(1), Some(1));
        assert!(z2.is_cancellative() && z2.is_commutative());
        let e = FiniteMonoid::idempotent();
        assert_eq!(e.inverse(1), None);
        assert!(!e.is_cancellative());
    }

    #[test]
    fn json_round_trip() {
        let m = FiniteMonoid::cyclic(3);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"size":3,"table":[[0,1,2],[1,2,0],[2,0,1]],"unit":0}"#);
        let back: FiniteMonoid = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }
}
