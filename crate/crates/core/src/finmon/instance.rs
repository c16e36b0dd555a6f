use serde::{Deserialize, Serialize};

use super::monoid::{EndoMap, FiniteMonoid};
use crate::error::SmmError;

/// A candidate skew monoidal monoid on a finite monoid. Construction checks
/// only that `T` and `Q` are endomorphisms and the elements are in range;
/// the axioms are checked by [`check_axioms`](super::check_axioms).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SmmInstance {
    pub monoid: FiniteMonoid,
    pub t: EndoMap,
    pub q: EndoMap,
    pub mu: usize,
    pub eta: usize,
    pub delta: usize,
    pub eps: usize,
}

#[derive(Serialize, Deserialize)]
struct RawInstance {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    schema: Option<u32>,
    size: usize,
    table: Vec<Vec<usize>>,
    unit: usize,
    #[serde(rename = "T")]
    t: Vec<usize>,
    #[serde(rename = "Q")]
    q: Vec<usize>,
    mu: usize,
    eta: usize,
    delta: usize,
    eps: usize,
}

impl SmmInstance {
    pub fn new(
        monoid: FiniteMonoid,
        t: EndoMap,
        q: EndoMap,
        mu: usize,
        eta: usize,
        delta: usize,
        eps: usize,
    ) -> Result<Self, SmmError> {
        for (name, f) in [("T", &t), ("Q", &q)] {
            if !f.is_endomorphism(&monoid) {
                return Err(SmmError::InvalidInstance(format!(
                    "{name} is not a monoid endomorphism"
                )));
            }
        }
        for (name, x) in [("mu", mu), ("eta", eta), ("delta", delta), ("eps", eps)] {
            if x >= monoid.size() {
                return Err(SmmError::InvalidInstance(format!("{name} = {x} out of range")));
            }
        }
        Ok(SmmInstance {
            monoid,
            t,
            q,
            mu,
            eta,
            delta,
            eps,
        })
    }

    /// The one-element instance.
    pub fn trivial_one() -> Self {
        let m = FiniteMonoid::trivial();
        SmmInstance {
            t: EndoMap::identity(1),
            q: EndoMap::identity(1),
            monoid: m,
            mu: 0,
            eta: 0,
            delta: 0,
            eps: 0,
        }
    }

    /// The trivial instance on an abelian group with `eps = z`:
    /// `T = Q = id`, `mu = z`, `delta = eta = z⁻¹`.
    pub fn trivial_on(monoid: FiniteMonoid, z: usize) -> Option<Self> {
        let inv = monoid.inverse(z)?;
        let n = monoid.size();
        Some(SmmInstance {
            monoid,
            t: EndoMap::identity(n),
            q: EndoMap::identity(n),
            mu: z,
            eta: inv,
            delta: inv,
            eps: z,
        })
    }

    pub fn size(&self) -> usize {
        self.monoid.size()
    }

    pub fn unit(&self) -> usize {
        self.monoid.unit()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.monoid.mul(a, b)
    }

    pub fn prod(&self, xs: &[usize]) -> usize {
        self.monoid.prod(xs)
    }

    #[inline]
    pub fn tt(&self, a: usize) -> usize {
        self.t.apply(a)
    }

    #[inline]
    pub fn qq(&self, a: usize) -> usize {
        self.q.apply(a)
    }

    pub fn gamma(&self) -> usize {
        self.mul(self.mu, self.delta)
    }

    /// `S(a) = mu T(Q(a) eta)`.
    pub fn s(&self, a: usize) -> usize {
        self.mul(self.mu, self.tt(self.mul(self.qq(a), self.eta)))
    }

    /// `pi(a) = eps a eta`.
    pub fn pi(&self, a: usize) -> usize {
        self.prod(&[self.eps, a, self.eta])
    }

    /// `a ⊛ b = Q(a) T(b)`.
    pub fn skew(&self, a: usize, b: usize) -> usize {
        self.mul(self.qq(a), self.tt(b))
    }

    pub fn s_map(&self) -> EndoMap {
        EndoMap {
            images: self.monoid.elements().map(|a| self.s(a)).collect(),
        }
    }

    /// `G = mu T(A)`, sorted.
    pub fn g_carrier(&self) -> Vec<usize> {
        sorted(self.monoid.elements().map(|a| self.mul(self.mu, self.tt(a))))
    }

    /// `F = Q(A) delta`, sorted.
    pub fn f_carrier(&self) -> Vec<usize> {
        sorted(self.monoid.elements().map(|a| self.mul(self.qq(a), self.delta)))
    }

    /// Canonical ordering key for enumeration output.
    pub fn sort_key(&self) -> (Vec<usize>, Vec<usize>, [usize; 4]) {
        (
            self.t.images.clone(),
            self.q.images.clone(),
            [self.mu, self.eta, self.delta, self.eps],
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("instance serializes")
    }
}

pub(crate) fn sorted(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = it.collect();
    v.sort_unstable();
    v.dedup();
    v
}

impl Serialize for SmmInstance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RawInstance {
            schema: Some(1),
            size: self.size(),
            table: self.monoid.rows(),
            unit: self.unit(),
            t: self.t.images.clone(),
            q: self.q.images.clone(),
            mu: self.mu,
            eta: self.eta,
            delta: self.delta,
            eps: self.eps,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SmmInstance {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = RawInstance::deserialize(d)?;
        if let Some(v) = raw.schema {
            if v != 1 {
                return Err(D::Error::custom(format!("unsupported schema version {v}")));
            }
        }
        if raw.size != raw.table.len() {
            return Err(D::Error::custom(format!(
                "size {} does not match {} table rows",
                raw.size,
                raw.table.len()
            )));
        }
        let monoid = FiniteMonoid::new(raw.table, raw.unit).map_err(D::Error::custom)?;
        SmmInstance::new(
            monoid,
            EndoMap { images: raw.t },
            EndoMap { images: raw.q },
            raw.mu,
            raw.eta,
            raw.delta,
            raw.eps,
        )
        .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_format() {
        let z2 = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        let s = serde_json::to_string(&z2).unwrap();
        assert_eq!(
            s,
            r#"{"schema":1,"size":2,"table":[[0,1],[1,0]],"unit":0,"T":[0,1],"Q":[0,1],"mu":1,"eta":1,"delta":1,"eps":1}"#
        );
        let back: SmmInstance = serde_json::from_str(&s).unwrap();
        assert_eq!(back, z2);
        // schema field is optional on input
        let bare = r#"{"size":1,"table":[[0]],"unit":0,"T":[0],"Q":[0],"mu":0,"eta":0,"delta":0,"eps":0}"#;
        assert_eq!(
            serde_json::from_str::<SmmInstance>(bare).unwrap(),
            SmmInstance::trivial_one()
        );
    }

    #[test]
    fn rejects_non_endomorphism() {
        let bad = r#"{"size":2,"table":[[0,1],[1,0]],"unit":0,"T":[1,1],"Q":[0,1],"mu":0,"eta":0,"delta":0,"eps":0}"#;
        let err = serde_json::from_str::<SmmInstance>(bad).unwrap_err();
        assert!(err.to_string().contains("T is not a monoid endomorphism"));
    }
}
