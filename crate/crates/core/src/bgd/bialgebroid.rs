use serde::Serialize;

use super::tensor::{Link, QuotientTensor};
use crate::error::SmmError;
use crate::finmon::{FiniteMonoid, SmmInstance, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
}

/// A bialgebroid whose carrier is a submonoid of its base monoid.
///
/// For a right bialgebroid the bimodule is `a₁·g·a₂ = g t(a₁) s(a₂)` and
/// `G ⊗_A G` identifies `(g s(a), h)` with `(g, h t(a))`. For a left one the
/// bimodule is `a₁·f·a₂ = s(a₁) t(a₂) f` and `F ⊗_A F` identifies
/// `(t(a) f, h)` with `(f, s(a) h)`.
#[derive(Debug, Clone)]
pub struct BialgebroidData {
    pub side: Side,
    pub base: FiniteMonoid,
    /// Sorted elements of the base monoid.
    pub carrier: Vec<usize>,
    /// Indexed by base element.
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    /// `carrier ⊗_A carrier`.
    pub tensor: QuotientTensor,
    /// Class of the coproduct, per carrier position.
    pub coproduct: Vec<usize>,
    /// Per carrier position.
    pub counit: Vec<usize>,
}

/// The operations of a bialgebroid seen as a right bialgebroid: a left
/// bialgebroid `F` is a right one on the opposite monoid with source and
/// target exchanged.
struct RightView<'a> {
    b: &'a BialgebroidData,
}

impl RightView<'_> {
    fn m(&self, x: usize, y: usize) -> usize {
        match self.b.side {
            Side::Right => self.b.base.mul(x, y),
            Side::Left => self.b.base.mul(y, x),
        }
    }
    fn s(&self, a: usize) -> usize {
        match self.b.side {
            Side::Right => self.b.source[a],
            Side::Left => self.b.target[a],
        }
    }
    fn t(&self, a: usize) -> usize {
        match self.b.side {
            Side::Right => self.b.target[a],
            Side::Left => self.b.source[a],
        }
    }
}

impl BialgebroidData {
    /// Builds the tensor square for the given structure maps; `coproduct`
    /// gives a representative pair per carrier element.
    pub fn assemble(
        side: Side,
        base: FiniteMonoid,
        carrier: Vec<usize>,
        source: Vec<usize>,
        target: Vec<usize>,
        coproduct: impl Fn(usize) -> (usize, usize),
        counit: impl Fn(usize) -> usize,
    ) -> Result<Self, SmmError> {
        let mut data = BialgebroidData {
            side,
            tensor: QuotientTensor::from_pairs(vec![], [])?,
            base,
            carrier,
            source,
            target,
            coproduct: vec![],
            counit: vec![],
        };
        data.tensor = data.tensor_power(2)?;
        data.coproduct = data
            .carrier
            .iter()
            .map(|&g| {
                let (x, y) = coproduct(g);
                data.tensor.class(&[x, y])
            })
            .collect::<Result<_, _>>()?;
        data.counit = data.carrier.iter().map(|&g| counit(g)).collect();
        Ok(data)
    }

    /// The `k`-fold tensor power over the base.
    pub fn tensor_power(&self, k: usize) -> Result<QuotientTensor, SmmError> {
        let view = RightView { b: self };
        let right = |x: usize, a: usize| view.m(x, view.s(a));
        let left = |a: usize, y: usize| view.m(y, view.t(a));
        let links: Vec<Link<'_>> = (1..k)
            .map(|_| Link {
                right: &right,
                left: &left,
            })
            .collect();
        let els: Vec<usize> = self.base.elements().collect();
        QuotientTensor::chain(vec![self.carrier.clone(); k], &els, &links)
    }

    pub fn position(&self, g: usize) -> Result<usize, SmmError> {
        self.carrier
            .binary_search(&g)
            .map_err(|_| SmmError::ElementNotInCarrier(g))
    }

    pub fn contains(&self, g: usize) -> bool {
        self.carrier.binary_search(&g).is_ok()
    }

    pub fn coproduct_class(&self, g: usize) -> Result<usize, SmmError> {
        Ok(self.coproduct[self.position(g)?])
    }

    /// All representatives `(g₁, g₂)` of the coproduct of `g`.
    pub fn legs(&self, g: usize) -> Result<Vec<(usize, usize)>, SmmError> {
        let c = self.coproduct_class(g)?;
        Ok(self.tensor.members(c).map(|p| (p[0], p[1])).collect())
    }

    pub fn counit_of(&self, g: usize) -> Result<usize, SmmError> {
        Ok(self.counit[self.position(g)?])
    }

    pub fn is_grouplike(&self, g: usize) -> bool {
        self.coproduct_class(g).ok() == self.tensor.class(&[g, g]).ok()
            && self.counit_of(g).ok() == Some(self.base.unit())
    }

    pub fn grouplikes(&self) -> Vec<usize> {
        self.carrier.iter().copied().filter(|&g| self.is_grouplike(g)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let classes: Vec<Vec<usize>> = (0..self.tensor.num_classes()).map(|c| self.tensor.rep(c)).collect();
        serde_json::json!({
            "side": self.side,
            "carrier": self.carrier,
            "source": self.source,
            "target": self.target,
            "tensor_classes": classes,
            "coproduct": self.coproduct,
            "counit": self.counit,
        })
    }
}

/// `G = μT(A)`: source `T`, target `S`, `Δ(g) = μ ⊗ μT(δgη)`, `ε(g) = εgη`.
pub fn build_g(inst: &SmmInstance) -> Result<BialgebroidData, SmmError> {
    BialgebroidData::assemble(
        Side::Right,
        inst.monoid.clone(),
        inst.g_carrier(),
        inst.t.images.clone(),
        inst.s_map().images,
        |g| {
            (
                inst.mu,
                inst.mul(inst.mu, inst.tt(inst.prod(&[inst.delta, g, inst.eta]))),
            )
        },
        |g| inst.pi(g),
    )
}

/// `F = Q(A)δ`: source `Q`, target `S`, `Δ(f) = Q(εfμ)δ ⊗ δ`, `ε(f) = εfη`.
pub fn build_f(inst: &SmmInstance) -> Result<BialgebroidData, SmmError> {
    BialgebroidData::assemble(
        Side::Left,
        inst.monoid.clone(),
        inst.f_carrier(),
        inst.q.images.clone(),
        inst.s_map().images,
        |f| {
            (
                inst.mul(inst.qq(inst.prod(&[inst.eps, f, inst.mu])), inst.delta),
                inst.delta,
            )
        },
        |f| inst.pi(f),
    )
}

/// Axiom identifiers checked by [`check_bialgebroid`], in order.
pub const BIALGEBROID_AXIOMS: [&str; 15] = [
    "unit-in-carrier",
    "closure",
    "source-hom",
    "target-antihom",
    "source-target-commute",
    "coproduct-bimodule",
    "takeuchi",
    "coassociativity",
    "counit-left",
    "counit-right",
    "counit-bimodule",
    "counit-unit",
    "counit-multiplicative",
    "coproduct-unit",
    "coproduct-multiplicative",
];

fn v(axiom: &'static str, witness: &[(&'static str, usize)]) -> Violation {
    Violation {
        axiom,
        witness: witness.to_vec(),
    }
}

/// Checks the explicit axiom list [`BIALGEBROID_AXIOMS`], pointwise, in the
/// right-bialgebroid form (left data are checked through the opposite
/// monoid). Every statement about a coproduct is checked on all of its
/// representatives.
pub fn check_bialgebroid(data: &BialgebroidData) -> Vec<Violation> {
    let mut out = Vec::new();
    let b = RightView { b: data };
    let base = &data.base;
    let one = base.unit();
    let els: Vec<usize> = base.elements().collect();
    let tens = &data.tensor;
    let cls = |x: usize, y: usize| tens.class(&[x, y]).ok();

    if !data.contains(one) {
        out.push(v("unit-in-carrier", &[]));
        return out;
    }
    for &g in &data.carrier {
        for &h in &data.carrier {
            if !data.contains(b.m(g, h)) {
                out.push(v("closure", &[("g", g), ("h", h)]));
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for &a in &els {
        if !data.contains(b.s(a)) || !data.contains(b.t(a)) {
            out.push(v("source-hom", &[("a", a)]));
            return out;
        }
    }
    if b.s(one) != one {
        out.push(v("source-hom", &[("a", one)]));
    }
    if b.t(one) != one {
        out.push(v("target-antihom", &[("a", one)]));
    }
    for &a in &els {
        for &c in &els {
            let ac = base.mul(a, c);
            if b.s(ac) != b.m(b.s(a), b.s(c)) {
                out.push(v("source-hom", &[("a", a), ("b", c)]));
            }
            if b.t(ac) != b.m(b.t(c), b.t(a)) {
                out.push(v("target-antihom", &[("a", a), ("b", c)]));
            }
            if b.m(b.s(a), b.t(c)) != b.m(b.t(c), b.s(a)) {
                out.push(v("source-target-commute", &[("a", a), ("b", c)]));
            }
        }
    }

    let Ok(cube) = data.tensor_power(3) else {
        out.push(v("coassociativity", &[]));
        return out;
    };
    let legs = |g: usize| data.legs(g).unwrap_or_default();
    let counit = |g: usize| data.counit_of(g).ok();
    let delta = |g: usize| data.coproduct_class(g).ok();

    for &g in &data.carrier {
        let gl = legs(g);
        for &a1 in &els {
            for &a2 in &els {
                let moved = b.m(b.m(g, b.t(a1)), b.s(a2));
                let target = delta(moved);
                for &(g1, g2) in &gl {
                    if cls(b.m(g1, b.t(a1)), b.m(g2, b.s(a2))) != target {
                        out.push(v("coproduct-bimodule", &[("g", g), ("a1", a1), ("a2", a2)]));
                        break;
                    }
                }
            }
            for &(g1, g2) in &gl {
                if cls(b.m(b.s(a1), g1), g2) != cls(g1, b.m(b.t(a1), g2)) {
                    out.push(v("takeuchi", &[("g", g), ("a", a1), ("g1", g1), ("g2", g2)]));
                    break;
                }
            }
        }
        // (Δ ⊗ id)Δ = (id ⊗ Δ)Δ, over all representatives of every leg
        let mut seen = None;
        let mut coassoc_ok = true;
        for &(g1, g2) in &gl {
            for (g11, g12) in legs(g1) {
                let c = cube.class(&[g11, g12, g2]).ok();
                coassoc_ok &= c.is_some() && seen.get_or_insert(c) == &c;
            }
            for (g21, g22) in legs(g2) {
                let c = cube.class(&[g1, g21, g22]).ok();
                coassoc_ok &= c.is_some() && seen.get_or_insert(c) == &c;
            }
        }
        if !coassoc_ok {
            out.push(v("coassociativity", &[("g", g)]));
        }
        for &(g1, g2) in &gl {
            match (counit(g1), counit(g2)) {
                (Some(e1), Some(e2)) => {
                    if b.m(g2, b.t(e1)) != g {
                        out.push(v("counit-left", &[("g", g), ("g1", g1), ("g2", g2)]));
                    }
                    if b.m(g1, b.s(e2)) != g {
                        out.push(v("counit-right", &[("g", g), ("g1", g1), ("g2", g2)]));
                    }
                }
                _ => out.push(v("counit-left", &[("g", g)])),
            }
        }
        for &a1 in &els {
            for &a2 in &els {
                let moved = b.m(b.m(g, b.t(a1)), b.s(a2));
                if counit(moved) != counit(g).map(|e| base.prod(&[a1, e, a2])) {
                    out.push(v("counit-bimodule", &[("g", g), ("a1", a1), ("a2", a2)]));
                }
            }
        }
        for &h in &data.carrier {
            let gh = counit(b.m(g, h));
            let e = counit(g).unwrap_or(one);
            if gh != counit(b.m(b.s(e), h)) || gh != counit(b.m(b.t(e), h)) {
                out.push(v("counit-multiplicative", &[("g", g), ("h", h)]));
            }
            let target = delta(b.m(g, h));
            'reps: for &(g1, g2) in &gl {
                for (h1, h2) in legs(h) {
                    if cls(b.m(g1, h1), b.m(g2, h2)) != target {
                        out.push(v("coproduct-multiplicative", &[("g", g), ("h", h)]));
                        break 'reps;
                    }
                }
            }
        }
    }
    if counit(one) != Some(one) {
        out.push(v("counit-unit", &[]));
    }
    if delta(one) != cls(one, one) {
        out.push(v("coproduct-unit", &[]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmon::{enumerate_monoids, enumerate_smm, FiniteMonoid};

    #[test]
    fn g_and_f_on_z2() {
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        let g = build_g(&z).unwrap();
        assert_eq!(g.carrier, vec![0, 1]);
        assert_eq!(g.tensor.num_classes(), 2);
        assert_eq!(g.counit_of(0).unwrap(), 0);
        assert!(check_bialgebroid(&g).is_empty());
        let f = build_f(&z).unwrap();
        assert!(check_bialgebroid(&f).is_empty());
        let one = SmmInstance::trivial_one();
        assert_eq!(build_f(&one).unwrap().carrier, vec![0]);
        assert_eq!(build_g(&one).unwrap().tensor.num_classes(), 1);
    }

    #[test]
    fn enumerated_instances_pass() {
        for n in 1..=3 {
            for m in enumerate_monoids(n, false).unwrap() {
                for inst in enumerate_smm(&m) {
                    assert!(check_bialgebroid(&build_g(&inst).unwrap()).is_empty());
                    assert!(check_bialgebroid(&build_f(&inst).unwrap()).is_empty());
                }
            }
        }
    }

    #[test]
    fn swapped_coproduct_breaks_coassociativity() {
        let inst = SmmInstance::trivial_on(FiniteMonoid::cyclic(3), 1).unwrap();
        for build in [build_g, build_f] {
            let mut g = build(&inst).unwrap();
            g.coproduct.swap(0, 1);
            let axioms: Vec<&str> = check_bialgebroid(&g).iter().map(|v| v.axiom).collect();
            assert!(axioms.contains(&"coassociativity"), "{axioms:?}");
        }
    }

    #[test]
    fn json_dump() {
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        let j = build_g(&z).unwrap().to_json();
        assert_eq!(j["side"], "right");
        assert_eq!(j["tensor_classes"], serde_json::json!([[0, 0], [0, 1]]));
    }
}
