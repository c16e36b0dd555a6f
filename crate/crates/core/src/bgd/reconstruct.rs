//! From a source-regular right bialgebroid back to a skew monoidal monoid.
//!
//! The right adjoint of the source map is data: a monoid morphism
//! `s_G: G → A` with unit `η ∈ A` and counit `μ ∈ G`. The dual `F` is
//! identified with `A` through `J(f) = ⟨f, μ⟩`, so `⟨f_j, g⟩ = j·s_G(g)·η`
//! and the product of `F` becomes `j ⋆ j′ = J(f_j f_j′)`.

use serde::Serialize;

use super::bialgebroid::{build_g, BialgebroidData};
use super::iso::{check_bialgebroid_morphism, SmmIso};
use crate::error::SmmError;
use crate::finmon::{check_axioms, EndoMap, SmmInstance, Violation};
use crate::term::Presentation;

/// A right adjoint of the source map: `s_g[i]` is `s_G(carrier[i])`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjunctionData {
    pub s_g: Vec<usize>,
    pub mu: usize,
    pub eta: usize,
}

impl AdjunctionData {
    fn apply(&self, g: &BialgebroidData, x: usize) -> usize {
        self.s_g[g.position(x).expect("element of G")]
    }
}

/// The inclusion `G ⊂ A` with the instance's own `μ` and `η`.
pub fn inclusion(g: &BialgebroidData, inst: &SmmInstance) -> AdjunctionData {
    AdjunctionData {
        s_g: g.carrier.clone(),
        mu: inst.mu,
        eta: inst.eta,
    }
}

/// Checks that `s_G` is a monoid morphism and that `η`, `μ` satisfy the
/// naturality and triangle laws of an adjunction `s^G ⊣ s_G`.
pub fn validate(g: &BialgebroidData, adj: &AdjunctionData) -> Result<(), SmmError> {
    let a = &g.base;
    let fail = |what: String| Err(SmmError::AdjunctionInvalid(what));
    if adj.s_g.len() != g.carrier.len() || adj.s_g.iter().any(|&x| x >= a.size()) || adj.eta >= a.size() {
        return fail("shape".into());
    }
    if !g.contains(adj.mu) {
        return fail(format!("counit {} is not in G", adj.mu));
    }
    let sg = |x: usize| adj.apply(g, x);
    let src = |x: usize| g.source[x];
    if sg(a.unit()) != a.unit() {
        return fail("s_G does not preserve the unit".into());
    }
    for &x in &g.carrier {
        for &y in &g.carrier {
            if sg(a.mul(x, y)) != a.mul(sg(x), sg(y)) {
                return fail(format!("s_G is not multiplicative at ({x}, {y})"));
            }
        }
        if a.mul(adj.mu, src(sg(x))) != a.mul(x, adj.mu) {
            return fail(format!("counit is not natural at {x}"));
        }
    }
    for x in a.elements() {
        if a.mul(adj.eta, x) != a.mul(sg(src(x)), adj.eta) {
            return fail(format!("unit is not natural at {x}"));
        }
    }
    if a.mul(adj.mu, src(adj.eta)) != a.unit() {
        return fail("triangle identity at the source fails".into());
    }
    if a.mul(sg(adj.mu), adj.eta) != a.unit() {
        return fail("triangle identity at s_G fails".into());
    }
    Ok(())
}

/// All adjunction data for `G`, by exhaustive search over monoid morphisms
/// `G → A` and elements `μ`, `η`.
pub fn search_adjunctions(g: &BialgebroidData) -> Vec<AdjunctionData> {
    let a = &g.base;
    let k = g.carrier.len();
    let n = a.size();
    let mut out = Vec::new();
    let total = n.checked_pow(k as u32).unwrap_or(usize::MAX);
    for code in 0..total {
        let s_g: Vec<usize> = (0..k).map(|i| code / n.pow(i as u32) % n).collect();
        for &mu in &g.carrier {
            for eta in a.elements() {
                let adj = AdjunctionData {
                    s_g: s_g.clone(),
                    mu,
                    eta,
                };
                if validate(g, &adj).is_ok() {
                    out.push(adj);
                }
            }
        }
    }
    out
}

/// The reconstructed instance together with the intermediate maps.
#[derive(Debug, Clone, Serialize)]
pub struct Reconstruction {
    #[serde(skip)]
    pub instance: SmmInstance,
    /// `j ⋆ j′`, the monoid `F` transported to `A` along `J`.
    pub f_table: Vec<Vec<usize>>,
    /// `J(t_F(a))`.
    pub t_f: Vec<usize>,
}

pub fn reconstruct_smm(g: &BialgebroidData, adj: &AdjunctionData) -> Result<Reconstruction, SmmError> {
    validate(g, adj)?;
    let a = &g.base;
    let sg = |x: usize| adj.apply(g, x);
    let src = |x: usize| g.source[x];
    let mut hit = vec![false; a.size()];
    for x in a.elements() {
        let y = a.mul(adj.mu, src(x));
        if !g.contains(y) || std::mem::replace(&mut hit[y], true) {
            return Err(SmmError::NotSourceRegular(format!(
                "a ↦ μ·s(a) is not injective at {x}"
            )));
        }
    }
    if g.carrier.len() != a.size() {
        return Err(SmmError::NotSourceRegular("a ↦ μ·s(a) is not onto G".into()));
    }
    let mu_legs = g.legs(adj.mu)?;
    let star = |j: usize, k: usize| -> Result<usize, SmmError> {
        let mut value = None;
        for &(g1, g2) in &mu_legs {
            let moved = a.mul(g2, g.target[a.prod(&[k, sg(g1), adj.eta])]);
            let r = a.prod(&[j, sg(moved), adj.eta]);
            if *value.get_or_insert(r) != r {
                return Err(SmmError::IllDefined(format!("{j} ⋆ {k} depends on the legs of Δ(μ)")));
            }
        }
        Ok(value.expect("coproduct classes are non-empty"))
    };
    let f_table: Vec<Vec<usize>> = a
        .elements()
        .map(|j| a.elements().map(|k| star(j, k)).collect())
        .collect::<Result<_, _>>()?;
    let eps = g.counit_of(adj.mu)?;
    let q: Vec<usize> = a.elements().map(|x| f_table[a.unit()][a.mul(x, eps)]).collect();
    let delta = f_table[a.unit()][a.unit()];
    let t: Vec<usize> = a.elements().map(|x| sg(src(x))).collect();
    let t_f: Vec<usize> = a
        .elements()
        .map(|x| g.counit_of(a.mul(src(x), adj.mu)))
        .collect::<Result<_, _>>()?;
    for x in a.elements() {
        if f_table[a.unit()][t_f[x]] != sg(g.target[x]) {
            return Err(SmmError::AdjunctionInvalid(format!("s^F t_F ≠ s_G t^G at {x}")));
        }
    }
    let instance = SmmInstance::new(
        a.clone(),
        EndoMap { images: t },
        EndoMap { images: q },
        sg(adj.mu),
        adj.eta,
        delta,
        eps,
    )?;
    if let Some(bad) = check_axioms(&instance, Presentation::MuDelta).first() {
        return Err(SmmError::InvalidInstance(format!(
            "reconstructed tuple fails {}",
            bad.axiom
        )));
    }
    Ok(Reconstruction { instance, f_table, t_f })
}

/// The iso `φ(a) = zaz⁻¹`, `φ₂ = Q′(z⁻¹)T′(z⁻¹)`, `φ₀ = z` from the
/// reconstruction to the original instance, where `z` is the invertible
/// comparison between `s_G` and the inclusion: `z·s_G(g) = g·z`,
/// `μ′·T′(z) = μ` and `zη = η′`.
pub fn reconstruction_iso(g: &BialgebroidData, adj: &AdjunctionData, original: &SmmInstance) -> Option<SmmIso> {
    let a = &g.base;
    let z = a.elements().find(|&z| {
        a.inverse(z).is_some()
            && g.carrier.iter().all(|&x| a.mul(z, adj.apply(g, x)) == a.mul(x, z))
            && a.mul(original.mu, g.source[z]) == adj.mu
            && a.mul(z, adj.eta) == original.eta
    })?;
    let zi = a.inverse(z)?;
    Some(SmmIso {
        phi: a.elements().map(|x| a.prod(&[z, x, zi])).collect(),
        phi2: a.mul(original.qq(zi), original.tt(zi)),
        phi0: z,
    })
}

/// Checks that `s_G`, restricted to its image, is a bialgebroid isomorphism
/// from `G` onto the bialgebroid of the reconstructed instance.
pub fn g_round_trip(g: &BialgebroidData, adj: &AdjunctionData) -> Result<Vec<Violation>, SmmError> {
    let rec = reconstruct_smm(g, adj)?;
    let g2 = build_g(&rec.instance)?;
    let map = |x: usize| adj.apply(g, x);
    Ok(check_bialgebroid_morphism(g, &g2, &map, &|x| x))
}
