use std::collections::HashMap;

use serde::Serialize;

use super::aset::{enumerate_asets, equivariant_maps, FiniteASet};
use super::product::{compose, identity, product_map, skew_product, SkewProduct};
use crate::bgd::{build_g, BialgebroidData};
use crate::error::SmmError;
use crate::finmon::{SmmInstance, Violation};

/// Right `A`-sets built up by skew products, interned so that components
/// between nested products can be compared as index maps.
pub struct SkewSetCategory<'a> {
    pub inst: &'a SmmInstance,
    g: BialgebroidData,
    objects: Vec<FiniteASet>,
    index: HashMap<FiniteASet, usize>,
    products: HashMap<(usize, usize), usize>,
    tables: Vec<SkewProduct>,
    gammas: HashMap<(usize, usize, usize), Vec<usize>>,
    unit: usize,
}

impl<'a> SkewSetCategory<'a> {
    pub fn new(inst: &'a SmmInstance) -> Result<Self, SmmError> {
        let mut c = SkewSetCategory {
            inst,
            g: build_g(inst)?,
            objects: vec![],
            index: HashMap::new(),
            products: HashMap::new(),
            tables: vec![],
            gammas: HashMap::new(),
            unit: 0,
        };
        c.unit = c.intern(FiniteASet::regular(&inst.monoid));
        Ok(c)
    }

    pub fn intern(&mut self, x: FiniteASet) -> usize {
        if let Some(&i) = self.index.get(&x) {
            return i;
        }
        self.objects.push(x.clone());
        self.index.insert(x, self.objects.len() - 1);
        self.objects.len() - 1
    }

    pub fn object(&self, id: usize) -> &FiniteASet {
        &self.objects[id]
    }

    /// The regular module `R`.
    pub fn unit(&self) -> usize {
        self.unit
    }

    /// `x ⊛ y` as an object id.
    pub fn tensor(&mut self, x: usize, y: usize) -> Result<usize, SmmError> {
        let t = self.product(x, y)?;
        Ok(self.index[&self.tables[t].aset])
    }

    /// Index into the product table for `x ⊛ y`.
    fn product(&mut self, x: usize, y: usize) -> Result<usize, SmmError> {
        if let Some(&t) = self.products.get(&(x, y)) {
            return Ok(t);
        }
        let p = skew_product(&self.objects[x], &self.objects[y], self.inst)?;
        self.intern(p.aset.clone());
        self.tables.push(p);
        let t = self.tables.len() - 1;
        self.products.insert((x, y), t);
        Ok(t)
    }

    pub fn product_table(&mut self, x: usize, y: usize) -> Result<&SkewProduct, SmmError> {
        let t = self.product(x, y)?;
        Ok(&self.tables[t])
    }

    /// `f ⊛ g` for `f: x → x′`, `g: y → y′`.
    pub fn tensor_arrows(
        &mut self,
        (x, x2, f): (usize, usize, &[usize]),
        (y, y2, g): (usize, usize, &[usize]),
    ) -> Result<Vec<usize>, SmmError> {
        let d = self.product(x, y)?;
        let c = self.product(x2, y2)?;
        product_map(&self.tables[d], &self.tables[c], f, g)
    }

    fn id_of(&self, x: usize) -> Vec<usize> {
        identity(self.objects[x].size)
    }

    /// `γ_{L,M,N}: L⊛(M⊛N) → (L⊛M)⊛N`, `[l,[m,n,g],h] ↦ [[l,m,h₁],n,gh₂]`,
    /// checked on every representative and every coproduct leg.
    pub fn gamma(&mut self, l: usize, m: usize, n: usize) -> Result<Vec<usize>, SmmError> {
        if let Some(v) = self.gammas.get(&(l, m, n)) {
            return Ok(v.clone());
        }
        let mn = self.tensor(m, n)?;
        let lm = self.tensor(l, m)?;
        let dom = self.product(l, mn)?;
        let inner = self.product(m, n)?;
        let left = self.product(l, m)?;
        let cod = self.product(lm, n)?;
        let (dom, inner, left, cod) = (
            &self.tables[dom],
            &self.tables[inner],
            &self.tables[left],
            &self.tables[cod],
        );
        let mut out = Vec::with_capacity(dom.size());
        for c in 0..dom.size() {
            let mut value = None;
            for (x, y, h) in dom.members(c) {
                let legs = self.g.legs(h)?;
                for (mm, nn, g) in inner.members(y) {
                    for &(h1, h2) in &legs {
                        let first = left.class(x, mm, h1)?;
                        let r = cod.class(first, nn, self.inst.mul(g, h2))?;
                        if *value.get_or_insert(r) != r {
                            return Err(SmmError::IllDefined(format!("gamma at class {c} of ({l},{m},{n})")));
                        }
                    }
                }
            }
            out.push(value.expect("classes are non-empty"));
        }
        self.gammas.insert((l, m, n), out.clone());
        Ok(out)
    }

    /// `η_M: M → R⊛M`, `m ↦ [1, m, 1]`.
    pub fn eta(&mut self, m: usize) -> Result<Vec<usize>, SmmError> {
        let one = self.inst.unit();
        let t = self.product(self.unit, m)?;
        (0..self.objects[m].size)
            .map(|x| self.tables[t].class(one, x, one))
            .collect()
    }

    /// `ε_M: M⊛R → M`, `[m, a, g] ↦ m·π(T(a)g)`.
    pub fn eps(&mut self, m: usize) -> Result<Vec<usize>, SmmError> {
        let t = self.product(m, self.unit)?;
        let obj = &self.objects[m];
        let inst = self.inst;
        let p = &self.tables[t];
        (0..p.size())
            .map(|c| {
                p.classes
                    .lift(c, |t| obj.act(t[0], inst.pi(inst.mul(inst.tt(t[1]), t[2]))))
                    .map_err(|(a, b)| SmmError::IllDefined(format!("eps on {a:?} and {b:?}")))
            })
            .collect()
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CoherenceReport {
    pub objects: usize,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl CoherenceReport {
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

    fn result<T>(
        &mut self,
        r: Result<T, SmmError>,
        axiom: &'static str,
        witness: &[(&'static str, usize)],
    ) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(_) => {
                self.check(false, axiom, witness);
                None
            }
        }
    }
}

/// Components and axioms for one triple: the components are equivariant,
/// and the three-object axioms hold. `R` is used for the unit slots.
pub fn coherence_components(
    cat: &mut SkewSetCategory<'_>,
    l: usize,
    m: usize,
    n: usize,
) -> Result<CoherenceReport, SmmError> {
    let mut rep = CoherenceReport::default();
    triple_axioms(cat, l, m, n, &mut rep)?;
    Ok(rep)
}

fn triple_axioms(
    cat: &mut SkewSetCategory<'_>,
    l: usize,
    m: usize,
    n: usize,
    rep: &mut CoherenceReport,
) -> Result<(), SmmError> {
    let r = cat.unit();
    let w = [("L", l), ("M", m), ("N", n)];
    let Some(gamma) = rep.result(cat.gamma(l, m, n), "gamma-well-defined", &w) else {
        return Ok(());
    };
    let dom = cat.tensor(m, n).and_then(|mn| cat.tensor(l, mn))?;
    let cod = cat.tensor(l, m).and_then(|lm| cat.tensor(lm, n))?;
    rep.check(
        cat.object(dom).is_equivariant(cat.object(cod), &gamma),
        "gamma-equivariant",
        &w,
    );
    for x in [m, n] {
        let rx = cat.tensor(r, x)?;
        let xr = cat.tensor(x, r)?;
        if let Some(eta) = rep.result(cat.eta(x), "eta-well-defined", &[("M", x)]) {
            rep.check(
                cat.object(x).is_equivariant(cat.object(rx), &eta),
                "eta-equivariant",
                &[("M", x)],
            );
        }
        if let Some(eps) = rep.result(cat.eps(x), "eps-well-defined", &[("M", x)]) {
            rep.check(
                cat.object(xr).is_equivariant(cat.object(x), &eps),
                "eps-equivariant",
                &[("M", x)],
            );
        }
    }
    let w2 = [("M", m), ("N", n)];
    let mn = cat.tensor(m, n)?;
    // ε_{M⊛N} ∘ γ_{M,N,R} = M ⊛ ε_N
    let lhs = compose(&cat.eps(mn)?, &cat.gamma(m, n, r)?);
    let nr = cat.tensor(n, r)?;
    let eps_n = cat.eps(n)?;
    let rhs = cat.tensor_arrows((m, m, &cat.id_of(m)), (nr, n, &eps_n))?;
    rep.check(lhs == rhs, "unit-gamma-eps", &w2);
    // γ_{R,M,N} ∘ η_{M⊛N} = η_M ⊛ N
    let lhs = compose(&cat.gamma(r, m, n)?, &cat.eta(mn)?);
    let rm = cat.tensor(r, m)?;
    let eta_m = cat.eta(m)?;
    let rhs = cat.tensor_arrows((m, rm, &eta_m), (n, n, &cat.id_of(n)))?;
    rep.check(lhs == rhs, "unit-gamma-eta", &w2);
    // (ε_M ⊛ N) ∘ γ_{M,R,N} ∘ (M ⊛ η_N) = id
    let rn = cat.tensor(r, n)?;
    let mr = cat.tensor(m, r)?;
    let eta_n = cat.eta(n)?;
    let eps_m = cat.eps(m)?;
    let into = cat.tensor_arrows((m, m, &cat.id_of(m)), (n, rn, &eta_n))?;
    let out = cat.tensor_arrows((mr, m, &eps_m), (n, n, &cat.id_of(n)))?;
    let lhs = compose(&out, &compose(&cat.gamma(m, r, n)?, &into));
    rep.check(lhs == identity(cat.object(mn).size), "unit-middle", &w2);
    Ok(())
}

/// `γ_{K⊛L,M,N} ∘ γ_{K,L,M⊛N} = (γ_{K,L,M} ⊛ N) ∘ γ_{K,L⊛M,N} ∘ (K ⊛ γ_{L,M,N})`.
pub fn pentagon(cat: &mut SkewSetCategory<'_>, k: usize, l: usize, m: usize, n: usize) -> Result<bool, SmmError> {
    let kl = cat.tensor(k, l)?;
    let mn = cat.tensor(m, n)?;
    let lm = cat.tensor(l, m)?;
    let lhs = compose(&cat.gamma(kl, m, n)?, &cat.gamma(k, l, mn)?);
    let l_mn = cat.tensor(l, mn)?;
    let lm_n = cat.tensor(lm, n)?;
    let k_lm = cat.tensor(k, lm)?;
    let kl_m = cat.tensor(kl, m)?;
    let inner = cat.gamma(l, m, n)?;
    let outer = cat.gamma(k, l, m)?;
    let first = cat.tensor_arrows((k, k, &cat.id_of(k)), (l_mn, lm_n, &inner))?;
    let last = cat.tensor_arrows((k_lm, kl_m, &outer), (n, n, &cat.id_of(n)))?;
    let rhs = compose(&last, &compose(&cat.gamma(k, lm, n)?, &first));
    Ok(lhs == rhs)
}

/// Naturality of `γ` in each slot, and of `η` and `ε`, along `f: x → x′`.
fn naturality(
    cat: &mut SkewSetCategory<'_>,
    (x, x2, f): (usize, usize, &[usize]),
    others: &[usize],
    rep: &mut CoherenceReport,
) -> Result<(), SmmError> {
    let r = cat.unit();
    let w = [("X", x), ("X'", x2)];
    let lhs = compose(&cat.eta(x2)?, f);
    let rhs = compose(&cat.tensor_arrows((r, r, &cat.id_of(r)), (x, x2, f))?, &cat.eta(x)?);
    rep.check(lhs == rhs, "eta-natural", &w);
    let fr = cat.tensor_arrows((x, x2, f), (r, r, &cat.id_of(r)))?;
    rep.check(
        compose(&cat.eps(x2)?, &fr) == compose(f, &cat.eps(x)?),
        "eps-natural",
        &w,
    );
    for &a in others {
        for &b in others {
            let w = [("X", x), ("X'", x2), ("A", a), ("B", b)];
            let (ia, ib) = (cat.id_of(a), cat.id_of(b));
            // slot 1: γ_{X′,A,B} ∘ (f ⊛ (A⊛B)) = ((f⊛A)⊛B) ∘ γ_{X,A,B}
            let ab = cat.tensor(a, b)?;
            let lhs = compose(
                &cat.gamma(x2, a, b)?,
                &cat.tensor_arrows((x, x2, f), (ab, ab, &cat.id_of(ab)))?,
            );
            let fa = cat.tensor_arrows((x, x2, f), (a, a, &ia))?;
            let (xa, x2a) = (cat.tensor(x, a)?, cat.tensor(x2, a)?);
            let rhs = compose(&cat.tensor_arrows((xa, x2a, &fa), (b, b, &ib))?, &cat.gamma(x, a, b)?);
            rep.check(lhs == rhs, "gamma-natural", &w);
            // slot 2: γ_{A,X′,B} ∘ (A ⊛ (f⊛B)) = ((A⊛f)⊛B) ∘ γ_{A,X,B}
            let fb = cat.tensor_arrows((x, x2, f), (b, b, &ib))?;
            let (xb, x2b) = (cat.tensor(x, b)?, cat.tensor(x2, b)?);
            let lhs = compose(&cat.gamma(a, x2, b)?, &cat.tensor_arrows((a, a, &ia), (xb, x2b, &fb))?);
            let af = cat.tensor_arrows((a, a, &ia), (x, x2, f))?;
            let (ax, ax2) = (cat.tensor(a, x)?, cat.tensor(a, x2)?);
            let rhs = compose(&cat.tensor_arrows((ax, ax2, &af), (b, b, &ib))?, &cat.gamma(a, x, b)?);
            rep.check(lhs == rhs, "gamma-natural", &w);
            // slot 3: γ_{A,B,X′} ∘ (A ⊛ (B⊛f)) = ((A⊛B)⊛f) ∘ γ_{A,B,X}
            let bf = cat.tensor_arrows((b, b, &ib), (x, x2, f))?;
            let (bx, bx2) = (cat.tensor(b, x)?, cat.tensor(b, x2)?);
            let lhs = compose(&cat.gamma(a, b, x2)?, &cat.tensor_arrows((a, a, &ia), (bx, bx2, &bf))?);
            let abx = cat.tensor(a, b)?;
            let rhs = compose(
                &cat.tensor_arrows((abx, abx, &cat.id_of(abx)), (x, x2, f))?,
                &cat.gamma(a, b, x)?,
            );
            rep.check(lhs == rhs, "gamma-natural", &w);
        }
    }
    Ok(())
}

/// All skew monoidal axioms and naturalities over the right `A`-sets of size
/// at most `max` (up to isomorphism): three-object axioms on all triples,
/// the pentagon on all quadruples, `ε_R ∘ η_R = id`, and naturality along
/// every equivariant map between universe objects.
pub fn coherence_sweep(inst: &SmmInstance, max: usize) -> Result<CoherenceReport, SmmError> {
    let mut cat = SkewSetCategory::new(inst)?;
    let universe: Vec<usize> = enumerate_asets(&inst.monoid, max)?
        .into_iter()
        .map(|x| cat.intern(x))
        .collect();
    let mut rep = CoherenceReport {
        objects: universe.len(),
        ..Default::default()
    };
    let r = cat.unit();
    let unit_ok = compose(&cat.eps(r)?, &cat.eta(r)?) == cat.id_of(r);
    rep.check(unit_ok, "unit-unit", &[]);
    for &l in &universe {
        for &m in &universe {
            for &n in &universe {
                triple_axioms(&mut cat, l, m, n, &mut rep)?;
                for &k in &universe {
                    let ok = pentagon(&mut cat, k, l, m, n);
                    let ok = rep.result(ok, "gamma-well-defined", &[("K", k), ("L", l), ("M", m), ("N", n)]);
                    if let Some(ok) = ok {
                        rep.check(ok, "pentagon", &[("K", k), ("L", l), ("M", m), ("N", n)]);
                    }
                }
            }
        }
    }
    for &x in &universe {
        for &x2 in &universe {
            let maps = equivariant_maps(cat.object(x), cat.object(x2));
            for f in maps {
                naturality(&mut cat, (x, x2, &f), &universe, &mut rep)?;
            }
        }
    }
    Ok(rep)
}
