use serde::Serialize;

use super::bialgebroid::{build_f, build_g, BialgebroidData};
use super::tensor::QuotientTensor;
use crate::error::SmmError;
use crate::finmon::{sorted, SmmInstance, Violation};

/// `G # F = G ⊗_{S(A)} F` with `(g # f)(g′ # f′) = g g′₂ S(⟨f₂, g′₁⟩) # f₁ f′`.
#[derive(Debug, Clone, Serialize)]
pub struct SmashProduct {
    /// Representative `(g, f)` per class.
    pub classes: Vec<(usize, usize)>,
    /// `table[x][y]` is the class of `x·y`.
    pub table: Vec<Vec<usize>>,
    pub unit: usize,
    /// `g # f ↦ gf` per class.
    pub image: Vec<usize>,
    pub violations: Vec<Violation>,
}

fn v(axiom: &'static str, witness: &[(&'static str, usize)]) -> Violation {
    Violation {
        axiom,
        witness: witness.to_vec(),
    }
}

/// `f ⇀ g = g₂ S(⟨f, g₁⟩)` on one representative of `Δ(g)`.
fn harpoon(inst: &SmmInstance, f: usize, (g1, g2): (usize, usize)) -> usize {
    inst.mul(g2, inst.s(inst.prod(&[inst.eps, f, g1, inst.eta])))
}

pub fn smash_product(inst: &SmmInstance) -> Result<SmashProduct, SmmError> {
    let g_data = build_g(inst)?;
    let f_data = build_f(inst)?;
    let s_image: Vec<usize> = sorted(inst.monoid.elements().map(|a| inst.s(a)));
    let tensor = QuotientTensor::binary(
        g_data.carrier.clone(),
        f_data.carrier.clone(),
        &s_image,
        &|g, s| inst.mul(g, s),
        &|s, f| inst.mul(s, f),
    )?;
    let mut violations = Vec::new();
    let n = tensor.num_classes();
    let mut table = vec![vec![0; n]; n];
    for (x, row) in table.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            match multiply(inst, &g_data, &f_data, &tensor, x, y) {
                Ok(c) => *cell = c,
                Err(()) => violations.push(v("smash-well-defined", &[("x", x), ("y", y)])),
            }
        }
    }
    let unit = tensor.class(&[inst.unit(), inst.unit()])?;
    for x in 0..n {
        if table[unit][x] != x || table[x][unit] != x {
            violations.push(v("smash-unit", &[("x", x)]));
        }
        for y in 0..n {
            for z in 0..n {
                if table[table[x][y]][z] != table[x][table[y][z]] {
                    violations.push(v("smash-associative", &[("x", x), ("y", y), ("z", z)]));
                }
            }
        }
    }
    let mut image = Vec::with_capacity(n);
    for c in 0..n {
        match tensor.lift(c, |p| inst.mul(p[0], p[1])) {
            Ok(a) => image.push(a),
            Err(_) => {
                violations.push(v("smash-image-well-defined", &[("class", c)]));
                image.push(inst.mul(tensor.rep(c)[0], tensor.rep(c)[1]));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if image[table[x][y]] != inst.mul(image[x], image[y]) {
                violations.push(v("smash-image-hom", &[("x", x), ("y", y)]));
            }
        }
    }
    // fg = (f₂ ⇀ g) f₁ inside A
    for &f in &f_data.carrier {
        for &g in &g_data.carrier {
            let fg = inst.mul(f, g);
            for (f1, f2) in f_data.legs(f)? {
                for leg in g_data.legs(g)? {
                    if inst.mul(harpoon(inst, f2, leg), f1) != fg {
                        violations.push(v("smash-commutation", &[("f", f), ("g", g), ("f1", f1), ("f2", f2)]));
                    }
                }
            }
        }
    }
    Ok(SmashProduct {
        classes: (0..n).map(|c| tensor.rep(c)).map(|p| (p[0], p[1])).collect(),
        table,
        unit,
        image,
        violations,
    })
}

/// The class of `x·y`, or `Err` if representatives disagree.
fn multiply(
    inst: &SmmInstance,
    g_data: &BialgebroidData,
    f_data: &BialgebroidData,
    tensor: &QuotientTensor,
    x: usize,
    y: usize,
) -> Result<usize, ()> {
    let mut result = None;
    for p in tensor.members(x) {
        let (g, f) = (p[0], p[1]);
        for q in tensor.members(y) {
            let (h, e) = (q[0], q[1]);
            for (f1, f2) in f_data.legs(f).map_err(|_| ())? {
                for leg in g_data.legs(h).map_err(|_| ())? {
                    let left = inst.mul(g, harpoon(inst, f2, leg));
                    let c = tensor.class(&[left, inst.mul(f1, e)]).map_err(|_| ())?;
                    if *result.get_or_insert(c) != c {
                        return Err(());
                    }
                }
            }
        }
    }
    result.ok_or(())
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantsReport {
    pub invariants: Vec<usize>,
    pub t_image: Vec<usize>,
}

impl InvariantsReport {
    pub fn passes(&self) -> bool {
        self.invariants == self.t_image
    }
}

/// `G^F = {g | f ⇀ g = π(f)·g for all f}` against `T(A)`, where
/// `a·g = gS(a)`. An element counts as invariant only if the condition
/// holds on every representative of its coproduct.
pub fn invariants_check(inst: &SmmInstance) -> Result<InvariantsReport, SmmError> {
    let g_data = build_g(inst)?;
    let fs = inst.f_carrier();
    let mut invariants = Vec::new();
    for &g in &g_data.carrier {
        let legs = g_data.legs(g)?;
        let inv = fs.iter().all(|&f| {
            let target = inst.mul(g, inst.s(inst.pi(f)));
            legs.iter().all(|&leg| harpoon(inst, f, leg) == target)
        });
        if inv {
            invariants.push(g);
        }
    }
    Ok(InvariantsReport {
        invariants,
        t_image: sorted(inst.monoid.elements().map(|a| inst.tt(a))),
    })
}
