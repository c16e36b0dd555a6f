use serde::Serialize;

use super::bialgebroid::{build_f, build_g, BialgebroidData};
use crate::error::SmmError;
use crate::finmon::{SmmInstance, Violation};

/// `⟨f, g⟩ = εfgη` for `f ∈ F`, `g ∈ G`.
pub fn pairing(inst: &SmmInstance, f: usize, g: usize) -> Result<usize, SmmError> {
    if inst.f_carrier().binary_search(&f).is_err() {
        return Err(SmmError::ElementNotInCarrier(f));
    }
    if inst.g_carrier().binary_search(&g).is_err() {
        return Err(SmmError::ElementNotInCarrier(g));
    }
    Ok(inst.prod(&[inst.eps, f, g, inst.eta]))
}

/// Rows indexed by `F`, columns by `G`, both in carrier order.
pub fn pairing_matrix(inst: &SmmInstance) -> Vec<Vec<usize>> {
    let gs = inst.g_carrier();
    inst.f_carrier()
        .iter()
        .map(|&f| gs.iter().map(|&g| inst.prod(&[inst.eps, f, g, inst.eta])).collect())
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct PairingReport {
    pub matrix: Vec<Vec<usize>>,
    pub non_degenerate: bool,
    pub violations: Vec<Violation>,
}

impl PairingReport {
    pub fn passes(&self) -> bool {
        self.non_degenerate && self.violations.is_empty()
    }
}

fn v(axiom: &'static str, witness: &[(&'static str, usize)]) -> Violation {
    Violation {
        axiom,
        witness: witness.to_vec(),
    }
}

/// Checks the six pairing identities on every pair and every representative
/// of the coproduct legs, with `a₁·g·a₂ = gS(a₁)T(a₂)` on `G`,
/// `a₁·f·a₂ = Q(a₁)S(a₂)f` on `F`, and non-degeneracy on both sides.
pub fn pairing_property_check(inst: &SmmInstance) -> Result<PairingReport, SmmError> {
    let g_data = build_g(inst)?;
    let f_data = build_f(inst)?;
    Ok(check_with(inst, &f_data, &g_data))
}

fn check_with(inst: &SmmInstance, f_data: &BialgebroidData, g_data: &BialgebroidData) -> PairingReport {
    let p = |f: usize, g: usize| inst.prod(&[inst.eps, f, g, inst.eta]);
    let els: Vec<usize> = inst.monoid.elements().collect();
    let one = inst.unit();
    let mut out = Vec::new();
    for &f in &f_data.carrier {
        let f_legs = f_data.legs(f).unwrap_or_default();
        for &g in &g_data.carrier {
            let g_legs = g_data.legs(g).unwrap_or_default();
            for &a1 in &els {
                for &a2 in &els {
                    let ag = inst.prod(&[g, inst.s(a1), inst.tt(a2)]);
                    if p(f, ag) != inst.mul(p(inst.mul(f, inst.qq(a1)), g), a2) {
                        out.push(v("pairing-G-bimodule", &[("f", f), ("g", g), ("a1", a1), ("a2", a2)]));
                    }
                    let af = inst.prod(&[inst.qq(a1), inst.s(a2), f]);
                    if p(af, g) != inst.mul(a1, p(f, inst.mul(inst.tt(a2), g))) {
                        out.push(v("pairing-F-bimodule", &[("f", f), ("g", g), ("a1", a1), ("a2", a2)]));
                    }
                }
            }
            for &h in &g_data.carrier {
                let lhs = p(f, inst.mul(g, h));
                for &(f1, f2) in &f_legs {
                    let moved = inst.mul(inst.s(p(f2, g)), f1);
                    if p(moved, h) != lhs {
                        out.push(v(
                            "pairing-G-mul",
                            &[("f", f), ("g", g), ("g'", h), ("f1", f1), ("f2", f2)],
                        ));
                    }
                }
            }
            for &e in &f_data.carrier {
                let lhs = p(inst.mul(f, e), g);
                for &(g1, g2) in &g_legs {
                    let moved = inst.mul(g2, inst.s(p(e, g1)));
                    if p(f, moved) != lhs {
                        out.push(v(
                            "pairing-F-mul",
                            &[("f", f), ("f'", e), ("g", g), ("g1", g1), ("g2", g2)],
                        ));
                    }
                }
            }
            if g == one && p(f, one) != inst.pi(f) {
                out.push(v("pairing-G-unit", &[("f", f)]));
            }
            if f == one && p(one, g) != inst.pi(g) {
                out.push(v("pairing-F-unit", &[("g", g)]));
            }
        }
    }
    let matrix = pairing_matrix(inst);
    let distinct = |rows: Vec<Vec<usize>>| {
        let n = rows.len();
        let mut rows = rows;
        rows.sort();
        rows.dedup();
        rows.len() == n
    };
    let cols: Vec<Vec<usize>> = (0..g_data.carrier.len())
        .map(|j| matrix.iter().map(|row| row[j]).collect())
        .collect();
    let non_degenerate = distinct(matrix.clone()) && distinct(cols);
    PairingReport {
        matrix,
        non_degenerate,
        violations: out,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmon::{enumerate_monoids, enumerate_smm, FiniteMonoid};

    #[test]
    fn z2_table() {
        let z = SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap();
        // ε f g η = g·f·g·g = f·g in Z/2
        assert_eq!(pairing_matrix(&z), vec![vec![0, 1], vec![1, 0]]);
        let r = pairing_property_check(&z).unwrap();
        assert!(r.passes(), "{r:?}");
        assert_eq!(pairing(&z, 0, 0).unwrap(), 0);
    }

    #[test]
    fn unit_pairs_to_unit() {
        let one = SmmInstance::trivial_one();
        assert_eq!(pairing(&one, 0, 0).unwrap(), 0);
    }

    #[test]
    fn all_enumerated_instances() {
        for n in 1..=3 {
            for m in enumerate_monoids(n, false).unwrap() {
                for inst in enumerate_smm(&m) {
                    assert!(pairing_property_check(&inst).unwrap().passes());
                }
            }
        }
    }

    #[test]
    fn rejects_elements_outside_carriers() {
        let mut z = SmmInstance::trivial_on(FiniteMonoid::idempotent(), 0).unwrap();
        assert!(pairing(&z, 1, 0).is_ok());
        // shrinking G to {1} by making μ absorbing is not an SMM, but the
        // carrier check alone must reject 0 ∉ G
        z.mu = 1;
        z.t = crate::finmon::EndoMap::constant(2, 1);
        assert_eq!(pairing(&z, 0, 0), Err(SmmError::ElementNotInCarrier(0)));
    }
}
