//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the verdicts are printed even when everything passes.

use std::process::ExitCode;
use std::time::Instant;

use smm_core::bgd::{
    build_f, build_g, check_bialgebroid, check_smm_iso, g_round_trip, grouplike_bijection_check, inclusion,
    invariants_check, pairing_property_check, reconstruct_smm, reconstruction_iso,
};
use smm_core::finmon::{
    enumerate_monoids, enumerate_smm, find_countermodel, instance_universe, is_trivial, mimosa_report, SmmInstance,
};
use smm_core::modcat::{
    classify_source_regular, comonoid_check, monoid_check, representable_check, strict_monoidal_check, ElementCategory,
};
use smm_core::skewset::{skewset_report, MAX_ASET_SIZE};
use smm_core::term::{identity_suite, Budget, Derivation, SuiteRecord};

type Outcome = Result<String, String>;

fn universe() -> Vec<SmmInstance> {
    instance_universe(4).expect("universe")
}

fn first_failure<T>(items: &[T], mut bad: impl FnMut(&T) -> Option<String>) -> Option<String> {
    items
        .iter()
        .enumerate()
        .find_map(|(k, x)| bad(x).map(|why| format!("instance {k}: {why}")))
}

fn triviality(universe: &[SmmInstance]) -> Outcome {
    if let Some(why) = first_failure(universe, |inst| {
        let r = mimosa_report(inst);
        if !is_trivial(inst) || !r.trivial {
            Some("not trivial".into())
        } else if !r.consistent() {
            Some(format!("inconsistent flags {:?}", r.findings))
        } else {
            None
        }
    }) {
        return Err(why);
    }
    Ok(format!("{} instances, all trivial", universe.len()))
}

/// Every tuple `(T, Q, μ, η, δ, ε)` with `T`, `Q` arbitrary maps, checked
/// against the axioms as written.
fn oracle_count(table: &[Vec<usize>]) -> usize {
    let n = table.len();
    let m = |a: usize, b: usize| table[a][b];
    let p = |xs: &[usize]| xs.iter().fold(0, |acc, &x| m(acc, x));
    let maps: Vec<Vec<usize>> = (0..n.pow(n as u32))
        .map(|c| (0..n).map(|i| c / n.pow(i as u32) % n).collect())
        .collect();
    let is_hom = |f: &Vec<usize>| f[0] == 0 && (0..n).all(|a| (0..n).all(|b| f[m(a, b)] == m(f[a], f[b])));
    let mut count = 0;
    for t in &maps {
        for q in &maps {
            if !is_hom(t) || !is_hom(q) {
                continue;
            }
            for code in 0..n.pow(4) {
                let [mu, eta, delta, eps] = [0, 1, 2, 3].map(|i| code / n.pow(i) % n);
                let all = |f: &dyn Fn(usize) -> bool| (0..n).all(f);
                let ok = all(&|a| p(&[mu, t[t[a]]]) == p(&[t[a], mu]))
                    && all(&|a| p(&[eta, a]) == p(&[t[a], eta]))
                    && all(&|a| p(&[delta, q[a]]) == p(&[q[q[a]], delta]))
                    && all(&|a| p(&[a, eps]) == p(&[eps, q[a]]))
                    && all(&|a| p(&[mu, delta, t[q[a]]]) == p(&[q[t[a]], mu, delta]))
                    && all(&|a| all(&|b| m(t[a], q[b]) == m(q[b], t[a])))
                    && all(&|a| m(mu, q[a]) == m(q[a], mu))
                    && all(&|a| m(delta, t[a]) == m(t[a], delta))
                    && m(mu, t[mu]) == m(mu, mu)
                    && m(mu, eta) == 0
                    && m(mu, t[eta]) == 0
                    && m(q[delta], delta) == m(delta, delta)
                    && m(eps, delta) == 0
                    && m(q[eps], delta) == 0
                    && p(&[q[mu], mu, delta, t[delta]]) == m(delta, mu)
                    && m(eps, mu) == m(eps, t[eps])
                    && m(delta, eta) == m(q[eta], eta)
                    && m(eps, eta) == 0;
                count += ok as usize;
            }
        }
    }
    count
}

fn census() -> Outcome {
    let mut counts = Vec::new();
    for m in enumerate_monoids(2, false).map_err(|e| e.to_string())? {
        let table = m.rows();
        let (oracle, engine) = (oracle_count(&table), enumerate_smm(&m).len());
        let name = if m.mul(1, 1) == 0 { "Z/2" } else { "idempotent" };
        counts.push((name, oracle, engine));
    }
    counts.sort_by_key(|c| c.0 != "Z/2");
    if counts == [("Z/2", 2, 2), ("idempotent", 1, 1)] {
        Ok("Z/2: 2, idempotent: 1 (oracle agrees)".into())
    } else {
        Err(format!("(monoid, oracle, engine) = {counts:?}"))
    }
}

fn replayable(r: &SuiteRecord) -> bool {
    r.derivation.as_ref().is_some_and(|d| {
        d.check().is_accept()
            && Derivation::parse(&d.to_text()).is_ok_and(|back| back.check().is_accept() && back.end == d.end)
    })
}

fn identities(records: &[SuiteRecord]) -> Outcome {
    let failed: Vec<&str> = records
        .iter()
        .filter(|r| !r.proved() || !replayable(r))
        .map(|r| r.name.as_str())
        .collect();
    if failed.is_empty() {
        let steps: usize = records.iter().filter_map(|r| r.depth).sum();
        Ok(format!(
            "{} identities proved and replayed, {steps} steps",
            records.len()
        ))
    } else {
        Err(format!("not proved or not replayable: {failed:?}"))
    }
}

fn bialgebroids(universe: &[SmmInstance]) -> Outcome {
    let bad = first_failure(universe, |inst| {
        let run = || -> Result<Option<String>, smm_core::SmmError> {
            for (side, b) in [("G", build_g(inst)?), ("F", build_f(inst)?)] {
                if let Some(v) = check_bialgebroid(&b).first() {
                    return Ok(Some(format!("{side}: {}", v.axiom)));
                }
            }
            let pairing = pairing_property_check(inst)?;
            if let Some(v) = pairing.violations.first() {
                return Ok(Some(format!("pairing: {}", v.axiom)));
            }
            if !pairing.non_degenerate {
                return Ok(Some("pairing degenerate".into()));
            }
            if !invariants_check(inst)?.passes() {
                return Ok(Some("G^F differs from T(A)".into()));
            }
            Ok(grouplike_bijection_check(inst)?
                .violations
                .first()
                .map(|v| format!("grouplikes: {}", v.axiom)))
        };
        run().unwrap_or_else(|e| Some(e.to_string()))
    });
    match bad {
        None => Ok(format!("{} instances", universe.len())),
        Some(why) => Err(why),
    }
}

fn module_categories(universe: &[SmmInstance]) -> Outcome {
    let bad = first_failure(universe, |inst| {
        let mut v = strict_monoidal_check(&ElementCategory::modules(inst));
        v.extend(strict_monoidal_check(&ElementCategory::comodules(inst)));
        v.extend(comonoid_check(inst));
        v.extend(monoid_check(inst));
        v.extend(representable_check(inst));
        if inst.size() <= 2 {
            match classify_source_regular(inst) {
                Ok(c) => v.extend(c.violations),
                Err(e) => return Some(e.to_string()),
            }
        }
        v.first().map(|x| x.axiom.to_string())
    });
    match bad {
        None => Ok(format!(
            "{} instances, regular classification on |A| <= 2",
            universe.len()
        )),
        Some(why) => Err(why),
    }
}

fn skew_sets(universe: &[SmmInstance]) -> Outcome {
    let small: Vec<&SmmInstance> = universe.iter().filter(|i| i.size() <= 2).collect();
    for (k, inst) in small.iter().enumerate() {
        let r = skewset_report(inst, MAX_ASET_SIZE).map_err(|e| format!("instance {k}: {e}"))?;
        if let Some((tag, v)) = r.violations().first() {
            return Err(format!("instance {k}: {tag} {}", v.axiom));
        }
        if r.embedding_isos == 0 {
            return Err(format!("instance {k}: embedded SMM not isomorphic to the input"));
        }
    }
    Ok(format!("{} instances, A-sets up to size {MAX_ASET_SIZE}", small.len()))
}

fn reconstruction(universe: &[SmmInstance]) -> Outcome {
    let bad = first_failure(universe, |inst| {
        let run = || -> Result<Option<String>, smm_core::SmmError> {
            let g = build_g(inst)?;
            let adj = inclusion(&g, inst);
            let rec = reconstruct_smm(&g, &adj)?;
            let Some(iso) = reconstruction_iso(&g, &adj, inst) else {
                return Ok(Some("no comparison isomorphism".into()));
            };
            if let Some(v) = check_smm_iso(&iso, &rec.instance, inst).first() {
                return Ok(Some(format!("iso: {}", v.axiom)));
            }
            Ok(g_round_trip(&g, &adj)?
                .first()
                .map(|v| format!("G round trip: {}", v.axiom)))
        };
        run().unwrap_or_else(|e| Some(e.to_string()))
    });
    match bad {
        None => Ok(format!("{} instances", universe.len())),
        Some(why) => Err(why),
    }
}

/// Consecutive words of every trace must agree in every model.
fn soundness(records: &[SuiteRecord], universe: &[SmmInstance]) -> Outcome {
    let mut pairs = 0;
    for r in records {
        let Some(d) = &r.derivation else {
            return Err(format!("{}: no derivation", r.name));
        };
        for w in d.trace().windows(2) {
            pairs += 1;
            match find_countermodel(&w[0], &w[1], universe) {
                Ok(None) => {}
                Ok(Some(c)) => return Err(format!("{}: {} vs {} under {:?}", r.name, w[0], w[1], c.assignment)),
                Err(e) => return Err(format!("{}: {e}", r.name)),
            }
        }
    }
    Ok(format!("{pairs} steps sound on {} instances", universe.len()))
}

fn timed(failed: &mut usize, name: &str, run: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let outcome = run();
    let secs = start.elapsed().as_secs_f64();
    match outcome {
        Ok(msg) => println!("PASS  {name}: {msg} ({secs:.2}s)"),
        Err(msg) => {
            *failed += 1;
            println!("FAIL  {name}: {msg} ({secs:.2}s)");
        }
    }
}

fn main() -> ExitCode {
    let universe = universe();
    let mut failed = 0;
    timed(&mut failed, "1 triviality sweep", || triviality(&universe));
    timed(&mut failed, "2 size-2 census", census);
    let mut records = Vec::new();
    timed(&mut failed, "3 identity suite", || {
        records = identity_suite(Budget::default());
        identities(&records)
    });
    timed(&mut failed, "4 bialgebroid suite", || bialgebroids(&universe));
    timed(&mut failed, "5 module categories", || module_categories(&universe));
    timed(&mut failed, "6 skew A-sets", || skew_sets(&universe));
    timed(&mut failed, "7 reconstruction", || reconstruction(&universe));
    timed(&mut failed, "8 soundness", || soundness(&records, &universe));
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
