//! Exhaustive enumeration of small monoids and of SMM structures on them.

use rayon::prelude::*;

use super::axioms::is_smm;
use super::instance::SmmInstance;
use super::monoid::FiniteMonoid;
use crate::error::SmmError;

/// Largest monoid size accepted by [`enumerate_monoids`].
pub const MAX_MONOID_SIZE: usize = 5;

/// All SMM structures on `m`, sorted by `(T, Q, mu, eta, delta, eps)`.
pub fn enumerate_smm(m: &FiniteMonoid) -> Vec<SmmInstance> {
    let endos = m.endomorphisms();
    let pairs: Vec<_> = endos
        .iter()
        .flat_map(|t| endos.iter().map(move |q| (t, q)))
        .filter(|(t, q)| {
            // SMM6 depends only on the pair
            m.elements().all(|a| {
                m.elements()
                    .all(|b| m.mul(t.apply(a), q.apply(b)) == m.mul(q.apply(b), t.apply(a)))
            })
        })
        .collect();
    let unit = m.unit();
    let mut out: Vec<SmmInstance> = pairs
        .par_iter()
        .flat_map_iter(|&(t, q)| {
            let mut found = Vec::new();
            for eps in m.elements() {
                for eta in m.elements().filter(|&eta| m.mul(eps, eta) == unit) {
                    let mus: Vec<usize> = m
                        .elements()
                        .filter(|&mu| m.mul(mu, eta) == unit && m.mul(mu, t.apply(eta)) == unit)
                        .collect();
                    let deltas: Vec<usize> = m
                        .elements()
                        .filter(|&d| m.mul(eps, d) == unit && m.mul(q.apply(eps), d) == unit)
                        .collect();
                    for &mu in &mus {
                        for &delta in &deltas {
                            let inst = SmmInstance {
                                monoid: m.clone(),
                                t: t.clone(),
                                q: q.clone(),
                                mu,
                                eta,
                                delta,
                                eps,
                            };
                            if is_smm(&inst) {
                                found.push(inst);
                            }
                        }
                    }
                }
            }
            found
        })
        .collect();
    out.sort_by_key(SmmInstance::sort_key);
    out
}

/// Largest size at which [`instance_universe`] takes every table rather
/// than one monoid per isomorphism class.
pub const ALL_TABLES_UP_TO: usize = 3;

/// Every SMM on monoids of size `1..=max`: all tables up to
/// [`ALL_TABLES_UP_TO`], canonical representatives above it.
pub fn instance_universe(max: usize) -> Result<Vec<SmmInstance>, SmmError> {
    let mut out = Vec::new();
    for n in 1..=max {
        for m in enumerate_monoids(n, n > ALL_TABLES_UP_TO)? {
            out.extend(enumerate_smm(&m));
        }
    }
    Ok(out)
}

/// All monoids of size `n` with unit `0`; with `dedup`, one canonical
/// representative per isomorphism class, sorted by table.
pub fn enumerate_monoids(n: usize, dedup: bool) -> Result<Vec<FiniteMonoid>, SmmError> {
    if n == 0 || n > MAX_MONOID_SIZE {
        return Err(SmmError::BoundExceeded {
            size: n,
            bound: MAX_MONOID_SIZE,
        });
    }
    let mut table = vec![usize::MAX; n * n];
    for a in 0..n {
        table[a] = a;
        table[a * n] = a;
    }
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
    let mut raw = Vec::new();
    fill(n, &cells, 0, &mut table, &mut raw);
    if !dedup {
        return Ok(raw);
    }
    let mut canon: Vec<FiniteMonoid> = raw.iter().map(canonical_form).collect();
    canon.sort_by(|a, b| a.flat_table().cmp(b.flat_table()));
    canon.dedup();
    Ok(canon)
}

fn fill(n: usize, cells: &[(usize, usize)], k: usize, table: &mut Vec<usize>, out: &mut Vec<FiniteMonoid>) {
    let Some(&(a, b)) = cells.get(k) else {
        out.push(FiniteMonoid::from_flat_unchecked(n, table.clone(), 0));
        return;
    };
    for v in 0..n {
        table[a * n + b] = v;
        if consistent(n, table) {
            fill(n, cells, k + 1, table, out);
        }
    }
    table[a * n + b] = usize::MAX;
}

/// Checks every associativity instance `(xy)z = x(yz)` whose products are
/// all defined so far.
fn consistent(n: usize, t: &[usize]) -> bool {
    let undefined = usize::MAX;
    for x in 0..n {
        for y in 0..n {
            let xy = t[x * n + y];
            if xy == undefined {
                continue;
            }
            for z in 0..n {
                let yz = t[y * n + z];
                if yz == undefined {
                    continue;
                }
                let l = t[xy * n + z];
                let r = t[x * n + yz];
                if l != undefined && r != undefined && l != r {
                    return false;
                }
            }
        }
    }
    true
}

/// Permutations of `0..n` that send `unit` to `0`.
fn unit_fixing_perms(n: usize, unit: usize) -> Vec<Vec<usize>> {
    let others: Vec<usize> = (0..n).filter(|&x| x != unit).collect();
    let mut out = Vec::new();
    let mut targets: Vec<usize> = (1..n).collect();
    loop {
        let mut perm = vec![0; n];
        perm[unit] = 0;
        for (src, &dst) in others.iter().zip(&targets) {
            perm[*src] = dst;
        }
        out.push(perm);
        if !next_permutation(&mut targets) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The relabelling with unit `0` whose row-major table is lexicographically least.
pub fn canonical_form(m: &FiniteMonoid) -> FiniteMonoid {
    unit_fixing_perms(m.size(), m.unit())
        .iter()
        .map(|p| m.relabel(p))
        .min_by(|a, b| a.flat_table().cmp(b.flat_table()))
        .expect("at least one permutation")
}

pub fn is_isomorphic(a: &FiniteMonoid, b: &FiniteMonoid) -> bool {
    a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

/// Monoid isomorphisms `a -> b` as image vectors.
pub fn isomorphisms(a: &FiniteMonoid, b: &FiniteMonoid) -> Vec<Vec<usize>> {
    if a.size() != b.size() {
        return vec![];
    }
    let n = a.size();
    let to_b_unit = |p: &Vec<usize>| {
        // p sends a.unit to 0; compose with the transposition (0 b.unit)
        p.iter()
            .map(|&x| {
                if x == 0 {
                    b.unit()
                } else if x == b.unit() {
                    0
                } else {
                    x
                }
            })
            .collect::<Vec<usize>>()
    };
    unit_fixing_perms(n, a.unit())
        .iter()
        .map(to_b_unit)
        .filter(|f| {
            a.elements()
                .all(|x| a.elements().all(|y| f[a.mul(x, y)] == b.mul(f[x], f[y])))
        })
        .collect()
}
