use std::sync::OnceLock;

use proptest::prelude::*;
use smm_core::bgd::{check_smm_iso, find_smm_isos, SmmIso};
use smm_core::finmon::{
    check_axioms, find_countermodel, instance_universe, is_smm, mimosa_report, EndoMap, SmmInstance,
};
use smm_core::term::{
    apply_step, invert_step, parse_word, prove_equal, successors, Budget, Derivation, Presentation, RuleSet,
    StepConfig, Word,
};

const TOKENS: [&str; 12] = [
    "mu", "eta", "delta", "eps", "T(mu)", "Q(delta)", "T(eta)", "Q(eps)", "a", "b", "T(a)", "Q(b)",
];

fn universe() -> &'static [SmmInstance] {
    static U: OnceLock<Vec<SmmInstance>> = OnceLock::new();
    U.get_or_init(|| instance_universe(3).unwrap())
}

fn rules() -> &'static RuleSet {
    static R: OnceLock<RuleSet> = OnceLock::new();
    R.get_or_init(RuleSet::mu_delta)
}

fn arb_word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(&TOKENS[..]), 0..=max).prop_map(|ts| {
        let src = if ts.is_empty() { "1".to_string() } else { ts.join("*") };
        parse_word(&src).unwrap()
    })
}

fn walk(start: &Word, choices: &[usize]) -> Derivation {
    let cfg = StepConfig {
        max_len: start.len() + 4,
        ..StepConfig::default()
    };
    let mut cur = start.clone();
    let mut steps = Vec::new();
    for &c in choices {
        let next = successors(&cur, rules(), &cfg);
        if next.is_empty() {
            break;
        }
        let (w, step) = next[c % next.len()].clone();
        cur = w;
        steps.push(step);
    }
    Derivation {
        presentation: Presentation::MuDelta,
        start: start.clone(),
        steps,
        end: cur,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_walks_replay_and_are_sound(w in arb_word(5), choices in prop::collection::vec(any::<usize>(), 0..6)) {
        let d = walk(&w, &choices);
        prop_assert!(d.check().is_accept());
        let back = Derivation::parse(&d.to_text()).unwrap();
        prop_assert!(back.check().is_accept());
        prop_assert_eq!(&back.end, &d.end);
        for pair in d.trace().windows(2) {
            prop_assert!(find_countermodel(&pair[0], &pair[1], universe()).unwrap().is_none());
        }
    }

    #[test]
    fn inverted_steps_undo(w in arb_word(5), choices in prop::collection::vec(any::<usize>(), 1..4)) {
        let d = walk(&w, &choices);
        let trace = d.trace();
        for (k, step) in d.steps.iter().enumerate() {
            let undone = apply_step(&trace[k + 1], rules(), &invert_step(step, rules())).unwrap();
            prop_assert_eq!(&undone, &trace[k]);
        }
    }

    #[test]
    fn proofs_never_separate_in_models(l in arb_word(3), r in arb_word(3)) {
        let budget = Budget { max_depth: 4, max_states: 2_000, ..Budget::default() };
        if let Some(d) = prove_equal(&l, &r, rules(), budget).derivation() {
            prop_assert!(d.check().is_accept());
            prop_assert!(find_countermodel(&l, &r, universe()).unwrap().is_none());
        }
    }

    #[test]
    fn relabeling_preserves_everything(k in any::<prop::sample::Index>(), seed in any::<prop::sample::Index>()) {
        let inst = &universe()[k.index(universe().len())];
        let n = inst.size();
        // permutations of 1..n, the unit stays at 0
        let mut rest: Vec<usize> = (1..n).collect();
        let mut perm = vec![0];
        let mut s = seed.index(usize::MAX);
        while !rest.is_empty() {
            perm.push(rest.remove(s % rest.len()));
            s /= 7;
        }
        let map = |f: &EndoMap| {
            let mut images = vec![0; n];
            for a in 0..n {
                images[perm[a]] = perm[f.apply(a)];
            }
            EndoMap { images }
        };
        let moved = SmmInstance::new(
            inst.monoid.relabel(&perm),
            map(&inst.t),
            map(&inst.q),
            perm[inst.mu],
            perm[inst.eta],
            perm[inst.delta],
            perm[inst.eps],
        )
        .unwrap();
        prop_assert!(is_smm(&moved));
        prop_assert!(check_axioms(&moved, Presentation::Gamma).is_empty());
        prop_assert_eq!(mimosa_report(&moved).flags, mimosa_report(inst).flags);
        let iso = SmmIso { phi: perm.clone(), phi2: 0, phi0: 0 };
        prop_assert!(check_smm_iso(&iso, inst, &moved).is_empty());
        prop_assert!(find_smm_isos(inst, &moved).contains(&iso));
    }
}
