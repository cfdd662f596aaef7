mod oracle;

use mealy::nerode::{is_minimal, minimize};
use mealy::{
    ball_size, component_of, component_partition, components_of_power, isomorphic, last_letter_histogram,
    nerode_partition, parse_automaton, ratio_sequence, to_text, GroupContext, Letter, Limits, MealyAutomaton,
    StateId,
};
use proptest::prelude::*;

fn automaton(n: usize, k: usize, delta: Vec<u32>, rho: Vec<u32>) -> MealyAutomaton {
    MealyAutomaton::from_tables(
        (0..k).map(|i| i.to_string()).collect(),
        (0..n).map(|q| format!("q{q}")).collect(),
        delta,
        rho,
    )
    .unwrap()
}

fn any_automaton() -> impl Strategy<Value = MealyAutomaton> {
    (1usize..=4, 2usize..=3).prop_flat_map(|(n, k)| {
        (
            proptest::collection::vec(0..n as u32, n * k),
            proptest::collection::vec(0..k as u32, n * k),
        )
            .prop_map(move |(d, r)| automaton(n, k, d, r))
    })
}

/// Random letter maps that are permutations and random δ_i permutations:
/// invertible and reversible, bireversible only sometimes.
fn invertible_reversible() -> impl Strategy<Value = MealyAutomaton> {
    (1usize..=3, 2usize..=3).prop_flat_map(|(n, k)| {
        let perm_q = Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle();
        let perm_s = Just((0..k as u32).collect::<Vec<_>>()).prop_shuffle();
        (
            proptest::collection::vec(perm_q, k),
            proptest::collection::vec(perm_s, n),
        )
            .prop_map(move |(dperm, rperm)| {
                let mut delta = vec![0; n * k];
                let mut rho = vec![0; n * k];
                for q in 0..n {
                    for i in 0..k {
                        delta[q * k + i] = dperm[i][q];
                        rho[q * k + i] = rperm[q][i];
                    }
                }
                automaton(n, k, delta, rho)
            })
    })
}

fn permuted(a: &MealyAutomaton, perm: &[u32]) -> MealyAutomaton {
    let (n, k) = (a.num_states(), a.alphabet_size());
    let mut delta = vec![0; n * k];
    let mut rho = vec![0; n * k];
    for q in 0..n {
        for i in 0..k {
            let p = perm[q] as usize;
            delta[p * k + i] = perm[a.delta_table()[q * k + i] as usize];
            rho[p * k + i] = a.rho_table()[q * k + i];
        }
    }
    automaton(n, k, delta, rho)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn text_round_trip(a in any_automaton()) {
        prop_assert_eq!(parse_automaton(&to_text(&a)).unwrap(), a);
    }

    #[test]
    fn predicates_are_consistent(a in any_automaton()) {
        prop_assert_eq!(a.is_bireversible(), a.is_reversible() && a.is_coreversible());
        if a.is_coreversible() {
            prop_assert!(a.is_invertible());
        }
    }

    #[test]
    fn inverse_undoes_the_action(a in invertible_reversible(), s in proptest::collection::vec(0u32..2, 0..7)) {
        let inv = a.inverse().unwrap();
        let s: Vec<Letter> = s.into_iter().map(Letter).collect();
        for q in a.states() {
            let out = a.apply_rho(&[q], &s);
            prop_assert_eq!(inv.apply_rho(&[q], &out), s.clone());
        }
        let back = inv.inverse().unwrap();
        prop_assert_eq!(back.delta_table(), a.delta_table());
        prop_assert_eq!(back.rho_table(), a.rho_table());
    }

    #[test]
    fn nerode_is_a_fixpoint(a in any_automaton()) {
        let p = nerode_partition(&a);
        for q in a.states() {
            for r in p.class(q) {
                prop_assert_eq!(a.letter_map(q), a.letter_map(*r));
                for i in a.letters() {
                    prop_assert!(p.equivalent(a.next(q, i), a.next(*r, i)));
                }
            }
        }
        let depth = (a.num_states() * (p.rounds + 1)).min(8);
        let brute = oracle::action_classes(&a, depth);
        prop_assert_eq!(p.num_classes(), brute.len());
    }

    #[test]
    fn minimize_is_idempotent(a in any_automaton()) {
        let m = minimize(&a);
        prop_assert!(is_minimal(&m));
        prop_assert!(isomorphic(&minimize(&m), &m).is_some());
    }

    #[test]
    fn isomorphism_finds_permutations(a in any_automaton(), seed in any::<u64>()) {
        let n = a.num_states();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let b = permuted(&a, &perm);
        let map = isomorphic(&a, &b);
        prop_assert!(map.is_some());
        let map = map.unwrap();
        for q in a.states() {
            let p = map[q.index()];
            prop_assert_eq!(a.letter_map(q), b.letter_map(p));
            for i in a.letters() {
                prop_assert_eq!(map[a.next(q, i).index()], b.next(p, i));
            }
        }
    }

    #[test]
    fn components_are_closed_and_partition(a in invertible_reversible(), n in 1usize..=3) {
        let comps = components_of_power(&a, n, &Limits::default()).unwrap();
        let total: usize = comps.iter().map(|c| c.len()).sum();
        prop_assert_eq!(total, a.num_states().pow(n as u32));
        for c in &comps {
            for w in c.members() {
                for i in a.letters() {
                    let (next, _) = a.step_word(w, i);
                    prop_assert!(c.contains(&next));
                }
            }
            // classes of a connected reversible automaton all have one size
            let p = component_partition(c);
            prop_assert!(p.classes.iter().all(|cl| cl.len() == p.classes[0].len()));
        }
    }

    #[test]
    fn ratios_are_integral_and_non_increasing(a in invertible_reversible()) {
        prop_assume!(a.is_bireversible());
        for q in a.states() {
            let r = ratio_sequence(&a, q, 4, 1 << 20).unwrap();
            prop_assert!(r.is_integral());
            prop_assert!(r.is_non_increasing());
        }
    }

    #[test]
    fn last_letters_are_uniform(a in invertible_reversible(), n in 1usize..=3) {
        prop_assume!(a.is_bireversible() && a.is_connected());
        for c in components_of_power(&a, n, &Limits::default()).unwrap() {
            let p = component_partition(&c);
            for class in &p.classes {
                let words: Vec<&[StateId]> = class.iter().map(|m| c.word(m.index())).collect();
                let hist = last_letter_histogram(&words);
                let first = *hist.values().next().unwrap();
                prop_assert!(hist.values().all(|&x| x == first));
            }
        }
    }

    #[test]
    fn equality_is_an_equivalence(
        a in invertible_reversible(),
        words in proptest::collection::vec(proptest::collection::vec(0usize..7, 0..4), 3),
    ) {
        let ctx = GroupContext::new(&a).unwrap();
        let size = ctx.automaton().num_states();
        let ws: Vec<Vec<StateId>> = words
            .iter()
            .map(|w| w.iter().map(|&x| StateId((x % size) as u32)).collect())
            .collect();
        let eq = |i: usize, j: usize| ctx.equal(&ws[i], &ws[j], 1 << 20).unwrap();
        for i in 0..3 {
            prop_assert!(eq(i, i));
            for j in 0..3 {
                prop_assert_eq!(eq(i, j), eq(j, i));
                for l in 0..3 {
                    if eq(i, j) && eq(j, l) {
                        prop_assert!(eq(i, l));
                    }
                }
            }
        }
    }

    #[test]
    fn balls_are_nested(a in invertible_reversible()) {
        let limits = Limits::default();
        let g: Vec<usize> = (0..=3).map(|n| ball_size(&a, n, &limits).unwrap()).collect();
        let gens = 2 * a.num_states() + 1;
        for n in 1..=3 {
            prop_assert!(g[n - 1] <= g[n]);
            prop_assert!(g[n] <= gens.pow(n as u32));
        }
    }

    #[test]
    fn cascade_matches_oracle(a in invertible_reversible(), u in proptest::collection::vec(0usize..3, 1..5)) {
        let u: Vec<StateId> = u.into_iter().map(|x| StateId((x % a.num_states()) as u32)).collect();
        let c = component_of(&a, &u, 1 << 20).unwrap();
        prop_assert_eq!(c.len(), oracle::closure(&a, &u).len());
        for i in a.letters() {
            prop_assert_eq!(a.step_word(&u, i).0, oracle::cascade(&a, &u, i.0));
        }
    }
}
