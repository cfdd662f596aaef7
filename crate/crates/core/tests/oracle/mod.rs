//! Brute-force reference computations, written straight from the
//! definitions and reading only the raw transition tables.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use mealy::{Letter, MealyAutomaton, StateId};

/// A generator acting on letter words: a state or the inverse of a state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    Fwd(usize),
    Inv(usize),
}

struct Tables {
    k: usize,
    delta: Vec<u32>,
    rho: Vec<u32>,
}

impl Tables {
    fn of(a: &MealyAutomaton) -> Self {
        Tables {
            k: a.alphabet_size(),
            delta: a.delta_table().to_vec(),
            rho: a.rho_table().to_vec(),
        }
    }

    /// Runs one generator over `s` in place.
    fn run(&self, g: Gen, s: &mut [u32]) {
        match g {
            Gen::Fwd(mut q) => {
                for x in s.iter_mut() {
                    let cell = q * self.k + *x as usize;
                    *x = self.rho[cell];
                    q = self.delta[cell] as usize;
                }
            }
            Gen::Inv(mut q) => {
                for x in s.iter_mut() {
                    let i = (0..self.k)
                        .find(|&i| self.rho[q * self.k + i] == *x)
                        .expect("letter map is a permutation");
                    let cell = q * self.k + i;
                    *x = i as u32;
                    q = self.delta[cell] as usize;
                }
            }
        }
    }
}

/// All words of `Σ^depth` in lexicographic order.
pub fn letter_words(k: usize, depth: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..depth {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k as u32).map(move |i| {
                    let mut w = w.clone();
                    w.push(i);
                    w
                })
            })
            .collect();
    }
    out
}

/// The image of every word of `Σ^depth` under the composite `g[0]` then
/// `g[1]` and so on, concatenated.
pub fn action_table(a: &MealyAutomaton, word: &[Gen], depth: usize) -> Vec<u32> {
    let t = Tables::of(a);
    let mut out = Vec::new();
    for mut s in letter_words(t.k, depth) {
        for &g in word {
            t.run(g, &mut s);
        }
        out.extend(s);
    }
    out
}

pub fn state_table(a: &MealyAutomaton, q: usize, depth: usize) -> Vec<u32> {
    action_table(a, &[Gen::Fwd(q)], depth)
}

/// Output of the state word `u` on the letter word `s`.
pub fn act(a: &MealyAutomaton, u: &[StateId], s: &[Letter]) -> Vec<Letter> {
    let t = Tables::of(a);
    let mut s: Vec<u32> = s.iter().map(|l| l.0).collect();
    for q in u {
        t.run(Gen::Fwd(q.index()), &mut s);
    }
    s.into_iter().map(Letter).collect()
}

/// Groups states by identical action on `Σ^depth`; classes in order of
/// their first state, states ascending.
pub fn action_classes(a: &MealyAutomaton, depth: usize) -> Vec<Vec<usize>> {
    let tables: Vec<Vec<u32>> = (0..a.num_states()).map(|q| state_table(a, q, depth)).collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for q in 0..a.num_states() {
        match classes.iter_mut().find(|c| tables[c[0]] == tables[q]) {
            Some(c) => c.push(q),
            None => classes.push(vec![q]),
        }
    }
    classes
}

/// One cascade step of the letter `i` through the state word `w`.
pub fn cascade(a: &MealyAutomaton, w: &[StateId], i: u32) -> Vec<StateId> {
    let k = a.alphabet_size();
    let (delta, rho) = (a.delta_table(), a.rho_table());
    let mut x = i as usize;
    w.iter()
        .map(|q| {
            let cell = q.index() * k + x;
            x = rho[cell] as usize;
            StateId(delta[cell])
        })
        .collect()
}

/// Everything reachable from `u` by cascades, iterated to a fixpoint.
pub fn closure(a: &MealyAutomaton, u: &[StateId]) -> BTreeSet<Vec<StateId>> {
    let mut set: BTreeSet<Vec<StateId>> = BTreeSet::from([u.to_vec()]);
    loop {
        let mut next = set.clone();
        for w in &set {
            for i in 0..a.alphabet_size() as u32 {
                next.insert(cascade(a, w, i));
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

/// All words of length at most `n` over `gens`.
pub fn words_up_to<T: Copy>(gens: &[T], n: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<T>> = vec![Vec::new()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|w| {
                gens.iter().map(move |&g| {
                    let mut w = w.clone();
                    w.push(g);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn group_generators(a: &MealyAutomaton) -> Vec<Gen> {
    (0..a.num_states())
        .map(Gen::Fwd)
        .chain((0..a.num_states()).map(Gen::Inv))
        .collect()
}

/// Distinct actions on `Σ^depth` among group words of length at most `n`.
pub fn ball_at_depth(a: &MealyAutomaton, n: usize, depth: usize) -> usize {
    let gens = group_generators(a);
    words_up_to(&gens, n)
        .iter()
        .map(|w| action_table(a, w, depth))
        .collect::<HashSet<_>>()
        .len()
}

/// Ball size with the depth raised until the count stops changing twice
/// in a row, up to `max_depth`.
pub fn ball(a: &MealyAutomaton, n: usize, max_depth: usize) -> usize {
    let mut prev = ball_at_depth(a, n, 1);
    let mut stable = 0;
    for depth in 2..=max_depth {
        let c = ball_at_depth(a, n, depth);
        stable = if c == prev { stable + 1 } else { 0 };
        prev = c;
        if stable == 2 {
            break;
        }
    }
    prev
}
