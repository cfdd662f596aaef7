//! Nerode equivalence, minimization, and the restricted classes `⟦u⟧` and
//! `N_q(n)` living inside components of powers.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::automaton::{MealyAutomaton, StateId, StateWord};
use crate::error::{Error, Result};
use crate::power::{component_of, Component};

/// Classes of the Nerode equivalence on the states of an automaton.
///
/// Class indices follow the first occurrence of a member in state order, and
/// every class lists its members in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NerodePartition {
    pub class_of: Vec<u32>,
    pub classes: Vec<Vec<StateId>>,
    /// Refinement passes that split at least one class.
    pub rounds: usize,
}

impl NerodePartition {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class(&self, q: StateId) -> &[StateId] {
        &self.classes[self.class_of[q.index()] as usize]
    }

    pub fn equivalent(&self, p: StateId, q: StateId) -> bool {
        self.class_of[p.index()] == self.class_of[q.index()]
    }
}

/// Moore-style refinement on raw row-major tables.
pub fn refine(num_states: usize, alphabet_size: usize, delta: &[u32], rho: &[u32]) -> NerodePartition {
    let k = alphabet_size;
    let mut class_of = vec![0u32; num_states];
    let mut count = {
        let mut ids: HashMap<&[u32], u32> = HashMap::new();
        for q in 0..num_states {
            let next = ids.len() as u32;
            class_of[q] = *ids.entry(&rho[q * k..(q + 1) * k]).or_insert(next);
        }
        ids.len()
    };
    let mut rounds = 0;
    let mut sig = vec![0u32; num_states * (k + 1)];
    loop {
        for q in 0..num_states {
            let row = &mut sig[q * (k + 1)..(q + 1) * (k + 1)];
            row[0] = class_of[q];
            for i in 0..k {
                row[i + 1] = class_of[delta[q * k + i] as usize];
            }
        }
        let mut ids: HashMap<&[u32], u32> = HashMap::with_capacity(count * 2);
        let mut next_class = vec![0u32; num_states];
        for (q, slot) in next_class.iter_mut().enumerate() {
            let fresh = ids.len() as u32;
            *slot = *ids.entry(&sig[q * (k + 1)..(q + 1) * (k + 1)]).or_insert(fresh);
        }
        let new_count = ids.len();
        drop(ids);
        class_of = next_class;
        if new_count == count {
            break;
        }
        count = new_count;
        rounds += 1;
    }
    let mut classes = vec![Vec::new(); count];
    for (q, &c) in class_of.iter().enumerate() {
        classes[c as usize].push(StateId(q as u32));
    }
    NerodePartition {
        class_of,
        classes,
        rounds,
    }
}

pub fn nerode_partition(a: &MealyAutomaton) -> NerodePartition {
    refine(a.num_states(), a.alphabet_size(), a.delta_table(), a.rho_table())
}

pub fn component_partition(c: &Component) -> NerodePartition {
    refine(c.len(), c.alphabet_size(), c.delta_table(), c.rho_table())
}

/// Quotient by a partition; each class is named after its smallest member.
fn quotient(a: &MealyAutomaton, p: &NerodePartition) -> MealyAutomaton {
    let reps: Vec<StateId> = p.classes.iter().map(|c| c[0]).collect();
    let mut delta = Vec::with_capacity(reps.len() * a.alphabet_size());
    let mut rho = Vec::with_capacity(reps.len() * a.alphabet_size());
    for &r in &reps {
        for i in a.letters() {
            let target = a.next(r, i);
            debug_assert!(p
                .class(r)
                .iter()
                .all(|&m| p.equivalent(a.next(m, i), target)));
            delta.push(p.class_of[target.index()]);
            rho.push(a.output(r, i).0);
        }
    }
    MealyAutomaton::from_parts_unchecked(
        a.letter_names().to_vec(),
        reps.iter().map(|&r| a.state_name(r).to_string()).collect(),
        reps.iter().map(|&r| a.kind(r)).collect(),
        delta,
        rho,
    )
}

/// `mz(A)` together with the partition it was built from.
pub fn minimize_with_classes(a: &MealyAutomaton) -> (MealyAutomaton, NerodePartition) {
    let p = nerode_partition(a);
    (quotient(a, &p), p)
}

pub fn minimize(a: &MealyAutomaton) -> MealyAutomaton {
    minimize_with_classes(a).0
}

pub fn is_minimal(a: &MealyAutomaton) -> bool {
    nerode_partition(a).num_classes() == a.num_states()
}

/// `mz(C)` for a component viewed as an automaton.
pub fn minimize_component(c: &Component) -> MealyAutomaton {
    let a = c.to_automaton();
    let p = component_partition(c);
    quotient(&a, &p)
}

/// Members of a component inducing the same action as an anchor word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedClass {
    pub anchor: StateWord,
    pub members: Vec<StateWord>,
}

pub fn restricted_class(c: &Component, u: &[StateId]) -> Result<RestrictedClass> {
    let p = component_partition(c);
    restricted_class_with(c, &p, u)
}

/// Same as [`restricted_class`] with a precomputed partition of `c`.
pub fn restricted_class_with(c: &Component, p: &NerodePartition, u: &[StateId]) -> Result<RestrictedClass> {
    let m = c.index_of(u).ok_or(Error::NotAMember)?;
    let members = p
        .class(StateId(m as u32))
        .iter()
        .map(|&s| c.word(s.index()).to_vec())
        .collect();
    Ok(RestrictedClass {
        anchor: u.to_vec(),
        members,
    })
}

/// `N_q(n)`: words of the restricted class of `qⁿ` whose last letter is `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRestrictedClass {
    pub q: StateId,
    pub n: usize,
    pub members: Vec<StateWord>,
}

impl QRestrictedClass {
    /// Extracts `N_q(n)` from `cc(qⁿ)` and its partition.
    pub fn from_component(c: &Component, p: &NerodePartition, q: StateId) -> Self {
        let n = c.n();
        let class = restricted_class_with(c, p, &vec![q; n]).expect("qⁿ is in cc(qⁿ)");
        QRestrictedClass {
            q,
            n,
            members: class
                .members
                .into_iter()
                .filter(|w| w.last() == Some(&q))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &[StateId]) -> bool {
        self.members.binary_search_by(|m| m.as_slice().cmp(w)).is_ok()
    }

    /// `₀(N_q(n))`.
    pub fn first_letters(&self) -> BTreeSet<StateId> {
        self.members.iter().map(|w| w[0]).collect()
    }
}

pub fn q_restricted_class(a: &MealyAutomaton, q: StateId, n: usize, cap: usize) -> Result<QRestrictedClass> {
    if !a.is_bireversible() {
        return Err(Error::NotBireversible);
    }
    let c = component_of(a, &vec![q; n], cap)?;
    let p = component_partition(&c);
    Ok(QRestrictedClass::from_component(&c, &p, q))
}

pub fn last_letter_histogram<W: AsRef<[StateId]>>(class: &[W]) -> BTreeMap<StateId, usize> {
    let mut hist = BTreeMap::new();
    for w in class {
        if let Some(&last) = w.as_ref().last() {
            *hist.entry(last).or_insert(0) += 1;
        }
    }
    hist
}

/// `₋₂(N_q(n))`, the letters in penultimate position.
pub fn penultimate_letters(nq: &QRestrictedClass) -> Result<BTreeSet<StateId>> {
    if nq.n < 2 {
        return Err(Error::LengthTooShort(nq.n));
    }
    Ok(nq.members.iter().map(|w| w[w.len() - 2]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::isomorphic;
    use crate::corpus;

    #[test]
    fn aleshin_is_minimal() {
        let a = corpus::aleshin();
        let p = nerode_partition(&a);
        assert_eq!(p.num_classes(), 3);
        assert!(p.classes.iter().all(|c| c.len() == 1));
        assert!(p.rounds >= 1);
        assert!(isomorphic(&minimize(&a), &a).is_some());
        assert!(is_minimal(&a));
    }

    #[test]
    fn identity_collapses() {
        let e = corpus::identity();
        assert_eq!(nerode_partition(&e).num_classes(), 1);
        let aug = e.augment().unwrap();
        assert_eq!(minimize(&aug).num_states(), 1);
    }

    #[test]
    fn twins_in_a_disjoint_union() {
        let a = corpus::aleshin();
        let u = a.disjoint_union(&a).unwrap();
        let p = nerode_partition(&u);
        assert_eq!(p.num_classes(), 3);
        for (q, class) in p.classes.iter().enumerate() {
            assert_eq!(class, &vec![StateId(q as u32), StateId(q as u32 + 3)]);
        }
    }

    #[test]
    fn minimize_is_idempotent() {
        for a in [corpus::aleshin(), corpus::swap_identity(), corpus::aleshin().augment().unwrap()] {
            let m = minimize(&a);
            assert!(isomorphic(&minimize(&m), &m).is_some());
            assert!(is_minimal(&m));
        }
    }

    #[test]
    fn partition_is_a_fixpoint() {
        let a = corpus::aleshin().augment().unwrap();
        let p = nerode_partition(&crate::power::power(&a, 2, 1000).unwrap());
        let again = refine(
            p.class_of.len(),
            2,
            crate::power::power(&a, 2, 1000).unwrap().delta_table(),
            crate::power::power(&a, 2, 1000).unwrap().rho_table(),
        );
        assert_eq!(p, again);
    }

    #[test]
    fn component_minimization() {
        let a = corpus::aleshin();
        let c1 = component_of(&a, &[StateId(0)], 100).unwrap();
        assert_eq!(minimize_component(&c1).num_states(), 3);
        let e = corpus::identity();
        for n in 1..5 {
            let c = component_of(&e, &vec![StateId(0); n], 10).unwrap();
            assert_eq!(minimize_component(&c).num_states(), 1);
        }
        let c2 = component_of(&a, &[StateId(0); 2], 100).unwrap();
        let class = restricted_class(&c2, &[StateId(0); 2]).unwrap();
        assert_eq!(
            minimize_component(&c2).num_states(),
            c2.len() / class.members.len()
        );
    }

    #[test]
    fn restricted_classes() {
        let a = corpus::aleshin();
        let c1 = component_of(&a, &[StateId(0)], 100).unwrap();
        let r = restricted_class(&c1, &[StateId(0)]).unwrap();
        assert_eq!(r.members, vec![vec![StateId(0)]]);
        assert_eq!(
            restricted_class(&c1, &[StateId(0), StateId(0)]).unwrap_err(),
            Error::NotAMember
        );
        let aug = a.augment().unwrap();
        let c = component_of(&aug, &[StateId(0), StateId(3)], 10_000).unwrap();
        let p = component_partition(&c);
        let sizes: BTreeSet<usize> = p.classes.iter().map(Vec::len).collect();
        assert_eq!(sizes.len(), 1);
    }

    #[test]
    fn q_restricted_examples() {
        let e = corpus::identity();
        let nq = q_restricted_class(&e, StateId(0), 4, 10).unwrap();
        assert_eq!(nq.members, vec![vec![StateId(0); 4]]);
        assert_eq!(penultimate_letters(&nq).unwrap(), BTreeSet::from([StateId(0)]));

        let a = corpus::aleshin();
        let nq = q_restricted_class(&a, StateId(0), 1, 10).unwrap();
        assert_eq!(nq.members, vec![vec![StateId(0)]]);
        assert_eq!(penultimate_letters(&nq).unwrap_err(), Error::LengthTooShort(1));
        assert_eq!(
            last_letter_histogram(&nq.members),
            BTreeMap::from([(StateId(0), 1)])
        );
        assert_eq!(
            q_restricted_class(&corpus::aleshin_mutant(), StateId(0), 1, 10).unwrap_err(),
            Error::NotBireversible
        );
    }

    #[test]
    fn histogram_counts() {
        let words = vec![vec![StateId(1), StateId(0)], vec![StateId(0), StateId(2)], vec![StateId(2), StateId(0)]];
        assert_eq!(
            last_letter_histogram(&words),
            BTreeMap::from([(StateId(0), 2), (StateId(2), 1)])
        );
    }
}
