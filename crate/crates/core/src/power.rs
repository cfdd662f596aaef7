//! Powers `Aⁿ`, connected components of powers explored from a seed word,
//! follow/precede sets and the ratio sequence of a state.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::ops::Range;

use crate::automaton::{join_names, MealyAutomaton, StateId, StateKind, StateWord};
use crate::error::{Error, Result};

pub const DEFAULT_COMPONENT_CAP: usize = 1_000_000;
pub const DEFAULT_POWER_CAP: usize = 10_000_000;

/// Node budgets for the expensive constructions. Exceeding one is an error,
/// never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest component explored by [`component_of`].
    pub component_cap: usize,
    /// Largest `|Q|ⁿ` materialized by [`power`] and [`components_of_power`].
    pub power_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            component_cap: DEFAULT_COMPONENT_CAP,
            power_cap: DEFAULT_POWER_CAP,
        }
    }
}

impl Limits {
    /// Both caps set to `budget`.
    pub fn uniform(budget: usize) -> Self {
        Self {
            component_cap: budget,
            power_cap: budget,
        }
    }
}

fn power_size(a: &MealyAutomaton, n: usize, cap: usize) -> Result<usize> {
    u32::try_from(n)
        .ok()
        .and_then(|e| a.num_states().checked_pow(e))
        .filter(|&s| s <= cap)
        .ok_or_else(|| Error::budget(format!("power {n} of a {}-state automaton", a.num_states()), cap))
}

/// Row-major tables of `Aⁿ`, states numbered in lexicographic order of their
/// words (`q1` most significant).
pub fn power_tables(a: &MealyAutomaton, n: usize, cap: usize) -> Result<(Vec<u32>, Vec<u32>)> {
    if n == 0 {
        return Err(Error::LengthMismatch {
            got: 0,
            expected: "a positive power".into(),
        });
    }
    let size = power_size(a, n, cap)?;
    let base = a.num_states();
    let k = a.alphabet_size();
    let mut delta = vec![0u32; size * k];
    let mut rho = vec![0u32; size * k];
    let mut digits = vec![StateId(0); n];
    for idx in 0..size {
        decode(idx, base, &mut digits);
        for i in a.letters() {
            let (next, out) = a.step_word(&digits, i);
            delta[idx * k + i.index()] = encode(&next, base) as u32;
            rho[idx * k + i.index()] = out.0;
        }
    }
    Ok((delta, rho))
}

/// `Aⁿ` as an automaton; state names are the words joined with `.`.
pub fn power(a: &MealyAutomaton, n: usize, cap: usize) -> Result<MealyAutomaton> {
    let (delta, rho) = power_tables(a, n, cap)?;
    let size = delta.len() / a.alphabet_size();
    let mut digits = vec![StateId(0); n];
    let names = (0..size)
        .map(|idx| {
            decode(idx, a.num_states(), &mut digits);
            a.word_name(&digits)
        })
        .collect();
    Ok(MealyAutomaton::from_parts_unchecked(
        a.letter_names().to_vec(),
        names,
        vec![StateKind::Plain; size],
        delta,
        rho,
    ))
}

fn decode(mut idx: usize, base: usize, digits: &mut [StateId]) {
    for d in digits.iter_mut().rev() {
        *d = StateId((idx % base) as u32);
        idx /= base;
    }
}

fn encode(word: &[StateId], base: usize) -> usize {
    word.iter().fold(0, |acc, q| acc * base + q.index())
}

/// A δ-closed set of words of length `n`: one connected component of `Aⁿ`.
///
/// Members are kept in lexicographic order, which makes prefix queries a
/// binary search; a second ordering by reversed word serves suffix queries.
#[derive(Clone, Debug)]
pub struct Component {
    n: usize,
    alphabet_size: usize,
    words: Vec<StateId>,
    suffix_order: Vec<u32>,
    delta: Vec<u32>,
    rho: Vec<u32>,
    base_names: Vec<String>,
    letter_names: Vec<String>,
}

/// The connected component of `u` in `A^|u|`. Only the component is ever
/// built; reversibility makes it the δ-closure of `{u}`.
pub fn component_of(a: &MealyAutomaton, u: &[StateId], cap: usize) -> Result<Component> {
    if !a.is_reversible() {
        return Err(Error::NotReversible);
    }
    closure_of(a, u, cap)
}

/// The δ-closure of `{u}` in `A^|u|`, for any automaton. Follow and precede
/// queries only carry their usual meaning when `A` is reversible.
pub fn closure_of(a: &MealyAutomaton, u: &[StateId], cap: usize) -> Result<Component> {
    if u.is_empty() {
        return Err(Error::LengthMismatch {
            got: 0,
            expected: "a non-empty word".into(),
        });
    }
    if u.iter().any(|q| q.index() >= a.num_states()) {
        return Err(Error::Invalid("word uses an unknown state".into()));
    }
    let mut seen: HashSet<StateWord> = HashSet::from([u.to_vec()]);
    let mut queue = VecDeque::from([u.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for i in a.letters() {
            let (next, _) = a.step_word(&w, i);
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(Error::budget(format!("component of a length-{} word", u.len()), cap));
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut members: Vec<StateWord> = seen.into_iter().collect();
    members.sort_unstable();
    Ok(Component::from_sorted(a, u.len(), members))
}

impl Component {
    fn from_sorted(a: &MealyAutomaton, n: usize, members: Vec<StateWord>) -> Self {
        let k = a.alphabet_size();
        let words: Vec<StateId> = members.into_iter().flatten().collect();
        let mut c = Component {
            n,
            alphabet_size: k,
            words,
            suffix_order: Vec::new(),
            delta: Vec::new(),
            rho: Vec::new(),
            base_names: a.state_names().to_vec(),
            letter_names: a.letter_names().to_vec(),
        };
        let size = c.len();
        let mut delta = Vec::with_capacity(size * k);
        let mut rho = Vec::with_capacity(size * k);
        for m in 0..size {
            for i in a.letters() {
                let (next, out) = a.step_word(c.word(m), i);
                delta.push(c.index_of(&next).expect("component is δ-closed") as u32);
                rho.push(out.0);
            }
        }
        c.delta = delta;
        c.rho = rho;
        let mut order: Vec<u32> = (0..size as u32).collect();
        order.sort_unstable_by(|&x, &y| {
            c.word(x as usize)
                .iter()
                .rev()
                .cmp(c.word(y as usize).iter().rev())
        });
        c.suffix_order = order;
        c
    }

    /// Length of the member words.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len() / self.n
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn word(&self, m: usize) -> &[StateId] {
        &self.words[m * self.n..(m + 1) * self.n]
    }

    pub fn members(&self) -> impl Iterator<Item = &[StateId]> {
        self.words.chunks_exact(self.n)
    }

    pub fn index_of(&self, w: &[StateId]) -> Option<usize> {
        if w.len() != self.n {
            return None;
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.word(mid).cmp(w) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn contains(&self, w: &[StateId]) -> bool {
        self.index_of(w).is_some()
    }

    /// Member-index transition table, row-major by member.
    pub fn delta_table(&self) -> &[u32] {
        &self.delta
    }

    /// Letter map of every member on single letters, row-major by member.
    pub fn rho_table(&self) -> &[u32] {
        &self.rho
    }

    pub fn word_name(&self, w: &[StateId]) -> String {
        join_names(w.iter().map(|q| self.base_names[q.index()].as_str()))
    }

    /// The component as a standalone automaton; state `m` is member `m`.
    pub fn to_automaton(&self) -> MealyAutomaton {
        let names = self.members().map(|w| self.word_name(w)).collect();
        MealyAutomaton::from_parts_unchecked(
            self.letter_names.clone(),
            names,
            vec![StateKind::Plain; self.len()],
            self.delta.clone(),
            self.rho.clone(),
        )
    }

    fn prefix_range(&self, u: &[StateId]) -> Range<usize> {
        let len = u.len();
        let lower = |strict: bool| {
            let (mut lo, mut hi) = (0, self.len());
            while lo < hi {
                let mid = (lo + hi) / 2;
                let ord = self.word(mid)[..len].cmp(u);
                if ord == Ordering::Less || (strict && ord == Ordering::Equal) {
                    lo = mid + 1;
                } else {
                    hi = mid;
                }
            }
            lo
        };
        lower(false)..lower(true)
    }

    fn suffix_range(&self, u: &[StateId]) -> Range<usize> {
        let len = u.len();
        let n = self.n;
        let cmp = |m: u32| {
            self.word(m as usize)[n - len..]
                .iter()
                .rev()
                .cmp(u.iter().rev())
        };
        let lower = |strict: bool| {
            let (mut lo, mut hi) = (0, self.suffix_order.len());
            while lo < hi {
                let mid = (lo + hi) / 2;
                let ord = cmp(self.suffix_order[mid]);
                if ord == Ordering::Less || (strict && ord == Ordering::Equal) {
                    lo = mid + 1;
                } else {
                    hi = mid;
                }
            }
            lo
        };
        lower(false)..lower(true)
    }

    /// Members having `u` as a prefix, in lexicographic order.
    pub fn with_prefix(&self, u: &[StateId]) -> impl Iterator<Item = &[StateId]> {
        let r = if u.len() <= self.n {
            self.prefix_range(u)
        } else {
            0..0
        };
        r.map(move |m| self.word(m))
    }

    /// Members having `u` as a suffix.
    pub fn with_suffix(&self, u: &[StateId]) -> impl Iterator<Item = &[StateId]> {
        let r = if u.len() <= self.n {
            self.suffix_range(u)
        } else {
            0..0
        };
        r.map(move |p| self.word(self.suffix_order[p] as usize))
    }

    /// States `p` such that `u·p` is a prefix of some member.
    pub fn follow_set(&self, u: &[StateId]) -> Result<BTreeSet<StateId>> {
        if u.len() >= self.n {
            return Err(Error::LengthMismatch {
                got: u.len(),
                expected: format!("shorter than the component words ({})", self.n),
            });
        }
        Ok(self.with_prefix(u).map(|w| w[u.len()]).collect())
    }

    /// States `p` such that `p·u` is a suffix of some member.
    pub fn precede_set(&self, u: &[StateId]) -> Result<BTreeSet<StateId>> {
        if u.len() >= self.n {
            return Err(Error::LengthMismatch {
                got: u.len(),
                expected: format!("shorter than the component words ({})", self.n),
            });
        }
        let at = self.n - u.len() - 1;
        Ok(self.with_suffix(u).map(|w| w[at]).collect())
    }

    /// Distinct length-`len` prefixes of members, in lexicographic order.
    pub fn prefixes(&self, len: usize) -> Vec<&[StateId]> {
        let mut out: Vec<&[StateId]> = self.members().map(|w| &w[..len]).collect();
        out.dedup();
        out
    }

    /// Distinct length-`len` suffixes of members.
    pub fn suffixes(&self, len: usize) -> Vec<&[StateId]> {
        let n = self.n;
        let mut out: Vec<&[StateId]> = self
            .suffix_order
            .iter()
            .map(|&m| &self.word(m as usize)[n - len..])
            .collect();
        out.dedup();
        out
    }

    /// Whether every member reaches every other along δ.
    pub fn is_strongly_connected(&self) -> bool {
        self.to_automaton().is_strongly_connected()
    }
}

/// All connected components of `Aⁿ`, ordered by their smallest word.
pub fn components_of_power(a: &MealyAutomaton, n: usize, limits: &Limits) -> Result<Vec<Component>> {
    let size = power_size(a, n, limits.power_cap)?;
    let base = a.num_states();
    let mut covered = vec![false; size];
    let mut out = Vec::new();
    let mut digits = vec![StateId(0); n];
    for idx in 0..size {
        if covered[idx] {
            continue;
        }
        decode(idx, base, &mut digits);
        let c = component_of(a, &digits, limits.component_cap)?;
        for w in c.members() {
            covered[encode(w, base)] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// The components `cc(q¹), …, cc(q^levels)`.
#[derive(Clone, Debug)]
pub struct Tower {
    pub q: StateId,
    levels: Vec<Component>,
}

impl Tower {
    pub fn build(a: &MealyAutomaton, q: StateId, levels: usize, cap: usize) -> Result<Self> {
        let levels = (1..=levels)
            .map(|n| component_of(a, &vec![q; n], cap))
            .collect::<Result<Vec<_>>>()?;
        Ok(Tower { q, levels })
    }

    /// `cc(qⁿ)`, 1-based.
    pub fn level(&self, n: usize) -> &Component {
        &self.levels[n - 1]
    }

    pub fn height(&self) -> usize {
        self.levels.len()
    }

    pub fn power_of_q(&self, n: usize) -> StateWord {
        vec![self.q; n]
    }
}

/// `#cc(qⁿ⁺¹) / #cc(qⁿ)` for `n = 1..=horizon`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioSequence {
    pub q: StateId,
    /// `#cc(qⁿ)` for `n = 1..=horizon+1`.
    pub sizes: Vec<usize>,
    /// `|follow(qⁿ, cc(qⁿ⁺¹))|` for `n = 1..=horizon`.
    pub ratios: Vec<usize>,
    /// `|precede(qⁿ, cc(qⁿ⁺¹))|` for `n = 1..=horizon`.
    pub precede_cards: Vec<usize>,
    /// First 1-based index from which every observed ratio is equal. Needs at
    /// least two equal observations, so it is never the last index.
    pub stabilized_at: Option<usize>,
}

impl RatioSequence {
    pub fn from_tower(tower: &Tower, horizon: usize) -> Self {
        assert!(tower.height() > horizon, "tower must reach horizon + 1");
        let sizes: Vec<usize> = (1..=horizon + 1).map(|n| tower.level(n).len()).collect();
        let mut ratios = Vec::with_capacity(horizon);
        let mut precede_cards = Vec::with_capacity(horizon);
        for n in 1..=horizon {
            let next = tower.level(n + 1);
            let qn = tower.power_of_q(n);
            ratios.push(next.follow_set(&qn).expect("shorter word").len());
            precede_cards.push(next.precede_set(&qn).expect("shorter word").len());
        }
        let stabilized_at = match ratios.last() {
            Some(&last) if ratios.len() >= 2 => {
                let j = ratios.iter().rposition(|&r| r != last).map_or(0, |p| p + 1);
                (j + 1 < ratios.len()).then_some(j + 1)
            }
            _ => None,
        };
        RatioSequence {
            q: tower.q,
            sizes,
            ratios,
            precede_cards,
            stabilized_at,
        }
    }

    pub fn horizon(&self) -> usize {
        self.ratios.len()
    }

    /// `sizes[n+1] = sizes[n] · ratios[n]` at every index.
    pub fn is_integral(&self) -> bool {
        self.ratios
            .iter()
            .enumerate()
            .all(|(p, &r)| self.sizes[p].checked_mul(r) == Some(self.sizes[p + 1]))
    }

    pub fn is_non_increasing(&self) -> bool {
        self.ratios.windows(2).all(|w| w[1] <= w[0])
    }

    /// All observed ratios equal (observational; never a proof).
    pub fn is_constant(&self) -> bool {
        self.ratios.windows(2).all(|w| w[0] == w[1])
    }

    pub fn constant_ratio(&self) -> Option<usize> {
        (self.is_constant() && !self.ratios.is_empty()).then(|| self.ratios[0])
    }
}

pub fn ratio_sequence(a: &MealyAutomaton, q: StateId, horizon: usize, cap: usize) -> Result<RatioSequence> {
    if !a.is_bireversible() {
        return Err(Error::NotBireversible);
    }
    if horizon == 0 {
        return Err(Error::Invalid("horizon must be at least 1".into()));
    }
    let tower = Tower::build(a, q, horizon + 1, cap)?;
    Ok(RatioSequence::from_tower(&tower, horizon))
}

/// `cc(qʲ)` packaged as an automaton whose state `state` is `qʲ`, where `j` is
/// the observed stabilization index of the ratio sequence of `q`.
#[derive(Clone, Debug)]
pub struct Rebased {
    pub automaton: MealyAutomaton,
    pub state: StateId,
    /// `qʲ` in the original automaton.
    pub word: StateWord,
    pub j: usize,
    /// `r_jʲ`, the expected constant ratio of `state`.
    pub ratio: usize,
}

pub fn constant_ratio_rebase(
    a: &MealyAutomaton,
    q: StateId,
    horizon: usize,
    cap: usize,
) -> Result<Rebased> {
    let seq = ratio_sequence(a, q, horizon, cap)?;
    let j = seq.stabilized_at.ok_or(Error::NotStabilized { horizon })?;
    let word = vec![q; j];
    let c = component_of(a, &word, cap)?;
    let state = StateId(c.index_of(&word).expect("seed is a member") as u32);
    let ratio = u32::try_from(j)
        .ok()
        .and_then(|e| seq.ratios[j - 1].checked_pow(e))
        .ok_or_else(|| Error::budget("rebased ratio", usize::MAX))?;
    Ok(Rebased {
        automaton: c.to_automaton(),
        state,
        word,
        j,
        ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::isomorphic;
    use crate::corpus;

    fn brute_closure(a: &MealyAutomaton, u: &[StateId]) -> BTreeSet<StateWord> {
        // fixpoint over all of Q^n, independent of the BFS above
        let mut set = BTreeSet::from([u.to_vec()]);
        loop {
            let mut grew = false;
            for w in set.clone() {
                for i in a.letters() {
                    // cascade written out directly
                    let mut c = i;
                    let mut next = Vec::new();
                    for &q in &w {
                        next.push(a.next(q, c));
                        c = a.output(q, c);
                    }
                    grew |= set.insert(next);
                }
            }
            if !grew {
                return set;
            }
        }
    }

    #[test]
    fn power_one_is_the_automaton() {
        let a = corpus::aleshin();
        let p = power(&a, 1, DEFAULT_POWER_CAP).unwrap();
        assert_eq!(p, a);
        assert!(isomorphic(&p, &a).is_some());
    }

    #[test]
    fn power_of_identity() {
        let p = power(&corpus::identity(), 5, DEFAULT_POWER_CAP).unwrap();
        assert_eq!(p.num_states(), 1);
        assert_eq!(p.letter_map(StateId(0)), [0, 1]);
        assert_eq!(p.state_name(StateId(0)), "e.e.e.e.e");
    }

    #[test]
    fn power_keeps_bireversibility() {
        let p = power(&corpus::aleshin(), 2, DEFAULT_POWER_CAP).unwrap();
        assert_eq!(p.num_states(), 9);
        assert!(p.is_bireversible());
    }

    #[test]
    fn power_matches_word_actions() {
        let a = corpus::aleshin();
        let p = power(&a, 3, DEFAULT_POWER_CAP).unwrap();
        for (idx, name) in p.state_names().iter().enumerate() {
            let w = crate::text::parse_state_word(&a, name).unwrap();
            for i in a.letters() {
                let (next, out) = a.step_word(&w, i);
                assert_eq!(p.state_name(p.next(StateId(idx as u32), i)), a.word_name(&next));
                assert_eq!(p.output(StateId(idx as u32), i), out);
            }
        }
    }

    #[test]
    fn power_budget() {
        let a = corpus::aleshin();
        assert!(matches!(power(&a, 3, 26), Err(Error::BudgetExceeded { .. })));
        assert!(power(&a, 3, 27).is_ok());
    }

    #[test]
    fn aleshin_components() {
        let a = corpus::aleshin();
        let x = StateId(0);
        let c1 = component_of(&a, &[x], 100).unwrap();
        assert_eq!(c1.len(), 3);
        let c2 = component_of(&a, &[x, x], 100).unwrap();
        let brute = brute_closure(&a, &[x, x]);
        assert_eq!(brute.len(), 9);
        assert_eq!(c2.len(), brute.len());
        assert!(c2.members().zip(&brute).all(|(w, b)| w == b.as_slice()));
        assert!(c2.is_strongly_connected());
        let e = corpus::identity();
        assert_eq!(component_of(&e, &[StateId(0); 3], 10).unwrap().len(), 1);
    }

    #[test]
    fn component_errors() {
        let a = corpus::aleshin();
        assert!(matches!(
            component_of(&a, &[StateId(0); 4], 80),
            Err(Error::BudgetExceeded { .. })
        ));
        let nonrev = MealyAutomaton::from_tables(
            vec!["0".into()],
            vec!["a".into(), "b".into()],
            vec![0, 0],
            vec![0, 0],
        )
        .unwrap();
        assert_eq!(
            component_of(&nonrev, &[StateId(0)], 10).unwrap_err(),
            Error::NotReversible
        );
    }

    #[test]
    fn follow_and_precede() {
        let a = corpus::aleshin();
        let x = StateId(0);
        let c = component_of(&a, &[x, x], 100).unwrap();
        let f = c.follow_set(&[x]).unwrap();
        let expected: BTreeSet<StateId> = brute_closure(&a, &[x, x])
            .into_iter()
            .filter(|w| w[0] == x)
            .map(|w| w[1])
            .collect();
        assert_eq!(f, expected);
        assert_eq!(f.len(), c.len() / 3);
        for u in c.prefixes(1) {
            assert_eq!(c.follow_set(u).unwrap().len(), f.len());
        }
        assert!(matches!(c.follow_set(&[x, x]), Err(Error::LengthMismatch { .. })));
        let p = c.precede_set(&[x]).unwrap();
        assert_eq!(p.len(), 3);

        let e = corpus::identity();
        let ce = component_of(&e, &[StateId(0); 2], 10).unwrap();
        assert_eq!(ce.follow_set(&[StateId(0)]).unwrap(), BTreeSet::from([StateId(0)]));
        assert!(ce.follow_set(&[StateId(1)]).is_ok_and(|s| s.is_empty()));
    }

    #[test]
    fn ratio_sequences() {
        let e = corpus::identity();
        let seq = ratio_sequence(&e, StateId(0), 4, 100).unwrap();
        assert_eq!(seq.ratios, vec![1, 1, 1, 1]);
        assert_eq!(seq.stabilized_at, Some(1));

        let a = corpus::aleshin();
        let seq = ratio_sequence(&a, StateId(0), 4, 10_000).unwrap();
        assert_eq!(seq.ratios[0], seq.sizes[1] / 3);
        assert!(seq.is_integral() && seq.is_non_increasing());
        for n in 1..=5 {
            let brute = brute_closure(&a, &vec![StateId(0); n]);
            assert_eq!(seq.sizes[n - 1], brute.len());
        }
        assert_eq!(
            ratio_sequence(&corpus::aleshin_mutant(), StateId(0), 2, 100).unwrap_err(),
            Error::NotBireversible
        );
    }

    #[test]
    fn rebase_identity_and_aleshin() {
        let e = corpus::identity();
        let r = constant_ratio_rebase(&e, StateId(0), 3, 100).unwrap();
        assert_eq!((r.j, r.ratio, r.automaton.num_states()), (1, 1, 1));

        let a = corpus::aleshin();
        let seq = ratio_sequence(&a, StateId(0), 4, 10_000).unwrap();
        let r = constant_ratio_rebase(&a, StateId(0), 4, 10_000).unwrap();
        assert_eq!(Some(r.j), seq.stabilized_at);
        if r.j == 1 {
            assert!(isomorphic(&r.automaton, &a).is_some());
        }
        let again = ratio_sequence(&r.automaton, r.state, 3, 100_000).unwrap();
        assert!(again.is_constant());
        assert_eq!(again.ratios[0], r.ratio);
    }

    #[test]
    fn rebase_needs_two_observations() {
        let e = corpus::identity();
        assert_eq!(
            constant_ratio_rebase(&e, StateId(0), 1, 10).unwrap_err(),
            Error::NotStabilized { horizon: 1 }
        );
    }

    #[test]
    fn components_partition_the_power() {
        let a = corpus::aleshin().augment().unwrap();
        let comps = components_of_power(&a, 2, &Limits::default()).unwrap();
        assert_eq!(comps.iter().map(Component::len).sum::<usize>(), 49);
        for c in &comps {
            assert!(c.is_strongly_connected());
        }
    }
}
