//! Mealy automata over a dense integer encoding.
//!
//! States and letters are indices into flat `|Q| x |Σ|` tables. The action of a
//! state-word `q1 q2 ... qn` on a letter-word applies `q1` first, then `q2` to the
//! result, and so on. A letter travelling through a state-word is rewritten by
//! every state in turn (the cascade); that same cascade is how input letters act
//! on state-words.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct StateId(pub u32);

impl Letter {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl StateId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

pub type LetterWord = Vec<Letter>;
pub type StateWord = Vec<StateId>;

/// Where a state came from: an original state, a formal inverse, or the
/// identity state added by [`MealyAutomaton::augment`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StateKind {
    Plain,
    Inverse,
    Identity,
}

#[derive(Clone, PartialEq, Eq)]
pub struct MealyAutomaton {
    letters: Vec<String>,
    names: Vec<String>,
    kinds: Vec<StateKind>,
    delta: Vec<u32>,
    rho: Vec<u32>,
}

impl fmt::Debug for MealyAutomaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MealyAutomaton")
            .field("states", &self.names)
            .field("alphabet", &self.letters)
            .finish()
    }
}

impl MealyAutomaton {
    /// Builds an automaton from row-major tables: entry `q * |Σ| + i` holds
    /// `δ_i(q)` (resp. `ρ_q(i)`).
    pub fn from_tables(
        letters: Vec<String>,
        names: Vec<String>,
        delta: Vec<u32>,
        rho: Vec<u32>,
    ) -> Result<Self> {
        let kinds = vec![StateKind::Plain; names.len()];
        Self::with_kinds(letters, names, kinds, delta, rho)
    }

    pub fn with_kinds(
        letters: Vec<String>,
        names: Vec<String>,
        kinds: Vec<StateKind>,
        delta: Vec<u32>,
        rho: Vec<u32>,
    ) -> Result<Self> {
        let a = Self {
            letters,
            names,
            kinds,
            delta,
            rho,
        };
        a.validate()?;
        Ok(a)
    }

    /// Used by constructions whose tables are valid by construction. Names are
    /// still checked in debug builds.
    pub(crate) fn from_parts_unchecked(
        letters: Vec<String>,
        names: Vec<String>,
        kinds: Vec<StateKind>,
        delta: Vec<u32>,
        rho: Vec<u32>,
    ) -> Self {
        let a = Self {
            letters,
            names,
            kinds,
            delta,
            rho,
        };
        debug_assert!(a.validate().is_ok(), "{:?}", a.validate());
        a
    }

    fn validate(&self) -> Result<()> {
        let n = self.names.len();
        let k = self.letters.len();
        if n == 0 {
            return Err(Error::Invalid("state set is empty".into()));
        }
        if k == 0 {
            return Err(Error::Invalid("alphabet is empty".into()));
        }
        if self.kinds.len() != n || self.delta.len() != n * k || self.rho.len() != n * k {
            return Err(Error::Invalid("table dimensions do not match".into()));
        }
        if let Some(&bad) = self.delta.iter().find(|&&t| t as usize >= n) {
            return Err(Error::Invalid(format!("transition target {bad} out of range")));
        }
        if let Some(&bad) = self.rho.iter().find(|&&t| t as usize >= k) {
            return Err(Error::Invalid(format!("output letter {bad} out of range")));
        }
        let mut seen = std::collections::HashSet::with_capacity(n);
        for name in &self.names {
            if !seen.insert(name.as_str()) {
                return Err(Error::Invalid(format!("duplicate state name `{name}`")));
            }
        }
        let mut seen = std::collections::HashSet::with_capacity(k);
        for name in &self.letters {
            if !seen.insert(name.as_str()) {
                return Err(Error::Invalid(format!("duplicate letter `{name}`")));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn num_states(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn alphabet_size(&self) -> usize {
        self.letters.len()
    }

    #[inline]
    pub fn next(&self, q: StateId, i: Letter) -> StateId {
        StateId(self.delta[q.index() * self.letters.len() + i.index()])
    }

    #[inline]
    pub fn output(&self, q: StateId, i: Letter) -> Letter {
        Letter(self.rho[q.index() * self.letters.len() + i.index()])
    }

    pub fn states(&self) -> impl Iterator<Item = StateId> + Clone {
        (0..self.num_states() as u32).map(StateId)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + Clone {
        (0..self.alphabet_size() as u32).map(Letter)
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.names[q.index()]
    }

    pub fn state_names(&self) -> &[String] {
        &self.names
    }

    pub fn letter_name(&self, i: Letter) -> &str {
        &self.letters[i.index()]
    }

    pub fn letter_names(&self) -> &[String] {
        &self.letters
    }

    pub fn kind(&self, q: StateId) -> StateKind {
        self.kinds[q.index()]
    }

    pub fn state_by_name(&self, name: &str) -> Option<StateId> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|p| StateId(p as u32))
    }

    pub fn letter_by_name(&self, name: &str) -> Option<Letter> {
        self.letters
            .iter()
            .position(|n| n == name)
            .map(|p| Letter(p as u32))
    }

    /// Row-major `δ` table, `|Q| * |Σ|` entries.
    pub fn delta_table(&self) -> &[u32] {
        &self.delta
    }

    /// Row-major `ρ` table, `|Q| * |Σ|` entries.
    pub fn rho_table(&self) -> &[u32] {
        &self.rho
    }

    /// The letter map `ρ_q` restricted to single letters.
    pub fn letter_map(&self, q: StateId) -> &[u32] {
        let k = self.alphabet_size();
        &self.rho[q.index() * k..(q.index() + 1) * k]
    }

    pub fn word_name(&self, u: &[StateId]) -> String {
        join_names(u.iter().map(|&q| self.state_name(q)))
    }

    pub fn letter_word_name(&self, s: &[Letter]) -> String {
        s.iter().map(|&i| self.letter_name(i)).collect::<Vec<_>>().join("")
    }

    /// Action of a single state on a letter-word.
    pub fn rho_state(&self, q: StateId, s: &[Letter]) -> LetterWord {
        let mut p = q;
        s.iter()
            .map(|&i| {
                let out = self.output(p, i);
                p = self.next(p, i);
                out
            })
            .collect()
    }

    /// `ρ_u(s)`: applies `u[0]` first. The empty state-word acts as identity.
    pub fn apply_rho(&self, u: &[StateId], s: &[Letter]) -> LetterWord {
        let mut cur = s.to_vec();
        for &q in u {
            cur = self.rho_state(q, &cur);
        }
        cur
    }

    /// Feeds one letter through a state-word. Returns the successor word and
    /// the letter emitted by the last state.
    pub fn step_word(&self, u: &[StateId], i: Letter) -> (StateWord, Letter) {
        let mut c = i;
        let next = u
            .iter()
            .map(|&q| {
                let t = self.next(q, c);
                c = self.output(q, c);
                t
            })
            .collect();
        (next, c)
    }

    /// `δ_s(u)`: letters of `s` are fed left to right, each cascading through `u`.
    pub fn apply_delta(&self, s: &[Letter], u: &[StateId]) -> StateWord {
        let mut cur = u.to_vec();
        for &i in s {
            cur = self.step_word(&cur, i).0;
        }
        cur
    }

    /// Output label of the unique path with input label `s` ending at `q`.
    pub fn backtrack(&self, q: StateId, s: &[Letter]) -> Result<LetterWord> {
        let inv = self.delta_inverse().ok_or(Error::NotReversible)?;
        let n = self.num_states();
        let mut out = vec![Letter(0); s.len()];
        let mut p = q;
        for (pos, &i) in s.iter().enumerate().rev() {
            let prev = StateId(inv[i.index() * n + p.index()]);
            out[pos] = self.output(prev, i);
            p = prev;
        }
        Ok(out)
    }

    /// Inverse tables of the `δ_i`, indexed `i * |Q| + q`, when all are permutations.
    fn delta_inverse(&self) -> Option<Vec<u32>> {
        let n = self.num_states();
        let k = self.alphabet_size();
        let mut inv = vec![u32::MAX; n * k];
        for q in 0..n {
            for i in 0..k {
                let t = self.delta[q * k + i] as usize;
                let slot = &mut inv[i * n + t];
                if *slot != u32::MAX {
                    return None;
                }
                *slot = q as u32;
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        let k = self.alphabet_size();
        let mut seen = vec![false; k];
        self.states().all(|q| {
            seen.iter_mut().for_each(|s| *s = false);
            self.letter_map(q)
                .iter()
                .all(|&j| !std::mem::replace(&mut seen[j as usize], true))
        })
    }

    pub fn is_reversible(&self) -> bool {
        self.delta_inverse().is_some()
    }

    /// For every output letter `j`, the edges labelled `·|j` must form a
    /// permutation of `Q`: one leaving and one entering every state.
    pub fn is_coreversible(&self) -> bool {
        let n = self.num_states();
        let k = self.alphabet_size();
        let mut out_deg = vec![0u32; n * k];
        let mut in_deg = vec![0u32; n * k];
        for q in 0..n {
            for i in 0..k {
                let j = self.rho[q * k + i] as usize;
                let t = self.delta[q * k + i] as usize;
                out_deg[j * n + q] += 1;
                in_deg[j * n + t] += 1;
            }
        }
        out_deg.iter().chain(in_deg.iter()).all(|&d| d == 1)
    }

    pub fn is_bireversible(&self) -> bool {
        self.is_reversible() && self.is_coreversible()
    }

    /// Weakly connected as a graph; for reversible automata this coincides
    /// with strong connectivity.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    pub fn is_strongly_connected(&self) -> bool {
        let n = self.num_states();
        let k = self.alphabet_size();
        let reach = |forward: bool| {
            let mut adj = vec![Vec::new(); n];
            for q in 0..n {
                for i in 0..k {
                    let t = self.delta[q * k + i] as usize;
                    if forward {
                        adj[q].push(t);
                    } else {
                        adj[t].push(q);
                    }
                }
            }
            let mut seen = vec![false; n];
            let mut queue = VecDeque::from([0usize]);
            seen[0] = true;
            while let Some(q) = queue.pop_front() {
                for &t in &adj[q] {
                    if !std::mem::replace(&mut seen[t], true) {
                        queue.push_back(t);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        reach(true) && reach(false)
    }

    /// Weakly connected components, each sorted, listed by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<StateId>> {
        let n = self.num_states();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for q in self.states() {
            for i in self.letters() {
                let a = find(&mut parent, q.index());
                let b = find(&mut parent, self.next(q, i).index());
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: Vec<Vec<StateId>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for q in 0..n {
            let r = find(&mut parent, q);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(StateId(q as u32));
        }
        groups
    }

    /// The sub-automaton on a δ-closed set of states, relabelled densely in
    /// the order given.
    pub fn restrict(&self, states: &[StateId]) -> Result<MealyAutomaton> {
        let mut map = vec![u32::MAX; self.num_states()];
        for (new, &q) in states.iter().enumerate() {
            map[q.index()] = new as u32;
        }
        let k = self.alphabet_size();
        let mut delta = Vec::with_capacity(states.len() * k);
        let mut rho = Vec::with_capacity(states.len() * k);
        for &q in states {
            for i in self.letters() {
                let t = map[self.next(q, i).index()];
                if t == u32::MAX {
                    return Err(Error::Invalid("state set is not closed under δ".into()));
                }
                delta.push(t);
                rho.push(self.output(q, i).0);
            }
        }
        Ok(Self::from_parts_unchecked(
            self.letters.clone(),
            states.iter().map(|&q| self.names[q.index()].clone()).collect(),
            states.iter().map(|&q| self.kinds[q.index()]).collect(),
            delta,
            rho,
        ))
    }

    /// `A⁻¹`: the edge `p --i|j--> q` becomes `p' --j|i--> q'`.
    pub fn inverse(&self) -> Result<MealyAutomaton> {
        if !self.is_invertible() {
            return Err(Error::NotInvertible);
        }
        let k = self.alphabet_size();
        let mut delta = vec![0; self.delta.len()];
        let mut rho = vec![0; self.rho.len()];
        for q in 0..self.num_states() {
            for i in 0..k {
                let j = self.rho[q * k + i] as usize;
                delta[q * k + j] = self.delta[q * k + i];
                rho[q * k + j] = i as u32;
            }
        }
        let (names, kinds) = self
            .names
            .iter()
            .zip(&self.kinds)
            .map(|(name, &kind)| match kind {
                StateKind::Plain => (inverse_name(name), StateKind::Inverse),
                StateKind::Inverse => (
                    name.strip_suffix('\'').unwrap_or(name).to_string(),
                    StateKind::Plain,
                ),
                StateKind::Identity => (name.clone(), StateKind::Identity),
            })
            .unzip::<_, _, Vec<_>, Vec<_>>();
        let names = dedup_names(names);
        Ok(Self::from_parts_unchecked(
            self.letters.clone(),
            names,
            kinds,
            delta,
            rho,
        ))
    }

    /// `A ⊔ A⁻¹ ⊔ {1}`. States `0..|Q|` are `Q`, `|Q|..2|Q|` are the inverses
    /// in the same order, and `2|Q|` is the identity state.
    pub fn augment(&self) -> Result<MealyAutomaton> {
        let inv = self.inverse()?;
        let n = self.num_states() as u32;
        let k = self.alphabet_size();
        let mut delta = self.delta.clone();
        delta.extend(inv.delta.iter().map(|&t| t + n));
        delta.extend(std::iter::repeat_n(2 * n, k));
        let mut rho = self.rho.clone();
        rho.extend_from_slice(&inv.rho);
        rho.extend(0..k as u32);

        let mut names = self.names.clone();
        names.extend(inv.names);
        let mut identity = String::from("1");
        while names.contains(&identity) {
            identity.push('_');
        }
        names.push(identity);
        let mut kinds = self.kinds.clone();
        kinds.extend(inv.kinds);
        kinds.push(StateKind::Identity);
        Ok(Self::from_parts_unchecked(
            self.letters.clone(),
            dedup_names(names),
            kinds,
            delta,
            rho,
        ))
    }

    /// Disjoint union; the states of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &MealyAutomaton) -> Result<MealyAutomaton> {
        if self.alphabet_size() != other.alphabet_size() {
            return Err(Error::Invalid("alphabets differ in size".into()));
        }
        let n = self.num_states() as u32;
        let mut delta = self.delta.clone();
        delta.extend(other.delta.iter().map(|&t| t + n));
        let mut rho = self.rho.clone();
        rho.extend_from_slice(&other.rho);
        let mut names: Vec<String> = self.names.iter().map(|s| format!("{s}/0")).collect();
        names.extend(other.names.iter().map(|s| format!("{s}/1")));
        let mut kinds = self.kinds.clone();
        kinds.extend_from_slice(&other.kinds);
        Ok(Self::from_parts_unchecked(
            self.letters.clone(),
            names,
            kinds,
            delta,
            rho,
        ))
    }

    /// Same automaton with fresh state labels.
    pub fn relabel(&self, names: Vec<String>) -> Result<MealyAutomaton> {
        Self::with_kinds(
            self.letters.clone(),
            names,
            self.kinds.clone(),
            self.delta.clone(),
            self.rho.clone(),
        )
    }
}

pub(crate) fn join_names<'a>(parts: impl Iterator<Item = &'a str>) -> String {
    parts.collect::<Vec<_>>().join(".")
}

fn inverse_name(name: &str) -> String {
    format!("{name}'")
}

fn dedup_names(mut names: Vec<String>) -> Vec<String> {
    let mut seen = std::collections::HashSet::new();
    for name in names.iter_mut() {
        while !seen.insert(name.clone()) {
            name.push('\'');
        }
    }
    names
}

/// A state bijection `Q_A → Q_B` commuting with `δ` and `ρ`, if any.
///
/// Each tentative assignment is propagated along `δ`, which pins down a whole
/// connected component; unassigned components are then tried by backtracking.
pub fn isomorphic(a: &MealyAutomaton, b: &MealyAutomaton) -> Option<Vec<StateId>> {
    if a.num_states() != b.num_states() || a.alphabet_size() != b.alphabet_size() {
        return None;
    }
    let n = a.num_states();
    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];
    if extend_iso(a, b, &mut map, &mut used) {
        Some(map.into_iter().map(StateId).collect())
    } else {
        None
    }
}

fn extend_iso(a: &MealyAutomaton, b: &MealyAutomaton, map: &mut [u32], used: &mut [bool]) -> bool {
    let Some(p) = map.iter().position(|&m| m == u32::MAX) else {
        return true;
    };
    for t in 0..b.num_states() {
        if used[t] {
            continue;
        }
        let mut trail = Vec::new();
        if propagate_iso(a, b, p, t, map, used, &mut trail) && extend_iso(a, b, map, used) {
            return true;
        }
        for x in trail {
            used[map[x] as usize] = false;
            map[x] = u32::MAX;
        }
    }
    false
}

fn propagate_iso(
    a: &MealyAutomaton,
    b: &MealyAutomaton,
    p: usize,
    t: usize,
    map: &mut [u32],
    used: &mut [bool],
    trail: &mut Vec<usize>,
) -> bool {
    map[p] = t as u32;
    used[t] = true;
    trail.push(p);
    let mut stack = vec![(p, t)];
    while let Some((x, y)) = stack.pop() {
        let (x, y) = (StateId(x as u32), StateId(y as u32));
        if a.letter_map(x) != b.letter_map(y) {
            return false;
        }
        for i in a.letters() {
            let xn = a.next(x, i).index();
            let yn = b.next(y, i).index();
            match map[xn] {
                u32::MAX => {
                    if used[yn] {
                        return false;
                    }
                    map[xn] = yn as u32;
                    used[yn] = true;
                    trail.push(xn);
                    stack.push((xn, yn));
                }
                m if m as usize != yn => return false,
                _ => {}
            }
        }
    }
    true
}
