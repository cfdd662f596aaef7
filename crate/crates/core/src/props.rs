//! One checkable predicate per structural lemma about powers and Nerode
//! classes of bireversible automata, and a suite runner over a corpus.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::automaton::{MealyAutomaton, StateId};
use crate::error::{Error, Result};
use crate::nerode::{component_partition, penultimate_letters, NerodePartition, QRestrictedClass};
use crate::power::{components_of_power, Component, Limits, RatioSequence, Tower};
use crate::text::{parse_automaton, to_text};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropertyId {
    L1,
    L2,
    L3,
    L4,
    RatioMono,
    L5,
    L6,
    L7,
    L8,
    L9,
    L10,
    P11,
    P12,
    Eq2,
}

impl PropertyId {
    pub const ALL: [PropertyId; 14] = [
        PropertyId::L1,
        PropertyId::L2,
        PropertyId::L3,
        PropertyId::L4,
        PropertyId::RatioMono,
        PropertyId::L5,
        PropertyId::L6,
        PropertyId::L7,
        PropertyId::L8,
        PropertyId::L9,
        PropertyId::L10,
        PropertyId::P11,
        PropertyId::P12,
        PropertyId::Eq2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PropertyId::L1 => "L1",
            PropertyId::L2 => "L2",
            PropertyId::L3 => "L3",
            PropertyId::L4 => "L4",
            PropertyId::RatioMono => "RATIO-MONO",
            PropertyId::L5 => "L5",
            PropertyId::L6 => "L6",
            PropertyId::L7 => "L7",
            PropertyId::L8 => "L8",
            PropertyId::L9 => "L9",
            PropertyId::L10 => "L10",
            PropertyId::P11 => "P11",
            PropertyId::P12 => "P12",
            PropertyId::Eq2 => "EQ2",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            PropertyId::L1 => "in a component of a power, |follow(u)| depends only on |u|",
            PropertyId::L2 => "in a component of a power, |precede(u)| depends only on |u|",
            PropertyId::L3 => "uv in cc(q^n) implies v in cc(q^|v|) and follow(uv) within follow(v)",
            PropertyId::L4 => "uv in cc(q^n) implies u in cc(q^|u|) and precede(uv) within precede(u)",
            PropertyId::RatioMono => "#cc(q^(n+1))/#cc(q^n) is an integer and non-increasing in n",
            PropertyId::L5 => "constant ratio: follow(uv) equals follow(v)",
            PropertyId::L6 => "constant ratio: precede(u) in cc(q^n) depends only on the first letter of u",
            PropertyId::L7 => "constant ratio k: every follow and precede set in cc(q^n) has k elements",
            PropertyId::L8 => "a Nerode class of a component has as many members ending in p as ending in q",
            PropertyId::L9 => "restricted Nerode classes within one component have equal size",
            PropertyId::L10 => "constant ratio: N_q(n)·q is contained in N_q(n+1)",
            PropertyId::P11 => "constant ratio k: |N_q(n+1)|/|N_q(n)| = |penultimate letters of N_q(n+1)| <= k",
            PropertyId::P12 => "constant ratio: |N_q(n+1)|/|N_q(n)| is ultimately non-decreasing",
            PropertyId::Eq2 => "constant ratio k: k^(n-1)/|N_q(n)| <= #mz(cc(q^n)) <= |cc(q)|·k^(n-1)/|N_q(n)|",
        }
    }

    fn needs_constant_ratio(self) -> bool {
        matches!(
            self,
            PropertyId::L5
                | PropertyId::L6
                | PropertyId::L7
                | PropertyId::L10
                | PropertyId::P11
                | PropertyId::P12
                | PropertyId::Eq2
        )
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PropertyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PropertyId::ALL
            .into_iter()
            .find(|p| p.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownDesignator(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skip(String),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skip(_) => "SKIP",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    /// Largest power length inspected.
    pub horizon: usize,
    /// When false, lemma hypotheses are assumed rather than checked.
    pub check_hypotheses: bool,
}

impl Params {
    pub fn new(horizon: usize) -> Self {
        Self {
            horizon,
            check_hypotheses: true,
        }
    }
}

/// A self-contained failure: the automaton in text form plus the words
/// that break the property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub automaton: String,
    pub words: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: PropertyId,
    pub automaton_id: String,
    pub params: Params,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
}

impl PropertyReport {
    /// Counterexample as a file that parses back as an automaton.
    pub fn counterexample_text(&self) -> Option<String> {
        let c = self.counterexample.as_ref()?;
        Some(format!(
            "# {} failed on {} at horizon {}\n# {}\n# words: {}\n{}",
            self.property,
            self.automaton_id,
            self.params.horizon,
            c.detail,
            c.words.join(" "),
            c.automaton
        ))
    }
}

/// Re-runs a failing report from its serialized counterexample alone.
pub fn replay(report: &PropertyReport, limits: &Limits) -> Result<PropertyReport> {
    let c = report
        .counterexample
        .as_ref()
        .ok_or_else(|| Error::Invalid("report has no counterexample".into()))?;
    let a = parse_automaton(&c.automaton)?;
    check_property_with(report.property, &a, &report.automaton_id, report.params, limits)
}

struct Violation {
    detail: String,
    words: Vec<String>,
}

enum Outcome {
    Pass,
    Fail(Violation),
    Skip(String),
}

macro_rules! fail {
    ($words:expr, $($fmt:tt)+) => {
        return Ok(Outcome::Fail(Violation { detail: format!($($fmt)+), words: $words }))
    };
}

struct StateData {
    q: StateId,
    tower: Tower,
    ratios: RatioSequence,
    /// Nerode partitions of `cc(qⁿ)` for `n = 1..=horizon`.
    partitions: Vec<NerodePartition>,
    /// `N_q(n)` for `n = 1..=horizon`.
    nq: Vec<QRestrictedClass>,
}

impl StateData {
    fn level(&self, n: usize) -> &Component {
        self.tower.level(n)
    }

    fn nq(&self, n: usize) -> &QRestrictedClass {
        &self.nq[n - 1]
    }

    /// The ratio when all observed ratios agree; a single observation is not
    /// enough to call the sequence constant.
    fn constant_ratio(&self) -> Option<usize> {
        if self.ratios.ratios.len() < 2 {
            return None;
        }
        self.ratios.constant_ratio()
    }
}

/// Lazily computed data for one automaton, shared across properties.
pub struct Context {
    id: String,
    a: MealyAutomaton,
    params: Params,
    limits: Limits,
    powers: OnceLock<Result<Vec<Vec<Component>>>>,
    states: OnceLock<Result<Vec<StateData>>>,
}

impl Context {
    pub fn new(id: impl Into<String>, a: MealyAutomaton, params: Params, limits: Limits) -> Self {
        Self {
            id: id.into(),
            a,
            params,
            limits,
            powers: OnceLock::new(),
            states: OnceLock::new(),
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn automaton(&self) -> &MealyAutomaton {
        &self.a
    }

    fn horizon(&self) -> usize {
        self.params.horizon
    }

    /// Components of `Aⁿ` for `n = 1..=horizon`.
    fn powers(&self) -> Result<&[Vec<Component>]> {
        self.powers
            .get_or_init(|| {
                (1..=self.horizon())
                    .map(|n| components_of_power(&self.a, n, &self.limits))
                    .collect()
            })
            .as_deref()
            .map_err(Clone::clone)
    }

    fn states(&self) -> Result<&[StateData]> {
        self.states
            .get_or_init(|| self.a.states().map(|q| self.state_data(q)).collect())
            .as_deref()
            .map_err(Clone::clone)
    }

    fn state_data(&self, q: StateId) -> Result<StateData> {
        let h = self.horizon();
        let tower = Tower::build(&self.a, q, h + 1, self.limits.component_cap)?;
        let ratios = RatioSequence::from_tower(&tower, h);
        let mut partitions = Vec::with_capacity(h);
        let mut nq = Vec::with_capacity(h);
        for n in 1..=h {
            let c = tower.level(n);
            let p = component_partition(c);
            nq.push(QRestrictedClass::from_component(c, &p, q));
            partitions.push(p);
        }
        Ok(StateData {
            q,
            tower,
            ratios,
            partitions,
            nq,
        })
    }

    /// Observed ratio sequences, for the constant-ratio census.
    pub fn census(&self) -> Result<Vec<CensusRow>> {
        Ok(self
            .states()?
            .iter()
            .map(|s| (s.q, s.ratios.ratios.clone(), s.constant_ratio()))
            .collect())
    }

    fn words<'w>(&self, ws: impl IntoIterator<Item = &'w [StateId]>) -> Vec<String> {
        ws.into_iter().map(|w| self.a.word_name(w)).collect()
    }

    fn constant_states(&self) -> Result<Vec<(&StateData, usize)>> {
        let all = self.states()?;
        if !self.params.check_hypotheses {
            return Ok(all
                .iter()
                .filter_map(|s| s.ratios.ratios.first().map(|&k| (s, k)))
                .collect());
        }
        Ok(all.iter().filter_map(|s| s.constant_ratio().map(|k| (s, k))).collect())
    }

    pub fn check(&self, property: PropertyId) -> Result<PropertyReport> {
        let outcome = self.outcome(property)?;
        let (verdict, counterexample) = match outcome {
            Outcome::Pass => (Verdict::Pass, None),
            Outcome::Skip(why) => (Verdict::Skip(why), None),
            Outcome::Fail(v) => (
                Verdict::Fail,
                Some(Counterexample {
                    automaton: to_text(&self.a),
                    words: v.words,
                    detail: v.detail,
                }),
            ),
        };
        Ok(PropertyReport {
            property,
            automaton_id: self.id.clone(),
            params: self.params,
            verdict,
            counterexample,
        })
    }

    fn outcome(&self, property: PropertyId) -> Result<Outcome> {
        if self.params.check_hypotheses {
            if !self.a.is_bireversible() {
                return Ok(Outcome::Skip("automaton is not bireversible".into()));
            }
            if property.needs_constant_ratio() {
                if self.horizon() < 2 {
                    return Ok(Outcome::Skip("a constant ratio needs horizon at least 2 to observe".into()));
                }
                if self.constant_states()?.is_empty() {
                    return Ok(Outcome::Skip(format!(
                        "no state has an observed constant ratio up to n = {}",
                        self.horizon()
                    )));
                }
            }
        } else if !self.a.is_reversible() {
            // components are only defined for reversible automata
            return Ok(Outcome::Skip("automaton is not reversible".into()));
        }
        match property {
            PropertyId::L1 => self.follow_cards_by_length(),
            PropertyId::L2 => self.precede_cards_by_length(),
            PropertyId::L3 => self.follow_inclusion(false),
            PropertyId::L4 => self.precede_inclusion(),
            PropertyId::RatioMono => self.ratio_mono(),
            PropertyId::L5 => self.follow_inclusion(true),
            PropertyId::L6 => self.precede_by_first_letter(),
            PropertyId::L7 => self.cards_equal_ratio(),
            PropertyId::L8 => self.last_letters_uniform(),
            PropertyId::L9 => self.restricted_sizes_equal(),
            PropertyId::L10 => self.nq_inclusion(),
            PropertyId::P11 => self.nq_ratio_penultimate(),
            PropertyId::P12 => self.nq_ratio_increasing(),
            PropertyId::Eq2 => self.sandwich(),
        }
    }

    fn follow_cards_by_length(&self) -> Result<Outcome> {
        for (n, comps) in (1..).zip(self.powers()?) {
            for c in comps {
                for m in 1..n {
                    let mut first: Option<(&[StateId], usize)> = None;
                    for u in c.prefixes(m) {
                        let card = c.follow_set(u)?.len();
                        match first {
                            None => first = Some((u, card)),
                            Some((v, k)) if k != card => fail!(
                                self.words([v, u]),
                                "prefixes of length {m} in a component of A^{n} have {k} and {card} followers"
                            ),
                            _ => {}
                        }
                    }
                }
            }
        }
        Ok(Outcome::Pass)
    }

    fn precede_cards_by_length(&self) -> Result<Outcome> {
        for (n, comps) in (1..).zip(self.powers()?) {
            for c in comps {
                for m in 1..n {
                    let mut first: Option<(&[StateId], usize)> = None;
                    for u in c.suffixes(m) {
                        let card = c.precede_set(u)?.len();
                        match first {
                            None => first = Some((u, card)),
                            Some((v, k)) if k != card => fail!(
                                self.words([v, u]),
                                "suffixes of length {m} in a component of A^{n} have {k} and {card} predecessors"
                            ),
                            _ => {}
                        }
                    }
                }
            }
        }
        Ok(Outcome::Pass)
    }

    /// With `equal` the inclusion must be an equality (constant-ratio states only).
    fn follow_inclusion(&self, equal: bool) -> Result<Outcome> {
        let targets: Vec<&StateData> = if equal {
            self.constant_states()?.into_iter().map(|(s, _)| s).collect()
        } else {
            self.states()?.iter().collect()
        };
        for s in targets {
            for n in 2..=self.horizon() {
                let up = s.level(n + 1);
                for w in s.level(n).members() {
                    let f_w = up.follow_set(w)?;
                    for cut in 1..n {
                        let v = &w[cut..];
                        if !s.level(v.len()).contains(v) {
                            fail!(
                                self.words([w, v]),
                                "suffix of a member of cc(q^{n}) is not in cc(q^{})",
                                v.len()
                            );
                        }
                        let f_v = s.level(v.len() + 1).follow_set(v)?;
                        let ok = if equal { f_w == f_v } else { f_w.is_subset(&f_v) };
                        if !ok {
                            fail!(
                                self.words([w, v]),
                                "follow sets {:?} and {:?} violate the {}",
                                self.names(&f_w),
                                self.names(&f_v),
                                if equal { "equality" } else { "inclusion" }
                            );
                        }
                    }
                }
            }
        }
        Ok(Outcome::Pass)
    }

    fn precede_inclusion(&self) -> Result<Outcome> {
        for s in self.states()? {
            for n in 2..=self.horizon() {
                let up = s.level(n + 1);
                for w in s.level(n).members() {
                    let p_w = up.precede_set(w)?;
                    for cut in 1..n {
                        let u = &w[..cut];
                        if !s.level(u.len()).contains(u) {
                            fail!(
                                self.words([w, u]),
                                "prefix of a member of cc(q^{n}) is not in cc(q^{cut})"
                            );
                        }
                        let p_u = s.level(u.len() + 1).precede_set(u)?;
                        if !p_w.is_subset(&p_u) {
                            fail!(
                                self.words([w, u]),
                                "precede sets {:?} and {:?} violate the inclusion",
                                self.names(&p_w),
                                self.names(&p_u)
                            );
                        }
                    }
                }
            }
        }
        Ok(Outcome::Pass)
    }

    fn ratio_mono(&self) -> Result<Outcome> {
        for s in self.states()? {
            let r = &s.ratios;
            let q = [s.q];
            if !r.is_integral() {
                fail!(self.words([&q[..]]), "sizes {:?} are not linked by the ratios {:?}", r.sizes, r.ratios);
            }
            if !r.is_non_increasing() {
                fail!(self.words([&q[..]]), "ratios {:?} increase", r.ratios);
            }
        }
        Ok(Outcome::Pass)
    }

    fn precede_by_first_letter(&self) -> Result<Outcome> {
        for (s, _) in self.constant_states()? {
            for n in 2..=self.horizon() {
                let c = s.level(n);
                for m in 1..n {
                    let mut seen: BTreeMap<StateId, (&[StateId], BTreeSet<StateId>)> = BTreeMap::new();
                    for u in c.suffixes(m) {
                        let p = c.precede_set(u)?;
                        match seen.get(&u[0]) {
                            None => {
                                seen.insert(u[0], (u, p));
                            }
                            Some((v, pv)) if *pv != p => fail!(
                                self.words([*v, u]),
                                "suffixes with the same first letter have predecessors {:?} and {:?} in cc(q^{n})",
                                self.names(pv),
                                self.names(&p)
                            ),
                            _ => {}
                        }
                    }
                }
            }
        }
        Ok(Outcome::Pass)
    }

    fn cards_equal_ratio(&self) -> Result<Outcome> {
        for (s, k) in self.constant_states()? {
            for n in 2..=self.horizon() {
                let c = s.level(n);
                for m in 1..n {
                    for u in c.prefixes(m) {
                        let card = c.follow_set(u)?.len();
                        if card != k {
                            fail!(self.words([u]), "{card} followers in cc(q^{n}), ratio is {k}");
                        }
                    }
                    for u in c.suffixes(m) {
                        let card = c.precede_set(u)?.len();
                        if card != k {
                            fail!(self.words([u]), "{card} predecessors in cc(q^{n}), ratio is {k}");
                        }
                    }
                }
            }
        }
        Ok(Outcome::Pass)
    }

    /// Checked on each connected part of `A`, the lemma being stated for
    /// connected automata.
    fn last_letters_uniform(&self) -> Result<Outcome> {
        let parts = self.a.connected_components();
        for part in &parts {
            let owned;
            let (b, map): (&MealyAutomaton, Option<&[StateId]>) = if parts.len() == 1 {
                (&self.a, None)
            } else {
                owned = self.a.restrict(part)?;
                (&owned, Some(part.as_slice()))
            };
            for n in 1..=self.horizon() {
                for c in components_of_power(b, n, &self.limits)? {
                    let p = component_partition(&c);
                    for class in &p.classes {
                        let words: Vec<&[StateId]> = class.iter().map(|m| c.word(m.index())).collect();
                        let hist = crate::nerode::last_letter_histogram(&words);
                        let mut counts = hist.values();
                        let first = counts.next().copied().unwrap_or(0);
                        if counts.any(|&x| x != first) {
                            let lifted: Vec<Vec<StateId>> = words
                                .iter()
                                .map(|w| match map {
                                    Some(m) => w.iter().map(|q| m[q.index()]).collect(),
                                    None => w.to_vec(),
                                })
                                .collect();
                            fail!(
                                self.words(lifted.iter().map(Vec::as_slice)),
                                "last-letter counts {:?} in a Nerode class of a component of A^{n}",
                                hist.values().collect::<Vec<_>>()
                            );
                        }
                    }
                }
            }
        }
        Ok(Outcome::Pass)
    }

    fn restricted_sizes_equal(&self) -> Result<Outcome> {
        for (n, comps) in (1..).zip(self.powers()?) {
            for c in comps {
                let p = component_partition(c);
                let size = p.classes[0].len();
                if let Some(other) = p.classes.iter().find(|cl| cl.len() != size) {
                    fail!(
                        self.words([c.word(p.classes[0][0].index()), c.word(other[0].index())]),
                        "restricted classes of sizes {size} and {} in one component of A^{n}",
                        other.len()
                    );
                }
            }
        }
        Ok(Outcome::Pass)
    }

    fn nq_inclusion(&self) -> Result<Outcome> {
        for (s, _) in self.constant_states()? {
            for n in 1..self.horizon() {
                let next = s.nq(n + 1);
                for u in &s.nq(n).members {
                    let mut uq = u.clone();
                    uq.push(s.q);
                    if !next.contains(&uq) {
                        fail!(self.words([u.as_slice()]), "u·q is not in N_q({})", n + 1);
                    }
                }
            }
        }
        Ok(Outcome::Pass)
    }

    fn nq_ratio_penultimate(&self) -> Result<Outcome> {
        for (s, k) in self.constant_states()? {
            for n in 1..self.horizon() {
                let (a, b) = (s.nq(n), s.nq(n + 1));
                let pen = penultimate_letters(b)?.len();
                let q = [s.q];
                if b.len() != a.len() * pen {
                    fail!(
                        self.words([&q[..]]),
                        "|N_q({})| = {} but |N_q({n})| = {} and {pen} penultimate letters",
                        n + 1,
                        b.len(),
                        a.len()
                    );
                }
                if pen > k {
                    fail!(self.words([&q[..]]), "ratio {pen} of N_q at n = {n} exceeds k = {k}");
                }
            }
        }
        Ok(Outcome::Pass)
    }

    /// The first-letter sets must grow; wherever two consecutive ones agree,
    /// the penultimate letters and thus the ratio may not shrink after.
    fn nq_ratio_increasing(&self) -> Result<Outcome> {
        let h = self.horizon();
        for (s, k) in self.constant_states()? {
            let q = [s.q];
            for n in 1..h {
                let (f0, f1) = (s.nq(n).first_letters(), s.nq(n + 1).first_letters());
                if !f0.is_subset(&f1) {
                    fail!(self.words([&q[..]]), "first letters of N_q shrink between n = {n} and {}", n + 1);
                }
                if n + 2 > h || f0 != f1 {
                    continue;
                }
                let (p1, p2) = (penultimate_letters(s.nq(n + 1))?, penultimate_letters(s.nq(n + 2))?);
                if !p1.is_subset(&p2) {
                    fail!(
                        self.words([&q[..]]),
                        "penultimate letters {:?} of N_q({}) not among {:?} of N_q({})",
                        self.names(&p1),
                        n + 1,
                        self.names(&p2),
                        n + 2
                    );
                }
                let (a, b, c) = (s.nq(n).len(), s.nq(n + 1).len(), s.nq(n + 2).len());
                if b * b > a * c {
                    fail!(self.words([&q[..]]), "N_q ratio drops after n = {n}: sizes {a}, {b}, {c}");
                }
            }
            for n in 1..h {
                if s.nq(n + 1).len() > k * s.nq(n).len() {
                    fail!(self.words([&q[..]]), "N_q ratio exceeds k = {k} at n = {n}");
                }
            }
        }
        Ok(Outcome::Pass)
    }

    /// Both the chain through the restricted class and its rewriting with
    /// `|cc(qⁿ)| = |cc(q)|·k^(n-1)`, in exact integer arithmetic.
    fn sandwich(&self) -> Result<Outcome> {
        let total = self.a.num_states() as u128;
        for (s, k) in self.constant_states()? {
            let base = s.level(1).len() as u128;
            let q = [s.q];
            for n in 1..=self.horizon() {
                let c = s.level(n);
                let p = &s.partitions[n - 1];
                let seed = c.index_of(&vec![s.q; n]).expect("qⁿ lies in its own component");
                let restricted = p.class(StateId(seed as u32)).len() as u128;
                let cc = c.len() as u128;
                let mz = p.num_classes() as u128;
                let nq = s.nq(n).len() as u128;
                let kn = (k as u128).pow(n as u32 - 1);
                if mz * restricted != cc {
                    fail!(self.words([&q[..]]), "#mz(cc(q^{n})) = {mz} is not {cc}/{restricted}");
                }
                if !(mz * nq <= cc && cc <= total * nq * mz) {
                    fail!(
                        self.words([&q[..]]),
                        "chain |cc|/(|Q||N|) <= mz <= |cc|/|N| broken at n = {n}: cc {cc}, N {nq}, mz {mz}"
                    );
                }
                if cc != base * kn {
                    fail!(self.words([&q[..]]), "|cc(q^{n})| = {cc} differs from {base}·{k}^{}", n - 1);
                }
                if !(kn <= mz * nq && mz * nq <= base * kn) {
                    fail!(
                        self.words([&q[..]]),
                        "sandwich {kn}/{nq} <= {mz} <= {}/{nq} broken at n = {n}",
                        base * kn
                    );
                }
            }
        }
        Ok(Outcome::Pass)
    }

    fn names(&self, set: &BTreeSet<StateId>) -> Vec<String> {
        set.iter().map(|&q| self.a.state_name(q).to_string()).collect()
    }
}

pub fn check_property(
    property: PropertyId,
    a: &MealyAutomaton,
    automaton_id: &str,
    horizon: usize,
    limits: &Limits,
) -> Result<PropertyReport> {
    check_property_with(property, a, automaton_id, Params::new(horizon), limits)
}

pub fn check_property_with(
    property: PropertyId,
    a: &MealyAutomaton,
    automaton_id: &str,
    params: Params,
    limits: &Limits,
) -> Result<PropertyReport> {
    if params.horizon == 0 {
        return Err(Error::Invalid("horizon must be at least 1".into()));
    }
    Context::new(automaton_id, a.clone(), params, *limits).check(property)
}

/// A state, its observed ratios and the common value when they are constant.
pub type CensusRow = (StateId, Vec<usize>, Option<usize>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub automaton_id: String,
    pub state: String,
    pub ratios: Vec<usize>,
    pub constant: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub reports: Vec<PropertyReport>,
    /// Observed ratio sequences of every state of every bireversible automaton.
    pub census: Vec<CensusEntry>,
}

impl SuiteReport {
    pub fn count(&self, label: &str) -> usize {
        self.reports.iter().filter(|r| r.verdict.label() == label).count()
    }

    pub fn passed(&self) -> usize {
        self.count("PASS")
    }

    pub fn failed(&self) -> usize {
        self.count("FAIL")
    }

    pub fn skipped(&self) -> usize {
        self.count("SKIP")
    }

    pub fn all_ok(&self) -> bool {
        self.failed() == 0
    }
}

/// Checks every listed property on every automaton. Reports come back in
/// corpus order, then property order, whatever the thread count.
pub fn run_suite(
    corpus: &[(String, MealyAutomaton)],
    properties: &[PropertyId],
    horizon: usize,
    limits: &Limits,
) -> Result<SuiteReport> {
    if horizon == 0 {
        return Err(Error::Invalid("horizon must be at least 1".into()));
    }
    let contexts: Vec<Context> = corpus
        .iter()
        .map(|(id, a)| Context::new(id.clone(), a.clone(), Params::new(horizon), *limits))
        .collect();
    let pairs: Vec<(&Context, PropertyId)> = contexts
        .iter()
        .flat_map(|c| properties.iter().map(move |&p| (c, p)))
        .collect();
    let reports = pairs
        .par_iter()
        .map(|(c, p)| c.check(*p))
        .collect::<Result<Vec<_>>>()?;
    let mut census = Vec::new();
    for c in &contexts {
        if !c.a.is_bireversible() {
            continue;
        }
        for (q, ratios, constant) in c.census()? {
            census.push(CensusEntry {
                automaton_id: c.id.clone(),
                state: c.a.state_name(q).to_string(),
                ratios,
                constant,
            });
        }
    }
    Ok(SuiteReport { reports, census })
}
