//! Exact element equality, growth balls, order detection and the
//! exponential-growth witness built from constant-ratio components.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::automaton::{MealyAutomaton, StateId, StateKind, StateWord};
use crate::error::{Error, Result};
use crate::nerode::{component_partition, refine, QRestrictedClass};
use crate::power::{closure_of, constant_ratio_rebase, power_tables, Limits, Tower};

/// A letter of a group word: a state, its formal inverse, or the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    State(StateId),
    Inverse(StateId),
    Identity,
}

/// The augmented automaton `A ⊔ A⁻¹ ⊔ {1}` with helpers for padded words.
#[derive(Clone, Debug)]
pub struct GroupContext {
    aug: MealyAutomaton,
    base: usize,
}

impl GroupContext {
    pub fn new(a: &MealyAutomaton) -> Result<Self> {
        Ok(Self {
            aug: a.augment()?,
            base: a.num_states(),
        })
    }

    pub fn automaton(&self) -> &MealyAutomaton {
        &self.aug
    }

    pub fn identity(&self) -> StateId {
        StateId(2 * self.base as u32)
    }

    pub fn index(&self, g: Generator) -> StateId {
        match g {
            Generator::State(q) => q,
            Generator::Inverse(q) => StateId(q.0 + self.base as u32),
            Generator::Identity => self.identity(),
        }
    }

    pub fn generator(&self, s: StateId) -> Generator {
        match self.aug.kind(s) {
            StateKind::Identity => Generator::Identity,
            StateKind::Inverse => Generator::Inverse(StateId(s.0 - self.base as u32)),
            StateKind::Plain => Generator::State(s),
        }
    }

    fn pad(&self, u: &[StateId], m: usize) -> StateWord {
        let mut w = u.to_vec();
        w.resize(m, self.identity());
        w
    }

    /// Whether two words over the augmented states induce the same action.
    ///
    /// Both are padded with the identity state to a common length `m`; the
    /// answer is read off the Nerode classes of the δ-closed set
    /// `cc(u) ∪ cc(v)` inside the `m`-th power (δ-closures when `A` is not
    /// reversible).
    pub fn equal(&self, u: &[StateId], v: &[StateId], cap: usize) -> Result<bool> {
        let m = u.len().max(v.len()).max(1);
        let (u, v) = (self.pad(u, m), self.pad(v, m));
        if u == v {
            return Ok(true);
        }
        let cu = closure_of(&self.aug, &u, cap)?;
        let iu = cu.index_of(&u).expect("seed is a member");
        if let Some(iv) = cu.index_of(&v) {
            let p = component_partition(&cu);
            return Ok(p.class_of[iu] == p.class_of[iv]);
        }
        let cv = closure_of(&self.aug, &v, cap)?;
        let iv = cv.index_of(&v).expect("seed is a member");
        let offset = cu.len() as u32;
        let mut delta = cu.delta_table().to_vec();
        delta.extend(cv.delta_table().iter().map(|&t| t + offset));
        let mut rho = cu.rho_table().to_vec();
        rho.extend_from_slice(cv.rho_table());
        let p = refine(cu.len() + cv.len(), self.aug.alphabet_size(), &delta, &rho);
        Ok(p.class_of[iu] == p.class_of[iv + cu.len()])
    }
}

pub fn elements_equal(a: &MealyAutomaton, u: &[Generator], v: &[Generator], limits: &Limits) -> Result<bool> {
    let ctx = GroupContext::new(a)?;
    let u: StateWord = u.iter().map(|&g| ctx.index(g)).collect();
    let v: StateWord = v.iter().map(|&g| ctx.index(g)).collect();
    ctx.equal(&u, &v, limits.component_cap)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GrowthMode {
    /// Symmetric generating set `Q ⊔ Q⁻¹`.
    #[default]
    Group,
    /// Generating set `Q`, no inverses.
    Semigroup,
}

/// `A ⊔ {1}`.
fn with_identity(a: &MealyAutomaton) -> MealyAutomaton {
    let n = a.num_states() as u32;
    let k = a.alphabet_size();
    let mut delta = a.delta_table().to_vec();
    delta.extend(std::iter::repeat_n(n, k));
    let mut rho = a.rho_table().to_vec();
    rho.extend(0..k as u32);
    let mut names = a.state_names().to_vec();
    let mut identity = String::from("1");
    while names.contains(&identity) {
        identity.push('_');
    }
    names.push(identity);
    let mut kinds: Vec<StateKind> = a.states().map(|q| a.kind(q)).collect();
    kinds.push(StateKind::Identity);
    MealyAutomaton::from_parts_unchecked(a.letter_names().to_vec(), names, kinds, delta, rho)
}

/// `γ(n)`: elements of length at most `n`, counted as the Nerode classes of
/// the `n`-th power of the automaton padded with an identity state.
pub fn ball_size_with(a: &MealyAutomaton, n: usize, mode: GrowthMode, limits: &Limits) -> Result<usize> {
    if n == 0 {
        return Ok(1);
    }
    let padded = match mode {
        GrowthMode::Group => a.augment()?,
        GrowthMode::Semigroup => with_identity(a),
    };
    let (delta, rho) = power_tables(&padded, n, limits.power_cap)?;
    let states = delta.len() / a.alphabet_size();
    let p = refine(states, a.alphabet_size(), &delta, &rho);
    // 1ⁿ is the last word; in a semigroup it counts only if some product equals it
    let empty = StateId(states as u32 - 1);
    let empty_only = mode == GrowthMode::Semigroup && p.class(empty).len() == 1;
    Ok(p.num_classes() - usize::from(empty_only))
}

pub fn ball_size(a: &MealyAutomaton, n: usize, limits: &Limits) -> Result<usize> {
    ball_size_with(a, n, GrowthMode::Group, limits)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthTable {
    pub radius: usize,
    pub mode: GrowthMode,
    /// `γ(1), …, γ(radius)`; `γ(0) = 1` is implicit.
    pub gamma: Vec<usize>,
    pub generating_set_size: usize,
}

pub fn growth_table(a: &MealyAutomaton, radius: usize, mode: GrowthMode, limits: &Limits) -> Result<GrowthTable> {
    if mode == GrowthMode::Group && !a.is_invertible() {
        return Err(Error::NotInvertible);
    }
    let gamma = (1..=radius)
        .into_par_iter()
        .map(|n| ball_size_with(a, n, mode, limits))
        .collect::<Result<Vec<_>>>()?;
    let generating_set_size = match mode {
        GrowthMode::Group => 2 * a.num_states(),
        GrowthMode::Semigroup => a.num_states(),
    };
    Ok(GrowthTable {
        radius,
        mode,
        gamma,
        generating_set_size,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderResult {
    /// `q^preperiod ≡ q^(preperiod + period)`, smallest such pair.
    Finite { period: usize, preperiod: usize },
    /// No repetition among `q⁰, …, q^horizon`. Not a proof of infinite order.
    NoRepetitionUpTo(usize),
}

pub fn order_of_state(a: &MealyAutomaton, q: StateId, horizon: usize, limits: &Limits) -> Result<OrderResult> {
    if !a.is_bireversible() {
        return Err(Error::NotBireversible);
    }
    let ctx = GroupContext::new(a)?;
    for m in 1..=horizon {
        let qm = vec![q; m];
        for r in 0..m {
            if ctx.equal(&qm, &vec![q; r], limits.component_cap)? {
                return Ok(OrderResult::Finite {
                    period: m - r,
                    preperiod: r,
                });
            }
        }
    }
    Ok(OrderResult::NoRepetitionUpTo(horizon))
}

/// One row of the witness table, for `cc(qⁿ)` in the rebased automaton.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessLevel {
    pub n: usize,
    pub size_cc: usize,
    pub mz_size: usize,
    pub nq_size: usize,
    /// `|N_q(n)| / |N_q(n-1)|`, absent for `n = 1`.
    pub nq_ratio: Option<BigRational>,
    /// `k^(n-1) / |N_q(n)|`.
    pub sandwich_lo: BigRational,
    /// `|Q'| k^(n-1) / |N_q(n)|`.
    pub sandwich_hi: BigRational,
    pub sandwich_ok: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WitnessReport {
    /// `qʲ` in the original automaton (`j = 1` when no rebasing was needed).
    pub q: StateWord,
    pub q_name: String,
    pub rebase_index: usize,
    /// `|Q'|`, the size of the rebased automaton `cc(qʲ)`.
    pub base_size: usize,
    /// Observed constant ratio of the rebased state.
    pub k: usize,
    pub levels: Vec<WitnessLevel>,
    /// `|cc(qⁿ)| = |Q'| k^(n-1)` at every level.
    pub sizes_match_ratio: bool,
    /// Estimate of `ℓ`: the last observed `N_q` ratio.
    pub ell: Option<BigRational>,
    /// Smallest `α` with `(k/ℓ)^α > |Q'|`.
    pub alpha: Option<usize>,
    /// `(k/ℓ)^α`.
    pub big_k: Option<BigRational>,
    /// `|N_q(n+1)| < k |N_q(n)|` at the last observed step.
    pub strict_gap_observed: bool,
    /// `(m, #mz(cc(u^m)))` for `u = q^α` and `α m ≤ horizon`.
    pub witness_sizes: Vec<(usize, usize)>,
    pub distinct_sizes_ok: bool,
    /// Fit of `|N_q(n)| ≈ ℓⁿ / (k c)` at the last level.
    pub c_estimate: Option<f64>,
}

impl WitnessReport {
    pub fn sandwich_holds(&self) -> bool {
        self.levels.iter().all(|l| l.sandwich_ok)
    }

    /// Ratio 1: the components stay bounded and no witness exists.
    pub fn is_degenerate(&self) -> bool {
        self.k == 1
    }

    pub fn mz_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.mz_size).collect()
    }

    pub fn nq_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.nq_size).collect()
    }
}

fn ratio(num: usize, den: usize) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn ratio_big(num: BigUint, den: usize) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn exponential_witness(a: &MealyAutomaton, q: StateId, horizon: usize, limits: &Limits) -> Result<WitnessReport> {
    if !a.is_bireversible() {
        return Err(Error::NotBireversible);
    }
    let cap = limits.component_cap;
    let rebased = constant_ratio_rebase(a, q, horizon, cap)?;
    let b = &rebased.automaton;
    let qb = rebased.state;
    let k = rebased.ratio;
    let base_size = b.num_states();
    let tower = Tower::build(b, qb, horizon, cap)?;

    let mut levels: Vec<WitnessLevel> = Vec::with_capacity(horizon);
    let mut sizes_match_ratio = true;
    let mut k_pow = BigUint::one();
    for n in 1..=horizon {
        let comp = tower.level(n);
        let part = component_partition(comp);
        let nq = QRestrictedClass::from_component(comp, &part, qb);
        let mz_size = part.num_classes();
        let nq_size = nq.len();
        sizes_match_ratio &= BigUint::from(comp.len()) == &k_pow * base_size;
        let sandwich_lo = ratio_big(k_pow.clone(), nq_size);
        let sandwich_hi = ratio_big(&k_pow * base_size, nq_size);
        let mz = BigRational::from_integer(BigInt::from(mz_size));
        let sandwich_ok = sandwich_lo <= mz && mz <= sandwich_hi;
        let nq_ratio = levels.last().map(|prev| ratio(nq_size, prev.nq_size));
        levels.push(WitnessLevel {
            n,
            size_cc: comp.len(),
            mz_size,
            nq_size,
            nq_ratio,
            sandwich_lo,
            sandwich_hi,
            sandwich_ok,
        });
        k_pow *= k;
    }

    let ell = levels.last().and_then(|l| l.nq_ratio.clone());
    let k_rat = ratio(k, 1);
    let strict_gap_observed = ell.as_ref().is_some_and(|l| *l < k_rat);

    let (alpha, big_k) = match &ell {
        Some(l) if k > 1 && *l < k_rat && !l.is_zero() => {
            let step = &k_rat / l;
            let bound = ratio(base_size, 1);
            let mut pow = step.clone();
            let mut alpha = 1;
            while pow <= bound {
                pow = &pow * &step;
                alpha += 1;
            }
            (Some(alpha), Some(pow))
        }
        _ => (None, None),
    };

    let witness_sizes: Vec<(usize, usize)> = match alpha {
        Some(alpha) => (1..)
            .take_while(|m| alpha * m <= horizon)
            .map(|m| (m, levels[alpha * m - 1].mz_size))
            .collect(),
        None => Vec::new(),
    };
    let distinct_sizes_ok = witness_sizes.len() >= 2
        && witness_sizes
            .iter()
            .enumerate()
            .all(|(p, a)| witness_sizes[p + 1..].iter().all(|b| a.1 != b.1));

    let c_estimate = match (&ell, levels.last()) {
        (Some(l), Some(last)) if k > 1 => {
            let l = l.to_f64().unwrap_or(f64::NAN);
            Some(l.powi(last.n as i32) / (k as f64 * last.nq_size as f64))
        }
        _ => None,
    };

    Ok(WitnessReport {
        q_name: a.word_name(&rebased.word),
        q: rebased.word,
        rebase_index: rebased.j,
        base_size,
        k,
        levels,
        sizes_match_ratio,
        ell,
        alpha,
        big_k,
        strict_gap_observed,
        witness_sizes,
        distinct_sizes_ok,
        c_estimate,
    })
}

/// Lower-bound certificate read off a witness: the sets `I_m` are pairwise
/// disjoint, so `Σ_{i≤m} |I_i|` distinct elements have length at most
/// `α m j` in the original generators.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthBound {
    /// `max_m (Σ_{i≤m} |I_i|)^(1 / (α m j))` over the observed range.
    pub base: f64,
    pub elements: usize,
    pub word_length: usize,
}

pub fn growth_lower_bound_from_witness(report: &WitnessReport) -> Result<GrowthBound> {
    let alpha = match report.alpha {
        Some(a) if report.distinct_sizes_ok => a,
        _ => {
            return Err(Error::NoWitness(if report.is_degenerate() {
                "ratio 1, components stay bounded".into()
            } else {
                "no pairwise-distinct minimization sizes observed".into()
            }))
        }
    };
    let mut best: Option<GrowthBound> = None;
    let mut total = 0usize;
    for &(m, size) in &report.witness_sizes {
        total += size;
        let word_length = alpha * m * report.rebase_index;
        let base = (total as f64).powf(1.0 / word_length as f64);
        if best.as_ref().is_none_or(|b| base > b.base) {
            best = Some(GrowthBound {
                base,
                elements: total,
                word_length,
            });
        }
    }
    best.ok_or_else(|| Error::NoWitness("empty witness range".into()))
}
