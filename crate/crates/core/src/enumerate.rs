//! Exhaustive enumeration of small Mealy automata.

use crate::automaton::{isomorphic, MealyAutomaton};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    All,
    Invertible,
    Reversible,
    Bireversible,
}

impl Filter {
    pub fn accepts(self, a: &MealyAutomaton) -> bool {
        match self {
            Filter::All => true,
            Filter::Invertible => a.is_invertible(),
            Filter::Reversible => a.is_reversible(),
            Filter::Bireversible => a.is_bireversible(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub num_states: usize,
    pub alphabet_size: usize,
    pub filter: Filter,
}

impl EnumerationSpec {
    /// `(|Q|·|Σ|)^(|Q|·|Σ|)`: every cell picks a target state and an output.
    pub fn raw_count(&self) -> Option<usize> {
        let cells = self.num_states.checked_mul(self.alphabet_size)?;
        cells.checked_pow(u32::try_from(cells).ok()?)
    }
}

/// Iterates raw transition tables in mixed-radix order, cell `(q, i)` being
/// digit `q·|Σ| + i` with the last cell varying fastest.
pub struct Enumerator {
    spec: EnumerationSpec,
    digits: Vec<usize>,
    position: usize,
    done: bool,
    letters: Vec<String>,
    names: Vec<String>,
}

pub fn enumerate_automata(spec: EnumerationSpec, budget: usize) -> Result<Enumerator> {
    if spec.num_states == 0 || spec.alphabet_size == 0 {
        return Err(Error::Invalid("need at least one state and one letter".into()));
    }
    match spec.raw_count() {
        Some(c) if c <= budget => {}
        _ => {
            return Err(Error::budget(
                format!(
                    "enumeration of {}-state automata over {} letters",
                    spec.num_states, spec.alphabet_size
                ),
                budget,
            ))
        }
    }
    let cells = spec.num_states * spec.alphabet_size;
    Ok(Enumerator {
        spec,
        digits: vec![0; cells],
        position: 0,
        done: false,
        letters: (0..spec.alphabet_size).map(|i| i.to_string()).collect(),
        names: (0..spec.num_states).map(|q| format!("s{q}")).collect(),
    })
}

impl Enumerator {
    fn current(&self) -> MealyAutomaton {
        let k = self.spec.alphabet_size;
        let delta = self.digits.iter().map(|&d| (d / k) as u32).collect();
        let rho = self.digits.iter().map(|&d| (d % k) as u32).collect();
        MealyAutomaton::from_tables(self.letters.clone(), self.names.clone(), delta, rho)
            .expect("enumerated tables are complete")
    }

    fn advance(&mut self) {
        self.position += 1;
        let radix = self.digits.len();
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < radix {
                return;
            }
            *d = 0;
        }
        self.done = true;
    }
}

impl Enumerator {
    /// Next accepted automaton together with its raw table index, which
    /// identifies it independently of the filter.
    pub fn next_indexed(&mut self) -> Option<(usize, MealyAutomaton)> {
        while !self.done {
            let a = self.current();
            let position = self.position;
            self.advance();
            if self.spec.filter.accepts(&a) {
                return Some((position, a));
            }
        }
        None
    }
}

impl Iterator for Enumerator {
    type Item = MealyAutomaton;

    fn next(&mut self) -> Option<MealyAutomaton> {
        self.next_indexed().map(|(_, a)| a)
    }
}

/// Enumerated automata labelled `enum-{Q}x{S}-{index}`.
pub fn enumerated_corpus(spec: EnumerationSpec, budget: usize, dedup: bool) -> Result<Vec<(String, MealyAutomaton)>> {
    let mut it = enumerate_automata(spec, budget)?;
    let mut out: Vec<(String, MealyAutomaton)> = Vec::new();
    while let Some((idx, a)) = it.next_indexed() {
        if dedup && out.iter().any(|(_, b)| isomorphic(b, &a).is_some()) {
            continue;
        }
        out.push((format!("enum-{}x{}-{idx}", spec.num_states, spec.alphabet_size), a));
    }
    Ok(out)
}

/// Keeps the first representative of every isomorphism class.
pub fn dedup_isomorphic(automata: impl IntoIterator<Item = MealyAutomaton>) -> Vec<MealyAutomaton> {
    let mut kept: Vec<MealyAutomaton> = Vec::new();
    for a in automata {
        if !kept.iter().any(|b| isomorphic(b, &a).is_some()) {
            kept.push(a);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(q: usize, s: usize, filter: Filter) -> EnumerationSpec {
        EnumerationSpec {
            num_states: q,
            alphabet_size: s,
            filter,
        }
    }

    #[test]
    fn one_state_bireversible() {
        let all: Vec<_> = enumerate_automata(spec(1, 2, Filter::All), 1000).unwrap().collect();
        assert_eq!(all.len(), 4);
        let bi: Vec<_> = enumerate_automata(spec(1, 2, Filter::Bireversible), 1000)
            .unwrap()
            .collect();
        assert_eq!(bi.len(), 2);
        let maps: Vec<&[u32]> = bi.iter().map(|a| a.letter_map(crate::StateId(0))).collect();
        assert_eq!(maps, vec![&[0, 1][..], &[1, 0][..]]);
    }

    #[test]
    fn counts_match_closed_form() {
        for (q, s) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let sp = spec(q, s, Filter::All);
            let n = enumerate_automata(sp, 1 << 20).unwrap().count();
            assert_eq!(Some(n), sp.raw_count());
        }
        assert_eq!(spec(2, 2, Filter::All).raw_count(), Some(256));
    }

    #[test]
    fn tables_are_distinct() {
        let tables: std::collections::HashSet<(Vec<u32>, Vec<u32>)> =
            enumerate_automata(spec(2, 2, Filter::All), 1000)
                .unwrap()
                .map(|a| (a.delta_table().to_vec(), a.rho_table().to_vec()))
                .collect();
        assert_eq!(tables.len(), 256);
    }

    #[test]
    fn filters_are_nested() {
        let count = |f| enumerate_automata(spec(2, 2, f), 1000).unwrap().count();
        let (all, inv, rev, bi) = (
            count(Filter::All),
            count(Filter::Invertible),
            count(Filter::Reversible),
            count(Filter::Bireversible),
        );
        assert!(bi <= rev && rev <= all && bi <= inv);
        for a in enumerate_automata(spec(2, 2, Filter::Bireversible), 1000).unwrap() {
            assert!(a.is_reversible() && a.is_invertible());
        }
    }

    #[test]
    fn indexed_corpus_labels() {
        let c = enumerated_corpus(spec(1, 2, Filter::Bireversible), 1000, false).unwrap();
        let ids: Vec<&str> = c.iter().map(|(id, _)| id.as_str()).collect();
        assert_eq!(ids, ["enum-1x2-1", "enum-1x2-2"]);
        let d = enumerated_corpus(spec(2, 2, Filter::Bireversible), 1000, true).unwrap();
        let all = enumerated_corpus(spec(2, 2, Filter::Bireversible), 1000, false).unwrap();
        assert_eq!(d.len(), dedup_isomorphic(all.into_iter().map(|(_, a)| a)).len());
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            enumerate_automata(spec(3, 2, Filter::All), 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn dedup_reduces() {
        let bi: Vec<_> = enumerate_automata(spec(2, 2, Filter::Bireversible), 1000)
            .unwrap()
            .collect();
        let classes = dedup_isomorphic(bi.clone());
        assert!(classes.len() < bi.len());
        for a in &bi {
            assert_eq!(classes.iter().filter(|b| isomorphic(b, a).is_some()).count(), 1);
        }
    }
}
