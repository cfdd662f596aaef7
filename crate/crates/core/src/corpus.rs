//! Small automata used throughout the examples and tests.

use crate::automaton::MealyAutomaton;
use crate::power;
use crate::text::parse_automaton;

pub const ALESHIN_TEXT: &str = include_str!("../corpus/aleshin.mealy");
pub const IDENTITY_TEXT: &str = include_str!("../corpus/identity.mealy");
pub const SWAP_IDENTITY_TEXT: &str = include_str!("../corpus/swap_identity.mealy");
pub const ALESHIN_MUTANT_TEXT: &str = include_str!("../corpus/aleshin_mutant.mealy");

pub fn aleshin() -> MealyAutomaton {
    parse_automaton(ALESHIN_TEXT).expect("bundled automaton parses")
}

/// One state over `{0, 1}` fixing every word.
pub fn identity() -> MealyAutomaton {
    parse_automaton(IDENTITY_TEXT).expect("bundled automaton parses")
}

/// Two states over `{0, 1}`: `a` swaps the letters everywhere, `b` is the identity.
pub fn swap_identity() -> MealyAutomaton {
    parse_automaton(SWAP_IDENTITY_TEXT).expect("bundled automaton parses")
}

/// Aleshin with the outputs of `x` set to `0|0, 1|1`.
pub fn aleshin_mutant() -> MealyAutomaton {
    parse_automaton(ALESHIN_MUTANT_TEXT).expect("bundled automaton parses")
}

/// identity, Aleshin, Aleshin², augmented Aleshin.
pub fn curated() -> Vec<(String, MealyAutomaton)> {
    let a = aleshin();
    vec![
        ("identity".to_string(), identity()),
        ("aleshin".to_string(), a.clone()),
        (
            "aleshin^2".to_string(),
            power::power(&a, 2, power::DEFAULT_POWER_CAP).expect("9 states"),
        ),
        (
            "aleshin+inverse+1".to_string(),
            a.augment().expect("Aleshin is invertible"),
        ),
    ]
}
