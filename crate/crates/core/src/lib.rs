//! Mealy automata, their powers and Nerode classes, with tools for probing
//! the growth of the groups they generate.

pub mod automaton;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod growth;
pub mod nerode;
pub mod power;
pub mod props;
pub mod text;

pub use automaton::{isomorphic, Letter, LetterWord, MealyAutomaton, StateId, StateKind, StateWord};
pub use enumerate::{dedup_isomorphic, enumerate_automata, enumerated_corpus, EnumerationSpec, Filter};
pub use error::{Error, Result};
pub use growth::{
    ball_size, ball_size_with, elements_equal, exponential_witness, growth_lower_bound_from_witness, growth_table,
    order_of_state, Generator, GroupContext, GrowthBound, GrowthMode, GrowthTable, OrderResult, WitnessLevel,
    WitnessReport,
};
pub use nerode::{
    component_partition, last_letter_histogram, minimize, minimize_component, nerode_partition, penultimate_letters,
    q_restricted_class, restricted_class, NerodePartition, QRestrictedClass, RestrictedClass,
};
pub use power::{
    closure_of, component_of, components_of_power, constant_ratio_rebase, power, ratio_sequence, Component, Limits,
    RatioSequence, Rebased, Tower,
};
pub use text::{parse_automaton, parse_letter_word, parse_state_word, to_dot, to_text};
