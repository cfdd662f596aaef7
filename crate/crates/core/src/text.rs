//! Line-oriented automaton format and DOT export.
//!
//! ```text
//! # the Aleshin automaton
//! alphabet: 0 1
//! states: x y z
//! x 0 -> z 1
//! x 1 -> y 0
//! ...
//! ```
//!
//! Each transition line reads `state input -> target output`. The `alphabet:`
//! and `states:` headers are optional; without them symbols are declared in
//! order of first appearance.

use std::fmt::Write;

use crate::automaton::{Letter, MealyAutomaton, StateId};
use crate::error::{Error, Result};

struct Symbols {
    names: Vec<String>,
    declared: bool,
}

impl Symbols {
    fn new() -> Self {
        Self {
            names: Vec::new(),
            declared: false,
        }
    }

    fn declare(&mut self, line: usize, items: &[&str]) -> Result<()> {
        if self.declared {
            return Err(Error::Parse {
                line,
                message: "header given twice".into(),
            });
        }
        for &item in items {
            if self.names.iter().any(|n| n == item) {
                return Err(Error::Parse {
                    line,
                    message: format!("`{item}` declared twice"),
                });
            }
            self.names.push(item.to_string());
        }
        self.declared = true;
        Ok(())
    }

    fn resolve(&mut self, line: usize, symbol: &str) -> Result<usize> {
        if let Some(p) = self.names.iter().position(|n| n == symbol) {
            return Ok(p);
        }
        if self.declared {
            return Err(Error::UnknownSymbol {
                line,
                symbol: symbol.to_string(),
            });
        }
        self.names.push(symbol.to_string());
        Ok(self.names.len() - 1)
    }
}

struct Transition {
    line: usize,
    from: usize,
    input: usize,
    to: usize,
    output: usize,
}

pub fn parse_automaton(text: &str) -> Result<MealyAutomaton> {
    let mut letters = Symbols::new();
    let mut states = Symbols::new();
    let mut transitions = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("alphabet:") {
            if !transitions.is_empty() {
                return Err(Error::Parse {
                    line,
                    message: "headers must precede transitions".into(),
                });
            }
            letters.declare(line, &rest.split_whitespace().collect::<Vec<_>>())?;
            continue;
        }
        if let Some(rest) = content.strip_prefix("states:") {
            if !transitions.is_empty() {
                return Err(Error::Parse {
                    line,
                    message: "headers must precede transitions".into(),
                });
            }
            states.declare(line, &rest.split_whitespace().collect::<Vec<_>>())?;
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let [from, input, "->", to, output] = tokens.as_slice() else {
            return Err(Error::Parse {
                line,
                message: format!("expected `state letter -> state letter`, got `{content}`"),
            });
        };
        transitions.push(Transition {
            line,
            from: states.resolve(line, from)?,
            input: letters.resolve(line, input)?,
            to: states.resolve(line, to)?,
            output: letters.resolve(line, output)?,
        });
    }

    let n = states.names.len();
    let k = letters.names.len();
    if n == 0 || k == 0 {
        return Err(Error::Invalid("no states or no letters".into()));
    }
    let mut delta = vec![u32::MAX; n * k];
    let mut rho = vec![u32::MAX; n * k];
    for t in &transitions {
        let cell = t.from * k + t.input;
        if delta[cell] != u32::MAX {
            return Err(Error::DuplicateTransition {
                line: t.line,
                state: states.names[t.from].clone(),
                letter: letters.names[t.input].clone(),
            });
        }
        delta[cell] = t.to as u32;
        rho[cell] = t.output as u32;
    }
    if let Some(cell) = delta.iter().position(|&d| d == u32::MAX) {
        return Err(Error::MissingTransition {
            state: states.names[cell / k].clone(),
            letter: letters.names[cell % k].clone(),
        });
    }
    MealyAutomaton::from_tables(letters.names, states.names, delta, rho)
}

pub fn to_text(a: &MealyAutomaton) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "alphabet: {}", a.letter_names().join(" "));
    let _ = writeln!(out, "states: {}", a.state_names().join(" "));
    for q in a.states() {
        for i in a.letters() {
            let _ = writeln!(
                out,
                "{} {} -> {} {}",
                a.state_name(q),
                a.letter_name(i),
                a.state_name(a.next(q, i)),
                a.letter_name(a.output(q, i))
            );
        }
    }
    out
}

/// One node per state; parallel edges are merged into one edge with
/// comma-separated `i|j` labels.
pub fn to_dot(a: &MealyAutomaton) -> String {
    let mut out = String::from("digraph mealy {\n  rankdir=LR;\n  node [shape=circle];\n");
    for q in a.states() {
        let _ = writeln!(out, "  s{} [label=\"{}\"];", q.0, escape(a.state_name(q)));
    }
    for q in a.states() {
        let mut targets: Vec<(StateId, Vec<String>)> = Vec::new();
        for i in a.letters() {
            let t = a.next(q, i);
            let label = format!("{}|{}", a.letter_name(i), a.letter_name(a.output(q, i)));
            match targets.iter_mut().find(|(s, _)| *s == t) {
                Some((_, labels)) => labels.push(label),
                None => targets.push((t, vec![label])),
            }
        }
        for (t, labels) in targets {
            let _ = writeln!(
                out,
                "  s{} -> s{} [label=\"{}\"];",
                q.0,
                t.0,
                escape(&labels.join(", "))
            );
        }
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Parses a state-word. Tokens are separated by whitespace or commas. A
/// token that is not itself a state name is split on dots, and a piece that
/// is still unknown is read one character at a time (trailing primes stay
/// with their character), so `xy'z`, `x y' z` and `x.y'.z` are the same word.
pub fn parse_state_word(a: &MealyAutomaton, text: &str) -> Result<Vec<StateId>> {
    let mut word = Vec::new();
    for tok in text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
    {
        if let Some(q) = a.state_by_name(tok) {
            word.push(q);
            continue;
        }
        for piece in tok.split('.').filter(|t| !t.is_empty()) {
            if let Some(q) = a.state_by_name(piece) {
                word.push(q);
                continue;
            }
            let mut rest = piece;
            while let Some(c) = rest.chars().next() {
                let len = c.len_utf8()
                    + rest[c.len_utf8()..]
                        .chars()
                        .take_while(|&p| p == '\'')
                        .count();
                let sym = &rest[..len];
                word.push(
                    a.state_by_name(sym)
                        .ok_or_else(|| Error::UnknownDesignator(sym.to_string()))?,
                );
                rest = &rest[len..];
            }
        }
    }
    Ok(word)
}

pub fn parse_letter_word(a: &MealyAutomaton, text: &str) -> Result<Vec<Letter>> {
    let tokens: Vec<&str> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect();
    let mut word = Vec::new();
    for tok in tokens {
        if let Some(i) = a.letter_by_name(tok) {
            word.push(i);
            continue;
        }
        for c in tok.chars() {
            let s = c.to_string();
            word.push(
                a.letter_by_name(&s)
                    .ok_or_else(|| Error::UnknownDesignator(s.clone()))?,
            );
        }
    }
    Ok(word)
}
