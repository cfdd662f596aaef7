//! Browser bindings. Every export takes automaton text and returns a JSON string.

use mealy::{
    growth_table, nerode::is_minimal, nerode_partition, parse_automaton, ratio_sequence, GrowthMode, Limits,
    MealyAutomaton,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Caps kept small so a page never stalls for long.
const BUDGET: usize = 1 << 20;

fn load(text: &str) -> Result<MealyAutomaton, String> {
    parse_automaton(text).map_err(|e| e.to_string())
}

pub fn summary(text: &str) -> Result<Value, String> {
    let a = load(text)?;
    let p = nerode_partition(&a);
    let classes: Vec<Vec<&str>> = p
        .classes
        .iter()
        .map(|c| c.iter().map(|&q| a.state_name(q)).collect())
        .collect();
    Ok(json!({
        "states": a.state_names(),
        "letters": a.alphabet_size(),
        "invertible": a.is_invertible(),
        "reversible": a.is_reversible(),
        "coreversible": a.is_coreversible(),
        "bireversible": a.is_bireversible(),
        "connected": a.is_connected(),
        "minimal": is_minimal(&a),
        "nerode_classes": classes,
    }))
}

pub fn ratios(text: &str, horizon: usize) -> Result<Value, String> {
    let a = load(text)?;
    let rows = a
        .states()
        .map(|q| {
            let r = ratio_sequence(&a, q, horizon, BUDGET).map_err(|e| e.to_string())?;
            Ok(json!({
                "state": a.state_name(q),
                "sizes": r.sizes,
                "ratios": r.ratios,
                "stabilized_at": r.stabilized_at,
            }))
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(Value::Array(rows))
}

pub fn growth(text: &str, radius: usize, semigroup: bool) -> Result<Value, String> {
    let a = load(text)?;
    let mode = if semigroup { GrowthMode::Semigroup } else { GrowthMode::Group };
    let t = growth_table(&a, radius, mode, &Limits::uniform(BUDGET)).map_err(|e| e.to_string())?;
    Ok(json!({
        "gamma": t.gamma,
        "generators": t.generating_set_size,
    }))
}

fn export(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = checkAutomaton)]
pub fn check_automaton(text: &str) -> Result<String, JsValue> {
    export(summary(text))
}

#[wasm_bindgen(js_name = ratioTable)]
pub fn ratio_table(text: &str, horizon: usize) -> Result<String, JsValue> {
    export(ratios(text, horizon))
}

#[wasm_bindgen(js_name = growthCurve)]
pub fn growth_curve(text: &str, radius: usize, semigroup: bool) -> Result<String, JsValue> {
    export(growth(text, radius, semigroup))
}
