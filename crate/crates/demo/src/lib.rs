//! Three operations of `weylfock` behind a JSON-in, JSON-out boundary for the browser.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use weylfock::characters::{apply_e, apply_f, weight_functions};
use weylfock::theta::{first_occurrence, ThetaCase};
use weylfock::{CharacterLabel, GlobalContext, QIndex, RootRatio, Sign};

fn label(text: &str, q: u32) -> Result<(CharacterLabel, GlobalContext), String> {
    let ctx = GlobalContext::new(q as u64).map_err(|e| e.to_string())?;
    let l: CharacterLabel = serde_json::from_str(text).map_err(|e| format!("label: {e}"))?;
    l.validate(&ctx).map_err(|e| e.to_string())?;
    Ok((l, ctx))
}

fn sign(s: &str) -> Result<Sign, String> {
    match s.trim() {
        "+" | "+1" | "1" => Ok(Sign::Plus),
        "-" | "-1" => Ok(Sign::Minus),
        other => Err(format!("expected + or -, got {other:?}")),
    }
}

fn ratio(r: &RootRatio<QIndex>, var: &str) -> Value {
    let show = |v: Vec<QIndex>| v.iter().map(|a| a.to_string()).collect::<Vec<_>>();
    json!({ "text": r.render(var), "zeros": show(r.zeros()), "poles": show(r.poles()) })
}

pub fn weights_json(label_json: &str, q: u32) -> Result<String, String> {
    let (l, ctx) = label(label_json, q)?;
    let (op, om) = weight_functions(&l, &ctx).map_err(|e| e.to_string())?;
    Ok(json!({ "O_plus": ratio(&op, "u"), "O_minus": ratio(&om, "v") }).to_string())
}

pub fn branch_json(label_json: &str, q: u32, colour: &str, residue: &str, remove: bool) -> Result<String, String> {
    let (l, ctx) = label(label_json, q)?;
    let colour = sign(colour)?;
    let i = QIndex::parse(residue).ok_or_else(|| format!("cannot read residue {residue:?}"))?;
    let out =
        if remove { apply_e(&l, colour, i, &ctx) } else { apply_f(&l, colour, i, &ctx) }.map_err(|e| e.to_string())?;
    let shown: Vec<Value> = out.iter().map(|x| json!({ "text": x.to_string(), "label": x })).collect();
    Ok(Value::Array(shown).to_string())
}

pub fn first_occurrence_json(label_json: &str, q: u32, case: &str, alpha: &str) -> Result<String, String> {
    let (l, ctx) = label(label_json, q)?;
    let case = ThetaCase::parse(case, sign(alpha)?).ok_or_else(|| format!("unknown case {case:?}"))?;
    let fo = first_occurrence(&l, case, &ctx).map_err(|e| e.to_string())?;
    serde_json::to_string(&fo).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn weights(label_json: &str, q: u32) -> Result<String, JsError> {
    weights_json(label_json, q).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn branch(label_json: &str, q: u32, colour: &str, residue: &str, remove: bool) -> Result<String, JsError> {
    branch_json(label_json, q, colour, residue, remove).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = firstOccurrence)]
pub fn first_occurrence_js(label_json: &str, q: u32, case: &str, alpha: &str) -> Result<String, JsError> {
    first_occurrence_json(label_json, q, case, alpha).map_err(|e| JsError::new(&e))
}
