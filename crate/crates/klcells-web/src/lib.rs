//! JSON entry points for the static page in `www/`.
//!
//! Each function takes a type name such as `B3` or `I2(8)` and a weight list
//! such as `2,1,1` (empty means equal weights) and returns a JSON string.

use std::sync::Arc;

use klcells::cells::CellSet;
use klcells::coxeter::CoxeterSystem;
use klcells::vogan::{delta2_vogan_classes, verify_conjecture_with};
use klcells::{CoxeterMatrix, CoxeterType, Element, KLTable, WeightFunction};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Keeps a page from freezing on a group it cannot finish.
pub const MAX_ELEMENTS: usize = 2000;

fn setup(group: &str, weights: &str) -> Result<KLTable, String> {
    let ty: CoxeterType = group.parse().map_err(|e: klcells::ParseError| e.msg)?;
    let matrix = CoxeterMatrix::from_type(ty).map_err(|e| e.to_string())?;
    let p = if weights.trim().is_empty() {
        WeightFunction::equal(&matrix)
    } else {
        let list = weights
            .split(',')
            .map(|x| x.trim().parse::<i32>().map_err(|_| format!("bad weight {x:?}")))
            .collect::<Result<Vec<_>, _>>()?;
        WeightFunction::new(&matrix, list).map_err(|e| e.to_string())?
    };
    let system = CoxeterSystem::build(matrix, MAX_ELEMENTS)
        .map_err(|_| format!("{ty} has more than {MAX_ELEMENTS} elements; try a smaller group"))?;
    KLTable::build(Arc::new(system), p).map_err(|e| e.to_string())
}

fn labels(table: &KLTable) -> Vec<String> {
    (1..=table.system().rank()).map(|s| s.to_string()).collect()
}

fn word(table: &KLTable, w: Element) -> String {
    table.system().format_word(w, &labels(table))
}

fn sorted(mut blocks: Vec<Vec<Element>>) -> Vec<Vec<Element>> {
    for b in &mut blocks {
        b.sort();
    }
    blocks.sort();
    blocks
}

fn words(table: &KLTable, blocks: &[Vec<Element>]) -> Value {
    blocks
        .iter()
        .map(|b| b.iter().map(|&w| word(table, w)).collect::<Vec<_>>())
        .collect()
}

/// Left cells, each with the two-sided cell it lies in.
pub fn left_cells_json(group: &str, weights: &str) -> Result<Value, String> {
    let table = setup(group, weights)?;
    let cells = CellSet::compute(&table);
    let left = sorted(cells.left.blocks().to_vec());
    let two = sorted(cells.two_sided.blocks().to_vec());
    let two_of: Vec<usize> = left
        .iter()
        .map(|b| two.iter().position(|t| t.contains(&b[0])).expect("cells partition W"))
        .collect();
    Ok(json!({
        "group": group,
        "weights": table.weights().as_slice(),
        "size": table.system().size(),
        "left": words(&table, &left),
        "two_sided_of": two_of,
        "num_two_sided": two.len(),
    }))
}

/// `p_{y,w}` for all `y < w`, with `w` written in generators `1..n`.
pub fn kl_polys_json(group: &str, weights: &str, w: &str) -> Result<Value, String> {
    let table = setup(group, weights)?;
    let sys = table.system();
    let w = sys.parse_word(w, &labels(&table)).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = table
        .p_row(w)
        .filter(|&(y, _)| y != w)
        .map(|(y, p)| json!({ "y": word(&table, y), "p": p.to_string() }))
        .collect();
    Ok(json!({ "w": word(&table, w), "length": sys.length(w), "polys": rows }))
}

/// Vogan classes and whether they cut two-sided cells into left cells.
pub fn vogan_json(group: &str, weights: &str) -> Result<Value, String> {
    let table = setup(group, weights)?;
    let cells = CellSet::compute(&table);
    let classes = delta2_vogan_classes(&table).map_err(|e| e.to_string())?;
    let report = verify_conjecture_with(&table, &cells).map_err(|e| e.to_string())?;
    Ok(json!({
        "classes": words(&table, &sorted(classes.classes())),
        "rounds": classes.n0,
        "left_cells": report.num_left_cells,
        "two_sided_cells": report.num_two_sided_cells,
        "meet_classes": report.num_meet_classes,
        "holds": report.holds,
    }))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn left_cells(group: &str, weights: &str) -> Result<String, JsValue> {
    to_js(left_cells_json(group, weights))
}

#[wasm_bindgen]
pub fn kl_polys(group: &str, weights: &str, w: &str) -> Result<String, JsValue> {
    to_js(kl_polys_json(group, weights, w))
}

#[wasm_bindgen]
pub fn vogan_classes(group: &str, weights: &str) -> Result<String, JsValue> {
    to_js(vogan_json(group, weights))
}
