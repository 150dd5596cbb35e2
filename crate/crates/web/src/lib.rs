//! Browser bindings. Each exported function takes edge-list text and returns a
//! JSON string: either the result object or `{"error": "..."}`.

use graphprod_core::products::product_within;
use graphprod_core::{
    class_g_check, decompose_within, edgelist, pad_to_class_g, Decomposition, Graph, GraphError,
    ProductKind, DEFAULT_FACTOR_MAX_NODES,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest product the page will draw.
pub const PRODUCT_MAX_NODES: usize = 256;

fn parse(label: &str, text: &str) -> Result<Graph, String> {
    edgelist::parse(text).map_err(|e| format!("{label}: {e}"))
}

fn drawable(g: &Graph) -> Value {
    json!({ "nodes": g.node_count(), "edges": g.edges(), "text": edgelist::write(g) })
}

fn render(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn err(e: GraphError) -> String {
    e.to_string()
}

pub fn product_value(kind: &str, left: &str, right: &str) -> Result<Value, String> {
    let kind: ProductKind = kind
        .parse()
        .map_err(|_| format!("unknown product kind {kind:?}"))?;
    let (g1, g2) = (parse("left", left)?, parse("right", right)?);
    let p = product_within(kind, &g1, &g2, PRODUCT_MAX_NODES).map_err(err)?;
    Ok(json!({ "kind": kind, "graph": drawable(&p) }))
}

pub fn factor_value(text: &str) -> Result<Value, String> {
    let g = parse("graph", text)?;
    Ok(
        match decompose_within(&g, DEFAULT_FACTOR_MAX_NODES).map_err(err)? {
            Decomposition::Trivial => json!({ "verdict": "trivial" }),
            Decomposition::Prime => json!({ "verdict": "prime" }),
            Decomposition::Composite(w) => json!({
                "verdict": "composite",
                "factor_a": drawable(w.factor_a()),
                "factor_b": drawable(w.factor_b()),
                "labeling": w.labeling(),
            }),
        },
    )
}

pub fn pad_value(text: &str) -> Result<Value, String> {
    let g = parse("graph", text)?;
    let res = pad_to_class_g(&g).map_err(err)?;
    Ok(json!({
        "before": class_g_check(&g),
        "after": class_g_check(&res.padded),
        "padding": res.to_json(),
        "graph": drawable(&res.padded),
    }))
}

/// Product of two edge-list graphs. `kind` is one of `cartesian`, `direct`,
/// `strong` or `lexicographic`.
#[wasm_bindgen]
pub fn graph_product(kind: &str, left: &str, right: &str) -> String {
    render(product_value(kind, left, right))
}

/// Prime, composite (with a factor pair) or trivial under the direct product.
#[wasm_bindgen]
pub fn factorize(text: &str) -> String {
    render(factor_value(text))
}

/// Class-G report before and after padding a connected graph into the class.
#[wasm_bindgen]
pub fn pad_into_class_g(text: &str) -> String {
    render(pad_value(text))
}
