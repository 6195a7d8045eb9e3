//! Browser bindings: draw expressions, certify graphs, list the catalog.
//! Every function returns a JSON string.

use polar_core::catalog::Catalog;
use polar_core::certify::{certify, Certificate};
use polar_core::expr::{eval_expr, parse_expr};
use polar_core::graph::{from_graph6, to_graph6};
use polar_core::Graph;
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct Drawing {
    order: usize,
    edges: Vec<(usize, usize)>,
    graph6: String,
    /// Components as vertex lists, for grouping in the layout.
    components: Vec<Vec<usize>>,
    certificate: Certificate,
}

fn catalog() -> Result<Catalog, String> {
    Catalog::from_text(polar_core::catalog::CATALOG_TSV).map_err(|e| e.to_string())
}

fn drawing(g: &Graph, s: usize, k: usize) -> Result<String, String> {
    let d = Drawing {
        order: g.order(),
        edges: g.edges().collect(),
        graph6: to_graph6(g),
        components: g.components().iter().map(|c| c.to_vec()).collect(),
        certificate: certify(g, s, k, &catalog()?),
    };
    serde_json::to_string(&d).map_err(|e| e.to_string())
}

/// Evaluates an expression at `k` and certifies it for (s, k) = (k, k).
pub fn render_expression(text: &str, k: u32) -> Result<String, String> {
    let e = parse_expr(text).map_err(|e| e.to_string())?;
    let g = eval_expr(&e, i64::from(k)).map_err(|e| e.to_string())?;
    drawing(&g, k as usize, k as usize)
}

pub fn certify_graph6(text: &str, s: u32, k: u32) -> Result<String, String> {
    let g = from_graph6(text.trim()).map_err(|e| e.to_string())?;
    drawing(&g, s as usize, k as usize)
}

pub fn catalog_listing() -> Result<String, String> {
    serde_json::to_string(catalog()?.entries()).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = renderExpression)]
pub fn render_expression_js(text: &str, k: u32) -> Result<String, JsValue> {
    render_expression(text, k).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = certifyGraph6)]
pub fn certify_graph6_js(text: &str, s: u32, k: u32) -> Result<String, JsValue> {
    certify_graph6(text, s, k).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = catalogListing)]
pub fn catalog_listing_js() -> Result<String, JsValue> {
    catalog_listing().map_err(|e| JsValue::from_str(&e))
}
