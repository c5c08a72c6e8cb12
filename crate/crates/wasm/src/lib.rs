//! Browser bindings: a pure-diagram explorer, a decomposition pane and an
//! asymptotic-bound plot. Each export returns a JSON string; errors surface
//! as JS exceptions.

use wasm_bindgen::prelude::*;

pub mod demo;

#[wasm_bindgen(js_name = pureDiagram)]
pub fn pure_diagram(degrees: &str) -> Result<String, JsError> {
    demo::pure_diagram(degrees).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = decomposeDiagram)]
pub fn decompose_diagram(input: &str) -> Result<String, JsError> {
    demo::decompose_diagram(input).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = asymptoticCurve)]
pub fn asymptotic_curve(
    codim: u32,
    delta: u32,
    defect: u32,
    j: u32,
    t_max: u32,
) -> Result<String, JsError> {
    demo::asymptotic_curve(codim, delta, defect, j, t_max).map_err(|e| JsError::new(&e))
}
