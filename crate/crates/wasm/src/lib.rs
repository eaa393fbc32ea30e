//! wasm-bindgen surface for the browser demo. The interesting code is in
//! [`demo`]; these wrappers only translate errors for JavaScript.

mod demo;

use wasm_bindgen::prelude::*;

#[wasm_bindgen]
pub fn reconstruction_svg(kind: &str, width: usize, guard: usize) -> Result<String, JsValue> {
    demo::reconstruction_svg(kind, width, guard).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn spectrum_svg(kind: &str, width: usize, guard: usize) -> Result<String, JsValue> {
    demo::spectrum_svg(kind, width, guard).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn sweep_svg(
    kind: &str,
    width: usize,
    max_guard: usize,
    step: usize,
) -> Result<String, JsValue> {
    demo::sweep_svg(kind, width, max_guard, step).map_err(|e| JsValue::from_str(&e))
}
