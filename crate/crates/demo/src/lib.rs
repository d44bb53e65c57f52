//! WebAssembly bindings for the browser demo. Each export has a plain Rust
//! counterpart returning `Result<String, String>` so it can be tested
//! natively.

use braidforge::burau::entropy_lower_bound;
use braidforge::exchange::{is_degenerate, iterated_exchange, ExchangePresentation};
use braidforge::garside;
use braidforge::lamination::{entropy_estimate, geometric_nondegeneracy, EntropySettings};
use braidforge::BraidWord;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Longest k-range the entropy plot accepts.
pub const MAX_CURVE_POINTS: i64 = 41;

#[derive(Serialize)]
struct CurvePoint {
    k: i64,
    estimate: f64,
    lower_bound: f64,
    converged: bool,
}

#[derive(Serialize)]
struct Degeneracy {
    a_commutes: bool,
    b_commutes: bool,
    a_moves_curve: bool,
    b_moves_curve: bool,
    degenerate: bool,
}

fn text<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

pub fn exchange_word(n: usize, a: &str, b: &str, k: i64) -> Result<String, String> {
    let p = ExchangePresentation::parse(n, a, b).map_err(text)?;
    Ok(iterated_exchange(&p, k).to_string())
}

pub fn normal_form(n: usize, word: &str) -> Result<String, String> {
    let w = BraidWord::parse(n, word).map_err(text)?;
    Ok(garside::normal_form(&w).map_err(text)?.to_string())
}

pub fn degeneracy(n: usize, a: &str, b: &str) -> Result<String, String> {
    let p = ExchangePresentation::parse(n, a, b).map_err(text)?;
    let r = is_degenerate(&p).map_err(text)?;
    let (a_moves, b_moves) = geometric_nondegeneracy(&p).map_err(text)?;
    serde_json::to_string(&Degeneracy {
        a_commutes: r.a_commutes,
        b_commutes: r.b_commutes,
        a_moves_curve: a_moves,
        b_moves_curve: b_moves,
        degenerate: r.degenerate(),
    })
    .map_err(text)
}

/// JSON array of `{k, estimate, lower_bound, converged}` over `k_min..=k_max`.
pub fn entropy_curve(n: usize, a: &str, b: &str, k_min: i64, k_max: i64) -> Result<String, String> {
    if k_min > k_max || k_max - k_min >= MAX_CURVE_POINTS {
        return Err(format!("k range must be nonempty and at most {MAX_CURVE_POINTS} long"));
    }
    let p = ExchangePresentation::parse(n, a, b).map_err(text)?;
    let settings = EntropySettings {
        max_iters: 600,
        ..EntropySettings::default()
    };
    let mut points = Vec::new();
    for k in k_min..=k_max {
        let w = iterated_exchange(&p, k);
        let est = entropy_estimate(&w, &settings).map_err(text)?;
        points.push(CurvePoint {
            k,
            estimate: est.value,
            lower_bound: entropy_lower_bound(&w),
            converged: est.converged,
        });
    }
    serde_json::to_string(&points).map_err(text)
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = exchangeWord)]
pub fn exchange_word_js(n: usize, a: &str, b: &str, k: i32) -> Result<String, JsValue> {
    js(exchange_word(n, a, b, k.into()))
}

#[wasm_bindgen(js_name = normalForm)]
pub fn normal_form_js(n: usize, word: &str) -> Result<String, JsValue> {
    js(normal_form(n, word))
}

#[wasm_bindgen(js_name = degeneracy)]
pub fn degeneracy_js(n: usize, a: &str, b: &str) -> Result<String, JsValue> {
    js(degeneracy(n, a, b))
}

#[wasm_bindgen(js_name = entropyCurve)]
pub fn entropy_curve_js(n: usize, a: &str, b: &str, k_min: i32, k_max: i32) -> Result<String, JsValue> {
    js(entropy_curve(n, a, b, k_min.into(), k_max.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exports_match_the_library() {
        assert_eq!(exchange_word(4, "1", "3", 1).unwrap(), "1,2,2,3,-2,-2");
        assert_eq!(normal_form(4, "").unwrap(), "D^0 |");
        assert!(exchange_word(4, "3", "3", 1).is_err());
        let d: serde_json::Value = serde_json::from_str(&degeneracy(4, "2", "3").unwrap()).unwrap();
        assert_eq!(d["degenerate"], true);
        assert_eq!(d["a_moves_curve"], false);
    }

    #[test]
    fn entropy_curve_json() {
        let v: serde_json::Value =
            serde_json::from_str(&entropy_curve(4, "1", "3", 0, 2).unwrap()).unwrap();
        let pts = v.as_array().unwrap();
        assert_eq!(pts.len(), 3);
        assert_eq!(pts[0]["k"], 0);
        assert!(pts[2]["estimate"].as_f64().unwrap() > 2.0);
        assert!(entropy_curve(4, "1", "3", 2, 1).is_err());
        assert!(entropy_curve(4, "1", "3", -100, 100).is_err());
    }
}
