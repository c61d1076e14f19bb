//! Browser bindings for the demo page in `www/`.

use intdiff::expr::{parse, parse1};
use intdiff::oracle::to_matrix;
use intdiff::structure::{bimodule_filtration_dims, multiplicity_report};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Canonical form of `expr` at rank `n`.
#[wasm_bindgen]
pub fn normalize(expr: &str, n: usize) -> Result<String, String> {
    let rank = n.max(1);
    parse(expr, rank)
        .map(|a| a.to_string())
        .map_err(|e| e.to_string())
}

/// The truncated divided-power matrix of a rank-1 expression, as a JSON
/// array of rows of `"p/q"` strings.
#[wasm_bindgen]
pub fn matrix_json(expr: &str, size: usize) -> Result<String, String> {
    if !(1..=40).contains(&size) {
        return Err("size must be between 1 and 40".into());
    }
    let a = parse1(expr).map_err(|e| e.to_string())?;
    Ok(json!(to_matrix(&a, size).to_strings()).to_string())
}

/// Filtration dimensions and growth report for `;`-separated generators.
#[wasm_bindgen]
pub fn filtration_dims(generators: &str, max: usize) -> Result<String, String> {
    let gens = generators
        .split(';')
        .map(|g| parse1(g.trim()))
        .collect::<intdiff::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    let dims = bimodule_filtration_dims(&gens, max).map_err(|e| e.to_string())?;
    let report = multiplicity_report(&dims);
    Ok(json!({ "dims": dims, "report": report }).to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrappers() {
        assert_eq!(normalize("I^2*d^2", 1).unwrap(), "1 - e(0,0) - e(1,1)");
        assert!(normalize("x*", 1).is_err());
        assert_eq!(
            matrix_json("d", 2).unwrap(),
            r#"[["0/1","1/1"],["0/1","0/1"]]"#
        );
        assert!(matrix_json("d", 0).is_err());
        let v: serde_json::Value =
            serde_json::from_str(&filtration_dims("1; I", 3).unwrap()).unwrap();
        assert_eq!(v["dims"], json!([2, 7, 15, 26]));
        assert!(filtration_dims("0", 3).is_err());
    }
}
