use klr_core::klr::{verify_rep, zoo, KlrData};
use klr_core::path_algebra::catalog::by_name;
use klr_core::path_algebra::normalize;
use klr_core::path_algebra::structure::{center, is_special_biserial, is_stably_biserial, is_symmetric, trace_from_presentation};
use klr_core::rational::{fmt_q, parse_q};
use klr_core::tableaux::{content, count_standard, dim_full, partitions};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use wasm_bindgen::prelude::*;

type Res = Result<Value, String>;

fn err(e: impl ToString) -> String {
    e.to_string()
}

/// Blocks of the level one cyclotomic quotient on `n` strands.
pub fn dimension_table_json(ell: usize, n: usize) -> Res {
    if ell == 0 || ell > 8 || n > 14 {
        return Err("use 1 <= ell <= 8 and n <= 14".into());
    }
    let mut blocks: BTreeMap<Vec<i64>, (Vec<String>, u128)> = BTreeMap::new();
    for p in partitions(n) {
        let c = count_standard(&p);
        let e = blocks.entry(content(ell, &p)).or_default();
        e.0.push(format!("{p:?}"));
        e.1 += c * c;
    }
    let rows: Vec<Value> = blocks
        .into_iter()
        .map(|(beta, (parts, d))| json!({"beta": beta, "partitions": parts, "dim": d.to_string()}))
        .collect();
    Ok(json!({"ell": ell, "n": n, "blocks": rows, "total": dim_full(ell, n).map_err(err)?.to_string()}))
}

/// Relation check of a named module at `lambda` ("p/q").
pub fn verify_module_json(name: &str, ell: usize, i: usize, lambda: &str) -> Res {
    let l = parse_q(lambda).map_err(err)?;
    let rep = zoo::build(name, ell, i, l.clone()).map_err(err)?;
    let report = verify_rep(&rep, &KlrData::new(rep.ell, l).map_err(err)?);
    let failures: Vec<String> = report.failures.iter().take(6).map(|f| format!("{} on {}", f.relation, f.witness)).collect();
    Ok(json!({
        "module": name,
        "lambda": fmt_q(&rep.lambda),
        "dim": rep.dim,
        "passed": report.passed,
        "relations_checked": report.relations_checked,
        "failures": failures,
    }))
}

/// Dimension, Cartan matrix, center and biserial properties of a catalog algebra.
pub fn algebra_report_json(name: &str, exps: &str, lambda: &str) -> Res {
    let exps: Vec<usize> =
        exps.split(',').map(str::trim).filter(|s| !s.is_empty()).map(|s| s.parse().map_err(err)).collect::<Result<_, _>>()?;
    let pres = by_name(name, &exps, &parse_q(lambda).map_err(err)?).map_err(err)?;
    let alg = normalize(&pres).map_err(err)?;
    let trace = trace_from_presentation(&alg, &pres).map_err(err)?;
    let z = center(&alg);
    Ok(json!({
        "name": name,
        "dim": alg.dim(),
        "vertices": alg.vertices,
        "cartan": alg.cartan_matrix(),
        "center": z.iter().map(|x| alg.element_text(x)).collect::<Vec<_>>(),
        "symmetric": is_symmetric(&alg, trace.as_deref()).is_some(),
        "special_biserial": is_special_biserial(&alg).holds,
        "stably_biserial": is_stably_biserial(&alg).map_err(err)?.holds,
    }))
}

fn to_js(r: Res) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn dimension_table(ell: usize, n: usize) -> Result<String, JsError> {
    to_js(dimension_table_json(ell, n))
}

#[wasm_bindgen]
pub fn verify_module(name: &str, ell: usize, i: usize, lambda: &str) -> Result<String, JsError> {
    to_js(verify_module_json(name, ell, i, lambda))
}

#[wasm_bindgen]
pub fn algebra_report(name: &str, exps: &str, lambda: &str) -> Result<String, JsError> {
    to_js(algebra_report_json(name, exps, lambda))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_totals() {
        let v = dimension_table_json(1, 4).unwrap();
        assert_eq!(v["total"], "24");
        assert_eq!(v["blocks"][0]["dim"], "24");
        assert!(dimension_table_json(0, 3).is_err());
    }

    #[test]
    fn t0_depends_on_lambda() {
        assert_eq!(verify_module_json("T0", 1, 0, "0").unwrap()["passed"], true);
        assert_eq!(verify_module_json("T0", 1, 0, "1").unwrap()["passed"], false);
        assert!(verify_module_json("T0", 1, 0, "x").is_err());
    }

    #[test]
    fn catalog_report() {
        let v = algebra_report_json("basic-2delta", "", "1").unwrap();
        assert_eq!(v["center"].as_array().unwrap().len(), 5);
        assert_eq!(algebra_report_json("appendix-example", "", "1").unwrap()["special_biserial"], false);
        assert!(algebra_report_json("2a", "a", "1").is_err());
    }
}
