//! Machine-readable record formatting. All numeric fields are printed with
//! 17 significant digits so values survive a parse round trip; the key sets
//! are fixed per record kind so downstream parsers can rely on the schema.

use num_complex::Complex;
use zetasum::EvalResult;

type C = Complex<f64>;

pub fn num(x: f64) -> String {
    format!("{x:.17e}")
}

pub fn complex_json(z: C) -> String {
    format!("{{\"re\":{},\"im\":{}}}", num(z.re), num(z.im))
}

fn opt_num(x: Option<f64>) -> String {
    match x {
        Some(v) => num(v),
        None => "null".to_string(),
    }
}

/// The single record `eval` prints: target, echoed parameters, value, and
/// the evaluation diagnostics.
pub fn eval_json(target: &str, params: &[(&str, String)], res: &EvalResult<f64>) -> String {
    let params_body = params
        .iter()
        .map(|(k, v)| format!("\"{k}\":{v}"))
        .collect::<Vec<_>>()
        .join(",");
    format!(
        "{{\"target\":\"{target}\",\"params\":{{{params_body}}},\"value\":{},\
         \"err_estimate\":{},\"evals_used\":{},\"truncation_point\":{},\"converged\":{}}}",
        complex_json(res.value),
        num(res.err_estimate),
        res.evals_used,
        opt_num(res.truncation_point),
        res.converged
    )
}

/// The record `compare` prints.
pub fn compare_json(formula: C, oracle: C, abs_diff: f64, rel_diff: f64) -> String {
    format!(
        "{{\"formula_value\":{},\"oracle_value\":{},\"abs_diff\":{},\"rel_diff\":{}}}",
        complex_json(formula),
        complex_json(oracle),
        num(abs_diff),
        num(rel_diff)
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Ok,
    NotConverged,
    Singular,
    Error,
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RowStatus::Ok => "ok",
            RowStatus::NotConverged => "not_converged",
            RowStatus::Singular => "singular",
            RowStatus::Error => "error",
        }
    }
}

/// One scan grid point. Value fields are absent for singular and failed
/// points; they are emitted as JSON null / empty CSV cells.
pub struct ScanRow {
    pub k: C,
    pub value: Option<C>,
    pub err_estimate: Option<f64>,
    pub converged: bool,
    pub status: RowStatus,
}

pub const SCAN_CSV_HEADER: &str = "k_re,k_im,value_re,value_im,err_estimate,converged,status";

pub fn scan_row_json(row: &ScanRow) -> String {
    format!(
        "{{\"k_re\":{},\"k_im\":{},\"value_re\":{},\"value_im\":{},\
         \"err_estimate\":{},\"converged\":{},\"status\":\"{}\"}}",
        num(row.k.re),
        num(row.k.im),
        opt_num(row.value.map(|v| v.re)),
        opt_num(row.value.map(|v| v.im)),
        opt_num(row.err_estimate),
        row.converged,
        row.status.as_str()
    )
}

pub fn scan_row_csv(row: &ScanRow) -> String {
    let cell = |x: Option<f64>| x.map(num).unwrap_or_default();
    format!(
        "{},{},{},{},{},{},{}",
        num(row.k.re),
        num(row.k.im),
        cell(row.value.map(|v| v.re)),
        cell(row.value.map(|v| v.im)),
        cell(row.err_estimate),
        row.converged,
        row.status.as_str()
    )
}
