//! Report serialization: the JSON verify report and CSV/JSON sweep files.
//! All field values format through the shortest-roundtrip float writer, so
//! files are byte-stable across runs.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use muzeta::{Complex64, EvalConfig, IdentityReport};
use serde_json::{json, Value};

/// Human-facing complex rendering: plain real when the imaginary part is
/// zero, otherwise re+imi / re-imi.
pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

fn complex_json(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn config_json(cfg: &EvalConfig) -> Value {
    json!({
        "rel_tol": cfg.rel_tol,
        "max_terms": cfg.max_terms,
        "em_cutoff_N": cfg.em_cutoff_n,
        "em_order_M": cfg.em_order_m,
        "integer_snap_radius": cfg.integer_snap_radius,
        "pole_exclusion_radius": cfg.pole_exclusion_radius,
        "quad_tol": cfg.quad_tol,
        "quad_tmax_factor": cfg.quad_tmax_factor,
    })
}

fn report_json(row: &IdentityReport) -> Value {
    json!({
        "identity_id": row.identity_id,
        "point": complex_json(row.point),
        "lhs": complex_json(row.lhs),
        "rhs": complex_json(row.rhs),
        "abs_error": row.abs_error,
        "rel_error": row.rel_error,
        "passed": row.passed,
        "terms_used": row.terms_used,
    })
}

/// The verify report: {suite, config, started_at, rows, summary}.
pub fn verify_report_json(
    suite: &str,
    cfg: &EvalConfig,
    started_at: u64,
    rows: &[IdentityReport],
) -> String {
    let passed = rows.iter().filter(|r| r.passed).count();
    let doc = json!({
        "suite": suite,
        "config": config_json(cfg),
        "started_at": started_at,
        "rows": rows.iter().map(report_json).collect::<Vec<_>>(),
        "summary": {
            "total": rows.len(),
            "passed": passed,
            "failed": rows.len() - passed,
        },
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("report serialization");
    text.push('\n');
    text
}

/// One evaluated sweep cell. `value` is None when the point errored or was
/// excluded; `status` says why.
pub struct SweepRow {
    pub s: Complex64,
    pub value: Option<Complex64>,
    pub terms_used: usize,
    pub converged: bool,
    pub status: String,
}

pub fn write_sweep_csv(path: &Path, rows: &[SweepRow]) -> std::io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "re_s,im_s,re_value,im_value,terms_used,converged,status")?;
    for row in rows {
        let (re_v, im_v) = match row.value {
            Some(v) => (format!("{}", v.re), format!("{}", v.im)),
            None => (String::new(), String::new()),
        };
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            row.s.re, row.s.im, re_v, im_v, row.terms_used, row.converged, row.status
        )?;
    }
    w.flush()
}

pub fn write_sweep_json(path: &Path, function: &str, rows: &[SweepRow]) -> std::io::Result<()> {
    let rows_json: Vec<Value> = rows
        .iter()
        .map(|row| {
            json!({
                "re_s": row.s.re,
                "im_s": row.s.im,
                "re_value": row.value.map(|v| v.re),
                "im_value": row.value.map(|v| v.im),
                "terms_used": row.terms_used,
                "converged": row.converged,
                "status": row.status,
            })
        })
        .collect();
    let doc = json!({ "function": function, "rows": rows_json });
    let mut w = BufWriter::new(File::create(path)?);
    let mut text = serde_json::to_string_pretty(&doc).expect("sweep serialization");
    text.push('\n');
    w.write_all(text.as_bytes())?;
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_formatting() {
        assert_eq!(format_complex(Complex64::new(-0.5, 0.0)), "-0.5");
        assert_eq!(format_complex(Complex64::new(1.5, 2.0)), "1.5+2i");
        assert_eq!(format_complex(Complex64::new(0.0, -3.25)), "0-3.25i");
    }

    #[test]
    fn report_json_is_self_consistent() {
        let row = IdentityReport::from_sides(
            "id",
            Complex64::new(2.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0 + 1e-13, 0.0),
            1e-9,
            3,
        );
        let text = verify_report_json("lambda", &EvalConfig::default(), 0, &[row]);
        let doc: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["summary"]["total"], 1);
        assert_eq!(doc["summary"]["passed"], 1);
        let row = &doc["rows"][0];
        // rel_error must recompute from the row's own lhs/rhs.
        let lhs = Complex64::new(row["lhs"]["re"].as_f64().unwrap(), row["lhs"]["im"].as_f64().unwrap());
        let rhs = Complex64::new(row["rhs"]["re"].as_f64().unwrap(), row["rhs"]["im"].as_f64().unwrap());
        assert_eq!(
            row["rel_error"].as_f64().unwrap(),
            muzeta::relative_error(lhs, rhs)
        );
    }
}
