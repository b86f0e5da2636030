use std::io::Write;

use serde_json::{json, Value};
use twinllt_core::HessFn;
use twinllt_gkm::{frobenius_graded_with, hilbert_and_betti_with, margin_degree, xi_check, MAX_N};

use crate::args::{GkmCommand, GkmCommon, Global};
use crate::output::{certificate_json, certificate_text, csv_table, h_json, int_coeffs};
use crate::{CliError, CliResult, EXIT_OK, EXIT_VIOLATION};

fn targets(common: &GkmCommon, err: &mut dyn Write) -> Result<Vec<HessFn>, CliError> {
    let hs = common.targets.resolve()?;
    let n = hs.iter().map(HessFn::n).max().unwrap_or(0);
    if n > MAX_N {
        return Err(CliError::Usage(format!(
            "n = {n} is beyond the supported size {MAX_N}"
        )));
    }
    if n == 5 {
        if !common.allow_n5 {
            return Err(CliError::Usage(
                "n = 5 is slow; pass --allow-n5 to run it".into(),
            ));
        }
        writeln!(err, "warning: n = 5 systems are large; expect a long run")?;
    }
    Ok(hs)
}

pub fn run(cmd: &GkmCommand, g: &Global, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let mode = g.mode();
    match cmd {
        GkmCommand::Betti {
            common,
            variant,
            json,
            csv,
        } => {
            let hs = targets(common, err)?;
            let mut rows = Vec::new();
            for h in &hs {
                rows.push((h, hilbert_and_betti_with(h, *variant, mode, common.solver)?));
            }
            if *csv {
                let table = csv_table(
                    &["h", "variant", "arithmetic"],
                    rows.iter()
                        .map(|(h, b)| {
                            (
                                vec![
                                    h.to_string(),
                                    variant.to_string(),
                                    certificate_text(&b.certificate),
                                ],
                                int_coeffs(&b.betti),
                            )
                        })
                        .collect(),
                )
                .map_err(|e| CliError::Failure(e.to_string()))?;
                write!(out, "{table}")?;
            } else if *json {
                let v: Vec<Value> = rows
                    .iter()
                    .map(|(h, b)| {
                        let hilbert: Vec<i64> = b
                            .hilbert
                            .coeffs()
                            .iter()
                            .map(|c| i64::try_from(c.to_integer()).expect("dimension"))
                            .collect();
                        json!({
                            "h": h_json(h),
                            "variant": variant.name(),
                            "betti": int_coeffs(&b.betti),
                            "hilbert": hilbert,
                            "certificate": certificate_json(&b.certificate),
                        })
                    })
                    .collect();
                writeln!(out, "{}", serde_json::to_string(&v).expect("json"))?;
            } else {
                for (h, b) in &rows {
                    writeln!(
                        out,
                        "{h} {variant}: {} [{}]",
                        b.betti,
                        certificate_text(&b.certificate)
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
        GkmCommand::Frobenius {
            common,
            action,
            basis,
            json,
        } => {
            let hs = targets(common, err)?;
            let mut items = Vec::new();
            for h in &hs {
                let f = frobenius_graded_with(h, *action, mode, common.solver)?;
                let layers: Vec<_> = f.value.layers().iter().map(|l| l.convert(*basis)).collect();
                if *json {
                    items.push(json!({
                        "h": h_json(h),
                        "action": action.name(),
                        "certificate": certificate_json(&f.certificate),
                        "layers": layers,
                    }));
                } else {
                    writeln!(out, "{h} {action} [{}]", certificate_text(&f.certificate))?;
                    for (k, l) in layers.iter().enumerate() {
                        writeln!(out, "  q^{k}: {l}")?;
                    }
                }
            }
            if *json {
                let v = if items.len() == 1 {
                    items.pop().unwrap()
                } else {
                    Value::Array(items)
                };
                writeln!(out, "{}", serde_json::to_string(&v).expect("json"))?;
            }
            Ok(EXIT_OK)
        }
        GkmCommand::Xi { common, dmax, json } => {
            let hs = targets(common, err)?;
            let mut all = true;
            let mut items = Vec::new();
            for h in &hs {
                let top = dmax.unwrap_or_else(|| margin_degree(h));
                for d in 0..=top {
                    let r = xi_check(h, d, mode)?;
                    all &= r.holds;
                    if *json {
                        items.push(json!({
                            "h": h_json(h),
                            "d": d,
                            "holds": r.holds,
                            "outcome": r.outcome,
                            "certificate": certificate_json(&r.certificate),
                        }));
                    } else {
                        writeln!(
                            out,
                            "{h} d={d}: {} (twin {}, hess {}) [{}]",
                            if r.holds { "holds" } else { "FAILS" },
                            r.outcome.dim_twin,
                            r.outcome.dim_hess,
                            certificate_text(&r.certificate)
                        )?;
                    }
                }
            }
            if *json {
                writeln!(out, "{}", serde_json::to_string(&items).expect("json"))?;
            }
            Ok(if all { EXIT_OK } else { EXIT_VIOLATION })
        }
    }
}
