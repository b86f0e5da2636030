use std::io::Write;

use serde_json::{json, Value};
use twinllt_core::hessenberg::find_triples_all_r;
use twinllt_core::llt::direct_engine;
use twinllt_core::{
    enumerate_hessenberg, find_triples, poincare as poincare_of, Engine, HessFn, Role,
};

use crate::args::{EngineArgs, Global, Method};
use crate::output::{csv_table, h_json, int_coeffs};
use crate::{persist, recursion, CliError, CliResult, EXIT_OK};

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    writeln!(out, "{}", serde_json::to_string(v).expect("json"))?;
    Ok(())
}

pub fn engine(engine: Engine, a: &EngineArgs, g: &Global, out: &mut dyn Write) -> CliResult {
    let hs = a.targets.resolve()?;
    if a.trace && a.method != Method::Recursive {
        return Err(CliError::Usage("--trace needs --method recursive".into()));
    }
    let cache = match a.method {
        Method::Recursive => g.cache(),
        Method::Direct => None,
    };
    let n_max = hs.iter().map(HessFn::n).max().unwrap_or(0);
    let mut rec = recursion(engine, cache.as_ref(), n_max);
    let mut records = Vec::new();
    for h in &hs {
        let (value, derivation) = match a.method {
            Method::Direct => (direct_engine(engine, h), None),
            Method::Recursive => {
                let v = rec.eval(h)?;
                let d = if a.trace {
                    Some(rec.derivation(h)?)
                } else {
                    None
                };
                (v, d)
            }
        };
        records.push((h, value.convert(a.basis), derivation));
    }
    persist(cache.as_ref(), &rec);
    let single = records.len() == 1;
    if a.json {
        let items: Vec<Value> = records
            .iter()
            .map(|(h, v, d)| {
                let value = serde_json::to_value(v).expect("json");
                match (single, d) {
                    (true, None) => value,
                    (_, None) => json!({"h": h_json(h), "value": value}),
                    (_, Some(d)) => json!({"h": h_json(h), "value": value, "derivation": d}),
                }
            })
            .collect();
        let v = if single {
            items.into_iter().next().unwrap()
        } else {
            Value::Array(items)
        };
        return emit_json(out, &v).map(|_| EXIT_OK);
    }
    for (h, v, d) in records {
        if single {
            writeln!(out, "{v}")?;
        } else {
            writeln!(out, "{h}: {v}")?;
        }
        if let Some(d) = d {
            writeln!(out, "{}", serde_json::to_string_pretty(&d).expect("json"))?;
        }
    }
    Ok(EXIT_OK)
}

pub fn poincare(
    targets: &crate::args::Targets,
    json: bool,
    csv: bool,
    out: &mut dyn Write,
) -> CliResult {
    let hs = targets.resolve()?;
    let rows: Vec<(HessFn, Vec<i64>)> = hs
        .into_iter()
        .map(|h| {
            let p = int_coeffs(&poincare_of(&h));
            (h, p)
        })
        .collect();
    if csv {
        let table = csv_table(
            &["h"],
            rows.into_iter()
                .map(|(h, c)| (vec![h.to_string()], c))
                .collect(),
        )
        .map_err(|e| CliError::Failure(e.to_string()))?;
        write!(out, "{table}")?;
    } else if json {
        let v: Vec<Value> = rows
            .iter()
            .map(|(h, c)| json!({"h": h_json(h), "poincare": c}))
            .collect();
        emit_json(out, &Value::Array(v))?;
    } else {
        for (h, _) in &rows {
            writeln!(out, "{h}: {}", poincare_of(h))?;
        }
    }
    Ok(EXIT_OK)
}

pub fn triples(
    h: &HessFn,
    role: Role,
    r: Option<usize>,
    json: bool,
    out: &mut dyn Write,
) -> CliResult {
    let found: Vec<_> = match r {
        Some(0) => return Err(CliError::Usage("--r must be at least 1".into())),
        Some(r) => find_triples(h, role, r),
        None => find_triples_all_r(h, role),
    };
    if json {
        emit_json(out, &serde_json::to_value(&found).expect("json"))?;
        return Ok(EXIT_OK);
    }
    if found.is_empty() {
        writeln!(out, "no triples")?;
    }
    for t in &found {
        let kind = serde_json::to_value(t.kind).expect("json");
        writeln!(
            out,
            "{} r={} params={:?}: h- = {}, h = {}, h+ = {}",
            kind.as_str().unwrap_or_default(),
            t.r,
            t.params,
            t.h_minus,
            t.h_mid,
            t.h_plus
        )?;
    }
    Ok(EXIT_OK)
}

pub fn decompose(h: &HessFn, json: bool, out: &mut dyn Write) -> CliResult {
    let blocks = h.decompose();
    if json {
        let v: Vec<Value> = blocks.iter().map(h_json).collect();
        emit_json(out, &Value::Array(v))?;
    } else {
        let parts: Vec<String> = blocks.iter().map(ToString::to_string).collect();
        writeln!(out, "{}", parts.join(" "))?;
    }
    Ok(EXIT_OK)
}

pub fn transpose(h: &HessFn, json: bool, out: &mut dyn Write) -> CliResult {
    let t = h.transpose();
    if json {
        emit_json(out, &h_json(&t))?;
    } else {
        writeln!(out, "{t}")?;
    }
    Ok(EXIT_OK)
}

pub fn enumerate(n: usize, json: bool, out: &mut dyn Write) -> CliResult {
    if n == 0 {
        return Err(CliError::Usage("--n needs n >= 1".into()));
    }
    let all = enumerate_hessenberg(n);
    if json {
        emit_json(out, &Value::Array(all.iter().map(h_json).collect()))?;
    } else {
        for h in all {
            writeln!(out, "{h}")?;
        }
    }
    Ok(EXIT_OK)
}
