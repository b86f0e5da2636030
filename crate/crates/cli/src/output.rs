use serde_json::{json, Value};
use twinllt_core::{HessFn, QPoly};
use twinllt_gkm::Certificate;

/// Integer coefficients of a polynomial known to be integral.
pub fn int_coeffs(p: &QPoly) -> Vec<i64> {
    p.coeffs()
        .iter()
        .map(|c| i64::try_from(c.to_integer()).expect("integral coefficient"))
        .collect()
}

pub fn h_json(h: &HessFn) -> Value {
    json!(h.values())
}

pub fn certificate_text(c: &Certificate) -> String {
    match c {
        Certificate::Exact => "exact".into(),
        Certificate::DualPrime { seed, primes } => {
            format!("dual-prime seed={seed} primes={},{}", primes[0], primes[1])
        }
    }
}

pub fn certificate_json(c: &Certificate) -> Value {
    serde_json::to_value(c).expect("certificate serialises")
}

/// One CSV record per row, polynomial coefficients padded to a common width.
pub fn csv_table(head: &[&str], rows: Vec<(Vec<String>, Vec<i64>)>) -> Result<String, csv::Error> {
    let width = rows.iter().map(|(_, c)| c.len()).max().unwrap_or(0);
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = head.iter().map(|s| s.to_string()).collect();
    header.extend((0..width).map(|k| format!("q^{k}")));
    w.write_record(&header)?;
    for (mut fields, coeffs) in rows {
        fields.extend((0..width).map(|k| coeffs.get(k).copied().unwrap_or(0).to_string()));
        w.write_record(&fields)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}
