use std::io::Write;

use rayon::prelude::*;
use serde_json::json;
use twinllt_core::identities::{
    verify_f_recursions, verify_k_palindromicity, verify_laws, verify_palindromicity,
    verify_plethystic, DirectValues, Report,
};
use twinllt_core::{
    csf_direct, hessenberg::enumerate_up_to, llt_direct, poincare, Basis, Engine, GradedSymFunc,
    MemoCache, QPoly, SymFunc,
};
use twinllt_gkm::{
    frobenius_graded, hilbert_and_betti, margin_degree, xi_check, Action, Mode, Variant,
};

use crate::args::{Global, ReportFormat, Suite};
use crate::output::{certificate_json, certificate_text};
use crate::{persist, recursion, CliResult, EXIT_OK, EXIT_VIOLATION};

/// Layers of the f_n series checked by the recursions.
const F_ORDER: usize = 8;
/// Largest n for the congruence pipelines.
pub const GKM_N_MAX: usize = 4;

const ORDER: [Suite; 5] = [
    Suite::FRecursions,
    Suite::Palindromicity,
    Suite::Laws,
    Suite::Plethystic,
    Suite::GkmLlt,
];

fn f_recursions(n_max: usize) -> Report {
    let mut r = Report::new("f-recursions");
    r.absorb(verify_f_recursions(n_max, F_ORDER));
    r.absorb(verify_k_palindromicity(n_max));
    r
}

fn laws(n_max: usize, cache: Option<&MemoCache>) -> Report {
    let mut values = DirectValues::new();
    let mut r = Report::new("laws");
    r.absorb(verify_laws(n_max, &mut values));
    for engine in [Engine::Llt, Engine::Csf] {
        let mut rec = recursion(engine, cache, n_max);
        for h in enumerate_up_to(n_max) {
            let got = rec.eval(&h);
            let want = values.get(engine, &h);
            r.check(
                "recursive = direct",
                || format!("{engine} {h}"),
                got.as_ref().is_ok_and(|v| v.same_as(want)),
                || format!("{got:?}"),
            );
            let fallback = rec.uses_fallback(&h);
            r.check(
                "no fallback rule",
                || format!("{engine} {h}"),
                matches!(fallback, Ok(false)),
                || format!("{fallback:?}"),
            );
        }
        persist(cache, &rec);
    }
    r
}

fn graded(f: &SymFunc) -> GradedSymFunc {
    GradedSymFunc::from_symfunc(&f.convert(Basis::M))
}

fn gkm_llt(n_max: usize, mode: Mode) -> Report {
    let mut r = Report::new("gkm-llt");
    let one_minus = |k: usize| &QPoly::one() - &QPoly::one().shift(k);
    for h in enumerate_up_to(n_max.min(GKM_N_MAX)) {
        let llt = llt_direct(&h);
        let dagger = frobenius_graded(&h, Action::Dagger, mode);
        r.check(
            "dagger Frobenius = LLT",
            || h.to_string(),
            dagger
                .as_ref()
                .is_ok_and(|f| f.value.same_as(&graded(&llt))),
            || {
                format!(
                    "{:?}",
                    dagger
                        .as_ref()
                        .map(|f| f.value.to_symfunc(Basis::S).to_string())
                )
            },
        );
        let dot = frobenius_graded(&h, Action::Dot, mode);
        let omega_csf = csf_direct(&h).omega();
        r.check(
            "dot Frobenius = omega csf",
            || h.to_string(),
            dot.as_ref()
                .is_ok_and(|f| f.value.same_as(&graded(&omega_csf))),
            || {
                format!(
                    "{:?}",
                    dot.as_ref()
                        .map(|f| f.value.to_symfunc(Basis::S).to_string())
                )
            },
        );
        if let Ok(f) = &dot {
            let lhs = llt.power_sum_scaling(one_minus);
            let rhs = f.value.to_symfunc(Basis::M).scale(&one_minus(1).pow(h.n()));
            r.check(
                "LLT_h[(1-q)X] = (1-q)^n F_dot(h)",
                || h.to_string(),
                lhs.same_as(&rhs),
                || format!("lhs {} vs rhs {}", lhs.convert(Basis::M), rhs),
            );
        }
        let betti = hilbert_and_betti(&h, Variant::Twin, mode);
        r.check(
            "twin Betti = Poincare",
            || h.to_string(),
            betti.as_ref().is_ok_and(|b| b.betti == poincare(&h)),
            || format!("{:?}", betti.as_ref().map(|b| b.betti.to_string())),
        );
        for d in 0..=margin_degree(&h) {
            let xi = xi_check(&h, d, mode);
            r.check(
                "xi is an isomorphism",
                || format!("{h} d={d}"),
                xi.as_ref().is_ok_and(|x| x.holds),
                || format!("{xi:?}"),
            );
        }
    }
    r
}

fn run_suite(suite: Suite, n_max: usize, mode: Mode, cache: Option<&MemoCache>) -> Report {
    match suite {
        Suite::FRecursions => f_recursions(n_max),
        Suite::Palindromicity => verify_palindromicity(n_max, &mut DirectValues::new()),
        Suite::Laws => laws(n_max, cache),
        Suite::Plethystic => verify_plethystic(n_max, &mut DirectValues::new()),
        Suite::GkmLlt => gkm_llt(n_max, mode),
        Suite::All => unreachable!("expanded before dispatch"),
    }
}

pub fn run(
    suite: Suite,
    n_max: usize,
    format: ReportFormat,
    g: &Global,
    out: &mut dyn Write,
) -> CliResult {
    if n_max == 0 {
        return Err(crate::CliError::Usage("--n-max needs n >= 1".into()));
    }
    let suites: Vec<Suite> = match suite {
        Suite::All => ORDER.to_vec(),
        s => vec![s],
    };
    let mode = g.mode();
    let cache = g.cache();
    let reports: Vec<Report> = suites
        .par_iter()
        .map(|&s| run_suite(s, n_max, mode, cache.as_ref()))
        .collect();
    let passed = reports.iter().all(|r| r.passed);
    let certificate = mode.certificate();
    match format {
        ReportFormat::Json => {
            let v = json!({
                "suite": suite_name(suite),
                "n_max": n_max,
                "gkm_n_max": n_max.min(GKM_N_MAX),
                "seed": g.seed,
                "certificate": certificate_json(&certificate),
                "passed": passed,
                "reports": reports,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
        }
        ReportFormat::Text => {
            writeln!(
                out,
                "verify {} n_max={n_max} [{}]",
                suite_name(suite),
                certificate_text(&certificate)
            )?;
            for r in &reports {
                let state = if r.passed { "pass" } else { "FAIL" };
                writeln!(out, "{}: {state} ({} checks)", r.suite, r.checks)?;
                for f in &r.failures {
                    writeln!(out, "  {} at {}: {}", f.identity, f.instance, f.detail)?;
                }
            }
            writeln!(out, "{}", if passed { "all passed" } else { "FAILED" })?;
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_VIOLATION })
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::FRecursions => "f-recursions",
        Suite::Palindromicity => "palindromicity",
        Suite::Laws => "laws",
        Suite::Plethystic => "plethystic",
        Suite::GkmLlt => "gkm-llt",
        Suite::All => "all",
    }
}
