//! Exact verification passes for the standalone identities: the `f_n` recursions,
//! palindromicity, the modular and general-r laws, multiplicativity, and the two
//! plethystic relations.

use std::collections::HashMap;

use serde::Serialize;

use crate::hessenberg::{enumerate_hessenberg, find_triples, HessFn, Role};
use crate::llt::{csf_direct, k_poly, llt_direct, Engine, Recursion};
use crate::partition::{partitions, Partition};
use crate::qpoly::{q_integer, QPoly};
use crate::symfunc::{Basis, SymFunc};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub identity: String,
    pub instance: String,
    pub detail: String,
}

/// Machine-readable outcome of a verification pass.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            passed: true,
            checks: 0,
            failures: Vec::new(),
        }
    }

    pub fn check(
        &mut self,
        identity: &str,
        instance: impl FnOnce() -> String,
        ok: bool,
        detail: impl FnOnce() -> String,
    ) {
        self.checks += 1;
        if !ok {
            self.passed = false;
            self.failures.push(Failure {
                identity: identity.to_string(),
                instance: instance(),
                detail: detail(),
            });
        }
    }

    /// Fold another report's counts and failures into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        self.passed &= other.passed;
        self.failures.extend(other.failures);
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

/// Frobenius characteristic of `Q[t_1..t_n]`, degree by degree: layer `d` is
/// the permutation module on degree-`d` monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFSeries {
    pub n: usize,
    pub layers: Vec<SymFunc>,
}

impl GradedFSeries {
    pub fn layer(&self, d: usize) -> &SymFunc {
        &self.layers[d]
    }

    pub fn order(&self) -> usize {
        self.layers.len() - 1
    }
}

/// Orbit count: each exponent multiset `a` of total `d` with at most `n` nonzero
/// entries contributes `∏_e h_{m_e}`, where `m_e` counts entries equal to `e`
/// (zeros included).
pub fn f_series(n: usize, order: usize) -> GradedFSeries {
    let layers = (0..=order)
        .map(|d| {
            let mut acc = SymFunc::zero(n, Basis::H);
            let orbits = if n == 0 {
                if d == 0 {
                    vec![Partition::empty()]
                } else {
                    Vec::new()
                }
            } else {
                partitions(d).into_iter().filter(|a| a.len() <= n).collect()
            };
            for a in orbits {
                let mut mult: HashMap<usize, usize> = HashMap::new();
                for &e in a.parts() {
                    *mult.entry(e).or_insert(0) += 1;
                }
                if a.len() < n {
                    mult.insert(0, n - a.len());
                }
                let stab = Partition::from_unsorted(mult.into_values().collect());
                acc = &acc + &SymFunc::basis_element(Basis::H, stab);
            }
            if n == 0 && d == 0 {
                SymFunc::one()
            } else {
                acc
            }
        })
        .collect();
    GradedFSeries { n, layers }
}

/// Both `f_n` recursions on all layers `d <= order`, for every size `1..=n`.
pub fn verify_f_recursions(n: usize, order: usize) -> Report {
    let mut report = Report::new("f-recursions");
    let fs: Vec<GradedFSeries> = (0..=n).map(|k| f_series(k, order)).collect();
    for m in 1..=n {
        for d in 0..=order {
            // f_m = ∑_i q^{m-i} h_i f_{m-i}
            let mut rhs = SymFunc::zero(m, Basis::M);
            for i in 0..=m {
                let shift = m - i;
                if shift <= d {
                    rhs = &rhs + &(&SymFunc::h(i) * fs[m - i].layer(d - shift));
                }
            }
            report.check(
                "f_n = sum_i q^(n-i) h_i f_(n-i)",
                || format!("n={m}, layer={d}"),
                rhs.same_as(fs[m].layer(d)),
                || format!("lhs {} vs rhs {}", fs[m].layer(d).convert(Basis::M), rhs),
            );
            // q^m f_m = ∑_i (-1)^i e_i f_{m-i}
            let lhs = if d >= m {
                fs[m].layer(d - m).clone()
            } else {
                SymFunc::zero(m, Basis::M)
            };
            let mut rhs = SymFunc::zero(m, Basis::M);
            for i in 0..=m {
                let term = &SymFunc::e(i) * fs[m - i].layer(d);
                rhs = if i % 2 == 0 {
                    &rhs + &term
                } else {
                    &rhs - &term
                };
            }
            report.check(
                "q^n f_n = sum_i (-1)^i e_i f_(n-i)",
                || format!("n={m}, layer={d}"),
                rhs.same_as(&lhs),
                || format!("lhs {} vs rhs {}", lhs.convert(Basis::M), rhs),
            );
        }
    }
    report
}

/// `q^top F(1/q)`, coefficientwise; `None` if some coefficient exceeds degree `top`.
pub fn reverse_q(f: &SymFunc, top: usize) -> Option<SymFunc> {
    f.try_map_coeffs(|c| {
        c.reversed(top)
            .ok_or(crate::error::Error::ReversalDegree(top))
    })
    .ok()
}

fn palindromic(f: &SymFunc, top: usize) -> bool {
    reverse_q(f, top).is_some_and(|r| r.same_as(&f.omega()))
}

/// `q^{n(n-1)/2} K_n(1/q) = ω K_n(q)` for every size `1..=n`.
pub fn verify_k_palindromicity(n: usize) -> Report {
    let mut report = Report::new("k-palindromicity");
    for m in 1..=n {
        let k = k_poly(m);
        report.check(
            "q^N K_n(1/q) = omega K_n(q)",
            || format!("n={m}"),
            palindromic(&k, m * (m - 1) / 2),
            || format!("K_{m} = {k}"),
        );
    }
    report
}

/// Direct-engine values for every Hessenberg function, computed once.
#[derive(Default)]
pub struct DirectValues {
    llt: HashMap<HessFn, SymFunc>,
    csf: HashMap<HessFn, SymFunc>,
}

impl DirectValues {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, engine: Engine, h: &HessFn) -> &SymFunc {
        match engine {
            Engine::Llt => self.llt.entry(h.clone()).or_insert_with(|| llt_direct(h)),
            Engine::Csf => self.csf.entry(h.clone()).or_insert_with(|| csf_direct(h)),
        }
    }
}

/// `q^{N(h)} LLT_h(1/q) = ω LLT_h(q)` with `N(h) = ∑(h(i) - i)`.
pub fn verify_palindromicity(n_max: usize, values: &mut DirectValues) -> Report {
    let mut report = Report::new("palindromicity");
    for n in 1..=n_max {
        for h in enumerate_hessenberg(n) {
            let f = values.get(Engine::Llt, &h).clone();
            report.check(
                "q^N LLT_h(1/q) = omega LLT_h(q)",
                || h.to_string(),
                palindromic(&f, h.complex_dimension()),
                || format!("LLT = {f}"),
            );
        }
    }
    report
}

/// The modular law (`r = 1`) and the general-r law for every triple with `h` in
/// the middle, and multiplicativity for every decomposable `h`, for LLT and csf.
pub fn verify_laws(n_max: usize, values: &mut DirectValues) -> Report {
    let mut report = Report::new("laws");
    let mut recursions = [Recursion::new(Engine::Llt), Recursion::new(Engine::Csf)];
    for n in 1..=n_max {
        for h in enumerate_hessenberg(n) {
            for engine in [Engine::Llt, Engine::Csf] {
                for r in 1..n {
                    for t in find_triples(&h, Role::Middle, r) {
                        let mid = values.get(engine, &t.h_mid).clone();
                        let plus = values.get(engine, &t.h_plus).clone();
                        let minus = values.get(engine, &t.h_minus).clone();
                        let lhs = mid.scale(&q_integer(r + 1));
                        let rhs = &plus + &minus.scale(&q_integer(r).shift(1));
                        let identity = if r == 1 {
                            "(1+q)F(h) = F(h+) + qF(h-)"
                        } else {
                            "[r+1]F(h) = F(h+) + q[r]F(h-)"
                        };
                        report.check(
                            identity,
                            || {
                                format!(
                                    "{engine} {:?} r={r} params={:?}: ({}, {}, {})",
                                    t.kind, t.params, t.h_minus, t.h_mid, t.h_plus
                                )
                            },
                            lhs.same_as(&rhs),
                            || format!("lhs {lhs} vs rhs {}", rhs.convert(Basis::M)),
                        );
                    }
                }
                if h.is_decomposable() {
                    let blocks = h.decompose();
                    let mut direct_prod = SymFunc::one();
                    for b in &blocks {
                        direct_prod = &direct_prod * values.get(engine, b);
                    }
                    let whole = values.get(engine, &h).clone();
                    report.check(
                        "F(h) = prod F(blocks), direct",
                        || format!("{engine} {h}"),
                        whole.same_as(&direct_prod),
                        || format!("{whole} vs {direct_prod}"),
                    );
                    let rec = &mut recursions[engine as usize];
                    let rec_whole = rec.eval(&h);
                    let rec_prod = blocks
                        .iter()
                        .try_fold(SymFunc::one(), |acc, b| rec.eval(b).map(|v| &acc * &v));
                    let ok = matches!((&rec_whole, &rec_prod), (Ok(a), Ok(b)) if a.same_as(b));
                    report.check(
                        "F(h) = prod F(blocks), recursive",
                        || format!("{engine} {h}"),
                        ok,
                        || format!("{rec_whole:?} vs {rec_prod:?}"),
                    );
                }
            }
        }
    }
    report
}

/// `LLT_h[(q-1)X] = (q-1)^n csf_h` and `LLT_h[(1-q)X] = (1-q)^n ω csf_h`.
pub fn verify_plethystic(n_max: usize, values: &mut DirectValues) -> Report {
    let mut report = Report::new("plethystic");
    let q_minus = |k: usize| &QPoly::one().shift(k) - &QPoly::one();
    let one_minus = |k: usize| &QPoly::one() - &QPoly::one().shift(k);
    for n in 1..=n_max {
        for h in enumerate_hessenberg(n) {
            let llt = values.get(Engine::Llt, &h).clone();
            let csf = values.get(Engine::Csf, &h).clone();
            let lhs = llt.power_sum_scaling(q_minus);
            let rhs = csf.scale(&q_minus(1).pow(n));
            report.check(
                "LLT_h[(q-1)X] = (q-1)^n csf_h",
                || h.to_string(),
                lhs.same_as(&rhs),
                || format!("lhs {} vs rhs {}", lhs.convert(Basis::M), rhs),
            );
            let lhs = llt.power_sum_scaling(one_minus);
            let rhs = csf.omega().scale(&one_minus(1).pow(n));
            report.check(
                "LLT_h[(1-q)X] = (1-q)^n omega csf_h",
                || h.to_string(),
                lhs.same_as(&rhs),
                || format!("lhs {} vs rhs {}", lhs.convert(Basis::M), rhs),
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::rat;

    fn binom(n: u64, k: u64) -> i64 {
        (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1)) as i64
    }

    #[test]
    fn f_series_small_layers() {
        let f1 = f_series(1, 4);
        for d in 0..=4 {
            assert!(f1.layer(d).same_as(&SymFunc::h(1)));
        }
        let f2 = f_series(2, 2);
        let h11 = &SymFunc::h(1) * &SymFunc::h(1);
        assert!(f2.layer(1).same_as(&h11));
        assert!(f2.layer(2).same_as(&(&h11 + &SymFunc::h(2))));
    }

    #[test]
    fn f_series_dimensions() {
        for n in 1..=5usize {
            let f = f_series(n, 6);
            let ones = SymFunc::basis_element(Basis::H, Partition::from_unsorted(vec![1; n]));
            for d in 0..=6usize {
                // <layer, h_1^n> is the dimension of the permutation module
                let dim = f.layer(d).hall_pairing(&ones).unwrap();
                assert_eq!(
                    dim,
                    QPoly::constant(rat(binom((n + d - 1) as u64, d as u64)))
                );
            }
        }
    }

    #[test]
    fn recursion_reports_pass() {
        assert!(verify_f_recursions(3, 6).passed);
        assert!(verify_k_palindromicity(5).passed);
        let mut v = DirectValues::new();
        assert!(verify_palindromicity(4, &mut v).passed);
        assert!(verify_laws(4, &mut v).passed);
        assert!(verify_plethystic(4, &mut v).passed);
    }

    #[test]
    fn reversal_examples() {
        // q K_2(1/q) = q e_1^2 + (1-q) e_2
        let k2 = k_poly(2);
        let e1 = SymFunc::e(1);
        let expected =
            &(&e1 * &e1).scale(&QPoly::q()) + &SymFunc::e(2).scale(&QPoly::from_ints(&[1, -1]));
        assert!(reverse_q(&k2, 1).unwrap().same_as(&expected));
        assert!(reverse_q(&k2, 0).is_none());
    }

    #[test]
    fn broken_identity_is_reported() {
        let mut r = Report::new("x");
        r.check("id", || "inst".into(), false, || "why".into());
        assert!(!r.passed);
        assert_eq!(r.first_failure().unwrap().instance, "inst");
    }
}
