//! Graded characters, Hilbert series, Betti numbers and Frobenius characteristics.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use twinllt_core::{partitions, rat, GradedSymFunc, HessFn, Partition, QPoly, QSeries, SymFunc};

use crate::error::{Error, Result};
use crate::full::full_character;
use crate::graph::{build_gkm, Variant};
use crate::isotypic::{irreducibles, multiplicity};
use crate::linalg::Scalars;
use crate::mode::{execute, Certificate, Job, Mode};

/// Largest `n` accepted by the graded computations.
pub const MAX_N: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Action {
    Dagger,
    Dot,
}

impl Action {
    /// The presentation the action lives on.
    pub fn variant(self) -> Variant {
        match self {
            Action::Dagger => Variant::Twin,
            Action::Dot => Variant::Hessenberg,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Action::Dagger => "dagger",
            Action::Dot => "dot",
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Action {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "dagger" => Ok(Action::Dagger),
            "dot" => Ok(Action::Dot),
            _ => Err(format!("unknown action '{s}' (expected dagger or dot)")),
        }
    }
}

/// Which linear system the traces come from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Solver {
    /// One small system per irreducible.
    #[default]
    Isotypic,
    /// The whole tuple space, with traces read off the reduced basis.
    Full,
}

impl FromStr for Solver {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "isotypic" => Ok(Solver::Isotypic),
            "full" => Ok(Solver::Full),
            _ => Err(format!("unknown solver '{s}' (expected isotypic or full)")),
        }
    }
}

/// Traces of the natural action on each degree of the equivariant solutions:
/// dagger on the twin side, dot on the Hessenberg side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCharacter {
    pub n: usize,
    pub variant: Variant,
    pub degrees: Vec<BTreeMap<Partition, i64>>,
    pub certificate: Certificate,
}

impl GradedCharacter {
    pub fn dims(&self) -> Vec<i64> {
        let id = Partition::from_unsorted(vec![1; self.n]);
        self.degrees.iter().map(|c| c[&id]).collect()
    }
}

struct MultiplicityJob<'a> {
    h: &'a HessFn,
    variant: Variant,
    d_max: usize,
}

impl Job for MultiplicityJob<'_> {
    /// `[d][ρ]`, irreducibles in the order of `partitions(n)`.
    type Output = Vec<Vec<usize>>;

    fn what(&self) -> String {
        format!("the isotypic multiplicities of {} {}", self.variant, self.h)
    }

    fn run<S: Scalars>(&self, s: &S) -> Result<Self::Output> {
        let irr = irreducibles(self.h.n());
        let field: Vec<_> = irr.irreps.iter().map(|r| r.to_field(s)).collect();
        let tasks: Vec<(usize, usize)> = (0..=self.d_max)
            .flat_map(|d| (0..field.len()).map(move |k| (d, k)))
            .collect();
        let mults: Vec<usize> = tasks
            .par_iter()
            .map(|&(d, k)| multiplicity(s, self.h, self.variant, &irr.group, &field[k], d))
            .collect();
        Ok(mults.chunks(field.len()).map(<[usize]>::to_vec).collect())
    }
}

fn check_size(h: &HessFn) -> Result<()> {
    if h.n() > MAX_N {
        return Err(Error::TooLarge {
            n: h.n(),
            limit: MAX_N,
        });
    }
    Ok(())
}

/// Characters for degrees `0..=d_max`.
pub fn equivariant_character(
    h: &HessFn,
    variant: Variant,
    d_max: usize,
    mode: Mode,
    solver: Solver,
) -> Result<GradedCharacter> {
    check_size(h)?;
    let n = h.n();
    let classes = partitions(n);
    match solver {
        Solver::Isotypic => {
            let (mults, certificate) = execute(mode, &MultiplicityJob { h, variant, d_max })?;
            let irr = irreducibles(n);
            let table: Vec<Vec<i64>> = irr
                .irreps
                .iter()
                .map(|rho| {
                    classes
                        .iter()
                        .map(|mu| rho.character(&irr.group, mu))
                        .collect()
                })
                .collect();
            let degrees = mults
                .iter()
                .map(|m| {
                    classes
                        .iter()
                        .enumerate()
                        .map(|(c, mu)| {
                            let v = m
                                .iter()
                                .zip(&table)
                                .map(|(&k, row)| k as i64 * row[c])
                                .sum();
                            (mu.clone(), v)
                        })
                        .collect()
                })
                .collect();
            Ok(GradedCharacter {
                n,
                variant,
                degrees,
                certificate,
            })
        }
        Solver::Full => {
            let g = build_gkm(h, variant);
            let per_degree: Vec<_> = (0..=d_max)
                .into_par_iter()
                .map(|d| full_character(&g, d, mode))
                .collect::<Result<_>>()?;
            let certificate = mode.certificate();
            Ok(GradedCharacter {
                n,
                variant,
                degrees: per_degree.into_iter().map(|(c, _)| c).collect(),
                certificate,
            })
        }
    }
}

/// Degrees `0..=N+n`, where `N` is the complex dimension.
pub fn margin_degree(h: &HessFn) -> usize {
    h.complex_dimension() + h.n()
}

pub fn dagger_character(h: &HessFn, mode: Mode) -> Result<GradedCharacter> {
    equivariant_character(h, Variant::Twin, margin_degree(h), mode, Solver::Isotypic)
}

pub fn dot_character(h: &HessFn, mode: Mode) -> Result<GradedCharacter> {
    equivariant_character(
        h,
        Variant::Hessenberg,
        margin_degree(h),
        mode,
        Solver::Isotypic,
    )
}

/// The series by which equivariant traces at `μ` exceed ordinary ones, inverted:
/// the graded trace of `μ` on `Q[t_1, .., t_n]` is `1/R_μ(q)`. On the twin side
/// the group fixes the variables, so `R = (1-q)^n`; the dot action permutes
/// them, giving `R = ∏_i (1 - q^{μ_i})`.
pub fn recovery_factor(variant: Variant, mu: &Partition) -> QPoly {
    let one_minus = |k: usize| &QPoly::one() - &QPoly::one().shift(k);
    match variant {
        Variant::Twin => one_minus(1).pow(mu.size()),
        Variant::Hessenberg => mu
            .parts()
            .iter()
            .fold(QPoly::one(), |acc, &k| &acc * &one_minus(k)),
    }
}

/// Ordinary traces per class, degrees `0..=N`, after the vanishing check on
/// degrees `N+1..=N+n`.
fn ordinary_traces(h: &HessFn, chi: &GradedCharacter) -> Result<BTreeMap<Partition, Vec<i64>>> {
    let top = h.complex_dimension();
    let d_max = chi.degrees.len() - 1;
    let mut out = BTreeMap::new();
    for mu in partitions(h.n()) {
        let series = QPoly::from_ints(&chi.degrees.iter().map(|c| c[&mu]).collect::<Vec<_>>());
        let product = &series * &recovery_factor(chi.variant, &mu);
        for k in top + 1..=d_max {
            if !product.coeff(k).is_zero() {
                return Err(Error::MarginViolation {
                    h: h.to_string(),
                    degree: k,
                    dimension: top,
                });
            }
        }
        let values = (0..=top)
            .map(|k| {
                let c = product.coeff(k);
                i64::try_from(c.to_integer()).expect("small trace")
            })
            .collect();
        out.insert(mu, values);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frobenius {
    pub value: GradedSymFunc,
    pub certificate: Certificate,
}

pub fn frobenius_graded(h: &HessFn, action: Action, mode: Mode) -> Result<Frobenius> {
    frobenius_graded_with(h, action, mode, Solver::Isotypic)
}

pub fn frobenius_graded_with(
    h: &HessFn,
    action: Action,
    mode: Mode,
    solver: Solver,
) -> Result<Frobenius> {
    let chi = equivariant_character(h, action.variant(), margin_degree(h), mode, solver)?;
    let traces = ordinary_traces(h, &chi)?;
    let layers = (0..=h.complex_dimension())
        .map(|k| SymFunc::frobenius_from_character(h.n(), |mu| rat(traces[mu][k])))
        .collect();
    Ok(Frobenius {
        value: GradedSymFunc::new(h.n(), layers)?,
        certificate: chi.certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Betti {
    pub hilbert: QSeries,
    pub betti: QPoly,
    pub certificate: Certificate,
}

/// Hilbert series of the equivariant solutions through degree `N+n` and the
/// Betti polynomial `(1-q)^n · Hilb` truncated at `N`.
pub fn hilbert_and_betti(h: &HessFn, variant: Variant, mode: Mode) -> Result<Betti> {
    hilbert_and_betti_with(h, variant, mode, Solver::Isotypic)
}

pub fn hilbert_and_betti_with(
    h: &HessFn,
    variant: Variant,
    mode: Mode,
    solver: Solver,
) -> Result<Betti> {
    let d_max = margin_degree(h);
    let chi = equivariant_character(h, variant, d_max, mode, solver)?;
    let dims = chi.dims();
    let hilbert = QSeries::from_coeffs(dims.iter().map(|&x| rat(x)).collect(), d_max);
    let product = &QPoly::from_ints(&dims)
        * &recovery_factor(Variant::Twin, &Partition::from_unsorted(vec![1; h.n()]));
    let top = h.complex_dimension();
    if let Some(k) = (top + 1..=d_max).find(|&k| !product.coeff(k).is_zero()) {
        return Err(Error::MarginViolation {
            h: h.to_string(),
            degree: k,
            dimension: top,
        });
    }
    Ok(Betti {
        hilbert,
        betti: QPoly::from_coeffs((0..=top).map(|k| product.coeff(k)).collect()),
        certificate: chi.certificate,
    })
}
