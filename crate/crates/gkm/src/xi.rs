//! The comparison map `ξ : (p_v)_v ↦ (v·p_v)_v` from twin tuples to Hessenberg tuples.

use serde::{Deserialize, Serialize};
use twinllt_core::HessFn;

use crate::error::Result;
use crate::full;
use crate::graph::{build_gkm, GkmGraph, Variant};
use crate::isotypic::{self, irreducibles};
use crate::linalg::Scalars;
use crate::mode::{execute, Certificate, Job, Mode};
use crate::monomial::Monomials;

/// Tuple spaces up to this many coordinates are solved whole; larger ones are
/// assembled from isotypic kernels.
pub const FULL_COLUMNS: usize = 1200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum XiRoute {
    Full,
    Isotypic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiOutcome {
    pub route: XiRoute,
    pub dim_twin: usize,
    pub dim_hess: usize,
    /// Every twin basis tuple meets the twin congruences.
    pub twin_basis_valid: bool,
    /// Every image meets the Hessenberg congruences.
    pub images_valid: bool,
    pub images_independent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiReport {
    pub h: HessFn,
    pub d: usize,
    pub outcome: XiOutcome,
    pub holds: bool,
    pub certificate: Certificate,
}

/// Whether `x` meets every edge congruence of `g`.
fn satisfies<S: Scalars>(
    s: &S,
    g: &GkmGraph,
    mons: &Monomials,
    tables: &[Vec<usize>],
    x: &[S::E],
) -> bool {
    let mm = mons.len();
    let mut acc = vec![s.zero(); mm];
    for (e, sub) in g.edges.iter().zip(tables) {
        for m in 0..mm {
            let diff = s.sub(&x[e.v * mm + m], &x[e.w * mm + m]);
            if !s.is_zero(&diff) {
                acc[sub[m]] = s.add(&acc[sub[m]], &diff);
            }
        }
        if acc.iter().any(|a| !s.is_zero(a)) {
            return false;
        }
    }
    true
}

struct Checker<'a> {
    twin: GkmGraph,
    hess: GkmGraph,
    mons: &'a Monomials,
    twin_tables: Vec<Vec<usize>>,
    hess_tables: Vec<Vec<usize>>,
    /// `xi[v * M + m]` is the coordinate of `(v, v·m)`.
    xi: Vec<usize>,
}

impl<'a> Checker<'a> {
    fn new(h: &HessFn, mons: &'a Monomials) -> Self {
        let twin = build_gkm(h, Variant::Twin);
        let hess = build_gkm(h, Variant::Hessenberg);
        let tables = |g: &GkmGraph| {
            g.edges
                .iter()
                .map(|e| mons.substitution_table(e.weight.0, e.weight.1))
                .collect()
        };
        let mm = mons.len();
        let mut xi = Vec::with_capacity(twin.vertex_count() * mm);
        for (vi, v) in twin.group.elements().iter().enumerate() {
            xi.extend(mons.permutation_table(v).into_iter().map(|m| vi * mm + m));
        }
        Self {
            twin_tables: tables(&twin),
            hess_tables: tables(&hess),
            twin,
            hess,
            mons,
            xi,
        }
    }

    fn image<S: Scalars>(&self, s: &S, x: &[S::E]) -> Vec<S::E> {
        let mut y = vec![s.zero(); x.len()];
        for (c, value) in x.iter().enumerate() {
            y[self.xi[c]] = value.clone();
        }
        y
    }

    /// Checks one twin tuple and its image.
    fn check<S: Scalars>(&self, s: &S, x: &[S::E]) -> (bool, bool) {
        let twin_ok = satisfies(s, &self.twin, self.mons, &self.twin_tables, x);
        let y = self.image(s, x);
        (
            twin_ok,
            satisfies(s, &self.hess, self.mons, &self.hess_tables, &y),
        )
    }
}

struct XiJob<'a> {
    h: &'a HessFn,
    d: usize,
}

impl Job for XiJob<'_> {
    type Output = XiOutcome;

    fn what(&self) -> String {
        format!("the xi comparison for {} in degree {}", self.h, self.d)
    }

    fn run<S: Scalars>(&self, s: &S) -> Result<XiOutcome> {
        let mons = Monomials::new(self.h.n(), self.d);
        let checker = Checker::new(self.h, &mons);
        let columns = checker.twin.vertex_count() * mons.len();
        let mut twin_basis_valid = true;
        let mut images_valid = true;
        if columns <= FULL_COLUMNS {
            let r = full::reduce(s, &checker.twin, &mons);
            let free = r.free_columns();
            let mut images_independent = true;
            for (k, b) in r.kernel_basis(s).iter().enumerate() {
                let (t, i) = checker.check(s, b);
                twin_basis_valid &= t;
                images_valid &= i;
                // ξ permutes coordinates, so the images stay dual to ξ(free).
                let y = checker.image(s, b);
                images_independent &= free.iter().enumerate().all(|(j, &f)| {
                    let want = if j == k { s.one() } else { s.zero() };
                    y[checker.xi[f]] == want
                });
            }
            let dim_hess = full::reduce(s, &checker.hess, &mons).nullity();
            return Ok(XiOutcome {
                route: XiRoute::Full,
                dim_twin: r.nullity(),
                dim_hess,
                twin_basis_valid,
                images_valid,
                images_independent,
            });
        }
        let irr = irreducibles(self.h.n());
        let group = &irr.group;
        let inverses: Vec<usize> = group
            .elements()
            .iter()
            .map(|v| group.index_of(&v.inverse()))
            .collect();
        let mut dim_twin = 0;
        let mut dim_hess = 0;
        for rho in &irr.irreps {
            let rho = rho.to_field(s);
            let k = isotypic::kernel(s, self.h, Variant::Twin, group, &rho, &mons);
            for phi in k.kernel_basis(s) {
                for c in 0..rho.dim {
                    let x = isotypic::reconstruct(s, group, &inverses, &rho, c, &phi, mons.len());
                    let (t, i) = checker.check(s, &x);
                    twin_basis_valid &= t;
                    images_valid &= i;
                }
            }
            dim_twin += rho.dim * k.nullity();
            dim_hess += rho.dim
                * isotypic::multiplicity(s, self.h, Variant::Hessenberg, group, &rho, self.d);
        }
        Ok(XiOutcome {
            route: XiRoute::Isotypic,
            dim_twin,
            dim_hess,
            twin_basis_valid,
            images_valid,
            // Distinct blocks of an invertible transform, independent kernel bases.
            images_independent: irr.orthogonal,
        })
    }
}

pub fn xi_check(h: &HessFn, d: usize, mode: Mode) -> Result<XiReport> {
    let (outcome, certificate) = execute(mode, &XiJob { h, d })?;
    let holds = outcome.twin_basis_valid
        && outcome.images_valid
        && outcome.images_independent
        && outcome.dim_twin == outcome.dim_hess;
    Ok(XiReport {
        h: h.clone(),
        d,
        outcome,
        holds,
        certificate,
    })
}
