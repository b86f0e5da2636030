//! The congruence system on the whole tuple space `⊕_v Q[t]_d`.
//!
//! Columns are pairs `(vertex, monomial)`, numbered `v * M + m`. Each edge
//! `{v, w}` labelled `t_a - t_b` contributes the rows of `(p_v - p_w)|_{t_a := t_b}`.

use std::collections::{BTreeMap, HashMap};

use twinllt_core::{partitions, Partition, Rational};

use crate::error::{Error, Result};
use crate::graph::{GkmGraph, Variant};
use crate::linalg::{Exact, Rref, Scalars};
use crate::mode::{execute, Certificate, Job, Mode};
use crate::monomial::Monomials;
use crate::perm::Perm;

/// Solutions of one degree. In exact mode `basis` holds the kernel basis dual to
/// the free columns; in mod-p mode only the dimension is kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSolution {
    pub d: usize,
    pub dim: usize,
    pub columns: usize,
    pub basis: Option<Vec<Vec<Rational>>>,
    pub certificate: Certificate,
}

pub(crate) fn system<S: Scalars>(s: &S, g: &GkmGraph, mons: &Monomials) -> Vec<Vec<S::E>> {
    let mm = mons.len();
    let ncols = g.vertex_count() * mm;
    let mut rows = Vec::new();
    let mut tables: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for e in &g.edges {
        let sub = tables
            .entry(e.weight)
            .or_insert_with(|| mons.substitution_table(e.weight.0, e.weight.1));
        let mut image: HashMap<usize, usize> = HashMap::new();
        let base = rows.len();
        for m in 0..mm {
            let next = image.len();
            let r = *image.entry(sub[m]).or_insert(next);
            if base + r == rows.len() {
                rows.push(vec![s.zero(); ncols]);
            }
            let row = &mut rows[base + r];
            row[e.v * mm + m] = s.add(&row[e.v * mm + m], &s.one());
            row[e.w * mm + m] = s.sub(&row[e.w * mm + m], &s.one());
        }
    }
    rows
}

pub(crate) fn reduce<S: Scalars>(s: &S, g: &GkmGraph, mons: &Monomials) -> Rref<S::E> {
    let ncols = g.vertex_count() * mons.len();
    s.rref(system(s, g, mons), ncols)
}

struct DimJob<'a> {
    g: &'a GkmGraph,
    d: usize,
}

impl Job for DimJob<'_> {
    type Output = usize;

    fn what(&self) -> String {
        format!(
            "the dimension of {} {} in degree {}",
            self.g.variant, self.g.h, self.d
        )
    }

    fn run<S: Scalars>(&self, s: &S) -> Result<usize> {
        let mons = Monomials::new(self.g.n(), self.d);
        let ncols = self.g.vertex_count() * mons.len();
        Ok(ncols - s.rank(system(s, self.g, &mons), ncols))
    }
}

pub fn solve_degree(g: &GkmGraph, d: usize, mode: Mode) -> Result<DegreeSolution> {
    let mons = Monomials::new(g.n(), d);
    let columns = g.vertex_count() * mons.len();
    match mode {
        Mode::Exact => {
            let basis = reduce(&Exact, g, &mons).kernel_basis(&Exact);
            Ok(DegreeSolution {
                d,
                dim: basis.len(),
                columns,
                basis: Some(basis),
                certificate: Certificate::Exact,
            })
        }
        Mode::ModP { .. } => {
            let (dim, certificate) = execute(mode, &DimJob { g, d })?;
            Ok(DegreeSolution {
                d,
                dim,
                columns,
                basis: None,
                certificate,
            })
        }
    }
}

/// The coordinate permutation by which `μ` acts on the tuple space: the dagger
/// action on the twin side, the dot action on the Hessenberg side.
pub(crate) fn action_table(g: &GkmGraph, mons: &Monomials, mu: &Perm) -> Vec<usize> {
    let mm = mons.len();
    let mono: Vec<usize> = match g.variant {
        Variant::Twin => (0..mm).collect(),
        Variant::Hessenberg => mons.permutation_table(mu),
    };
    let mut pi = vec![0; g.vertex_count() * mm];
    for (wi, w) in g.group.elements().iter().enumerate() {
        let target = g.group.index_of(&mu.compose(w));
        for m in 0..mm {
            pi[wi * mm + m] = target * mm + mono[m];
        }
    }
    pi
}

/// Trace of a coordinate permutation `π` on the kernel of `r`. In the basis dual
/// to the free columns, the image of `b_f` has coordinate `(π b_f)[f] = b_f[π⁻¹ f]`
/// on `b_f`.
pub(crate) fn kernel_trace<S: Scalars>(s: &S, r: &Rref<S::E>, pi: &[usize]) -> S::E {
    let mut inv = vec![0; pi.len()];
    for (c, &t) in pi.iter().enumerate() {
        inv[t] = c;
    }
    let pivot_row = r.pivot_rows();
    let mut tr = s.zero();
    for f in r.free_columns() {
        let c = inv[f];
        if c == f {
            tr = s.add(&tr, &s.one());
        } else if let Some(k) = pivot_row[c] {
            tr = s.sub(&tr, &r.rows[k][f]);
        }
    }
    tr
}

struct CharacterJob<'a> {
    g: &'a GkmGraph,
    d: usize,
}

impl Job for CharacterJob<'_> {
    type Output = BTreeMap<Partition, i64>;

    fn what(&self) -> String {
        format!(
            "the degree-{} character of {} {}",
            self.d, self.g.variant, self.g.h
        )
    }

    fn run<S: Scalars>(&self, s: &S) -> Result<Self::Output> {
        let mons = Monomials::new(self.g.n(), self.d);
        let r = reduce(s, self.g, &mons);
        let mut out = BTreeMap::new();
        for mu in partitions(self.g.n()) {
            let pi = action_table(self.g, &mons, &Perm::with_cycle_type(&mu));
            let tr = s
                .to_integer(&kernel_trace(s, &r, &pi))
                .ok_or_else(|| Error::NonIntegralTrace(format!("class {mu} of {}", self.g.h)))?;
            out.insert(mu, tr);
        }
        Ok(out)
    }
}

/// Traces on the full degree-`d` solution space, one per cycle type.
pub fn full_character(
    g: &GkmGraph,
    d: usize,
    mode: Mode,
) -> Result<(BTreeMap<Partition, i64>, Certificate)> {
    execute(mode, &CharacterJob { g, d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_gkm;
    use twinllt_core::HessFn;

    fn hf(v: &[usize]) -> HessFn {
        HessFn::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dims_of_two_vertices() {
        let g = build_gkm(&hf(&[2, 2]), Variant::Twin);
        for (d, want) in [(0, 1), (1, 3), (2, 5)] {
            for mode in [Mode::Exact, Mode::ModP { seed: 4 }] {
                assert_eq!(solve_degree(&g, d, mode).unwrap().dim, want);
            }
        }
    }

    #[test]
    fn exact_basis_satisfies_congruences() {
        let g = build_gkm(&hf(&[2, 3, 3]), Variant::Hessenberg);
        let mons = Monomials::new(3, 2);
        let sol = solve_degree(&g, 2, Mode::Exact).unwrap();
        let rows = system(&Exact, &g, &mons);
        for b in sol.basis.unwrap() {
            for row in &rows {
                let dot: Rational = row.iter().zip(&b).map(|(x, y)| x * y).sum();
                assert_eq!(dot, Rational::from_integer(0.into()));
            }
        }
    }

    #[test]
    fn small_characters() {
        let g = build_gkm(&hf(&[2, 2]), Variant::Twin);
        let two = Partition::new(vec![2]).unwrap();
        let ones = Partition::new(vec![1, 1]).unwrap();
        let (c0, _) = full_character(&g, 0, Mode::Exact).unwrap();
        assert_eq!((c0[&ones], c0[&two]), (1, 1));
        let (c1, _) = full_character(&g, 1, Mode::ModP { seed: 9 }).unwrap();
        assert_eq!((c1[&ones], c1[&two]), (3, 1));
        let g = build_gkm(&hf(&[1, 2]), Variant::Twin);
        let (c2, _) = full_character(&g, 2, Mode::Exact).unwrap();
        // Unconstrained pair of quadratic forms: the swap fixes nothing.
        assert_eq!((c2[&ones], c2[&two]), (6, 0));
    }
}
