//! The congruence system split by isotypic component.
//!
//! Under the Fourier transform `x ↦ x̂(ρ) = Σ_v x_v ρ(v)`, the edge conditions
//! for `s = (i j)` act on rows of `x̂(ρ)`. A row `y = (y_1, .., y_f)` of degree-`d`
//! forms must satisfy, for every edge transposition `s` and every `b`,
//!
//! * twin: `S(y_b - Σ_a ρ(s)_{ab} y_a) = 0`,
//! * Hessenberg, after undoing ξ: `S(y_b - Σ_a ρ(s)_{ab} s·y_a) = 0`,
//!
//! where `S` substitutes `t_i := t_j`. The space `K_ρ` of such rows has dimension
//! equal to the multiplicity of `ρ` in the degree-`d` solutions, and the left
//! factor of each block carries the action.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use twinllt_core::{HessFn, Rational};

use crate::graph::{graph_edges, symmetric_group, Variant};
use crate::irrep::{all_irreps, schur_orthogonality, Irrep};
use crate::linalg::{Rref, Scalars};
use crate::monomial::Monomials;
use crate::perm::{Perm, SymmetricGroup};

/// The group of size `n` with its irreducibles and a flag recording whether
/// Schur orthogonality was confirmed for them.
pub struct Irreducibles {
    pub group: Arc<SymmetricGroup>,
    pub irreps: Vec<Irrep<Rational>>,
    pub orthogonal: bool,
}

pub fn irreducibles(n: usize) -> Arc<Irreducibles> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Irreducibles>>>> = OnceLock::new();
    let mut map = CACHE.get_or_init(Default::default).lock().unwrap();
    map.entry(n)
        .or_insert_with(|| {
            let group = symmetric_group(n);
            let irreps = all_irreps(&group);
            let orthogonal = schur_orthogonality(&group, &irreps);
            Arc::new(Irreducibles {
                group,
                irreps,
                orthogonal,
            })
        })
        .clone()
}

pub(crate) fn system<S: Scalars>(
    s: &S,
    h: &HessFn,
    variant: Variant,
    group: &SymmetricGroup,
    rho: &Irrep<S::E>,
    mons: &Monomials,
) -> Vec<Vec<S::E>> {
    let n = h.n();
    let f = rho.dim;
    let mm = mons.len();
    let ncols = f * mm;
    let mut rows = Vec::new();
    for (i, j) in graph_edges(h) {
        let swap = Perm::transposition(n, i, j);
        let rs = &rho.matrices[group.index_of(&swap)];
        let sub = mons.substitution_table(i, j);
        let twisted: Vec<usize> = match variant {
            Variant::Twin => sub.clone(),
            Variant::Hessenberg => (0..mm).map(|m| sub[mons.permute(m, &swap)]).collect(),
        };
        let mut image: HashMap<usize, usize> = HashMap::new();
        for &t in &sub {
            let next = image.len();
            image.entry(t).or_insert(next);
        }
        let base = rows.len();
        rows.extend((0..f * image.len()).map(|_| vec![s.zero(); ncols]));
        let row = |b: usize, t: usize| base + b * image.len() + image[&t];
        for b in 0..f {
            for m in 0..mm {
                let r = row(b, sub[m]);
                rows[r][b * mm + m] = s.add(&rows[r][b * mm + m], &s.one());
                let r = row(b, twisted[m]);
                for a in 0..f {
                    if !s.is_zero(&rs[a][b]) {
                        rows[r][a * mm + m] = s.sub(&rows[r][a * mm + m], &rs[a][b]);
                    }
                }
            }
        }
    }
    rows
}

pub(crate) fn multiplicity<S: Scalars>(
    s: &S,
    h: &HessFn,
    variant: Variant,
    group: &SymmetricGroup,
    rho: &Irrep<S::E>,
    d: usize,
) -> usize {
    let mons = Monomials::new(h.n(), d);
    let ncols = rho.dim * mons.len();
    ncols - s.rank(system(s, h, variant, group, rho, &mons), ncols)
}

pub(crate) fn kernel<S: Scalars>(
    s: &S,
    h: &HessFn,
    variant: Variant,
    group: &SymmetricGroup,
    rho: &Irrep<S::E>,
    mons: &Monomials,
) -> Rref<S::E> {
    s.rref(
        system(s, h, variant, group, rho, mons),
        rho.dim * mons.len(),
    )
}

/// The tuple `x_v = Σ_b ρ(v⁻¹)_{bc} φ_b`, whose transform is `φ` placed in row `c`
/// of block `ρ` (up to the factor `f_ρ/n!`). Laid out like the full system.
pub(crate) fn reconstruct<S: Scalars>(
    s: &S,
    group: &SymmetricGroup,
    inverses: &[usize],
    rho: &Irrep<S::E>,
    c: usize,
    phi: &[S::E],
    mm: usize,
) -> Vec<S::E> {
    let mut x = vec![s.zero(); group.order() * mm];
    for v in 0..group.order() {
        let m = &rho.matrices[inverses[v]];
        for b in 0..rho.dim {
            let w = &m[b][c];
            if s.is_zero(w) {
                continue;
            }
            for k in 0..mm {
                let p = &phi[b * mm + k];
                if !s.is_zero(p) {
                    x[v * mm + k] = s.add(&x[v * mm + k], &s.mul(w, p));
                }
            }
        }
    }
    x
}
