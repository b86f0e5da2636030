//! Irreducible representations of `S_n` in Young's seminormal form.

use num_traits::{One, Zero};
use twinllt_core::{partitions, rat, Partition, Rational};

use crate::linalg::Scalars;
use crate::perm::{Perm, SymmetricGroup};

pub type Matrix<E> = Vec<Vec<E>>;

/// A standard Young tableau, rows of entries `0..n`.
pub type Tableau = Vec<Vec<u8>>;

pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn rec(shape: &[usize], next: u8, n: u8, t: &mut Tableau, out: &mut Vec<Tableau>) {
        if next == n {
            out.push(t.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = t[r].len();
            if len < shape[r] && (r == 0 || t[r - 1].len() > len) {
                t[r].push(next);
                rec(shape, next + 1, n, t, out);
                t[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut t = vec![Vec::new(); shape.len()];
    rec(shape.parts(), 0, shape.size() as u8, &mut t, &mut out);
    out
}

fn position(t: &Tableau, k: u8) -> (usize, usize) {
    for (r, row) in t.iter().enumerate() {
        if let Some(c) = row.iter().position(|&x| x == k) {
            return (r, c);
        }
    }
    unreachable!("entry {k} missing from tableau")
}

/// `ρ(s_k)` for the adjacent transposition `(k, k+1)`, with columns giving images
/// of basis vectors.
fn adjacent(tableaux: &[Tableau], k: u8) -> Matrix<Rational> {
    let f = tableaux.len();
    let mut m = vec![vec![Rational::zero(); f]; f];
    for (j, t) in tableaux.iter().enumerate() {
        let (r1, c1) = position(t, k);
        let (r2, c2) = position(t, k + 1);
        if r1 == r2 {
            m[j][j] = Rational::one();
        } else if c1 == c2 {
            m[j][j] = -Rational::one();
        } else {
            let axial = (c2 as i64 - r2 as i64) - (c1 as i64 - r1 as i64);
            let mut swapped = t.clone();
            swapped[r1][c1] = k + 1;
            swapped[r2][c2] = k;
            let j2 = tableaux
                .iter()
                .position(|x| *x == swapped)
                .expect("standard");
            let inv = Rational::one() / rat(axial);
            m[j][j] = inv.clone();
            m[j2][j] = if axial > 0 {
                Rational::one()
            } else {
                Rational::one() - &inv * &inv
            };
        }
    }
    m
}

pub fn mat_mul<S: Scalars>(s: &S, a: &Matrix<S::E>, b: &Matrix<S::E>) -> Matrix<S::E> {
    let f = a.len();
    let mut out = vec![vec![s.zero(); f]; f];
    for i in 0..f {
        for k in 0..f {
            if s.is_zero(&a[i][k]) {
                continue;
            }
            for j in 0..f {
                out[i][j] = s.add(&out[i][j], &s.mul(&a[i][k], &b[k][j]));
            }
        }
    }
    out
}

/// One irreducible: its shape and a matrix for every group element.
#[derive(Clone, Debug)]
pub struct Irrep<E> {
    pub shape: Partition,
    pub dim: usize,
    /// Indexed like [`SymmetricGroup::elements`].
    pub matrices: Vec<Matrix<E>>,
}

impl Irrep<Rational> {
    pub fn seminormal(shape: &Partition, group: &SymmetricGroup) -> Self {
        let n = group.n();
        let tableaux = standard_tableaux(shape);
        let f = tableaux.len();
        let gens: Vec<Matrix<Rational>> = (0..n.saturating_sub(1))
            .map(|k| adjacent(&tableaux, k as u8))
            .collect();
        let mut matrices: Vec<Option<Matrix<Rational>>> = vec![None; group.order()];
        let id = (0..f)
            .map(|i| {
                (0..f)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        matrices[group.index_of(&Perm::identity(n))] = Some(id);
        let mut queue = vec![Perm::identity(n)];
        while let Some(v) = queue.pop() {
            let mv = matrices[group.index_of(&v)].clone().unwrap();
            for (k, g) in gens.iter().enumerate() {
                let w = v.times_transposition(k, k + 1);
                let wi = group.index_of(&w);
                if matrices[wi].is_none() {
                    matrices[wi] = Some(mat_mul(&crate::linalg::Exact, &mv, g));
                    queue.push(w);
                }
            }
        }
        Self {
            shape: shape.clone(),
            dim: f,
            matrices: matrices.into_iter().map(Option::unwrap).collect(),
        }
    }

    pub fn to_field<S: Scalars>(&self, s: &S) -> Irrep<S::E> {
        Irrep {
            shape: self.shape.clone(),
            dim: self.dim,
            matrices: self
                .matrices
                .iter()
                .map(|m| {
                    m.iter()
                        .map(|r| r.iter().map(|x| s.from_rational(x)).collect())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn character(&self, group: &SymmetricGroup, mu: &Partition) -> i64 {
        let m = &self.matrices[group.index_of(&Perm::with_cycle_type(mu))];
        let tr: Rational = (0..self.dim).map(|i| m[i][i].clone()).sum();
        assert!(tr.is_integer(), "non-integral character value");
        i64::try_from(tr.to_integer()).expect("character fits in i64")
    }
}

/// Every irreducible of `S_n`, in the order of [`partitions`].
pub fn all_irreps(group: &SymmetricGroup) -> Vec<Irrep<Rational>> {
    partitions(group.n())
        .iter()
        .map(|l| Irrep::seminormal(l, group))
        .collect()
}

/// Checks `Σ_v ρ(v⁻¹)_{ab} ρ'(v)_{cd} = δ_{ρρ'} δ_{ad} δ_{bc} n!/f_ρ` for every pair
/// of irreducibles, which makes the Fourier transform on `Q[S_n]` invertible with
/// the explicit inverse used for reconstruction.
pub fn schur_orthogonality(group: &SymmetricGroup, irreps: &[Irrep<Rational>]) -> bool {
    let order = rat(group.order() as i64);
    let inverses: Vec<usize> = group
        .elements()
        .iter()
        .map(|v| group.index_of(&v.inverse()))
        .collect();
    for (x, rho) in irreps.iter().enumerate() {
        for (y, sigma) in irreps.iter().enumerate() {
            for a in 0..rho.dim {
                for b in 0..rho.dim {
                    for c in 0..sigma.dim {
                        for d in 0..sigma.dim {
                            let sum: Rational = (0..group.order())
                                .map(|v| {
                                    &rho.matrices[inverses[v]][a][b] * &sigma.matrices[v][c][d]
                                })
                                .sum();
                            let expect = if x == y && a == d && b == c {
                                &order / rat(rho.dim as i64)
                            } else {
                                Rational::zero()
                            };
                            if sum != expect {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Exact;

    #[test]
    fn tableau_counts() {
        let counts: Vec<usize> = partitions(5)
            .iter()
            .map(|l| standard_tableaux(l).len())
            .collect();
        assert_eq!(counts.iter().map(|f| f * f).sum::<usize>(), 120);
        assert_eq!(
            standard_tableaux(&Partition::new(vec![3, 2]).unwrap()).len(),
            5
        );
    }

    #[test]
    fn coxeter_relations() {
        for n in 2..=5 {
            let g = SymmetricGroup::new(n);
            for l in partitions(n) {
                let t = standard_tableaux(&l);
                let gens: Vec<_> = (0..n - 1).map(|k| adjacent(&t, k as u8)).collect();
                let id = Irrep::seminormal(&l, &g).matrices[0].clone();
                for k in 0..n - 1 {
                    assert_eq!(mat_mul(&Exact, &gens[k], &gens[k]), id);
                    if k + 2 < n {
                        let a = mat_mul(&Exact, &mat_mul(&Exact, &gens[k], &gens[k + 1]), &gens[k]);
                        let b = mat_mul(
                            &Exact,
                            &mat_mul(&Exact, &gens[k + 1], &gens[k]),
                            &gens[k + 1],
                        );
                        assert_eq!(a, b);
                    }
                    for j in k + 2..n - 1 {
                        assert_eq!(
                            mat_mul(&Exact, &gens[k], &gens[j]),
                            mat_mul(&Exact, &gens[j], &gens[k])
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn homomorphism_and_characters() {
        let g = SymmetricGroup::new(4);
        let irreps = all_irreps(&g);
        for rho in &irreps {
            for (i, u) in g.elements().iter().enumerate().step_by(5) {
                for (j, v) in g.elements().iter().enumerate() {
                    let uv = g.index_of(&u.compose(v));
                    assert_eq!(
                        mat_mul(&Exact, &rho.matrices[i], &rho.matrices[j]),
                        rho.matrices[uv]
                    );
                }
            }
        }
        // Character of the standard representation (3,1): fixed points minus one.
        let std = &irreps[1];
        assert_eq!(std.shape.parts(), &[3, 1]);
        let values: Vec<i64> = partitions(4)
            .iter()
            .map(|mu| std.character(&g, mu))
            .collect();
        assert_eq!(values, vec![-1, 0, -1, 1, 3]);
        assert!(schur_orthogonality(&g, &irreps));
    }
}
