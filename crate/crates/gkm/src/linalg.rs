//! Dense elimination over a prime field or over the rationals.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use twinllt_core::Rational;

use crate::modp;

/// A coefficient field together with its elimination routine.
#[allow(clippy::wrong_self_convention)]
pub trait Scalars: Sync {
    type E: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn from_rational(&self, r: &Rational) -> Self::E;
    fn is_zero(&self, x: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;

    fn from_int(&self, v: i64) -> Self::E {
        self.from_rational(&Rational::from_integer(BigInt::from(v)))
    }

    fn neg(&self, a: &Self::E) -> Self::E {
        self.sub(&self.zero(), a)
    }

    /// The integer represented by `x`: for residues, the one of least absolute value.
    fn to_integer(&self, x: &Self::E) -> Option<i64>;

    fn rank(&self, rows: Vec<Vec<Self::E>>, ncols: usize) -> usize;
    fn rref(&self, rows: Vec<Vec<Self::E>>, ncols: usize) -> Rref<Self::E>;
}

/// Reduced row echelon form: `rows[k]` has a one at `pivots[k]` and zeros in
/// every other pivot column.
#[derive(Clone, Debug)]
pub struct Rref<E> {
    pub ncols: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<E>>,
}

impl<E: Clone + PartialEq + Debug> Rref<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.rank()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }

    /// For each column, the row whose pivot sits there.
    pub fn pivot_rows(&self) -> Vec<Option<usize>> {
        let mut at = vec![None; self.ncols];
        for (k, &c) in self.pivots.iter().enumerate() {
            at[c] = Some(k);
        }
        at
    }

    /// The kernel basis dual to the free columns: vector `f` is one at free
    /// column `f`, zero at the other free columns.
    pub fn kernel_basis<S: Scalars<E = E>>(&self, s: &S) -> Vec<Vec<E>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = vec![s.zero(); self.ncols];
                v[f] = s.one();
                for (k, &c) in self.pivots.iter().enumerate() {
                    v[c] = s.neg(&self.rows[k][f]);
                }
                v
            })
            .collect()
    }
}

/// Integers modulo a prime below `2^62`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModP {
    pub p: u64,
}

impl ModP {
    pub fn new(p: u64) -> Self {
        Self { p }
    }

    fn reduce_int(&self, v: &BigInt) -> u64 {
        let m = v.mod_floor(&BigInt::from(self.p));
        m.iter_u64_digits().next().unwrap_or(0)
    }

    /// Forward elimination in place; returns pivot columns. With `full`, rows
    /// above each pivot are cleared too and pivots are scaled to one.
    fn eliminate(&self, rows: &mut [Vec<u64>], ncols: usize, full: bool) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut rank = 0;
        let mut nz = Vec::new();
        for c in 0..ncols {
            let Some(r) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
                continue;
            };
            rows.swap(rank, r);
            let scale = modp::Shoup::new(modp::inv(rows[rank][c], p), p);
            nz.clear();
            #[allow(clippy::needless_range_loop)]
            for j in c..ncols {
                let x = rows[rank][j];
                if x != 0 {
                    rows[rank][j] = scale.mul(x, p);
                    nz.push(j);
                }
            }
            let (head, tail) = rows.split_at_mut(rank);
            let (pivot, below) = tail.split_first_mut().unwrap();
            let clear = |row: &mut Vec<u64>| {
                let f = row[c];
                if f == 0 {
                    return;
                }
                let f = modp::Shoup::new(f, p);
                for &j in &nz {
                    row[j] = modp::sub(row[j], f.mul(pivot[j], p), p);
                }
            };
            below.iter_mut().for_each(clear);
            if full {
                head.iter_mut().for_each(clear);
            }
            pivots.push(c);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        pivots
    }
}

impl Scalars for ModP {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_rational(&self, r: &Rational) -> u64 {
        let d = self.reduce_int(r.denom());
        assert!(
            d != 0,
            "denominator {} vanishes modulo {}",
            r.denom(),
            self.p
        );
        modp::mul(self.reduce_int(r.numer()), modp::inv(d, self.p), self.p)
    }

    fn from_int(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }

    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        modp::add(*a, *b, self.p)
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        modp::sub(*a, *b, self.p)
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        modp::mul(*a, *b, self.p)
    }

    fn to_integer(&self, x: &u64) -> Option<i64> {
        let x = *x % self.p;
        Some(if x > self.p / 2 {
            -((self.p - x) as i64)
        } else {
            x as i64
        })
    }

    fn rank(&self, mut rows: Vec<Vec<u64>>, ncols: usize) -> usize {
        self.eliminate(&mut rows, ncols, false).len()
    }

    fn rref(&self, mut rows: Vec<Vec<u64>>, ncols: usize) -> Rref<u64> {
        let pivots = self.eliminate(&mut rows, ncols, true);
        rows.truncate(pivots.len());
        Rref {
            ncols,
            pivots,
            rows,
        }
    }
}

/// The rationals, eliminated fraction-free (Bareiss) over the integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Exact;

impl Exact {
    fn integer_rows(rows: Vec<Vec<Rational>>) -> Vec<Vec<BigInt>> {
        rows.into_iter()
            .map(|row| {
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.into_iter()
                    .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
                    .collect()
            })
            .collect()
    }

    /// Bareiss forward elimination; returns pivot columns, leaving the
    /// echelon rows at the top of `a`.
    fn bareiss(a: &mut [Vec<BigInt>], ncols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut rank = 0;
        for c in 0..ncols {
            let Some(r) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(rank, r);
            let (top, below) = a.split_at_mut(rank + 1);
            let pivot = &top[rank];
            let piv = pivot[c].clone();
            for row in below.iter_mut() {
                let f = std::mem::take(&mut row[c]);
                for j in c + 1..ncols {
                    let mut x = &row[j] * &piv;
                    if !f.is_zero() && !pivot[j].is_zero() {
                        x -= &f * &pivot[j];
                    }
                    row[j] = if x.is_zero() { x } else { x / &prev };
                }
            }
            prev = piv;
            pivots.push(c);
            rank += 1;
            if rank == a.len() {
                break;
            }
        }
        pivots
    }
}

impl Scalars for Exact {
    type E = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn from_rational(&self, r: &Rational) -> Rational {
        r.clone()
    }

    fn is_zero(&self, x: &Rational) -> bool {
        x.is_zero()
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn to_integer(&self, x: &Rational) -> Option<i64> {
        if x.is_integer() {
            i64::try_from(x.to_integer()).ok()
        } else {
            None
        }
    }

    fn rank(&self, rows: Vec<Vec<Rational>>, ncols: usize) -> usize {
        Self::bareiss(&mut Self::integer_rows(rows), ncols).len()
    }

    fn rref(&self, rows: Vec<Vec<Rational>>, ncols: usize) -> Rref<Rational> {
        let mut a = Self::integer_rows(rows);
        let pivots = Self::bareiss(&mut a, ncols);
        a.truncate(pivots.len());
        let mut rows: Vec<Vec<Rational>> = a
            .into_iter()
            .zip(&pivots)
            .map(|(row, &c)| {
                let piv = Rational::from_integer(row[c].clone());
                row.into_iter()
                    .map(|x| {
                        if x.is_zero() {
                            Rational::zero()
                        } else {
                            Rational::from_integer(x) / &piv
                        }
                    })
                    .collect()
            })
            .collect();
        for k in (0..pivots.len()).rev() {
            let c = pivots[k];
            let (head, tail) = rows.split_at_mut(k);
            let pivot = &tail[0];
            for row in head.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let f = std::mem::take(&mut row[c]);
                for j in c + 1..ncols {
                    if !pivot[j].is_zero() {
                        row[j] -= &f * &pivot[j];
                    }
                }
            }
        }
        Rref {
            ncols,
            pivots,
            rows,
        }
    }
}
