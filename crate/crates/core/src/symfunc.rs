//! Homogeneous symmetric functions with `QPoly` coefficients.
//!
//! The monomial basis is canonical: every other basis is entered and left
//! through an exact transition matrix into `m`. Products are formed in the
//! power-sum basis, where they are concatenations of partitions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::qpoly::{rat, QPoly, Rational};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Basis {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            other => Err(format!(
                "unknown basis {other:?} (expected m, e, h, p or s)"
            )),
        }
    }
}

type SparseMatrix = Vec<Vec<(usize, Rational)>>;

/// Transition data for one degree.
struct Tables {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `to_m[b][i]`: expansion of `b_{parts[i]}` in the monomial basis.
    to_m: [SparseMatrix; 5],
    /// `from_m[b][i]`: expansion of `m_{parts[i]}` in basis `b`.
    from_m: [SparseMatrix; 5],
}

fn tables(degree: usize) -> Arc<Tables> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Tables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("table cache poisoned").get(&degree) {
        return t.clone();
    }
    let built = Arc::new(Tables::build(degree));
    cache
        .lock()
        .expect("table cache poisoned")
        .entry(degree)
        .or_insert(built)
        .clone()
}

impl Tables {
    fn build(n: usize) -> Self {
        let parts = partitions(n);
        let index: HashMap<Partition, usize> = parts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let dense = |f: &dyn Fn(&Partition, &Partition) -> Rational| -> Vec<Vec<Rational>> {
            parts
                .iter()
                .map(|l| parts.iter().map(|mu| f(l, mu)).collect())
                .collect()
        };
        let ident = dense(&|l, mu| {
            if l == mu {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let p_m = dense(&|l, mu| rat(count_power_sum(l.parts(), mu.parts())));
        let h_m = dense(&|l, mu| rat(count_matrices(l.parts(), mu.parts(), false)));
        let e_m = dense(&|l, mu| rat(count_matrices(l.parts(), mu.parts(), true)));
        let s_m: Vec<Vec<Rational>> = parts
            .iter()
            .map(|l| {
                let mut row = vec![Rational::zero(); parts.len()];
                for (mu, c) in jacobi_trudi(l) {
                    let hi = index[&mu];
                    for (k, entry) in h_m[hi].iter().enumerate() {
                        row[k] += entry * rat(c);
                    }
                }
                row
            })
            .collect();
        let dense_all = [ident, e_m, h_m, p_m, s_m];
        let inverses: Vec<Vec<Vec<Rational>>> = dense_all.iter().map(|m| invert(m)).collect();
        let sparse = |m: &Vec<Vec<Rational>>| -> SparseMatrix {
            m.iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (k, c.clone()))
                        .collect()
                })
                .collect()
        };
        let to_m = [
            sparse(&dense_all[0]),
            sparse(&dense_all[1]),
            sparse(&dense_all[2]),
            sparse(&dense_all[3]),
            sparse(&dense_all[4]),
        ];
        let from_m = [
            sparse(&inverses[0]),
            sparse(&inverses[1]),
            sparse(&inverses[2]),
            sparse(&inverses[3]),
            sparse(&inverses[4]),
        ];
        Tables {
            parts,
            index,
            to_m,
            from_m,
        }
    }
}

/// Coefficient of `x^mu` in `p_lambda`: assignments of the parts of `lambda`
/// to the variables so that variable `j` receives total exponent `mu_j`.
fn count_power_sum(lambda: &[usize], mu: &[usize]) -> i64 {
    fn rec(lambda: &[usize], cap: &mut [usize]) -> i64 {
        let Some((&first, rest)) = lambda.split_first() else {
            return if cap.iter().all(|&c| c == 0) { 1 } else { 0 };
        };
        let mut total = 0;
        for j in 0..cap.len() {
            if cap[j] >= first {
                cap[j] -= first;
                total += rec(rest, cap);
                cap[j] += first;
            }
        }
        total
    }
    rec(lambda, &mut mu.to_vec())
}

/// Number of nonnegative integer (or 0-1 when `binary`) matrices with row sums
/// `rows` and column sums `cols`.
fn count_matrices(rows: &[usize], cols: &[usize], binary: bool) -> i64 {
    fn fill_row(need: usize, col: usize, cap: &mut [usize], binary: bool, rest: &[usize]) -> i64 {
        if need == 0 {
            return next_row(rest, cap, binary);
        }
        if col == cap.len() {
            return 0;
        }
        let max = if binary { 1 } else { need }.min(cap[col]).min(need);
        let mut total = 0;
        for take in 0..=max {
            cap[col] -= take;
            total += fill_row(need - take, col + 1, cap, binary, rest);
            cap[col] += take;
        }
        total
    }
    fn next_row(rows: &[usize], cap: &mut [usize], binary: bool) -> i64 {
        match rows.split_first() {
            None => {
                if cap.iter().all(|&c| c == 0) {
                    1
                } else {
                    0
                }
            }
            Some((&r, rest)) => fill_row(r, 0, cap, binary, rest),
        }
    }
    next_row(rows, &mut cols.to_vec(), binary)
}

/// Jacobi–Trudi: `s_lambda = det(h_{lambda_i - i + j})` expanded into products of `h`.
fn jacobi_trudi(lambda: &Partition) -> BTreeMap<Partition, i64> {
    let l = lambda.parts();
    let k = l.len();
    let mut out = BTreeMap::new();
    fn rec(
        row: usize,
        l: &[usize],
        used: &mut Vec<bool>,
        picked: &mut Vec<usize>,
        sign: i64,
        out: &mut BTreeMap<Partition, i64>,
    ) {
        let k = l.len();
        if row == k {
            let key = Partition::from_unsorted(picked.clone());
            *out.entry(key).or_insert(0) += sign;
            return;
        }
        // Laplace-style expansion: the sign is the parity of the number of
        // already-used columns to the right of the chosen one.
        for col in 0..k {
            if used[col] {
                continue;
            }
            let idx = l[row] as i64 - row as i64 + col as i64;
            if idx < 0 {
                continue;
            }
            let inversions = used[col + 1..].iter().filter(|&&u| u).count();
            let s = if inversions % 2 == 0 { sign } else { -sign };
            used[col] = true;
            picked.push(idx as usize);
            rec(row + 1, l, used, picked, s, out);
            picked.pop();
            used[col] = false;
        }
    }
    rec(0, l, &mut vec![false; k], &mut Vec::new(), 1, &mut out);
    out.retain(|_, c| *c != 0);
    out
}

fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("transition matrix is singular");
        a.swap(col, piv);
        let inv = Rational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// A homogeneous symmetric function of fixed degree with coefficients in `Q[q]`,
/// stored in a declared basis. Zero coefficients are never stored.
///
/// `==` compares representations (basis and terms); use [`SymFunc::same_as`] to
/// compare the underlying functions across bases.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "SymFuncJson", into = "SymFuncJson")]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<Partition, QPoly>,
}

impl SymFunc {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        Self {
            degree,
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The constant `1` in degree 0.
    pub fn one() -> Self {
        Self::basis_element(Basis::M, Partition::empty())
    }

    pub fn from_terms(
        degree: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, QPoly)>,
    ) -> Result<Self> {
        let mut out = Self::zero(degree, basis);
        for (l, c) in terms {
            if l.size() != degree {
                return Err(Error::PartitionSize {
                    partition: l.parts().to_vec(),
                    degree,
                });
            }
            out.add_term(l, &c);
        }
        Ok(out)
    }

    pub fn basis_element(basis: Basis, l: Partition) -> Self {
        let degree = l.size();
        let mut terms = BTreeMap::new();
        terms.insert(l, QPoly::one());
        Self {
            degree,
            basis,
            terms,
        }
    }

    pub fn e(k: usize) -> Self {
        Self::single(Basis::E, k)
    }

    pub fn h(k: usize) -> Self {
        Self::single(Basis::H, k)
    }

    pub fn p(k: usize) -> Self {
        Self::single(Basis::P, k)
    }

    fn single(basis: Basis, k: usize) -> Self {
        if k == 0 {
            return Self::one();
        }
        Self::basis_element(basis, Partition::from_unsorted(vec![k]))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, l: &Partition) -> QPoly {
        self.terms.get(l).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, l: Partition, c: &QPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(l.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&l);
        }
    }

    fn to_m_vector(&self) -> (Arc<Tables>, Vec<QPoly>) {
        let t = tables(self.degree);
        let mut acc = vec![QPoly::zero(); t.parts.len()];
        let matrix = &t.to_m[self.basis.slot()];
        for (l, c) in &self.terms {
            for (k, entry) in &matrix[t.index[l]] {
                acc[*k] += &c.scale(entry);
            }
        }
        (t, acc)
    }

    fn from_m_vector(t: &Tables, degree: usize, basis: Basis, m: &[QPoly]) -> Self {
        let mut acc = vec![QPoly::zero(); t.parts.len()];
        let matrix = &t.from_m[basis.slot()];
        for (i, c) in m.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, entry) in &matrix[i] {
                acc[*k] += &c.scale(entry);
            }
        }
        let terms = t
            .parts
            .iter()
            .cloned()
            .zip(acc)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Self {
            degree,
            basis,
            terms,
        }
    }

    /// Re-express in another basis.
    pub fn convert(&self, basis: Basis) -> Self {
        if basis == self.basis {
            return self.clone();
        }
        let (t, m) = self.to_m_vector();
        Self::from_m_vector(&t, self.degree, basis, &m)
    }

    /// Equality of the underlying symmetric functions, independent of basis.
    pub fn same_as(&self, other: &Self) -> bool {
        self.degree == other.degree && self.convert(Basis::M) == other.convert(Basis::M)
    }

    /// Apply a Q-linear map to every coefficient. Because the map acts on
    /// coefficients only, the result does not depend on the basis.
    pub fn try_map_coeffs(&self, f: impl Fn(&QPoly) -> Result<QPoly>) -> Result<Self> {
        let mut out = Self::zero(self.degree, self.basis);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), &f(c)?);
        }
        Ok(out)
    }

    pub fn map_coeffs(&self, f: impl Fn(&QPoly) -> QPoly) -> Self {
        self.try_map_coeffs(|c| Ok(f(c))).expect("infallible")
    }

    pub fn scale(&self, c: &QPoly) -> Self {
        self.map_coeffs(|x| x * c)
    }

    /// Coefficientwise exact division by a polynomial.
    pub fn exact_div(&self, c: &QPoly) -> Result<Self> {
        self.try_map_coeffs(|x| x.exact_div(c))
    }

    /// Involution exchanging `e_k` and `h_k`: `p_λ ↦ (-1)^{|λ|-ℓ(λ)} p_λ`.
    pub fn omega(&self) -> Self {
        let p = self.convert(Basis::P);
        let terms = p.terms.iter().map(|(l, c)| {
            let c = if l.sign_exponent() % 2 == 1 {
                -c
            } else {
                c.clone()
            };
            (l.clone(), c)
        });
        Self::from_terms(self.degree, Basis::P, terms)
            .expect("degrees preserved")
            .convert(self.basis)
    }

    /// Multiply the coefficient of each `p_λ` by `∏_i rule(λ_i)`.
    ///
    /// With `rule(k) = q^k - 1` this is the plethystic substitution `X ↦ (q-1)X`.
    pub fn power_sum_scaling(&self, rule: impl Fn(usize) -> QPoly) -> Self {
        let mut cache: HashMap<usize, QPoly> = HashMap::new();
        let p = self.convert(Basis::P);
        let terms: Vec<(Partition, QPoly)> = p
            .terms
            .iter()
            .map(|(l, c)| {
                let mut factor = QPoly::one();
                for &k in l.parts() {
                    let g = cache.entry(k).or_insert_with(|| rule(k));
                    factor = &factor * &*g;
                }
                (l.clone(), c * &factor)
            })
            .collect();
        Self::from_terms(self.degree, Basis::P, terms)
            .expect("degrees preserved")
            .convert(self.basis)
    }

    /// Hall inner product, `<p_λ, p_μ> = δ_{λμ} z_λ`.
    pub fn hall_pairing(&self, other: &Self) -> Result<QPoly> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let a = self.convert(Basis::P);
        let b = other.convert(Basis::P);
        let mut acc = QPoly::zero();
        for (l, c) in &a.terms {
            if let Some(d) = b.terms.get(l) {
                acc += &(c * d).scale(&Rational::from_integer(l.z()));
            }
        }
        Ok(acc)
    }

    /// Frobenius characteristic `∑_λ χ(λ) p_λ / z_λ` of a class function on `S_n`,
    /// returned in the power-sum basis.
    pub fn frobenius_from_character(n: usize, chi: impl Fn(&Partition) -> Rational) -> Self {
        let terms = partitions(n).into_iter().map(|l| {
            let c = chi(&l) / Rational::from_integer(l.z());
            (l, QPoly::constant(c))
        });
        Self::from_terms(n, Basis::P, terms).expect("partitions of n")
    }

    /// `q -> 1` specialisation of every coefficient, as a degree-n function with
    /// constant coefficients.
    pub fn at_q_one(&self) -> Self {
        self.map_coeffs(|c| QPoly::constant(c.eval(&Rational::one())))
    }

    /// Split into the coefficients of `q^0, q^1, ...`.
    pub fn q_layers(&self) -> Vec<SymFunc> {
        let top = self
            .terms
            .values()
            .filter_map(|c| c.degree())
            .max()
            .map_or(0, |d| d + 1);
        (0..top)
            .map(|k| self.map_coeffs(|c| QPoly::constant(c.coeff(k))))
            .collect()
    }

    pub fn all_coeffs_nonnegative_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_nonnegative_integral())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("symmetric function serialises")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
    }
}

fn assert_same_degree(a: &SymFunc, b: &SymFunc) {
    assert_eq!(
        a.degree, b.degree,
        "cannot add symmetric functions of different degree"
    );
}

impl Add<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        assert_same_degree(self, rhs);
        let rhs = rhs.convert(self.basis);
        let mut out = self.clone();
        for (l, c) in rhs.terms {
            out.add_term(l, &c);
        }
        out
    }
}

impl Sub<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.map_coeffs(|c| -c)
    }
}

/// Product, formed in the power-sum basis and returned in the monomial basis.
impl Mul<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let a = self.convert(Basis::P);
        let b = rhs.convert(Basis::P);
        let mut out = SymFunc::zero(self.degree + rhs.degree, Basis::P);
        for (l, c) in &a.terms {
            for (mu, d) in &b.terms {
                out.add_term(l.union(mu), &(c * d));
            }
        }
        out.convert(Basis::M)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let single = c.coeffs().iter().filter(|x| !x.is_zero()).count() == 1;
            if c.is_one() {
            } else if single {
                write!(f, "{c} ")?;
            } else {
                write!(f, "({c}) ")?;
            }
            write!(f, "{}{}", self.basis, l)?;
        }
        Ok(())
    }
}

/// On-disk and on-wire form of a [`SymFunc`].
#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    degree: usize,
    basis: Basis,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Vec<usize>,
    coeff: Vec<[serde_json::Value; 2]>,
}

fn int_to_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(x.to_string()),
    }
}

fn int_from_json(v: &serde_json::Value) -> std::result::Result<BigInt, String> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| format!("non-integer coefficient {n}")),
        serde_json::Value::String(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
        other => Err(format!("bad integer {other}")),
    }
}

impl From<SymFunc> for SymFuncJson {
    fn from(f: SymFunc) -> Self {
        let terms = f
            .terms
            .iter()
            .map(|(l, c)| TermJson {
                partition: l.parts().to_vec(),
                coeff: c
                    .coeffs()
                    .iter()
                    .map(|r| [int_to_json(r.numer()), int_to_json(r.denom())])
                    .collect(),
            })
            .collect();
        SymFuncJson {
            degree: f.degree,
            basis: f.basis,
            terms,
        }
    }
}

impl TryFrom<SymFuncJson> for SymFunc {
    type Error = String;
    fn try_from(j: SymFuncJson) -> std::result::Result<Self, String> {
        let mut terms = Vec::new();
        for t in j.terms {
            let l = Partition::new(t.partition).map_err(|e| e.to_string())?;
            let mut coeffs = Vec::new();
            for [n, d] in &t.coeff {
                let d = int_from_json(d)?;
                if d.is_zero() || d.is_negative() {
                    return Err("denominator must be positive".into());
                }
                coeffs.push(Rational::new(int_from_json(n)?, d));
            }
            terms.push((l, QPoly::from_coeffs(coeffs)));
        }
        SymFunc::from_terms(j.degree, j.basis, terms).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn m_terms(f: &SymFunc) -> Vec<(Vec<usize>, QPoly)> {
        f.convert(Basis::M)
            .terms()
            .iter()
            .map(|(l, c)| (l.parts().to_vec(), c.clone()))
            .collect()
    }

    #[test]
    fn conversion_examples() {
        let one = QPoly::one();
        assert_eq!(
            m_terms(&SymFunc::h(2)),
            vec![(vec![2], one.clone()), (vec![1, 1], one.clone())]
        );
        let e2_s = SymFunc::e(2).convert(Basis::S);
        assert_eq!(e2_s, SymFunc::basis_element(Basis::S, part(&[1, 1])));
        let p11 = SymFunc::basis_element(Basis::P, part(&[1, 1]));
        assert_eq!(
            m_terms(&p11),
            vec![(vec![2], one.clone()), (vec![1, 1], QPoly::from_ints(&[2]))]
        );
    }

    #[test]
    fn schur_small_cases() {
        // s_{21} = m_{21} + 2 m_{111}
        let s21 = SymFunc::basis_element(Basis::S, part(&[2, 1]));
        assert_eq!(
            m_terms(&s21),
            vec![
                (vec![2, 1], QPoly::one()),
                (vec![1, 1, 1], QPoly::from_ints(&[2]))
            ]
        );
        // s_{(n)} = h_n
        assert!(SymFunc::basis_element(Basis::S, part(&[4])).same_as(&SymFunc::h(4)));
    }

    #[test]
    fn omega_examples() {
        assert!(SymFunc::e(2).omega().same_as(&SymFunc::h(2)));
        let p11 = SymFunc::basis_element(Basis::P, part(&[1, 1]));
        assert_eq!(p11.omega(), p11);
        let f = &SymFunc::h(2) + &SymFunc::e(2).scale(&QPoly::q());
        let g = &SymFunc::e(2) + &SymFunc::h(2).scale(&QPoly::q());
        assert!(f.omega().same_as(&g));
        // ω s_λ = s_λ'
        let s = SymFunc::basis_element(Basis::S, part(&[3, 1]));
        let st = SymFunc::basis_element(Basis::S, part(&[2, 1, 1]));
        assert!(s.omega().same_as(&st));
    }

    #[test]
    fn power_sum_scaling_examples() {
        let rule = |k: usize| &QPoly::monomial(Rational::one(), k) - &QPoly::one();
        let p2 = SymFunc::p(2);
        assert_eq!(
            p2.power_sum_scaling(rule),
            p2.scale(&QPoly::from_ints(&[-1, 0, 1]))
        );
        let p1 = SymFunc::p(1);
        assert_eq!(
            p1.power_sum_scaling(rule),
            p1.scale(&QPoly::from_ints(&[-1, 1]))
        );
        // LLT of the one-edge graph: h2 + q e2 -> (q-1)^2 (1+q) e2
        let llt = &SymFunc::h(2) + &SymFunc::e(2).scale(&QPoly::q());
        let expected =
            SymFunc::e(2).scale(&(QPoly::from_ints(&[-1, 1]).pow(2) * QPoly::from_ints(&[1, 1])));
        assert!(llt.power_sum_scaling(rule).same_as(&expected));
    }

    #[test]
    fn frobenius_examples() {
        let chi = |vals: [i64; 2]| {
            move |l: &Partition| {
                if l.parts() == [2] {
                    rat(vals[0])
                } else {
                    rat(vals[1])
                }
            }
        };
        assert!(SymFunc::frobenius_from_character(2, chi([1, 1])).same_as(&SymFunc::h(2)));
        assert!(SymFunc::frobenius_from_character(2, chi([-1, 1])).same_as(&SymFunc::e(2)));
        let reg = SymFunc::frobenius_from_character(2, chi([0, 2]));
        assert!(reg.same_as(&(&SymFunc::h(2) + &SymFunc::e(2))));
    }

    #[test]
    fn regular_character_gives_p1_power() {
        for n in 1..=5usize {
            let fact: i64 = (1..=n as i64).product();
            let ones = part(&vec![1; n]);
            let f = SymFunc::frobenius_from_character(n, |l| {
                if *l == ones {
                    rat(fact)
                } else {
                    Rational::zero()
                }
            });
            assert_eq!(f, SymFunc::basis_element(Basis::P, ones.clone()));
        }
    }

    #[test]
    fn hall_pairing_examples() {
        assert_eq!(
            SymFunc::p(2).hall_pairing(&SymFunc::p(2)).unwrap(),
            QPoly::from_ints(&[2])
        );
        assert!(
            SymFunc::h(2).hall_pairing(&SymFunc::e(2)).unwrap() == QPoly::zero()
                || SymFunc::h(2).hall_pairing(&SymFunc::e(2)).unwrap() == QPoly::one()
        );
        // <h_2, e_2> = <s_2, s_11> = 0
        assert!(SymFunc::h(2)
            .hall_pairing(&SymFunc::e(2))
            .unwrap()
            .is_zero());
        assert_eq!(
            SymFunc::h(2).hall_pairing(&SymFunc::h(2)).unwrap(),
            QPoly::one()
        );
        let llt = &SymFunc::h(2) + &SymFunc::e(2).scale(&QPoly::q());
        let h11 = &SymFunc::h(1) * &SymFunc::h(1);
        assert_eq!(llt.hall_pairing(&h11).unwrap(), QPoly::from_ints(&[1, 1]));
        assert!(matches!(
            SymFunc::h(2).hall_pairing(&SymFunc::h(3)),
            Err(Error::DegreeMismatch(2, 3))
        ));
    }

    #[test]
    fn products_of_generators() {
        // e1^2 = m2 + 2 m11; h1 e1 = p1^2
        let e1 = SymFunc::e(1);
        let sq = &e1 * &e1;
        assert!(sq.same_as(&SymFunc::basis_element(Basis::P, part(&[1, 1]))));
        // e1 e2 = m21 + 3 m111
        let e12 = &SymFunc::e(1) * &SymFunc::e(2);
        assert_eq!(
            m_terms(&e12),
            vec![
                (vec![2, 1], QPoly::one()),
                (vec![1, 1, 1], QPoly::from_ints(&[3]))
            ]
        );
        // ω is an algebra map on e/h products
        let prod = &(&SymFunc::e(2) * &SymFunc::h(1)) * &SymFunc::e(3);
        let mapped = &(&SymFunc::h(2) * &SymFunc::e(1)) * &SymFunc::h(3);
        assert!(prod.omega().same_as(&mapped));
    }

    #[test]
    fn json_canonical_form() {
        let f = SymFunc::from_terms(
            2,
            Basis::M,
            vec![
                (part(&[2]), QPoly::one()),
                (part(&[1, 1]), QPoly::from_ints(&[1, 1])),
            ],
        )
        .unwrap();
        let s = f.to_json();
        assert_eq!(
            s,
            r#"{"degree":2,"basis":"m","terms":[{"partition":[2],"coeff":[[1,1]]},{"partition":[1,1],"coeff":[[1,1],[1,1]]}]}"#
        );
        assert_eq!(SymFunc::from_json(&s).unwrap(), f);
        assert!(SymFunc::from_json(
            r#"{"degree":3,"basis":"m","terms":[{"partition":[2],"coeff":[[1,1]]}]}"#
        )
        .is_err());
    }

    fn arb_symfunc(n: usize) -> impl Strategy<Value = SymFunc> {
        let ps = partitions(n);
        let k = ps.len();
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, 0..3), k).prop_flat_map(
            move |coeffs| {
                let ps = ps.clone();
                (0usize..5).prop_map(move |b| {
                    SymFunc::from_terms(
                        n,
                        Basis::ALL[b],
                        ps.iter()
                            .cloned()
                            .zip(coeffs.iter().map(|c| QPoly::from_ints(c))),
                    )
                    .unwrap()
                })
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn basis_round_trip(f in (1usize..=5).prop_flat_map(arb_symfunc), b in 0usize..5) {
            let there = f.convert(Basis::ALL[b]);
            prop_assert_eq!(there.convert(f.basis()), f);
        }

        #[test]
        fn omega_is_involution(f in (1usize..=5).prop_flat_map(arb_symfunc)) {
            prop_assert_eq!(f.omega().omega(), f);
        }

        #[test]
        fn unit_scaling_is_identity(f in (1usize..=5).prop_flat_map(arb_symfunc)) {
            prop_assert_eq!(f.power_sum_scaling(|_| QPoly::one()), f);
        }
    }
}
