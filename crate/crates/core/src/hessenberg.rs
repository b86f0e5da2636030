//! Hessenberg functions `h: [n] -> [n]`, their indifference graphs, and modular triples.
//!
//! Positions and values are 1-based throughout, matching the usual notation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct HessFn(Vec<usize>);

impl HessFn {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        for (k, &v) in values.iter().enumerate() {
            let i = k + 1;
            if v > n {
                return Err(Error::OutOfRange(i));
            }
            if k > 0 && v < values[k - 1] {
                return Err(Error::NotNondecreasing(i));
            }
            if v < i {
                return Err(Error::BelowDiagonal(i));
            }
        }
        Ok(Self(values))
    }

    /// `h(i) = n` for all `i`: the complete graph.
    pub fn maximal(n: usize) -> Self {
        Self(vec![n; n])
    }

    /// `h(i) = i`: the graph with no edges.
    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `h(i)` for `1 <= i <= n`.
    pub fn value(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn value_sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_maximal(&self) -> bool {
        self.0.iter().all(|&v| v == self.n())
    }

    /// Edges `(i, j)` with `i < j <= h(i)`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n())
            .flat_map(|i| (i + 1..=self.value(i)).map(move |j| (i, j)))
            .collect()
    }

    /// `∑ (h(i) - i)`, the number of edges.
    pub fn complex_dimension(&self) -> usize {
        self.0.iter().enumerate().map(|(k, &v)| v - (k + 1)).sum()
    }

    /// `h^t(i) = n - max{ j : h(j) < n + 1 - i }`, with `max ∅ = 0`.
    pub fn transpose(&self) -> Self {
        let n = self.n();
        let values = (1..=n)
            .map(|i| {
                let jmax = (1..=n)
                    .filter(|&j| self.value(j) < n + 1 - i)
                    .max()
                    .unwrap_or(0);
                n - jmax
            })
            .collect();
        Self(values)
    }

    /// Split points `j < n` with `h(j) = j`.
    pub fn split_points(&self) -> Vec<usize> {
        (1..self.n()).filter(|&j| self.value(j) == j).collect()
    }

    pub fn is_decomposable(&self) -> bool {
        !self.split_points().is_empty()
    }

    /// Indecomposable blocks, left to right. A block occupying positions
    /// `a+1..=b` has values `h(i) - a`.
    pub fn decompose(&self) -> Vec<HessFn> {
        let mut cuts = self.split_points();
        cuts.push(self.n());
        let mut start = 0;
        let mut out = Vec::with_capacity(cuts.len());
        for end in cuts {
            out.push(Self(
                self.0[start..end].iter().map(|&v| v - start).collect(),
            ));
            start = end;
        }
        out
    }

    /// Concatenate blocks back into a single function.
    pub fn concat(blocks: &[HessFn]) -> Self {
        let mut values = Vec::new();
        for b in blocks {
            let offset = values.len();
            values.extend(b.0.iter().map(|&v| v + offset));
        }
        Self(values)
    }

    /// Number of `i` with `h(i) = v`.
    fn preimage_count(&self, v: usize) -> usize {
        self.0.iter().filter(|&&x| x == v).count()
    }

    fn preimage(&self, v: usize) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.value(i) == v).collect()
    }

    fn with(&self, updates: &[(usize, usize)]) -> Option<Self> {
        let mut values = self.0.clone();
        for &(i, v) in updates {
            values[i - 1] = v;
        }
        Self::new(values).ok()
    }
}

impl fmt::Display for HessFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for HessFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HessFn{self}")
    }
}

impl FromStr for HessFn {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("expected a comma-separated list of integers, got {t:?}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        HessFn::new(values).map_err(|e| e.to_string())
    }
}

impl TryFrom<Vec<usize>> for HessFn {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        HessFn::new(v)
    }
}

impl From<HessFn> for Vec<usize> {
    fn from(h: HessFn) -> Self {
        h.0
    }
}

/// All Hessenberg functions on `[n]` in lexicographic order.
pub fn enumerate_hessenberg(n: usize) -> Vec<HessFn> {
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<HessFn>) {
        let i = cur.len() + 1;
        if i > n {
            out.push(HessFn(cur.clone()));
            return;
        }
        let lo = i.max(cur.last().copied().unwrap_or(0));
        for v in lo..=n {
            cur.push(v);
            rec(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// All Hessenberg functions with `1 <= n <= n_max`, by size then lexicographically.
pub fn enumerate_up_to(n_max: usize) -> Vec<HessFn> {
    (1..=n_max).flat_map(enumerate_hessenberg).collect()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TripleKind {
    Type1,
    Type2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Lower,
    Middle,
    Upper,
}

impl FromStr for Role {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "lower" => Ok(Role::Lower),
            "middle" => Ok(Role::Middle),
            "upper" => Ok(Role::Upper),
            other => Err(format!(
                "unknown role {other:?} (expected lower, middle or upper)"
            )),
        }
    }
}

/// A triple `(h_-, h, h_+)` satisfying `[r+1]_q F(h) = F(h_+) + q [r]_q F(h_-)`.
///
/// `params` is `[j0, j]` for type 1 and `[j]` for type 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModularTriple {
    pub kind: TripleKind,
    pub r: usize,
    pub params: Vec<usize>,
    pub h_minus: HessFn,
    pub h_mid: HessFn,
    pub h_plus: HessFn,
}

impl ModularTriple {
    fn sort_key(&self) -> (TripleKind, usize, Vec<usize>) {
        (self.kind, self.r, self.params.clone())
    }

    /// Re-check the defining conditions from scratch.
    pub fn is_valid(&self) -> bool {
        match (self.kind, self.params.as_slice()) {
            (TripleKind::Type1, &[j0, j]) => {
                type1_at(&self.h_mid, j0, j, self.r).as_ref() == Some(self)
            }
            (TripleKind::Type2, &[j]) => type2_at(&self.h_mid, j, self.r).as_ref() == Some(self),
            _ => false,
        }
    }

    pub fn transpose(&self) -> ModularTriple {
        let kind = match self.kind {
            TripleKind::Type1 => TripleKind::Type2,
            TripleKind::Type2 => TripleKind::Type1,
        };
        ModularTriple {
            kind,
            r: self.r,
            params: Vec::new(),
            h_minus: self.h_minus.transpose(),
            h_mid: self.h_mid.transpose(),
            h_plus: self.h_plus.transpose(),
        }
    }
}

fn type1_at(h: &HessFn, j0: usize, j: usize, r: usize) -> Option<ModularTriple> {
    let n = h.n();
    if r == 0 || !(1 <= j0 && j0 < j && j < n) || r > n - j {
        return None;
    }
    if (j..=j + r).any(|i| h.value(i) != h.value(j)) {
        return None;
    }
    if h.preimage(j) != [j0] {
        return None;
    }
    if (j + 1..j + r).any(|v| h.preimage_count(v) > 0) {
        return None;
    }
    Some(ModularTriple {
        kind: TripleKind::Type1,
        r,
        params: vec![j0, j],
        h_minus: h.with(&[(j0, j - 1)])?,
        h_mid: h.clone(),
        h_plus: h.with(&[(j0, j + r)])?,
    })
}

fn type2_at(h: &HessFn, j: usize, r: usize) -> Option<ModularTriple> {
    let n = h.n();
    if r == 0 || j == 0 || j >= n || r > j {
        return None;
    }
    if h.value(j) + 1 != h.value(j + 1) || h.value(j + 1) == j + 1 {
        return None;
    }
    if h.preimage_count(j) > 0 {
        return None;
    }
    if (j + 1 - r..=j).any(|i| h.value(i) != h.value(j)) {
        return None;
    }
    if (j + 1 - r..=j).any(|v| h.preimage_count(v) > 0) {
        return None;
    }
    let raised: Vec<(usize, usize)> = (j + 1 - r..=j).map(|i| (i, h.value(j) + 1)).collect();
    Some(ModularTriple {
        kind: TripleKind::Type2,
        r,
        params: vec![j],
        h_minus: h.with(&[(j + 1, h.value(j))])?,
        h_mid: h.clone(),
        h_plus: h.with(&raised)?,
    })
}

fn middle_triples(h: &HessFn, r: usize) -> Vec<ModularTriple> {
    let n = h.n();
    let mut out = Vec::new();
    for j in 1..n {
        for j0 in 1..j {
            out.extend(type1_at(h, j0, j, r));
        }
    }
    for j in 1..n {
        out.extend(type2_at(h, j, r));
    }
    out
}

/// All triples of both types with parameter `r` in which `h` occupies `role`,
/// type 1 first, then by parameters ascending.
pub fn find_triples(h: &HessFn, role: Role, r: usize) -> Vec<ModularTriple> {
    if r == 0 {
        return Vec::new();
    }
    let n = h.n();
    let mut out = match role {
        Role::Middle => middle_triples(h, r),
        Role::Lower => {
            // Both types lower exactly one value by one.
            let mut found = Vec::new();
            for i in 1..=n {
                if let Some(mid) = h.with(&[(i, h.value(i) + 1)]) {
                    found.extend(
                        middle_triples(&mid, r)
                            .into_iter()
                            .filter(|t| t.h_minus == *h),
                    );
                }
            }
            found
        }
        Role::Upper => {
            let mut candidates = Vec::new();
            for i in 1..=n {
                if h.value(i) >= r {
                    candidates.extend(h.with(&[(i, h.value(i) - r)]));
                }
            }
            for j in r..=n {
                let window: Vec<(usize, usize)> =
                    (j + 1 - r..=j).map(|i| (i, h.value(i) - 1)).collect();
                candidates.extend(h.with(&window));
            }
            candidates
                .iter()
                .flat_map(|mid| middle_triples(mid, r))
                .filter(|t| t.h_plus == *h)
                .collect()
        }
    };
    out.sort_by_key(|t| t.sort_key());
    out.dedup();
    out
}

/// Every triple with `h` in the given role, over all admissible `r`.
pub fn find_triples_all_r(h: &HessFn, role: Role) -> Vec<ModularTriple> {
    (1..h.n().max(1))
        .flat_map(|r| find_triples(h, role, r))
        .collect()
}
