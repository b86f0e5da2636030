//! Degree-`d` monomials in `t_1, .., t_n` as exponent vectors.

use std::collections::HashMap;

use crate::perm::Perm;

#[derive(Clone, Debug)]
pub struct Monomials {
    n: usize,
    d: usize,
    list: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl Monomials {
    /// All exponent vectors of total degree `d`, lexicographically decreasing.
    pub fn new(n: usize, d: usize) -> Self {
        fn rec(left: usize, slots: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if slots == 1 {
                cur.push(left as u8);
                out.push(cur.clone());
                cur.pop();
                return;
            }
            for e in (0..=left).rev() {
                cur.push(e as u8);
                rec(left - e, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut list = Vec::new();
        if n == 0 {
            if d == 0 {
                list.push(Vec::new());
            }
        } else {
            rec(d, n, &mut Vec::new(), &mut list);
        }
        let index = list
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        Self { n, d, list, index }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize) -> &[u8] {
        &self.list[i]
    }

    pub fn index_of(&self, e: &[u8]) -> usize {
        self.index[e]
    }

    /// Index of the image of monomial `i` under `t_a := t_b`.
    pub fn substitute(&self, i: usize, a: usize, b: usize) -> usize {
        let mut e = self.list[i].clone();
        e[b] += e[a];
        e[a] = 0;
        self.index[&e]
    }

    /// The table of [`Self::substitute`] over all monomials.
    pub fn substitution_table(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.len()).map(|i| self.substitute(i, a, b)).collect()
    }

    /// Index of `μ · t^e = ∏_k t_{μ(k)}^{e_k}`.
    pub fn permute(&self, i: usize, mu: &Perm) -> usize {
        let src = &self.list[i];
        let mut e = vec![0u8; self.n];
        for (k, &x) in src.iter().enumerate() {
            e[mu.apply(k)] = x;
        }
        self.index[&e]
    }

    pub fn permutation_table(&self, mu: &Perm) -> Vec<usize> {
        (0..self.len()).map(|i| self.permute(i, mu)).collect()
    }
}

/// `C(n + d - 1, d)`.
pub fn count(n: usize, d: usize) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    (1..=d).fold(1usize, |acc, k| acc * (n - 1 + k) / k)
}
