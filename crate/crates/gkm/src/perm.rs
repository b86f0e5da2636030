//! Permutations of `{0, .., n-1}` stored as images, composed as `(uv)(i) = u(v(i))`.

use std::collections::HashMap;

use twinllt_core::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut seen = vec![false; images.len()];
            images
                .iter()
                .all(|&i| !std::mem::replace(&mut seen[i as usize], true))
        });
        Self(images)
    }

    /// The transposition exchanging `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i, j);
        p
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }

    /// `self · (i j)`: exchanges the entries at positions `i` and `j`.
    pub fn times_transposition(&self, i: usize, j: usize) -> Perm {
        let mut p = self.0.clone();
        p.swap(i, j);
        Perm(p)
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    /// A permutation of the given cycle type, built from consecutive cycles.
    pub fn with_cycle_type(lambda: &Partition) -> Perm {
        let n = lambda.size();
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut start = 0;
        for &len in lambda.parts() {
            for k in 0..len {
                images[start + k] = (start + (k + 1) % len) as u8;
            }
            start += len;
        }
        Perm(images)
    }
}

/// All permutations of `n` letters in lexicographic order of their image lists,
/// with an index lookup.
#[derive(Clone, Debug)]
pub struct SymmetricGroup {
    n: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Self {
        fn rec(n: usize, cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Perm>) {
            if cur.len() == n {
                out.push(Perm(cur.clone()));
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    cur.push(i as u8);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        let mut elements = Vec::new();
        rec(n, &mut Vec::new(), &mut vec![false; n], &mut elements);
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        Self { n, elements, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, p: &Perm) -> usize {
        self.index[p]
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }
}
