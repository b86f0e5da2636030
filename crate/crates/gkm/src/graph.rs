//! The moment graphs of the twin manifold and the Hessenberg variety of `h`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use twinllt_core::HessFn;

use crate::perm::SymmetricGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Twin,
    Hessenberg,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Twin => "twin",
            Variant::Hessenberg => "hess",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "twin" => Ok(Variant::Twin),
            "hess" | "hessenberg" => Ok(Variant::Hessenberg),
            _ => Err(format!("unknown variant '{s}' (expected twin or hess)")),
        }
    }
}

/// The symmetric group of each size, built once.
pub fn symmetric_group(n: usize) -> Arc<SymmetricGroup> {
    static GROUPS: OnceLock<Mutex<HashMap<usize, Arc<SymmetricGroup>>>> = OnceLock::new();
    let mut map = GROUPS.get_or_init(Default::default).lock().unwrap();
    map.entry(n)
        .or_insert_with(|| Arc::new(SymmetricGroup::new(n)))
        .clone()
}

/// Pairs `(i, j)`, 0-based, with `i < j < h(i)`: the edges of the indifference graph.
pub fn graph_edges(h: &HessFn) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..h.n() {
        for j in i + 1..h.value(i + 1) {
            out.push((i, j));
        }
    }
    out
}

/// An edge `{v, w = v·(i j)}` with the pair of variables `t_a - t_b` (a < b) that
/// labels it. Indices are 0-based; `v < w` in the group's order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GkmEdge {
    pub v: usize,
    pub w: usize,
    pub i: usize,
    pub j: usize,
    pub weight: (usize, usize),
}

#[derive(Clone, Debug)]
pub struct GkmGraph {
    pub h: HessFn,
    pub variant: Variant,
    pub group: Arc<SymmetricGroup>,
    pub edges: Vec<GkmEdge>,
}

impl GkmGraph {
    pub fn n(&self) -> usize {
        self.h.n()
    }

    pub fn vertex_count(&self) -> usize {
        self.group.order()
    }
}

pub fn build_gkm(h: &HessFn, variant: Variant) -> GkmGraph {
    let group = symmetric_group(h.n());
    let pairs = graph_edges(h);
    let mut edges = Vec::new();
    for (vi, v) in group.elements().iter().enumerate() {
        for &(i, j) in &pairs {
            let wi = group.index_of(&v.times_transposition(i, j));
            if vi > wi {
                continue;
            }
            let weight = match variant {
                Variant::Twin => (i, j),
                Variant::Hessenberg => {
                    let (a, b) = (v.apply(i), v.apply(j));
                    (a.min(b), a.max(b))
                }
            };
            edges.push(GkmEdge {
                v: vi,
                w: wi,
                i,
                j,
                weight,
            });
        }
    }
    GkmGraph {
        h: h.clone(),
        variant,
        group,
        edges,
    }
}
