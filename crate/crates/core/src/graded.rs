//! Graded symmetric functions: one `SymFunc` per half-degree, i.e. elements of `Λ[q]`
//! stored layer by layer.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qpoly::QPoly;
use crate::symfunc::{Basis, SymFunc};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedSymFunc {
    degree: usize,
    layers: Vec<SymFunc>,
}

impl GradedSymFunc {
    pub fn new(degree: usize, mut layers: Vec<SymFunc>) -> Result<Self> {
        if let Some(bad) = layers.iter().find(|l| l.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, bad.degree()));
        }
        while layers.last().is_some_and(|l| l.is_zero()) {
            layers.pop();
        }
        Ok(Self { degree, layers })
    }

    /// Split a `SymFunc` with polynomial coefficients by powers of `q`.
    pub fn from_symfunc(f: &SymFunc) -> Self {
        Self::new(f.degree(), f.q_layers()).expect("layers share the degree")
    }

    /// Reassemble `∑_k q^k layer_k` in the given basis.
    pub fn to_symfunc(&self, basis: Basis) -> SymFunc {
        let mut acc = SymFunc::zero(self.degree, basis);
        for (k, layer) in self.layers.iter().enumerate() {
            acc = &acc + &layer.scale(&QPoly::one().shift(k));
        }
        acc
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn layers(&self) -> &[SymFunc] {
        &self.layers
    }

    /// Express every layer in one basis.
    pub fn convert(&self, basis: Basis) -> Self {
        Self {
            degree: self.degree,
            layers: self.layers.iter().map(|l| l.convert(basis)).collect(),
        }
    }

    /// Layerwise equality of the underlying functions.
    pub fn same_as(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.layers.len() == other.layers.len()
            && self
                .layers
                .iter()
                .zip(&other.layers)
                .all(|(a, b)| a.same_as(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_layers() {
        let llt = &SymFunc::h(2) + &SymFunc::e(2).scale(&QPoly::q());
        let g = GradedSymFunc::from_symfunc(&llt.convert(Basis::M));
        assert_eq!(g.layers().len(), 2);
        assert!(g.layers()[0].same_as(&SymFunc::h(2)));
        assert!(g.layers()[1].same_as(&SymFunc::e(2)));
        assert!(g.to_symfunc(Basis::M).same_as(&llt));
    }

    #[test]
    fn rejects_mixed_degrees() {
        assert!(GradedSymFunc::new(2, vec![SymFunc::h(2), SymFunc::h(3)]).is_err());
    }
}
