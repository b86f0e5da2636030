//! Exact symmetric-function calculus over `Q[q]`, Hessenberg functions, and the
//! two LLT / chromatic quasisymmetric function engines.

pub mod cache;
pub mod error;
pub mod graded;
pub mod hessenberg;
pub mod identities;
pub mod llt;
pub mod partition;
pub mod qpoly;
pub mod symfunc;

pub use cache::MemoCache;
pub use error::{Error, Result};
pub use graded::GradedSymFunc;
pub use hessenberg::{enumerate_hessenberg, find_triples, HessFn, ModularTriple, Role, TripleKind};
pub use llt::{
    asc, csf_direct, csf_recursive, k_poly, llt_direct, llt_recursive, poincare, Derivation,
    Engine, Recursion, Rule,
};
pub use partition::{partitions, Partition};
pub use qpoly::{q_factorial, q_falling, q_integer, rat, ratio, QPoly, QSeries, Rational};
pub use symfunc::{Basis, SymFunc};
