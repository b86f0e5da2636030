//! Congruence presentations of twin manifolds and Hessenberg varieties, solved
//! degree by degree, with graded characters and Frobenius characteristics.

pub mod character;
pub mod error;
pub mod full;
pub mod graph;
pub mod irrep;
pub mod isotypic;
pub mod linalg;
pub mod mode;
pub mod modp;
pub mod monomial;
pub mod perm;
pub mod xi;

pub use character::{
    dagger_character, dot_character, equivariant_character, frobenius_graded,
    frobenius_graded_with, hilbert_and_betti, hilbert_and_betti_with, margin_degree,
    recovery_factor, Action, Betti, Frobenius, GradedCharacter, Solver, MAX_N,
};
pub use error::{Error, Result};
pub use full::{full_character, solve_degree, DegreeSolution};
pub use graph::{build_gkm, GkmEdge, GkmGraph, Variant};
pub use mode::{Certificate, Mode};
pub use xi::{xi_check, XiOutcome, XiReport, XiRoute};
