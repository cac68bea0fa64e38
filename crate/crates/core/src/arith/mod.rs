//! Exact arithmetic: rationals, Gaussian rationals, sparse linear algebra,
//! univariate and multivariate polynomials.

pub mod gauss;
pub mod linalg;
pub mod mpoly;
pub mod rat;
pub mod upoly;

pub use gauss::GaussRat;
pub use linalg::{
    determinant, intersect, invert, kernel_basis, kernel_from_rref, rref, solve, Echelon, LinearOp, Rref,
    SparseMatrix, SparseVec,
};
pub use mpoly::{hessian, poly_determinant, var_names, Monomial, MultiPoly, ParsePolyError};
pub use rat::Rat;
pub use upoly::{charpoly, min_poly, vector_min_poly, UPoly};

/// Minimal polynomial of a square sparse matrix.
pub fn min_poly_of(m: &SparseMatrix) -> UPoly {
    min_poly(m)
}

/// Whether `p` has no repeated factor.
pub fn squarefree(p: &UPoly) -> bool {
    p.is_squarefree()
}

/// `p(M x)`.
pub fn poly_substitute(p: &MultiPoly, m: &[Vec<GaussRat>]) -> MultiPoly {
    p.substitute(m)
}
