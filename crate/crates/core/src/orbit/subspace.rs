//! Subspaces of E8 given by bases of Lie elements.

use crate::arith::{kernel_basis, Echelon, GaussRat, SparseMatrix, SparseVec};
use crate::e8::algebra::{LieElem, DIM, E8};
use crate::e8::grading::Graded;

/// Chevalley basis vectors of `g_k`.
pub fn component_basis(g: &Graded, k: usize) -> Vec<LieElem> {
    g.component(k).iter().map(|&b| SparseVec::unit(b)).collect()
}

/// Reduced echelon basis of the span.
pub fn span(vs: &[LieElem]) -> Vec<LieElem> {
    Echelon::from_vectors(vs).rows()
}

/// `sum c_j v_j` for a coefficient vector `c`.
pub fn combine(basis: &[LieElem], c: &SparseVec) -> LieElem {
    let mut out = SparseVec::new();
    for (j, cj) in c.iter() {
        out = out.add_scaled(&basis[j], cj);
    }
    out
}

/// Coefficients of the linear map `y -> [x, y]` on `basis`, as columns
/// of a `DIM`-row matrix.
fn ad_columns(e8: &E8, x: &LieElem, basis: &[LieElem]) -> SparseMatrix {
    let cols: Vec<SparseVec> = basis.iter().map(|b| e8.bracket(x, b)).collect();
    SparseMatrix::from_cols(DIM, &cols)
}

/// Elements of `span(basis)` commuting with every element of `xs`.
pub fn centralizer_of_all(e8: &E8, xs: &[LieElem], basis: &[LieElem]) -> Vec<LieElem> {
    if basis.is_empty() {
        return Vec::new();
    }
    let mut rows = Vec::new();
    for x in xs {
        rows.extend(ad_columns(e8, x, basis).rows.into_iter().filter(|r| !r.is_zero()));
    }
    let m = SparseMatrix::from_rows(basis.len(), rows);
    span(&kernel_basis(&m).iter().map(|c| combine(basis, c)).collect::<Vec<_>>())
}

/// `z_V(x)` for `V = span(basis)`.
pub fn centralizer_in(e8: &E8, x: &LieElem, basis: &[LieElem]) -> Vec<LieElem> {
    centralizer_of_all(e8, std::slice::from_ref(x), basis)
}

/// Rank of `y -> [x, y]` on `span(basis)`.
pub fn ad_rank(e8: &E8, x: &LieElem, basis: &[LieElem]) -> usize {
    Echelon::from_vectors(&basis.iter().map(|b| e8.bracket(x, b)).collect::<Vec<_>>()).rank()
}

/// `span [A, B]`.
pub fn bracket_span(e8: &E8, a: &[LieElem], b: &[LieElem]) -> Vec<LieElem> {
    let mut e = Echelon::new();
    for x in a {
        for y in b {
            let z = e8.bracket(x, y);
            if !z.is_zero() {
                e.insert(&z);
            }
        }
    }
    e.rows()
}

/// Elements `v` of `span(basis)` with `[x, v] = lambda v`.
pub fn eigenspace(e8: &E8, x: &LieElem, lambda: &GaussRat, basis: &[LieElem]) -> Vec<LieElem> {
    let rows = {
        let m = ad_columns(e8, x, basis);
        let id = SparseMatrix::from_cols(DIM, basis);
        m.sub(&id.scale(lambda)).rows.into_iter().filter(|r| !r.is_zero()).collect::<Vec<_>>()
    };
    let m = SparseMatrix::from_rows(basis.len(), rows);
    span(&kernel_basis(&m).iter().map(|c| combine(basis, c)).collect::<Vec<_>>())
}

/// Coordinates of `v` in `basis`, if it lies in the span.
pub fn coordinates(basis: &[LieElem], v: &LieElem) -> Option<SparseVec> {
    let m = SparseMatrix::from_cols(DIM, basis);
    let x = crate::arith::solve(&m, v)?;
    Some(x)
}

/// `span(a) == span(b)`.
pub fn same_span(a: &[LieElem], b: &[LieElem]) -> bool {
    let ea = Echelon::from_vectors(a);
    let eb = Echelon::from_vectors(b);
    ea.rank() == eb.rank() && eb.rows().iter().all(|v| ea.contains(v))
}
