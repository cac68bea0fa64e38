//! The spin representation of `o(10)` on the exterior algebra `E` of a
//! maximal isotropic subspace, through the Clifford algebra of the
//! antidiagonal form `Psi`.
//!
//! Basis vectors of `C^10` are `v_1..v_10`; `u_j = v_{5+j}` spans the
//! isotropic subspace `U`.  A basis vector `u_{i_1} ^ ... ^ u_{i_k}` of `E`
//! is stored as the bitmask with bit `i - 1` set for each `i` in the set.

use crate::arith::{GaussRat, SparseMatrix};

pub const ELL: usize = 5;
pub const N: usize = 2 * ELL;
/// `dim E = 2^ELL`.
pub const EXT_DIM: usize = 1 << ELL;

/// `Psi(v_a, v_b)`, 1-based indices.
pub fn psi(a: usize, b: usize) -> i64 {
    (a + b == N + 1) as i64
}

/// Number of elements of `mask` below position `j` (0-based).
fn below(mask: usize, j: usize) -> u32 {
    (mask & ((1 << j) - 1)).count_ones()
}

/// `lambda(v_g)` on `E` for `g` in `1..=10`.
pub fn lambda(g: usize) -> SparseMatrix {
    assert!((1..=N).contains(&g), "generator index out of range");
    let mut t = Vec::new();
    for mask in 0..EXT_DIM {
        if g > ELL {
            // Wedge with u_j on the left.
            let j = g - ELL - 1;
            if mask & (1 << j) == 0 {
                let sign = if below(mask, j).is_multiple_of(2) { 1 } else { -1 };
                t.push((mask | (1 << j), mask, GaussRat::int(sign)));
            }
        } else {
            // Contraction: Psi(u_i, v_g) = 1 exactly for i = ELL + 1 - g.
            let j = ELL - g;
            if mask & (1 << j) != 0 {
                let sign = if below(mask, j).is_multiple_of(2) { 1 } else { -1 };
                t.push((mask & !(1 << j), mask, GaussRat::int(sign)));
            }
        }
    }
    SparseMatrix::from_triplets(EXT_DIM, EXT_DIM, t)
}

/// The elementary matrix `E_pq` (1-based) of size `n`.
pub fn elementary(n: usize, p: usize, q: usize) -> SparseMatrix {
    SparseMatrix::from_triplets(n, n, [(p - 1, q - 1, GaussRat::ONE)])
}

/// `M_pq = E_pq - E_{11-q,11-p}`, an element of `o(10)`.
pub fn o10_elem(p: usize, q: usize) -> SparseMatrix {
    elementary(N, p, q).sub(&elementary(N, N + 1 - q, N + 1 - p))
}

/// The 45 basis elements `M_pq` with `p + q < 11`.
pub fn o10_basis() -> Vec<((usize, usize), SparseMatrix)> {
    let mut out = Vec::new();
    for p in 1..=N {
        for q in 1..=N {
            if p + q < N + 1 {
                out.push(((p, q), o10_elem(p, q)));
            }
        }
    }
    out
}

/// Whether `a^T A + A a = 0` for the antidiagonal `A`.
pub fn is_in_o10(a: &SparseMatrix) -> bool {
    if a.nrows != N || a.ncols != N {
        return false;
    }
    // (a^T A + A a)_{pq} = a_{11-p, q} + a_{11-q, p}
    (1..=N).all(|p| (1..=N).all(|q| (a.get(N - p, q - 1) + a.get(N - q, p - 1)).is_zero()))
}

#[derive(Debug, thiserror::Error)]
#[error("matrix is not in o(10)")]
pub struct NotInO10;

/// Precomputed `lambda(v_k) lambda(v_l)` products.
pub struct Spin {
    lambdas: Vec<SparseMatrix>,
    products: Vec<Vec<SparseMatrix>>,
}

impl Spin {
    pub fn new() -> Spin {
        let lambdas: Vec<SparseMatrix> = (1..=N).map(lambda).collect();
        let products = lambdas.iter().map(|a| lambdas.iter().map(|b| a.mul(b)).collect()).collect();
        Spin { lambdas, products }
    }

    pub fn lambda(&self, g: usize) -> &SparseMatrix {
        &self.lambdas[g - 1]
    }

    /// `rho(a) = lambda(f(a))` with `f(a) = 1/2 sum_i (a v_i) v_{11-i}`.
    pub fn rho(&self, a: &SparseMatrix) -> Result<SparseMatrix, NotInO10> {
        if !is_in_o10(a) {
            return Err(NotInO10);
        }
        let mut out = SparseMatrix::zero(EXT_DIM, EXT_DIM);
        for i in 1..=N {
            // a v_i = sum_k a_{ki} v_k
            for (k, c) in a.col(i - 1).iter() {
                out = out.add(&self.products[k][N - i].scale(c));
            }
        }
        Ok(out.scale(&GaussRat::ratio(1, 2)))
    }
}

impl Default for Spin {
    fn default() -> Self {
        Spin::new()
    }
}

/// Bitmasks of the even part `Delta_+`, in increasing order.
pub fn even_masks() -> Vec<usize> {
    (0..EXT_DIM).filter(|m| m.count_ones() % 2 == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::SparseVec;

    #[test]
    fn wedge_and_contraction_basics() {
        let u1 = lambda(6);
        assert_eq!(u1.mul_vec(&SparseVec::unit(0)), SparseVec::unit(1));
        assert!(u1.mul_vec(&SparseVec::unit(1)).is_zero());
        // u_2 ^ u_1 = -u_1 ^ u_2
        assert_eq!(lambda(7).mul_vec(&SparseVec::unit(1)), SparseVec::single(3, GaussRat::int(-1)));
    }

    #[test]
    fn clifford_relations_hold_exhaustively() {
        let s = Spin::new();
        for a in 1..=N {
            for b in 1..=N {
                let anti = s.lambda(a).mul(s.lambda(b)).add(&s.lambda(b).mul(s.lambda(a)));
                assert_eq!(anti, SparseMatrix::identity(EXT_DIM).scale(&GaussRat::int(psi(a, b))), "v{a} v{b}");
            }
        }
    }

    #[test]
    fn rho_is_a_homomorphism_preserving_delta_plus() {
        let s = Spin::new();
        let basis = o10_basis();
        assert_eq!(basis.len(), 45);
        let rhos: Vec<SparseMatrix> = basis.iter().map(|(_, m)| s.rho(m).unwrap()).collect();
        for (x, rx) in basis.iter().zip(&rhos) {
            for (y, ry) in basis.iter().zip(&rhos) {
                let br = x.1.commutator(&y.1);
                assert_eq!(s.rho(&br).unwrap(), rx.commutator(ry));
            }
        }
        for r in &rhos {
            for m in even_masks() {
                assert!(r.mul_vec(&SparseVec::unit(m)).iter().all(|(t, _)| (t as u32).count_ones().is_multiple_of(2)));
            }
        }
        assert_eq!(even_masks().len(), 16);
    }

    #[test]
    fn rho_rejects_non_orthogonal_matrices() {
        assert!(Spin::new().rho(&elementary(N, 1, 1)).is_err());
        assert!(Spin::new().rho(&SparseMatrix::zero(N, N)).unwrap().is_zero());
    }
}
