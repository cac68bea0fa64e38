//! Jordan decomposition of elements of E8 through polynomials in `ad x`.

use crate::arith::{min_poly, solve, GaussRat, LinearOp, SparseMatrix, SparseVec, UPoly};
use crate::e8::algebra::{BasisKind, LieElem, DIM, E8};
use crate::e8::roots::RANK;

/// `x = s + n` with `s` semisimple, `n` nilpotent, `[s, n] = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jordan {
    pub semisimple: LieElem,
    pub nilpotent: LieElem,
}

#[derive(Debug, thiserror::Error)]
pub enum JordanError {
    #[error("ad-semisimple part is not inner")]
    NotInner,
}

/// Semisimple iff the minimal polynomial of `ad x` is squarefree.
pub fn is_semisimple(e8: &E8, x: &LieElem) -> bool {
    x.is_zero() || min_poly(&e8.ad(x)).is_squarefree()
}

/// Nilpotent iff some power of `ad x` vanishes; powers are capped at `DIM`.
pub fn is_nilpotent(e8: &E8, x: &LieElem) -> bool {
    nilpotency_index(e8, x).is_some()
}

/// Least `k` with `(ad x)^k = 0`.
pub fn nilpotency_index(e8: &E8, x: &LieElem) -> Option<usize> {
    let a = e8.ad(x);
    let mut image: Vec<SparseVec> = (0..DIM).map(SparseVec::unit).collect();
    for k in 0..=DIM {
        if image.is_empty() {
            return Some(k);
        }
        let next: Vec<SparseVec> = image.iter().map(|v| a.apply(v)).filter(|v| !v.is_zero()).collect();
        image = crate::arith::Echelon::from_vectors(&next).rows();
    }
    None
}

fn mulmod(a: &UPoly, b: &UPoly, m: &UPoly) -> UPoly {
    a.mul(b).rem(m)
}

/// `p(s) mod m` by Horner's scheme.
fn compose_mod(p: &UPoly, s: &UPoly, m: &UPoly) -> UPoly {
    let mut acc = UPoly::zero();
    for c in p.coeffs().iter().rev() {
        acc = mulmod(&acc, s, m).add(&UPoly::constant(c.clone()));
    }
    acc
}

/// Polynomial `S` with `S(A)` the semisimple part of any operator `A`
/// whose minimal polynomial is `m`: Newton iteration on the squarefree
/// part `r`, starting from `t`.
pub fn semisimple_polynomial(m: &UPoly) -> UPoly {
    let r = m.squarefree_part();
    let dr = r.derivative();
    let mut s = UPoly::monomial(1).rem(m);
    loop {
        let rs = compose_mod(&r, &s, m);
        if rs.is_zero() {
            return s;
        }
        let d = compose_mod(&dr, &s, m);
        let (g, u, _) = d.xgcd(m);
        debug_assert_eq!(g.degree(), Some(0));
        s = s.sub(&mulmod(&rs, &u, m));
    }
}

/// Probe vectors detecting every component of an element through brackets:
/// the simple coroots and the simple root vectors.
fn probes(e8: &E8) -> Vec<usize> {
    let mut out: Vec<usize> = (0..RANK).map(|i| e8.cartan_basis(i)).collect();
    for i in 0..RANK {
        let mut r = [0i8; RANK];
        r[i] = 1;
        out.push(e8.root_basis_of(&r).unwrap());
    }
    out
}

/// The element `s` with `ad s` equal to `op` on the probes; unknowns are
/// restricted to `support` (Chevalley indices).
fn recover_element(e8: &E8, op: impl Fn(&SparseVec) -> SparseVec, support: &[usize]) -> Option<LieElem> {
    let mut rows: Vec<SparseVec> = Vec::new();
    let mut rhs: Vec<GaussRat> = Vec::new();
    for b in probes(e8) {
        let target = op(&SparseVec::unit(b));
        // [s, x_b] = -[x_b, s] = sum_j s_j [x_j, x_b].
        let mut eq: std::collections::BTreeMap<usize, Vec<(usize, GaussRat)>> = Default::default();
        for (col, &j) in support.iter().enumerate() {
            for &(t, c) in e8.basis_bracket(j, b) {
                eq.entry(t as usize).or_default().push((col, GaussRat::int(c as i64)));
            }
        }
        let mut keys: Vec<usize> = eq.keys().copied().collect();
        keys.extend(target.iter().map(|(t, _)| t));
        keys.sort();
        keys.dedup();
        for t in keys {
            rows.push(SparseVec::from_pairs(eq.remove(&t).unwrap_or_default()));
            rhs.push(target.get(t));
        }
    }
    let m = SparseMatrix::from_rows(support.len(), rows);
    let b = SparseVec::from_dense(&rhs);
    let c = solve(&m, &b)?;
    Some(SparseVec::from_pairs(c.iter().map(|(k, v)| (support[k], v.clone()))))
}

/// Chevalley indices whose grading degree occurs in `x`, or all of them.
fn degree_support(e8: &E8, x: &LieElem) -> Vec<usize> {
    let theta = |b: usize| match e8.kind(b) {
        BasisKind::Cartan(_) => 0,
        BasisKind::Root(r) => (e8.roots.roots[r][crate::e8::grading::GRADING_NODE] as i32).rem_euclid(4),
    };
    let degrees: std::collections::BTreeSet<i32> = x.iter().map(|(b, _)| theta(b)).collect();
    if degrees.len() == 1 {
        (0..DIM).filter(|&b| degrees.contains(&theta(b))).collect()
    } else {
        (0..DIM).collect()
    }
}

/// Jordan decomposition of `x`.
pub fn jordan(e8: &E8, x: &LieElem) -> Result<Jordan, JordanError> {
    if x.is_zero() {
        return Ok(Jordan { semisimple: SparseVec::new(), nilpotent: SparseVec::new() });
    }
    let a = e8.ad(x);
    let m = min_poly(&a);
    if m.is_squarefree() {
        return Ok(Jordan { semisimple: x.clone(), nilpotent: SparseVec::new() });
    }
    let r = m.squarefree_part();
    if r == UPoly::monomial(1) {
        return Ok(Jordan { semisimple: SparseVec::new(), nilpotent: x.clone() });
    }
    let s_poly = semisimple_polynomial(&m);
    let support = degree_support(e8, x);
    let s = recover_element(e8, |v| s_poly.apply_to(&a, v), &support).ok_or(JordanError::NotInner)?;
    let n = x.sub(&s);
    if !e8.bracket(&s, &n).is_zero() {
        return Err(JordanError::NotInner);
    }
    Ok(Jordan { semisimple: s, nilpotent: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::fixture::setup;

    #[test]
    fn semisimple_and_nilpotent_tests() {
        let s = setup();
        let e8 = &s.g.e8;
        let e1 = SparseVec::unit(0);
        let h1 = SparseVec::unit(e8.cartan_basis(0));
        assert!(is_semisimple(e8, &SparseVec::new()));
        assert!(!is_semisimple(e8, &e1));
        assert!(is_semisimple(e8, &s.p[0]));
        assert!(!is_nilpotent(e8, &h1));
        assert!(is_nilpotent(e8, &e1));
        assert!(is_nilpotent(e8, &s.elem("(3,5)x1+(1,3)x4")));
        assert_eq!(nilpotency_index(e8, &e1), Some(3));
    }

    #[test]
    fn ad_p1_minimal_polynomial() {
        let s = setup();
        let m = min_poly(&s.g.e8.ad(&s.p[0]));
        assert_eq!(m.to_string(), "t^13 - 13*t^9 - 52*t^5 + 64*t");
    }

    #[test]
    fn trivial_decompositions() {
        let s = setup();
        let e8 = &s.g.e8;
        let x = s.p[1].add(&s.p[2]);
        assert_eq!(jordan(e8, &x).unwrap(), Jordan { semisimple: x.clone(), nilpotent: SparseVec::new() });
        let e = s.elem("(1,4)x1-(4,5)x4");
        assert_eq!(jordan(e8, &e).unwrap(), Jordan { semisimple: SparseVec::new(), nilpotent: e });
    }

    #[test]
    fn mixed_element_splits_as_printed() {
        let s = setup();
        let e = s.elem("(1,4)x1");
        let j = jordan(&s.g.e8, &s.p[0].add(&e)).unwrap();
        assert_eq!(j.semisimple, s.p[0]);
        assert_eq!(j.nilpotent, e);
    }

    #[test]
    fn semisimple_polynomial_of_a_jordan_block() {
        // (t - 1)^2 (t + 1): S(t) must fix the eigenvalues and kill the nilpotent part.
        let m = UPoly::linear_root(&GaussRat::ONE).mul(&UPoly::linear_root(&GaussRat::ONE)).mul(&UPoly::linear_root(&GaussRat::int(-1)));
        let s = semisimple_polynomial(&m);
        assert_eq!(s.eval(&GaussRat::ONE), GaussRat::ONE);
        assert_eq!(s.eval(&GaussRat::int(-1)), GaussRat::int(-1));
        let r = m.squarefree_part();
        assert!(compose_mod(&r, &s, &m).is_zero());
    }
}
