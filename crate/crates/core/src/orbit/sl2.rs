//! Normal sl2-triples `(h, e, f)` with `e` in `g_1`, `h` in `g_0`, `f` in `g_3`.

use crate::arith::{solve, GaussRat, SparseMatrix, SparseVec};
use crate::e8::algebra::{BasisKind, LieElem, DIM, E8};
use crate::e8::grading::Graded;

use super::subspace::{centralizer_in, combine, component_basis};

/// The graded pieces a triple is completed in: all of `g`, or the
/// centralizer `z_g(p)` of a semisimple `p` in `g_1`.
#[derive(Clone, Debug)]
pub struct Ambient {
    pub p: Option<LieElem>,
    pub g0: Vec<LieElem>,
    pub g1: Vec<LieElem>,
    pub g3: Vec<LieElem>,
}

impl Ambient {
    pub fn full(g: &Graded) -> Ambient {
        Ambient { p: None, g0: component_basis(g, 0), g1: component_basis(g, 1), g3: component_basis(g, 3) }
    }

    pub fn centralizer(g: &Graded, p: &LieElem) -> Ambient {
        let z = |k| centralizer_in(&g.e8, p, &component_basis(g, k));
        Ambient { p: Some(p.clone()), g0: z(0), g1: z(1), g3: z(3) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub h: LieElem,
    pub e: LieElem,
    pub f: LieElem,
}

impl Triple {
    pub fn is_sl2(&self, e8: &E8) -> bool {
        let two = GaussRat::int(2);
        e8.bracket(&self.h, &self.e) == self.e.scale(&two)
            && e8.bracket(&self.h, &self.f) == self.f.scale(&(-two))
            && e8.bracket(&self.e, &self.f) == self.h
    }

    /// `h` lies in the span of the simple coroots.
    pub fn h_in_standard_cartan(&self, e8: &E8) -> bool {
        self.h.iter().all(|(b, _)| matches!(e8.kind(b), BasisKind::Cartan(_)))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Sl2Error {
    #[error("element is zero")]
    Zero,
    #[error("element is not nilpotent in the ambient algebra")]
    NotCompletable,
}

/// Matrix whose columns are `cols`, restricted to rows `keep`.
fn matrix_rows(cols: &[SparseVec], keep: impl Fn(usize) -> bool) -> SparseMatrix {
    let m = SparseMatrix::from_cols(DIM, cols);
    let rows = (0..DIM).filter(|&r| keep(r)).map(|r| m.rows[r].clone()).collect();
    SparseMatrix::from_rows(cols.len(), rows)
}

/// Completes `e` to a triple inside `amb`, preferring `h` in the span of
/// the simple coroots.
pub fn sl2_complete(e8: &E8, e: &LieElem, amb: &Ambient) -> Result<Triple, Sl2Error> {
    if e.is_zero() {
        return Err(Sl2Error::Zero);
    }
    let two_e = e.scale(&GaussRat::int(2));
    let ef: Vec<LieElem> = amb.g3.iter().map(|w| e8.bracket(e, w)).collect();
    let efe: Vec<LieElem> = ef.iter().map(|u| e8.bracket(u, e)).collect();

    // [[e, f], e] = 2e, and in the Cartan route [e, f] has no root components.
    let cartan_route = {
        let mut rows = matrix_rows(&efe, |_| true).rows;
        let mut rhs: Vec<GaussRat> = two_e.to_dense(DIM);
        let root_rows = matrix_rows(&ef, |r| matches!(e8.kind(r), BasisKind::Root(_)));
        rhs.extend(std::iter::repeat_n(GaussRat::ZERO, root_rows.nrows));
        rows.extend(root_rows.rows);
        let m = SparseMatrix::from_rows(amb.g3.len(), rows);
        solve(&m, &SparseVec::from_dense(&rhs))
    };
    if let Some(c) = cartan_route {
        let f0 = combine(&amb.g3, &c);
        let h = e8.bracket(e, &f0);
        // Keep the components of f0 on which ad h acts by -2.
        let f = SparseVec::from_sorted(
            f0.iter()
                .filter(|(b, _)| e8.bracket(&h, &SparseVec::unit(*b)) == SparseVec::single(*b, GaussRat::int(-2)))
                .map(|(b, c)| (b, c.clone()))
                .collect(),
        );
        let t = Triple { h, e: e.clone(), f };
        if t.is_sl2(e8) {
            return Ok(t);
        }
    }

    let m = SparseMatrix::from_cols(DIM, &efe);
    let c = solve(&m, &two_e).ok_or(Sl2Error::NotCompletable)?;
    let h = e8.bracket(e, &combine(&amb.g3, &c));
    // f in g3 with [h, f] = -2 f and [e, f] = h.
    let mut cols_h: Vec<SparseVec> = Vec::new();
    for w in &amb.g3 {
        cols_h.push(e8.bracket(&h, w).add_scaled(w, &GaussRat::int(2)));
    }
    let mut rows = SparseMatrix::from_cols(DIM, &cols_h).rows;
    let mut rhs = vec![GaussRat::ZERO; DIM];
    rows.extend(SparseMatrix::from_cols(DIM, &ef).rows);
    rhs.extend(h.to_dense(DIM));
    let sys = SparseMatrix::from_rows(amb.g3.len(), rows);
    let c = solve(&sys, &SparseVec::from_dense(&rhs)).ok_or(Sl2Error::NotCompletable)?;
    let t = Triple { h, e: e.clone(), f: combine(&amb.g3, &c) };
    if t.is_sl2(e8) {
        Ok(t)
    } else {
        Err(Sl2Error::NotCompletable)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::min_poly;
    use crate::orbit::fixture::setup;

    #[test]
    fn triple_in_full_algebra() {
        let s = setup();
        let e8 = &s.g.e8;
        let e = s.elem("(3,5)x1");
        let t = sl2_complete(e8, &e, &Ambient::full(&s.g)).unwrap();
        assert!(t.is_sl2(e8));
        // Integer eigenvalues: the minimal polynomial of ad h splits over Z.
        let m = min_poly(&e8.ad(&t.h));
        assert!(m.is_squarefree());
        for k in -2..=2 {
            assert!(m.eval(&GaussRat::int(k)).is_zero());
        }
        assert_eq!(m.degree(), Some(5));
    }

    #[test]
    fn triple_inside_centralizer_of_p1() {
        let s = setup();
        let e8 = &s.g.e8;
        let amb = Ambient::centralizer(&s.g, &s.p[0]);
        assert_eq!((amb.g0.len(), amb.g1.len(), amb.g3.len()), (15, 19, 19));
        let t = sl2_complete(e8, &s.elem("(1,4)x1"), &amb).unwrap();
        assert!(t.is_sl2(e8));
        assert!(e8.bracket(&t.h, &s.p[0]).is_zero());
        assert!(e8.bracket(&t.f, &s.p[0]).is_zero());
        assert!(t.h_in_standard_cartan(e8));
    }

    #[test]
    fn zero_and_semisimple_are_rejected() {
        let s = setup();
        let amb = Ambient::full(&s.g);
        assert!(matches!(sl2_complete(&s.g.e8, &SparseVec::new(), &amb), Err(Sl2Error::Zero)));
        assert!(matches!(sl2_complete(&s.g.e8, &s.p[0], &amb), Err(Sl2Error::NotCompletable)));
    }
}
