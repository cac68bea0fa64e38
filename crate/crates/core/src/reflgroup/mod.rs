//! The little Weyl group `W0` (Shephard-Todd 31) on the Cartan subspace.

pub mod group;
pub mod strata;
pub mod w0;

pub use group::{Mat, MatGroup, TooLarge};
pub use strata::{restricted_forms, verify_stratum_polynomials, StratumPolyReport};
pub use w0::{generators, GammaCheck, PresentationReport, Reflection, StratumError, W0};

/// The group built once per process.
pub fn shared() -> &'static W0 {
    static W: std::sync::OnceLock<W0> = std::sync::OnceLock::new();
    W.get_or_init(W0::new)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{GaussRat, SparseVec};
    use crate::tables::TABLE1;
    use w0::{row_basis, same_span};

    fn v(c: [i64; 4]) -> Vec<GaussRat> {
        c.iter().map(|&x| GaussRat::int(x)).collect()
    }

    #[test]
    fn generators_are_reflections() {
        let g = generators();
        assert_eq!(g[0], Mat::parse(&[&["-1", "0", "0", "0"], &["0", "1", "0", "0"], &["0", "0", "1", "0"], &["0", "0", "0", "1"]]));
        for s in &g {
            assert_eq!(s.moved_rank(), 1);
            assert!(s.mul(s).is_identity());
        }
        let s4 = Reflection::of(&g[3]).unwrap();
        assert_eq!(s4.covector, v([1, 1, 1, 1]));
        let s1 = MatGroup::generate(4, &g[..1]).unwrap();
        let w = shared();
        let r = w.reflections_in(&s1);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].covector, v([1, 0, 0, 0]));
    }

    #[test]
    fn group_order_and_center() {
        let w = shared();
        assert_eq!(w.order(), 46080);
        assert!(w.group.contains(&Mat::scalar(4, &GaussRat::I)));
        assert!(w.group.contains(&Mat::scalar(4, &GaussRat::int(-1))));
        assert!(w.reflections.iter().all(|r| r.order() == 2));
        assert_eq!(w.reflections.len(), 60);
    }

    #[test]
    fn table1_sizes_and_fixed_spaces() {
        let w = shared();
        for (row, m) in TABLE1.iter().zip(w.table1()) {
            assert_eq!(m.order(), row.size, "M{}", row.index);
            let printed: Vec<SparseVec> = row_basis(row).iter().map(|b| SparseVec::from_dense(b)).collect();
            assert!(same_span(&w.fixed_space(m), &printed), "c_M{}", row.index);
        }
    }

    #[test]
    fn stabilizers_and_strata() {
        let w = shared();
        assert_eq!(w.stabilizer(&v([0, 0, 0, 0])).order(), 46080);
        assert_eq!(w.stabilizer(&v([1, 2, 4, 8])).order(), 1);
        let st = w.stabilizer(&v([1, 0, 0, 0]));
        assert_eq!(st.order(), 192);
        assert!(w.conjugator(&w.table1()[7], &st).is_some());
        assert!(w.is_reflection_subgroup(&st));
        assert_eq!(w.stratum_of(&v([0, 0, 0, 0])), Ok(9));
        assert_eq!(w.stratum_of(&v([1, 0, 0, 0])), Ok(8));
        assert_eq!(w.stratum_of(&v([0, 1, 1, 0])), Ok(7));
        assert_eq!(w.stratum_of(&v([0, 3, 3, 0])), Ok(7));
    }

    #[test]
    fn presentation_holds() {
        let w = shared();
        let p = w.presentation();
        assert!(p.passed(46080), "{p:?}");
    }

    #[test]
    fn stratum_polynomial_lists() {
        let w = shared();
        for i in 1..=5 {
            let r = verify_stratum_polynomials(w, i);
            assert!(r.passed(), "{r:?}");
        }
        // Total degree of the generic list equals the number of hyperplanes.
        let r = verify_stratum_polynomials(w, 1);
        assert_eq!(r.polynomials.iter().map(|p| p.degree as usize).sum::<usize>(), r.restricted_forms);
        let m5 = verify_stratum_polynomials(w, 5);
        assert_eq!(m5.restricted_forms, 6);
    }

    #[test]
    fn normalizer_quotients_match_printed_gamma() {
        let w = shared();
        for row in &TABLE1 {
            let g = w.gamma_check(row.index);
            assert_eq!(g.normalizer_order / row.size, row.gamma, "Gamma{}", row.index);
            assert_eq!(g.image_order, row.gamma, "Gamma{}", row.index);
            if (3..=8).contains(&row.index) {
                assert!(g.convention.is_some(), "{g:?}");
            }
        }
    }

    /// The printed second generator of `Gamma_2` is not unitary; with both
    /// signs in its last row's first two entries flipped it generates the
    /// restriction image.
    #[test]
    fn gamma2_printed_generator_needs_sign_fix() {
        let w = shared();
        let g = w.gamma_check(2);
        assert!(!g.printed_unitary);
        assert_eq!((g.printed_order, g.convention), (None, None));
        let n = w.normalizer(&w.table1()[1]);
        let img = w.restriction_image(&n, &row_basis(&TABLE1[1]));
        let a = Mat::parse(&[&["1", "0", "0"], &["0", "1", "0"], &["0", "0", "-1"]]);
        let b = Mat::parse(&[&["0", "1/2+1/2*i", "1/2-1/2*i"], &["1/2+1/2*i", "1/2", "1/2*i"], &["-1/2+1/2*i", "-1/2*i", "1/2"]]);
        let fixed = MatGroup::generate(3, &[a, b]).unwrap();
        assert!(fixed.same_elements(&img));
    }
}
