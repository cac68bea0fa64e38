//! Randomized properties of the graded model, the little Weyl group and
//! the orbit tools.

use std::sync::OnceLock;

use proptest::prelude::*;

use spinorbit::arith::{Echelon, GaussRat, LinearOp, Rat, SparseVec};
use spinorbit::e8::algebra::{LieElem, E8};
use spinorbit::e8::grading::Graded;
use spinorbit::orbit::characteristic::{characteristic, eigenvalue, Characteristic};
use spinorbit::orbit::mixed::{cartan_basis, point_of};
use spinorbit::orbit::subspace::{centralizer_in, component_basis};
use spinorbit::orbit::{is_nilpotent, is_semisimple, jordan, signature, sl2_complete, Ambient};
use spinorbit::reflgroup::shared;
use spinorbit::spinor::identify::Dictionary;
use spinorbit::spinor::label::SpinorTensor;
use spinorbit::tables::MIXED_TABLES;

struct Setup {
    g: Graded,
    d: Dictionary,
    p: Vec<LieElem>,
    g1: Echelon,
}

fn setup() -> &'static Setup {
    static S: OnceLock<Setup> = OnceLock::new();
    S.get_or_init(|| {
        let g = Graded::new();
        let d = Dictionary::build(&g).unwrap();
        let p = cartan_basis(&d);
        let g1 = Echelon::from_vectors(&component_basis(&g, 1));
        Setup { g, d, p, g1 }
    })
}

fn ints(c: &[i64]) -> Vec<GaussRat> {
    c.iter().map(|&x| GaussRat::int(x)).collect()
}

/// Up to four root vectors of `g1` with small coefficients, plus
/// optionally one of `p1..p4`.
fn arb_g1() -> impl Strategy<Value = LieElem> {
    (prop::collection::vec((0usize..64, -2i64..=2), 0..=4), 0usize..5).prop_map(|(terms, j)| {
        let s = setup();
        let g1 = s.g.component(1);
        let mut x = SparseVec::from_pairs(terms.into_iter().map(|(k, c)| (g1[k], GaussRat::int(c))));
        if j < 4 {
            x = x.add(&s.p[j]);
        }
        x
    })
}

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-3i64..=3, 1i64..=3).prop_map(|(n, d)| Rat::new(n, d))
}

fn exp_ad(e8: &E8, x: &LieElem, v: &LieElem) -> LieElem {
    let mut out = v.clone();
    let mut term = v.clone();
    for k in 1..=6 {
        term = e8.bracket(x, &term).scale(&GaussRat::ratio(1, k));
        if term.is_zero() {
            break;
        }
        out = out.add(&term);
    }
    out
}

/// The Weyl group representative `exp(ad e) exp(-ad f) exp(ad e)` of the
/// simple reflection of `g0` at node `k`.
fn weyl_reflection(g: &Graded, k: usize, v: &LieElem) -> LieElem {
    let e8 = &g.e8;
    let n = &g.g0_nodes()[k];
    let e = SparseVec::unit(n.e);
    let f0 = SparseVec::unit(n.f);
    let h = e8.bracket(&e, &f0);
    let f = f0.scale(&(GaussRat::int(2) / eigenvalue(e8, &h, &e).unwrap()));
    let step = exp_ad(e8, &e, v);
    let step = exp_ad(e8, &f.neg(), &step);
    exp_ad(e8, &e, &step)
}

fn table_nilpotents() -> Vec<&'static str> {
    MIXED_TABLES.iter().flat_map(|t| t.iter().map(|r| r.element)).collect()
}

/// Table nilpotents whose triple in `g` has `h` in the standard Cartan
/// subalgebra, with their characteristics.
fn cartan_nilpotents() -> &'static [(LieElem, Characteristic)] {
    static S: OnceLock<Vec<(LieElem, Characteristic)>> = OnceLock::new();
    S.get_or_init(|| {
        let s = setup();
        let amb = Ambient::full(&s.g);
        let out: Vec<_> = table_nilpotents()
            .into_iter()
            .filter_map(|t| {
                let e = s.d.to_g1(&SpinorTensor::parse(t).unwrap());
                let h = sl2_complete(&s.g.e8, &e, &amb).ok()?.h;
                Some((e, characteristic(&s.g, &h).ok()?))
            })
            .collect();
        assert!(out.len() >= 20, "only {} table nilpotents have a Cartan triple", out.len());
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn jordan_parts_are_commuting_semisimple_and_nilpotent_in_g1(x in arb_g1()) {
        let s = setup();
        let e8 = &s.g.e8;
        let j = jordan(e8, &x).unwrap();
        let (ss, n) = (&j.semisimple, &j.nilpotent);
        prop_assert_eq!(&ss.add(n), &x);
        prop_assert!(e8.bracket(ss, n).is_zero());
        prop_assert!(s.g1.contains(ss));
        prop_assert!(s.g1.contains(n));
        prop_assert!(is_semisimple(e8, ss));
        prop_assert!(is_nilpotent(e8, n));
    }

    #[test]
    fn theta_acts_on_component_k_by_i_to_the_k(k in 0usize..4, terms in prop::collection::vec((0usize..64, -3i64..=3), 1..6)) {
        let g = &setup().g;
        let comp = g.component(k);
        let x = SparseVec::from_pairs(terms.into_iter().map(|(b, c)| (comp[b % comp.len()], GaussRat::int(c))));
        prop_assert_eq!(g.theta().apply(&x), x.scale(&GaussRat::i_pow(k as i64)));
    }

    #[test]
    fn centralizer_of_a_cartan_point_in_g1(c in prop::collection::vec(-2i64..=2, 4)) {
        let s = setup();
        let p = point_of(&s.p, &ints(&c));
        let z = Echelon::from_vectors(&centralizer_in(&s.g.e8, &p, &component_basis(&s.g, 1)));
        prop_assert!(s.p.iter().all(|pi| z.contains(pi)));
        let generic = shared().stratum_of(&ints(&c)) == Ok(1);
        prop_assert_eq!(z.rank() == 4, generic);
    }

    #[test]
    fn characteristic_is_constant_on_weyl_images(pick in any::<prop::sample::Index>(), word in prop::collection::vec(0usize..8, 0..5), scale in 1i64..4) {
        let s = setup();
        let e8 = &s.g.e8;
        let amb = Ambient::full(&s.g);
        let (e, ch) = pick.get(cartan_nilpotents());
        let mut moved = e.scale(&GaussRat::int(if scale % 2 == 0 { -scale } else { scale }));
        for &k in &word {
            moved = weyl_reflection(&s.g, k, &moved);
        }
        prop_assert!(s.g1.contains(&moved));
        let t = sl2_complete(e8, &moved, &amb).unwrap();
        prop_assert!(t.h_in_standard_cartan(e8));
        prop_assert_eq!(&characteristic(&s.g, &t.h).unwrap(), ch);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn signature_accounts_for_the_whole_centralizer(c in prop::collection::vec(-2i64..=2, 4), row in 0usize..63, with_e in any::<bool>()) {
        let s = setup();
        let e8 = &s.g.e8;
        let mut x = point_of(&s.p, &ints(&c));
        if with_e {
            x = x.add(&s.d.to_g1(&SpinorTensor::parse(table_nilpotents()[row]).unwrap()));
        }
        let z = centralizer_in(e8, &x, &component_basis(&s.g, 0));
        let sig = signature(e8, &z, 7).unwrap();
        prop_assert_eq!(sig.dim(), z.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn stabilizers_are_reflection_subgroups(q in prop::collection::vec(arb_rat(), 4)) {
        let w = shared();
        let q: Vec<GaussRat> = q.into_iter().map(GaussRat::from).collect();
        prop_assert!(w.is_reflection_subgroup(&w.stabilizer(&q)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn strata_are_scale_invariant(q in prop::collection::vec(-2i64..=2, 4), re in -3i64..=3, im in -3i64..=3) {
        prop_assume!(re != 0 || im != 0);
        let w = shared();
        let q = ints(&q);
        let lambda = GaussRat::gauss(re, im);
        let scaled: Vec<GaussRat> = q.iter().map(|x| x * &lambda).collect();
        prop_assert_eq!(w.stratum_of(&scaled), w.stratum_of(&q));
    }
}
