//! Characteristics of neutral elements `h` lying in a split Cartan
//! subalgebra spanned by E8 coroots.

use std::fmt;

use itertools::Itertools;

use crate::arith::{intersect, solve, GaussRat, Rat, SparseMatrix, SparseVec};
use crate::e8::algebra::{BasisKind, LieElem, DIM, E8};
use crate::e8::grading::Graded;
use crate::e8::roots::{classify_cartan, format_type, SimpleType, RANK};

use super::subspace::{centralizer_of_all, span};

/// `lambda` with `[t, x] = lambda x`, if `x` is an eigenvector.
pub fn eigenvalue(e8: &E8, t: &LieElem, x: &LieElem) -> Option<GaussRat> {
    let (b, c) = x.leading()?;
    let tx = e8.bracket(t, x);
    let lambda = tx.get(b) / c.clone();
    (tx == x.scale(&lambda)).then_some(lambda)
}

/// A reductive subalgebra with a split Cartan subalgebra inside the span of
/// the E8 simple coroots, and a chosen simple system.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub cartan: Vec<LieElem>,
    pub simple: Vec<(LieElem, LieElem)>,
    pub coroots: Vec<LieElem>,
    /// `cartan_matrix[i][j] = beta_i(coroot_j)`.
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Basis of the centre, inside `cartan`.
    pub center: Vec<LieElem>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CharacteristicError {
    #[error("element is not in the Cartan subalgebra")]
    NotInCartan,
    #[error("simple-root value {0} is not a real rational")]
    NotReal(String),
    #[error("root system not recognized: {0}")]
    Unrecognized(String),
}

fn rat_i64(r: &Rat) -> Option<i64> {
    use num_traits::ToPrimitive;
    r.is_integer().then(|| r.numer().to_i64()).flatten()
}

fn to_int(c: &GaussRat) -> i64 {
    c.as_rat().and_then(rat_i64).expect("Cartan integer")
}

fn normalized_coroot(e8: &E8, x: &LieElem, y: &LieElem) -> LieElem {
    let h = e8.bracket(x, y);
    let v = eigenvalue(e8, &h, x).expect("root vector");
    h.scale(&(GaussRat::int(2) / v))
}

impl RootDatum {
    fn from_simple(e8: &E8, cartan: Vec<LieElem>, simple: Vec<(LieElem, LieElem)>) -> RootDatum {
        let coroots: Vec<LieElem> = simple.iter().map(|(x, y)| normalized_coroot(e8, x, y)).collect();
        let cartan_matrix = simple
            .iter()
            .map(|(x, _)| coroots.iter().map(|h| to_int(&eigenvalue(e8, h, x).unwrap())).collect())
            .collect();
        let xs: Vec<LieElem> = simple.iter().map(|(x, _)| x.clone()).collect();
        let center = centralizer_of_all(e8, &xs, &cartan);
        RootDatum { cartan, simple, coroots, cartan_matrix, center }
    }

    /// `g_0` with the E8 Cartan subalgebra and simple roots in the order of
    /// [`Graded::g0_nodes`].
    pub fn g0(g: &Graded) -> RootDatum {
        let cartan = (0..RANK).map(|i| SparseVec::unit(g.e8.cartan_basis(i))).collect();
        let simple = g.g0_nodes().iter().map(|n| (SparseVec::unit(n.e), SparseVec::unit(n.f))).collect();
        RootDatum::from_simple(&g.e8, cartan, simple)
    }

    /// A reductive subalgebra `k` (given by a basis) whose intersection with
    /// the E8 Cartan subalgebra is a Cartan subalgebra of `k`.  Positive
    /// roots are those on which `order` takes a positive real part.
    pub fn split_subalgebra(e8: &E8, k: &[LieElem], order: &[i64]) -> Result<RootDatum, CharacteristicError> {
        let std_cartan: Vec<LieElem> = (0..RANK).map(|i| SparseVec::unit(e8.cartan_basis(i))).collect();
        let cartan = span(&intersect(k, &std_cartan));
        if centralizer_of_all(e8, &cartan, k).len() != cartan.len() {
            return Err(CharacteristicError::NotInCartan);
        }
        // Root spaces: group E8 roots by their restriction to the Cartan.
        let mut groups: Vec<(Vec<GaussRat>, Vec<LieElem>)> = Vec::new();
        for b in 0..DIM {
            if let BasisKind::Root(_) = e8.kind(b) {
                let x = SparseVec::unit(b);
                let key: Vec<GaussRat> = cartan.iter().map(|t| eigenvalue(e8, t, &x).unwrap()).collect();
                match groups.iter_mut().find(|(k2, _)| *k2 == key) {
                    Some((_, vs)) => vs.push(x),
                    None => groups.push((key, vec![x])),
                }
            }
        }
        let mut roots: Vec<(Vec<GaussRat>, LieElem)> = Vec::new();
        for (key, vs) in groups {
            if key.iter().all(|c| c.is_zero()) {
                continue;
            }
            for x in intersect(k, &vs) {
                roots.push((key.clone(), x));
            }
        }
        let height = |key: &[GaussRat]| {
            key.iter().zip(order).fold(Rat::ZERO, |acc, (c, w)| acc + c.re.clone() * Rat::from(*w))
        };
        let positive: Vec<&(Vec<GaussRat>, LieElem)> = roots.iter().filter(|(key, _)| height(key) > Rat::ZERO).collect();
        if positive.len() * 2 != roots.len() {
            return Err(CharacteristicError::Unrecognized("ordering is not regular".into()));
        }
        let keys: std::collections::HashSet<&Vec<GaussRat>> = positive.iter().map(|(k, _)| k).collect();
        let mut simple = Vec::new();
        for (key, x) in &positive {
            let decomposable = positive.iter().any(|(a, _)| {
                let rest: Vec<GaussRat> = key.iter().zip(a).map(|(u, v)| u - v).collect();
                keys.contains(&rest)
            });
            if !decomposable {
                let neg: Vec<GaussRat> = key.iter().map(|c| -c).collect();
                let (_, y) = roots.iter().find(|(k2, _)| *k2 == neg).ok_or_else(|| {
                    CharacteristicError::Unrecognized("negative root missing".into())
                })?;
                simple.push((x.clone(), y.clone()));
            }
        }
        Ok(RootDatum::from_simple(e8, cartan, simple))
    }

    pub fn simple_types(&self) -> Result<Vec<SimpleType>, String> {
        classify_cartan(&self.cartan_matrix)
    }

    pub fn type_name(&self) -> String {
        self.simple_types().map(|t| format_type(&t)).unwrap_or_else(|e| e)
    }

    /// Values of the simple roots on `h`.
    pub fn simple_values(&self, e8: &E8, h: &LieElem) -> Result<Vec<Rat>, CharacteristicError> {
        if !crate::arith::Echelon::from_vectors(&self.cartan).contains(h) {
            return Err(CharacteristicError::NotInCartan);
        }
        self.simple
            .iter()
            .map(|(x, _)| {
                let v = eigenvalue(e8, h, x).expect("Cartan element acts diagonally");
                v.as_rat().cloned().ok_or_else(|| CharacteristicError::NotReal(v.to_string()))
            })
            .collect()
    }

    /// Dominant representative's simple-root values: apply simple
    /// reflections while some value is negative.
    pub fn dominant(&self, mut v: Vec<Rat>) -> Vec<Rat> {
        while let Some(j) = v.iter().position(|x| *x < Rat::ZERO) {
            let vj = v[j].clone();
            for (i, vi) in v.iter_mut().enumerate() {
                *vi = vi.clone() - vj.clone() * Rat::from(self.cartan_matrix[i][j]);
            }
        }
        v
    }

    /// Coordinates of `h` on the centre basis, in the decomposition
    /// `cartan = span(coroots) + centre`.
    pub fn center_coordinates(&self, h: &LieElem) -> Result<Vec<GaussRat>, CharacteristicError> {
        let mut cols = self.coroots.clone();
        cols.extend(self.center.iter().cloned());
        let m = SparseMatrix::from_cols(DIM, &cols);
        let x = solve(&m, h).ok_or(CharacteristicError::NotInCartan)?;
        Ok((0..self.center.len()).map(|k| x.get(self.coroots.len() + k)).collect())
    }
}

/// The eight dominant values `gamma_i(h~)` for the Dynkin diagram of `g_0`
/// numbered `1 - 2 - 3 - 5` with `4` attached to `3` (the `D5`), then
/// `6 - 7 - 8` (the `A3`).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Characteristic {
    pub labels: Vec<i64>,
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.labels.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", d.join(""))
    }
}

/// Position in [`Graded::g0_nodes`] of each node `1..=8`: E8 nodes
/// `1, 3, 4, 2, 5` for the `D5` and `7, 8, 0` for the `A3`.
pub const G0_NODE_ORDER: [usize; 8] = [0, 2, 3, 1, 4, 5, 6, 7];

fn rat_to_int(r: &Rat) -> Result<i64, CharacteristicError> {
    rat_i64(r).ok_or_else(|| CharacteristicError::NotReal(r.to_string()))
}

/// Characteristic of `h` in the span of the E8 simple coroots.
pub fn characteristic(g: &Graded, h: &LieElem) -> Result<Characteristic, CharacteristicError> {
    let rd = RootDatum::g0(g);
    let v = rd.dominant(rd.simple_values(&g.e8, h)?);
    let labels = G0_NODE_ORDER.iter().map(|&k| rat_to_int(&v[k])).collect::<Result<_, _>>()?;
    Ok(Characteristic { labels })
}

/// Weights of the order functional ranking roots of a centralizer by
/// their restriction to its split Cartan subalgebra.
pub const RELATIVE_ORDER: [i64; 5] = [1, 3, 9, 27, 81];

/// Dominant simple-root values and the centre coordinate of `h`
/// relative to a reductive centralizer with one-dimensional centre,
/// in the order of [`RootDatum::split_subalgebra`].
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct RawRelative {
    pub values: Vec<i64>,
    pub center: Rat,
}

pub fn raw_relative(e8: &E8, rd: &RootDatum, h: &LieElem) -> Result<RawRelative, CharacteristicError> {
    let v = rd.dominant(rd.simple_values(e8, h)?);
    let values = v.iter().map(rat_to_int).collect::<Result<_, _>>()?;
    let c = rd.center_coordinates(h)?;
    if c.len() != 1 {
        return Err(CharacteristicError::Unrecognized(format!("centre of dimension {}", c.len())));
    }
    let center = c[0].as_rat().cloned().ok_or_else(|| CharacteristicError::NotReal(c[0].to_string()))?;
    Ok(RawRelative { values, center })
}

/// A quadruple of nonnegative integers and a rational centre coordinate.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct RelativeCharacteristic {
    pub labels: Vec<i64>,
    pub center: Rat,
}

impl RelativeCharacteristic {
    /// From the printed pair, e.g. `("0110", "1/3")`.
    pub fn from_printed(digits: &str, center: &str) -> Option<RelativeCharacteristic> {
        let labels = digits.chars().map(|c| c.to_digit(10).map(i64::from)).collect::<Option<Vec<_>>>()?;
        Some(RelativeCharacteristic { labels, center: center.parse().ok()? })
    }
}

impl fmt::Display for RelativeCharacteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: String = self.labels.iter().map(|x| x.to_string()).collect();
        write!(f, "({d},{})", self.center)
    }
}

/// How printed relative characteristics relate to [`RawRelative`]: the
/// printed label `k` is raw value `order[k]`, and the printed centre is
/// `center_scale` times the raw one.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct RelativeConvention {
    pub order: Vec<usize>,
    pub center_scale: Rat,
}

impl RelativeConvention {
    pub fn apply(&self, raw: &RawRelative) -> RelativeCharacteristic {
        RelativeCharacteristic {
            labels: self.order.iter().map(|&k| raw.values[k]).collect(),
            center: self.center_scale.clone() * raw.center.clone(),
        }
    }

    /// Conventions reproducing the first printed row (the centre scale is
    /// read off from it, so its raw centre must be nonzero).
    pub fn candidates(raw: &RawRelative, printed: &RelativeCharacteristic) -> Vec<RelativeConvention> {
        if raw.center.is_zero() || raw.values.len() != printed.labels.len() {
            return Vec::new();
        }
        let center_scale = printed.center.clone() / raw.center.clone();
        let n = raw.values.len();
        let mut out = Vec::new();
        for order in (0..n).permutations(n) {
            let c = RelativeConvention { order, center_scale: center_scale.clone() };
            if c.apply(raw) == *printed {
                out.push(c);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::fixture::setup;
    use crate::orbit::sl2::{sl2_complete, Ambient};
    use crate::orbit::subspace::{centralizer_in, component_basis};
    use proptest::prelude::*;

    #[test]
    fn zero_has_zero_characteristic() {
        let s = setup();
        assert_eq!(characteristic(&s.g, &SparseVec::new()).unwrap().labels, vec![0; 8]);
    }

    #[test]
    fn g0_datum_is_d5_a3() {
        let s = setup();
        let rd = RootDatum::g0(&s.g);
        assert_eq!(rd.type_name(), "D5+A3");
        assert!(rd.center.is_empty());
        // (1,2,3,5) is the D5 path and 4 the fork node attached to 3.
        let node = |k: usize| G0_NODE_ORDER[k - 1];
        let cm = |a: usize, b: usize| rd.cartan_matrix[node(a)][node(b)];
        assert_eq!([cm(1, 2), cm(2, 3), cm(3, 5), cm(3, 4), cm(4, 5), cm(6, 7), cm(7, 8), cm(5, 6)], [-1, -1, -1, -1, 0, -1, -1, 0]);
    }

    #[test]
    fn non_cartan_element_is_rejected() {
        let s = setup();
        assert!(matches!(characteristic(&s.g, &s.p[0]), Err(CharacteristicError::NotInCartan)));
    }

    #[test]
    fn split_cartan_of_p1_centralizer() {
        let s = setup();
        let k = centralizer_in(&s.g.e8, &s.p[0], &component_basis(&s.g, 0));
        let rd = RootDatum::split_subalgebra(&s.g.e8, &k, &RELATIVE_ORDER).unwrap();
        assert_eq!(rd.type_name(), "2A1+A2");
        assert_eq!(rd.cartan.len(), 5);
        assert_eq!(rd.center.len(), 1);
    }

    #[test]
    fn relative_characteristic_of_table8_row1() {
        let s = setup();
        let e8 = &s.g.e8;
        let amb = Ambient::centralizer(&s.g, &s.p[0]);
        let rd = RootDatum::split_subalgebra(e8, &amb.g0, &RELATIVE_ORDER).unwrap();
        let t = sl2_complete(e8, &s.elem("(1,4)x1"), &amb).unwrap();
        let raw = raw_relative(e8, &rd, &t.h).unwrap();
        let printed = RelativeCharacteristic::from_printed("0110", "1/3").unwrap();
        let conv = RelativeConvention { order: vec![3, 2, 1, 0], center_scale: Rat::new(-2, 3) };
        assert_eq!(conv.apply(&raw), printed);
        assert!(RelativeConvention::candidates(&raw, &printed).contains(&conv));
        assert_eq!(printed.to_string(), "(0110,1/3)");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn dominant_values_are_nonnegative(c in proptest::collection::vec(-6i64..=6, 8)) {
            let s = setup();
            let h = SparseVec::from_pairs(c.iter().enumerate().map(|(i, &x)| (s.g.e8.cartan_basis(i), GaussRat::int(x))));
            let ch = characteristic(&s.g, &h).unwrap();
            prop_assert!(ch.labels.iter().all(|&x| x >= 0));
            // Simple reflections do not change the dominant representative.
            let rd = RootDatum::g0(&s.g);
            let v = rd.simple_values(&s.g.e8, &h).unwrap();
            let j = c.iter().map(|x| x.unsigned_abs() as usize).sum::<usize>() % 8;
            let mut w = v.clone();
            let vj = v[j].clone();
            for (i, wi) in w.iter_mut().enumerate() {
                *wi = wi.clone() - vj.clone() * Rat::from(rd.cartan_matrix[i][j]);
            }
            prop_assert_eq!(rd.dominant(w), rd.dominant(v));
        }
    }
}
