//! Weights of `Delta_+ (x) C^4` and Dynkin schemes of tensors.

use std::fmt::Write as _;

use crate::arith::Rat;

use super::clifford::ELL;
use super::label::{Label, SpinorTensor};

/// `sum_{i in I} eps_i - 1/2 (eps_1 + ... + eps_5)` paired with `e_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    /// Twice the `D5` coordinates, each `+-1`.
    d5_twice: [i8; ELL],
    a3: u8,
}

impl Weight {
    pub fn d5_part(&self) -> [Rat; ELL] {
        self.d5_twice.map(|c| Rat::new(c as i64, 2))
    }

    pub fn d5_twice(&self) -> [i8; ELL] {
        self.d5_twice
    }

    /// Index `j` of the `A3` weight `e_j`.
    pub fn a3_part(&self) -> usize {
        self.a3 as usize
    }

    /// Values on the simple coroots: `eps_1-eps_2, ..., eps_4-eps_5,
    /// eps_4+eps_5`, then `e_1-e_2, e_2-e_3, e_3-e_4`.
    pub fn dynkin_labels(&self) -> [i64; 8] {
        let d = self.d5_twice.map(|c| c as i64);
        let mut out = [0i64; 8];
        for k in 0..4 {
            out[k] = (d[k] - d[k + 1]) / 2;
        }
        out[4] = (d[3] + d[4]) / 2;
        let j = self.a3 as usize;
        for k in 0..3 {
            out[5 + k] = (j == k + 1) as i64 - (j == k + 2) as i64;
        }
        out
    }
}

pub fn weight_of(l: &Label) -> Weight {
    let mut d5_twice = [-1i8; ELL];
    for i in l.indices() {
        d5_twice[i - 1] = 1;
    }
    Weight { d5_twice, a3: l.factor() as u8 }
}

/// Scalar product with `(e_i, e_i) = 3/4` and `(e_i, e_j) = -1/4`.
pub fn weight_dot(a: &Weight, b: &Weight) -> Rat {
    let d5: i64 = a.d5_twice.iter().zip(&b.d5_twice).map(|(x, y)| (*x as i64) * (*y as i64)).sum();
    let a3 = if a.a3 == b.a3 { 3 } else { -1 };
    Rat::new(d5 + a3, 4)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeStyle {
    /// Scalar product `-1`.
    Solid,
    /// Scalar product `+1`.
    Dashed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinScheme {
    pub nodes: Vec<Label>,
    /// Node indices `a < b` and the edge style.
    pub edges: Vec<(usize, usize, EdgeStyle)>,
}

#[derive(Debug, thiserror::Error)]
#[error("the Dynkin scheme of the zero tensor is undefined")]
pub struct ZeroTensor;

pub fn dynkin_scheme(x: &SpinorTensor) -> Result<DynkinScheme, ZeroTensor> {
    if x.is_zero() {
        return Err(ZeroTensor);
    }
    let nodes = x.support();
    let weights: Vec<Weight> = nodes.iter().map(weight_of).collect();
    let mut edges = Vec::new();
    for a in 0..nodes.len() {
        for b in a + 1..nodes.len() {
            let d = weight_dot(&weights[a], &weights[b]);
            if d == Rat::int(-1) {
                edges.push((a, b, EdgeStyle::Solid));
            } else if d == Rat::ONE {
                edges.push((a, b, EdgeStyle::Dashed));
            }
        }
    }
    Ok(DynkinScheme { nodes, edges })
}

impl DynkinScheme {
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph dynkin_scheme {\n");
        for l in &self.nodes {
            writeln!(s, "  \"{l}\";").unwrap();
        }
        for &(a, b, style) in &self.edges {
            let attr = match style {
                EdgeStyle::Solid => "",
                EdgeStyle::Dashed => " [style=dashed]",
            };
            writeln!(s, "  \"{}\" -- \"{}\"{attr};", self.nodes[a], self.nodes[b]).unwrap();
        }
        s.push_str("}\n");
        s
    }

    /// Whether the scheme is a 4-cycle of solid edges (extended `A3`).
    pub fn is_square(&self) -> bool {
        if self.nodes.len() != 4 || self.edges.len() != 4 || self.edges.iter().any(|e| e.2 != EdgeStyle::Solid) {
            return false;
        }
        (0..4).all(|v| self.edges.iter().filter(|e| e.0 == v || e.1 == v).count() == 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn l(idx: &[usize], j: usize) -> Label {
        Label::new(idx, j).unwrap()
    }

    #[test]
    fn weights_of_examples() {
        let h = Rat::new(1, 2);
        let w = weight_of(&l(&[], 1));
        assert_eq!(w.d5_part(), [-h.clone(), -h.clone(), -h.clone(), -h.clone(), -h.clone()]);
        assert_eq!(w.a3_part(), 1);
        let w = weight_of(&l(&[1, 2], 3));
        assert_eq!(w.d5_part(), [h.clone(), h.clone(), -h.clone(), -h.clone(), -h.clone()]);
        assert_eq!(weight_of(&l(&[1, 2, 3, 4], 2)).d5_part(), [h.clone(), h.clone(), h.clone(), h.clone(), -h]);
    }

    /// Independent oracle: the case rules by symmetric difference of the
    /// index sets and equality of the `A3` factor.
    fn dot_by_cases(a: &Label, b: &Label) -> Rat {
        let sym = (a.mask() ^ b.mask()).count_ones();
        let d5 = match sym {
            0 => Rat::new(5, 4),
            2 => Rat::new(1, 4),
            4 => Rat::new(-3, 4),
            _ => unreachable!(),
        };
        let a3 = if a.factor() == b.factor() { Rat::new(3, 4) } else { Rat::new(-1, 4) };
        d5 + a3
    }

    #[test]
    fn dot_matches_case_rules_on_all_pairs() {
        let all = Label::all();
        let allowed = [Rat::int(2), Rat::ONE, Rat::ZERO, Rat::int(-1)];
        for a in &all {
            for b in &all {
                let d = weight_dot(&weight_of(a), &weight_of(b));
                assert_eq!(d, dot_by_cases(a, b));
                assert!(allowed.contains(&d));
            }
            assert_eq!(weight_dot(&weight_of(a), &weight_of(a)), Rat::int(2));
        }
        assert_eq!(weight_dot(&weight_of(&l(&[1, 2], 1)), &weight_of(&l(&[1, 3], 1))), Rat::ONE);
        assert_eq!(weight_dot(&weight_of(&l(&[], 1)), &weight_of(&l(&[1, 2, 3, 4], 2))), Rat::int(-1));
    }

    #[test]
    fn weights_are_distinct() {
        let mut w: Vec<Weight> = Label::all().iter().map(weight_of).collect();
        w.sort();
        w.dedup();
        assert_eq!(w.len(), 64);
    }

    #[test]
    fn example_scheme() {
        let x = SpinorTensor::parse("()x1+(1,3,4,5)x1+(1,2,3,4)x2+(1,5)x3+(2,3,4,5)x3+(2,3)x4+(4,5)x4+(1,2,4,5)x4").unwrap();
        let s = dynkin_scheme(&x).unwrap();
        assert_eq!(s.nodes.len(), 8);
        let dot = s.to_dot();
        assert_eq!(dot.matches(" -- ").count(), s.edges.len());
        let single = dynkin_scheme(&SpinorTensor::basis(l(&[1, 2], 1))).unwrap();
        assert_eq!((single.nodes.len(), single.edges.len()), (1, 0));
        assert!(dynkin_scheme(&SpinorTensor::zero()).is_err());
    }

    #[test]
    fn cartan_subspace_generators_are_squares() {
        for p in [
            "-(3,5)x1+(1,2,4,5)x2-(2,4)x3-(1,3)x4",
            "-(2,5)x1+(1,3,4,5)x2+(3,4)x3+(1,2)x4",
            "(1,2,3,4)x1+()x2+(1,2,3,5)x3-(4,5)x4",
            "(1,4)x1+(2,3)x2-(1,5)x3+(2,3,4,5)x4",
        ] {
            assert!(dynkin_scheme(&SpinorTensor::parse(p).unwrap()).unwrap().is_square(), "{p}");
        }
    }

    proptest! {
        #[test]
        fn scheme_depends_only_on_support(idx in prop::collection::btree_set(0usize..64, 1..8), scale in 1i64..7) {
            let all = Label::all();
            let labels: Vec<Label> = idx.iter().map(|&k| all[k]).collect();
            let x = SpinorTensor::from_terms(labels.iter().map(|l| (*l, crate::arith::GaussRat::ONE)));
            let y = SpinorTensor::from_terms(labels.iter().enumerate().map(|(n, l)| (*l, crate::arith::GaussRat::gauss(scale, n as i64))));
            prop_assert_eq!(dynkin_scheme(&x).unwrap(), dynkin_scheme(&y).unwrap());
        }
    }
}
