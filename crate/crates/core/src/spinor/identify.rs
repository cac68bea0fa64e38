//! The `g_0`-equivariant identification of `Delta_+ (x) C^4` with `g_1`.
//!
//! `o(10) + sl(4)` is matched with `g_0` by sending Chevalley generators of
//! the simple roots of `g_0` to Chevalley generators of `o(10) + sl(4)`.
//! The two diagram symmetries left open (the fork of `D5` and the flip of
//! `A3`) are fixed by requiring that the weights of the 64 labels match the
//! weights of the roots of `g_1`.  The scalars on the root vectors are then
//! the solution of the linear system expressing equivariance.

use std::collections::HashMap;

use crate::arith::{kernel_basis, GaussRat, SparseMatrix, SparseVec};
use crate::e8::{Graded, LieElem, RootVec};

use super::clifford::{elementary, o10_elem, Spin, N};
use super::label::{Label, SpinorTensor};
use super::weights::{weight_of, Weight};

/// Element of `o(10) + sl(4)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HatElem {
    pub so: SparseMatrix,
    pub sl: SparseMatrix,
}

impl HatElem {
    pub fn bracket(&self, other: &HatElem) -> HatElem {
        HatElem { so: self.so.commutator(&other.so), sl: self.sl.commutator(&other.sl) }
    }

    pub fn scale(&self, c: &GaussRat) -> HatElem {
        HatElem { so: self.so.scale(c), sl: self.sl.scale(c) }
    }

    pub fn is_zero(&self) -> bool {
        self.so.is_zero() && self.sl.is_zero()
    }
}

/// Chevalley generators of `o(10) + sl(4)` for the simple roots
/// `eps_1-eps_2, eps_2-eps_3, eps_3-eps_4, eps_4-eps_5, eps_4+eps_5,
/// e_1-e_2, e_2-e_3, e_3-e_4`.
pub fn hat_chevalley() -> Vec<(HatElem, HatElem)> {
    let so = |m: SparseMatrix| HatElem { so: m, sl: SparseMatrix::zero(4, 4) };
    let sl = |m: SparseMatrix| HatElem { so: SparseMatrix::zero(N, N), sl: m };
    let mut raw = Vec::new();
    for k in 1..=4 {
        raw.push((so(o10_elem(5 + k, 6 + k)), so(o10_elem(6 + k, 5 + k))));
    }
    raw.push((so(o10_elem(9, 1)), so(o10_elem(1, 9))));
    for j in 1..=3 {
        raw.push((sl(elementary(4, j, j + 1)), sl(elementary(4, j + 1, j))));
    }
    raw.into_iter()
        .map(|(x, y)| {
            let h = x.bracket(&y);
            let hx = h.bracket(&x);
            // [h, x] = c x; rescale y so that c = 2.
            let c = ratio(&hx, &x).expect("root vector is an eigenvector");
            let y = y.scale(&(GaussRat::int(2) * c.inv()));
            (x, y)
        })
        .collect()
}

fn ratio(a: &HatElem, b: &HatElem) -> Option<GaussRat> {
    let (fa, fb) = (flatten(a), flatten(b));
    let (k, c) = fb.leading()?;
    let r = fa.get(k) * c.inv();
    (fb.scale(&r) == fa).then_some(r)
}

fn flatten(a: &HatElem) -> SparseVec {
    let mut pairs = Vec::new();
    for (i, row) in a.so.rows.iter().enumerate() {
        for (j, c) in row.iter() {
            pairs.push((i * N + j, c.clone()));
        }
    }
    for (i, row) in a.sl.rows.iter().enumerate() {
        for (j, c) in row.iter() {
            pairs.push((N * N + i * 4 + j, c.clone()));
        }
    }
    SparseVec::from_pairs(pairs)
}

/// `o(10) + sl(4)` acting on `Delta_+ (x) C^4` in the basis [`Label::all`].
pub struct LabelModule {
    spin: Spin,
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

impl LabelModule {
    pub fn new() -> LabelModule {
        let labels = Label::all();
        let index = labels.iter().enumerate().map(|(k, l)| (*l, k)).collect();
        LabelModule { spin: Spin::new(), labels, index }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn index_of(&self, l: &Label) -> usize {
        self.index[l]
    }

    pub fn spin(&self) -> &Spin {
        &self.spin
    }

    /// Matrix of `rho(a) (x) 1 + 1 (x) b` on the 64 labels.
    pub fn action(&self, x: &HatElem) -> SparseMatrix {
        let rho = self.spin.rho(&x.so).expect("o(10) component");
        let mut t = Vec::new();
        for (col, l) in self.labels.iter().enumerate() {
            for (m, c) in rho.col(l.mask()).iter() {
                t.push((self.index[&Label::from_mask(m, l.factor())], col, c.clone()));
            }
            for (j, c) in x.sl.col(l.factor() - 1).iter() {
                t.push((self.index[&Label::from_mask(l.mask(), j + 1)], col, c.clone()));
            }
        }
        SparseMatrix::from_triplets(64, 64, t)
    }

    pub fn to_vec(&self, x: &SpinorTensor) -> SparseVec {
        SparseVec::from_pairs(x.terms().map(|(l, c)| (self.index[l], c.clone())))
    }

    pub fn from_vec(&self, v: &SparseVec) -> SpinorTensor {
        SpinorTensor::from_terms(v.iter().map(|(k, c)| (self.labels[k], c.clone())))
    }
}

impl Default for LabelModule {
    fn default() -> Self {
        LabelModule::new()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum IdentifyError {
    #[error("no diagram matching makes the label weights agree with the roots of g1")]
    NoWeightMatch,
    #[error("equivariance system has a solution space of dimension {0}, expected 1")]
    NotUnique(usize),
    #[error("element has components outside g1")]
    OutsideG1,
}

/// The identification `Delta_+ (x) C^4 -> g_1`.
pub struct Dictionary {
    pub module: LabelModule,
    /// For each `g_0` node (in [`Graded::g0_nodes`] order) the index of the
    /// matched simple root of `o(10) + sl(4)`.
    pub node_map: Vec<usize>,
    pub chevalley: Vec<(HatElem, HatElem)>,
    /// Image of label `k`: root-vector basis index and coefficient.
    image: Vec<(usize, GaussRat)>,
    preimage: HashMap<usize, (usize, GaussRat)>,
}

/// The four diagram matchings: `D5` fork either way, `A3` either way.
fn candidate_node_maps() -> Vec<Vec<usize>> {
    // g0 nodes: alpha_1, alpha_2, alpha_3, alpha_4, alpha_5, alpha_7, alpha_8, alpha_0.
    let mut out = Vec::new();
    for fork in [(3, 4), (4, 3)] {
        for (a7, a0) in [(5, 7), (7, 5)] {
            out.push(vec![0, fork.0, 1, 2, fork.1, a7, 6, a0]);
        }
    }
    out
}

/// Values `<beta, alpha^vee>` on the `g_0` simple coroots.
fn root_labels(g: &Graded, beta: &RootVec) -> Vec<i64> {
    g.g0_nodes().iter().map(|n| g.e8.roots.inner(beta, &n.root) as i64).collect()
}

impl Dictionary {
    pub fn build(g: &Graded) -> Result<Dictionary, IdentifyError> {
        let module = LabelModule::new();
        let g1_roots: Vec<(usize, Vec<i64>)> =
            g.component(1).iter().map(|&b| (b, root_labels(g, &g.e8.root_of_basis(b).unwrap()))).collect();
        let weights: Vec<Weight> = module.labels().iter().map(weight_of).collect();
        let mut matched = None;
        for map in candidate_node_maps() {
            let by_labels: HashMap<Vec<i64>, usize> = g1_roots.iter().map(|(b, l)| (l.clone(), *b)).collect();
            let targets: Option<Vec<usize>> = weights
                .iter()
                .map(|w| {
                    let d = w.dynkin_labels();
                    by_labels.get(&map.iter().map(|&h| d[h]).collect::<Vec<i64>>()).copied()
                })
                .collect();
            if let Some(t) = targets {
                let mut sorted = t.clone();
                sorted.sort();
                sorted.dedup();
                if sorted.len() == 64 {
                    matched = Some((map, t));
                    break;
                }
            }
        }
        let (node_map, targets) = matched.ok_or(IdentifyError::NoWeightMatch)?;
        let chevalley = hat_chevalley();
        let nodes = g.g0_nodes();

        // phi(A_gen L) = [gen, phi(L)] with phi(L) = c_L x_{beta(L)}.
        let mut rows: Vec<SparseVec> = Vec::new();
        for (m, node) in nodes.iter().enumerate() {
            let (x, y) = &chevalley[node_map[m]];
            for (gen_basis, hat) in [(node.e, x), (node.f, y)] {
                let a = module.action(hat);
                for col in 0..64 {
                    let mut eqs: HashMap<usize, Vec<(usize, GaussRat)>> = HashMap::new();
                    for (row, c) in a.col(col).iter() {
                        eqs.entry(targets[row]).or_default().push((row, c.clone()));
                    }
                    for &(t, s) in g.e8.basis_bracket(gen_basis, targets[col]) {
                        eqs.entry(t as usize).or_default().push((col, GaussRat::int(-(s as i64))));
                    }
                    rows.extend(eqs.into_values().map(SparseVec::from_pairs));
                }
            }
        }
        let mut rows: Vec<SparseVec> = rows.into_iter().filter(|r| !r.is_zero()).collect();
        rows.sort_by_key(|r| r.leading().map(|(k, _)| k));
        let kernel = kernel_basis(&SparseMatrix::from_rows(64, rows));
        if kernel.len() != 1 {
            return Err(IdentifyError::NotUnique(kernel.len()));
        }
        // Kernel vectors have first nonzero entry 1; label 0 is ()x1.
        let c = &kernel[0];
        let image: Vec<(usize, GaussRat)> = (0..64).map(|k| (targets[k], c.get(k))).collect();
        if image.iter().any(|(_, c)| c.is_zero()) {
            return Err(IdentifyError::NotUnique(0));
        }
        let preimage = image.iter().enumerate().map(|(k, (b, c))| (*b, (k, c.inv()))).collect();
        Ok(Dictionary { module, node_map, chevalley, image, preimage })
    }

    /// Root-vector basis index and coefficient of the image of a label.
    pub fn image_of(&self, l: &Label) -> (usize, GaussRat) {
        self.image[self.module.index_of(l)].clone()
    }

    pub fn to_g1(&self, x: &SpinorTensor) -> LieElem {
        SparseVec::from_pairs(x.terms().map(|(l, c)| {
            let (b, s) = self.image_of(l);
            (b, c * &s)
        }))
    }

    pub fn from_g1(&self, x: &LieElem) -> Result<SpinorTensor, IdentifyError> {
        let mut out = SpinorTensor::zero();
        for (b, c) in x.iter() {
            let (k, s) = self.preimage.get(&b).ok_or(IdentifyError::OutsideG1)?;
            out.add_term(self.module.labels()[*k], &(c * s));
        }
        Ok(out)
    }

    /// Matched simple root of `o(10) + sl(4)` for a `g_0` node position.
    pub fn hat_generators(&self, node_position: usize) -> &(HatElem, HatElem) {
        &self.chevalley[self.node_map[node_position]]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;
    use crate::spinor::weights::weight_dot;

    #[test]
    fn chevalley_generators_satisfy_cartan_relations() {
        let ch = hat_chevalley();
        let expected = [
            [2, -1, 0, 0, 0],
            [-1, 2, -1, 0, 0],
            [0, -1, 2, -1, -1],
            [0, 0, -1, 2, 0],
            [0, 0, -1, 0, 2],
        ];
        for a in 0..8 {
            let h = ch[a].0.bracket(&ch[a].1);
            for b in 0..8 {
                let c = ratio(&h.bracket(&ch[b].0), &ch[b].0).unwrap_or(GaussRat::ZERO);
                let want = if a < 5 && b < 5 {
                    expected[a][b]
                } else if a >= 5 && b >= 5 {
                    [[2, -1, 0], [-1, 2, -1], [0, -1, 2]][a - 5][b - 5]
                } else {
                    0
                };
                assert_eq!(c, GaussRat::int(want), "nodes {a} {b}");
            }
        }
    }

    #[test]
    fn highest_weight_vector_of_delta_plus() {
        let m = LabelModule::new();
        let ch = hat_chevalley();
        let killed: Vec<Label> = m
            .labels()
            .iter()
            .filter(|l| l.factor() == 1)
            .filter(|l| ch[..5].iter().all(|(x, _)| m.action(x).mul_vec(&SparseVec::unit(m.index_of(l))).is_zero()))
            .copied()
            .collect();
        assert_eq!(killed, vec![Label::new(&[1, 2, 3, 4], 1).unwrap()]);
    }

    #[test]
    fn dictionary_matches_weights_and_pairings() {
        let g = Graded::new();
        let d = Dictionary::build(&g).unwrap();
        let labels = d.module.labels().to_vec();
        let roots: Vec<RootVec> = labels.iter().map(|l| g.e8.root_of_basis(d.image_of(l).0).unwrap()).collect();
        let mut seen: Vec<usize> = labels.iter().map(|l| d.image_of(l).0).collect();
        seen.sort();
        assert_eq!(seen, g.component(1).to_vec());
        for (a, ra) in labels.iter().zip(&roots) {
            for (b, rb) in labels.iter().zip(&roots) {
                let e8 = Rat::int(g.e8.roots.inner(ra, rb) as i64);
                assert_eq!(e8, weight_dot(&weight_of(a), &weight_of(b)));
            }
        }
        assert!(d.image_of(&labels[0]).1.is_one());
    }

    #[test]
    fn dictionary_is_equivariant() {
        let g = Graded::new();
        let d = Dictionary::build(&g).unwrap();
        let nodes = g.g0_nodes();
        for (m, node) in nodes.iter().enumerate() {
            let (x, y) = d.hat_generators(m);
            for (gb, hat) in [(node.e, x), (node.f, y)] {
                let a = d.module.action(hat);
                for (k, l) in d.module.labels().iter().enumerate() {
                    let lhs = d.to_g1(&d.module.from_vec(&a.mul_vec(&SparseVec::unit(k))));
                    let rhs = g.e8.bracket(&SparseVec::unit(gb), &d.to_g1(&SpinorTensor::basis(*l)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
        let x = SpinorTensor::parse("(1,2)x3-2*(2,3,4,5)x1+i*()x4").unwrap();
        assert_eq!(d.from_g1(&d.to_g1(&x)).unwrap(), x);
        assert!(d.from_g1(&SparseVec::unit(g.component(0)[0])).is_err());
    }

    #[test]
    fn cartan_subspace_generators_commute() {
        let g = Graded::new();
        let d = Dictionary::build(&g).unwrap();
        let ps: Vec<LieElem> = [
            "-(3,5)x1+(1,2,4,5)x2-(2,4)x3-(1,3)x4",
            "-(2,5)x1+(1,3,4,5)x2+(3,4)x3+(1,2)x4",
            "(1,2,3,4)x1+()x2+(1,2,3,5)x3-(4,5)x4",
            "(1,4)x1+(2,3)x2-(1,5)x3+(2,3,4,5)x4",
        ]
        .iter()
        .map(|s| d.to_g1(&SpinorTensor::parse(s).unwrap()))
        .collect();
        for a in 0..4 {
            for b in 0..4 {
                assert!(g.e8.bracket(&ps[a], &ps[b]).is_zero(), "[p{}, p{}]", a + 1, b + 1);
            }
        }
    }
}
