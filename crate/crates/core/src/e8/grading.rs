//! The Z/4Z-grading of E8 given by the inner automorphism
//! `theta(x_a) = i^{a_6} x_a`, where `a_6` is the coefficient of the
//! simple root `alpha_6`.

use crate::arith::{GaussRat, LinearOp, SparseVec};

use super::algebra::{BasisKind, LieElem, DIM, E8};
use super::roots::{classify_cartan, format_type, RootVec, SimpleType, RANK};

/// Node of the Kac diagram carrying the grading (Bourbaki `alpha_6`).
pub const GRADING_NODE: usize = 5;

pub struct Graded {
    pub e8: E8,
    degree: Vec<u8>,
    components: [Vec<usize>; 4],
    position: Vec<usize>,
}

/// The automorphism `theta` as a diagonal operator.
pub struct Theta<'a> {
    graded: &'a Graded,
}

impl LinearOp for Theta<'_> {
    fn dim(&self) -> usize {
        DIM
    }
    fn apply(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_sorted(
            v.iter().map(|(b, c)| (b, c * &GaussRat::i_pow(self.graded.degree[b] as i64))).collect(),
        )
    }
}

/// A simple root of `g_0` and its Chevalley generators.
#[derive(Clone, Debug)]
pub struct G0Node {
    /// `1..=8` for E8 simple roots, `0` for the lowest root.
    pub e8_node: usize,
    pub root: RootVec,
    pub e: usize,
    pub f: usize,
}

impl Graded {
    pub fn new() -> Graded {
        Graded::from_e8(E8::new())
    }

    pub fn from_e8(e8: E8) -> Graded {
        let degree: Vec<u8> = (0..DIM)
            .map(|b| match e8.kind(b) {
                BasisKind::Cartan(_) => 0,
                BasisKind::Root(r) => (e8.roots.roots[r][GRADING_NODE] as i32).rem_euclid(4) as u8,
            })
            .collect();
        let mut components: [Vec<usize>; 4] = Default::default();
        let mut position = vec![0; DIM];
        for b in 0..DIM {
            let d = degree[b] as usize;
            position[b] = components[d].len();
            components[d].push(b);
        }
        Graded { e8, degree, components, position }
    }

    pub fn theta(&self) -> Theta<'_> {
        Theta { graded: self }
    }

    pub fn degree_of_basis(&self, b: usize) -> usize {
        self.degree[b] as usize
    }

    /// Degree of a homogeneous element, `None` if it is zero or mixed.
    pub fn degree_of(&self, x: &LieElem) -> Option<usize> {
        let mut it = x.iter().map(|(b, _)| self.degree[b]);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d as usize)
    }

    /// Chevalley basis indices spanning `g_k`.
    pub fn component(&self, k: usize) -> &[usize] {
        &self.components[k % 4]
    }

    pub fn dims(&self) -> [usize; 4] {
        [0, 1, 2, 3].map(|k| self.components[k].len())
    }

    /// Position of a basis index inside its component.
    pub fn position(&self, b: usize) -> usize {
        self.position[b]
    }

    /// Projection of `x` onto `g_k`.
    pub fn project(&self, x: &LieElem, k: usize) -> LieElem {
        SparseVec::from_sorted(x.iter().filter(|(b, _)| self.degree[*b] as usize == k % 4).map(|(b, c)| (b, c.clone())).collect())
    }

    /// Simple roots of `g_0`: the E8 simple roots other than `alpha_6`
    /// together with the lowest root.
    pub fn g0_nodes(&self) -> Vec<G0Node> {
        let mut out = Vec::new();
        for i in 0..RANK {
            if i == GRADING_NODE {
                continue;
            }
            let mut r = [0i8; RANK];
            r[i] = 1;
            out.push(self.node(i + 1, r));
        }
        let lowest = super::roots::neg(&self.e8.roots.highest_root());
        out.push(self.node(0, lowest));
        out
    }

    fn node(&self, e8_node: usize, root: RootVec) -> G0Node {
        let e = self.e8.root_basis_of(&root).unwrap();
        let f = self.e8.root_basis_of(&super::roots::neg(&root)).unwrap();
        G0Node { e8_node, root, e, f }
    }

    /// Cartan matrix of the simple system of `g_0` in the order of [`Self::g0_nodes`].
    pub fn g0_cartan(&self) -> Vec<Vec<i64>> {
        let nodes = self.g0_nodes();
        nodes
            .iter()
            .map(|a| nodes.iter().map(|b| self.e8.roots.inner(&a.root, &b.root) as i64).collect())
            .collect()
    }

    /// Semisimple type of `g_0`, computed from its root subsystem.
    pub fn g0_type(&self) -> Result<Vec<SimpleType>, String> {
        classify_cartan(&self.g0_cartan())
    }

    pub fn g0_type_name(&self) -> String {
        self.g0_type().map(|t| format_type(&t)).unwrap_or_else(|e| format!("unrecognized ({e})"))
    }

    /// Roots of degree-zero root vectors, checked to span a closed subsystem
    /// with the given simple roots.
    pub fn g0_roots(&self) -> Vec<RootVec> {
        self.components[0].iter().filter_map(|&b| self.e8.root_of_basis(b)).collect()
    }
}

impl Default for Graded {
    fn default() -> Self {
        Graded::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn component_dimensions() {
        let g = Graded::new();
        assert_eq!(g.dims(), [60, 64, 60, 64]);
        assert_eq!(g.g0_type_name(), "D5+A3");
    }

    #[test]
    fn theta_is_an_automorphism_of_order_four() {
        let g = Graded::new();
        let t = g.theta();
        for a in (0..DIM).step_by(7) {
            for b in (0..DIM).step_by(5) {
                let (x, y) = (SparseVec::unit(a), SparseVec::unit(b));
                let lhs = t.apply(&g.e8.bracket(&x, &y));
                let rhs = g.e8.bracket(&t.apply(&x), &t.apply(&y));
                assert_eq!(lhs, rhs);
            }
        }
        for b in 0..DIM {
            let x = SparseVec::unit(b);
            assert_eq!(t.apply(&t.apply(&t.apply(&t.apply(&x)))), x);
        }
    }

    #[test]
    fn every_g0_root_is_an_integer_combination_of_g0_simple_roots() {
        let g = Graded::new();
        let nodes = g.g0_nodes();
        // Each degree-zero root is reached from the simple roots by adding
        // simple roots one at a time (checked through the closure).
        let roots = g.g0_roots();
        assert_eq!(roots.len(), 52);
        let simple: Vec<RootVec> = nodes.iter().map(|n| n.root).collect();
        let mut reached: std::collections::HashSet<RootVec> = simple.iter().copied().collect();
        let mut frontier: Vec<RootVec> = simple.clone();
        while let Some(r) = frontier.pop() {
            for s in &simple {
                let t = super::super::roots::add(&r, s);
                if roots.contains(&t) && reached.insert(t) {
                    frontier.push(t);
                }
            }
        }
        assert_eq!(reached.len(), 26);
    }
}
