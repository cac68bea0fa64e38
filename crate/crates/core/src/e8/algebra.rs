//! E8 with a Chevalley basis.
//!
//! Root vectors come from the Frenkel-Kac construction: with a
//! bimultiplicative sign `eps` on the root lattice satisfying
//! `eps(a, a) = -1`, put `[E_a, E_b] = eps(a, b) E_{a+b}` and
//! `[E_a, E_{-a}] = -a`.  The basis vector for a root `a` is
//! `x_a = sgn(a) E_a`, which gives `[x_a, x_{-a}] = h_a` for every root and
//! structure constants `+-1`.

use std::collections::HashMap;

use crate::arith::{GaussRat, LinearOp, SparseMatrix, SparseVec};

use super::roots::{add, RootSystem, RootVec, RANK};

pub const DIM: usize = 248;

/// Role of a basis index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// Index into [`RootSystem::roots`].
    Root(usize),
    /// Simple coroot `h_i`, `i` in `0..8`.
    Cartan(usize),
}

pub struct E8 {
    pub roots: RootSystem,
    /// `table[a * DIM + b]` lists `[b_a, b_b]` as (index, coefficient).
    table: Vec<Vec<(u16, i8)>>,
    killing_pairs: HashMap<(usize, usize), GaussRat>,
}

/// Lie algebra element in the Chevalley basis.
pub type LieElem = SparseVec;

impl E8 {
    pub fn new() -> E8 {
        let roots = RootSystem::e8();
        let n = roots.num_positive();
        let kind = |b: usize| -> BasisKind {
            if b < n {
                BasisKind::Root(b)
            } else if b < n + RANK {
                BasisKind::Cartan(b - n)
            } else {
                BasisKind::Root(b - RANK)
            }
        };
        let root_basis = |r: usize| if r < n { r } else { r + RANK };
        // Cocycle matrix: M_ij = 1 for i == j or (i < j and joined).
        let mut m = [[0i32; RANK]; RANK];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = (i == j || (i < j && roots.cartan[i][j] == -1)) as i32;
            }
        }
        let eps = |a: &RootVec, b: &RootVec| -> i32 {
            let mut s = 0i32;
            for i in 0..RANK {
                for j in 0..RANK {
                    s += a[i] as i32 * m[i][j] * b[j] as i32;
                }
            }
            if s.rem_euclid(2) == 0 {
                1
            } else {
                -1
            }
        };
        let sgn = |k: usize| if roots.is_positive(k) { 1 } else { -1 };
        let mut table = vec![Vec::new(); DIM * DIM];
        for a in 0..DIM {
            for b in 0..DIM {
                let entry = match (kind(a), kind(b)) {
                    (BasisKind::Cartan(_), BasisKind::Cartan(_)) => Vec::new(),
                    (BasisKind::Cartan(i), BasisKind::Root(r)) => {
                        let v = pairing(&roots, r, i);
                        if v == 0 {
                            Vec::new()
                        } else {
                            vec![(b as u16, v as i8)]
                        }
                    }
                    (BasisKind::Root(r), BasisKind::Cartan(i)) => {
                        let v = pairing(&roots, r, i);
                        if v == 0 {
                            Vec::new()
                        } else {
                            vec![(a as u16, -v as i8)]
                        }
                    }
                    (BasisKind::Root(r), BasisKind::Root(s)) => {
                        let (ra, rb) = (roots.roots[r], roots.roots[s]);
                        let sum = add(&ra, &rb);
                        if sum.iter().all(|&c| c == 0) {
                            // [x_a, x_{-a}] = h_a = sum_j c_j h_j
                            ra.iter()
                                .enumerate()
                                .filter(|(_, &c)| c != 0)
                                .map(|(j, &c)| ((n + j) as u16, c))
                                .collect()
                        } else if let Some(t) = roots.index_of(&sum) {
                            let c = sgn(r) * sgn(s) * sgn(t) * eps(&ra, &rb);
                            vec![(root_basis(t) as u16, c as i8)]
                        } else {
                            Vec::new()
                        }
                    }
                };
                table[a * DIM + b] = entry;
            }
        }
        let mut e8 = E8 { roots, table, killing_pairs: HashMap::new() };
        e8.killing_pairs = e8.compute_killing_pairs();
        e8
    }

    pub fn kind(&self, b: usize) -> BasisKind {
        let n = self.roots.num_positive();
        if b < n {
            BasisKind::Root(b)
        } else if b < n + RANK {
            BasisKind::Cartan(b - n)
        } else {
            BasisKind::Root(b - RANK)
        }
    }

    /// Basis index of the root vector for root number `r`.
    pub fn root_basis(&self, r: usize) -> usize {
        if r < self.roots.num_positive() {
            r
        } else {
            r + RANK
        }
    }

    pub fn root_basis_of(&self, v: &RootVec) -> Option<usize> {
        self.roots.index_of(v).map(|r| self.root_basis(r))
    }

    pub fn cartan_basis(&self, i: usize) -> usize {
        self.roots.num_positive() + i
    }

    /// Root of a root-vector basis index.
    pub fn root_of_basis(&self, b: usize) -> Option<RootVec> {
        match self.kind(b) {
            BasisKind::Root(r) => Some(self.roots.roots[r]),
            BasisKind::Cartan(_) => None,
        }
    }

    /// Human-readable basis label, e.g. `x[0,1,1,1,0,0,0,0]` or `h3`.
    pub fn label(&self, b: usize) -> String {
        match self.kind(b) {
            BasisKind::Root(r) => {
                let v = self.roots.roots[r];
                format!("x[{}]", v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
            }
            BasisKind::Cartan(i) => format!("h{}", i + 1),
        }
    }

    /// Bracket of two basis vectors.
    pub fn basis_bracket(&self, a: usize, b: usize) -> &[(u16, i8)] {
        &self.table[a * DIM + b]
    }

    pub fn bracket(&self, x: &LieElem, y: &LieElem) -> LieElem {
        let mut acc = vec![GaussRat::ZERO; DIM];
        let mut touched = [false; DIM];
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                let entries = &self.table[a * DIM + b];
                if entries.is_empty() {
                    continue;
                }
                let p = ca * cb;
                for &(t, c) in entries {
                    let t = t as usize;
                    let term = if c == 1 {
                        p.clone()
                    } else if c == -1 {
                        -&p
                    } else {
                        &p * &GaussRat::int(c as i64)
                    };
                    acc[t] += term;
                    touched[t] = true;
                }
            }
        }
        SparseVec::from_sorted(
            (0..DIM).filter(|&t| touched[t]).map(|t| (t, std::mem::take(&mut acc[t]))).collect(),
        )
    }

    /// Adjoint operator of `x`, stored by columns.
    pub fn ad(&self, x: &LieElem) -> AdOp {
        let cols = (0..DIM).map(|b| self.bracket(x, &SparseVec::unit(b))).collect();
        AdOp { cols }
    }

    /// Matrix of `ad x` in the Chevalley basis.
    pub fn ad_matrix(&self, x: &LieElem) -> SparseMatrix {
        SparseMatrix::from_cols(DIM, &self.ad(x).cols)
    }

    fn compute_killing_pairs(&self) -> HashMap<(usize, usize), GaussRat> {
        // tr(ad a ad b) is nonzero only when the weights of a and b cancel.
        let mut out = HashMap::new();
        let n = self.roots.num_positive();
        let mut candidates = Vec::new();
        for r in 0..self.roots.roots.len() {
            candidates.push((self.root_basis(r), self.root_basis(self.roots.negative_of(r))));
        }
        for i in 0..RANK {
            for j in 0..RANK {
                candidates.push((n + i, n + j));
            }
        }
        for (a, b) in candidates {
            let mut tr = 0i64;
            for c in 0..DIM {
                for &(t, c1) in &self.table[b * DIM + c] {
                    for &(u, c2) in &self.table[a * DIM + t as usize] {
                        if u as usize == c {
                            tr += c1 as i64 * c2 as i64;
                        }
                    }
                }
            }
            if tr != 0 {
                out.insert((a, b), GaussRat::int(tr));
            }
        }
        out
    }

    /// Killing form `tr(ad x ad y)`.
    pub fn killing(&self, x: &LieElem, y: &LieElem) -> GaussRat {
        let mut s = GaussRat::ZERO;
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                if let Some(k) = self.killing_pairs.get(&(a, b)) {
                    s += &(ca * cb) * k;
                }
            }
        }
        s
    }
}

impl Default for E8 {
    fn default() -> Self {
        E8::new()
    }
}

/// `(root r, alpha_i)`, i.e. `<r, alpha_i^vee>` in the simply laced case.
fn pairing(rs: &RootSystem, r: usize, i: usize) -> i32 {
    let mut e = [0i8; RANK];
    e[i] = 1;
    rs.inner(&rs.roots[r], &e)
}

/// A linear operator given by the images of the basis vectors.
#[derive(Clone, Debug)]
pub struct AdOp {
    pub cols: Vec<SparseVec>,
}

impl AdOp {
    pub fn from_cols(cols: Vec<SparseVec>) -> AdOp {
        AdOp { cols }
    }

    pub fn to_matrix(&self, nrows: usize) -> SparseMatrix {
        SparseMatrix::from_cols(nrows, &self.cols)
    }
}

impl LinearOp for AdOp {
    fn dim(&self) -> usize {
        self.cols.len()
    }
    fn apply(&self, v: &SparseVec) -> SparseVec {
        let n = self.cols.len();
        let mut acc = vec![GaussRat::ZERO; n];
        let mut touched = vec![false; n];
        for (j, c) in v.iter() {
            for (i, m) in self.cols[j].iter() {
                acc[i] += c * m;
                touched[i] = true;
            }
        }
        SparseVec::from_sorted((0..n).filter(|&i| touched[i]).map(|i| (i, std::mem::take(&mut acc[i]))).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn e(i: usize) -> LieElem {
        SparseVec::unit(i)
    }

    #[test]
    fn antisymmetry_and_jacobi_on_samples() {
        let g = E8::new();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let (a, b, c) = (rng.gen_range(0..DIM), rng.gen_range(0..DIM), rng.gen_range(0..DIM));
            assert_eq!(g.bracket(&e(a), &e(b)), g.bracket(&e(b), &e(a)).neg());
            let j = g
                .bracket(&e(a), &g.bracket(&e(b), &e(c)))
                .add(&g.bracket(&e(b), &g.bracket(&e(c), &e(a))))
                .add(&g.bracket(&e(c), &g.bracket(&e(a), &e(b))));
            assert!(j.is_zero(), "Jacobi fails on {a} {b} {c}");
        }
    }

    /// `ad e_i` and `ad f_i` are derivations on every pair of basis
    /// vectors.  These generate the algebra, so this proves the Jacobi
    /// identity.
    #[test]
    fn generators_act_by_derivations() {
        let g = E8::new();
        for i in 0..RANK {
            let mut v = [0i8; RANK];
            v[i] = 1;
            let r = g.roots.index_of(&v).unwrap();
            for a in [g.root_basis(r), g.root_basis(g.roots.negative_of(r))] {
                for b in 0..DIM {
                    for c in b + 1..DIM {
                        let lhs = g.bracket(&e(a), &g.bracket(&e(b), &e(c)));
                        let rhs = g
                            .bracket(&g.bracket(&e(a), &e(b)), &e(c))
                            .add(&g.bracket(&e(b), &g.bracket(&e(a), &e(c))));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn chevalley_relations() {
        let g = E8::new();
        for r in 0..g.roots.roots.len() {
            let x = e(g.root_basis(r));
            let y = e(g.root_basis(g.roots.negative_of(r)));
            let h = g.bracket(&x, &y);
            assert_eq!(g.bracket(&h, &x), x.scale(&GaussRat::int(2)));
        }
    }

    #[test]
    fn killing_is_sixty_times_inner_product() {
        let g = E8::new();
        for i in 0..RANK {
            for j in 0..RANK {
                let k = g.killing(&e(g.cartan_basis(i)), &e(g.cartan_basis(j)));
                assert_eq!(k, GaussRat::int(60 * g.roots.cartan[i][j] as i64));
            }
        }
        // Invariance on a few random triples.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let (a, b, c) = (e(rng.gen_range(0..DIM)), e(rng.gen_range(0..DIM)), e(rng.gen_range(0..DIM)));
            assert_eq!(g.killing(&g.bracket(&a, &b), &c), g.killing(&a, &g.bracket(&b, &c)));
        }
    }
}
