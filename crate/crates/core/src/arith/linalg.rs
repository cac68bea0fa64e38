//! Sparse exact linear algebra over the Gaussian rationals.

use std::collections::BTreeMap;
use std::fmt;

use super::gauss::GaussRat;

/// Sparse vector with entries sorted by index and no stored zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, GaussRat)>,
}

impl SparseVec {
    pub fn new() -> SparseVec {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> SparseVec {
        SparseVec { entries: vec![(i, GaussRat::ONE)] }
    }

    pub fn single(i: usize, c: GaussRat) -> SparseVec {
        if c.is_zero() {
            SparseVec::new()
        } else {
            SparseVec { entries: vec![(i, c)] }
        }
    }

    /// Builds from unsorted pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (usize, GaussRat)>>(pairs: I) -> SparseVec {
        let mut map: BTreeMap<usize, GaussRat> = BTreeMap::new();
        for (i, c) in pairs {
            *map.entry(i).or_default() += c;
        }
        SparseVec { entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Builds from entries already sorted by strictly increasing index.
    pub fn from_sorted(entries: Vec<(usize, GaussRat)>) -> SparseVec {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        SparseVec { entries: entries.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn from_dense(v: &[GaussRat]) -> SparseVec {
        SparseVec {
            entries: v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect(),
        }
    }

    pub fn to_dense(&self, n: usize) -> Vec<GaussRat> {
        let mut out = vec![GaussRat::ZERO; n];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &GaussRat)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn entries(&self) -> &[(usize, GaussRat)] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> GaussRat {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => GaussRat::ZERO,
        }
    }

    pub fn get_ref(&self, i: usize) -> Option<&GaussRat> {
        self.entries.binary_search_by_key(&i, |e| e.0).ok().map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &GaussRat)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    pub fn scale(&self, c: &GaussRat) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect() }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect() }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &SparseVec, c: &GaussRat) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + &(y * c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &GaussRat::ONE)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &GaussRat::int(-1))
    }

    /// Bilinear dot product (no conjugation).
    pub fn dot(&self, other: &SparseVec) -> GaussRat {
        let mut acc = GaussRat::ZERO;
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            let (i, x) = &self.entries[a];
            let (j, y) = &other.entries[b];
            if i < j {
                a += 1;
            } else if j < i {
                b += 1;
            } else {
                acc += x * y;
                a += 1;
                b += 1;
            }
        }
        acc
    }

    /// Divides by the first nonzero coordinate.
    pub fn normalized(&self) -> SparseVec {
        match self.leading() {
            Some((_, c)) if !c.is_one() => {
                let inv = c.inv();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    /// Reindexes entries through `f`, dropping those mapped to `None`.
    pub fn remap(&self, f: impl Fn(usize) -> Option<usize>) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().filter_map(|(i, c)| f(*i).map(|j| (j, c.clone()))))
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter().map(|(i, c)| (i, c))).finish()
    }
}

/// Linear operator on a finite-dimensional coordinate space.
pub trait LinearOp {
    fn dim(&self) -> usize;
    fn apply(&self, v: &SparseVec) -> SparseVec;
}

/// Row-major sparse matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> SparseMatrix {
        SparseMatrix { nrows, ncols, rows: vec![SparseVec::new(); nrows] }
    }

    pub fn identity(n: usize) -> SparseMatrix {
        SparseMatrix { nrows: n, ncols: n, rows: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_rows(ncols: usize, rows: Vec<SparseVec>) -> SparseMatrix {
        SparseMatrix { nrows: rows.len(), ncols, rows }
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_cols(nrows: usize, cols: &[SparseVec]) -> SparseMatrix {
        let mut pairs: Vec<Vec<(usize, GaussRat)>> = vec![Vec::new(); nrows];
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter() {
                pairs[i].push((j, v.clone()));
            }
        }
        SparseMatrix { nrows, ncols: cols.len(), rows: pairs.into_iter().map(SparseVec::from_sorted).collect() }
    }

    pub fn from_triplets(nrows: usize, ncols: usize, t: impl IntoIterator<Item = (usize, usize, GaussRat)>) -> SparseMatrix {
        let mut pairs: Vec<Vec<(usize, GaussRat)>> = vec![Vec::new(); nrows];
        for (i, j, v) in t {
            pairs[i].push((j, v));
        }
        SparseMatrix { nrows, ncols, rows: pairs.into_iter().map(SparseVec::from_pairs).collect() }
    }

    pub fn from_dense(m: &[Vec<GaussRat>]) -> SparseMatrix {
        let ncols = m.first().map_or(0, |r| r.len());
        SparseMatrix { nrows: m.len(), ncols, rows: m.iter().map(|r| SparseVec::from_dense(r)).collect() }
    }

    pub fn to_dense(&self) -> Vec<Vec<GaussRat>> {
        self.rows.iter().map(|r| r.to_dense(self.ncols)).collect()
    }

    pub fn get(&self, i: usize, j: usize) -> GaussRat {
        self.rows[i].get(j)
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix::from_cols(self.ncols, &self.rows)
    }

    pub fn col(&self, j: usize) -> SparseVec {
        SparseVec::from_sorted(
            self.rows.iter().enumerate().filter_map(|(i, r)| r.get_ref(j).map(|c| (i, c.clone()))).collect(),
        )
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_sorted(
            self.rows.iter().enumerate().map(|(i, r)| (i, r.dot(v))).filter(|(_, c)| !c.is_zero()).collect(),
        )
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows);
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = SparseVec::new();
                for (k, c) in r.iter() {
                    acc = acc.add_scaled(&other.rows[k], c);
                }
                acc
            })
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: other.ncols, rows }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.add(b)).collect();
        SparseMatrix { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.sub(b)).collect();
        SparseMatrix { nrows: self.nrows, ncols: self.ncols, rows }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn scale(&self, c: &GaussRat) -> SparseMatrix {
        SparseMatrix { nrows: self.nrows, ncols: self.ncols, rows: self.rows.iter().map(|r| r.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_zero())
    }

    pub fn trace(&self) -> GaussRat {
        let mut t = GaussRat::ZERO;
        for (i, r) in self.rows.iter().enumerate() {
            if let Some(c) = r.get_ref(i) {
                t += c;
            }
        }
        t
    }

    pub fn rank(&self) -> usize {
        rref(self).rank()
    }
}

impl LinearOp for SparseMatrix {
    fn dim(&self) -> usize {
        self.ncols
    }
    fn apply(&self, v: &SparseVec) -> SparseVec {
        self.mul_vec(v)
    }
}

/// Fully reduced row echelon basis of a subspace, built incrementally.
///
/// Every stored row has a leading 1 at its pivot and zeros at all other
/// pivots, so the sorted rows are exactly the RREF of anything spanning the
/// same space.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon { rows: BTreeMap::new() }
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a SparseVec>>(vs: I) -> Echelon {
        let mut e = Echelon::new();
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    pub fn rows(&self) -> Vec<SparseVec> {
        self.rows.values().cloned().collect()
    }

    pub fn row_for_pivot(&self, p: usize) -> Option<&SparseVec> {
        self.rows.get(&p)
    }

    /// Remainder of `v` after subtracting its components along the pivots.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (p, c) in v.iter() {
            if let Some(row) = self.rows.get(&p) {
                out = out.add_scaled(row, &(-c));
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((p, c)) = r.leading() else { return false };
        let r = r.scale(&c.inv());
        for row in self.rows.values_mut() {
            if let Some(c) = row.get_ref(p) {
                let c = -c;
                *row = row.add_scaled(&r, &c);
            }
        }
        self.rows.insert(p, r);
        true
    }

    /// Coordinates of `v` with respect to the echelon rows (keyed by pivot),
    /// or `None` if `v` is outside the span.
    pub fn coords(&self, v: &SparseVec) -> Option<Vec<(usize, GaussRat)>> {
        if !self.contains(v) {
            return None;
        }
        Some(v.iter().filter(|(p, _)| self.rows.contains_key(p)).map(|(p, c)| (p, c.clone())).collect())
    }
}

/// Reduced row echelon form of a matrix.
#[derive(Clone, Debug)]
pub struct Rref {
    pub ncols: usize,
    pub rows: Vec<SparseVec>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn rref(m: &SparseMatrix) -> Rref {
    let mut e = Echelon::new();
    for r in &m.rows {
        e.insert(r);
    }
    Rref { ncols: m.ncols, pivots: e.pivots(), rows: e.rows() }
}

/// Basis of the null space of `m`, each vector scaled so that its first
/// nonzero coordinate is 1, ordered by the free column that generated it.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    kernel_from_rref(&rref(m))
}

pub fn kernel_from_rref(r: &Rref) -> Vec<SparseVec> {
    let pivot_set: std::collections::HashSet<usize> = r.pivots.iter().copied().collect();
    let mut by_col: Vec<Vec<(usize, GaussRat)>> = vec![Vec::new(); r.ncols];
    for (row, &p) in r.rows.iter().zip(&r.pivots) {
        for (j, c) in row.iter() {
            if j != p {
                by_col[j].push((p, -c));
            }
        }
    }
    let mut out = Vec::new();
    for f in 0..r.ncols {
        if pivot_set.contains(&f) {
            continue;
        }
        let mut pairs = std::mem::take(&mut by_col[f]);
        pairs.push((f, GaussRat::ONE));
        out.push(SparseVec::from_pairs(pairs).normalized());
    }
    out
}

/// Solves `m x = b`; returns one solution (free variables set to zero).
pub fn solve(m: &SparseMatrix, b: &SparseVec) -> Option<SparseVec> {
    let n = m.ncols;
    let mut e = Echelon::new();
    for (i, row) in m.rows.iter().enumerate() {
        let mut aug = row.clone();
        let bi = b.get(i);
        if !bi.is_zero() {
            aug = aug.add(&SparseVec::single(n, bi));
        }
        e.insert(&aug);
    }
    if e.row_for_pivot(n).is_some() {
        return None;
    }
    let mut x = Vec::new();
    for p in e.pivots() {
        let row = e.row_for_pivot(p).unwrap();
        let v = row.get(n);
        if !v.is_zero() {
            x.push((p, v));
        }
    }
    Some(SparseVec::from_pairs(x))
}

/// Solves `m x = b` together with the full solution space of the
/// homogeneous system.
pub fn solve_affine(m: &SparseMatrix, b: &SparseVec) -> Option<(SparseVec, Vec<SparseVec>)> {
    let x = solve(m, b)?;
    Some((x, kernel_basis(m)))
}

/// Inverse of a square matrix, if invertible.
pub fn invert(m: &SparseMatrix) -> Option<SparseMatrix> {
    let n = m.nrows;
    assert_eq!(n, m.ncols);
    let mut e = Echelon::new();
    for (i, row) in m.rows.iter().enumerate() {
        let aug = row.add(&SparseVec::unit(n + i));
        e.insert(&aug);
    }
    if e.pivots().iter().take(n).copied().ne(0..n) {
        return None;
    }
    let rows = (0..n)
        .map(|p| e.row_for_pivot(p).unwrap().remap(|j| j.checked_sub(n)))
        .collect::<Vec<_>>();
    Some(SparseMatrix::from_rows(n, rows))
}

/// Dense determinant by fraction-aware Gaussian elimination.
pub fn determinant(m: &[Vec<GaussRat>]) -> GaussRat {
    let n = m.len();
    let mut a: Vec<Vec<GaussRat>> = m.to_vec();
    let mut det = GaussRat::ONE;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else { return GaussRat::ZERO };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det = &det * &piv;
        let inv = piv.inv();
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] * &inv;
            for k in c..n {
                let t = &a[c][k] * &f;
                a[r][k] -= t;
            }
        }
    }
    det
}

/// Intersection of two subspaces given by spanning sets.
pub fn intersect(a: &[SparseVec], b: &[SparseVec]) -> Vec<SparseVec> {
    // Solve sum x_i a_i - sum y_j b_j = 0, keep sum x_i a_i.
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let n = a.iter().chain(b).filter_map(|v| v.max_index()).max().map_or(0, |m| m + 1);
    let mut cols: Vec<SparseVec> = a.to_vec();
    cols.extend(b.iter().map(|v| v.neg()));
    let m = SparseMatrix::from_cols(n, &cols);
    let mut e = Echelon::new();
    for k in kernel_basis(&m) {
        let mut v = SparseVec::new();
        for (i, c) in k.iter() {
            if i < a.len() {
                v = v.add_scaled(&a[i], c);
            }
        }
        e.insert(&v);
    }
    e.rows()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g;
    use crate::arith::Rat;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|&x| GaussRat::int(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn rref_small() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 7], &[1, 2, 4]]);
        let r = rref(&m);
        assert_eq!(r.pivots, vec![0, 2]);
        assert_eq!(r.rows[0], SparseVec::from_dense(&[g!(1), g!(2), g!(0)]));
        let k = kernel_basis(&m);
        assert_eq!(k, vec![SparseVec::from_dense(&[g!(1), -g!(1/2), g!(0)])]);
    }

    #[test]
    fn inverse_complex() {
        let m = SparseMatrix::from_dense(&[vec![g!(0), g!(0, -1)], vec![g!(0, 1), g!(0)]]);
        let inv = invert(&m).unwrap();
        assert_eq!(m.mul(&inv), SparseMatrix::identity(2));
        assert!(invert(&mat(&[&[1, 2], &[2, 4]])).is_none());
    }

    fn arb_matrix() -> impl Strategy<Value = SparseMatrix> {
        (1usize..6, 1usize..7).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-3i64..4, -2i64..3), r * c).prop_map(move |v| {
                let dense: Vec<Vec<GaussRat>> =
                    (0..r).map(|i| (0..c).map(|j| GaussRat::gauss(v[i * c + j].0, v[i * c + j].1)).collect()).collect();
                SparseMatrix::from_dense(&dense)
            })
        })
    }

    proptest! {
        #[test]
        fn kernel_is_annihilated_and_complete(m in arb_matrix()) {
            let k = kernel_basis(&m);
            for v in &k {
                prop_assert!(m.mul_vec(v).is_zero());
                prop_assert!(v.leading().unwrap().1.is_one());
            }
            prop_assert_eq!(k.len() + m.rank(), m.ncols);
        }

        #[test]
        fn rref_invariant_under_row_ops(m in arb_matrix(), s in -3i64..4) {
            let mut m2 = m.clone();
            if m2.nrows >= 2 {
                let r0 = m2.rows[0].clone();
                m2.rows[1] = m2.rows[1].add_scaled(&r0, &GaussRat::new(Rat::int(s), Rat::int(1)));
                m2.rows.swap(0, 1);
            }
            let (a, b) = (rref(&m), rref(&m2));
            prop_assert_eq!(a.rows, b.rows);
        }

        #[test]
        fn determinant_matches_rank(m in arb_matrix()) {
            if m.nrows == m.ncols {
                let d = determinant(&m.to_dense());
                prop_assert_eq!(d.is_zero(), m.rank() < m.nrows);
            }
        }
    }
}
