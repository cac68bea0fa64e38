//! Finite matrix groups over `Q(i)`, enumerated by closure.

use std::collections::HashMap;
use std::fmt;

use crate::arith::{invert, kernel_basis, GaussRat, SparseMatrix, SparseVec};

/// Square matrix with canonical entries, so equality and hashing are exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    n: usize,
    e: Vec<GaussRat>,
}

impl Mat {
    pub fn identity(n: usize) -> Mat {
        let mut e = vec![GaussRat::ZERO; n * n];
        for i in 0..n {
            e[i * n + i] = GaussRat::ONE;
        }
        Mat { n, e }
    }

    pub fn scalar(n: usize, c: &GaussRat) -> Mat {
        Mat::identity(n).scale(c)
    }

    pub fn from_rows(rows: &[Vec<GaussRat>]) -> Mat {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Mat { n, e: rows.iter().flatten().cloned().collect() }
    }

    /// Rows of entries in [`GaussRat`] text syntax, e.g. `"-1/2+1/2*i"`.
    pub fn parse(rows: &[&[&str]]) -> Mat {
        Mat::from_rows(&rows.iter().map(|r| r.iter().map(|s| s.parse().expect("matrix entry")).collect()).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussRat {
        &self.e[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<GaussRat>> {
        self.e.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        let n = self.n;
        let mut e = vec![GaussRat::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.e[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &o.e[k * n + j];
                    if !b.is_zero() {
                        e[i * n + j] += a * b;
                    }
                }
            }
        }
        Mat { n, e }
    }

    pub fn scale(&self, c: &GaussRat) -> Mat {
        Mat { n: self.n, e: self.e.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, o: &Mat) -> Mat {
        Mat { n: self.n, e: self.e.iter().zip(&o.e).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        Mat { n: self.n, e: self.e.iter().zip(&o.e).map(|(a, b)| a - b).collect() }
    }

    pub fn transpose(&self) -> Mat {
        let n = self.n;
        Mat { n, e: (0..n * n).map(|k| self.e[(k % n) * n + k / n].clone()).collect() }
    }

    pub fn conj_transpose(&self) -> Mat {
        let t = self.transpose();
        Mat { n: t.n, e: t.e.iter().map(|x| x.conj()).collect() }
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(self.n)
    }

    pub fn inverse(&self) -> Option<Mat> {
        let c = self.conj_transpose();
        if self.mul(&c).is_identity() {
            return Some(c);
        }
        invert(&self.to_sparse()).map(|m| Mat::from_rows(&m.to_dense()))
    }

    pub fn apply(&self, v: &[GaussRat]) -> Vec<GaussRat> {
        (0..self.n).map(|i| (0..self.n).fold(GaussRat::ZERO, |acc, j| acc + self.get(i, j) * &v[j])).collect()
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix::from_dense(&self.rows())
    }

    /// `rank(self - 1)`.
    pub fn moved_rank(&self) -> usize {
        self.sub(&Mat::identity(self.n)).to_sparse().rank()
    }

    /// Fixed subspace `ker(self - 1)`.
    pub fn fixed_space(&self) -> Vec<SparseVec> {
        kernel_basis(&self.sub(&Mat::identity(self.n)).to_sparse())
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows().iter().map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, thiserror::Error)]
#[error("closure exceeded {0} elements")]
pub struct TooLarge(pub usize);

pub const ELEMENT_CAP: usize = 1_000_000;

/// A finite matrix group stored as its element list (identity first).
#[derive(Clone)]
pub struct MatGroup {
    pub n: usize,
    pub generators: Vec<Mat>,
    elements: Vec<Mat>,
    index: HashMap<Mat, usize>,
}

impl MatGroup {
    /// Breadth-first closure of `gens` under right multiplication.
    pub fn generate(n: usize, gens: &[Mat]) -> Result<MatGroup, TooLarge> {
        MatGroup::generate_capped(n, gens, ELEMENT_CAP)
    }

    pub fn generate_capped(n: usize, gens: &[Mat], cap: usize) -> Result<MatGroup, TooLarge> {
        let id = Mat::identity(n);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut k = 0;
        while k < elements.len() {
            for s in gens {
                let y = elements[k].mul(s);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(TooLarge(cap));
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            k += 1;
        }
        Ok(MatGroup { n, generators: gens.to_vec(), elements, index })
    }

    /// A group from an element list already known to be closed.
    pub fn from_elements(n: usize, generators: Vec<Mat>, elements: Vec<Mat>) -> MatGroup {
        let index = elements.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
        MatGroup { n, generators, elements, index }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn contains(&self, m: &Mat) -> bool {
        self.index.contains_key(m)
    }

    pub fn index_of(&self, m: &Mat) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Same element set.
    pub fn same_elements(&self, other: &MatGroup) -> bool {
        self.order() == other.order() && other.elements.iter().all(|m| self.contains(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_closures() {
        let s1 = Mat::parse(&[&["-1", "0"], &["0", "1"]]);
        assert_eq!(MatGroup::generate(2, &[]).unwrap().order(), 1);
        assert_eq!(MatGroup::generate(2, std::slice::from_ref(&s1)).unwrap().order(), 2);
        let r = Mat::parse(&[&["0", "-1"], &["1", "0"]]);
        assert_eq!(MatGroup::generate(2, &[s1, r]).unwrap().order(), 8);
        let i = Mat::parse(&[&["i"]]);
        assert_eq!(MatGroup::generate(1, &[i]).unwrap().order(), 4);
    }

    #[test]
    fn infinite_order_is_caught() {
        let t = Mat::parse(&[&["1", "1"], &["0", "1"]]);
        assert!(MatGroup::generate_capped(2, &[t], 1000).is_err());
    }

    #[test]
    fn inverse_of_non_unitary() {
        let m = Mat::parse(&[&["1", "0"], &["1", "-1"]]);
        assert!(m.mul(&m.inverse().unwrap()).is_identity());
        let u = Mat::parse(&[&["0", "-i"], &["i", "0"]]);
        assert_eq!(u.inverse().unwrap(), u);
    }
}
