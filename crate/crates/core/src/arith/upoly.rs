//! Univariate polynomials over the Gaussian rationals and minimal
//! polynomials of linear operators.

use std::fmt;

use super::gauss::GaussRat;
use super::linalg::{LinearOp, SparseVec};

/// Dense polynomial, coefficients from low to high degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<GaussRat>,
}

impl UPoly {
    pub fn from_coeffs(mut coeffs: Vec<GaussRat>) -> UPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> UPoly {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UPoly {
        UPoly { coeffs: vec![GaussRat::ONE] }
    }

    pub fn constant(c: GaussRat) -> UPoly {
        UPoly::from_coeffs(vec![c])
    }

    /// The monomial `t^k`.
    pub fn monomial(k: usize) -> UPoly {
        let mut c = vec![GaussRat::ZERO; k + 1];
        c[k] = GaussRat::ONE;
        UPoly { coeffs: c }
    }

    /// `t - a`.
    pub fn linear_root(a: &GaussRat) -> UPoly {
        UPoly { coeffs: vec![-a, GaussRat::ONE] }
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussRat {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> GaussRat {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv();
        UPoly { coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
    }

    pub fn scale(&self, c: &GaussRat) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::from_coeffs((0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::from_coeffs((0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![GaussRat::ZERO; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(c)
    }

    /// Quotient and remainder.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(sd) = self.degree() else { return (UPoly::zero(), UPoly::zero()) };
        if sd < dd {
            return (UPoly::zero(), self.clone());
        }
        let inv = d.lead().inv();
        let mut r = self.coeffs.clone();
        let mut q = vec![GaussRat::ZERO; sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * b;
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UPoly::from_coeffs(q), UPoly::from_coeffs(r))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.divrem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn lcm(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let g = self.gcd(o);
        self.mul(&o.divrem(&g).0).monic()
    }

    /// Extended Euclid: `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn xgcd(&self, o: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        let inv = r0.lead().inv();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::from_coeffs(
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * &GaussRat::int(k as i64)).collect(),
        )
    }

    pub fn eval(&self, x: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `gcd(p, p') == 1`.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Squarefree part `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> UPoly {
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    /// Yun's decomposition: `p = c * prod_k f_k^k` with `f_k` squarefree and
    /// pairwise coprime; returns `(k, f_k)` for nonconstant `f_k`.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, UPoly)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let d = f.derivative();
        let a0 = f.gcd(&d);
        let mut b = f.divrem(&a0).0;
        let mut c = d.divrem(&a0).0;
        let mut dd = c.sub(&b.derivative());
        let mut k = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((k, a.clone()));
            }
            b = b.divrem(&a).0;
            c = dd.divrem(&a).0;
            dd = c.sub(&b.derivative());
            k += 1;
        }
        out
    }

    /// Applies `p(A)` to `v` by Horner's scheme.
    pub fn apply_to<A: LinearOp + ?Sized>(&self, a: &A, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for c in self.coeffs.iter().rev() {
            acc = a.apply(&acc).add_scaled(v, c);
        }
        acc
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.looks_negative();
            let c_abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if mono.is_empty() {
                write!(f, "{c_abs}")?;
            } else if c_abs.is_one() {
                write!(f, "{mono}")?;
            } else if c_abs.is_compound() {
                write!(f, "({c_abs})*{mono}")?;
            } else {
                write!(f, "{c_abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Minimal polynomial of the vector `v` under `a`: the monic polynomial of
/// least degree with `p(A) v = 0`.  Also returns the Krylov vectors
/// `v, Av, ..., A^{d-1} v`.
pub fn vector_min_poly<A: LinearOp + ?Sized>(a: &A, v: &SparseVec) -> (UPoly, Vec<SparseVec>) {
    if v.is_zero() {
        return (UPoly::one(), Vec::new());
    }
    // Reduced Krylov vectors paired with the polynomial that produced them.
    let mut basis: Vec<(usize, SparseVec, Vec<GaussRat>)> = Vec::new();
    let mut krylov = Vec::new();
    let mut w = v.clone();
    let mut k = 0;
    loop {
        krylov.push(w.clone());
        let mut r = w.clone();
        let mut combo = vec![GaussRat::ZERO; k + 1];
        combo[k] = GaussRat::ONE;
        for (p, row, c) in &basis {
            let Some(x) = r.get_ref(*p) else { continue };
            let f = -x;
            r = r.add_scaled(row, &f);
            for (j, cj) in c.iter().enumerate() {
                combo[j] += &f * cj;
            }
        }
        match r.leading() {
            None => {
                krylov.pop();
                return (UPoly::from_coeffs(combo), krylov);
            }
            Some((p, lead)) => {
                let inv = lead.inv();
                let row = r.scale(&inv);
                let c: Vec<GaussRat> = combo.iter().map(|x| x * &inv).collect();
                basis.push((p, row, c));
            }
        }
        w = a.apply(&w);
        k += 1;
    }
}

/// Minimal polynomial of a linear operator, as the lcm of the vector
/// minimal polynomials of the standard basis.
pub fn min_poly<A: LinearOp + ?Sized>(a: &A) -> UPoly {
    let n = a.dim();
    let mut m = UPoly::one();
    let mut span = super::linalg::Echelon::new();
    for j in 0..n {
        let e = SparseVec::unit(j);
        if span.contains(&e) {
            continue;
        }
        let w = m.apply_to(a, &e);
        if !w.is_zero() {
            let (mu, _) = vector_min_poly(a, &w);
            m = m.mul(&mu);
        }
        // The cyclic space of e is A-stable and killed by m.
        let mut x = e;
        while span.insert(&x) {
            x = a.apply(&x);
        }
    }
    m
}

/// Characteristic polynomial of a dense square matrix (Faddeev-LeVerrier).
pub fn charpoly(m: &[Vec<GaussRat>]) -> UPoly {
    let n = m.len();
    let mut c = vec![GaussRat::ZERO; n + 1];
    c[n] = GaussRat::ONE;
    let mut mk = vec![vec![GaussRat::ZERO; n]; n];
    for k in 1..=n {
        // M_k = A * M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![GaussRat::ZERO; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = GaussRat::ZERO;
                for l in 0..n {
                    s += &m[i][l] * &mk[l][j];
                }
                next[i][j] = s;
            }
            next[i][i] += &c[n - k + 1];
        }
        mk = next;
        let mut tr = GaussRat::ZERO;
        for i in 0..n {
            for l in 0..n {
                tr += &m[i][l] * &mk[l][i];
            }
        }
        c[n - k] = &(-tr) / &GaussRat::int(k as i64);
    }
    UPoly::from_coeffs(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::SparseMatrix;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_coeffs(c.iter().map(|&x| GaussRat::int(x)).collect())
    }

    #[test]
    fn gcd_and_squarefree() {
        // (t-1)^2 (t+2)
        let f = p(&[2, -3, 0, 1]);
        assert!(!f.is_squarefree());
        assert_eq!(f.squarefree_part(), p(&[-2, 1, 1]));
        assert_eq!(f.squarefree_decomposition(), vec![(1, p(&[2, 1])), (2, p(&[-1, 1]))]);
        // t^2 + 1 is squarefree over Q(i) and splits there.
        let g = p(&[1, 0, 1]);
        assert!(g.is_squarefree());
        assert!(g.eval(&GaussRat::I).is_zero());
    }

    #[test]
    fn min_poly_jordan_block() {
        // diag(J_2(3), 3, -1): minimal polynomial (t-3)^2 (t+1)
        let m = SparseMatrix::from_dense(
            &[[3, 1, 0, 0], [0, 3, 0, 0], [0, 0, 3, 0], [0, 0, 0, -1]]
                .iter()
                .map(|r| r.iter().map(|&x| GaussRat::int(x)).collect())
                .collect::<Vec<_>>(),
        );
        let mp = min_poly(&m);
        assert_eq!(mp, p(&[-3, 1]).mul(&p(&[-3, 1])).mul(&p(&[1, 1])));
    }

    proptest! {
        #[test]
        fn divrem_identity(a in proptest::collection::vec(-5i64..6, 0..7), b in proptest::collection::vec(-5i64..6, 1..5)) {
            let (a, b) = (p(&a), p(&b));
            if !b.is_zero() {
                let (q, r) = a.divrem(&b);
                prop_assert_eq!(q.mul(&b).add(&r), a.clone());
                prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
                let (g, s, t) = a.xgcd(&b);
                prop_assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
            }
        }

        #[test]
        fn min_poly_annihilates(v in proptest::collection::vec(-2i64..3, 16)) {
            let dense: Vec<Vec<GaussRat>> = (0..4).map(|i| (0..4).map(|j| GaussRat::int(v[4*i+j])).collect()).collect();
            let m = SparseMatrix::from_dense(&dense);
            let mp = min_poly(&m);
            for j in 0..4 {
                prop_assert!(mp.apply_to(&m, &SparseVec::unit(j)).is_zero());
            }
            // Minimality: I, A, ..., A^{d-1} are linearly independent.
            let d = mp.degree().unwrap();
            let mut powers = crate::arith::Echelon::new();
            let mut pk = SparseMatrix::identity(4);
            for _ in 0..d {
                let flat = SparseVec::from_pairs(pk.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, c)| (4 * i + j, c.clone()))));
                prop_assert!(powers.insert(&flat));
                pk = pk.mul(&m);
            }
            // Characteristic polynomial is a multiple of the minimal polynomial.
            let cp = super::charpoly(&dense);
            prop_assert!(cp.rem(&mp).is_zero());
        }
    }
}
