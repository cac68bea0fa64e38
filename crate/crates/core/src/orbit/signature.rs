//! Structure of subalgebras of `g_0`: semisimple type of the Levi
//! quotient, and the toral and nilpotent parts of the radical.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{kernel_basis, min_poly_of, Echelon, GaussRat, Rat, SparseMatrix, SparseVec, UPoly};
use crate::e8::algebra::{LieElem, E8};
use crate::e8::roots::{format_type, SimpleType};
use crate::reflgroup::Mat;

use super::jordan::jordan;
use super::subspace::{centralizer_of_all, combine, eigenspace, span};

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CentralizerSignature {
    #[serde(serialize_with = "serialize_types")]
    pub semisimple: Vec<SimpleType>,
    pub toral_dim: usize,
    pub nilpotent_dim: usize,
}

fn serialize_types<S: serde::Serializer>(t: &[SimpleType], s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_type(t))
}

pub fn simple_dim(t: &SimpleType) -> usize {
    let n = t.rank;
    match t.family {
        'A' => n * (n + 2),
        'B' | 'C' => n * (2 * n + 1),
        'D' => n * (2 * n - 1),
        'G' => 14,
        'F' => 52,
        'E' => [78, 133, 248][n - 6],
        _ => unreachable!("unknown family"),
    }
}

impl CentralizerSignature {
    pub fn dim(&self) -> usize {
        self.semisimple.iter().map(simple_dim).sum::<usize>() + self.toral_dim + self.nilpotent_dim
    }

    /// Parses `2A1+t2+u3`, `A1+T3`, `0`.
    pub fn parse(s: &str) -> Option<CentralizerSignature> {
        let mut out = CentralizerSignature { semisimple: Vec::new(), toral_dim: 0, nilpotent_dim: 0 };
        if s.trim() == "0" {
            return Some(out);
        }
        for part in s.split('+') {
            let part = part.trim();
            let lead = part.find(|c: char| !c.is_ascii_digit())?;
            let mult: usize = if lead == 0 { 1 } else { part[..lead].parse().ok()? };
            let fam = part[lead..].chars().next()?;
            let n: usize = part[lead + 1..].parse().ok()?;
            match fam {
                't' | 'T' => out.toral_dim += mult * n,
                'u' => out.nilpotent_dim += mult * n,
                'A' | 'B' | 'C' | 'D' | 'E' | 'F' | 'G' => {
                    out.semisimple.extend(std::iter::repeat_n(SimpleType { family: fam, rank: n }, mult))
                }
                _ => return None,
            }
        }
        out.semisimple.sort();
        Some(out)
    }
}

impl fmt::Display for CentralizerSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.semisimple.is_empty() {
            parts.push(format_type(&self.semisimple));
        }
        if self.toral_dim > 0 {
            parts.push(format!("t{}", self.toral_dim));
        }
        if self.nilpotent_dim > 0 {
            parts.push(format!("u{}", self.nilpotent_dim));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SignatureError {
    #[error("basis does not span a subalgebra")]
    NotClosed,
    #[error("semisimple block of dimension {dim} and rank {rank} matches {candidates} types")]
    Ambiguous { dim: usize, rank: usize, candidates: usize },
}

/// A subalgebra with a basis and its structure constants.
struct Structure {
    basis: Vec<LieElem>,
    /// `ad[i]` is the matrix of `ad b_i` in the basis.
    ad: Vec<Mat>,
}

impl Structure {
    fn new(e8: &E8, basis: Vec<LieElem>) -> Result<Structure, SignatureError> {
        let d = basis.len();
        let ech = Echelon::from_vectors(&basis);
        let pivots = ech.pivots();
        // `span` returns echelon rows, so coordinates are read off at the pivots.
        let as_rows = ech.rows();
        debug_assert_eq!(as_rows, basis);
        let mut ad = Vec::with_capacity(d);
        for x in &basis {
            let mut cols = Vec::with_capacity(d);
            for y in &basis {
                let z = e8.bracket(x, y);
                if !ech.contains(&z) {
                    return Err(SignatureError::NotClosed);
                }
                cols.push(pivots.iter().map(|&p| z.get(p)).collect::<Vec<_>>());
            }
            let rows: Vec<Vec<GaussRat>> = (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect();
            ad.push(Mat::from_rows(&rows));
        }
        Ok(Structure { basis, ad })
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn ad_of(&self, c: &[GaussRat]) -> Mat {
        let d = self.dim();
        let mut m = Mat::scalar(d, &GaussRat::ZERO);
        for (a, ci) in self.ad.iter().zip(c) {
            if !ci.is_zero() {
                m = m.add(&a.scale(ci));
            }
        }
        m
    }

    fn killing(&self) -> Vec<Vec<GaussRat>> {
        let d = self.dim();
        (0..d).map(|i| (0..d).map(|j| trace_product(&self.ad[i], &self.ad[j])).collect()).collect()
    }
}

fn trace_product(a: &Mat, b: &Mat) -> GaussRat {
    let n = a.dim();
    let mut acc = GaussRat::ZERO;
    for k in 0..n {
        for l in 0..n {
            let x = a.get(k, l);
            if !x.is_zero() {
                let y = b.get(l, k);
                if !y.is_zero() {
                    acc += x * y;
                }
            }
        }
    }
    acc
}

fn random_coeffs(rng: &mut ChaCha8Rng, n: usize) -> Vec<GaussRat> {
    (0..n).map(|_| GaussRat::int(rng.gen_range(-9..=9))).collect()
}

fn mat_vec(m: &Mat, v: &[GaussRat]) -> Vec<GaussRat> {
    m.apply(v)
}

/// Structure signature of the subalgebra spanned by `z`.
pub fn signature(e8: &E8, z: &[LieElem], seed: u64) -> Result<CentralizerSignature, SignatureError> {
    let basis = span(z);
    let d = basis.len();
    if d == 0 {
        return Ok(CentralizerSignature { semisimple: Vec::new(), toral_dim: 0, nilpotent_dim: 0 });
    }
    let st = Structure::new(e8, basis)?;
    let kappa = st.killing();
    // [z, z] in coordinates.
    let mut derived = Echelon::new();
    for a in &st.ad {
        for j in 0..d {
            derived.insert(&SparseVec::from_dense(&(0..d).map(|i| a.get(i, j).clone()).collect::<Vec<_>>()));
        }
    }
    // Radical: Killing-orthogonal complement of [z, z].
    let rows: Vec<SparseVec> = derived
        .rows()
        .iter()
        .map(|v| SparseVec::from_dense(&(0..d).map(|j| v.iter().fold(GaussRat::ZERO, |acc, (i, c)| acc + c * &kappa[i][j])).collect::<Vec<_>>()))
        .collect();
    let radical = kernel_basis(&SparseMatrix::from_rows(d, rows));
    let radical_elems: Vec<LieElem> = radical.iter().map(|c| combine(&st.basis, c)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let toral_dim = (0..2).map(|_| toral_rank(e8, &radical_elems, &mut rng)).max().unwrap_or(0);
    let semisimple = levi_type(e8, &st, &derived, &radical, &mut rng)?;
    Ok(CentralizerSignature { semisimple, toral_dim, nilpotent_dim: radical.len() - toral_dim })
}

/// Dimension of a maximal torus of a solvable algebraic subalgebra `r`:
/// for generic `y` in `r` with semisimple part `s`, the semisimple parts of
/// the centre of `z_r(s)` span a maximal torus.
fn toral_rank(e8: &E8, r: &[LieElem], rng: &mut ChaCha8Rng) -> usize {
    if r.is_empty() {
        return 0;
    }
    let y = combine(r, &SparseVec::from_dense(&random_coeffs(rng, r.len())));
    let Ok(j) = jordan(e8, &y) else { return 0 };
    let l = if j.semisimple.is_zero() { r.to_vec() } else { super::subspace::centralizer_in(e8, &j.semisimple, r) };
    let center = centralizer_of_all(e8, &l, &l);
    let parts: Vec<LieElem> = center.iter().filter_map(|c| jordan(e8, c).ok().map(|j| j.semisimple)).collect();
    Echelon::from_vectors(&parts).rank()
}

/// Semisimple type of `z / radical`.
fn levi_type(
    e8: &E8,
    st: &Structure,
    derived: &Echelon,
    radical: &[SparseVec],
    rng: &mut ChaCha8Rng,
) -> Result<Vec<SimpleType>, SignatureError> {
    let d = st.dim();
    // Quotient basis from [z, z], so every representative lies in s + n.
    let mut ech = Echelon::from_vectors(radical);
    let mut q_basis = Vec::new();
    for v in derived.rows() {
        if ech.insert(&v) {
            q_basis.push(v);
        }
    }
    let m = q_basis.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let mut cols: Vec<Vec<GaussRat>> = q_basis.iter().map(|v| v.to_dense(d)).collect();
    cols.extend(radical.iter().map(|v| v.to_dense(d)));
    let change = Mat::from_rows(&(0..d).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect::<Vec<_>>());
    let inv = change.inverse().expect("quotient basis with radical spans z");
    let project = |v: &[GaussRat]| -> Vec<GaussRat> { mat_vec(&inv, v)[..m].to_vec() };
    // Quotient structure: ad_Q(q_a) q_b.
    let q_ad: Vec<Mat> = q_basis
        .iter()
        .map(|qa| {
            let a = st.ad_of(&qa.to_dense(d));
            let cols: Vec<Vec<GaussRat>> = q_basis.iter().map(|qb| project(&mat_vec(&a, &qb.to_dense(d)))).collect();
            Mat::from_rows(&(0..m).map(|i| (0..m).map(|j| cols[j][i].clone()).collect()).collect::<Vec<_>>())
        })
        .collect();
    let kappa_q: Vec<Vec<GaussRat>> = (0..m).map(|a| (0..m).map(|b| trace_product(&q_ad[a], &q_ad[b])).collect()).collect();
    let reps: Vec<LieElem> = q_basis.iter().map(|c| combine(&st.basis, c)).collect();
    let beta: Vec<Vec<GaussRat>> = (0..m).map(|a| (0..m).map(|b| e8.killing(&reps[a], &reps[b])).collect()).collect();
    // The ratio of the two invariant forms lies in the centroid; its
    // eigenspaces are sums of simple ideals.
    let t = Mat::from_rows(&kappa_q).inverse().expect("Killing form of a semisimple quotient").mul(&Mat::from_rows(&beta));
    let mu = min_poly_of(&t.to_sparse());
    let mut blocks: Vec<Vec<SparseVec>> = Vec::new();
    let mut rest = mu.clone();
    for c in rational_roots(&mu) {
        blocks.push(kernel_basis(&t.sub(&Mat::scalar(m, &c)).to_sparse()));
        rest = rest.divrem(&UPoly::linear_root(&c)).0;
    }
    if rest.degree().unwrap_or(0) > 0 {
        blocks.push(kernel_basis(&poly_of_mat(&rest, &t).to_sparse()));
    }
    let mut out = Vec::new();
    for block in blocks {
        let dim = block.len();
        let rank = (0..2).map(|_| block_rank(&q_ad, &block, m, rng)).min().unwrap();
        let cands = semisimple_types(dim, rank);
        if cands.len() != 1 {
            return Err(SignatureError::Ambiguous { dim, rank, candidates: cands.len() });
        }
        out.extend(cands.into_iter().next().unwrap());
    }
    out.sort();
    Ok(out)
}

fn poly_of_mat(p: &UPoly, t: &Mat) -> Mat {
    let n = t.dim();
    let mut acc = Mat::scalar(n, &GaussRat::ZERO);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(t).add(&Mat::scalar(n, c));
    }
    acc
}

/// Rank of the semisimple ideal spanned by `block` (coordinates in the
/// quotient): nullity of a high power of `ad x` for a random `x` in it.
fn block_rank(q_ad: &[Mat], block: &[SparseVec], m: usize, rng: &mut ChaCha8Rng) -> usize {
    let k = block.len();
    let coeffs = random_coeffs(rng, k);
    let mut x = vec![GaussRat::ZERO; m];
    for (b, c) in block.iter().zip(&coeffs) {
        for (i, v) in b.iter() {
            x[i] += v * c;
        }
    }
    let mut a = Mat::scalar(m, &GaussRat::ZERO);
    for (ai, xi) in q_ad.iter().zip(&x) {
        if !xi.is_zero() {
            a = a.add(&ai.scale(xi));
        }
    }
    // Restrict to the ideal: express images in the block basis.
    let cols: Vec<SparseVec> = block.to_vec();
    let basis_m = SparseMatrix::from_cols(m, &cols);
    let mut r_cols = Vec::with_capacity(k);
    for b in block {
        let img = SparseVec::from_dense(&a.apply(&b.to_dense(m)));
        r_cols.push(crate::arith::solve(&basis_m, &img).expect("ideal is ad-stable").to_dense(k));
    }
    let mut r = Mat::from_rows(&(0..k).map(|i| (0..k).map(|j| r_cols[j][i].clone()).collect()).collect::<Vec<_>>());
    let mut power = 1;
    while power < k {
        r = r.mul(&r);
        power *= 2;
    }
    k - r.to_sparse().rank()
}

/// Semisimple types (multisets of simple types) of the given dimension and rank.
pub fn semisimple_types(dim: usize, rank: usize) -> Vec<Vec<SimpleType>> {
    let mut simples = Vec::new();
    for n in 1..=rank {
        simples.push(SimpleType { family: 'A', rank: n });
        if n >= 2 {
            simples.push(SimpleType { family: 'B', rank: n });
        }
        if n >= 3 {
            simples.push(SimpleType { family: 'C', rank: n });
        }
        if n >= 4 {
            simples.push(SimpleType { family: 'D', rank: n });
        }
        if (6..=8).contains(&n) {
            simples.push(SimpleType { family: 'E', rank: n });
        }
        if n == 4 {
            simples.push(SimpleType { family: 'F', rank: 4 });
        }
        if n == 2 {
            simples.push(SimpleType { family: 'G', rank: 2 });
        }
    }
    let mut out = Vec::new();
    fn go(simples: &[SimpleType], start: usize, dim: usize, rank: usize, cur: &mut Vec<SimpleType>, out: &mut Vec<Vec<SimpleType>>) {
        if dim == 0 && rank == 0 {
            out.push(cur.clone());
            return;
        }
        for k in start..simples.len() {
            let t = simples[k].clone();
            let (td, tr) = (simple_dim(&t), t.rank);
            if td <= dim && tr <= rank {
                cur.push(t);
                go(simples, k, dim - td, rank - tr, cur, out);
                cur.pop();
            }
        }
    }
    go(&simples, 0, dim, rank, &mut Vec::new(), &mut out);
    for t in out.iter_mut() {
        t.sort();
    }
    out
}

/// Roots in `Q(i)` of a polynomial: candidates from complex floating-point
/// root finding, kept only when they are exact roots.
fn rational_roots(p: &UPoly) -> Vec<GaussRat> {
    let Some(n) = p.degree() else { return Vec::new() };
    if n == 0 {
        return Vec::new();
    }
    let lead = p.lead().to_f64_pair();
    let coeffs: Vec<(f64, f64)> = p.coeffs().iter().map(|c| cdiv(c.to_f64_pair(), lead)).collect();
    let eval = |z: (f64, f64)| coeffs.iter().rev().fold((0.0, 0.0), |acc, &c| cadd(cmul(acc, z), c));
    // Durand-Kerner iteration.
    let mut zs: Vec<(f64, f64)> = (0..n).map(|k| cpow((0.4, 0.9), k as u32)).collect();
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = (1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den = cmul(den, csub(zs[i], zs[j]));
                }
            }
            let step = cdiv(eval(zs[i]), den);
            zs[i] = csub(zs[i], step);
            delta = delta.max(step.0.abs() + step.1.abs());
        }
        if delta < 1e-14 {
            break;
        }
    }
    let mut out: Vec<GaussRat> = Vec::new();
    for z in zs {
        let c = GaussRat::new(approximate(z.0), approximate(z.1));
        if p.eval(&c).is_zero() && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Nearest fraction with denominator at most 10^4 (continued fractions).
fn approximate(x: f64) -> Rat {
    let (mut h0, mut h1, mut k0, mut k1) = (0i64, 1i64, 1i64, 0i64);
    let mut r = x;
    for _ in 0..40 {
        let a = r.floor();
        let (h2, k2) = (a as i64 * h1 + h0, a as i64 * k1 + k0);
        if k2 > 10_000 {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = r - a;
        if frac.abs() < 1e-9 {
            break;
        }
        r = 1.0 / frac;
    }
    Rat::new(h1, k1)
}

fn cadd(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 + b.0, a.1 + b.1)
}
fn csub(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 - b.0, a.1 - b.1)
}
fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}
fn cdiv(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let n = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / n, (a.1 * b.0 - a.0 * b.1) / n)
}
fn cpow(a: (f64, f64), k: u32) -> (f64, f64) {
    (0..k).fold((1.0, 0.0), |acc, _| cmul(acc, a))
}

/// Signature of `z` read off from the grading by a neutral element `h`
/// normalizing it with nonnegative eigenvalues: the zero eigenspace is
/// reductive, the positive part is the nilpotent ideal.
pub fn graded_signature(e8: &E8, z: &[LieElem], h: &LieElem, seed: u64) -> Result<CentralizerSignature, SignatureError> {
    let z = span(z);
    let levi = eigenspace(e8, h, &GaussRat::ZERO, &z);
    let center = centralizer_of_all(e8, &levi, &levi);
    let derived = super::subspace::bracket_span(e8, &levi, &levi);
    let semisimple = signature(e8, &derived, seed)?.semisimple;
    Ok(CentralizerSignature { semisimple, toral_dim: center.len(), nilpotent_dim: z.len() - levi.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::fixture::setup;
    use crate::orbit::sl2::{sl2_complete, Ambient};
    use crate::orbit::subspace::{centralizer_in, component_basis};

    #[test]
    fn parse_and_display() {
        for s in ["2A1+t2+u3", "0", "A1", "t3+u1", "A1+t2+u3", "u2"] {
            assert_eq!(CentralizerSignature::parse(s).unwrap().to_string(), s);
        }
        let t = CentralizerSignature::parse("2A1+A2+T1").unwrap();
        assert_eq!((t.dim(), t.toral_dim, t.to_string()), (15, 1, "2A1+A2+t1".to_string()));
        assert_eq!(CentralizerSignature::parse("D5+A3").unwrap().dim(), 60);
        assert!(CentralizerSignature::parse("2X1").is_none());
    }

    #[test]
    fn type_enumeration() {
        let a2 = SimpleType { family: 'A', rank: 2 };
        let a1 = SimpleType { family: 'A', rank: 1 };
        assert_eq!(semisimple_types(8, 2), vec![vec![a2.clone()]]);
        assert_eq!(semisimple_types(6, 2), vec![vec![a1.clone(), a1]]);
        // B2 and C2 are the same type; B3 and C3 share (dim, rank).
        assert_eq!(semisimple_types(10, 2).len(), 1);
        assert_eq!(semisimple_types(21, 3).len(), 2);
        assert_eq!(semisimple_types(248, 8), vec![vec![SimpleType { family: 'E', rank: 8 }]]);
    }

    #[test]
    fn roots_over_gaussian_rationals() {
        let p = [GaussRat::int(2), GaussRat::new(Rat::new(1, 3), Rat::int(-1)), GaussRat::ratio(-5, 7)]
            .iter()
            .fold(UPoly::one(), |acc, c| acc.mul(&UPoly::linear_root(c)));
        let mut r = rational_roots(&p);
        r.sort_by_key(|c| c.to_string());
        assert_eq!(r.len(), 3);
        // x^2 + 2 has no root in Q(i).
        let q = UPoly::from_coeffs(vec![GaussRat::int(2), GaussRat::ZERO, GaussRat::ONE]);
        assert!(rational_roots(&q).is_empty());
    }

    #[test]
    fn centralizers_of_cartan_points() {
        let s = setup();
        let e8 = &s.g.e8;
        let g0 = component_basis(&s.g, 0);
        let k = centralizer_in(e8, &s.p[0], &g0);
        assert_eq!(signature(e8, &k, 1).unwrap().to_string(), "2A1+A2+t1");
        assert_eq!(signature(e8, &g0, 1).unwrap().to_string(), "D5+A3");
        assert_eq!(signature(e8, &[], 1).unwrap().to_string(), "0");
        let c = [1, 2, 5, 11].map(GaussRat::int);
        assert_eq!(crate::reflgroup::shared().stratum_of(&c), Ok(1));
        let h = centralizer_in(e8, &crate::orbit::mixed::point_of(&s.p, &c), &g0);
        assert_eq!(signature(e8, &h, 1).unwrap().to_string(), "0");
    }

    #[test]
    fn borel_subalgebra_of_sl2() {
        let s = setup();
        let e8 = &s.g.e8;
        let b = vec![SparseVec::unit(0), SparseVec::unit(e8.cartan_basis(0))];
        let sig = signature(e8, &b, 3).unwrap();
        assert_eq!((sig.toral_dim, sig.nilpotent_dim, sig.semisimple.len()), (1, 1, 0));
    }

    #[test]
    fn not_closed_is_reported() {
        let s = setup();
        let x = vec![SparseVec::unit(0), SparseVec::unit(128)];
        assert_eq!(signature(&s.g.e8, &x, 1), Err(SignatureError::NotClosed));
    }

    #[test]
    fn both_routes_on_table8_row1() {
        let s = setup();
        let e8 = &s.g.e8;
        let amb = Ambient::centralizer(&s.g, &s.p[0]);
        let e = s.elem("(1,4)x1");
        let t = sl2_complete(e8, &e, &amb).unwrap();
        let z = centralizer_in(e8, &s.p[0].add(&e), &component_basis(&s.g, 0));
        let want = CentralizerSignature::parse("2A1+t2+u3").unwrap();
        let got = signature(e8, &z, 1).unwrap();
        assert_eq!(got, want);
        assert_eq!(graded_signature(e8, &z, &t.h, 1).unwrap(), want);
        assert_eq!(got.dim(), z.len());
    }
}
