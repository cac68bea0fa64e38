//! Polynomial invariants of the little Weyl group on the Cartan subspace:
//! Klein quadrics, Maschke quartics and the fundamental invariants built
//! from them.

use crate::arith::{hessian, invert, poly_determinant, var_names, GaussRat, MultiPoly, SparseMatrix};
use crate::reflgroup::generators;
use crate::tables::{
    HESSIAN_SCALE, QUADRICS, QUADRIC_ACTION, QUARTICS, QUARTIC_ACTION, Z_BASIS_SCALED, Z_CHANGE_SCALED, Z_QUADRICS,
    Z_QUARTICS,
};

#[derive(Clone, Debug)]
pub struct InvariantCatalog {
    pub q: Vec<MultiPoly>,
    pub a: Vec<MultiPoly>,
    pub f8: MultiPoly,
    pub f12: MultiPoly,
    pub f20: MultiPoly,
    pub f24: MultiPoly,
    pub pi20: MultiPoly,
    pub pi24: MultiPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ActionError {
    #[error("s{k} sends Q{i} to no multiple of a listed quadric")]
    NotProportional { k: usize, i: usize },
    #[error("s{k} sends A{i} to {scalar} times A{target}")]
    NonUnitScalar { k: usize, i: usize, target: usize, scalar: GaussRat },
    #[error("s{k} sends A{i} to no listed quartic")]
    NotPermuted { k: usize, i: usize },
}

fn parse_all(src: &[&str], vars: &[String]) -> Vec<MultiPoly> {
    src.iter().map(|s| MultiPoly::parse(s, vars).expect("tabulated polynomial")).collect()
}

/// Elementary symmetric functions `sigma_0..sigma_n` of `ps`.
pub fn elementary_symmetric(ps: &[MultiPoly], vars: &[String]) -> Vec<MultiPoly> {
    let mut e = vec![MultiPoly::constant(vars, GaussRat::ONE)];
    for p in ps {
        let mut next = e.clone();
        next.push(MultiPoly::zero(vars));
        for k in 1..next.len() {
            next[k] = next[k].add(&e[k - 1].mul(p));
        }
        e = next;
    }
    e
}

fn product(ps: &[MultiPoly], vars: &[String]) -> MultiPoly {
    ps.iter().fold(MultiPoly::constant(vars, GaussRat::ONE), |acc, p| acc.mul(p))
}

fn reflection_rows() -> Vec<Vec<Vec<GaussRat>>> {
    generators().iter().map(|g| g.rows()).collect()
}

impl InvariantCatalog {
    pub fn build() -> InvariantCatalog {
        let x = var_names("x", 4);
        let q = parse_all(&QUADRICS, &x);
        let a = parse_all(&QUARTICS, &x);
        let sigma = elementary_symmetric(&a, &x);
        let f8 = sigma[2].scale(&GaussRat::ratio(-1, 6));
        let f12 = sigma[3].scale(&GaussRat::ratio(-1, 4));
        let f20 = sigma[5].scale(&GaussRat::ratio(1, 12));
        let f24 = poly_determinant(&hessian(&f8)).scale(&GaussRat::ratio(1, HESSIAN_SCALE));
        let pi20 = product(&q, &x);
        let pi24 = sigma[6].clone();
        InvariantCatalog { q, a, f8, f12, f20, f24, pi20, pi24 }
    }

    /// `(j, c)` with `Q_i(s_k x) = c Q_j(x)`.
    pub fn action_on_quadric(&self, k: usize, i: usize) -> Result<(usize, GaussRat), ActionError> {
        let image = self.q[i - 1].substitute(&reflection_rows()[k - 1]);
        self.q
            .iter()
            .enumerate()
            .find_map(|(j, qj)| image.scalar_multiple_of(qj).map(|c| (j + 1, c)))
            .ok_or(ActionError::NotProportional { k, i })
    }

    /// `j` with `A_i(s_k x) = A_j(x)`.
    pub fn action_on_quartic(&self, k: usize, i: usize) -> Result<usize, ActionError> {
        let image = self.a[i - 1].substitute(&reflection_rows()[k - 1]);
        for (j, aj) in self.a.iter().enumerate() {
            if let Some(c) = image.scalar_multiple_of(aj) {
                if !c.is_one() {
                    return Err(ActionError::NonUnitScalar { k, i, target: j + 1, scalar: c });
                }
                return Ok(j + 1);
            }
        }
        Err(ActionError::NotPermuted { k, i })
    }

    /// Cells of both action tables that disagree with the printed ones, as
    /// `(kind, k, i)`.
    pub fn action_table_mismatches(&self) -> Vec<(char, usize, usize)> {
        let mut bad = Vec::new();
        for i in 1..=10 {
            for k in 1..=5 {
                let (j, c) = QUADRIC_ACTION[i - 1][k - 1];
                let c: GaussRat = c.parse().expect("tabulated scalar");
                if self.action_on_quadric(k, i) != Ok((j, c)) {
                    bad.push(('Q', k, i));
                }
            }
        }
        for i in 1..=6 {
            for k in 1..=5 {
                if self.action_on_quartic(k, i) != Ok(QUARTIC_ACTION[i - 1][k - 1]) {
                    bad.push(('A', k, i));
                }
            }
        }
        bad
    }

    pub fn is_invariant(p: &MultiPoly) -> bool {
        reflection_rows().iter().all(|m| p.substitute(m) == *p)
    }

    pub fn verify_identities(&self) -> IdentityReport {
        let x = self.f8.vars().to_vec();
        let f20 = self.f20 == self.f8.mul(&self.f12).add(&self.pi20.scale(&GaussRat::int(81)));
        let rhs24 = self.pi24.sub(&self.f12.pow(2).scale(&GaussRat::int(4)));
        let f24_ratio = self.f24.scalar_multiple_of(&rhs24);
        let f24 = f24_ratio.as_ref().is_some_and(|c| c.is_one());
        let zero_sum = self.a.iter().fold(MultiPoly::zero(&x), |acc, p| acc.add(p)).is_zero();
        let invariant = [("F8", &self.f8), ("F12", &self.f12), ("Pi20", &self.pi20), ("Pi24", &self.pi24)]
            .iter()
            .map(|(n, p)| (n.to_string(), Self::is_invariant(p)))
            .collect();
        IdentityReport { f20, f24, f24_ratio, zero_sum, invariant }
    }

    /// Rank of the Jacobian of `F8, F12, Pi20, Pi24` at `point`.
    pub fn jacobian_rank(&self, point: &[GaussRat]) -> usize {
        let rows: Vec<Vec<GaussRat>> = [&self.f8, &self.f12, &self.pi20, &self.pi24]
            .iter()
            .map(|f| (0..4).map(|j| f.derivative(j).eval(point)).collect())
            .collect();
        SparseMatrix::from_dense(&rows).rank()
    }

    pub fn named(&self) -> Vec<(String, &MultiPoly)> {
        let mut out: Vec<(String, &MultiPoly)> = Vec::new();
        out.extend(self.q.iter().enumerate().map(|(k, p)| (format!("Q{}", k + 1), p)));
        out.extend(self.a.iter().enumerate().map(|(k, p)| (format!("A{}", k + 1), p)));
        for (n, p) in [
            ("F8", &self.f8),
            ("F12", &self.f12),
            ("F20", &self.f20),
            ("F24", &self.f24),
            ("Pi20", &self.pi20),
            ("Pi24", &self.pi24),
        ] {
            out.push((n.to_string(), p));
        }
        out
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct IdentityReport {
    /// `F20 = F8 F12 + 81 Pi20`.
    pub f20: bool,
    /// `F24 = Pi24 - 4 F12^2`.
    pub f24: bool,
    /// `c` with `F24 = c (Pi24 - 4 F12^2)`, if proportional.
    pub f24_ratio: Option<GaussRat>,
    pub zero_sum: bool,
    pub invariant: Vec<(String, bool)>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.f20 && self.f24 && self.zero_sum && self.invariant.iter().all(|(_, b)| *b)
    }
}

fn parse_matrix(rows: &[[&str; 4]; 4]) -> Vec<Vec<GaussRat>> {
    rows.iter().map(|r| r.iter().map(|s| s.parse().expect("tabulated entry")).collect()).collect()
}

/// The quadrics and quartics rewritten in `z1..z4`.
///
/// With `z = L x` and `sqrt 2 L = K` over `Q(i)`, `x = sqrt 2 K^-1 z`, so a
/// form of even degree `d` becomes `2^(d/2) p(K^-1 z)` and no square root
/// is needed.
#[derive(Clone, Debug)]
pub struct ZForms {
    pub q: Vec<MultiPoly>,
    pub a: Vec<MultiPoly>,
    /// `2 K^-1`, whose column `j` is `sqrt 2` times the basis vector dual
    /// to `z_j`.
    pub dual_basis_scaled: Vec<Vec<GaussRat>>,
}

pub fn z_basis_forms(cat: &InvariantCatalog) -> ZForms {
    let z = var_names("z", 4);
    let kinv = invert(&SparseMatrix::from_dense(&parse_matrix(&Z_CHANGE_SCALED))).expect("invertible change").to_dense();
    let forms: Vec<MultiPoly> = kinv.iter().map(|row| MultiPoly::linear(&z, row)).collect();
    let rewrite = |p: &MultiPoly| {
        let d = p.total_degree().unwrap_or(0);
        assert!(d.is_multiple_of(2), "odd degree would need sqrt 2");
        p.compose(&forms, &z).scale(&GaussRat::int(1 << (d / 2)))
    };
    let two = GaussRat::int(2);
    ZForms {
        q: cat.q.iter().map(rewrite).collect(),
        a: cat.a.iter().map(rewrite).collect(),
        dual_basis_scaled: kinv.iter().map(|r| r.iter().map(|c| c * &two).collect()).collect(),
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ZReport {
    /// Indices (1-based) of quadrics differing from their printed z-form.
    pub quadric_mismatches: Vec<usize>,
    pub quartic_mismatches: Vec<usize>,
    /// `c_i` with computed `Q_i = c_i` times the printed z-form, if
    /// proportional.
    pub quadric_scalars: Vec<Option<GaussRat>>,
    /// `perm[j] = k`: the printed `j`-th basis vector is dual to `z_{k+1}`.
    pub basis_order: Option<Vec<usize>>,
}

impl ZReport {
    pub fn forms_match(&self) -> bool {
        self.quadric_mismatches.is_empty() && self.quartic_mismatches.is_empty()
    }
}

pub fn verify_z_forms(cat: &InvariantCatalog) -> ZReport {
    let zf = z_basis_forms(cat);
    let zv = var_names("z", 4);
    let mismatches = |got: &[MultiPoly], printed: &[&str]| -> Vec<usize> {
        got.iter().zip(parse_all(printed, &zv)).enumerate().filter(|(_, (g, p))| *g != p).map(|(k, _)| k + 1).collect()
    };
    let printed = parse_matrix(&Z_BASIS_SCALED);
    let column = |k: usize| -> Vec<GaussRat> { zf.dual_basis_scaled.iter().map(|r| r[k].clone()).collect() };
    let perm: Vec<Option<usize>> = printed.iter().map(|b| (0..4).find(|&k| column(k) == *b)).collect();
    let quadric_scalars = zf.q.iter().zip(parse_all(&Z_QUADRICS, &zv)).map(|(g, p)| g.scalar_multiple_of(&p)).collect();
    ZReport {
        quadric_mismatches: mismatches(&zf.q, &Z_QUADRICS),
        quadric_scalars,
        quartic_mismatches: mismatches(&zf.a, &Z_QUARTICS),
        basis_order: perm.into_iter().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use std::sync::OnceLock;

    fn cat() -> &'static InvariantCatalog {
        static C: OnceLock<InvariantCatalog> = OnceLock::new();
        C.get_or_init(InvariantCatalog::build)
    }

    #[test]
    fn degrees() {
        let c = cat();
        assert!(c.q.iter().all(|p| p.is_homogeneous() && p.total_degree() == Some(2)));
        assert!(c.a.iter().all(|p| p.is_homogeneous() && p.total_degree() == Some(4)));
        for (p, d) in [(&c.f8, 8), (&c.f12, 12), (&c.f20, 20), (&c.f24, 24), (&c.pi20, 20), (&c.pi24, 24)] {
            assert!(p.is_homogeneous());
            assert_eq!(p.total_degree(), Some(d));
        }
        let x = var_names("x", 4);
        assert_eq!(c.q[6], MultiPoly::parse("x1^2+x2^2+2x3x4", &x).unwrap());
        assert!(elementary_symmetric(&c.a, &x)[1].is_zero());
    }

    #[test]
    fn quadric_action_examples() {
        let c = cat();
        assert_eq!(c.action_on_quadric(2, 1), Ok((2, GaussRat::I)));
        assert_eq!(c.action_on_quadric(5, 8), Ok((6, GaussRat::gauss(-1, 1))));
        assert_eq!(c.action_on_quadric(1, 3), Ok((3, GaussRat::ONE)));
        assert_eq!(c.action_on_quartic(4, 1), Ok(4));
        assert_eq!(c.action_on_quartic(5, 2), Ok(6));
        assert_eq!(c.action_on_quartic(3, 3), Ok(3));
    }

    /// `s1 = diag(-1, 1, 1, 1)` flips the sign of `x1 x2`, so it swaps
    /// `Q8` and `-Q10`; the printed table has both fixed.
    #[test]
    fn action_tables_match_except_s1_on_q8_q10() {
        let c = cat();
        assert_eq!(c.action_table_mismatches(), vec![('Q', 1, 8), ('Q', 1, 10)]);
        assert_eq!(c.action_on_quadric(1, 8), Ok((10, -GaussRat::ONE)));
        assert_eq!(c.action_on_quadric(1, 10), Ok((8, -GaussRat::ONE)));
    }

    #[test]
    fn non_quadric_is_rejected() {
        let mut c = cat().clone();
        c.q[6] = MultiPoly::parse("x1^2", &var_names("x", 4)).unwrap();
        assert_eq!(c.action_on_quadric(3, 7), Err(ActionError::NotProportional { k: 3, i: 7 }));
    }

    #[test]
    fn identities_hold() {
        let r = cat().verify_identities();
        assert!(r.f20 && r.zero_sum, "{r:?}");
        assert!(r.invariant.iter().all(|(_, b)| *b), "{r:?}");
        // With the tabulated Hessian scale the degree 24 identity is off by
        // an exact factor.
        assert!(!r.f24);
        assert_eq!(r.f24_ratio, Some(GaussRat::ratio(1, 15552)));
        let x = var_names("x", 4);
        let c = cat();
        let lhs = c.a[4].add(&c.a[5]);
        let rhs = c.a[..4].iter().fold(MultiPoly::zero(&x), |acc, p| acc.add(p)).scale(&GaussRat::int(-1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn fundamental_invariants_are_independent() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let point: Vec<GaussRat> = (0..4).map(|_| GaussRat::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect();
        assert_eq!(cat().jacobian_rank(&point), 4);
        // At the origin every gradient vanishes.
        assert_eq!(cat().jacobian_rank(&[GaussRat::ZERO; 4]), 0);
    }

    #[test]
    fn z_forms_match() {
        let r = verify_z_forms(cat());
        assert!(r.quartic_mismatches.is_empty());
        // Q1..Q6 agree with the printed z-forms only up to these scalars.
        let scalars: Vec<GaussRat> = ["1+i", "-1+i", "-2i", "-2i", "1+i", "-1+i", "1", "1", "1", "1"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(r.quadric_scalars, scalars.into_iter().map(Some).collect::<Vec<_>>());
        assert_eq!(r.quadric_mismatches, vec![1, 2, 3, 4, 5, 6]);
        // The printed basis lists the vectors dual to z4 and z2 in swapped
        // positions.
        assert_eq!(r.basis_order, Some(vec![0, 3, 2, 1]));
        let zf = z_basis_forms(cat());
        let z = var_names("z", 4);
        let sum = zf.a[4].add(&zf.a[5]);
        assert_eq!(sum, MultiPoly::parse("-4(z1^4+z2^4+z3^4+z4^4)", &z).unwrap());
    }
}
