//! Polynomial descriptions of the open strata `c_{M_i}^o`.
//!
//! On `c_{M_i}` each reflection hyperplane of `W0` not containing
//! `c_{M_i}` restricts to a linear form.  A list of polynomials describes
//! `c_{M_i}^o` exactly when every listed polynomial is a product of
//! distinct restricted forms and every restricted form divides one of them.

use crate::arith::{var_names, GaussRat, MultiPoly};
use crate::tables::{STRATUM_POLYNOMIALS, TABLE1};

use super::w0::{normalize, row_basis, W0};

/// Distinct restricted hyperplane forms on `c_{M_i}`, normalized.
pub fn restricted_forms(w: &W0, i: usize) -> Vec<Vec<GaussRat>> {
    let basis = row_basis(&TABLE1[i - 1]);
    let mut out: Vec<Vec<GaussRat>> = Vec::new();
    for r in &w.reflections {
        let form: Vec<GaussRat> =
            basis.iter().map(|b| r.covector.iter().zip(b).fold(GaussRat::ZERO, |acc, (x, y)| acc + x * y)).collect();
        if form.iter().all(|c| c.is_zero()) {
            continue;
        }
        let f = normalize(&form);
        if !out.contains(&f) {
            out.push(f);
        }
    }
    out
}

/// Whether the linear form divides `p`: `p` vanishes on its kernel.
pub fn linear_form_divides(form: &[GaussRat], p: &MultiPoly) -> bool {
    let n = form.len();
    let vars = p.vars().to_vec();
    let k = form.iter().position(|c| !c.is_zero()).expect("nonzero form");
    let inv = form[k].inv();
    let forms: Vec<MultiPoly> = (0..n)
        .map(|j| {
            if j == k {
                let coeffs: Vec<GaussRat> =
                    (0..n).map(|m| if m == k { GaussRat::ZERO } else { -(&form[m] * &inv) }).collect();
                MultiPoly::linear(&vars, &coeffs)
            } else {
                MultiPoly::var(&vars, j)
            }
        })
        .collect();
    p.compose(&forms, &vars).is_zero()
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct PolyFactorCheck {
    pub polynomial: String,
    pub degree: u32,
    /// Number of distinct restricted forms dividing it.
    pub factors: usize,
}

impl PolyFactorCheck {
    pub fn splits(&self) -> bool {
        self.factors as u32 == self.degree
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct StratumPolyReport {
    pub index: usize,
    pub restricted_forms: usize,
    pub polynomials: Vec<PolyFactorCheck>,
    /// Restricted forms dividing none of the listed polynomials.
    pub uncovered: usize,
}

impl StratumPolyReport {
    pub fn passed(&self) -> bool {
        self.uncovered == 0 && self.polynomials.iter().all(|p| p.splits())
    }
}

pub fn stratum_polynomials(i: usize) -> Vec<MultiPoly> {
    let d = TABLE1[i - 1].basis.len();
    let vars = var_names("x", d);
    STRATUM_POLYNOMIALS[i - 1].iter().map(|s| MultiPoly::parse(s, &vars).expect("tabulated polynomial")).collect()
}

pub fn verify_stratum_polynomials(w: &W0, i: usize) -> StratumPolyReport {
    assert!((1..=5).contains(&i), "polynomial lists exist for strata 1..5");
    let forms = restricted_forms(w, i);
    let polys = stratum_polynomials(i);
    let divides: Vec<Vec<bool>> = polys.iter().map(|p| forms.iter().map(|f| linear_form_divides(f, p)).collect()).collect();
    let polynomials = polys
        .iter()
        .zip(&divides)
        .map(|(p, d)| PolyFactorCheck {
            polynomial: p.to_string(),
            degree: if p.is_homogeneous() { p.total_degree().unwrap_or(0) } else { u32::MAX },
            factors: d.iter().filter(|&&b| b).count(),
        })
        .collect();
    let uncovered = (0..forms.len()).filter(|&k| !divides.iter().any(|d| d[k])).count();
    StratumPolyReport { index: i, restricted_forms: forms.len(), polynomials, uncovered }
}
