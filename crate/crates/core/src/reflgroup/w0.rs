//! The little Weyl group acting on the Cartan subspace, in the basis
//! `p_1..p_4`.

use std::collections::HashMap;

use crate::arith::{kernel_basis, solve, Echelon, GaussRat, SparseMatrix, SparseVec};
use crate::tables::{StratumRow, GAMMA_GENERATORS, PRESENTATION, PRESENTATION_RELATIONS, REFLECTIONS, TABLE1};

use super::group::{Mat, MatGroup};

/// Normalizes so the first nonzero entry is 1.
pub fn normalize(v: &[GaussRat]) -> Vec<GaussRat> {
    match v.iter().find(|c| !c.is_zero()) {
        Some(c) => {
            let inv = c.inv();
            v.iter().map(|x| x * &inv).collect()
        }
        None => v.to_vec(),
    }
}

/// A complex reflection with its root line (image of `T - 1`) and the
/// covector cutting out its fixed hyperplane.
#[derive(Clone, Debug)]
pub struct Reflection {
    pub element: Mat,
    pub root: Vec<GaussRat>,
    pub covector: Vec<GaussRat>,
}

impl Reflection {
    pub fn of(t: &Mat) -> Option<Reflection> {
        if t.moved_rank() != 1 {
            return None;
        }
        let d = t.sub(&Mat::identity(t.dim())).rows();
        let n = t.dim();
        let row = d.iter().find(|r| r.iter().any(|c| !c.is_zero()))?;
        let col_idx = (0..n).find(|&j| d.iter().any(|r| !r[j].is_zero()))?;
        let col: Vec<GaussRat> = d.iter().map(|r| r[col_idx].clone()).collect();
        Some(Reflection { element: t.clone(), root: normalize(&col), covector: normalize(row) })
    }

    pub fn order(&self) -> usize {
        let mut x = self.element.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = x.mul(&self.element);
            k += 1;
        }
        k
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("word {0:?} refers to an undefined generator")]
    Undefined(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StratumError {
    #[error("stabilizer of order {0} is not conjugate to any tabulated subgroup")]
    NoMatch(usize),
}

pub struct W0 {
    pub gens: Vec<Mat>,
    pub group: MatGroup,
    pub reflections: Vec<Reflection>,
    reflection_index: HashMap<Mat, usize>,
    table1: Vec<MatGroup>,
}

/// The five printed generators.
pub fn generators() -> Vec<Mat> {
    REFLECTIONS.iter().map(|m| Mat::parse(&m.iter().map(|r| &r[..]).collect::<Vec<_>>())).collect()
}

/// Parses a product of generators in the form `s1s5s3`.
pub fn parse_word(w: &str, gens: &[Mat]) -> Result<Mat, WordError> {
    let err = || WordError::Undefined(w.to_string());
    let body = w.trim();
    if body.is_empty() {
        return Ok(Mat::identity(gens.first().map_or(4, |g| g.dim())));
    }
    let mut out: Option<Mat> = None;
    for part in body.split('s').skip(1) {
        let k: usize = part.parse().map_err(|_| err())?;
        let g = gens.get(k.checked_sub(1).ok_or_else(err)?).ok_or_else(err)?;
        out = Some(match out {
            None => g.clone(),
            Some(m) => m.mul(g),
        });
    }
    if !body.starts_with('s') {
        return Err(err());
    }
    out.ok_or_else(err)
}

fn to_sparse_vec(v: &[GaussRat]) -> SparseVec {
    SparseVec::from_dense(v)
}

/// Columns of the basis of `c_{M_i}` from the table.
pub fn row_basis(row: &StratumRow) -> Vec<Vec<GaussRat>> {
    row.basis.iter().map(|b| b.iter().map(|&c| GaussRat::int(c)).collect()).collect()
}

pub fn same_span(a: &[SparseVec], b: &[SparseVec]) -> bool {
    let (ea, eb) = (Echelon::from_vectors(a), Echelon::from_vectors(b));
    ea.rank() == eb.rank() && b.iter().all(|v| ea.contains(v))
}

impl W0 {
    pub fn new() -> W0 {
        let gens = generators();
        let group = MatGroup::generate(4, &gens).expect("finite group");
        let reflections: Vec<Reflection> = group.elements().iter().filter_map(Reflection::of).collect();
        let reflection_index = reflections.iter().enumerate().map(|(k, r)| (r.element.clone(), k)).collect();
        let mut w = W0 { gens, group, reflections, reflection_index, table1: Vec::new() };
        w.table1 = TABLE1.iter().map(|row| w.subgroup(row.generators).expect("tabulated words")).collect();
        w
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn word(&self, w: &str) -> Result<Mat, WordError> {
        parse_word(w, &self.gens)
    }

    pub fn subgroup(&self, words: &[&str]) -> Result<MatGroup, WordError> {
        let gens = words.iter().map(|w| self.word(w)).collect::<Result<Vec<_>, _>>()?;
        Ok(MatGroup::generate(4, &gens).expect("subgroup of a finite group"))
    }

    /// The subgroups `M_1..M_9` generated by the tabulated words.
    pub fn table1(&self) -> &[MatGroup] {
        &self.table1
    }

    pub fn reflections_in<'a>(&'a self, m: &'a MatGroup) -> Vec<&'a Reflection> {
        m.elements().iter().filter_map(|e| self.reflection_index.get(e).map(|&k| &self.reflections[k])).collect()
    }

    /// Intersection of the fixed hyperplanes of the reflections in `m`.
    pub fn fixed_space(&self, m: &MatGroup) -> Vec<SparseVec> {
        let rows: Vec<SparseVec> = self.reflections_in(m).iter().map(|r| to_sparse_vec(&r.covector)).collect();
        kernel_basis(&SparseMatrix::from_rows(4, rows))
    }

    /// Point stabilizer, with its reflections as generators.
    pub fn stabilizer(&self, x: &[GaussRat]) -> MatGroup {
        let elements: Vec<Mat> = self.group.elements().iter().filter(|g| g.apply(x) == x).cloned().collect();
        let gens: Vec<Mat> =
            elements.iter().filter(|e| self.reflection_index.contains_key(*e)).cloned().collect();
        MatGroup::from_elements(4, gens, elements)
    }

    /// Whether a stabilizer is generated by the reflections it contains.
    pub fn is_reflection_subgroup(&self, m: &MatGroup) -> bool {
        let gens: Vec<Mat> = self.reflections_in(m).iter().map(|r| r.element.clone()).collect();
        MatGroup::generate(4, &gens).map(|g| g.same_elements(m)).unwrap_or(false)
    }

    fn normalizes(&self, g: &Mat, ginv: &Mat, m: &MatGroup) -> bool {
        m.generators.iter().all(|x| m.contains(&g.mul(x).mul(ginv)))
    }

    pub fn normalizer(&self, m: &MatGroup) -> MatGroup {
        let elements: Vec<Mat> = self
            .group
            .elements()
            .iter()
            .filter(|g| self.normalizes(g, &g.inverse().unwrap(), m))
            .cloned()
            .collect();
        MatGroup::from_elements(4, Vec::new(), elements)
    }

    pub fn normalizer_quotient_order(&self, m: &MatGroup) -> usize {
        self.normalizer(m).order() / m.order()
    }

    /// Some `g` with `g m g^-1 = target`.
    pub fn conjugator(&self, m: &MatGroup, target: &MatGroup) -> Option<Mat> {
        if m.order() != target.order() {
            return None;
        }
        self.group.elements().iter().find(|g| {
            let ginv = g.inverse().unwrap();
            m.generators.iter().all(|x| target.contains(&g.mul(x).mul(&ginv)))
        }).cloned()
    }

    /// The `i` (1-based) with `W_x` conjugate to `M_i`.
    pub fn stratum_of(&self, x: &[GaussRat]) -> Result<usize, StratumError> {
        let st = self.stabilizer(x);
        for (k, m) in self.table1.iter().enumerate() {
            if m.order() == st.order() && self.conjugator(m, &st).is_some() {
                return Ok(k + 1);
            }
        }
        Err(StratumError::NoMatch(st.order()))
    }

    /// Matrices of the elements of `n` restricted to the span of `basis`,
    /// which every element must preserve.
    pub fn restriction_image(&self, n: &MatGroup, basis: &[Vec<GaussRat>]) -> MatGroup {
        let d = basis.len();
        let b = SparseMatrix::from_cols(4, &basis.iter().map(|v| to_sparse_vec(v)).collect::<Vec<_>>());
        let mut seen: HashMap<Mat, ()> = HashMap::new();
        let mut out = Vec::new();
        for g in n.elements() {
            let cols: Vec<Vec<GaussRat>> = basis
                .iter()
                .map(|v| solve(&b, &to_sparse_vec(&g.apply(v))).expect("subspace is preserved").to_dense(d))
                .collect();
            // Column j holds the coordinates of g b_j.
            let rows: Vec<Vec<GaussRat>> = (0..d).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
            let r = Mat::from_rows(&rows);
            if seen.insert(r.clone(), ()).is_none() {
                out.push(r);
            }
        }
        MatGroup::from_elements(d, Vec::new(), out)
    }

    /// Compares the group generated by the printed generators of
    /// `Gamma_i` with the restriction of `N(M_i)` to `c_{M_i}`.
    pub fn gamma_check(&self, i: usize) -> GammaCheck {
        let row = &TABLE1[i - 1];
        let basis = row_basis(row);
        let n = self.normalizer(&self.table1[i - 1]);
        let image = self.restriction_image(&n, &basis);
        let printed: Vec<Mat> = match i {
            1 => self.gens.clone(),
            2..=8 => GAMMA_GENERATORS[i - 2].iter().map(|m| Mat::parse(m)).collect(),
            _ => Vec::new(),
        };
        let d = basis.len();
        // A printed group larger than the image cannot match it.
        let cap = image.order() + 1;
        let printed_group = MatGroup::generate_capped(d, &printed, cap).ok();
        let transposed: Vec<Mat> = printed.iter().map(|m| m.transpose()).collect();
        let transposed_group = MatGroup::generate_capped(d, &transposed, cap).ok();
        let convention = if printed_group.as_ref().is_some_and(|g| g.same_elements(&image)) {
            Some(MatrixConvention::Columns)
        } else if transposed_group.is_some_and(|g| g.same_elements(&image)) {
            Some(MatrixConvention::Rows)
        } else {
            None
        };
        let unitary = printed.iter().all(|m| m.mul(&m.conj_transpose()).is_identity());
        GammaCheck {
            index: i,
            normalizer_order: n.order(),
            image_order: image.order(),
            printed_order: printed_group.map(|g| g.order()),
            printed_unitary: unitary,
            convention,
        }
    }

    pub fn presentation(&self) -> PresentationReport {
        let elems: Vec<(char, Mat)> = PRESENTATION
            .iter()
            .map(|(name, word, _)| (name.chars().next().unwrap(), self.word(word).expect("printed word")))
            .collect();
        let lookup: HashMap<char, Mat> = elems.iter().cloned().collect();
        let eval = |w: &str| w.chars().fold(Mat::identity(4), |acc, c| acc.mul(&lookup[&c]));
        let involutions = elems.iter().map(|(_, m)| !m.is_identity() && m.mul(m).is_identity()).collect();
        let relations = PRESENTATION_RELATIONS.iter().map(|(a, b)| eval(a) == eval(b)).collect();
        let gens: Vec<Mat> = elems.iter().map(|(_, m)| m.clone()).collect();
        let generated = MatGroup::generate(4, &gens).map(|g| g.order()).unwrap_or(0);
        let roots = PRESENTATION
            .iter()
            .zip(&elems)
            .map(|((name, _, root), (_, m))| {
                let r: Vec<GaussRat> = root.iter().map(|s| s.parse().unwrap()).collect();
                let refl = Reflection::of(m);
                let (line, bilinear, hermitian) = match &refl {
                    Some(t) => (
                        t.root == normalize(&r),
                        t.covector == normalize(&r),
                        t.covector == normalize(&r.iter().map(|c| c.conj()).collect::<Vec<_>>()),
                    ),
                    None => (false, false, false),
                };
                RootCheck { name: name.to_string(), is_reflection: refl.is_some(), root_line: line, bilinear, hermitian }
            })
            .collect();
        PresentationReport { involutions, relations, generated_order: generated, roots }
    }
}

impl Default for W0 {
    fn default() -> Self {
        W0::new()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum MatrixConvention {
    /// Column `j` is the image of the `j`-th basis vector.
    Columns,
    /// Row `j` is the image of the `j`-th basis vector.
    Rows,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct GammaCheck {
    pub index: usize,
    pub normalizer_order: usize,
    pub image_order: usize,
    /// `None` when the printed generators generate more than the image.
    pub printed_order: Option<usize>,
    pub printed_unitary: bool,
    pub convention: Option<MatrixConvention>,
}

impl GammaCheck {
    pub fn matches_printed(&self) -> bool {
        self.convention.is_some()
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct RootCheck {
    pub name: String,
    pub is_reflection: bool,
    /// The printed vector spans the image of `T - 1`.
    pub root_line: bool,
    /// The fixed hyperplane is `{x : r^T x = 0}`.
    pub bilinear: bool,
    /// The fixed hyperplane is `{x : r^* x = 0}`.
    pub hermitian: bool,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct PresentationReport {
    pub involutions: Vec<bool>,
    pub relations: Vec<bool>,
    pub generated_order: usize,
    pub roots: Vec<RootCheck>,
}

impl PresentationReport {
    /// Pairing under which every printed root cuts out its fixed hyperplane.
    pub fn hyperplane_convention(&self) -> Option<&'static str> {
        if self.roots.iter().all(|r| r.hermitian) {
            Some("hermitian")
        } else if self.roots.iter().all(|r| r.bilinear) {
            Some("bilinear")
        } else {
            None
        }
    }

    pub fn passed(&self, group_order: usize) -> bool {
        self.involutions.iter().all(|&b| b)
            && self.relations.iter().all(|&b| b)
            && self.generated_order == group_order
            && self.roots.iter().all(|r| r.is_reflection && r.root_line)
            && self.hyperplane_convention().is_some()
    }
}
