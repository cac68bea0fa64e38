//! Basis labels `(i_1,...,i_k) x j` of `Delta_+ (x) C^4` and sparse
//! tensors over them, with the text syntax `-(3,5)x1+(1,2,4,5)x2`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::arith::GaussRat;

use super::clifford::ELL;

/// `u_{i_1} ^ ... ^ u_{i_k} (x) w_j`, stored as a bitmask of the index set.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Label {
    mask: u8,
    j: u8,
}

impl Label {
    pub fn new(indices: &[usize], j: usize) -> Result<Label, LabelError> {
        if !(1..=4).contains(&j) {
            return Err(LabelError::BadFactor(j));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) || indices.iter().any(|&i| !(1..=ELL).contains(&i)) {
            return Err(LabelError::BadIndices(indices.to_vec()));
        }
        if !indices.len().is_multiple_of(2) {
            return Err(LabelError::OddDegree(indices.to_vec()));
        }
        let mask = indices.iter().fold(0u8, |m, &i| m | (1 << (i - 1)));
        Ok(Label { mask, j: j as u8 })
    }

    pub fn from_mask(mask: usize, j: usize) -> Label {
        debug_assert!(mask < 32 && mask.count_ones().is_multiple_of(2) && (1..=4).contains(&j));
        Label { mask: mask as u8, j: j as u8 }
    }

    pub fn mask(&self) -> usize {
        self.mask as usize
    }

    pub fn indices(&self) -> Vec<usize> {
        (1..=ELL).filter(|i| self.mask & (1 << (i - 1)) != 0).collect()
    }

    pub fn factor(&self) -> usize {
        self.j as usize
    }

    /// All 64 labels in canonical order.
    pub fn all() -> Vec<Label> {
        let mut v: Vec<Label> =
            (0..32usize).filter(|m| m.count_ones() % 2 == 0).flat_map(|m| (1..=4).map(move |j| Label::from_mask(m, j))).collect();
        v.sort();
        v
    }
}

impl Ord for Label {
    /// Lexicographic on the index tuple, then on `j`.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.indices().cmp(&other.indices()).then(self.j.cmp(&other.j))
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "({})x{}", idx.join(","), self.j)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LabelError {
    #[error("tensor factor {0} is not in 1..4")]
    BadFactor(usize),
    #[error("indices {0:?} are not strictly increasing in 1..5")]
    BadIndices(Vec<usize>),
    #[error("indices {0:?} have odd length")]
    OddDegree(Vec<usize>),
    #[error("cannot parse {input:?}: {reason}")]
    Syntax { input: String, reason: String },
}

/// Sparse element of `Delta_+ (x) C^4`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SpinorTensor {
    coords: BTreeMap<Label, GaussRat>,
}

impl SpinorTensor {
    pub fn zero() -> SpinorTensor {
        SpinorTensor::default()
    }

    pub fn basis(l: Label) -> SpinorTensor {
        SpinorTensor::from_terms([(l, GaussRat::ONE)])
    }

    pub fn from_terms<I: IntoIterator<Item = (Label, GaussRat)>>(terms: I) -> SpinorTensor {
        let mut t = SpinorTensor::zero();
        for (l, c) in terms {
            t.add_term(l, &c);
        }
        t
    }

    pub fn add_term(&mut self, l: Label, c: &GaussRat) {
        let e = self.coords.entry(l).or_insert(GaussRat::ZERO);
        *e += c;
        if e.is_zero() {
            self.coords.remove(&l);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Label, &GaussRat)> {
        self.coords.iter()
    }

    pub fn support(&self) -> Vec<Label> {
        self.coords.keys().copied().collect()
    }

    pub fn coeff(&self, l: &Label) -> GaussRat {
        self.coords.get(l).cloned().unwrap_or(GaussRat::ZERO)
    }

    pub fn scale(&self, c: &GaussRat) -> SpinorTensor {
        SpinorTensor::from_terms(self.coords.iter().map(|(l, x)| (*l, x * c)))
    }

    pub fn add(&self, other: &SpinorTensor) -> SpinorTensor {
        let mut out = self.clone();
        for (l, c) in &other.coords {
            out.add_term(*l, c);
        }
        out
    }

    pub fn sub(&self, other: &SpinorTensor) -> SpinorTensor {
        self.add(&other.scale(&GaussRat::int(-1)))
    }

    pub fn parse(s: &str) -> Result<SpinorTensor, LabelError> {
        s.parse()
    }
}

impl fmt::Display for SpinorTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        for (n, (l, c)) in self.coords.iter().enumerate() {
            let (neg, mag) = if c.looks_negative() { (true, -c) } else { (false, c.clone()) };
            if neg {
                write!(f, "-")?;
            } else if n > 0 {
                write!(f, "+")?;
            }
            if mag.is_one() {
                write!(f, "{l}")?;
            } else if mag.is_compound() {
                write!(f, "({mag})*{l}")?;
            } else {
                write!(f, "{mag}*{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SpinorTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Finds the next label `(digits,...)x<digit>` at or after `from`, as a
/// byte range.
fn next_label(b: &[u8], from: usize) -> Option<(usize, usize)> {
    let skip_spaces = |mut k: usize| {
        while k < b.len() && b[k] == b' ' {
            k += 1;
        }
        k
    };
    (from..b.len()).filter(|&s| b[s] == b'(').find_map(|s| {
        let mut k = s + 1;
        while k < b.len() && (b[k].is_ascii_digit() || b[k] == b',' || b[k] == b' ') {
            k += 1;
        }
        if b.get(k) != Some(&b')') {
            return None;
        }
        let x = skip_spaces(k + 1);
        if b.get(x) != Some(&b'x') {
            return None;
        }
        let d = skip_spaces(x + 1);
        b.get(d).filter(|c| c.is_ascii_digit()).map(|_| (s, d + 1))
    })
}

fn parse_label(text: &str) -> Result<Label, LabelError> {
    let err = |reason: &str| LabelError::Syntax { input: text.to_string(), reason: reason.to_string() };
    let close = text.find(')').ok_or_else(|| err("missing ')'"))?;
    let inner = text[1..close].trim();
    let indices: Vec<usize> = if inner.is_empty() {
        Vec::new()
    } else {
        inner.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| err("bad index"))).collect::<Result<_, _>>()?
    };
    let rest = text[close + 1..].trim();
    let j: usize = rest.strip_prefix('x').ok_or_else(|| err("expected 'x'"))?.trim().parse().map_err(|_| err("bad factor"))?;
    Label::new(&indices, j)
}

fn parse_coeff(text: &str, whole: &str) -> Result<GaussRat, LabelError> {
    let err = |reason: String| LabelError::Syntax { input: whole.to_string(), reason };
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let t = t.strip_suffix('*').unwrap_or(&t);
    let t = t.strip_prefix('+').unwrap_or(t);
    match t {
        "" => Ok(GaussRat::ONE),
        "-" => Ok(GaussRat::int(-1)),
        _ => t.parse::<GaussRat>().map_err(|e| err(format!("bad coefficient {t:?}: {e}"))),
    }
}

impl FromStr for SpinorTensor {
    type Err = LabelError;

    fn from_str(s: &str) -> Result<SpinorTensor, LabelError> {
        if s.trim() == "0" {
            return Ok(SpinorTensor::zero());
        }
        let b = s.as_bytes();
        let mut out = SpinorTensor::zero();
        let mut pos = 0;
        let mut any = false;
        while let Some((start, end)) = next_label(b, pos) {
            let coeff_text = &s[pos..start];
            let coeff_trim = coeff_text.trim();
            if any && !(coeff_trim.starts_with('+') || coeff_trim.starts_with('-')) {
                return Err(LabelError::Syntax { input: s.to_string(), reason: "terms must be joined by '+' or '-'".into() });
            }
            // A bare rational may multiply a label directly, as in `-2(1,2,3,5)x1`.
            let bare = coeff_trim.trim_start_matches(['+', '-']).chars().all(|c| c.is_ascii_digit() || c == '/');
            if !coeff_trim.is_empty() && coeff_trim.len() > 1 && !coeff_trim.ends_with('*') && !bare {
                return Err(LabelError::Syntax { input: s.to_string(), reason: format!("coefficient {coeff_trim:?} must end with '*'") });
            }
            let c = parse_coeff(coeff_text, s)?;
            out.add_term(parse_label(&s[start..end])?, &c);
            pos = end;
            any = true;
        }
        if !s[pos..].trim().is_empty() {
            return Err(LabelError::Syntax { input: s.to_string(), reason: format!("unexpected trailing text {:?}", &s[pos..]) });
        }
        if !any {
            return Err(LabelError::Syntax { input: s.to_string(), reason: "no terms".into() });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sixty_four_labels() {
        let all = Label::all();
        assert_eq!(all.len(), 64);
        assert_eq!(all[0].to_string(), "()x1");
        assert!(Label::new(&[1, 2, 3], 1).is_err());
        assert!(Label::new(&[2, 1], 1).is_err());
        assert!(Label::new(&[1, 2], 5).is_err());
    }

    #[test]
    fn parse_examples() {
        let p = SpinorTensor::parse("-(3,5)x1 + (1,2,4,5)x2-(2,4)x3-(1,3)x4").unwrap();
        assert_eq!(p.to_string(), "(1,2,4,5)x2-(1,3)x4-(2,4)x3-(3,5)x1");
        assert_eq!(p.coeff(&Label::new(&[3, 5], 1).unwrap()), GaussRat::int(-1));
        assert_eq!(SpinorTensor::parse("-2(4,5)x2+(1,3)x2").unwrap(), SpinorTensor::parse("-2*(4,5)x2+(1,3)x2").unwrap());
        let q = SpinorTensor::parse("2*()x2 + 1/2*(1,2)x1 - (1+i)*(4,5)x4 + 3/4-1/2*i*(1,5)x3 -1/2+i*(1,2)x2").unwrap();
        assert_eq!(q.coeff(&Label::new(&[1, 2], 2).unwrap()), GaussRat::new(crate::arith::Rat::new(-1, 2), crate::arith::Rat::ONE));
        assert_eq!(q.coeff(&Label::new(&[], 2).unwrap()), GaussRat::int(2));
        assert_eq!(q.coeff(&Label::new(&[4, 5], 4).unwrap()), GaussRat::gauss(-1, -1));
        assert_eq!(q.coeff(&Label::new(&[1, 5], 3).unwrap()), GaussRat::new(crate::arith::Rat::new(3, 4), crate::arith::Rat::new(-1, 2)));
        assert!(SpinorTensor::parse("(1,2)x1 (1,3)x1").is_err());
        assert!(SpinorTensor::parse("(1,2,3)x1").is_err());
        assert!(SpinorTensor::parse("(1,2)x1 + junk").is_err());
        assert!(SpinorTensor::parse("").is_err());
        assert!(SpinorTensor::parse("0").unwrap().is_zero());
    }

    fn arb_tensor() -> impl Strategy<Value = SpinorTensor> {
        prop::collection::vec((0usize..64, -3i64..4, -3i64..4, 1i64..4), 0..6).prop_map(|ts| {
            let all = Label::all();
            SpinorTensor::from_terms(ts.into_iter().map(|(l, a, b, d)| {
                (all[l], GaussRat::new(crate::arith::Rat::new(a, d), crate::arith::Rat::new(b, 1)))
            }))
        })
    }

    proptest! {
        #[test]
        fn text_roundtrip(t in arb_tensor()) {
            let s = t.to_string();
            prop_assert_eq!(SpinorTensor::parse(&s).unwrap(), t);
        }
    }
}
