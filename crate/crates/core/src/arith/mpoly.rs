//! Multivariate polynomials over the Gaussian rationals.
//!
//! Terms are kept in a map ordered by graded lexicographic order (total
//! degree first, then lexicographic with `x1 > x2 > ...`).  The text form
//! lists terms from the largest monomial down, e.g.
//! `x1^2 + x2^2 + 2*x3*x4` or `(1+i)*x1*x2 - 1/2*i*x3^2`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::gauss::GaussRat;
use super::rat::Rat;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Monomial {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Monomial) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}
impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Monomial) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, GaussRat>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial `{input}`: {reason}")]
pub struct ParsePolyError {
    pub input: String,
    pub reason: String,
}

impl ParsePolyError {
    pub fn new(input: &str, reason: &str) -> ParsePolyError {
        ParsePolyError { input: input.to_string(), reason: reason.to_string() }
    }
}

/// Variable names `prefix1 .. prefixN`.
pub fn var_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

impl MultiPoly {
    pub fn zero(vars: &[String]) -> MultiPoly {
        MultiPoly { vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[String], c: GaussRat) -> MultiPoly {
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn var(vars: &[String], i: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(vars);
        p.terms.insert(Monomial::var(vars.len(), i), GaussRat::ONE);
        p
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear(vars: &[String], coeffs: &[GaussRat]) -> MultiPoly {
        let mut p = MultiPoly::zero(vars);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert(Monomial::var(vars.len(), i), c.clone());
            }
        }
        p
    }

    pub fn from_terms(vars: &[String], terms: impl IntoIterator<Item = (Monomial, GaussRat)>) -> MultiPoly {
        let mut p = MultiPoly::zero(vars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn with_vars(&self, vars: &[String]) -> MultiPoly {
        assert_eq!(vars.len(), self.vars.len());
        MultiPoly { vars: vars.to_vec(), terms: self.terms.clone() }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_value(&self) -> Option<GaussRat> {
        match self.terms.len() {
            0 => Some(GaussRat::ZERO),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> GaussRat {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Largest term in graded lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &GaussRat)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: &GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussRat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.vars.len(), o.vars.len());
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), c);
        }
        p
    }

    pub fn sub(&self, o: &MultiPoly) -> MultiPoly {
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), &(-c));
        }
        p
    }

    pub fn neg(&self) -> MultiPoly {
        self.scale(&GaussRat::int(-1))
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        let mut acc: BTreeMap<Monomial, GaussRat> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                *acc.entry(m1.mul(m2)).or_default() += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MultiPoly { vars: self.vars.clone(), terms: acc }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(&self.vars, GaussRat::ONE);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let k = m.0[i];
            if k == 0 {
                continue;
            }
            let mut e = m.clone();
            e.0[i] -= 1;
            p.add_term(e, &(c * &GaussRat::int(k as i64)));
        }
        p
    }

    pub fn eval(&self, x: &[GaussRat]) -> GaussRat {
        let mut acc = GaussRat::ZERO;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &e) in x.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &xi.pow(e);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `x_i -> forms[i]`, where each form is a polynomial in `new_vars`.
    pub fn compose(&self, forms: &[MultiPoly], new_vars: &[String]) -> MultiPoly {
        assert_eq!(forms.len(), self.nvars());
        let maxdeg: Vec<u32> =
            (0..self.nvars()).map(|i| self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)).collect();
        let powers: Vec<Vec<MultiPoly>> = forms
            .iter()
            .zip(&maxdeg)
            .map(|(f, &d)| {
                let mut v = vec![MultiPoly::constant(new_vars, GaussRat::ONE)];
                for k in 1..=d as usize {
                    let next = v[k - 1].mul(f);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = MultiPoly::zero(new_vars);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(new_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[i][e as usize]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// `p(M x)`: the linear change of variables `x_i -> sum_j M_ij x_j`.
    pub fn substitute(&self, m: &[Vec<GaussRat>]) -> MultiPoly {
        let forms: Vec<MultiPoly> = m.iter().map(|row| MultiPoly::linear(&self.vars, row)).collect();
        self.compose(&forms, &self.vars)
    }

    /// `Some(c)` with `self == c * other`, if such a scalar exists.
    pub fn scalar_multiple_of(&self, other: &MultiPoly) -> Option<GaussRat> {
        if other.is_zero() {
            return self.is_zero().then_some(GaussRat::ONE);
        }
        let (m, c) = other.leading_term().unwrap();
        let ratio = &self.coeff(m) / c;
        (other.scale(&ratio) == *self).then_some(ratio)
    }

    /// Parses an expression with `+ - * / ^`, parentheses, rational
    /// literals, `i`, and the given variable names.  Juxtaposition
    /// multiplies, so `6i(x1^2-x2^2)` is accepted.
    pub fn parse(s: &str, vars: &[String]) -> Result<MultiPoly, ParsePolyError> {
        let mut p = Parser { src: s, chars: s.char_indices().peekable(), vars };
        let out = p.expr()?;
        p.skip_ws();
        if p.chars.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    vars: &'a [String],
}

impl Parser<'_> {
    fn err(&self, why: &str) -> ParsePolyError {
        ParsePolyError::new(self.src, why)
    }

    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|(_, c)| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().map(|(_, c)| *c)
    }

    fn expr(&mut self) -> Result<MultiPoly, ParsePolyError> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.chars.next();
                self.term()?.neg()
            }
            Some('+') => {
                self.chars.next();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.chars.next();
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.chars.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParsePolyError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.chars.next();
                    acc = acc.mul(&self.power()?);
                }
                Some('/') => {
                    self.chars.next();
                    let d = self.power()?;
                    let c = d.constant_value().ok_or_else(|| self.err("division by a non-constant"))?;
                    if c.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.scale(&c.inv());
                }
                Some(c) if c == '(' || c.is_ascii_alphanumeric() => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParsePolyError> {
        let (base, glued_i) = self.atom()?;
        if self.peek() == Some('^') {
            self.chars.next();
            self.skip_ws();
            let mut digits = String::new();
            while let Some(&(_, c)) = self.chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    self.chars.next();
                } else {
                    break;
                }
            }
            let e: u32 = digits.parse().map_err(|_| self.err("bad exponent"))?;
            return Ok(base.pow(e).scale(&glued_i));
        }
        Ok(base.scale(&glued_i))
    }

    /// An atom and a unit prefactor that an exponent does not apply to
    /// (the `i` of `ix1^2`).
    fn atom(&mut self) -> Result<(MultiPoly, GaussRat), ParsePolyError> {
        let vars = self.vars;
        match self.peek() {
            Some('(') => {
                self.chars.next();
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("missing `)`"));
                }
                self.chars.next();
                Ok((e, GaussRat::ONE))
            }
            Some(c) if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&(_, c)) = self.chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        self.chars.next();
                    } else {
                        break;
                    }
                }
                let r: Rat = digits.parse().map_err(|_| self.err("bad number"))?;
                Ok((MultiPoly::constant(vars, GaussRat::from(r)), GaussRat::ONE))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                // A symbol is a run of letters followed by a run of digits.
                let mut name = String::new();
                while let Some(&(_, c)) = self.chars.peek() {
                    if c.is_ascii_alphabetic() {
                        name.push(c);
                        self.chars.next();
                    } else {
                        break;
                    }
                }
                while let Some(&(_, c)) = self.chars.peek() {
                    if c.is_ascii_digit() {
                        name.push(c);
                        self.chars.next();
                    } else {
                        break;
                    }
                }
                if let Some(k) = vars.iter().position(|v| *v == name) {
                    return Ok((MultiPoly::var(vars, k), GaussRat::ONE));
                }
                if name == "i" {
                    return Ok((MultiPoly::constant(vars, GaussRat::I), GaussRat::ONE));
                }
                // `i` glued to a following factor, as in `ix1`.
                if let Some(rest) = name.strip_prefix('i') {
                    if let Some(k) = vars.iter().position(|v| v == rest) {
                        return Ok((MultiPoly::var(vars, k), GaussRat::I));
                    }
                }
                Err(self.err(&format!("unknown symbol `{name}`")))
            }
            _ => Err(self.err("unexpected end or symbol")),
        }
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, vars: &[String]) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{}", vars[i])?;
        } else {
            write!(f, "{}^{}", vars[i], e)?;
        }
    }
    Ok(())
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.looks_negative();
            let a = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.degree() == 0 {
                if a.is_compound() && self.terms.len() > 1 {
                    write!(f, "({a})")?;
                } else {
                    write!(f, "{a}")?;
                }
                continue;
            }
            if !a.is_one() {
                if a.is_compound() {
                    write!(f, "({a})*")?;
                } else {
                    write!(f, "{a}*")?;
                }
            }
            write_monomial(f, m, &self.vars)?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Determinant of a square matrix of polynomials by Laplace expansion over
/// column subsets (exact, no division).
pub fn poly_determinant(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    assert!(n > 0 && n < 20);
    let vars = m[0][0].vars().to_vec();
    // minors[mask] = det of rows n-|mask|.. and columns in mask
    let mut minors: Vec<Option<MultiPoly>> = vec![None; 1 << n];
    minors[0] = Some(MultiPoly::constant(&vars, GaussRat::ONE));
    for mask in 1usize..(1 << n) {
        let k = mask.count_ones() as usize;
        let row = n - k;
        let mut acc = MultiPoly::zero(&vars);
        let mut sign_pos = true;
        for c in 0..n {
            if mask & (1 << c) == 0 {
                continue;
            }
            let sub = minors[mask & !(1 << c)].as_ref().unwrap();
            if !m[row][c].is_zero() && !sub.is_zero() {
                let t = m[row][c].mul(sub);
                acc = if sign_pos { acc.add(&t) } else { acc.sub(&t) };
            }
            sign_pos = !sign_pos;
        }
        minors[mask] = Some(acc);
    }
    minors[(1 << n) - 1].take().unwrap()
}

/// Hessian matrix of second partial derivatives.
pub fn hessian(p: &MultiPoly) -> Vec<Vec<MultiPoly>> {
    let n = p.nvars();
    let d: Vec<MultiPoly> = (0..n).map(|i| p.derivative(i)).collect();
    (0..n).map(|i| (0..n).map(|j| d[i].derivative(j)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g;
    use proptest::prelude::*;

    fn xs() -> Vec<String> {
        var_names("x", 4)
    }

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s, &xs()).unwrap()
    }

    #[test]
    fn parse_and_print_canonical() {
        let q = p("x1^2 + x2^2 + 2x3x4");
        assert_eq!(q.to_string(), "x1^2 + x2^2 + 2*x3*x4");
        let a = p("-x1^4 + 6i(x1^2-x2^2)(x3^2-x4^2)");
        assert_eq!(a, p("6*i*x1^2*x3^2 - 6*i*x1^2*x4^2 - 6*i*x2^2*x3^2 + 6*i*x2^2*x4^2 - x1^4"));
        assert_eq!(p("(1+i)*x1 - 1/2*x2").to_string(), "(1+i)*x1 - 1/2*x2");
        assert_eq!(p("17/4 x1^4 x2^4").to_string(), "17/4*x1^4*x2^4");
        assert_eq!(MultiPoly::parse(&q.to_string(), &xs()).unwrap(), q);
        assert_eq!(p("x1^2+ix3^2"), p("x1^2+i*x3^2"));
        assert_eq!(p("ix1x2"), p("i*x1*x2"));
        assert!(MultiPoly::parse("x5", &xs()).is_err());
        assert!(MultiPoly::parse("x1/x2", &xs()).is_err());
    }

    #[test]
    fn substitution_convention() {
        // p(Mx) with M = s3 sends x1^2 + x2^2 + 2x3x4 to -(x1^2 + x2^2 - 2x3x4).
        let s3 = vec![
            vec![g!(0), g!(0, -1), g!(0), g!(0)],
            vec![g!(0, 1), g!(0), g!(0), g!(0)],
            vec![g!(0), g!(0), g!(1), g!(0)],
            vec![g!(0), g!(0), g!(0), g!(1)],
        ];
        assert_eq!(p("x1^2+x2^2+2x3x4").substitute(&s3), p("-(x1^2+x2^2-2x3x4)"));
    }

    #[test]
    fn determinant_of_vandermonde() {
        let v = var_names("x", 3);
        let x: Vec<MultiPoly> = (0..3).map(|i| MultiPoly::var(&v, i)).collect();
        let one = MultiPoly::constant(&v, GaussRat::ONE);
        let m: Vec<Vec<MultiPoly>> = x.iter().map(|xi| vec![one.clone(), xi.clone(), xi.mul(xi)]).collect();
        let d = poly_determinant(&m);
        let expect = x[1].sub(&x[0]).mul(&x[2].sub(&x[0])).mul(&x[2].sub(&x[1]));
        assert_eq!(d, expect);
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec(((0u32..3, 0u32..3, 0u32..3, 0u32..3), -3i64..4, -2i64..3), 0..6).prop_map(|ts| {
            MultiPoly::from_terms(
                &xs(),
                ts.into_iter().map(|((a, b, c, d), re, im)| (Monomial(vec![a, b, c, d]), GaussRat::gauss(re, im))),
            )
        })
    }

    fn arb_mat() -> impl Strategy<Value = Vec<Vec<GaussRat>>> {
        proptest::collection::vec((-2i64..3, -1i64..2), 16)
            .prop_map(|v| (0..4).map(|i| (0..4).map(|j| GaussRat::gauss(v[4 * i + j].0, v[4 * i + j].1)).collect()).collect())
    }

    fn matmul(a: &[Vec<GaussRat>], b: &[Vec<GaussRat>]) -> Vec<Vec<GaussRat>> {
        (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        let mut s = GaussRat::ZERO;
                        for k in 0..4 {
                            s += &a[i][k] * &b[k][j];
                        }
                        s
                    })
                    .collect()
            })
            .collect()
    }

    proptest! {
        #[test]
        fn text_roundtrip(q in arb_poly()) {
            prop_assert_eq!(MultiPoly::parse(&q.to_string(), &xs()).unwrap(), q);
        }

        #[test]
        fn substitution_composes(q in arb_poly(), a in arb_mat(), b in arb_mat()) {
            let left = q.substitute(&matmul(&a, &b));
            let right = q.substitute(&a).substitute(&b);
            prop_assert_eq!(left, right);
        }

        #[test]
        fn substitution_is_evaluation(q in arb_poly(), a in arb_mat(), x in proptest::collection::vec(-3i64..4, 4)) {
            let x: Vec<GaussRat> = x.into_iter().map(GaussRat::int).collect();
            let mx: Vec<GaussRat> = a.iter().map(|r| {
                let mut s = GaussRat::ZERO;
                for k in 0..4 { s += &r[k] * &x[k]; }
                s
            }).collect();
            prop_assert_eq!(q.substitute(&a).eval(&x), q.eval(&mx));
        }
    }
}
