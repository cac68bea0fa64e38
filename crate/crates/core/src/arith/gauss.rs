//! Gaussian rationals `a + b*i` with `a, b` rational.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::rat::Rat;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub const ZERO: GaussRat = GaussRat { re: Rat::ZERO, im: Rat::ZERO };
    pub const ONE: GaussRat = GaussRat { re: Rat::ONE, im: Rat::ZERO };
    pub const I: GaussRat = GaussRat { re: Rat::ZERO, im: Rat::ONE };

    pub fn new(re: Rat, im: Rat) -> GaussRat {
        GaussRat { re, im }
    }

    pub fn int(n: i64) -> GaussRat {
        GaussRat { re: Rat::int(n), im: Rat::ZERO }
    }

    pub fn gauss(a: i64, b: i64) -> GaussRat {
        GaussRat { re: Rat::int(a), im: Rat::int(b) }
    }

    pub fn ratio(n: i64, d: i64) -> GaussRat {
        GaussRat { re: Rat::new(n, d), im: Rat::ZERO }
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> GaussRat {
        match k.rem_euclid(4) {
            0 => GaussRat::int(1),
            1 => GaussRat::gauss(0, 1),
            2 => GaussRat::int(-1),
            _ => GaussRat::gauss(0, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> GaussRat {
        GaussRat { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> GaussRat {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero");
        let c = self.conj();
        GaussRat { re: &c.re / &n, im: &c.im / &n }
    }

    pub fn scale(&self, r: &Rat) -> GaussRat {
        GaussRat { re: &self.re * r, im: &self.im * r }
    }

    pub fn pow(&self, e: u32) -> GaussRat {
        let mut acc = GaussRat::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Rational part if the imaginary part vanishes.
    pub fn as_rat(&self) -> Option<&Rat> {
        self.im.is_zero().then_some(&self.re)
    }

    /// Whether printing this value as a factor needs parentheses.
    pub fn is_compound(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }

    /// Sign used when pulling a leading minus out of a printed term.
    pub fn looks_negative(&self) -> bool {
        if self.re.is_zero() {
            self.im.signum() < 0
        } else {
            self.re.signum() < 0 && self.im.is_zero()
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, v: &Rat| -> fmt::Result {
            if v.is_one() {
                write!(f, "i")
            } else if (-v).is_one() {
                write!(f, "-i")
            } else {
                write!(f, "{v}*i")
            }
        };
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            imag(f, &self.im)
        } else {
            write!(f, "{}", self.re)?;
            if self.im.signum() > 0 {
                write!(f, "+")?;
            }
            imag(f, &self.im)
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussRat {
    type Err = super::mpoly::ParsePolyError;
    fn from_str(s: &str) -> Result<GaussRat, Self::Err> {
        let p = super::mpoly::MultiPoly::parse(s, &[])?;
        p.constant_value()
            .ok_or_else(|| super::mpoly::ParsePolyError::new(s, "not a constant"))
    }
}

impl From<Rat> for GaussRat {
    fn from(r: Rat) -> GaussRat {
        GaussRat { re: r, im: Rat::ZERO }
    }
}
impl From<i64> for GaussRat {
    fn from(n: i64) -> GaussRat {
        GaussRat::int(n)
    }
}

fn add_impl(a: &GaussRat, b: &GaussRat) -> GaussRat {
    GaussRat { re: &a.re + &b.re, im: &a.im + &b.im }
}
fn sub_impl(a: &GaussRat, b: &GaussRat) -> GaussRat {
    GaussRat { re: &a.re - &b.re, im: &a.im - &b.im }
}
fn mul_impl(a: &GaussRat, b: &GaussRat) -> GaussRat {
    if a.im.is_zero() && b.im.is_zero() {
        return GaussRat { re: &a.re * &b.re, im: Rat::ZERO };
    }
    if a.im.is_zero() {
        return b.scale(&a.re);
    }
    if b.im.is_zero() {
        return a.scale(&b.re);
    }
    GaussRat {
        re: &a.re * &b.re - &a.im * &b.im,
        im: &a.re * &b.im + &a.im * &b.re,
    }
}
fn div_impl(a: &GaussRat, b: &GaussRat) -> GaussRat {
    if b.im.is_zero() {
        let r = b.re.recip();
        return a.scale(&r);
    }
    mul_impl(a, &b.inv())
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&GaussRat> for &GaussRat {
            type Output = GaussRat;
            fn $m(self, rhs: &GaussRat) -> GaussRat {
                $f(self, rhs)
            }
        }
        impl $tr<GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, rhs: GaussRat) -> GaussRat {
                $f(&self, &rhs)
            }
        }
        impl $tr<&GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, rhs: &GaussRat) -> GaussRat {
                $f(&self, rhs)
            }
        }
        impl $tr<GaussRat> for &GaussRat {
            type Output = GaussRat;
            fn $m(self, rhs: GaussRat) -> GaussRat {
                $f(self, &rhs)
            }
        }
    };
}
binop!(Add, add, add_impl);
binop!(Sub, sub, sub_impl);
binop!(Mul, mul, mul_impl);
binop!(Div, div, div_impl);

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re, im: -self.im }
    }
}
impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -&self.re, im: -&self.im }
    }
}
impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, rhs: &GaussRat) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}
impl AddAssign<GaussRat> for GaussRat {
    fn add_assign(&mut self, rhs: GaussRat) {
        *self += &rhs;
    }
}
impl SubAssign<&GaussRat> for GaussRat {
    fn sub_assign(&mut self, rhs: &GaussRat) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}
impl SubAssign<GaussRat> for GaussRat {
    fn sub_assign(&mut self, rhs: GaussRat) {
        *self -= &rhs;
    }
}
impl MulAssign<&GaussRat> for GaussRat {
    fn mul_assign(&mut self, rhs: &GaussRat) {
        *self = &*self * rhs;
    }
}

impl Zero for GaussRat {
    fn zero() -> GaussRat {
        GaussRat::ZERO
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
    }
}
impl One for GaussRat {
    fn one() -> GaussRat {
        GaussRat::ONE
    }
}

impl serde::Serialize for GaussRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Shorthand for `GaussRat` literals in code and tests: `g!(1)`, `g!(1, -1)`, `g!(1/2)`.
#[macro_export]
macro_rules! g {
    ($n:literal / $d:literal) => {
        $crate::arith::GaussRat::ratio($n, $d)
    };
    ($re:expr, $im:expr) => {
        $crate::arith::GaussRat::gauss($re, $im)
    };
    ($n:expr) => {
        $crate::arith::GaussRat::int($n)
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb() -> impl Strategy<Value = GaussRat> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20)
            .prop_map(|(a, b, c, d)| GaussRat::new(Rat::new(a, b), Rat::new(c, d)))
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussRat::new(Rat::new(1, 2), Rat::new(-3, 4)).to_string(), "1/2-3/4*i");
        assert_eq!(GaussRat::gauss(0, 1).to_string(), "i");
        assert_eq!(GaussRat::gauss(2, -1).to_string(), "2-i");
        assert_eq!(GaussRat::int(-5).to_string(), "-5");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["1/2-3/4*i", "i", "-i", "7", "-2/3*i", "1+i"] {
            let v: GaussRat = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
    }

    proptest! {
        #[test]
        fn field_laws(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
            }
            let back: GaussRat = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
