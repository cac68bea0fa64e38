//! Rational numbers with an `i64` fast path.
//!
//! Values that fit in machine words stay there; anything larger is promoted
//! to a `BigRational` and demoted again as soon as it fits.  The
//! representation is canonical, so derived equality and hashing are exact.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone)]
pub enum Rat {
    /// Numerator and positive denominator, coprime.
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    pub const ZERO: Rat = Rat::Small(0, 1);
    pub const ONE: Rat = Rat::Small(1, 1);

    pub fn new(n: i64, d: i64) -> Rat {
        assert!(d != 0, "zero denominator");
        Rat::from_i128(n as i128, d as i128)
    }

    pub fn int(n: i64) -> Rat {
        Rat::Small(n, 1)
    }

    fn from_i128(n: i128, d: i128) -> Rat {
        let g = gcd_i128(n, d);
        let (mut n, mut d) = if g > 1 { (n / g, d / g) } else { (n, d) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rat::Small(n, d),
            _ => Rat::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn from_big(r: BigRational) -> Rat {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small(n, d),
            _ => Rat::Big(Box::new(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rat::Small(_, d) => *d == 1,
            Rat::Big(b) => b.is_integer(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Rat::Small(n, _) => n.signum() as i32,
            Rat::Big(b) => {
                if b.is_negative() {
                    -1
                } else if b.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Rat {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Rat {
        match self {
            Rat::Small(n, d) => {
                assert!(*n != 0, "division by zero");
                Rat::from_i128(*d as i128, *n as i128)
            }
            Rat::Big(b) => Rat::from_big(b.recip()),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rat::Small(n, _) => BigInt::from(*n),
            Rat::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rat::Small(_, d) => BigInt::from(*d),
            Rat::Big(b) => b.denom().clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Rat::Small(n, d) => *n as f64 / *d as f64,
            Rat::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    /// Integer power (negative exponents allowed for nonzero values).
    pub fn pow(&self, e: i32) -> Rat {
        let base = if e < 0 { self.recip() } else { self.clone() };
        let mut acc = Rat::ONE;
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Floor as a big integer.
    pub fn floor(&self) -> BigInt {
        let b = self.to_big();
        b.numer().div_floor(b.denom())
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::ZERO
    }
}

impl PartialEq for Rat {
    fn eq(&self, other: &Rat) -> bool {
        match (self, other) {
            (Rat::Small(a, b), Rat::Small(c, d)) => a == c && b == d,
            (Rat::Big(x), Rat::Big(y)) => x == y,
            _ => false,
        }
    }
}
impl Eq for Rat {}

impl Hash for Rat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Rat::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Rat::Big(b) => {
                1u8.hash(state);
                b.hash(state);
            }
        }
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        match (self, other) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}
impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::Small(n, 1)
    }
}
impl From<i32> for Rat {
    fn from(n: i32) -> Rat {
        Rat::Small(n as i64, 1)
    }
}
impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Rat {
        Rat::from_big(r)
    }
}
impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat::from_big(BigRational::from_integer(n))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(n, 1) => write!(f, "{n}"),
            Rat::Small(n, d) => write!(f, "{n}/{d}"),
            Rat::Big(b) => {
                if b.is_integer() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRatError(pub String);

impl FromStr for Rat {
    type Err = ParseRatError;
    fn from_str(s: &str) -> Result<Rat, ParseRatError> {
        let s = s.trim();
        let err = || ParseRatError(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Rat::from_big(BigRational::new(n, d)))
    }
}

fn add_impl(a: &Rat, b: &Rat) -> Rat {
    match (a, b) {
        (Rat::Small(an, ad), Rat::Small(bn, bd)) => {
            if *ad == 1 && *bd == 1 {
                if let Some(s) = an.checked_add(*bn) {
                    return Rat::Small(s, 1);
                }
            }
            let (an, ad, bn, bd) = (*an as i128, *ad as i128, *bn as i128, *bd as i128);
            Rat::from_i128(an * bd + bn * ad, ad * bd)
        }
        _ => Rat::from_big(a.to_big() + b.to_big()),
    }
}

fn mul_impl(a: &Rat, b: &Rat) -> Rat {
    match (a, b) {
        (Rat::Small(an, ad), Rat::Small(bn, bd)) => {
            if *ad == 1 && *bd == 1 {
                if let Some(p) = an.checked_mul(*bn) {
                    return Rat::Small(p, 1);
                }
            }
            Rat::from_i128((*an as i128) * (*bn as i128), (*ad as i128) * (*bd as i128))
        }
        _ => Rat::from_big(a.to_big() * b.to_big()),
    }
}

fn neg_impl(a: &Rat) -> Rat {
    match a {
        Rat::Small(n, d) => match n.checked_neg() {
            Some(m) => Rat::Small(m, *d),
            None => Rat::from_big(-a.to_big()),
        },
        Rat::Big(b) => Rat::from_big(-(**b).clone()),
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:expr) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                $f(self, rhs)
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                $f(&self, &rhs)
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                $f(&self, rhs)
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                $f(self, &rhs)
            }
        }
    };
}

binop!(Add, add, add_impl);
binop!(Sub, sub, |a: &Rat, b: &Rat| add_impl(a, &neg_impl(b)));
binop!(Mul, mul, mul_impl);
binop!(Div, div, |a: &Rat, b: &Rat| mul_impl(a, &b.recip()));

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        neg_impl(&self)
    }
}
impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        neg_impl(self)
    }
}

macro_rules! assignop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<&Rat> for Rat {
            fn $m(&mut self, rhs: &Rat) {
                *self = &*self $op rhs;
            }
        }
        impl $tr<Rat> for Rat {
            fn $m(&mut self, rhs: Rat) {
                *self = &*self $op &rhs;
            }
        }
    };
}
assignop!(AddAssign, add_assign, +);
assignop!(SubAssign, sub_assign, -);
assignop!(MulAssign, mul_assign, *);
assignop!(DivAssign, div_assign, /);

impl Zero for Rat {
    fn zero() -> Rat {
        Rat::ZERO
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
}
impl One for Rat {
    fn one() -> Rat {
        Rat::ONE
    }
}

impl serde::Serialize for Rat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let a = Rat::int(i64::MAX);
        let b = &a + &a;
        assert!(matches!(b, Rat::Big(_)));
        let c = &b - &a;
        assert_eq!(c, a);
        assert!(matches!(c, Rat::Small(..)));
        let m = Rat::int(i64::MIN);
        assert_eq!(-(-&m), m);
    }

    #[test]
    fn parse_and_print() {
        let r: Rat = "-6/4".parse().unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!("7".parse::<Rat>().unwrap(), Rat::int(7));
        assert!("1/0".parse::<Rat>().is_err());
    }

    proptest! {
        #[test]
        fn agrees_with_bigrational(a in -1i64<<40..1i64<<40, b in 1i64..1<<30,
                                    c in -1i64<<40..1i64<<40, d in 1i64..1<<30) {
            let x = Rat::new(a, b);
            let y = Rat::new(c, d);
            prop_assert_eq!((&x + &y).to_big(), big(a, b) + big(c, d));
            prop_assert_eq!((&x * &y).to_big(), big(a, b) * big(c, d));
            prop_assert_eq!((&x - &y).to_big(), big(a, b) - big(c, d));
            if c != 0 {
                prop_assert_eq!((&x / &y).to_big(), big(a, b) / big(c, d));
            }
            prop_assert_eq!(x.cmp(&y), big(a, b).cmp(&big(c, d)));
        }
    }
}
