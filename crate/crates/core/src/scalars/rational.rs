use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{BaseField, Field, ParamPoly, Ring};
use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always reduced with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let d: BigInt = denom.into();
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer.into(), d)))
    }

    pub fn from_big(q: BigRational) -> Self {
        Rational(q)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn signum(&self) -> i32 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn factorial(n: u32) -> Self {
        let mut acc = BigInt::one();
        for i in 2..=n {
            acc *= i;
        }
        Rational(BigRational::from_integer(acc))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational(BigRational::from_integer(v))
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `"p"` or `"p/q"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| {
            BigInt::from_str(t.trim()).map_err(|_| Error::Parse(format!("bad integer `{t}`")))
        };
        match s.split_once('/') {
            Some((p, q)) => Rational::new(parse_int(p)?, parse_int(q)?),
            None => Ok(Rational::from(parse_int(s)?)),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        Field::div(self, rhs)
    }
    fn add_assign(&mut self, rhs: &Self) {
        self.0 += &rhs.0;
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
}

impl BaseField for Rational {
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    /// Scales to integer coefficients with joint content 1 and a positive
    /// leading denominator coefficient.
    fn canonical_unit(num: &ParamPoly<Self>, den: &ParamPoly<Self>) -> Self {
        let mut lcm = BigInt::one();
        for (_, c) in num.terms().chain(den.terms()) {
            lcm = lcm.lcm(c.denom());
        }
        let mut gcd = BigInt::zero();
        for (_, c) in num.terms().chain(den.terms()) {
            let scaled = c.numer() * (&lcm / c.denom());
            gcd = gcd.gcd(&scaled);
        }
        if gcd.is_zero() {
            return Rational::one();
        }
        let mut unit = Rational(BigRational::new(lcm, gcd));
        if den.leading_coeff().map(|c| c.is_negative()).unwrap_or(false) {
            unit = Ring::neg(&unit);
        }
        unit
    }
}
