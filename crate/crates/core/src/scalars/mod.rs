//! Exact coefficient arithmetic: rationals, cyclotomic fields, polynomials in
//! the multiplicity parameters and rational functions in them.
//!
//! Every ring in this crate is a `Q`-algebra, so [`Ring::from_rational`] is
//! always available. The base fields ([`Rational`], [`Cyclotomic`]) implement
//! [`BaseField`]; parameter polynomials and rational functions are built on top
//! of a base field.

use std::fmt;

mod cyclotomic;
mod parampoly;
mod parse;
mod ratfun;
mod rational;

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};
pub use parampoly::{PMono, ParamPoly};
pub use parse::{parse_ratfun, parse_ratfun_with};
pub use ratfun::{binom_sym, falling_binomial, RatFun};
pub use rational::Rational;

/// A commutative ring with exact arithmetic containing `Q`.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    /// Exact quotient, `None` when `rhs` does not divide `self`.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Rational::from(v))
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self = Ring::add(self, rhs);
    }

    fn mul_rational(&self, q: &Rational) -> Self {
        Ring::mul(self, &Self::from_rational(q))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = Ring::mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = Ring::mul(&base, &base);
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| Ring::mul(self, &r))
    }
}

/// A field usable as the coefficient field of parameter polynomials.
pub trait BaseField: Field {
    /// `Some(q)` when the element lies in `Q`.
    fn to_rational(&self) -> Option<Rational>;

    /// The unit that brings a reduced fraction `num/den` to canonical form.
    fn canonical_unit(num: &ParamPoly<Self>, den: &ParamPoly<Self>) -> Self;
}

/// Rings that contain the base field `K`.
pub trait Algebra<K: BaseField>: Ring {
    fn from_base(k: &K) -> Self;

    fn scale_base(&self, k: &K) -> Self {
        Ring::mul(self, &Self::from_base(k))
    }
}

impl<K: BaseField> Algebra<K> for K {
    fn from_base(k: &K) -> Self {
        k.clone()
    }
}

/// Coefficient field of polynomials: rational functions in the multiplicity
/// parameters over a base field.
pub trait Scalar: Field + Algebra<Self::Base> {
    type Base: BaseField;

    /// The `i`-th of `arity` parameters.
    fn param(i: usize, arity: usize) -> Self;

    /// Canonical string with the given parameter names.
    fn fmt_params(&self, names: &[String]) -> String;

    /// Inverse of [`Scalar::fmt_params`]; `zeta_order` fixes the meaning of `zeta`.
    fn parse_params(s: &str, names: &[String], zeta_order: u32) -> crate::Result<Self>;

    /// Substitutes rational values for the parameters.
    fn specialize(&self, point: &[Rational]) -> crate::Result<Self>;

    /// `Some` when the value is a constant in `Q`.
    fn to_rational(&self) -> Option<Rational>;

    /// Underlying rational function.
    fn as_ratfun(&self) -> &RatFun<Self::Base>;

    fn from_ratfun(r: RatFun<Self::Base>) -> Self;

    /// Numerator and denominator printed separately.
    fn fmt_parts(&self, names: &[String]) -> (String, String);
}

impl Scalar for RatFun<Rational> {
    type Base = Rational;

    fn param(i: usize, arity: usize) -> Self {
        RatFun::param(i, arity)
    }
    fn fmt_params(&self, names: &[String]) -> String {
        self.fmt_with(names)
    }
    fn parse_params(s: &str, names: &[String], _zeta_order: u32) -> crate::Result<Self> {
        parse_ratfun(s, names)
    }
    fn specialize(&self, point: &[Rational]) -> crate::Result<Self> {
        Ok(RatFun::constant(self.eval(point)?))
    }
    fn to_rational(&self) -> Option<Rational> {
        RatFun::to_rational(self)
    }
    fn as_ratfun(&self) -> &RatFun<Rational> {
        self
    }
    fn from_ratfun(r: RatFun<Rational>) -> Self {
        r
    }
    fn fmt_parts(&self, names: &[String]) -> (String, String) {
        (self.numer().fmt_with(names), self.denom().fmt_with(names))
    }
}

impl Scalar for RatFun<Cyclotomic> {
    type Base = Cyclotomic;

    fn param(i: usize, arity: usize) -> Self {
        RatFun::param(i, arity)
    }
    /// Values lying in `Q(c)` print exactly as over `Q`.
    fn fmt_params(&self, names: &[String]) -> String {
        match ratfun_to_rational(self) {
            Some(r) => r.fmt_with(names),
            None => self.fmt_with(names),
        }
    }
    fn parse_params(s: &str, names: &[String], zeta_order: u32) -> crate::Result<Self> {
        parse_ratfun_with(s, names, |name| {
            (name == "zeta").then(|| Cyclotomic::zeta_pow(zeta_order, 1))
        })
    }
    fn specialize(&self, point: &[Rational]) -> crate::Result<Self> {
        let pt: Vec<Cyclotomic> = point.iter().map(Cyclotomic::from_rational).collect();
        Ok(RatFun::constant(self.eval(&pt)?))
    }
    fn to_rational(&self) -> Option<Rational> {
        RatFun::to_rational(self)
    }
    fn as_ratfun(&self) -> &RatFun<Cyclotomic> {
        self
    }
    fn from_ratfun(r: RatFun<Cyclotomic>) -> Self {
        r
    }
    fn fmt_parts(&self, names: &[String]) -> (String, String) {
        match ratfun_to_rational(self) {
            Some(r) => r.fmt_parts(names),
            None => (self.numer().fmt_with(names), self.denom().fmt_with(names)),
        }
    }
}

/// Rewrites a rational function over `Q(zeta)` over `Q` when its
/// coefficients allow.
pub fn ratfun_to_rational(r: &RatFun<Cyclotomic>) -> Option<RatFun<Rational>> {
    let n = r.numer().to_rational()?;
    let d = r.denom().to_rational()?;
    Some(RatFun::normalize(n, d).ok()?.with_arity(r.arity()))
}

/// Embeds a rational function over `Q` into one over `Q(zeta)`.
pub fn ratfun_from_rational(r: &RatFun<Rational>) -> RatFun<Cyclotomic> {
    r.map_base(Cyclotomic::from_rational)
}

/// Wraps a displayed scalar in parentheses when it is a sum.
pub(crate) fn paren_if_compound(s: &str) -> String {
    let body = s.strip_prefix('-').unwrap_or(s);
    if body.contains(['+', '-', '(']) {
        format!("({s})")
    } else {
        s.to_string()
    }
}
