use std::fmt;

use super::parampoly::default_names;
use super::{paren_if_compound, Algebra, BaseField, Field, ParamPoly, Rational, Ring};
use crate::error::{Error, Result};

/// Reduced fraction of parameter polynomials in canonical form.
///
/// `arity` is the number of parameters of the ambient field. It only affects
/// display names and is the max of the operands' arities under arithmetic.
#[derive(Clone)]
pub struct RatFun<K> {
    num: ParamPoly<K>,
    den: ParamPoly<K>,
    arity: usize,
}

impl<K: BaseField> PartialEq for RatFun<K> {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl<K: BaseField> RatFun<K> {
    /// Reduces `num/den` and brings it to canonical form.
    pub fn normalize(num: ParamPoly<K>, den: ParamPoly<K>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let arity = num.nvars().max(den.nvars());
        Ok(Self::reduce(num, den, arity))
    }

    fn reduce(num: ParamPoly<K>, den: ParamPoly<K>, arity: usize) -> Self {
        if num.is_zero() {
            return RatFun { num, den: ParamPoly::one(), arity };
        }
        let (num, den) = if den.as_constant().is_some() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let unit = K::canonical_unit(&num, &den);
        if unit.is_one() {
            RatFun { num, den, arity }
        } else {
            RatFun { num: num.scale(&unit), den: den.scale(&unit), arity }
        }
    }

    pub fn from_poly(p: ParamPoly<K>) -> Self {
        let arity = p.nvars();
        Self::reduce(p, ParamPoly::one(), arity)
    }

    /// The `i`-th of `arity` parameters.
    pub fn param(i: usize, arity: usize) -> Self {
        RatFun { num: ParamPoly::var(i), den: ParamPoly::one(), arity: arity.max(i + 1) }
    }

    pub fn constant(k: K) -> Self {
        Self::reduce(ParamPoly::constant(k), ParamPoly::one(), 0)
    }

    pub fn numer(&self) -> &ParamPoly<K> {
        &self.num
    }

    pub fn denom(&self) -> &ParamPoly<K> {
        &self.den
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn with_arity(mut self, arity: usize) -> Self {
        self.arity = self.arity.max(arity);
        self
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().is_some()
    }

    /// Polynomial form when the denominator is constant.
    pub fn as_poly(&self) -> Option<ParamPoly<K>> {
        let d = self.den.as_constant()?;
        Some(self.num.scale(&d.inv()?))
    }

    pub fn as_constant(&self) -> Option<K> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        n.div(&d)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.as_constant()?.to_rational()
    }

    /// Evaluates at a point assigning every parameter.
    pub fn eval(&self, point: &[K]) -> Result<K> {
        let d = self.den.eval(point);
        if d.is_zero() {
            // report the denominator without its constant factor
            let unit = K::canonical_unit(&ParamPoly::zero(), &self.den);
            return Err(Error::Pole { denominator: self.den.scale(&unit).fmt_with(&self.names()) });
        }
        Ok(self.num.eval(point).div(&d).expect("nonzero denominator"))
    }

    /// Substitutes parameters by rational functions.
    pub fn compose(&self, images: &[RatFun<K>]) -> Result<Self> {
        let sub = |p: &ParamPoly<K>| -> RatFun<K> {
            let mut acc = RatFun::zero();
            for (m, c) in p.terms() {
                let mut t = RatFun::constant(c.clone());
                for (i, e) in m.exps().iter().enumerate() {
                    if *e > 0 {
                        let img = images
                            .get(i)
                            .cloned()
                            .unwrap_or_else(|| RatFun::param(i, i + 1));
                        t = t.mul(&img.pow(*e));
                    }
                }
                acc.add_assign(&t);
            }
            acc
        };
        let d = sub(&self.den);
        if d.is_zero() {
            // report the denominator without its constant factor
            let unit = K::canonical_unit(&ParamPoly::zero(), &self.den);
            return Err(Error::Pole { denominator: self.den.scale(&unit).fmt_with(&self.names()) });
        }
        let arity = images.iter().map(|r| r.arity).max().unwrap_or(0);
        Ok(sub(&self.num).div(&d).expect("nonzero").with_arity(arity))
    }

    /// Partial derivative with respect to parameter `v`.
    pub fn derivative(&self, v: usize) -> Self {
        let n = self.num.derivative(v).mul(&self.den).sub(&self.num.mul(&self.den.derivative(v)));
        let d = self.den.mul(&self.den);
        Self::reduce(n, d, self.arity)
    }

    pub fn names(&self) -> Vec<String> {
        default_names(self.arity.max(self.num.nvars()).max(self.den.nvars()))
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        let n = self.num.fmt_with(names);
        if self.den.is_one() {
            return n;
        }
        format!("{}/{}", paren_if_compound(&n), paren_if_compound(&self.den.fmt_with(names)))
    }

    pub fn map_base<L: BaseField>(&self, f: impl Fn(&K) -> L) -> RatFun<L> {
        RatFun::reduce(self.num.map_coeffs(&f), self.den.map_coeffs(&f), self.arity)
    }
}

impl<K: BaseField> Ring for RatFun<K> {
    fn zero() -> Self {
        RatFun { num: ParamPoly::zero(), den: ParamPoly::one(), arity: 0 }
    }
    fn one() -> Self {
        RatFun { num: ParamPoly::one(), den: ParamPoly::one(), arity: 0 }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn add(&self, rhs: &Self) -> Self {
        let arity = self.arity.max(rhs.arity);
        if rhs.is_zero() {
            return self.clone().with_arity(arity);
        }
        if self.is_zero() {
            return rhs.clone().with_arity(arity);
        }
        if self.den == rhs.den {
            return Self::reduce(self.num.add(&rhs.num), self.den.clone(), arity);
        }
        let n = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        Self::reduce(n, self.den.mul(&rhs.den), arity)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        let arity = self.arity.max(rhs.arity);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero().with_arity(arity);
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::reduce(self.num.mul(&rhs.num), ParamPoly::one(), arity);
        }
        Self::reduce(self.num.mul(&rhs.num), self.den.mul(&rhs.den), arity)
    }
    fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone(), arity: self.arity }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(K::from_rational(q))
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        Field::div(self, rhs)
    }
}

impl<K: BaseField> Field for RatFun<K> {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::reduce(self.den.clone(), self.num.clone(), self.arity))
    }
}

impl<K: BaseField> Algebra<K> for RatFun<K> {
    fn from_base(k: &K) -> Self {
        Self::constant(k.clone())
    }
    fn scale_base(&self, k: &K) -> Self {
        if k.is_zero() {
            return Self::zero().with_arity(self.arity);
        }
        Self::reduce(self.num.scale(k), self.den.clone(), self.arity)
    }
}

impl<K: BaseField> fmt::Display for RatFun<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&self.names()))
    }
}

impl<K: BaseField> fmt::Debug for RatFun<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `x(x-1)...(x-k+1)/k!` for a rational function `x`.
pub fn falling_binomial<K: BaseField>(x: &RatFun<K>, k: u32) -> RatFun<K> {
    let mut acc = RatFun::one().with_arity(x.arity());
    for i in 0..k {
        acc = acc.mul(&x.sub(&RatFun::from_i64(i as i64)));
    }
    let kf = Rational::factorial(k).inv().expect("nonzero factorial");
    acc.mul_rational(&kf)
}

/// `binom(c, k)` in the single parameter `c`.
pub fn binom_sym(k: u32) -> RatFun<Rational> {
    falling_binomial(&RatFun::param(0, 1), k)
}

#[cfg(test)]
mod tests {
    use super::*;

    type R = RatFun<Rational>;

    fn c() -> ParamPoly<Rational> {
        ParamPoly::var(0)
    }

    fn k(v: i64) -> ParamPoly<Rational> {
        ParamPoly::from_i64(v)
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_examples() {
        let f = R::normalize(c().mul(&k(2)), k(4)).unwrap();
        assert_eq!(f.to_string(), "c/2");
        let g = R::normalize(c().mul(&c()).sub(&k(1)), c().sub(&k(1))).unwrap();
        assert_eq!(g.to_string(), "c+1");
        let z = R::normalize(k(0), c()).unwrap();
        assert!(z.is_zero());
        assert!(z.denom().is_one());
        assert_eq!(R::normalize(c(), k(0)).unwrap_err(), Error::ZeroDenominator);
    }

    #[test]
    fn canonical_sign_and_content() {
        // (4c-1)/(5-12c) -> (-4c+1)/(12c-5)
        let f = R::normalize(c().mul(&k(4)).sub(&k(1)), k(5).sub(&c().mul(&k(12)))).unwrap();
        assert_eq!(f.to_string(), "(-4*c+1)/(12*c-5)");
        let again = R::normalize(f.numer().clone(), f.denom().clone()).unwrap();
        assert_eq!(again.to_string(), f.to_string());
    }

    #[test]
    fn eval_examples() {
        let f = R::normalize(k(1).sub(&c().mul(&k(4))), c().mul(&k(12)).sub(&k(5))).unwrap();
        assert_eq!(f.eval(&[q("1/4")]).unwrap(), Rational::zero());
        let g = R::normalize(k(1), k(1).sub(&c().mul(&k(2)))).unwrap();
        assert!(matches!(g.eval(&[q("1/2")]), Err(Error::Pole { .. })));
        let h = R::from_poly(c().add(&k(1)));
        assert_eq!(h.eval(&[q("3")]).unwrap(), q("4"));
    }

    #[test]
    fn binomials() {
        assert!(binom_sym(0).is_one());
        assert_eq!(binom_sym(1).to_string(), "c");
        assert_eq!(binom_sym(2).to_string(), "(c^2-c)/2");
    }
}
