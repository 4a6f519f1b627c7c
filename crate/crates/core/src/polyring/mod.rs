//! Sparse multivariate polynomials with a fixed number of variables.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalars::{Field, Rational, Ring};

mod json;

pub use json::{poly_from_json, poly_to_json, PolyJson, TermJson};

/// Exponent tuple of fixed length, ordered graded-lex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mono(Vec<u32>);

impl Mono {
    pub fn new(exps: Vec<u32>) -> Self {
        Mono(exps)
    }

    pub fn zero(arity: usize) -> Self {
        Mono(vec![0; arity])
    }

    pub fn unit(i: usize, arity: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Mono(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Mono) -> Option<Mono> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Mono)
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn with(&self, i: usize, e: u32) -> Mono {
        let mut v = self.0.clone();
        v[i] = e;
        Mono(v)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Monomials of one total degree, graded-lex descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSlice {
    pub degree: u32,
    pub arity: usize,
    pub basis: Vec<Mono>,
}

impl GradedSlice {
    pub fn new(arity: usize, degree: u32) -> Self {
        let mut basis = Vec::new();
        let mut cur = vec![0u32; arity];
        fill(&mut cur, 0, degree, &mut basis);
        GradedSlice { degree, arity, basis }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn index_of(&self, m: &Mono) -> Option<usize> {
        // basis is strictly descending
        self.basis.binary_search_by(|b| m.cmp(b)).ok()
    }

    /// Coordinates of the degree-`d` component of `f`.
    pub fn coords<R: Ring>(&self, f: &Poly<R>) -> Vec<R> {
        self.basis.iter().map(|m| f.coeff(m)).collect()
    }

    pub fn from_coords<R: Ring>(&self, v: &[R]) -> Poly<R> {
        let mut out = Poly::zero(self.arity);
        for (m, c) in self.basis.iter().zip(v) {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

fn fill(cur: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Mono>) {
    if cur.is_empty() {
        if left == 0 {
            out.push(Mono(Vec::new()));
        }
        return;
    }
    if i + 1 == cur.len() {
        cur[i] = left;
        out.push(Mono(cur.clone()));
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill(cur, i + 1, left - e, out);
    }
    cur[i] = 0;
}

/// Sparse polynomial in `arity` variables with coefficients in `R`.
#[derive(Clone, PartialEq)]
pub struct Poly<R> {
    arity: usize,
    terms: BTreeMap<Mono, R>,
}

impl<R: Ring> Poly<R> {
    pub fn zero(arity: usize) -> Self {
        Poly { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, R::one())
    }

    pub fn constant(arity: usize, c: R) -> Self {
        Self::monomial(Mono::zero(arity), c)
    }

    pub fn var(i: usize, arity: usize) -> Self {
        assert!(i < arity, "variable index out of range");
        Self::monomial(Mono::unit(i, arity), R::one())
    }

    pub fn monomial(m: Mono, c: R) -> Self {
        let mut out = Self::zero(m.arity());
        out.add_term(m, c);
        out
    }

    pub fn from_terms(arity: usize, iter: impl IntoIterator<Item = (Mono, R)>) -> Self {
        let mut out = Self::zero(arity);
        for (m, c) in iter {
            out.add_term(m, c);
        }
        out
    }

    /// Linear form `sum coeffs[i] * x_i`.
    pub fn linear(coeffs: &[R]) -> Self {
        let n = coeffs.len();
        Self::from_terms(n, coeffs.iter().enumerate().map(|(i, c)| (Mono::unit(i, n), c.clone())))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lex descending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &R)> + ExactSizeIterator {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Mono) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading_term(&self) -> Option<(&Mono, &R)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Mono, c: R) {
        debug_assert_eq!(m.arity(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                old.add_assign(&c);
                if old.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn constant_term(&self) -> R {
        self.coeff(&Mono::zero(self.arity))
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        Poly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_arity(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_arity(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.neg());
        }
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_arity(rhs)?;
        let mut acc: BTreeMap<Mono, R> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m = m1.mul(m2);
                let c = c1.mul(c2);
                match acc.get_mut(&m) {
                    Some(old) => old.add_assign(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Poly { arity: self.arity, terms: acc })
    }

    pub fn scale(&self, k: &R) -> Self {
        if k.is_zero() {
            return Self::zero(self.arity);
        }
        Poly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul(k))).collect(),
        }
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        self.scale(&R::from_rational(q))
    }

    pub fn mul_mono(&self, mono: &Mono, k: &R) -> Self {
        Poly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.mul(k))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.arity);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative in variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            let e = m.get(i);
            if e > 0 {
                out.add_term(m.with(i, e - 1), c.mul(&R::from_i64(e as i64)));
            }
        }
        out
    }

    /// Replaces variable `i` by `images[i]`.
    pub fn substitute(&self, images: &[Poly<R>]) -> Result<Self> {
        if images.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.arity,
            None => 0,
        };
        if let Some(bad) = images.iter().find(|p| p.arity != target) {
            return Err(Error::ArityMismatch { expected: target, found: bad.arity });
        }
        let mut cache: Vec<Vec<Poly<R>>> = images.iter().map(|p| vec![Poly::one(target), p.clone()]).collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = &cache[i][cache[i].len() - 1] * &images[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][e as usize];
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Substitution `x_j -> scale_j * x_{target_j}`; no expansion needed.
    pub fn monomial_substitute(&self, targets: &[(usize, R)]) -> Self {
        assert_eq!(targets.len(), self.arity);
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; self.arity];
            let mut k = c.clone();
            for (j, &ej) in m.exps().iter().enumerate() {
                if ej > 0 {
                    let (t, s) = &targets[j];
                    e[*t] += ej;
                    if !s.is_one() {
                        k = k.mul(&s.pow(ej));
                    }
                }
            }
            out.add_term(Mono(e), k);
        }
        out
    }

    /// Renames variable `j` to `perm[j]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.arity);
        Poly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0u32; self.arity];
                    for (j, &ej) in m.exps().iter().enumerate() {
                        e[perm[j]] = ej;
                    }
                    (Mono(e), c.clone())
                })
                .collect(),
        }
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::from_terms(self.arity, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn try_map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<Poly<S>> {
        let mut out = Poly::zero(self.arity);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Evaluates the variables at scalars.
    pub fn eval(&self, point: &[R]) -> R {
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&point[i].pow(e));
                }
            }
            acc.add_assign(&t);
        }
        acc
    }

    /// Pads or drops trailing variables; dropped variables must not occur.
    pub fn with_arity(&self, arity: usize) -> Result<Self> {
        let mut out = Self::zero(arity);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            if e.len() > arity {
                if e[arity..].iter().any(|&x| x > 0) {
                    return Err(Error::ArityMismatch { expected: arity, found: self.arity });
                }
                e.truncate(arity);
            } else {
                e.resize(arity, 0);
            }
            out.add_term(Mono(e), c.clone());
        }
        Ok(out)
    }
}

impl<R: Field> Poly<R> {
    /// Exact quotient `f / g`, or `NotDivisible`.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        self.check_arity(g)?;
        let (lm, lc) = g.leading_term().ok_or(Error::ZeroDenominator)?;
        let lc_inv = lc.inv().ok_or(Error::ZeroDenominator)?;
        let mut r = self.clone();
        let mut q = Self::zero(self.arity);
        while let Some((rm, rc)) = r.leading_term() {
            let m = rm.div(lm).ok_or(Error::NotDivisible)?;
            let k = rc.mul(&lc_inv);
            for (gm, gc) in &g.terms {
                r.add_term(gm.mul(&m), gc.mul(&k).neg());
            }
            q.add_term(m, k);
        }
        Ok(q)
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
            None => self.clone(),
        }
    }
}

impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        self.try_add(rhs).expect("arity mismatch")
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        self.try_sub(rhs).expect("arity mismatch")
    }
}

impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        self.try_mul(rhs).expect("arity mismatch")
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }
}

impl<R: Ring> Poly<R> {
    /// Formats with the given variable names.
    pub fn fmt_vars(&self, vars: &[String], coef: impl Fn(&R) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            let mono: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(v, e)| if *e == 1 { vars[v].clone() } else { format!("{}^{e}", vars[v]) })
                .collect();
            let cs = crate::scalars::paren_if_compound(&coef(c));
            let (neg, body) = match cs.strip_prefix('-') {
                Some(b) => (true, b.to_string()),
                None => (false, cs.clone()),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mono.is_empty() {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&body);
                out.push('*');
                out.push_str(&mono.join("*"));
            }
        }
        out
    }

    pub fn default_vars(&self) -> Vec<String> {
        (1..=self.arity).map(|i| format!("x{i}")).collect()
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_vars(&self.default_vars(), |c| c.to_string()))
    }
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RatFun;

    type Q = Rational;
    type P = Poly<Q>;

    fn x(i: usize) -> P {
        P::var(i, 2)
    }

    #[test]
    fn mul_examples() {
        let a = &x(0) + &x(1);
        let b = &x(0) - &x(1);
        assert_eq!(&a * &b, &(&x(0) * &x(0)) - &(&x(1) * &x(1)));
        assert_eq!(&a * &P::one(2), a);
        assert_eq!(b.pow(2).to_string(), "x1^2 - 2*x1*x2 + x2^2");
        assert!(matches!(a.try_mul(&P::var(0, 3)), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn exact_div_examples() {
        let f = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        let g = &x(0) - &x(1);
        assert_eq!(f.exact_div(&g).unwrap(), &x(0) + &x(1));
        let h = &(&x(0) * &x(0)) + &(&x(1) * &x(1));
        assert_eq!(h.exact_div(&g).unwrap_err(), Error::NotDivisible);
        let sf = (&x(0) * &x(0)).permute(&[1, 0]);
        let diff = &(&x(0) * &x(0)) - &sf;
        assert_eq!(diff.exact_div(&g).unwrap(), &x(0) + &x(1));
    }

    #[test]
    fn constant_term_examples() {
        let f = &P::constant(2, Q::from(3)) + &x(0);
        assert_eq!(f.constant_term(), Q::from(3));
        assert!((&x(0) * &x(1)).constant_term().is_zero());
        type R = RatFun<Rational>;
        let c = R::param(0, 1);
        let one = R::one();
        let g = &Poly::constant(1, one.sub(&c)) + &Poly::monomial(Mono::unit(0, 1), c.clone());
        assert_eq!(g.constant_term(), one.sub(&c));
    }

    #[test]
    fn substitute_examples() {
        let f = &x(0) * &x(0);
        let g = f.substitute(&[&x(0) - &x(1), x(1)]).unwrap();
        assert_eq!(g.to_string(), "x1^2 - 2*x1*x2 + x2^2");
        // e2 at mean-centered variables is -(x1-x2)^2/4
        let e2 = &x(0) * &x(1);
        let mean = (&x(0) + &x(1)).mul_rational(&"1/2".parse().unwrap());
        let out = e2.substitute(&[&x(0) - &mean, &x(1) - &mean]).unwrap();
        let expect = (&x(0) - &x(1)).pow(2).mul_rational(&"-1/4".parse().unwrap());
        assert_eq!(out, expect);
        let k = P::constant(2, Q::from(5));
        assert_eq!(k.substitute(&[x(1), x(0)]).unwrap(), k);
    }

    #[test]
    fn graded_slice_is_descending_and_complete() {
        let s = GradedSlice::new(3, 4);
        assert_eq!(s.len(), 15);
        assert!(s.basis.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(s.basis[0].exps(), &[4, 0, 0]);
        for (i, m) in s.basis.iter().enumerate() {
            assert_eq!(s.index_of(m), Some(i));
        }
        assert_eq!(GradedSlice::new(2, 0).len(), 1);
    }
}
