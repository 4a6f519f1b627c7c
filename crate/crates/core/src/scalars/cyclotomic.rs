use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use super::{BaseField, Field, ParamPoly, Rational, Ring};
use crate::error::{Error, Result};

/// Element of the cyclotomic field `Q(zeta_m)`, stored as a residue modulo
/// the m-th cyclotomic polynomial (dense, `phi(m)` coefficients, lowest first).
///
/// Orders 1 and 2 both describe `Q` and are stored as order 1. An order-1
/// element combines with an element of any order by promotion.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

type PolyCache = RwLock<HashMap<u32, Arc<Vec<Rational>>>>;

fn cache() -> &'static PolyCache {
    static CACHE: OnceLock<PolyCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The m-th cyclotomic polynomial, monic, coefficients lowest degree first.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<Rational>> {
    assert!(m >= 1, "cyclotomic order must be positive");
    if let Some(p) = cache().read().expect("cyclotomic cache poisoned").get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by every Phi_d with d | m, d < m
    let mut num = vec![Rational::zero(); m as usize + 1];
    num[0] = Rational::from(-1);
    num[m as usize] = Rational::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            let (q, r) = dense_divrem(&num, &phi_d);
            debug_assert!(r.iter().all(|c| c.is_zero()));
            num = q;
        }
    }
    let p = Arc::new(num);
    cache()
        .write()
        .expect("cyclotomic cache poisoned")
        .insert(m, p.clone());
    p
}

fn trim(v: &mut Vec<Rational>) {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = b[db].clone();
    if r.len() < b.len() {
        return (vec![Rational::zero()], r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let coef = r[i + db].div(&lb).expect("nonzero leading coefficient");
        if coef.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] = r[i + j].sub(&coef.mul(bj));
        }
        q[i] = coef;
    }
    r.truncate(db.max(1));
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

fn dense_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j].add_assign(&ai.mul(bj));
        }
    }
    out
}

fn dense_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, o) in out.iter_mut().enumerate() {
        if let Some(x) = a.get(i) {
            *o = o.add(x);
        }
        if let Some(y) = b.get(i) {
            *o = o.sub(y);
        }
    }
    trim(&mut out);
    out
}

#[cfg(test)]
fn euler_phi(m: u32) -> usize {
    (1..=m).filter(|k| num_integer::gcd(*k, m) == 1).count()
}

impl Cyclotomic {
    /// Reduces an arbitrary dense polynomial in `zeta` modulo `Phi_m`.
    pub fn from_poly(order: u32, poly: &[Rational]) -> Self {
        let (coeffs, width) = if order <= 2 {
            // zeta_1 = 1, zeta_2 = -1
            let sign = if order == 2 { Rational::from(-1) } else { Rational::one() };
            let mut power = Rational::one();
            let mut sum = Rational::zero();
            for c in poly {
                sum.add_assign(&c.mul(&power));
                power = power.mul(&sign);
            }
            (vec![sum], 1)
        } else {
            let phi = cyclotomic_polynomial(order);
            let (_, r) = dense_divrem(poly, &phi);
            (r, phi.len() - 1)
        };
        let mut coeffs = coeffs;
        coeffs.resize(width, Rational::zero());
        Cyclotomic {
            order: if order <= 2 { 1 } else { order },
            coeffs,
        }
    }

    pub fn from_rational_in(order: u32, q: Rational) -> Self {
        Cyclotomic::from_poly(order, &[q])
    }

    /// `zeta_m^j` for any integer `j`.
    pub fn zeta_pow(order: u32, j: i64) -> Self {
        assert!(order >= 1);
        let e = j.rem_euclid(order as i64) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        Cyclotomic::from_poly(order, &poly)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn promote(&self, order: u32) -> Cyclotomic {
        if self.order == order {
            self.clone()
        } else {
            debug_assert_eq!(self.order, 1);
            Cyclotomic::from_rational_in(order, self.coeffs[0].clone())
        }
    }

    fn common_order(&self, rhs: &Self) -> Result<u32> {
        match (self.order, rhs.order) {
            (a, b) if a == b => Ok(a),
            (1, b) => Ok(b),
            (a, 1) => Ok(a),
            (a, b) => Err(Error::OrderMismatch(a, b)),
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        let m = self.common_order(rhs)?;
        let (a, b) = (self.promote(m), rhs.promote(m));
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.add(y)).collect();
        Ok(Cyclotomic { order: m, coeffs })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let m = self.common_order(rhs)?;
        if self.order == 1 {
            return Ok(rhs.promote(m).scale(&self.coeffs[0]));
        }
        if rhs.order == 1 {
            return Ok(self.scale(&rhs.coeffs[0]));
        }
        Ok(Cyclotomic::from_poly(m, &dense_mul(&self.coeffs, &rhs.coeffs)))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.mul(q)).collect(),
        }
    }

    /// Image under the automorphism `zeta -> zeta^{-1}`.
    pub fn conjugate(&self) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        let m = self.order as usize;
        let mut poly = vec![Rational::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = (m - i) % m;
            poly[e] = poly[e].add(c);
        }
        Cyclotomic::from_poly(self.order, &poly)
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        match self.common_order(other) {
            Ok(m) => self.promote(m).coeffs == other.promote(m).coeffs,
            Err(_) => match (self.as_rational(), other.as_rational()) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            },
        }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(b) => (true, b.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "zeta".to_string(),
                _ => format!("zeta^{i}"),
            };
            if mono.is_empty() {
                write!(f, "{body}")?;
            } else if body == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{body}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{}", self, self.order)
    }
}

impl Ring for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_rational_in(1, Rational::zero())
    }
    fn one() -> Self {
        Cyclotomic::from_rational_in(1, Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }
    fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("cyclotomic order mismatch")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.try_add(&rhs.neg()).expect("cyclotomic order mismatch")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("cyclotomic order mismatch")
    }
    fn neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
    fn from_rational(q: &Rational) -> Self {
        Cyclotomic::from_rational_in(1, q.clone())
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        Field::div(self, rhs)
    }
}

impl Field for Cyclotomic {
    /// Extended Euclid against `Phi_m`.
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.order == 1 {
            return Some(Cyclotomic::from_rational_in(1, self.coeffs[0].inv()?));
        }
        let phi = cyclotomic_polynomial(self.order);
        let mut r0: Vec<Rational> = phi.to_vec();
        let mut r1: Vec<Rational> = self.coeffs.clone();
        trim(&mut r1);
        let mut t0 = vec![Rational::zero()];
        let mut t1 = vec![Rational::one()];
        while !(r1.len() == 1 && r1[0].is_zero()) {
            let (q, r) = dense_divrem(&r0, &r1);
            let t2 = dense_sub(&t0, &dense_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t2);
        }
        // r0 is a nonzero constant since Phi_m is irreducible
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].inv()?;
        let t: Vec<Rational> = t0.iter().map(|x| x.mul(&c)).collect();
        Some(Cyclotomic::from_poly(self.order, &t))
    }
}

impl BaseField for Cyclotomic {
    fn to_rational(&self) -> Option<Rational> {
        self.as_rational()
    }

    /// Monic denominator.
    fn canonical_unit(_num: &ParamPoly<Self>, den: &ParamPoly<Self>) -> Self {
        den.leading_coeff()
            .and_then(|c| c.inv())
            .unwrap_or_else(Cyclotomic::one)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![q(-1), q(1)]);
        assert_eq!(*cyclotomic_polynomial(3), vec![q(1), q(1), q(1)]);
        assert_eq!(*cyclotomic_polynomial(4), vec![q(1), q(0), q(1)]);
        assert_eq!(*cyclotomic_polynomial(6), vec![q(1), q(-1), q(1)]);
        assert_eq!(cyclotomic_polynomial(5).len(), 5);
        assert_eq!(cyclotomic_polynomial(12).len() - 1, euler_phi(12));
    }

    #[test]
    fn zeta_squared_order_four() {
        let z = Cyclotomic::zeta_pow(4, 1);
        assert_eq!(z.mul(&z), Cyclotomic::from_rational(&q(-1)));
    }

    #[test]
    fn zeta_times_zeta_squared_order_three() {
        let z = Cyclotomic::zeta_pow(3, 1);
        let z2 = Cyclotomic::zeta_pow(3, 2);
        assert!(z.mul(&z2).is_one());
    }

    #[test]
    fn degenerate_order_one() {
        let a = Cyclotomic::from_rational_in(1, q(2));
        let b = Cyclotomic::from_rational_in(1, q(3));
        assert_eq!(a.mul(&b), Cyclotomic::from_rational(&q(6)));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = Cyclotomic::zeta_pow(3, 1);
        let b = Cyclotomic::zeta_pow(5, 1);
        assert_eq!(a.try_mul(&b), Err(Error::OrderMismatch(3, 5)));
    }

    #[test]
    fn inverse_of_one_plus_zeta() {
        for m in [3u32, 4, 5, 6, 8] {
            let x = Cyclotomic::zeta_pow(m, 1).add(&Cyclotomic::one());
            let y = x.inv().unwrap();
            assert!(x.mul(&y).is_one(), "m={m}");
        }
    }

    #[test]
    fn conjugate_of_zeta_is_inverse() {
        for m in [3u32, 5, 7, 8] {
            let z = Cyclotomic::zeta_pow(m, 1);
            assert_eq!(z.conjugate(), z.inv().unwrap());
            assert_eq!(z.conjugate(), Cyclotomic::zeta_pow(m, -1));
        }
    }

    #[test]
    fn coefficient_vector_has_phi_length() {
        for m in [3u32, 4, 5, 6, 7, 9, 10, 12] {
            assert_eq!(Cyclotomic::zeta_pow(m, 1).coeffs().len(), euler_phi(m));
        }
    }
}
