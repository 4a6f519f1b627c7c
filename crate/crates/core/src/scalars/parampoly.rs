use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::{paren_if_compound, Algebra, BaseField, Rational, Ring};

/// Monomial in the multiplicity parameters; trailing zero exponents are trimmed
/// so the same monomial has one representation regardless of parameter count.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PMono(Vec<u32>);

impl PMono {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        PMono(exps)
    }

    pub fn one() -> Self {
        PMono(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        PMono(e)
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &PMono) -> PMono {
        let n = self.0.len().max(other.0.len());
        PMono::new((0..n).map(|i| self.exp(i) + other.exp(i)).collect())
    }

    pub fn div(&self, other: &PMono) -> Option<PMono> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut out = self.0.clone();
        for (i, e) in other.0.iter().enumerate() {
            out[i] = out[i].checked_sub(*e)?;
        }
        Some(PMono::new(out))
    }

    /// Highest parameter index with a nonzero exponent.
    pub fn max_var(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn without(&self, v: usize) -> PMono {
        let mut e = self.0.clone();
        if v < e.len() {
            e[v] = 0;
        }
        PMono::new(e)
    }

    fn with(&self, v: usize, k: u32) -> PMono {
        let mut e = self.0.clone();
        if e.len() <= v {
            e.resize(v + 1, 0);
        }
        e[v] = k;
        PMono::new(e)
    }
}

/// Graded lexicographic: total degree first, then the earlier parameter wins.
impl Ord for PMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            for i in 0..n {
                match self.exp(i).cmp(&other.exp(i)) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for PMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Polynomial in the multiplicity parameters with coefficients in a base field.
#[derive(Clone, PartialEq)]
pub struct ParamPoly<K> {
    terms: BTreeMap<PMono, K>,
}

/// Default display names: `c` for a lone parameter, `c1, c2, ...` otherwise.
pub(crate) fn default_names(nvars: usize) -> Vec<String> {
    if nvars <= 1 {
        vec!["c".to_string()]
    } else {
        (1..=nvars).map(|i| format!("c{i}")).collect()
    }
}

impl<K: BaseField> ParamPoly<K> {
    pub fn constant(k: K) -> Self {
        let mut terms = BTreeMap::new();
        if !k.is_zero() {
            terms.insert(PMono::one(), k);
        }
        ParamPoly { terms }
    }

    /// The i-th parameter as a polynomial.
    pub fn var(i: usize) -> Self {
        Self::monomial(PMono::var(i), K::one())
    }

    pub fn monomial(m: PMono, k: K) -> Self {
        let mut terms = BTreeMap::new();
        if !k.is_zero() {
            terms.insert(m, k);
        }
        ParamPoly { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (PMono, K)>) -> Self {
        let mut out = ParamPoly { terms: BTreeMap::new() };
        for (m, k) in iter {
            out.add_term(m, &k);
        }
        out
    }

    /// Terms in graded-lex descending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&PMono, &K)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_coeff(&self) -> Option<&K> {
        self.terms.iter().next_back().map(|(_, c)| c)
    }

    pub fn leading_term(&self) -> Option<(&PMono, &K)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn coeff(&self, m: &PMono) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    pub fn as_constant(&self) -> Option<K> {
        match self.terms.len() {
            0 => Some(K::zero()),
            1 => self.terms.get(&PMono::one()).cloned(),
            _ => None,
        }
    }

    pub fn max_var(&self) -> Option<usize> {
        self.terms.keys().filter_map(|m| m.max_var()).max()
    }

    pub fn nvars(&self) -> usize {
        self.max_var().map_or(0, |v| v + 1)
    }

    pub fn add_term(&mut self, m: PMono, k: &K) {
        if k.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(c) => {
                c.add_assign(k);
                if c.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, k.clone());
            }
        }
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul(k))).collect(),
        }
    }

    fn mul_term(&self, mono: &PMono, k: &K) -> Self {
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c.mul(k)))
                .collect(),
        }
    }

    pub fn map_coeffs<L: BaseField>(&self, f: impl Fn(&K) -> L) -> ParamPoly<L> {
        ParamPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Evaluates at a point; missing coordinates are treated as zero.
    pub fn eval(&self, point: &[K]) -> K {
        let mut acc = K::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.exps().iter().enumerate() {
                if *e > 0 {
                    let x = point.get(i).cloned().unwrap_or_else(K::zero);
                    t = t.mul(&x.pow(*e));
                }
            }
            acc.add_assign(&t);
        }
        acc
    }

    /// Substitutes parameter `i` by `images[i]`.
    pub fn compose(&self, images: &[ParamPoly<K>]) -> ParamPoly<K> {
        let mut acc = Self::zero();
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for (i, e) in m.exps().iter().enumerate() {
                if *e > 0 {
                    let img = images.get(i).cloned().unwrap_or_else(|| Self::var(i));
                    t = t.mul(&img.pow(*e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn to_rational(&self) -> Option<ParamPoly<Rational>> {
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.to_rational()?);
        }
        Some(out)
    }

    pub fn derivative(&self, v: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                out.add_term(m.with(v, e - 1), &c.mul(&K::from_i64(e as i64)));
            }
        }
        out
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    fn coeffs_in(&self, v: usize) -> Vec<ParamPoly<K>> {
        let mut out: Vec<ParamPoly<K>> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            if out.len() <= e {
                out.resize(e + 1, Self::zero());
            }
            out[e].add_term(m.without(v), c);
        }
        if out.is_empty() {
            out.push(Self::zero());
        }
        out
    }

    fn from_coeffs_in(v: usize, coeffs: &[ParamPoly<K>]) -> Self {
        let mut out = Self::zero();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, k) in &c.terms {
                out.add_term(m.with(v, e as u32), k);
            }
        }
        out
    }

    /// Greatest common divisor, normalized monic (leading coefficient 1).
    ///
    /// Recursive content/primitive-part algorithm with a primitive PRS in the
    /// highest parameter.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.as_constant().is_some() || other.as_constant().is_some() {
            return Self::one();
        }
        let v = match (self.max_var(), other.max_var()) {
            (None, None) => return Self::one(),
            (a, b) => a.max(b).expect("some variable"),
        };
        let fc = self.coeffs_in(v);
        let gc = other.coeffs_in(v);
        let cf = content(&fc);
        let cg = content(&gc);
        let c = cf.gcd(&cg);
        let mut a = primitive(&fc, &cf);
        let mut b = primitive(&gc, &cg);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !is_zero_vec(&b) {
            let r = prem(&a, &b);
            a = b;
            b = if is_zero_vec(&r) {
                r
            } else {
                let cr = content(&r);
                primitive(&r, &cr)
            };
        }
        c.mul(&Self::from_coeffs_in(v, &a)).monic()
    }
}

fn is_zero_vec<K: BaseField>(v: &[ParamPoly<K>]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn trim_vec<K: BaseField>(v: &mut Vec<ParamPoly<K>>) {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn content<K: BaseField>(coeffs: &[ParamPoly<K>]) -> ParamPoly<K> {
    let mut g = ParamPoly::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        ParamPoly::one()
    } else {
        g
    }
}

fn primitive<K: BaseField>(coeffs: &[ParamPoly<K>], cont: &ParamPoly<K>) -> Vec<ParamPoly<K>> {
    let mut out: Vec<ParamPoly<K>> = coeffs
        .iter()
        .map(|c| c.div_exact(cont).expect("content divides every coefficient"))
        .collect();
    trim_vec(&mut out);
    out
}

/// Pseudo-remainder of dense polynomials over `K[lower parameters]`.
fn prem<K: BaseField>(a: &[ParamPoly<K>], b: &[ParamPoly<K>]) -> Vec<ParamPoly<K>> {
    let mut r = a.to_vec();
    trim_vec(&mut r);
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db && !is_zero_vec(&r) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<ParamPoly<K>> = r.iter().map(|c| c.mul(&lb)).collect();
        for (j, bj) in b.iter().enumerate() {
            next[shift + j] = next[shift + j].sub(&lr.mul(bj));
        }
        next.pop();
        trim_vec(&mut next);
        r = next;
        if r.len() == 1 && db == 0 {
            r = vec![ParamPoly::zero()];
        }
    }
    r
}

impl<K: BaseField> Ring for ParamPoly<K> {
    fn zero() -> Self {
        ParamPoly { terms: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::constant(K::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&PMono::one()).is_some_and(|c| c.is_one())
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &c.neg());
        }
        out
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if let Some(k) = rhs.as_constant() {
            return self.scale(&k);
        }
        if let Some(k) = self.as_constant() {
            return rhs.scale(&k);
        }
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &c1.mul(c2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(K::from_rational(q))
    }

    /// Multivariate division by leading terms; exact whenever `rhs | self`.
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if let Some(k) = rhs.as_constant() {
            return Some(self.scale(&k.inv()?));
        }
        let (lm, lc) = rhs.leading_term()?;
        let lc_inv = lc.inv()?;
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some((rm, rc)) = r.leading_term() {
            let m = rm.div(lm)?;
            let k = rc.mul(&lc_inv);
            r = r.sub(&rhs.mul_term(&m, &k));
            q.add_term(m, &k);
        }
        Some(q)
    }
}

impl<K: BaseField> Algebra<K> for ParamPoly<K> {
    fn from_base(k: &K) -> Self {
        Self::constant(k.clone())
    }
    fn scale_base(&self, k: &K) -> Self {
        self.scale(k)
    }
}

impl<K: BaseField> ParamPoly<K> {
    /// Formats with explicit parameter names.
    pub fn fmt_with(&self, names: &[String]) -> String {
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
                .map(|(v, e)| {
                    let name = names.get(v).cloned().unwrap_or_else(|| format!("c{}", v + 1));
                    if *e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            let cs = paren_if_compound(&c.to_string());
            let (neg, body) = match cs.strip_prefix('-') {
                Some(b) => (true, b.to_string()),
                None => (false, cs.clone()),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
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
}

impl<K: BaseField> fmt::Display for ParamPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&default_names(self.nvars())))
    }
}

impl<K: BaseField> fmt::Debug for ParamPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = ParamPoly<Rational>;

    fn c() -> P {
        P::var(0)
    }

    fn k(v: i64) -> P {
        P::from_i64(v)
    }

    #[test]
    fn gcd_univariate() {
        // gcd(c^2 - 1, c - 1) = c - 1
        let f = c().mul(&c()).sub(&k(1));
        let g = c().sub(&k(1));
        assert_eq!(f.gcd(&g), g);
        assert_eq!(k(2).gcd(&c()), k(1));
    }

    #[test]
    fn gcd_bivariate() {
        let x = P::var(0);
        let y = P::var(1);
        let common = x.add(&y).add(&k(1));
        let f = common.mul(&x.sub(&y));
        let g = common.mul(&x.mul(&y).add(&k(3)));
        assert_eq!(f.gcd(&g), common.monic());
        assert!(x.gcd(&y).is_one());
    }

    #[test]
    fn exact_division_detects_remainder() {
        let f = c().mul(&c()).sub(&k(1));
        assert_eq!(f.div_exact(&c().add(&k(1))), Some(c().sub(&k(1))));
        assert_eq!(f.div_exact(&c()), None);
    }

    #[test]
    fn display_graded_lex() {
        let f = c().mul(&k(-4)).add(&k(1));
        assert_eq!(f.to_string(), "-4*c+1");
        let g = P::var(0).mul(&P::var(1)).add(&P::var(1).pow(2)).sub(&k(3));
        assert_eq!(g.to_string(), "c1*c2+c2^2-3");
    }
}
