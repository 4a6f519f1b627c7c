//! Generator sets, the inverse lexicographic order and the canonical
//! invariants `b_a` orthogonal to all smaller invariant monomials.

use std::collections::BTreeMap;

use crate::dunkl::DunklContext;
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::groups::{coset_orbit_sum, k_subsets};
use crate::polyring::{Mono, Poly};
use crate::scalars::{Rational, Ring, Scalar};

#[cfg(test)]
mod tests;

/// Exponents of a monomial in the generators.
pub type ExponentVector = Vec<u32>;

/// `a' < a` in the inverse lexicographic order: the last nonzero
/// coordinate of `a - a'` is positive.
pub fn inv_lex_less(a: &[u32], a_prime: &[u32]) -> Result<bool> {
    if a.len() != a_prime.len() {
        return Err(Error::ArityMismatch { expected: a.len(), found: a_prime.len() });
    }
    for (x, y) in a.iter().zip(a_prime).rev() {
        if x != y {
            return Ok(x > y);
        }
    }
    Ok(false)
}

fn inv_lex_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// Homogeneous invariant generators with strictly increasing degrees.
#[derive(Clone, Debug)]
pub struct GeneratorSet<S: Scalar> {
    pub gens: Vec<Poly<S>>,
    pub degrees: Vec<u32>,
    pub names: Vec<String>,
}

impl<S: Scalar> GeneratorSet<S> {
    pub fn new(gens: Vec<Poly<S>>, names: Vec<String>) -> Result<Self> {
        let mut degrees = Vec::with_capacity(gens.len());
        for g in &gens {
            if !g.is_homogeneous() || g.is_zero() {
                return Err(Error::InvalidArgument("generators must be nonzero and homogeneous".into()));
            }
            degrees.push(g.degree().unwrap_or(0));
        }
        if degrees.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument("generator degrees must increase strictly".into()));
        }
        Ok(GeneratorSet { gens, degrees, names })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn arity(&self) -> usize {
        self.gens.first().map_or(0, |g| g.arity())
    }

    pub fn weighted_degree(&self, a: &[u32]) -> u32 {
        a.iter().zip(&self.degrees).map(|(x, d)| x * d).sum()
    }

    /// `u^a` as a polynomial.
    pub fn monomial(&self, a: &[u32]) -> Poly<S> {
        let mut out = Poly::one(self.arity());
        for (g, &e) in self.gens.iter().zip(a) {
            if e > 0 {
                out = &out * &g.pow(e);
            }
        }
        out
    }

    /// `u^a` written with the generator names, e.g. `e2^2*e4`.
    pub fn monomial_name(&self, a: &[u32]) -> String {
        let parts: Vec<String> = self
            .names
            .iter()
            .zip(a)
            .filter(|(_, &e)| e > 0)
            .map(|(n, &e)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// All `a` of weighted degree `d`, ascending in the inverse lexicographic order.
    pub fn exponents(&self, d: u32) -> Vec<ExponentVector> {
        let mut out = Vec::new();
        let mut cur = vec![0; self.len()];
        self.enumerate(0, d, &mut cur, &mut out);
        out.sort_by(|a, b| inv_lex_cmp(a, b));
        out
    }

    fn enumerate(&self, k: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if k == self.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let dk = self.degrees[k];
        for e in 0..=rest / dk {
            cur[k] = e;
            self.enumerate(k + 1, rest - e * dk, cur, out);
        }
        cur[k] = 0;
    }
}

impl GeneratorSet<crate::scalars::RatFun<Rational>> {
    /// `e_1, ..., e_n` on `C^n`.
    pub fn elementary(n: usize) -> Self {
        let gens = (1..=n).map(|k| elementary_symmetric(k, n)).collect();
        Self::new(gens, (1..=n).map(|k| format!("e{k}")).collect()).expect("valid generators")
    }

    /// `p_1, ..., p_n` on `C^n`.
    pub fn power_sums(n: usize) -> Self {
        let gens = (1..=n as u32).map(|k| power_sum(k, n)).collect();
        Self::new(gens, (1..=n).map(|k| format!("p{k}")).collect()).expect("valid generators")
    }

    /// Centred `e_2, ..., e_n` on the sum-zero hyperplane, in the
    /// coordinates `t_i = x_i - x_n`.
    pub fn centred(n: usize) -> Self {
        let gens = (2..=n).map(|k| to_difference_coords(&ebar(k, n))).collect();
        Self::new(gens, (2..=n).map(|k| format!("eb{k}")).collect()).expect("valid generators")
    }
}

impl GeneratorSet<crate::scalars::RatFun<crate::scalars::Cyclotomic>> {
    /// `e_2 = z zb` and `e_m = z^m + zb^m`.
    pub fn dihedral(m: u32) -> Self {
        type S = crate::scalars::RatFun<crate::scalars::Cyclotomic>;
        let e2 = Poly::monomial(Mono::new(vec![1, 1]), S::one());
        let em = &Poly::monomial(Mono::new(vec![m, 0]), S::one()) + &Poly::monomial(Mono::new(vec![0, m]), S::one());
        Self::new(vec![e2, em], vec!["e2".into(), format!("e{m}")]).expect("valid generators")
    }
}

/// Elementary symmetric polynomial `e_k` in `n` variables.
pub fn elementary_symmetric<S: Scalar>(k: usize, n: usize) -> Poly<S> {
    Poly::from_terms(
        n,
        k_subsets(n, k).into_iter().map(|set| {
            let mut e = vec![0; n];
            for i in set {
                e[i] = 1;
            }
            (Mono::new(e), S::one())
        }),
    )
}

/// Power sum `p_k` in `n` variables.
pub fn power_sum<S: Scalar>(k: u32, n: usize) -> Poly<S> {
    Poly::from_terms(n, (0..n).map(|i| (Mono::unit(i, n).with(i, k), S::one())))
}

/// `e_k(x_1 - e_1/n, ..., x_n - e_1/n)`.
pub fn ebar<S: Scalar>(k: usize, n: usize) -> Poly<S> {
    if k == 0 {
        return Poly::one(n);
    }
    let mean = Poly::<S>::linear(&vec![S::from_rational(&Rational::new(1, n as i64).expect("n > 0")); n]);
    let shifted: Vec<Poly<S>> = (0..n).map(|i| &Poly::var(i, n) - &mean).collect();
    elementary_symmetric::<S>(k, n).substitute(&shifted).expect("matching arity")
}

/// Restricts a translation-invariant polynomial on `C^n` to the
/// coordinates `t_i = x_i - x_n`, `i < n`.
pub fn to_difference_coords<S: Scalar>(f: &Poly<S>) -> Poly<S> {
    let n = f.arity();
    let mut images: Vec<Poly<S>> = (0..n - 1).map(|i| Poly::var(i, n - 1)).collect();
    images.push(Poly::zero(n - 1));
    f.substitute(&images).expect("matching arity")
}

/// A canonical invariant with its expansion in the generator monomials.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalInvariant<S: Scalar> {
    pub index: ExponentVector,
    /// `(a', coefficient)` in ascending order, ending with `(a, 1)`.
    pub expansion: Vec<(ExponentVector, S)>,
    pub poly: Poly<S>,
}

impl<S: Scalar> CanonicalInvariant<S> {
    pub fn coefficient(&self, a: &[u32]) -> S {
        self.expansion.iter().find(|(b, _)| b == a).map_or(S::zero(), |(_, c)| c.clone())
    }
}

/// `(u^a, poly)` pairs of weighted degree `d`, ascending.
pub fn invariant_monomials<S: Scalar>(gens: &GeneratorSet<S>, d: u32) -> Vec<(ExponentVector, Poly<S>)> {
    gens.exponents(d).into_iter().map(|a| {
        let p = gens.monomial(&a);
        (a, p)
    }).collect()
}

/// Canonical invariants of weighted degree `d`, ascending, computed from one Gram matrix.
pub fn canonical_basis<S: Scalar>(
    gens: &GeneratorSet<S>,
    ctx: &DunklContext<S>,
    d: u32,
) -> Result<Vec<CanonicalInvariant<S>>> {
    let mons = invariant_monomials(gens, d);
    let polys: Vec<Poly<S>> = mons.iter().map(|(_, p)| p.clone()).collect();
    let gram = ctx.gram(&polys, &polys)?;
    (0..mons.len()).map(|i| solve_canonical(&mons, &gram, i)).collect()
}

/// `b_a`: monic in `u^a` and orthogonal to every `u^{a'}` with `a' < a`.
pub fn canonical_invariant<S: Scalar>(
    a: &[u32],
    gens: &GeneratorSet<S>,
    ctx: &DunklContext<S>,
) -> Result<CanonicalInvariant<S>> {
    if a.len() != gens.len() {
        return Err(Error::ArityMismatch { expected: gens.len(), found: a.len() });
    }
    let mons = invariant_monomials(gens, gens.weighted_degree(a));
    let i = mons.iter().position(|(b, _)| b == a).expect("a lies in its own slice");
    let polys: Vec<Poly<S>> = mons[..=i].iter().map(|(_, p)| p.clone()).collect();
    let gram = ctx.gram(&polys[..i], &polys)?;
    solve_canonical(&mons, &gram, i)
}

/// Solves `sum_s G[r][s] x_s = -G[r][i]` for `r, s < i`.
fn solve_canonical<S: Scalar>(
    mons: &[(ExponentVector, Poly<S>)],
    gram: &Matrix<S>,
    i: usize,
) -> Result<CanonicalInvariant<S>> {
    let x = if i == 0 {
        Vec::new()
    } else {
        let a = Matrix::from_fn(i, i, |r, s| gram.get(r, s).clone());
        let rhs: Vec<S> = (0..i).map(|r| gram.get(r, i).neg()).collect();
        a.solve(&rhs)
            .map_err(|e| Error::Internal(format!("orthogonality system is singular ({e})")))?
            .x
    };
    let mut expansion: Vec<(ExponentVector, S)> =
        x.into_iter().enumerate().map(|(s, v)| (mons[s].0.clone(), v)).collect();
    expansion.push((mons[i].0.clone(), S::one()));
    let mut poly = Poly::zero(mons[i].1.arity());
    for (s, (_, v)) in expansion.iter().enumerate() {
        if !v.is_zero() {
            poly = &poly + &mons[s].1.scale(v);
        }
    }
    Ok(CanonicalInvariant { index: mons[i].0.clone(), expansion, poly })
}

/// `e_d^{(c)}`: the canonical invariant at the largest `a` of weighted degree `d`.
pub fn elementary_invariant<S: Scalar>(
    d: u32,
    gens: &GeneratorSet<S>,
    ctx: &DunklContext<S>,
) -> Result<CanonicalInvariant<S>> {
    let top = gens
        .exponents(d)
        .pop()
        .ok_or_else(|| Error::InvalidArgument(format!("no invariants in degree {d}")))?;
    canonical_invariant(&top, gens, ctx)
}

/// Vandermonde `prod_{i<j} (v_i - v_j)` over the given variables.
fn vandermonde<S: Scalar>(vars: &[usize], n: usize) -> Poly<S> {
    let mut out = Poly::one(n);
    for (p, &i) in vars.iter().enumerate() {
        for &j in &vars[p + 1..] {
            out = &out * &(&Poly::var(i, n) - &Poly::var(j, n));
        }
    }
    out
}

/// `sum_s (-1)^s x_s Delta(nabla_{x_1}, .., skip s, .., nabla_{x_k}) Delta(x_1, .., x_k)`.
pub fn iwasaki_mu<S: Scalar>(k: usize, ctx: &DunklContext<S>) -> Result<Poly<S>> {
    let n = ctx.dim();
    if k < 2 || k > n {
        return Err(Error::InvalidArgument(format!("need 2 <= k <= {n}, got {k}")));
    }
    let all: Vec<usize> = (0..k).collect();
    let target = vandermonde::<S>(&all, n);
    let mut out = Poly::zero(n);
    for s in 0..k {
        let rest: Vec<usize> = all.iter().copied().filter(|&i| i != s).collect();
        let op = vandermonde::<S>(&rest, n);
        let t = &Poly::var(s, n) * &ctx.nabla_poly(&op, &target)?;
        // s is 0-based, so (-1)^(s+1)
        out = if s % 2 == 0 { &out - &t } else { &out + &t };
    }
    Ok(out)
}

/// Sum of `mu_k` over the cosets `S_n / (S_k x S_{n-k})`.
pub fn iwasaki_elementary<S: Scalar>(k: usize, ctx: &DunklContext<S>) -> Result<Poly<S>> {
    coset_orbit_sum(ctx.dim(), k, &iwasaki_mu(k, ctx)?)
}

/// `lambda` with `a = lambda * b`, if one exists.
pub fn proportionality<S: Scalar>(a: &Poly<S>, b: &Poly<S>) -> Option<S> {
    if a.arity() != b.arity() {
        return None;
    }
    let Some((m, cb)) = b.leading_term() else {
        return a.is_zero().then(S::zero);
    };
    let lambda = a.coeff(m).div(cb)?;
    (*a == b.scale(&lambda)).then_some(lambda)
}

/// Every expansion coefficient evaluated at `point`; a pole anywhere is an error.
pub fn limit_at<S: Scalar>(
    inv: &CanonicalInvariant<S>,
    gens: &GeneratorSet<S>,
    point: &[Rational],
) -> Result<Poly<S>> {
    let mut out = Poly::zero(gens.arity());
    for (a, c) in &inv.expansion {
        let v = c.specialize(point)?;
        if !v.is_zero() {
            out = &out + &gens.monomial(a).scale(&v);
        }
    }
    Ok(out)
}

/// Invariants of degree `d` killed by `nabla_P` for every invariant monomial
/// `P` of positive degree below `bound`.
pub fn quasiharmonic_space<S: Scalar>(
    d: u32,
    bound: u32,
    gens: &GeneratorSet<S>,
    ctx: &DunklContext<S>,
) -> Result<Vec<Poly<S>>> {
    let basis: Vec<Poly<S>> = invariant_monomials(gens, d).into_iter().map(|(_, p)| p).collect();
    let ops: Vec<Poly<S>> = (1..bound)
        .flat_map(|e| invariant_monomials(gens, e))
        .map(|(_, p)| ctx.dualize(&p))
        .collect();
    let mut rows: BTreeMap<(usize, Mono), usize> = BTreeMap::new();
    let mut cols: Vec<Vec<((usize, Mono), S)>> = Vec::new();
    for f in &basis {
        let mut col = Vec::new();
        for (pi, op) in ops.iter().enumerate() {
            for (m, c) in ctx.nabla_poly(op, f)?.terms() {
                let key = (pi, m.clone());
                let next = rows.len();
                rows.entry(key.clone()).or_insert(next);
                col.push((key, c.clone()));
            }
        }
        cols.push(col);
    }
    let mut mat = Matrix::zeros(rows.len(), basis.len());
    for (j, col) in cols.into_iter().enumerate() {
        for (key, c) in col {
            mat.set(rows[&key], j, c);
        }
    }
    Ok(mat
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let mut p = Poly::zero(gens.arity());
            for (f, c) in basis.iter().zip(&v) {
                if !c.is_zero() {
                    p = &p + &f.scale(c);
                }
            }
            p
        })
        .collect())
}

/// Coordinates of an invariant in the generator monomials of its degree.
pub fn express_in_generators<S: Scalar>(f: &Poly<S>, gens: &GeneratorSet<S>) -> Result<Vec<(ExponentVector, S)>> {
    let d = f.degree().ok_or_else(|| Error::InvalidArgument("zero polynomial".into()))?;
    if !f.is_homogeneous() {
        return Err(Error::InvalidArgument("expected a homogeneous invariant".into()));
    }
    let mons = invariant_monomials(gens, d);
    let mut keys: Vec<Mono> = f.terms().map(|(m, _)| m.clone()).collect();
    for (_, p) in &mons {
        keys.extend(p.terms().map(|(m, _)| m.clone()));
    }
    keys.sort();
    keys.dedup();
    let a = Matrix::from_fn(keys.len(), mons.len(), |i, j| mons[j].1.coeff(&keys[i]));
    let b: Vec<S> = keys.iter().map(|m| f.coeff(m)).collect();
    let sol = a.solve(&b)?;
    Ok(mons.into_iter().map(|(e, _)| e).zip(sol.x).collect())
}
