//! Dunkl operators, the Dunkl Laplacian and the bilinear form `(f, g)_c`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::groups::ReflectionGroup;
use crate::polyring::{GradedSlice, Mono, Poly};
use crate::scalars::{Field, Rational, Ring, Scalar};

mod sl2;

pub use sl2::{sl2_report, sl2_slice, Sl2Report};

/// Values of the multiplicity function, one per conjugacy class.
#[derive(Clone, Debug)]
pub struct Multiplicity<S> {
    pub values: Vec<S>,
    pub names: Vec<String>,
}

impl<S: Scalar> Multiplicity<S> {
    /// One independent parameter per class: `c`, or `c1, c2, ...`.
    pub fn symbolic(classes: usize) -> Self {
        let names: Vec<String> = if classes == 1 {
            vec!["c".into()]
        } else {
            (1..=classes).map(|i| format!("c{i}")).collect()
        };
        Multiplicity { values: (0..classes).map(|i| S::param(i, classes)).collect(), names }
    }

    /// A single parameter `c` on every class.
    pub fn equal(classes: usize) -> Self {
        Multiplicity { values: vec![S::param(0, 1); classes], names: vec!["c".into()] }
    }

    pub fn rational(values: &[Rational]) -> Self {
        Multiplicity { values: values.iter().map(S::from_rational).collect(), names: Vec::new() }
    }
}

/// Per-reflection data used by the operators.
#[derive(Clone, Debug)]
struct ReflData<S: Scalar> {
    root: Poly<S>,
    /// `c(s) * <y_j, alpha_s>` for each coordinate direction `j`.
    weights: Vec<S>,
}

/// A reflection group together with a multiplicity function.
#[derive(Clone, Debug)]
pub struct DunklContext<S: Scalar> {
    pub group: ReflectionGroup<S::Base>,
    pub mult: Multiplicity<S>,
    refl: Vec<ReflData<S>>,
    /// `e_2` as a polynomial on `V`.
    e2: Poly<S>,
    /// `e_2` turned into an operator polynomial in the dual directions.
    lap_op: Poly<S>,
}

impl<S: Scalar> DunklContext<S> {
    pub fn new(group: ReflectionGroup<S::Base>, mult: Multiplicity<S>) -> Result<Self> {
        if mult.values.len() != group.num_classes() {
            return Err(Error::InvalidArgument(format!(
                "{} multiplicity values for {} classes",
                mult.values.len(),
                group.num_classes()
            )));
        }
        let refl = group
            .reflections
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let c = &mult.values[r.class];
                ReflData {
                    root: group.root_poly(i),
                    weights: r.root.iter().map(|a| c.mul(&S::from_base(a))).collect(),
                }
            })
            .collect();
        let e2 = group.quadratic_invariant();
        let mut ctx = DunklContext { group, mult, refl, e2, lap_op: Poly::zero(0) };
        ctx.lap_op = ctx.dualize(&ctx.e2);
        Ok(ctx)
    }

    pub fn dim(&self) -> usize {
        self.group.dim
    }

    pub fn param_names(&self) -> &[String] {
        &self.mult.names
    }

    /// The quadratic invariant `e_2`.
    pub fn e2(&self) -> &Poly<S> {
        &self.e2
    }

    /// `(f - s f) / alpha_s` for the `i`-th reflection.
    pub fn divided_difference(&self, i: usize, f: &Poly<S>) -> Result<Poly<S>> {
        if let Some((a, b)) = self.group.reflections[i].transposition {
            return Ok(transposition_difference(f, a, b));
        }
        self.divided_difference_generic(i, f)
    }

    /// Divided difference by explicit exact division.
    pub fn divided_difference_generic(&self, i: usize, f: &Poly<S>) -> Result<Poly<S>> {
        let sf = self.group.act(i, f)?;
        (f - &sf).exact_div(&self.refl[i].root).map_err(|e| match e {
            Error::NotDivisible => Error::Internal(format!("reflection {i}: root does not divide (1-s)f")),
            other => other,
        })
    }

    /// `nabla_{y_j} f` for `j = 0..=jmax`, sharing the divided differences.
    fn dunkl_upto(&self, f: &Poly<S>, jmax: usize) -> Result<Vec<Poly<S>>> {
        let mut out: Vec<Poly<S>> = (0..=jmax).map(|j| f.derivative(j)).collect();
        if f.degree().unwrap_or(0) == 0 {
            return Ok(out);
        }
        for (i, r) in self.refl.iter().enumerate() {
            if r.weights[..=jmax].iter().all(|w| w.is_zero()) {
                continue;
            }
            let dd = self.divided_difference(i, f)?;
            if dd.is_zero() {
                continue;
            }
            for (j, w) in r.weights[..=jmax].iter().enumerate() {
                if !w.is_zero() {
                    out[j] = &out[j] - &dd.scale(w);
                }
            }
        }
        Ok(out)
    }

    /// The Dunkl operator in coordinate direction `j`.
    pub fn dunkl_apply(&self, j: usize, f: &Poly<S>) -> Result<Poly<S>> {
        if f.arity() != self.dim() {
            return Err(Error::ArityMismatch { expected: self.dim(), found: f.arity() });
        }
        if j >= self.dim() {
            return Err(Error::InvalidArgument(format!("direction {j} out of range")));
        }
        let mut out = f.derivative(j);
        if f.degree().unwrap_or(0) == 0 {
            return Ok(out);
        }
        for (i, r) in self.refl.iter().enumerate() {
            if r.weights[j].is_zero() {
                continue;
            }
            let dd = self.divided_difference(i, f)?;
            out = &out - &dd.scale(&r.weights[j]);
        }
        Ok(out)
    }

    /// Memoised table of `nabla^beta f`.
    pub fn table<'a>(&'a self, f: &Poly<S>) -> NablaTable<'a, S> {
        NablaTable::new(self, f.clone())
    }

    /// `nabla_p f` for a polynomial `p` in the dual coordinates.
    pub fn nabla_poly(&self, p: &Poly<S>, f: &Poly<S>) -> Result<Poly<S>> {
        if p.arity() != self.dim() || f.arity() != self.dim() {
            return Err(Error::ArityMismatch { expected: self.dim(), found: p.arity().max(f.arity()) });
        }
        let mut table = self.table(f);
        let mut out = Poly::zero(self.dim());
        for (m, c) in p.terms() {
            let t = table.get(m)?;
            out = &out + &t.scale(c);
        }
        Ok(out)
    }

    /// Identifies `V` with `V*` through the invariant form: `x_i -> sum_j B_ij y_j`.
    pub fn dualize(&self, f: &Poly<S>) -> Poly<S> {
        let b = &self.group.form;
        let images: Vec<Poly<S>> = (0..self.dim())
            .map(|i| Poly::linear(&(0..self.dim()).map(|j| S::from_base(b.get(i, j))).collect::<Vec<_>>()))
            .collect();
        f.substitute(&images).expect("matching arity")
    }

    /// The Dunkl Laplacian `L = nabla_{e_2}`.
    pub fn laplacian(&self, f: &Poly<S>) -> Result<Poly<S>> {
        self.nabla_poly(&self.lap_op, f)
    }

    /// The form `(f, g)_c = [nabla_f g]_0`.
    pub fn pairing(&self, f: &Poly<S>, g: &Poly<S>) -> Result<S> {
        let p = self.dualize(f);
        let mut table = self.table(g);
        pair_with_table(&p, &mut table)
    }

    /// Matrix of pairings `(rows_i, cols_j)_c`, columns computed in parallel.
    pub fn gram(&self, rows: &[Poly<S>], cols: &[Poly<S>]) -> Result<Matrix<S>> {
        let duals: Vec<Poly<S>> = rows.iter().map(|f| self.dualize(f)).collect();
        let columns: Vec<Vec<S>> = cols
            .par_iter()
            .map(|g| {
                let mut table = self.table(g);
                duals.iter().map(|p| pair_with_table(p, &mut table)).collect::<Result<Vec<S>>>()
            })
            .collect::<Result<_>>()?;
        Ok(Matrix::from_fn(rows.len(), cols.len(), |i, j| columns[j][i].clone()))
    }

    /// `h_c = (2 / l) * sum_s c(s)`.
    pub fn h_c(&self) -> S {
        let mut acc = S::zero();
        for r in &self.group.reflections {
            acc.add_assign(&self.mult.values[r.class]);
        }
        acc.mul_rational(&Rational::new(2, self.dim() as i64).expect("nonzero rank"))
    }

    /// `l(1 - h_c)/2`, the shift in the `sl_2` weights.
    pub fn weight_shift(&self) -> S {
        let l = S::from_i64(self.dim() as i64);
        l.mul(&S::one().sub(&self.h_c())).mul_rational(&Rational::new(1, 2).expect("nonzero"))
    }

    /// `nabla_p f` through iterated commutators with `L`, for homogeneous `p`
    /// on `V`: `2^{-d} sum_k (-1)^k / (k!(d-k)!) L^{d-k} p L^k`.
    pub fn berest_nabla(&self, p: &Poly<S>, f: &Poly<S>) -> Result<Poly<S>> {
        if !p.is_homogeneous() {
            return Err(Error::InvalidArgument("operator polynomial must be homogeneous".into()));
        }
        let d = p.degree().unwrap_or(0);
        let mut lk = vec![f.clone()];
        for _ in 0..d {
            let next = self.laplacian(lk.last().expect("nonempty"))?;
            lk.push(next);
        }
        let mut out = Poly::zero(self.dim());
        for k in 0..=d {
            let mut t = p * &lk[k as usize];
            for _ in 0..d - k {
                t = self.laplacian(&t)?;
            }
            let coef = Rational::factorial(k)
                .mul(&Rational::factorial(d - k))
                .mul(&Rational::from(1i64 << d));
            let mut coef = Field::inv(&coef).expect("nonzero");
            if k % 2 == 1 {
                coef = coef.neg();
            }
            out = &out + &t.mul_rational(&coef);
        }
        Ok(out)
    }

    /// The functional `phi_c` on a homogeneous polynomial.
    ///
    /// Needs a group with no invariant vectors, so that the degree-2 generator is `e_2`.
    pub fn phi_c(&self, f: &Poly<S>) -> Result<S> {
        if self.group.degrees.first() == Some(&1) {
            return Err(Error::InvalidArgument("phi_c needs a representation without invariant vectors".into()));
        }
        if f.is_zero() {
            return Ok(S::zero());
        }
        if !f.is_homogeneous() {
            let mut acc = S::zero();
            for d in 0..=f.degree().unwrap_or(0) {
                acc.add_assign(&self.phi_c(&f.homogeneous_component(d))?);
            }
            return Ok(acc);
        }
        let deg = f.degree().unwrap_or(0);
        if deg % 2 == 1 {
            return Ok(S::zero());
        }
        let n = deg / 2;
        let e2n = self.e2.pow(n);
        let num = self.pairing(&e2n, f)?;
        let factor = self.frobenius_factor(0, n);
        num.div_exact(&factor)
            .ok_or_else(|| Error::Pole { denominator: factor.fmt_params(self.param_names()) })
    }

    /// `2^d 4^k k! prod_{r<d+k} (l(1-h_c)/2 + r)`: the ratio `(f, g) / phi_c(fg)`
    /// for `f` in `e2^k` times the harmonics of degree `d`.
    pub fn frobenius_factor(&self, d: u32, k: u32) -> S {
        let shift = self.weight_shift();
        let mut acc = S::from_rational(&Rational::factorial(k)).mul(&S::from_i64(2).pow(d + 2 * k));
        for r in 0..d + k {
            acc = acc.mul(&shift.add(&S::from_i64(r as i64)));
        }
        acc
    }

    /// Matrix of a linear operator from the degree-`d` slice to the
    /// degree-`d'` slice (columns are images of basis monomials).
    pub fn operator_matrix(
        &self,
        d: u32,
        d_out: u32,
        op: impl Fn(&Poly<S>) -> Result<Poly<S>> + Sync,
    ) -> Result<Matrix<S>> {
        let src = GradedSlice::new(self.dim(), d);
        let dst = GradedSlice::new(self.dim(), d_out);
        let cols: Vec<Vec<S>> = src
            .basis
            .par_iter()
            .map(|m| {
                let img = op(&Poly::monomial(m.clone(), S::one()))?;
                if img.terms().any(|(mm, _)| mm.degree() != d_out) {
                    return Err(Error::Internal("operator left the target slice".into()));
                }
                Ok(dst.coords(&img))
            })
            .collect::<Result<_>>()?;
        Ok(Matrix::from_fn(dst.len(), src.len(), |i, j| cols[j][i].clone()))
    }
}

fn pair_with_table<S: Scalar>(p: &Poly<S>, table: &mut NablaTable<'_, S>) -> Result<S> {
    let mut acc = S::zero();
    let top = table.root_degree();
    for (m, c) in p.terms() {
        // only full-degree operators reach the constant term of a homogeneous target
        if top.is_some_and(|t| m.degree() > t) {
            continue;
        }
        let t = table.get(m)?;
        let k = t.constant_term();
        if !k.is_zero() {
            acc.add_assign(&c.mul(&k));
        }
    }
    Ok(acc)
}

/// `(f - s f)/(x_a - x_b)` for the transposition of `x_a, x_b`, term by term.
pub fn transposition_difference<S: Scalar>(f: &Poly<S>, a: usize, b: usize) -> Poly<S> {
    let mut out = Poly::zero(f.arity());
    for (m, c) in f.terms() {
        let (p, q) = (m.get(a), m.get(b));
        if p == q {
            continue;
        }
        let (lo, hi, coef) = if p > q { (q, p, c.clone()) } else { (p, q, c.neg()) };
        let gap = hi - lo;
        for t in 0..gap {
            let e = m.with(a, lo + t).with(b, lo + gap - 1 - t);
            out.add_term(e, coef.clone());
        }
    }
    out
}

/// Lazily filled table of `nabla^beta f`, indexed by exponent vectors in the
/// dual coordinates. Each node expands into all children whose lowest
/// nonzero index does not exceed its own, so every node is computed once.
pub struct NablaTable<'a, S: Scalar> {
    ctx: &'a DunklContext<S>,
    nodes: HashMap<Vec<u32>, Poly<S>>,
    expanded: HashMap<Vec<u32>, bool>,
    root_degree: Option<u32>,
}

impl<'a, S: Scalar> NablaTable<'a, S> {
    fn new(ctx: &'a DunklContext<S>, f: Poly<S>) -> Self {
        let root_degree = f.degree();
        let mut nodes = HashMap::new();
        nodes.insert(vec![0; ctx.dim()], f);
        NablaTable { ctx, nodes, expanded: HashMap::new(), root_degree }
    }

    pub fn root_degree(&self) -> Option<u32> {
        self.root_degree
    }

    pub fn get(&mut self, beta: &Mono) -> Result<Poly<S>> {
        self.ensure(beta.exps())?;
        Ok(self.nodes[beta.exps()].clone())
    }

    fn ensure(&mut self, beta: &[u32]) -> Result<()> {
        if self.nodes.contains_key(beta) {
            return Ok(());
        }
        if self.root_degree.is_none_or(|d| beta.iter().sum::<u32>() > d) {
            self.nodes.insert(beta.to_vec(), Poly::zero(self.ctx.dim()));
            return Ok(());
        }
        let j = beta.iter().position(|&e| e > 0).expect("nonzero beta");
        let mut parent = beta.to_vec();
        parent[j] -= 1;
        self.ensure(&parent)?;
        self.expand(&parent)?;
        Ok(())
    }

    fn expand(&mut self, beta: &[u32]) -> Result<()> {
        if self.expanded.contains_key(beta) {
            return Ok(());
        }
        let dim = self.ctx.dim();
        let jmax = beta.iter().position(|&e| e > 0).unwrap_or(dim - 1);
        let f = &self.nodes[beta];
        let children = if f.is_zero() {
            vec![Poly::zero(dim); jmax + 1]
        } else {
            self.ctx.dunkl_upto(f, jmax)?
        };
        for (j, child) in children.into_iter().enumerate() {
            let mut b = beta.to_vec();
            b[j] += 1;
            self.nodes.insert(b, child);
        }
        self.expanded.insert(beta.to_vec(), true);
        Ok(())
    }
}

#[cfg(test)]
mod tests;
