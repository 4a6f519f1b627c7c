//! Closed forms for `I_2(m)` on the invariant ring `k[e_2, e_m]`.
//!
//! Invariant polynomials are stored as [`Poly`] of arity 2 in the formal
//! variables `E2` (index 0) and `EM` (index 1).

use crate::dunkl::DunklContext;
use crate::error::{Error, Result};
use crate::polyring::{Mono, Poly};
use crate::scalars::{falling_binomial, Field, Rational, Ring, Scalar};

#[cfg(test)]
mod tests;

pub const E2: usize = 0;
pub const EM: usize = 1;

/// `E2^i EM^j`.
pub fn inv_monomial<S: Scalar>(i: u32, j: u32) -> Poly<S> {
    Poly::monomial(Mono::new(vec![i, j]), S::one())
}

/// `2i + mj` for `E2^i EM^j`.
pub fn weighted_degree(mono: &Mono, m: u32) -> u32 {
    2 * mono.get(E2) + m * mono.get(EM)
}

/// Monomials `E2^i EM^j` of weighted degree exactly `d`, `j` ascending.
pub fn monomials_of_weight<S: Scalar>(m: u32, d: u32) -> Vec<Poly<S>> {
    (0..=d / m)
        .filter(|j| (d - m * j).is_multiple_of(2))
        .map(|j| inv_monomial((d - m * j) / 2, j))
        .collect()
}

/// Substitutes `E2 -> z zb`, `EM -> z^m + zb^m`.
pub fn to_zzbar<S: Scalar>(f: &Poly<S>, m: u32) -> Result<Poly<S>> {
    let e2 = Poly::monomial(Mono::new(vec![1, 1]), S::one());
    let em = &Poly::monomial(Mono::new(vec![m, 0]), S::one()) + &Poly::monomial(Mono::new(vec![0, m]), S::one());
    f.substitute(&[e2, em])
}

/// Invariant polynomial from an expansion in `(exp of e2, exp of em)`.
pub fn from_expansion<S: Scalar>(expansion: &[(Vec<u32>, S)]) -> Poly<S> {
    Poly::from_terms(2, expansion.iter().map(|(a, c)| (Mono::new(a.clone()), c.clone())))
}

/// The restriction of the Dunkl Laplacian to `k[e_2, e_m]`:
/// `e2 d2^2 + m em d2 dm + m^2 e2^{m-1} dm^2 + (1 - mC/2) d2 + (m^2/2) delta e2^{m/2-1} dm`.
pub fn laplacian_pde<S: Scalar>(f: &Poly<S>, m: u32, big_c: &S, delta: &S) -> Result<Poly<S>> {
    if f.arity() != 2 {
        return Err(Error::ArityMismatch { expected: 2, found: f.arity() });
    }
    if m % 2 == 1 && !delta.is_zero() {
        return Err(Error::InvalidArgument("delta must vanish for odd m".into()));
    }
    let d2 = f.derivative(E2);
    let dm = f.derivative(EM);
    let mm = S::from_i64(m as i64);
    let mut out = &inv_monomial::<S>(1, 0) * &d2.derivative(E2);
    out = &out + &(&inv_monomial::<S>(0, 1) * &d2.derivative(EM)).scale(&mm);
    out = &out + &(&inv_monomial::<S>(m - 1, 0) * &dm.derivative(EM)).scale(&mm.mul(&mm));
    let lin = S::one().sub(&mm.mul(big_c).mul_rational(&Rational::new(1, 2).expect("nonzero")));
    out = &out + &d2.scale(&lin);
    if m.is_multiple_of(2) && !delta.is_zero() {
        let k = mm.mul(&mm).mul(delta).mul_rational(&Rational::new(1, 2).expect("nonzero"));
        out = &out + &(&inv_monomial::<S>(m / 2 - 1, 0) * &dm).scale(&k);
    }
    Ok(out)
}

/// `(2/m) e2 d/de2 + em d/dem`.
fn euler_op<S: Scalar>(f: &Poly<S>, m: u32) -> Poly<S> {
    let a = (&inv_monomial::<S>(1, 0) * &f.derivative(E2)).mul_rational(&Rational::new(2, m as i64).expect("m > 0"));
    &a + &d_op(f)
}

/// `em d/dem`.
fn d_op<S: Scalar>(f: &Poly<S>) -> Poly<S> {
    &inv_monomial::<S>(0, 1) * &f.derivative(EM)
}

/// Checks the rewriting of `(4/m^2) e2 L` through the operators
/// `E = (2/m) e2 d/de2 + em d/dem` and `D = em d/dem`, multiplied through by `em^2`.
pub fn via_d_identity_check<S: Scalar>(f: &Poly<S>, m: u32, big_c: &S, delta: &S) -> Result<bool> {
    let em2 = inv_monomial::<S>(0, 2);
    let lhs = (&(&inv_monomial::<S>(1, 0) * &laplacian_pde(f, m, big_c, delta)?) * &em2)
        .mul_rational(&Rational::new(4, (m * m) as i64).expect("m > 0"));
    let e = euler_op(f, m);
    let ee = euler_op(&e, m);
    let d = d_op(f);
    let dd = d_op(&d);
    let mut rhs = &em2 * &(&ee - &e.scale(big_c));
    let quad = &inv_monomial::<S>(m, 0).mul_rational(&Rational::from(4)) - &em2;
    rhs = &rhs + &(&quad * &(&dd - &d));
    rhs = &rhs + &(&em2 * &d.scale(&big_c.sub(&S::one())));
    if !delta.is_zero() {
        if m % 2 == 1 {
            return Err(Error::InvalidArgument("delta must vanish for odd m".into()));
        }
        let t = (&inv_monomial::<S>(m / 2, 1) * &d).scale(&delta.mul(&S::from_i64(2)));
        rhs = &rhs + &t;
    }
    Ok(lhs == rhs)
}

/// `b_(0,k)` for `k = 0..=order` from the coefficients of
/// `(1 + em t + e2^m t^2)^c`, each divided by `binom(c, k)`.
pub fn gf_coefficients<S: Scalar>(m: u32, order: u32) -> Result<Vec<Poly<S>>> {
    let c = S::param(0, 1);
    let binom = |top: &S, k: u32| -> S { S::from_ratfun(falling_binomial(top.as_ratfun(), k)) };
    let nat = |n: u32, k: u32| -> S {
        let den = Rational::factorial(k).mul(&Rational::factorial(n - k));
        S::from_rational(&Field::div(&Rational::factorial(n), &den).expect("nonzero"))
    };
    (0..=order)
        .map(|k| {
            let mut out = Poly::zero(2);
            for i in 0..=k / 2 {
                let coef = binom(&c, k - i).mul(&nat(k - i, i));
                out = &out + &inv_monomial::<S>(m * i, k - 2 * i).scale(&coef);
            }
            let d = binom(&c, k);
            d.inv()
                .map(|inv| out.scale(&inv))
                .ok_or_else(|| Error::Internal("binom(c, k) vanished identically".into()))
        })
        .collect()
}

/// Parameters of a Jacobi polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiParams<S> {
    pub a: S,
    pub b: S,
}

impl<S: Scalar> JacobiParams<S> {
    /// `a = -(C + delta + 1)/2`, `b = -(C - delta + 1)/2`.
    pub fn from_multiplicity(big_c: &S, delta: &S) -> Self {
        let h = Rational::new(-1, 2).expect("nonzero");
        JacobiParams {
            a: big_c.add(delta).add(&S::one()).mul_rational(&h),
            b: big_c.sub(delta).add(&S::one()).mul_rational(&h),
        }
    }
}

/// `P_k^{(a,b)}(y)` by the finite sum
/// `sum_s binom(k+a, k-s) binom(k+b, s) ((y-1)/2)^s ((y+1)/2)^{k-s}`.
pub fn jacobi_poly<S: Scalar>(k: u32, params: &JacobiParams<S>) -> Poly<S> {
    let half = S::from_rational(&Rational::new(1, 2).expect("nonzero"));
    let y = Poly::<S>::var(0, 1);
    let ym = (&y - &Poly::one(1)).scale(&half);
    let yp = (&y + &Poly::one(1)).scale(&half);
    let ka = params.a.add(&S::from_i64(k as i64));
    let kb = params.b.add(&S::from_i64(k as i64));
    let mut out = Poly::zero(1);
    for s in 0..=k {
        let coef = S::from_ratfun(falling_binomial(ka.as_ratfun(), k - s))
            .mul(&S::from_ratfun(falling_binomial(kb.as_ratfun(), s)));
        if coef.is_zero() {
            continue;
        }
        out = &out + &(&ym.pow(s) * &yp.pow(k - s)).scale(&coef);
    }
    out
}

/// `(1-y^2) P'' + (b - a - (a+b+2) y) P' + k(k+a+b+1) P`.
pub fn jacobi_operator<S: Scalar>(p: &Poly<S>, k: u32, params: &JacobiParams<S>) -> Poly<S> {
    let y = Poly::<S>::var(0, 1);
    let one = Poly::<S>::one(1);
    let d1 = p.derivative(0);
    let d2 = d1.derivative(0);
    let ab2 = params.a.add(&params.b).add(&S::from_i64(2));
    let lin = &Poly::constant(1, params.b.sub(&params.a)) - &y.scale(&ab2);
    let kk = S::from_i64(k as i64).mul(&params.a.add(&params.b).add(&S::from_i64(k as i64 + 1)));
    &(&(&(&one - &(&y * &y)) * &d2) + &(&lin * &d1)) + &p.scale(&kk)
}

/// `k! e2^{mk/2} / (4^k binom(2k - C + 1, k)) P_k^{(a,b)}(em / (2 e2^{m/2}))` for even `m`.
pub fn b0k_jacobi<S: Scalar>(k: u32, m: u32, big_c: &S, delta: &S) -> Result<Poly<S>> {
    if m % 2 == 1 {
        return Err(Error::InvalidArgument("the Jacobi form needs even m".into()));
    }
    let p = jacobi_poly(k, &JacobiParams::from_multiplicity(big_c, delta));
    let top = S::from_i64(2 * k as i64 + 1).sub(big_c);
    let denom = S::from_ratfun(falling_binomial(top.as_ratfun(), k)).mul(&S::from_i64(4).pow(k));
    let scale = S::from_rational(&Rational::factorial(k))
        .div(&denom)
        .ok_or_else(|| Error::Internal("binom(2k - C + 1, k) vanished identically".into()))?;
    let mut out = Poly::zero(2);
    for (mono, coef) in p.terms() {
        let j = mono.get(0);
        let c = coef.mul_rational(&Rational::new(1, 1i64 << j).expect("nonzero"));
        out = &out + &inv_monomial::<S>(m * (k - j) / 2, j).scale(&c);
    }
    Ok(out.scale(&scale))
}

/// Divides by the coefficient of `EM^k`, returning the normalised polynomial and that scalar.
pub fn normalize_em<S: Scalar>(f: &Poly<S>, k: u32) -> Result<(Poly<S>, S)> {
    let lead = f.coeff(&Mono::new(vec![0, k]));
    let inv = lead.inv().ok_or_else(|| Error::InvalidArgument("no EM^k term".into()))?;
    Ok((f.scale(&inv), lead))
}

/// `(C, delta)` read off the multiplicity of a dihedral context:
/// `C = c(s_1) + c(s_2)`, `delta = c(s_2) - c(s_1)`.
pub fn multiplicity_params<S: Scalar>(ctx: &DunklContext<S>) -> Result<(S, S)> {
    if ctx.group.reflections.len() < 3 || ctx.dim() != 2 {
        return Err(Error::InvalidArgument("expected a dihedral group".into()));
    }
    let c = |i: usize| ctx.mult.values[ctx.group.reflections[i].class].clone();
    Ok((c(1).add(&c(2)), c(2).sub(&c(1))))
}

/// Outcome of comparing the Dunkl Laplacian with `kappa * laplacian_pde`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConventionPin<S: Scalar> {
    pub kappa: S,
    pub checked: usize,
    pub mismatches: Vec<Poly<S>>,
}

/// Fits `kappa` from `L(e2)` and checks `L = kappa * laplacian_pde` on every
/// invariant monomial of weighted degree `<= max_weight`.
pub fn pin_laplacian_convention<S: Scalar>(
    ctx: &DunklContext<S>,
    m: u32,
    max_weight: u32,
) -> Result<ConventionPin<S>> {
    let (big_c, delta) = multiplicity_params(ctx)?;
    let e2 = inv_monomial::<S>(1, 0);
    let l = ctx.laplacian(&to_zzbar(&e2, m)?)?;
    let pde = laplacian_pde(&e2, m, &big_c, &delta)?;
    let kappa = l
        .constant_term()
        .div(&pde.constant_term())
        .ok_or_else(|| Error::Internal("cannot fit the Laplacian scale".into()))?;
    let mut pin = ConventionPin { kappa, checked: 0, mismatches: Vec::new() };
    for d in 0..=max_weight {
        for f in monomials_of_weight::<S>(m, d) {
            let direct = ctx.laplacian(&to_zzbar(&f, m)?)?;
            let closed = to_zzbar(&laplacian_pde(&f, m, &big_c, &delta)?.scale(&pin.kappa), m)?;
            pin.checked += 1;
            if direct != closed {
                pin.mismatches.push(f);
            }
        }
    }
    Ok(pin)
}
