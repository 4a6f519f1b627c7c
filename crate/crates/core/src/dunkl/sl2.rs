//! The `sl_2` triple spanned by multiplication by `e_2`, the Dunkl Laplacian
//! and the grading operator, checked as matrices on graded slices.

use super::DunklContext;
use crate::error::Result;
use crate::exactla::Matrix;
use crate::polyring::Poly;
use crate::scalars::{Rational, Scalar};

/// Outcome of the slice-by-slice comparison up to some degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sl2Report {
    pub max_degree: u32,
    /// `[E, L] = H` with `H = 2l(1-h_c) + 4 * degree`.
    pub el_is_h: bool,
    /// `[L, E] = H`.
    pub le_is_h: bool,
    /// `[H, E] = 2E` and `[H, L] = -2L`.
    pub weights_are_2: bool,
    /// `[H, E] = 8E` and `[H, L] = -8L`.
    pub weights_are_8: bool,
    /// `(E/2, -L/2, H/4)` satisfies the standard relations.
    pub normalized_ok: bool,
}

impl<S: Scalar> DunklContext<S> {
    /// The grading element `2l(1-h_c) + 4d` on the degree-`d` slice.
    pub fn h_weight(&self, d: u32) -> S {
        let l = S::from_i64(self.dim() as i64);
        l.mul(&S::one().sub(&self.h_c())).mul_rational(&Rational::from(2)).add(&S::from_i64(4 * d as i64))
    }

    /// `L E^k f - E^k L f - 4k E^{k-1} (l(1-h_c)/2 + k - 1 + d) f` for homogeneous `f` of degree `d`.
    pub fn power_commutator_defect(&self, k: u32, f: &Poly<S>) -> Result<Poly<S>> {
        let d = f.degree().unwrap_or(0);
        let ek = self.e2().pow(k);
        let lhs = &self.laplacian(&(&ek * f))? - &(&ek * &self.laplacian(f)?);
        if k == 0 {
            return Ok(lhs);
        }
        let s = self.weight_shift().add(&S::from_i64((k + d) as i64 - 1)).mul(&S::from_i64(4 * k as i64));
        Ok(&lhs - &(&self.e2().pow(k - 1) * f).scale(&s))
    }
}

/// Compares the operators as matrices on every slice of degree `<= max_degree`.
pub fn sl2_report<S: Scalar>(ctx: &DunklContext<S>, max_degree: u32) -> Result<Sl2Report> {
    let mut rep = Sl2Report {
        max_degree,
        el_is_h: true,
        le_is_h: true,
        weights_are_2: true,
        weights_are_8: true,
        normalized_ok: true,
    };
    for d in 0..=max_degree {
        let s = sl2_slice(ctx, d)?;
        rep.el_is_h &= s.el_is_h;
        rep.le_is_h &= s.le_is_h;
        rep.weights_are_2 &= s.weights_are_2;
        rep.weights_are_8 &= s.weights_are_8;
        rep.normalized_ok &= s.normalized_ok;
    }
    Ok(rep)
}

/// The relations on the degree-`d` slice, as maps out of it.
pub fn sl2_slice<S: Scalar>(ctx: &DunklContext<S>, d: u32) -> Result<Sl2Report> {
    let e2 = ctx.e2().clone();
    let mut rep = Sl2Report {
        max_degree: d,
        el_is_h: true,
        le_is_h: true,
        weights_are_2: true,
        weights_are_8: true,
        normalized_ok: true,
    };
    let half = Rational::new(1, 2).expect("nonzero");
    let quarter = Rational::new(1, 4).expect("nonzero");
    {
        let e_up = ctx.operator_matrix(d, d + 2, |f| Ok(&e2 * f))?;
        let n = e_up.cols();
        let hd = Matrix::identity(n).scale(&ctx.h_weight(d));
        let hd2 = Matrix::identity(e_up.rows()).scale(&ctx.h_weight(d + 2));
        // [H, E] on slice d
        let he = hd2.mul(&e_up).sub(&e_up.mul(&hd));
        let e8 = e_up.scale(&S::from_i64(8));
        let e2x = e_up.scale(&S::from_i64(2));
        rep.weights_are_8 &= he == e8;
        rep.weights_are_2 &= he == e2x;

        let l_from_up = ctx.operator_matrix(d + 2, d, |f| ctx.laplacian(f))?;
        let le = l_from_up.mul(&e_up);
        let el = if d >= 2 {
            let l_down = ctx.operator_matrix(d, d - 2, |f| ctx.laplacian(f))?;
            let e_from_down = ctx.operator_matrix(d - 2, d, |f| Ok(&e2 * f))?;
            let hl_lo = Matrix::identity(l_down.rows()).scale(&ctx.h_weight(d - 2));
            let hl = hl_lo.mul(&l_down).sub(&l_down.mul(&hd));
            rep.weights_are_8 &= hl == l_down.scale(&S::from_i64(-8));
            rep.weights_are_2 &= hl == l_down.scale(&S::from_i64(-2));
            // normalized: e = E/2, f = -L/2, h = H/4
            let nf = l_down.scale(&S::from_rational(&half).neg());
            let nh_lo = hl_lo.scale(&S::from_rational(&quarter));
            let nh = hd.scale(&S::from_rational(&quarter));
            let hf = nh_lo.mul(&nf).sub(&nf.mul(&nh));
            rep.normalized_ok &= hf == nf.scale(&S::from_i64(-2));
            e_from_down.mul(&l_down)
        } else {
            Matrix::zeros(n, n)
        };
        rep.le_is_h &= le.sub(&el) == hd;
        rep.el_is_h &= el.sub(&le) == hd;

        // normalized [h, e] = 2e and [e, f] = h on slice d
        let ne_up = e_up.scale(&S::from_rational(&half));
        let nf_up = l_from_up.scale(&S::from_rational(&half).neg());
        let nh = hd.scale(&S::from_rational(&quarter));
        let nh2 = hd2.scale(&S::from_rational(&quarter));
        rep.normalized_ok &= nh2.mul(&ne_up).sub(&ne_up.mul(&nh)) == ne_up.scale(&S::from_i64(2));
        let ef = el.scale(&S::from_rational(&half).mul(&S::from_rational(&half)).neg());
        let fe = nf_up.mul(&ne_up);
        rep.normalized_ok &= ef.sub(&fe) == nh;
    }
    Ok(rep)
}
