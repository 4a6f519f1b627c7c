//! Verification suites behind `dunkl verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::setup::{Params, Setup};
use crate::dihedral;
use crate::dunkl::{sl2_slice, DunklContext, Multiplicity};
use crate::error::{Error, Result};
use crate::groups::{build_symmetric, build_symmetric_reduced, GroupKind};
use crate::invariants::{
    canonical_basis, canonical_invariant, ebar, elementary_invariant, invariant_monomials, iwasaki_elementary,
    limit_at, power_sum, proportionality, quasiharmonic_space, GeneratorSet,
};
use crate::polyring::{GradedSlice, Mono, Poly};
use crate::scalars::{ratfun_from_rational, Field, RatFun, Rational, Ring, Scalar};

pub const SUITES: &[&str] = &[
    "berest",
    "commute",
    "frobenius",
    "generators",
    "gf",
    "iwasaki",
    "jacobi",
    "kernel",
    "laplacian",
    "limit",
    "nablapr",
    "orthogonality",
    "phic-poly",
    "sl2",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub got: String,
}

/// A computed quantity worth reporting, such as a proportionality constant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reported {
    pub input: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<Reported>,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report { suite: suite.into(), cases: 0, failures: Vec::new(), values: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, input: impl FnOnce() -> String, expected: impl FnOnce() -> String, got: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure { input: input(), expected: expected(), got: got() });
        }
    }

    fn value(&mut self, input: String, value: String) {
        self.values.push(Reported { input, value });
    }
}

/// Bounds shared by the suites; `None` picks the per-suite default.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub group: GroupKind,
    pub params: Params,
    pub max_degree: Option<u32>,
    pub order: Option<u32>,
    pub seed: u64,
    pub samples: Option<usize>,
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Report> {
    match name {
        "commute" => commute(cfg),
        "sl2" => sl2(cfg),
        "berest" => berest(cfg),
        "orthogonality" => orthogonality(cfg),
        "frobenius" => frobenius(cfg),
        "kernel" => kernel(cfg),
        "gf" => gf(cfg),
        "jacobi" => jacobi(cfg),
        "limit" => limit(cfg),
        "iwasaki" => iwasaki(cfg),
        "nablapr" => nablapr(cfg),
        "phic-poly" => phic_poly(cfg),
        "laplacian" => laplacian(cfg),
        "generators" => generators(cfg),
        other => Err(Error::InvalidArgument(format!("unknown suite {other:?}; known: {}", SUITES.join(", ")))),
    }
}

type Q = RatFun<Rational>;

fn show<S: Scalar>(ctx: &DunklContext<S>, f: &Poly<S>) -> String {
    let names = ctx.param_names().to_vec();
    f.fmt_vars(&ctx.group.var_names(), |c| c.fmt_params(&names))
}

fn show_with<S: Scalar>(f: &Poly<S>, vars: &[String], names: &[String]) -> String {
    f.fmt_vars(vars, |c| c.fmt_params(names))
}

fn symmetric_n(cfg: &SuiteConfig, suite: &str) -> Result<usize> {
    match cfg.group {
        GroupKind::Symmetric(n) | GroupKind::SymmetricReduced(n) => Ok(n),
        GroupKind::Dihedral(_) => Err(Error::InvalidArgument(format!("suite {suite} needs a symmetric group"))),
    }
}

fn dihedral_m(cfg: &SuiteConfig, suite: &str) -> Result<u32> {
    match cfg.group {
        GroupKind::Dihedral(m) => Ok(m),
        _ => Err(Error::InvalidArgument(format!("suite {suite} needs a dihedral group"))),
    }
}

/// The group itself, or its sum-zero model when the suite needs `V^W = 0`.
fn setup_without_fixed_vectors(cfg: &SuiteConfig) -> Result<Setup> {
    match cfg.group {
        GroupKind::Symmetric(n) => Setup::new(GroupKind::SymmetricReduced(n), &cfg.params),
        g => Setup::new(g, &cfg.params),
    }
}

fn all_monomials(arity: usize, max_degree: u32) -> Vec<Mono> {
    (0..=max_degree).flat_map(|d| GradedSlice::new(arity, d).basis).collect()
}

fn random_poly<S: Scalar>(rng: &mut ChaCha8Rng, arity: usize, degree: u32, homogeneous: bool) -> Poly<S> {
    loop {
        let terms = rng.gen_range(1..=4);
        let mut p = Poly::zero(arity);
        for _ in 0..terms {
            let d = if homogeneous { degree } else { rng.gen_range(0..=degree) };
            let mut e = vec![0u32; arity];
            for _ in 0..d {
                e[rng.gen_range(0..arity)] += 1;
            }
            let mut k = rng.gen_range(-3i64..=3);
            if k == 0 {
                k = 1;
            }
            p.add_term(Mono::new(e), S::from_i64(k));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

fn commute(cfg: &SuiteConfig) -> Result<Report> {
    let setup = Setup::new(cfg.group, &cfg.params)?;
    with_setup!(setup, ctx, _gens, {
        let default = match cfg.group {
            GroupKind::Dihedral(m) => m + 2,
            _ => 6,
        };
        commute_on(ctx, cfg.max_degree.unwrap_or(default))
    })
}

/// `nabla_i nabla_j f = nabla_j nabla_i f` on every monomial of degree `<= max_degree`.
pub fn commute_on<S: Scalar>(ctx: &DunklContext<S>, max_degree: u32) -> Result<Report> {
    let mut rep = Report::new("commute");
    let n = ctx.dim();
    let mons = all_monomials(n, max_degree);
    let rows: Vec<Vec<(usize, usize, bool, String)>> = {
        use rayon::prelude::*;
        mons.par_iter()
            .map(|m| {
                let f = Poly::monomial(m.clone(), S::one());
                let first: Vec<Poly<S>> = (0..n).map(|j| ctx.dunkl_apply(j, &f)).collect::<Result<_>>()?;
                let mut out = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        let a = ctx.dunkl_apply(i, &first[j])?;
                        let b = ctx.dunkl_apply(j, &first[i])?;
                        let diff = &a - &b;
                        out.push((i, j, diff.is_zero(), if diff.is_zero() { String::new() } else { show(ctx, &diff) }));
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?
    };
    for (m, row) in mons.iter().zip(rows) {
        for (i, j, ok, got) in row {
            rep.check(
                ok,
                || format!("f={}, i={}, j={}", show(ctx, &Poly::monomial(m.clone(), S::one())), i + 1, j + 1),
                || "0".into(),
                || got,
            );
        }
    }
    Ok(rep)
}

fn sl2(cfg: &SuiteConfig) -> Result<Report> {
    let setup = setup_without_fixed_vectors(cfg)?;
    with_setup!(setup, ctx, _gens, {
        let default = if matches!(cfg.group, GroupKind::Dihedral(_)) { 8 } else { 6 };
        sl2_on(ctx, cfg.max_degree.unwrap_or(default))
    })
}

/// `[L, E] = H`, `[H, E] = 8E`, `[H, L] = -8L`, and the standard relations
/// for `(E/2, -L/2, H/4)`, slice by slice.
pub fn sl2_on<S: Scalar>(ctx: &DunklContext<S>, max_degree: u32) -> Result<Report> {
    let mut rep = Report::new("sl2");
    for d in 0..=max_degree {
        let s = sl2_slice(ctx, d)?;
        let input = || format!("degree {d}");
        rep.check(s.le_is_h, input, || "[L,E] = H".into(), || "[L,E] != H".into());
        rep.check(s.weights_are_8, input, || "[H,E] = 8E, [H,L] = -8L".into(), || "different weights".into());
        rep.check(s.normalized_ok, input, || "standard relations for (E/2, -L/2, H/4)".into(), || "violated".into());
    }
    Ok(rep)
}

fn berest(cfg: &SuiteConfig) -> Result<Report> {
    let setup = Setup::new(cfg.group, &cfg.params)?;
    with_setup!(setup, ctx, _gens, { berest_on(ctx, cfg.samples.unwrap_or(25), cfg.seed) })
}

/// Iterated commutators with `L` against direct evaluation of `nabla_p`,
/// on seeded random `p` (homogeneous, degree `<= 3`) and `f` (degree `<= 5`).
pub fn berest_on<S: Scalar>(ctx: &DunklContext<S>, samples: usize, seed: u64) -> Result<Report> {
    let mut rep = Report::new("berest");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let dp = rng.gen_range(1..=3);
        let p: Poly<S> = random_poly(&mut rng, ctx.dim(), dp, true);
        let f: Poly<S> = random_poly(&mut rng, ctx.dim(), 5, false);
        let via_l = ctx.berest_nabla(&p, &f)?;
        let direct = ctx.nabla_poly(&ctx.dualize(&p), &f)?;
        rep.check(
            via_l == direct,
            || format!("p={}, f={}", show(ctx, &p), show(ctx, &f)),
            || show(ctx, &direct),
            || show(ctx, &via_l),
        );
    }
    Ok(rep)
}

fn orthogonality(cfg: &SuiteConfig) -> Result<Report> {
    let setup = Setup::new(cfg.group, &cfg.params)?;
    with_setup!(setup, ctx, gens, { orthogonality_on(ctx, gens, cfg.max_degree.unwrap_or(6)) })
}

/// Triangularity, orthogonality against smaller monomials, and mutual
/// orthogonality of the canonical basis in every weighted degree.
pub fn orthogonality_on<S: Scalar>(ctx: &DunklContext<S>, gens: &GeneratorSet<S>, max_degree: u32) -> Result<Report> {
    let mut rep = Report::new("orthogonality");
    let names = ctx.param_names().to_vec();
    for d in 0..=max_degree {
        let mons = invariant_monomials(gens, d);
        let basis = canonical_basis(gens, ctx, d)?;
        let polys: Vec<Poly<S>> = mons.iter().map(|(_, p)| p.clone()).collect();
        let bpolys: Vec<Poly<S>> = basis.iter().map(|b| b.poly.clone()).collect();
        let against_mons = ctx.gram(&polys, &bpolys)?;
        let mutual = ctx.gram(&bpolys, &bpolys)?;
        for (i, b) in basis.iter().enumerate() {
            let label = gens.monomial_name(&b.index);
            rep.check(
                b.coefficient(&b.index).is_one() && b.expansion.iter().all(|(a, _)| gens.weighted_degree(a) == d),
                || format!("b[{label}] leading coefficient"),
                || "1".into(),
                || b.coefficient(&b.index).fmt_params(&names),
            );
            for (r, (a, _)) in mons.iter().enumerate().take(i) {
                let v = against_mons.get(r, i);
                rep.check(
                    v.is_zero(),
                    || format!("(u^{}, b[{label}])", gens.monomial_name(a)),
                    || "0".into(),
                    || v.fmt_params(&names),
                );
            }
            for (j, other) in basis.iter().enumerate().filter(|(j, _)| *j != i) {
                let v = mutual.get(i, j);
                rep.check(
                    v.is_zero(),
                    || format!("(b[{label}], b[{}])", gens.monomial_name(&other.index)),
                    || "0".into(),
                    || v.fmt_params(&names),
                );
            }
        }
    }
    Ok(rep)
}

fn frobenius(cfg: &SuiteConfig) -> Result<Report> {
    let setup = setup_without_fixed_vectors(cfg)?;
    with_setup!(setup, ctx, _gens, { frobenius_on(ctx, cfg.max_degree.unwrap_or(6), cfg.seed) })
}

/// Dunkl-harmonic polynomials of degree `d`: the kernel of `L` on the slice.
pub fn harmonic_basis<S: Scalar>(ctx: &DunklContext<S>, d: u32) -> Result<Vec<Poly<S>>> {
    let slice = GradedSlice::new(ctx.dim(), d);
    if d < 2 {
        return Ok(slice.basis.iter().map(|m| Poly::monomial(m.clone(), S::one())).collect());
    }
    let mat = ctx.operator_matrix(d, d - 2, |f| ctx.laplacian(f))?;
    Ok(mat.kernel_basis().iter().map(|v| slice.from_coords(v)).collect())
}

/// `(e2^k h, g) = phi_c(e2^k h g) 2^d 4^k k! prod_{r<d+k} (l(1-h_c)/2 + r)` for harmonic `h` of degree `d`.
pub fn frobenius_on<S: Scalar>(ctx: &DunklContext<S>, max_degree: u32, seed: u64) -> Result<Report> {
    let mut rep = Report::new("frobenius");
    let names = ctx.param_names().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for total in 0..=max_degree {
        for k in 0..=total / 2 {
            let d = total - 2 * k;
            let harmonic = harmonic_basis(ctx, d)?;
            for h in harmonic.iter().take(2) {
                let f = &ctx.e2().pow(k) * h;
                let g: Poly<S> = random_poly(&mut rng, ctx.dim(), total, true);
                let lhs = ctx.pairing(&f, &g)?;
                let rhs = ctx.phi_c(&(&f * &g))?.mul(&ctx.frobenius_factor(d, k));
                rep.check(
                    lhs == rhs,
                    || format!("d={d}, k={k}, h={}, g={}", show(ctx, h), show(ctx, &g)),
                    || lhs.fmt_params(&names),
                    || rhs.fmt_params(&names),
                );
            }
        }
    }
    Ok(rep)
}

fn kernel(cfg: &SuiteConfig) -> Result<Report> {
    let setup = Setup::new(cfg.group, &cfg.params)?;
    match (&setup, cfg.group) {
        (Setup::Dihedral(ctx, gens), GroupKind::Dihedral(m)) => {
            prop_kernel_on(ctx, gens, m, cfg.max_degree.unwrap_or(2 * m + 4))
        }
        _ => with_setup!(setup, ctx, gens, { quasiharmonic_on(ctx, gens) }),
    }
}

/// For dihedral groups: `L^{a1+1} b_a = 0` and `b_a = e2^{a1} b_(0,a2)`.
pub fn prop_kernel_on<S: Scalar>(ctx: &DunklContext<S>, gens: &GeneratorSet<S>, m: u32, max_weight: u32) -> Result<Report> {
    let mut rep = Report::new("kernel");
    let _ = m;
    for d in 0..=max_weight {
        for b in canonical_basis(gens, ctx, d)? {
            let (a1, a2) = (b.index[0], b.index[1]);
            let mut t = b.poly.clone();
            for _ in 0..=a1 {
                t = ctx.laplacian(&t)?;
            }
            let label = gens.monomial_name(&b.index);
            rep.check(t.is_zero(), || format!("L^{} b[{label}]", a1 + 1), || "0".into(), || show(ctx, &t));
            let base = canonical_invariant(&[0, a2], gens, ctx)?;
            let want = &gens.gens[0].pow(a1) * &base.poly;
            rep.check(
                want == b.poly,
                || format!("b[{label}] = e2^{a1} b[{}]", gens.monomial_name(&[0, a2])),
                || show(ctx, &want),
                || show(ctx, &b.poly),
            );
        }
    }
    Ok(rep)
}

/// `nabla_P e_{d_k}^{(c)} = 0` for invariant monomials `P` of positive degree
/// `< d_k`, and a one-dimensional solution space in degree `d_k`.
pub fn quasiharmonic_on<S: Scalar>(ctx: &DunklContext<S>, gens: &GeneratorSet<S>) -> Result<Report> {
    let mut rep = Report::new("kernel");
    for &dk in &gens.degrees {
        let e = elementary_invariant(dk, gens, ctx)?;
        for d in 1..dk {
            for (a, p) in invariant_monomials(gens, d) {
                let v = ctx.nabla_poly(&ctx.dualize(&p), &e.poly)?;
                rep.check(
                    v.is_zero(),
                    || format!("nabla[{}] e_{dk}", gens.monomial_name(&a)),
                    || "0".into(),
                    || show(ctx, &v),
                );
            }
        }
        let space = quasiharmonic_space(dk, dk, gens, ctx)?;
        rep.check(space.len() == 1, || format!("solution space in degree {dk}"), || "1".into(), || space.len().to_string());
    }
    Ok(rep)
}

type C = RatFun<crate::scalars::Cyclotomic>;

fn gf(cfg: &SuiteConfig) -> Result<Report> {
    let m = dihedral_m(cfg, "gf")?;
    let setup = Setup::new(cfg.group, &Params::Equal)?;
    let Setup::Dihedral(ctx, gens) = &setup else { unreachable!() };
    gf_on(ctx, gens, m, cfg.order.unwrap_or(3))
}

/// Coefficients of `(1 + em t + e2^m t^2)^c` against the solver, equal parameters.
pub fn gf_on(ctx: &DunklContext<C>, gens: &GeneratorSet<C>, m: u32, order: u32) -> Result<Report> {
    let mut rep = Report::new("gf");
    let names = ctx.param_names().to_vec();
    let vars = vec!["e2".to_string(), format!("e{m}")];
    let series: Vec<Poly<Q>> = dihedral::gf_coefficients(m, order)?;
    for (k, f) in series.iter().enumerate() {
        let b = canonical_invariant(&[0, k as u32], gens, ctx)?;
        let got = dihedral::from_expansion(&b.expansion);
        let want = f.map_coeffs(ratfun_from_rational);
        rep.check(
            got == want,
            || format!("m={m}, k={k}"),
            || show_with(&want, &vars, &names),
            || show_with(&got, &vars, &names),
        );
    }
    Ok(rep)
}

fn jacobi(cfg: &SuiteConfig) -> Result<Report> {
    let m = dihedral_m(cfg, "jacobi")?;
    if m % 2 == 1 {
        return Err(Error::InvalidArgument("suite jacobi needs even m".into()));
    }
    let setup = Setup::new(cfg.group, &Params::Symbolic)?;
    let Setup::Dihedral(ctx, gens) = &setup else { unreachable!() };
    jacobi_on(ctx, gens, m, cfg.order.unwrap_or(3))
}

/// The Jacobi closed form against the solver after normalising the `em^k`
/// coefficient; the normalising scalar is reported.
pub fn jacobi_on(ctx: &DunklContext<C>, gens: &GeneratorSet<C>, m: u32, order: u32) -> Result<Report> {
    let mut rep = Report::new("jacobi");
    let names = ctx.param_names().to_vec();
    let vars = vec!["e2".to_string(), format!("e{m}")];
    let (big_c, delta) = dihedral::multiplicity_params(ctx)?;
    let params = dihedral::JacobiParams::from_multiplicity(&big_c, &delta);
    for k in 0..=order {
        let p = dihedral::jacobi_poly(k, &params);
        let killed = dihedral::jacobi_operator(&p, k, &params);
        rep.check(killed.is_zero(), || format!("J P_{k}"), || "0".into(), || show_with(&killed, &["y".into()], &names));
        let b = canonical_invariant(&[0, k], gens, ctx)?;
        let canon = dihedral::from_expansion(&b.expansion);
        let (closed, scalar) = dihedral::normalize_em(&dihedral::b0k_jacobi(k, m, &big_c, &delta)?, k)?;
        rep.check(
            closed == canon,
            || format!("m={m}, k={k}"),
            || show_with(&canon, &vars, &names),
            || show_with(&closed, &vars, &names),
        );
        rep.value(format!("scalar k={k}"), scalar.fmt_params(&names));
    }
    Ok(rep)
}

fn limit(cfg: &SuiteConfig) -> Result<Report> {
    let n = symmetric_n(cfg, "limit")?;
    limit_on(n)
}

/// `e_k^{(c)}` at `c = 1/n` against the centred elementary polynomials.
pub fn limit_on(n: usize) -> Result<Report> {
    let mut rep = Report::new("limit");
    let ctx = DunklContext::<Q>::new(build_symmetric(n)?, Multiplicity::symbolic(1))?;
    let gens = GeneratorSet::elementary(n);
    let at = [Rational::new(1, n as i64)?];
    for k in 2..=n {
        let e = elementary_invariant(k as u32, &gens, &ctx)?;
        let want = ebar::<Q>(k, n);
        match limit_at(&e, &gens, &at) {
            Ok(got) => {
                let same = got == want;
                rep.check(same, || format!("n={n}, k={k}"), || show(&ctx, &want), || show(&ctx, &got));
                if same {
                    rep.value(format!("n={n}, k={k}"), format!("eb{k}"));
                }
            }
            Err(Error::Pole { denominator }) => {
                rep.check(false, || format!("n={n}, k={k}"), || show(&ctx, &want), || format!("pole at {denominator}"))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(rep)
}

fn iwasaki(cfg: &SuiteConfig) -> Result<Report> {
    let n = symmetric_n(cfg, "iwasaki")?;
    iwasaki_on(n)
}

/// The coset sum of `mu_k` is a nonzero multiple of `e_k^{(c)}`; the multiple is reported.
pub fn iwasaki_on(n: usize) -> Result<Report> {
    let mut rep = Report::new("iwasaki");
    let ctx = DunklContext::<Q>::new(build_symmetric(n)?, Multiplicity::symbolic(1))?;
    let gens = GeneratorSet::elementary(n);
    let names = ctx.param_names().to_vec();
    for k in 2..=n {
        let e = elementary_invariant(k as u32, &gens, &ctx)?;
        let sum = iwasaki_elementary(k, &ctx)?;
        let alpha = proportionality(&e.poly, &sum).filter(|a| !a.is_zero());
        rep.check(
            alpha.is_some(),
            || format!("n={n}, k={k}"),
            || "nonzero multiple of e_k^(c)".into(),
            || show(&ctx, &sum),
        );
        if let Some(a) = alpha {
            rep.value(format!("alpha n={n}, k={k}"), a.fmt_params(&names));
        }
    }
    Ok(rep)
}

fn nablapr(cfg: &SuiteConfig) -> Result<Report> {
    let n = symmetric_n(cfg, "nablapr")?;
    nablapr_on(n)
}

/// `(-1)^r (n-k+1)...(n-k+r) ((1-nc)^r - (1-nc)) / (n^r c)`.
pub fn nablapr_coefficient(n: usize, k: usize, r: usize) -> Q {
    let c = Q::param(0, 1);
    let one_nc = Q::one().sub(&c.mul(&Q::from_i64(n as i64)));
    let mut rising = Q::one();
    for i in 1..=r {
        rising = rising.mul(&Q::from_i64((n - k + i) as i64));
    }
    let num = one_nc.pow(r as u32).sub(&one_nc);
    let den = Q::from_i64(n as i64).pow(r as u32).mul(&c);
    let sign = if r % 2 == 1 { Q::from_i64(-1) } else { Q::one() };
    sign.mul(&rising).mul(&num.div(&den).expect("nonzero"))
}

pub fn nablapr_on(n: usize) -> Result<Report> {
    let mut rep = Report::new("nablapr");
    let ctx = DunklContext::<Q>::new(build_symmetric(n)?, Multiplicity::symbolic(1))?;
    for k in 1..=n {
        let e = ebar::<Q>(k, n);
        for r in 1..=k {
            let got = ctx.nabla_poly(&power_sum(r as u32, n), &e)?;
            let want = ebar::<Q>(k - r, n).scale(&nablapr_coefficient(n, k, r));
            rep.check(got == want, || format!("n={n}, k={k}, r={r}"), || show(&ctx, &want), || show(&ctx, &got));
        }
    }
    Ok(rep)
}

fn phic_poly(cfg: &SuiteConfig) -> Result<Report> {
    let setup = setup_without_fixed_vectors(cfg)?;
    with_setup!(setup, ctx, gens, {
        phic_poly_on(ctx, gens, cfg.max_degree.unwrap_or(6), cfg.samples.unwrap_or(20), cfg.seed)
    })
}

/// `(u, v)_c / (1 - h_c)` has no denominator, for seeded random invariants
/// `u, v` of equal positive degree.
pub fn phic_poly_on<S: Scalar>(
    ctx: &DunklContext<S>,
    gens: &GeneratorSet<S>,
    max_degree: u32,
    samples: usize,
    seed: u64,
) -> Result<Report> {
    let mut rep = Report::new("phic-poly");
    let names = ctx.param_names().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let degrees: Vec<u32> = (1..=max_degree).filter(|&d| !gens.exponents(d).is_empty()).collect();
    if degrees.is_empty() {
        return Err(Error::InvalidArgument("no invariants of positive degree in range".into()));
    }
    let divisor = S::one().sub(&ctx.h_c());
    let random_invariant = |rng: &mut ChaCha8Rng, d: u32| -> Poly<S> {
        loop {
            let mut p = Poly::zero(gens.arity());
            for (_, u) in invariant_monomials(gens, d) {
                let k = rng.gen_range(-3i64..=3);
                if k != 0 {
                    p = &p + &u.scale(&S::from_i64(k));
                }
            }
            if !p.is_zero() {
                return p;
            }
        }
    };
    for _ in 0..samples {
        let d = degrees[rng.gen_range(0..degrees.len())];
        let u = random_invariant(&mut rng, d);
        let v = random_invariant(&mut rng, d);
        let form = ctx.pairing(&u, &v)?;
        let q = form.div(&divisor).ok_or_else(|| Error::Internal("1 - h_c vanished".into()))?;
        rep.check(
            q.as_ratfun().denom().as_constant().is_some(),
            || format!("u={}, v={}", show(ctx, &u), show(ctx, &v)),
            || "polynomial in the parameters".into(),
            || q.fmt_params(&names),
        );
    }
    Ok(rep)
}

fn laplacian(cfg: &SuiteConfig) -> Result<Report> {
    let m = dihedral_m(cfg, "laplacian")?;
    let setup = Setup::new(cfg.group, &cfg.params)?;
    let Setup::Dihedral(ctx, _) = &setup else { unreachable!() };
    laplacian_on(ctx, m, cfg.max_degree.unwrap_or(2 * m))
}

/// The Dunkl Laplacian against one fitted multiple of the closed form on `k[e2, em]`.
pub fn laplacian_on(ctx: &DunklContext<C>, m: u32, max_weight: u32) -> Result<Report> {
    let mut rep = Report::new("laplacian");
    let names = ctx.param_names().to_vec();
    let vars = vec!["e2".to_string(), format!("e{m}")];
    let pin = dihedral::pin_laplacian_convention(ctx, m, max_weight)?;
    rep.cases = pin.checked;
    for f in &pin.mismatches {
        rep.failures.push(Failure {
            input: show_with(f, &vars, &names),
            expected: "Dunkl Laplacian".into(),
            got: "closed form differs".into(),
        });
    }
    rep.value("kappa".into(), pin.kappa.fmt_params(&names));
    Ok(rep)
}

fn generators(cfg: &SuiteConfig) -> Result<Report> {
    let n = symmetric_n(cfg, "generators")?;
    generators_on(n, cfg.max_degree.unwrap_or(6))
}

/// `b_a` from elementary and from power-sum generators are proportional.
pub fn generators_on(n: usize, max_degree: u32) -> Result<Report> {
    let mut rep = Report::new("generators");
    let ctx = DunklContext::<Q>::new(build_symmetric(n)?, Multiplicity::symbolic(1))?;
    let el = GeneratorSet::elementary(n);
    let ps = GeneratorSet::power_sums(n);
    for d in 0..=max_degree {
        let a_basis = canonical_basis(&el, &ctx, d)?;
        let b_basis = canonical_basis(&ps, &ctx, d)?;
        for (a, b) in a_basis.iter().zip(&b_basis) {
            let ratio = proportionality(&a.poly, &b.poly).filter(|r| !r.is_zero());
            rep.check(
                a.index == b.index && ratio.is_some(),
                || format!("a={:?}", a.index),
                || show(&ctx, &a.poly),
                || show(&ctx, &b.poly),
            );
        }
    }
    Ok(rep)
}

/// Sum-zero model of `S_n` with symbolic `c`.
pub fn reduced_symmetric(n: usize) -> Result<(DunklContext<Q>, GeneratorSet<Q>)> {
    Ok((DunklContext::new(build_symmetric_reduced(n)?, Multiplicity::symbolic(1))?, GeneratorSet::centred(n)))
}
