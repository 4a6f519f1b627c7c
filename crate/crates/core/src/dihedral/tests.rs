use super::*;
use crate::dunkl::Multiplicity;
use crate::groups::build_dihedral;
use crate::invariants::{canonical_invariant, GeneratorSet};
use crate::scalars::{parse_ratfun, ratfun_from_rational, Cyclotomic, RatFun};

type R = RatFun<Rational>;
type RC = RatFun<Cyclotomic>;

fn names2() -> Vec<String> {
    vec!["c1".into(), "c2".into()]
}

fn q2(s: &str) -> R {
    parse_ratfun(s, &names2()).unwrap()
}

#[test]
fn pde_examples() {
    let (cc, dd) = (q2("c1+c2"), q2("c2-c1"));
    for m in [4u32, 6] {
        let got = laplacian_pde(&inv_monomial::<R>(1, 0), m, &cc, &dd).unwrap();
        let want = R::one().sub(&cc.mul_rational(&Rational::new(m as i64, 2).unwrap()));
        assert_eq!(got, Poly::constant(2, want));
        let got = laplacian_pde(&inv_monomial::<R>(0, 1), m, &cc, &dd).unwrap();
        let k = dd.mul_rational(&Rational::from((m * m / 2) as i64));
        assert_eq!(got, inv_monomial(m / 2 - 1, 0).scale(&k));
    }
    let got = laplacian_pde(&inv_monomial::<R>(0, 2), 4, &cc, &dd).unwrap();
    let want = &inv_monomial::<R>(3, 0).mul_rational(&Rational::from(32)) + &inv_monomial(1, 1).scale(&dd.mul_rational(&Rational::from(16)));
    assert_eq!(got, want);
    assert!(laplacian_pde(&inv_monomial::<R>(0, 1), 5, &cc, &dd).is_err());
}

#[test]
fn via_d_examples() {
    let (cc, dd) = (q2("c1+c2"), q2("c2-c1"));
    for f in [inv_monomial::<R>(1, 0), inv_monomial(0, 1), inv_monomial(1, 1), inv_monomial(3, 2)] {
        assert!(via_d_identity_check(&f, 4, &cc, &dd).unwrap());
        assert!(via_d_identity_check(&f, 5, &cc, &R::zero()).unwrap());
    }
}

#[test]
fn gf_examples() {
    let b: Vec<Poly<R>> = gf_coefficients(5, 2).unwrap();
    assert_eq!(b[0], Poly::one(2));
    assert_eq!(b[1], inv_monomial(0, 1));
    let c = parse_ratfun("2/(c-1)", &["c".to_string()]).unwrap();
    assert_eq!(b[2], &inv_monomial::<R>(0, 2) + &inv_monomial(5, 0).scale(&c));
}

#[test]
fn jacobi_examples() {
    let p = JacobiParams { a: q2("c1"), b: q2("c2") };
    assert_eq!(jacobi_poly(0, &p), Poly::one(1));
    let want = &Poly::constant(1, q2("(c1-c2)/2")) + &Poly::var(0, 1).scale(&q2("(c1+c2+2)/2"));
    assert_eq!(jacobi_poly(1, &p), want);
    for k in 0..=4 {
        assert!(jacobi_operator(&jacobi_poly(k, &p), k, &p).is_zero());
    }
}

#[test]
fn jacobi_form_matches_canonical_m4() {
    let ctx = DunklContext::<RC>::new(build_dihedral(4).unwrap(), Multiplicity::symbolic(2)).unwrap();
    let (cc, dd) = multiplicity_params(&ctx).unwrap();
    let gens = GeneratorSet::dihedral(4);
    for k in 0..=2 {
        let b = canonical_invariant(&[0, k], &gens, &ctx).unwrap();
        let canon = from_expansion(&b.expansion);
        let (jac, _) = normalize_em(&b0k_jacobi(k, 4, &cc, &dd).unwrap(), k).unwrap();
        assert_eq!(jac, canon, "k = {k}");
        assert!(ctx.laplacian(&b.poly).unwrap().is_zero());
    }
}

#[test]
fn convention_pin_small() {
    for m in [3u32, 4] {
        let g = build_dihedral(m).unwrap();
        let k = g.num_classes();
        let ctx = DunklContext::<RC>::new(g, Multiplicity::symbolic(k)).unwrap();
        let pin = pin_laplacian_convention(&ctx, m, m + 2).unwrap();
        assert_eq!(pin.kappa, RC::from_i64(4));
        assert!(pin.mismatches.is_empty(), "m = {m}: {:?}", pin.mismatches);
    }
}

#[test]
fn gf_matches_canonical_equal_c() {
    let m = 3;
    let ctx = DunklContext::<RC>::new(build_dihedral(m).unwrap(), Multiplicity::equal(1)).unwrap();
    let gens = GeneratorSet::dihedral(m);
    let gf: Vec<Poly<R>> = gf_coefficients(m, 2).unwrap();
    for (k, f) in gf.iter().enumerate() {
        let b = canonical_invariant(&[0, k as u32], &gens, &ctx).unwrap();
        assert_eq!(from_expansion(&b.expansion), f.map_coeffs(ratfun_from_rational));
    }
}
