use super::*;
use crate::groups::{build_dihedral, build_symmetric, build_symmetric_reduced};
use crate::scalars::{parse_ratfun, Cyclotomic, RatFun};

type R = RatFun<Rational>;
type RC = RatFun<Cyclotomic>;

fn sym(n: usize) -> DunklContext<R> {
    DunklContext::new(build_symmetric(n).unwrap(), Multiplicity::symbolic(1)).unwrap()
}

fn c(s: &str) -> R {
    parse_ratfun(s, &["c".to_string()]).unwrap()
}

fn x(i: usize, n: usize) -> Poly<R> {
    Poly::var(i, n)
}

#[test]
fn divided_difference_examples() {
    let ctx = sym(2);
    assert_eq!(ctx.divided_difference(0, &x(0, 2)).unwrap(), Poly::one(2));
    let sq = &x(0, 2) * &x(0, 2);
    assert_eq!(ctx.divided_difference(0, &sq).unwrap(), &x(0, 2) + &x(1, 2));
}

#[test]
fn dunkl_examples() {
    let ctx = sym(2);
    let (x1, x2) = (x(0, 2), x(1, 2));
    assert_eq!(ctx.dunkl_apply(0, &x1).unwrap(), Poly::constant(2, c("1-c")));
    assert_eq!(ctx.dunkl_apply(0, &x2).unwrap(), Poly::constant(2, c("c")));
    let got = ctx.dunkl_apply(0, &(&x1 * &x1)).unwrap();
    let want = &x1.mul_rational(&Rational::from(2)) - &(&x1 + &x2).scale(&c("c"));
    assert_eq!(got, want);
}

#[test]
fn laplacian_and_pairing_examples() {
    let ctx0 = DunklContext::<R>::new(build_symmetric(2).unwrap(), Multiplicity::rational(&[Rational::from(0)])).unwrap();
    let (x1, x2) = (x(0, 2), x(1, 2));
    let f = &(&x1 * &x1) + &(&x2 * &x2);
    assert_eq!(ctx0.laplacian(&f).unwrap(), Poly::constant(2, R::from_i64(4)));

    let ctx = sym(2);
    assert_eq!(ctx.pairing(&x1, &x1).unwrap(), c("1-c"));
    let d = &x1 - &x2;
    assert_eq!(ctx.pairing(&d, &d).unwrap(), c("2-4*c"));
    for n in 2..5 {
        let ctx = sym(n);
        let e1 = Poly::linear(&vec![R::one(); n]);
        assert_eq!(ctx.pairing(&e1, &e1).unwrap(), R::from_i64(n as i64));
        assert_eq!(ctx.nabla_poly(&e1, &e1).unwrap(), Poly::constant(n, R::from_i64(n as i64)));
    }
}

#[test]
fn h_c_values() {
    assert_eq!(sym(2).h_c(), c("c"));
    for m in 3..7 {
        let g = build_dihedral(m).unwrap();
        let k = g.num_classes();
        let ctx = DunklContext::<RC>::new(g, Multiplicity::equal(k)).unwrap();
        assert_eq!(ctx.h_c(), RC::param(0, 1).mul(&RC::from_i64(m as i64)));
    }
}

#[test]
fn transposition_fast_path_matches_division() {
    let ctx = sym(3);
    let f = Poly::from_terms(
        3,
        [
            (Mono::new(vec![3, 0, 1]), R::from_i64(2)),
            (Mono::new(vec![0, 2, 2]), c("c")),
            (Mono::new(vec![1, 4, 0]), R::one()),
        ],
    );
    for i in 0..ctx.group.reflections.len() {
        assert_eq!(ctx.divided_difference(i, &f).unwrap(), ctx.divided_difference_generic(i, &f).unwrap());
    }
}

#[test]
fn berest_matches_direct() {
    let ctx = sym(3);
    let p = &(&x(0, 3) * &x(1, 3)) - &x(2, 3).pow(2);
    let f = &x(0, 3).pow(3) + &(&x(1, 3) * &x(2, 3).pow(2));
    assert_eq!(ctx.berest_nabla(&p, &f).unwrap(), ctx.nabla_poly(&ctx.dualize(&p), &f).unwrap());
}

#[test]
fn dihedral_laplacian_preserves_invariants() {
    let g = build_dihedral(4).unwrap();
    let ctx = DunklContext::<RC>::new(g, Multiplicity::symbolic(2)).unwrap();
    let e2 = ctx.e2().clone();
    let l = ctx.laplacian(&e2.pow(2)).unwrap();
    assert!(ctx.group.is_invariant(&l).unwrap());
    assert_eq!(l.degree(), Some(2));
}

#[test]
fn sl2_on_reduced_s3() {
    let ctx = DunklContext::<R>::new(build_symmetric_reduced(3).unwrap(), Multiplicity::symbolic(1)).unwrap();
    assert_eq!(ctx.h_c(), c("3*c"));
    let rep = sl2_report(&ctx, 3).unwrap();
    assert!(rep.le_is_h && rep.weights_are_8 && rep.normalized_ok);
    assert!(!rep.el_is_h && !rep.weights_are_2);
    let f = Poly::from_terms(2, [(Mono::new(vec![2, 1]), R::one())]);
    for k in 0..3 {
        assert!(ctx.power_commutator_defect(k, &f).unwrap().is_zero());
    }
}

#[test]
fn phi_c_odd_and_normalised() {
    let ctx = DunklContext::<R>::new(build_symmetric_reduced(3).unwrap(), Multiplicity::symbolic(1)).unwrap();
    let t = Poly::<R>::var(0, 2);
    assert!(ctx.phi_c(&t.pow(3)).unwrap().is_zero());
    assert_eq!(ctx.phi_c(&ctx.e2().pow(2)).unwrap(), R::one());
    assert_eq!(ctx.phi_c(&Poly::one(2)).unwrap(), R::one());
}

#[test]
fn frobenius_factor_on_harmonics() {
    let ctx = DunklContext::<R>::new(build_symmetric_reduced(3).unwrap(), Multiplicity::symbolic(1)).unwrap();
    let (t1, t2) = (Poly::<R>::var(0, 2), Poly::<R>::var(1, 2));
    // linear forms are harmonic; the harmonic quadrics are killed by L
    let q = &(&t1 * &t1) - (&(&t1 * &t2).mul_rational(&Rational::from(2)));
    assert!(ctx.laplacian(&q).unwrap().is_zero());
    for (h, g, d) in [(t1.clone(), &t1 + &t2, 1), (q.clone(), &t1 * &t2, 2)] {
        let lhs = ctx.pairing(&h, &g).unwrap();
        let rhs = ctx.phi_c(&(&h * &g)).unwrap().mul(&ctx.frobenius_factor(d, 0));
        assert_eq!(lhs, rhs, "d = {d}");
    }
    let f = &ctx.e2().clone() * &t1;
    let g = &(&t1 * &t1) * &t2;
    let lhs = ctx.pairing(&f, &g).unwrap();
    assert_eq!(lhs, ctx.phi_c(&(&f * &g)).unwrap().mul(&ctx.frobenius_factor(1, 1)));
}

#[test]
fn phi_c_pole_reported() {
    // l(1-h_c)/2 = (1-3c) vanishes at c = 1/3
    let ctx = DunklContext::<R>::new(
        build_symmetric_reduced(3).unwrap(),
        Multiplicity::rational(&[Rational::new(1, 3).unwrap()]),
    )
    .unwrap();
    let t = Poly::<R>::var(0, 2);
    assert!(matches!(ctx.phi_c(&t.pow(2)), Err(Error::Pole { .. })));
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn poly3() -> impl Strategy<Value = Poly<R>> {
        prop::collection::vec(((0u32..4, 0u32..4, 0u32..3), -3i64..4), 1..5).prop_map(|ts| {
            Poly::from_terms(3, ts.into_iter().map(|((a, b, cc), k)| (Mono::new(vec![a, b, cc]), R::from_i64(k))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn fast_and_generic_divided_differences_agree(f in poly3()) {
            let ctx = sym(3);
            for i in 0..3 {
                prop_assert_eq!(ctx.divided_difference(i, &f).unwrap(), ctx.divided_difference_generic(i, &f).unwrap());
            }
        }

        #[test]
        fn dunkl_operators_commute(f in poly3()) {
            let ctx = sym(3);
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                let a = ctx.dunkl_apply(i, &ctx.dunkl_apply(j, &f).unwrap()).unwrap();
                let b = ctx.dunkl_apply(j, &ctx.dunkl_apply(i, &f).unwrap()).unwrap();
                prop_assert_eq!(a, b);
            }
        }

        #[test]
        fn pairing_is_symmetric_and_graded(f in poly3(), g in poly3()) {
            let ctx = sym(3);
            let f = f.homogeneous_component(f.degree().unwrap_or(0));
            let g2 = g.homogeneous_component(g.degree().unwrap_or(0));
            let a = ctx.pairing(&f, &g2).unwrap();
            prop_assert_eq!(a.clone(), ctx.pairing(&g2, &f).unwrap());
            if f.degree() != g2.degree() {
                prop_assert!(a.is_zero());
            }
        }

        #[test]
        fn pairing_positive_at_zero(f in poly3()) {
            let ctx = DunklContext::<R>::new(build_symmetric(3).unwrap(), Multiplicity::rational(&[Rational::from(0)])).unwrap();
            let v = ctx.pairing(&f, &f).unwrap().to_rational().unwrap();
            prop_assert!(f.is_zero() || v > Rational::from(0));
        }
    }
}
