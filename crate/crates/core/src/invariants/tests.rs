use super::*;
use crate::dunkl::Multiplicity;
use crate::groups::{build_dihedral, build_symmetric};
use crate::scalars::{parse_ratfun, Cyclotomic, Field, RatFun};

type R = RatFun<Rational>;
type RC = RatFun<Cyclotomic>;

fn c(s: &str) -> R {
    parse_ratfun(s, &["c".to_string()]).unwrap()
}

fn sym(n: usize) -> DunklContext<R> {
    DunklContext::new(build_symmetric(n).unwrap(), Multiplicity::symbolic(1)).unwrap()
}

fn dih(m: u32) -> DunklContext<RC> {
    let g = build_dihedral(m).unwrap();
    let k = g.num_classes();
    DunklContext::new(g, Multiplicity::equal(k)).unwrap()
}

#[test]
fn order_examples() {
    assert!(inv_lex_less(&[0, 1], &[2, 0]).unwrap());
    assert!(!inv_lex_less(&[1, 1], &[1, 1]).unwrap());
    assert!(!inv_lex_less(&[1, 0, 0], &[0, 0, 1]).unwrap());
    assert!(inv_lex_less(&[1, 0], &[1, 0, 0]).is_err());
}

#[test]
fn monomial_lists() {
    let g = GeneratorSet::elementary(3);
    assert_eq!(g.exponents(3), vec![vec![3, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]);
    assert_eq!(g.exponents(0), vec![vec![0, 0, 0]]);
    assert_eq!(GeneratorSet::dihedral(5).exponents(10), vec![vec![5, 0], vec![0, 2]]);
}

#[test]
fn ebar_examples() {
    assert!(ebar::<R>(1, 4).is_zero());
    let d = &Poly::<R>::var(0, 2) - &Poly::var(1, 2);
    assert_eq!(ebar::<R>(2, 2), (&d * &d).mul_rational(&Rational::new(-1, 4).unwrap()));
    let e3 = ebar::<R>(3, 4);
    let trans: Poly<R> = (0..4).map(|i| e3.derivative(i)).fold(Poly::zero(4), |a, b| &a + &b);
    assert!(trans.is_zero());
}

#[test]
fn dihedral_low_index_invariants() {
    let ctx = dih(5);
    let g = GeneratorSet::dihedral(5);
    assert_eq!(canonical_invariant(&[2, 0], &g, &ctx).unwrap().poly, g.gens[0].pow(2));
    assert_eq!(canonical_invariant(&[0, 1], &g, &ctx).unwrap().poly, g.gens[1].clone());
    let b = canonical_invariant(&[0, 2], &g, &ctx).unwrap();
    let cc = RC::param(0, 1);
    let want = RC::from_i64(2).div(&cc.sub(&RC::one())).unwrap();
    assert_eq!(b.coefficient(&[5, 0]), want, "{}", b.coefficient(&[5, 0]).fmt_params(&["c".into()]));
    let pole = limit_at(&b, &g, &[Rational::from(1)]);
    assert!(matches!(pole, Err(Error::Pole { .. })));
}

#[test]
fn elementary_formulas_small_n() {
    let ctx = sym(4);
    let g = GeneratorSet::elementary(4);
    let e2 = elementary_invariant(2, &g, &ctx).unwrap();
    assert_eq!(e2.poly, ebar(2, 4));
    let e4 = elementary_invariant(4, &g, &ctx).unwrap();
    let coef = c("(1-4*c)/(12*c-5)").mul_rational(&Rational::new(1, 4).unwrap());
    let want = &ebar::<R>(2, 4).pow(2).scale(&coef) + &ebar(4, 4);
    assert_eq!(e4.poly, want);
    let lim = limit_at(&e4, &g, &[Rational::new(1, 4).unwrap()]).unwrap();
    assert_eq!(lim, ebar(4, 4));
    assert!(limit_at(&e4, &g, &[Rational::new(5, 12).unwrap()]).is_err());
}

#[test]
fn iwasaki_small_cases() {
    let ctx = sym(2);
    let d = &Poly::<R>::var(0, 2) - &Poly::var(1, 2);
    assert_eq!(iwasaki_mu(2, &ctx).unwrap(), -&(&d * &d));
    let s = iwasaki_elementary(2, &ctx).unwrap();
    assert!(proportionality(&s, &ebar(2, 2)).is_some());

    let ctx = sym(3);
    let mu = iwasaki_mu(3, &ctx).unwrap();
    assert_eq!(mu.degree(), Some(3));
    let e3 = elementary_invariant(3, &GeneratorSet::elementary(3), &ctx).unwrap();
    let alpha = proportionality(&e3.poly, &iwasaki_elementary(3, &ctx).unwrap());
    assert!(alpha.is_some_and(|a| !a.is_zero()));
}

#[test]
fn quasiharmonic_dimensions() {
    let ctx = dih(5);
    let g = GeneratorSet::dihedral(5);
    let q = quasiharmonic_space(5, 5, &g, &ctx).unwrap();
    assert_eq!(q.len(), 1);
    let e5 = elementary_invariant(5, &g, &ctx).unwrap();
    assert!(proportionality(&q[0], &e5.poly).is_some());
    let ctx3 = dih(3);
    let q = quasiharmonic_space(6, 3, &GeneratorSet::dihedral(3), &ctx3).unwrap();
    assert_eq!(q.len(), 1);
}

#[test]
fn basis_orthogonal_and_triangular() {
    let ctx = sym(3);
    let g = GeneratorSet::elementary(3);
    for d in 0..=5 {
        let basis = canonical_basis(&g, &ctx, d).unwrap();
        for (i, b) in basis.iter().enumerate() {
            for (j, b2) in basis.iter().enumerate() {
                if i != j {
                    assert!(ctx.pairing(&b.poly, &b2.poly).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn express_round_trip() {
    let g = GeneratorSet::elementary(3);
    let f = ebar::<R>(3, 3);
    let coords = express_in_generators(&f, &g).unwrap();
    let back = coords.iter().fold(Poly::zero(3), |acc, (a, c)| &acc + &g.monomial(a).scale(c));
    assert_eq!(back, f);
}
