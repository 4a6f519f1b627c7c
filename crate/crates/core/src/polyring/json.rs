use serde::{Deserialize, Serialize};

use super::{Mono, Poly};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Interchange form of a polynomial; terms are graded-lex descending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub arity: usize,
    pub params: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta_order: Option<u32>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

pub fn poly_to_json<S: Scalar>(p: &Poly<S>, params: &[String], zeta_order: Option<u32>) -> PolyJson {
    PolyJson {
        arity: p.arity(),
        params: params.to_vec(),
        zeta_order,
        terms: p
            .terms()
            .map(|(m, c)| TermJson { exp: m.exps().to_vec(), coef: c.fmt_params(params) })
            .collect(),
    }
}

pub fn poly_from_json<S: Scalar>(j: &PolyJson) -> Result<Poly<S>> {
    let mut out = Poly::zero(j.arity);
    let order = j.zeta_order.unwrap_or(1);
    for t in &j.terms {
        if t.exp.len() != j.arity {
            return Err(Error::ArityMismatch { expected: j.arity, found: t.exp.len() });
        }
        let c = S::parse_params(&t.coef, &j.params, order)?;
        out.add_term(Mono::new(t.exp.clone()), c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Cyclotomic, RatFun, Rational, Ring};

    #[test]
    fn round_trip_is_bit_exact() {
        type R = RatFun<Rational>;
        let names = vec!["c".to_string()];
        let c = R::param(0, 1);
        let coef = R::one().sub(&c.mul(&R::from_i64(4))).div_exact(&c.mul(&R::from_i64(12)).sub(&R::from_i64(5))).unwrap();
        let p = &Poly::monomial(Mono::new(vec![2, 0, 1]), coef) + &Poly::constant(3, c);
        let j = poly_to_json(&p, &names, None);
        let text = serde_json::to_string(&j).unwrap();
        let back: Poly<R> = poly_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&poly_to_json(&back, &names, None)).unwrap(), text);
        assert!(text.contains("(-4*c+1)/(12*c-5)"));
    }

    #[test]
    fn cyclotomic_round_trip() {
        type R = RatFun<Cyclotomic>;
        let names = vec!["c1".to_string(), "c2".to_string()];
        let z = R::constant(Cyclotomic::zeta_pow(5, 1));
        let coef = z.add(&R::param(1, 2)).div_exact(&R::param(0, 2).add(&R::one())).unwrap();
        let p = Poly::monomial(Mono::new(vec![1, 1]), coef);
        let j = poly_to_json(&p, &names, Some(5));
        let back: Poly<R> = poly_from_json(&j).unwrap();
        assert_eq!(back, p);
        assert_eq!(poly_to_json(&back, &names, Some(5)), j);
    }
}
