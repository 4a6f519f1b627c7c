use crate::invariants::{CanonicalInvariant, GeneratorSet};
use crate::scalars::Scalar;

/// `coef*monomial + ...` with the largest monomial first.
pub fn expansion_plain<S: Scalar>(b: &CanonicalInvariant<S>, gens: &GeneratorSet<S>, names: &[String]) -> String {
    let mut out = String::new();
    for (a, c) in b.expansion.iter().rev().filter(|(_, c)| !c.is_zero()) {
        let coef = c.fmt_params(names);
        let mono = gens.monomial_name(a);
        let term = if c.is_one() { mono } else { format!("({coef})*{mono}") };
        if !out.is_empty() {
            out.push_str(" + ");
        }
        out.push_str(&term);
    }
    out
}

fn latex_symbol(name: &str) -> String {
    let split = name.find(|ch: char| ch.is_ascii_digit()).unwrap_or(name.len());
    let (stem, sub) = name.split_at(split);
    let stem = match stem {
        "eb" => r"\bar{e}".to_string(),
        s => s.to_string(),
    };
    if sub.is_empty() {
        stem
    } else {
        format!("{stem}_{{{sub}}}")
    }
}

fn latex_params(s: &str, names: &[String]) -> String {
    let mut out = s.replace('*', " ");
    let mut sorted: Vec<&String> = names.iter().collect();
    sorted.sort_by_key(|n| std::cmp::Reverse(n.len()));
    for n in sorted {
        if n.len() > 1 {
            out = out.replace(n.as_str(), &latex_symbol(n));
        }
    }
    out.replace("zeta", r"\zeta")
}

fn latex_monomial<S: Scalar>(a: &[u32], gens: &GeneratorSet<S>) -> String {
    let parts: Vec<String> = a
        .iter()
        .zip(&gens.names)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, n)| if e == 1 { latex_symbol(n) } else { format!("{}^{{{e}}}", latex_symbol(n)) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// Display-only LaTeX for the expansion of `b_a`.
pub fn expansion_latex<S: Scalar>(b: &CanonicalInvariant<S>, gens: &GeneratorSet<S>, names: &[String]) -> String {
    let mut out = String::new();
    for (a, c) in b.expansion.iter().rev().filter(|(_, c)| !c.is_zero()) {
        let (num, den) = c.fmt_parts(names);
        let coef = if den == "1" {
            if c.is_one() {
                String::new()
            } else {
                format!(r"\left({}\right) ", latex_params(&num, names))
            }
        } else {
            format!(r"\frac{{{}}}{{{}}} ", latex_params(&num, names), latex_params(&den, names))
        };
        if !out.is_empty() {
            out.push_str(" + ");
        }
        out.push_str(&coef);
        out.push_str(&latex_monomial(a, gens));
    }
    out
}
