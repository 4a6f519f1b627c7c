use super::{BaseField, Field, RatFun, Rational, Ring};
use crate::error::{Error, Result};

/// Parses a canonical scalar string such as `(-4*c+1)/(12*c-5)` over `Q`.
pub fn parse_ratfun(s: &str, names: &[String]) -> Result<RatFun<Rational>> {
    parse_ratfun_with(s, names, |_| None)
}

/// Parses a rational-function string; identifiers outside `names` are resolved
/// by `atom` (e.g. `zeta` for cyclotomic coefficients).
pub fn parse_ratfun_with<K: BaseField>(
    s: &str,
    names: &[String],
    atom: impl Fn(&str) -> Option<K>,
) -> Result<RatFun<K>> {
    let tokens = tokenize(s)?;
    let mut p = Parser { tokens, pos: 0, names, atom: &atom };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("trailing input in `{s}`")));
    }
    Ok(out.with_arity(names.len()))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Int(chars[start..i].iter().collect()));
        } else if ch.is_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(ch) {
            out.push(Tok::Op(ch));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{ch}`")));
        }
    }
    Ok(out)
}

struct Parser<'a, F> {
    tokens: Vec<Tok>,
    pos: usize,
    names: &'a [String],
    atom: &'a F,
}

impl<K: BaseField, F: Fn(&str) -> Option<K>> Parser<'_, F> {
    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<RatFun<K>> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFun<K>> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == '*' {
                acc.mul(&rhs)
            } else {
                Field::div(&acc, &rhs).ok_or(Error::ZeroDenominator)?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFun<K>> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFun<K>> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Tok::Int(e)) => {
                    let e: u32 = e.parse().map_err(|_| Error::Parse(format!("bad exponent `{e}`")))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                other => return Err(Error::Parse(format!("expected exponent, found {other:?}"))),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFun<K>> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Tok::Int(s) => Ok(RatFun::from_rational(&s.parse::<Rational>()?)),
            Tok::Ident(name) => {
                if let Some(i) = self.names.iter().position(|n| *n == name) {
                    return Ok(RatFun::param(i, self.names.len()));
                }
                (self.atom)(&name)
                    .map(RatFun::constant)
                    .ok_or_else(|| Error::Parse(format!("unknown symbol `{name}`")))
            }
            Tok::Op('(') => {
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Op(c) => Err(Error::Parse(format!("unexpected `{c}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: &[&str]) -> Vec<String> {
        n.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn round_trip() {
        for s in ["0", "-3/7", "c", "c/2", "(-4*c+1)/(12*c-5)", "(c^2-c)/2", "2/(c-1)"] {
            let f = parse_ratfun(s, &names(&["c"])).unwrap();
            assert_eq!(f.to_string(), s);
        }
        let g = parse_ratfun("(c1*c2+c2^2-3)/(2*c1+1)", &names(&["c1", "c2"])).unwrap();
        assert_eq!(g.to_string(), "(c1*c2+c2^2-3)/(2*c1+1)");
    }

    #[test]
    fn errors() {
        assert!(parse_ratfun("c+", &names(&["c"])).is_err());
        assert!(parse_ratfun("d", &names(&["c"])).is_err());
        assert_eq!(parse_ratfun("1/(c-c)", &names(&["c"])).unwrap_err(), Error::ZeroDenominator);
    }
}
