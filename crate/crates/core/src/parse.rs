//! Expression parser for scalars, elements of U and elements of O(SL_q(2)).
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := ("-" | "+") unary | power
//! power  := atom ("^" exp)?
//! exp    := ["-"] int | "(" ["-"] int ["/" int] ")"
//! atom   := number | name | name "(" int ")" | "f[" label "]" | "(" expr ")"
//! ```
//!
//! Scalar names: `i s q alpha beta gamma delta alpha1 alpha2 beta1 beta2 p1..p8`.
//! U names: `E F G K Kinv eps- Fd(n) Ed(n) Gd(n) f[label]`.
//! O names: `a b c d u11 u12 u21 u22`.

use crate::error::{Error, Result};
use crate::oq::OElement;
use crate::scalar::{param_index, GaussRat, GroupLabel, Scalar};
use crate::uq::{UElement, UMonomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::HashMap;

/// A parsed value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Scalar),
    U(UElement),
    O(OElement),
}

impl Value {
    pub fn into_u(self) -> Result<UElement> {
        match self {
            Value::Scalar(s) => Ok(UElement::scalar(s)),
            Value::U(u) => Ok(u),
            Value::O(_) => Err(Error::MixedAlgebra),
        }
    }

    pub fn into_o(self) -> Result<OElement> {
        match self {
            Value::Scalar(s) => Ok(OElement::scalar(s)),
            Value::O(o) => Ok(o),
            Value::U(_) => Err(Error::MixedAlgebra),
        }
    }

    pub fn into_scalar(self) -> Result<Scalar> {
        match self {
            Value::Scalar(s) => Ok(s),
            _ => Err(Error::Syntax {
                pos: 0,
                msg: "expected a scalar expression".into(),
            }),
        }
    }

    fn add(self, o: Value) -> Result<Value> {
        Ok(match (self, o) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(&a + &b),
            (Value::U(a), b) => Value::U(a.add(&b.into_u()?)),
            (a, Value::U(b)) => Value::U(a.into_u()?.add(&b)),
            (Value::O(a), b) => Value::O(a.add(&b.into_o()?)),
            (a, Value::O(b)) => Value::O(a.into_o()?.add(&b)),
        })
    }

    fn neg(self) -> Value {
        match self {
            Value::Scalar(a) => Value::Scalar(-a),
            Value::U(a) => Value::U(a.neg()),
            Value::O(a) => Value::O(a.scale(&Scalar::from_int(-1))),
        }
    }

    fn mul(self, o: Value) -> Result<Value> {
        Ok(match (self, o) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(&a * &b),
            (Value::Scalar(a), Value::U(b)) | (Value::U(b), Value::Scalar(a)) => {
                Value::U(b.scale(&a))
            }
            (Value::Scalar(a), Value::O(b)) | (Value::O(b), Value::Scalar(a)) => {
                Value::O(b.scale(&a))
            }
            (Value::U(a), Value::U(b)) => Value::U(a.mul(&b)),
            (Value::O(a), Value::O(b)) => Value::O(a.mul(&b)),
            _ => return Err(Error::MixedAlgebra),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut p = 0;
    while p < chars.len() {
        let (pos, ch) = chars[p];
        if ch.is_whitespace() {
            p += 1;
        } else if ch.is_ascii_digit() {
            let start = p;
            while p < chars.len() && chars[p].1.is_ascii_digit() {
                p += 1;
            }
            let text: String = chars[start..p].iter().map(|c| c.1).collect();
            out.push((pos, Tok::Num(text.parse().expect("digits"))));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let start = p;
            while p < chars.len() && (chars[p].1.is_ascii_alphanumeric() || chars[p].1 == '_') {
                p += 1;
            }
            let mut text: String = chars[start..p].iter().map(|c| c.1).collect();
            if text == "eps" && p < chars.len() && chars[p].1 == '-' {
                text.push('-');
                p += 1;
            }
            out.push((pos, Tok::Name(text)));
        } else if "+-*/^()[],".contains(ch) {
            out.push((pos, Tok::Sym(ch)));
            p += 1;
        } else {
            return Err(Error::Syntax {
                pos,
                msg: format!("unexpected character `{ch}`"),
            });
        }
    }
    Ok(out)
}

/// Parser with an environment of bound names.
pub struct Parser<'e> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    len: usize,
    env: &'e HashMap<String, Value>,
}

fn syntax<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Syntax {
        pos,
        msg: msg.into(),
    })
}

impl<'e> Parser<'e> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.0).unwrap_or(self.len)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            syntax(self.pos(), format!("expected `{c}`"))
        }
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                let v: i64 = n.to_string().parse().map_err(|_| Error::Syntax {
                    pos: self.pos(),
                    msg: "integer too large".into(),
                })?;
                Ok(if neg { -v } else { v })
            }
            _ => syntax(self.pos(), "expected an integer"),
        }
    }

    fn expr(&mut self) -> Result<Value> {
        let mut v = self.term()?;
        loop {
            if self.eat('+') {
                v = v.add(self.term()?)?;
            } else if self.eat('-') {
                v = v.add(self.term()?.neg())?;
            } else {
                return Ok(v);
            }
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut v = self.unary()?;
        loop {
            if self.eat('*') {
                v = v.mul(self.unary()?)?;
            } else if self.eat('/') {
                let pos = self.pos();
                let d = match self.unary()? {
                    Value::Scalar(s) => s,
                    _ => return syntax(pos, "division by a non-scalar"),
                };
                let inv = d.inv().map_err(|_| Error::Syntax {
                    pos,
                    msg: "division by zero".into(),
                })?;
                v = v.mul(Value::Scalar(inv))?;
            } else {
                return Ok(v);
            }
        }
    }

    fn unary(&mut self) -> Result<Value> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    /// Exponent as a fraction `n/d`.
    fn exponent(&mut self) -> Result<(i64, i64)> {
        if self.eat('(') {
            let n = self.int()?;
            let d = if self.eat('/') { self.int()? } else { 1 };
            self.expect(')')?;
            if d == 0 {
                return syntax(self.pos(), "zero denominator in exponent");
            }
            Ok((n, d))
        } else {
            Ok((self.int()?, 1))
        }
    }

    fn power(&mut self) -> Result<Value> {
        let start = self.at;
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let pos = self.pos();
        let (n, d) = self.exponent()?;
        let is_q = matches!(&self.toks[start].1, Tok::Name(s) if s == "q")
            && matches!(self.toks.get(start + 1), Some((_, Tok::Sym('^'))));
        if d != 1 {
            if is_q && (2 * n) % d == 0 {
                return Ok(Value::Scalar(Scalar::s_pow(2 * n / d)));
            }
            return syntax(pos, "fractional exponents are only allowed on q");
        }
        pow_value(base, n, pos)
    }

    fn atom(&mut self) -> Result<Value> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(Value::Scalar(Scalar::from_gauss(GaussRat::from_rational(
                    BigRational::from_integer(n),
                ))))
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(Tok::Name(name)) => {
                self.at += 1;
                self.named(&name, pos)
            }
            Some(Tok::Sym(c)) => syntax(pos, format!("unexpected `{c}`")),
            None => syntax(pos, "unexpected end of input"),
        }
    }

    fn divided(&mut self) -> Result<u32> {
        self.expect('(')?;
        let pos = self.pos();
        let n = self.int()?;
        self.expect(')')?;
        u32::try_from(n).or_else(|_| syntax(pos, "negative divided power"))
    }

    fn label(&mut self) -> Result<GroupLabel> {
        let mut acc = GroupLabel::ONE;
        loop {
            let pos = self.pos();
            if self.eat('-') {
                acc = acc.mul(GroupLabel::EPS_MINUS);
            }
            let factor = match self.peek().cloned() {
                Some(Tok::Num(n)) if n == BigInt::from(1) => {
                    self.at += 1;
                    GroupLabel::ONE
                }
                Some(Tok::Name(n)) => {
                    self.at += 1;
                    let base = match n.as_str() {
                        "i" => GroupLabel::new(1, 0),
                        "s" => GroupLabel::new(0, 1),
                        "q" => GroupLabel::Q,
                        _ => match self.env.get(n.as_str()).and_then(bound_label) {
                            Some(l) => l,
                            None => return syntax(pos, format!("`{n}` is not a label factor")),
                        },
                    };
                    if self.eat('^') {
                        let (e, d) = self.exponent()?;
                        if d == 1 {
                            base.pow(e)
                        } else if n == "q" && (2 * e) % d == 0 {
                            GroupLabel::new(0, (2 * e / d) as i32)
                        } else {
                            return syntax(pos, "bad label exponent");
                        }
                    } else {
                        base
                    }
                }
                _ => return syntax(pos, "expected a label factor"),
            };
            acc = acc.mul(factor);
            if !self.eat('*') {
                return Ok(acc);
            }
        }
    }

    fn named(&mut self, name: &str, pos: usize) -> Result<Value> {
        if let Some(v) = self.env.get(name) {
            return Ok(v.clone());
        }
        let u = |m: UMonomial| Ok(Value::U(UElement::monomial(m)));
        match name {
            "i" => Ok(Value::Scalar(Scalar::i())),
            "s" => Ok(Value::Scalar(Scalar::s())),
            "q" => Ok(Value::Scalar(Scalar::q())),
            "E" => Ok(Value::U(UElement::e())),
            "F" => Ok(Value::U(UElement::f())),
            "G" => Ok(Value::U(UElement::g())),
            "K" => u(UMonomial::new(0, GroupLabel::K, 0, 0)),
            "Kinv" => u(UMonomial::new(0, GroupLabel::K_INV, 0, 0)),
            "eps-" | "epsm" => u(UMonomial::new(0, GroupLabel::EPS_MINUS, 0, 0)),
            "Fd" => {
                let n = self.divided()?;
                u(UMonomial::new(n, GroupLabel::ONE, 0, 0))
            }
            "Ed" => {
                let n = self.divided()?;
                u(UMonomial::new(0, GroupLabel::ONE, n, 0))
            }
            "Gd" => {
                let n = self.divided()?;
                u(UMonomial::new(0, GroupLabel::ONE, 0, n))
            }
            "f" => {
                self.expect('[')?;
                let l = self.label()?;
                self.expect(']')?;
                u(UMonomial::new(0, l, 0, 0))
            }
            "a" | "u11" => Ok(Value::O(OElement::gen(0))),
            "b" | "u12" => Ok(Value::O(OElement::gen(1))),
            "c" | "u21" => Ok(Value::O(OElement::gen(2))),
            "d" | "u22" => Ok(Value::O(OElement::gen(3))),
            _ => match param_index(name) {
                Some(v) => Ok(Value::Scalar(Scalar::param(v))),
                None => syntax(pos, format!("unknown name `{name}`")),
            },
        }
    }
}

/// Label of a bound group-like `f_μ` with coefficient 1.
fn bound_label(v: &Value) -> Option<GroupLabel> {
    let Value::U(u) = v else { return None };
    let mut it = u.terms().iter();
    match (it.next(), it.next()) {
        (Some((m, c)), None) if c.is_one() && m.i == 0 && m.j == 0 && m.k == 0 => Some(m.mu),
        _ => None,
    }
}

/// Environment entry binding a label name such as `mu` to `f_μ`.
pub fn label_value(l: GroupLabel) -> Value {
    Value::U(UElement::group(l))
}

fn pow_value(base: Value, n: i64, pos: usize) -> Result<Value> {
    match base {
        Value::Scalar(s) => s.pow(n).map(Value::Scalar).or_else(|_| syntax(pos, "zero to a negative power")),
        Value::U(u) => {
            if n >= 0 {
                return Ok(Value::U(u.pow(n as u32)));
            }
            // Negative powers only for scalar multiples of a group-like.
            let mut it = u.terms().iter();
            match (it.next(), it.next()) {
                (Some((m, c)), None) if m.i == 0 && m.j == 0 && m.k == 0 => {
                    let c = c.pow(n).or_else(|_| syntax(pos, "zero to a negative power"))?;
                    let mono = UMonomial::new(0, m.mu.pow(n), 0, 0);
                    Ok(Value::U(UElement::term(mono, c)))
                }
                _ => syntax(pos, "negative power of a non-invertible element"),
            }
        }
        Value::O(o) => {
            if n < 0 {
                return syntax(pos, "negative power in O(SL_q(2))");
            }
            Ok(Value::O(o.pow(n as u32)))
        }
    }
}

/// Parse with bound names.
pub fn parse_with(src: &str, env: &HashMap<String, Value>) -> Result<Value> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        at: 0,
        len: src.len(),
        env,
    };
    let v = p.expr()?;
    if p.at != p.toks.len() {
        return syntax(p.pos(), "trailing input");
    }
    Ok(v)
}

pub fn parse(src: &str) -> Result<Value> {
    parse_with(src, &HashMap::new())
}

pub fn parse_scalar(src: &str) -> Result<Scalar> {
    parse(src)?.into_scalar()
}

pub fn parse_u(src: &str) -> Result<UElement> {
    parse(src)?.into_u()
}

pub fn parse_o(src: &str) -> Result<OElement> {
    parse(src)?.into_o()
}

/// Environment binding parameter names to sample values.
pub fn param_env<'a>(
    params: impl IntoIterator<Item = (&'a str, &'a Scalar)>,
) -> HashMap<String, Value> {
    params
        .into_iter()
        .map(|(k, v)| (k.to_string(), Value::Scalar(v.clone())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator() {
        let v = parse_u("E*F - F*E").unwrap();
        let rhs = parse_u("(f[q] - f[q^-1])/(q - q^-1)").unwrap();
        assert_eq!(v, rhs);
    }

    #[test]
    fn half_powers() {
        let x = parse_u("q^(-1/2)*F*K").unwrap();
        let y = UElement::f().mul(&UElement::k_pow(1)).scale(&Scalar::s_pow(-1));
        assert_eq!(x, y);
    }

    #[test]
    fn determinant_is_one() {
        assert_eq!(parse_o("u11*u22 - q*u12*u21").unwrap(), OElement::one());
    }

    #[test]
    fn mixed_rejected() {
        assert!(matches!(parse("E*a"), Err(Error::MixedAlgebra)));
        assert!(matches!(parse("E + ("), Err(Error::Syntax { .. })));
    }

    #[test]
    fn scalar_round_trip() {
        for src in ["s^2 + s^-2", "(1)/(s^2 - 1)", "(1/2-3*i)*alpha*s + 7", "-i*s^-3"] {
            let x = parse_scalar(src).unwrap();
            assert_eq!(parse_scalar(&x.to_string()).unwrap(), x, "{src}");
        }
    }

    #[test]
    fn element_round_trip() {
        let x = parse_u("2/(q+1)*(K^2 - 1) + q^(-1/2)*F*K + eps-*G + f[i*s^3]*E^2").unwrap();
        assert_eq!(parse_u(&x.to_string()).unwrap(), x);
        let o = parse_o("a*d^0 + q*b*c - 3*c^2*d").unwrap();
        assert_eq!(parse_o(&o.to_string()).unwrap(), o);
    }

    #[test]
    fn labels() {
        assert_eq!(
            parse_u("f[-1]").unwrap(),
            UElement::group(GroupLabel::EPS_MINUS)
        );
        assert_eq!(
            parse_u("K^-2").unwrap(),
            UElement::group(GroupLabel::new(0, -2))
        );
    }
}
