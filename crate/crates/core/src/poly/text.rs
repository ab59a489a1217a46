//! Text form of polynomials: `3/2*y1^2*y2 - y3 + 1`.
//!
//! Terms appear in descending order, products use `*`, powers `^`. The
//! parser accepts the same grammar plus parentheses.

use num_bigint::BigInt;

use super::monomial::Monomial;
use super::ring::{GradedRing, Polynomial};
use crate::error::{Error, Result};
use crate::field::Field;

pub fn render_monomial(names: &[String], m: &Monomial) -> String {
    let parts: Vec<String> = m
        .exponents()
        .enumerate()
        .filter(|(_, e)| *e > 0)
        .map(|(i, e)| if e == 1 { names[i].clone() } else { format!("{}^{e}", names[i]) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn render<F: Field>(ring: &GradedRing<F>, p: &Polynomial<F::Elem>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let k = ring.field();
    let mut out = String::new();
    for (idx, t) in p.terms().iter().enumerate() {
        let c = k.render(&t.coeff);
        let (neg, abs) = match c.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, c),
        };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if t.mono.is_one() {
            out.push_str(&abs);
        } else {
            if abs != "1" {
                out.push_str(&abs);
                out.push('*');
            }
            out.push_str(&render_monomial(ring.names(), &t.mono));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse().unwrap()));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Input(format!("unexpected character {c:?} in polynomial")));
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a GradedRing<F>,
    toks: Vec<Tok>,
    pos: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial<F::Elem>> {
        let r = self.ring;
        let mut neg = false;
        if self.eat('-') {
            neg = true;
        } else {
            self.eat('+');
        }
        let first = self.product()?;
        let mut acc = if neg { r.neg(&first) } else { first };
        loop {
            if self.eat('+') {
                acc = r.add(&acc, &self.product()?);
            } else if self.eat('-') {
                acc = r.sub(&acc, &self.product()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Polynomial<F::Elem>> {
        let r = self.ring;
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = r.mul(&acc, &self.power()?);
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<u32> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                u32::try_from(n).map_err(|_| Error::Input("exponent too large".into()))
            }
            other => Err(Error::Input(format!("expected exponent, found {other:?}"))),
        }
    }

    fn power(&mut self) -> Result<Polynomial<F::Elem>> {
        let r = self.ring;
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.exponent()?;
            Ok(r.pow(&base, e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial<F::Elem>> {
        let r = self.ring;
        let k = r.field();
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut den = BigInt::from(1);
                if self.peek() == Some(&Tok::Op('/')) {
                    if let Some(Tok::Num(d)) = self.toks.get(self.pos + 1).cloned() {
                        self.pos += 2;
                        den = d;
                    }
                }
                let c = k
                    .from_ratio(&n, &den)
                    .ok_or_else(|| Error::Input(format!("denominator {den} vanishes in the field")))?;
                Ok(r.constant(c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let i = r
                    .names()
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::Input(format!("unknown variable {name}")))?;
                Ok(r.var(i))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Input("missing closing parenthesis".into()));
                }
                Ok(inner)
            }
            other => Err(Error::Input(format!("unexpected token {other:?} in polynomial"))),
        }
    }
}

pub fn parse<F: Field>(ring: &GradedRing<F>, s: &str) -> Result<Polynomial<F::Elem>> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Input("empty polynomial".into()));
    }
    let mut p = Parser { ring, toks, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Input(format!("trailing input at token {}", p.pos)));
    }
    Ok(out)
}
