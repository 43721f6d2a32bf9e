use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use super::hpoly::HPoly;
use super::laurent::{all_negative, QLaurent};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        msg: msg.into(),
    })
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

pub(crate) fn var_factor(var: char, exp: i64) -> Option<String> {
    match exp {
        0 => None,
        1 => Some(var.to_string()),
        e => Some(format!("{var}^{e}")),
    }
}

/// Body of one monomial: coefficient magnitude and variable factors,
/// space-separated, magnitude 1 elided unless the monomial is bare.
pub(crate) fn monomial_body(mag: &BigInt, factors: &[String]) -> String {
    if factors.is_empty() {
        mag.to_string()
    } else if mag.is_one() {
        factors.join(" ")
    } else {
        let mut s = mag.to_string();
        for f in factors {
            s.push(' ');
            s.push_str(f);
        }
        s
    }
}

/// Joins signed term bodies: `a - b + c`, leading minus attached.
pub(crate) fn assemble(terms: &[(bool, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (neg, body)) in terms.iter().enumerate() {
        if i == 0 {
            if *neg {
                out.push('-');
            }
        } else {
            out.push_str(if *neg { " - " } else { " + " });
        }
        out.push_str(body);
    }
    out
}

/// Canonical text of a Laurent polynomial, ascending exponents.
pub fn render_qlaurent(p: &QLaurent, var: char) -> String {
    let terms: Vec<(bool, String)> = p
        .iter()
        .map(|(e, c)| {
            let factors: Vec<String> = var_factor(var, e).into_iter().collect();
            (c.is_negative(), monomial_body(&c.abs(), &factors))
        })
        .collect();
    assemble(&terms)
}

/// Sort key shared by both renderers: `deg_t` descending, `deg_z` ascending.
fn tz_sorted(p: &HPoly) -> Vec<((u32, u32), &QLaurent)> {
    let mut groups: Vec<_> = p.iter().collect();
    groups.sort_by(|a, b| (b.0 .0, a.0 .1).cmp(&(a.0 .0, b.0 .1)));
    groups
}

/// Flat canonical form: one monomial per `(q, t, z)` exponent triple.
pub fn render_flat(p: &HPoly) -> String {
    let mut terms: Vec<(bool, String)> = Vec::new();
    for ((dt, dz), coeff) in tz_sorted(p) {
        for (e, c) in coeff.iter() {
            let mut factors = Vec::new();
            factors.extend(var_factor('q', e));
            factors.extend(var_factor('t', dt as i64));
            factors.extend(var_factor('z', dz as i64));
            terms.push((c.is_negative(), monomial_body(&c.abs(), &factors)));
        }
    }
    assemble(&terms)
}

/// Grouped form: the `q`-coefficient of each `t^a z^b` monomial collected in
/// parentheses, the way homotopy polynomials are usually written.
pub fn render_grouped(p: &HPoly) -> String {
    let mut terms: Vec<(bool, String)> = Vec::new();
    for ((dt, dz), coeff) in tz_sorted(p) {
        let mut tz = Vec::new();
        tz.extend(var_factor('t', dt as i64));
        tz.extend(var_factor('z', dz as i64));
        if let Some((e, c)) = coeff.as_monomial() {
            let mut factors: Vec<String> = var_factor('q', e).into_iter().collect();
            factors.extend(tz);
            terms.push((c.is_negative(), monomial_body(&c.abs(), &factors)));
        } else {
            let (neg, body) = if all_negative(coeff) {
                (true, render_qlaurent(&-coeff, 'q'))
            } else {
                (false, render_qlaurent(coeff, 'q'))
            };
            let mut s = format!("({body})");
            for f in tz {
                s.push(' ');
                s.push_str(&f);
            }
            terms.push((neg, s));
        }
    }
    assemble(&terms)
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// One parsed monomial: integer coefficient and exponent per variable.
pub(crate) type RawMonomial = (BigInt, BTreeMap<char, i64>);

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    idx: usize,
    vars: &'a [(char, bool)],
}

impl<'a> Parser<'a> {
    fn new(src: &str, vars: &'a [(char, bool)]) -> Self {
        Self {
            chars: src.char_indices().collect(),
            idx: 0,
            vars,
        }
    }

    fn skip_ws(&mut self) {
        while let Some(&(_, c)) = self.chars.get(self.idx) {
            if c.is_whitespace() {
                self.idx += 1;
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars
            .get(self.idx)
            .map(|&(p, _)| p)
            .unwrap_or_else(|| {
                self.chars
                    .last()
                    .map(|&(p, c)| p + c.len_utf8())
                    .unwrap_or(0)
            })
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.idx).map(|&(_, c)| c);
        if c.is_some() {
            self.idx += 1;
        }
        c
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos();
        let mut digits = String::new();
        while let Some(&(_, c)) = self.chars.get(self.idx) {
            if c.is_ascii_digit() {
                digits.push(c);
                self.idx += 1;
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return err(start, "expected an integer");
        }
        Ok(digits.parse().expect("digit string"))
    }

    fn exponent(&mut self, var: char, neg_ok: bool) -> Result<i64, ParseError> {
        // caller consumed '^'
        self.skip_ws();
        let mut negative = false;
        if self.peek() == Some('-') {
            if !neg_ok {
                return err(
                    self.pos(),
                    format!("negative exponent not allowed on '{var}'"),
                );
            }
            self.bump();
            negative = true;
        }
        let start = self.pos();
        let n = self.integer()?;
        let n: i64 = n.try_into().map_err(|_| ParseError {
            pos: start,
            msg: "exponent too large".into(),
        })?;
        Ok(if negative { -n } else { n })
    }

    /// factor := INT | VAR ['^' ['-'] INT] | '(' poly ')'
    fn factor(&mut self) -> Result<Vec<RawMonomial>, ParseError> {
        self.skip_ws();
        let pos = self.pos();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(vec![(n, BTreeMap::new())])
            }
            Some('(') => {
                self.bump();
                let inner = self.poly()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return err(self.pos(), "expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let neg_ok = match self.vars.iter().find(|&&(v, _)| v == c) {
                    Some(&(_, n)) => n,
                    None => return err(pos, format!("unknown variable '{c}'")),
                };
                self.bump();
                let exp = if self.peek() == Some('^') {
                    self.bump();
                    self.exponent(c, neg_ok)?
                } else {
                    1
                };
                let mut exps = BTreeMap::new();
                exps.insert(c, exp);
                Ok(vec![(BigInt::one(), exps)])
            }
            Some(c) => err(pos, format!("unexpected character '{c}'")),
            None => err(pos, "unexpected end of input"),
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || c.is_ascii_alphabetic() || c == '(')
    }

    /// term := factor (['*'] factor)*
    fn term(&mut self) -> Result<Vec<RawMonomial>, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
            } else if !self.starts_factor() {
                break;
            }
            let next = self.factor()?;
            acc = multiply(&acc, &next);
        }
        Ok(acc)
    }

    /// poly := ['+'|'-'] term (('+'|'-') term)*
    fn poly(&mut self) -> Result<Vec<RawMonomial>, ParseError> {
        let mut acc: Vec<RawMonomial> = Vec::new();
        let mut negate = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let term = self.term()?;
            for (c, e) in term {
                acc.push((if negate { -c } else { c }, e));
            }
            match self.peek() {
                Some('+') => {
                    self.bump();
                    negate = false;
                }
                Some('-') => {
                    self.bump();
                    negate = true;
                }
                _ => break,
            }
        }
        Ok(acc)
    }
}

fn multiply(a: &[RawMonomial], b: &[RawMonomial]) -> Vec<RawMonomial> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (ca, ea) in a {
        for (cb, eb) in b {
            let mut e = ea.clone();
            for (&v, &x) in eb {
                *e.entry(v).or_insert(0) += x;
            }
            out.push((ca * cb, e));
        }
    }
    out
}

/// Parses into a raw monomial list; `vars` lists the allowed variables and
/// whether each may carry a negative exponent.
pub(crate) fn parse_monomials(
    src: &str,
    vars: &[(char, bool)],
) -> Result<Vec<RawMonomial>, ParseError> {
    let mut p = Parser::new(src, vars);
    if p.peek().is_none() {
        return err(0, "empty input");
    }
    let monomials = p.poly()?;
    p.skip_ws();
    if p.idx != p.chars.len() {
        return err(p.pos(), "trailing input");
    }
    Ok(monomials)
}

/// Parses the `q,t,z` grammar (`q` Laurent, `t` and `z` plain).
pub fn parse_hpoly(src: &str) -> Result<HPoly, ParseError> {
    let monomials = parse_monomials(src, &[('q', true), ('t', false), ('z', false)])?;
    let mut out = HPoly::zero();
    for (c, exps) in monomials {
        let q = exps.get(&'q').copied().unwrap_or(0);
        let t = exps.get(&'t').copied().unwrap_or(0) as u32;
        let z = exps.get(&'z').copied().unwrap_or(0) as u32;
        out.add_term(t, z, &QLaurent::monomial(q, c));
    }
    Ok(out)
}

/// Parses a polynomial in `q` alone.
pub fn parse_qlaurent(src: &str) -> Result<QLaurent, ParseError> {
    let monomials = parse_monomials(src, &[('q', true)])?;
    let mut out = QLaurent::zero();
    for (c, exps) in monomials {
        out.add_term(exps.get(&'q').copied().unwrap_or(0), c);
    }
    Ok(out)
}
