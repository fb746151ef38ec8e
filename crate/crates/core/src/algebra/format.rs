//! Text, LaTeX and JSON forms of algebra elements.
//!
//! Text: `-Y^1_111 + 2·Y^1_11Y^1_11`, with `1` for the unit and `0` for the
//! zero element. Colors above 9 use braces: `Y^{12}_{1,12}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use super::{AlgebraElement, Generator, Monomial, TensorElement};
use crate::error::{Error, Result};
use crate::words::{Color, ColorWord};

fn wide(g: &Generator) -> bool {
    g.upper().0 > 9 || g.lower().letters().iter().any(|c| c.0 > 9)
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if wide(self) {
            write!(f, "Y^{{{}}}_{{{}}}", self.upper(), self.lower().to_literal(10))
        } else {
            write!(f, "Y^{}_{}", self.upper(), self.lower().to_literal(9))
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        for g in self.factors() {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

fn write_signed(out: &mut String, first: bool, c: &BigInt, body: &str, unit: bool) {
    let neg = c.is_negative();
    match (first, neg) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    let a = c.abs();
    if unit {
        out.push_str(&a.to_string());
    } else {
        if !a.is_one() {
            out.push_str(&a.to_string());
            out.push('·');
        }
        out.push_str(body);
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            write_signed(&mut out, k == 0, c, &m.to_string(), m.is_unit());
        }
        f.write_str(&out)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, (l, r, c)) in self.terms().enumerate() {
            write_signed(&mut out, k == 0, c, &format!("({l} | {r})"), false);
        }
        f.write_str(&out)
    }
}

impl Generator {
    pub fn to_latex(&self) -> String {
        let sep = if wide(self) { "," } else { "" };
        let lower: Vec<String> = self.lower().letters().iter().map(|c| c.to_string()).collect();
        format!("Y_{{{}}}^{{{}}}", lower.join(sep), self.upper())
    }
}

impl AlgebraElement {
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            out.push_str(match (k == 0, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            });
            let a = c.abs();
            if m.is_unit() {
                out.push_str(&a.to_string());
                continue;
            }
            if !a.is_one() {
                out.push_str(&a.to_string());
                out.push(' ');
            }
            let gens: Vec<String> = m.factors().iter().map(Generator::to_latex).collect();
            out.push_str(&gens.join(" "));
        }
        out
    }

    /// `[{"coeff": "2", "factors": [{"upper": 1, "lower": [1, 1]}, ...]}, ...]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(m, c)| {
                    let factors: Vec<Value> = m
                        .factors()
                        .iter()
                        .map(|g| {
                            json!({
                                "upper": g.upper().0,
                                "lower": g.lower().letters().iter().map(|c| c.0).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    json!({ "coeff": c.to_string(), "factors": factors })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<AlgebraElement> {
        let bad = |what: &str| Error::Parse(format!("element JSON: {what}"));
        let terms = v.as_array().ok_or_else(|| bad("expected a list of terms"))?;
        let mut out = AlgebraElement::zero();
        for t in terms {
            let coeff = match &t["coeff"] {
                Value::String(s) => BigInt::from_str(s).map_err(|_| bad("bad coefficient"))?,
                Value::Number(n) => BigInt::from(n.as_i64().ok_or_else(|| bad("bad coefficient"))?),
                _ => return Err(bad("missing coeff")),
            };
            let mut term = AlgebraElement::one().scale(&coeff);
            for f in t["factors"].as_array().ok_or_else(|| bad("missing factors"))? {
                let upper = f["upper"].as_u64().ok_or_else(|| bad("bad upper"))?;
                let lower: Vec<u32> = f["lower"]
                    .as_array()
                    .ok_or_else(|| bad("bad lower"))?
                    .iter()
                    .map(|x| x.as_u64().filter(|&x| x > 0).map(|x| x as u32).ok_or_else(|| bad("bad color")))
                    .collect::<Result<_>>()?;
                if upper == 0 {
                    return Err(bad("bad color"));
                }
                term = &term * &AlgebraElement::generator(Color(upper as u32), &ColorWord::from_values(lower))?;
            }
            out = &out + &term;
        }
        Ok(out)
    }
}

impl FromStr for AlgebraElement {
    type Err = Error;

    /// Parses the text form. Coefficients may be joined to the monomial with
    /// `·`, `*`, or nothing; `Y^i_j` with a single lower letter is reduced by
    /// the `δ` convention.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let mut p = Parser { chars: &chars, pos: 0 };
        let mut out = AlgebraElement::zero();
        let mut first = true;
        while p.pos < chars.len() {
            let mut sign = BigInt::one();
            match p.peek() {
                Some('+') => p.pos += 1,
                Some('-') => {
                    sign = -sign;
                    p.pos += 1;
                }
                _ if !first => return Err(p.err("expected '+' or '-'")),
                _ => {}
            }
            first = false;
            out = &out + &p.term()?.scale(&sign);
        }
        Ok(out)
    }
}

impl FromStr for Generator {
    type Err = Error;

    /// Parses a single `Y^i_u` with `|u| ≥ 2`.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { chars: &chars, pos: 0 };
        p.expect('Y')?;
        p.expect('^')?;
        let upper: Color = p.script(true)?.parse()?;
        p.expect('_')?;
        let lower = p.script(false)?;
        if p.pos != chars.len() {
            return Err(p.err("trailing input after generator"));
        }
        let lower = ColorWord::parse(&lower, if lower.contains(',') { u32::MAX } else { 9 })?;
        Generator::new(upper, lower)
    }
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn number(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn term(&mut self) -> Result<AlgebraElement> {
        let mut acc = AlgebraElement::one();
        if let Some(digits) = self.number() {
            let c = BigInt::from_str(&digits).map_err(|_| self.err("bad coefficient"))?;
            acc = acc.scale(&c);
            if matches!(self.peek(), Some('·') | Some('*')) {
                self.pos += 1;
                if self.peek() != Some('Y') {
                    return Err(self.err("expected a generator"));
                }
            }
        } else if self.peek() != Some('Y') {
            return Err(self.err("expected a coefficient or generator"));
        }
        while self.peek() == Some('Y') {
            self.pos += 1;
            self.expect('^')?;
            let upper = self.script(true)?;
            self.expect('_')?;
            let lower = self.script(false)?;
            let upper: Color = upper.parse()?;
            let lower = ColorWord::parse(&lower, if lower.contains(',') { u32::MAX } else { 9 })?;
            acc = &acc * &AlgebraElement::generator(upper, &lower)?;
        }
        Ok(acc)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected {c:?}")))
        }
    }

    /// A braced group or, unbraced, one digit (upper) or a run of digits (lower).
    fn script(&mut self, upper: bool) -> Result<String> {
        if self.peek() == Some('{') {
            self.pos += 1;
            let start = self.pos;
            while self.peek().is_some_and(|c| c != '}') {
                self.pos += 1;
            }
            let body: String = self.chars[start..self.pos].iter().collect();
            self.expect('}')?;
            return Ok(body);
        }
        if upper {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    self.pos += 1;
                    Ok(c.to_string())
                }
                _ => Err(self.err("expected a color")),
            }
        } else {
            self.number().ok_or_else(|| self.err("expected a word"))
        }
    }
}
