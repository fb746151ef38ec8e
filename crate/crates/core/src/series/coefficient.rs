use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// An element of the free associative algebra over `ℚ` on named symbols.
/// Symbols do not commute with each other.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeCoefficient {
    terms: BTreeMap<Vec<String>, BigRational>,
}

impl FreeCoefficient {
    pub fn zero() -> Self {
        FreeCoefficient::default()
    }

    pub fn one() -> Self {
        FreeCoefficient::scalar(BigRational::one())
    }

    pub fn scalar(c: BigRational) -> Self {
        let mut out = FreeCoefficient::zero();
        out.add_term(Vec::new(), c);
        out
    }

    pub fn integer(c: i64) -> Self {
        FreeCoefficient::scalar(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn symbol(name: &str) -> Self {
        FreeCoefficient::word(&[name], BigRational::one())
    }

    /// `c` times the product of the named symbols in order.
    pub fn word(names: &[&str], c: BigRational) -> Self {
        let mut out = FreeCoefficient::zero();
        out.add_term(names.iter().map(|s| s.to_string()).collect(), c);
        out
    }

    pub fn add_term(&mut self, word: Vec<String>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<String>, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Vec::new()).is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &BigRational) -> FreeCoefficient {
        let mut out = FreeCoefficient::zero();
        for (w, d) in &self.terms {
            out.add_term(w.clone(), d * c);
        }
        out
    }

    /// The image in the commutative polynomial ring: symbol words sorted.
    pub fn commutative_image(&self) -> FreeCoefficient {
        let mut out = FreeCoefficient::zero();
        for (w, c) in &self.terms {
            let mut w = w.clone();
            w.sort();
            out.add_term(w, c.clone());
        }
        out
    }

    /// Replaces every symbol by a rational value.
    pub fn evaluate(&self, values: &dyn Fn(&str) -> Option<BigRational>) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (w, c) in &self.terms {
            let mut prod = c.clone();
            for s in w {
                prod *= values(s).ok_or_else(|| Error::Parse(format!("no value for symbol {s:?}")))?;
            }
            total += prod;
        }
        Ok(total)
    }

    /// `[{"c": "2/3", "word": ["a", "b"]}, ...]`.
    pub fn to_json(&self) -> Value {
        Value::Array(self.terms.iter().map(|(w, c)| json!({ "c": c.to_string(), "word": w })).collect())
    }

    pub fn from_json(v: &Value) -> Result<FreeCoefficient> {
        let bad = |what: &str| Error::Parse(format!("coefficient JSON: {what}"));
        let mut out = FreeCoefficient::zero();
        for t in v.as_array().ok_or_else(|| bad("expected a list of terms"))? {
            let c = match &t["c"] {
                Value::String(s) => BigRational::from_str(s.trim()).map_err(|_| bad("bad rational"))?,
                Value::Number(n) => {
                    BigRational::from_integer(BigInt::from(n.as_i64().ok_or_else(|| bad("bad rational"))?))
                }
                _ => return Err(bad("missing c")),
            };
            let word = match &t["word"] {
                Value::Null => Vec::new(),
                Value::Array(items) => items
                    .iter()
                    .map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad("symbols must be strings")))
                    .collect::<Result<_>>()?,
                _ => return Err(bad("word must be a list")),
            };
            out.add_term(word, c);
        }
        Ok(out)
    }
}

impl fmt::Display for FreeCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            if w.is_empty() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}·")?;
                }
                f.write_str(&w.join("·"))?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a FreeCoefficient> for &'a FreeCoefficient {
    type Output = FreeCoefficient;

    fn add(self, rhs: &FreeCoefficient) -> FreeCoefficient {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a FreeCoefficient> for &'a FreeCoefficient {
    type Output = FreeCoefficient;

    fn sub(self, rhs: &FreeCoefficient) -> FreeCoefficient {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &FreeCoefficient {
    type Output = FreeCoefficient;

    fn neg(self) -> FreeCoefficient {
        self.scale(&-BigRational::one())
    }
}

impl<'a> Mul<&'a FreeCoefficient> for &'a FreeCoefficient {
    type Output = FreeCoefficient;

    fn mul(self, rhs: &FreeCoefficient) -> FreeCoefficient {
        let mut out = FreeCoefficient::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                let mut w = a.clone();
                w.extend(b.iter().cloned());
                out.add_term(w, c * d);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbols_do_not_commute() {
        let a = FreeCoefficient::symbol("a");
        let b = FreeCoefficient::symbol("b");
        assert_ne!(&a * &b, &b * &a);
        assert_eq!((&a * &b).commutative_image(), (&b * &a).commutative_image());
        assert_eq!(&FreeCoefficient::one() * &a, a);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn display_and_json() {
        let a = FreeCoefficient::symbol("a");
        let b = FreeCoefficient::symbol("b");
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let x = &(&a * &b).scale(&-half) + &FreeCoefficient::integer(3);
        assert_eq!(x.to_string(), "3 - 1/2·a·b");
        assert_eq!(FreeCoefficient::from_json(&x.to_json()).unwrap(), x);
        assert_eq!(FreeCoefficient::zero().to_string(), "0");
        assert!(FreeCoefficient::from_json(&json!([{"c": "x"}])).is_err());
    }

    #[test]
    fn evaluation() {
        let x = &(&FreeCoefficient::symbol("a") * &FreeCoefficient::symbol("b")) + &FreeCoefficient::integer(1);
        let v = x.evaluate(&|s| Some(BigRational::from_integer(BigInt::from(if s == "a" { 2 } else { 5 })))).unwrap();
        assert_eq!(v, BigRational::from_integer(BigInt::from(11)));
        assert!(x.evaluate(&|_| None).is_err());
    }
}
