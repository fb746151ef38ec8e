//! Noncommutative power series with free symbolic coefficients, their
//! substitution, and the left and right substitutional inverses.

mod coefficient;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{AlgebraElement, Antipode, Generator, HopfAlgebra};
use crate::error::{Error, Result};
use crate::words::{compositions, for_each_coloring, Color, ColorWord};

pub use coefficient::FreeCoefficient;

/// Which side an inverse acts on: `G ∘ F = id` (left) or `F ∘ H = id` (right).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// All words of length `len` over `1..=n`, in lexicographic order.
pub fn words_of_length(n: u32, len: usize) -> Vec<ColorWord> {
    let mut out = Vec::new();
    for_each_coloring(n, &vec![None; len], |w| out.push(ColorWord::new(w.to_vec())));
    out
}

/// An `N`-tuple `F^i(z) = z_i + Σ_{2 ≤ |w| ≤ D} f^i_w z_w`, truncated at
/// order `D`. Only the coefficients with `|w| ≥ 2` are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCSeries {
    n: u32,
    order: usize,
    coeffs: BTreeMap<(Color, ColorWord), FreeCoefficient>,
}

impl NCSeries {
    /// The identity `F^i(z) = z_i`.
    pub fn identity(n: u32, order: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoColors);
        }
        if order == 0 {
            return Err(Error::Parse("truncation order must be at least 1".into()));
        }
        Ok(NCSeries { n, order, coeffs: BTreeMap::new() })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `f^i_w`, including the implicit `δ` first-order terms.
    pub fn coefficient(&self, i: Color, w: &ColorWord) -> FreeCoefficient {
        match w.len() {
            0 => FreeCoefficient::zero(),
            1 if w.letters()[0] == i => FreeCoefficient::one(),
            1 => FreeCoefficient::zero(),
            _ => self.coeffs.get(&(i, w.clone())).cloned().unwrap_or_default(),
        }
    }

    /// Sets `f^i_w` for `2 ≤ |w| ≤ D`.
    pub fn set(&mut self, i: Color, w: ColorWord, c: FreeCoefficient) -> Result<()> {
        i.check(self.n)?;
        w.check(self.n)?;
        match w.len() {
            0 => return Err(Error::ConstantTerm),
            1 => {
                if c != self.coefficient(i, &w) {
                    return Err(Error::NonTangent(format!("coefficient of z_{w} in component {i}")));
                }
                return Ok(());
            }
            len if len > self.order => return Err(Error::OrderOverflow { len, order: self.order }),
            _ => {}
        }
        if c.is_zero() {
            self.coeffs.remove(&(i, w));
        } else {
            self.coeffs.insert((i, w), c);
        }
        Ok(())
    }

    /// Stored coefficients with `|w| ≥ 2`.
    pub fn coefficients(&self) -> impl Iterator<Item = (Color, &ColorWord, &FreeCoefficient)> {
        self.coeffs.iter().map(|((i, w), c)| (*i, w, c))
    }

    /// The series with `f^i_w` a distinct symbol for every `(i, w)`.
    pub fn generic(n: u32, order: usize) -> Result<Self> {
        let mut f = NCSeries::identity(n, order)?;
        for len in 2..=order {
            for w in words_of_length(n, len) {
                for i in 1..=n {
                    let name = format!("f{i}_{}", w.to_literal(n));
                    f.set(Color(i), w.clone(), FreeCoefficient::symbol(&name))?;
                }
            }
        }
        Ok(f)
    }

    /// A reproducible random series whose coefficients are small integer
    /// combinations of words of length 1 or 2 in `symbols`.
    pub fn random(n: u32, order: usize, symbols: &[&str], seed: u64) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::Parse("at least one symbol is needed".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut f = NCSeries::identity(n, order)?;
        for len in 2..=order {
            for w in words_of_length(n, len) {
                for i in 1..=n {
                    if rng.gen_bool(0.2) {
                        continue;
                    }
                    let mut c = FreeCoefficient::zero();
                    for _ in 0..rng.gen_range(1..=2) {
                        let k: i64 = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
                        let word: Vec<&str> =
                            (0..rng.gen_range(1..=2)).map(|_| symbols[rng.gen_range(0..symbols.len())]).collect();
                        c = &c + &FreeCoefficient::word(&word, BigRational::from_integer(BigInt::from(k)));
                    }
                    f.set(Color(i), w.clone(), c)?;
                }
            }
        }
        Ok(f)
    }

    fn check_compatible(&self, other: &NCSeries) -> Result<()> {
        if self.n != other.n || self.order != other.order {
            return Err(Error::Mismatch(format!(
                "N={} D={} against N={} D={}",
                self.n, self.order, other.n, other.order
            )));
        }
        Ok(())
    }

    /// The smallest order at which the two series differ.
    pub fn first_disagreement(&self, other: &NCSeries) -> Result<Option<usize>> {
        self.check_compatible(other)?;
        let mut orders: Vec<usize> = Vec::new();
        for (i, w, c) in self.coefficients() {
            if other.coefficient(i, w) != *c {
                orders.push(w.len());
            }
        }
        for (i, w, c) in other.coefficients() {
            if self.coefficient(i, w) != *c {
                orders.push(w.len());
            }
        }
        Ok(orders.into_iter().min())
    }

    /// The same series truncated, or zero-padded, at a new order.
    pub fn with_order(&self, order: usize) -> Result<NCSeries> {
        let mut out = NCSeries::identity(self.n, order)?;
        out.coeffs =
            self.coeffs.iter().filter(|((_, w), _)| w.len() <= order).map(|(k, c)| (k.clone(), c.clone())).collect();
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `{"n": N, "order": D, "coeffs": [{"i": 1, "w": "12", "value": [...]}, ...]}`.
    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .coefficients()
            .map(|(i, w, c)| json!({ "i": i.0, "w": w.to_literal(self.n), "value": c.to_json() }))
            .collect();
        json!({ "n": self.n, "order": self.order, "coeffs": coeffs })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("series JSON: {what}"));
        let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as u32;
        let order = v["order"].as_u64().ok_or_else(|| bad("missing order"))? as usize;
        let mut f = NCSeries::identity(n, order)?;
        let entries = match &v["coeffs"] {
            Value::Null => &[][..],
            Value::Array(items) => &items[..],
            _ => return Err(bad("coeffs must be a list")),
        };
        for e in entries {
            let i = e["i"].as_u64().ok_or_else(|| bad("missing i"))? as u32;
            let w = match &e["w"] {
                Value::String(s) => ColorWord::parse(s, n)?,
                Value::Array(items) => ColorWord::from_values(
                    items
                        .iter()
                        .map(|x| x.as_u64().map(|x| x as u32).ok_or_else(|| bad("bad letter")))
                        .collect::<Result<Vec<_>>>()?,
                ),
                _ => return Err(bad("missing w")),
            };
            let c = FreeCoefficient::from_json(&e["value"])?;
            if w.is_empty() && !c.is_zero() {
                return Err(Error::ConstantTerm);
            }
            if w.is_empty() {
                continue;
            }
            let accumulated = &f.coefficient(Color(i), &w) + &c;
            let c = if w.len() == 1 { c } else { accumulated };
            f.set(Color(i), w, c)?;
        }
        Ok(f)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        NCSeries::from_json(&serde_json::from_str(s)?)
    }

    pub fn to_general(&self) -> GeneralSeries {
        let mut g = GeneralSeries::zero(self.n, self.order);
        for i in 1..=self.n {
            g.coeffs.insert((Color(i), ColorWord::singleton(Color(i))), FreeCoefficient::one());
        }
        for (i, w, c) in self.coefficients() {
            g.coeffs.insert((i, w.clone()), c.clone());
        }
        g
    }
}

impl fmt::Display for NCSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}, order = {}", self.n, self.order)?;
        for i in 1..=self.n {
            let mut line = format!("F^{i} = z_{i}");
            for ((j, w), c) in &self.coeffs {
                if j.0 == i {
                    line.push_str(&format!(" + ({c})·z_{}", w.to_literal(self.n)));
                }
            }
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// `(F ∘ G)^i_u = Σ f^i_w g^{w(1)}_{u|C_1} ⋯ g^{w(q)}_{u|C_q}` over colored
/// interval partitions of `u`.
pub fn substitute(f: &NCSeries, g: &NCSeries) -> Result<NCSeries> {
    f.check_compatible(g)?;
    let n = f.n;
    let mut out = NCSeries::identity(n, f.order)?;
    for len in 2..=f.order {
        for u in words_of_length(n, len) {
            for i in 1..=n {
                let i = Color(i);
                let mut total = FreeCoefficient::zero();
                for q in 1..=len {
                    for sizes in compositions(len, q) {
                        let mut blocks = Vec::with_capacity(q);
                        let mut forced = Vec::with_capacity(q);
                        let mut start = 0;
                        for &s in &sizes {
                            let part = u.slice(start, start + s);
                            forced.push((s == 1).then(|| part.letters()[0]));
                            blocks.push(part);
                            start += s;
                        }
                        for_each_coloring(n, &forced, |w| {
                            let word = ColorWord::new(w.to_vec());
                            let mut term = f.coefficient(i, &word);
                            for (k, part) in blocks.iter().enumerate() {
                                if term.is_zero() {
                                    break;
                                }
                                if part.len() > 1 {
                                    term = &term * &g.coefficient(w[k], part);
                                }
                            }
                            total = &total + &term;
                        });
                    }
                }
                out.set(i, u.clone(), total)?;
            }
        }
    }
    Ok(out)
}

/// `θ(a)(F)`: sends `Y^i_u` to `f^i_u`, multiplicatively in factor order.
pub fn pairing(a: &AlgebraElement, f: &NCSeries) -> Result<FreeCoefficient> {
    let mut total = FreeCoefficient::zero();
    for (m, c) in a.terms() {
        let mut term = FreeCoefficient::scalar(BigRational::from_integer(c.clone()));
        for g in m.factors() {
            if g.lower().len() > f.order {
                return Err(Error::OrderOverflow { len: g.lower().len(), order: f.order });
            }
            term = &term * &f.coefficient(g.upper(), g.lower());
        }
        total = &total + &term;
    }
    Ok(total)
}

fn inverse_with(f: &NCSeries, antipode: impl Fn(&Generator) -> Result<AlgebraElement>) -> Result<NCSeries> {
    let mut out = NCSeries::identity(f.n, f.order)?;
    for len in 2..=f.order {
        for v in words_of_length(f.n, len) {
            for j in 1..=f.n {
                let g = Generator::new(Color(j), v.clone())?;
                out.set(Color(j), v.clone(), pairing(&antipode(&g)?, f)?)?;
            }
        }
    }
    Ok(out)
}

/// `G` with `g^j_v = ⟨S_L(Y^j_v), F⟩`, so that `G ∘ F = id`.
pub fn left_inverse(f: &NCSeries) -> Result<NCSeries> {
    let h = HopfAlgebra::new(f.n)?;
    inverse_with(f, |g| h.antipode_inverse_recursive(g))
}

/// `H` with `h^j_v = ⟨S_R(Y^j_v), F⟩`, `S_R = t S_H t`, so that `F ∘ H = id`.
pub fn right_inverse(f: &NCSeries) -> Result<NCSeries> {
    let h = HopfAlgebra::new(f.n)?;
    inverse_with(f, |g| Ok(h.antipode(Antipode::Recursive, &AlgebraElement::from(g.clone()).map_t())?.map_t()))
}

/// Left: `candidate ∘ f = id`. Right: `f ∘ candidate = id`.
pub fn verify_inverse(candidate: &NCSeries, f: &NCSeries, side: Side) -> Result<bool> {
    let composed = match side {
        Side::Left => substitute(candidate, f)?,
        Side::Right => substitute(f, candidate)?,
    };
    Ok(composed.is_identity())
}

/// A truncated tuple of series with arbitrary coefficients, constant terms
/// included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralSeries {
    n: u32,
    order: usize,
    coeffs: BTreeMap<(Color, ColorWord), FreeCoefficient>,
}

impl GeneralSeries {
    pub fn zero(n: u32, order: usize) -> Self {
        GeneralSeries { n, order, coeffs: BTreeMap::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficient(&self, i: Color, w: &ColorWord) -> FreeCoefficient {
        self.coeffs.get(&(i, w.clone())).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: Color, w: ColorWord, c: FreeCoefficient) -> Result<()> {
        i.check(self.n)?;
        w.check(self.n)?;
        if w.len() > self.order {
            return Err(Error::OrderOverflow { len: w.len(), order: self.order });
        }
        if c.is_zero() {
            self.coeffs.remove(&(i, w));
        } else {
            self.coeffs.insert((i, w), c);
        }
        Ok(())
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (Color, &ColorWord, &FreeCoefficient)> {
        self.coeffs.iter().map(|((i, w), c)| (*i, w, c))
    }

    pub fn has_constant_term(&self) -> bool {
        self.coeffs.keys().any(|(_, w)| w.is_empty())
    }

    /// Component `i` as a map from words to coefficients.
    fn component(&self, i: Color) -> BTreeMap<ColorWord, FreeCoefficient> {
        self.coeffs.iter().filter(|((j, _), _)| *j == i).map(|((_, w), c)| (w.clone(), c.clone())).collect()
    }

    /// Applies `f` to every coefficient.
    pub fn map_coefficients(&self, f: impl Fn(&FreeCoefficient) -> FreeCoefficient) -> GeneralSeries {
        let mut out = GeneralSeries::zero(self.n, self.order);
        for ((i, w), c) in &self.coeffs {
            let d = f(c);
            if !d.is_zero() {
                out.coeffs.insert((*i, w.clone()), d);
            }
        }
        out
    }
}

type Poly = BTreeMap<ColorWord, FreeCoefficient>;

fn poly_mul(a: &Poly, b: &Poly, order: usize) -> Poly {
    let mut out: Poly = BTreeMap::new();
    for (u, c) in a {
        for (v, d) in b {
            if u.len() + v.len() > order {
                continue;
            }
            let e = out.entry(u.concat(v)).or_default();
            *e = &*e + &(c * d);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Formal substitution `F(G(z))` with constants placed to the left of the
/// variables, truncated at the common order.
pub fn substitute_general(f: &GeneralSeries, g: &GeneralSeries) -> Result<GeneralSeries> {
    if f.n != g.n || f.order != g.order {
        return Err(Error::Mismatch(format!("N={} D={} against N={} D={}", f.n, f.order, g.n, g.order)));
    }
    if g.has_constant_term() {
        return Err(Error::ConstantTerm);
    }
    let order = f.order;
    let comps: Vec<Poly> = (1..=f.n).map(|j| g.component(Color(j))).collect();
    let mut out = GeneralSeries::zero(f.n, order);
    for ((i, w), c) in &f.coeffs {
        let mut prod: Poly = BTreeMap::from([(ColorWord::empty(), c.clone())]);
        for letter in w.letters() {
            prod = poly_mul(&prod, &comps[(letter.0 - 1) as usize], order);
        }
        for (u, d) in prod {
            let e = &out.coefficient(*i, &u) + &d;
            out.set(*i, u, e)?;
        }
    }
    Ok(out)
}

impl fmt::Display for GeneralSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            let terms: Vec<String> = self
                .coeffs
                .iter()
                .filter(|((j, _), _)| j.0 == i)
                .map(
                    |((_, w), c)| {
                        if w.is_empty() {
                            format!("({c})")
                        } else {
                            format!("({c})·z_{}", w.to_literal(self.n))
                        }
                    },
                )
                .collect();
            let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            writeln!(f, "F^{i} = {body}")?;
        }
        Ok(())
    }
}
