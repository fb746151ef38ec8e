//! The free algebra on the generators `Y^i_u`, with integer coefficients.

mod format;
mod hopf;

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::words::{Color, ColorWord};

pub use hopf::{lambda, omega, Antipode, HopfAlgebra, LambdaOrder, Pairing};

/// A generator `Y^i_u` with `|u| ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    upper: Color,
    lower: ColorWord,
}

impl Generator {
    pub fn new(upper: Color, lower: ColorWord) -> Result<Self> {
        if lower.len() < 2 {
            return Err(Error::DegenerateGenerator { upper: upper.0, lower: lower.to_string() });
        }
        Ok(Generator { upper, lower })
    }

    pub fn upper(&self) -> Color {
        self.upper
    }

    pub fn lower(&self) -> &ColorWord {
        &self.lower
    }

    /// `|u| - 1`.
    pub fn grade(&self) -> usize {
        self.lower.len() - 1
    }

    pub(crate) fn with_lower(&self, lower: ColorWord) -> Generator {
        Generator { upper: self.upper, lower }
    }

    pub fn check(&self, n: u32) -> Result<()> {
        self.upper.check(n)?;
        self.lower.check(n)
    }
}

/// A word in the generators; the empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<Generator>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(factors: Vec<Generator>) -> Self {
        Monomial(factors)
    }

    pub fn factors(&self) -> &[Generator] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn grade(&self) -> usize {
        self.0.iter().map(Generator::grade).sum()
    }

    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Monomial(v)
    }

    pub fn reversed(&self) -> Monomial {
        Monomial(self.0.iter().rev().cloned().collect())
    }
}

impl From<Generator> for Monomial {
    fn from(g: Generator) -> Self {
        Monomial(vec![g])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then(self.0.len().cmp(&other.0.len())).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite integer combination of monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, BigInt>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn one() -> Self {
        AlgebraElement::from(Monomial::unit())
    }

    /// `Y^i_u`, normalizing `Y^i_j` to `δ_ij · 1`.
    pub fn generator(upper: Color, lower: &ColorWord) -> Result<Self> {
        match lower.len() {
            0 => Err(Error::EmptyWord),
            1 if lower.letters()[0] == upper => Ok(AlgebraElement::one()),
            1 => Ok(AlgebraElement::zero()),
            _ => Ok(AlgebraElement::from(Generator::new(upper, lower.clone())?)),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Self {
        let mut out = AlgebraElement::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub(crate) fn add_scaled(&mut self, other: &AlgebraElement, c: &BigInt) {
        for (m, d) in &other.terms {
            self.add_term(m.clone(), d * c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of the unit.
    pub fn counit(&self) -> BigInt {
        self.coefficient(&Monomial::unit())
    }

    pub fn scale(&self, c: &BigInt) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        out.add_scaled(self, c);
        out
    }

    /// Applies a linear map given on monomials.
    pub fn map_linear(&self, mut f: impl FnMut(&Monomial) -> AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m, c) in &self.terms {
            out.add_scaled(&f(m), c);
        }
        out
    }

    /// True when every monomial has the given grade.
    pub fn is_homogeneous(&self, grade: usize) -> bool {
        self.terms.keys().all(|m| m.grade() == grade)
    }

    /// Sum of the absolute values of the coefficients.
    pub fn weight(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }

    pub fn check(&self, n: u32) -> Result<()> {
        self.terms.keys().flat_map(|m| m.0.iter()).try_for_each(|g| g.check(n))
    }

    pub fn max_color(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter())
            .flat_map(|g| std::iter::once(g.upper.0).chain(g.lower.letters().iter().map(|c| c.0)))
            .max()
            .unwrap_or(1)
    }
}

impl From<Monomial> for AlgebraElement {
    fn from(m: Monomial) -> Self {
        let mut out = AlgebraElement::zero();
        out.add_term(m, BigInt::one());
        out
    }
}

impl From<Generator> for AlgebraElement {
    fn from(g: Generator) -> Self {
        AlgebraElement::from(Monomial::from(g))
    }
}

impl<'a> Add<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigInt::one());
        out
    }
}

impl<'a> Sub<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigInt::one());
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        self.scale(&-BigInt::one())
    }
}

impl<'a> Mul<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;

    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a.concat(b), c * d);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<AlgebraElement> for AlgebraElement {
            type Output = AlgebraElement;
            fn $m(self, rhs: AlgebraElement) -> AlgebraElement {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        -&self
    }
}

/// A finite integer combination of `left ⊗ right` monomial pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<(Monomial, Monomial), BigInt>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn one() -> Self {
        let mut t = TensorElement::zero();
        t.add_term(Monomial::unit(), Monomial::unit(), BigInt::one());
        t
    }

    pub fn add_term(&mut self, l: Monomial, r: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((l, r)) {
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

    pub fn add_scaled(&mut self, other: &TensorElement, c: &BigInt) {
        for ((l, r), d) in &other.terms {
            self.add_term(l.clone(), r.clone(), d * c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Monomial, &BigInt)> {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, l: &Monomial, r: &Monomial) -> BigInt {
        self.terms.get(&(l.clone(), r.clone())).cloned().unwrap_or_default()
    }

    /// Swaps the two tensor factors.
    pub fn flip(&self) -> TensorElement {
        TensorElement { terms: self.terms.iter().map(|((l, r), c)| ((r.clone(), l.clone()), c.clone())).collect() }
    }

    /// `(x ⊗ y)(x' ⊗ y') = xx' ⊗ yy'`.
    pub fn mul(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((a, b), c) in &self.terms {
            for ((x, y), d) in &other.terms {
                out.add_term(a.concat(x), b.concat(y), c * d);
            }
        }
        out
    }

    /// `m ∘ (f ⊗ g)`.
    pub fn contract(
        &self,
        mut f: impl FnMut(&Monomial) -> AlgebraElement,
        mut g: impl FnMut(&Monomial) -> AlgebraElement,
    ) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for ((l, r), c) in &self.terms {
            out.add_scaled(&(&f(l) * &g(r)), c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(i: u32, u: &str) -> AlgebraElement {
        AlgebraElement::generator(Color(i), &ColorWord::parse(u, 9).unwrap()).unwrap()
    }

    #[test]
    fn delta_normalization() {
        assert_eq!(y(2, "2"), AlgebraElement::one());
        assert!(y(1, "2").is_zero());
        assert!(AlgebraElement::generator(Color(1), &ColorWord::empty()).is_err());
        assert!(Generator::new(Color(1), ColorWord::from_values([1])).is_err());
    }

    #[test]
    fn multiply_examples() {
        let p = &y(1, "12") * &y(2, "21");
        assert_eq!(p.num_terms(), 1);
        let (m, c) = p.terms().next().unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.factors()[1].upper(), Color(2));
        assert_eq!(*c, BigInt::one());
        let a = &y(1, "123") + &y(2, "11");
        assert_eq!(&AlgebraElement::one() * &a, a);
        assert_eq!(&a * &AlgebraElement::one(), a);
        assert!((&(&y(1, "11") - &y(1, "11")) * &a).is_zero());
    }

    #[test]
    fn counit_examples() {
        assert_eq!(AlgebraElement::one().counit(), BigInt::one());
        assert!(y(1, "12").counit().is_zero());
        let e = &AlgebraElement::one().scale(&BigInt::from(3)) + &(&y(1, "12") * &y(2, "21")).scale(&BigInt::from(5));
        assert_eq!(e.counit(), BigInt::from(3));
    }

    #[test]
    fn monomial_order_is_graded() {
        let a = Monomial::from(Generator::new(Color(2), ColorWord::from_values([1, 1])).unwrap());
        let b = Monomial::from(Generator::new(Color(1), ColorWord::from_values([1, 1, 1])).unwrap());
        let ab = a.concat(&a);
        assert!(Monomial::unit() < a);
        assert!(a < b);
        assert!(b < ab);
    }

    #[test]
    fn tensor_flip_involution() {
        let mut t = TensorElement::zero();
        let a = Monomial::from(Generator::new(Color(1), ColorWord::from_values([1, 2])).unwrap());
        t.add_term(a.clone(), Monomial::unit(), BigInt::from(2));
        t.add_term(Monomial::unit(), a.clone(), BigInt::from(-1));
        assert_eq!(t.flip().flip(), t);
        assert_eq!(t.flip().coefficient(&Monomial::unit(), &a), BigInt::from(2));
        t.add_term(a.clone(), Monomial::unit(), BigInt::from(-2));
        assert_eq!(t.num_terms(), 1);
    }
}
