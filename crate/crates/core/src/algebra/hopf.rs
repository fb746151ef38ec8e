use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{AlgebraElement, Generator, Monomial, TensorElement};
use crate::error::{Error, Result};
use crate::trees::{enumerate_trees, DepthFirst, PlanarTree, TreeClass, VertexFilter};
use crate::words::{enumerate_interval_partitions, Color, ColorWord};

/// The available antipode computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Antipode {
    /// `S_H` as the geometric series `Σ (ηε - I)^{*k}`.
    Geometric,
    /// `S_H` from the recursion over the coproduct.
    Recursive,
    /// `S_H` summed over layered trees.
    Breadth,
    /// `S_H` summed over order-reduced simple trees.
    Ost,
    /// `S_H` summed over reduced trees, read in `↗_R` order.
    ReducedH,
    /// `S_L = S_H^{-1}` from the inverse recursion.
    InverseRecursive,
    /// `S_L` summed over reduced trees, read in `↘_L` order.
    ReducedL,
    /// `S_R = t S_H t` summed over reduced trees, read in `↘_R` order.
    ReducedR,
}

impl Antipode {
    /// The five computations of `S_H`.
    pub const FIVE: [Antipode; 5] =
        [Antipode::Geometric, Antipode::Recursive, Antipode::Breadth, Antipode::Ost, Antipode::ReducedH];

    pub fn name(self) -> &'static str {
        match self {
            Antipode::Geometric => "geometric",
            Antipode::Recursive => "recursive",
            Antipode::Breadth => "breadth",
            Antipode::Ost => "ost",
            Antipode::ReducedH => "reduced-h",
            Antipode::InverseRecursive => "inverse",
            Antipode::ReducedL => "reduced-l",
            Antipode::ReducedR => "reduced-r",
        }
    }
}

impl FromStr for Antipode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "geometric" => Antipode::Geometric,
            "recursive" => Antipode::Recursive,
            "breadth" => Antipode::Breadth,
            "ost" => Antipode::Ost,
            "reduced-h" | "reduced" => Antipode::ReducedH,
            "inverse" | "inverse-recursive" => Antipode::InverseRecursive,
            "reduced-l" => Antipode::ReducedL,
            "reduced-r" => Antipode::ReducedR,
            _ => return Err(Error::Parse(format!("unknown antipode {s:?}"))),
        })
    }
}

/// Depth-first readings used by `Λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LambdaOrder {
    LeftDown,
    RightUp,
    RightDown,
}

impl LambdaOrder {
    fn depth_first(self) -> DepthFirst {
        match self {
            LambdaOrder::LeftDown => DepthFirst::LeftDown,
            LambdaOrder::RightUp => DepthFirst::RightUp,
            LambdaOrder::RightDown => DepthFirst::RightDown,
        }
    }
}

/// Which coproduct an antipode axiom is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pairing {
    Delta,
    DeltaOp,
}

/// Coefficients of a three-fold tensor, keyed by its factors.
pub type TripleTensor = BTreeMap<[Monomial; 3], BigInt>;

/// The Hopf algebra `H^N`: a color count plus caches.
#[derive(Debug)]
pub struct HopfAlgebra {
    n: u32,
    delta_memo: RwLock<HashMap<Generator, TensorElement>>,
    s_memo: RwLock<HashMap<Generator, AlgebraElement>>,
    s_inv_memo: RwLock<HashMap<Generator, AlgebraElement>>,
}

fn cached(
    memo: &RwLock<HashMap<Generator, AlgebraElement>>,
    g: &Generator,
    compute: impl FnOnce() -> AlgebraElement,
) -> AlgebraElement {
    if let Some(v) = memo.read().expect("memo lock").get(g) {
        return v.clone();
    }
    let v = compute();
    memo.write().expect("memo lock").entry(g.clone()).or_insert_with(|| v.clone());
    v
}

impl HopfAlgebra {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoColors);
        }
        Ok(HopfAlgebra { n, delta_memo: RwLock::default(), s_memo: RwLock::default(), s_inv_memo: RwLock::default() })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `Y^i_u` with colors checked against `N`.
    pub fn generator(&self, upper: Color, lower: &ColorWord) -> Result<AlgebraElement> {
        upper.check(self.n)?;
        lower.check(self.n)?;
        AlgebraElement::generator(upper, lower)
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        a * b
    }

    pub fn counit(&self, a: &AlgebraElement) -> BigInt {
        a.counit()
    }

    /// `Δ(Y^i_u) = Σ_π Σ_v Y^{v(1)}_{u_1} ⋯ Y^{v(q)}_{u_q} ⊗ Y^i_v`.
    pub fn coproduct_generator(&self, g: &Generator) -> Result<TensorElement> {
        g.check(self.n)?;
        if let Some(t) = self.delta_memo.read().expect("memo lock").get(g) {
            return Ok(t.clone());
        }
        let u = g.lower();
        let mut out = TensorElement::zero();
        for q in 1..=u.len() {
            for part in enumerate_interval_partitions(u, q, self.n, true)? {
                let right = AlgebraElement::generator(g.upper(), part.block_colors())?;
                let Some((rm, _)) = right.terms().next() else { continue };
                let rm = rm.clone();
                let mut left = Vec::new();
                for (k, &(a, b)) in part.ranges().iter().enumerate() {
                    if b - a > 1 {
                        left.push(Generator::new(part.block_colors().letters()[k], u.slice(a, b))?);
                    }
                }
                out.add_term(Monomial(left), rm, BigInt::one());
            }
        }
        self.delta_memo.write().expect("memo lock").entry(g.clone()).or_insert_with(|| out.clone());
        Ok(out)
    }

    pub fn coproduct_monomial(&self, m: &Monomial) -> Result<TensorElement> {
        m.factors().iter().try_fold(TensorElement::one(), |acc, g| Ok(acc.mul(&self.coproduct_generator(g)?)))
    }

    pub fn coproduct(&self, a: &AlgebraElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (m, c) in a.terms() {
            out.add_scaled(&self.coproduct_monomial(m)?, c);
        }
        Ok(out)
    }

    pub fn coproduct_op(&self, a: &AlgebraElement) -> Result<TensorElement> {
        Ok(self.coproduct(a)?.flip())
    }

    /// `(Δ ⊗ I)Δ(a)` and `(I ⊗ Δ)Δ(a)` as lists of triples.
    pub fn iterated_coproducts(&self, a: &AlgebraElement) -> Result<(TripleTensor, TripleTensor)> {
        let d = self.coproduct(a)?;
        let mut left = TripleTensor::new();
        let mut right = TripleTensor::new();
        for (l, r, c) in d.terms() {
            for (x, y, e) in self.coproduct_monomial(l)?.terms() {
                *left.entry([x.clone(), y.clone(), r.clone()]).or_default() += c * e;
            }
            for (x, y, e) in self.coproduct_monomial(r)?.terms() {
                *right.entry([l.clone(), x.clone(), y.clone()]).or_default() += c * e;
            }
        }
        left.retain(|_, v| !v.is_zero());
        right.retain(|_, v| !v.is_zero());
        Ok((left, right))
    }

    /// `m ∘ (f ⊗ g) ∘ Δ`.
    pub fn convolution(
        &self,
        f: &dyn Fn(&AlgebraElement) -> Result<AlgebraElement>,
        g: &dyn Fn(&AlgebraElement) -> Result<AlgebraElement>,
        a: &AlgebraElement,
    ) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero();
        for (l, r, c) in self.coproduct(a)?.terms() {
            let fl = f(&AlgebraElement::from(l.clone()))?;
            let gr = g(&AlgebraElement::from(r.clone()))?;
            out.add_scaled(&(&fl * &gr), c);
        }
        Ok(out)
    }

    /// Applies an antipode to an arbitrary element.
    pub fn antipode(&self, kind: Antipode, a: &AlgebraElement) -> Result<AlgebraElement> {
        a.check(self.n)?;
        if kind == Antipode::Geometric {
            return self.antipode_geometric_element(a);
        }
        let mut out = AlgebraElement::zero();
        for (m, c) in a.terms() {
            out.add_scaled(&self.antipode_monomial(kind, m)?, c);
        }
        Ok(out)
    }

    /// Extends a generator antipode anti-multiplicatively.
    pub fn antipode_monomial(&self, kind: Antipode, m: &Monomial) -> Result<AlgebraElement> {
        m.factors().iter().rev().try_fold(AlgebraElement::one(), |acc, g| Ok(&acc * &self.antipode_generator(kind, g)?))
    }

    pub fn antipode_generator(&self, kind: Antipode, g: &Generator) -> Result<AlgebraElement> {
        g.check(self.n)?;
        match kind {
            Antipode::Geometric => self.antipode_geometric(g),
            Antipode::Recursive => self.antipode_recursive(g),
            Antipode::Breadth => self.antipode_breadth(g),
            Antipode::Ost => self.antipode_ost(g),
            Antipode::ReducedH => self.antipode_reduced(g, LambdaOrder::RightUp),
            Antipode::InverseRecursive => self.antipode_inverse_recursive(g),
            Antipode::ReducedL => self.antipode_reduced(g, LambdaOrder::LeftDown),
            Antipode::ReducedR => self.antipode_reduced(g, LambdaOrder::RightDown),
        }
    }

    pub fn antipode_geometric(&self, g: &Generator) -> Result<AlgebraElement> {
        self.antipode_geometric_element(&AlgebraElement::from(g.clone()))
    }

    /// `Σ_k (-1)^k m^{(k)} (π ⊗ ⋯ ⊗ π) Δ^{(k)}`, with `π` killing the unit.
    fn antipode_geometric_element(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero();
        out.add_term(Monomial::unit(), a.counit());
        let mut states: BTreeMap<(Monomial, Monomial), BigInt> =
            a.terms().filter(|(m, _)| !m.is_unit()).map(|(m, c)| ((Monomial::unit(), m.clone()), c.clone())).collect();
        let mut sign = -BigInt::one();
        while !states.is_empty() {
            let mut next: BTreeMap<(Monomial, Monomial), BigInt> = BTreeMap::new();
            for ((prefix, last), c) in &states {
                out.add_term(prefix.concat(last), &sign * c);
                for (l, r, d) in self.coproduct_monomial(last)?.terms() {
                    if !l.is_unit() && !r.is_unit() {
                        *next.entry((prefix.concat(l), r.clone())).or_default() += c * d;
                    }
                }
            }
            next.retain(|_, v| !v.is_zero());
            states = next;
            sign = -sign;
        }
        Ok(out)
    }

    /// `S(Y) = -Y - Σ S(a) b` over the middle terms `a ⊗ b` of `Δ(Y)`.
    pub fn antipode_recursive(&self, g: &Generator) -> Result<AlgebraElement> {
        g.check(self.n)?;
        let delta = self.coproduct_generator(g)?;
        let mut err = None;
        let v = cached(&self.s_memo, g, || {
            let mut out = -AlgebraElement::from(g.clone());
            for (a, b, c) in delta.terms() {
                if a.is_unit() || b.is_unit() {
                    continue;
                }
                match self.antipode_monomial(Antipode::Recursive, a) {
                    Ok(sa) => out.add_scaled(&(&sa * &AlgebraElement::from(b.clone())), &-c),
                    Err(e) => err = Some(e),
                }
            }
            out
        });
        match err {
            Some(e) => Err(e),
            None => Ok(v),
        }
    }

    /// `S^{-1}(Y) = -Y - Σ b S^{-1}(a)` over the middle terms `a ⊗ b` of `Δ(Y)`.
    pub fn antipode_inverse_recursive(&self, g: &Generator) -> Result<AlgebraElement> {
        g.check(self.n)?;
        let delta = self.coproduct_generator(g)?;
        let mut err = None;
        let v = cached(&self.s_inv_memo, g, || {
            let mut out = -AlgebraElement::from(g.clone());
            for (a, b, c) in delta.terms() {
                if a.is_unit() || b.is_unit() {
                    continue;
                }
                match self.antipode_monomial(Antipode::InverseRecursive, a) {
                    Ok(sa) => out.add_scaled(&(&AlgebraElement::from(b.clone()) * &sa), &-c),
                    Err(e) => err = Some(e),
                }
            }
            out
        });
        match err {
            Some(e) => Err(e),
            None => Ok(v),
        }
    }

    /// `Σ_{T ∈ LT} (-1)^{ℓ(T)} Ω(T)`.
    pub fn antipode_breadth(&self, g: &Generator) -> Result<AlgebraElement> {
        let trees = enumerate_trees(g.lower(), g.upper(), TreeClass::Layered, self.n)?;
        signed_sum(trees.iter().map(|t| Ok((t.height(), omega(t)?))))
    }

    /// `Σ_{E ∈ OST} (-1)^{ℓ(E)} Ω(E)`, with `OST` cut out of the layered
    /// trees by its defining predicate.
    pub fn antipode_ost(&self, g: &Generator) -> Result<AlgebraElement> {
        let trees = enumerate_trees(g.lower(), g.upper(), TreeClass::Layered, self.n)?;
        let mut terms = Vec::new();
        for t in &trees {
            if t.is_order_reduced_simple()? {
                terms.push(Ok((t.height(), omega(t)?)));
            }
        }
        signed_sum(terms)
    }

    /// `Σ_{T ∈ RT} (-1)^{v(T)} Λ(T)` for the chosen reading order.
    pub fn antipode_reduced(&self, g: &Generator, order: LambdaOrder) -> Result<AlgebraElement> {
        let trees = enumerate_trees(g.lower(), g.upper(), TreeClass::Reduced, self.n)?;
        signed_sum(trees.iter().map(|t| Ok((t.num_internal(), lambda(t, order)?))))
    }

    /// Checks `Σ S(a₁)a₂ = Σ a₁S(a₂) = ε(g)·1` for the chosen coproduct.
    pub fn verify_antipode_axiom(&self, g: &Generator, kind: Antipode, pairing: Pairing) -> Result<bool> {
        let (left, right) = self.antipode_axiom_sides(&AlgebraElement::from(g.clone()), kind, pairing)?;
        Ok(left.is_zero() && right.is_zero())
    }

    /// Both sides of the antipode axiom on `a`, minus `ε(a)·1`.
    pub fn antipode_axiom_sides(
        &self,
        a: &AlgebraElement,
        kind: Antipode,
        pairing: Pairing,
    ) -> Result<(AlgebraElement, AlgebraElement)> {
        let d = match pairing {
            Pairing::Delta => self.coproduct(a)?,
            Pairing::DeltaOp => self.coproduct_op(a)?,
        };
        let mut left = AlgebraElement::zero();
        let mut right = AlgebraElement::zero();
        for (l, r, c) in d.terms() {
            let lm = AlgebraElement::from(l.clone());
            let rm = AlgebraElement::from(r.clone());
            left.add_scaled(&(&self.antipode_monomial(kind, l)? * &rm), c);
            right.add_scaled(&(&lm * &self.antipode_monomial(kind, r)?), c);
        }
        let unit = AlgebraElement::one().scale(&a.counit());
        Ok((&left - &unit, &right - &unit))
    }

    /// `S_H(S_H(g))`, used to exhibit non-involutivity.
    pub fn antipode_squared(&self, g: &Generator) -> Result<AlgebraElement> {
        let s = self.antipode_recursive(g)?;
        self.antipode(Antipode::Recursive, &s)
    }
}

fn signed_sum(terms: impl IntoIterator<Item = Result<(usize, Monomial)>>) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero();
    for t in terms {
        let (k, m) = t?;
        let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out.add_term(m, sign);
    }
    Ok(out)
}

fn vertex_generator(t: &PlanarTree, path: &crate::trees::VertexPath) -> Result<Generator> {
    let (c, w) = t.label(path).expect("path from traversal");
    Generator::new(c, w)
}

/// `Ω(T)`: the product of `Y(x)` over non-degenerate vertices in `≪` order.
pub fn omega(t: &PlanarTree) -> Result<Monomial> {
    let paths = t.breadth_first_nondegenerate()?;
    Ok(Monomial(paths.iter().map(|p| vertex_generator(t, p)).collect::<Result<_>>()?))
}

/// `Λ(T)`: the product of `Y(x)` over the vertices of a reduced tree in a
/// depth-first order.
pub fn lambda(t: &PlanarTree, order: LambdaOrder) -> Result<Monomial> {
    if !t.is_reduced() {
        return Err(Error::NotReduced);
    }
    let paths = t.depth_first_order(order.depth_first(), VertexFilter::NonLeaf);
    Ok(Monomial(paths.iter().map(|p| vertex_generator(t, p)).collect::<Result<_>>()?))
}

impl AlgebraElement {
    /// `s`: reverses the factors and reflects every lower word.
    pub fn map_s(&self) -> AlgebraElement {
        self.map_linear(|m| {
            AlgebraElement::from(Monomial(
                m.factors().iter().rev().map(|g| g.with_lower(g.lower().reflect())).collect(),
            ))
        })
    }

    /// `t`: reverses the factors.
    pub fn map_t(&self) -> AlgebraElement {
        self.map_linear(|m| AlgebraElement::from(m.reversed()))
    }

    /// `α`: reflects every lower word.
    pub fn map_alpha(&self) -> AlgebraElement {
        self.map_linear(|m| {
            AlgebraElement::from(Monomial(m.factors().iter().map(|g| g.with_lower(g.lower().reflect())).collect()))
        })
    }
}
