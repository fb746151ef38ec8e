//! Exhaustive invariant suites over all generators and trees up to a leaf
//! bound. Each suite returns a report listing every identity checked.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{lambda, omega, AlgebraElement, Antipode, Generator, HopfAlgebra, LambdaOrder, Pairing};
use crate::error::{Error, Result};
use crate::series::words_of_length;
use crate::trees::{
    contract_singular, enumerate_trees, expand_to_ost, tree_class_of, DepthFirst, PlanarTree, TreeClass, VertexFilter,
    VertexPath,
};
use crate::words::{Color, ColorWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    HopfAxioms,
    Cancellation,
    Bijection,
    Duality,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::HopfAxioms, Suite::Cancellation, Suite::Bijection, Suite::Duality];

    pub fn name(self) -> &'static str {
        match self {
            Suite::HopfAxioms => "hopf-axioms",
            Suite::Cancellation => "cancellation",
            Suite::Bijection => "bijection",
            Suite::Duality => "duality",
        }
    }

    pub fn run(self, n: u32, max_leaves: usize) -> Result<Report> {
        match self {
            Suite::HopfAxioms => hopf_axioms(n, max_leaves),
            Suite::Cancellation => cancellation(n, max_leaves),
            Suite::Bijection => bijection(n, max_leaves),
            Suite::Duality => duality(n, max_leaves),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// One identity, how many instances were checked, and the failing ones.
#[derive(Clone, Debug, Default)]
pub struct Check {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Check {
    fn new(name: &str) -> Self {
        Check { name: name.to_string(), ..Check::default() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: Suite,
    pub n: u32,
    pub max_leaves: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite.name(),
            "n": self.n,
            "max_leaves": self.max_leaves,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "checked": c.checked,
                "failures": c.failures,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (n = {}, max leaves = {})", self.suite.name(), self.n, self.max_leaves)?;
        for c in &self.checks {
            let status = if c.passed() { "ok" } else { "FAILED" };
            writeln!(f, "  {status:<6} {} [{} checked, {} failed]", c.name, c.checked, c.failures.len())?;
            for bad in c.failures.iter().take(5) {
                writeln!(f, "         {bad}")?;
            }
        }
        write!(f, "{}", if self.passed() { "pass" } else { "fail" })
    }
}

fn generators(n: u32, max_leaves: usize) -> Vec<Generator> {
    let mut out = Vec::new();
    for len in 2..=max_leaves {
        for u in words_of_length(n, len) {
            for i in 1..=n {
                out.push(Generator::new(Color(i), u.clone()).expect("length at least two"));
            }
        }
    }
    out
}

fn roots_and_words(n: u32, min: usize, max_leaves: usize) -> Vec<(ColorWord, Color)> {
    let mut out = Vec::new();
    for len in min..=max_leaves {
        for u in words_of_length(n, len) {
            for i in 1..=n {
                out.push((u.clone(), Color(i)));
            }
        }
    }
    out
}

fn el(g: &Generator) -> AlgebraElement {
    AlgebraElement::from(g.clone())
}

pub fn hopf_axioms(n: u32, max_leaves: usize) -> Result<Report> {
    let h = HopfAlgebra::new(n)?;
    let mut axiom_h = Check::new("m(S_H ⊗ I)Δ = m(I ⊗ S_H)Δ = ηε");
    let mut axiom_l = Check::new("m(S_L ⊗ I)Δᵒᵖ = m(I ⊗ S_L)Δᵒᵖ = ηε");
    let mut coassoc = Check::new("(Δ ⊗ I)Δ = (I ⊗ Δ)Δ");
    let mut counit = Check::new("(ε ⊗ I)Δ = (I ⊗ ε)Δ = I");
    let mut inverse = Check::new("S_H ∘ S_L = S_L ∘ S_H = I");
    let mut anti = Check::new("S_H(ab) = S_H(b) S_H(a)");
    let gens = generators(n, max_leaves);
    for g in &gens {
        let x = el(g);
        axiom_h.record(h.verify_antipode_axiom(g, Antipode::Recursive, Pairing::Delta)?, || g.to_string());
        axiom_l.record(h.verify_antipode_axiom(g, Antipode::InverseRecursive, Pairing::DeltaOp)?, || g.to_string());
        let (l, r) = h.iterated_coproducts(&x)?;
        coassoc.record(l == r, || g.to_string());
        let d = h.coproduct(&x)?;
        let mut left = AlgebraElement::zero();
        let mut right = AlgebraElement::zero();
        for (a, b, c) in d.terms() {
            if a.is_unit() {
                left = &left + &AlgebraElement::from(b.clone()).scale(c);
            }
            if b.is_unit() {
                right = &right + &AlgebraElement::from(a.clone()).scale(c);
            }
        }
        counit.record(left == x && right == x, || g.to_string());
        let sl = h.antipode_inverse_recursive(g)?;
        let sh = h.antipode_recursive(g)?;
        let ok = h.antipode(Antipode::Recursive, &sl)? == x && h.antipode(Antipode::InverseRecursive, &sh)? == x;
        inverse.record(ok, || g.to_string());
    }
    // products checked against the geometric formula, which does not
    // assume anti-multiplicativity
    let small: Vec<&Generator> = gens.iter().filter(|g| g.grade() <= 2).collect();
    for a in &small {
        for b in &small {
            if a.grade() + b.grade() > max_leaves.saturating_sub(1).max(2) {
                continue;
            }
            let ab = h.multiply(&el(a), &el(b));
            let lhs = h.antipode(Antipode::Geometric, &ab)?;
            let rhs = h.multiply(&h.antipode_recursive(b)?, &h.antipode_recursive(a)?);
            anti.record(lhs == rhs, || format!("{a} · {b}"));
        }
    }
    let mut checks = vec![axiom_h, axiom_l, coassoc, counit, inverse, anti];
    if n >= 2 && max_leaves >= 3 {
        let mut witness = Check::new("S_H² ≠ I for some generator");
        let found = gens.iter().find(|g| h.antipode_squared(g).map(|s| s != el(g)).unwrap_or(false));
        witness.record(found.is_some(), || "no generator moved by S_H²".into());
        if let Some(g) = found {
            witness.name = format!("S_H² ≠ I, witness {g}");
        }
        checks.push(witness);
    }
    Ok(Report { suite: Suite::HopfAxioms, n, max_leaves, checks })
}

pub fn cancellation(n: u32, max_leaves: usize) -> Result<Report> {
    let h = HopfAlgebra::new(n)?;
    let mut sums = Check::new("Σ_{T ∈ 𝐓_E} (-1)^ℓ(T) = 0 for simple non-order-reduced E");
    let mut singletons = Check::new("𝐓_E = {E} for order-reduced simple E");
    let mut labels = Check::new("Ω constant on 𝐓_E");
    let mut partition = Check::new("the 𝐓_E partition LT");
    let mut agree = Check::new("antipode_breadth = antipode_ost");
    for (u, i) in roots_and_words(n, 2, max_leaves) {
        let mut covered: Vec<PlanarTree> = Vec::new();
        for e in enumerate_trees(&u, i, TreeClass::Simple, n)? {
            let class = tree_class_of(&e)?;
            let omega_e = omega(&e)?;
            let mut same = true;
            for t in &class {
                same &= omega(t)? == omega_e;
            }
            labels.record(same, || e.to_term());
            if e.is_order_reduced_simple()? {
                singletons.record(class == [e.clone()], || e.to_term());
            } else {
                let total: i64 = class.iter().map(|t| if t.height() % 2 == 0 { 1 } else { -1 }).sum();
                sums.record(total == 0, || format!("{} sums to {total}", e.to_term()));
            }
            covered.extend(class);
        }
        covered.sort();
        let lt = enumerate_trees(&u, i, TreeClass::Layered, n)?;
        partition.record(covered == lt, || format!("u = {u}, i = {i}"));
        let g = Generator::new(i, u.clone())?;
        agree.record(h.antipode_breadth(&g)? == h.antipode_ost(&g)?, || g.to_string());
    }
    let checks = vec![sums, singletons, labels, partition, agree];
    Ok(Report { suite: Suite::Cancellation, n, max_leaves, checks })
}

fn path_labels(t: &PlanarTree, paths: &[VertexPath]) -> Vec<(Color, ColorWord)> {
    paths.iter().filter_map(|p| t.label(p)).collect()
}

pub fn bijection(n: u32, max_leaves: usize) -> Result<Report> {
    let mut rho_psi = Check::new("ρ ∘ Ψ = id on RT");
    let mut psi_rho = Check::new("Ψ ∘ ρ = id on OST");
    let mut omega_lambda = Check::new("Ω(Ψ(T)) = Λ_↗(T)");
    let mut height = Check::new("ℓ(Ψ(T)) = v(T)");
    let mut orders = Check::new("OST ⇔ ≪ = ↗_R on non-degenerate vertices");
    for (u, i) in roots_and_words(n, 1, max_leaves) {
        for t in enumerate_trees(&u, i, TreeClass::Reduced, n)? {
            let e = expand_to_ost(&t)?;
            rho_psi.record(contract_singular(&e) == t, || t.to_term());
            height.record(e.height() == t.num_internal(), || t.to_term());
            let ok = if t.is_leaf() {
                true
            } else {
                omega(&e)? == lambda(&t, LambdaOrder::RightUp)?
                    && path_labels(&e, &e.breadth_first_nondegenerate()?)
                        == path_labels(&t, &t.depth_first_order(DepthFirst::RightUp, VertexFilter::NonLeaf))
            };
            omega_lambda.record(ok, || t.to_term());
        }
        for s in enumerate_trees(&u, i, TreeClass::Ost, n)? {
            psi_rho.record(expand_to_ost(&contract_singular(&s))? == s, || s.to_term());
        }
        for t in enumerate_trees(&u, i, TreeClass::Layered, n)? {
            let bf = t.breadth_first_nondegenerate()?;
            let df = t.depth_first_order(DepthFirst::RightUp, VertexFilter::NonDegenerate);
            orders.record(t.is_order_reduced_simple()? == (bf == df), || t.to_term());
        }
    }
    let checks = vec![rho_psi, psi_rho, omega_lambda, height, orders];
    Ok(Report { suite: Suite::Bijection, n, max_leaves, checks })
}

pub fn duality(n: u32, max_leaves: usize) -> Result<Report> {
    let h = HopfAlgebra::new(n)?;
    let mut reflection = Check::new("reflect maps ↗_L onto ↗_R");
    let mut reflected_class = Check::new("reflect preserves LT, RT and OST membership");
    let mut s_conj = Check::new("s S_H s = S_L");
    let mut t_conj = Check::new("t S_H t = S_R (reduced, ↘_R)");
    let mut alpha = Check::new("t = α s = s α");
    for (u, i) in roots_and_words(n, 2, max_leaves) {
        for t in enumerate_trees(&u, i, TreeClass::Layered, n)? {
            let r = t.reflect();
            let mapped: Vec<VertexPath> = t
                .depth_first_order(DepthFirst::LeftUp, VertexFilter::All)
                .iter()
                .filter_map(|p| t.reflect_path(p))
                .collect();
            reflection.record(r.depth_first_order(DepthFirst::RightUp, VertexFilter::All) == mapped, || t.to_term());
            reflected_class.record(r.is_layered() && r.leaf_word() == u.reflect(), || t.to_term());
        }
        for t in enumerate_trees(&u, i, TreeClass::Reduced, n)? {
            reflected_class.record(t.reflect().is_reduced(), || t.to_term());
        }
        let g = Generator::new(i, u.clone())?;
        let x = el(&g);
        let sh = |a: &AlgebraElement| h.antipode(Antipode::Recursive, a);
        s_conj.record(sh(&x.map_s())?.map_s() == h.antipode_inverse_recursive(&g)?, || g.to_string());
        t_conj.record(sh(&x.map_t())?.map_t() == h.antipode_generator(Antipode::ReducedR, &g)?, || g.to_string());
        let y = sh(&x)?;
        alpha.record(y.map_t() == y.map_s().map_alpha() && y.map_t() == y.map_alpha().map_s(), || g.to_string());
    }
    let checks = vec![reflection, reflected_class, s_conj, t_conj, alpha];
    Ok(Report { suite: Suite::Duality, n, max_leaves, checks })
}
