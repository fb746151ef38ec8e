use super::{DepthFirst, PlanarForest, PlanarTree, VertexFilter, VertexPath};
use crate::error::{Error, Result};

/// Grafts `f` onto the leaves of `g`: the leaves of `g` are identified with
/// the roots of `f`, so `g` sits above `f`.
pub fn right_join(f: &PlanarForest, g: &PlanarForest) -> Result<PlanarForest> {
    let roots = f.root_word();
    let leaves = g.leaf_word();
    if roots != leaves {
        return Err(Error::Incompatible(format!("roots {roots} vs leaves {leaves}")));
    }
    let mut supply = f.0.iter();
    let trees = g.0.iter().map(|t| graft(t, &mut supply)).collect();
    Ok(PlanarForest(trees))
}

fn graft<'a>(t: &PlanarTree, supply: &mut impl Iterator<Item = &'a PlanarTree>) -> PlanarTree {
    if t.is_leaf() {
        supply.next().expect("leaf count checked").clone()
    } else {
        PlanarTree::from_parts(t.color(), t.children().iter().map(|c| graft(c, supply)).collect())
    }
}

impl PlanarTree {
    /// One-layer forests `L_1, ..., L_r`, bottom layer first, with
    /// `T = L_1 ▷ L_2 ▷ ... ▷ L_r`.
    pub fn layers(&self) -> Result<Vec<PlanarForest>> {
        if !self.is_layered() {
            return Err(Error::NotLayered);
        }
        let levels = self.levels();
        let mut out = Vec::new();
        for lvl in levels[..levels.len() - 1].iter().rev() {
            let trees = lvl
                .iter()
                .map(|p| {
                    let v = self.vertex(p).unwrap();
                    PlanarTree::from_parts(
                        v.color(),
                        v.children().iter().map(|c| PlanarTree::leaf(c.color())).collect(),
                    )
                })
                .collect();
            out.push(PlanarForest(trees));
        }
        Ok(out)
    }
}

/// Contracts every edge below a unary vertex.
pub fn contract_singular(t: &PlanarTree) -> PlanarTree {
    if t.is_unary() {
        contract_singular(&t.children()[0])
    } else {
        PlanarTree::from_parts(t.color(), t.children().iter().map(contract_singular).collect())
    }
}

/// Non-degenerate vertices at which an order contraction is allowed, in
/// `≪` order.
pub fn order_contractible_vertices(t: &PlanarTree) -> Result<Vec<VertexPath>> {
    require_leaf_aligned(t)?;
    let levels = t.levels();
    let mut out = Vec::new();
    for x in t.breadth_first_nondegenerate_unchecked() {
        if is_contractible_at(t, &levels, &x) {
            out.push(x);
        }
    }
    Ok(out)
}

fn require_leaf_aligned(t: &PlanarTree) -> Result<()> {
    if t.is_layered() {
        Ok(())
    } else {
        Err(Error::NotLayered)
    }
}

fn is_contractible_at(t: &PlanarTree, levels: &[Vec<VertexPath>], x: &VertexPath) -> bool {
    let Some(parent) = x.parent() else { return false };
    if !t.vertex(&parent).unwrap().is_unary() {
        return false;
    }
    let k = x.depth();
    let nondeg = |p: &VertexPath| t.vertex(p).unwrap().is_nondegenerate();
    let row = &levels[k];
    let at = row.iter().position(|p| p == x).unwrap();
    if row[at + 1..].iter().any(nondeg) {
        return false;
    }
    let up = &levels[k - 1];
    let at = up.iter().position(|p| *p == parent).unwrap();
    !up[..at].iter().any(nondeg)
}

/// The order contraction `κ_x`.
pub fn order_contract(t: &PlanarTree, x: &VertexPath) -> Result<PlanarTree> {
    require_leaf_aligned(t)?;
    t.vertex_or_err(x)?;
    let levels = t.levels();
    if !t.vertex(x).unwrap().is_nondegenerate() || !is_contractible_at(t, &levels, x) {
        return Err(Error::NotContractible(x.to_string()));
    }
    let parent = x.parent().unwrap();
    let moved = t.replace_at(&parent.0, &mut |p| {
        let xv = &p.children()[0];
        PlanarTree::from_parts(xv.color(), xv.children().iter().cloned().map(PlanarTree::unary).collect())
    });
    let k = x.depth();
    let row_has_nondeg = moved.levels()[k].iter().any(|p| moved.vertex(p).unwrap().is_nondegenerate());
    Ok(if row_has_nondeg { moved } else { splice_level(&moved, k) })
}

/// Removes level `k`, which must consist of unary vertices.
fn splice_level(t: &PlanarTree, k: usize) -> PlanarTree {
    if k == 1 {
        PlanarTree::from_parts(t.color(), t.children().iter().map(|c| c.children()[0].clone()).collect())
    } else {
        PlanarTree::from_parts(t.color(), t.children().iter().map(|c| splice_level(c, k - 1)).collect())
    }
}

/// The vertex moved by the canonical expansion, or `None` for simple trees.
pub fn canonical_expansion_vertex(t: &PlanarTree) -> Result<Option<VertexPath>> {
    t.require_layered()?;
    let levels = t.levels();
    for row in levels.iter().rev() {
        let nd: Vec<&VertexPath> = row.iter().filter(|p| t.vertex(p).unwrap().is_nondegenerate()).collect();
        if nd.len() > 1 {
            return Ok(Some(nd[0].clone()));
        }
    }
    Ok(None)
}

/// The canonical expansion `Φ`.
pub fn canonical_expansion(t: &PlanarTree) -> Result<PlanarTree> {
    let Some(xr) = canonical_expansion_vertex(t)? else {
        return Ok(t.clone());
    };
    Ok(expand_level(t, xr.depth(), &xr.0))
}

fn expand_level(t: &PlanarTree, k: usize, xr: &[usize]) -> PlanarTree {
    if k == 0 {
        if xr.is_empty() {
            PlanarTree::unary(t.clone())
        } else {
            PlanarTree::from_parts(t.color(), t.children().iter().cloned().map(PlanarTree::unary).collect())
        }
    } else {
        let children = t
            .children()
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let sub = if xr.first() == Some(&j) { &xr[1..] } else { &[usize::MAX][..] };
                expand_level(c, k - 1, sub)
            })
            .collect();
        PlanarTree::from_parts(t.color(), children)
    }
}

/// Iterates `Φ` until the tree is simple.
pub fn simple_expansion(t: &PlanarTree) -> Result<PlanarTree> {
    let mut cur = t.clone();
    while let Some(xr) = canonical_expansion_vertex(&cur)? {
        cur = expand_level(&cur, xr.depth(), &xr.0);
    }
    Ok(cur)
}

/// Maximal runs `x_a ↗ x_{a+1} ↗ ...` of the `≪`-ordered non-degenerate
/// vertices, where each step goes from a vertex to one of its ancestors.
/// The last element of each run is its right end.
pub fn irreducible_strings(t: &PlanarTree) -> Result<Vec<Vec<VertexPath>>> {
    let xs = t.breadth_first_nondegenerate()?;
    let mut out: Vec<Vec<VertexPath>> = Vec::new();
    for x in xs {
        match out.last_mut() {
            Some(run) if run.last().unwrap().is_descendant_of(&x) => run.push(x),
            _ => out.push(vec![x]),
        }
    }
    Ok(out)
}

/// `Ψ`: the order-reduced simple tree whose singular contraction is `t`.
pub fn expand_to_ost(t: &PlanarTree) -> Result<PlanarTree> {
    if !t.is_reduced() {
        return Err(Error::NotReduced);
    }
    let order = t.depth_first_order(DepthFirst::RightUp, VertexFilter::NonLeaf);
    let n = order.len();
    let rank: std::collections::HashMap<VertexPath, usize> =
        order.into_iter().enumerate().map(|(i, p)| (p, i + 1)).collect();
    let level_of = |p: &VertexPath, v: &PlanarTree| if v.is_leaf() { n } else { n - rank[p] };
    fn build(
        t: &PlanarTree,
        path: &VertexPath,
        level: usize,
        level_of: &dyn Fn(&VertexPath, &PlanarTree) -> usize,
    ) -> PlanarTree {
        let children = t
            .children()
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let cp = path.child(k);
                let target = level_of(&cp, c);
                let mut sub = build(c, &cp, target, level_of);
                for _ in level + 1..target {
                    sub = PlanarTree::unary(sub);
                }
                sub
            })
            .collect();
        PlanarTree::from_parts(t.color(), children)
    }
    Ok(build(t, &VertexPath::root(), 0, &level_of))
}

/// All trees whose iterated canonical expansion is the simple tree `e`,
/// one per subset of the contractible right ends of `e`.
pub fn tree_class_of(e: &PlanarTree) -> Result<Vec<PlanarTree>> {
    if !e.is_simple()? {
        return Err(Error::NotSimple);
    }
    let xs = e.breadth_first_nondegenerate_unchecked();
    let contractible = order_contractible_vertices(e)?;
    let ends: Vec<usize> = irreducible_strings(e)?
        .iter()
        .map(|run| run.last().unwrap())
        .filter(|x| contractible.contains(x))
        .map(|x| xs.iter().position(|y| y == x).unwrap())
        .collect();
    let mut out = Vec::with_capacity(1 << ends.len());
    for mask in 0u64..(1u64 << ends.len()) {
        let mut cur = e.clone();
        for (bit, &idx) in ends.iter().enumerate().rev() {
            if mask >> bit & 1 == 1 {
                let x = cur.breadth_first_nondegenerate_unchecked()[idx].clone();
                cur = order_contract(&cur, &x)?;
            }
        }
        out.push(cur);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PlanarTree {
        s.parse().unwrap()
    }

    #[test]
    fn layers_reassemble() {
        let tree = t("1[1[1[1,2]],2[1[1],1[1]],2[2[2]]]");
        let ls = tree.layers().unwrap();
        assert_eq!(ls.len(), 3);
        let mut acc = ls[0].clone();
        for l in &ls[1..] {
            acc = right_join(&acc, l).unwrap();
        }
        assert_eq!(acc, PlanarForest(vec![tree]));
        let _ = t("1[1[1,2],2[2[1,1]],1[2,2]]").layers().unwrap_err();
    }

    #[test]
    fn right_join_two_layers_over_111() {
        let bottom = PlanarForest(vec![t("1[1,1]"), t("1[1]")]);
        let top = PlanarForest(vec![t("1[1,1]")]);
        let joined = right_join(&bottom, &top).unwrap();
        assert_eq!(joined.0, vec![t("1[1[1,1],1[1]]")]);
        assert!(joined.0[0].is_layered_proper());
        let bad = PlanarForest(vec![t("2[1,1]")]);
        assert!(matches!(right_join(&bad, &top), Err(Error::Incompatible(_))));
    }

    #[test]
    fn join_with_bare_vertices() {
        let f = PlanarForest(vec![t("1[1,2]"), t("2")]);
        let bare = PlanarForest(vec![t("1"), t("2")]);
        assert_eq!(right_join(&f, &bare).unwrap(), f);
    }

    #[test]
    fn contract_singular_examples() {
        assert_eq!(contract_singular(&t("1[1[1[1,2,3]]]")), t("1[1,2,3]"));
        let r = t("1[1[1,2],3]");
        assert_eq!(contract_singular(&r), r);
        let c = contract_singular(&t("1[1[1[1,1]],1[1[1],1[1]]]"));
        assert!(c.is_reduced());
        assert_eq!(contract_singular(&c), c);
    }

    #[test]
    fn contraction_figure() {
        // x1 and x2 share the middle level, each below a unary vertex
        let first = t("1[1[1[1,2]],3[3[3,4]]]");
        assert!(first.is_layered() && !first.is_layered_proper());
        let c = order_contractible_vertices(&first).unwrap();
        assert_eq!(c, vec![VertexPath(vec![1, 0])]);
        let contracted = order_contract(&first, &VertexPath(vec![1, 0])).unwrap();
        assert_eq!(contracted, t("1[1[1[1,2]],3[3[3],4[4]]]"));
        let labels = |tr: &PlanarTree| {
            tr.breadth_first_nondegenerate_unchecked().iter().map(|p| tr.label(p).unwrap()).collect::<Vec<_>>()
        };
        assert_eq!(labels(&first), labels(&contracted));
        assert!(matches!(order_contract(&first, &VertexPath(vec![0, 0])), Err(Error::NotContractible(_))));
    }

    #[test]
    fn contraction_deletes_unary_row() {
        let e = t("1[1[1[1,2]],1[3[3],4[4]]]");
        assert!(e.is_simple().unwrap());
        assert_eq!(e.height(), 3);
        let c = order_contract(&e, &VertexPath(vec![0, 0])).unwrap();
        assert_eq!(c, t("1[1[1,2],1[3,4]]"));
        assert_eq!(c.height(), 2);
    }

    #[test]
    fn phi_then_kappa_recovers() {
        let tree = t("1[1[1,1],1[1,1]]");
        let xr = canonical_expansion_vertex(&tree).unwrap().unwrap();
        assert_eq!(xr, VertexPath(vec![0]));
        let phi = canonical_expansion(&tree).unwrap();
        assert_eq!(phi, t("1[1[1[1,1]],1[1[1],1[1]]]"));
        assert!(phi.is_simple().unwrap());
        assert!(order_contractible_vertices(&phi).unwrap().contains(&VertexPath(vec![0, 0])));
        assert_eq!(order_contract(&phi, &VertexPath(vec![0, 0])).unwrap(), tree);
        let simple = t("1[1,2,3]");
        assert_eq!(canonical_expansion(&simple).unwrap(), simple);
    }

    #[test]
    fn strings_and_right_ends() {
        let corolla = t("1[1,2]");
        assert_eq!(irreducible_strings(&corolla).unwrap(), vec![vec![VertexPath::root()]]);
        let nested = t("1[1[1[1,1],1[1]],1[1[1]]]");
        let runs = irreducible_strings(&nested).unwrap();
        assert_eq!(runs.len(), 1);
        // the ≪-first vertex is not below its successor
        let split = t("1[1[1[1,1]],1[1[1],1[1]]]");
        let runs = irreducible_strings(&split).unwrap();
        assert_eq!(runs.len(), 2);
        assert_eq!(runs[1], vec![VertexPath(vec![1]), VertexPath::root()]);
    }

    #[test]
    fn psi_examples() {
        let corolla = t("1[1,2,3]");
        assert_eq!(expand_to_ost(&corolla).unwrap(), corolla);
        let tree = t("1[1[1,1],1[1,1]]");
        let e = expand_to_ost(&tree).unwrap();
        assert_eq!(e, t("1[1[1[1],1[1]],1[1[1,1]]]"));
        assert!(e.is_order_reduced_simple().unwrap());
        assert_eq!(contract_singular(&e), tree);
        assert!(matches!(expand_to_ost(&t("1[1[1,1]]")), Err(Error::NotReduced)));
    }

    #[test]
    fn class_of_order_reduced_is_singleton() {
        let e = t("1[1[1[1],1[1]],1[1[1,1]]]");
        assert_eq!(tree_class_of(&e).unwrap(), vec![e.clone()]);
        let e = t("1[1[1[1,1]],1[1[1],1[1]]]");
        let class = tree_class_of(&e).unwrap();
        assert_eq!(class.len(), 2);
        assert!(class.contains(&t("1[1[1,1],1[1,1]]")));
        assert!(matches!(tree_class_of(&t("1[1[1,1],1[1,1]]")), Err(Error::NotSimple)));
    }
}
