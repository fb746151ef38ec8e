//! Colored planar trees and forests.
//!
//! Trees are immutable values; every operator returns a fresh tree. Vertices
//! are addressed by [`VertexPath`]s of child indices from the root.

mod enumerate;
mod ops;
mod order;
mod syntax;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{Color, ColorWord};

pub use enumerate::{enumerate_trees, TreeClass};
pub use ops::{
    canonical_expansion, canonical_expansion_vertex, contract_singular, expand_to_ost, irreducible_strings,
    order_contract, order_contractible_vertices, right_join, simple_expansion, tree_class_of,
};
pub use order::{DepthFirst, VertexFilter};

/// Child-index path from the root; the empty path is the root.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPath(pub Vec<usize>);

impl VertexPath {
    pub fn root() -> Self {
        VertexPath(Vec::new())
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn parent(&self) -> Option<VertexPath> {
        if self.0.is_empty() {
            None
        } else {
            Some(VertexPath(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    pub fn child(&self, k: usize) -> VertexPath {
        let mut v = self.0.clone();
        v.push(k);
        VertexPath(v)
    }

    /// True when `self` lies strictly below `other`.
    pub fn is_descendant_of(&self, other: &VertexPath) -> bool {
        self.0.len() > other.0.len() && self.0.starts_with(&other.0)
    }
}

impl fmt::Display for VertexPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        f.write_str(&parts.join("."))
    }
}

/// A rooted plane tree with colored vertices.
///
/// The derived ordering is the recursive lexicographic order on
/// `(color, children)`, used as the canonical enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PlanarTree {
    color: Color,
    children: Vec<PlanarTree>,
}

/// An ordered sequence of trees.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PlanarForest(pub Vec<PlanarTree>);

impl PlanarForest {
    pub fn trees(&self) -> &[PlanarTree] {
        &self.0
    }

    pub fn root_word(&self) -> ColorWord {
        self.0.iter().map(|t| t.color).collect()
    }

    pub fn leaf_word(&self) -> ColorWord {
        self.0.iter().fold(ColorWord::empty(), |acc, t| acc.concat(&t.leaf_word()))
    }
}

/// Class membership flags of a tree.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TreeClassTag {
    pub layered: bool,
    pub proper: bool,
    pub simple: bool,
    pub reduced: bool,
    pub order_reduced: bool,
}

impl PlanarTree {
    pub fn leaf(color: Color) -> Self {
        PlanarTree { color, children: Vec::new() }
    }

    /// A vertex with the given children. A unary vertex must share its
    /// child's color.
    pub fn node(color: Color, children: Vec<PlanarTree>) -> Result<Self> {
        if let [only] = children.as_slice() {
            if only.color != color {
                return Err(Error::UnaryColor { parent: color.0, child: only.color.0 });
            }
        }
        Ok(PlanarTree { color, children })
    }

    /// A unary vertex over `child`, colored like the child.
    pub fn unary(child: PlanarTree) -> Self {
        PlanarTree { color: child.color, children: vec![child] }
    }

    /// A root of color `root` over leaves colored by `leaves`.
    pub fn corolla(root: Color, leaves: &ColorWord) -> Result<Self> {
        PlanarTree::node(root, leaves.letters().iter().map(|&c| PlanarTree::leaf(c)).collect())
    }

    pub(crate) fn from_parts(color: Color, children: Vec<PlanarTree>) -> Self {
        PlanarTree { color, children }
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn children(&self) -> &[PlanarTree] {
        &self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn is_unary(&self) -> bool {
        self.children.len() == 1
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.children.len() > 1
    }

    /// Recursively checks the unary color rule and the color range.
    pub fn validate(&self, n: u32) -> Result<()> {
        self.color.check(n)?;
        if let [only] = self.children.as_slice() {
            if only.color != self.color {
                return Err(Error::UnaryColor { parent: self.color.0, child: only.color.0 });
            }
        }
        self.children.iter().try_for_each(|c| c.validate(n))
    }

    pub fn vertex(&self, path: &VertexPath) -> Option<&PlanarTree> {
        path.0.iter().try_fold(self, |t, &k| t.children.get(k))
    }

    pub(crate) fn vertex_or_err(&self, path: &VertexPath) -> Result<&PlanarTree> {
        self.vertex(path).ok_or_else(|| Error::NoSuchVertex(path.to_string()))
    }

    pub fn num_vertices(&self) -> usize {
        1 + self.children.iter().map(|c| c.num_vertices()).sum::<usize>()
    }

    /// Number of non-leaf vertices.
    pub fn num_internal(&self) -> usize {
        if self.is_leaf() {
            0
        } else {
            1 + self.children.iter().map(|c| c.num_internal()).sum::<usize>()
        }
    }

    pub fn num_nondegenerate(&self) -> usize {
        usize::from(self.is_nondegenerate()) + self.children.iter().map(|c| c.num_nondegenerate()).sum::<usize>()
    }

    /// Colors of the leaves, left to right.
    pub fn leaf_word(&self) -> ColorWord {
        let mut out = ColorWord::empty();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut ColorWord) {
        if self.is_leaf() {
            out.push(self.color);
        }
        for c in &self.children {
            c.collect_leaves(out);
        }
    }

    /// The colors of the children, i.e. the lower word of `Y(x)`.
    pub fn child_word(&self) -> ColorWord {
        self.children.iter().map(|c| c.color).collect()
    }

    /// Maximum depth of a vertex; the number of layers of a layered tree.
    pub fn height(&self) -> usize {
        self.children.iter().map(|c| c.height() + 1).max().unwrap_or(0)
    }

    /// Vertices grouped by depth, each level left to right.
    pub fn levels(&self) -> Vec<Vec<VertexPath>> {
        let mut levels = vec![vec![VertexPath::root()]];
        loop {
            let last = levels.last().unwrap();
            let mut next = Vec::new();
            for p in last {
                let v = self.vertex(p).unwrap();
                for k in 0..v.children.len() {
                    next.push(p.child(k));
                }
            }
            if next.is_empty() {
                break;
            }
            levels.push(next);
        }
        levels
    }

    /// All leaves sit on the lowest level.
    pub fn is_layered(&self) -> bool {
        let h = self.height();
        self.leaf_depths_all(0, h)
    }

    fn leaf_depths_all(&self, depth: usize, h: usize) -> bool {
        if self.is_leaf() {
            depth == h
        } else {
            self.children.iter().all(|c| c.leaf_depths_all(depth + 1, h))
        }
    }

    /// Layered, and every non-leaf level has a non-degenerate vertex.
    pub fn is_layered_proper(&self) -> bool {
        if !self.is_layered() {
            return false;
        }
        let levels = self.levels();
        levels[..levels.len() - 1].iter().all(|lvl| lvl.iter().any(|p| self.vertex(p).unwrap().is_nondegenerate()))
    }

    pub(crate) fn require_layered(&self) -> Result<()> {
        if self.is_layered_proper() {
            Ok(())
        } else {
            Err(Error::NotLayered)
        }
    }

    /// Every level has exactly one non-degenerate vertex, except the leaf level.
    pub fn is_simple(&self) -> Result<bool> {
        self.require_layered()?;
        Ok(self.is_simple_unchecked())
    }

    pub(crate) fn is_simple_unchecked(&self) -> bool {
        let levels = self.levels();
        levels[..levels.len() - 1]
            .iter()
            .all(|lvl| lvl.iter().filter(|p| self.vertex(p).unwrap().is_nondegenerate()).count() == 1)
    }

    /// No unary vertices.
    pub fn is_reduced(&self) -> bool {
        !self.is_unary() && self.children.iter().all(|c| c.is_reduced())
    }

    /// Simple and without order-preserving contractions.
    pub fn is_order_reduced_simple(&self) -> Result<bool> {
        if !self.is_simple()? {
            return Ok(false);
        }
        Ok(order_contractible_vertices(self)?.is_empty())
    }

    pub fn class_tag(&self) -> TreeClassTag {
        let layered = self.is_layered();
        let proper = self.is_layered_proper();
        let simple = proper && self.is_simple_unchecked();
        let order_reduced = simple && self.is_order_reduced_simple().unwrap_or(false);
        TreeClassTag { layered, proper, simple, reduced: self.is_reduced(), order_reduced }
    }

    /// The label `(color, children colors)` of the vertex at `path`.
    pub fn label(&self, path: &VertexPath) -> Option<(Color, ColorWord)> {
        self.vertex(path).map(|v| (v.color, v.child_word()))
    }

    /// Reverses child order at every vertex.
    pub fn reflect(&self) -> PlanarTree {
        PlanarTree { color: self.color, children: self.children.iter().rev().map(|c| c.reflect()).collect() }
    }

    /// The image of `path` under reflection.
    pub fn reflect_path(&self, path: &VertexPath) -> Option<VertexPath> {
        let mut t = self;
        let mut out = Vec::with_capacity(path.0.len());
        for &k in &path.0 {
            let len = t.children.len();
            if k >= len {
                return None;
            }
            out.push(len - 1 - k);
            t = &t.children[k];
        }
        Some(VertexPath(out))
    }

    /// Non-degenerate vertices in ascending breadth-first order: deeper
    /// levels first, left to right within a level.
    pub fn breadth_first_nondegenerate(&self) -> Result<Vec<VertexPath>> {
        self.require_layered()?;
        Ok(self.breadth_first_nondegenerate_unchecked())
    }

    pub(crate) fn breadth_first_nondegenerate_unchecked(&self) -> Vec<VertexPath> {
        self.levels().into_iter().rev().flatten().filter(|p| self.vertex(p).unwrap().is_nondegenerate()).collect()
    }

    /// Replaces the subtree at `path`.
    pub(crate) fn replace_at(&self, path: &[usize], f: &mut dyn FnMut(&PlanarTree) -> PlanarTree) -> PlanarTree {
        match path.split_first() {
            None => f(self),
            Some((&k, rest)) => {
                let mut children = self.children.clone();
                children[k] = self.children[k].replace_at(rest, f);
                PlanarTree { color: self.color, children }
            }
        }
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_term())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PlanarTree {
        s.parse().unwrap()
    }

    #[test]
    fn leaf_word_examples() {
        assert_eq!(t("1[1,2,3,4]").leaf_word(), ColorWord::from_values([1, 2, 3, 4]));
        assert_eq!(t("2").leaf_word(), ColorWord::from_values([2]));
        assert_eq!(t("1[1[1,1],1]").leaf_word(), ColorWord::from_values([1, 1, 1]));
    }

    #[test]
    fn layered_proper_examples() {
        assert!(t("1[1,2]").is_layered_proper());
        assert!(t("1[1,1,1]").is_layered_proper());
        // unary chain of length 2 over one leaf
        assert!(!t("1[1[1]]").is_layered_proper());
        // leaf depths differ
        assert!(!t("1[1,1[1,1]]").is_layered_proper());
        assert!(t("1[1[1],1[1,1]]").is_layered_proper());
        assert!(t("3").is_layered_proper());
    }

    #[test]
    fn two_colored_figure_is_not_simple() {
        // three levels; the middle level holds two non-degenerate vertices
        let fig = t("1[2[1[1],2[1,2]],1[2[2],1[1]]]");
        assert!(fig.is_layered_proper());
        assert!(!fig.is_simple().unwrap());
        let fig2 = t("1[2[1[1],2[1,2]],2[2[2]]]");
        assert!(fig2.is_layered_proper());
        assert!(fig2.is_simple().unwrap());
        assert!(matches!(t("1[1,1[1,1]]").is_simple(), Err(Error::NotLayered)));
        assert!(t("1[1,2,3]").is_simple().unwrap());
    }

    #[test]
    fn reduced_examples() {
        assert!(t("1[1,2,3,4]").is_reduced());
        assert!(!t("1[1[1,2]]").is_reduced());
        assert!(t("1[1[1,1],1]").is_reduced());
    }

    #[test]
    fn unary_color_rule() {
        assert!(matches!(
            PlanarTree::node(Color(1), vec![PlanarTree::leaf(Color(2))]),
            Err(Error::UnaryColor { parent: 1, child: 2 })
        ));
        assert!("1[2]".parse::<PlanarTree>().is_err());
    }

    #[test]
    fn breadth_first_examples() {
        let tree = t("1[1[1[1,1],1[1]],1[1[1],1[1,1]]]");
        let order = tree.breadth_first_nondegenerate().unwrap();
        let got: Vec<String> = order.iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["0.0", "1.1", "0", "1", "root"]);
        assert_eq!(t("1[1,2]").breadth_first_nondegenerate().unwrap(), vec![VertexPath::root()]);
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(t("1[1,2,3,4]").reflect(), t("1[4,3,2,1]"));
        assert_eq!(t("2").reflect(), t("2"));
        assert_eq!(t("1[1[1,1],1]").reflect(), t("1[1,1[1,1]]"));
        let tree = t("1[1[1,2],3]");
        assert_eq!(tree.reflect().reflect(), tree);
    }

    #[test]
    fn class_tags() {
        let tag = t("1[1[1],1[1,1]]").class_tag();
        assert!(tag.layered && tag.proper && tag.simple && !tag.reduced);
        let tag = t("1[1,1[1,1]]").class_tag();
        assert!(!tag.layered && tag.reduced && !tag.simple);
    }
}
