use super::{PlanarTree, VertexPath};

/// The four depth-first orderings. The `Up` variants are postorders (the
/// root comes last); the `Down` variants are their reverses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DepthFirst {
    /// `↗_L`: children visited left to right, parents after descendants.
    LeftUp,
    /// `↗_R`: children visited right to left, parents after descendants.
    RightUp,
    /// `↘_L`, the reverse of `↗_L`.
    LeftDown,
    /// `↘_R`, the reverse of `↗_R`.
    RightDown,
}

/// Which vertices an ordering lists.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum VertexFilter {
    All,
    NonLeaf,
    #[default]
    NonDegenerate,
}

impl VertexFilter {
    fn keeps(self, v: &PlanarTree) -> bool {
        match self {
            VertexFilter::All => true,
            VertexFilter::NonLeaf => !v.is_leaf(),
            VertexFilter::NonDegenerate => v.is_nondegenerate(),
        }
    }
}

impl PlanarTree {
    pub fn depth_first_order(&self, variant: DepthFirst, filter: VertexFilter) -> Vec<VertexPath> {
        let mut out = Vec::new();
        let left_to_right = matches!(variant, DepthFirst::LeftUp | DepthFirst::LeftDown);
        postorder(self, &mut Vec::new(), left_to_right, filter, &mut out);
        if matches!(variant, DepthFirst::LeftDown | DepthFirst::RightDown) {
            out.reverse();
        }
        out
    }
}

fn postorder(t: &PlanarTree, path: &mut Vec<usize>, ltr: bool, filter: VertexFilter, out: &mut Vec<VertexPath>) {
    let n = t.children().len();
    for j in 0..n {
        let k = if ltr { j } else { n - 1 - j };
        path.push(k);
        postorder(&t.children()[k], path, ltr, filter, out);
        path.pop();
    }
    if filter.keeps(t) {
        out.push(VertexPath(path.clone()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(paths: &[VertexPath]) -> Vec<String> {
        paths.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn up_orders_end_at_root() {
        let t: PlanarTree = "1[1[1,1],1[1,1]]".parse().unwrap();
        let l = t.depth_first_order(DepthFirst::LeftUp, VertexFilter::NonDegenerate);
        let r = t.depth_first_order(DepthFirst::RightUp, VertexFilter::NonDegenerate);
        assert_eq!(names(&l), vec!["0", "1", "root"]);
        assert_eq!(names(&r), vec!["1", "0", "root"]);
        let ld = t.depth_first_order(DepthFirst::LeftDown, VertexFilter::NonDegenerate);
        assert_eq!(names(&ld), vec!["root", "1", "0"]);
    }

    #[test]
    fn full_vertex_variant() {
        let t: PlanarTree = "1[1,2[2,1]]".parse().unwrap();
        let all = t.depth_first_order(DepthFirst::LeftUp, VertexFilter::All);
        assert_eq!(names(&all), vec!["0", "1.0", "1.1", "1", "root"]);
        let single: PlanarTree = "3".parse().unwrap();
        assert_eq!(single.depth_first_order(DepthFirst::LeftUp, VertexFilter::All), vec![VertexPath::root()]);
    }

    #[test]
    fn ancestor_precedes_nothing_below_it() {
        let t: PlanarTree = "1[1[1[1,1],1],1[1,1[1,1]]]".parse().unwrap();
        for variant in [DepthFirst::LeftUp, DepthFirst::RightUp] {
            let seq = t.depth_first_order(variant, VertexFilter::All);
            for (a, pa) in seq.iter().enumerate() {
                for pb in &seq[a + 1..] {
                    assert!(!pb.is_descendant_of(pa));
                }
            }
        }
    }
}
