use std::str::FromStr;

use super::{expand_to_ost, PlanarTree};
use crate::error::{Error, Result};
use crate::words::{compositions, for_each_coloring, Color, ColorWord};

/// Tree classes with root color `i` and leaf word `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TreeClass {
    /// `LT`: layered proper trees.
    Layered,
    /// `RT`: trees without unary vertices.
    Reduced,
    /// `ST`: simple layered trees.
    Simple,
    /// `OST`: order-reduced simple trees.
    Ost,
}

impl FromStr for TreeClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "layered" | "lt" => Ok(TreeClass::Layered),
            "reduced" | "rt" => Ok(TreeClass::Reduced),
            "simple" | "st" => Ok(TreeClass::Simple),
            "ost" => Ok(TreeClass::Ost),
            _ => Err(Error::Parse(format!("unknown tree class {s:?}"))),
        }
    }
}

/// Every tree of the class with root color `i` and leaf word `u`, sorted in
/// the canonical tree order.
pub fn enumerate_trees(u: &ColorWord, i: Color, class: TreeClass, n: u32) -> Result<Vec<PlanarTree>> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    u.check(n)?;
    i.check(n)?;
    let mut out = match class {
        TreeClass::Layered => layered(u, i, n, false),
        TreeClass::Simple => layered(u, i, n, true),
        TreeClass::Reduced => reduced(u, i, n),
        TreeClass::Ost => reduced(u, i, n).iter().map(expand_to_ost).collect::<Result<Vec<_>>>()?,
    };
    out.sort();
    Ok(out)
}

/// Layered trees built bottom-up, one layer per step of a chain of colored
/// interval partitions.
fn layered(u: &ColorWord, i: Color, n: u32, simple: bool) -> Vec<PlanarTree> {
    let forest: Vec<PlanarTree> = u.letters().iter().map(|&c| PlanarTree::leaf(c)).collect();
    let mut out = Vec::new();
    grow(forest, i, n, simple, &mut out);
    out
}

fn grow(forest: Vec<PlanarTree>, i: Color, n: u32, simple: bool, out: &mut Vec<PlanarTree>) {
    if forest.len() == 1 {
        if forest[0].color() == i {
            out.push(forest.into_iter().next().unwrap());
        }
        return;
    }
    let p = forest.len();
    for q in 1..p {
        for sizes in compositions(p, q) {
            let wide = sizes.iter().filter(|&&s| s > 1).count();
            if simple && wide != 1 {
                continue;
            }
            let mut starts = Vec::with_capacity(q);
            let mut acc = 0;
            for &s in &sizes {
                starts.push(acc);
                acc += s;
            }
            let forced: Vec<Option<Color>> =
                sizes.iter().zip(&starts).map(|(&s, &a)| (s == 1).then(|| forest[a].color())).collect();
            for_each_coloring(n, &forced, |colors| {
                let next = sizes
                    .iter()
                    .zip(&starts)
                    .zip(colors)
                    .map(|((&s, &a), &c)| PlanarTree::from_parts(c, forest[a..a + s].to_vec()))
                    .collect();
                grow(next, i, n, simple, out);
            });
        }
    }
}

/// Reduced trees via the assembly `c_x(T_1, ..., T_k)` with `k ≥ 2`.
fn reduced(u: &ColorWord, i: Color, n: u32) -> Vec<PlanarTree> {
    let p = u.len();
    if p == 1 {
        return if u.letters()[0] == i { vec![PlanarTree::leaf(i)] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for k in 2..=p {
        for sizes in compositions(p, k) {
            let mut options: Vec<Vec<PlanarTree>> = Vec::with_capacity(k);
            let mut start = 0;
            for &s in &sizes {
                let part = u.slice(start, start + s);
                start += s;
                if s == 1 {
                    options.push(vec![PlanarTree::leaf(part.letters()[0])]);
                } else {
                    let mut subs = Vec::new();
                    for c in 1..=n {
                        subs.extend(reduced(&part, Color(c), n));
                    }
                    options.push(subs);
                }
            }
            cartesian(&options, &mut Vec::new(), &mut |children| {
                out.push(PlanarTree::from_parts(i, children.to_vec()));
            });
        }
    }
    out
}

fn cartesian(options: &[Vec<PlanarTree>], acc: &mut Vec<PlanarTree>, f: &mut dyn FnMut(&[PlanarTree])) {
    match options.split_first() {
        None => f(acc),
        Some((first, rest)) => {
            for t in first {
                acc.push(t.clone());
                cartesian(rest, acc, f);
                acc.pop();
            }
        }
    }
}
