//! Colored words and colored interval partitions.
//!
//! A [`ColorWord`] doubles as a colored ordered set: position `k` carries the
//! color of the `k`-th point. Interval partitions of such a set are stored as
//! block-size compositions together with one color per block, which is a
//! lossless encoding because blocks are always consecutive.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A color in `1..=N`. The bound `N` is carried by the calling context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Color(pub u32);

impl Color {
    pub fn new(value: u32, n: u32) -> Result<Self> {
        let c = Color(value);
        c.check(n)?;
        Ok(c)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn check(self, n: u32) -> Result<()> {
        if n == 0 {
            return Err(Error::NoColors);
        }
        if self.0 == 0 || self.0 > n {
            return Err(Error::ColorOutOfRange { color: self.0, n });
        }
        Ok(())
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: u32 = s.trim().parse().map_err(|_| Error::Parse(format!("bad color literal {s:?}")))?;
        if v == 0 {
            return Err(Error::Parse("colors start at 1".into()));
        }
        Ok(Color(v))
    }
}

/// A finite word over the colors. The empty word is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorWord(Vec<Color>);

impl ColorWord {
    pub fn new(letters: Vec<Color>) -> Self {
        ColorWord(letters)
    }

    pub fn empty() -> Self {
        ColorWord(Vec::new())
    }

    pub fn from_values<I: IntoIterator<Item = u32>>(values: I) -> Self {
        ColorWord(values.into_iter().map(Color).collect())
    }

    pub fn singleton(c: Color) -> Self {
        ColorWord(vec![c])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Color] {
        &self.0
    }

    pub fn get(&self, k: usize) -> Option<Color> {
        self.0.get(k).copied()
    }

    pub fn push(&mut self, c: Color) {
        self.0.push(c);
    }

    pub fn concat(&self, other: &ColorWord) -> ColorWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ColorWord(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> ColorWord {
        ColorWord(self.0[start..end].to_vec())
    }

    /// The reflection `u(p)…u(1)`.
    pub fn reflect(&self) -> ColorWord {
        ColorWord(self.0.iter().rev().copied().collect())
    }

    /// Every letter lies in `1..=n`.
    pub fn check(&self, n: u32) -> Result<()> {
        if n == 0 {
            return Err(Error::NoColors);
        }
        self.0.iter().try_for_each(|c| c.check(n))
    }

    /// Parses a word literal: digits when `n <= 9`, otherwise a comma list.
    /// A literal containing a comma is always read as a comma list.
    pub fn parse(s: &str, n: u32) -> Result<ColorWord> {
        let s = s.trim();
        let word = if s.contains(',') || n > 9 {
            if s.is_empty() {
                ColorWord::empty()
            } else {
                ColorWord(s.split(',').map(Color::from_str).collect::<Result<_>>()?)
            }
        } else {
            ColorWord(
                s.chars()
                    .map(|ch| match ch.to_digit(10) {
                        Some(d) if d > 0 => Ok(Color(d)),
                        _ => Err(Error::Parse(format!("bad letter {ch:?} in word {s:?}"))),
                    })
                    .collect::<Result<_>>()?,
            )
        };
        word.check(n)?;
        Ok(word)
    }

    /// Renders the word in the literal syntax matching [`ColorWord::parse`].
    pub fn to_literal(&self, n: u32) -> String {
        if n > 9 || self.0.iter().any(|c| c.0 > 9) {
            self.0.iter().map(|c| c.0.to_string()).collect::<Vec<_>>().join(",")
        } else {
            self.0.iter().map(|c| c.0.to_string()).collect()
        }
    }
}

impl fmt::Display for ColorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal(9))
    }
}

impl FromIterator<Color> for ColorWord {
    fn from_iter<T: IntoIterator<Item = Color>>(iter: T) -> Self {
        ColorWord(iter.into_iter().collect())
    }
}

/// Reflection of a word.
pub fn reflect_word(u: &ColorWord) -> ColorWord {
    u.reflect()
}

/// The grading `|u| - 1` of the generator indexed by `u`.
pub fn grading(u: &ColorWord) -> Result<usize> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(u.len() - 1)
}

/// A colored interval partition of a colored word.
///
/// Produced unchecked by [`enumerate_interval_partitions`] when pruning is
/// off; [`ColoredIntervalPartition::new`] enforces the singleton color rule.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredIntervalPartition {
    block_sizes: Vec<usize>,
    block_colors: ColorWord,
    base_word: ColorWord,
}

impl ColoredIntervalPartition {
    pub fn new(block_sizes: Vec<usize>, block_colors: ColorWord, base_word: ColorWord) -> Result<Self> {
        let p = Self::raw(block_sizes, block_colors, base_word)?;
        if !p.is_proper() {
            return Err(Error::InvalidPartition("a singleton block must carry the color of its element".into()));
        }
        Ok(p)
    }

    /// Checks only the shape, not the singleton color rule.
    pub fn raw(block_sizes: Vec<usize>, block_colors: ColorWord, base_word: ColorWord) -> Result<Self> {
        if block_sizes.contains(&0) {
            return Err(Error::InvalidPartition("empty block".into()));
        }
        if block_sizes.iter().sum::<usize>() != base_word.len() {
            return Err(Error::InvalidPartition(format!(
                "block sizes {block_sizes:?} do not cover a word of length {}",
                base_word.len()
            )));
        }
        if block_colors.len() != block_sizes.len() {
            return Err(Error::InvalidPartition("one color per block is required".into()));
        }
        Ok(ColoredIntervalPartition { block_sizes, block_colors, base_word })
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn block_colors(&self) -> &ColorWord {
        &self.block_colors
    }

    pub fn base_word(&self) -> &ColorWord {
        &self.base_word
    }

    pub fn num_blocks(&self) -> usize {
        self.block_sizes.len()
    }

    /// Singleton blocks carry the color of their unique element.
    pub fn is_proper(&self) -> bool {
        let mut start = 0;
        for (k, &size) in self.block_sizes.iter().enumerate() {
            if size == 1 && self.block_colors.0[k] != self.base_word.0[start] {
                return false;
            }
            start += size;
        }
        true
    }

    /// Block boundaries as half-open ranges into the base word.
    pub fn ranges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.block_sizes.len());
        let mut start = 0;
        for &s in &self.block_sizes {
            out.push((start, start + s));
            start += s;
        }
        out
    }

    /// The subword covered by block `k` (zero-based).
    pub fn restrict(&self, k: usize) -> Result<ColorWord> {
        let ranges = self.ranges();
        let &(a, b) = ranges.get(k).ok_or(Error::IndexOutOfRange { index: k, len: ranges.len() })?;
        Ok(self.base_word.slice(a, b))
    }

    /// Renders e.g. `(31)2(233)1(2)2(1223)3`.
    pub fn to_literal(&self, n: u32) -> String {
        let mut s = String::new();
        for (k, (a, b)) in self.ranges().into_iter().enumerate() {
            s.push('(');
            s.push_str(&self.base_word.slice(a, b).to_literal(n));
            s.push(')');
            s.push_str(&self.block_colors.0[k].to_string());
        }
        s
    }

    /// Parses the literal produced by [`ColoredIntervalPartition::to_literal`].
    pub fn parse(s: &str, n: u32) -> Result<Self> {
        let s = s.trim();
        let mut sizes = Vec::new();
        let mut colors = Vec::new();
        let mut base = ColorWord::empty();
        let mut rest = s;
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in partition literal {s:?}")))?;
            let close = inner.find(')').ok_or_else(|| Error::Parse(format!("unclosed block in {s:?}")))?;
            let block = ColorWord::parse(&inner[..close], n)?;
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            let after = &inner[close + 1..];
            let end = after.find('(').unwrap_or(after.len());
            let color: Color = after[..end].parse()?;
            color.check(n)?;
            sizes.push(block.len());
            colors.push(color);
            base = base.concat(&block);
            rest = &after[end..];
        }
        ColoredIntervalPartition::new(sizes, ColorWord(colors), base)
    }
}

/// Restriction of `u` to block `k` (zero-based) of `partition`.
pub fn restrict(u: &ColorWord, partition: &ColoredIntervalPartition, k: usize) -> Result<ColorWord> {
    if partition.base_word() != u {
        return Err(Error::InvalidPartition("partition is over a different word".into()));
    }
    partition.restrict(k)
}

/// All compositions of `p` into `q` positive parts, in lexicographic order.
pub fn compositions(p: usize, q: usize) -> Vec<Vec<usize>> {
    fn go(p: usize, q: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if q == 0 {
            if p == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if p < q {
            return;
        }
        for first in 1..=p - (q - 1) {
            prefix.push(first);
            go(p - first, q - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if q == 0 {
        if p == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(p, q, &mut Vec::with_capacity(q), &mut out);
    out
}

/// Calls `f` with every color word of length `q` over `1..=n`, where
/// position `k` is pinned to `forced[k]` when that is `Some`.
/// Words are visited in lexicographic order.
pub(crate) fn for_each_coloring(n: u32, forced: &[Option<Color>], mut f: impl FnMut(&[Color])) {
    let q = forced.len();
    let mut cur: Vec<Color> = forced.iter().map(|c| c.unwrap_or(Color(1))).collect();
    loop {
        f(&cur);
        // odometer increment from the right, skipping pinned positions
        let mut k = q;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if forced[k].is_some() {
                continue;
            }
            if cur[k].0 < n {
                cur[k].0 += 1;
                break;
            }
            cur[k] = Color(1);
        }
    }
}

/// All ways of cutting `u` into `q` consecutive nonempty blocks, crossed with
/// all block colorings over `1..=n`.
///
/// With `prune_delta`, singleton blocks only take the color of their letter;
/// the other choices correspond to factors that vanish in the algebra.
pub fn enumerate_interval_partitions(
    u: &ColorWord,
    q: usize,
    n: u32,
    prune_delta: bool,
) -> Result<Vec<ColoredIntervalPartition>> {
    if n == 0 {
        return Err(Error::NoColors);
    }
    if q == 0 || q > u.len() {
        return Err(Error::BlockCount { q, len: u.len() });
    }
    let mut out = Vec::new();
    for sizes in compositions(u.len(), q) {
        let mut forced = vec![None; q];
        if prune_delta {
            let mut start = 0;
            for (k, &s) in sizes.iter().enumerate() {
                if s == 1 {
                    forced[k] = Some(u.0[start]);
                }
                start += s;
            }
        }
        for_each_coloring(n, &forced, |colors| {
            out.push(ColoredIntervalPartition {
                block_sizes: sizes.clone(),
                block_colors: ColorWord(colors.to_vec()),
                base_word: u.clone(),
            });
        });
    }
    Ok(out)
}
