//! Text terms `c` / `c[T1,...,Tk]` and JSON for trees.

use std::str::FromStr;

use super::PlanarTree;
use crate::error::{Error, Result};
use crate::words::Color;

impl PlanarTree {
    pub fn to_term(&self) -> String {
        let mut s = String::new();
        write_term(self, &mut s);
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("trees always serialize")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let t: PlanarTree = serde_json::from_value(value.clone())?;
        check_unary(&t)?;
        Ok(t)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let t: PlanarTree = serde_json::from_str(s)?;
        check_unary(&t)?;
        Ok(t)
    }
}

fn check_unary(t: &PlanarTree) -> Result<()> {
    if let [only] = t.children() {
        if only.color() != t.color() {
            return Err(Error::UnaryColor { parent: t.color().0, child: only.color().0 });
        }
    }
    if t.color().0 == 0 {
        return Err(Error::Parse("colors start at 1".into()));
    }
    t.children().iter().try_for_each(check_unary)
}

fn write_term(t: &PlanarTree, s: &mut String) {
    s.push_str(&t.color().to_string());
    if !t.is_leaf() {
        s.push('[');
        for (k, c) in t.children().iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            write_term(c, s);
        }
        s.push(']');
    }
}

impl FromStr for PlanarTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_node(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in tree term {s:?}")));
        }
        Ok(t)
    }
}

fn parse_node(chars: &[char], pos: &mut usize) -> Result<PlanarTree> {
    let start = *pos;
    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if start == *pos {
        return Err(Error::Parse(format!("expected a color at offset {start}")));
    }
    let digits: String = chars[start..*pos].iter().collect();
    let color: Color = digits.parse()?;
    if *pos < chars.len() && chars[*pos] == '[' {
        *pos += 1;
        let mut children = Vec::new();
        loop {
            children.push(parse_node(chars, pos)?);
            match chars.get(*pos) {
                Some(',') => *pos += 1,
                Some(']') => {
                    *pos += 1;
                    break;
                }
                _ => return Err(Error::Parse(format!("expected ',' or ']' at offset {}", *pos))),
            }
        }
        PlanarTree::node(color, children)
    } else {
        Ok(PlanarTree::leaf(color))
    }
}
