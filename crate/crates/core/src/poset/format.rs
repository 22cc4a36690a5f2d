//! Text formats.
//!
//! Posets: a `p=<n>` header followed by one cover `a<b` per line. Blank
//! lines and `#` comments are ignored.
//!
//! Shapes: a single line `shape:3,3,2` or `shifted:4,3,1`.

use super::{Poset, Shape};
use crate::error::{Error, Result};

/// A parsed poset description: either explicit covers or a shape.
#[derive(Clone, Debug, PartialEq)]
pub enum PosetSource {
    Covers(Poset),
    Shape(Shape),
}

impl PosetSource {
    pub fn poset(&self) -> Poset {
        match self {
            PosetSource::Covers(p) => p.clone(),
            PosetSource::Shape(s) => s.poset(),
        }
    }

    pub fn shape(&self) -> Option<&Shape> {
        match self {
            PosetSource::Shape(s) => Some(s),
            PosetSource::Covers(_) => None,
        }
    }
}

fn strip(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn parse_shape(line: usize, body: &str, shifted: bool) -> Result<Shape> {
    let rows = body
        .split(',')
        .map(|r| {
            r.trim().parse::<usize>().map_err(|e| Error::Parse {
                line,
                message: format!("bad row length {r:?}: {e}"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Shape::new(rows, shifted)
}

/// Parses the `p=<n>` / `a<b` format.
pub fn parse_poset(text: &str) -> Result<Poset> {
    match parse_poset_or_shape(text)? {
        PosetSource::Covers(p) => Ok(p),
        PosetSource::Shape(s) => Ok(s.poset()),
    }
}

/// Parses either format, keeping the shape when one was given.
pub fn parse_poset_or_shape(text: &str) -> Result<PosetSource> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip(l)))
        .filter(|(_, l)| !l.is_empty());
    let (first_no, first) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "empty poset description".into(),
    })?;
    if let Some(body) = first.strip_prefix("shape:") {
        return parse_shape(first_no, body, false).map(PosetSource::Shape);
    }
    if let Some(body) = first.strip_prefix("shifted:") {
        return parse_shape(first_no, body, true).map(PosetSource::Shape);
    }
    let size = first
        .strip_prefix("p=")
        .and_then(|n| n.trim().parse::<usize>().ok())
        .ok_or_else(|| Error::Parse {
            line: first_no,
            message: format!("expected `p=<n>`, `shape:...` or `shifted:...`, got {first:?}"),
        })?;
    let mut pairs = Vec::new();
    for (no, line) in lines {
        let (a, b) = line.split_once('<').ok_or_else(|| Error::Parse {
            line: no,
            message: format!("expected `a<b`, got {line:?}"),
        })?;
        let parse = |s: &str| {
            s.trim().parse::<usize>().map_err(|e| Error::Parse {
                line: no,
                message: format!("bad element id {s:?}: {e}"),
            })
        };
        pairs.push((parse(a)?, parse(b)?));
    }
    Poset::from_covers(size, &pairs).map(PosetSource::Covers)
}

impl Poset {
    /// Serializes to the `p=<n>` / `a<b` format.
    pub fn to_text(&self) -> String {
        let mut out = format!("p={}\n", self.size());
        for &(a, b) in self.covers() {
            out.push_str(&format!("{a}<{b}\n"));
        }
        out
    }
}
