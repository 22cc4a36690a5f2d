//! The bundled test corpus of small posets.
//!
//! The same entries ship as `corpus/<name>.poset` at the repository root;
//! a test keeps the two in sync.

use std::path::Path;

use crate::error::{Error, Result};
use crate::hecke::Perm;
use crate::poset::{parse_poset_or_shape, PosetSource, Poset, Shape};

/// A named corpus poset.
#[derive(Clone, Debug, PartialEq)]
pub struct Entry {
    pub name: String,
    pub source: PosetSource,
}

impl Entry {
    pub fn poset(&self) -> Poset {
        self.source.poset()
    }

    pub fn shape(&self) -> Option<&Shape> {
        self.source.shape()
    }

    /// File contents in the `p=`/`shape:`/`shifted:` format.
    pub fn to_text(&self) -> String {
        match &self.source {
            PosetSource::Shape(s) => format!("{s}\n"),
            PosetSource::Covers(p) => p.to_text(),
        }
    }
}

fn covers(name: &str, p: Poset) -> Entry {
    Entry {
        name: name.into(),
        source: PosetSource::Covers(p),
    }
}

fn shape(name: &str, rows: &[usize], shifted: bool) -> Entry {
    Entry {
        name: name.into(),
        source: PosetSource::Shape(Shape::new(rows.to_vec(), shifted).expect("valid shape")),
    }
}

fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Poset {
    Poset::from_covers(n, pairs).expect("acyclic")
}

/// Right weak order on `S_n`; elements are permutations in lexicographic
/// order.
pub fn weak_order(n: usize) -> Poset {
    let perms = Perm::all(n);
    let mut pairs = Vec::new();
    for (a, u) in perms.iter().enumerate() {
        for k in 1..n {
            let v = u.mul_s_right(k);
            if v.length() == u.length() + 1 {
                let b = perms.binary_search(&v).expect("listed");
                pairs.push((a, b));
            }
        }
    }
    from_pairs(perms.len(), &pairs)
}

/// Subsets of `{1..n}` ordered by inclusion; element `s` is the bitmask `s`.
pub fn boolean_lattice(n: usize) -> Poset {
    let pairs: Vec<_> = (0..1usize << n)
        .flat_map(|s| (0..n).filter(move |i| s >> i & 1 == 0).map(move |i| (s, s | 1 << i)))
        .collect();
    from_pairs(1 << n, &pairs)
}

/// The standard corpus, in a fixed order.
pub fn standard() -> Vec<Entry> {
    vec![
        covers("chain-1", Poset::chain(1)),
        covers("chain-2", Poset::chain(2)),
        covers("chain-5", Poset::chain(5)),
        covers("chain-8", Poset::chain(8)),
        covers("antichain-2", Poset::antichain(2)),
        covers("antichain-3", Poset::antichain(3)),
        covers("antichain-4", Poset::antichain(4)),
        covers("antichain-6", Poset::antichain(6)),
        covers("chain2-plus-antichain2", Poset::chain(2).disjoint_union(&Poset::antichain(2))),
        covers("chain2-plus-chain3", Poset::chain(2).disjoint_union(&Poset::chain(3))),
        covers("chain3-plus-chain3", Poset::chain(3).disjoint_union(&Poset::chain(3))),
        covers("antichain2-oplus-antichain2", Poset::antichain(2).ordinal_sum(&Poset::antichain(2))),
        covers(
            "antichain2-oplus-chain1-oplus-antichain3",
            Poset::antichain(2).ordinal_sum(&Poset::chain(1)).ordinal_sum(&Poset::antichain(3)),
        ),
        covers("vee", from_pairs(3, &[(0, 2), (1, 2)])),
        covers("wedge", from_pairs(3, &[(0, 1), (0, 2)])),
        covers("n-poset", from_pairs(4, &[(0, 2), (1, 2), (1, 3)])),
        covers("diamond", from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])),
        covers("zigzag-6", from_pairs(6, &[(0, 1), (2, 1), (2, 3), (4, 3), (4, 5)])),
        covers(
            "crown-6",
            from_pairs(6, &[(0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 3)]),
        ),
        covers(
            "tree-7",
            from_pairs(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]),
        ),
        covers(
            "mixed-7",
            from_pairs(7, &[(0, 2), (1, 2), (1, 3), (2, 4), (3, 5), (4, 6), (5, 6)]),
        ),
        covers(
            "mixed-8",
            from_pairs(8, &[(0, 3), (1, 3), (1, 4), (2, 4), (3, 5), (4, 6), (4, 7), (5, 7)]),
        ),
        covers("weak-order-s3", weak_order(3)),
        covers("boolean-3", boolean_lattice(3)),
        shape("shape-2x2", &[2, 2], false),
        shape("shape-2x3", &[3, 3], false),
        shape("shape-2x4", &[4, 4], false),
        shape("shape-3x3", &[3, 3, 3], false),
        shape("shape-3-1", &[3, 1], false),
        shape("shape-3-2", &[3, 2], false),
        shape("shape-3-3-2", &[3, 3, 2], false),
        shape("staircase-2", &[2, 1], false),
        shape("staircase-3", &[3, 2, 1], false),
        shape("shifted-2-1", &[2, 1], true),
        shape("shifted-3-1", &[3, 1], true),
        shape("shifted-3-2", &[3, 2], true),
        shape("shifted-4-2", &[4, 2], true),
        shape("shifted-3-2-1", &[3, 2, 1], true),
        shape("shifted-4-2-1", &[4, 2, 1], true),
    ]
}

/// Entries with at most `max` elements.
pub fn up_to(max: usize) -> Vec<Entry> {
    standard().into_iter().filter(|e| e.poset().size() <= max).collect()
}

/// Reads every `*.poset` file in `dir`, sorted by name.
pub fn load_dir(dir: &Path) -> Result<Vec<Entry>> {
    let io = |e: std::io::Error| Error::Precondition(format!("{}: {e}", dir.display()));
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "poset"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).map_err(io)?;
            let name = p.file_stem().expect("file name").to_string_lossy().into_owned();
            Ok(Entry {
                name,
                source: parse_poset_or_shape(&text)?,
            })
        })
        .collect()
}
