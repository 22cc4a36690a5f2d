use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{ElementSet, Poset};
use crate::error::{Error, Result};

/// A linear extension written as a word `u_1 u_2 ... u_p` with
/// `u_i = f^{-1}(i)`: position `i` (0-based) holds the element labelled
/// `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearExtension(Vec<usize>);

impl LinearExtension {
    /// Validates that `word` lists every element once and that every prefix
    /// is an order ideal.
    pub fn new(poset: &Poset, word: Vec<usize>) -> Result<Self> {
        let n = poset.size();
        if word.len() != n {
            return Err(Error::NotLinearExtension(format!(
                "word has {} letters, poset has {n} elements",
                word.len()
            )));
        }
        let mut seen = vec![false; n];
        for &t in &word {
            if t >= n {
                return Err(Error::ElementOutOfRange { id: t, size: n });
            }
            if seen[t] {
                return Err(Error::NotLinearExtension(format!("element {t} repeated")));
            }
            if let Some(&s) = poset.lower_covers(t).iter().find(|&&s| !seen[s]) {
                return Err(Error::NotLinearExtension(format!(
                    "{t} appears before {s} although {s} < {t}"
                )));
            }
            seen[t] = true;
        }
        Ok(LinearExtension(word))
    }

    /// Wraps a word that is known to be a linear extension.
    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        LinearExtension(word)
    }

    /// Builds the extension from labels `f(t)` in `1..=p`.
    pub fn from_labels(poset: &Poset, labels: &[usize]) -> Result<Self> {
        let n = labels.len();
        let mut word = vec![usize::MAX; n];
        for (t, &l) in labels.iter().enumerate() {
            if l == 0 || l > n || word[l - 1] != usize::MAX {
                return Err(Error::NotLinearExtension(format!("labels {labels:?} are not a bijection onto 1..={n}")));
            }
            word[l - 1] = t;
        }
        Self::new(poset, word)
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn into_word(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `labels[t] = f(t)`, 1-based.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.0.len()];
        for (i, &t) in self.0.iter().enumerate() {
            labels[t] = i + 1;
        }
        labels
    }

    /// The conjugate `f*(t) = p + 1 - f(t)`, an extension of the dual poset:
    /// the reversed word.
    pub fn conjugate(&self) -> LinearExtension {
        LinearExtension(self.0.iter().rev().copied().collect())
    }

    /// Parity of the word as a permutation of the ids (0 even, 1 odd).
    pub fn parity(&self) -> u8 {
        let mut seen = vec![false; self.0.len()];
        let mut transpositions = 0usize;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            transpositions += len - 1;
        }
        (transpositions % 2) as u8
    }
}

impl fmt::Debug for LinearExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearExtension[{self}]")
    }
}

/// Comma-separated element ids.
impl fmt::Display for LinearExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses a comma-separated word; validate against a poset with
/// [`LinearExtension::new`].
impl FromStr for LinearExtension {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(LinearExtension(Vec::new()));
        }
        s.split(',')
            .map(|part| {
                part.trim().parse::<usize>().map_err(|e| Error::Parse {
                    line: 1,
                    message: format!("bad element id {part:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(LinearExtension)
    }
}

/// Lexicographic stream of the linear extensions of a poset.
pub struct LinearExtensions<'a> {
    poset: &'a Poset,
    word: Vec<usize>,
    placed: Vec<bool>,
    cursor: Vec<usize>,
    floor: usize,
    emitted_full: bool,
    done: bool,
}

impl<'a> LinearExtensions<'a> {
    /// Extensions beginning with `prefix`, for splitting the enumeration.
    pub fn with_prefix(poset: &'a Poset, prefix: &[usize]) -> Result<Self> {
        let n = poset.size();
        let mut placed = vec![false; n];
        for &t in prefix {
            if t >= n {
                return Err(Error::ElementOutOfRange { id: t, size: n });
            }
            if placed[t] || poset.lower_covers(t).iter().any(|&s| !placed[s]) {
                return Err(Error::NotLinearExtension(format!(
                    "{prefix:?} is not a valid prefix"
                )));
            }
            placed[t] = true;
        }
        Ok(LinearExtensions {
            poset,
            word: prefix.to_vec(),
            placed,
            cursor: vec![0; n + 1],
            floor: prefix.len(),
            emitted_full: false,
            done: false,
        })
    }

    fn available(&self, t: usize) -> bool {
        !self.placed[t] && self.poset.lower_covers(t).iter().all(|&s| self.placed[s])
    }

    fn pop(&mut self) {
        let t = self.word.pop().expect("nonempty word");
        self.placed[t] = false;
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = LinearExtension;

    fn next(&mut self) -> Option<LinearExtension> {
        if self.done {
            return None;
        }
        let n = self.poset.size();
        if self.emitted_full {
            if self.word.len() == self.floor {
                self.done = true;
                return None;
            }
            self.pop();
        }
        loop {
            let d = self.word.len();
            if d == n {
                self.emitted_full = true;
                return Some(LinearExtension(self.word.clone()));
            }
            let mut c = self.cursor[d];
            while c < n && !self.available(c) {
                c += 1;
            }
            if c < n {
                self.cursor[d] = c + 1;
                self.word.push(c);
                self.placed[c] = true;
                self.cursor[d + 1] = 0;
            } else {
                if d == self.floor {
                    self.done = true;
                    return None;
                }
                self.pop();
            }
        }
    }
}

impl Poset {
    /// All linear extensions in lexicographic word order.
    pub fn linear_extensions(&self) -> LinearExtensions<'_> {
        LinearExtensions::with_prefix(self, &[]).expect("empty prefix is valid")
    }

    /// Collects the extensions, failing if there are more than `cap`.
    pub fn linear_extensions_capped(&self, cap: usize) -> Result<Vec<LinearExtension>> {
        let mut out = Vec::new();
        for f in self.linear_extensions() {
            if out.len() == cap {
                return Err(Error::CapExceeded {
                    what: "number of linear extensions",
                    cap,
                });
            }
            out.push(f);
        }
        Ok(out)
    }

    /// `e(P)`, by dynamic programming over order ideals.
    pub fn count_extensions(&self) -> BigUint {
        let n = self.size();
        let mut layer: HashMap<ElementSet, BigUint> = HashMap::new();
        layer.insert(ElementSet::empty(n), BigUint::one());
        for _ in 0..n {
            let mut next: HashMap<ElementSet, BigUint> = HashMap::new();
            for (ideal, count) in &layer {
                for t in self.addable(ideal) {
                    let mut bigger = ideal.clone();
                    bigger.insert(t);
                    *next.entry(bigger).or_insert_with(BigUint::zero) += count;
                }
            }
            layer = next;
        }
        layer.into_values().next().unwrap_or_else(BigUint::one)
    }
}
