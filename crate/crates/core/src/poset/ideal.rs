use std::collections::{BTreeMap, HashSet};
use std::fmt;

use super::Poset;
use crate::error::{Error, Result};

/// Default bound on the number of order ideals materialized by
/// [`Poset::ideals`] and [`Poset::ideals_lattice`].
pub const DEFAULT_IDEAL_CAP: usize = 1 << 20;

/// A subset of `0..universe`, as a packed bit vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for t in 0..universe {
            s.insert(t);
        }
        s
    }

    pub fn singleton(universe: usize, t: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(t);
        s
    }

    pub fn from_elements(universe: usize, elems: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for t in elems {
            s.insert(t);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, t: usize) -> bool {
        self.words[t / 64] >> (t % 64) & 1 == 1
    }

    pub fn insert(&mut self, t: usize) {
        self.words[t / 64] |= 1 << (t % 64);
    }

    pub fn remove(&mut self, t: usize) {
        self.words[t / 64] &= !(1 << (t % 64));
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&t| self.contains(t))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An order ideal (down-set).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Ideal {
    members: ElementSet,
}

impl Ideal {
    /// Checks downward closure.
    pub fn new(poset: &Poset, members: ElementSet) -> Result<Ideal> {
        if !poset.is_ideal(&members) {
            return Err(Error::Precondition(format!("{members:?} is not an order ideal")));
        }
        Ok(Ideal { members })
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `J(P)` together with the ideal behind each of its element ids.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    pub lattice: Poset,
    pub ideals: Vec<Ideal>,
}

impl IdealLattice {
    pub fn id_of(&self, members: &ElementSet) -> Option<usize> {
        self.ideals
            .binary_search_by(|i| cmp_ideal(&i.members, members))
            .ok()
    }

    /// The maximal chain of `J(P)` associated with a word whose prefixes are
    /// ideals: `I_k` = first `k` letters.
    pub fn chain_of_word(&self, word: &[usize]) -> Vec<usize> {
        let n = self.ideals.last().map_or(0, |i| i.members.universe());
        let mut cur = ElementSet::empty(n);
        let mut chain = vec![self.id_of(&cur).expect("empty ideal")];
        for &t in word {
            cur.insert(t);
            chain.push(self.id_of(&cur).expect("prefix is an ideal"));
        }
        chain
    }

    /// Inverse of [`IdealLattice::chain_of_word`].
    pub fn word_of_chain(&self, chain: &[usize]) -> Vec<usize> {
        chain
            .windows(2)
            .map(|w| {
                let lo = &self.ideals[w[0]].members;
                let hi = &self.ideals[w[1]].members;
                let diff: Vec<usize> = hi.iter().filter(|&t| !lo.contains(t)).collect();
                assert_eq!(diff.len(), 1, "consecutive chain elements must be covers");
                diff[0]
            })
            .collect()
    }
}

/// Ideals are ordered by size, then by members.
fn cmp_ideal(a: &ElementSet, b: &ElementSet) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl Poset {
    pub fn is_ideal(&self, set: &ElementSet) -> bool {
        set.iter()
            .all(|t| self.lower_covers(t).iter().all(|&s| set.contains(s)))
    }

    /// All order ideals, ordered by size and then by member bit pattern.
    /// Fails if there are more than `cap`.
    pub fn ideals(&self, cap: usize) -> Result<Vec<Ideal>> {
        let n = self.size();
        let mut layer = vec![ElementSet::empty(n)];
        let mut all: Vec<ElementSet> = layer.clone();
        while !layer.is_empty() {
            let mut next = HashSet::new();
            for ideal in &layer {
                for t in self.addable(ideal) {
                    let mut bigger = ideal.clone();
                    bigger.insert(t);
                    next.insert(bigger);
                }
            }
            if all.len() + next.len() > cap {
                return Err(Error::CapExceeded {
                    what: "number of order ideals",
                    cap,
                });
            }
            let mut next: Vec<ElementSet> = next.into_iter().collect();
            next.sort();
            all.extend(next.iter().cloned());
            layer = next;
        }
        Ok(all.into_iter().map(|members| Ideal { members }).collect())
    }

    /// Minimal elements of `P - ideal`.
    pub(crate) fn addable<'a>(&'a self, ideal: &'a ElementSet) -> impl Iterator<Item = usize> + 'a {
        (0..self.size()).filter(move |&t| {
            !ideal.contains(t) && self.lower_covers(t).iter().all(|&s| ideal.contains(s))
        })
    }

    /// `J(P)` ordered by inclusion; covers are `I ⋖ I ∪ {t}`.
    pub fn ideals_lattice(&self, cap: usize) -> Result<IdealLattice> {
        let ideals = self.ideals(cap)?;
        let index: BTreeMap<&ElementSet, usize> = ideals
            .iter()
            .enumerate()
            .map(|(i, id)| (&id.members, i))
            .collect();
        let mut covers = Vec::new();
        for (i, ideal) in ideals.iter().enumerate() {
            for t in self.addable(&ideal.members) {
                let mut bigger = ideal.members.clone();
                bigger.insert(t);
                covers.push((i, index[&bigger]));
            }
        }
        let lattice = Poset::from_reduced(ideals.len(), covers);
        Ok(IdealLattice { lattice, ideals })
    }

    /// Number of order ideals, without the cap (counts by layers).
    pub fn count_ideals(&self) -> usize {
        self.ideals(usize::MAX).map_or(0, |v| v.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn ideals_of_small_posets() {
        let one = Poset::chain(1).ideals_lattice(DEFAULT_IDEAL_CAP).unwrap();
        assert_eq!(one.lattice, Poset::chain(2));

        let b2 = Poset::antichain(2).ideals_lattice(DEFAULT_IDEAL_CAP).unwrap();
        assert_eq!(b2.lattice.size(), 4);
        assert_eq!(b2.lattice.covers().len(), 4);

        let b3 = Poset::antichain(3).ideals(DEFAULT_IDEAL_CAP).unwrap();
        // subset enumeration oracle
        let subsets: Vec<ElementSet> = (0u32..8)
            .map(|m| ElementSet::from_elements(3, (0..3).filter(|&i| m >> i & 1 == 1)))
            .collect();
        assert_eq!(b3.len(), subsets.len());
        for s in &subsets {
            assert!(b3.iter().any(|i| i.members() == s));
        }
    }

    #[test]
    fn boolean_lattice_rank_sizes() {
        for n in 0..=6 {
            let ideals = Poset::antichain(n).ideals(DEFAULT_IDEAL_CAP).unwrap();
            assert_eq!(ideals.len(), 1 << n);
            for k in 0..=n {
                assert_eq!(ideals.iter().filter(|i| i.len() == k).count(), binomial(n, k));
            }
        }
    }

    #[test]
    fn cap_breach_is_an_error() {
        assert!(matches!(
            Poset::antichain(5).ideals(31),
            Err(Error::CapExceeded { .. })
        ));
        assert!(Poset::antichain(5).ideals(32).is_ok());
    }

    #[test]
    fn ideal_validation() {
        let p = Poset::chain(3);
        assert!(Ideal::new(&p, ElementSet::from_elements(3, [0, 1])).is_ok());
        assert!(Ideal::new(&p, ElementSet::from_elements(3, [1])).is_err());
    }

    #[test]
    fn chain_word_bijection() {
        let p = Poset::from_covers(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        let j = p.ideals_lattice(DEFAULT_IDEAL_CAP).unwrap();
        for f in p.linear_extensions() {
            let chain = j.chain_of_word(f.word());
            assert_eq!(chain.len(), 5);
            for w in chain.windows(2) {
                assert!(j.lattice.covers_pair(w[0], w[1]));
            }
            assert_eq!(j.word_of_chain(&chain), f.word());
        }
    }
}
