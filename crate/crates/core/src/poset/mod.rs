//! Finite posets on dense element ids `0..p`.
//!
//! A [`Poset`] is stored as its cover relation (the Hasse diagram). The
//! order relation is derived from it on first use and cached.

mod extension;
mod format;
mod ideal;
mod shape;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub use extension::{LinearExtension, LinearExtensions};
pub use format::{parse_poset, parse_poset_or_shape, PosetSource};
pub use ideal::{ElementSet, Ideal, IdealLattice, DEFAULT_IDEAL_CAP};
pub use shape::Shape;

/// A finite poset with elements `0..size`.
pub struct Poset {
    size: usize,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    below: OnceLock<Vec<ElementSet>>,
}

impl Clone for Poset {
    fn clone(&self) -> Self {
        Poset::from_reduced(self.size, self.covers.clone())
    }
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.covers == other.covers
    }
}

impl Eq for Poset {}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("size", &self.size)
            .field("covers", &self.covers)
            .finish()
    }
}

impl Poset {
    /// Builds a poset from any generating relation `a < b`. Redundant
    /// (transitively implied) pairs are dropped; a cycle is an error that
    /// carries one offending cycle.
    pub fn from_covers(size: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        for &(a, b) in pairs {
            for id in [a, b] {
                if id >= size {
                    return Err(Error::ElementOutOfRange { id, size });
                }
            }
        }
        let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); size];
        for &(a, b) in pairs {
            if a == b {
                return Err(Error::Cycle(vec![a, a]));
            }
            succ[a].insert(b);
        }
        let order = topological_order(size, &succ)?;

        // up[t] = {u : t <= u}, filled in reverse topological order
        let mut up = vec![ElementSet::empty(size); size];
        for &t in order.iter().rev() {
            let mut set = ElementSet::singleton(size, t);
            for &u in &succ[t] {
                set.union_with(&up[u]);
            }
            up[t] = set;
        }
        let mut covers = Vec::new();
        for a in 0..size {
            for &b in &succ[a] {
                let implied = succ[a].iter().any(|&c| c != b && up[c].contains(b));
                if !implied {
                    covers.push((a, b));
                }
            }
        }
        Ok(Poset::from_reduced(size, covers))
    }

    /// Builds a poset from a cover relation that is already acyclic and
    /// irredundant. Only for internal constructions where this holds by
    /// construction.
    pub(crate) fn from_reduced(size: usize, mut covers: Vec<(usize, usize)>) -> Poset {
        covers.sort_unstable();
        covers.dedup();
        let mut upper = vec![Vec::new(); size];
        let mut lower = vec![Vec::new(); size];
        for &(a, b) in &covers {
            upper[a].push(b);
            lower[b].push(a);
        }
        for l in &mut lower {
            l.sort_unstable();
        }
        Poset {
            size,
            covers,
            upper,
            lower,
            below: OnceLock::new(),
        }
    }

    pub fn chain(n: usize) -> Poset {
        Poset::from_reduced(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_reduced(n, Vec::new())
    }

    /// `self ⊕ other`: every element of `other` lies above every element of
    /// `self`. Ids of `other` are shifted by `self.size()`.
    pub fn ordinal_sum(&self, other: &Poset) -> Poset {
        let off = self.size;
        let mut covers = self.covers.clone();
        covers.extend(other.covers.iter().map(|&(a, b)| (a + off, b + off)));
        for a in self.maximal_elements() {
            for b in other.minimal_elements() {
                covers.push((a, b + off));
            }
        }
        Poset::from_reduced(off + other.size, covers)
    }

    /// Disjoint union; ids of `other` are shifted by `self.size()`.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        let off = self.size;
        let mut covers = self.covers.clone();
        covers.extend(other.covers.iter().map(|&(a, b)| (a + off, b + off)));
        Poset::from_reduced(off + other.size, covers)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Sorted cover pairs `(s, t)` with `s ⋖ t`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Elements covering `t`, ascending.
    pub fn upper_covers(&self, t: usize) -> &[usize] {
        &self.upper[t]
    }

    /// Elements covered by `t`, ascending.
    pub fn lower_covers(&self, t: usize) -> &[usize] {
        &self.lower[t]
    }

    pub fn covers_pair(&self, s: usize, t: usize) -> bool {
        self.upper[s].binary_search(&t).is_ok()
    }

    fn below_sets(&self) -> &[ElementSet] {
        self.below.get_or_init(|| {
            let succ: Vec<BTreeSet<usize>> = self
                .upper
                .iter()
                .map(|u| u.iter().copied().collect())
                .collect();
            let order = topological_order(self.size, &succ).expect("stored posets are acyclic");
            let mut below = vec![ElementSet::empty(self.size); self.size];
            for &t in &order {
                let mut set = ElementSet::singleton(self.size, t);
                for &s in &self.lower[t] {
                    set.union_with(&below[s]);
                }
                below[t] = set;
            }
            below
        })
    }

    /// `s <= t`.
    pub fn leq(&self, s: usize, t: usize) -> bool {
        self.below_sets()[t].contains(s)
    }

    /// `s < t`.
    pub fn lt(&self, s: usize, t: usize) -> bool {
        s != t && self.leq(s, t)
    }

    pub fn comparable(&self, s: usize, t: usize) -> bool {
        self.leq(s, t) || self.leq(t, s)
    }

    /// The principal ideal `{s : s <= t}`.
    pub fn principal_ideal(&self, t: usize) -> &ElementSet {
        &self.below_sets()[t]
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size).filter(|&t| self.lower[t].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.size).filter(|&t| self.upper[t].is_empty()).collect()
    }

    /// Every cover `(s, t)` has `s < t` as integers.
    pub fn is_natural(&self) -> bool {
        self.covers.iter().all(|&(a, b)| a < b)
    }

    pub fn is_chain(&self) -> bool {
        (0..self.size).all(|s| (s + 1..self.size).all(|t| self.comparable(s, t)))
    }

    /// The dual poset `P*` on the same ids, covers reversed.
    pub fn dual(&self) -> Poset {
        Poset::from_reduced(self.size, self.covers.iter().map(|&(a, b)| (b, a)).collect())
    }

    /// The induced subposet on `keep` (listed in the order that becomes the
    /// new ids `0..keep.len()`).
    pub fn induced(&self, keep: &[usize]) -> Poset {
        let mut pairs = Vec::new();
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                if i != j && self.lt(a, b) {
                    pairs.push((i, j));
                }
            }
        }
        Poset::from_covers(keep.len(), &pairs).expect("subposet of an acyclic poset")
    }

    /// `P - t`, with the remaining ids kept in increasing order.
    pub fn remove(&self, t: usize) -> Poset {
        let keep: Vec<usize> = (0..self.size).filter(|&s| s != t).collect();
        self.induced(&keep)
    }

    /// An isomorphic natural partial order. `map[old] = new`; the new ids
    /// follow the lexicographically first linear extension, so a natural
    /// poset is returned unchanged with the identity map.
    pub fn natural_relabel(&self) -> (Poset, Vec<usize>) {
        let first = self
            .linear_extensions()
            .next()
            .expect("every finite poset has a linear extension");
        let mut map = vec![0; self.size];
        for (pos, &t) in first.word().iter().enumerate() {
            map[t] = pos;
        }
        let covers = self.covers.iter().map(|&(a, b)| (map[a], map[b])).collect();
        (Poset::from_reduced(self.size, covers), map)
    }

    /// Relabels elements by `map[old] = new`.
    pub fn relabel(&self, map: &[usize]) -> Poset {
        let covers = self.covers.iter().map(|&(a, b)| (map[a], map[b])).collect();
        Poset::from_reduced(self.size, covers)
    }

    /// All maximal chains, each listed bottom to top, in lexicographic order.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        for m in self.minimal_elements() {
            path.push(m);
            self.extend_chains(&mut path, &mut out);
            path.pop();
        }
        out
    }

    fn extend_chains(&self, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let top = *path.last().expect("nonempty path");
        if self.upper[top].is_empty() {
            out.push(path.clone());
            return;
        }
        for &u in &self.upper[top] {
            path.push(u);
            self.extend_chains(path, out);
            path.pop();
        }
    }

    pub fn is_antichain(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| a != b && !self.comparable(a, b)))
    }

    /// Whether `set` is an antichain meeting every maximal chain.
    pub fn antichain_cuts_all_chains(&self, set: &[usize]) -> bool {
        if !self.is_antichain(set) {
            return false;
        }
        let mut in_set = vec![false; self.size];
        for &a in set {
            in_set[a] = true;
        }
        // a maximal chain avoiding `set` is a cover path from a minimal to a
        // maximal element that never touches `set`
        let mut seen = vec![false; self.size];
        let mut stack: Vec<usize> = self
            .minimal_elements()
            .into_iter()
            .filter(|&m| !in_set[m])
            .collect();
        while let Some(t) = stack.pop() {
            if seen[t] {
                continue;
            }
            seen[t] = true;
            if self.upper[t].is_empty() {
                return false;
            }
            stack.extend(self.upper[t].iter().copied().filter(|&u| !in_set[u]));
        }
        true
    }

    /// Length (number of covers) of the longest chain.
    pub fn height(&self) -> usize {
        let mut depth = vec![0usize; self.size];
        let mut best = 0;
        for t in self.topological() {
            for &s in &self.lower[t] {
                depth[t] = depth[t].max(depth[s] + 1);
            }
            best = best.max(depth[t]);
        }
        best
    }

    /// Elements in a topological order (ties broken by smallest id).
    pub fn topological(&self) -> Vec<usize> {
        let succ: Vec<BTreeSet<usize>> = self
            .upper
            .iter()
            .map(|u| u.iter().copied().collect())
            .collect();
        topological_order(self.size, &succ).expect("stored posets are acyclic")
    }
}

/// Kahn's algorithm, smallest available id first. On failure reports one
/// directed cycle.
fn topological_order(size: usize, succ: &[BTreeSet<usize>]) -> Result<Vec<usize>> {
    let mut indeg = vec![0usize; size];
    for s in succ {
        for &b in s {
            indeg[b] += 1;
        }
    }
    let mut ready: BTreeSet<usize> = (0..size).filter(|&t| indeg[t] == 0).collect();
    let mut order = Vec::with_capacity(size);
    while let Some(t) = ready.pop_first() {
        order.push(t);
        for &b in &succ[t] {
            indeg[b] -= 1;
            if indeg[b] == 0 {
                ready.insert(b);
            }
        }
    }
    if order.len() == size {
        return Ok(order);
    }
    // every leftover vertex has a leftover predecessor; walk backwards
    let mut pred = vec![None; size];
    for (a, s) in succ.iter().enumerate() {
        if indeg[a] == 0 {
            continue;
        }
        for &b in s {
            if indeg[b] > 0 {
                pred[b] = Some(a);
            }
        }
    }
    let start = (0..size).find(|&t| indeg[t] > 0).expect("leftover vertex");
    let mut visited = vec![false; size];
    let mut cur = start;
    while !visited[cur] {
        visited[cur] = true;
        cur = pred[cur].expect("leftover vertex has a leftover predecessor");
    }
    let mut cycle = vec![cur];
    let mut t = pred[cur].expect("on cycle");
    while t != cur {
        cycle.push(t);
        t = pred[t].expect("on cycle");
    }
    cycle.reverse();
    cycle.push(cycle[0]);
    Err(Error::Cycle(cycle))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton() {
        let p = Poset::from_covers(1, &[]).unwrap();
        assert_eq!(p.size(), 1);
        assert!(p.leq(0, 0));
    }

    #[test]
    fn transitive_pair_is_removed() {
        let p = Poset::from_covers(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
    }

    #[test]
    fn cycles_are_rejected_with_witness() {
        match Poset::from_covers(2, &[(0, 1), (1, 0)]) {
            Err(Error::Cycle(c)) => {
                assert_eq!(c.first(), c.last());
                assert_eq!(c.len(), 3);
            }
            other => panic!("expected cycle, got {other:?}"),
        }
        match Poset::from_covers(4, &[(0, 1), (1, 2), (2, 3), (3, 1)]) {
            Err(Error::Cycle(c)) => {
                let inner: BTreeSet<usize> = c.iter().copied().collect();
                assert_eq!(inner, BTreeSet::from([1, 2, 3]));
            }
            other => panic!("expected cycle, got {other:?}"),
        }
        assert!(matches!(Poset::from_covers(2, &[(0, 0)]), Err(Error::Cycle(_))));
        assert!(matches!(
            Poset::from_covers(2, &[(0, 2)]),
            Err(Error::ElementOutOfRange { id: 2, size: 2 })
        ));
    }

    #[test]
    fn dual_is_an_involution() {
        let p = Poset::from_covers(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(p.dual().dual(), p);
        assert!(p.dual().leq(3, 0));
    }

    #[test]
    fn antichain_cuts() {
        let chain = Poset::chain(3);
        assert!(chain.antichain_cuts_all_chains(&[1]));
        let anti = Poset::antichain(2);
        assert!(!anti.antichain_cuts_all_chains(&[0]));
        assert!(anti.antichain_cuts_all_chains(&[0, 1]));
        let p = Poset::from_covers(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap();
        assert!(p.antichain_cuts_all_chains(&p.minimal_elements()));
        assert!(p.antichain_cuts_all_chains(&[2]));
        assert!(!p.antichain_cuts_all_chains(&[0, 2]));
        assert!(!p.antichain_cuts_all_chains(&[3]));
    }

    #[test]
    fn natural_relabel_examples() {
        let nat = Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap();
        let (q, map) = nat.natural_relabel();
        assert_eq!(q, nat);
        assert_eq!(map, vec![0, 1, 2]);

        let swapped = Poset::from_covers(2, &[(1, 0)]).unwrap();
        let (q, map) = swapped.natural_relabel();
        assert_eq!(q.covers(), &[(0, 1)]);
        assert_eq!(map, vec![1, 0]);

        let p = Poset::from_covers(5, &[(4, 0), (3, 0), (0, 1), (2, 1)]).unwrap();
        let (q, _) = p.natural_relabel();
        for i in 0..5 {
            for j in 0..5 {
                if q.lt(i, j) {
                    assert!(i < j);
                }
            }
        }
    }

    #[test]
    fn maximal_chains_and_height() {
        let p = Poset::from_covers(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(
            p.maximal_chains(),
            vec![vec![0, 2, 3], vec![0, 2, 4], vec![1, 2, 3], vec![1, 2, 4]]
        );
        assert_eq!(p.height(), 2);
        assert_eq!(Poset::antichain(3).height(), 0);
    }

    #[test]
    fn ordinal_sum_and_union() {
        let p = Poset::antichain(2).ordinal_sum(&Poset::antichain(2));
        assert_eq!(p.covers(), &[(0, 2), (0, 3), (1, 2), (1, 3)]);
        let q = Poset::chain(2).disjoint_union(&Poset::chain(2));
        assert_eq!(q.covers(), &[(0, 1), (2, 3)]);
    }

    #[test]
    fn remove_keeps_induced_order() {
        let p = Poset::chain(3);
        let q = p.remove(1);
        assert_eq!(q.covers(), &[(0, 1)]);
    }
}
