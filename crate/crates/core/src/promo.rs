//! Promotion `∂`, evacuation `ε` and their duals on linear extensions.
//!
//! All operators act on the right: `f∂` is [`promote`]`(P, f)`, and a word
//! of generators `[i, j, ...]` means `τ_i` is applied first, then `τ_j`.
//! Two independent realizations are provided for the main operators:
//!
//! * the label-sliding definitions ([`promote_slide`], [`dual_promote`],
//!   [`evacuate`]), which move labels along covers and freeze them;
//! * products of the involutions `τ_i` ([`promote_word`],
//!   [`evacuate_word`], [`dual_evacuate_word`]), where `τ_i` swaps the
//!   letters in positions `i, i+1` of the word when they are incomparable.
//!
//! The test suites check that both agree everywhere.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{LinearExtension, Poset};

/// Words in the generators `τ_1, ..., τ_{p-1}` (1-based indices, applied
/// left to right).
pub mod words {
    /// `δ = τ_1 τ_2 ⋯ τ_{p-1}`.
    pub fn delta(p: usize) -> Vec<usize> {
        (1..p).collect()
    }

    /// `δ_i = τ_1 ⋯ τ_i`.
    pub fn delta_i(i: usize) -> Vec<usize> {
        (1..=i).collect()
    }

    /// `δ*_i = τ_i ⋯ τ_1`.
    pub fn delta_star_i(i: usize) -> Vec<usize> {
        (1..=i).rev().collect()
    }

    /// `γ = δ_{p-1} δ_{p-2} ⋯ δ_1`.
    pub fn gamma(p: usize) -> Vec<usize> {
        (1..p).rev().flat_map(delta_i).collect()
    }

    /// `γ* = (τ_{p-1}⋯τ_1)(τ_{p-1}⋯τ_2)⋯(τ_{p-1})`.
    pub fn gamma_star(p: usize) -> Vec<usize> {
        (1..p).flat_map(|k| (k..p).rev()).collect()
    }

    /// `ψ_j = τ_1 ⋯ τ_{p-j}`.
    pub fn psi(p: usize, j: usize) -> Vec<usize> {
        (1..=p.saturating_sub(j)).collect()
    }

    /// `τ_1 · τ_3τ_2τ_1 · τ_5τ_4τ_3τ_2τ_1 ⋯ τ_m⋯τ_1` with `m = p-1` for
    /// even `p` and `m = p-2` for odd `p`.
    pub fn domino_to_selfevac(p: usize) -> Vec<usize> {
        let m = if p % 2 == 0 { p.saturating_sub(1) } else { p.saturating_sub(2) };
        (1..=m).step_by(2).flat_map(delta_star_i).collect()
    }

    /// `τ_{p-1} τ_{p-3} ⋯ τ_h`, `h = 1` for even `p` and `h = 2` for odd.
    pub fn domino_pairs(p: usize) -> Vec<usize> {
        let h = if p % 2 == 0 { 1 } else { 2 };
        (h..p).rev().step_by(2).collect()
    }

    /// The inverse of a word of involutions: the reversed word.
    pub fn inverse(word: &[usize]) -> Vec<usize> {
        word.iter().rev().copied().collect()
    }

    /// `word^k`.
    pub fn power(word: &[usize], k: usize) -> Vec<usize> {
        word.iter().copied().cycle().take(word.len() * k).collect()
    }
}

/// A chain of elements listed bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Chain(pub Vec<usize>);

impl Chain {
    pub fn elems(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn check_index(p: &Poset, i: usize) -> Result<()> {
    let max = p.size().saturating_sub(1);
    if i == 0 || i > max {
        return Err(Error::IndexOutOfRange { index: i, max });
    }
    Ok(())
}

#[inline]
fn tau_in_place(p: &Poset, w: &mut [usize], i: usize) {
    if !p.comparable(w[i - 1], w[i]) {
        w.swap(i - 1, i);
    }
}

/// `fτ_i`: swaps positions `i` and `i+1` (1-based) when the letters there
/// are incomparable.
pub fn tau(p: &Poset, f: &LinearExtension, i: usize) -> Result<LinearExtension> {
    check_index(p, i)?;
    let mut w = f.word().to_vec();
    tau_in_place(p, &mut w, i);
    Ok(LinearExtension::from_word_unchecked(w))
}

/// Applies a word of generators, left to right.
pub fn apply_taus(p: &Poset, f: &LinearExtension, word: &[usize]) -> Result<LinearExtension> {
    for &i in word {
        check_index(p, i)?;
    }
    let mut w = f.word().to_vec();
    for &i in word {
        tau_in_place(p, &mut w, i);
    }
    Ok(LinearExtension::from_word_unchecked(w))
}

fn apply_taus_unchecked(p: &Poset, f: &LinearExtension, word: &[usize]) -> LinearExtension {
    let mut w = f.word().to_vec();
    for &i in word {
        tau_in_place(p, &mut w, i);
    }
    LinearExtension::from_word_unchecked(w)
}

/// Promotes the word prefix `w` (an order ideal) in place by sliding, and
/// returns the promotion chain.
fn slide_promote(p: &Poset, w: &mut [usize], labels: &mut [usize]) -> Vec<usize> {
    let k = w.len();
    if k == 0 {
        return Vec::new();
    }
    for (i, &t) in w.iter().enumerate() {
        labels[t] = i + 1;
    }
    let mut t = w[0];
    let mut chain = vec![t];
    loop {
        let mut best: Option<usize> = None;
        for &u in p.upper_covers(t) {
            if labels[u] == 0 {
                continue;
            }
            debug_assert!(best.map_or(true, |b| labels[b] != labels[u]), "labels are distinct");
            if best.map_or(true, |b| labels[u] < labels[b]) {
                best = Some(u);
            }
        }
        match best {
            Some(u) => {
                labels[t] = labels[u];
                chain.push(u);
                t = u;
            }
            None => break,
        }
    }
    labels[t] = k + 1;
    let old: Vec<usize> = w.to_vec();
    for &t in &old {
        w[labels[t] - 2] = t;
    }
    for &t in &old {
        labels[t] = 0;
    }
    chain
}

/// `f∂` by sliding labels, together with the promotion chain
/// `t_1 ⋖ t_2 ⋖ ⋯ ⋖ t_k`.
pub fn promote_slide(p: &Poset, f: &LinearExtension) -> (LinearExtension, Chain) {
    let mut w = f.word().to_vec();
    let mut labels = vec![0; p.size()];
    let chain = slide_promote(p, &mut w, &mut labels);
    (LinearExtension::from_word_unchecked(w), Chain(chain))
}

/// `f∂ = fτ_1τ_2⋯τ_{p-1}`.
pub fn promote_word(p: &Poset, f: &LinearExtension) -> LinearExtension {
    apply_taus_unchecked(p, f, &words::delta(p.size()))
}

/// `f∂`; the word realization.
pub fn promote(p: &Poset, f: &LinearExtension) -> LinearExtension {
    promote_word(p, f)
}

/// Factors the word left to right into the longest blocks whose first
/// letter is incomparable with the rest of the block.
pub fn promotion_blocks(p: &Poset, f: &LinearExtension) -> Vec<Vec<usize>> {
    let w = f.word();
    let mut blocks = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let head = w[i];
        let mut j = i + 1;
        while j < w.len() && !p.lt(head, w[j]) {
            j += 1;
        }
        blocks.push(w[i..j].to_vec());
        i = j;
    }
    blocks
}

/// Cyclically shifts every block one step left and concatenates.
pub fn rotate_blocks<T: Clone>(blocks: &[Vec<T>]) -> Vec<T> {
    blocks
        .iter()
        .flat_map(|b| b.iter().skip(1).chain(b.first()).cloned())
        .collect()
}

/// `f∂` through the block factorization.
pub fn promote_blocks(p: &Poset, f: &LinearExtension) -> LinearExtension {
    LinearExtension::from_word_unchecked(rotate_blocks(&promotion_blocks(p, f)))
}

/// `f∂*`: remove the largest label, slide the largest labels of lower
/// covers up, label the final minimal element 0 and add 1 everywhere.
pub fn dual_promote(p: &Poset, f: &LinearExtension) -> LinearExtension {
    let n = p.size();
    if n == 0 {
        return f.clone();
    }
    let mut labels = f.labels();
    let mut t = f.word()[n - 1];
    loop {
        let best = p.lower_covers(t).iter().copied().max_by_key(|&u| labels[u]);
        match best {
            Some(u) => {
                labels[t] = labels[u];
                t = u;
            }
            None => break,
        }
    }
    labels[t] = 0;
    let mut w = vec![0; n];
    for (s, &l) in labels.iter().enumerate() {
        w[l] = s;
    }
    LinearExtension::from_word_unchecked(w)
}

/// `f∂^{-1} = fτ_{p-1}⋯τ_1`.
pub fn dual_promote_word(p: &Poset, f: &LinearExtension) -> LinearExtension {
    apply_taus_unchecked(p, f, &words::inverse(&words::delta(p.size())))
}

/// `fε` by repeated promotion and freezing of the largest label.
pub fn evacuate(p: &Poset, f: &LinearExtension) -> LinearExtension {
    let mut w = f.word().to_vec();
    let mut labels = vec![0; p.size()];
    for k in (1..=w.len()).rev() {
        slide_promote(p, &mut w[..k], &mut labels);
    }
    LinearExtension::from_word_unchecked(w)
}

/// `fε = fγ`.
pub fn evacuate_word(p: &Poset, f: &LinearExtension) -> LinearExtension {
    apply_taus_unchecked(p, f, &words::gamma(p.size()))
}

/// `fε* = (f*ε)*`, computed on the dual poset.
pub fn dual_evacuate(p: &Poset, f: &LinearExtension) -> LinearExtension {
    evacuate(&p.dual(), &f.conjugate()).conjugate()
}

/// `fε* = fγ*`.
pub fn dual_evacuate_word(p: &Poset, f: &LinearExtension) -> LinearExtension {
    apply_taus_unchecked(p, f, &words::gamma_star(p.size()))
}

/// The promotion chain of `f`: the elements along which labels slide when
/// `∂` is applied once.
pub fn trajectory(p: &Poset, f: &LinearExtension) -> Chain {
    promote_slide(p, f).1
}

/// The chain visited by the label that starts at `f^{-1}(p)` during `p - 1`
/// promotions, listed bottom to top.
pub fn principal_chain(p: &Poset, f: &LinearExtension) -> Chain {
    let n = p.size();
    if n == 0 {
        return Chain(Vec::new());
    }
    let mut cur = f.clone();
    let mut at = f.word()[n - 1];
    let mut visited = vec![at];
    for _ in 1..n {
        let (next, chain) = promote_slide(p, &cur);
        if let Some(j) = chain.0.iter().position(|&t| t == at) {
            if j > 0 {
                at = chain.0[j - 1];
                visited.push(at);
            }
        }
        cur = next;
    }
    visited.reverse();
    Chain(visited)
}

/// The operators whose orbit structure can be reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Operator {
    Promotion,
    DualPromotion,
    Evacuation,
    DualEvacuation,
    /// `∂^p`.
    PromotionPowP,
}

impl Operator {
    pub fn name(self) -> &'static str {
        match self {
            Operator::Promotion => "promotion",
            Operator::DualPromotion => "dual-promotion",
            Operator::Evacuation => "evacuation",
            Operator::DualEvacuation => "dual-evacuation",
            Operator::PromotionPowP => "promotion^p",
        }
    }

    pub fn from_name(s: &str) -> Option<Operator> {
        Some(match s {
            "promotion" | "promote" | "d" => Operator::Promotion,
            "dual-promotion" => Operator::DualPromotion,
            "evacuation" | "evacuate" | "e" => Operator::Evacuation,
            "dual-evacuation" => Operator::DualEvacuation,
            "promotion^p" | "dp" => Operator::PromotionPowP,
            _ => return None,
        })
    }

    /// The operator as a word in the generators.
    pub fn word(self, p: usize) -> Vec<usize> {
        match self {
            Operator::Promotion => words::delta(p),
            Operator::DualPromotion => words::inverse(&words::delta(p)),
            Operator::Evacuation => words::gamma(p),
            Operator::DualEvacuation => words::gamma_star(p),
            Operator::PromotionPowP => words::power(&words::delta(p), p),
        }
    }
}

/// The set `𝓛(P)`, indexed for computing operators as permutations.
#[derive(Clone, Debug)]
pub struct ExtensionSet {
    exts: Vec<LinearExtension>,
    index: HashMap<LinearExtension, usize>,
}

/// Default bound on `e(P)` for computations that materialize `𝓛(P)`.
pub const DEFAULT_EXTENSION_CAP: usize = 5_000_000;

impl ExtensionSet {
    pub fn new(p: &Poset, cap: usize) -> Result<Self> {
        let exts = p.linear_extensions_capped(cap)?;
        let index = exts.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        Ok(ExtensionSet { exts, index })
    }

    pub fn len(&self) -> usize {
        self.exts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exts.is_empty()
    }

    pub fn extensions(&self) -> &[LinearExtension] {
        &self.exts
    }

    pub fn index_of(&self, f: &LinearExtension) -> usize {
        self.index[f]
    }

    /// `perm[i]` = index of `exts[i] · op`.
    pub fn permutation(&self, op: impl Fn(&LinearExtension) -> LinearExtension) -> Vec<usize> {
        self.exts.iter().map(|f| self.index[&op(f)]).collect()
    }

    /// The permutation of a word of generators.
    pub fn word_permutation(&self, p: &Poset, word: &[usize]) -> Vec<usize> {
        self.permutation(|f| apply_taus_unchecked(p, f, word))
    }
}

/// Composition of permutations acting on the right: first `a`, then `b`.
pub fn then(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&i| b[i]).collect()
}

pub fn inverse(a: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

pub fn is_identity(a: &[usize]) -> bool {
    a.iter().enumerate().all(|(i, &j)| i == j)
}

/// Cycle lengths with multiplicities.
pub fn cycle_type(perm: &[usize]) -> BTreeMap<usize, usize> {
    let mut seen = vec![false; perm.len()];
    let mut out = BTreeMap::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        *out.entry(len).or_insert(0) += 1;
    }
    out
}

/// Order of a permutation (lcm of its cycle lengths).
pub fn order(perm: &[usize]) -> usize {
    cycle_type(perm)
        .keys()
        .fold(1, |acc, &l| num_integer::lcm(acc, l))
}

/// Order of the group generated by the given permutations.
pub fn group_order(gens: &[Vec<usize>]) -> usize {
    let n = gens.first().map_or(0, Vec::len);
    let id: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        for s in gens {
            let h = then(&g, s);
            if seen.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    seen.len()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub operator: String,
    /// cycle length → number of cycles
    pub cycle_lengths: BTreeMap<usize, usize>,
    pub extensions: usize,
}

pub fn orbit_structure(p: &Poset, op: Operator, cap: usize) -> Result<OrbitReport> {
    let set = ExtensionSet::new(p, cap)?;
    let perm = set.word_permutation(p, &op.word(p.size()));
    Ok(OrbitReport {
        operator: op.name().to_string(),
        cycle_lengths: cycle_type(&perm),
        extensions: set.len(),
    })
}

/// Order of `D_P = ⟨ε, ε*⟩`, by closing the two permutations under
/// composition.
pub fn dihedral_order(p: &Poset, cap: usize) -> Result<usize> {
    let set = ExtensionSet::new(p, cap)?;
    let e = set.word_permutation(p, &words::gamma(p.size()));
    let es = set.word_permutation(p, &words::gamma_star(p.size()));
    Ok(group_order(&[e, es]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Shape;

    fn ext(s: &str) -> LinearExtension {
        s.parse().unwrap()
    }

    fn small_posets() -> Vec<Poset> {
        vec![
            Poset::chain(4),
            Poset::antichain(4),
            Poset::from_covers(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap(),
            Poset::from_covers(6, &[(0, 3), (1, 3), (1, 4), (2, 4), (2, 5)]).unwrap(),
            Shape::rectangle(2, 3).poset(),
            Shape::new(vec![3, 1], false).unwrap().poset(),
            Poset::chain(2).disjoint_union(&Poset::chain(3)),
        ]
    }

    #[test]
    fn tau_examples() {
        let chain = Poset::chain(2);
        assert_eq!(tau(&chain, &ext("0,1"), 1).unwrap(), ext("0,1"));
        let anti = Poset::antichain(2);
        assert_eq!(tau(&anti, &ext("0,1"), 1).unwrap(), ext("1,0"));
        assert!(matches!(tau(&anti, &ext("0,1"), 2), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(tau(&anti, &ext("0,1"), 0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn tau_is_an_involution() {
        for p in small_posets() {
            for f in p.linear_extensions() {
                for i in 1..p.size() {
                    let g = tau(&p, &f, i).unwrap();
                    assert_eq!(tau(&p, &g, i).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn promotion_examples() {
        let chain = Poset::chain(4);
        let f = ext("0,1,2,3");
        let (g, c) = promote_slide(&chain, &f);
        assert_eq!(g, f);
        assert_eq!(c, Chain(vec![0, 1, 2, 3]));

        let anti = Poset::antichain(3);
        let (g, c) = promote_slide(&anti, &ext("0,1,2"));
        assert_eq!(g, ext("1,2,0"));
        assert_eq!(c, Chain(vec![0]));
        assert_eq!(promote_word(&anti, &ext("0,1,2")), ext("1,2,0"));
        assert_eq!(dual_promote(&anti, &ext("1,2,0")), ext("0,1,2"));
    }

    #[test]
    fn block_rotation_reproduces_worked_example() {
        let blocks: Vec<Vec<char>> = ["cabd", "feg", "h", "jilk"]
            .iter()
            .map(|s| s.chars().collect())
            .collect();
        let out: String = rotate_blocks(&blocks).into_iter().collect();
        // (abdc)(egf)(h)(ilkj) concatenated
        assert_eq!(out, "abdcegfhilkj");
    }

    #[test]
    fn antichain_promotion_rotates() {
        let p = Poset::antichain(5);
        let f = ext("3,0,4,1,2");
        assert_eq!(promote_word(&p, &f), ext("0,4,1,2,3"));
        assert_eq!(promotion_blocks(&p, &f).len(), 1);
    }

    #[test]
    fn three_promotion_routes_agree() {
        for p in small_posets() {
            for f in p.linear_extensions() {
                let slide = promote_slide(&p, &f).0;
                assert_eq!(slide, promote_word(&p, &f));
                assert_eq!(slide, promote_blocks(&p, &f));
                assert_eq!(dual_promote(&p, &slide), f);
                assert_eq!(dual_promote_word(&p, &slide), f);
            }
        }
    }

    #[test]
    fn evacuation_routes_agree() {
        for p in small_posets() {
            for f in p.linear_extensions() {
                let e = evacuate(&p, &f);
                assert_eq!(e, evacuate_word(&p, &f));
                assert_eq!(evacuate(&p, &e), f);
                let es = dual_evacuate(&p, &f);
                assert_eq!(es, dual_evacuate_word(&p, &f));
                assert_eq!(dual_evacuate(&p, &es), f);
            }
        }
    }

    #[test]
    fn evacuation_examples() {
        let anti = Poset::antichain(4);
        for f in anti.linear_extensions() {
            let rev: Vec<usize> = f.word().iter().rev().copied().collect();
            assert_eq!(evacuate(&anti, &f).into_word(), rev);
        }
        let chain = Poset::chain(5);
        let f = chain.linear_extensions().next().unwrap();
        assert_eq!(evacuate(&chain, &f), f);
        assert_eq!(dual_evacuate(&chain, &f), f);
    }

    #[test]
    fn principal_chain_examples() {
        let chain = Poset::chain(4);
        let f = ext("0,1,2,3");
        assert_eq!(principal_chain(&chain, &f), Chain(vec![0, 1, 2, 3]));
        let anti = Poset::antichain(4);
        assert_eq!(principal_chain(&anti, &ext("2,0,3,1")), Chain(vec![1]));
        assert_eq!(trajectory(&Poset::antichain(2), &ext("0,1")), Chain(vec![0]));
        assert_eq!(trajectory(&chain, &f), Chain(vec![0, 1, 2, 3]));
    }

    /// `ρ(f) = {u_{0,p}, u_{1,p-1}, ..., u_{p-1,1}}` where `f∂^i = u_{i1}⋯u_{ip}`.
    #[test]
    fn principal_chain_matches_diagonal_oracle() {
        for p in small_posets() {
            let n = p.size();
            for f in p.linear_extensions() {
                let mut diag = Vec::new();
                let mut cur = f.clone();
                for i in 0..n {
                    diag.push(cur.word()[n - 1 - i]);
                    cur = promote_word(&p, &cur);
                }
                let mut diag: Vec<usize> = diag.into_iter().collect::<HashSet<_>>().into_iter().collect();
                let mut chain = principal_chain(&p, &f).0;
                diag.sort();
                chain.sort();
                assert_eq!(chain, diag);
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let rect = Shape::rectangle(2, 2).poset();
        let r = orbit_structure(&rect, Operator::Promotion, DEFAULT_EXTENSION_CAP).unwrap();
        assert_eq!(r.cycle_lengths, BTreeMap::from([(2, 1)]));
        let r = orbit_structure(&rect, Operator::PromotionPowP, DEFAULT_EXTENSION_CAP).unwrap();
        assert_eq!(r.cycle_lengths, BTreeMap::from([(1, 2)]));
        for p in small_posets() {
            let r = orbit_structure(&p, Operator::Evacuation, DEFAULT_EXTENSION_CAP).unwrap();
            assert!(r.cycle_lengths.keys().all(|&l| l <= 2));
            let total: usize = r.cycle_lengths.iter().map(|(l, c)| l * c).sum();
            assert_eq!(total, r.extensions);
        }
        assert!(matches!(
            orbit_structure(&Poset::antichain(5), Operator::Promotion, 10),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn dihedral_examples() {
        assert_eq!(dihedral_order(&Poset::chain(4), DEFAULT_EXTENSION_CAP).unwrap(), 1);
        assert_eq!(dihedral_order(&Shape::rectangle(2, 3).poset(), DEFAULT_EXTENSION_CAP).unwrap(), 2);
        assert_eq!(dihedral_order(&Shape::staircase(3).poset(), DEFAULT_EXTENSION_CAP).unwrap(), 4);
    }

    #[test]
    fn dihedral_order_is_twice_the_order_of_promotion_power() {
        for p in small_posets() {
            let set = ExtensionSet::new(&p, DEFAULT_EXTENSION_CAP).unwrap();
            let e = set.word_permutation(&p, &words::gamma(p.size()));
            let es = set.word_permutation(&p, &words::gamma_star(p.size()));
            let m = order(&then(&e, &es));
            let d = dihedral_order(&p, DEFAULT_EXTENSION_CAP).unwrap();
            if is_identity(&e) && is_identity(&es) {
                assert_eq!(d, 1);
            } else if is_identity(&e) || is_identity(&es) {
                assert_eq!(d, 2);
            } else {
                assert_eq!(d, 2 * m);
            }
        }
    }

    #[test]
    fn word_builders() {
        assert_eq!(words::gamma(4), vec![1, 2, 3, 1, 2, 1]);
        assert_eq!(words::gamma_star(4), vec![3, 2, 1, 3, 2, 3]);
        assert_eq!(words::domino_to_selfevac(6), vec![1, 3, 2, 1, 5, 4, 3, 2, 1]);
        assert_eq!(words::domino_to_selfevac(5), vec![1, 3, 2, 1]);
        assert_eq!(words::domino_pairs(6), vec![5, 3, 1]);
        assert_eq!(words::domino_pairs(5), vec![4, 2]);
        assert_eq!(words::psi(5, 2), vec![1, 2, 3]);
    }
}
