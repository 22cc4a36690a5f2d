//! The Hecke algebra `H_n(q)` of the symmetric group in the `T_w` basis.
//!
//! Permutations are 1-based one-line words; `uv` is `u ∘ v`, so right
//! multiplication by `s_k` swaps positions `k, k+1` and left multiplication
//! swaps the values `k, k+1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::promo::words;
use crate::qpoly::{IntPoly, Rat, RatFunc};

/// Largest `n` accepted by [`evacuation_element`] unless a larger cap is
/// passed explicitly.
pub const DEFAULT_HECKE_CAP: usize = 7;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((1..=n).collect())
    }

    /// `w_0 = n, n-1, ..., 1`.
    pub fn longest(n: usize) -> Perm {
        Perm((1..=n).rev().collect())
    }

    /// The adjacent transposition `s_i = (i, i+1)`.
    pub fn s(n: usize, i: usize) -> Result<Perm> {
        check_gen(n, i)?;
        let mut w = Perm::identity(n);
        w.0.swap(i - 1, i);
        Ok(w)
    }

    pub fn from_one_line(word: Vec<usize>) -> Result<Perm> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &a in &word {
            if a == 0 || a > n || seen[a] {
                return Err(Error::Precondition(format!("{word:?} is not a permutation of 1..={n}")));
            }
            seen[a] = true;
        }
        Ok(Perm(word))
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `ℓ(w)`, the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// `κ(w)`, the number of cycles (fixed points included).
    pub fn cycles(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] - 1;
            }
        }
        count
    }

    /// `ŵ = a_n ⋯ a_1`.
    pub fn reversal(&self) -> Perm {
        Perm(self.0.iter().rev().copied().collect())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&j| self.0[j - 1]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (i, &a) in self.0.iter().enumerate() {
            inv[a - 1] = i + 1;
        }
        Perm(inv)
    }

    /// `w s_k`: swaps positions `k, k+1`.
    pub fn mul_s_right(&self, k: usize) -> Perm {
        let mut w = self.0.clone();
        w.swap(k - 1, k);
        Perm(w)
    }

    /// `s_k w`: swaps the values `k, k+1`.
    pub fn mul_s_left(&self, k: usize) -> Perm {
        Perm(
            self.0
                .iter()
                .map(|&a| match a {
                    a if a == k => k + 1,
                    a if a == k + 1 => k,
                    a => a,
                })
                .collect(),
        )
    }

    /// A reduced word `(a_1, ..., a_r)` with `w = s_{a_1} ⋯ s_{a_r}`, by
    /// bubble-sorting the one-line word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        let mut out = Vec::new();
        // sorting w by adjacent swaps records w s_{b_1} ⋯ s_{b_r} = id
        loop {
            let Some(k) = (1..w.len()).find(|&k| w[k - 1] > w[k]) else {
                break;
            };
            w.swap(k - 1, k);
            out.push(k);
        }
        out.reverse();
        out
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut used = vec![false; n + 1];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if cur.len() == n {
                out.push(Perm(cur.clone()));
                return;
            }
            for a in 1..=n {
                if !used[a] {
                    used[a] = true;
                    cur.push(a);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[a] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

/// Digits for `n ≤ 9` (`2413`), comma separated otherwise.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({self})")
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        let s = s.trim();
        let parse_err = |m: String| Error::Parse { line: 1, message: m };
        let word = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|e| parse_err(format!("{t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| parse_err(format!("bad permutation digit {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Perm::from_one_line(word)
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn check_gen(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}

/// Coefficient rings for [`HeckeElt`]: commutative rings containing `q`.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn q() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
}

impl Coeff for IntPoly {
    fn zero() -> Self {
        IntPoly::zero()
    }
    fn one() -> Self {
        IntPoly::one()
    }
    fn q() -> Self {
        IntPoly::x()
    }
    fn is_zero(&self) -> bool {
        IntPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Coeff for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn q() -> Self {
        RatFunc::q()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// `Σ c_w T_w` with no stored zero coefficients.
#[derive(Clone, PartialEq)]
pub struct HeckeElt<C: Coeff = RatFunc> {
    n: usize,
    terms: BTreeMap<Perm, C>,
}

impl<C: Coeff> fmt::Debug for HeckeElt<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<C: Coeff> HeckeElt<C> {
    pub fn zero(n: usize) -> Self {
        HeckeElt {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `T_id`.
    pub fn one(n: usize) -> Self {
        Self::basis(Perm::identity(n))
    }

    /// `T_w`.
    pub fn basis(w: Perm) -> Self {
        Self::term(w, C::one())
    }

    pub fn term(w: Perm, c: C) -> Self {
        let mut e = Self::zero(w.n());
        e.add_term(w, c);
        e
    }

    /// `T_i`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Ok(Self::basis(Perm::s(n, i)?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `c_w`, zero when absent.
    pub fn coeff(&self, w: &Perm) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &C)> {
        self.terms.iter()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Perm, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&C::zero().sub(&C::one())))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a.mul(c));
        }
        out
    }

    /// `h · T_i`.
    pub fn mul_gen_right(&self, i: usize) -> Result<Self> {
        check_gen(self.n, i)?;
        let q = C::q();
        let qm1 = q.sub(&C::one());
        let mut out = Self::zero(self.n);
        for (u, c) in &self.terms {
            let us = u.mul_s_right(i);
            if u.0[i - 1] < u.0[i] {
                out.add_term(us, c.clone());
            } else {
                out.add_term(us, c.mul(&q));
                out.add_term(u.clone(), c.mul(&qm1));
            }
        }
        Ok(out)
    }

    /// `T_i · h`.
    pub fn mul_gen_left(&self, i: usize) -> Result<Self> {
        check_gen(self.n, i)?;
        let q = C::q();
        let qm1 = q.sub(&C::one());
        let mut out = Self::zero(self.n);
        for (u, c) in &self.terms {
            let su = u.mul_s_left(i);
            let pos_i = u.0.iter().position(|&a| a == i).expect("value");
            let pos_next = u.0.iter().position(|&a| a == i + 1).expect("value");
            if pos_i < pos_next {
                out.add_term(su, c.clone());
            } else {
                out.add_term(su, c.mul(&q));
                out.add_term(u.clone(), c.mul(&qm1));
            }
        }
        Ok(out)
    }

    /// `h · T_{a_1} ⋯ T_{a_r}`.
    pub fn mul_word_right(&self, word: &[usize]) -> Result<Self> {
        word.iter().try_fold(self.clone(), |acc, &i| acc.mul_gen_right(i))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for (v, c) in &other.terms {
            let prod = self
                .mul_word_right(&v.reduced_word())
                .expect("reduced words use valid generators");
            out = out.add(&prod.scale(c));
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> HeckeElt<D> {
        let mut out = HeckeElt::<D>::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }
}

/// `T_w` as the product of generators along a reduced word of `w`.
pub fn t_w<C: Coeff>(w: &Perm) -> HeckeElt<C> {
    HeckeElt::one(w.n())
        .mul_word_right(&w.reduced_word())
        .expect("valid generators")
}

/// `T_{a_1} ⋯ T_{a_r}` for an arbitrary word.
pub fn t_word<C: Coeff>(n: usize, word: &[usize]) -> Result<HeckeElt<C>> {
    HeckeElt::one(n).mul_word_right(word)
}

fn q_plus_1() -> RatFunc {
    RatFunc::from_poly(IntPoly::from_i64s(&[1, 1]))
}

/// `E_i = (q - 1 - 2T_i) / (q + 1)`.
pub fn e_i(n: usize, i: usize) -> Result<HeckeElt> {
    let inv = q_plus_1().inv().expect("q+1 is nonzero");
    let qm1 = RatFunc::from_poly(IntPoly::from_i64s(&[-1, 1]));
    let mut e = HeckeElt::term(Perm::identity(n), &qm1 * &inv);
    e.add_term(Perm::s(n, i)?, &RatFunc::from_int(-2) * &inv);
    Ok(e)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "Hecke algebra rank n",
            cap,
        });
    }
    Ok(())
}

/// `E_1E_2⋯E_{n-1} · E_1⋯E_{n-2} ⋯ E_1E_2 · E_1 = Σ c_w(q) T_w`.
///
/// Expands `∏ (q - 1 - 2T_i)` over `ℤ[q]` and divides by `(q+1)^{C(n,2)}`
/// at the end.
pub fn evacuation_element(n: usize, cap: usize) -> Result<HeckeElt> {
    check_cap(n, cap)?;
    let qm1 = IntPoly::from_i64s(&[-1, 1]);
    let minus2 = IntPoly::constant(-2);
    let mut acc = HeckeElt::<IntPoly>::one(n);
    for i in words::gamma(n) {
        acc = acc.scale(&qm1).add(&acc.mul_gen_right(i)?.scale(&minus2));
    }
    let den = IntPoly::from_i64s(&[1, 1]).pow((n * n.saturating_sub(1) / 2) as u32);
    Ok(acc.map_coeffs(|c| RatFunc::new(c.clone(), den.clone()).expect("nonzero denominator")))
}

/// The same product, computed factor by factor over `ℚ(q)`.
pub fn evacuation_element_generic(n: usize, cap: usize) -> Result<HeckeElt> {
    check_cap(n, cap)?;
    let mut acc = HeckeElt::one(n);
    for i in words::gamma(n) {
        acc = acc.mul(&e_i(n, i)?);
    }
    Ok(acc)
}

/// `⟨g, h⟩` with `⟨T_u, T_v⟩ = q^{ℓ(u)} δ_{uv}`.
pub fn scalar_product(g: &HeckeElt, h: &HeckeElt) -> RatFunc {
    let mut out = RatFunc::zero();
    for (w, c) in g.terms() {
        let d = h.coeff(w);
        if !d.is_zero() {
            let ql = RatFunc::from_poly(IntPoly::monomial(1, w.length()));
            out = &out + &(&(c * &d) * &ql);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CidCheck {
    pub n: usize,
    pub actual: String,
    pub expected: String,
    pub pass: bool,
}

/// `c_id(q) = ((q-1)/(q+1))^{⌊n/2⌋}`.
pub fn check_identity_coefficient(n: usize, cap: usize) -> Result<CidCheck> {
    let elt = evacuation_element(n, cap)?;
    let actual = elt.coeff(&Perm::identity(n));
    let ratio = RatFunc::new(IntPoly::from_i64s(&[-1, 1]), IntPoly::from_i64s(&[1, 1]))?;
    let expected = ratio.pow((n / 2) as i32)?;
    Ok(CidCheck {
        n,
        pass: actual == expected,
        actual: actual.to_string(),
        expected: expected.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivRow {
    pub w: Perm,
    pub c_w: String,
    /// `n - κ(ŵ)`
    pub bound: usize,
    /// order of vanishing of `c_w` at `q = 1`; `None` when `c_w = 0`
    pub order: Option<usize>,
    pub pass: bool,
    /// `order == bound`
    pub tight: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivReport {
    pub n: usize,
    pub rows: Vec<DivRow>,
    /// every denominator is a power of `q + 1`
    pub denominators_are_q_plus_1_powers: bool,
}

impl DivReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn row(&self, w: &Perm) -> Option<&DivRow> {
        self.rows.iter().find(|r| &r.w == w)
    }
}

/// `(q-1)^{n - κ(ŵ)}` divides `c_w(q)` for every `w`.
pub fn check_divisibility(n: usize, cap: usize) -> Result<DivReport> {
    let elt = evacuation_element(n, cap)?;
    let mut denominators_are_q_plus_1_powers = true;
    let rows = Perm::all(n)
        .into_iter()
        .map(|w| {
            let c = elt.coeff(&w);
            denominators_are_q_plus_1_powers &= c.denominator_is_power_of_q_plus_1();
            let bound = n - w.reversal().cycles();
            let order = c.qm1_order();
            DivRow {
                pass: c.divisible_by_qm1(bound),
                tight: order == Some(bound),
                c_w: c.to_string(),
                w,
                bound,
                order,
            }
        })
        .collect();
    Ok(DivReport {
        n,
        rows,
        denominators_are_q_plus_1_powers,
    })
}

/// `c_w(1)` for every `w` in the support.
pub fn specialize_at_one(elt: &HeckeElt) -> Result<BTreeMap<Perm, Rat>> {
    let one = Rat::from_integer(BigInt::from(1));
    elt.terms()
        .map(|(w, c)| Ok((w.clone(), c.eval(&one)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    type H = HeckeElt<RatFunc>;

    #[test]
    fn perm_basics() {
        let w = p("2413");
        assert_eq!(w.length(), 3);
        assert_eq!(p("4132").cycles(), 2);
        assert_eq!(p("2314").reversal(), p("4132"));
        assert_eq!(p("2314").reversal(), p("2314").compose(&Perm::longest(4)));
        assert_eq!(w.compose(&w.inverse()), Perm::identity(4));
        assert!(Perm::from_one_line(vec![1, 1]).is_err());
        assert_eq!(Perm::all(4).len(), 24);
        for w in Perm::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let built = word.iter().fold(Perm::identity(4), |u, &k| u.mul_s_right(k));
            assert_eq!(built, w);
        }
        assert_eq!(p("21").to_string(), "21");
    }

    #[test]
    fn generator_multiplication() {
        let t1 = H::generator(3, 1).unwrap();
        assert_eq!(H::one(3).mul_gen_right(1).unwrap(), t1);
        let sq = t1.mul_gen_right(1).unwrap();
        let mut want = H::term(Perm::identity(3), RatFunc::q());
        want.add_term(p("213"), &RatFunc::q() - &RatFunc::one());
        assert_eq!(sq, want);
        assert!(H::one(3).mul_gen_right(3).is_err());
    }

    #[test]
    fn quadratic_commuting_and_braid_relations() {
        for n in 2..=5 {
            let one = H::one(n);
            for i in 1..n {
                let ti = H::generator(n, i).unwrap();
                // (T_i + 1)(T_i - q) = 0
                let a = ti.add(&one);
                let b = ti.sub(&one.scale(&RatFunc::q()));
                assert!(a.mul(&b).is_zero());
                for j in 1..n {
                    let tj = H::generator(n, j).unwrap();
                    if i.abs_diff(j) >= 2 {
                        assert_eq!(ti.mul(&tj), tj.mul(&ti));
                    }
                    if j == i + 1 {
                        assert_eq!(ti.mul(&tj).mul(&ti), tj.mul(&ti).mul(&tj));
                    }
                }
            }
        }
    }

    #[test]
    fn t_w_is_independent_of_reduced_word() {
        let a: H = t_word(3, &[1, 2, 1]).unwrap();
        let b: H = t_word(3, &[2, 1, 2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, H::basis(Perm::longest(3)));
        assert_eq!(t_w::<RatFunc>(&Perm::identity(4)), H::one(4));
    }

    #[test]
    fn left_and_right_multiplication_are_consistent() {
        let g: H = H::basis(p("2413")).add(&H::basis(p("3142")).scale(&RatFunc::q()));
        for i in 1..4 {
            let ti = H::generator(4, i).unwrap();
            assert_eq!(g.mul_gen_left(i).unwrap(), ti.mul(&g));
        }
    }

    #[test]
    fn e_i_properties() {
        for n in 2..=6 {
            for i in 1..n {
                let e = e_i(n, i).unwrap();
                assert_eq!(e.mul(&e), H::one(n));
                for j in i + 2..n {
                    let f = e_i(n, j).unwrap();
                    assert_eq!(e.mul(&f), f.mul(&e));
                }
            }
        }
        assert_eq!(e_i(3, 1).unwrap().coeff(&Perm::identity(3)), rf("(q-1)/(q+1)"));
    }

    #[test]
    fn s4_table() {
        let table = [
            ("1234", "(q-1)^2/(q+1)^2"),
            ("1243", "-2(q-1)^3/(q+1)^4"),
            ("1324", "-16q(q-1)(q^2+1)/(q+1)^6"),
            ("1342", "4(q-1)^2/(q+1)^4"),
            ("1423", "4(q-1)^2/(q+1)^4"),
            ("1432", "-8(q-1)^3/(q+1)^6"),
            ("2134", "-2(q-1)^3/(q+1)^4"),
            ("2143", "4(q-1)^2/(q+1)^4"),
            ("2314", "-4(q-1)^4/(q+1)^6"),
            ("2341", "-8(q-1)/(q+1)^4"),
            ("2413", "0"),
            ("2431", "16(q-1)^2/(q+1)^6"),
            ("3124", "-4(q-1)^4/(q+1)^6"),
            ("3142", "0"),
            ("3214", "8(q-1)^3/(q+1)^6"),
            ("3241", "0"),
            ("3412", "16(q-1)^2/(q+1)^6"),
            ("3421", "-32(q-1)/(q+1)^6"),
            ("4123", "-8(q-1)/(q+1)^4"),
            ("4132", "16(q-1)^2/(q+1)^6"),
            ("4213", "0"),
            ("4231", "-32(q-1)/(q+1)^6"),
            ("4312", "-32(q-1)/(q+1)^6"),
            ("4321", "64/(q+1)^6"),
        ];
        let e = evacuation_element(4, DEFAULT_HECKE_CAP).unwrap();
        for (w, c) in table {
            assert_eq!(e.coeff(&p(w)), rf(c), "c_{w}");
        }
        assert_eq!(e.support_len(), 20);
    }

    #[test]
    fn fast_and_generic_expansions_agree() {
        for n in 1..=4 {
            assert_eq!(
                evacuation_element(n, DEFAULT_HECKE_CAP).unwrap(),
                evacuation_element_generic(n, DEFAULT_HECKE_CAP).unwrap()
            );
        }
    }

    #[test]
    fn evacuation_element_is_an_involution() {
        let e = evacuation_element(4, DEFAULT_HECKE_CAP).unwrap();
        assert_eq!(e.mul(&e), H::one(4));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(evacuation_element(8, 7), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn specialization_at_one() {
        for n in 2..=5 {
            let e = evacuation_element(n, DEFAULT_HECKE_CAP).unwrap();
            let vals = specialize_at_one(&e).unwrap();
            let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
            for (w, v) in vals {
                let want = if w == Perm::longest(n) { sign } else { 0 };
                assert_eq!(v, Rat::from_integer(BigInt::from(want)), "n={n} w={w}");
            }
        }
    }

    #[test]
    fn cid_small_cases() {
        assert_eq!(evacuation_element(2, 7).unwrap().coeff(&p("12")), rf("(q-1)/(q+1)"));
        for n in 2..=5 {
            assert!(check_identity_coefficient(n, DEFAULT_HECKE_CAP).unwrap().pass, "n={n}");
        }
    }

    #[test]
    fn divisibility_report() {
        let r = check_divisibility(4, DEFAULT_HECKE_CAP).unwrap();
        assert!(r.pass() && r.denominators_are_q_plus_1_powers);
        let row = r.row(&p("2314")).unwrap();
        assert_eq!((row.bound, row.order, row.tight), (2, Some(4), false));
        let row = r.row(&p("4321")).unwrap();
        assert_eq!(row.bound, 0);
        assert_eq!(r.row(&p("2413")).unwrap().order, None);
    }

    #[test]
    fn scalar_product_basics() {
        assert_eq!(scalar_product(&H::one(3), &H::one(3)), RatFunc::one());
        let w0 = H::basis(Perm::longest(3));
        assert_eq!(scalar_product(&w0, &w0), rf("q^3"));
    }

    fn small_elt() -> impl Strategy<Value = H> {
        prop::collection::vec((0usize..24, -3i64..=3, 0usize..3), 1..5).prop_map(|terms| {
            let perms = Perm::all(4);
            let mut e = H::zero(4);
            for (w, c, d) in terms {
                let coeff = RatFunc::from_poly(IntPoly::monomial(c, d));
                e.add_term(perms[w].clone(), coeff);
            }
            e
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn generators_are_self_adjoint(g in small_elt(), h in small_elt(), i in 1usize..4) {
            let lhs = scalar_product(&g.mul_gen_left(i).unwrap(), &h);
            let rhs = scalar_product(&g, &h.mul_gen_left(i).unwrap());
            prop_assert_eq!(lhs, rhs);
            let lhs = scalar_product(&g.mul_gen_right(i).unwrap(), &h);
            let rhs = scalar_product(&g, &h.mul_gen_right(i).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn conjugation_by_e_i_preserves_identity_coefficient(g in small_elt(), i in 1usize..4) {
            let e = e_i(4, i).unwrap();
            let one = H::one(4);
            prop_assert_eq!(scalar_product(&e.mul(&g).mul(&e), &one), scalar_product(&g, &one));
        }

        #[test]
        fn lengths_add(a in 0usize..24, b in 0usize..24) {
            let perms = Perm::all(4);
            let (u, v) = (&perms[a], &perms[b]);
            let uv = u.compose(v);
            if uv.length() == u.length() + v.length() {
                prop_assert_eq!(t_w::<RatFunc>(u).mul(&t_w(v)), t_w(&uv));
            }
        }
    }
}
