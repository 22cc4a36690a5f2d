//! Hook lengths, the tableau major index, `F(q) = Σ q^{maj(f)}`, fixed
//! points of powers of promotion and their evaluation at roots of unity.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{LinearExtension, Poset, Shape};
use crate::promo::{self, words, ExtensionSet};
use crate::qpoly::IntPoly;

/// Hook length of every cell, in cell id order.
pub fn hook_lengths(shape: &Shape) -> Result<Vec<usize>> {
    if shape.is_shifted() {
        return Err(Error::InvalidShape("hook lengths are defined here for unshifted shapes".into()));
    }
    let cols = shape.conjugate()?;
    Ok(shape
        .cells()
        .into_iter()
        .map(|(r, c)| {
            let arm = shape.rows()[r - 1] - c;
            let leg = cols.rows()[c - 1] - r;
            arm + leg + 1
        })
        .collect())
}

/// `Σ i` over entries `i` whose successor `i + 1` sits in a strictly lower
/// row.
pub fn maj_tableau(shape: &Shape, f: &LinearExtension) -> Result<usize> {
    let cells = shape.cells();
    if f.len() != cells.len() {
        return Err(Error::Precondition(format!(
            "extension has {} letters but {shape} has {} cells",
            f.len(),
            cells.len()
        )));
    }
    Ok(f.word()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| cells[w[1]].0 > cells[w[0]].0)
        .map(|(i, _)| i + 1)
        .sum())
}

/// `F(q)` by summing `q^{maj(f)}` over all standard fillings.
pub fn f_poly_sum(shape: &Shape, cap: usize) -> Result<IntPoly> {
    let p = shape.poset();
    let mut counts: Vec<i64> = Vec::new();
    for f in p.linear_extensions_capped(cap)? {
        let k = maj_tableau(shape, &f)?;
        if counts.len() <= k {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
    }
    Ok(IntPoly::from_i64s(&counts))
}

fn one_minus_q_pow(i: usize) -> IntPoly {
    IntPoly::one() - IntPoly::monomial(1, i)
}

/// `F(q) = q^{b(λ)} (1-q)(1-q^2)⋯(1-q^p) / ∏ (1-q^{h(t)})` with
/// `b(λ) = Σ (i-1) λ_i`; for an `m × n` rectangle `b = n·C(m,2)`.
pub fn f_poly_hook(shape: &Shape) -> Result<IntPoly> {
    let hooks = hook_lengths(shape)?;
    let b: usize = shape.rows().iter().enumerate().map(|(i, &l)| i * l).sum();
    let num = (1..=shape.size()).fold(IntPoly::monomial(1, b), |acc, i| acc * one_minus_q_pow(i));
    let den = hooks.iter().fold(IntPoly::one(), |acc, &h| acc * one_minus_q_pow(h));
    Ok(num.div_exact(&den))
}

/// `F(q)`: the hook formula for ordinary shapes, the sum otherwise.
pub fn f_poly(shape: &Shape, cap: usize) -> Result<IntPoly> {
    if shape.is_shifted() {
        f_poly_sum(shape, cap)
    } else {
        f_poly_hook(shape)
    }
}

/// The permutation of `∂` on `𝓛(P)`.
fn promotion_permutation(p: &Poset, cap: usize) -> Result<(ExtensionSet, Vec<usize>)> {
    let set = ExtensionSet::new(p, cap)?;
    let perm = set.word_permutation(p, &words::delta(p.size()));
    Ok((set, perm))
}

fn fixed_from_cycles(cycles: &BTreeMap<usize, usize>, d: usize) -> usize {
    cycles
        .iter()
        .filter(|(&len, _)| d % len == 0)
        .map(|(&len, &count)| len * count)
        .sum()
}

/// `e_d(P) = #{f : f∂^d = f}`.
pub fn fixed_count(p: &Poset, d: usize, cap: usize) -> Result<usize> {
    let (_, perm) = promotion_permutation(p, cap)?;
    Ok(fixed_from_cycles(&promo::cycle_type(&perm), d))
}

/// `e_1(P), ..., e_p(P)`.
pub fn fixed_counts(p: &Poset, cap: usize) -> Result<Vec<usize>> {
    let (_, perm) = promotion_permutation(p, cap)?;
    let cycles = promo::cycle_type(&perm);
    Ok((1..=p.size()).map(|d| fixed_from_cycles(&cycles, d)).collect())
}

/// `Φ_m(x)`, by dividing `x^m - 1` by `Φ_k` for the proper divisors `k`.
pub fn cyclotomic(m: usize) -> IntPoly {
    assert!(m > 0, "cyclotomic polynomials are indexed from 1");
    let mut poly = IntPoly::monomial(1, m) - IntPoly::one();
    for k in (1..m).filter(|k| m % k == 0) {
        poly = poly.div_exact(&cyclotomic(k));
    }
    poly
}

/// An element of `ℤ[x]/Φ_m(x)`, i.e. of `ℤ[ζ_m]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloElt {
    m: usize,
    coeffs: Vec<BigInt>,
}

impl CycloElt {
    pub fn from_poly(f: &IntPoly, m: usize) -> CycloElt {
        let phi = cyclotomic(m);
        let deg = phi.degree().expect("nonzero");
        let r = f.rem_monic(&phi);
        let coeffs = (0..deg).map(|i| r.coeff(i)).collect();
        CycloElt { m, coeffs }
    }

    /// `ζ_m^k`.
    pub fn zeta_pow(m: usize, k: usize) -> CycloElt {
        CycloElt::from_poly(&IntPoly::monomial(1, k % m), m)
    }

    pub fn order(&self) -> usize {
        self.m
    }

    /// Coefficients on `1, ζ, ..., ζ^{φ(m)-1}`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn as_poly(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.clone())
    }

    pub fn mul(&self, other: &CycloElt) -> CycloElt {
        assert_eq!(self.m, other.m);
        CycloElt::from_poly(&(self.as_poly() * other.as_poly()), self.m)
    }

    pub fn add(&self, other: &CycloElt) -> CycloElt {
        assert_eq!(self.m, other.m);
        CycloElt::from_poly(&(self.as_poly() + other.as_poly()), self.m)
    }

    /// `Some(c)` when the element is the rational integer `c`.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_default())
        } else {
            None
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let z = Complex64::from_polar(1.0, 2.0 * PI / self.m as f64);
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| z.powu(i as u32) * c.to_f64().unwrap_or(f64::NAN))
            .sum()
    }
}

impl fmt::Display for CycloElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod Φ_{})", self.as_poly().render("z", false), self.m)
    }
}

/// `F(ζ^d)` for a primitive `p`-th root of unity `ζ`, exactly.
///
/// `ζ^d` is a primitive `m`-th root of unity with `m = p / gcd(d, p)`, so
/// the value is `F mod Φ_m` read at that root; it is a rational integer
/// exactly when that residue is constant.
pub fn eval_at_root(f: &IntPoly, p: usize, d: usize) -> Result<BigInt> {
    if p == 0 {
        return Err(Error::Precondition("root order must be positive".into()));
    }
    let m = p / d.gcd(&p);
    let r = CycloElt::from_poly(f, m);
    r.as_integer()
        .ok_or_else(|| Error::NonIntegerValue(format!("F(ζ_{p}^{d}) = {r}")))
}

/// Floating point `F(e^{2πi d/p})`, as a sanity check for [`eval_at_root`].
pub fn eval_at_root_float(f: &IntPoly, p: usize, d: usize) -> Complex64 {
    let z = Complex64::from_polar(1.0, 2.0 * PI * (d % p.max(1)) as f64 / p as f64);
    f.coeffs()
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_f64().unwrap_or(f64::NAN))
}

/// `q^{-k} F(q)` with `q^k` the lowest power present: for an ordinary
/// shape `λ` this is `[p]_q! / ∏ [h(t)]_q`, the usual sieving polynomial.
pub fn normalized(f: &IntPoly) -> IntPoly {
    let low = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    IntPoly::from_coeffs(f.coeffs()[low..].to_vec())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SieveRow {
    pub d: usize,
    /// `e_d(P)`
    pub fixed: usize,
    /// `F(ζ^d)`
    #[serde(serialize_with = "crate::error::serialize_display")]
    pub f_value: BigInt,
    /// `(q^{-b} F)(ζ^d)`
    #[serde(serialize_with = "crate::error::serialize_display")]
    pub normalized_value: BigInt,
    pub pass: bool,
    pub normalized_pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SieveReport {
    pub shape: String,
    pub f_poly: String,
    /// power of `q` removed for the normalized comparison
    pub shift: usize,
    pub rows: Vec<SieveRow>,
}

impl SieveReport {
    /// `e_d = F(ζ^d)` for every `d`.
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    /// `e_d = (q^{-b} F)(ζ^d)` for every `d`.
    pub fn normalized_pass(&self) -> bool {
        self.rows.iter().all(|r| r.normalized_pass)
    }

    /// The values of `d` where `F(ζ^d)` differs from `e_d`.
    pub fn failures(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| !r.pass).map(|r| r.d).collect()
    }
}

/// Compares `e_d(P)` with `F(ζ^d)` and with the normalized polynomial at
/// `ζ^d`, for `d = 1..p`.
///
/// `F(ζ^d) = ζ^{db} X(ζ^d)` where `X = q^{-b} F`; for an `m × n` rectangle
/// `ζ^{db} = (-1)^{d(m-1)}`, so the two comparisons can only differ in sign
/// and only when `m` is even.
pub fn sieve_table(shape: &Shape, cap: usize) -> Result<SieveReport> {
    let p = shape.poset();
    let n = p.size();
    let f = f_poly(shape, cap)?;
    let x = normalized(&f);
    let shift = f.coeffs().len() - x.coeffs().len();
    let fixed = fixed_counts(&p, cap)?;
    let rows = (1..=n)
        .map(|d| {
            let f_value = eval_at_root(&f, n, d)?;
            let normalized_value = eval_at_root(&x, n, d)?;
            let e = BigInt::from(fixed[d - 1]);
            Ok(SieveRow {
                d,
                fixed: fixed[d - 1],
                pass: f_value == e,
                normalized_pass: normalized_value == e,
                f_value,
                normalized_value,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SieveReport {
        shape: shape.to_string(),
        f_poly: f.render("q", false),
        shift,
        rows,
    })
}

/// [`sieve_table`] for the `m × n` rectangle.
pub fn rectangle_sieve(m: usize, n: usize, cap: usize) -> Result<SieveReport> {
    sieve_table(&Shape::rectangle(m, n), cap)
}

/// Shape families with an explicit description of `∂^p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SpecialKind {
    Rectangle,
    /// `(k, k-1, ..., 1)`, unshifted.
    Staircase,
    /// Shifted `δ_k + δ_j` (`k ≥ j ≥ 0`): rows drop by 2 for `j` steps,
    /// then by 1 down to a last row of length 1, e.g. `4,2,1` or `5,3,2,1`.
    ShiftedDoubleStaircase,
    /// Shifted, rows drop by exactly 2, e.g. `6,4,2` or `5,3`.
    ShiftedTrapezoid,
}

impl SpecialKind {
    pub fn name(self) -> &'static str {
        match self {
            SpecialKind::Rectangle => "rectangle",
            SpecialKind::Staircase => "staircase",
            SpecialKind::ShiftedDoubleStaircase => "shifted-double-staircase",
            SpecialKind::ShiftedTrapezoid => "shifted-trapezoid",
        }
    }

    pub fn from_name(s: &str) -> Option<SpecialKind> {
        [
            SpecialKind::Rectangle,
            SpecialKind::Staircase,
            SpecialKind::ShiftedDoubleStaircase,
            SpecialKind::ShiftedTrapezoid,
        ]
        .into_iter()
        .find(|k| k.name() == s || k.name().replace('-', "_") == s)
    }

    pub fn matches(self, shape: &Shape) -> bool {
        let rows = shape.rows();
        let drops: Vec<usize> = rows.windows(2).map(|w| w[0] - w[1]).collect();
        match self {
            SpecialKind::Rectangle => shape.rectangle_dims().is_some(),
            SpecialKind::Staircase => !shape.is_shifted() && *shape == Shape::staircase(rows.len()),
            SpecialKind::ShiftedDoubleStaircase => {
                let twos = drops.iter().take_while(|&&d| d == 2).count();
                shape.is_shifted()
                    && drops[twos..].iter().all(|&d| d == 1)
                    && (rows.last() == Some(&1) || (twos == drops.len() && rows.last() == Some(&2)))
            }
            SpecialKind::ShiftedTrapezoid => shape.is_shifted() && drops.iter().all(|&d| d == 2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialReport {
    pub kind: SpecialKind,
    pub shape: String,
    pub extensions: usize,
    /// `f∂^p = f` (or `f^t` for staircases) for every extension
    pub promotion_power_ok: bool,
    /// the rotated-complement formula for `fε` (rectangles only)
    pub evacuation_formula_ok: Option<bool>,
    pub dihedral_order: usize,
    /// the order claimed for the family: 1 for chains, 4 for staircases,
    /// 2 otherwise
    pub expected_dihedral_order: usize,
}

impl SpecialReport {
    pub fn pass(&self) -> bool {
        self.promotion_power_ok
            && self.evacuation_formula_ok != Some(false)
            && self.dihedral_order == self.expected_dihedral_order
    }
}

/// Transposes a filling of a self-conjugate shape.
fn transpose(shape: &Shape, f: &LinearExtension) -> LinearExtension {
    let cells = shape.cells();
    let word = f
        .word()
        .iter()
        .map(|&t| {
            let (r, c) = cells[t];
            shape.id_of((c, r)).expect("self-conjugate shape")
        })
        .collect();
    LinearExtension::from_word_unchecked(word)
}

/// `(fε)(i, j) = p + 1 - f(m+1-i, n+1-j)` as a filling.
fn rectangle_evacuation(shape: &Shape, f: &LinearExtension) -> LinearExtension {
    let (m, n) = shape.rectangle_dims().expect("rectangle");
    let size = m * n;
    let word = f
        .word()
        .iter()
        .rev()
        .map(|&t| {
            let (r, c) = shape.cells()[t];
            shape.id_of((m + 1 - r, n + 1 - c)).expect("cell")
        })
        .collect::<Vec<_>>();
    debug_assert_eq!(word.len(), size);
    LinearExtension::from_word_unchecked(word)
}

pub fn special_shape_check(shape: &Shape, kind: SpecialKind, cap: usize) -> Result<SpecialReport> {
    if !kind.matches(shape) {
        return Err(Error::InvalidShape(format!("{shape} is not a {}", kind.name())));
    }
    let p = shape.poset();
    let n = p.size();
    let set = ExtensionSet::new(&p, cap)?;
    let power = words::power(&words::delta(n), n);
    let promotion_power_ok = set.extensions().iter().all(|f| {
        let g = promo::apply_taus(&p, f, &power).expect("valid generators");
        if kind == SpecialKind::Staircase {
            g == transpose(shape, f)
        } else {
            g == *f
        }
    });
    let evacuation_formula_ok = (kind == SpecialKind::Rectangle).then(|| {
        set.extensions()
            .iter()
            .all(|f| promo::evacuate(&p, f) == rectangle_evacuation(shape, f))
    });
    let e = set.word_permutation(&p, &words::gamma(n));
    let es = set.word_permutation(&p, &words::gamma_star(n));
    let dihedral_order = promo::group_order(&[e, es]);
    let expected_dihedral_order = if p.is_chain() {
        1
    } else if kind == SpecialKind::Staircase {
        4
    } else {
        2
    };
    Ok(SpecialReport {
        kind,
        shape: shape.to_string(),
        extensions: set.len(),
        promotion_power_ok,
        evacuation_formula_ok,
        dihedral_order,
        expected_dihedral_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::promo::DEFAULT_EXTENSION_CAP as CAP;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn shifted(rows: &[usize]) -> Shape {
        Shape::new(rows.to_vec(), true).unwrap()
    }

    #[test]
    fn hook_examples() {
        assert_eq!(hook_lengths(&Shape::rectangle(1, 1)).unwrap(), vec![1]);
        assert_eq!(hook_lengths(&Shape::rectangle(2, 2)).unwrap(), vec![3, 2, 2, 1]);
        assert!(hook_lengths(&shifted(&[2, 1])).is_err());
    }

    #[test]
    fn rectangle_hooks_match_bracket_product() {
        for m in 1..=4 {
            for n in m..=5 {
                let mut hooks = hook_lengths(&Shape::rectangle(m, n)).unwrap();
                hooks.sort();
                // [i] appears min(i, m, n+m-i) times
                let mut want = Vec::new();
                for i in 1..n + m {
                    want.extend(std::iter::repeat(i).take(i.min(m).min(n + m - i)));
                }
                assert_eq!(hooks, want, "{m}x{n}");
            }
        }
    }

    #[test]
    fn maj_examples() {
        let shape = Shape::rectangle(3, 4);
        let p = shape.poset();
        let rows = [[1, 3, 4, 8], [2, 5, 6, 11], [7, 9, 10, 12]];
        let labels: Vec<usize> = rows.iter().flatten().copied().collect();
        let f = LinearExtension::from_labels(&p, &labels).unwrap();
        // 1, 4, 6, 8 and 11 are each followed by an entry in a lower row
        assert_eq!(maj_tableau(&shape, &f).unwrap(), 30);

        let reading = p.linear_extensions().next().unwrap();
        assert_eq!(maj_tableau(&shape, &reading).unwrap(), 4 + 8);
        let row = Shape::rectangle(1, 5);
        let f = row.poset().linear_extensions().next().unwrap();
        assert_eq!(maj_tableau(&row, &f).unwrap(), 0);
    }

    #[test]
    fn f_poly_examples() {
        assert_eq!(f_poly_hook(&Shape::rectangle(2, 2)).unwrap(), poly(&[0, 0, 1, 0, 1]));
        assert_eq!(f_poly_sum(&Shape::rectangle(2, 2), CAP).unwrap(), poly(&[0, 0, 1, 0, 1]));
        assert_eq!(f_poly_hook(&Shape::rectangle(1, 6)).unwrap(), IntPoly::one());
        assert_eq!(f_poly_sum(&Shape::rectangle(1, 6), CAP).unwrap(), IntPoly::one());
    }

    #[test]
    fn both_f_routes_agree() {
        for m in 1..=4 {
            for n in 1..=5 {
                if m * n > 20 || (m * n > 12 && m.min(n) > 2) {
                    continue;
                }
                let s = Shape::rectangle(m, n);
                let f = f_poly_hook(&s).unwrap();
                assert_eq!(f, f_poly_sum(&s, CAP).unwrap(), "{m}x{n}");
                assert_eq!(f.eval_int(&BigInt::from(1)), BigInt::from(s.poset().count_extensions()));
            }
        }
        for rows in [vec![3, 1], vec![3, 2, 1], vec![4, 2, 1]] {
            let s = Shape::new(rows, false).unwrap();
            assert_eq!(f_poly_hook(&s).unwrap(), f_poly_sum(&s, CAP).unwrap());
        }
    }

    #[test]
    fn fixed_count_examples() {
        let p = Shape::rectangle(2, 2).poset();
        assert_eq!(fixed_count(&p, 1, CAP).unwrap(), 0);
        assert_eq!(fixed_count(&p, 2, CAP).unwrap(), 2);
        let p = Shape::rectangle(2, 3).poset();
        assert_eq!(fixed_count(&p, 6, CAP).unwrap(), 5);
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), poly(&[-1, 1]));
        assert_eq!(cyclotomic(2), poly(&[1, 1]));
        assert_eq!(cyclotomic(4), poly(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), poly(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), poly(&[1, 0, -1, 0, 1]));
        let z = CycloElt::zeta_pow(5, 1);
        let mut acc = CycloElt::from_poly(&IntPoly::one(), 5);
        for _ in 0..5 {
            acc = acc.mul(&z);
        }
        assert_eq!(acc.as_integer(), Some(BigInt::from(1)));
    }

    #[test]
    fn eval_at_root_examples() {
        let f = poly(&[0, 0, 1, 0, 1]);
        assert_eq!(eval_at_root(&f, 4, 2).unwrap(), BigInt::from(2));
        assert_eq!(eval_at_root(&f, 4, 1).unwrap(), BigInt::from(0));
        assert_eq!(eval_at_root(&f, 4, 4).unwrap(), BigInt::from(2));
        // ζ_4^2 = -1
        assert_eq!(eval_at_root(&poly(&[0, 1]), 4, 2).unwrap(), BigInt::from(-1));
        assert!(matches!(eval_at_root(&poly(&[0, 1]), 4, 1), Err(Error::NonIntegerValue(_))));
    }

    #[test]
    fn exact_and_float_evaluation_agree() {
        let f = f_poly_hook(&Shape::rectangle(3, 4)).unwrap();
        for d in 1..=12 {
            let exact = eval_at_root(&f, 12, d).unwrap().to_f64().unwrap();
            let approx = eval_at_root_float(&f, 12, d);
            assert!((approx.re - exact).abs() < 1e-6 && approx.im.abs() < 1e-6);
        }
    }

    #[test]
    fn sieve_small_rectangles() {
        for (m, n) in [(1, 3), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
            let r = rectangle_sieve(m, n, CAP).unwrap();
            assert!(r.normalized_pass(), "{r:?}");
            // the q^{n C(m,2)} prefactor only matters for an even number of rows
            if m % 2 == 1 {
                assert!(r.pass(), "{r:?}");
            }
        }
        // the 2 x 3 rectangle: e_3 = 3, but F(-1) = -3
        let r = rectangle_sieve(2, 3, CAP).unwrap();
        assert_eq!(r.failures(), vec![3]);
        assert_eq!(r.rows[2].fixed, 3);
        assert_eq!(r.rows[2].f_value, BigInt::from(-3));
        assert_eq!(r.shift, 3);
    }

    #[test]
    fn orbit_census_is_consistent_with_fixed_counts() {
        let p = Shape::rectangle(2, 4).poset();
        let set = ExtensionSet::new(&p, CAP).unwrap();
        let perm = set.word_permutation(&p, &words::delta(8));
        let cycles = promo::cycle_type(&perm);
        assert!(cycles.keys().all(|l| 8 % l == 0));
        let total: usize = cycles.iter().map(|(l, c)| l * c).sum();
        assert_eq!(total, set.len());
        let fixed = fixed_counts(&p, CAP).unwrap();
        // Burnside: orbits = (1/p) Σ_d e_d
        let orbits: usize = cycles.values().sum();
        assert_eq!(fixed.iter().sum::<usize>(), 8 * orbits);
    }

    #[test]
    fn special_kinds() {
        use SpecialKind::*;
        assert!(Rectangle.matches(&Shape::rectangle(2, 3)));
        assert!(Staircase.matches(&Shape::staircase(3)));
        assert!(!Staircase.matches(&shifted(&[3, 2, 1])));
        for rows in [&[2, 1][..], &[3, 2, 1], &[4, 2, 1], &[5, 3, 2, 1], &[4, 2]] {
            assert!(ShiftedDoubleStaircase.matches(&shifted(rows)), "{rows:?}");
        }
        for rows in [&[3, 2][..], &[5, 2, 1], &[4, 3]] {
            assert!(!ShiftedDoubleStaircase.matches(&shifted(rows)), "{rows:?}");
        }
        assert!(ShiftedTrapezoid.matches(&shifted(&[6, 4, 2])));
        assert!(!ShiftedTrapezoid.matches(&shifted(&[4, 2, 1])));
        assert_eq!(SpecialKind::from_name("shifted_trapezoid"), Some(ShiftedTrapezoid));
    }

    #[test]
    fn special_shape_examples() {
        // both 2 x 2 tableaux are self-evacuating, so ε = ε* = id
        let r = special_shape_check(&Shape::rectangle(2, 2), SpecialKind::Rectangle, CAP).unwrap();
        assert!(r.promotion_power_ok && r.evacuation_formula_ok == Some(true));
        assert_eq!((r.dihedral_order, r.expected_dihedral_order), (1, 2));
        let r = special_shape_check(&Shape::rectangle(2, 3), SpecialKind::Rectangle, CAP).unwrap();
        assert!(r.pass(), "{r:?}");
        let r = special_shape_check(&Shape::staircase(3), SpecialKind::Staircase, CAP).unwrap();
        assert_eq!(r.extensions, 16);
        assert!(r.pass() && r.dihedral_order == 4, "{r:?}");
        let r = special_shape_check(&shifted(&[2, 1]), SpecialKind::ShiftedDoubleStaircase, CAP).unwrap();
        assert!(r.pass());
        for (rows, kind) in [
            (&[4, 2, 1][..], SpecialKind::ShiftedDoubleStaircase),
            (&[3, 2, 1], SpecialKind::ShiftedDoubleStaircase),
            (&[5, 3, 1], SpecialKind::ShiftedTrapezoid),
            (&[4, 2], SpecialKind::ShiftedTrapezoid),
        ] {
            let r = special_shape_check(&shifted(rows), kind, CAP).unwrap();
            assert!(r.pass(), "{r:?}");
        }
        assert!(special_shape_check(&Shape::rectangle(2, 3), SpecialKind::Staircase, CAP).is_err());
    }
}
