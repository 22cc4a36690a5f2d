//! Exact univariate polynomials over ℤ and rational functions over ℚ.
//!
//! [`IntPoly`] is the coefficient vector type used for generating functions
//! (`W'_P(x)`, `F(q)`) and as the building block of [`RatFunc`], the field of
//! Hecke-algebra coefficients. A `RatFunc` is always kept in a canonical
//! form so that structural equality is mathematical equality:
//!
//! * numerator and denominator are integer polynomials with `gcd = 1` over ℚ,
//! * the integer content of all their coefficients taken together is 1,
//! * the denominator has a positive leading coefficient,
//! * zero is stored as `0 / 1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number.
pub type Rat = BigRational;

/// Integer polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `x` (or `q`).
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * x^deg`.
    pub fn monomial<T: Into<BigInt>>(c: T, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> BigInt {
        self.coeffs.get(deg).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|a| {
                    debug_assert!((a % c).is_zero());
                    a / c
                })
                .collect(),
        )
    }

    pub fn mul_scalar(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `self(x^d)`.
    pub fn compose_power(&self, d: usize) -> IntPoly {
        if d == 0 {
            return IntPoly::constant(self.coeffs.iter().sum::<BigInt>());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len().saturating_sub(1) * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * d] = c.clone();
        }
        IntPoly::from_coeffs(out)
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem_monic(&self, m: &IntPoly) -> IntPoly {
        assert!(m.leading().is_one(), "rem_monic needs a monic divisor");
        let dm = m.degree().expect("nonzero divisor");
        let mut r = self.coeffs.clone();
        while r.len() > dm {
            let top = r.len() - 1;
            let c = r[top].clone();
            if !c.is_zero() {
                let shift = top - dm;
                for (j, mc) in m.coeffs.iter().enumerate() {
                    r[shift + j] -= &c * mc;
                }
            }
            r.pop();
        }
        IntPoly::from_coeffs(r)
    }

    /// Pseudo-remainder `lc(b)^k * self mod b`.
    fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("nonzero divisor");
        let lb = b.leading();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading();
            let scaled = r.mul_scalar(&lb);
            let sub = shift(&b.mul_scalar(&lr), dr - db);
            r = &scaled - &sub;
        }
        r
    }

    /// Primitive gcd with positive leading coefficient (gcd over ℚ up to units).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return IntPoly::one();
            }
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Quotient and remainder over ℤ, valid when the leading coefficient of
    /// `divisor` divides every intermediate leading term. Returns `None`
    /// otherwise.
    pub fn div_rem_exact(&self, divisor: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let dd = divisor.degree()?;
        let ld = divisor.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len().saturating_sub(dd).max(1)];
        while r.len() > dd {
            let top = r.len() - 1;
            let c = r[top].clone();
            if !c.is_zero() {
                let (quot, rem) = c.div_rem(&ld);
                if !rem.is_zero() {
                    return None;
                }
                let shift = top - dd;
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    r[shift + j] -= &quot * dc;
                }
                q[shift] = quot;
            }
            r.pop();
        }
        Some((IntPoly::from_coeffs(q), IntPoly::from_coeffs(r)))
    }

    /// Exact quotient; panics if `divisor` does not divide `self` over ℤ.
    pub fn div_exact(&self, divisor: &IntPoly) -> IntPoly {
        match self.div_rem_exact(divisor) {
            Some((q, r)) if r.is_zero() => q,
            _ => panic!("{self:?} is not divisible by {divisor:?}"),
        }
    }

    /// Multiplicity of `root` as a root (`None` for the zero polynomial).
    pub fn root_multiplicity(&self, root: i64) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let lin = IntPoly::from_i64s(&[-root, 1]);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            match p.div_rem_exact(&lin) {
                Some((q, r)) if r.is_zero() => {
                    p = q;
                    k += 1;
                }
                _ => return Some(k),
            }
        }
    }

    /// Render with the given variable name, ascending (`1 + x + 2*x^2`) or
    /// descending (`2*q^2+q+1`, compact).
    pub fn render(&self, var: &str, descending: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(usize, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if descending {
            terms.reverse();
        }
        let sep_pos = if descending { "+" } else { " + " };
        let sep_neg = if descending { "-" } else { " - " };
        let mut out = String::new();
        for (k, (deg, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { sep_neg } else { sep_pos });
            }
            let mono = match deg {
                0 => String::new(),
                1 => var.to_string(),
                d => format!("{var}^{d}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

fn shift(p: &IntPoly, k: usize) -> IntPoly {
    if p.is_zero() {
        return IntPoly::zero();
    }
    let mut coeffs = vec![BigInt::zero(); k];
    coeffs.extend(p.coeffs.iter().cloned());
    IntPoly::from_coeffs(coeffs)
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.render("x", false))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x", false))
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        IntPoly::from_coeffs(out)
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(IntPoly, Add, add);
forward_owned!(IntPoly, Sub, sub);
forward_owned!(IntPoly, Mul, mul);

/// Exact rational function in one variable (written `q`), canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_poly(IntPoly::x())
    }

    pub fn from_int<T: Into<BigInt>>(c: T) -> Self {
        Self::from_poly(IntPoly::constant(c))
    }

    pub fn from_rat(r: &Rat) -> Self {
        Self::new(
            IntPoly::constant(r.numer().clone()),
            IntPoly::constant(r.denom().clone()),
        )
        .expect("rational has nonzero denominator")
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Self::canonical(p, IntPoly::one())
    }

    /// `num / den`, reduced. Fails if `den` is zero.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        if den.leading().is_negative() {
            num = -&num;
            den = -&den;
        }
        RatFunc { num, den }
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Result<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(RatFunc::canonical(base.num.pow(e), base.den.pow(e)))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Exact value at `x`; fails at a pole.
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(x.to_string()));
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_int(&self, x: i64) -> Result<Rat> {
        self.eval(&Rat::from_integer(x.into()))
    }

    /// Whether `(q-1)^k` divides this function. The denominator must be
    /// coprime to `q-1`; that is asserted.
    pub fn divisible_by_qm1(&self, k: usize) -> bool {
        match self.qm1_order() {
            None => true,
            Some(m) => m >= k,
        }
    }

    /// Order of vanishing at `q = 1` (`None` for zero). Asserts that `q = 1`
    /// is not a pole.
    pub fn qm1_order(&self) -> Option<usize> {
        assert!(
            self.den.root_multiplicity(1) == Some(0),
            "denominator of {self} vanishes at q = 1"
        );
        self.num.root_multiplicity(1)
    }

    /// Whether the denominator is `c * (q+1)^k` for some constant `c`.
    pub fn denominator_is_power_of_q_plus_1(&self) -> bool {
        let k = self.den.root_multiplicity(-1).unwrap_or(0);
        self.den.degree() == Some(k)
    }

    /// Factored display in the style `-16*q*(q^2+1)*(q-1)/(q+1)^6`.
    pub fn display_factored(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let (nsign, nfac) = factor_display(&self.num);
        let (dsign, dfac) = factor_display(&self.den);
        let negative = nsign != dsign;
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push_str(&nfac.unwrap_or_else(|| "1".to_string()));
        if let Some(d) = dfac {
            out.push('/');
            if d.contains('*') {
                out.push_str(&format!("({d})"));
            } else {
                out.push_str(&d);
            }
        }
        out
    }
}

/// Splits `p` into sign and a product string of its content, a `q^k`
/// monomial, the leftover factor, and powers of `(q-1)`, `(q+1)`. Returns
/// `None` for the product when it is exactly 1.
fn factor_display(p: &IntPoly) -> (bool, Option<String>) {
    let negative = p.leading().is_negative();
    let mut rest = p.primitive_part();
    let content = p.content();
    let mut qk = 0;
    while rest.coeff(0).is_zero() && !rest.is_zero() {
        rest = IntPoly::from_coeffs(rest.coeffs[1..].to_vec());
        qk += 1;
    }
    let m1 = rest.root_multiplicity(1).unwrap_or(0);
    let p1 = rest.root_multiplicity(-1).unwrap_or(0);
    rest = rest.div_exact(&IntPoly::from_i64s(&[-1, 1]).pow(m1 as u32));
    rest = rest.div_exact(&IntPoly::from_i64s(&[1, 1]).pow(p1 as u32));
    let mut parts = Vec::new();
    if !content.is_one() {
        parts.push(content.to_string());
    }
    match qk {
        0 => {}
        1 => parts.push("q".to_string()),
        k => parts.push(format!("q^{k}")),
    }
    if !rest.is_one() {
        parts.push(format!("({})", rest.render("q", true)));
    }
    for (base, e) in [("(q-1)", m1), ("(q+1)", p1)] {
        match e {
            0 => {}
            1 => parts.push(base.to_string()),
            e => parts.push(format!("{base}^{e}")),
        }
    }
    if parts.is_empty() {
        (negative, None)
    } else {
        (negative, Some(parts.join("*")))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_factored())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.display_factored())
    }
}

impl From<IntPoly> for RatFunc {
    fn from(p: IntPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`RatFunc::checked_div`] otherwise.
impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

forward_owned!(RatFunc, Add, add);
forward_owned!(RatFunc, Sub, sub);
forward_owned!(RatFunc, Mul, mul);
forward_owned!(RatFunc, Div, div);

/// Parses expressions such as `-16q(q-1)(q^2+1)/(q+1)^6` or `64/(q+1)^6`.
/// Juxtaposition means multiplication; `x` is accepted as a synonym of `q`.
impl FromStr for RatFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = tokenize(s)?;
        let mut parser = Parser { tokens, pos: 0 };
        let value = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(value)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var,
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Tok::Int(digits.parse().expect("digits")));
            }
            'q' | 'x' => {
                out.push(Tok::Var);
                i += 1;
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push(Tok::Op(c));
                i += 1;
            }
            '−' => {
                out.push(Tok::Op('-'));
                i += 1;
            }
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    message: format!("unexpected character {c:?} in rational function"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn error(&self, what: &str) -> Error {
        Error::Parse {
            line: 1,
            message: format!("{what} at token {}", self.pos),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                acc = acc.checked_div(&self.unary()?)?;
            } else if matches!(self.peek(), Some(Tok::Int(_) | Tok::Var | Tok::Op('('))) {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let e = match self.tokens.get(self.pos) {
                Some(Tok::Int(e)) => e.to_i32().ok_or_else(|| self.error("exponent too large"))?,
                _ => return Err(self.error("expected exponent")),
            };
            self.pos += 1;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.tokens.get(self.pos).cloned() {
            Some(Tok::Int(c)) => {
                self.pos += 1;
                Ok(RatFunc::from_int(c))
            }
            Some(Tok::Var) => {
                self.pos += 1;
                Ok(RatFunc::q())
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(v)
            }
            _ => Err(self.error("expected a factor")),
        }
    }
}

/// Orders polynomials by degree, then coefficients; only used for
/// deterministic output.
impl PartialOrd for IntPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_examples() {
        let a = rf("(q-1)/(q+1)");
        assert_eq!(&a * &a, rf("(q-1)^2/(q+1)^2"));
        assert_eq!(rf("1/(q+1)") + rf("q/(q+1)"), RatFunc::one());
        assert_eq!(rf("(q^2-1)/(q+1)"), rf("q-1"));
        assert_eq!(rf("(q^2-1)/(q+1)").denom(), &IntPoly::one());
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = rf("(2q-2)/(4q+4)");
        let b = rf("(q-1)/(2q+2)");
        assert_eq!(a, b);
        assert!((&a - &b).is_zero());
        // negative denominators are flipped
        let c = RatFunc::new(IntPoly::from_i64s(&[1]), IntPoly::from_i64s(&[0, -1])).unwrap();
        assert_eq!(c, rf("-1/q"));
        assert!(c.denom().leading() > BigInt::zero());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(rf("(q-1)/(q+1)").eval_int(2).unwrap(), rat(1, 3));
        assert_eq!(rf("64/(q+1)^6").eval_int(1).unwrap(), rat(1, 1));
        assert!(matches!(rf("1/(q+1)").eval_int(-1), Err(Error::Pole(_))));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(
            RatFunc::one().checked_div(&RatFunc::zero()),
            Err(Error::DivisionByZero)
        ));
        assert!("1/(q-q)".parse::<RatFunc>().is_err());
    }

    #[test]
    fn divisibility_by_q_minus_one() {
        assert!(rf("(q-1)^2/(q+1)^2").divisible_by_qm1(2));
        assert!(!rf("(q-1)^2/(q+1)^2").divisible_by_qm1(3));
        assert!(!rf("64/(q+1)^6").divisible_by_qm1(1));
        assert!(RatFunc::zero().divisible_by_qm1(17));
        assert_eq!(rf("-4(q-1)^4/(q+1)^6").qm1_order(), Some(4));
    }

    #[test]
    #[should_panic]
    fn divisibility_asserts_coprime_denominator() {
        rf("1/(q-1)").divisible_by_qm1(1);
    }

    #[test]
    fn display_matches_table_style() {
        assert_eq!(rf("-2(q-1)^3/(q+1)^4").to_string(), "-2*(q-1)^3/(q+1)^4");
        assert_eq!(rf("64/(q+1)^6").to_string(), "64/(q+1)^6");
        assert_eq!(
            rf("-16q(q-1)(q^2+1)/(q+1)^6").to_string(),
            "-16*q*(q^2+1)*(q-1)/(q+1)^6"
        );
        assert_eq!(rf("(q-1)^2/(q+1)^2").to_string(), "(q-1)^2/(q+1)^2");
        assert_eq!(RatFunc::zero().to_string(), "0");
        assert_eq!(rf("1/3").to_string(), "1/3");
        assert_eq!(rf("-2/(3q+3)").to_string(), "-2/(3*(q+1))");
        // display output parses back to the same value
        for s in ["-4(q^6-6q^5-33q^4+12q^3-33q^2-6q+1)(q-1)^2/(q+1)^10", "q^3/(2q^2+1)"] {
            let v = rf(s);
            assert_eq!(rf(&v.to_string()), v);
        }
    }

    #[test]
    fn int_poly_gcd_and_division() {
        let a = IntPoly::from_i64s(&[-1, 0, 1]); // x^2 - 1
        let b = IntPoly::from_i64s(&[2, 2]); // 2x + 2
        assert_eq!(a.gcd(&b), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(a.div_exact(&IntPoly::from_i64s(&[1, 1])), IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(a.root_multiplicity(1), Some(1));
        assert_eq!(IntPoly::from_i64s(&[1, 1]).pow(3).root_multiplicity(-1), Some(3));
        assert_eq!(IntPoly::from_i64s(&[1, 2, 3]).render("x", false), "1 + 2*x + 3*x^2");
        assert_eq!(IntPoly::from_i64s(&[0, 0, 1, 0, 1]).compose_power(2).degree(), Some(8));
    }

    #[test]
    fn rem_monic_matches_division() {
        let f = IntPoly::from_i64s(&[0, 0, 1, 0, 1]);
        let m = IntPoly::from_i64s(&[1, 0, 1]); // x^2 + 1
        // x^2 = -1, x^4 = 1
        assert!(f.rem_monic(&m).is_zero());
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| IntPoly::from_i64s(&c))
    }

    fn small_ratfunc() -> impl Strategy<Value = RatFunc> {
        (small_poly(), small_poly()).prop_filter_map("nonzero denominator", |(n, d)| {
            RatFunc::new(n, d).ok()
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in small_ratfunc(), b in small_ratfunc(), c in small_ratfunc()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
            }
        }

        #[test]
        fn eval_is_a_homomorphism(a in small_ratfunc(), b in small_ratfunc(), x in -5i64..=5) {
            let x = Rat::from_integer(x.into());
            if let (Ok(ea), Ok(eb)) = (a.eval(&x), b.eval(&x)) {
                // a*b may cancel a pole, so only compare when the product is defined
                if let Ok(eab) = (&a * &b).eval(&x) {
                    prop_assert_eq!(eab, &ea * &eb);
                }
                prop_assert_eq!((&a + &b).eval(&x).unwrap(), ea + eb);
            }
        }

        #[test]
        fn display_round_trips(a in small_ratfunc()) {
            prop_assert_eq!(a.to_string().parse::<RatFunc>().unwrap(), a);
        }
    }
}
