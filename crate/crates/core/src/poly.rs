//! Exact arithmetic in `Z[x]` and its fraction field.
//!
//! [`PolyFrac`] is always kept in canonical form: numerator and denominator
//! share no common factor in `Z[x]` (integer content included) and the
//! denominator has a positive leading coefficient. Structural equality is
//! therefore value equality.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients, indexed by degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
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

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Exponent of the lowest nonzero term.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `Some(k)` when the polynomial is a single term `c * x^k`.
    pub fn as_monomial(&self) -> Option<usize> {
        let k = self.order()?;
        (k + 1 == self.coeffs.len()).then_some(k)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.div_scalar_exact(&c)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn div_scalar_exact(&self, c: &BigInt) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divides by `x^k`; the caller guarantees `k <= order`.
    fn shift_down(&self, k: usize) -> IntPoly {
        if k == 0 {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    fn add_ref(&self, other: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::from_coeffs(coeffs)
    }

    fn sub_ref(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&other.coeffs) {
            *c -= s;
        }
        IntPoly::from_coeffs(coeffs)
    }

    fn mul_ref(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    fn neg_ref(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Pseudo-remainder of `self` by a nonzero `divisor`, up to a positive
    /// power of the divisor's leading coefficient.
    fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let db = divisor.degree().expect("pseudo_rem by zero");
        let lb = divisor.lead().unwrap();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lead().unwrap().clone();
            let shifted = divisor.scale(&lr).shift_up(dr - db);
            r = r.scale(lb).sub_ref(&shifted);
        }
        r
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self` in `Z[x]`.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let db = divisor.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let da = self.degree().unwrap();
        if da < db {
            return None;
        }
        let lb = divisor.lead().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let (c, rem) = r[i + db].div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                r[i + j] -= &c * b;
            }
            q[i] = c;
        }
        r.iter().all(Zero::is_zero).then(|| IntPoly::from_coeffs(q))
    }

    /// Greatest common divisor in `Z[x]` with positive leading coefficient,
    /// via the primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.normalized_sign();
        }
        if other.is_zero() {
            return self.normalized_sign();
        }
        let content = self.content().gcd(&other.content());
        let shift = self.order().unwrap().min(other.order().unwrap());
        let mut a = self.shift_down(self.order().unwrap()).primitive_part();
        let mut b = other.shift_down(other.order().unwrap()).primitive_part();
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_constant() {
            let r = a.pseudo_rem(&b);
            a = b;
            if r.is_zero() {
                b = IntPoly::zero();
                break;
            }
            b = r.primitive_part();
        }
        let core = if b.is_zero() {
            a.primitive_part().normalized_sign()
        } else {
            IntPoly::one()
        };
        core.scale(&content).shift_up(shift)
    }

    fn normalized_sign(&self) -> IntPoly {
        match self.lead() {
            Some(l) if l.is_negative() => self.neg_ref(),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, point: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * point + BigRational::from_integer(c.clone());
        }
        acc
    }

    fn fmt_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

/// Element of `Frac(Z[x])` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyFrac {
    num: IntPoly,
    den: IntPoly,
}

impl Default for PolyFrac {
    fn default() -> Self {
        PolyFrac::zero()
    }
}

impl PolyFrac {
    pub fn zero() -> Self {
        PolyFrac {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        PolyFrac::from_poly(IntPoly::one())
    }

    pub fn x() -> Self {
        PolyFrac::monomial(1)
    }

    pub fn from_int(c: i64) -> Self {
        PolyFrac::from_poly(IntPoly::constant(BigInt::from(c)))
    }

    pub fn from_poly(p: IntPoly) -> Self {
        PolyFrac {
            num: p,
            den: IntPoly::one(),
        }
    }

    /// `x^w`; negative weights give `1 / x^(-w)`.
    pub fn monomial(w: i64) -> Self {
        let k = w.unsigned_abs() as usize;
        let xk = IntPoly::monomial(BigInt::one(), k);
        if w >= 0 {
            PolyFrac::from_poly(xk)
        } else {
            PolyFrac {
                num: IntPoly::one(),
                den: xk,
            }
        }
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Rough size used to pick cheap pivots.
    pub fn weight(&self) -> usize {
        self.num.coeffs.len() + self.den.coeffs.len()
    }

    fn normalize(num: IntPoly, den: IntPoly) -> PolyFrac {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return PolyFrac::zero();
        }
        let t = num.order().unwrap().min(den.order().unwrap());
        let (mut num, mut den) = (num.shift_down(t), den.shift_down(t));
        let g = if den.is_constant() || num.as_monomial().is_some() || den.as_monomial().is_some()
        {
            // After stripping common powers of x one side has a nonzero
            // constant term, so only the integer content can be shared.
            IntPoly::constant(num.content().gcd(&den.content()))
        } else {
            num.gcd(&den)
        };
        if !g.is_one() {
            if g.is_constant() {
                let c = &g.coeffs[0];
                num = num.div_scalar_exact(c);
                den = den.div_scalar_exact(c);
            } else {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        if den.lead().unwrap().is_negative() {
            num = num.neg_ref();
            den = den.neg_ref();
        }
        PolyFrac { num, den }
    }

    fn add_ref(&self, other: &PolyFrac) -> PolyFrac {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add_ref(&other.num);
            if self.den.is_one() {
                return PolyFrac::from_poly(num);
            }
            return PolyFrac::normalize(num, self.den.clone());
        }
        if let (Some(i), Some(j)) = (self.den.as_monomial(), other.den.as_monomial()) {
            if self.den.lead() == other.den.lead() {
                // c*x^i and c*x^j: bring both over c*x^max(i, j).
                let top = i.max(j);
                let num = self
                    .num
                    .shift_up(top - i)
                    .add_ref(&other.num.shift_up(top - j));
                let den = if i >= j { self.den.clone() } else { other.den.clone() };
                return PolyFrac::normalize(num, den);
            }
        }
        let num = self
            .num
            .mul_ref(&other.den)
            .add_ref(&other.num.mul_ref(&self.den));
        PolyFrac::normalize(num, self.den.mul_ref(&other.den))
    }

    fn mul_ref(&self, other: &PolyFrac) -> PolyFrac {
        if self.is_zero() || other.is_zero() {
            return PolyFrac::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return PolyFrac::from_poly(self.num.mul_ref(&other.num));
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        // Cross-cancel before multiplying; both inputs are already reduced.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let a = self.num.div_exact(&g1).unwrap();
        let d = other.den.div_exact(&g1).unwrap();
        let c = other.num.div_exact(&g2).unwrap();
        let b = self.den.div_exact(&g2).unwrap();
        let mut num = a.mul_ref(&c);
        let mut den = b.mul_ref(&d);
        if den.lead().unwrap().is_negative() {
            num = num.neg_ref();
            den = den.neg_ref();
        }
        PolyFrac { num, den }
    }

    pub fn inv(&self) -> Result<PolyFrac> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.lead().unwrap().is_negative() {
            num = num.neg_ref();
            den = den.neg_ref();
        }
        Ok(PolyFrac { num, den })
    }

    pub fn checked_div(&self, other: &PolyFrac) -> Result<PolyFrac> {
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn pow(&self, e: u32) -> PolyFrac {
        let mut acc = PolyFrac::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Exponent-to-coefficient map when the value is a Laurent polynomial.
    pub fn as_laurent(&self) -> Result<BTreeMap<i64, BigInt>> {
        let k = match self.den.as_monomial() {
            Some(k) if self.den.lead().is_some_and(One::is_one) => k as i64,
            _ => return Err(Error::NotLaurent),
        };
        Ok(self
            .num
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64 - k, c.clone()))
            .collect())
    }

    pub fn from_laurent(terms: &BTreeMap<i64, BigInt>) -> PolyFrac {
        let low = terms.keys().next().copied().unwrap_or(0).min(0);
        let mut coeffs = Vec::new();
        for (&e, c) in terms {
            let idx = (e - low) as usize;
            if coeffs.len() <= idx {
                coeffs.resize(idx + 1, BigInt::zero());
            }
            coeffs[idx] += c;
        }
        let den = IntPoly::monomial(BigInt::one(), (-low) as usize);
        PolyFrac::normalize(IntPoly::from_coeffs(coeffs), den)
    }

    pub fn evaluate(&self, point: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok(self.num.eval(point) / d)
    }
}

impl fmt::Display for PolyFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for PolyFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&PolyFrac> for &PolyFrac {
            type Output = PolyFrac;
            fn $method(self, rhs: &PolyFrac) -> PolyFrac {
                self.$inner(rhs)
            }
        }
        impl $trait<PolyFrac> for PolyFrac {
            type Output = PolyFrac;
            fn $method(self, rhs: PolyFrac) -> PolyFrac {
                (&self).$inner(&rhs)
            }
        }
        impl $trait<&PolyFrac> for PolyFrac {
            type Output = PolyFrac;
            fn $method(self, rhs: &PolyFrac) -> PolyFrac {
                (&self).$inner(rhs)
            }
        }
        impl $trait<PolyFrac> for &PolyFrac {
            type Output = PolyFrac;
            fn $method(self, rhs: PolyFrac) -> PolyFrac {
                self.$inner(&rhs)
            }
        }
    };
}

impl PolyFrac {
    fn sub_ref(&self, other: &PolyFrac) -> PolyFrac {
        self.add_ref(&-other)
    }

    /// Panics on a zero divisor; use [`PolyFrac::checked_div`] otherwise.
    fn div_ref(&self, other: &PolyFrac) -> PolyFrac {
        self.checked_div(other).expect("division by zero PolyFrac")
    }
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl Neg for &PolyFrac {
    type Output = PolyFrac;
    fn neg(self) -> PolyFrac {
        PolyFrac {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }
}

impl Neg for PolyFrac {
    type Output = PolyFrac;
    fn neg(self) -> PolyFrac {
        -&self
    }
}

impl AddAssign<&PolyFrac> for PolyFrac {
    fn add_assign(&mut self, rhs: &PolyFrac) {
        *self = self.add_ref(rhs);
    }
}

impl AddAssign<PolyFrac> for PolyFrac {
    fn add_assign(&mut self, rhs: PolyFrac) {
        *self = self.add_ref(&rhs);
    }
}

impl SubAssign<&PolyFrac> for PolyFrac {
    fn sub_assign(&mut self, rhs: &PolyFrac) {
        *self = self.sub_ref(rhs);
    }
}

impl MulAssign<&PolyFrac> for PolyFrac {
    fn mul_assign(&mut self, rhs: &PolyFrac) {
        *self = self.mul_ref(rhs);
    }
}

impl MulAssign<PolyFrac> for PolyFrac {
    fn mul_assign(&mut self, rhs: PolyFrac) {
        *self = self.mul_ref(&rhs);
    }
}

impl Zero for PolyFrac {
    fn zero() -> Self {
        PolyFrac::zero()
    }
    fn is_zero(&self) -> bool {
        PolyFrac::is_zero(self)
    }
}

impl One for PolyFrac {
    fn one() -> Self {
        PolyFrac::one()
    }
}

impl core::iter::Sum for PolyFrac {
    fn sum<I: Iterator<Item = PolyFrac>>(iter: I) -> Self {
        iter.fold(PolyFrac::zero(), |acc, v| acc + v)
    }
}

impl core::iter::Product for PolyFrac {
    fn product<I: Iterator<Item = PolyFrac>>(iter: I) -> Self {
        iter.fold(PolyFrac::one(), |acc, v| acc * v)
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        parse_poly(&cleaned)
    }
}

impl FromStr for PolyFrac {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(rest) = t.strip_prefix('(') {
            let close = matching_paren(rest).ok_or_else(|| bad(&t))?;
            let num = parse_poly(&rest[..close])?;
            let tail = &rest[close + 1..];
            if tail.is_empty() {
                return Ok(PolyFrac::from_poly(num));
            }
            let den_src = tail
                .strip_prefix("/(")
                .and_then(|d| d.strip_suffix(')'))
                .ok_or_else(|| bad(&t))?;
            return PolyFrac::new(num, parse_poly(den_src)?);
        }
        Ok(PolyFrac::from_poly(parse_poly(&t)?))
    }
}

fn bad(s: &str) -> Error {
    Error::PolyParse(s.to_string())
}

fn matching_paren(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' if depth == 0 => return Some(i),
            ')' => depth -= 1,
            _ => {}
        }
    }
    None
}

fn parse_poly(s: &str) -> Result<IntPoly> {
    if s.is_empty() {
        return Err(bad(s));
    }
    let bytes = s.as_bytes();
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let mut negative = false;
        match bytes[i] {
            b'+' => i += 1,
            b'-' => {
                negative = true;
                i += 1;
            }
            _ if i > 0 => return Err(bad(s)),
            _ => {}
        }
        let start = i;
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            i += 1;
        }
        let (c, k) = parse_term(&s[start..i]).ok_or_else(|| bad(s))?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::zero());
        }
        if negative {
            coeffs[k] -= c;
        } else {
            coeffs[k] += c;
        }
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

fn parse_term(t: &str) -> Option<(BigInt, usize)> {
    if t.is_empty() {
        return None;
    }
    let (coef_src, var) = match t.find('x') {
        None => (t, None),
        Some(pos) => {
            let coef = t[..pos].strip_suffix('*').unwrap_or(&t[..pos]);
            if coef.len() + 1 < pos {
                return None;
            }
            (coef, Some(&t[pos + 1..]))
        }
    };
    let coef = if coef_src.is_empty() {
        if var.is_none() {
            return None;
        }
        BigInt::one()
    } else {
        if !coef_src.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        coef_src.parse::<BigInt>().ok()?
    };
    let k = match var {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let e = rest.strip_prefix('^')?;
            if e.is_empty() || !e.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            e.parse().ok()?
        }
    };
    Some((coef, k))
}
