use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// An element of Z[A, A^-1].
///
/// Zero coefficients are never stored, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `A`.
    pub fn a() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `A^2 + A^-2`.
    pub fn phi() -> Self {
        Self::monomial(1, 2) + Self::monomial(1, -2)
    }

    /// The value of a trivial circle, `-A^2 - A^-2`.
    pub fn loop_value() -> Self {
        -Self::phi()
    }

    /// `(-A)^k`.
    pub fn neg_a_pow(k: i64) -> Self {
        Self::monomial(if k.rem_euclid(2) == 0 { 1 } else { -1 }, k)
    }

    /// `(-A^3)^k`.
    pub fn neg_a3_pow(k: i64) -> Self {
        Self::monomial(if k.rem_euclid(2) == 0 { 1 } else { -1 }, 3 * k)
    }

    /// `(-A^4)^k`.
    pub fn neg_a4_pow(k: i64) -> Self {
        Self::monomial(if k.rem_euclid(2) == 0 { 1 } else { -1 }, 4 * k)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiply by `c * A^exp`.
    pub fn scale_monomial(&self, c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (e + exp, x * &c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = &out * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Replace every exponent `e` by `k * e`.
    pub fn substitute_power(&self, k: i64) -> Result<Self, AlgebraError> {
        if k == 0 {
            return Err(AlgebraError::ZeroSubstitution);
        }
        Ok(Self {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        })
    }

    /// Mirror image: `A -> A^-1`.
    pub fn bar(&self) -> Self {
        self.substitute_power(-1).expect("nonzero power")
    }

    /// Returns `k` with `other = (-A)^k * self`, if such `k` exists.
    pub fn unit_equivalent(&self, other: &Self) -> Option<i64> {
        match (self.max_exp(), other.max_exp()) {
            (None, None) => Some(0),
            (Some(a), Some(b)) => {
                let k = b - a;
                if &Self::neg_a_pow(k) * self == *other {
                    Some(k)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dmax = divisor.max_exp()?;
        let dmin = divisor.min_exp()?;
        let dlead = divisor.leading_coeff()?.clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rmax) = rem.max_exp() {
            let rmin = rem.min_exp().unwrap();
            if rmax - rmin < dmax - dmin {
                return None;
            }
            let (q, r) = rem.leading_coeff().unwrap().div_rem(&dlead);
            if !r.is_zero() {
                return None;
            }
            let shift = rmax - dmax;
            rem -= divisor.scale_monomial(q.clone(), shift);
            quot.add_term(shift, q);
        }
        Some(quot)
    }

    pub fn parse(s: &str) -> Result<Self, AlgebraError> {
        parse_poly(s)
    }
}

fn parse_poly(src: &str) -> Result<LaurentPoly, AlgebraError> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |msg: &str| AlgebraError::Parse {
        input: src.to_string(),
        reason: msg.to_string(),
    };
    if s.is_empty() {
        return Err(err("empty input"));
    }
    let b = s.as_bytes();
    let mut i = 0;
    let mut out = LaurentPoly::zero();
    while i < b.len() {
        let mut sign = BigInt::one();
        if b[i] == b'+' || b[i] == b'-' {
            if b[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        } else if i != 0 {
            return Err(err("expected '+' or '-' between terms"));
        }
        let start = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        let coeff = if i > start {
            s[start..i].parse::<BigInt>().map_err(|_| err("bad coefficient"))?
        } else {
            BigInt::one()
        };
        let has_digits = i > start;
        if i < b.len() && b[i] == b'*' {
            i += 1;
        }
        let mut exp = 0i64;
        if i < b.len() && b[i] == b'A' {
            i += 1;
            exp = 1;
            if i < b.len() && (b[i] == b'^' || (b[i] == b'*' && i + 1 < b.len() && b[i + 1] == b'*')) {
                i += if b[i] == b'^' { 1 } else { 2 };
                let braced = i < b.len() && b[i] == b'{';
                if braced {
                    i += 1;
                }
                let es = i;
                if i < b.len() && (b[i] == b'-' || b[i] == b'+') {
                    i += 1;
                }
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                exp = s[es..i].parse::<i64>().map_err(|_| err("bad exponent"))?;
                if braced {
                    if i >= b.len() || b[i] != b'}' {
                        return Err(err("unclosed brace"));
                    }
                    i += 1;
                }
            }
        } else if !has_digits {
            return Err(err("expected a coefficient or 'A'"));
        }
        out.add_term(exp, sign * coeff);
    }
    Ok(out)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if neg {
                write!(f, "-")?;
            } else if idx > 0 {
                write!(f, "+")?;
            }
            let mag = c.abs();
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if *e == 1 {
                write!(f, "A")?;
            } else {
                write!(f, "A^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self -= &rhs;
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                *acc.entry(e1 + e2).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: acc }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

/// Coefficient as `i64` when it fits, used by JSON rendering.
pub(crate) fn small(c: &BigInt) -> Option<i64> {
    c.to_i64()
}
