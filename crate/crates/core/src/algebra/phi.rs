use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{Map, Value};

use super::poly::small;
use super::{AlgebraError, LaurentPoly};

/// A Laurent polynomial divided by a power of `phi = A^2 + A^-2`.
///
/// Stored reduced: when `phi_power > 0`, `phi` does not divide the numerator.
#[derive(Clone)]
pub struct PhiFraction {
    num: LaurentPoly,
    phi_power: u32,
}

impl PhiFraction {
    pub fn new(num: LaurentPoly, phi_power: u32) -> Self {
        let mut out = Self { num, phi_power };
        out.reduce();
        out
    }

    pub fn zero() -> Self {
        Self::new(LaurentPoly::zero(), 0)
    }

    pub fn one() -> Self {
        Self::new(LaurentPoly::one(), 0)
    }

    /// `1 / phi^k`.
    pub fn inv_phi_pow(k: u32) -> Self {
        Self::new(LaurentPoly::one(), k)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn phi_power(&self) -> u32 {
        self.phi_power
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a Laurent polynomial, when the denominator has cancelled.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        (self.phi_power == 0).then_some(&self.num)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.phi_power = 0;
            return;
        }
        let phi = LaurentPoly::phi();
        while self.phi_power > 0 {
            match self.num.div_exact(&phi) {
                Some(q) => {
                    self.num = q;
                    self.phi_power -= 1;
                }
                None => break,
            }
        }
    }

    /// Multiply by `c * A^exp`.
    pub fn scale_monomial(&self, c: impl Into<BigInt>, exp: i64) -> Self {
        Self::new(self.num.scale_monomial(c, exp), self.phi_power)
    }

    /// Multiply by `(-A^4)^k`.
    pub fn mul_neg_a4_pow(self, k: i64) -> Self {
        &self * &PhiFraction::from(LaurentPoly::neg_a4_pow(k))
    }

    /// Multiply by `phi^k`.
    pub fn mul_phi_pow(&self, k: u32) -> Self {
        if k <= self.phi_power {
            Self::new(self.num.clone(), self.phi_power - k)
        } else {
            Self::new(&self.num * &LaurentPoly::phi().pow(k - self.phi_power), 0)
        }
    }

    /// Mirror image `A -> A^-1`; `phi` is fixed by it.
    pub fn bar(&self) -> Self {
        Self::new(self.num.bar(), self.phi_power)
    }

    pub fn parse(s: &str) -> Result<Self, AlgebraError> {
        parse_fraction(s)
    }

    pub fn to_json(&self) -> Value {
        let mut terms = Map::new();
        for (e, c) in self.num.terms() {
            let v = match small(c) {
                Some(x) => Value::from(x),
                None => Value::from(c.to_string()),
            };
            terms.insert(e.to_string(), v);
        }
        let mut obj = Map::new();
        obj.insert("terms".into(), Value::Object(terms));
        obj.insert("phi_power".into(), Value::from(self.phi_power));
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        let bad = |reason: &str| AlgebraError::Json(reason.to_string());
        let terms = v
            .get("terms")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing 'terms' object"))?;
        let k = match v.get("phi_power") {
            None => 0,
            Some(x) => x
                .as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| bad("'phi_power' must be a non-negative integer"))?,
        };
        let mut num = LaurentPoly::zero();
        for (e, c) in terms {
            let e: i64 = e.parse().map_err(|_| bad("exponent keys must be integers"))?;
            let c: BigInt = match c {
                Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| bad("coefficients must be integers"))?,
                Value::String(s) => s.parse().map_err(|_| bad("coefficient string is not an integer"))?,
                _ => return Err(bad("coefficients must be integers")),
            };
            num.add_term(e, c);
        }
        Ok(Self::new(num, k))
    }
}

fn parse_fraction(src: &str) -> Result<PhiFraction, AlgebraError> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(slash) = s.rfind("/phi") else {
        return Ok(PhiFraction::from(LaurentPoly::parse(&s)?));
    };
    let err = |msg: &str| AlgebraError::Parse {
        input: src.to_string(),
        reason: msg.to_string(),
    };
    let tail = &s[slash + 4..];
    let k: u32 = if tail.is_empty() {
        1
    } else if let Some(rest) = tail.strip_prefix('^') {
        rest.trim_matches(|c| c == '{' || c == '}')
            .parse()
            .map_err(|_| err("bad phi exponent"))?
    } else {
        return Err(err("unexpected text after '/phi'"));
    };
    let head = &s[..slash];
    let (neg, body) = match head.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, head),
    };
    let inner = body
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .ok_or_else(|| err("numerator must be parenthesised"))?;
    let mut num = LaurentPoly::parse(inner)?;
    if neg {
        num = -num;
    }
    Ok(PhiFraction::new(num, k))
}

impl From<LaurentPoly> for PhiFraction {
    fn from(p: LaurentPoly) -> Self {
        Self::new(p, 0)
    }
}

impl PartialEq for PhiFraction {
    fn eq(&self, other: &Self) -> bool {
        let phi = LaurentPoly::phi();
        let lhs = &self.num * &phi.pow(other.phi_power);
        let rhs = &other.num * &phi.pow(self.phi_power);
        lhs == rhs
    }
}

impl Eq for PhiFraction {}

impl fmt::Display for PhiFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.phi_power == 0 {
            return write!(f, "{}", self.num);
        }
        let den = if self.phi_power == 1 {
            "phi".to_string()
        } else {
            format!("phi^{}", self.phi_power)
        };
        if self.num.leading_coeff().is_some_and(|c| c.is_negative()) {
            write!(f, "-({})/{den}", -&self.num)
        } else {
            write!(f, "({})/{den}", self.num)
        }
    }
}

impl fmt::Debug for PhiFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PhiFraction({self})")
    }
}

impl Add<&PhiFraction> for &PhiFraction {
    type Output = PhiFraction;
    fn add(self, rhs: &PhiFraction) -> PhiFraction {
        let k = self.phi_power.max(rhs.phi_power);
        let phi = LaurentPoly::phi();
        let a = &self.num * &phi.pow(k - self.phi_power);
        let b = &rhs.num * &phi.pow(k - rhs.phi_power);
        PhiFraction::new(a + b, k)
    }
}

impl Add for PhiFraction {
    type Output = PhiFraction;
    fn add(self, rhs: PhiFraction) -> PhiFraction {
        &self + &rhs
    }
}

impl Sub<&PhiFraction> for &PhiFraction {
    type Output = PhiFraction;
    fn sub(self, rhs: &PhiFraction) -> PhiFraction {
        self + &(-rhs)
    }
}

impl Sub for PhiFraction {
    type Output = PhiFraction;
    fn sub(self, rhs: PhiFraction) -> PhiFraction {
        &self - &rhs
    }
}

impl Neg for &PhiFraction {
    type Output = PhiFraction;
    fn neg(self) -> PhiFraction {
        PhiFraction {
            num: -&self.num,
            phi_power: self.phi_power,
        }
    }
}

impl Neg for PhiFraction {
    type Output = PhiFraction;
    fn neg(self) -> PhiFraction {
        -&self
    }
}

impl Mul<&PhiFraction> for &PhiFraction {
    type Output = PhiFraction;
    fn mul(self, rhs: &PhiFraction) -> PhiFraction {
        PhiFraction::new(&self.num * &rhs.num, self.phi_power + rhs.phi_power)
    }
}

impl Mul for PhiFraction {
    type Output = PhiFraction;
    fn mul(self, rhs: PhiFraction) -> PhiFraction {
        &self * &rhs
    }
}

impl std::iter::Sum for PhiFraction {
    fn sum<I: Iterator<Item = PhiFraction>>(iter: I) -> Self {
        iter.fold(PhiFraction::zero(), |acc, x| &acc + &x)
    }
}
