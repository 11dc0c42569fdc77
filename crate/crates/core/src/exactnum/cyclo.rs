use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Rational, Ring};
use crate::error::Error;

/// Element `p + q·w` of Q(w), where `w = (-1 + i√3)/2` satisfies `w² = -1 - w`.
///
/// The pair `(p, q)` is the unique normal form in the basis `{1, w}`, so
/// structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycloRational {
    pub p: Rational,
    pub q: Rational,
}

impl CycloRational {
    pub fn new(p: Rational, q: Rational) -> Self {
        CycloRational { p, q }
    }

    pub fn from_rational(p: Rational) -> Self {
        CycloRational {
            p,
            q: Rational::integer(0),
        }
    }

    /// The primitive cube root of unity `w`.
    pub fn omega() -> Self {
        CycloRational::new(Rational::integer(0), Rational::integer(1))
    }

    /// `i√3 = 2w + 1`.
    pub fn i_sqrt3() -> Self {
        CycloRational::new(Rational::integer(1), Rational::integer(2))
    }

    /// Galois conjugation `w ↦ w²`, i.e. complex conjugation.
    pub fn conj(&self) -> Self {
        CycloRational {
            p: &self.p - &self.q,
            q: -&self.q,
        }
    }

    /// `x · conj(x) = p² - pq + q²`.
    pub fn norm(&self) -> Rational {
        self.p.square() - &self.p * &self.q + self.q.square()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn rational_part(&self) -> Result<Rational, Error> {
        if self.is_rational() {
            Ok(self.p.clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CycloRational {
            p: &self.p * c,
            q: &self.q * c,
        }
    }
}

/// `w^n` reduced by `w³ = 1`; `n` may be negative.
pub fn omega_pow(n: i64) -> CycloRational {
    match n.rem_euclid(3) {
        0 => CycloRational::from_rational(Rational::integer(1)),
        1 => CycloRational::omega(),
        _ => CycloRational::new(Rational::integer(-1), Rational::integer(-1)),
    }
}

/// `w1^r + w2^r`: 2 when 3 divides r, -1 otherwise.
pub fn epsilon(r: i64) -> i64 {
    if r.rem_euclid(3) == 0 {
        2
    } else {
        -1
    }
}

impl From<Rational> for CycloRational {
    fn from(p: Rational) -> Self {
        CycloRational::from_rational(p)
    }
}

impl fmt::Display for CycloRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*w", self.p, self.q)
    }
}

impl fmt::Debug for CycloRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CycloRational {
    type Err = Error;

    /// Accepts the `Display` form `"p + q*w"` or a bare rational `"p"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t.strip_suffix("*w") {
            Some(body) => {
                let (p, q) = body.rsplit_once(" + ").ok_or_else(|| Error::Parse {
                    input: s.to_string(),
                    reason: "expected `p + q*w`".to_string(),
                })?;
                Ok(CycloRational::new(p.parse()?, q.parse()?))
            }
            None => Ok(CycloRational::from_rational(t.parse()?)),
        }
    }
}

impl Serialize for CycloRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CycloRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for CycloRational {
    type Output = CycloRational;
    fn add(self, rhs: Self) -> Self {
        CycloRational {
            p: self.p + rhs.p,
            q: self.q + rhs.q,
        }
    }
}

impl Sub for CycloRational {
    type Output = CycloRational;
    fn sub(self, rhs: Self) -> Self {
        CycloRational {
            p: self.p - rhs.p,
            q: self.q - rhs.q,
        }
    }
}

impl Neg for CycloRational {
    type Output = CycloRational;
    fn neg(self) -> Self {
        CycloRational {
            p: -self.p,
            q: -self.q,
        }
    }
}

impl<'a> Mul<&'a CycloRational> for &'a CycloRational {
    type Output = CycloRational;
    fn mul(self, rhs: &'a CycloRational) -> CycloRational {
        // w² = -1 - w
        let qq = &self.q * &rhs.q;
        CycloRational {
            p: &self.p * &rhs.p - &qq,
            q: &self.p * &rhs.q + &rhs.p * &self.q - qq,
        }
    }
}

impl Mul for CycloRational {
    type Output = CycloRational;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Ring for CycloRational {
    fn zero() -> Self {
        CycloRational::default()
    }
    fn one() -> Self {
        CycloRational::from_rational(Rational::integer(1))
    }
    fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }
    fn from_i64(v: i64) -> Self {
        CycloRational::from_rational(Rational::integer(v))
    }
}
