//! Hamilton quaternions over a commutative coefficient ring, the third-order
//! Jacobsthal quaternions `JQ(n)` and Jacobsthal-Lucas quaternions `jQ(n)`,
//! their Binet forms and the quaternion identity checks.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{omega_pow, CycloRational, Rational, Ring};
use crate::report::{Identity, IdentityReport};
use crate::sequences::{binet_coefficient_jacobsthal, binet_coefficient_lucas, jacobsthal3, lucas3};

/// `s + i·i + j·j + k·k` with `i² = j² = k² = ijk = -1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Quaternion<R> {
    pub s: R,
    pub i: R,
    pub j: R,
    pub k: R,
}

impl<R: Ring> Quaternion<R> {
    pub fn new(s: R, i: R, j: R, k: R) -> Self {
        Quaternion { s, i, j, k }
    }

    pub fn from_scalar(s: R) -> Self {
        Quaternion::new(s, R::zero(), R::zero(), R::zero())
    }

    pub fn unit_i() -> Self {
        Quaternion::new(R::zero(), R::one(), R::zero(), R::zero())
    }

    pub fn unit_j() -> Self {
        Quaternion::new(R::zero(), R::zero(), R::one(), R::zero())
    }

    pub fn unit_k() -> Self {
        Quaternion::new(R::zero(), R::zero(), R::zero(), R::one())
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        let [s, i, j, k] = c.map(R::from_i64);
        Quaternion::new(s, i, j, k)
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(
            self.s.clone(),
            -self.i.clone(),
            -self.j.clone(),
            -self.k.clone(),
        )
    }

    /// `s² + i² + j² + k²` (componentwise squares, not the quaternion square).
    pub fn norm(&self) -> R {
        self.components()
            .into_iter()
            .map(|c| c.clone() * c.clone())
            .fold(R::zero(), |acc, x| acc + x)
    }

    /// `c·q`, for `c` in the (central) coefficient ring.
    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    pub fn components(&self) -> [&R; 4] {
        [&self.s, &self.i, &self.j, &self.k]
    }

    pub fn vector_is_zero(&self) -> bool {
        self.i.is_zero() && self.j.is_zero() && self.k.is_zero()
    }

    pub fn map<S, F: FnMut(&R) -> S>(&self, mut f: F) -> Quaternion<S> {
        Quaternion {
            s: f(&self.s),
            i: f(&self.i),
            j: f(&self.j),
            k: f(&self.k),
        }
    }

    pub fn try_map<S, E, F: FnMut(&R) -> std::result::Result<S, E>>(
        &self,
        mut f: F,
    ) -> std::result::Result<Quaternion<S>, E> {
        Ok(Quaternion {
            s: f(&self.s)?,
            i: f(&self.i)?,
            j: f(&self.j)?,
            k: f(&self.k)?,
        })
    }
}

impl<R: Ring> Add for Quaternion<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Quaternion::new(self.s + rhs.s, self.i + rhs.i, self.j + rhs.j, self.k + rhs.k)
    }
}

impl<R: Ring> Sub for Quaternion<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Quaternion::new(self.s - rhs.s, self.i - rhs.i, self.j - rhs.j, self.k - rhs.k)
    }
}

impl<R: Ring> Neg for Quaternion<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Quaternion::new(-self.s, -self.i, -self.j, -self.k)
    }
}

impl<R: Ring> Mul for Quaternion<R> {
    type Output = Self;

    fn mul(self, b: Self) -> Self {
        let a = self;
        let m = |x: &R, y: &R| x.clone() * y.clone();
        Quaternion {
            s: m(&a.s, &b.s) - m(&a.i, &b.i) - m(&a.j, &b.j) - m(&a.k, &b.k),
            i: m(&a.s, &b.i) + m(&a.i, &b.s) + m(&a.j, &b.k) - m(&a.k, &b.j),
            j: m(&a.s, &b.j) - m(&a.i, &b.k) + m(&a.j, &b.s) + m(&a.k, &b.i),
            k: m(&a.s, &b.k) + m(&a.i, &b.j) - m(&a.j, &b.i) + m(&a.k, &b.s),
        }
    }
}

impl<R: Ring> Ring for Quaternion<R> {
    fn zero() -> Self {
        Quaternion::from_scalar(R::zero())
    }
    fn one() -> Self {
        Quaternion::from_scalar(R::one())
    }
    fn from_i64(v: i64) -> Self {
        Quaternion::from_scalar(R::from_i64(v))
    }
}

pub type RationalQuaternion = Quaternion<Rational>;

fn shifted(f: fn(i64) -> Rational, n: i64) -> RationalQuaternion {
    Quaternion::new(f(n), f(n + 1), f(n + 2), f(n + 3))
}

/// `JQ(n) = J(n) + i·J(n+1) + j·J(n+2) + k·J(n+3)`.
pub fn jq_term(n: u64) -> RationalQuaternion {
    shifted(jacobsthal3, n as i64)
}

/// `jQ(n) = j(n) + i·j(n+1) + j·j(n+2) + k·j(n+3)`.
pub fn jlq_term(n: u64) -> RationalQuaternion {
    shifted(lucas3, n as i64)
}

/// The quaternions multiplying `2^n`, `w1^n` and `w2^n` in the Binet forms.
#[derive(Debug, Clone, PartialEq)]
pub struct BinetTriple {
    pub alpha: Quaternion<CycloRational>,
    pub beta: Quaternion<CycloRational>,
    pub gamma: Quaternion<CycloRational>,
}

impl BinetTriple {
    pub fn new() -> Self {
        let w = CycloRational::omega();
        let w2 = omega_pow(2);
        let one = CycloRational::one();
        let beta = Quaternion::new(one.clone(), w, w2, one);
        BinetTriple {
            alpha: Quaternion::from_ints([1, 2, 4, 8]),
            gamma: beta.map(CycloRational::conj),
            beta,
        }
    }
}

impl Default for BinetTriple {
    fn default() -> Self {
        BinetTriple::new()
    }
}

fn quaternion_binet(dominant_exp: u64, sign: i64, coeff: &CycloRational, n: u64) -> Result<RationalQuaternion> {
    let t = BinetTriple::new();
    let c1 = coeff * &omega_pow(n as i64);
    let c2 = c1.conj();
    let dominant = CycloRational::from_rational(Rational::pow2(dominant_exp));
    let sign = CycloRational::from_i64(sign);
    let sum = t.alpha.scale(&dominant) + (t.beta.scale(&c1) + t.gamma.scale(&c2)).scale(&sign);
    let seventh = Rational::new(1, 7);
    sum.try_map(|c| c.scale(&seventh).rational_part())
}

pub fn jq_binet(n: u64) -> Result<RationalQuaternion> {
    quaternion_binet(n + 1, -1, &binet_coefficient_jacobsthal(), n)
}

pub fn jlq_binet(n: u64) -> Result<RationalQuaternion> {
    quaternion_binet(n + 3, 1, &binet_coefficient_lucas(), n)
}

/// `jQ(0) + jQ(1) + ... + jQ(n)` by direct summation.
pub fn quat_sum(n: u64) -> RationalQuaternion {
    (0..=n).map(jlq_term).fold(Quaternion::zero(), |acc, q| acc + q)
}

fn q(c: [i64; 4]) -> RationalQuaternion {
    Quaternion::from_ints(c)
}

fn branch<T: Clone>(n: i64, values: [T; 3]) -> T {
    values[n.rem_euclid(3) as usize].clone()
}

/// The four polynomials in `2^n` equal to `49·JQ(n)·jQ(n)` when `3 | n`.
pub fn product_polynomials(n: u64) -> RationalQuaternion {
    let p = |e: u64| Rational::pow2(e);
    let i = Rational::integer;
    let t = p(n);
    let t2 = p(2 * n);
    Quaternion::new(
        i(24) * t.clone() - i(1328) * t2.clone() + i(30),
        i(64) * t2.clone() - i(2) * t.clone() + i(36),
        p(2 * n + 7) - i(205) * p(n + 1) - i(12),
        i(5) * p(n + 5) + p(2 * n + 8) - i(24),
    )
}

/// Branch polynomials equal to `49·N(JQ(n))`, selected by `n mod 3`.
pub fn norm_polynomial(n: u64) -> Rational {
    let i = Rational::integer;
    let t = Rational::pow2(n);
    let t2 = Rational::pow2(2 * n);
    let (linear, constant) = branch(n as i64, [(-64, 18), (68, 23), (-4, 15)]);
    i(340) * t2 + i(linear) * t + i(constant)
}

pub fn check_quat_identity(id: Identity, n: i64) -> Result<IdentityReport> {
    if !matches!(
        id,
        Identity::T2
            | Identity::LemmaE4Lift
            | Identity::T5a
            | Identity::T5b
            | Identity::T6
            | Identity::Norm
            | Identity::Hsum
            | Identity::Product
            | Identity::QBinet
    ) {
        return Err(Error::UnknownIdentity(id.to_string()));
    }
    if let Some(detail) = id.domain_violation(n, None) {
        return Err(Error::DomainError {
            identity: id.to_string(),
            detail,
        });
    }
    let u = n as u64;
    let i = Rational::integer;
    let report = match id {
        Identity::T2 => {
            let lhs = jq_term(u).scale(&i(3)) + jlq_term(u);
            let rhs = q([1, 2, 4, 8]).scale(&Rational::pow2(u + 1));
            IdentityReport::compare(id, n, &lhs, &rhs)
        }
        Identity::LemmaE4Lift => {
            let lhs = (jlq_term(u) - jlq_term(u - 2).scale(&i(4))).scale(&Rational::new(1, 3));
            let rhs = branch(n, [q([2, -1, -1, 2]), q([-1, -1, 2, -1]), q([-1, 2, -1, -1])]);
            IdentityReport::compare(id, n, &lhs, &rhs)
        }
        Identity::T5a => {
            let lhs = jlq_term(u) - jq_term(u).scale(&i(4));
            let rhs = branch(n, [q([2, -3, 1, 2]), q([-3, 1, 2, -3]), q([1, 2, -3, 1])]);
            IdentityReport::compare(id, n, &lhs, &rhs)
        }
        Identity::T5b => {
            let lhs = jlq_term(u + 1) + jlq_term(u);
            let rhs = jq_term(u + 2).scale(&i(3));
            IdentityReport::compare(id, n, &lhs, &rhs)
        }
        Identity::T6 => {
            let lhs = jlq_term(u) - jq_term(u + 2);
            let rhs = branch(n, [q([1, -1, 0, 1]), q([-1, 0, 1, -1]), q([0, 1, -1, 0])]);
            IdentityReport::compare(id, n, &lhs, &rhs)
        }
        Identity::Norm => {
            let lhs = i(49) * jq_term(u).norm();
            IdentityReport::compare(id, n, &lhs, &norm_polynomial(u))
        }
        Identity::Hsum => {
            let offset = branch(n, [q([1, -4, -5, -7]), q([-2, -4, -2, -10]), q([-2, -1, -5, -10])]);
            let rhs = jlq_term(u + 1) + offset;
            IdentityReport::compare(id, n, &quat_sum(u), &rhs)
        }
        Identity::Product => {
            let lhs = (jq_term(u) * jlq_term(u)).scale(&i(49));
            IdentityReport::compare(id, n, &lhs, &product_polynomials(u))
        }
        Identity::QBinet => {
            let lhs = vec![jq_binet(u)?, jlq_binet(u)?];
            let rhs = vec![jq_term(u), jlq_term(u)];
            IdentityReport::compare(id, n, &lhs, &rhs)
        }
        _ => unreachable!(),
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = RationalQuaternion;

    #[test]
    fn basis_products() {
        let (one, i, j, k) = (Q::one(), Q::unit_i(), Q::unit_j(), Q::unit_k());
        assert_eq!(i.clone() * j.clone(), k.clone());
        assert_eq!(j.clone() * k.clone(), i.clone());
        assert_eq!(k.clone() * i.clone(), j.clone());
        assert_eq!(j.clone() * i.clone(), -k.clone());
        assert_eq!(k.clone() * j.clone(), -i.clone());
        assert_eq!(i.clone() * k.clone(), -j.clone());
        for u in [&i, &j, &k] {
            assert_eq!(u.clone() * u.clone(), -one.clone());
        }
        assert_eq!(i * j * k, -one);
    }

    #[test]
    fn one_plus_i_times_conjugate() {
        let a = q([1, 1, 0, 0]);
        assert_eq!(a.clone() * a.conj(), q([2, 0, 0, 0]));
        assert_eq!(a.norm(), Rational::integer(2));
    }

    #[test]
    fn product_at_three() {
        assert_eq!(jq_term(3) * jlq_term(3), q([-1730, 84, 100, 360]));
    }

    #[test]
    fn quaternion_terms() {
        assert_eq!(jq_term(0), q([0, 1, 1, 2]));
        assert_eq!(jq_term(2), q([1, 2, 5, 9]));
        assert_eq!(jq_term(5), q([9, 18, 37, 73]));
        assert_eq!(jlq_term(0), q([2, 1, 5, 10]));
        assert_eq!(jlq_term(1), q([1, 5, 10, 17]));
        assert_eq!(jlq_term(7), q([145, 293, 586, 1169]));
    }

    #[test]
    fn binet_terms() {
        assert_eq!(jq_binet(0).unwrap(), q([0, 1, 1, 2]));
        assert_eq!(jq_binet(1).unwrap(), q([1, 1, 2, 5]));
        // J(9..=12) = 146, 293, 585, 1170
        assert_eq!(jq_binet(9).unwrap(), q([146, 293, 585, 1170]));
        assert_eq!(jlq_binet(0).unwrap(), q([2, 1, 5, 10]));
        assert_eq!(jlq_binet(2).unwrap(), q([5, 10, 17, 37]));
        assert_eq!(jlq_binet(6).unwrap(), q([74, 145, 293, 586]));
    }

    #[test]
    fn binet_triple_shape() {
        let t = BinetTriple::new();
        assert_eq!(t.gamma.s, CycloRational::one());
        assert_eq!(t.gamma.i, omega_pow(2));
        assert_eq!(t.gamma.j, CycloRational::omega());
        assert!(t.alpha.components().iter().all(|c| c.is_rational()));
    }

    #[test]
    fn sums() {
        assert_eq!(quat_sum(0), q([2, 1, 5, 10]));
        assert_eq!(quat_sum(2), q([8, 16, 32, 64]));
        assert_eq!(quat_sum(3), q([18, 33, 69, 138]));
    }

    #[test]
    fn identity_examples() {
        let r = check_quat_identity(Identity::T2, 0).unwrap();
        assert!(r.passed());
        let r = check_quat_identity(Identity::Norm, 0).unwrap();
        assert!(r.passed());
        assert_eq!(r.lhs.as_ref().unwrap(), "294");
        assert!(check_quat_identity(Identity::T6, 0).unwrap().passed());
        let r = check_quat_identity(Identity::Hsum, 1).unwrap();
        assert!(r.passed());
        assert_eq!(
            r.lhs.unwrap(),
            serde_json::json!({"s": "3", "i": "6", "j": "15", "k": "27"})
        );
        let r = check_quat_identity(Identity::Product, 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.lhs.unwrap()["s"], "-84770");
    }

    #[test]
    fn identity_errors() {
        assert!(matches!(
            check_quat_identity(Identity::Product, 4),
            Err(Error::DomainError { .. })
        ));
        assert!(matches!(
            check_quat_identity(Identity::Product, 0),
            Err(Error::DomainError { .. })
        ));
        assert!(matches!(
            check_quat_identity(Identity::LemmaE4Lift, 1),
            Err(Error::DomainError { .. })
        ));
        assert!(matches!(
            check_quat_identity(Identity::E3, 1),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn serde_shape() {
        let js = serde_json::to_string(&jlq_term(0)).unwrap();
        assert_eq!(js, r#"{"s":"2","i":"1","j":"5","k":"10"}"#);
        let back: Q = serde_json::from_str(&js).unwrap();
        assert_eq!(back, jlq_term(0));
    }
}
