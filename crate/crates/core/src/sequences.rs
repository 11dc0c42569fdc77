//! Third-order Jacobsthal `J(n)` and Jacobsthal-Lucas `j(n)` numbers over all
//! integer indices, the classical second-order pair, Binet and residue-class
//! closed forms, strided recurrences, sums and the scalar identity checks.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::{epsilon, omega_pow, CycloRational, Rational};
use crate::report::{Identity, IdentityReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeqKind {
    /// Third-order Jacobsthal, seeds 0, 1, 1.
    J3,
    /// Third-order Jacobsthal-Lucas, seeds 2, 1, 5.
    LucasJ3,
    /// Jacobsthal, seeds 0, 1.
    J2,
    /// Jacobsthal-Lucas, seeds 2, 1.
    LucasJ2,
}

impl SeqKind {
    pub const ALL: [SeqKind; 4] = [SeqKind::J3, SeqKind::LucasJ3, SeqKind::J2, SeqKind::LucasJ2];

    pub fn as_str(self) -> &'static str {
        match self {
            SeqKind::J3 => "J3",
            SeqKind::LucasJ3 => "j3",
            SeqKind::J2 => "J2",
            SeqKind::LucasJ2 => "jL2",
        }
    }

    pub fn is_third_order(self) -> bool {
        matches!(self, SeqKind::J3 | SeqKind::LucasJ3)
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SeqKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeqKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "expected one of J3, j3, J2, jL2".to_string(),
            })
    }
}

const J3_SEEDS: [i64; 3] = [0, 1, 1];
const LUCAS_J3_SEEDS: [i64; 3] = [2, 1, 5];

fn third_order_forward(seeds: [i64; 3], n: u64) -> BigInt {
    let [mut a, mut b, mut c] = seeds.map(BigInt::from);
    for _ in 0..n {
        let next = &c + &b + (&a << 1);
        a = b;
        b = c;
        c = next;
    }
    a
}

// x(m) = (x(m+3) - x(m+2) - x(m+1)) / 2
fn third_order_backward(seeds: [i64; 3], steps: u64) -> Rational {
    let [mut a, mut b, mut c] = seeds.map(Rational::integer);
    let half = Rational::new(1, 2);
    for _ in 0..steps {
        let prev = (&(&c - &b) - &a) * &half;
        c = b;
        b = a;
        a = prev;
    }
    a
}

fn second_order_forward(seeds: [i64; 2], n: u64) -> BigInt {
    let [mut a, mut b] = seeds.map(BigInt::from);
    for _ in 0..n {
        let next = &b + (&a << 1);
        a = b;
        b = next;
    }
    a
}

fn third_order(seeds: [i64; 3], n: i64) -> Rational {
    if n >= 0 {
        Rational::from_bigint(third_order_forward(seeds, n as u64))
    } else {
        third_order_backward(seeds, n.unsigned_abs())
    }
}

/// `J(n)` for any integer `n`.
pub fn jacobsthal3(n: i64) -> Rational {
    third_order(J3_SEEDS, n)
}

/// `j(n)` for any integer `n`; negative indices follow the reverse recurrence.
pub fn lucas3(n: i64) -> Rational {
    third_order(LUCAS_J3_SEEDS, n)
}

/// Integer value of `J(n)` for `n >= 0`.
pub fn jacobsthal3_int(n: u64) -> BigInt {
    third_order_forward(J3_SEEDS, n)
}

pub fn seq_term(kind: SeqKind, n: i64) -> Result<Rational> {
    match kind {
        SeqKind::J3 => Ok(jacobsthal3(n)),
        SeqKind::LucasJ3 => Ok(lucas3(n)),
        SeqKind::J2 | SeqKind::LucasJ2 if n < 0 => Err(Error::NegativeIndexUnsupported {
            kind: kind.as_str(),
            n,
        }),
        SeqKind::J2 => Ok(second_order_forward([0, 1], n as u64).into()),
        SeqKind::LucasJ2 => Ok(second_order_forward([2, 1], n as u64).into()),
    }
}

/// The `R(n)` sequence: `R(0) = R(1) = 0`, `R(2) = 1/2`,
/// `R(n) = -R(n-1)/2 - R(n-2)/2 + R(n-3)/2`. It equals `J(-n)`.
pub fn negative_side_sequence(len: usize) -> Vec<Rational> {
    let half = Rational::new(1, 2);
    let mut out = vec![Rational::integer(0), Rational::integer(0), half.clone()];
    while out.len() < len {
        let m = out.len();
        let next = &(&(-&out[m - 1]) - &out[m - 2]) + &out[m - 3];
        out.push(next * &half);
    }
    out.truncate(len);
    out
}

/// Binet coefficient `1 + 2i√3/3 = (5 + 4w)/3` of the `w1^n` term of `7·J(n)`.
pub fn binet_coefficient_jacobsthal() -> CycloRational {
    CycloRational::new(Rational::new(5, 3), Rational::new(4, 3))
}

/// Binet coefficient `3 + 2i√3 = 5 + 4w` of the `w1^n` term of `7·j(n)`.
pub fn binet_coefficient_lucas() -> CycloRational {
    CycloRational::new(Rational::integer(5), Rational::integer(4))
}

/// `c·w1^n + conj(c)·w2^n`, which is always rational.
fn conjugate_pair(c: &CycloRational, n: i64) -> CycloRational {
    let t = c * &omega_pow(n);
    let tc = t.conj();
    t + tc
}

#[allow(non_snake_case)]
pub fn binet_J3(n: u64) -> Result<Rational> {
    let seventh = Rational::new(1, 7);
    let dominant = CycloRational::from_rational(Rational::pow2(n + 1));
    let value = (dominant - conjugate_pair(&binet_coefficient_jacobsthal(), n as i64)).scale(&seventh);
    value.rational_part()
}

pub fn binet_j3(n: u64) -> Result<Rational> {
    let seventh = Rational::new(1, 7);
    let dominant = CycloRational::from_rational(Rational::pow2(n + 3));
    let value = (dominant + conjugate_pair(&binet_coefficient_lucas(), n as i64)).scale(&seventh);
    value.rational_part()
}

/// Residue-class offsets: `J(n) = (2^(n+1) - u[n mod 3]) / 7` and
/// `j(n) = (2^(n+3) + v[n mod 3]) / 7` for `n >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueConstants {
    pub u: [i64; 3],
    pub v: [i64; 3],
}

pub const RESIDUE_CONSTANTS: ResidueConstants = ResidueConstants {
    u: [2, -3, 1],
    v: [6, -9, 3],
};

pub fn closed_form_residue(kind: SeqKind, n: u64) -> Result<Rational> {
    let m = (n % 3) as usize;
    let (power, offset) = match kind {
        SeqKind::J3 => (n + 1, -RESIDUE_CONSTANTS.u[m]),
        SeqKind::LucasJ3 => (n + 3, RESIDUE_CONSTANTS.v[m]),
        _ => {
            return Err(Error::DomainError {
                identity: "closed_form_residue".to_string(),
                detail: format!("sequence {kind}"),
            })
        }
    };
    let numer: BigInt = (BigInt::from(1) << power) + offset;
    Ok(Rational::from_bigints(numer, BigInt::from(7)))
}

/// Integer closed form of `J(n)`, for the big-index evaluators.
pub fn closed_form_jacobsthal_int(n: u64) -> BigInt {
    let numer: BigInt = (BigInt::from(1) << (n + 1)) - RESIDUE_CONSTANTS.u[(n % 3) as usize];
    numer / 7
}

/// Coefficients `(2^r + e, -(2^r·e + 1), 2^r)` of the r-strided recurrence.
pub fn stride_coefficients(r: i64) -> [Rational; 3] {
    let p = Rational::pow2(r as u64);
    let e = Rational::integer(epsilon(r));
    [&p + &e, -(&(&p * &e) + &Rational::integer(1)), p]
}

/// Next term of the subsequence `J(r·m + s)` from the three preceding terms
/// `window = [J(r(n-3)+s), J(r(n-2)+s), J(r(n-1)+s)]`; returns `J(rn+s)`.
pub fn rstep_next(r: i64, window: [&Rational; 3]) -> Rational {
    let [c1, c2, c3] = stride_coefficients(r);
    &(&(&c1 * window[2]) + &(&c2 * window[1])) + &(&c3 * window[0])
}

/// `S(r, n) = J(0) + J(r) + ... + J(rn)` by direct summation.
pub fn sum_direct(r: i64, n: i64) -> Rational {
    if r <= 0 {
        return (0..=n).map(|k| jacobsthal3(r * k)).sum();
    }
    // one forward pass, picking up every r-th term
    let [mut a, mut b, mut c] = J3_SEEDS.map(BigInt::from);
    let mut total = BigInt::from(0);
    for i in 0..=r * n {
        if i % r == 0 {
            total += &a;
        }
        let next = &c + &b + (&a << 1);
        a = b;
        b = c;
        c = next;
    }
    Rational::from_bigint(total)
}

/// `S(r, n)` by the closed form with denominator `(2 - e)(2^r - 1)`.
pub fn sum_closed(r: i64, n: i64) -> Result<Rational> {
    if r.rem_euclid(3) == 0 {
        return Err(Error::DegenerateModulus { r });
    }
    let p = Rational::pow2(r as u64);
    let e = Rational::integer(epsilon(r));
    let one = Rational::integer(1);
    let delta = &(&Rational::integer(2) - &e) * &(&p - &one);
    let middle = &(&p * &(&e - &one)) + &one;
    let seed = &jacobsthal3(r) + &(&p * &jacobsthal3(-r));
    let bracket = jacobsthal3(r * (n + 1)) - &middle * &jacobsthal3(r * n)
        + &p * &jacobsthal3(r * (n - 1))
        - seed;
    Ok(bracket / delta)
}

/// The r = 2 sum formula in its widely quoted form with a `-7`
/// coefficient. It disagrees with direct summation (for example at n = 2)
/// and is kept only so the harness can demonstrate the discrepancy.
pub fn sum_s2_printed(n: i64) -> Rational {
    (jacobsthal3(2 * (n + 1)) - Rational::integer(7) * jacobsthal3(2 * n)
        + Rational::integer(4) * jacobsthal3(2 * (n - 1))
        - Rational::integer(3))
        / Rational::integer(9)
}

fn pow2_i(e: i64) -> Rational {
    Rational::pow2(e as u64)
}

fn branch<T: Clone>(n: i64, values: [T; 3]) -> T {
    values[n.rem_euclid(3) as usize].clone()
}

/// Checks one of the index-only scalar identities at `n`.
///
/// For `Identity::Step2r` the index is the stride `r`.
pub fn check_scalar_identity(id: Identity, n: i64) -> Result<IdentityReport> {
    if let Some(detail) = id.domain_violation(n, None) {
        return Err(Error::DomainError {
            identity: id.to_string(),
            detail,
        });
    }
    let i = Rational::integer;
    let (lhs, rhs) = match id {
        Identity::E3 => (i(3) * jacobsthal3(n) + lucas3(n), pow2_i(n + 1)),
        Identity::E4 => (lucas3(n) - i(4) * lucas3(n - 2), branch(n, [i(6), i(-3), i(-3)])),
        Identity::E5 => (lucas3(n) - i(2) * lucas3(n - 3), i(3) * jacobsthal3(n)),
        Identity::E6 => (lucas3(n) - i(4) * jacobsthal3(n), branch(n, [i(2), i(-3), i(1)])),
        Identity::E7 => (lucas3(n + 1) + lucas3(n), i(3) * jacobsthal3(n + 2)),
        Identity::E8 => (lucas3(n) - jacobsthal3(n + 2), branch(n, [i(1), i(-1), i(0)])),
        Identity::E9 => (
            lucas3(n - 3).square() + i(3) * jacobsthal3(n) * lucas3(n),
            Rational::from_bigint(BigInt::from(1) << (2 * n as u64)),
        ),
        Identity::E10 => {
            let direct: Rational = (0..=n).map(jacobsthal3).sum();
            let next = jacobsthal3(n + 1);
            let rhs = if n.rem_euclid(3) != 0 { next } else { next - i(1) };
            (direct, rhs)
        }
        Identity::E11 => {
            let direct: Rational = (0..=n).map(lucas3).sum();
            let next = lucas3(n + 1);
            let rhs = if n.rem_euclid(3) != 0 { next - i(2) } else { next + i(1) };
            (direct, rhs)
        }
        Identity::E12 => (
            lucas3(n).square() - i(9) * jacobsthal3(n).square(),
            pow2_i(n + 2) * lucas3(n - 3),
        ),
        Identity::Step2r => {
            let r = n;
            let [c1, _, c3] = stride_coefficients(r);
            (jacobsthal3(2 * r), c1 * jacobsthal3(r) + c3 * jacobsthal3(-r))
        }
        Identity::N2Printed => (sum_direct(2, n), sum_s2_printed(n)),
        other => return Err(Error::UnknownIdentity(other.to_string())),
    };
    Ok(IdentityReport::compare(id, n, &lhs, &rhs))
}

/// Strided recurrence at `(r, s, n)`, checked on the stated domain `n >= 3`.
pub fn check_lemma1(r: i64, s: i64, n: i64) -> Result<IdentityReport> {
    let id = Identity::Lemma1;
    if let Some(detail) = id.domain_violation(n, Some(r)).or_else(|| {
        (s < 0 || s >= r).then(|| format!("s = {s} outside [0, r)"))
    }) {
        return Err(Error::DomainError {
            identity: id.to_string(),
            detail,
        });
    }
    let w: Vec<Rational> = (1..=3).rev().map(|k| jacobsthal3(r * (n - k) + s)).collect();
    let lhs = jacobsthal3(r * n + s);
    let rhs = rstep_next(r, [&w[0], &w[1], &w[2]]);
    Ok(IdentityReport::compare(id, n, &lhs, &rhs).with_r(r).with_s(s))
}

/// Closed sum formula against direct summation.
pub fn check_sum_formula(r: i64, n: i64) -> Result<IdentityReport> {
    let id = Identity::G5;
    if r.rem_euclid(3) == 0 {
        return Err(Error::DegenerateModulus { r });
    }
    if let Some(detail) = id.domain_violation(n, Some(r)) {
        return Err(Error::DomainError {
            identity: id.to_string(),
            detail,
        });
    }
    let lhs = sum_direct(r, n);
    let rhs = sum_closed(r, n)?;
    Ok(IdentityReport::compare(id, n, &lhs, &rhs).with_r(r))
}

/// Binet and residue closed forms against recurrence evaluation.
pub fn check_binet(n: i64) -> Result<IdentityReport> {
    let id = Identity::Binet;
    if let Some(detail) = id.domain_violation(n, None) {
        return Err(Error::DomainError {
            identity: id.to_string(),
            detail,
        });
    }
    let u = n as u64;
    let lhs = vec![
        binet_J3(u)?,
        closed_form_residue(SeqKind::J3, u)?,
        binet_j3(u)?,
        closed_form_residue(SeqKind::LucasJ3, u)?,
    ];
    let (big_j, small_j) = (jacobsthal3(n), lucas3(n));
    let rhs = vec![big_j.clone(), big_j, small_j.clone(), small_j];
    Ok(IdentityReport::compare(id, n, &lhs, &rhs))
}
