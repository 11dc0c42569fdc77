//! Dense square matrices over an arbitrary (possibly non-commutative) ring,
//! the generating matrices of the third-order Jacobsthal numbers and the
//! matrix theorem checks.

use num_bigint::BigInt;
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{epsilon, omega_pow, CycloRational, Rational, Ring};
use crate::quaternion::{jq_term, Quaternion, RationalQuaternion};
use crate::report::{Identity, IdentityReport};
use crate::sequences::{jacobsthal3, sum_direct};

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<R> {
    dim: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Matrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c));
            }
        }
        Matrix { dim, entries }
    }

    pub fn from_ints<const N: usize>(rows: [[i64; N]; N]) -> Self {
        Matrix::from_fn(N, |r, c| R::from_i64(rows[r][c]))
    }

    pub fn identity(dim: usize) -> Self {
        Matrix::from_fn(dim, |r, c| if r == c { R::one() } else { R::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Zero-based entry access.
    pub fn get(&self, row: usize, col: usize) -> &R {
        &self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.entries.chunks(self.dim)
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Left scalar multiple `c·A`.
    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    /// `self · other`; entry products keep the left factor on the left.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        Matrix::from_fn(n, |r, c| {
            (0..n).fold(R::zero(), |acc, k| {
                acc + self.get(r, k).clone() * other.get(k, c).clone()
            })
        })
    }

    pub fn pow(&self, n: u64) -> Self {
        self.pow_counted(n).0
    }

    /// Binary exponentiation; also returns the number of matrix products,
    /// which is `floor(log2 n) + popcount(n) - 1` for `n >= 1`.
    pub fn pow_counted(&self, mut n: u64) -> (Self, u32) {
        if n == 0 {
            return (Matrix::identity(self.dim), 0);
        }
        let mut count = 0;
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        loop {
            if n & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => {
                        count += 1;
                        a.mul(&base)
                    }
                });
            }
            n >>= 1;
            if n == 0 {
                break;
            }
            base = base.mul(&base);
            count += 1;
        }
        (acc.expect("n >= 1 has a set bit"), count)
    }

    /// Repeated multiplication, `n` products.
    pub fn naive_pow(&self, n: u64) -> Self {
        (0..n).fold(Matrix::identity(self.dim), |acc, _| acc.mul(self))
    }
}

impl<R: Ring> Matrix<R> {
    fn minor2(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> R {
        self.get(r0, c0).clone() * self.get(r1, c1).clone()
            - self.get(r0, c1).clone() * self.get(r1, c0).clone()
    }

    /// Determinant of a 3×3 matrix over a commutative ring.
    pub fn det3(&self) -> R {
        assert_eq!(self.dim, 3);
        self.get(0, 0).clone() * self.minor2(1, 2, 1, 2) - self.get(0, 1).clone() * self.minor2(1, 2, 0, 2)
            + self.get(0, 2).clone() * self.minor2(1, 2, 0, 1)
    }

    /// Characteristic polynomial `x³ + c2·x² + c1·x + c0` of a 3×3 matrix,
    /// as `[1, c2, c1, c0]`.
    pub fn char_poly3(&self) -> [R; 4] {
        assert_eq!(self.dim, 3);
        let trace = self.get(0, 0).clone() + self.get(1, 1).clone() + self.get(2, 2).clone();
        let minors = self.minor2(0, 1, 0, 1) + self.minor2(0, 2, 0, 2) + self.minor2(1, 2, 1, 2);
        [R::one(), -trace, minors, -self.det3()]
    }
}

impl<R: Ring + Serialize> Serialize for Matrix<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.dim))?;
        for row in self.rows() {
            seq.serialize_element(row)?;
        }
        seq.end()
    }
}

pub fn build_m() -> Matrix<Rational> {
    Matrix::from_ints([[1, 1, 2], [1, 0, 0], [0, 1, 0]])
}

pub fn build_m_int() -> Matrix<BigInt> {
    Matrix::from_ints([[1, 1, 2], [1, 0, 0], [0, 1, 0]])
}

/// `J(n)` from entry (2,1) of `M^n`, computed over the integers, together
/// with the number of 3×3 products used.
pub fn fast_j3_counted(n: u64) -> (BigInt, u32) {
    let (p, count) = build_m_int().pow_counted(n);
    (p.get(1, 0).clone(), count)
}

#[allow(non_snake_case)]
pub fn fast_J3(n: u64) -> Rational {
    Rational::from_bigint(fast_j3_counted(n).0)
}

/// Closed-form layout of `M^n` built from sequence values (negative
/// indices included).
pub fn m_power_layout(n: i64) -> Matrix<Rational> {
    let two = Rational::integer(2);
    Matrix::from_fn(3, |row, col| {
        let b = n + 1 - row as i64;
        match col {
            0 => jacobsthal3(b),
            1 => jacobsthal3(b - 1) + &two * &jacobsthal3(b - 2),
            _ => &two * &jacobsthal3(b - 1),
        }
    })
}

/// `K(r, n) = -(2^r·e + 1)·J(rn) + 2^r·J(r(n-1))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KAux {
    pub r: i64,
    pub n: i64,
    pub value: Rational,
}

impl KAux {
    pub fn new(r: i64, n: i64) -> Self {
        let p = Rational::pow2(r as u64);
        let e = Rational::integer(epsilon(r));
        let value = -(&(&p * &e) + &Rational::integer(1)) * jacobsthal3(r * n) + p * jacobsthal3(r * (n - 1));
        KAux { r, n, value }
    }
}

fn stride_row(r: i64) -> [Rational; 3] {
    crate::sequences::stride_coefficients(r)
}

pub fn build_l(r: i64) -> Matrix<Rational> {
    let [a, b, c] = stride_row(r);
    let z = Rational::integer;
    Matrix::from_rows(vec![vec![a, b, c], vec![z(1), z(0), z(0)], vec![z(0), z(1), z(0)]])
}

fn f_row(r: i64, m: i64) -> Vec<Rational> {
    let p = Rational::pow2(r as u64);
    vec![jacobsthal3(r * (m + 1)), KAux::new(r, m).value, p * jacobsthal3(r * m)]
}

pub fn build_f(r: i64, n: i64) -> Matrix<Rational> {
    Matrix::from_rows((0..3).map(|k| f_row(r, n - k)).collect())
}

/// `J(r)·X^n + 2^r·J(-r)·X^(n-1)`.
fn shifted_combination(x: &Matrix<Rational>, r: i64, n: u64) -> Matrix<Rational> {
    let lead = jacobsthal3(r);
    let tail = Rational::pow2(r as u64) * jacobsthal3(-r);
    x.pow(n).scale(&lead).add(&x.pow(n - 1).scale(&tail))
}

fn matrix_domain(id: Identity, r: i64, n: i64) -> Result<()> {
    match id.domain_violation(n, Some(r)) {
        None => Ok(()),
        Some(_) if matches!(id, Identity::Diag) && r >= 1 && r % 3 == 0 => {
            Err(Error::DegenerateModulus { r })
        }
        Some(detail) => Err(Error::DomainError {
            identity: id.to_string(),
            detail,
        }),
    }
}

pub fn check_theorem_lf(r: i64, n: i64) -> Result<IdentityReport> {
    matrix_domain(Identity::ThmLF, r, n)?;
    let lhs = shifted_combination(&build_l(r), r, n as u64);
    Ok(IdentityReport::compare(Identity::ThmLF, n, &lhs, &build_f(r, n)).with_r(r))
}

pub fn build_a(r: i64) -> Matrix<Rational> {
    let [a, b, c] = stride_row(r);
    let z = Rational::integer;
    Matrix::from_rows(vec![
        vec![z(1), z(0), z(0), z(0)],
        vec![z(1), a, b, c],
        vec![z(0), z(1), z(0), z(0)],
        vec![z(0), z(0), z(1), z(0)],
    ])
}

pub fn build_q(r: i64, n: i64) -> Matrix<Rational> {
    let z = Rational::integer;
    let corner = jacobsthal3(r) + Rational::pow2(r as u64) * jacobsthal3(-r);
    let mut rows = vec![vec![corner, z(0), z(0), z(0)]];
    for k in 0..3 {
        let mut row = vec![sum_direct(r, n - k)];
        row.extend(f_row(r, n - k));
        rows.push(row);
    }
    Matrix::from_rows(rows)
}

pub fn check_theorem_aq(r: i64, n: i64) -> Result<IdentityReport> {
    matrix_domain(Identity::ThmAQ, r, n)?;
    let lhs = shifted_combination(&build_a(r), r, n as u64);
    Ok(IdentityReport::compare(Identity::ThmAQ, n, &lhs, &build_q(r, n)).with_r(r))
}

pub fn build_b(r: i64) -> Matrix<CycloRational> {
    let w = omega_pow(r);
    let diag = [
        CycloRational::one(),
        CycloRational::from_rational(Rational::pow2(r as u64)),
        w.clone(),
        w.conj(),
    ];
    Matrix::from_fn(4, |row, col| {
        if row == col {
            diag[row].clone()
        } else {
            CycloRational::zero()
        }
    })
}

/// Eigenvector matrix of `A_r`; undefined when `3 | r`.
pub fn build_h(r: i64) -> Result<Matrix<CycloRational>> {
    if r.rem_euclid(3) == 0 {
        return Err(Error::DegenerateModulus { r });
    }
    let p = Rational::pow2(r as u64);
    let e = Rational::integer(epsilon(r));
    let scale = (&(&e - &Rational::integer(2)) * &(&p - &Rational::integer(1))).recip();
    let c = CycloRational::from_rational(scale);
    let rat = |x: Rational| CycloRational::from_rational(x);
    let w = omega_pow(r);
    let w_sq = omega_pow(2 * r);
    let one = CycloRational::one();
    let zero = CycloRational::zero();
    Ok(Matrix::from_rows(vec![
        vec![one.clone(), zero.clone(), zero.clone(), zero],
        vec![c.clone(), rat(&p * &p), w_sq.clone(), w_sq.conj()],
        vec![c.clone(), rat(p), w.clone(), w.conj()],
        vec![c, one.clone(), one.clone(), one],
    ]))
}

/// `A_r^n · H_r = H_r · B_r^n` over Q(w).
pub fn check_diagonalization(r: i64, n: i64) -> Result<IdentityReport> {
    matrix_domain(Identity::Diag, r, n)?;
    let a = build_a(r).map(|x| CycloRational::from_rational(x.clone()));
    let h = build_h(r)?;
    let lhs = a.pow(n as u64).mul(&h);
    let rhs = h.mul(&build_b(r).pow(n as u64));
    Ok(IdentityReport::compare(Identity::Diag, n, &lhs, &rhs).with_r(r))
}

/// Layout of `R·M^t`: row `a` is `[JQ(b), JQ(b-1) + 2JQ(b-2), 2JQ(b-1)]`, `b = t + 4 - a`.
pub fn quaternion_layout(t: u64) -> Matrix<RationalQuaternion> {
    let two = Rational::integer(2);
    Matrix::from_fn(3, |row, col| {
        let b = t + 4 - row as u64;
        match col {
            0 => jq_term(b),
            1 => jq_term(b - 1) + jq_term(b - 2).scale(&two),
            _ => jq_term(b - 1).scale(&two),
        }
    })
}

pub fn build_rquat() -> Matrix<RationalQuaternion> {
    quaternion_layout(0)
}

pub fn check_theorem_rm(n: i64) -> Result<IdentityReport> {
    matrix_domain(Identity::ThmRM, 1, n)?;
    let m = build_m().pow(n as u64).map(|x| Quaternion::from_scalar(x.clone()));
    let lhs = build_rquat().mul(&m);
    Ok(IdentityReport::compare(Identity::ThmRM, n, &lhs, &quaternion_layout(n as u64)))
}

/// `JQ(n+2) = JQ(2)·J(n+1) + (JQ(1) + 2JQ(0))·J(n) + 2JQ(1)·J(n-1)`.
pub fn check_corollary_conv(n: i64) -> Result<IdentityReport> {
    matrix_domain(Identity::CorConv, 1, n)?;
    let two = Rational::integer(2);
    let rhs = jq_term(2).scale(&jacobsthal3(n + 1))
        + (jq_term(1) + jq_term(0).scale(&two)).scale(&jacobsthal3(n))
        + jq_term(1).scale(&(&two * &jacobsthal3(n - 1)));
    Ok(IdentityReport::compare(Identity::CorConv, n, &jq_term(n as u64 + 2), &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: [[i64; 3]; 3]) -> Matrix<Rational> {
        Matrix::from_ints(rows)
    }

    #[test]
    fn powers_of_m() {
        let m = build_m();
        assert_eq!(m.pow(0), Matrix::identity(3));
        assert_eq!(m.pow(2), ints([[2, 3, 2], [1, 1, 2], [1, 0, 0]]));
        assert_eq!(*m.pow(10).get(0, 0), Rational::integer(585));
    }

    #[test]
    fn product_count() {
        let m = build_m_int();
        assert_eq!(m.pow_counted(1).1, 0);
        assert_eq!(m.pow_counted(2).1, 1);
        assert_eq!(m.pow_counted(7).1, 4);
        assert_eq!(m.pow_counted(8).1, 3);
    }

    #[test]
    fn fast_path() {
        assert_eq!(fast_J3(10), Rational::integer(293));
        assert_eq!(fast_J3(0), Rational::integer(0));
        assert_eq!(fast_J3(100), jacobsthal3(100));
    }

    #[test]
    fn layout_at_one_uses_negative_constants() {
        assert_eq!(m_power_layout(1), build_m());
        assert_eq!(m_power_layout(0), Matrix::identity(3));
    }

    #[test]
    fn det_and_char_poly() {
        let m = build_m();
        assert_eq!(m.det3(), Rational::integer(2));
        assert_eq!(m.char_poly3(), [1, -1, -1, -2].map(Rational::integer));
    }

    #[test]
    fn l1_is_m() {
        assert_eq!(build_l(1), build_m());
        assert_eq!(build_f(1, 1), build_m());
        assert!(check_theorem_lf(1, 1).unwrap().passed());
        assert!(check_theorem_lf(2, 3).unwrap().passed());
        assert!(check_theorem_lf(4, 2).unwrap().passed());
    }

    #[test]
    fn aq_examples() {
        assert_eq!(*build_q(1, 2).get(1, 0), Rational::integer(2));
        assert_eq!(*build_q(2, 2).get(1, 0), Rational::integer(6));
        assert!(check_theorem_aq(1, 2).unwrap().passed());
        assert!(check_theorem_aq(2, 2).unwrap().passed());
        assert!(check_theorem_aq(5, 3).unwrap().passed());
        assert!(matches!(check_theorem_aq(2, 1), Err(Error::DomainError { .. })));
    }

    #[test]
    fn diagonalization_examples() {
        assert!(check_diagonalization(1, 2).unwrap().passed());
        assert!(check_diagonalization(2, 3).unwrap().passed());
        assert_eq!(check_diagonalization(3, 1), Err(Error::DegenerateModulus { r: 3 }));
        assert_eq!(build_h(6), Err(Error::DegenerateModulus { r: 6 }));
    }

    #[test]
    fn eigenvalues_on_diagonal() {
        let b = build_b(1);
        assert_eq!(*b.get(2, 2), CycloRational::omega());
        assert_eq!(*b.get(3, 3), omega_pow(2));
        assert_eq!(*b.get(1, 1), CycloRational::from_i64(2));
    }

    #[test]
    fn quaternion_matrix() {
        let r = build_rquat();
        assert_eq!(*r.get(0, 0), Quaternion::from_ints([5, 9, 18, 37]));
        assert!(check_theorem_rm(0).unwrap().passed());
        let rep = check_theorem_rm(1).unwrap();
        assert!(rep.passed());
        assert_eq!(*quaternion_layout(1).get(0, 0), Quaternion::from_ints([9, 18, 37, 73]));
        assert!(check_theorem_rm(6).unwrap().passed());
        assert_eq!(*quaternion_layout(6).get(0, 0), jq_term(10));
    }

    #[test]
    fn convolution_examples() {
        for n in [0, 1, 7] {
            assert!(check_corollary_conv(n).unwrap().passed());
        }
    }

    #[test]
    fn k_aux() {
        // K(1, n) = J(n) + 2J(n-1)
        for n in 0..10 {
            assert_eq!(
                KAux::new(1, n).value,
                jacobsthal3(n) + Rational::integer(2) * jacobsthal3(n - 1)
            );
        }
    }

    #[test]
    fn matrix_json_is_row_major() {
        let js = serde_json::to_string(&build_m()).unwrap();
        assert_eq!(js, r#"[["1","1","2"],["1","0","0"],["0","1","0"]]"#);
    }
}
