//! Expected values computed by routes independent of the library's own
//! evaluation paths: floating-point complex arithmetic, explicit component
//! expansions and plain recurrence iteration over machine integers.

use jacq::exactnum::{CycloRational, Rational};
use jacq::quaternion::{jlq_term, jq_term, Quaternion};
use jacq::sequences::{binet_J3, binet_j3, rstep_next, sum_direct};
use jacq::Ring;

/// Third-order recurrence over i128, seeds given.
fn iterate(seeds: [i128; 3], n: usize) -> i128 {
    let mut v = seeds.to_vec();
    while v.len() <= n {
        let m = v.len();
        v.push(v[m - 1] + v[m - 2] + 2 * v[m - 3]);
    }
    v[n]
}

fn big_j(n: usize) -> i128 {
    iterate([0, 1, 1], n)
}

fn small_j(n: usize) -> i128 {
    iterate([2, 1, 5], n)
}

#[derive(Clone, Copy)]
struct C(f64, f64);

impl C {
    fn mul(self, o: C) -> C {
        C(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn pow(self, n: u32) -> C {
        (0..n).fold(C(1.0, 0.0), |acc, _| acc.mul(self))
    }
}

#[test]
fn binet_coefficient_product_matches_complex_floats() {
    let s3 = 3f64.sqrt();
    let a = C(1.0, 2.0 * s3 / 3.0);
    let b = C(1.0, -2.0 * s3 / 3.0);
    let p = a.mul(b);
    assert!((p.0 - 7.0 / 3.0).abs() < 1e-12 && p.1.abs() < 1e-12);

    let exact_a = CycloRational::new(Rational::new(5, 3), Rational::new(4, 3));
    let exact_b = CycloRational::new(Rational::new(1, 3), Rational::new(-4, 3));
    assert_eq!(&exact_a * &exact_b, CycloRational::from_rational(Rational::new(7, 3)));
}

#[test]
fn binet_matches_float_evaluation_for_small_n() {
    let s3 = 3f64.sqrt();
    let w1 = C(-0.5, s3 / 2.0);
    let w2 = C(-0.5, -s3 / 2.0);
    let c1 = C(3.0, 2.0 * s3);
    let c2 = C(3.0, -2.0 * s3);
    for n in 0..30u32 {
        let t1 = c1.mul(w1.pow(n));
        let t2 = c2.mul(w2.pow(n));
        let jacobsthal = (2.0 / 7.0) * 2f64.powi(n as i32) - (t1.0 + t2.0) / 21.0;
        let lucas = (8.0 / 7.0) * 2f64.powi(n as i32) + (t1.0 + t2.0) / 7.0;
        assert_eq!(jacobsthal.round() as i128, big_j(n as usize));
        assert_eq!(lucas.round() as i128, small_j(n as usize));
        assert_eq!(binet_J3(n as u64).unwrap(), Rational::from_bigint(big_j(n as usize).into()));
        assert_eq!(binet_j3(n as u64).unwrap(), Rational::from_bigint(small_j(n as usize).into()));
    }
}

#[test]
fn table_oracle_values() {
    assert_eq!(big_j(20), 299593);
    assert_eq!(binet_J3(20).unwrap(), Rational::integer(299593));
    assert_eq!(small_j(15), 37450);
    assert_eq!(binet_j3(15).unwrap(), Rational::integer(37450));
    assert_eq!(big_j(11), 585);
}

#[test]
fn strided_recurrence_against_iteration() {
    // J(6) = 3·5 + 3·1 + 4·0 and J(10) = 10·37 - 17·5 + 8·1
    assert_eq!(3 * big_j(4) + 3 * big_j(2) + 4 * big_j(0), big_j(6));
    assert_eq!(10 * big_j(7) - 17 * big_j(4) + 8 * big_j(1), big_j(10));
    let w = [1, 5, 37].map(Rational::integer);
    assert_eq!(rstep_next(3, [&w[0], &w[1], &w[2]]), Rational::integer(293));
}

#[test]
fn sums_against_iteration() {
    for r in 1..=6usize {
        for n in 0..=12usize {
            let oracle: i128 = (0..=n).map(|k| big_j(r * k)).sum();
            assert_eq!(sum_direct(r as i64, n as i64), Rational::from_bigint(oracle.into()));
        }
    }
}

/// Component-wise expansion of `JQ(n)·jQ(n)` written out term by term.
fn product_expansion(n: usize) -> [i128; 4] {
    let a: Vec<i128> = (0..4).map(|t| big_j(n + t)).collect();
    let b: Vec<i128> = (0..4).map(|t| small_j(n + t)).collect();
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] + a[2] * b[0] - a[1] * b[3] + a[3] * b[1],
        a[0] * b[3] + a[3] * b[0] + a[1] * b[2] - a[2] * b[1],
    ]
}

#[test]
fn quaternion_product_against_expansion() {
    assert_eq!(product_expansion(3), [-1730, 84, 100, 360]);
    for n in 0..25 {
        let got = jq_term(n as u64) * jlq_term(n as u64);
        assert_eq!(got, Quaternion::from_ints(product_expansion(n).map(|x| x as i64)));
    }
}

#[test]
fn lucas_generating_numerator_by_hand() {
    // jQ(0), jQ(1), jQ(2) = (2,1,5,10), (1,5,10,17), (5,10,17,37)
    let n = jacq::genfunc::RationalSeries::lucas().numerator;
    assert_eq!(n[1], Quaternion::from_ints([1 - 2, 5 - 1, 10 - 5, 17 - 10]));
    assert_eq!(n[2], Quaternion::from_ints([5 - 1 - 2, 10 - 5 - 1, 17 - 10 - 5, 37 - 17 - 10]));
    assert_eq!(Quaternion::<Rational>::zero(), Quaternion::from_ints([0; 4]));
}

#[test]
fn thousandth_term_digit_count() {
    // J(n) ~ (2/7)·2^n, so the digit count is floor(log10(2^1001 / 7)) + 1
    let estimate = (1001.0 * 2f64.log10() - 7f64.log10()).floor() as usize + 1;
    assert_eq!(estimate, 301);
    assert_eq!(jacq::sequences::jacobsthal3(1000).numer_digits(), estimate);
}
