//! Rational generating function of the Jacobsthal quaternions and its
//! coefficient stream.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Ring};
use crate::quaternion::{jlq_term, jq_term, Quaternion, RationalQuaternion};
use crate::report::{Identity, IdentityReport};

/// `(n0 + n1·t + n2·t²) / (1 - t - t² - 2t³)` with quaternion numerator.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalSeries {
    pub numerator: [RationalQuaternion; 3],
    /// `[1, d1, d2, d3]` for `1 + d1·t + d2·t² + d3·t³`.
    pub denominator: [i64; 4],
}

pub const DENOMINATOR: [i64; 4] = [1, -1, -1, -2];

/// Numerator `[q0, q1 - q0, q2 - q1 - q0]` of the series whose first three
/// coefficients are `q0, q1, q2` and whose tail obeys the third-order recurrence.
pub fn numerator_from_initials(
    q0: &RationalQuaternion,
    q1: &RationalQuaternion,
    q2: &RationalQuaternion,
) -> [RationalQuaternion; 3] {
    [
        q0.clone(),
        q1.clone() - q0.clone(),
        q2.clone() - q1.clone() - q0.clone(),
    ]
}

impl RationalSeries {
    pub fn new(numerator: [RationalQuaternion; 3]) -> Self {
        RationalSeries {
            numerator,
            denominator: DENOMINATOR,
        }
    }

    /// Generating function of `JQ(n)`.
    pub fn jacobsthal() -> Self {
        RationalSeries::new(numerator_from_initials(&jq_term(0), &jq_term(1), &jq_term(2)))
    }

    /// Generating function of `jQ(n)`, obtained the same way from its initial terms.
    pub fn lucas() -> Self {
        RationalSeries::new(numerator_from_initials(&jlq_term(0), &jlq_term(1), &jlq_term(2)))
    }

    pub fn coefficients(&self) -> CoefficientStream<'_> {
        CoefficientStream {
            series: self,
            index: 0,
            window: VecDeque::with_capacity(3),
        }
    }

    pub fn coefficient(&self, n: u64) -> RationalQuaternion {
        self.coefficients()
            .nth(n as usize)
            .expect("coefficient stream is infinite")
    }
}

/// Taylor coefficients produced by the denominator recurrence.
#[derive(Debug, Clone)]
pub struct CoefficientStream<'a> {
    series: &'a RationalSeries,
    index: usize,
    // most recent last
    window: VecDeque<RationalQuaternion>,
}

impl Iterator for CoefficientStream<'_> {
    type Item = RationalQuaternion;

    fn next(&mut self) -> Option<Self::Item> {
        let d = &self.series.denominator;
        let mut c = self
            .series
            .numerator
            .get(self.index)
            .cloned()
            .unwrap_or_else(Quaternion::zero);
        for (lag, prev) in self.window.iter().rev().enumerate() {
            c = c - prev.scale(&Rational::integer(d[lag + 1]));
        }
        if self.window.len() == 3 {
            self.window.pop_front();
        }
        self.window.push_back(c.clone());
        self.index += 1;
        Some(c)
    }
}

/// n-th coefficient of the `JQ` generating function.
pub fn series_coefficient(n: u64) -> RationalQuaternion {
    RationalSeries::jacobsthal().coefficient(n)
}

/// Product of a truncated coefficient list with `1 - t - t² - 2t³`, truncated
/// to the same length.
pub fn multiply_by_denominator(coeffs: &[RationalQuaternion]) -> Vec<RationalQuaternion> {
    (0..coeffs.len())
        .map(|deg| {
            DENOMINATOR
                .iter()
                .enumerate()
                .filter(|(lag, _)| *lag <= deg)
                .fold(Quaternion::zero(), |acc, (lag, d)| {
                    acc + coeffs[deg - lag].scale(&Rational::integer(*d))
                })
        })
        .collect()
}

pub fn check_genfunc(n: i64) -> Result<IdentityReport> {
    let id = Identity::Genfunc;
    if let Some(detail) = id.domain_violation(n, None) {
        return Err(Error::DomainError {
            identity: id.to_string(),
            detail,
        });
    }
    let u = n as u64;
    Ok(IdentityReport::compare(id, n, &series_coefficient(u), &jq_term(u)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: [i64; 4]) -> RationalQuaternion {
        Quaternion::from_ints(c)
    }

    #[test]
    fn numerator_matches_closed_form() {
        let n = RationalSeries::jacobsthal().numerator;
        assert_eq!(n, [q([0, 1, 1, 2]), q([1, 0, 1, 3]), q([0, 0, 2, 2])]);
    }

    #[test]
    fn lucas_numerator() {
        let n = RationalSeries::lucas().numerator;
        assert_eq!(n, [q([2, 1, 5, 10]), q([-1, 4, 5, 7]), q([2, 4, 2, 10])]);
    }

    #[test]
    fn zero_initials() {
        let z = Quaternion::zero();
        assert_eq!(numerator_from_initials(&z, &z, &z), [z.clone(), z.clone(), z]);
    }

    #[test]
    fn first_coefficients() {
        assert_eq!(series_coefficient(0), q([0, 1, 1, 2]));
        assert_eq!(series_coefficient(1), q([1, 1, 2, 5]));
        assert_eq!(series_coefficient(12), jq_term(12));
        let lucas: Vec<_> = RationalSeries::lucas().coefficients().take(8).collect();
        assert_eq!(lucas, (0..8).map(jlq_term).collect::<Vec<_>>());
    }

    #[test]
    fn numerator_recovery() {
        let coeffs: Vec<_> = RationalSeries::jacobsthal().coefficients().take(20).collect();
        let back = multiply_by_denominator(&coeffs);
        assert_eq!(&back[..3], &RationalSeries::jacobsthal().numerator[..]);
        assert!(back[3..].iter().all(|c| *c == Quaternion::zero()));
    }
}
